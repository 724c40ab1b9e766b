//! The dominance order `λ ≻ μ`: `V_μ` occurs in the restriction of `V_λ`.
//!
//! [`DominanceOracle`] decides it by searching for a chain of one-step
//! Gelfand–Tsetlin restrictions. [`dominates_interlace`] is a closed form
//! that the verification suites compare against the oracle. The remaining
//! predicates are the hypotheses of the combinatorial lemmas used to relate
//! dominance at large widths to finitely many difference inequalities.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{children_of_class, shift_interval, ShiftClass, ZPartition};

/// Chain-search oracle for dominance.
///
/// The memo maps a target class to the set of intermediate classes already
/// known to reach (or not reach) it. Entries are pure functions of their key,
/// so reusing one oracle for many queries gives the same answers as using a
/// fresh one each time.
#[derive(Debug, Default, Clone)]
pub struct DominanceOracle {
    memo: HashMap<ShiftClass, HashMap<ShiftClass, bool>>,
}

impl DominanceOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Does `upper ≻ lower` hold?
    pub fn dominates(&mut self, upper: &ZPartition, lower: &ZPartition) -> bool {
        if upper.width() < lower.width() {
            return false;
        }
        let top = upper.canonicalize();
        let target = lower.canonicalize();
        if top.width() == target.width() {
            return top == target;
        }
        let memo = self.memo.entry(target.clone()).or_default();
        reaches(&top, &target, memo)
    }

    /// Number of memoized intermediate classes, summed over targets.
    pub fn memo_len(&self) -> usize {
        self.memo.values().map(HashMap::len).sum()
    }
}

fn reaches(node: &ShiftClass, target: &ShiftClass, memo: &mut HashMap<ShiftClass, bool>) -> bool {
    if node.width() == target.width() {
        return node == target;
    }
    if let Some(&known) = memo.get(node) {
        return known;
    }
    let found = children_of_class(node)
        .iter()
        .any(|child| reaches(child, target, memo));
    memo.insert(node.clone(), found);
    found
}

/// `λ ≻ μ` decided by chain search with a fresh memo.
pub fn dominates_oracle(lambda: &ZPartition, mu: &ZPartition) -> bool {
    DominanceOracle::new().dominates(lambda, mu)
}

/// Closed-form dominance test: `♯λ ≥ ♯μ` and some integer `D` gives
/// `λ_i ≥ μ_i + D ≥ λ_{i+♯λ−♯μ}` for all `i ≤ ♯μ`.
pub fn dominates_interlace(lambda: &ZPartition, mu: &ZPartition) -> bool {
    matches!(shift_interval(lambda.entries(), mu.entries()), Some((lo, hi)) if lo <= hi)
}

fn diff(p: &ZPartition, i: usize, j: usize) -> i128 {
    p.part(i) as i128 - p.part(j) as i128
}

/// Hypotheses of the endpoint lemma: `♯μ ≥ ♯λ`, `λ_1 = μ_1`,
/// `λ_♯λ = μ_♯μ` and `μ_i ≥ λ_i ≥ μ_{♯μ−♯λ+i}` for every `i ≤ ♯λ`.
pub fn lgts_hypotheses(lambda: &ZPartition, mu: &ZPartition) -> bool {
    let (n, m) = (lambda.width(), mu.width());
    if m < n {
        return false;
    }
    lambda.part(1) == mu.part(1)
        && lambda.part(n) == mu.part(m)
        && (1..=n).all(|i| mu.part(i) >= lambda.part(i) && lambda.part(i) >= mu.part(m - n + i))
}

/// Hypotheses of the wide-gap lemma: `♯λ ≤ i ≤ ♯μ − i` and
/// `μ_i − μ_{♯μ−i+1} ≥ λ_1 − λ_♯λ`.
pub fn lfir_hypotheses(lambda: &ZPartition, mu: &ZPartition, i: usize) -> bool {
    let (n, m) = (lambda.width(), mu.width());
    if i == 0 || i < n || 2 * i > m {
        return false;
    }
    diff(mu, i, m - i + 1) >= diff(lambda, 1, n)
}

/// Hypotheses of the equality lemma: `♯μ ≥ 2♯λ`, every pair `k < l`
/// satisfies `μ_k − μ_{♯μ−♯λ+l} ≥ λ_k − λ_l`, and at least one pair is an
/// equality.
pub fn lgts25_hypotheses(lambda: &ZPartition, mu: &ZPartition) -> bool {
    let (n, m) = (lambda.width(), mu.width());
    if m < 2 * n {
        return false;
    }
    let mut any_equal = false;
    for k in 1..=n {
        for l in k + 1..=n {
            let lhs = diff(mu, k, m - n + l);
            let rhs = diff(lambda, k, l);
            if lhs < rhs {
                return false;
            }
            any_equal |= lhs == rhs;
        }
    }
    any_equal
}

/// The difference criterion `μ_k − μ_{♯μ−♯λ+l} ≥ λ_k − λ_l` for all
/// `1 ≤ k < l ≤ ♯λ`, which characterizes `μ ≻ λ` once `♯μ ≥ 4♯λ`.
pub fn criterion_4x(mu: &ZPartition, lambda: &ZPartition) -> Result<bool> {
    let (n, m) = (lambda.width(), mu.width());
    if m < n {
        return Err(Error::WidthOrder { wide: m, narrow: n });
    }
    Ok((1..=n).all(|k| (k + 1..=n).all(|l| diff(mu, k, m - n + l) >= diff(lambda, k, l))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_classes;

    fn zp(v: &[i64]) -> ZPartition {
        ZPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert!(dominates_oracle(&zp(&[1, 0]), &zp(&[0])));
        assert!(dominates_oracle(&zp(&[2, 0]), &zp(&[2, 0])));
        assert!(!dominates_oracle(&zp(&[1, 0]), &zp(&[2, 0])));
        assert!(!dominates_oracle(&zp(&[1, 0]), &zp(&[0, 0, 0])));
    }

    #[test]
    fn interlace_examples() {
        assert!(dominates_interlace(
            &zp(&[1, 1, 1, 1, 0, 0, 0, 0]),
            &zp(&[1, 0])
        ));
        assert!(dominates_oracle(
            &zp(&[1, 1, 1, 1, 0, 0, 0, 0]),
            &zp(&[1, 0])
        ));
        assert!(!dominates_interlace(&zp(&[0, 0, 0]), &zp(&[1, 0])));
        assert!(dominates_interlace(&zp(&[4, 2, -1]), &zp(&[4, 2, -1])));
    }

    #[test]
    fn lemma_hypothesis_examples() {
        assert!(lgts_hypotheses(&zp(&[1, 0]), &zp(&[1, 1, 0, 0])));
        assert!(!lgts_hypotheses(&zp(&[1, 0]), &zp(&[2, 0])));
        assert!(lgts_hypotheses(&zp(&[0, 0]), &zp(&[0, 0, 0])));

        assert!(lfir_hypotheses(&zp(&[1, 0]), &zp(&[1, 1, 0, 0]), 2));
        assert!(!lfir_hypotheses(&zp(&[2, 0]), &zp(&[1, 1, 0, 0]), 2));
        assert!(lfir_hypotheses(&zp(&[0]), &zp(&[0, 0]), 1));
        assert!(!lfir_hypotheses(&zp(&[0]), &zp(&[0, 0]), 0));

        assert!(lgts25_hypotheses(&zp(&[1, 0]), &zp(&[1, 1, 0, 0])));
        assert!(!lgts25_hypotheses(&zp(&[1, 0]), &zp(&[3, 0, 0, 0])));
        assert!(lgts25_hypotheses(&zp(&[0, 0]), &zp(&[0, 0, 0, 0])));
    }

    #[test]
    fn criterion_examples() {
        let lam = zp(&[1, 0]);
        assert_eq!(criterion_4x(&zp(&[1, 1, 1, 1, 0, 0, 0, 0]), &lam), Ok(true));
        assert_eq!(criterion_4x(&zp(&[0; 8]), &lam), Ok(false));
        assert_eq!(criterion_4x(&zp(&[2, 0, 0, 0, 0, 0, 0, 0]), &lam), Ok(true));
        assert_eq!(
            criterion_4x(&zp(&[0]), &lam),
            Err(Error::WidthOrder { wide: 1, narrow: 2 })
        );
    }

    #[test]
    fn memo_reuse_matches_fresh_queries() {
        let mut shared = DominanceOracle::new();
        for hi in enumerate_classes(4, 3) {
            for lo in enumerate_classes(2, 3) {
                let fresh = dominates_oracle(hi.partition(), lo.partition());
                assert_eq!(shared.dominates(hi.partition(), lo.partition()), fresh);
            }
        }
        assert!(shared.memo_len() > 0);
    }

    #[test]
    fn dominance_is_a_partial_order_on_classes() {
        let classes: Vec<ShiftClass> = (1..=4).flat_map(|w| enumerate_classes(w, 3)).collect();
        let mut oracle = DominanceOracle::new();
        let n = classes.len();
        let mut rel = vec![vec![false; n]; n];
        for (i, a) in classes.iter().enumerate() {
            for (j, b) in classes.iter().enumerate() {
                rel[i][j] = oracle.dominates(a.partition(), b.partition());
            }
        }
        for i in 0..n {
            assert!(rel[i][i]);
            for j in 0..n {
                if rel[i][j] && rel[j][i] {
                    assert_eq!(i, j);
                }
                if rel[i][j] && classes[i].width() == classes[j].width() {
                    assert_eq!(classes[i], classes[j]);
                }
                if !rel[i][j] {
                    continue;
                }
                for k in 0..n {
                    if rel[j][k] {
                        assert!(
                            rel[i][k],
                            "{} ≻ {} ≻ {}",
                            classes[i], classes[j], classes[k]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn necessity_of_difference_criterion_under_wide_hypothesis() {
        let mut oracle = DominanceOracle::new();
        for lam in enumerate_classes(2, 2) {
            for mu in enumerate_classes(8, 3) {
                if oracle.dominates(mu.partition(), lam.partition()) {
                    assert!(criterion_4x(mu.partition(), lam.partition()).unwrap());
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition(max_w: usize) -> impl Strategy<Value = ZPartition> {
            prop::collection::vec(-6i64..6, 1..=max_w).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                ZPartition::new(v).unwrap()
            })
        }

        proptest! {
            #[test]
            fn dominance_is_shift_invariant(l in partition(6), m in partition(4), d in -5i64..5, e in -5i64..5) {
                let base = dominates_oracle(&l, &m);
                let moved = dominates_oracle(&l.shifted(d).unwrap(), &m.shifted(e).unwrap());
                prop_assert_eq!(base, moved);
                prop_assert_eq!(dominates_interlace(&l, &m), base);
            }

            #[test]
            fn criterion_is_shift_invariant(l in partition(3), m in partition(8), d in -5i64..5) {
                prop_assume!(m.width() >= l.width());
                let base = criterion_4x(&m, &l).unwrap();
                prop_assert_eq!(criterion_4x(&m.shifted(d).unwrap(), &l).unwrap(), base);
                prop_assert_eq!(criterion_4x(&m, &l.shifted(d).unwrap()).unwrap(), base);
            }
        }
    }
}
