//! Local systems: width-indexed families `Q_n ⊂ Irr_n` of shift classes.
//!
//! Every family here is infinite, so systems are membership predicates and
//! all exhaustive checks run over a finite [`LevelWindow`].

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::dominance::DominanceOracle;
use crate::error::{Error, Result};
use crate::partition::{enumerate_classes, is_gt_step, ShiftClass, ZPartition};

/// Finite slice of the levels `Irr_n`: widths `n_min..=n_max`, canonical
/// entries at most `entry_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelWindow {
    n_min: usize,
    n_max: usize,
    entry_bound: u64,
}

impl LevelWindow {
    pub fn new(n_min: usize, n_max: usize, entry_bound: u64) -> Result<Self> {
        if n_min < 2 || n_min > n_max {
            return Err(Error::InvalidWindow { n_min, n_max });
        }
        Ok(LevelWindow {
            n_min,
            n_max,
            entry_bound,
        })
    }

    pub fn n_min(&self) -> usize {
        self.n_min
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn entry_bound(&self) -> u64 {
        self.entry_bound
    }

    /// Classes of the window, grouped by width starting at `n_min`.
    pub fn levels(&self) -> Vec<Vec<ShiftClass>> {
        (self.n_min..=self.n_max)
            .map(|n| enumerate_classes(n, self.entry_bound))
            .collect()
    }
}

type Membership = dyn Fn(&ShiftClass) -> bool + Send + Sync;

/// A local system given by its membership test. The width of a class is its
/// length, so the test sees every level at once.
#[derive(Clone)]
pub struct SystemPredicate {
    test: Arc<Membership>,
    descriptor: String,
}

impl SystemPredicate {
    pub fn new<F>(descriptor: impl Into<String>, test: F) -> Self
    where
        F: Fn(&ShiftClass) -> bool + Send + Sync + 'static,
    {
        SystemPredicate {
            test: Arc::new(test),
            descriptor: descriptor.into(),
        }
    }

    pub fn contains(&self, class: &ShiftClass) -> bool {
        (self.test)(class)
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// The empty system.
    pub fn empty() -> Self {
        SystemPredicate::new("∅", |_| false)
    }

    /// `Q^∨(λ)`, the largest precoherent system avoiding `λ`.
    pub fn qvee(lambda: &ZPartition) -> Self {
        let lambda = lambda.clone();
        let oracle = Mutex::new(DominanceOracle::new());
        SystemPredicate::new(format!("Q∨{lambda}"), move |mu| {
            // A poisoned lock only means another query panicked; the memo is still valid.
            let mut guard = oracle.lock().unwrap_or_else(|e| e.into_inner());
            qvee_contains_with(&mut guard, &lambda, mu.partition())
        })
    }

    /// `Q(λ)`, the union of the systems `Q(k, l, λ_k − λ_l)`.
    pub fn qlambda(lambda: &ZPartition) -> Result<Self> {
        check_qlambda_width(lambda)?;
        let lambda = lambda.clone();
        Ok(SystemPredicate::new(format!("Q{lambda}"), move |mu| {
            qlambda_terms(&lambda, mu.partition())
        }))
    }
}

impl fmt::Debug for SystemPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SystemPredicate")
            .field("descriptor", &self.descriptor)
            .finish()
    }
}

/// Membership in `Q^∨(λ)`: every narrower class, every other class of
/// width `♯λ`, and every wider class that does not dominate `λ`.
pub fn qvee_contains(lambda: &ZPartition, mu: &ZPartition) -> bool {
    qvee_contains_with(&mut DominanceOracle::new(), lambda, mu)
}

/// [`qvee_contains`] with a caller-supplied dominance memo.
pub fn qvee_contains_with(
    oracle: &mut DominanceOracle,
    lambda: &ZPartition,
    mu: &ZPartition,
) -> bool {
    use std::cmp::Ordering::*;
    match mu.width().cmp(&lambda.width()) {
        Less => true,
        Equal => mu.canonicalize() != lambda.canonicalize(),
        Greater => !oracle.dominates(mu, lambda),
    }
}

/// Membership in `Q(k, l, v)` for partitions of reference width `sharp_lambda`:
/// `μ_k − μ_{♯μ−♯λ+l} < v`. Classes narrower than `sharp_lambda` are all members.
pub fn q_klv_contains(
    k: usize,
    l: usize,
    v: i64,
    sharp_lambda: usize,
    mu: &ZPartition,
) -> Result<bool> {
    if k == 0 || k >= l || l > sharp_lambda {
        return Err(Error::InvalidIndexPair {
            k,
            l,
            width: sharp_lambda,
        });
    }
    Ok(klv_term(k, l, v as i128, sharp_lambda, mu))
}

fn klv_term(k: usize, l: usize, v: i128, sharp_lambda: usize, mu: &ZPartition) -> bool {
    let m = mu.width();
    if m < sharp_lambda {
        return true;
    }
    (mu.part(k) as i128 - mu.part(m - sharp_lambda + l) as i128) < v
}

fn check_qlambda_width(lambda: &ZPartition) -> Result<()> {
    if lambda.width() < 2 {
        return Err(Error::WidthTooSmall {
            width: lambda.width(),
            min: 2,
        });
    }
    Ok(())
}

fn qlambda_terms(lambda: &ZPartition, mu: &ZPartition) -> bool {
    let n = lambda.width();
    (1..=n).any(|k| {
        (k + 1..=n).any(|l| {
            let v = lambda.part(k) as i128 - lambda.part(l) as i128;
            klv_term(k, l, v, n, mu)
        })
    })
}

/// Membership in `Q(λ) = ∪_{k<l} Q(k, l, λ_k − λ_l)`.
pub fn qlambda_contains(lambda: &ZPartition, mu: &ZPartition) -> Result<bool> {
    check_qlambda_width(lambda)?;
    Ok(qlambda_terms(lambda, mu))
}

/// The coherent system `Q(λ_1) ∩ … ∩ Q(λ_s)` standing in, at large widths,
/// for the precoherent system `∩ Q^∨(λ_i)` with the given forbidden classes.
pub fn forbidden_to_cls(forbidden: &[ZPartition]) -> Result<SystemPredicate> {
    if forbidden.is_empty() {
        return Err(Error::EmptyPartition);
    }
    for lambda in forbidden {
        check_qlambda_width(lambda)?;
    }
    let names: Vec<String> = forbidden.iter().map(|l| format!("Q{l}")).collect();
    let forbidden = forbidden.to_vec();
    Ok(SystemPredicate::new(names.join(" ∩ "), move |mu| {
        forbidden
            .iter()
            .all(|lambda| qlambda_terms(lambda, mu.partition()))
    }))
}

/// Downward closure under dominance inside the window: whenever a member
/// `λ` dominates `μ`, `μ` is a member too.
pub fn is_pls_on_window(system: &SystemPredicate, window: &LevelWindow) -> bool {
    let levels = window.levels();
    let split: Vec<(Vec<&ShiftClass>, Vec<&ShiftClass>)> = levels
        .iter()
        .map(|level| level.iter().partition(|c| system.contains(c)))
        .collect();
    let mut oracle = DominanceOracle::new();
    for (hi, (members, _)) in split.iter().enumerate() {
        for (_, outsiders) in &split[..hi] {
            for lower in outsiders {
                if members
                    .iter()
                    .any(|upper| oracle.dominates(upper.partition(), lower.partition()))
                {
                    return false;
                }
            }
        }
        // equal widths: dominance is equality, nothing to check
    }
    true
}

/// Precoherence on the window plus the extension property: every member at
/// width `n < n_max` is dominated by a member of width `n + 1` whose
/// canonical entries are at most `entry_bound + search_slack`.
///
/// A `false` caused by a missing witness is only conclusive for this slack.
pub fn is_cls_on_window(system: &SystemPredicate, window: &LevelWindow, search_slack: u64) -> bool {
    if !is_pls_on_window(system, window) {
        return false;
    }
    let wide_bound = window.entry_bound.saturating_add(search_slack);
    for n in window.n_min..window.n_max {
        let parents: Vec<ShiftClass> = enumerate_classes(n + 1, wide_bound)
            .into_iter()
            .filter(|c| system.contains(c))
            .collect();
        for mu in enumerate_classes(n, window.entry_bound) {
            if !system.contains(&mu) {
                continue;
            }
            if !parents
                .iter()
                .any(|p| is_gt_step(p.partition(), mu.partition()))
            {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPartition {
        ZPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn qvee_examples() {
        let lam = zp(&[1, 0]);
        assert!(qvee_contains(&lam, &zp(&[2, 0])));
        assert!(!qvee_contains(&lam, &zp(&[1, 0])));
        assert!(!qvee_contains(&lam, &zp(&[1, 0, 0])));
        assert!(qvee_contains(&lam, &zp(&[7])));
        assert!(qvee_contains(&lam, &zp(&[0, 0, 0])));
    }

    #[test]
    fn q_klv_examples() {
        assert_eq!(q_klv_contains(1, 2, 1, 2, &zp(&[0; 8])), Ok(true));
        assert_eq!(
            q_klv_contains(1, 2, 1, 2, &zp(&[1, 0, 0, 0, 0, 0, 0, 0])),
            Ok(false)
        );
        assert_eq!(q_klv_contains(1, 2, 0, 2, &zp(&[0, 0])), Ok(false));
        assert_eq!(q_klv_contains(1, 3, 0, 3, &zp(&[0, 0])), Ok(true));
        assert!(q_klv_contains(2, 2, 1, 2, &zp(&[0, 0])).is_err());
        assert!(q_klv_contains(1, 3, 1, 2, &zp(&[0, 0])).is_err());
    }

    #[test]
    fn qlambda_examples() {
        let lam = zp(&[1, 0]);
        assert_eq!(qlambda_contains(&lam, &zp(&[0; 8])), Ok(true));
        assert_eq!(
            qlambda_contains(&lam, &zp(&[1, 1, 1, 1, 0, 0, 0, 0])),
            Ok(false)
        );
        for mu in enumerate_classes(5, 3) {
            assert_eq!(qlambda_contains(&zp(&[0, 0]), mu.partition()), Ok(false));
        }
        assert!(qlambda_contains(&zp(&[3]), &zp(&[0, 0])).is_err());
    }

    #[test]
    fn forbidden_examples() {
        let one = forbidden_to_cls(&[zp(&[1, 0])]).unwrap();
        assert!(one.contains(&ShiftClass::zero(8).unwrap()));
        let two = forbidden_to_cls(&[zp(&[1, 0]), zp(&[2, 0])]).unwrap();
        assert!(!two.contains(&ShiftClass::new(vec![1, 1, 1, 1, 0, 0, 0, 0]).unwrap()));
        let trivial = forbidden_to_cls(&[zp(&[0, 0])]).unwrap();
        for mu in enumerate_classes(4, 3) {
            assert!(!trivial.contains(&mu));
        }
        assert!(forbidden_to_cls(&[]).is_err());
        assert!(forbidden_to_cls(&[zp(&[0])]).is_err());
    }

    #[test]
    fn window_validation() {
        assert!(LevelWindow::new(1, 3, 2).is_err());
        assert!(LevelWindow::new(4, 3, 2).is_err());
        assert_eq!(LevelWindow::new(2, 4, 1).unwrap().levels().len(), 3);
    }

    #[test]
    fn pls_examples() {
        let w = LevelWindow::new(2, 5, 3).unwrap();
        assert!(is_pls_on_window(&SystemPredicate::qvee(&zp(&[1, 0])), &w));

        let target = ShiftClass::new(vec![1, 0]).unwrap();
        let only = SystemPredicate::new("only (1,0)", move |c| c.width() < 2 || *c == target);
        assert!(is_pls_on_window(&only, &LevelWindow::new(2, 3, 3).unwrap()));

        let three = ShiftClass::new(vec![1, 0, 0]).unwrap();
        let broken = SystemPredicate::new("(1,0,0) without (1,0)", move |c| *c == three);
        assert!(!is_pls_on_window(
            &broken,
            &LevelWindow::new(2, 3, 3).unwrap()
        ));
    }

    #[test]
    fn cls_examples() {
        let qlam = SystemPredicate::qlambda(&zp(&[1, 0])).unwrap();
        assert!(is_cls_on_window(
            &qlam,
            &LevelWindow::new(8, 10, 2).unwrap(),
            1
        ));

        // Q∨((1,0)) keeps (2,0) at width 2 but only the zero class at width 3,
        // and (0,0,0) does not dominate (2,0): no witness at any slack.
        let qv = SystemPredicate::qvee(&zp(&[1, 0]));
        assert!(!is_cls_on_window(
            &qv,
            &LevelWindow::new(2, 3, 2).unwrap(),
            2
        ));

        assert!(is_cls_on_window(
            &SystemPredicate::empty(),
            &LevelWindow::new(2, 6, 3).unwrap(),
            0
        ));
    }

    #[test]
    fn larger_bounds_keep_violations() {
        let three = ShiftClass::new(vec![1, 0, 0]).unwrap();
        let broken = SystemPredicate::new("(1,0,0) without (1,0)", move |c| *c == three);
        for b in 1..5 {
            assert!(!is_pls_on_window(
                &broken,
                &LevelWindow::new(2, 3, b).unwrap()
            ));
        }
        // bound 0 does not see the offending class at all
        assert!(is_pls_on_window(
            &broken,
            &LevelWindow::new(2, 3, 0).unwrap()
        ));
        let qv = SystemPredicate::qvee(&zp(&[2, 1, 0]));
        for b in 0..4 {
            assert!(is_pls_on_window(&qv, &LevelWindow::new(2, 4, b).unwrap()));
        }
    }

    #[test]
    fn qvee_matches_qlambda_at_large_widths() {
        let mut oracle = DominanceOracle::new();
        for lam in enumerate_classes(2, 3) {
            for mu in enumerate_classes(8, 4) {
                let lhs = qvee_contains_with(&mut oracle, lam.partition(), mu.partition());
                assert_eq!(
                    lhs,
                    qlambda_contains(lam.partition(), mu.partition()).unwrap()
                );
            }
        }
    }

    #[test]
    fn intersections_of_qvee_match_forbidden_to_cls() {
        let lams = enumerate_classes(2, 2);
        let mut oracle = DominanceOracle::new();
        for (i, a) in lams.iter().enumerate() {
            for b in &lams[i..] {
                let set = [a.partition().clone(), b.partition().clone()];
                let cls = forbidden_to_cls(&set).unwrap();
                for mu in enumerate_classes(8, 4) {
                    let vee = set
                        .iter()
                        .all(|l| qvee_contains_with(&mut oracle, l, mu.partition()));
                    assert_eq!(vee, cls.contains(&mu), "{a} {b} {mu}");
                }
            }
        }
    }
}
