//! Sequence codes for coherent local systems.
//!
//! A coherent local system is named by a pair of nonincreasing sequences over
//! `Z_{≥0} ∪ {+∞}` with a common finite limit. Such a sequence is a run of
//! `+∞`, a finite nonincreasing head, and a constant tail, so it is stored as
//! that triple and every comparison reduces to finitely many indices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `Z_{≥0} ∪ {+∞}`. `Finite` sorts below `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtValue {
    Finite(u64),
    Infinity,
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(v) => write!(f, "{v}"),
            ExtValue::Infinity => f.write_str("∞"),
        }
    }
}

/// `p_i = ∞` for `i ≤ inf_count`, then the head, then `tail` forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSequence", into = "RawSequence")]
pub struct ExtSequence {
    inf_count: usize,
    head: Vec<u64>,
    tail: u64,
}

#[derive(Serialize, Deserialize)]
struct RawSequence {
    inf: usize,
    head: Vec<u64>,
    tail: u64,
}

impl TryFrom<RawSequence> for ExtSequence {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        Ok(ExtSequence::from_parts(raw.inf, raw.head, raw.tail)?.normalize())
    }
}

impl From<ExtSequence> for RawSequence {
    fn from(s: ExtSequence) -> Self {
        RawSequence {
            inf: s.inf_count,
            head: s.head,
            tail: s.tail,
        }
    }
}

impl ExtSequence {
    /// Checks the head is nonincreasing and bounded below by the tail. The
    /// result is not normalized; see [`ExtSequence::normalize`].
    pub fn from_parts(inf_count: usize, head: Vec<u64>, tail: u64) -> Result<Self> {
        if head.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSequence(format!(
                "head {head:?} is not nonincreasing"
            )));
        }
        if head.iter().any(|&h| h < tail) {
            return Err(Error::InvalidSequence(format!(
                "head {head:?} drops below tail {tail}"
            )));
        }
        Ok(ExtSequence {
            inf_count,
            head,
            tail,
        })
    }

    /// The constant sequence `m, m, …`.
    pub fn constant(m: u64) -> Self {
        ExtSequence {
            inf_count: 0,
            head: Vec::new(),
            tail: m,
        }
    }

    pub fn inf_count(&self) -> usize {
        self.inf_count
    }

    pub fn head(&self) -> &[u64] {
        &self.head
    }

    /// The limit `m`.
    pub fn tail(&self) -> u64 {
        self.tail
    }

    /// Drops trailing head entries equal to the tail.
    pub fn normalize(&self) -> ExtSequence {
        let keep = self
            .head
            .iter()
            .rposition(|&h| h > self.tail)
            .map_or(0, |i| i + 1);
        ExtSequence {
            inf_count: self.inf_count,
            head: self.head[..keep].to_vec(),
            tail: self.tail,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.head.last().is_none_or(|&h| h > self.tail)
    }

    /// Number of indices before the tail starts.
    pub fn significant_len(&self) -> usize {
        self.inf_count + self.head.len()
    }

    /// One-based term `p_i`.
    pub fn at(&self, i: usize) -> ExtValue {
        assert!(i >= 1, "sequence indices start at 1");
        if i <= self.inf_count {
            ExtValue::Infinity
        } else {
            ExtValue::Finite(
                self.head
                    .get(i - 1 - self.inf_count)
                    .copied()
                    .unwrap_or(self.tail),
            )
        }
    }

    /// All normalized sequences with limit `tail`, at most `max_inf` leading
    /// infinities and a head of at most `max_head_len` entries in `tail+1..=max_entry`.
    pub fn enumerate(
        max_inf: usize,
        max_head_len: usize,
        max_entry: u64,
        tail: u64,
    ) -> Vec<ExtSequence> {
        fn heads(len: usize, lo: u64, hi: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if prefix.len() == len {
                out.push(prefix.clone());
                return;
            }
            for v in lo..=hi {
                prefix.push(v);
                heads(len, lo, v, prefix, out);
                prefix.pop();
            }
        }
        let mut all_heads = vec![Vec::new()];
        if max_entry > tail {
            for len in 1..=max_head_len {
                heads(len, tail + 1, max_entry, &mut Vec::new(), &mut all_heads);
            }
        }
        let mut out = Vec::new();
        for inf_count in 0..=max_inf {
            for head in &all_heads {
                out.push(ExtSequence {
                    inf_count,
                    head: head.clone(),
                    tail,
                });
            }
        }
        out
    }

    /// Largest `a` with `other_i ≤ self_i − a` at every index, where
    /// `∞ − a = ∞`. `None` when some finite `self_i` sits below `other_i = ∞`.
    ///
    /// Both sequences are finite and constant past the compared range, so the
    /// answer is always finite when it exists.
    fn max_shift_over(&self, other: &ExtSequence) -> Option<i128> {
        let n = self.significant_len().max(other.significant_len()) + 1;
        let mut best = i128::MAX;
        for i in 1..=n {
            match (other.at(i), self.at(i)) {
                (_, ExtValue::Infinity) => {}
                (ExtValue::Infinity, ExtValue::Finite(_)) => return None,
                (ExtValue::Finite(lo), ExtValue::Finite(hi)) => {
                    best = best.min(hi as i128 - lo as i128);
                }
            }
        }
        Some(best)
    }
}

impl fmt::Display for ExtSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.inf_count {
            f.write_str("∞,")?;
        }
        for h in &self.head {
            write!(f, "{h},")?;
        }
        write!(f, "{}…", self.tail)
    }
}

/// `s′_i ≤ s_i − a` for every `i ≥ 1`, with `∞ − a = ∞` and `x ≤ ∞` always.
pub fn seq_leq_shifted(lower: &ExtSequence, upper: &ExtSequence, a: u64) -> bool {
    let n = upper.significant_len().max(lower.significant_len()) + 1;
    (1..=n).all(|i| match (lower.at(i), upper.at(i)) {
        (_, ExtValue::Infinity) => true,
        (ExtValue::Infinity, ExtValue::Finite(_)) => false,
        (ExtValue::Finite(lo), ExtValue::Finite(hi)) => lo as i128 <= hi as i128 - a as i128,
    })
}

/// A pair of sequences with a common limit, naming one coherent local system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCode", into = "RawCode")]
pub struct ClsCode {
    p: ExtSequence,
    q: ExtSequence,
}

#[derive(Serialize, Deserialize)]
struct RawCode {
    p: ExtSequence,
    q: ExtSequence,
}

impl TryFrom<RawCode> for ClsCode {
    type Error = Error;

    fn try_from(raw: RawCode) -> Result<Self> {
        ClsCode::new(raw.p, raw.q)
    }
}

impl From<ClsCode> for RawCode {
    fn from(c: ClsCode) -> Self {
        RawCode { p: c.p, q: c.q }
    }
}

impl ClsCode {
    /// Normalizes both sequences and checks their tails agree.
    pub fn new(p: ExtSequence, q: ExtSequence) -> Result<Self> {
        if p.tail != q.tail {
            return Err(Error::TailMismatch {
                p: p.tail,
                q: q.tail,
            });
        }
        Ok(ClsCode {
            p: p.normalize(),
            q: q.normalize(),
        })
    }

    pub fn p(&self) -> &ExtSequence {
        &self.p
    }

    pub fn q(&self) -> &ExtSequence {
        &self.q
    }

    /// The common limit `m`.
    pub fn limit(&self) -> u64 {
        self.p.tail
    }
}

impl fmt::Display for ClsCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cls({}; {})", self.p, self.q)
    }
}

/// Zhilinskii's inclusion test `cls(p′; q′) ⊂ cls(p; q)`: `m ≥ m′` and some
/// `a + b = m − m′` with `a, b ≥ 0` gives `p′_i ≤ p_i − a`, `q′_i ≤ q_i − b`.
///
/// Each side is antitone in its shift, so instead of scanning every split the
/// largest admissible `a` and `b` are computed and compared with `m − m′`.
pub fn tiap_included(lower: &ClsCode, upper: &ClsCode) -> bool {
    let (m_lo, m_hi) = (lower.limit(), upper.limit());
    if m_hi < m_lo {
        return false;
    }
    let budget = (m_hi - m_lo) as i128;
    match (
        upper.p.max_shift_over(&lower.p),
        upper.q.max_shift_over(&lower.q),
    ) {
        (Some(a), Some(b)) => a >= 0 && b >= 0 && a.min(budget) + b.min(budget) >= budget,
        _ => false,
    }
}

/// A nonempty finite union of codes, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<ClsCode>", into = "Vec<ClsCode>")]
pub struct ClsUnion(BTreeSet<ClsCode>);

impl ClsUnion {
    pub fn new(members: impl IntoIterator<Item = ClsCode>) -> Result<Self> {
        let set: BTreeSet<ClsCode> = members.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyUnion);
        }
        Ok(ClsUnion(set))
    }

    pub fn members(&self) -> impl Iterator<Item = &ClsCode> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<ClsCode>> for ClsUnion {
    type Error = Error;

    fn try_from(v: Vec<ClsCode>) -> Result<Self> {
        ClsUnion::new(v)
    }
}

impl From<ClsUnion> for Vec<ClsCode> {
    fn from(u: ClsUnion) -> Self {
        u.0.into_iter().collect()
    }
}

/// `∪ U′ ⊂ ∪ U` for a left side made of irreducible codes: each member of
/// `U′` must fit inside a single member of `U`.
pub fn union_included(lower: &ClsUnion, upper: &ClsUnion) -> bool {
    lower
        .members()
        .all(|c| upper.members().any(|d| tiap_included(c, d)))
}
