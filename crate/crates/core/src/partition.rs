//! Z-partitions, their shift classes, Young diagrams and the one-step
//! Gelfand–Tsetlin relation.
//!
//! A Z-partition of width `n` is a nonincreasing sequence of `n` integers and
//! stands for the highest weight of a simple finite-dimensional
//! `sl(n)`-module. Adding the same integer to every entry does not change the
//! module, so most questions are asked about [`ShiftClass`]es, whose
//! canonical representative has last entry `0`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite nonincreasing integer sequence of width at least one.
///
/// Construction checks that the spread `λ_1 − λ_n` fits in an `i64`, so
/// canonicalization can never overflow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ZPartition(Vec<i64>);

impl ZPartition {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let (first, last) = match (entries.first(), entries.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(Error::EmptyPartition),
        };
        for w in entries.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotNonincreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        first
            .checked_sub(last)
            .ok_or(Error::Overflow("measuring the spread of a partition"))?;
        Ok(ZPartition(entries))
    }

    /// The width `♯λ`.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// One-based access `λ_i`. Panics when `i` is out of `1..=♯λ`.
    pub fn part(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// `λ_1 − λ_♯λ`.
    pub fn spread(&self) -> i64 {
        self.0[0] - self.0[self.0.len() - 1]
    }

    /// Adds `d` to every entry.
    pub fn shifted(&self, d: i64) -> Result<Self> {
        let entries = self
            .0
            .iter()
            .map(|&e| {
                e.checked_add(d)
                    .ok_or(Error::Overflow("shifting a partition"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZPartition(entries))
    }

    /// The canonical representative of the shift class: subtract the last entry.
    pub fn canonicalize(&self) -> ShiftClass {
        let last = self.0[self.0.len() - 1];
        ShiftClass(ZPartition(self.0.iter().map(|&e| e - last).collect()))
    }
}

impl TryFrom<Vec<i64>> for ZPartition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        ZPartition::new(v)
    }
}

impl From<ZPartition> for Vec<i64> {
    fn from(p: ZPartition) -> Self {
        p.0
    }
}

impl fmt::Display for ZPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Canonical representative of a Z-partition modulo uniform shifts: entries
/// are nonnegative and the last one is `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ShiftClass(ZPartition);

impl ShiftClass {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let p = ZPartition::new(entries)?;
        if p.0[p.0.len() - 1] != 0 {
            return Err(Error::NotCanonical(p.0));
        }
        Ok(ShiftClass(p))
    }

    /// The zero class of the given width.
    pub fn zero(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::EmptyPartition);
        }
        Ok(ShiftClass(ZPartition(vec![0; width])))
    }

    pub fn width(&self) -> usize {
        self.0.width()
    }

    pub fn entries(&self) -> &[i64] {
        self.0.entries()
    }

    /// The canonical representative viewed as a Z-partition.
    pub fn partition(&self) -> &ZPartition {
        &self.0
    }
}

impl TryFrom<Vec<i64>> for ShiftClass {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        ShiftClass::new(v)
    }
}

impl From<ShiftClass> for Vec<i64> {
    fn from(c: ShiftClass) -> Self {
        c.0 .0
    }
}

impl From<ShiftClass> for ZPartition {
    fn from(c: ShiftClass) -> Self {
        c.0
    }
}

impl AsRef<ZPartition> for ShiftClass {
    fn as_ref(&self) -> &ZPartition {
        &self.0
    }
}

impl AsRef<ZPartition> for ZPartition {
    fn as_ref(&self) -> &ZPartition {
        self
    }
}

impl fmt::Display for ShiftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Column lengths `l_1 ≥ … ≥ l_s > 0` of a Young diagram; empty for `∅`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct YoungDiagram(Vec<u64>);

impl YoungDiagram {
    pub fn new(columns: Vec<u64>) -> Result<Self> {
        let positive = columns.iter().all(|&c| c > 0);
        let sorted = columns.windows(2).all(|w| w[0] >= w[1]);
        if !positive || !sorted {
            return Err(Error::InvalidDiagram(columns));
        }
        Ok(YoungDiagram(columns))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    pub fn columns(&self) -> &[u64] {
        &self.0
    }

    /// Number of columns `s`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-padded one-based column length: `l_i`, or `0` for `i > s`.
    pub fn column(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Longest column `l_1`, `0` for the empty diagram.
    pub fn first(&self) -> u64 {
        self.column(1)
    }

    /// Total number of boxes.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    /// All diagrams with at most `max_cols` columns, each of length at most
    /// `max_len`, in lexicographic order.
    pub fn enumerate(max_cols: usize, max_len: u64) -> Vec<YoungDiagram> {
        fn go(prefix: &mut Vec<u64>, max_cols: usize, cap: u64, out: &mut Vec<YoungDiagram>) {
            out.push(YoungDiagram(prefix.clone()));
            if prefix.len() == max_cols {
                return;
            }
            for c in 1..=cap {
                prefix.push(c);
                go(prefix, max_cols, c, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), max_cols, max_len, &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<u64>> for YoungDiagram {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        YoungDiagram::new(v)
    }
}

impl From<YoungDiagram> for Vec<u64> {
    fn from(y: YoungDiagram) -> Self {
        y.0
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        write_tuple(f, &self.0)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Feasible interval of shifts `D` for an interlacing `upper_i ≥ lower_i + D ≥ upper_{i+gap}`.
///
/// Returns `None` when the widths do not allow the pattern, otherwise
/// `(max_i(upper_{i+gap} − lower_i), min_i(upper_i − lower_i))`.
pub(crate) fn shift_interval(upper: &[i64], lower: &[i64]) -> Option<(i128, i128)> {
    if upper.len() < lower.len() || lower.is_empty() {
        return None;
    }
    let gap = upper.len() - lower.len();
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    for (i, &m) in lower.iter().enumerate() {
        lo = lo.max(upper[i + gap] as i128 - m as i128);
        hi = hi.min(upper[i] as i128 - m as i128);
    }
    Some((lo, hi))
}

/// One Gelfand–Tsetlin step `λ > μ`: `♯μ = ♯λ − 1` and some integer `D`
/// satisfies `λ_i ≥ μ_i + D ≥ λ_{i+1}` for every `i ≤ ♯μ`.
pub fn is_gt_step(lambda: &ZPartition, mu: &ZPartition) -> bool {
    if mu.width() + 1 != lambda.width() {
        return false;
    }
    matches!(shift_interval(lambda.entries(), mu.entries()), Some((lo, hi)) if lo <= hi)
}

/// All classes of width `♯λ − 1` reachable from `λ` by one Gelfand–Tsetlin step.
pub fn gt_children(lambda: &ZPartition) -> Result<BTreeSet<ShiftClass>> {
    if lambda.width() < 2 {
        return Err(Error::WidthTooSmall {
            width: lambda.width(),
            min: 2,
        });
    }
    Ok(children_of_class(&lambda.canonicalize()))
}

/// Children of a canonical class; the width is known to be at least two.
pub(crate) fn children_of_class(class: &ShiftClass) -> BTreeSet<ShiftClass> {
    let top = class.entries();
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(top.len() - 1);
    interlacings(top, &mut cur, &mut out);
    out
}

fn interlacings(top: &[i64], cur: &mut Vec<i64>, out: &mut BTreeSet<ShiftClass>) {
    let i = cur.len();
    if i + 1 == top.len() {
        let last = cur[i - 1];
        out.insert(ShiftClass(ZPartition(
            cur.iter().map(|&e| e - last).collect(),
        )));
        return;
    }
    for v in top[i + 1]..=top[i] {
        cur.push(v);
        interlacings(top, cur, out);
        cur.pop();
    }
}

/// All canonical classes of the given width whose first entry is at most
/// `entry_bound`, in lexicographic order.
pub fn enumerate_classes(width: usize, entry_bound: u64) -> Vec<ShiftClass> {
    fn go(prefix: &mut Vec<i64>, len: usize, cap: i64, out: &mut Vec<ShiftClass>) {
        if prefix.len() == len {
            let mut entries = prefix.clone();
            entries.push(0);
            out.push(ShiftClass(ZPartition(entries)));
            return;
        }
        for v in 0..=cap {
            prefix.push(v);
            go(prefix, len, v, out);
            prefix.pop();
        }
    }
    if width == 0 {
        return Vec::new();
    }
    let cap = i64::try_from(entry_bound).unwrap_or(i64::MAX);
    let mut out = Vec::new();
    go(&mut Vec::new(), width - 1, cap, &mut out);
    out.sort();
    out
}
