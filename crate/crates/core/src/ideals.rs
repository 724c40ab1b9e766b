//! Integrable primitive ideals `I(x, y, Y_l, Y_r)` of `U(sl(∞))` and their
//! inclusion order.
//!
//! Inclusion is decided through the sequence codes of the coherent local
//! systems attached to each ideal: `I ⊂ J` exactly when the system of `J`
//! sits inside the system of `I`. [`tord_printed`] evaluates the closed-form
//! inequality as it is usually stated, only so the two can be compared.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cls::{union_included, ClsCode, ClsUnion, ExtSequence};
use crate::error::{Error, Result};
use crate::partition::YoungDiagram;

/// Parameters `(x, y, Y_l, Y_r)` of a nonzero primitive ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdealParams {
    pub x: u64,
    pub y: u64,
    pub yl: YoungDiagram,
    pub yr: YoungDiagram,
}

impl IdealParams {
    pub fn new(x: u64, y: u64, yl: YoungDiagram, yr: YoungDiagram) -> Self {
        IdealParams { x, y, yl, yr }
    }

    /// The augmentation ideal `I(0, 0, ∅, ∅)`.
    pub fn augmentation() -> Self {
        IdealParams::new(0, 0, YoungDiagram::empty(), YoungDiagram::empty())
    }
}

impl fmt::Display for IdealParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({},{},{},{})", self.x, self.y, self.yl, self.yr)
    }
}

/// A primitive ideal: the zero ideal or an integrable one.
///
/// JSON: `{"zero":true}` or `{"x":N,"y":N,"yl":[...],"yr":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal", into = "RawIdeal")]
pub enum PrimitiveIdeal {
    Zero,
    Integrable(IdealParams),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawIdeal {
    Zero { zero: bool },
    Integrable(IdealParams),
}

impl TryFrom<RawIdeal> for PrimitiveIdeal {
    type Error = String;

    fn try_from(raw: RawIdeal) -> std::result::Result<Self, String> {
        match raw {
            RawIdeal::Zero { zero: true } => Ok(PrimitiveIdeal::Zero),
            RawIdeal::Zero { zero: false } => Err("`zero` must be true when present".into()),
            RawIdeal::Integrable(p) => Ok(PrimitiveIdeal::Integrable(p)),
        }
    }
}

impl From<PrimitiveIdeal> for RawIdeal {
    fn from(i: PrimitiveIdeal) -> Self {
        match i {
            PrimitiveIdeal::Zero => RawIdeal::Zero { zero: true },
            PrimitiveIdeal::Integrable(p) => RawIdeal::Integrable(p),
        }
    }
}

impl From<IdealParams> for PrimitiveIdeal {
    fn from(p: IdealParams) -> Self {
        PrimitiveIdeal::Integrable(p)
    }
}

impl fmt::Display for PrimitiveIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimitiveIdeal::Zero => f.write_str("0"),
            PrimitiveIdeal::Integrable(p) => p.fmt(f),
        }
    }
}

/// The sequence `p^c`: `c` infinities, then `y + l_1, …, y + l_s`, then `y`.
pub fn seq_p(c: u64, y: u64, diagram: &YoungDiagram) -> ExtSequence {
    let head = diagram.columns().iter().map(|&l| y + l).collect();
    let inf = usize::try_from(c).expect("infinity run length fits in memory");
    ExtSequence::from_parts(inf, head, y)
        .expect("diagram columns are positive and nonincreasing")
        .normalize()
}

/// The code `cls(p^c; q^d)` for one split `c + d = x`.
pub fn split_code(params: &IdealParams, c: u64, d: u64) -> ClsCode {
    ClsCode::new(
        seq_p(c, params.y, &params.yl),
        seq_p(d, params.y, &params.yr),
    )
    .expect("both sequences have limit y")
}

/// The union `∪_{c+d=x} cls(p^c; q^d)` describing the coherent local system of `I`.
pub fn ideal_to_cls_union(ideal: &PrimitiveIdeal) -> Result<ClsUnion> {
    match ideal {
        PrimitiveIdeal::Zero => Err(Error::ZeroIdeal),
        PrimitiveIdeal::Integrable(p) => {
            ClsUnion::new((0..=p.x).map(|c| split_code(p, c, p.x - c)))
        }
    }
}

fn params_union(p: &IdealParams) -> ClsUnion {
    ClsUnion::new((0..=p.x).map(|c| split_code(p, c, p.x - c))).expect("x + 1 ≥ 1 members")
}

/// `I ⊂ J`. The zero ideal lies in every ideal; for integrable ideals the
/// system of `J` must lie inside the system of `I`.
pub fn ideal_includes(smaller: &PrimitiveIdeal, larger: &PrimitiveIdeal) -> bool {
    match (smaller, larger) {
        (PrimitiveIdeal::Zero, _) => true,
        (PrimitiveIdeal::Integrable(_), PrimitiveIdeal::Zero) => false,
        (PrimitiveIdeal::Integrable(i), PrimitiveIdeal::Integrable(j)) => params_includes(i, j),
    }
}

pub(crate) fn params_includes(smaller: &IdealParams, larger: &IdealParams) -> bool {
    union_included(&params_union(larger), &params_union(smaller))
}

/// `I ⊂ J` tested with only the `(x_J, 0)` member of `J`'s union on the left.
pub fn ideal_includes_single_split(smaller: &IdealParams, larger: &IdealParams) -> bool {
    let lone = ClsUnion::new([split_code(larger, larger.x, 0)]).expect("one member");
    union_included(&lone, &params_union(smaller))
}

/// Which indices the closed-form diagram inequalities range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TordReading {
    /// Every `i, j ≥ 1`, with diagrams padded by zeros.
    AllIndices,
    /// Only indices where one of the two compared columns exists.
    SupportOnly,
}

impl TordReading {
    pub const ALL: [TordReading; 2] = [TordReading::AllIndices, TordReading::SupportOnly];
}

/// The closed-form criterion read literally: `x ≥ x′`, `y ≥ y′`, and some
/// `a + b = y − y′`, `c + d = x − x′` give `l_i − a ≥ l′_{i+c}` and
/// `r_j − b ≥ r′_{j+d}` for all `i, j ≥ 1` (zero-padded diagrams).
pub fn tord_printed(smaller: &IdealParams, larger: &IdealParams) -> bool {
    tord_printed_with(smaller, larger, TordReading::AllIndices)
}

/// [`tord_printed`] under an explicit reading of the index quantifier.
pub fn tord_printed_with(
    smaller: &IdealParams,
    larger: &IdealParams,
    reading: TordReading,
) -> bool {
    if smaller.x < larger.x || smaller.y < larger.y {
        return false;
    }
    let (dx, dy) = (smaller.x - larger.x, smaller.y - larger.y);
    (0..=dy).any(|a| {
        let b = dy - a;
        (0..=dx).any(|c| {
            let d = dx - c;
            columns_fit(&smaller.yl, &larger.yl, a, c, reading)
                && columns_fit(&smaller.yr, &larger.yr, b, d, reading)
        })
    })
}

/// `own_i − slack ≥ other_{i+offset}` over the chosen index range.
fn columns_fit(
    own: &YoungDiagram,
    other: &YoungDiagram,
    slack: u64,
    offset: u64,
    reading: TordReading,
) -> bool {
    let offset = usize::try_from(offset).unwrap_or(usize::MAX);
    let (s, s2) = (own.len(), other.len());
    let last = s.max(s2) + 1;
    (1..=last).all(|i| {
        let shifted = i.saturating_add(offset);
        if reading == TordReading::SupportOnly && i > s && shifted > s2 {
            return true;
        }
        own.column(i) as i128 - slack as i128 >= other.column(shifted) as i128
    })
}

pub fn is_maximal(ideal: &PrimitiveIdeal) -> bool {
    matches!(ideal, PrimitiveIdeal::Integrable(p) if *p == IdealParams::augmentation())
}

/// `(x + y, |Y_l| + |Y_r|)`; strictly decreases along strict inclusions.
pub fn acc_measure(params: &IdealParams) -> (u64, u64) {
    (params.x + params.y, params.yl.size() + params.yr.size())
}

/// A coefficient `u + v·α` with `α` transcendental.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Coefficient {
    #[serde(rename = "const")]
    pub constant: i64,
    pub alpha: i64,
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.alpha == 0
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha = match self.alpha {
            1 => "α".to_string(),
            -1 => "-α".to_string(),
            v => format!("{v}α"),
        };
        match (self.alpha, self.constant) {
            (0, u) => write!(f, "{u}"),
            (_, 0) => f.write_str(&alpha),
            (_, u) => write!(f, "({alpha}+{u})"),
        }
    }
}

/// A weight `Σ c_i ε_i`: finitely many explicit coefficients, then `odd_tail`
/// at every later odd index and `0` at every later even index.
///
/// The representation is canonical: explicit entries are nonzero and end at
/// the last index whose coefficient differs from the tail pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightExpr {
    explicit: BTreeMap<u64, Coefficient>,
    odd_tail: u64,
}

impl WeightExpr {
    /// Builds the canonical form from coefficients at indices `1..=len` plus
    /// the tail value.
    fn from_prefix(prefix: &[Coefficient], odd_tail: u64) -> Self {
        let tail_at = |i: u64| Coefficient {
            constant: if i % 2 == 1 { odd_tail as i64 } else { 0 },
            alpha: 0,
        };
        let cut = prefix
            .iter()
            .enumerate()
            .rposition(|(k, c)| *c != tail_at(k as u64 + 1))
            .map_or(0, |k| k + 1);
        let explicit = prefix[..cut]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u64 + 1, *c))
            .collect();
        WeightExpr { explicit, odd_tail }
    }

    /// Coefficient of `ε_i` for `i ≥ 1`.
    pub fn coefficient(&self, i: u64) -> Coefficient {
        if let Some(c) = self.explicit.get(&i) {
            return *c;
        }
        let past_explicit = self
            .explicit
            .keys()
            .next_back()
            .is_none_or(|&last| i > last);
        if i % 2 == 1 && past_explicit {
            Coefficient {
                constant: self.odd_tail as i64,
                alpha: 0,
            }
        } else {
            Coefficient::default()
        }
    }

    pub fn explicit(&self) -> &BTreeMap<u64, Coefficient> {
        &self.explicit
    }

    pub fn odd_tail(&self) -> u64 {
        self.odd_tail
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in &self.explicit {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{c}ε_{i}")?;
            first = false;
        }
        if self.odd_tail > 0 {
            if !first {
                f.write_str(" + ")?;
            }
            let next_odd = self
                .explicit
                .keys()
                .next_back()
                .map_or(1, |&last| last + 1 + last % 2);
            write!(
                f,
                "{}(ε_{} + ε_{} + …)",
                self.odd_tail,
                next_odd,
                next_odd + 2
            )?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Highest weight, for the fixed ideal Borel subalgebra with odd/even
/// interleaved roots, of a simple module whose annihilator is `I`:
///
/// `Σ_{i≤x} iα ε_{2i−1} + Σ_{i≤s} l_i ε_{2i+2x−1} + y Σ_k ε_{2k−1} + Σ_{j≤t} r_{t+1−j} ε_{2j}`.
pub fn highest_weight(params: &IdealParams) -> WeightExpr {
    let x = params.x as usize;
    let s = params.yl.len();
    let t = params.yr.len();
    let len = (2 * (x + s)).max(2 * t);
    let y = params.y as i64;
    let mut prefix = vec![Coefficient::default(); len];
    for k in 0..len {
        let i = k + 1;
        if i % 2 == 1 {
            let half = i.div_ceil(2);
            prefix[k].constant = y;
            if half <= x {
                prefix[k].alpha = half as i64;
            } else if half <= x + s {
                prefix[k].constant += params.yl.column(half - x) as i64;
            }
        } else {
            let j = i / 2;
            if j <= t {
                prefix[k].constant = params.yr.column(t + 1 - j) as i64;
            }
        }
    }
    WeightExpr::from_prefix(&prefix, params.y)
}

/// Bounded slice of the ideal family: `x ≤ max_x`, `y ≤ max_y`, both
/// diagrams with at most `max_cols` columns of length at most `max_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFamily {
    pub max_x: u64,
    pub max_y: u64,
    pub max_cols: usize,
    pub max_len: u64,
}

impl IdealFamily {
    /// Integrable ideals of the family in lexicographic order on `(x, y, Y_l, Y_r)`.
    pub fn integrable(&self) -> Vec<IdealParams> {
        let diagrams = YoungDiagram::enumerate(self.max_cols, self.max_len);
        let mut out = Vec::new();
        for x in 0..=self.max_x {
            for y in 0..=self.max_y {
                for yl in &diagrams {
                    for yr in &diagrams {
                        out.push(IdealParams::new(x, y, yl.clone(), yr.clone()));
                    }
                }
            }
        }
        out
    }

    /// The zero ideal followed by [`IdealFamily::integrable`].
    pub fn all(&self) -> Vec<PrimitiveIdeal> {
        std::iter::once(PrimitiveIdeal::Zero)
            .chain(
                self.integrable()
                    .into_iter()
                    .map(PrimitiveIdeal::Integrable),
            )
            .collect()
    }

    /// Number of integrable members, without enumerating them.
    pub fn integrable_len(&self) -> u64 {
        let d = YoungDiagram::enumerate(self.max_cols, self.max_len).len() as u64;
        (self.max_x + 1) * (self.max_y + 1) * d * d
    }
}

/// Integrable ideals containing `I` within an explicit box: `x_J ≤ x_I`,
/// `y_J ≤ y_I`, columns of `Y_l(J)` at most `l_1 + y` and of `Y_r(J)` at most
/// `r_1 + y`, and at most `width_cap` columns on each side.
///
/// The full set of ideals containing `I` can be infinite once `x > 0`, so
/// the result is only the part inside that box.
pub fn containing_ideals(params: &IdealParams, width_cap: usize) -> BTreeSet<IdealParams> {
    let left = YoungDiagram::enumerate(width_cap, params.yl.first() + params.y);
    let right = YoungDiagram::enumerate(width_cap, params.yr.first() + params.y);
    let mut out = BTreeSet::new();
    for x in 0..=params.x {
        for y in 0..=params.y {
            for yl in &left {
                for yr in &right {
                    let candidate = IdealParams::new(x, y, yl.clone(), yr.clone());
                    if params_includes(params, &candidate) {
                        out.insert(candidate);
                    }
                }
            }
        }
    }
    out
}
