//! Exhaustive verification suites.
//!
//! Each suite compares a closed-form criterion against its brute-force
//! counterpart (or checks an order-theoretic law) over a bounded grid and
//! returns a [`VerifyReport`]. Default grids live in `grids.toml`, which is
//! compiled into the crate; a different file can be loaded with
//! [`GridConfig::load`].

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cls::{tiap_included, ClsCode, ExtSequence};
use crate::dominance::{
    criterion_4x, dominates_interlace, lfir_hypotheses, lgts25_hypotheses, lgts_hypotheses,
    DominanceOracle,
};
use crate::error::{Error, Result};
use crate::hasse::BitMatrix;
use crate::ideals::{
    acc_measure, ideal_includes, ideal_includes_single_split, is_maximal, params_includes,
    tord_printed_with, IdealFamily, IdealParams, PrimitiveIdeal, TordReading,
};
use crate::local_systems::{qlambda_contains, qvee_contains_with};
use crate::partition::{enumerate_classes, ShiftClass, YoungDiagram};

const DEFAULT_GRIDS: &str = include_str!("../grids.toml");

/// Discrepancy samples kept per reading in the printed-criterion report.
const DISCREPANCY_SAMPLES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lgts2,
    Interlace,
    Lemmas,
    Pmain,
    TiapOrder,
    IdealOrder,
    Maximal,
    Acc,
    TordDiscrepancy,
    SplitConsistency,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Lgts2,
        Suite::Interlace,
        Suite::Lemmas,
        Suite::Pmain,
        Suite::TiapOrder,
        Suite::IdealOrder,
        Suite::Maximal,
        Suite::Acc,
        Suite::TordDiscrepancy,
        Suite::SplitConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lgts2 => "lgts2",
            Suite::Interlace => "interlace",
            Suite::Lemmas => "lemmas",
            Suite::Pmain => "pmain",
            Suite::TiapOrder => "tiap-order",
            Suite::IdealOrder => "ideal-order",
            Suite::Maximal => "maximal",
            Suite::Acc => "acc",
            Suite::TordDiscrepancy => "tord-discrepancy",
            Suite::SplitConsistency => "split-consistency",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Dominance grid: narrow classes `λ` against wide classes `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WideGrid {
    pub lambda_width: usize,
    pub lambda_bound: u64,
    pub mu_widths: Vec<usize>,
    pub mu_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterlaceGrid {
    pub max_width: usize,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LemmaGrid {
    pub max_lambda_width: usize,
    pub max_mu_width: usize,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TiapGrid {
    pub max_inf: usize,
    pub max_head_len: usize,
    pub max_head_entry: u64,
    pub max_tail: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AccGrid {
    pub chains: u64,
    pub seed: u64,
}

/// All suite grids plus the case ceiling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub version: u32,
    pub max_cases: u64,
    pub lgts2: WideGrid,
    pub interlace: InterlaceGrid,
    pub lemmas: LemmaGrid,
    pub pmain: WideGrid,
    pub tiap_order: TiapGrid,
    pub ideal_family: IdealFamily,
    pub acc: AccGrid,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig::from_toml_str(DEFAULT_GRIDS).expect("bundled grids.toml is valid")
    }
}

impl GridConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: GridConfig = toml::from_str(text).map_err(|e| Error::GridConfig(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::GridConfig(format!("{}: {e}", path.display())))?;
        GridConfig::from_toml_str(&text)
    }

    fn validate(&self) -> Result<()> {
        for (name, g, min) in [("lgts2", &self.lgts2, 1), ("pmain", &self.pmain, 2)] {
            if g.lambda_width < min {
                return Err(Error::GridConfig(format!(
                    "{name}.lambda_width must be at least {min}"
                )));
            }
            if g.mu_widths.iter().any(|&w| w < g.lambda_width) {
                return Err(Error::GridConfig(format!(
                    "{name}.mu_widths must be ≥ lambda_width"
                )));
            }
        }
        if self.interlace.max_width == 0 || self.lemmas.max_lambda_width == 0 {
            return Err(Error::GridConfig("grid widths must be positive".into()));
        }
        Ok(())
    }
}

/// One failed (or, for discrepancy reports, disagreeing) case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub inputs: Value,
    pub left: Value,
    pub right: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub grid_version: u32,
    pub grid: String,
    /// Elementary checks announced before running.
    pub planned: u64,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn is_success(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    counterexamples: Vec<Counterexample>,
    discrepancies: Vec<Counterexample>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            self.counterexamples.push(counterexample());
        }
    }

    fn finish(
        mut self,
        suite: Suite,
        cfg: &GridConfig,
        grid: String,
        planned: u64,
    ) -> VerifyReport {
        let key = |c: &Counterexample| (c.check.clone(), c.inputs.to_string());
        self.counterexamples.sort_by_key(key);
        VerifyReport {
            suite: suite.name().to_string(),
            grid_version: cfg.version,
            grid,
            planned,
            checked: self.checked,
            passed: self.checked - self.failed,
            failed: self.failed,
            counterexamples: self.counterexamples,
            discrepancies: self.discrepancies,
            notes: self.notes,
        }
    }
}

fn cx(check: &str, inputs: Value, left: impl Serialize, right: impl Serialize) -> Counterexample {
    Counterexample {
        check: check.to_string(),
        inputs,
        left: serde_json::to_value(left).unwrap_or(Value::Null),
        right: serde_json::to_value(right).unwrap_or(Value::Null),
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (1..=k).fold(1u64, |acc, i| acc.saturating_mul(n + 1 - i) / i)
}

/// Number of canonical classes of the given width with entries at most `bound`.
fn class_count(width: usize, bound: u64) -> u64 {
    if width == 0 {
        return 0;
    }
    binom(width as u64 - 1 + bound, bound)
}

fn tiap_codes(g: &TiapGrid) -> Vec<ClsCode> {
    let mut out = Vec::new();
    for tail in 0..=g.max_tail {
        let seqs = ExtSequence::enumerate(g.max_inf, g.max_head_len, g.max_head_entry, tail);
        for p in &seqs {
            for q in &seqs {
                out.push(ClsCode::new(p.clone(), q.clone()).expect("equal tails"));
            }
        }
    }
    out
}

fn tiap_code_count(g: &TiapGrid) -> u64 {
    (0..=g.max_tail)
        .map(|tail| {
            let k = g.max_head_entry.saturating_sub(tail);
            let heads: u64 = (0..=g.max_head_len as u64)
                .map(|len| {
                    if len == 0 {
                        1
                    } else if k == 0 {
                        0
                    } else {
                        binom(k + len - 1, len)
                    }
                })
                .sum();
            let seqs = (g.max_inf as u64 + 1) * heads;
            seqs * seqs
        })
        .sum()
}

/// Elementary checks a suite will perform on the given grid.
pub fn planned_cases(suite: Suite, cfg: &GridConfig) -> u64 {
    let wide = |g: &WideGrid| {
        let mus: u64 = g
            .mu_widths
            .iter()
            .map(|&w| class_count(w, g.mu_bound))
            .sum();
        class_count(g.lambda_width, g.lambda_bound) * mus
    };
    let fam_n = cfg.ideal_family.integrable_len();
    match suite {
        Suite::Lgts2 => {
            let g = &cfg.lgts2;
            let narrow: u64 = (g.lambda_width..4 * g.lambda_width)
                .map(|w| class_count(w, g.mu_bound))
                .sum();
            wide(g) + class_count(g.lambda_width, g.lambda_bound) * narrow
        }
        Suite::Pmain => wide(&cfg.pmain),
        Suite::Interlace => {
            let g = &cfg.interlace;
            (1..=g.max_width)
                .map(|wl| {
                    class_count(wl, g.bound)
                        * (1..=wl).map(|wm| class_count(wm, g.bound)).sum::<u64>()
                })
                .sum()
        }
        Suite::Lemmas => {
            let g = &cfg.lemmas;
            let pairs: u64 = (1..=g.max_lambda_width)
                .map(|wl| {
                    class_count(wl, g.bound)
                        * (wl..=g.max_mu_width)
                            .map(|wm| class_count(wm, g.bound))
                            .sum::<u64>()
                })
                .sum();
            3 * pairs
        }
        Suite::TiapOrder => {
            let n = tiap_code_count(&cfg.tiap_order);
            n + 2 * n * n
        }
        Suite::IdealOrder => {
            let n = fam_n + 1;
            n + 2 * n * n
        }
        Suite::Maximal => (fam_n + 1) + fam_n,
        Suite::Acc => fam_n * fam_n + cfg.acc.chains,
        Suite::TordDiscrepancy => 2 * fam_n * fam_n + 1,
        Suite::SplitConsistency => fam_n * fam_n,
    }
}

/// Runs one suite over its grid. Refuses grids above `cfg.max_cases`.
pub fn run_verify(suite: Suite, cfg: &GridConfig) -> Result<VerifyReport> {
    let planned = planned_cases(suite, cfg);
    if planned > cfg.max_cases {
        return Err(Error::GridTooLarge {
            suite: suite.name().to_string(),
            cases: planned,
            ceiling: cfg.max_cases,
        });
    }
    let (tally, grid) = match suite {
        Suite::Lgts2 => lgts2(&cfg.lgts2),
        Suite::Interlace => interlace(&cfg.interlace),
        Suite::Lemmas => lemmas(&cfg.lemmas),
        Suite::Pmain => pmain(&cfg.pmain),
        Suite::TiapOrder => tiap_order(&cfg.tiap_order),
        Suite::IdealOrder => ideal_order(&cfg.ideal_family),
        Suite::Maximal => maximal(&cfg.ideal_family),
        Suite::Acc => acc(&cfg.ideal_family, &cfg.acc),
        Suite::TordDiscrepancy => tord_discrepancy(&cfg.ideal_family),
        Suite::SplitConsistency => split_consistency(&cfg.ideal_family),
    };
    Ok(tally.finish(suite, cfg, grid, planned))
}

fn wide_grid_text(g: &WideGrid) -> String {
    format!(
        "♯λ={}, λ entries≤{}; ♯μ∈{:?}, μ entries≤{}",
        g.lambda_width, g.lambda_bound, g.mu_widths, g.mu_bound
    )
}

fn pair(a: &ShiftClass, b: &ShiftClass) -> Value {
    json!({ "lambda": a, "mu": b })
}

fn lgts2(g: &WideGrid) -> (Tally, String) {
    let mut t = Tally::default();
    let mut oracle = DominanceOracle::new();
    let lambdas = enumerate_classes(g.lambda_width, g.lambda_bound);
    for lam in &lambdas {
        for &w in &g.mu_widths {
            for mu in enumerate_classes(w, g.mu_bound) {
                let formula = criterion_4x(mu.partition(), lam.partition()).expect("♯μ ≥ ♯λ");
                let chain = oracle.dominates(mu.partition(), lam.partition());
                t.check(formula == chain, || {
                    cx("criterion_4x ⇔ μ ≻ λ", pair(lam, &mu), formula, chain)
                });
            }
        }
    }
    // Below 4♯λ the equivalence is not claimed; record what happens there.
    let (mut cases, mut necessity, mut sufficiency) = (0u64, 0u64, 0u64);
    for lam in &lambdas {
        for w in g.lambda_width..4 * g.lambda_width {
            for mu in enumerate_classes(w, g.mu_bound) {
                cases += 1;
                let formula = criterion_4x(mu.partition(), lam.partition()).expect("♯μ ≥ ♯λ");
                let chain = oracle.dominates(mu.partition(), lam.partition());
                necessity += u64::from(chain && !formula);
                sufficiency += u64::from(formula && !chain);
            }
        }
    }
    t.checked += cases;
    t.notes.push(format!(
        "widths {}..{} (outside the claimed range): {cases} pairs, {necessity} with μ ≻ λ but the criterion false, \
         {sufficiency} with the criterion true but μ ⊁ λ",
        g.lambda_width,
        4 * g.lambda_width - 1
    ));
    (t, wide_grid_text(g))
}

fn interlace(g: &InterlaceGrid) -> (Tally, String) {
    let mut t = Tally::default();
    let mut oracle = DominanceOracle::new();
    for wl in 1..=g.max_width {
        for lam in enumerate_classes(wl, g.bound) {
            for wm in 1..=wl {
                for mu in enumerate_classes(wm, g.bound) {
                    let fast = dominates_interlace(lam.partition(), mu.partition());
                    let chain = oracle.dominates(lam.partition(), mu.partition());
                    t.check(fast == chain, || {
                        cx("interlace ⇔ chain", pair(&lam, &mu), fast, chain)
                    });
                }
            }
        }
    }
    (
        t,
        format!("♯μ ≤ ♯λ ≤ {}, entries ≤ {}", g.max_width, g.bound),
    )
}

fn lemmas(g: &LemmaGrid) -> (Tally, String) {
    let mut t = Tally::default();
    let mut oracle = DominanceOracle::new();
    let mut held = [0u64; 3];
    for wl in 1..=g.max_lambda_width {
        for lam in enumerate_classes(wl, g.bound) {
            for wm in wl..=g.max_mu_width {
                for mu in enumerate_classes(wm, g.bound) {
                    let (l, m) = (lam.partition(), mu.partition());
                    let dom = oracle.dominates(m, l);
                    let hyps = [
                        ("endpoint lemma ⇒ μ ≻ λ", lgts_hypotheses(l, m)),
                        ("equality lemma ⇒ μ ≻ λ", lgts25_hypotheses(l, m)),
                        (
                            "wide-gap lemma ⇒ μ ≻ λ",
                            (1..=wm).any(|i| lfir_hypotheses(l, m, i)),
                        ),
                    ];
                    for (k, (name, hyp)) in hyps.into_iter().enumerate() {
                        held[k] += u64::from(hyp);
                        t.check(!hyp || dom, || cx(name, pair(&lam, &mu), hyp, dom));
                    }
                }
            }
        }
    }
    t.notes.push(format!(
        "hypotheses satisfied: endpoint {}, equality {}, wide-gap {}",
        held[0], held[1], held[2]
    ));
    (
        t,
        format!(
            "♯λ ≤ {}, ♯λ ≤ ♯μ ≤ {}, entries ≤ {}",
            g.max_lambda_width, g.max_mu_width, g.bound
        ),
    )
}

fn pmain(g: &WideGrid) -> (Tally, String) {
    let mut t = Tally::default();
    let mut oracle = DominanceOracle::new();
    let mut members = 0u64;
    for lam in enumerate_classes(g.lambda_width, g.lambda_bound) {
        for &w in &g.mu_widths {
            for mu in enumerate_classes(w, g.mu_bound) {
                let vee = qvee_contains_with(&mut oracle, lam.partition(), mu.partition());
                let cls = qlambda_contains(lam.partition(), mu.partition()).expect("♯λ ≥ 2");
                members += u64::from(vee);
                t.check(vee == cls, || {
                    cx("Q∨(λ) ∋ μ ⇔ Q(λ) ∋ μ", pair(&lam, &mu), vee, cls)
                });
            }
        }
    }
    t.notes.push(format!("{members} pairs with μ ∈ Q∨(λ)"));
    (t, wide_grid_text(g))
}

/// Reflexivity, antisymmetry and transitivity of `rel` over `labels`.
fn check_partial_order(t: &mut Tally, labels: &[Value], rel: &BitMatrix) {
    let n = labels.len();
    for i in 0..n {
        t.check(rel.get(i, i), || {
            cx("reflexive", labels[i].clone(), false, true)
        });
    }
    for i in 0..n {
        for j in 0..n {
            let both = i != j && rel.get(i, j) && rel.get(j, i);
            t.check(!both, || {
                cx(
                    "antisymmetric",
                    json!([labels[i], labels[j]]),
                    "mutually included",
                    "distinct",
                )
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            // everything above j must be above i whenever i ≤ j
            let ok = !rel.get(i, j) || rel.row_subset(j, i);
            t.check(ok, || {
                let k = (0..n)
                    .find(|&k| rel.get(j, k) && !rel.get(i, k))
                    .expect("witness");
                cx(
                    "transitive",
                    json!([labels[i], labels[j], labels[k]]),
                    "a≤b, b≤c",
                    "a≰c",
                )
            });
        }
    }
}

fn relation<T>(items: &[T], f: impl Fn(&T, &T) -> bool) -> BitMatrix {
    let mut m = BitMatrix::new(items.len());
    for (i, a) in items.iter().enumerate() {
        for (j, b) in items.iter().enumerate() {
            if f(a, b) {
                m.set(i, j);
            }
        }
    }
    m
}

fn tiap_order(g: &TiapGrid) -> (Tally, String) {
    let mut t = Tally::default();
    let codes = tiap_codes(g);
    let rel = relation(&codes, tiap_included);
    let labels: Vec<Value> = codes
        .iter()
        .map(|c| serde_json::to_value(c).expect("serializable"))
        .collect();
    check_partial_order(&mut t, &labels, &rel);
    t.notes.push(format!("{} normalized codes", codes.len()));
    let grid = format!(
        "inf ≤ {}, head length ≤ {}, head entries ≤ {}, tail ≤ {}",
        g.max_inf, g.max_head_len, g.max_head_entry, g.max_tail
    );
    (t, grid)
}

fn family_text(f: &IdealFamily) -> String {
    format!(
        "x ≤ {}, y ≤ {}, diagrams ≤ {} columns of length ≤ {}",
        f.max_x, f.max_y, f.max_cols, f.max_len
    )
}

fn ideal_order(f: &IdealFamily) -> (Tally, String) {
    let mut t = Tally::default();
    let ideals = f.all();
    let rel = relation(&ideals, ideal_includes);
    let labels: Vec<Value> = ideals
        .iter()
        .map(|i| Value::String(i.to_string()))
        .collect();
    check_partial_order(&mut t, &labels, &rel);
    (t, format!("zero ideal and {}", family_text(f)))
}

fn maximal(f: &IdealFamily) -> (Tally, String) {
    let mut t = Tally::default();
    let aug = PrimitiveIdeal::Integrable(IdealParams::augmentation());
    for ideal in f.all() {
        let below = ideal_includes(&ideal, &aug);
        t.check(below, || {
            cx(
                "contained in the augmentation ideal",
                json!(ideal.to_string()),
                below,
                true,
            )
        });
    }
    let ideals = f.integrable();
    let rel = relation(&ideals, params_includes);
    let mut unbeaten = Vec::new();
    for (i, ideal) in ideals.iter().enumerate() {
        let has_strict_superset = (0..ideals.len()).any(|j| j != i && rel.get(i, j));
        if !has_strict_superset {
            unbeaten.push(ideal.clone());
        }
        let top = is_maximal(&PrimitiveIdeal::Integrable(ideal.clone()));
        t.check(has_strict_superset != top, || {
            cx(
                "no strict superset ⇔ augmentation ideal",
                json!(ideal.to_string()),
                !has_strict_superset,
                top,
            )
        });
    }
    t.notes.push(format!(
        "ideals without a strict superset: {}",
        unbeaten
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    (t, family_text(f))
}

fn acc(f: &IdealFamily, g: &AccGrid) -> (Tally, String) {
    let mut t = Tally::default();
    let ideals = f.integrable();
    let n = ideals.len();
    let rel = relation(&ideals, params_includes);
    let mut supersets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let strict = i != j && rel.get(i, j);
            if strict {
                supersets[i].push(j);
            }
            let ok = !strict || acc_measure(&ideals[j]) < acc_measure(&ideals[i]);
            t.check(ok, || {
                cx(
                    "strict inclusion lowers the measure",
                    json!([ideals[i].to_string(), ideals[j].to_string()]),
                    acc_measure(&ideals[i]),
                    acc_measure(&ideals[j]),
                )
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let mut longest = 0usize;
    for _ in 0..g.chains {
        let start = rng.gen_range(0..n);
        let mut cur = start;
        let mut steps = 0usize;
        while !supersets[cur].is_empty() && steps <= n {
            cur = supersets[cur][rng.gen_range(0..supersets[cur].len())];
            steps += 1;
        }
        longest = longest.max(steps);
        let stabilized = supersets[cur].is_empty();
        let top = is_maximal(&PrimitiveIdeal::Integrable(ideals[cur].clone()));
        t.check(stabilized && top, || {
            cx(
                "random ascending chain stabilizes at the augmentation ideal",
                json!({ "start": ideals[start].to_string(), "steps": steps }),
                ideals[cur].to_string(),
                IdealParams::augmentation().to_string(),
            )
        });
    }
    t.notes.push(format!(
        "{} random chains, longest had {longest} strict steps",
        g.chains
    ));
    (
        t,
        format!("{}; {} chains, seed {}", family_text(f), g.chains, g.seed),
    )
}

fn tord_discrepancy(f: &IdealFamily) -> (Tally, String) {
    let mut t = Tally::default();
    let ideals = f.integrable();
    let rel = relation(&ideals, params_includes);
    let mut mismatches = [0u64; 2];
    let mut unsound = [0u64; 2];
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            let included = rel.get(i, j);
            for (r, reading) in TordReading::ALL.into_iter().enumerate() {
                let printed = tord_printed_with(a, b, reading);
                t.checked += 1;
                if printed == included {
                    continue;
                }
                mismatches[r] += 1;
                let entry = cx(
                    &format!(
                        "printed criterion ({}) vs code route",
                        reading_name(reading)
                    ),
                    json!([a.to_string(), b.to_string()]),
                    printed,
                    included,
                );
                if printed && !included {
                    unsound[r] += 1;
                }
                if reading == TordReading::AllIndices && printed && !included {
                    t.counterexamples.push(entry.clone());
                }
                let kept = t
                    .discrepancies
                    .iter()
                    .filter(|d| d.check == entry.check)
                    .count();
                if kept < DISCREPANCY_SAMPLES {
                    t.discrepancies.push(entry);
                }
            }
        }
    }
    // soundness of the literal reading is the gate; the other reading is reported only
    t.failed += unsound[0];

    let y1 = IdealParams::new(0, 1, YoungDiagram::empty(), YoungDiagram::empty());
    let aug = IdealParams::augmentation();
    let printed = tord_printed_with(&y1, &aug, TordReading::AllIndices);
    let included = params_includes(&y1, &aug);
    t.check(!printed && included, || {
        cx(
            "I(0,1,∅,∅) ⊂ I(0,0,∅,∅) separates the readings",
            json!([y1.to_string(), aug.to_string()]),
            printed,
            included,
        )
    });
    for (r, reading) in TordReading::ALL.into_iter().enumerate() {
        t.notes.push(format!(
            "{}: {} disagreements with the code route, {} of them printed-true/included-false",
            reading_name(reading),
            mismatches[r],
            unsound[r]
        ));
    }
    t.notes.push(format!(
        "I(0,1,∅,∅) ⊂ I(0,0,∅,∅): printed (all indices) = {printed}, code route = {included}"
    ));
    (t, family_text(f))
}

fn reading_name(r: TordReading) -> &'static str {
    match r {
        TordReading::AllIndices => "all indices",
        TordReading::SupportOnly => "support only",
    }
}

fn split_consistency(f: &IdealFamily) -> (Tally, String) {
    let mut t = Tally::default();
    let ideals = f.integrable();
    for a in &ideals {
        for b in &ideals {
            let full = params_includes(a, b);
            let single = ideal_includes_single_split(a, b);
            t.check(full == single, || {
                cx(
                    "full union ⇔ (x′,0) member",
                    json!([a.to_string(), b.to_string()]),
                    full,
                    single,
                )
            });
        }
    }
    (t, family_text(f))
}
