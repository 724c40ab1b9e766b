//! Acceptance gate: every criterion runs on its full default grid with zero
//! tolerance and prints one PASS/FAIL line.

use std::time::Instant;

use primideal_core::ideals::{
    ideal_includes, tord_printed, IdealFamily, IdealParams, PrimitiveIdeal,
};
use primideal_core::partition::YoungDiagram;
use primideal_core::verify::{
    run_verify, AccGrid, GridConfig, InterlaceGrid, LemmaGrid, Suite, TiapGrid, VerifyReport,
    WideGrid,
};

fn config() -> GridConfig {
    let cfg = GridConfig::default();
    // The bundled grids must be exactly the acceptance grids.
    assert_eq!(
        cfg.lgts2,
        WideGrid {
            lambda_width: 2,
            lambda_bound: 3,
            mu_widths: vec![8, 9],
            mu_bound: 6
        }
    );
    assert_eq!(
        cfg.interlace,
        InterlaceGrid {
            max_width: 5,
            bound: 4
        }
    );
    assert_eq!(
        cfg.lemmas,
        LemmaGrid {
            max_lambda_width: 2,
            max_mu_width: 6,
            bound: 3
        }
    );
    assert_eq!(
        cfg.pmain,
        WideGrid {
            lambda_width: 2,
            lambda_bound: 3,
            mu_widths: vec![8, 9, 10],
            mu_bound: 6
        }
    );
    assert_eq!(
        cfg.tiap_order,
        TiapGrid {
            max_inf: 2,
            max_head_len: 2,
            max_head_entry: 3,
            max_tail: 2
        }
    );
    assert_eq!(
        cfg.ideal_family,
        IdealFamily {
            max_x: 2,
            max_y: 2,
            max_cols: 2,
            max_len: 2
        }
    );
    assert_eq!(cfg.acc.chains, 1000);
    let _: &AccGrid = &cfg.acc;
    cfg
}

fn run(criterion: u32, title: &str, suite: Suite) -> VerifyReport {
    let start = Instant::now();
    let report = run_verify(suite, &config()).expect("grid within the case ceiling");
    let verdict = if report.is_success() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion:>2} [{verdict}] {title}: {} checked, {} failed ({:.1?})",
        report.checked,
        report.failed,
        start.elapsed()
    );
    for note in &report.notes {
        println!("             note: {note}");
    }
    for c in report.counterexamples.iter().take(5) {
        println!(
            "             counterexample: {}",
            serde_json::to_string(c).unwrap()
        );
    }
    assert_eq!(report.planned, report.checked);
    report
}

#[test]
fn criterion_01_difference_criterion_matches_dominance() {
    let r = run(
        1,
        "criterion_4x ⇔ chain dominance, ♯λ=2, ♯μ∈{8,9}",
        Suite::Lgts2,
    );
    assert_eq!(r.failed, 0);
    // 4 classes λ times (1716 + 3003) classes μ, plus the widths 2..7 sweep
    assert!(r.checked >= 4 * (1716 + 3003));
}

#[test]
fn criterion_02_interlace_fast_path_matches_dominance() {
    let r = run(
        2,
        "interlace ⇔ chain dominance, ♯μ ≤ ♯λ ≤ 5, entries ≤ 4",
        Suite::Interlace,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_03_lemma_hypotheses_imply_dominance() {
    let r = run(
        3,
        "lemma hypotheses ⇒ dominance, ♯λ ≤ 2, ♯μ ≤ 6, entries ≤ 3",
        Suite::Lemmas,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_04_qvee_matches_qlambda() {
    let r = run(4, "Q∨(λ) = Q(λ) pointwise, ♯λ=2, ♯μ∈{8,9,10}", Suite::Pmain);
    assert_eq!(r.failed, 0);
    assert_eq!(r.checked, 4 * (1716 + 3003 + 5005));
}

#[test]
fn criterion_05_code_inclusion_is_a_partial_order() {
    let r = run(
        5,
        "tiap inclusion is a partial order on bounded codes",
        Suite::TiapOrder,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_06_ideal_inclusion_is_a_partial_order() {
    let r = run(
        6,
        "ideal inclusion is a partial order, x,y ≤ 2, diagrams ≤ 2×2",
        Suite::IdealOrder,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_07_augmentation_ideal_is_the_only_maximal_ideal() {
    let r = run(
        7,
        "augmentation ideal is the unique maximal element",
        Suite::Maximal,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_08_ascending_chains_stabilize() {
    let r = run(
        8,
        "measure drops along strict inclusions; 1000 random chains stabilize",
        Suite::Acc,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_09_single_split_decides_inclusion() {
    let r = run(
        9,
        "inclusion unchanged with only the (x′,0) member on the left",
        Suite::SplitConsistency,
    );
    assert_eq!(r.failed, 0);
}

#[test]
fn criterion_10_printed_criterion_discrepancy_report() {
    let r = run(
        10,
        "printed criterion vs code route: sound, with the known gap",
        Suite::TordDiscrepancy,
    );
    assert_eq!(r.failed, 0);
    let y1 = IdealParams::new(0, 1, YoungDiagram::empty(), YoungDiagram::empty());
    let aug = IdealParams::augmentation();
    assert!(!tord_printed(&y1, &aug));
    assert!(ideal_includes(
        &PrimitiveIdeal::Integrable(y1.clone()),
        &PrimitiveIdeal::Integrable(aug.clone())
    ));
    assert!(r
        .discrepancies
        .iter()
        .any(|d| d.inputs == serde_json::json!([y1.to_string(), aug.to_string()])));
}
