//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS/FAIL line. Every identity is exact — tolerance zero — at the stated
//! truncation order; the stated wall-clock budgets are asserted where given.

use std::process::Command;
use std::time::Instant;

use qrank::{registry, CheckStatus, Memo};

fn run(name: &str, order: Option<i64>, memo: &Memo) -> qrank::CheckResult {
    registry::run_check(name, order, memo).unwrap_or_else(|| panic!("unregistered check {name}"))
}

fn assert_pass(name: &str, order: Option<i64>, memo: &Memo) {
    let r = run(name, order, memo);
    assert_eq!(
        r.status,
        CheckStatus::Pass,
        "{name} at order {:?}: {:?} / {:?}",
        r.order_checked,
        r.first_mismatch,
        r.error
    );
}

#[test]
fn criterion_01_rank_identities_symbolic_order_60() {
    let memo = Memo::new();
    let start = Instant::now();
    for name in ["rankid1", "rankid2", "rankid3", "rankid4"] {
        assert_pass(name, Some(60), &memo);
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "rank identities took {secs:.1} s, budget 60 s");
    println!("criterion 1: PASS - rankid1..4 symbolic to order 60 (integer coefficients), {secs:.1} s");
}

#[test]
fn criterion_02_dyson_mod_5() {
    let memo = Memo::new();
    let start = Instant::now();
    let r = qrank::dyson::dyson_report(5, 154, &memo).expect("oracle run");
    assert!(r.confirmed, "first failing case {:?}", r.smallest_failing);
    assert_eq!(r.cases.len(), 31, "cases 4, 9, ..., 154");
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 10.0, "mod-5 oracle took {secs:.1} s, budget 10 s");
    println!("criterion 2: PASS - N(r,5,5n+4) equal and = p/5 for all 5n+4 <= 154, {secs:.1} s");
}

#[test]
fn criterion_03_dyson_mod_7() {
    let memo = Memo::new();
    let r = qrank::dyson::dyson_report(7, 152, &memo).expect("oracle run");
    assert!(r.confirmed, "first failing case {:?}", r.smallest_failing);
    assert_eq!(r.cases.len(), 22, "cases 5, 12, ..., 152");
    println!("criterion 3: PASS - N(r,7,7n+5) equal and = p/7 for all 7n+5 <= 152");
}

#[test]
fn criterion_04_mod_11_failure_at_six() {
    let memo = Memo::new();
    let r = qrank::dyson::dyson_report(11, 61, &memo).expect("oracle run");
    assert_eq!(r.smallest_failing, Some(6), "expected the first unequal case at exactly 6");
    assert!(r.confirmed);
    println!("criterion 4: PASS - mod-11 classes unequal, first failing case exactly 6");
}

#[test]
fn criterion_05_mod5_linear_system() {
    let memo = Memo::new();
    for name in ["eq1", "eq2", "eq3", "r3_zero", "r2r4_products"] {
        assert_pass(name, Some(60), &memo);
    }
    println!("criterion 5: PASS - eq1..eq3, R_3 = 0 both routes, R_2/R_4 product forms, order 60");
}

#[test]
fn criterion_06_detd() {
    let memo = Memo::new();
    assert_pass("detd_expansion", None, &memo);
    assert_pass("detd_eta", Some(100), &memo);
    println!("criterion 6: PASS - detD printed coefficients through q^11 and eta-quotient to order 100");
}

#[test]
fn criterion_07_lost_notebook() {
    let memo = Memo::new();
    for name in ["ram_full", "ram_r0", "ram_r3"] {
        assert_pass(name, Some(60), &memo);
    }
    println!("criterion 7: PASS - Lost Notebook 5-dissection and both component identities, order 60, Z[zeta]");
}

#[test]
fn criterion_08_mod7_system() {
    let memo = Memo::new();
    for name in [
        "zth7dis",
        "zr7dis1_a",
        "zr7dis1_b",
        "zr7dis1_c",
        "eqn71",
        "eqn72",
        "eqn73",
        "mod7_products",
    ] {
        assert_pass(name, Some(60), &memo);
    }
    println!("criterion 8: PASS - mod-7 dissection, three lemmas, three equations, three product forms, order 60");
}

#[test]
fn criterion_09_appell_suite() {
    let memo = Memo::new();
    for name in [
        "mid1a", "mid1b", "mid1c", "mid1d", "weier", "jzqm", "fgjzmid", "himo_f121",
    ] {
        assert_pass(name, Some(40), &memo);
    }
    println!("criterion 9: PASS - Appell-Lerch suite at >= 3 generic specializations each, order 40");
}

#[test]
fn criterion_10_engine_self_consistency() {
    use qrank_core::series::series_equal;
    use qrank_core::theta::{jtheta, ParamSpec, ThetaForm};
    use qrank_core::CycloField;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    // 50 random theta arguments, sum = product to order 50
    let mut rng = StdRng::seed_from_u64(0x4a636f62);
    let order = 50;
    for i in 0..50 {
        let p: u32 = if rng.gen_bool(0.5) { 5 } else { 7 };
        let f = CycloField::new(p);
        let arg = ParamSpec {
            negated: rng.gen_bool(0.3),
            zeta_pow: rng.gen_range(0..p as i64),
            z_exp: 0,
            q_exp: rng.gen_range(-4..=8),
        };
        let base = rng.gen_range(1..=5);
        let prod = jtheta(&f, &arg, base, ThetaForm::Product, order).expect("product form");
        let sum = jtheta(&f, &arg, base, ThetaForm::Sum, order).expect("sum form");
        assert!(
            series_equal(&prod, &sum, order).unwrap().is_pass(),
            "random spec {i}: {} base {base}",
            arg.describe()
        );
    }

    // quotient and Lambert forms of R(z;q) agree symbolically to order 50
    {
        use qrank_core::rank::{rank_series, RankForm};
        use qrank_core::{LaurentRing, RatRing};
        let zr = LaurentRing::new(RatRing);
        let a = rank_series(&zr, ParamSpec::zq(1, 0), 1, RankForm::Quotient, 50).unwrap();
        let b = rank_series(&zr, ParamSpec::zq(1, 0), 1, RankForm::Lambert, 50).unwrap();
        assert!(series_equal(&a, &b, 50).unwrap().is_pass());
    }

    // f_{1,2,1} against the naive double loop to order 20
    let memo = Memo::new();
    assert_pass("f121_brute", None, &memo);
    println!("criterion 10: PASS - 50 random theta cross-checks (order 50), rank forms agree (order 50), f121 brute force (order 20)");
}

#[test]
fn criterion_11_registry_coverage_and_cli() {
    // the registry is the coverage manifest: exactly these checks exist
    let required = [
        "a50", "atkin_ops", "bigsum50", "detd_eta", "detd_expansion", "diss5_1", "diss5_2",
        "diss5_3", "dissect_roundtrip", "drc5a", "drc5b", "dyson_mod11_false", "dyson_mod5",
        "dyson_mod7", "eq1", "eq2", "eq3", "eqn71", "eqn72", "eqn73", "f121_brute", "fgjzmid",
        "fhrid", "g_m", "himo_f121", "hre12", "hre_eta2", "jacobi_triple", "jba_products",
        "jbt_k2", "jsimp", "jzqm", "mid1a", "mid1b", "mid1c", "mid1d", "mod7_products",
        "oracle_agreement", "r2r4_products", "r3_zero", "ram_congruences", "ram_full", "ram_r0",
        "ram_r1r2r4", "ram_r3", "rank_forms", "rankid1", "rankid2", "rankid3", "rankid4",
        "rtwid_def", "rtwid_phi", "rzq_g", "sift5_1", "sift5_2", "sift5_3", "t4e", "u50_left",
        "u50_lemma", "u54_lemma", "v513_reindex", "weier", "zr52dis_a", "zr52dis_b", "zr5dis",
        "zr7dis1_a", "zr7dis1_b", "zr7dis1_c", "zth7dis",
    ];
    let mut names: Vec<&str> = registry::REGISTRY.iter().map(|s| s.name).collect();
    names.sort_unstable();
    let mut want = required.to_vec();
    want.sort_unstable();
    assert_eq!(names, want, "registry does not match the coverage manifest");
    for spec in registry::REGISTRY {
        assert!(!spec.statement.is_empty());
        for dep in spec.depends {
            assert!(registry::find(dep).is_some(), "{}: unknown dependency {dep}", spec.name);
        }
    }

    // the CLI exits 0 on the full default suite
    let out = Command::new(env!("CARGO_BIN_EXE_qrank"))
        .arg("verify")
        .output()
        .expect("spawn qrank");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        out.status.success(),
        "qrank verify exited {:?}:\n{}",
        out.status.code(),
        text
    );
    assert!(text.contains(&format!("{} passed, 0 failed, 0 errored", required.len())));
    println!("criterion 11: PASS - registry covers all {} named statements; `qrank verify` exits 0", required.len());
}
