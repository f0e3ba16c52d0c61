//! The check registry: one entry per verified statement, with a default
//! truncation order (60 for univariate pipelines, 40 for the costlier
//! two-variable and Appell-Lerch checks) and a short mathematical statement
//! of what is being compared. The registry is the coverage manifest: the
//! suite passes only when every entry passes.

use std::time::Instant;

use rayon::prelude::*;

use crate::checks;
use crate::dyson;
use crate::memo::Memo;
use crate::result::{CheckOutcome, CheckResult};

type Runner = fn(i64, &Memo) -> CheckOutcome;

pub struct CheckSpec {
    pub name: &'static str,
    pub statement: &'static str,
    pub group: &'static str,
    pub default_order: i64,
    /// Fixed-order checks (printed expansions, grid identities, oracle
    /// scans) ignore a global `--order` override.
    pub order_locked: bool,
    pub depends: &'static [&'static str],
    run: Runner,
}

fn dyson5(order: i64, memo: &Memo) -> CheckOutcome {
    dyson::dyson_outcome(5, order, memo)
}
fn dyson7(order: i64, memo: &Memo) -> CheckOutcome {
    dyson::dyson_outcome(7, order, memo)
}
fn dyson11(order: i64, memo: &Memo) -> CheckOutcome {
    dyson::dyson_outcome(11, order, memo)
}

pub static REGISTRY: &[CheckSpec] = &[
    // --- engine self-consistency ---
    CheckSpec { name: "jacobi_triple", group: "engine", default_order: 50, order_locked: false, depends: &[],
        statement: "j(z;q) bilateral sum = (z;q)(q/z;q)(q;q) product, on a battery of arguments",
        run: checks::engine::jacobi_triple },
    CheckSpec { name: "jba_products", group: "engine", default_order: 60, order_locked: false, depends: &[],
        statement: "J-product presets: E(q) = j(q;q^3) (pentagonal), theta_4 = j(q;q^2) (square sum)",
        run: checks::engine::jba_products },
    CheckSpec { name: "rank_forms", group: "engine", default_order: 60, order_locked: false, depends: &["oracle_agreement"],
        statement: "R(z;q): q^{k^2}-quotient form = Lambert form = dp table; R(1;q) = partition series",
        run: checks::engine::rank_forms },
    CheckSpec { name: "oracle_agreement", group: "oracle", default_order: 40, order_locked: true, depends: &[],
        statement: "exhaustive partition walk and dp fill give the same N(m,n) for n <= 40",
        run: checks::engine::oracle_agreement },
    CheckSpec { name: "ram_congruences", group: "oracle", default_order: 200, order_locked: false, depends: &[],
        statement: "p(5n+4) = 0 mod 5, p(7n+5) = 0 mod 7, p(11n+6) = 0 mod 11 on the series",
        run: checks::engine::ram_congruences },
    CheckSpec { name: "dyson_mod5", group: "oracle", default_order: 154, order_locked: true, depends: &["oracle_agreement"],
        statement: "N(r,5,5n+4) equal for all r and = p(5n+4)/5, every 5n+4 <= 154",
        run: dyson5 },
    CheckSpec { name: "dyson_mod7", group: "oracle", default_order: 152, order_locked: true, depends: &["oracle_agreement"],
        statement: "N(r,7,7n+5) equal for all r and = p(7n+5)/7, every 7n+5 <= 152",
        run: dyson7 },
    CheckSpec { name: "dyson_mod11_false", group: "oracle", default_order: 61, order_locked: true, depends: &["oracle_agreement"],
        statement: "the mod-11 analogue fails, first at n = 6",
        run: dyson11 },
    CheckSpec { name: "f121_brute", group: "engine", default_order: 20, order_locked: true, depends: &[],
        statement: "f_{1,2,1} lattice enumeration = naive box double loop, symbolic and specialized",
        run: checks::engine::f121_brute },
    CheckSpec { name: "dissect_roundtrip", group: "engine", default_order: 60, order_locked: false, depends: &[],
        statement: "p-dissection followed by reassembly is the identity",
        run: checks::engine::dissect_roundtrip },
    CheckSpec { name: "atkin_ops", group: "engine", default_order: 60, order_locked: false, depends: &[],
        statement: "U_{p,m} = A_{p,m} after U*_{p,m}; the U* pieces tile; U_{p,0} inverts q -> q^p",
        run: checks::engine::atkin_ops },
    // --- the two-variable double-sum identities ---
    CheckSpec { name: "rankid1", group: "hecke", default_order: 60, order_locked: false, depends: &[],
        statement: "(zq)(q/z... kernel) R(z;q) equals the halved two-range double sum, symbolic z, integer coefficients",
        run: checks::hecke::rankid1 },
    CheckSpec { name: "rankid2", group: "hecke", default_order: 60, order_locked: false, depends: &[],
        statement: "(zq)(z^{-1}q)(q) R(z;q^2) equals the (1-q^{2n+1})-weighted double sum, symbolic z",
        run: checks::hecke::rankid2 },
    CheckSpec { name: "rankid3", group: "hecke", default_order: 60, order_locked: false, depends: &[],
        statement: "(1+z)(z^2q)(z^{-2}q)(q) R(z;q) equals the (z^{n+1}+z^{-n})-weighted double sum",
        run: checks::hecke::rankid3 },
    CheckSpec { name: "rankid4", group: "hecke", default_order: 60, order_locked: false, depends: &[],
        statement: "(1+z)(z^2q^2;q^2)(z^{-2}q^2;q^2)(q^2;q^2) R(z;q) equals the two-triangle double sum",
        run: checks::hecke::rankid4 },
    CheckSpec { name: "fhrid", group: "hecke", default_order: 40, order_locked: false, depends: &["rankid3"],
        statement: "f_{1,2,1}(z^{-1}q,z^{-2}q,q) + z f_{1,2,1}(zq,z^2q,q) = the rankid3 double sum",
        run: checks::hecke::fhrid },
    CheckSpec { name: "hre_eta2", group: "hecke", default_order: 60, order_locked: false, depends: &["rankid1"],
        statement: "Rogers' double sum for E(q)^2, and rankid1 at z = 1 reproduces it",
        run: checks::hecke::hre_eta2 },
    CheckSpec { name: "hre12", group: "hecke", default_order: 60, order_locked: false, depends: &[],
        statement: "the one-sided E(q)^2 double sum",
        run: checks::hecke::hre12 },
    CheckSpec { name: "t4e", group: "hecke", default_order: 60, order_locked: false, depends: &["rankid2"],
        statement: "theta_4 E = E^3/(q^2;q^2) = the rankid2 double sum at z = 1",
        run: checks::hecke::t4e },
    CheckSpec { name: "jbt_k2", group: "hecke", default_order: 40, order_locked: false, depends: &["rankid2"],
        statement: "theta-kernel instance behind rankid2: j(q^{2-2n};q^6) closed form and the Legendre-weighted reindex",
        run: checks::hecke::jbt_k2 },
    // --- Appell-Lerch suite ---
    CheckSpec { name: "mid1a", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "m(x,q,z) = m(x,q,qz) at >= 3 generic specializations",
        run: checks::appell::mid1a },
    CheckSpec { name: "mid1b", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "m(x,q,z) = x^{-1} m(x^{-1},q,z^{-1}) at >= 3 generic specializations",
        run: checks::appell::mid1b },
    CheckSpec { name: "mid1c", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "m(qx,q,z) = 1 - x m(x,q,z) at >= 3 generic specializations",
        run: checks::appell::mid1c },
    CheckSpec { name: "mid1d", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "m(x,q,z1) - m(x,q,z0) = theta quotient, at >= 3 generic specializations",
        run: checks::appell::mid1d },
    CheckSpec { name: "weier", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "three-term theta relation j(d)j(b/c)j(abc)j(ad) - j(b)j(d/c)j(acd)j(ab) + (b/c)j(c)j(abd)j(ac)j(d/b) = 0",
        run: checks::appell::weier },
    CheckSpec { name: "jzqm", group: "appell", default_order: 40, order_locked: false, depends: &["mid1d"],
        statement: "the four-term = two-term base-q^3 Appell rearrangement lemma",
        run: checks::appell::jzqm },
    CheckSpec { name: "rzq_g", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "R(z;q) = (1-z)(1 + z g(z,q)) at roots of unity",
        run: checks::appell::rzq_g },
    CheckSpec { name: "g_m", group: "appell", default_order: 40, order_locked: false, depends: &[],
        statement: "g(z,q) = -z^{-2} m(z^{-3}q,q^3,z^2) - z^{-1} m(z^{-3}q^2,q^3,z^2)",
        run: checks::appell::g_m },
    CheckSpec { name: "fgjzmid", group: "appell", default_order: 40, order_locked: false, depends: &["himo_f121", "jzqm"],
        statement: "the g-combination equals j(z^2;q)(m(z^3q,q^3,z^{-2}) - z^{-1} m(z^{-3}q,q^3,z^2))",
        run: checks::appell::fgjzmid },
    CheckSpec { name: "himo_f121", group: "appell", default_order: 30, order_locked: false, depends: &["f121_brute"],
        statement: "f_{1,2,1}(x,y,q) = g_{1,2,1}(x,y,q,y/x,x/y) at generic x, y",
        run: checks::appell::himo_f121 },
    // --- mod 5 pipeline ---
    CheckSpec { name: "diss5_1", group: "mod5", default_order: 60, order_locked: false, depends: &[],
        statement: "(zeta q)(zeta^{-1}q)(q) = J_{25,10} + q(zeta^2+zeta^{-2}) J_{25,5}",
        run: checks::mod5::diss5_1 },
    CheckSpec { name: "diss5_2", group: "mod5", default_order: 60, order_locked: false, depends: &[],
        statement: "E(q) = J_25 (J_{25,10}/J_{25,5} - q - q^2 J_{25,5}/J_{25,10})",
        run: checks::mod5::diss5_2 },
    CheckSpec { name: "diss5_3", group: "mod5", default_order: 60, order_locked: false, depends: &[],
        statement: "theta_4 = J_{50,25} - 2q J_{50,15} + 2q^4 J_{50,5}",
        run: checks::mod5::diss5_3 },
    CheckSpec { name: "sift5_1", group: "mod5", default_order: 60, order_locked: false, depends: &["diss5_2"],
        statement: "U_{5,2}(E^2) = -J_5^2",
        run: checks::mod5::sift5_1 },
    CheckSpec { name: "sift5_2", group: "mod5", default_order: 60, order_locked: false, depends: &["diss5_2", "diss5_3"],
        statement: "U_{5,3}(theta_4 E) = 2 J_5 J_{5,1} J_{10,3} / J_{5,2}",
        run: checks::mod5::sift5_2 },
    CheckSpec { name: "sift5_3", group: "mod5", default_order: 60, order_locked: false, depends: &["diss5_2", "diss5_3"],
        statement: "U_{5,4}(theta_4 E) = 2 J_5 J_{5,2} J_{10,1} / J_{5,1}",
        run: checks::mod5::sift5_3 },
    CheckSpec { name: "zr5dis", group: "mod5", default_order: 60, order_locked: false, depends: &["rankid1", "sift5_1"],
        statement: "U_{5,2} of the zeta-kernel times R(zeta,q) = -J_5^2, three routes",
        run: checks::mod5::zr5dis },
    CheckSpec { name: "zr52dis_a", group: "mod5", default_order: 60, order_locked: false, depends: &["rankid2", "sift5_2"],
        statement: "U_{5,3} of the zeta-kernel times R(zeta,q^2) = (zeta^2+zeta^3) J_5 J_{5,1} J_{10,3}/J_{5,2}",
        run: checks::mod5::zr52dis_a },
    CheckSpec { name: "zr52dis_b", group: "mod5", default_order: 60, order_locked: false, depends: &["rankid2", "sift5_3"],
        statement: "U_{5,4} of the zeta-kernel times R(zeta,q^2) = (zeta+zeta^4) J_5 J_{5,2} J_{10,1}/J_{5,1}",
        run: checks::mod5::zr52dis_b },
    CheckSpec { name: "drc5a", group: "mod5", default_order: 60, order_locked: false, depends: &[],
        statement: "U_{5,4}(R(zeta_5,q)) = 0: the mod-5 rank congruence as a series statement",
        run: checks::mod5::drc5a },
    CheckSpec { name: "drc5b", group: "mod5", default_order: 60, order_locked: false, depends: &[],
        statement: "U_{5,3}(R(zeta_5,q^2)) = 0: the equivalent base-q^2 statement",
        run: checks::mod5::drc5b },
    CheckSpec { name: "eq1", group: "mod5", default_order: 60, order_locked: false, depends: &["zr5dis"],
        statement: "(zeta^2+zeta^3) J_{10,2} R_2 + J_{10,4} R_4 = -J_10^2",
        run: checks::mod5::eq1 },
    CheckSpec { name: "eq2", group: "mod5", default_order: 60, order_locked: false, depends: &["zr52dis_a"],
        statement: "(zeta^2+zeta^3) J_{5,1} R_2 + J_{5,2} R_3 = (zeta^2+zeta^3) J_{5,1} J_5 J_{10,3}/J_{5,2}",
        run: checks::mod5::eq2 },
    CheckSpec { name: "eq3", group: "mod5", default_order: 60, order_locked: false, depends: &["zr52dis_b"],
        statement: "(zeta^2+zeta^3) J_{5,1} R_3 + J_{5,2} R_4 = (zeta+zeta^4) J_{5,2} J_5 J_{10,1}/J_{5,1}",
        run: checks::mod5::eq3 },
    CheckSpec { name: "r3_zero", group: "mod5", default_order: 60, order_locked: false, depends: &["eq1", "eq2", "eq3"],
        statement: "R_3 = 0, by direct dissection and by the solved linear system over detD",
        run: checks::mod5::r3_zero },
    CheckSpec { name: "detd_expansion", group: "mod5", default_order: 11, order_locked: true, depends: &[],
        statement: "detD = 1 - 6q + 10q^2 + 4q^3 - 19q^4 - 10q^6 + 64q^7 - 9q^8 - 66q^9 - 40q^11 + ...",
        run: checks::mod5::detd_expansion },
    CheckSpec { name: "detd_eta", group: "mod5", default_order: 100, order_locked: false, depends: &["detd_expansion"],
        statement: "detD = J_10^3 J_1^6 / (J_5^2 J_2)",
        run: checks::mod5::detd_eta },
    CheckSpec { name: "jsimp", group: "mod5", default_order: 60, order_locked: false, depends: &[],
        statement: "J_{10,1}J_{10,4}/J_10^2 = J_{5,1}/J_5 and J_{10,2}J_{10,3}/J_10^2 = J_{5,3}/J_5",
        run: checks::mod5::jsimp },
    CheckSpec { name: "r2r4_products", group: "mod5", default_order: 60, order_locked: false, depends: &["r3_zero"],
        statement: "R_2 = J_10^2/J_{10,2} and R_4 = -(1+zeta^2+zeta^3) J_10^2/J_{10,4}",
        run: checks::mod5::r2r4_products },
    // --- Lost Notebook dissection ---
    CheckSpec { name: "ram_r1r2r4", group: "ramanujan", default_order: 60, order_locked: false, depends: &["drc5a", "r2r4_products"],
        statement: "components of R(zeta,q): R_1 = J_5^2/J_{5,1}, R_2 = (zeta+zeta^4)J_5^2/J_{5,2}, R_4 = 0",
        run: checks::ramanujan::ram_r1r2r4 },
    CheckSpec { name: "ram_r0", group: "ramanujan", default_order: 60, order_locked: false, depends: &["u50_lemma"],
        statement: "R_0 = J_5^2 J_{5,2}/J_{5,1}^2 + (zeta^4+zeta-2) phi",
        run: checks::ramanujan::ram_r0 },
    CheckSpec { name: "ram_r3", group: "ramanujan", default_order: 60, order_locked: false, depends: &["u54_lemma"],
        statement: "R_3 = -(zeta^4+zeta) J_{5,1} J_5^2/J_{5,2}^2 + (2zeta^3+2zeta^2+1) psi/q",
        run: checks::ramanujan::ram_r3 },
    CheckSpec { name: "ram_full", group: "ramanujan", default_order: 60, order_locked: false, depends: &["ram_r0", "ram_r3", "ram_r1r2r4"],
        statement: "the assembled 5-dissection of R(zeta,q) into A, B, C, D, phi, psi on base q^5, in Z[zeta]",
        run: checks::ramanujan::ram_full },
    CheckSpec { name: "rtwid_def", group: "ramanujan", default_order: 60, order_locked: false, depends: &[],
        statement: "the (1+z)-kernel at z = zeta equals j(zeta^2;q)/(1-zeta) times R(zeta,q)",
        run: checks::ramanujan::rtwid_def },
    CheckSpec { name: "u50_lemma", group: "ramanujan", default_order: 60, order_locked: false, depends: &["bigsum50", "a50"],
        statement: "U_{5,0}(Rt(zeta,q)) = (1+zeta)J_5^2J_{5,2}^2/J_{5,1}^2 - (2+2zeta+zeta^3)(Rt(q,q^5)-J_{5,2})",
        run: checks::ramanujan::u50_lemma },
    CheckSpec { name: "u54_lemma", group: "ramanujan", default_order: 60, order_locked: false, depends: &["bigsum50", "a50"],
        statement: "U_{5,4}(Rt(zeta,q)) = (zeta^2+zeta^4)J_5^2J_{5,1}^2/J_{5,2}^2 - (2+2zeta+zeta^3)(Rt(q^2,q^5)-J_{5,1})/q",
        run: checks::ramanujan::u54_lemma },
    CheckSpec { name: "v513_reindex", group: "ramanujan", default_order: 60, order_locked: true, depends: &[],
        statement: "V(5n+1,-5j-1) = 5(5V(n,j)-n), V(5n+3,-5j-1) = 5(5V(n,j)+n+1), and the j-range equivalences",
        run: checks::ramanujan::v513_reindex },
    CheckSpec { name: "a50", group: "ramanujan", default_order: 60, order_locked: false, depends: &["v513_reindex", "rankid3"],
        statement: "A_{5,0} of the S2-filtered double sum = Rt(q,q^5) - J_{5,2}",
        run: checks::ramanujan::a50 },
    CheckSpec { name: "bigsum50", group: "ramanujan", default_order: 60, order_locked: false, depends: &["diss5_2", "hre12"],
        statement: "the S1-filtered double sum = U*_{5,0}(E^2) = J_25^2 J_{25,10}^2/J_{25,5}^2",
        run: checks::ramanujan::bigsum50 },
    CheckSpec { name: "rtwid_phi", group: "ramanujan", default_order: 60, order_locked: false, depends: &[],
        statement: "Rt(q,q^5) = J_{5,2}(1 + phi(q))",
        run: checks::ramanujan::rtwid_phi },
    CheckSpec { name: "u50_left", group: "ramanujan", default_order: 60, order_locked: false, depends: &["diss5_1", "ram_r1r2r4"],
        statement: "U_{5,0}(Rt(zeta,q)) = (1+zeta) J_{5,2} R_0(q)",
        run: checks::ramanujan::u50_left },
    // --- mod 7 system ---
    CheckSpec { name: "zth7dis", group: "mod7", default_order: 60, order_locked: false, depends: &[],
        statement: "(zeta q)(zeta^{-1}q)(q) = J_{49,21} + q(zeta^2+..+zeta^5)J_{49,14} - q^3(zeta^3+zeta^4)J_{49,7}",
        run: checks::mod7::zth7dis },
    CheckSpec { name: "zr7dis1_a", group: "mod7", default_order: 60, order_locked: false, depends: &["rankid1", "zth7dis"],
        statement: "U_{7,4} of the zeta_7-kernel times R(zeta,q) = J_7^2",
        run: checks::mod7::zr7dis1_a },
    CheckSpec { name: "zr7dis1_b", group: "mod7", default_order: 60, order_locked: false, depends: &["rankid3", "zth7dis"],
        statement: "U_{7,4} of the (1+zeta)-kernel times R(zeta,q) = 2 zeta^4 J_7^2",
        run: checks::mod7::zr7dis1_b },
    CheckSpec { name: "zr7dis1_c", group: "mod7", default_order: 60, order_locked: false, depends: &["rankid4", "zth7dis"],
        statement: "U_{7,3} of the base-q^2 (1+zeta)-kernel times R(zeta,q) = 2 zeta^4 J_14^3/J_7",
        run: checks::mod7::zr7dis1_c },
    CheckSpec { name: "eqn71", group: "mod7", default_order: 60, order_locked: false, depends: &["zr7dis1_a"],
        statement: "-(z^4+z^3)J_{7,1}R_1 + (z^5+z^4+z^3+z^2)J_{7,2}R_3 + J_{7,3}R_4 = J_7^2",
        run: checks::mod7::eqn71 },
    CheckSpec { name: "eqn72", group: "mod7", default_order: 60, order_locked: false, depends: &["zr7dis1_b"],
        statement: "(z^5+z^4+z^3)J_{7,1}R_1 + z^4 J_{7,2}R_3 + (z+1)J_{7,3}R_4 = 2 z^4 J_7^2",
        run: checks::mod7::eqn72 },
    CheckSpec { name: "eqn73", group: "mod7", default_order: 60, order_locked: false, depends: &["zr7dis1_c"],
        statement: "z^4 J_{14,4}R_1 + (z+1)J_{14,6}R_3 + (z^5+z^4+z^3) q J_{14,2}R_4 = 2 z^4 q J_14^3/J_7",
        run: checks::mod7::eqn73 },
    CheckSpec { name: "mod7_products", group: "mod7", default_order: 60, order_locked: false, depends: &["eqn71", "eqn72", "eqn73"],
        statement: "R_1 = J_7^2/J_{7,1}, R_3 = (z^5+z^2+1)J_7^2/J_{7,2}, R_4 = -(z^5+z^2)J_7^2/J_{7,3}",
        run: checks::mod7::mod7_products },
];

pub fn find(name: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// Resolve the order a check should run at.
pub fn effective_order(spec: &CheckSpec, requested: Option<i64>) -> i64 {
    match requested {
        Some(n) if !spec.order_locked => n,
        _ => spec.default_order,
    }
}

/// Run one registered check.
pub fn run_check(name: &str, order: Option<i64>, memo: &Memo) -> Option<CheckResult> {
    let spec = find(name)?;
    let n = effective_order(spec, order);
    let start = Instant::now();
    let outcome = (spec.run)(n, memo);
    Some(CheckResult::from_outcome(
        spec.name,
        spec.statement,
        n,
        outcome,
        start.elapsed().as_millis() as u64,
    ))
}

/// Run a set of checks (the full registry when `names` is empty), optionally
/// in parallel, returning results sorted by name regardless of schedule.
pub fn run_all(
    names: &[String],
    order: Option<i64>,
    parallel: bool,
) -> Result<Vec<CheckResult>, String> {
    let selected: Vec<&CheckSpec> = if names.is_empty() {
        REGISTRY.iter().collect()
    } else {
        let mut sel = Vec::new();
        for n in names {
            sel.push(find(n).ok_or_else(|| format!("unregistered check: {n}"))?);
        }
        sel
    };
    let memo = Memo::new();
    let mut results: Vec<CheckResult> = if parallel {
        selected
            .par_iter()
            .map(|spec| run_check(spec.name, order, &memo).expect("registered"))
            .collect()
    } else {
        selected
            .iter()
            .map(|spec| run_check(spec.name, order, &memo).expect("registered"))
            .collect()
    };
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(results)
}
