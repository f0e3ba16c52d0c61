//! Named building-block series for the `series` subcommand: exact
//! coefficients of any registered expansion, one exponent per line.

use qrank_core::rank::{partition_counts, ramanujan_phi, ramanujan_psi};
use qrank_core::series::QSeries;
use qrank_core::theta::{euler_e, theta4};
use qrank_core::{IntRing, Ring};

use crate::checks::mod5::detd_series;
use crate::memo::Memo;

pub const SERIES_NAMES: &[(&str, &str)] = &[
    ("e", "E(q) = (q;q)_inf"),
    ("theta4", "theta_4(q) = sum (-1)^n q^{n^2}"),
    ("partitions", "1/(q;q)_inf = sum p(n) q^n"),
    ("detd", "J_{5,1}^4 J_{10,4}^2 + J_{5,1}^2 J_{5,2}^2 J_{10,2} J_{10,4} - J_{5,2}^4 J_{10,2}^2"),
    ("detd_eta", "J_10^3 J_1^6 / (J_5^2 J_2)"),
    ("phi", "-1 + sum q^{5n^2} / ((q;q^5)_{n+1} (q^4;q^5)_n)"),
    ("psi", "-1 + sum q^{5n^2} / ((q^2;q^5)_{n+1} (q^3;q^5)_n)"),
    ("r_zeta5", "R(zeta_5, q), coefficients in Q(zeta_5)"),
    ("r_zeta7", "R(zeta_7, q), coefficients in Q(zeta_7)"),
];

/// Exact coefficient lines (exponent, rendered coefficient) of a registered
/// series.
pub fn series_terms(name: &str, order: i64, memo: &Memo) -> Result<Vec<(i64, String)>, String> {
    fn lines<R: Ring>(s: &QSeries<R>) -> Vec<(i64, String)> {
        s.terms().map(|(e, c)| (e, s.ring().render(c))).collect()
    }
    let jq = |factors: &[(i64, i64, i64)]| {
        crate::checks::jq(&IntRing, factors, order).map_err(|e| e.to_string())
    };
    match name {
        "e" => Ok(lines(&euler_e(&IntRing, order))),
        "theta4" => Ok(lines(&theta4(&IntRing, order))),
        "partitions" => {
            let p = partition_counts(order);
            let s = QSeries::from_fn(IntRing, 0, order, |e| p[e as usize].clone());
            Ok(lines(&s))
        }
        "detd" => Ok(lines(&detd_series(order).map_err(|e| e.to_string())?)),
        "detd_eta" => Ok(lines(&jq(&[(10, 0, 3), (1, 0, 6), (5, 0, -2), (2, 0, -1)])?)),
        "phi" => Ok(lines(&ramanujan_phi(&IntRing, order).map_err(|e| e.to_string())?)),
        "psi" => Ok(lines(&ramanujan_psi(&IntRing, order).map_err(|e| e.to_string())?)),
        "r_zeta5" => Ok(lines(&memo.r_zeta5_q(order))),
        "r_zeta7" => Ok(lines(&memo.r_zeta7_q(order))),
        other => Err(format!(
            "unknown series: {other} (known: {})",
            SERIES_NAMES.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_series_head() {
        let memo = Memo::new();
        let lines = series_terms("partitions", 10, &memo).unwrap();
        assert_eq!(lines[0], (0, "1".to_string()));
        assert_eq!(lines[4], (4, "5".to_string()));
        assert_eq!(lines[10], (10, "42".to_string()));
    }

    #[test]
    fn unknown_series_is_an_error() {
        let memo = Memo::new();
        assert!(series_terms("nope", 5, &memo).is_err());
    }

    #[test]
    fn cyclotomic_series_renders() {
        let memo = Memo::new();
        let lines = series_terms("r_zeta5", 4, &memo).unwrap();
        // q^4 coefficient of R(zeta_5, q) vanishes
        assert_eq!(lines[4], (4, "0".to_string()));
        // zeta + zeta^4 in the reduced basis
        assert_eq!(lines[2].1, "-1 - w^2 - w^3");
    }
}
