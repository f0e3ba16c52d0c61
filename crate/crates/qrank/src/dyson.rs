//! The combinatorial confirmation of the rank congruences: equal class
//! counts for the moduli 5 and 7, and the documented failure at 11.

use num_traits::Zero;
use qrank_core::error::KernelError;
use qrank_core::rank::{rank_oracle, RankMethod};
use qrank_core::Int;

use crate::memo::Memo;
use crate::result::CheckOutcome;

/// Per-case record: the case n, p(n), and the class counts N(r, t, n).
#[derive(Clone, Debug)]
pub struct DysonCase {
    pub n: i64,
    pub partitions: Int,
    pub classes: Vec<Int>,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct DysonReport {
    pub modulus: i64,
    pub cases: Vec<DysonCase>,
    /// For moduli 5 and 7: all classes equal. For 11: inequality confirmed
    /// with the smallest failing case being 6.
    pub confirmed: bool,
    pub smallest_failing: Option<i64>,
}

/// Scan the arithmetic progression of the modulus up to `max_case` using the
/// dp oracle, cross-checked against exhaustive enumeration for n <= 40.
pub fn dyson_report(modulus: i64, max_case: i64, memo: &Memo) -> Result<DysonReport, KernelError> {
    let (step, offset) = match modulus {
        5 => (5, 4),
        7 => (7, 5),
        11 => (11, 6),
        other => {
            return Err(KernelError::Bound(format!(
                "modulus {other} is not one of 5, 7, 11"
            )))
        }
    };
    if max_case > 400 {
        return Err(KernelError::Bound("dp oracle limited to n <= 400".into()));
    }
    if max_case < offset {
        return Err(KernelError::Bound(format!(
            "nothing to scan: the first case of modulus {modulus} is {offset}"
        )));
    }
    let table = memo.dp_table(max_case.max(offset));
    let enum_bound = if max_case < 1 { 1 } else { max_case.min(40) };
    let enum_table = rank_oracle(enum_bound, RankMethod::Enumerate)?;

    let mut cases = Vec::new();
    let mut smallest_failing = None;
    let mut n = offset;
    while n <= max_case {
        let classes = table.class_counts(modulus, n);
        if n <= enum_table.max_n() {
            assert_eq!(
                classes,
                enum_table.class_counts(modulus, n),
                "dp and enumeration disagree at n = {n}"
            );
        }
        let p = table.partitions(n);
        let per_class = &p / Int::from(modulus);
        let equal = (&p % Int::from(modulus)).is_zero()
            && classes.iter().all(|c| *c == per_class);
        if !equal && smallest_failing.is_none() {
            smallest_failing = Some(n);
        }
        cases.push(DysonCase { n, partitions: p, classes, equal });
        n += step;
    }

    let confirmed = match modulus {
        11 => smallest_failing == Some(6),
        _ => smallest_failing.is_none(),
    };
    Ok(DysonReport { modulus, cases, confirmed, smallest_failing })
}

pub fn dyson_outcome(modulus: i64, max_case: i64, memo: &Memo) -> CheckOutcome {
    match dyson_report(modulus, max_case, memo) {
        Err(e) => CheckOutcome::Error { reason: e.to_string() },
        Ok(rep) => {
            if rep.confirmed {
                CheckOutcome::Pass { order: max_case }
            } else if modulus == 11 {
                CheckOutcome::Fail {
                    exponent: rep.smallest_failing.unwrap_or(-1),
                    lhs: "expected first unequal case 6".into(),
                    rhs: format!("{:?}", rep.smallest_failing),
                }
            } else {
                let bad = rep.smallest_failing.unwrap();
                let case = rep.cases.iter().find(|c| c.n == bad).unwrap();
                CheckOutcome::Fail {
                    exponent: bad,
                    lhs: format!("classes {:?}", case.classes),
                    rhs: format!("all = p({bad})/{} = {}", modulus, case.partitions),
                }
            }
        }
    }
}
