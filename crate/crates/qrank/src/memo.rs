//! Shared heavyweight series, built once per runner and immutable after.
//!
//! The dissection pipelines all start from R(zeta_p, q) or R(zeta_5, q^2) at
//! roughly 5x-7x the check order; several checks share each of these, so they
//! are memoized behind `OnceLock`. A request beyond the memoized order just
//! computes fresh (this only happens when the user forces an unusually large
//! `--order`).

use std::sync::OnceLock;

use qrank_core::rank::{rank_oracle, rank_series, RankForm, RankMethod, RankTable};
use qrank_core::series::QSeries;
use qrank_core::theta::ParamSpec;
use qrank_core::CycloField;

const R5_ORDER: i64 = 312;
const R52_ORDER: i64 = 312;
const R7_ORDER: i64 = 428;
const DP_ORDER: i64 = 160;

#[derive(Default)]
pub struct Memo {
    r5_q: OnceLock<QSeries<CycloField>>,
    r5_q2: OnceLock<QSeries<CycloField>>,
    r7_q: OnceLock<QSeries<CycloField>>,
    dp: OnceLock<RankTable>,
}

impl Memo {
    pub fn new() -> Self {
        Memo::default()
    }

    /// R(zeta_5, q) to at least `order`.
    pub fn r_zeta5_q(&self, order: i64) -> QSeries<CycloField> {
        let f5 = CycloField::new(5);
        if order <= R5_ORDER {
            let s = self.r5_q.get_or_init(|| {
                rank_series(&f5, ParamSpec::wq(1, 0), 1, RankForm::Quotient, R5_ORDER)
                    .expect("R(zeta5, q)")
            });
            return s.truncate_to(order).expect("memoized order");
        }
        rank_series(&f5, ParamSpec::wq(1, 0), 1, RankForm::Quotient, order).expect("R(zeta5, q)")
    }

    /// R(zeta_5, q^2) to at least `order`.
    pub fn r_zeta5_q2(&self, order: i64) -> QSeries<CycloField> {
        let f5 = CycloField::new(5);
        if order <= R52_ORDER {
            let s = self.r5_q2.get_or_init(|| {
                rank_series(&f5, ParamSpec::wq(1, 0), 2, RankForm::Quotient, R52_ORDER)
                    .expect("R(zeta5, q^2)")
            });
            return s.truncate_to(order).expect("memoized order");
        }
        rank_series(&f5, ParamSpec::wq(1, 0), 2, RankForm::Quotient, order).expect("R(zeta5, q^2)")
    }

    /// R(zeta_7, q) to at least `order`.
    pub fn r_zeta7_q(&self, order: i64) -> QSeries<CycloField> {
        let f7 = CycloField::new(7);
        if order <= R7_ORDER {
            let s = self.r7_q.get_or_init(|| {
                rank_series(&f7, ParamSpec::wq(1, 0), 1, RankForm::Quotient, R7_ORDER)
                    .expect("R(zeta7, q)")
            });
            return s.truncate_to(order).expect("memoized order");
        }
        rank_series(&f7, ParamSpec::wq(1, 0), 1, RankForm::Quotient, order).expect("R(zeta7, q)")
    }

    /// The dp rank table to at least `max_n` (hard oracle limit 400).
    pub fn dp_table(&self, max_n: i64) -> RankTable {
        if max_n <= DP_ORDER {
            return self
                .dp
                .get_or_init(|| rank_oracle(DP_ORDER, RankMethod::Dp).expect("dp table"))
                .clone();
        }
        rank_oracle(max_n, RankMethod::Dp).expect("dp table")
    }
}
