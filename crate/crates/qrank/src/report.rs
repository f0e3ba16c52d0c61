//! Report rendering: an aligned text table or a JSON array, plus the
//! process exit policy (0 all pass, 1 any fail, 3 any error).

use std::io::Write;

use crate::result::{CheckResult, CheckStatus};

pub fn render_text(results: &[CheckResult]) -> String {
    let name_w = results.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let mut out = String::new();
    out.push_str(&format!(
        "{:<name_w$}  {:<6}  {:>5}  {:>8}  statement\n",
        "name", "status", "order", "ms"
    ));
    for r in results {
        let status = match r.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Error => "ERROR",
        };
        out.push_str(&format!(
            "{:<name_w$}  {:<6}  {:>5}  {:>8}  {}\n",
            r.name, status, r.order_checked, r.wall_ms, r.statement
        ));
        if let Some(m) = &r.first_mismatch {
            out.push_str(&format!(
                "{:<name_w$}  first mismatch at q^{}: lhs = {}, rhs = {}\n",
                "", m.exponent, m.lhs, m.rhs
            ));
        }
        if let Some(e) = &r.error {
            out.push_str(&format!("{:<name_w$}  error: {}\n", "", e));
        }
    }
    let (pass, fail, error) = tally(results);
    out.push_str(&format!("{pass} passed, {fail} failed, {error} errored\n"));
    out
}

pub fn render_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(results).expect("serializable results")
}

pub fn tally(results: &[CheckResult]) -> (usize, usize, usize) {
    let pass = results.iter().filter(|r| r.status == CheckStatus::Pass).count();
    let fail = results.iter().filter(|r| r.status == CheckStatus::Fail).count();
    let error = results.iter().filter(|r| r.status == CheckStatus::Error).count();
    (pass, fail, error)
}

/// 0 when everything passed, 1 on any FAIL, 3 on ERROR without FAIL.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    let (_, fail, error) = tally(results);
    if fail > 0 {
        1
    } else if error > 0 {
        3
    } else {
        0
    }
}

pub fn emit(results: &[CheckResult], json: bool, out: Option<&std::path::Path>) -> std::io::Result<()> {
    let body = if json { render_json(results) } else { render_text(results) };
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())
        }
        Some(path) => std::fs::write(path, body),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::result::{CheckOutcome, CheckResult};

    fn fake(name: &str, outcome: CheckOutcome) -> CheckResult {
        CheckResult::from_outcome(name, "statement", 10, outcome, 3)
    }

    #[test]
    fn exit_codes() {
        let pass = fake("a", CheckOutcome::Pass { order: 10 });
        let fail = fake("b", CheckOutcome::Fail { exponent: 2, lhs: "1".into(), rhs: "0".into() });
        let error = fake("c", CheckOutcome::Error { reason: "x".into() });
        assert_eq!(exit_code(std::slice::from_ref(&pass)), 0);
        assert_eq!(exit_code(&[pass.clone(), error.clone()]), 3);
        assert_eq!(exit_code(&[pass, fail, error]), 1);
    }

    #[test]
    fn json_has_mismatch_fields() {
        let fail = fake("b", CheckOutcome::Fail { exponent: 2, lhs: "1".into(), rhs: "0".into() });
        let j = render_json(&[fail]);
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v[0]["status"], "FAIL");
        assert_eq!(v[0]["first_mismatch"]["exponent"], 2);
        assert_eq!(v[0]["first_mismatch"]["lhs"], "1");
    }

    #[test]
    fn text_table_lists_every_check() {
        let rows = [
            fake("alpha", CheckOutcome::Pass { order: 10 }),
            fake("beta", CheckOutcome::Error { reason: "nope".into() }),
        ];
        let text = render_text(&rows);
        assert!(text.contains("alpha"));
        assert!(text.contains("ERROR"));
        assert!(text.contains("1 passed, 0 failed, 1 errored"));
    }
}
