//! Plain-text renderers. All output is deterministic: fixed orderings,
//! fixed padding, LF line endings.

use hosoya_core::eigen::EigenPair;
use hosoya_core::identities::IdentityCheck;
use hosoya_core::ExactMatrix;

pub fn matrix_text(m: &ExactMatrix) -> String {
    let rows = m.entry_strings();
    let width = rows
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn matrix_csv(m: &ExactMatrix) -> String {
    let mut out = String::new();
    for row in m.entry_strings() {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn triangle_csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn eigen_text(pairs: &[EigenPair]) -> String {
    let mut out = String::new();
    for pair in pairs {
        out.push_str(&format!(
            "eigenvalue {} (multiplicity {})\n",
            pair.value, pair.multiplicity
        ));
        for w in &pair.eigenvectors {
            let entries: Vec<String> = w.iter().map(ToString::to_string).collect();
            out.push_str(&format!("  [{}]\n", entries.join(", ")));
        }
    }
    out
}

pub fn verify_text(checks: &[IdentityCheck]) -> String {
    let mut out = String::new();
    let mut equal = 0usize;
    for check in checks {
        if check.is_equal() {
            equal += 1;
        } else {
            let params: Vec<String> = check.params.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "mismatch {}({}): lhs = {}, rhs = {}\n",
                check.identity,
                params.join(","),
                check.lhs,
                check.rhs
            ));
        }
    }
    out.push_str(&format!(
        "total {}, equal {}, mismatch {}\n",
        checks.len(),
        equal,
        checks.len() - equal
    ));
    out
}

pub fn check_text(check: &IdentityCheck) -> String {
    let params: Vec<String> = check.params.iter().map(ToString::to_string).collect();
    format!(
        "{}({}): {}\n",
        check.identity,
        params.join(","),
        check.verdict.as_str()
    )
}
