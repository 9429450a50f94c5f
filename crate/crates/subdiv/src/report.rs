use std::fmt::Write as _;

use subdiv_core::diagnostics::DiagnosticsReport;

pub const REPORT_HEADER: &str = "k,mask_gap,dA_residual,quasi_residual,pert_residual,grad_norm";

/// One row per level under [`REPORT_HEADER`].
pub fn report_csv(report: &DiagnosticsReport) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for r in &report.levels {
        writeln!(
            out,
            "{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.level, r.mask_gap, r.d_a_residual, r.quasi_residual, r.pert_residual, r.grad_norm
        )
        .unwrap();
    }
    out
}
