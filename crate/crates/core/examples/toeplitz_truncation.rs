//! Truncated shift operators: the disc representation, trusted blocks, and
//! the factorization of z*^N z^N.

use qhopf::opnum::{disc_rep, trusted_diff_norm, trusted_eigenvalues, ParamSet, TruncOp};
use qhopf::symalg::quantum_disc;

fn main() -> qhopf::Result<()> {
    let params = ParamSet { q: 0.5, d: 32, ..ParamSet::default() };
    let dq = quantum_disc();
    let (z, zs) = (dq.gen("z"), dq.gen("z*"));
    for n in 1..=5u32 {
        let x = &zs.pow(n) * &z.pow(n);
        let rep = disc_rep(&x, &params)?;
        let diag: Vec<f64> = (0..params.d)
            .map(|m| (1..=n as i32).map(|k| 1.0 - params.q.powi(k + m as i32)).product())
            .collect();
        let r = trusted_diff_norm(&rep, &TruncOp::diagonal(&diag))?;
        let min = trusted_eigenvalues(&rep)[0];
        println!(
            "N = {n}: trusted rows {:?}, factorization residual {r:.1e}, smallest eigenvalue {min:.6}",
            rep.trusted_range()
        );
    }
    Ok(())
}
