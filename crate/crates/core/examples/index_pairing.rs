//! Index pairings of the projections chi_N and E_N with both Fredholm modules.

use qhopf::kpair::{index_table, pair, FredholmModule, ModuleKind, PairMatrix, Representative, PR_ORIENTATION};
use qhopf::glue::en_numeric;
use qhopf::opnum::ParamSet;

fn main() -> qhopf::Result<()> {
    let params = ParamSet::default();
    println!("{PR_ORIENTATION}");
    let rows = index_table(-3, 3, &[Representative::Chi], &[ModuleKind::Pr, ModuleKind::PiSigma], &params)?;
    for row in rows {
        println!(
            "<{}, chi_{}> = {} (exact: {}, {})",
            row.module.name(),
            row.n,
            row.result.rounded,
            row.result.exact,
            row.interpretation
        );
    }
    for n in -2..=2 {
        let m: PairMatrix = en_numeric(n, &params)?.into();
        let pr = pair(&FredholmModule::pr_pair(params), &m)?;
        let pi = pair(&FredholmModule::pi_sigma_pair(params), &m)?;
        println!("<pr, E_{n}> = {:.6}, <pi, E_{n}> = {:.6}", pr.value.re, pi.value.re);
    }
    Ok(())
}
