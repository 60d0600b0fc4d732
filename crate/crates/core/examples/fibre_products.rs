//! Pairs of operators glued along the circle: the embedding of the
//! three-sphere, the Podleś generators, and the twist isomorphism.

use qhopf::glue::{chi, extract_degree, iota, podles_generators, podles_residuals, psi_iso, PSI_ORIENTATION};
use qhopf::opnum::ParamSet;
use qhopf::symalg::quantum_sphere_s3;

fn main() -> qhopf::Result<()> {
    let params = ParamSet { q: 0.6, p: 0.4, s: 0.8, d: 48, ..ParamSet::default() };
    let s3 = quantum_sphere_s3();
    let x = &s3.gen("a*") * &s3.gen("a*");
    let e = iota(&x, &params)?;
    println!("iota(a*^2) has degrees {:?}, W-compatible: {}", e.degrees(), e.is_w_compatible());

    let pair = extract_degree(&e, 2)?.expect("degree 2 part");
    let flat = psi_iso(&pair)?;
    let stable = flat.mul(&chi(-2, params.d)?)?.diff_norm(&flat)?;
    println!("{PSI_ORIENTATION}");
    println!("  distance of Psi_2(pair) from its chi_-2 compression: {stable:.1e}");

    let pp = podles_generators(&params)?;
    for (name, r) in podles_residuals(&pp, &params)? {
        println!("{name}: {r:.1e}");
    }
    Ok(())
}
