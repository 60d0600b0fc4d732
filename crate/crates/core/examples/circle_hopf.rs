//! Hopf structure of Laurent polynomials in U and the map W.

use qhopf::circle::{hopf_antipode, hopf_coproduct, hopf_counit, tensor_map, w_inverse, w_map, LaurentPoly};
use qhopf::symalg::CoefPoly;

fn main() {
    let f = LaurentPoly::from_terms([(-1, CoefPoly::integer(2)), (3, CoefPoly::q())]);
    let delta = hopf_coproduct(&f);
    println!("Delta f has {} terms", delta.terms().count());
    println!("eps(f) = {}", hopf_counit(&f));
    let s = tensor_map(&delta, hopf_antipode, |x| x.clone()).multiply_legs();
    println!("m(kappa (x) id) Delta f = {:?}", s.terms().collect::<Vec<_>>());

    let g = f.tensor(&LaurentPoly::u_pow(2));
    let wg = w_map(&g);
    for ((m, n), c) in wg.terms() {
        println!("W: {c} U^{m} (x) U^{n}");
    }
    assert_eq!(w_inverse(&wg), g);
}
