//! Normal forms in the quantum disc and the quantum three-sphere.

use qhopf::symalg::{normal_form, quantum_disc, quantum_sphere_s3, verify_identity};

fn main() -> qhopf::Result<()> {
    let dq = quantum_disc();
    let (z, zs) = (dq.gen("z"), dq.gen("z*"));
    for n in 1..=4 {
        let x = &zs * &z.pow(n);
        println!("z* z^{n} = {}", dq.format(&normal_form(&x, &dq)?));
    }

    let s3 = quantum_sphere_s3();
    let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
    // b sits between a and a*, so the gluing rule needs the commutation of a with b.
    let x = &(&(&a * &b) * &a_s) * &b_s;
    println!("a b a* b* = {}", s3.format(&normal_form(&x, &s3)?));

    let check = verify_identity(&(&a_s * &a), &(&a * &a_s), &s3)?;
    println!("a*a = aa*? {} (difference {})", check.holds, s3.format(&check.witness));
    Ok(())
}
