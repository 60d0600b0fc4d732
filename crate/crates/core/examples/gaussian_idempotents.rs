//! The idempotents E_N over the two-sphere and the Podleś relations in SU_q(2).

use qhopf::symalg::{
    build_en, build_en_with, gaussian_binomial, podles_relation_defects, quantum_sphere_s3, Param,
    YAssignment, EN_CAP,
};

fn main() -> qhopf::Result<()> {
    for k in 0..=4 {
        println!("(4 choose {k})_q = {}", gaussian_binomial(4, k, Param::Q)?);
    }

    let s3 = quantum_sphere_s3();
    for n in [-2, 1, 2] {
        let data = build_en(n)?;
        println!(
            "N = {n}: Y^T X = {}, E^2 = E: {}",
            s3.format(&data.y_transpose_x()?),
            data.idempotency_defect()?.is_zero()
        );
    }
    let e1 = build_en(1)?.e;
    for i in 0..e1.rows() {
        let row: Vec<String> = (0..e1.cols()).map(|j| s3.format(e1.get(i, j))).collect();
        println!("  E_1 row {i}: [{}]", row.join(", "));
    }

    let literal = build_en_with(1, YAssignment::Literal, EN_CAP)?;
    println!("with q and p exchanged in Y: Y^T X = {}", s3.format(&literal.y_transpose_x()?));

    for (name, defect) in podles_relation_defects()? {
        println!("{name}: defect is zero: {}", defect.is_zero());
    }
    Ok(())
}
