//! A presentation written as text, reduced, and printed back.

use qhopf::symalg::{normal_form, parse_polynomial, parse_presentation, to_text};

const TEXT: &str = "\
presentation twisted-plane
generator x weight 1
generator y weight -1
adjoint x = 1 y
# y x = q^2 x y + (1 - q^2)
rule y x -> q^2 x y + 1 - q^2
";

fn main() -> qhopf::Result<()> {
    let p = parse_presentation(TEXT)?;
    for src in ["y x x", "y y x x", "(x + y)^2"] {
        let x = parse_polynomial(src, &p)?;
        println!("{src} = {}", p.format(&normal_form(&x, &p)?));
    }
    print!("{}", to_text(&p));
    Ok(())
}
