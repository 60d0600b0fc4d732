//! Presentations of *-algebras by generators, rewrite rules and a grading.
//!
//! Words are compared first by length, then by letter content, then by the
//! number of inversions with respect to the declaration order of the
//! generators. Letter content compares the letter counts, starting from the
//! first declared generator: fewer occurrences of an earlier letter means a
//! smaller word. A rule `lhs -> rhs` is admissible when every word of `rhs`
//! is smaller than `lhs`. The order is well founded and compatible with
//! concatenation, so reduction terminates.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::coef::{CoefPoly, Param};
use super::ncpoly::{Letter, NCPoly, Word};
use crate::error::{Error, Result};

/// One letter of a presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub name: String,
    /// Integer weight under the circle grading.
    pub weight: i64,
    /// `letter* = coefficient * adjoint_letter`.
    pub adjoint: (CoefPoly, Letter),
}

/// A single oriented relation `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    name: String,
    generators: Vec<Generator>,
    rules: Vec<Rule>,
    commuting: Vec<Vec<bool>>,
}

impl Presentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| Letter(i as u8))
    }

    /// Panicking lookup for names known to exist in a preset.
    pub fn gen(&self, name: &str) -> NCPoly {
        let l = self
            .letter(name)
            .unwrap_or_else(|| panic!("no generator `{name}` in {}", self.name));
        NCPoly::letter(l)
    }

    pub fn word(&self, names: &[&str]) -> Result<Word> {
        names
            .iter()
            .map(|n| {
                self.letter(n)
                    .ok_or_else(|| Error::Argument(format!("unknown generator `{n}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn generator_name(&self, l: Letter) -> &str {
        &self.generators[l.0 as usize].name
    }

    pub fn commutes(&self, x: Letter, y: Letter) -> bool {
        self.commuting[x.0 as usize][y.0 as usize]
    }

    pub fn has_commutations(&self) -> bool {
        self.commuting
            .iter()
            .enumerate()
            .any(|(i, row)| row.iter().enumerate().any(|(j, &b)| b && i != j))
    }

    pub fn weight(&self, l: Letter) -> i64 {
        self.generators[l.0 as usize].weight
    }

    pub fn word_weight(&self, w: &Word) -> i64 {
        w.letters().iter().map(|&l| self.weight(l)).sum()
    }

    pub(crate) fn check_letters(&self, x: &NCPoly) -> Result<()> {
        let n = self.generators.len();
        match x.letters().find(|l| l.0 as usize >= n) {
            Some(l) => Err(Error::Argument(format!(
                "letter #{} does not belong to presentation {}",
                l.0, self.name
            ))),
            None => Ok(()),
        }
    }

    /// The involution: reverses words and replaces each letter by its adjoint.
    /// All parameters are real, so coefficients are unchanged.
    pub fn adjoint(&self, x: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in x.terms() {
            let mut coef = c.clone();
            let mut letters = Vec::with_capacity(w.len());
            for &l in w.letters().iter().rev() {
                let (k, adj) = &self.generators[l.0 as usize].adjoint;
                if !k.is_one() {
                    coef = &coef * k;
                }
                letters.push(*adj);
            }
            out.add_term(Word(letters), coef);
        }
        out
    }

    /// The common weight of all words of `x`. The zero polynomial has degree 0.
    pub fn degree(&self, x: &NCPoly) -> Result<i64> {
        let mut degrees = x.terms().map(|(w, _)| self.word_weight(w));
        let Some(first) = degrees.next() else {
            return Ok(0);
        };
        if let Some(other) = degrees.find(|&d| d != first) {
            return Err(Error::Grading(format!(
                "element is not homogeneous: contains degrees {first} and {other}"
            )));
        }
        Ok(first)
    }

    /// The part of `x` of weight `n`.
    pub fn homogeneous_component(&self, x: &NCPoly, n: i64) -> NCPoly {
        x.filter_words(|w| self.word_weight(w) == n)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&l| self.generator_name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Renders `x` in the syntax accepted by the text loader.
    pub fn format(&self, x: &NCPoly) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in x.terms().enumerate() {
            let word = self.format_word(w);
            let (negative, body) = if c.num_terms() == 1 {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            } else {
                (false, format!("({c})"))
            };
            let text = if word.is_empty() {
                body
            } else if body == "1" {
                word
            } else {
                format!("{body}*{word}")
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let _ = write!(out, "{text}");
        }
        out
    }

    /// Checks the documented invariants of a rule set: admissible orientation,
    /// homogeneous relations and an involutive adjoint table.
    pub fn validate(&self) -> Result<()> {
        for g in &self.generators {
            let (k, adj) = &g.adjoint;
            let back = &self.generators[adj.0 as usize].adjoint;
            if self.generators[back.1 .0 as usize].name != g.name || !(k * &back.0).is_one() {
                return Err(Error::Presentation(format!(
                    "adjoint of `{}` is not involutive",
                    g.name
                )));
            }
            if self.generators[adj.0 as usize].weight != -g.weight {
                return Err(Error::Presentation(format!(
                    "adjoint of `{}` does not negate its weight",
                    g.name
                )));
            }
        }
        for rule in &self.rules {
            if rule.lhs.is_empty() {
                return Err(Error::Presentation("rule with empty left side".into()));
            }
            let deg = self.word_weight(&rule.lhs);
            for (w, _) in rule.rhs.terms() {
                if !self.term_order_less(w, &rule.lhs) {
                    return Err(Error::Presentation(format!(
                        "rule `{} -> ...` does not decrease the term order at `{}`",
                        self.format_word(&rule.lhs),
                        self.format_word(w)
                    )));
                }
                if self.word_weight(w) != deg {
                    return Err(Error::Presentation(format!(
                        "rule `{} -> ...` is not homogeneous",
                        self.format_word(&rule.lhs)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `a < b` in the term order: length, then letter content, then inversions.
    pub fn term_order_less(&self, a: &Word, b: &Word) -> bool {
        use std::cmp::Ordering;
        if a.len() != b.len() {
            return a.len() < b.len();
        }
        let n = self.generators.len();
        let (ca, cb) = (letter_counts(a, n), letter_counts(b, n));
        match ca.cmp(&cb) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => inversions(a) < inversions(b),
        }
    }
}

fn letter_counts(w: &Word, n: usize) -> Vec<usize> {
    let mut counts = vec![0; n];
    for l in w.letters() {
        if let Some(c) = counts.get_mut(l.0 as usize) {
            *c += 1;
        }
    }
    counts
}

fn inversions(w: &Word) -> usize {
    let l = w.letters();
    let mut n = 0;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            if l[i] > l[j] {
                n += 1;
            }
        }
    }
    n
}

/// Incremental construction of a [`Presentation`].
#[derive(Debug, Default)]
pub struct PresentationBuilder {
    name: String,
    gens: Vec<(String, i64)>,
    adjoints: HashMap<String, (CoefPoly, String)>,
    commute: Vec<(String, String)>,
    rules: Vec<(Vec<String>, NCPoly)>,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn set_name(&mut self, name: &str) -> &mut Self {
        self.name = name.to_string();
        self
    }

    pub fn generator(&mut self, name: &str, weight: i64) -> &mut Self {
        self.gens.push((name.to_string(), weight));
        self
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.gens.iter().any(|(n, _)| n == name)
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.gens.iter().map(|(n, _)| n.clone()).collect()
    }

    /// Declares `name* = coef * target` and the inverse relation.
    pub fn adjoint(&mut self, name: &str, coef: CoefPoly, target: &str) -> &mut Self {
        self.adjoints
            .insert(name.to_string(), (coef, target.to_string()));
        self
    }

    pub fn commute(&mut self, x: &str, y: &str) -> &mut Self {
        self.commute.push((x.to_string(), y.to_string()));
        self
    }

    pub fn rule(&mut self, lhs: &[&str], rhs: NCPoly) -> &mut Self {
        self.rules
            .push((lhs.iter().map(|s| s.to_string()).collect(), rhs));
        self
    }

    /// Letter lookup against the generators declared so far.
    pub fn gen(&self, name: &str) -> NCPoly {
        let i = self
            .gens
            .iter()
            .position(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("no generator `{name}`"));
        NCPoly::letter(Letter(i as u8))
    }

    pub fn build(&self) -> Result<Presentation> {
        if self.gens.len() > u8::MAX as usize {
            return Err(Error::Presentation("too many generators".into()));
        }
        let index: HashMap<&str, Letter> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, (n, _))| (n.as_str(), Letter(i as u8)))
            .collect();
        if index.len() != self.gens.len() {
            return Err(Error::Presentation("duplicate generator name".into()));
        }
        for (name, _) in &self.gens {
            if !valid_generator_name(name) {
                return Err(Error::Presentation(format!("invalid generator name `{name}`")));
            }
        }
        let lookup = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| Error::Presentation(format!("unknown generator `{n}`")))
        };

        // Adjoints: explicit entries, their inverses, then the `x` / `x*` naming convention.
        let mut adjoint: Vec<Option<(CoefPoly, Letter)>> = vec![None; self.gens.len()];
        for (name, (coef, target)) in &self.adjoints {
            let (l, t) = (lookup(name)?, lookup(target)?);
            adjoint[l.0 as usize] = Some((coef.clone(), t));
        }
        for (name, (coef, target)) in &self.adjoints {
            let (l, t) = (lookup(name)?, lookup(target)?);
            if adjoint[t.0 as usize].is_none() {
                let inv = coef
                    .inverse_monomial()
                    .ok_or_else(|| {
                        Error::Presentation(format!("adjoint coefficient of `{name}` is not invertible"))
                    })?;
                adjoint[t.0 as usize] = Some((inv, l));
            }
        }
        for (i, (name, _)) in self.gens.iter().enumerate() {
            if adjoint[i].is_some() {
                continue;
            }
            let partner = match name.strip_suffix('*') {
                Some(base) => index.get(base).copied(),
                None => index.get(format!("{name}*").as_str()).copied(),
            };
            adjoint[i] = Some((CoefPoly::one(), partner.unwrap_or(Letter(i as u8))));
        }

        let n = self.gens.len();
        let mut commuting = vec![vec![false; n]; n];
        for (i, row) in commuting.iter_mut().enumerate() {
            row[i] = true;
        }
        for (x, y) in &self.commute {
            let (lx, ly) = (lookup(x)?, lookup(y)?);
            commuting[lx.0 as usize][ly.0 as usize] = true;
            commuting[ly.0 as usize][lx.0 as usize] = true;
        }

        let rules = self
            .rules
            .iter()
            .map(|(lhs, rhs)| {
                let w = lhs
                    .iter()
                    .map(|n| lookup(n))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Rule { lhs: Word(w), rhs: rhs.clone() })
            })
            .collect::<Result<Vec<_>>>()?;

        let p = Presentation {
            name: self.name.clone(),
            generators: self
                .gens
                .iter()
                .zip(adjoint)
                .map(|((name, weight), adj)| Generator {
                    name: name.clone(),
                    weight: *weight,
                    adjoint: adj.expect("filled above"),
                })
                .collect(),
            rules,
            commuting,
        };
        p.validate()?;
        Ok(p)
    }
}

/// Names must not collide with parameters, numbers or the polynomial syntax.
pub fn valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    !matches!(name, "q" | "p" | "s")
        && (first.is_alphabetic() || first == '_')
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !"+-()^/#=".contains(c))
}

fn c(x: CoefPoly) -> NCPoly {
    NCPoly::constant(x)
}

fn one_minus(param: Param) -> CoefPoly {
    &CoefPoly::one() - &CoefPoly::param_pow(param, 1)
}

/// The quantum disc: `z* z - q z z* = 1 - q`, normal words `z^i z*^j`.
pub fn quantum_disc() -> Presentation {
    quantum_disc_in(Param::Q, "z")
}

/// A quantum disc in the given deformation parameter and generator name.
pub fn quantum_disc_in(param: Param, name: &str) -> Presentation {
    let star = format!("{name}*");
    let mut b = PresentationBuilder::new(format!("disc({name})"));
    b.generator(name, 1).generator(&star, -1);
    let rhs = b.gen(name) * b.gen(&star);
    let rhs = rhs.scale(&CoefPoly::param_pow(param, 1)) + c(one_minus(param));
    b.rule(&[star.as_str(), name], rhs);
    b.build().expect("quantum disc preset is valid")
}

/// The Heegaard quantum 3-sphere: two commuting quantum discs (in `q` and `p`)
/// glued by `(1 - aa*)(1 - bb*) = 0`. Grading `a -> -1`, `b -> +1`.
pub fn quantum_sphere_s3() -> Presentation {
    let mut b = PresentationBuilder::new("S3pq");
    b.generator("a", -1)
        .generator("a*", 1)
        .generator("b", 1)
        .generator("b*", -1);
    let (a, a_s, bb, b_s) = (b.gen("a"), b.gen("a*"), b.gen("b"), b.gen("b*"));
    b.rule(&["a*", "a"], (&a * &a_s).scale(&CoefPoly::q()) + c(one_minus(Param::Q)));
    b.rule(&["b*", "b"], (&bb * &b_s).scale(&CoefPoly::p()) + c(one_minus(Param::P)));
    for x in ["a", "a*"] {
        for y in ["b", "b*"] {
            b.rule(&[y, x], b.gen(x) * b.gen(y));
            b.commute(x, y);
        }
    }
    let rhs = &(&a * &a_s) + &(&bb * &b_s) - NCPoly::one();
    b.rule(&["a", "a*", "b", "b*"], rhs);
    b.build().expect("S3 preset is valid")
}

/// The coinvariant subalgebra generated by `A = 1 - aa*`, `B = 1 - bb*`, `R = ab`.
pub fn quantum_sphere_s2() -> Presentation {
    let mut b = PresentationBuilder::new("S2pq");
    b.generator("A", 0)
        .generator("B", 0)
        .generator("R", 0)
        .generator("R*", 0);
    b.adjoint("A", CoefPoly::one(), "A")
        .adjoint("B", CoefPoly::one(), "B");
    let (ga, gb, gr, grs) = (b.gen("A"), b.gen("B"), b.gen("R"), b.gen("R*"));
    // R*R = 1 - qA - pB,  RR* = 1 - A - B
    b.rule(
        &["R*", "R"],
        NCPoly::one() - ga.scale(&CoefPoly::q()) - gb.scale(&CoefPoly::p()),
    );
    b.rule(&["R", "R*"], NCPoly::one() - ga.clone() - gb.clone());
    // AR = qRA, BR = pRB and their adjoints R*A = qAR*, R*B = pBR*
    b.rule(&["R", "A"], (&ga * &gr).scale(&CoefPoly::q_pow(-1)));
    b.rule(&["R", "B"], (&gb * &gr).scale(&CoefPoly::p_pow(-1)));
    b.rule(&["R*", "A"], (&ga * &grs).scale(&CoefPoly::q()));
    b.rule(&["R*", "B"], (&gb * &grs).scale(&CoefPoly::p()));
    b.rule(&["A", "B"], NCPoly::zero());
    b.rule(&["B", "A"], NCPoly::zero());
    b.build().expect("S2 preset is valid")
}

/// Quantum SU(2) on `a, d, b, c` (hatted generators), involution `a* = d`,
/// `b* = -q c`. Normal words are `a^i b^j c^k` and `d^l b^j c^k`.
pub fn quantum_su2() -> Presentation {
    let mut b = PresentationBuilder::new("SUq2");
    b.generator("a", -1)
        .generator("d", 1)
        .generator("b", 1)
        .generator("c", -1);
    b.adjoint("a", CoefPoly::one(), "d")
        .adjoint("b", -CoefPoly::q(), "c");
    let (ga, gd, gb, gc) = (b.gen("a"), b.gen("d"), b.gen("b"), b.gen("c"));
    let qi = CoefPoly::q_pow(-1);
    b.rule(&["b", "a"], (&ga * &gb).scale(&qi));
    b.rule(&["c", "a"], (&ga * &gc).scale(&qi));
    b.rule(&["b", "d"], (&gd * &gb).scale(&CoefPoly::q()));
    b.rule(&["c", "d"], (&gd * &gc).scale(&CoefPoly::q()));
    b.rule(&["c", "b"], &gb * &gc);
    b.rule(&["a", "d"], NCPoly::one() + (&gb * &gc).scale(&CoefPoly::q()));
    b.rule(&["d", "a"], NCPoly::one() + (&gb * &gc).scale(&qi));
    b.build().expect("SU_q(2) preset is valid")
}

/// The polynomial functions on the circle: `U U* = U* U = 1`, `U` of weight 1.
pub fn circle_algebra() -> Presentation {
    let mut b = PresentationBuilder::new("U1");
    b.generator("U", 1).generator("U*", -1);
    b.rule(&["U", "U*"], NCPoly::one());
    b.rule(&["U*", "U"], NCPoly::one());
    b.build().expect("circle preset is valid")
}

/// The five shipped presentations.
pub fn presets() -> Vec<Presentation> {
    vec![
        quantum_disc(),
        quantum_sphere_s3(),
        quantum_sphere_s2(),
        quantum_su2(),
        circle_algebra(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for p in presets() {
            p.validate().unwrap();
        }
    }

    #[test]
    fn adjoint_is_involutive_on_su2() {
        let su2 = quantum_su2();
        let x = &su2.gen("b") * &su2.gen("a") + su2.gen("c").scale(&CoefPoly::s());
        assert_eq!(su2.adjoint(&su2.adjoint(&x)), x);
        // b* = -q c
        assert_eq!(su2.adjoint(&su2.gen("b")), su2.gen("c").scale(&-CoefPoly::q()));
    }

    #[test]
    fn degree_of_s3_elements() {
        let s3 = quantum_sphere_s3();
        let ab = &s3.gen("a") * &s3.gen("b");
        assert_eq!(s3.degree(&ab).unwrap(), 0);
        assert_eq!(s3.degree(&s3.gen("a*").pow(3)).unwrap(), 3);
        let a_as = &s3.gen("a") * &s3.gen("a*");
        assert_eq!(s3.degree(&(NCPoly::one() - a_as)).unwrap(), 0);
    }

    #[test]
    fn inhomogeneous_degree_is_an_error() {
        let s3 = quantum_sphere_s3();
        let x = &s3.gen("a") + &s3.gen("b");
        assert!(matches!(s3.degree(&x), Err(Error::Grading(_))));
    }

    #[test]
    fn homogeneous_components_split_and_sum() {
        let s3 = quantum_sphere_s3();
        let x = &s3.gen("a") + &s3.gen("b");
        assert_eq!(s3.homogeneous_component(&x, 1), s3.gen("b"));
        let ab = &s3.gen("a") * &s3.gen("b");
        assert_eq!(s3.homogeneous_component(&ab, 0), ab);
        assert!(s3.homogeneous_component(&s3.gen("a*").pow(2), 1).is_zero());
    }

    #[test]
    fn rejects_order_increasing_rule() {
        let mut b = PresentationBuilder::new("bad");
        b.generator("x", 0).generator("y", 0);
        let rhs = &b.gen("y") * &b.gen("x");
        b.rule(&["x", "y"], rhs);
        assert!(matches!(b.build(), Err(Error::Presentation(_))));
    }

    #[test]
    fn rejects_inhomogeneous_rule() {
        let mut b = PresentationBuilder::new("bad");
        b.generator("x", 1).generator("x*", -1);
        b.rule(&["x", "x"], NCPoly::one());
        assert!(matches!(b.build(), Err(Error::Presentation(_))));
    }

    #[test]
    fn format_uses_generator_names() {
        let d = quantum_disc();
        let x = (&d.gen("z") * &d.gen("z*")).scale(&CoefPoly::q())
            + NCPoly::constant(&CoefPoly::one() - &CoefPoly::q());
        assert_eq!(d.format(&x), "(1 - q) + q*z z*");
    }
}
