//! Normal forms by oriented rewriting.
//!
//! A redex is an occurrence of a rule's left side. Besides contiguous
//! occurrences, a redex may be scattered through the word when the letters in
//! between commute with the matched letters (as declared by the presentation).
//! The in-between letters are moved out of the way before the rule is applied.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ncpoly::{Letter, NCPoly, Word};
use super::presentation::Presentation;
use crate::error::{Error, Result};

/// Default bound on rewrite steps per normal-form computation.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// Which redex to rewrite when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionOrder {
    /// Leftmost start position, first rule in declaration order.
    #[default]
    Leftmost,
    /// A uniformly random redex, from a seeded generator.
    Random(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduceOptions {
    pub order: ReductionOrder,
    pub step_limit: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self {
            order: ReductionOrder::Leftmost,
            step_limit: DEFAULT_STEP_LIMIT,
        }
    }
}

/// Reduces `x` to its normal form with default options.
pub fn normal_form(x: &NCPoly, p: &Presentation) -> Result<NCPoly> {
    normal_form_with(x, p, &ReduceOptions::default())
}

pub fn normal_form_with(x: &NCPoly, p: &Presentation, opts: &ReduceOptions) -> Result<NCPoly> {
    p.check_letters(x)?;
    let mut rng = match opts.order {
        ReductionOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        ReductionOrder::Leftmost => None,
    };
    let mut pending = x.clone();
    let mut out = NCPoly::zero();
    let mut steps = 0usize;
    while let Some((w, c)) = pending.pop_largest() {
        let redex = match rng.as_mut() {
            None => first_redex(p, &w),
            Some(rng) => all_redexes(p, &w).choose(rng).cloned(),
        };
        match redex {
            None => out.add_term(w, c),
            Some(m) => {
                steps += 1;
                if steps > opts.step_limit {
                    return Err(Error::NonTermination { limit: opts.step_limit });
                }
                for (w2, c2) in apply(p, &w, &m) {
                    pending.add_term(w2, &c * &c2);
                }
            }
        }
    }
    Ok(out)
}

/// Whether `w` admits no rewrite.
pub fn is_reduced(w: &Word, p: &Presentation) -> bool {
    first_redex(p, w).is_none()
}

/// Outcome of comparing two elements modulo the relations.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// The normal form of `lhs - rhs`; zero exactly when `holds`.
    pub witness: NCPoly,
}

pub fn verify_identity(lhs: &NCPoly, rhs: &NCPoly, p: &Presentation) -> Result<IdentityCheck> {
    let witness = normal_form(&(lhs - rhs), p)?;
    Ok(IdentityCheck {
        holds: witness.is_zero(),
        witness,
    })
}

#[derive(Debug, Clone)]
struct Redex {
    rule: usize,
    positions: Vec<usize>,
}

/// Contiguous redexes take priority; scattered ones are used only when none exist.
fn first_redex(p: &Presentation, w: &Word) -> Option<Redex> {
    for scattered in [false, true] {
        if scattered && !p.has_commutations() {
            break;
        }
        let letters = w.letters();
        for start in 0..letters.len() {
            for (ri, rule) in p.rules().iter().enumerate() {
                if let Some(pos) = match_at(p, letters, rule.lhs.letters(), start, scattered) {
                    return Some(Redex { rule: ri, positions: pos });
                }
            }
        }
    }
    None
}

fn all_redexes(p: &Presentation, w: &Word) -> Vec<Redex> {
    let letters = w.letters();
    let mut out = Vec::new();
    for scattered in [false, true] {
        if scattered && !p.has_commutations() {
            break;
        }
        for start in 0..letters.len() {
            for (ri, rule) in p.rules().iter().enumerate() {
                if let Some(pos) = match_at(p, letters, rule.lhs.letters(), start, scattered) {
                    out.push(Redex { rule: ri, positions: pos });
                }
            }
        }
        if !out.is_empty() {
            break;
        }
    }
    out
}

/// Which way a skipped letter travels to clear the redex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn classify(p: &Presentation, x: Letter, lhs: &[Letter], matched: usize) -> Option<Side> {
    if lhs[..matched].iter().all(|&r| p.commutes(x, r)) {
        Some(Side::Left)
    } else if lhs[matched..].iter().all(|&r| p.commutes(x, r)) {
        Some(Side::Right)
    } else {
        None
    }
}

/// First occurrence of `lhs` beginning at `start`, possibly scattered.
fn match_at(
    p: &Presentation,
    w: &[Letter],
    lhs: &[Letter],
    start: usize,
    scattered: bool,
) -> Option<Vec<usize>> {
    if lhs.is_empty() || w[start] != lhs[0] || w.len() - start < lhs.len() {
        return None;
    }
    if !scattered {
        return (w[start..start + lhs.len()] == *lhs).then(|| (start..start + lhs.len()).collect());
    }
    let mut positions = vec![start];
    if search(p, w, lhs, &mut positions) {
        Some(positions)
    } else {
        None
    }
}

fn search(p: &Presentation, w: &[Letter], lhs: &[Letter], positions: &mut Vec<usize>) -> bool {
    let k = positions.len();
    if k == lhs.len() {
        return gaps_consistent(p, w, lhs, positions);
    }
    let prev = positions[k - 1];
    for j in prev + 1..w.len() {
        if w.len() - j < lhs.len() - k {
            break;
        }
        if w[j] == lhs[k] {
            positions.push(j);
            if search(p, w, lhs, positions) {
                return true;
            }
            positions.pop();
        }
        // Letter j is skipped if we look further; it must be able to move out.
        if classify(p, w[j], lhs, k).is_none() {
            break;
        }
    }
    false
}

fn gap_sides(p: &Presentation, w: &[Letter], lhs: &[Letter], positions: &[usize]) -> Vec<(usize, Side)> {
    let mut out = Vec::new();
    for k in 1..positions.len() {
        for j in positions[k - 1] + 1..positions[k] {
            let side = classify(p, w[j], lhs, k).expect("checked during search");
            out.push((j, side));
        }
    }
    out
}

/// A right-moving letter and a later left-moving letter swap places, so they must commute.
fn gaps_consistent(p: &Presentation, w: &[Letter], lhs: &[Letter], positions: &[usize]) -> bool {
    let sides = gap_sides(p, w, lhs, positions);
    for (i, &(ji, si)) in sides.iter().enumerate() {
        if si != Side::Right {
            continue;
        }
        for &(jj, sj) in &sides[i + 1..] {
            if sj == Side::Left && !p.commutes(w[ji], w[jj]) {
                return false;
            }
        }
    }
    true
}

fn apply(p: &Presentation, w: &Word, m: &Redex) -> Vec<(Word, super::coef::CoefPoly)> {
    let letters = w.letters();
    let first = m.positions[0];
    let last = *m.positions.last().expect("nonempty redex");
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (j, side) in gap_sides(p, letters, p.rules()[m.rule].lhs.letters(), &m.positions) {
        match side {
            Side::Left => left.push(letters[j]),
            Side::Right => right.push(letters[j]),
        }
    }
    p.rules()[m.rule]
        .rhs
        .terms()
        .map(|(rw, c)| {
            let mut v = Vec::with_capacity(letters.len());
            v.extend_from_slice(&letters[..first]);
            v.extend_from_slice(&left);
            v.extend_from_slice(rw.letters());
            v.extend_from_slice(&right);
            v.extend_from_slice(&letters[last + 1..]);
            (Word(v), c.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symalg::coef::CoefPoly;
    use crate::symalg::presentation::{quantum_disc, quantum_sphere_s3, quantum_su2, PresentationBuilder};

    #[test]
    fn disc_relation_reduces() {
        let d = quantum_disc();
        let (z, zs) = (d.gen("z"), d.gen("z*"));
        let nf = normal_form(&(&zs * &z), &d).unwrap();
        let expected = (&z * &zs).scale(&CoefPoly::q()) + NCPoly::constant(&CoefPoly::one() - &CoefPoly::q());
        assert_eq!(nf, expected);
    }

    #[test]
    fn empty_word_is_reduced() {
        let d = quantum_disc();
        assert_eq!(normal_form(&NCPoly::one(), &d).unwrap(), NCPoly::one());
    }

    #[test]
    fn s3_gluing_relation() {
        let s3 = quantum_sphere_s3();
        let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
        let x = &(&a * &a_s) * &(&b * &b_s);
        let expected = &(&a * &a_s) + &(&b * &b_s) - NCPoly::one();
        assert_eq!(normal_form(&x, &s3).unwrap(), expected);
    }

    #[test]
    fn scattered_redex_is_found() {
        let s3 = quantum_sphere_s3();
        // a b a* b*: the b must travel past a* before the gluing rule fires.
        let w = s3.word(&["a", "b", "a*", "b*"]).unwrap();
        let nf_scattered = normal_form(&NCPoly::word(w), &s3).unwrap();
        let w2 = s3.word(&["a", "a*", "b", "b*"]).unwrap();
        assert_eq!(nf_scattered, normal_form(&NCPoly::word(w2), &s3).unwrap());
    }

    #[test]
    fn witness_for_failed_identity() {
        let d = quantum_disc();
        let (z, zs) = (d.gen("z"), d.gen("z*"));
        let r = verify_identity(&(&zs * &z), &(&z * &zs), &d).unwrap();
        assert!(!r.holds);
        // (q - 1)(zz* - 1)
        let qm1 = &CoefPoly::q() - &CoefPoly::one();
        let expected = (&(&z * &zs) - &NCPoly::one()).scale(&qm1);
        assert_eq!(r.witness, expected);
    }

    #[test]
    fn step_limit_is_enforced() {
        let d = quantum_disc();
        let x = (&d.gen("z*") * &d.gen("z")).pow(4);
        let opts = ReduceOptions { step_limit: 3, ..Default::default() };
        assert_eq!(
            normal_form_with(&x, &d, &opts),
            Err(Error::NonTermination { limit: 3 })
        );
    }

    #[test]
    fn random_order_agrees_on_su2() {
        let su2 = quantum_su2();
        let w = su2.word(&["c", "d", "b", "a", "d", "c", "a"]).unwrap();
        let x = NCPoly::word(w);
        let left = normal_form(&x, &su2).unwrap();
        for seed in 0..5 {
            let opts = ReduceOptions { order: ReductionOrder::Random(seed), ..Default::default() };
            assert_eq!(normal_form_with(&x, &su2, &opts).unwrap(), left);
        }
    }

    #[test]
    fn foreign_letters_are_rejected() {
        let mut b = PresentationBuilder::new("tiny");
        b.generator("x", 0);
        let p = b.build().unwrap();
        let y = NCPoly::letter(Letter(3));
        assert!(matches!(normal_form(&y, &p), Err(Error::Argument(_))));
    }
}
