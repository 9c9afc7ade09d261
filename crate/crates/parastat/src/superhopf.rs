//! Structure maps and the Hopf-axiom verification suite.
//!
//! A [`StructureMaps`] stores per-generator images of the coproduct, counit
//! and antipode and a flavor.  The braided flavor extends the coproduct as an
//! algebra map into the Koszul-signed tensor square and the antipode as a
//! twisted anti-homomorphism `S(ab) = (-1)^{|a||b|} S(b)S(a)`; the plain
//! flavor uses the ordinary rules.
//!
//! [`check_hopf_axioms`] runs the five axiom families modulo the ideal:
//! exhaustively on generators and all words of degree at most 2, and on a
//! seeded set of random elements of degree at most 3.  Multiplicativity of
//! the maps means the generator- and relation-level checks already determine
//! the axioms on the whole algebra; the samples guard implementation bugs.
//!
//! ```
//! use parastat::presets;
//! use parastat::superhopf::{self, SampleConfig};
//!
//! let (p, maps) = presets::load("pf:1").unwrap();
//! let cfg = SampleConfig { seed: superhopf::DEFAULT_SEED, count: 25 };
//! let report = superhopf::check_hopf_axioms(&p, &maps, 4, cfg).unwrap();
//! assert!(report.all_passed());
//! ```

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::AlgebraError;
use crate::kernel::{Alphabet, Element, Parity, TensorElement, Word};
use crate::quotient::{self, Presentation};
use crate::report::CheckReport;
use crate::scalar::{self, Scalar};

/// Default seed for the sample-based part of the axiom suite.
pub const DEFAULT_SEED: u64 = 0x5EED;
/// Default number of random sample elements.
pub const DEFAULT_SAMPLES: usize = 100;

/// How generator images are extended to the whole algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Koszul-signed tensor square, twisted anti-homomorphism.
    Braided,
    /// Ordinary Hopf-algebra extension rules.
    Plain,
}

/// Per-generator coproduct, counit and antipode images.
#[derive(Debug, Clone)]
pub struct StructureMaps {
    alphabet: Arc<Alphabet>,
    flavor: Flavor,
    coproducts: Vec<Option<TensorElement>>,
    counits: Vec<Option<Scalar>>,
    antipodes: Vec<Option<Element>>,
}

impl StructureMaps {
    pub fn empty(alphabet: Arc<Alphabet>, flavor: Flavor) -> StructureMaps {
        let n = alphabet.len();
        StructureMaps {
            alphabet,
            flavor,
            coproducts: vec![None; n],
            counits: vec![None; n],
            antipodes: vec![None; n],
        }
    }

    /// Maps with every generator primitive: `D(x) = x (x) 1 + 1 (x) x`,
    /// `e(x) = 0`, `S(x) = -x`.
    pub fn primitive(p: &Presentation, flavor: Flavor) -> StructureMaps {
        let al = p.alphabet().clone();
        let mut m = StructureMaps::empty(al.clone(), flavor);
        for i in 0..al.len() as u8 {
            let x = Element::generator(al.clone(), i);
            let one = Element::one(al.clone());
            let delta = TensorElement::of_elements(&[&x, &one])
                .unwrap()
                .add(&TensorElement::of_elements(&[&one, &x]).unwrap())
                .unwrap();
            m.set(i, delta, scalar::zero(), x.neg());
        }
        m
    }

    pub fn set(&mut self, idx: u8, coproduct: TensorElement, counit: Scalar, antipode: Element) {
        self.coproducts[idx as usize] = Some(coproduct);
        self.counits[idx as usize] = Some(counit);
        self.antipodes[idx as usize] = Some(antipode);
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_complete(&self) -> bool {
        self.coproducts.iter().all(Option::is_some)
            && self.counits.iter().all(Option::is_some)
            && self.antipodes.iter().all(Option::is_some)
    }

    pub fn coproduct_image(&self, idx: u8) -> Result<&TensorElement, AlgebraError> {
        self.coproducts[idx as usize]
            .as_ref()
            .ok_or_else(|| AlgebraError::MissingImage(self.alphabet.generator(idx).token()))
    }

    pub fn counit_image(&self, idx: u8) -> Result<&Scalar, AlgebraError> {
        self.counits[idx as usize]
            .as_ref()
            .ok_or_else(|| AlgebraError::MissingImage(self.alphabet.generator(idx).token()))
    }

    pub fn antipode_image(&self, idx: u8) -> Result<&Element, AlgebraError> {
        self.antipodes[idx as usize]
            .as_ref()
            .ok_or_else(|| AlgebraError::MissingImage(self.alphabet.generator(idx).token()))
    }
}

/// Coproduct image of a single word: the (braided or plain) tensor product of
/// its generator images.
pub fn coproduct_of_word(w: &Word, m: &StructureMaps) -> Result<TensorElement, AlgebraError> {
    let mut acc = TensorElement::unit(m.alphabet.clone(), 2)?;
    for &s in w.symbols() {
        let img = m.coproduct_image(s)?;
        acc = match m.flavor {
            Flavor::Braided => acc.braided_multiply(img)?,
            Flavor::Plain => acc.plain_multiply(img)?,
        };
    }
    Ok(acc)
}

/// Linear extension of the coproduct.
pub fn apply_coproduct(x: &Element, m: &StructureMaps) -> Result<TensorElement, AlgebraError> {
    let mut out = TensorElement::zero(m.alphabet.clone(), 2)?;
    for (w, c) in x.terms() {
        out = out.add(&coproduct_of_word(w, m)?.scale(c))?;
    }
    Ok(out)
}

/// Multiplicative-linear extension of the counit.
pub fn apply_counit(x: &Element, m: &StructureMaps) -> Result<Scalar, AlgebraError> {
    let mut out = scalar::zero();
    for (w, c) in x.terms() {
        let mut val = c.clone();
        for &s in w.symbols() {
            val *= m.counit_image(s)?;
            if val.is_zero() {
                break;
            }
        }
        out += val;
    }
    Ok(out)
}

/// Antipode image of a single word: reversed product of generator images,
/// with the Koszul sign in the braided flavor.
pub fn antipode_of_word(w: &Word, m: &StructureMaps) -> Result<Element, AlgebraError> {
    let mut img = Element::one(m.alphabet.clone());
    let mut prefix_parity = Parity::Even;
    for &s in w.symbols() {
        // S(u s) = sign * S(s) S(u), sign = (-1)^{|u||s|} in the braided flavor
        let gen_parity = m.alphabet.generator(s).parity();
        let mut step = m.antipode_image(s)?.multiply(&img)?;
        if m.flavor == Flavor::Braided && prefix_parity.is_odd() && gen_parity.is_odd() {
            step = step.neg();
        }
        img = step;
        prefix_parity = prefix_parity.combine(gen_parity);
    }
    Ok(img)
}

/// Linear extension of the antipode.
pub fn apply_antipode(x: &Element, m: &StructureMaps) -> Result<Element, AlgebraError> {
    let mut out = Element::zero(m.alphabet.clone());
    for (w, c) in x.terms() {
        out = out.add(&antipode_of_word(w, m)?.scale(c))?;
    }
    Ok(out)
}

/// Applies the coproduct to one slot of a rank-2 tensor, producing a rank-3
/// tensor.  No Koszul signs arise: the other slot is not permuted past
/// anything.
pub fn extend_coproduct_slot(
    t: &TensorElement,
    slot: usize,
    m: &StructureMaps,
) -> Result<TensorElement, AlgebraError> {
    assert!(slot < 2 && t.rank() == 2);
    let mut out = TensorElement::zero(m.alphabet.clone(), 3)?;
    for (tuple, c) in t.terms() {
        let inner = coproduct_of_word(&tuple[slot], m)?;
        for (pair, k) in inner.terms() {
            let tuple3 = if slot == 0 {
                vec![pair[0].clone(), pair[1].clone(), tuple[1].clone()]
            } else {
                vec![tuple[0].clone(), pair[0].clone(), pair[1].clone()]
            };
            out.add_term(tuple3, c * k);
        }
    }
    Ok(out)
}

/// Configuration for the sample-based part of the axiom suite.
#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: DEFAULT_SEED,
            count: DEFAULT_SAMPLES,
        }
    }
}

/// Seeded random elements: up to 3 terms, words of length at most 3,
/// coefficients drawn from {-2, -1, 1, 2}.
pub fn random_elements(alphabet: &Arc<Alphabet>, cfg: SampleConfig) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let coeffs = [-2i64, -1, 1, 2];
    (0..cfg.count)
        .map(|_| {
            let mut e = Element::zero(alphabet.clone());
            let terms = rng.gen_range(1..=3);
            for _ in 0..terms {
                let len = rng.gen_range(0..=3);
                let syms = (0..len)
                    .map(|_| rng.gen_range(0..alphabet.len() as u8))
                    .collect();
                let c = coeffs[rng.gen_range(0..coeffs.len())];
                e.add_term(Word::from_symbols(syms), scalar::int(c));
            }
            e
        })
        .collect()
}

/// Runs the five Hopf-axiom families modulo the ideal.
///
/// Axioms: (i) the coproduct kills every relation, (ii) coassociativity,
/// (iii) the counit property, (iv) the antipode property, (v) the antipode
/// kills every relation.  Each family is checked on all generators, all words
/// of degree at most 2 and the seeded random samples; a sample whose
/// intermediate degrees exceed the truncation is skipped and counted, not
/// fatal.
pub fn check_hopf_axioms(
    p: &Presentation,
    m: &StructureMaps,
    degree: u32,
    cfg: SampleConfig,
) -> Result<CheckReport, AlgebraError> {
    let mut report = CheckReport::new(p.name(), degree, cfg.seed);
    let al = p.alphabet().clone();

    // test elements, in a fixed deterministic order
    let mut points: Vec<(String, Element)> = Vec::new();
    for i in 0..al.len() as u8 {
        points.push((
            format!("gen:{}", al.generator(i).token()),
            Element::generator(al.clone(), i),
        ));
    }
    for w in al.words_up_to(2) {
        let e = Element::term(al.clone(), w.clone(), scalar::one());
        points.push((format!("word:{}", e.render()), e));
    }
    for (i, e) in random_elements(&al, cfg).into_iter().enumerate() {
        points.push((format!("sample:{i}"), e));
    }

    // (i) coproduct well defined on relations
    {
        let mut ok = true;
        let mut witness = String::new();
        for r in p.relations() {
            let img = apply_coproduct(r, m)?;
            let nf = quotient::tensor_normal_form(&img, p, degree)?;
            if !nf.is_zero() {
                ok = false;
                witness = format!("relation `{}` maps to `{}`", r.render(), nf.render());
                break;
            }
        }
        report.record("hopf.coproduct-kills-relations", ok, witness);
    }

    // (ii) coassociativity
    run_family(&mut report, "hopf.coassociativity", &points, |x| {
        let t = apply_coproduct(x, m)?;
        let left = extend_coproduct_slot(&t, 0, m)?;
        let right = extend_coproduct_slot(&t, 1, m)?;
        let diff = left.sub(&right)?;
        let nf = quotient::tensor_normal_form(&diff, p, degree)?;
        Ok(if nf.is_zero() {
            None
        } else {
            Some(format!("residual `{}`", nf.render()))
        })
    })?;

    // (iii) counit property, both sides
    run_family(&mut report, "hopf.counit", &points, |x| {
        let t = apply_coproduct(x, m)?;
        let mut left = Element::zero(al.clone());
        let mut right = Element::zero(al.clone());
        for (tuple, c) in t.terms() {
            let e0 = Element::term(al.clone(), tuple[0].clone(), scalar::one());
            let e1 = Element::term(al.clone(), tuple[1].clone(), scalar::one());
            let eps0 = apply_counit(&e0, m)?;
            let eps1 = apply_counit(&e1, m)?;
            left.add_term(tuple[1].clone(), c * eps0);
            right.add_term(tuple[0].clone(), c * eps1);
        }
        let l = quotient::equal_mod_ideal(&left, x, p, degree)?;
        let r = quotient::equal_mod_ideal(&right, x, p, degree)?;
        Ok(if l && r {
            None
        } else {
            Some(format!(
                "(eps(x)id)D = `{}`, (id(x)eps)D = `{}`, x = `{}`",
                left.render(),
                right.render(),
                x.render()
            ))
        })
    })?;

    // (iv) antipode property, both sides
    run_family(&mut report, "hopf.antipode", &points, |x| {
        let t = apply_coproduct(x, m)?;
        let mut left = Element::zero(al.clone());
        let mut right = Element::zero(al.clone());
        for (tuple, c) in t.terms() {
            let e0 = Element::term(al.clone(), tuple[0].clone(), scalar::one());
            let e1 = Element::term(al.clone(), tuple[1].clone(), scalar::one());
            left = left.add(&antipode_of_word(&tuple[0], m)?.multiply(&e1)?.scale(c))?;
            right = right.add(&e0.multiply(&antipode_of_word(&tuple[1], m)?)?.scale(c))?;
        }
        let target = Element::scalar(al.clone(), apply_counit(x, m)?);
        let l = quotient::equal_mod_ideal(&left, &target, p, degree)?;
        let r = quotient::equal_mod_ideal(&right, &target, p, degree)?;
        Ok(if l && r {
            None
        } else {
            Some(format!(
                "m(S(x)id)D = `{}`, m(id(x)S)D = `{}`, eps(x)1 = `{}`",
                left.render(),
                right.render(),
                target.render()
            ))
        })
    })?;

    // (v) antipode well defined on relations
    {
        let mut ok = true;
        let mut witness = String::new();
        for r in p.relations() {
            let img = apply_antipode(r, m)?;
            if !quotient::is_zero_mod_ideal(&img, p, degree)? {
                ok = false;
                witness = format!("relation `{}` has a nonzero image", r.render());
                break;
            }
        }
        report.record("hopf.antipode-kills-relations", ok, witness);
    }

    Ok(report)
}

/// Runs one axiom family over the test points.  Truncation overflow on a
/// point skips it (reported in the check name), any other error aborts.
fn run_family<F>(
    report: &mut CheckReport,
    name: &str,
    points: &[(String, Element)],
    mut check: F,
) -> Result<(), AlgebraError>
where
    F: FnMut(&Element) -> Result<Option<String>, AlgebraError>,
{
    let mut skipped = 0usize;
    let mut failure: Option<String> = None;
    for (label, x) in points {
        match check(x) {
            Ok(None) => {}
            Ok(Some(w)) => {
                failure = Some(format!("{label}: {w}"));
                break;
            }
            Err(AlgebraError::TruncationExceeded { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    let name = if skipped > 0 && failure.is_none() {
        format!("{name} ({skipped} samples skipped: truncation)")
    } else {
        name.to_string()
    };
    match failure {
        None => report.pass(name),
        Some(w) => report.fail(name, w),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn primitive_coproduct_of_generator() {
        let p = presets::parabosonic(1).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Braided);
        let b = p.generator_element("b1+").unwrap();
        let d = apply_coproduct(&b, &m).unwrap();
        let one = p.one();
        let want = TensorElement::of_elements(&[&b, &one])
            .unwrap()
            .add(&TensorElement::of_elements(&[&one, &b]).unwrap())
            .unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn braided_coproduct_of_product_has_koszul_sign() {
        let p = presets::parabosonic(2).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Braided);
        let b1 = p.generator_element("b1+").unwrap();
        let b2 = p.generator_element("b2+").unwrap();
        let x = b1.multiply(&b2).unwrap();
        let d = apply_coproduct(&x, &m).unwrap();
        let one = p.one();
        let want = TensorElement::of_elements(&[&x, &one])
            .unwrap()
            .add(&TensorElement::of_elements(&[&b1, &b2]).unwrap())
            .unwrap()
            .sub(&TensorElement::of_elements(&[&b2, &b1]).unwrap())
            .unwrap()
            .add(&TensorElement::of_elements(&[&one, &x]).unwrap())
            .unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn counit_examples() {
        let p = presets::parabosonic(1).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Braided);
        assert_eq!(
            apply_counit(&p.generator_element("b1+").unwrap(), &m).unwrap(),
            scalar::zero()
        );
        assert_eq!(apply_counit(&p.one(), &m).unwrap(), scalar::one());
        let x = p
            .generator_element("b1+")
            .unwrap()
            .add(&p.one().scale(&scalar::int(3)))
            .unwrap();
        assert_eq!(apply_counit(&x, &m).unwrap(), scalar::int(3));
    }

    #[test]
    fn braided_antipode_is_twisted_antihomomorphism() {
        let p = presets::parabosonic(2).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Braided);
        let b1 = p.generator_element("b1+").unwrap();
        let b2 = p.generator_element("b2+").unwrap();
        assert_eq!(apply_antipode(&b1, &m).unwrap(), b1.neg());
        assert_eq!(apply_antipode(&p.one(), &m).unwrap(), p.one());
        // S(b1+ b2+) = (-1)^{1*1} S(b2+) S(b1+) = -(b2+ b1+)
        let x = b1.multiply(&b2).unwrap();
        let want = b2.multiply(&b1).unwrap().neg();
        assert_eq!(apply_antipode(&x, &m).unwrap(), want);
    }

    #[test]
    fn parafermionic_axioms_pass_plain() {
        let p = presets::parafermionic(1).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Plain);
        let cfg = SampleConfig {
            seed: DEFAULT_SEED,
            count: 25,
        };
        let report = check_hopf_axioms(&p, &m, 4, cfg).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn parabosonic_axioms_pass_braided() {
        let p = presets::parabosonic(1).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Braided);
        let cfg = SampleConfig {
            seed: DEFAULT_SEED,
            count: 25,
        };
        let report = check_hopf_axioms(&p, &m, 4, cfg).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn flavor_degeneracy_on_even_alphabet() {
        // when every generator is even, braided and plain extensions agree
        let p = presets::parafermionic(2).unwrap();
        let mb = StructureMaps::primitive(&p, Flavor::Braided);
        let mp = StructureMaps::primitive(&p, Flavor::Plain);
        let cfg = SampleConfig {
            seed: DEFAULT_SEED,
            count: 100,
        };
        for x in random_elements(p.alphabet(), cfg) {
            assert_eq!(
                apply_coproduct(&x, &mb).unwrap(),
                apply_coproduct(&x, &mp).unwrap()
            );
            assert_eq!(
                apply_antipode(&x, &mb).unwrap(),
                apply_antipode(&x, &mp).unwrap()
            );
        }
    }

    #[test]
    fn corrupted_antipode_flags_exactly_the_antipode_axiom() {
        let (p, mut m) = presets::load("pbg:1").unwrap();
        // corrupt S(g) := -g
        let g_idx = p.alphabet().index_of("g").unwrap();
        let delta = m.coproduct_image(g_idx).unwrap().clone();
        let eps = m.counit_image(g_idx).unwrap().clone();
        let g = p.generator_element("g").unwrap();
        m.set(g_idx, delta, eps, g.neg());
        let cfg = SampleConfig {
            seed: DEFAULT_SEED,
            count: 10,
        };
        let report = check_hopf_axioms(&p, &m, 4, cfg).unwrap();
        assert!(!report.all_passed());
        let failing: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(failing.iter().all(|n| n.starts_with("hopf.antipode")));
        assert!(failing.iter().any(|n| !n.contains("relations")));
    }
}
