//! From braided to ordinary Hopf structure.
//!
//! A braided group living in the category of `CZ2`-modules can be smashed
//! with the group algebra of `Z2` to produce an ordinary Hopf algebra.  This
//! module carries that construction out concretely for the parabosonic
//! algebra: [`bosonise`] adjoins the group-like involution `g` and transports
//! the braided structure maps through the quasitriangular data of `CZ2`,
//! while [`kpm_extend`] builds the alternative extension by a pair of
//! mutually inverse group-likes `K+`, `K-`.
//!
//! The smash-product formulas are implemented generically in terms of an
//! R-matrix, and the closed forms (`Delta(b) = b (x) 1 + g (x) b`,
//! `S(b) = bg`, ...) are recovered from them rather than hard-coded, so the
//! tests can confirm that the shortcut and the categorical construction
//! agree.
//!
//! ```
//! use parastat::{presets, quotient, superhopf};
//!
//! let (pbg, maps) = presets::load("pbg:1").unwrap();
//! let b = pbg.generator_element("b1+").unwrap();
//! let g = pbg.generator_element("g").unwrap();
//! // in the bosonised algebra the antipode sends b to b*g
//! let s = superhopf::apply_antipode(&b, &maps).unwrap();
//! assert!(quotient::equal_mod_ideal(&s, &b.multiply(&g).unwrap(), &pbg, 2).unwrap());
//! ```

use std::collections::BTreeMap;

use num_traits::Zero;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::kernel::{Alphabet, Element, Family, Generator, TensorElement, Word};
use crate::quotient::{self, Presentation};
use crate::scalar::{self, Scalar};
use crate::superhopf::{self, Flavor, StructureMaps};

/// An element `a*1 + b*g` of the group algebra of `Z2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cz2Element {
    pub unit: Scalar,
    pub twist: Scalar,
}

impl Cz2Element {
    pub fn one() -> Self {
        Cz2Element {
            unit: scalar::one(),
            twist: scalar::zero(),
        }
    }

    pub fn g() -> Self {
        Cz2Element {
            unit: scalar::zero(),
            twist: scalar::one(),
        }
    }

    pub fn basis(twisted: bool) -> Self {
        if twisted {
            Self::g()
        } else {
            Self::one()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Cz2Element {
            unit: &self.unit + &other.unit,
            twist: &self.twist + &other.twist,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Cz2Element {
            unit: &self.unit * c,
            twist: &self.twist * c,
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Cz2Element {
            unit: &self.unit * &other.unit + &self.twist * &other.twist,
            twist: &self.unit * &other.twist + &self.twist * &other.unit,
        }
    }

    /// `S(1) = 1`, `S(g) = g^-1 = g`: the antipode of `CZ2` is the identity.
    pub fn antipode(&self) -> Self {
        self.clone()
    }

    pub fn counit(&self) -> Scalar {
        &self.unit + &self.twist
    }

    /// The module action: `g` acts on a homogeneous word by its parity sign.
    pub fn act_on(&self, x: &Element) -> Element {
        let al = x.alphabet().clone();
        let mut out = Element::zero(al.clone());
        for (w, c) in x.terms() {
            let sign = if al.parity_of_word(w).is_odd() {
                &self.unit - &self.twist
            } else {
                &self.unit + &self.twist
            };
            out.add_term(w.clone(), c * &sign);
        }
        out
    }
}

/// The action of `g` on a homogeneous element: `g |> x = (-1)^{|x|} x`,
/// extended wordwise.
pub fn cz2_action(twisted: bool, x: &Element) -> Element {
    Cz2Element::basis(twisted).act_on(x)
}

/// A quasitriangular structure on `CZ2`, stored as a sum of basis terms
/// `c * g^a (x) g^b` where the booleans flag the twisted factor.
#[derive(Debug, Clone)]
pub struct QuasitriangularData {
    pub terms: Vec<(bool, bool, Scalar)>,
}

impl QuasitriangularData {
    /// The non-trivial triangular structure
    /// `R = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2`.
    pub fn cz2() -> Self {
        let h = scalar::ratio(1, 2);
        QuasitriangularData {
            terms: vec![
                (false, false, h.clone()),
                (false, true, h.clone()),
                (true, false, h.clone()),
                (true, true, -h),
            ],
        }
    }

    /// The Drinfeld element `u = sum S(R2) R1`.
    pub fn u_element(&self) -> Cz2Element {
        let mut u = Cz2Element {
            unit: scalar::zero(),
            twist: scalar::zero(),
        };
        for (r1, r2, c) in &self.terms {
            let prod = Cz2Element::basis(*r2)
                .antipode()
                .multiply(&Cz2Element::basis(*r1));
            u = u.add(&prod.scale(c));
        }
        u
    }

    /// Checks the quasitriangularity axioms inside the group algebra:
    /// intertwining of the (co)commutative coproduct, both hexagon
    /// identities, and invertibility via `(S (x) id)(R) * R = 1 (x) 1`.
    pub fn verify(&self) -> bool {
        // rank-2 and rank-3 tensors over CZ2 as coefficient arrays
        let mut r2 = [[scalar::zero(), scalar::zero()], [scalar::zero(), scalar::zero()]];
        for (a, b, c) in &self.terms {
            r2[*a as usize][*b as usize] += c;
        }
        let mul2 = |x: &[[Scalar; 2]; 2], y: &[[Scalar; 2]; 2]| {
            let mut out = [[scalar::zero(), scalar::zero()], [scalar::zero(), scalar::zero()]];
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        for d in 0..2 {
                            out[a ^ c][b ^ d] += &x[a][b] * &y[c][d];
                        }
                    }
                }
            }
            out
        };

        // Delta^op(h) R = R Delta(h) for the group-likes (Delta(g^e) = g^e (x) g^e)
        for e in 0..2usize {
            let mut dh = [[scalar::zero(), scalar::zero()], [scalar::zero(), scalar::zero()]];
            dh[e][e] = scalar::one();
            if mul2(&dh, &r2) != mul2(&r2, &dh) {
                return false;
            }
        }

        // hexagons in H (x) H (x) H
        let zero3 = || {
            [
                [[scalar::zero(), scalar::zero()], [scalar::zero(), scalar::zero()]],
                [[scalar::zero(), scalar::zero()], [scalar::zero(), scalar::zero()]],
            ]
        };
        let mul3 = |x: &[[[Scalar; 2]; 2]; 2], y: &[[[Scalar; 2]; 2]; 2]| {
            let mut out = zero3();
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        for d in 0..2 {
                            for e in 0..2 {
                                for f in 0..2 {
                                    out[a ^ d][b ^ e][c ^ f] += &x[a][b][c] * &y[d][e][f];
                                }
                            }
                        }
                    }
                }
            }
            out
        };
        let (mut r13, mut r23, mut r12) = (zero3(), zero3(), zero3());
        let (mut dl, mut dr) = (zero3(), zero3());
        for (a, b, c) in &self.terms {
            let (a, b) = (*a as usize, *b as usize);
            r13[a][0][b] += c;
            r23[0][a][b] += c;
            r12[a][b][0] += c;
            // (Delta (x) id)(g^a (x) g^b) = g^a (x) g^a (x) g^b
            dl[a][a][b] += c;
            // (id (x) Delta)(g^a (x) g^b) = g^a (x) g^b (x) g^b
            dr[a][b][b] += c;
        }
        if dl != mul3(&r13, &r23) || dr != mul3(&r13, &r12) {
            return false;
        }

        // (S (x) id)(R) * R = 1 (x) 1; S is the identity on CZ2
        let mut unit2 = [[scalar::zero(), scalar::zero()], [scalar::zero(), scalar::zero()]];
        unit2[0][0] = scalar::one();
        mul2(&r2, &r2) == unit2
    }
}

/// The braiding induced by the R-matrix,
/// `Psi(v (x) w) = sum (R2 |> w) (x) (R1 |> v)`.  For the triangular `CZ2`
/// data this reproduces the signed flip.
pub fn braiding_via_r(
    r: &QuasitriangularData,
    v: &Element,
    w: &Element,
) -> Result<TensorElement, AlgebraError> {
    let mut out = TensorElement::zero(v.alphabet().clone(), 2)?;
    for (r1, r2, c) in &r.terms {
        let left = Cz2Element::basis(*r2).act_on(w).scale(c);
        let right = Cz2Element::basis(*r1).act_on(v);
        out = out.add(&TensorElement::of_elements(&[&left, &right])?)?;
    }
    Ok(out)
}

/// The coaction derived from the action, `rho(x) = sum R2 (x) (R1 |> x)`,
/// returned as a sum of `(group part, module part)` pairs.
pub fn coaction_from_action(
    r: &QuasitriangularData,
    x: &Element,
) -> Vec<(bool, Element)> {
    let mut acc: [Element; 2] = [
        Element::zero(x.alphabet().clone()),
        Element::zero(x.alphabet().clone()),
    ];
    for (r1, r2, c) in &r.terms {
        let part = Cz2Element::basis(*r1).act_on(x).scale(c);
        acc[*r2 as usize] = acc[*r2 as usize].add(&part).unwrap();
    }
    let mut out = Vec::new();
    for (h, e) in [(false, acc[0].clone()), (true, acc[1].clone())] {
        if !e.is_zero() {
            out.push((h, e));
        }
    }
    out
}

/// A basis label of the smash product: a word of the braided algebra paired
/// with the exponent of `g`.
pub type SmashKey = (Word, bool);

/// An element of the smash product `B # CZ2`, stored as a sum of
/// `c * (w (x) g^e)` with `w` a word of the braided algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashElement {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<SmashKey, Scalar>,
}

impl SmashElement {
    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        SmashElement {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(alphabet: Arc<Alphabet>, w: Word, twisted: bool, c: Scalar) -> Self {
        let mut out = Self::zero(alphabet);
        out.accumulate(w, twisted, c);
        out
    }

    pub fn of_element(x: &Element, twisted: bool) -> Self {
        let mut out = Self::zero(x.alphabet().clone());
        for (w, c) in x.terms() {
            out.accumulate(w.clone(), twisted, c.clone());
        }
        out
    }

    fn accumulate(&mut self, w: Word, twisted: bool, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (w, twisted);
        let entry = self.terms.entry(key.clone()).or_insert_with(scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((w, t), c) in &other.terms {
            out.accumulate(w.clone(), *t, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for ((w, t), v) in &self.terms {
            out.accumulate(w.clone(), *t, v * c);
        }
        out
    }

    /// Smash multiplication:
    /// `(w (x) h)(v (x) k) = w (h |> v) (x) h k`; with `h` group-like the
    /// action contributes only a parity sign.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for ((w, h), c) in &self.terms {
            for ((v, k), d) in &other.terms {
                let mut coeff = c * d;
                if *h && self.alphabet.parity_of_word(v).is_odd() {
                    coeff = -coeff;
                }
                out.accumulate(w.concat(v), h ^ k, coeff);
            }
        }
        out
    }

    /// Rewrites the element over the extended alphabet, placing the group
    /// symbol after the module word.
    pub fn embed(&self, extended: &Arc<Alphabet>, twist_index: u8) -> Element {
        let mut out = Element::zero(extended.clone());
        for ((w, t), c) in &self.terms {
            let mut symbols = w.symbols().to_vec();
            if *t {
                symbols.push(twist_index);
            }
            out.add_term(Word::from_symbols(symbols), c.clone());
        }
        out
    }
}

/// A rank-2 tensor over the smash product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashTensor {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<(SmashKey, SmashKey), Scalar>,
}

impl SmashTensor {
    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        SmashTensor {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    fn accumulate(&mut self, l: SmashKey, r: SmashKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        let entry = self.terms.entry(key.clone()).or_insert_with(scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn embed(&self, extended: &Arc<Alphabet>, twist_index: u8) -> Result<TensorElement, AlgebraError> {
        let mut out = TensorElement::zero(extended.clone(), 2)?;
        for (((wl, tl), (wr, tr)), c) in &self.terms {
            let make = |w: &Word, t: bool, coeff: Scalar| {
                let mut symbols = w.symbols().to_vec();
                if t {
                    symbols.push(twist_index);
                }
                Element::term(extended.clone(), Word::from_symbols(symbols), coeff)
            };
            let l = make(wl, *tl, c.clone());
            let r = make(wr, *tr, scalar::one());
            out = out.add(&TensorElement::of_elements(&[&l, &r])?)?;
        }
        Ok(out)
    }
}

/// Smash coproduct:
/// `Delta(b (x) h) = sum b1 (x) R2 h1 (x) (R1 |> b2) (x) h2`, with the
/// braided coproduct supplying `b1 (x) b2`.
pub fn smash_coproduct(
    x: &SmashElement,
    maps: &StructureMaps,
    r: &QuasitriangularData,
) -> Result<SmashTensor, AlgebraError> {
    let mut out = SmashTensor::zero(x.alphabet.clone());
    for ((w, h), c) in &x.terms {
        let inner = superhopf::coproduct_of_word(w, maps)?;
        for (slots, d) in inner.terms() {
            let (b1, b2) = (&slots[0], &slots[1]);
            for (r1, r2, cr) in &r.terms {
                let mut coeff = c * d * cr;
                if *r1 && x.alphabet.parity_of_word(b2).is_odd() {
                    coeff = -coeff;
                }
                out.accumulate(
                    (b1.clone(), *r2 ^ *h),
                    (b2.clone(), *h),
                    coeff,
                );
            }
        }
    }
    Ok(out)
}

/// Smash counit: `eps(b (x) h) = eps_B(b) eps_H(h)`.
pub fn smash_counit(x: &SmashElement, maps: &StructureMaps) -> Result<Scalar, AlgebraError> {
    let mut out = scalar::zero();
    for ((w, _), c) in &x.terms {
        let mut val = scalar::one();
        for s in w.symbols() {
            val *= maps.counit_image(*s)?;
            if val.is_zero() {
                break;
            }
        }
        out += c * &val;
    }
    Ok(out)
}

/// Smash antipode:
/// `S(b (x) h) = sum [(S_H(h2) u) |> (R1 |> S_B(b))] (x) S_H(R2 h1)`
/// with `u` the Drinfeld element and `S_B` the braided antipode.
pub fn smash_antipode(
    x: &SmashElement,
    maps: &StructureMaps,
    r: &QuasitriangularData,
) -> Result<SmashElement, AlgebraError> {
    let u = r.u_element();
    let mut out = SmashElement::zero(x.alphabet.clone());
    for ((w, h), c) in &x.terms {
        let sb = superhopf::antipode_of_word(w, maps)?;
        let outer = Cz2Element::basis(*h).antipode().multiply(&u);
        for (r1, r2, cr) in &r.terms {
            let acted = outer.act_on(&Cz2Element::basis(*r1).act_on(&sb));
            let twist = r2 ^ h; // S_H is the identity on the group part
            for (v, d) in acted.terms() {
                out.accumulate(v.clone(), twist, c * cr * d);
            }
        }
    }
    Ok(out)
}

/// An ordinary Hopf algebra produced from a braided one.
#[derive(Debug, Clone)]
pub struct HopfExtension {
    pub presentation: Presentation,
    pub maps: StructureMaps,
}

fn embed_relation(r: &Element, extended: &Arc<Alphabet>) -> Element {
    let mut out = Element::zero(extended.clone());
    for (w, c) in r.terms() {
        out.add_term(w.clone(), c.clone());
    }
    out
}

fn check_well_defined(p: &Presentation, maps: &StructureMaps) -> Result<(), AlgebraError> {
    let degree = p.default_degree().max(p.max_relation_degree() + 1);
    for r in p.relations() {
        let dr = superhopf::apply_coproduct(r, maps)?;
        if !quotient::tensor_normal_form(&dr, p, degree)?.is_zero() {
            return Err(AlgebraError::ConstructionFailure(format!(
                "coproduct does not preserve the ideal on `{}`",
                r.render()
            )));
        }
        if !superhopf::apply_counit(r, maps)?.is_zero() {
            return Err(AlgebraError::ConstructionFailure(format!(
                "counit does not vanish on `{}`",
                r.render()
            )));
        }
        let sr = superhopf::apply_antipode(r, maps)?;
        if !quotient::is_zero_mod_ideal(&sr, p, degree)? {
            return Err(AlgebraError::ConstructionFailure(format!(
                "antipode does not preserve the ideal on `{}`",
                r.render()
            )));
        }
    }
    Ok(())
}

/// Bosonisation of a braided group in the `CZ2` category: adjoins the
/// group-like `g` with `g^2 = 1` and `g x g = (-1)^{|x|} x`, and transports
/// the braided structure maps through the smash-product formulas.
pub fn bosonise(
    p: &Presentation,
    maps: &StructureMaps,
) -> Result<HopfExtension, AlgebraError> {
    if maps.flavor() != Flavor::Braided {
        return Err(AlgebraError::WrongFlavor { expected: "braided" });
    }
    let r = QuasitriangularData::cz2();
    if !r.verify() {
        return Err(AlgebraError::ConstructionFailure(
            "quasitriangular data failed verification".into(),
        ));
    }

    let base = p.alphabet().clone();
    let mut gens: Vec<Generator> = base.generators().to_vec();
    gens.push(Generator::group_like_g());
    let extended = Alphabet::new(gens);
    let twist_index = (extended.len() - 1) as u8;

    let mut relations: Vec<Element> = p
        .relations()
        .iter()
        .map(|rel| embed_relation(rel, &extended))
        .collect();
    let g = Element::generator(extended.clone(), twist_index);
    relations.push(g.multiply(&g)?.sub(&Element::one(extended.clone()))?);
    for i in 0..base.len() as u8 {
        let x = Element::generator(extended.clone(), i);
        let rel = if base.generator(i).parity().is_odd() {
            g.multiply(&x)?.add(&x.multiply(&g)?)?
        } else {
            g.multiply(&x)?.sub(&x.multiply(&g)?)?
        };
        relations.push(rel);
    }

    let name = match p.name().split_once(':') {
        Some(("pb", n)) => format!("pbg:{n}"),
        _ => format!("{}#g", p.name()),
    };
    let presentation = Presentation::new(name, extended.clone(), relations, p.default_degree());

    // structure maps on the generators via the generic smash formulas
    let mut out_maps = StructureMaps::empty(extended.clone(), Flavor::Plain);
    for i in 0..base.len() as u8 {
        let x = SmashElement::term(
            base.clone(),
            Word::from_symbols(vec![i]),
            false,
            scalar::one(),
        );
        let cop = smash_coproduct(&x, maps, &r)?.embed(&extended, twist_index)?;
        let cou = smash_counit(&x, maps)?;
        let ant = smash_antipode(&x, maps, &r)?.embed(&extended, twist_index);
        out_maps.set(i, cop, cou, ant);
    }
    let g_smash = SmashElement::term(base.clone(), Word::unit(), true, scalar::one());
    let cop = smash_coproduct(&g_smash, maps, &r)?.embed(&extended, twist_index)?;
    let cou = smash_counit(&g_smash, maps)?;
    let ant = smash_antipode(&g_smash, maps, &r)?.embed(&extended, twist_index);
    out_maps.set(twist_index, cop, cou, ant);

    check_well_defined(&presentation, &out_maps)?;
    Ok(HopfExtension {
        presentation,
        maps: out_maps,
    })
}

/// The alternative ordinary-Hopf extension by two mutually inverse
/// group-likes: `K+ K- = K- K+ = 1`, `{K^s, b} = 0`,
/// `Delta(b^s) = b^s (x) 1 + K^s (x) b^s`, `S(b^s) = b^s K^{-s}`,
/// `S(K^s) = K^{-s}`.
pub fn kpm_extend(p: &Presentation) -> Result<HopfExtension, AlgebraError> {
    let base = p.alphabet().clone();
    if base.generators().iter().any(|x| x.family() != Family::B) {
        return Err(AlgebraError::UnsupportedHost(p.name().to_string()));
    }
    let mut gens: Vec<Generator> = base.generators().to_vec();
    gens.push(Generator::k(crate::kernel::Sign::Plus));
    gens.push(Generator::k(crate::kernel::Sign::Minus));
    let extended = Alphabet::new(gens);
    let kp_index = (extended.len() - 2) as u8;
    let km_index = (extended.len() - 1) as u8;

    let one = Element::one(extended.clone());
    let kp = Element::generator(extended.clone(), kp_index);
    let km = Element::generator(extended.clone(), km_index);

    let mut relations: Vec<Element> = p
        .relations()
        .iter()
        .map(|rel| embed_relation(rel, &extended))
        .collect();
    relations.push(kp.multiply(&km)?.sub(&one)?);
    relations.push(km.multiply(&kp)?.sub(&one)?);
    for i in 0..base.len() as u8 {
        let x = Element::generator(extended.clone(), i);
        for k in [&kp, &km] {
            relations.push(k.multiply(&x)?.add(&x.multiply(k)?)?);
        }
    }

    let name = match p.name().split_once(':') {
        Some(("pb", n)) => format!("pbk:{n}"),
        _ => format!("{}#K", p.name()),
    };
    let presentation = Presentation::new(name, extended.clone(), relations, p.default_degree());

    let mut maps = StructureMaps::empty(extended.clone(), Flavor::Plain);
    for i in 0..base.len() as u8 {
        let sign_plus = base.generator(i).sign() == Some(crate::kernel::Sign::Plus);
        let k_same = if sign_plus { kp_index } else { km_index };
        let k_opp = if sign_plus { km_index } else { kp_index };
        let b = Element::generator(extended.clone(), i);
        let k_same_el = Element::generator(extended.clone(), k_same);
        let cop = TensorElement::of_elements(&[&b, &one])?
            .add(&TensorElement::of_elements(&[&k_same_el, &b])?)?;
        let ant = Element::term(
            extended.clone(),
            Word::from_symbols(vec![i, k_opp]),
            scalar::one(),
        );
        maps.set(i, cop, scalar::zero(), ant);
    }
    for (k, opp) in [(kp_index, km_index), (km_index, kp_index)] {
        let ke = Element::generator(extended.clone(), k);
        let cop = TensorElement::of_elements(&[&ke, &ke])?;
        maps.set(k, cop, scalar::one(), Element::generator(extended.clone(), opp));
    }

    check_well_defined(&presentation, &maps)?;
    Ok(HopfExtension {
        presentation,
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::braiding;
    use crate::presets;
    use crate::superhopf::{self, SampleConfig};

    fn pb1() -> (Presentation, StructureMaps) {
        presets::load("pb:1").unwrap()
    }

    #[test]
    fn quasitriangular_data_verifies() {
        let r = QuasitriangularData::cz2();
        assert!(r.verify());
        assert_eq!(r.u_element(), Cz2Element::g());
    }

    #[test]
    fn broken_r_matrix_fails_verification() {
        let mut r = QuasitriangularData::cz2();
        r.terms[3].2 = scalar::ratio(1, 2); // flip the g (x) g sign
        assert!(!r.verify());
    }

    #[test]
    fn action_is_parity_sign() {
        let (p, _) = pb1();
        let b = p.generator_element("b1+").unwrap();
        assert_eq!(cz2_action(true, &b), b.neg());
        let even = b.multiply(&p.generator_element("b1-").unwrap()).unwrap();
        assert_eq!(cz2_action(true, &even), even);
    }

    #[test]
    fn coaction_matches_parity() {
        let (p, _) = pb1();
        let r = QuasitriangularData::cz2();
        let b = p.generator_element("b1+").unwrap();
        let rho = coaction_from_action(&r, &b);
        assert_eq!(rho.len(), 1);
        assert!(rho[0].0);
        assert_eq!(rho[0].1, b);
        let even = b.multiply(&p.generator_element("b1-").unwrap()).unwrap();
        let rho = coaction_from_action(&r, &even);
        assert_eq!(rho.len(), 1);
        assert!(!rho[0].0);
        assert_eq!(rho[0].1, even);
    }

    #[test]
    fn braiding_via_r_is_signed_flip() {
        let p = presets::parabosonic(2).unwrap();
        let al = p.alphabet().clone();
        for i in 0..al.len() as u8 {
            for j in 0..al.len() as u8 {
                let v = Element::generator(al.clone(), i);
                let w = Element::generator(al.clone(), j);
                let lhs = braiding_via_r(&QuasitriangularData::cz2(), &v, &w).unwrap();
                let rhs = braiding(&v, &w).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bosonised_closed_forms() {
        let (p, m) = presets::load("pbg:1").unwrap();
        let b = p.generator_element("b1+").unwrap();
        let g = p.generator_element("g").unwrap();
        let one = p.one();
        let idx = p.alphabet().index_of("b1+").unwrap();
        let gidx = p.alphabet().index_of("g").unwrap();
        // Delta(b) = b (x) 1 + g (x) b
        let expected = TensorElement::of_elements(&[&b, &one])
            .unwrap()
            .add(&TensorElement::of_elements(&[&g, &b]).unwrap())
            .unwrap();
        assert_eq!(m.coproduct_image(idx).unwrap(), &expected);
        // S(b) = bg and S(g) = g
        assert_eq!(p.render(m.antipode_image(idx).unwrap()), "b1+*g");
        assert_eq!(m.antipode_image(gidx).unwrap(), &g);
        assert_eq!(m.counit_image(gidx).unwrap(), &scalar::one());
        // S(b) = -gb modulo the anticommutation relation
        let gb = g.multiply(&b).unwrap().neg();
        assert!(quotient::equal_mod_ideal(m.antipode_image(idx).unwrap(), &gb, &p, 3).unwrap());
    }

    #[test]
    fn generic_and_closed_antipode_agree_on_words() {
        // the smash antipode of degree-2 smash terms against the plain
        // antihomomorphism extension of the generator images
        let (pb, bm) = pb1();
        let (pg, m) = presets::load("pbg:1").unwrap();
        let r = QuasitriangularData::cz2();
        let twist = (pg.alphabet().len() - 1) as u8;
        let base = pb.alphabet().clone();
        for w in base.words_up_to(2) {
            for t in [false, true] {
                let x = SmashElement::term(base.clone(), w.clone(), t, scalar::one());
                let generic = smash_antipode(&x, &bm, &r)
                    .unwrap()
                    .embed(pg.alphabet(), twist);
                let mut symbols = w.symbols().to_vec();
                if t {
                    symbols.push(twist);
                }
                let embedded = Element::term(
                    pg.alphabet().clone(),
                    Word::from_symbols(symbols),
                    scalar::one(),
                );
                let closed = superhopf::apply_antipode(&embedded, &m).unwrap();
                assert!(
                    quotient::equal_mod_ideal(&generic, &closed, &pg, 6).unwrap(),
                    "word {:?} twist {t}",
                    w
                );
            }
        }
    }

    #[test]
    fn gxg_conjugation() {
        let (p, _) = presets::load("pbg:1").unwrap();
        let b = p.generator_element("b1+").unwrap();
        let g = p.generator_element("g").unwrap();
        let gbg = g.multiply(&b).unwrap().multiply(&g).unwrap();
        assert!(quotient::equal_mod_ideal(&gbg, &b.neg(), &p, 3).unwrap());
        let even = b.multiply(&p.generator_element("b1-").unwrap()).unwrap();
        let geg = g.multiply(&even).unwrap().multiply(&g).unwrap();
        assert!(quotient::equal_mod_ideal(&geg, &even, &p, 4).unwrap());
    }

    #[test]
    fn bosonised_hopf_axioms() {
        let (p, m) = presets::load("pbg:1").unwrap();
        let report = superhopf::check_hopf_axioms(&p, &m, 4, SampleConfig::default()).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn k_extension_closed_forms() {
        let (p, m) = presets::load("pbk:1").unwrap();
        let kp = p.generator_element("K+").unwrap();
        let km = p.generator_element("K-").unwrap();
        let b = p.generator_element("b1+").unwrap();
        let one = p.one();
        let bidx = p.alphabet().index_of("b1+").unwrap();
        let kpidx = p.alphabet().index_of("K+").unwrap();
        let expected = TensorElement::of_elements(&[&b, &one])
            .unwrap()
            .add(&TensorElement::of_elements(&[&kp, &b]).unwrap())
            .unwrap();
        assert_eq!(m.coproduct_image(bidx).unwrap(), &expected);
        assert_eq!(p.render(m.antipode_image(bidx).unwrap()), "b1+*K-");
        assert_eq!(m.antipode_image(kpidx).unwrap(), &km);
        // K+ K- = 1 but K+ K+ is not 1: the extension is genuinely larger
        assert!(quotient::equal_mod_ideal(
            &kp.multiply(&km).unwrap(),
            &one,
            &p,
            3
        )
        .unwrap());
        assert!(!quotient::equal_mod_ideal(
            &kp.multiply(&kp).unwrap(),
            &one,
            &p,
            3
        )
        .unwrap());
    }

    #[test]
    fn k_extension_hopf_axioms() {
        let (p, m) = presets::load("pbk:1").unwrap();
        let report = superhopf::check_hopf_axioms(&p, &m, 4, SampleConfig::default()).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn bosonise_rejects_plain_input() {
        let p = presets::parafermionic(1).unwrap();
        let m = StructureMaps::primitive(&p, Flavor::Plain);
        assert!(matches!(bosonise(&p, &m), Err(AlgebraError::WrongFlavor { .. })));
    }

    #[test]
    fn kpm_rejects_fermionic_host() {
        let p = presets::parafermionic(1).unwrap();
        assert!(matches!(
            kpm_extend(&p),
            Err(AlgebraError::UnsupportedHost(_))
        ));
    }
}
