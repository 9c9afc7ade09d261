//! Quotient-algebra arithmetic at bounded filtration degree.
//!
//! A [`Presentation`] names an algebra by generators and relation elements.
//! For a truncation degree `D`, [`build_ideal_basis`] spans the degree-`<= D`
//! component of the two-sided ideal, `span{u*r*v}`, and row-reduces it to the
//! canonical fully reduced echelon form.  [`normal_form`] then picks the
//! canonical coset representative of any element of degree `<= D`.
//!
//! Completed bases are immutable and memoized; concurrent lookups for the
//! same key are serialized by the cache lock.
//!
//! ```
//! use parastat::{presets, quotient};
//!
//! let pb = presets::parabosonic(1).unwrap();
//! // 13 = sum of the first four coefficients of (1+t)^2 / (1-t^2)^3
//! assert_eq!(quotient::filtration_dimension(&pb, 3).unwrap(), 13);
//! ```

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::error::AlgebraError;
use crate::kernel::{Alphabet, Element, Generator, TensorElement, Word};
use crate::linalg::RowSpace;
use crate::scalar::Scalar;

/// A named algebra: ordered generators, relation elements, default degree.
#[derive(Debug, Clone)]
pub struct Presentation {
    name: String,
    alphabet: Arc<Alphabet>,
    relations: Vec<Element>,
    default_degree: u32,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        alphabet: Arc<Alphabet>,
        relations: Vec<Element>,
        default_degree: u32,
    ) -> Presentation {
        for r in &relations {
            debug_assert!(
                r.homogeneous_parity().is_some() || r.is_zero(),
                "relations must be parity-homogeneous"
            );
        }
        Presentation {
            name: name.into(),
            alphabet,
            relations,
            default_degree,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn generators(&self) -> &[Generator] {
        self.alphabet.generators()
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    pub fn default_degree(&self) -> u32 {
        self.default_degree
    }

    /// The generator with the given token, as an element.
    pub fn generator_element(&self, token: &str) -> Option<Element> {
        self.alphabet
            .index_of(token)
            .map(|i| Element::generator(self.alphabet.clone(), i))
    }

    pub fn one(&self) -> Element {
        Element::one(self.alphabet.clone())
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.alphabet.clone())
    }

    pub fn render(&self, e: &Element) -> String {
        e.render()
    }

    /// Largest degree among the relation elements.
    pub fn max_relation_degree(&self) -> u32 {
        self.relations.iter().map(|r| r.degree()).max().unwrap_or(0)
    }

    /// Cache key: name plus a structural fingerprint of the relations, so a
    /// user-edited presentation that reuses a preset name does not collide.
    fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.name.hash(&mut h);
        for g in self.alphabet.generators() {
            g.token().hash(&mut h);
        }
        for r in &self.relations {
            r.render().hash(&mut h);
        }
        h.finish()
    }
}

/// Fully reduced echelon basis of the ideal's degree-`<= D` component.
#[derive(Debug)]
pub struct ReducedIdealBasis {
    degree: u32,
    rows: RowSpace,
    word_count: u64,
}

impl ReducedIdealBasis {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rows.rank()
    }

    pub fn rows(&self) -> &[Element] {
        self.rows.rows()
    }

    pub fn word_count(&self) -> u64 {
        self.word_count
    }

    pub fn reduce(&self, e: &Element) -> Element {
        self.rows.reduce(e)
    }
}

type Cache = Mutex<HashMap<(u64, u32), Arc<ReducedIdealBasis>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds (or fetches from the cache) the reduced ideal basis at degree `D`.
pub fn build_ideal_basis(
    p: &Presentation,
    degree: u32,
) -> Result<Arc<ReducedIdealBasis>, AlgebraError> {
    let key = (p.fingerprint(), degree);
    let mut guard = cache().lock().unwrap();
    if let Some(b) = guard.get(&key) {
        return Ok(b.clone());
    }
    let basis = Arc::new(compute_basis(p, degree));
    guard.insert(key, basis.clone());
    Ok(basis)
}

fn compute_basis(p: &Presentation, degree: u32) -> ReducedIdealBasis {
    let mut rows = RowSpace::new();
    for r in p.relations() {
        if r.is_zero() || r.degree() > degree {
            // a relation that does not fit below the truncation contributes
            // nothing to this filtration component
            continue;
        }
        let budget = degree - r.degree();
        // all u*r*v with deg(u) + deg(v) <= budget
        for du in 0..=budget {
            let us = p.alphabet().words_up_to(du);
            let us: Vec<&Word> = us.iter().filter(|u| u.degree() == du).collect();
            let vs = p.alphabet().words_up_to(budget - du);
            for u in &us {
                let ue = Element::term(p.alphabet().clone(), (*u).clone(), Scalar::one());
                let ur = ue.multiply(r).expect("same alphabet");
                for v in &vs {
                    let ve = Element::term(p.alphabet().clone(), v.clone(), Scalar::one());
                    let urv = ur.multiply(&ve).expect("same alphabet");
                    rows.insert(&urv);
                }
            }
        }
    }
    rows.fully_reduce();
    ReducedIdealBasis {
        degree,
        rows,
        word_count: p.alphabet().word_count(degree),
    }
}

/// Canonical coset representative of `x` in the quotient at degree `D`.
pub fn normal_form(x: &Element, p: &Presentation, degree: u32) -> Result<Element, AlgebraError> {
    if x.degree() > degree {
        return Err(AlgebraError::TruncationExceeded {
            degree,
            required: x.degree(),
        });
    }
    let basis = build_ideal_basis(p, degree)?;
    Ok(basis.reduce(x))
}

/// True iff `x` and `y` have the same normal form at degree `D`.
pub fn equal_mod_ideal(
    x: &Element,
    y: &Element,
    p: &Presentation,
    degree: u32,
) -> Result<bool, AlgebraError> {
    let diff = x.sub(y)?;
    Ok(normal_form(&diff, p, degree)?.is_zero())
}

/// Above this many words the degree-bounded elimination space is considered
/// infeasible and [`is_zero_mod_ideal`] tries the rewriting certificate
/// before falling back to elimination.
pub const ELIMINATION_WORD_LIMIT: u64 = 6000;

/// Zero test modulo the ideal that picks its route by the size of the
/// elimination space: canonical elimination when the degree-bounded word
/// space is small enough, the [`reduce_by_relations`] certificate otherwise.
/// Rewriting failure falls back to the (possibly expensive) elimination so
/// the answer is never wrong, only slow.  The degree is raised to cover `x`.
pub fn is_zero_mod_ideal(
    x: &Element,
    p: &Presentation,
    degree: u32,
) -> Result<bool, AlgebraError> {
    let degree = degree.max(x.degree());
    if p.alphabet().word_count(degree) <= ELIMINATION_WORD_LIMIT {
        return Ok(normal_form(x, p, degree)?.is_zero());
    }
    if reduce_by_relations(x, p).is_zero() {
        return Ok(true);
    }
    Ok(normal_form(x, p, degree)?.is_zero())
}

/// Words of length `<= D` minus the rank of the ideal component.
pub fn filtration_dimension(p: &Presentation, degree: u32) -> Result<u64, AlgebraError> {
    let basis = build_ideal_basis(p, degree)?;
    Ok(basis.word_count() - basis.rank() as u64)
}

/// Slotwise normal form of a tensor, expanded multilinearly.  Zero iff the
/// tensor represents 0 in the tensor power of the quotient.
pub fn tensor_normal_form(
    t: &TensorElement,
    p: &Presentation,
    degree: u32,
) -> Result<TensorElement, AlgebraError> {
    for (tuple, _) in t.terms() {
        for w in tuple {
            if w.degree() > degree {
                return Err(AlgebraError::TruncationExceeded {
                    degree,
                    required: w.degree(),
                });
            }
        }
    }
    let basis = build_ideal_basis(p, degree)?;
    t.map_slotwise(|_, w| {
        let e = Element::term(p.alphabet().clone(), w.clone(), Scalar::one());
        Ok(basis.reduce(&e))
    })
}

/// Rewriting-based reduction: repeatedly eliminates the largest word that
/// contains some relation's leading word as a factor.
///
/// The result is a valid coset representative but is canonical only when the
/// relation set happens to be confluent; reaching zero, however, is always a
/// sound certificate of ideal membership, with all cofactor degrees bounded
/// by the degree of `x`.  High-degree checks use this as a fast path where
/// the full elimination space would be astronomically large.
pub fn reduce_by_relations(x: &Element, p: &Presentation) -> Element {
    // leading words paired with leading-coefficient-normalized relations
    let rules: Vec<(Word, Element)> = p
        .relations()
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| {
            let (w, c) = r.leading().unwrap();
            (w.clone(), r.scale(&(Scalar::one() / c.clone())))
        })
        .collect();
    let mut cur = x.clone();
    loop {
        let mut hit: Option<(Word, Scalar, usize, usize)> = None;
        'outer: for (w, c) in cur.terms().rev() {
            for (ri, (lead, _)) in rules.iter().enumerate() {
                if let Some(pos) = w.find_factor(lead) {
                    hit = Some((w.clone(), c.clone(), ri, pos));
                    break 'outer;
                }
            }
        }
        let Some((w, c, ri, pos)) = hit else {
            return cur;
        };
        let (lead, rule) = &rules[ri];
        let u = w.slice(0, pos);
        let v = w.slice(pos + lead.symbols().len(), w.symbols().len());
        let ue = Element::term(p.alphabet().clone(), u, c);
        let ve = Element::term(p.alphabet().clone(), v, Scalar::one());
        let subtrahend = ue
            .multiply(rule)
            .and_then(|m| m.multiply(&ve))
            .expect("same alphabet");
        cur = cur.sub(&subtrahend).expect("same alphabet");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::scalar;

    #[test]
    fn pb1_ideal_empty_below_relation_degree() {
        let p = presets::parabosonic(1).unwrap();
        // no relation fits below degree 3, so the component is zero and the
        // full word space survives
        assert_eq!(build_ideal_basis(&p, 2).unwrap().rank(), 0);
        assert_eq!(filtration_dimension(&p, 2).unwrap(), 7);
    }

    #[test]
    fn pb1_rank_at_degree_3() {
        let p = presets::parabosonic(1).unwrap();
        let b = build_ideal_basis(&p, 3).unwrap();
        assert_eq!(b.word_count(), 15);
        assert_eq!(b.rank(), 2);
        assert_eq!(filtration_dimension(&p, 3).unwrap(), 13);
    }

    #[test]
    fn pf1_rank_at_degree_3() {
        let p = presets::parafermionic(1).unwrap();
        let b = build_ideal_basis(&p, 3).unwrap();
        // 15 length-<=3 words minus dim F_3(U(so(3))) = 13
        assert_eq!(b.rank(), 2);
        assert_eq!(filtration_dimension(&p, 3).unwrap(), 13);
    }

    #[test]
    fn worked_normal_forms() {
        let pb = presets::parabosonic(1).unwrap();
        let bp = pb.generator_element("b1+").unwrap();
        let bm = pb.generator_element("b1-").unwrap();
        let x = bp.anticommutator(&bm).unwrap().commutator(&bm).unwrap();
        let nf = normal_form(&x, &pb, 3).unwrap();
        assert_eq!(nf, bm.scale(&scalar::int(-2)));

        let pf = presets::parafermionic(1).unwrap();
        let fp = pf.generator_element("f1+").unwrap();
        let fm = pf.generator_element("f1-").unwrap();
        let y = fp.commutator(&fm).unwrap().commutator(&fm).unwrap();
        let nf = normal_form(&y, &pf, 3).unwrap();
        assert_eq!(nf, fm.scale(&scalar::int(-2)));
    }

    #[test]
    fn normal_form_of_zero_is_zero() {
        let p = presets::parabosonic(1).unwrap();
        assert!(normal_form(&p.zero(), &p, 3).unwrap().is_zero());
    }

    #[test]
    fn distinct_cosets_detected() {
        let p = presets::parabosonic(2).unwrap();
        let b1p = p.generator_element("b1+").unwrap();
        let b2p = p.generator_element("b2+").unwrap();
        let xy = b1p.multiply(&b2p).unwrap();
        let yx = b2p.multiply(&b1p).unwrap();
        assert!(!equal_mod_ideal(&xy, &yx, &p, 3).unwrap());
    }

    #[test]
    fn canonicity_on_random_coset_pairs() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let p = presets::parabosonic(1).unwrap();
        let basis = build_ideal_basis(&p, 4).unwrap();
        let rows = basis.rows();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        let words = p.alphabet().words_up_to(4);
        for _ in 0..200 {
            // random x, and y = x + random ideal combination
            let mut x = p.zero();
            for _ in 0..rng.gen_range(1..=3) {
                let w = words[rng.gen_range(0..words.len())].clone();
                x.add_term(w, scalar::int(*[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap()));
            }
            let mut y = x.clone();
            for _ in 0..rng.gen_range(1..=2) {
                let r = &rows[rng.gen_range(0..rows.len())];
                y = y.add(&r.scale(&scalar::int(rng.gen_range(-2..=2)))).unwrap();
            }
            assert_eq!(
                normal_form(&x, &p, 4).unwrap(),
                normal_form(&y, &p, 4).unwrap()
            );
        }
    }

    #[test]
    fn reduction_compatible_with_multiplication() {
        let p = presets::parabosonic(1).unwrap();
        let bp = p.generator_element("b1+").unwrap();
        let bm = p.generator_element("b1-").unwrap();
        let x = bp.anticommutator(&bm).unwrap(); // degree 2
        let nfx = normal_form(&x, &p, 4).unwrap();
        let lhs = normal_form(&nfx.multiply(&bm).unwrap(), &p, 4).unwrap();
        let rhs = normal_form(&x.multiply(&bm).unwrap(), &p, 4).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_monotone_in_degree() {
        let p = presets::parabosonic(1).unwrap();
        let mut prev = 0;
        for d in 0..=4 {
            let dim = filtration_dimension(&p, d).unwrap();
            assert!(dim >= prev);
            prev = dim;
        }
    }

    #[test]
    fn rewrite_reduction_certifies_relation_multiples() {
        let p = presets::parabosonic(1).unwrap();
        let bp = p.generator_element("b1+").unwrap();
        let r = &p.relations()[0];
        let x = bp.multiply(r).unwrap().multiply(&bp).unwrap();
        assert!(reduce_by_relations(&x, &p).is_zero());
    }

    #[test]
    fn tensor_normal_form_slotwise() {
        let p = presets::parabosonic(1).unwrap();
        let bp = p.generator_element("b1+").unwrap();
        let bm = p.generator_element("b1-").unwrap();
        let rel = bp
            .anticommutator(&bm)
            .unwrap()
            .commutator(&bm)
            .unwrap()
            .add(&bm.scale(&scalar::int(2)))
            .unwrap();
        let t = TensorElement::of_elements(&[&rel, &p.one()]).unwrap();
        assert!(tensor_normal_form(&t, &p, 3).unwrap().is_zero());

        let unit = TensorElement::unit(p.alphabet().clone(), 2).unwrap();
        assert_eq!(tensor_normal_form(&unit, &p, 3).unwrap(), unit);
    }
}
