//! The built-in algebra families and the executable content of their
//! Lie-theoretic structure.
//!
//! Factories build the parabosonic algebra `pb:n` (2n odd generators with the
//! trilinear commutator/anticommutator relations), the parafermionic algebra
//! `pf:n` (2n even generators, purely commutator relations), and — through
//! the bosonisation module — the two ordinary Hopf extensions `pbg:n` and
//! `pbk:n`.
//!
//! [`lie_closure_check`] verifies that the degree-1 and degree-2 components
//! span a (super-)Lie algebra of the expected dimension: `so(2n+1)` for the
//! parafermions, `osp(1,2n)` for the parabosons.  [`u_n_check`] and
//! [`casimir_checks`] cover the `u(n)` subalgebra generated by
//! `N_lm = {b_l+, b_m-}/2` and the commutation of powers of the linear
//! Casimir with the generators.
//!
//! ```
//! use parastat::presets;
//!
//! let pf = presets::parafermionic(2).unwrap();
//! let (report, table) = presets::lie_closure_check(&pf, 4).unwrap();
//! assert!(report.all_passed());
//! assert_eq!(table.dim(), 10); // so(5)
//! ```

use std::collections::HashSet;

use crate::bosonisation;
use crate::error::AlgebraError;
use crate::kernel::{Element, Family, Generator, Parity, Sign};
use num_traits::Zero;
use crate::linalg::{self, RowSpace};
use crate::quotient::{self, Presentation};
use crate::report::CheckReport;
use crate::scalar::{self, Scalar};
use crate::superhopf::{Flavor, StructureMaps};

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

/// One instance of a defining relation, with the substitution that produced
/// it.  Factories deduplicate these; the iterator form exists so tests can
/// sweep every substitution.
#[derive(Debug, Clone)]
pub struct RelationInstance {
    pub label: String,
    pub element: Element,
}

fn boson_alphabet(n: u32) -> std::sync::Arc<crate::kernel::Alphabet> {
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push(Generator::boson(i, Sign::Plus));
        gens.push(Generator::boson(i, Sign::Minus));
    }
    crate::kernel::Alphabet::new(gens)
}

fn fermion_alphabet(n: u32) -> std::sync::Arc<crate::kernel::Alphabet> {
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push(Generator::fermion(i, Sign::Plus));
        gens.push(Generator::fermion(i, Sign::Minus));
    }
    crate::kernel::Alphabet::new(gens)
}

fn gen_index(i: u32, s: Sign) -> u8 {
    (2 * (i - 1) + if s == Sign::Minus { 1 } else { 0 }) as u8
}

/// All instances of the parabosonic defining relation
/// `[{b_i^xi, b_j^eta}, b_k^eps] - (eps - eta) d_jk b_i^xi - (eps - xi) d_ik b_j^eta`
/// over `xi, eta, eps = +-` and `i, j, k = 1..n`.
pub fn parabosonic_relation_instances(n: u32) -> Vec<RelationInstance> {
    let al = boson_alphabet(n);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for xi in SIGNS {
                    for eta in SIGNS {
                        for eps in SIGNS {
                            let bi = Element::generator(al.clone(), gen_index(i, xi));
                            let bj = Element::generator(al.clone(), gen_index(j, eta));
                            let bk = Element::generator(al.clone(), gen_index(k, eps));
                            let mut e = bi
                                .anticommutator(&bj)
                                .unwrap()
                                .commutator(&bk)
                                .unwrap();
                            if j == k {
                                let c = scalar::int(eps.value() - eta.value());
                                e = e.sub(&bi.scale(&c)).unwrap();
                            }
                            if i == k {
                                let c = scalar::int(eps.value() - xi.value());
                                e = e.sub(&bj.scale(&c)).unwrap();
                            }
                            out.push(RelationInstance {
                                label: format!(
                                    "[{{b{i}{},b{j}{}}},b{k}{}]",
                                    xi.symbol(),
                                    eta.symbol(),
                                    eps.symbol()
                                ),
                                element: e,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// All instances of the parafermionic defining relation
/// `[[f_i^xi, f_j^eta], f_k^eps] - (eps - eta)^2/2 d_jk f_i^xi + (eps - xi)^2/2 d_ik f_j^eta`.
pub fn parafermionic_relation_instances(n: u32) -> Vec<RelationInstance> {
    let al = fermion_alphabet(n);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for xi in SIGNS {
                    for eta in SIGNS {
                        for eps in SIGNS {
                            let fi = Element::generator(al.clone(), gen_index(i, xi));
                            let fj = Element::generator(al.clone(), gen_index(j, eta));
                            let fk = Element::generator(al.clone(), gen_index(k, eps));
                            let mut e = fi.commutator(&fj).unwrap().commutator(&fk).unwrap();
                            if j == k {
                                let d = eps.value() - eta.value();
                                e = e.sub(&fi.scale(&scalar::ratio(d * d, 2))).unwrap();
                            }
                            if i == k {
                                let d = eps.value() - xi.value();
                                e = e.add(&fj.scale(&scalar::ratio(d * d, 2))).unwrap();
                            }
                            out.push(RelationInstance {
                                label: format!(
                                    "[[f{i}{},f{j}{}],f{k}{}]",
                                    xi.symbol(),
                                    eta.symbol(),
                                    eps.symbol()
                                ),
                                element: e,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

fn dedupe(instances: Vec<RelationInstance>) -> Vec<Element> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for inst in instances {
        if inst.element.is_zero() {
            continue;
        }
        // key on the leading-coefficient-normalized form so that scalar
        // multiples of one relation collapse to a single representative
        let (_, lc) = inst.element.leading().unwrap();
        let normalized = inst.element.scale(&(scalar::one() / lc.clone()));
        if seen.insert(normalized.render()) {
            out.push(normalized);
        }
    }
    out
}

/// The parabosonic algebra on `2n` generators.
pub fn parabosonic(n: u32) -> Result<Presentation, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::InvalidArgument(format!(
            "parabosonic algebra needs n >= 1, got {n}"
        )));
    }
    Ok(Presentation::new(
        format!("pb:{n}"),
        boson_alphabet(n),
        dedupe(parabosonic_relation_instances(n)),
        4,
    ))
}

/// The parafermionic algebra on `2n` generators.
pub fn parafermionic(n: u32) -> Result<Presentation, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::InvalidArgument(format!(
            "parafermionic algebra needs n >= 1, got {n}"
        )));
    }
    Ok(Presentation::new(
        format!("pf:{n}"),
        fermion_alphabet(n),
        dedupe(parafermionic_relation_instances(n)),
        4,
    ))
}

/// Loads a preset by CLI name: `pb:n`, `pf:n`, `pbg:n`, `pbk:n`, together
/// with its canonical structure maps.
pub fn load(name: &str) -> Result<(Presentation, StructureMaps), AlgebraError> {
    let (kind, n) = name
        .split_once(':')
        .ok_or_else(|| AlgebraError::InvalidArgument(format!("unknown algebra `{name}`")))?;
    let n: u32 = n
        .parse()
        .map_err(|_| AlgebraError::InvalidArgument(format!("bad index in `{name}`")))?;
    match kind {
        "pb" => {
            let p = parabosonic(n)?;
            let m = StructureMaps::primitive(&p, Flavor::Braided);
            Ok((p, m))
        }
        "pf" => {
            let p = parafermionic(n)?;
            let m = StructureMaps::primitive(&p, Flavor::Plain);
            Ok((p, m))
        }
        "pbg" => {
            let p = parabosonic(n)?;
            let m = StructureMaps::primitive(&p, Flavor::Braided);
            let boz = bosonisation::bosonise(&p, &m)?;
            Ok((boz.presentation, boz.maps))
        }
        "pbk" => {
            let p = parabosonic(n)?;
            let ext = bosonisation::kpm_extend(&p)?;
            Ok((ext.presentation, ext.maps))
        }
        _ => Err(AlgebraError::InvalidArgument(format!(
            "unknown algebra family `{kind}`"
        ))),
    }
}

/// Structure constants of the (super-)Lie algebra spanned by the degree-1
/// generators and their degree-2 brackets, all stored as normal forms.
#[derive(Debug, Clone)]
pub struct BracketTable {
    pub basis: Vec<Element>,
    pub parity: Vec<Parity>,
    /// `brackets[i][j]` are the coordinates of `<x_i, x_j>` over `basis`.
    pub brackets: Vec<Vec<Vec<Scalar>>>,
}

impl BracketTable {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.parity.iter().filter(|p| p.is_odd()).count()
    }
}

fn super_bracket(x: &Element, y: &Element, px: Parity, py: Parity) -> Element {
    if px.is_odd() && py.is_odd() {
        x.anticommutator(y).unwrap()
    } else {
        x.commutator(y).unwrap()
    }
}

/// Builds the spanning set of Lemma-style generators for a preset: the
/// algebra generators plus their pairwise degree-2 brackets.
fn closure_spanning_set(p: &Presentation) -> Vec<(Element, Parity)> {
    let al = p.alphabet().clone();
    let odd = al.generators()[0].family() == Family::B;
    let count = al.len() as u8;
    let mut out = Vec::new();
    for i in 0..count {
        let e = Element::generator(al.clone(), i);
        out.push((e, al.generator(i).parity()));
    }
    for i in 0..count {
        for j in i..count {
            let x = Element::generator(al.clone(), i);
            let y = Element::generator(al.clone(), j);
            if odd {
                // {b_i, b_j} is symmetric; i <= j covers every pair
                out.push((x.anticommutator(&y).unwrap(), Parity::Even));
            } else {
                // [f_i, f_j] is antisymmetric; skip the vanishing diagonal
                if i != j {
                    out.push((x.commutator(&y).unwrap(), Parity::Even));
                }
            }
        }
    }
    out
}

/// Verifies closure, dimensions, super-antisymmetry and the (super-)Jacobi
/// identity for the bracket structure of a `pb:n` or `pf:n` preset.
pub fn lie_closure_check(
    p: &Presentation,
    degree: u32,
) -> Result<(CheckReport, BracketTable), AlgebraError> {
    if degree < 4 {
        return Err(AlgebraError::TruncationExceeded {
            degree,
            required: 4,
        });
    }
    let mut report = CheckReport::new(p.name(), degree, 0);
    let n = p.alphabet().len() / 2;
    let super_case = p.alphabet().generators()[0].family() == Family::B;

    // reduce the spanning set to a basis of normal forms
    let mut rowspace = RowSpace::new();
    let mut basis = Vec::new();
    let mut parity = Vec::new();
    for (e, par) in closure_spanning_set(p) {
        let nf = quotient::normal_form(&e, p, degree)?;
        if rowspace.insert(&nf) {
            basis.push(nf);
            parity.push(par);
        }
    }

    let expected_even = n * (2 * n + 1);
    let expected_odd = if super_case { 2 * n } else { 0 };
    let even = parity.iter().filter(|q| !q.is_odd()).count();
    let odd = parity.iter().filter(|q| q.is_odd()).count();
    report.record(
        "lie.dimension",
        even == expected_even && odd == expected_odd,
        format!(
            "even {even} (expected {expected_even}), odd {odd} (expected {expected_odd})"
        ),
    );

    // closure: every bracket of basis elements lies back in the span
    let dim = basis.len();
    let mut brackets = vec![vec![Vec::new(); dim]; dim];
    let mut closure_ok = true;
    let mut closure_witness = String::new();
    for i in 0..dim {
        for j in 0..dim {
            let br = super_bracket(&basis[i], &basis[j], parity[i], parity[j]);
            let nf = quotient::normal_form(&br, p, degree)?;
            match linalg::express_in_span(&basis, &nf) {
                Some(coords) => brackets[i][j] = coords,
                None => {
                    closure_ok = false;
                    closure_witness =
                        format!("bracket ({i},{j}) = `{}` escapes the span", nf.render());
                    brackets[i][j] = vec![scalar::zero(); dim];
                }
            }
        }
    }
    report.record("lie.closure", closure_ok, closure_witness);

    let table = BracketTable {
        basis,
        parity,
        brackets,
    };

    // super-antisymmetry: <x,y> = -(-1)^{|x||y|} <y,x>
    let mut anti_ok = true;
    let mut anti_witness = String::new();
    'anti: for i in 0..dim {
        for j in 0..dim {
            let sign = if table.parity[i].is_odd() && table.parity[j].is_odd() {
                scalar::one()
            } else {
                -scalar::one()
            };
            for k in 0..dim {
                if table.brackets[i][j][k] != &sign * &table.brackets[j][i][k] {
                    anti_ok = false;
                    anti_witness = format!("pair ({i},{j}) component {k}");
                    break 'anti;
                }
            }
        }
    }
    report.record("lie.super-antisymmetry", anti_ok, anti_witness);

    // super-Jacobi on all basis triples, computed from the structure constants:
    // (-1)^{|x||z|}<x,<y,z>> + (-1)^{|y||x|}<y,<z,x>> + (-1)^{|z||y|}<z,<x,y>> = 0
    let mut jacobi_ok = true;
    let mut jacobi_witness = String::new();
    'jac: for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let mut total = vec![scalar::zero(); dim];
                let cyclic = [(x, y, z), (y, z, x), (z, x, y)];
                for (a, b, c) in cyclic {
                    let sign = if table.parity[a].is_odd() && table.parity[c].is_odd() {
                        -scalar::one()
                    } else {
                        scalar::one()
                    };
                    // <a, <b, c>>
                    for k in 0..dim {
                        let inner = &table.brackets[b][c][k];
                        if inner.is_zero() {
                            continue;
                        }
                        for (m, slot) in total.iter_mut().enumerate() {
                            *slot += &sign * inner * &table.brackets[a][k][m];
                        }
                    }
                }
                if total.iter().any(|c| !c.is_zero()) {
                    jacobi_ok = false;
                    jacobi_witness = format!("triple ({x},{y},{z})");
                    break 'jac;
                }
            }
        }
    }
    report.record("lie.super-jacobi", jacobi_ok, jacobi_witness);

    Ok((report, table))
}

fn require_parabosonic(p: &Presentation) -> Result<u32, AlgebraError> {
    if p.generators().iter().any(|g| g.family() != Family::B) {
        return Err(AlgebraError::InvalidArgument(format!(
            "`{}` is not a parabosonic preset",
            p.name()
        )));
    }
    Ok((p.generators().len() / 2) as u32)
}

/// `N_lm = {b_l+, b_m-} / 2`, row-major over `(l, m)`.
pub fn u_n_generators(p: &Presentation) -> Result<Vec<Element>, AlgebraError> {
    let n = require_parabosonic(p)?;
    let al = p.alphabet().clone();
    let mut out = Vec::new();
    for l in 1..=n {
        for m in 1..=n {
            let bl = Element::generator(al.clone(), gen_index(l, Sign::Plus));
            let bm = Element::generator(al.clone(), gen_index(m, Sign::Minus));
            out.push(bl.anticommutator(&bm)?.scale(&scalar::ratio(1, 2)));
        }
    }
    Ok(out)
}

/// Checks `[N_kl, N_mq] = d_lm N_kq - d_kq N_ml` modulo the ideal.
pub fn u_n_check(p: &Presentation, degree: u32) -> Result<CheckReport, AlgebraError> {
    let n = require_parabosonic(p)?;
    if degree < 4 {
        return Err(AlgebraError::TruncationExceeded {
            degree,
            required: 4,
        });
    }
    let mut report = CheckReport::new(p.name(), degree, 0);
    let gens = u_n_generators(p)?;
    let idx = |a: u32, b: u32| ((a - 1) * n + (b - 1)) as usize;
    let mut ok = true;
    let mut witness = String::new();
    'outer: for k in 1..=n {
        for l in 1..=n {
            for m in 1..=n {
                for q in 1..=n {
                    let lhs = gens[idx(k, l)].commutator(&gens[idx(m, q)])?;
                    let mut rhs = p.zero();
                    if l == m {
                        rhs = rhs.add(&gens[idx(k, q)])?;
                    }
                    if k == q {
                        rhs = rhs.sub(&gens[idx(m, l)])?;
                    }
                    if !quotient::equal_mod_ideal(&lhs, &rhs, p, degree)? {
                        ok = false;
                        witness = format!("[N{k}{l}, N{m}{q}]");
                        break 'outer;
                    }
                }
            }
        }
    }
    report.record("u_n.commutators", ok, witness);
    Ok(report)
}

/// The linear Casimir of the `u(n)` subalgebra: `sum_i N_ii`.
pub fn number_operator(p: &Presentation) -> Result<Element, AlgebraError> {
    let n = require_parabosonic(p)?;
    let gens = u_n_generators(p)?;
    let mut out = p.zero();
    for i in 0..n as usize {
        out = out.add(&gens[i * n as usize + i])?;
    }
    Ok(out)
}

/// Verifies `[N, b_i^+-] = +- b_i^+-` and, for `m = 1..M`, the power identity
/// `[N^m, b_i^+] = b_i^+((N+1)^m - N^m)` modulo the ideal, each instance at
/// its own degree `2m+1`.
pub fn casimir_checks(
    p: &Presentation,
    max_power: u32,
    degree: u32,
) -> Result<CheckReport, AlgebraError> {
    let n = require_parabosonic(p)?;
    if degree < 2 * max_power + 1 {
        return Err(AlgebraError::TruncationExceeded {
            degree,
            required: 2 * max_power + 1,
        });
    }
    let mut report = CheckReport::new(p.name(), degree, 0);
    let nop = number_operator(p)?;
    let al = p.alphabet().clone();

    for i in 1..=n {
        for s in SIGNS {
            let b = Element::generator(al.clone(), gen_index(i, s));
            let lhs = nop.commutator(&b)?;
            let rhs = b.scale(&scalar::int(s.value()));
            let ok = quotient::equal_mod_ideal(&lhs, &rhs, p, 3)?;
            report.record(
                format!("casimir.number-operator.b{i}{}", s.symbol()),
                ok,
                format!("[N, b{i}{}] != {}b{i}{}", s.symbol(), s.value(), s.symbol()),
            );
        }
    }

    let n_plus_one = nop.add(&p.one())?;
    for m in 1..=max_power {
        let d = 2 * m + 1;
        let npow = nop.pow(m)?;
        for i in 1..=n {
            let b = Element::generator(al.clone(), gen_index(i, Sign::Plus));
            let lhs = npow.commutator(&b)?;
            let rhs = b.multiply(&n_plus_one.pow(m)?.sub(&npow)?)?;
            let ok = quotient::is_zero_mod_ideal(&lhs.sub(&rhs)?, p, d)?;
            report.record(
                format!("casimir.power.m={m}.b{i}+"),
                ok,
                format!("[N^{m}, b{i}+] - b{i}+((N+1)^{m} - N^{m}) not in the ideal at degree {d}"),
            );
        }
    }
    Ok(report)
}
