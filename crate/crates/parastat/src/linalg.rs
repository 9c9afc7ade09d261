//! Exact rational row reduction over the word basis.
//!
//! Elements are already sparse vectors indexed by words, so the echelon
//! machinery works on [`Element`] directly.  Pivots are leading words under
//! deglex; a finished [`RowSpace`] holds the fully reduced echelon basis of
//! the span, which is canonical for the subspace regardless of insertion
//! order.

use std::collections::BTreeMap;

use num_traits::One;

use crate::kernel::{Element, Word};
use crate::scalar::{self, Scalar};

/// An incrementally built row space in echelon form.
#[derive(Debug, Clone)]
pub struct RowSpace {
    rows: Vec<Element>,
    pivots: BTreeMap<Word, usize>,
}

impl RowSpace {
    pub fn new() -> RowSpace {
        RowSpace {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Element] {
        &self.rows
    }

    pub fn pivot_row(&self, w: &Word) -> Option<&Element> {
        self.pivots.get(w).map(|&i| &self.rows[i])
    }

    pub fn is_pivot(&self, w: &Word) -> bool {
        self.pivots.contains_key(w)
    }

    /// Reduces `e` against the current pivot rows.
    ///
    /// Pivot-row tails may still contain pivot words while the space is under
    /// construction, so this loops until no term of the result is a pivot.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut cur = e.clone();
        loop {
            let hit = cur
                .terms()
                .rev()
                .find(|(w, _)| self.pivots.contains_key(*w))
                .map(|(w, c)| (w.clone(), c.clone()));
            match hit {
                None => return cur,
                Some((w, c)) => {
                    let row = &self.rows[self.pivots[&w]];
                    cur = cur.sub(&row.scale(&c)).expect("same alphabet");
                }
            }
        }
    }

    /// Reduces and, if the residual is nonzero, normalizes it and adds it as
    /// a new pivot row.  Returns true when the rank grew.
    pub fn insert(&mut self, e: &Element) -> bool {
        let red = self.reduce(e);
        if red.is_zero() {
            return false;
        }
        let (lead, coeff) = {
            let (w, c) = red.leading().unwrap();
            (w.clone(), c.clone())
        };
        let normalized = red.scale(&(Scalar::one() / coeff));
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(normalized);
        true
    }

    /// Back-substitutes until every row's tail is free of pivot words and
    /// sorts rows by pivot.  After this the basis is the canonical RREF.
    pub fn fully_reduce(&mut self) {
        let order: Vec<usize> = self.pivots.values().copied().collect();
        // reduce tails starting from the smallest pivot upward; repeat until
        // stable since substitution can reintroduce smaller pivots
        loop {
            let mut changed = false;
            for &i in &order {
                let pivot_word = self.rows[i].leading().unwrap().0.clone();
                loop {
                    let hit = self.rows[i]
                        .terms()
                        .filter(|(w, _)| **w != pivot_word)
                        .rev()
                        .find(|(w, _)| self.pivots.contains_key(*w))
                        .map(|(w, c)| (w.clone(), c.clone()));
                    match hit {
                        None => break,
                        Some((w, c)) => {
                            let other = self.rows[self.pivots[&w]].clone();
                            self.rows[i] = self.rows[i].sub(&other.scale(&c)).expect("same alphabet");
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // renumber rows in ascending pivot order
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut pivots = BTreeMap::new();
        for (w, &i) in &self.pivots {
            pivots.insert(w.clone(), rows.len());
            rows.push(self.rows[i].clone());
        }
        self.rows = rows;
        self.pivots = pivots;
    }
}

impl Default for RowSpace {
    fn default() -> Self {
        RowSpace::new()
    }
}

/// Exact coordinates of `target` in the span of `basis`, or `None` when the
/// target lies outside the span.
pub fn express_in_span(basis: &[Element], target: &Element) -> Option<Vec<Scalar>> {
    if target.is_zero() {
        return Some(vec![scalar::zero(); basis.len()]);
    }
    // rows carry their coordinate vectors through the elimination
    let mut rows: Vec<(Element, Vec<Scalar>)> = Vec::new();
    let mut pivots: BTreeMap<Word, usize> = BTreeMap::new();
    for (i, b) in basis.iter().enumerate() {
        let mut coords = vec![scalar::zero(); basis.len()];
        coords[i] = scalar::one();
        let mut cur = b.clone();
        loop {
            let hit = cur
                .terms()
                .rev()
                .find(|(w, _)| pivots.contains_key(*w))
                .map(|(w, c)| (w.clone(), c.clone()));
            match hit {
                None => break,
                Some((w, c)) => {
                    let (row, rc) = &rows[pivots[&w]];
                    cur = cur.sub(&row.scale(&c)).expect("same alphabet");
                    for (x, y) in coords.iter_mut().zip(rc.iter()) {
                        *x -= &c * y;
                    }
                }
            }
        }
        if !cur.is_zero() {
            let (lead, lc) = {
                let (w, c) = cur.leading().unwrap();
                (w.clone(), c.clone())
            };
            let inv = Scalar::one() / lc;
            let cur = cur.scale(&inv);
            for x in coords.iter_mut() {
                *x *= &inv;
            }
            pivots.insert(lead, rows.len());
            rows.push((cur, coords));
        }
    }
    let mut cur = target.clone();
    let mut coords = vec![scalar::zero(); basis.len()];
    loop {
        let hit = cur
            .terms()
            .rev()
            .find(|(w, _)| pivots.contains_key(*w))
            .map(|(w, c)| (w.clone(), c.clone()));
        match hit {
            None => break,
            Some((w, c)) => {
                let (row, rc) = &rows[pivots[&w]];
                cur = cur.sub(&row.scale(&c)).expect("same alphabet");
                for (x, y) in coords.iter_mut().zip(rc.iter()) {
                    *x += &c * y;
                }
            }
        }
    }
    if cur.is_zero() {
        Some(coords)
    } else {
        None
    }
}
