//! A presented algebra together with its truncated Grobner basis: graded
//! bases of reduced words, memoized normal forms, exact coordinates, and the
//! opposite algebra for left-module computations.

use crate::freealg::{FreePoly, GeneratorSet, OrderSpec, Presentation, Word};
use crate::gbasis::{complete, GBasis, GbError};
use crate::rat::Rat;
use num_traits::One;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// Graded quotient of a free algebra, certified through `max_degree`.
///
/// All queries are pure; caches are interior and deterministic.
pub struct QuotientAlgebra {
    pres: Presentation,
    gb: GBasis,
    max_degree: usize,
    /// Reduced-word bases per degree, descending in the order (leading
    /// coordinates first).
    bases: RefCell<Vec<Option<Rc<Vec<Word>>>>>,
    positions: RefCell<HashMap<Word, usize>>,
    nf_cache: RefCell<HashMap<Word, Rc<FreePoly>>>,
    opposite: RefCell<Option<Rc<QuotientAlgebra>>>,
}

impl QuotientAlgebra {
    pub fn new(pres: Presentation, max_degree: usize) -> Result<Self, GbError> {
        let gb = complete(&pres, max_degree)?;
        Ok(QuotientAlgebra::from_gbasis(pres, gb))
    }

    pub fn from_gbasis(pres: Presentation, gb: GBasis) -> Self {
        let max_degree = gb.truncation_degree;
        QuotientAlgebra {
            pres,
            gb,
            max_degree,
            bases: RefCell::new(vec![None; max_degree + 1]),
            positions: RefCell::new(HashMap::new()),
            nf_cache: RefCell::new(HashMap::new()),
            opposite: RefCell::new(None),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn gbasis(&self) -> &GBasis {
        &self.gb
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.pres.gens
    }

    pub fn order(&self) -> &OrderSpec {
        &self.pres.order
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Reduced words of the given degree, descending in the order.
    pub fn basis(&self, degree: usize) -> Rc<Vec<Word>> {
        assert!(
            degree <= self.max_degree,
            "degree {degree} beyond certified degree {}",
            self.max_degree
        );
        if let Some(b) = &self.bases.borrow()[degree] {
            return Rc::clone(b);
        }
        let mut words = self.gb.reduced_words(degree).expect("within truncation");
        words.reverse(); // descending
        let rc = Rc::new(words);
        {
            let mut pos = self.positions.borrow_mut();
            for (i, w) in rc.iter().enumerate() {
                pos.insert(w.clone(), i);
            }
        }
        self.bases.borrow_mut()[degree] = Some(Rc::clone(&rc));
        rc
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.basis(degree).len()
    }

    /// Position of a reduced word within its degree basis.
    pub fn position(&self, w: &Word) -> usize {
        let degree = w.degree(self.gens());
        self.basis(degree);
        self.positions.borrow()[w]
    }

    /// Memoized normal form of a word (iterative leftmost-first rewriting).
    pub fn nf_word(&self, w: &Word) -> Rc<FreePoly> {
        if let Some(p) = self.nf_cache.borrow().get(w) {
            return Rc::clone(p);
        }
        let rules = &self.gb.rules;
        let mut stack = vec![w.clone()];
        while let Some(top) = stack.last().cloned() {
            if self.nf_cache.borrow().contains_key(&top) {
                stack.pop();
                continue;
            }
            let hit = (0..top.len()).find_map(|pos| {
                rules
                    .iter()
                    .position(|r| top.matches_at(pos, &r.lead))
                    .map(|ri| (pos, ri))
            });
            match hit {
                None => {
                    let nf = FreePoly::term(top.clone(), Rat::one());
                    self.nf_cache.borrow_mut().insert(top.clone(), Rc::new(nf));
                    stack.pop();
                }
                Some((pos, ri)) => {
                    let left = top.slice(0, pos);
                    let right = top.slice(pos + rules[ri].lead.len(), top.len());
                    let children: Vec<(Word, Rat)> = rules[ri]
                        .tail
                        .terms()
                        .map(|(t, c)| (left.concat(t).concat(&right), c.clone()))
                        .collect();
                    let missing: Vec<Word> = children
                        .iter()
                        .filter(|(cw, _)| !self.nf_cache.borrow().contains_key(cw))
                        .map(|(cw, _)| cw.clone())
                        .collect();
                    if missing.is_empty() {
                        let mut nf = FreePoly::zero();
                        {
                            let cache = self.nf_cache.borrow();
                            for (cw, c) in children {
                                nf = nf.add(&cache[&cw].scale(&c));
                            }
                        }
                        self.nf_cache.borrow_mut().insert(top.clone(), Rc::new(nf));
                        stack.pop();
                    } else {
                        stack.extend(missing);
                    }
                }
            }
        }
        let cache = self.nf_cache.borrow();
        Rc::clone(&cache[w])
    }

    pub fn nf(&self, f: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w, c) in f.terms() {
            out = out.add(&self.nf_word(w).scale(c));
        }
        out
    }

    /// nf(f * g).
    pub fn mul_nf(&self, f: &FreePoly, g: &FreePoly) -> FreePoly {
        self.nf(&f.mul(g))
    }

    /// Coordinates of a homogeneous element in the degree basis
    /// (descending word order). The input need not be reduced.
    pub fn coords(&self, f: &FreePoly, degree: usize) -> Vec<Rat> {
        let nf = self.nf(f);
        let basis = self.basis(degree);
        let mut v = vec![Rat::from_integer(0.into()); basis.len()];
        for (w, c) in nf.terms() {
            debug_assert_eq!(w.degree(self.gens()), degree);
            v[self.position(w)] = c.clone();
        }
        v
    }

    /// Rebuild an element from degree-basis coordinates.
    pub fn from_coords(&self, coords: &[Rat], degree: usize) -> FreePoly {
        let basis = self.basis(degree);
        FreePoly::from_terms(
            basis
                .iter()
                .zip(coords.iter())
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// The opposite algebra (all relation words reversed), completed at the
    /// same truncation degree. Built on first use.
    pub fn op(&self) -> Rc<QuotientAlgebra> {
        if let Some(op) = &*self.opposite.borrow() {
            return Rc::clone(op);
        }
        let op_pres = self.pres.opposite();
        let op = Rc::new(
            QuotientAlgebra::new(op_pres, self.max_degree)
                .expect("opposite presentation completes at the same degree"),
        );
        *self.opposite.borrow_mut() = Some(Rc::clone(&op));
        Rc::clone(&op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{GeneratorSet, OrderSpec, Presentation, Word};
    use crate::rat::rat;

    fn jordan() -> Presentation {
        let gens = GeneratorSet::standard(&["x", "y"]);
        let order = OrderSpec::declaration(&gens);
        let rel = FreePoly::from_terms([
            (Word::from_letters(&[1, 0]), rat(1)),
            (Word::from_letters(&[0, 1]), rat(-1)),
            (Word::from_letters(&[0, 0]), rat(-1)),
        ]);
        Presentation::new(gens, order, vec![rel], "jordan").unwrap()
    }

    #[test]
    fn jordan_basis_and_nf() {
        let alg = QuotientAlgebra::new(jordan(), 8).unwrap();
        assert_eq!(alg.dim(0), 1);
        assert_eq!(alg.dim(1), 2);
        assert_eq!(alg.dim(2), 3);
        assert_eq!(alg.dim(5), 6);
        // yx reduces to xy + x^2
        let yx = FreePoly::term(Word::from_letters(&[1, 0]), rat(1));
        let nf = alg.nf(&yx);
        assert_eq!(nf.coeff(&Word::from_letters(&[0, 1])), rat(1));
        assert_eq!(nf.coeff(&Word::from_letters(&[0, 0])), rat(1));
        assert_eq!(nf.num_terms(), 2);
        // Coordinates round-trip.
        let coords = alg.coords(&yx, 2);
        assert_eq!(alg.nf(&alg.from_coords(&coords, 2)), nf);
    }

    #[test]
    fn opposite_algebra_dimensions_match() {
        let alg = QuotientAlgebra::new(jordan(), 8).unwrap();
        let op = alg.op();
        for d in 0..=8 {
            assert_eq!(alg.dim(d), op.dim(d));
        }
    }
}
