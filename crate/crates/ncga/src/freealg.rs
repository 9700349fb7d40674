//! Words in weighted generators, admissible orders, and exact noncommutative
//! polynomial arithmetic over the rationals.

use crate::linalg::QMatrix;
use crate::rat::Rat;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("generator names must be distinct and nonempty")]
    BadGenerators,
    #[error("generator weights must be at least 1")]
    BadWeights,
    #[error("letter {0} out of range for {1} generators")]
    LetterOutOfRange(usize, usize),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("relation is not homogeneous")]
    Inhomogeneous,
    #[error("relation must have degree at least 2, found {0}")]
    RelationDegreeTooLow(usize),
    #[error("operation requires all generators of weight 1")]
    MixedWeights,
    #[error("matrix size {0} does not match generator count {1}")]
    DimensionMismatch(usize, usize),
    #[error("order must list every generator exactly once")]
    BadOrder,
}

/// The alphabet: named generators with positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    names: Vec<String>,
    weights: Vec<usize>,
}

impl GeneratorSet {
    pub fn new(names: Vec<String>, weights: Vec<usize>) -> Result<Self, FreeAlgError> {
        if names.is_empty() || names.len() != weights.len() {
            return Err(FreeAlgError::BadGenerators);
        }
        let mut seen = std::collections::HashSet::new();
        if !names.iter().all(|n| !n.is_empty() && seen.insert(n)) {
            return Err(FreeAlgError::BadGenerators);
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(FreeAlgError::BadWeights);
        }
        Ok(GeneratorSet { names, weights })
    }

    /// Weight-1 generators named by single letters.
    pub fn standard(names: &[&str]) -> Self {
        GeneratorSet::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
        )
        .expect("valid standard generators")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all_weight_one(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

/// A word in the generators; the empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: usize) -> Self {
        Word(vec![letter as u8])
    }

    pub fn from_letters(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| l as u8).collect())
    }

    pub fn checked(letters: &[usize], gens: &GeneratorSet) -> Result<Self, FreeAlgError> {
        for &l in letters {
            if l >= gens.len() {
                return Err(FreeAlgError::LetterOutOfRange(l, gens.len()));
            }
        }
        Ok(Word::from_letters(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn letter(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn degree(&self, gens: &GeneratorSet) -> usize {
        self.letters().map(|l| gens.weight(l)).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Does `factor` occur starting at position `pos`?
    pub fn matches_at(&self, pos: usize, factor: &Word) -> bool {
        pos + factor.len() <= self.len() && self.0[pos..pos + factor.len()] == factor.0[..]
    }

    /// Leftmost start position of `factor` inside `self`.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.is_empty() || factor.len() > self.len() {
            return None;
        }
        (0..=self.len() - factor.len()).find(|&i| self.matches_at(i, factor))
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> WordDisplay<'a> {
        WordDisplay { word: self, gens }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    gens: &'a GeneratorSet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in self.word.letters() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{}", self.gens.name(l))?;
            first = false;
        }
        Ok(())
    }
}

/// An admissible order on words: weighted degree first, ties by dictionary
/// order under a fixed permutation of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    /// `ranks[g]` is the position of generator `g` in the variable order.
    ranks: Vec<usize>,
}

impl OrderSpec {
    /// Degree-lex with variables ordered as listed in `ascending`.
    pub fn deglex(ascending: &[usize], gens: &GeneratorSet) -> Result<Self, FreeAlgError> {
        if ascending.len() != gens.len() {
            return Err(FreeAlgError::BadOrder);
        }
        let mut ranks = vec![usize::MAX; gens.len()];
        for (pos, &g) in ascending.iter().enumerate() {
            if g >= gens.len() || ranks[g] != usize::MAX {
                return Err(FreeAlgError::BadOrder);
            }
            ranks[g] = pos;
        }
        Ok(OrderSpec { ranks })
    }

    /// Degree-lex in generator declaration order.
    pub fn declaration(gens: &GeneratorSet) -> Self {
        OrderSpec {
            ranks: (0..gens.len()).collect(),
        }
    }

    pub fn rank(&self, letter: usize) -> usize {
        self.ranks[letter]
    }

    /// Generators listed ascending in this order.
    pub fn ascending(&self) -> Vec<usize> {
        let mut by_rank: Vec<(usize, usize)> =
            self.ranks.iter().cloned().enumerate().collect();
        by_rank.sort_by_key(|&(_, r)| r);
        by_rank.into_iter().map(|(g, _)| g).collect()
    }

    /// Total order: lower weighted degree first, then dictionary order.
    pub fn compare(&self, gens: &GeneratorSet, a: &Word, b: &Word) -> Ordering {
        let da = a.degree(gens);
        let db = b.degree(gens);
        da.cmp(&db).then_with(|| {
            for (la, lb) in a.letters().zip(b.letters()) {
                let c = self.ranks[la].cmp(&self.ranks[lb]);
                if c != Ordering::Equal {
                    return c;
                }
            }
            // Equal degree and one a prefix of the other forces equality,
            // since every generator has positive weight.
            a.len().cmp(&b.len())
        })
    }

    /// A sort key realizing `compare` (useful for map keys).
    pub fn key(&self, gens: &GeneratorSet, w: &Word) -> (usize, Vec<usize>) {
        (
            w.degree(gens),
            w.letters().map(|l| self.ranks[l]).collect(),
        )
    }
}

/// A finitely supported assignment of nonzero rationals to words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, Rat>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn one() -> Self {
        FreePoly::term(Word::empty(), Rat::one())
    }

    pub fn term(word: Word, coeff: Rat) -> Self {
        let mut p = FreePoly::default();
        if !coeff.is_zero() {
            p.terms.insert(word, coeff);
        }
        p
    }

    pub fn generator(i: usize) -> Self {
        FreePoly::term(Word::single(i), Rat::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rat)>) -> Self {
        let mut p = FreePoly::default();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &FreePoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &FreePoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }

    /// `self += k * other` without materializing the scaled copy.
    pub fn add_assign_scaled(&mut self, other: &FreePoly, k: &Rat) {
        if k.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * k);
        }
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> FreePoly {
        if k.is_zero() {
            return FreePoly::zero();
        }
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Bilinear extension of concatenation.
    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// `u * self * v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (u.concat(w).concat(v), c.clone()))
                .collect(),
        }
    }

    /// Reverse every word; the anti-isomorphism onto the opposite algebra.
    pub fn reversed(&self) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.clone()))
                .collect(),
        }
    }

    /// The order-maximal word of the support, with its coefficient.
    pub fn leading_term(
        &self,
        gens: &GeneratorSet,
        order: &OrderSpec,
    ) -> Result<(Word, Rat), FreeAlgError> {
        let mut best: Option<&Word> = None;
        for w in self.terms.keys() {
            best = match best {
                None => Some(w),
                Some(b) => {
                    if order.compare(gens, w, b) == Ordering::Greater {
                        Some(w)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let w = best.ok_or(FreeAlgError::ZeroPolynomial)?;
        Ok((w.clone(), self.terms[w].clone()))
    }

    /// Divide by the leading coefficient.
    pub fn monic(
        &self,
        gens: &GeneratorSet,
        order: &OrderSpec,
    ) -> Result<FreePoly, FreeAlgError> {
        let (_, c) = self.leading_term(gens, order)?;
        Ok(self.scale(&(Rat::one() / c)))
    }

    /// Degree when homogeneous; `None` for 0 or mixed degrees.
    pub fn homogeneous_degree(&self, gens: &GeneratorSet) -> Option<usize> {
        let mut degs = self.terms.keys().map(|w| w.degree(gens));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Substitute `x_j -> sum_i T[i][j] x_i` in every letter and expand.
    pub fn apply_linear_map(
        &self,
        map: &QMatrix,
        gens: &GeneratorSet,
    ) -> Result<FreePoly, FreeAlgError> {
        if !gens.all_weight_one() {
            return Err(FreeAlgError::MixedWeights);
        }
        let n = gens.len();
        if map.rows != n || map.cols != n {
            return Err(FreeAlgError::DimensionMismatch(map.rows, n));
        }
        let images: Vec<FreePoly> = (0..n)
            .map(|j| {
                FreePoly::from_terms((0..n).map(|i| (Word::single(i), map[(i, j)].clone())))
            })
            .collect();
        let mut out = FreePoly::zero();
        for (w, c) in &self.terms {
            let mut acc = FreePoly::term(Word::empty(), c.clone());
            for l in w.letters() {
                acc = acc.mul(&images[l]);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Terms sorted descending by the active order.
    pub fn sorted_terms(&self, gens: &GeneratorSet, order: &OrderSpec) -> Vec<(Word, Rat)> {
        let mut v: Vec<(Word, Rat)> =
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| order.compare(gens, b, a));
        v
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, gens }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a FreePoly,
    gens: &'a GeneratorSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // Degree-descending, then storage order: stable without an OrderSpec.
        let mut terms: Vec<(&Word, &Rat)> = self.poly.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.degree(self.gens)
                .cmp(&a.degree(self.gens))
                .then_with(|| a.cmp(b))
        });
        for (i, (w, c)) in terms.iter().enumerate() {
            let neg = **c < Rat::zero();
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", w.display(self.gens))?;
            } else {
                write!(f, "{}*{}", mag, w.display(self.gens))?;
            }
        }
        Ok(())
    }
}

/// A finitely presented connected graded algebra: generators, homogeneous
/// monic relations, and the active admissible order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gens: GeneratorSet,
    pub order: OrderSpec,
    pub relations: Vec<FreePoly>,
    pub name: String,
}

impl Presentation {
    /// Validates homogeneity and degree, and normalizes relations monic.
    pub fn new(
        gens: GeneratorSet,
        order: OrderSpec,
        relations: Vec<FreePoly>,
        name: &str,
    ) -> Result<Self, FreeAlgError> {
        let mut monic = Vec::with_capacity(relations.len());
        for r in relations {
            if r.is_zero() {
                return Err(FreeAlgError::ZeroPolynomial);
            }
            let d = r.homogeneous_degree(&gens).ok_or(FreeAlgError::Inhomogeneous)?;
            if d < 2 {
                return Err(FreeAlgError::RelationDegreeTooLow(d));
            }
            monic.push(r.monic(&gens, &order)?);
        }
        Ok(Presentation {
            gens,
            order,
            relations: monic,
            name: name.to_string(),
        })
    }

    /// The presentation of the opposite algebra: every relation word reversed.
    ///
    /// The order is kept; leading words are recomputed on completion.
    pub fn opposite(&self) -> Presentation {
        Presentation {
            gens: self.gens.clone(),
            order: self.order.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.reversed()
                        .monic(&self.gens, &self.order)
                        .expect("nonzero relation")
                })
                .collect(),
            name: format!("{}^op", self.name),
        }
    }
}

/// All words of exactly the given weighted degree, ascending in `order`.
pub fn words_of_degree(gens: &GeneratorSet, order: &OrderSpec, degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        gens: &GeneratorSet,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            out.push(Word::from_letters(current));
            return;
        }
        for g in 0..gens.len() {
            if gens.weight(g) <= remaining {
                current.push(g);
                rec(gens, remaining - gens.weight(g), current, out);
                current.pop();
            }
        }
    }
    rec(gens, degree, &mut current, &mut out);
    out.sort_by(|a, b| order.compare(gens, a, b));
    out
}

/// All words of degree at most `degree`, ascending in `order`.
pub fn words_up_to_degree(gens: &GeneratorSet, order: &OrderSpec, degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for d in 0..=degree {
        out.extend(words_of_degree(gens, order, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn xy() -> (GeneratorSet, OrderSpec) {
        let gens = GeneratorSet::standard(&["x", "y"]);
        let order = OrderSpec::declaration(&gens);
        (gens, order)
    }

    fn w(letters: &[usize]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn deglex_basics() {
        let (gens, order) = xy();
        // x < y
        assert_eq!(order.compare(&gens, &w(&[0]), &w(&[1])), Ordering::Less);
        // xy < yx
        assert_eq!(order.compare(&gens, &w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
        // reflexive
        assert_eq!(
            order.compare(&gens, &w(&[1, 0, 1]), &w(&[1, 0, 1])),
            Ordering::Equal
        );
        // degree dominates: y < x^2
        assert_eq!(order.compare(&gens, &w(&[1]), &w(&[0, 0])), Ordering::Less);
    }

    #[test]
    fn deglex_initial_segment() {
        // 1 < x < y < x^2 < xy < yx < y^2 < x^3 < x^2y < xyx < xy^2 < ...
        let (gens, order) = xy();
        let expected = vec![
            w(&[]),
            w(&[0]),
            w(&[1]),
            w(&[0, 0]),
            w(&[0, 1]),
            w(&[1, 0]),
            w(&[1, 1]),
        ];
        assert_eq!(words_up_to_degree(&gens, &order, 2), expected);
    }

    #[test]
    fn words_below_is_finite_and_enumerable() {
        let (gens, order) = xy();
        // Every word strictly below yx has degree <= 2; count them.
        let target = w(&[1, 0]);
        let below: Vec<Word> = words_up_to_degree(&gens, &order, 2)
            .into_iter()
            .filter(|v| order.compare(&gens, v, &target) == Ordering::Less)
            .collect();
        assert_eq!(below.len(), 5); // 1, x, y, x^2, xy
    }

    #[test]
    fn weighted_degree_order() {
        let gens = GeneratorSet::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 2],
        )
        .unwrap();
        let order = OrderSpec::declaration(&gens);
        // deg z = 2, so z sorts with the degree-2 words.
        assert_eq!(w(&[2]).degree(&gens), 2);
        assert_eq!(order.compare(&gens, &w(&[0]), &w(&[2])), Ordering::Less);
        assert_eq!(order.compare(&gens, &w(&[1, 1]), &w(&[2])), Ordering::Less);
    }

    #[test]
    fn leading_term_examples() {
        let (gens, order) = xy();
        // xy + 3x^2y + 5xyx has leading word xyx.
        let f = FreePoly::from_terms([
            (w(&[0, 1]), rat(1)),
            (w(&[0, 0, 1]), rat(3)),
            (w(&[0, 1, 0]), rat(5)),
        ]);
        let (lw, lc) = f.leading_term(&gens, &order).unwrap();
        assert_eq!(lw, w(&[0, 1, 0]));
        assert_eq!(lc, rat(5));

        let c = FreePoly::term(Word::empty(), rat(7));
        assert_eq!(c.leading_term(&gens, &order).unwrap(), (Word::empty(), rat(7)));

        // yx - q xy leads with yx, coefficient 1.
        let g = FreePoly::from_terms([(w(&[1, 0]), rat(1)), (w(&[0, 1]), ratio(-3, 2))]);
        assert_eq!(g.leading_term(&gens, &order).unwrap(), (w(&[1, 0]), rat(1)));

        assert_eq!(
            FreePoly::zero().leading_term(&gens, &order),
            Err(FreeAlgError::ZeroPolynomial)
        );
    }

    #[test]
    fn multiply_examples() {
        let x = FreePoly::generator(0);
        let y = FreePoly::generator(1);
        assert_eq!(x.mul(&y), FreePoly::term(w(&[0, 1]), rat(1)));
        // (x+y)(x-y) = x^2 - xy + yx - y^2
        let f = x.add(&y).mul(&x.sub(&y));
        assert_eq!(
            f,
            FreePoly::from_terms([
                (w(&[0, 0]), rat(1)),
                (w(&[0, 1]), rat(-1)),
                (w(&[1, 0]), rat(1)),
                (w(&[1, 1]), rat(-1)),
            ])
        );
        // 1 * f = f
        assert_eq!(FreePoly::one().mul(&f), f);
    }

    #[test]
    fn apply_linear_map_examples() {
        let (gens, _) = xy();
        let f = FreePoly::term(w(&[0, 1]), rat(1)); // xy
        let id = QMatrix::identity(2);
        assert_eq!(f.apply_linear_map(&id, &gens).unwrap(), f);

        // Swap x and y sends xy - yx to yx - xy.
        let mut swap = QMatrix::zero(2, 2);
        swap[(0, 1)] = rat(1);
        swap[(1, 0)] = rat(1);
        let comm = FreePoly::from_terms([(w(&[0, 1]), rat(1)), (w(&[1, 0]), rat(-1))]);
        assert_eq!(comm.apply_linear_map(&swap, &gens).unwrap(), comm.neg());

        // x*(y - x) - y*x + x*x expands to xy - yx: the twisted commutator
        // collapses back to the plain one.
        let x = FreePoly::generator(0);
        let y = FreePoly::generator(1);
        let expanded = x.mul(&y.sub(&x)).sub(&y.mul(&x)).add(&x.mul(&x));
        assert_eq!(expanded, comm);
    }

    #[test]
    fn apply_linear_map_round_trip() {
        let (gens, _) = xy();
        let mut t = QMatrix::zero(2, 2);
        t[(0, 0)] = rat(1);
        t[(0, 1)] = rat(-1);
        t[(1, 1)] = rat(1);
        let tinv = t.inverse().unwrap();
        let f = FreePoly::from_terms([
            (w(&[0, 1, 1]), ratio(2, 3)),
            (w(&[1, 0]), rat(-5)),
            (w(&[]), rat(1)),
        ]);
        let back = f
            .apply_linear_map(&t, &gens)
            .unwrap()
            .apply_linear_map(&tinv, &gens)
            .unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn presentation_validation() {
        let (gens, order) = xy();
        let inhom = FreePoly::from_terms([(w(&[1, 0]), rat(1)), (w(&[0]), rat(-1))]);
        assert_eq!(
            Presentation::new(gens.clone(), order.clone(), vec![inhom], "bad"),
            Err(FreeAlgError::Inhomogeneous)
        );
        let rel = FreePoly::from_terms([(w(&[1, 0]), rat(2)), (w(&[0, 1]), rat(-4))]);
        let p = Presentation::new(gens.clone(), order, vec![rel], "qp").unwrap();
        // stored monic
        assert_eq!(p.relations[0].coeff(&w(&[1, 0])), rat(1));
        assert_eq!(p.relations[0].coeff(&w(&[0, 1])), rat(-2));
    }
}
