//! The Diamond Lemma engine: reduction to normal form, ambiguity detection
//! and resolution, and degree-truncated completion.

mod automaton;
mod normal;

pub use automaton::FactorAutomaton;
pub use normal::{find_normal_elements, is_normal_element};

use crate::freealg::{FreeAlgError, FreePoly, GeneratorSet, OrderSpec, Presentation, Word};
use crate::rat::Rat;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error("degree {0} exceeds the certified truncation degree {1}")]
    TruncationInsufficient(usize, usize),
}

/// A monic rewrite rule `lead -> tail`, representing the relation
/// `lead - tail`; every word of `tail` is strictly below `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: Word,
    pub tail: FreePoly,
}

impl RewriteRule {
    /// Split a nonzero homogeneous element into a monic rule.
    pub fn from_poly(
        f: &FreePoly,
        gens: &GeneratorSet,
        order: &OrderSpec,
    ) -> Result<Self, FreeAlgError> {
        let (lead, coeff) = f.leading_term(gens, order)?;
        let mut tail = FreePoly::zero();
        for (w, c) in f.terms() {
            if *w != lead {
                tail.add_term(w.clone(), -(c / &coeff));
            }
        }
        Ok(RewriteRule { lead, tail })
    }

    /// The element `lead - tail` the rule stands for.
    pub fn as_poly(&self) -> FreePoly {
        let mut p = self.tail.neg();
        p.add_term(self.lead.clone(), Rat::from_integer(1.into()));
        p
    }

    pub fn degree(&self, gens: &GeneratorSet) -> usize {
        self.lead.degree(gens)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// Two leading words sharing a factorization of one witness word.
///
/// Overlap: `witness = t v u` with `lead(sigma) = t v`, `lead(tau) = v u`,
/// all of `t`, `v`, `u` nonempty. Inclusion: `lead(sigma) = t lead(tau) u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub sigma: usize,
    pub tau: usize,
    pub witness: Word,
    pub t_len: usize,
    pub v_len: usize,
}

/// One rewriting step: `coeff * left·lead(rule)·right` was replaced by
/// `coeff * left·tail(rule)·right`.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub left: Word,
    pub rule: usize,
    pub right: Word,
    pub coeff: Rat,
}

/// Leftmost position (and first matching rule in list order) at which any
/// rule applies to `w`.
fn leftmost_match(w: &Word, rules: &[RewriteRule]) -> Option<(usize, usize)> {
    for pos in 0..w.len() {
        for (ri, rule) in rules.iter().enumerate() {
            if w.matches_at(pos, &rule.lead) {
                return Some((pos, ri));
            }
        }
    }
    None
}

/// Reduce using the fixed strategy: rewrite the order-largest reducible
/// support word at its leftmost reducible position. Returns the normal form
/// and the trace of steps taken.
pub fn reduce_with_trace(
    f: &FreePoly,
    rules: &[RewriteRule],
    gens: &GeneratorSet,
    order: &OrderSpec,
) -> (FreePoly, Vec<ReductionStep>) {
    let mut current = f.clone();
    let mut trace = Vec::new();
    let mut irreducible: HashSet<Word> = HashSet::new();
    loop {
        let mut target: Option<(Word, usize, usize)> = None;
        for (w, _) in current.terms() {
            if irreducible.contains(w) {
                continue;
            }
            match leftmost_match(w, rules) {
                None => {
                    irreducible.insert(w.clone());
                }
                Some((pos, ri)) => {
                    let better = match &target {
                        None => true,
                        Some((best, _, _)) => order.compare(gens, w, best) == Ordering::Greater,
                    };
                    if better {
                        target = Some((w.clone(), pos, ri));
                    }
                }
            }
        }
        let Some((w, pos, ri)) = target else {
            return (current, trace);
        };
        let coeff = current.coeff(&w);
        let left = w.slice(0, pos);
        let right = w.slice(pos + rules[ri].lead.len(), w.len());
        current.add_term(w, -coeff.clone());
        for (t, c) in rules[ri].tail.terms() {
            current.add_term(left.concat(t).concat(&right), c * &coeff);
        }
        trace.push(ReductionStep {
            left,
            rule: ri,
            right,
            coeff,
        });
    }
}

/// Normal form under the fixed deterministic strategy.
pub fn reduce(
    f: &FreePoly,
    rules: &[RewriteRule],
    gens: &GeneratorSet,
    order: &OrderSpec,
) -> FreePoly {
    reduce_with_trace(f, rules, gens, order).0
}

/// Reduce with an arbitrary strategy: at each step `chooser(n)` picks among
/// the `n` available (support word, position, rule) candidates. Used to test
/// strategy-independence of normal forms on confluent systems.
pub fn reduce_with_chooser(
    f: &FreePoly,
    rules: &[RewriteRule],
    mut chooser: impl FnMut(usize) -> usize,
) -> FreePoly {
    let mut current = f.clone();
    loop {
        let mut candidates: Vec<(Word, usize, usize)> = Vec::new();
        for (w, _) in current.terms() {
            for pos in 0..w.len() {
                for (ri, rule) in rules.iter().enumerate() {
                    if w.matches_at(pos, &rule.lead) {
                        candidates.push((w.clone(), pos, ri));
                    }
                }
            }
        }
        if candidates.is_empty() {
            return current;
        }
        let (w, pos, ri) = candidates.swap_remove(chooser(candidates.len()) % candidates.len());
        let coeff = current.coeff(&w);
        let left = w.slice(0, pos);
        let right = w.slice(pos + rules[ri].lead.len(), w.len());
        current.add_term(w, -coeff.clone());
        for (t, c) in rules[ri].tail.terms() {
            current.add_term(left.concat(t).concat(&right), c * &coeff);
        }
    }
}

/// Memoizing word-level reduction engine.
///
/// The long-lived cache maps a word to some partial reduct congruent to it
/// modulo the ideal; that invariant survives arbitrary rule-set changes
/// within the same ideal, so the cache persists across a whole completion.
/// Per-epoch sets (`fresh`, `irreducible`) record what is known to be fully
/// reduced under the current rules and are cleared on every rule change.
/// Integer polynomial with a single shared denominator: `(1/den) * sum c_w w`.
///
/// Keeps the rewriting inner loop free of per-coefficient gcd reductions;
/// content is removed once per stored normal form.
#[derive(Clone, Debug)]
struct ScaledPoly {
    den: num_bigint::BigInt,
    terms: std::collections::BTreeMap<Word, num_bigint::BigInt>,
}

impl ScaledPoly {
    fn zero() -> Self {
        ScaledPoly {
            den: 1.into(),
            terms: Default::default(),
        }
    }

    fn from_free(p: &FreePoly) -> Self {
        use num_integer::Integer;
        let mut den: num_bigint::BigInt = 1.into();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let terms = p
            .terms()
            .map(|(w, c)| (w.clone(), c.numer() * (&den / c.denom())))
            .collect();
        ScaledPoly { den, terms }
    }

    fn to_free(&self) -> FreePoly {
        FreePoly::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), Rat::new(c.clone(), self.den.clone()))),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn sandwich(&self, left: &Word, right: &Word) -> ScaledPoly {
        ScaledPoly {
            den: self.den.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// `self += (num/den) * other`, with a single denominator gcd.
    fn add_assign_times(
        &mut self,
        other: &ScaledPoly,
        num: &num_bigint::BigInt,
        den: &num_bigint::BigInt,
    ) {
        use num_integer::Integer;
        use num_traits::Zero as _;
        if num.is_zero() || other.is_zero() {
            return;
        }
        let rhs_den = den * &other.den;
        let g = self.den.gcd(&rhs_den);
        let self_scale = &rhs_den / &g;
        let rhs_scale = num * (&self.den / &g);
        if self_scale != 1.into() {
            for c in self.terms.values_mut() {
                *c *= &self_scale;
            }
            self.den *= &self_scale;
        }
        for (w, c) in &other.terms {
            let add = c * &rhs_scale;
            match self.terms.entry(w.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !add.is_zero() {
                        e.insert(add);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += add;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        if self.terms.is_empty() {
            self.den = 1.into();
        }
    }

    /// Remove the common content and normalize the denominator positive.
    fn normalize(&mut self) {
        use num_integer::Integer;
        use num_traits::{Signed, Zero as _};
        if self.terms.is_empty() {
            self.den = 1.into();
            return;
        }
        let mut g = self.den.abs();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g == 1.into() {
                break;
            }
        }
        let negate = self.den.is_negative();
        if g != 1.into() || negate {
            let divisor = if negate { -g } else { g };
            self.den = &self.den / &divisor;
            for c in self.terms.values_mut() {
                *c = &*c / &divisor;
            }
        }
    }

    /// Coefficient of `w` over the shared denominator.
    fn coeff_is_zero(&self, w: &Word) -> bool {
        !self.terms.contains_key(w)
    }
}

pub struct NfEngine {
    cache: HashMap<Word, std::rc::Rc<ScaledPoly>>,
    fresh: HashSet<Word>,
    irreducible: HashSet<Word>,
    matches: HashMap<Word, (usize, usize)>,
    tails: HashMap<Word, std::rc::Rc<ScaledPoly>>,
}

impl NfEngine {
    pub fn new() -> Self {
        NfEngine {
            cache: HashMap::new(),
            fresh: HashSet::new(),
            irreducible: HashSet::new(),
            matches: HashMap::new(),
            tails: HashMap::new(),
        }
    }

    /// Must be called whenever the rule set changes.
    pub fn rules_changed(&mut self) {
        self.fresh.clear();
        self.irreducible.clear();
        self.matches.clear();
        self.tails.clear();
    }

    fn word_irreducible(&mut self, rules: &[RewriteRule], w: &Word) -> bool {
        if self.irreducible.contains(w) {
            return true;
        }
        if self.matches.contains_key(w) {
            return false;
        }
        match leftmost_match(w, rules) {
            None => {
                self.irreducible.insert(w.clone());
                true
            }
            Some(hit) => {
                self.matches.insert(w.clone(), hit);
                false
            }
        }
    }

    fn tail_scaled(&mut self, rules: &[RewriteRule], ri: usize) -> std::rc::Rc<ScaledPoly> {
        let lead = &rules[ri].lead;
        if let Some(t) = self.tails.get(lead) {
            return std::rc::Rc::clone(t);
        }
        let t = std::rc::Rc::new(ScaledPoly::from_free(&rules[ri].tail));
        self.tails.insert(lead.clone(), std::rc::Rc::clone(&t));
        t
    }

    fn one_step(&mut self, rules: &[RewriteRule], w: &Word) -> ScaledPoly {
        let (pos, ri) = self.matches[w];
        let left = w.slice(0, pos);
        let right = w.slice(pos + rules[ri].lead.len(), w.len());
        self.tail_scaled(rules, ri).sandwich(&left, &right)
    }

    fn ensure_nf(&mut self, rules: &[RewriteRule], w: &Word) {
        let one: num_bigint::BigInt = 1.into();
        let mut stack: Vec<Word> = vec![w.clone()];
        while let Some(top) = stack.last().cloned() {
            if self.fresh.contains(&top) || self.word_irreducible(rules, &top) {
                stack.pop();
                continue;
            }
            // Reducible. Start from the cached partial reduct when it makes
            // progress; a stale `term(top)` entry (irreducible under older
            // rules) is discarded.
            let base = match self.cache.get(&top) {
                Some(p) if p.coeff_is_zero(&top) => std::rc::Rc::clone(p),
                _ => std::rc::Rc::new(self.one_step(rules, &top)),
            };
            let mut missing: Vec<Word> = Vec::new();
            for v in base.terms.keys() {
                if !self.fresh.contains(v) && !self.word_irreducible(rules, v) {
                    missing.push(v.clone());
                }
            }
            if missing.is_empty() {
                // Irreducible terms keep the base denominator; reducible
                // ones pull in their cached normal forms.
                let mut nf = ScaledPoly::zero();
                let mut residue = ScaledPoly {
                    den: base.den.clone(),
                    terms: Default::default(),
                };
                for (v, c) in &base.terms {
                    if self.irreducible.contains(v) {
                        residue.terms.insert(v.clone(), c.clone());
                    } else {
                        let child = std::rc::Rc::clone(&self.cache[v]);
                        nf.add_assign_times(&child, c, &base.den);
                    }
                }
                nf.add_assign_times(&residue, &one, &one);
                nf.normalize();
                self.cache.insert(top.clone(), std::rc::Rc::new(nf));
                self.fresh.insert(top);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
    }

    fn nf_scaled(&mut self, rules: &[RewriteRule], f: &FreePoly) -> ScaledPoly {
        let input = ScaledPoly::from_free(f);
        let one: num_bigint::BigInt = 1.into();
        let mut out = ScaledPoly::zero();
        let mut residue = ScaledPoly {
            den: input.den.clone(),
            terms: Default::default(),
        };
        for (w, c) in &input.terms {
            if self.word_irreducible(rules, w) {
                residue.terms.insert(w.clone(), c.clone());
            } else {
                self.ensure_nf(rules, w);
                let child = std::rc::Rc::clone(&self.cache[w]);
                out.add_assign_times(&child, c, &input.den);
            }
        }
        out.add_assign_times(&residue, &one, &one);
        out.normalize();
        out
    }

    pub fn nf(&mut self, rules: &[RewriteRule], f: &FreePoly) -> FreePoly {
        self.nf_scaled(rules, f).to_free()
    }

    /// nf(f) - nf(g), subtracted before leaving the integer representation.
    pub fn nf_diff(&mut self, rules: &[RewriteRule], f: &FreePoly, g: &FreePoly) -> FreePoly {
        let one: num_bigint::BigInt = 1.into();
        let mut a = self.nf_scaled(rules, f);
        let b = self.nf_scaled(rules, g);
        a.add_assign_times(&b, &-&one, &one);
        a.normalize();
        a.to_free()
    }
}

impl Default for NfEngine {
    fn default() -> Self {
        NfEngine::new()
    }
}

/// All overlap and inclusion ambiguities of an interreduced rule set, each
/// witness listed once per factorization, sorted by (witness degree, witness
/// order, kind, indices).
pub fn find_ambiguities(
    rules: &[RewriteRule],
    gens: &GeneratorSet,
    order: &OrderSpec,
) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for (si, rs) in rules.iter().enumerate() {
        for (ti, rt) in rules.iter().enumerate() {
            let ls = &rs.lead;
            let lt = &rt.lead;
            // Overlaps: a nonempty proper suffix of lead(sigma) equal to a
            // nonempty proper prefix of lead(tau).
            let max_v = ls.len().min(lt.len()) - 1;
            for v_len in 1..=max_v {
                let t_len = ls.len() - v_len;
                if (0..v_len).all(|k| ls.letter(t_len + k) == lt.letter(k)) {
                    let witness = ls.concat(&lt.slice(v_len, lt.len()));
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Overlap,
                        sigma: si,
                        tau: ti,
                        witness,
                        t_len,
                        v_len,
                    });
                }
            }
            // Inclusions: lead(tau) a strict factor of lead(sigma).
            if si != ti && lt.len() < ls.len() {
                for t_len in 0..=(ls.len() - lt.len()) {
                    if ls.matches_at(t_len, lt) {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Inclusion,
                            sigma: si,
                            tau: ti,
                            witness: ls.clone(),
                            t_len,
                            v_len: lt.len(),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| {
        order
            .compare(gens, &a.witness, &b.witness)
            .then(a.kind.cmp(&b.kind))
            .then(a.sigma.cmp(&b.sigma))
            .then(a.tau.cmp(&b.tau))
            .then(a.t_len.cmp(&b.t_len))
    });
    out
}

/// Reduce both branches of an ambiguity to normal form. `None` when they
/// agree (the ambiguity resolves); otherwise the monic normalized difference,
/// a new element of the ideal with a fresh leading word.
pub fn resolve_ambiguity(
    a: &Ambiguity,
    rules: &[RewriteRule],
    gens: &GeneratorSet,
    order: &OrderSpec,
) -> Option<FreePoly> {
    let mut engine = NfEngine::new();
    resolve_with(a, rules, &mut engine, gens, order)
}

fn resolve_with(
    a: &Ambiguity,
    rules: &[RewriteRule],
    engine: &mut NfEngine,
    gens: &GeneratorSet,
    order: &OrderSpec,
) -> Option<FreePoly> {
    let (branch1, branch2) = match a.kind {
        AmbiguityKind::Overlap => {
            let u = a.witness.slice(rules[a.sigma].lead.len(), a.witness.len());
            let t = a.witness.slice(0, a.t_len);
            (
                rules[a.sigma].tail.sandwich(&Word::empty(), &u),
                rules[a.tau].tail.sandwich(&t, &Word::empty()),
            )
        }
        AmbiguityKind::Inclusion => {
            let t = a.witness.slice(0, a.t_len);
            let u = a.witness.slice(a.t_len + a.v_len, a.witness.len());
            (rules[a.sigma].tail.clone(), rules[a.tau].tail.sandwich(&t, &u))
        }
    };
    let diff = engine.nf_diff(rules, &branch1, &branch2);
    if diff.is_zero() {
        None
    } else {
        Some(diff.monic(gens, order).expect("nonzero difference"))
    }
}

/// Interreduce in place: no lead divides another, all tails fully reduced.
fn interreduce(
    rules: &mut Vec<RewriteRule>,
    engine: &mut NfEngine,
    gens: &GeneratorSet,
    order: &OrderSpec,
) {
    loop {
        rules.sort_by(|a, b| order.compare(gens, &a.lead, &b.lead));
        let mut problem: Option<usize> = None;
        'scan: for i in 0..rules.len() {
            for (j, rj) in rules.iter().enumerate() {
                if j != i && rules[i].lead.find_factor(&rj.lead).is_some() {
                    problem = Some(i);
                    break 'scan;
                }
            }
            // Tail words cannot contain the rule's own lead (they are
            // strictly below it), so matching against the full set is fine.
            for (w, _) in rules[i].tail.terms() {
                if leftmost_match(w, rules).is_some() {
                    problem = Some(i);
                    break 'scan;
                }
            }
        }
        let Some(i) = problem else {
            return;
        };
        let gi = rules.remove(i).as_poly();
        engine.rules_changed();
        let nf = engine.nf(rules, &gi);
        if !nf.is_zero() {
            let rule = RewriteRule::from_poly(&nf, gens, order).expect("nonzero");
            rules.push(rule);
            engine.rules_changed();
        }
    }
}

/// A degree-truncated Grobner basis: interreduced monic rules, certified for
/// all normal-form and dimension questions up to `truncation_degree`.
///
/// `complete` is the stronger global claim: every ambiguity among the rules
/// (at any degree) has been seen and resolved, which holds exactly when all
/// witnesses up to the truncation resolved and `2*(max rule degree) - 1`
/// does not exceed it.
#[derive(Clone, Debug)]
pub struct GBasis {
    pub gens: GeneratorSet,
    pub order: OrderSpec,
    pub rules: Vec<RewriteRule>,
    pub truncation_degree: usize,
    pub complete: bool,
}

impl GBasis {
    pub fn reduce(&self, f: &FreePoly) -> FreePoly {
        reduce(f, &self.rules, &self.gens, &self.order)
    }

    pub fn max_rule_degree(&self) -> usize {
        self.rules
            .iter()
            .map(|r| r.degree(&self.gens))
            .max()
            .unwrap_or(0)
    }

    pub fn automaton(&self) -> FactorAutomaton {
        FactorAutomaton::build(
            self.rules.iter().map(|r| r.lead.clone()).collect(),
            self.gens.len(),
        )
    }

    /// All reduced words of the given degree, ascending in the order.
    pub fn reduced_words(&self, degree: usize) -> Result<Vec<Word>, GbError> {
        if degree > self.truncation_degree {
            return Err(GbError::TruncationInsufficient(degree, self.truncation_degree));
        }
        let mut words = self.automaton().words_of_degree(&self.gens, degree);
        words.sort_by(|a, b| self.order.compare(&self.gens, a, b));
        Ok(words)
    }

    /// Counts of reduced words per degree `0..=max_degree`, by dynamic
    /// programming on the factor-avoidance automaton rather than listing.
    pub fn dimension_sequence(&self, max_degree: usize) -> Vec<u128> {
        self.automaton().dimension_sequence(&self.gens, max_degree)
    }
}

/// Degree-truncated completion of a homogeneous presentation.
///
/// Ambiguities with witness degree at most `max_degree` are scanned in
/// ascending (degree, order); each failure adjoins the new monic rule, the
/// set is re-interreduced, and the scan restarts. Resolved factorizations
/// are remembered across restarts (joinability, once witnessed, persists
/// when rules are added), and a final full verification pass over the
/// finished rule set re-checks every ambiguity from scratch.
pub fn complete(p: &Presentation, max_degree: usize) -> Result<GBasis, GbError> {
    let gens = &p.gens;
    let order = &p.order;
    for r in &p.relations {
        if r.is_zero() {
            return Err(GbError::FreeAlg(FreeAlgError::ZeroPolynomial));
        }
        if r.homogeneous_degree(gens).is_none() {
            return Err(GbError::FreeAlg(FreeAlgError::Inhomogeneous));
        }
    }
    let mut rules: Vec<RewriteRule> = Vec::new();
    for r in &p.relations {
        rules.push(RewriteRule::from_poly(r, gens, order)?);
    }
    let mut engine = NfEngine::new();
    interreduce(&mut rules, &mut engine, gens, order);

    // Key a processed factorization by its data rather than rule indices,
    // which interreduction invalidates.
    let amb_key = |a: &Ambiguity, rules: &[RewriteRule]| {
        (
            a.kind,
            rules[a.sigma].lead.clone(),
            rules[a.tau].lead.clone(),
            a.t_len,
        )
    };
    let mut settled: HashSet<(AmbiguityKind, Word, Word, usize)> = HashSet::new();
    let mut verifying = false;
    loop {
        let ambiguities: Vec<Ambiguity> = find_ambiguities(&rules, gens, order)
            .into_iter()
            .filter(|a| a.witness.degree(gens) <= max_degree)
            .collect();
        let mut new_rule: Option<FreePoly> = None;
        for a in &ambiguities {
            if !verifying && settled.contains(&amb_key(a, &rules)) {
                continue;
            }
            match resolve_with(a, &rules, &mut engine, gens, order) {
                None => {
                    settled.insert(amb_key(a, &rules));
                }
                Some(g) => {
                    new_rule = Some(g);
                    break;
                }
            }
        }
        match new_rule {
            Some(g) => {
                rules.push(RewriteRule::from_poly(&g, gens, order)?);
                engine.rules_changed();
                interreduce(&mut rules, &mut engine, gens, order);
                verifying = false;
            }
            None => {
                if verifying {
                    break;
                }
                // Scan finished using the settled cache; confirm everything
                // against the final rules before certifying.
                verifying = true;
            }
        }
    }

    let max_rule_degree = rules.iter().map(|r| r.degree(gens)).max().unwrap_or(0);
    let complete_flag =
        rules.is_empty() || 2 * max_rule_degree <= max_degree + 1;
    Ok(GBasis {
        gens: gens.clone(),
        order: order.clone(),
        rules,
        truncation_degree: max_degree,
        complete: complete_flag,
    })
}

#[cfg(test)]
mod tests;
