//! Factor-avoidance automaton over a set of forbidden words, built with the
//! usual failure-link construction. Drives reduced-word enumeration and
//! dimension counting by transfer-matrix dynamic programming.

use crate::freealg::{GeneratorSet, Word};
use std::collections::VecDeque;

/// Aho-Corasick style automaton whose live states are proper suffix states
/// avoiding every forbidden word.
pub struct FactorAutomaton {
    /// `delta[state][letter]`, `usize::MAX` marking a dead transition.
    delta: Vec<Vec<usize>>,
}

const DEAD: usize = usize::MAX;

impl FactorAutomaton {
    pub fn build(forbidden: Vec<Word>, alphabet: usize) -> Self {
        // Trie over the forbidden words.
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet]];
        let mut terminal: Vec<bool> = vec![false];
        for w in &forbidden {
            let mut node = 0;
            for l in w.letters() {
                node = match children[node][l] {
                    Some(next) => next,
                    None => {
                        children.push(vec![None; alphabet]);
                        terminal.push(false);
                        let id = children.len() - 1;
                        children[node][l] = Some(id);
                        id
                    }
                };
            }
            terminal[node] = true;
        }
        // Failure links by BFS; a state is dead if its suffix chain hits a
        // terminal node.
        let n = children.len();
        let mut fail = vec![0usize; n];
        let mut dead = terminal.clone();
        let mut queue = VecDeque::new();
        for l in 0..alphabet {
            if let Some(c) = children[0][l] {
                queue.push_back(c);
            }
        }
        while let Some(u) = queue.pop_front() {
            if dead[fail[u]] {
                dead[u] = true;
            }
            for l in 0..alphabet {
                if let Some(c) = children[u][l] {
                    let mut f = fail[u];
                    loop {
                        if let Some(next) = children[f][l] {
                            if next != c {
                                fail[c] = next;
                                break;
                            }
                        }
                        if f == 0 {
                            fail[c] = children[0][l].filter(|&x| x != c).unwrap_or(0);
                            break;
                        }
                        f = fail[f];
                    }
                    queue.push_back(c);
                }
            }
        }
        // Dense transitions among live states.
        let mut delta = vec![vec![DEAD; alphabet]; n];
        let mut order: Vec<usize> = vec![0];
        let mut queue = VecDeque::from([0usize]);
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for l in 0..alphabet {
                let target = match children[u][l] {
                    Some(c) => c,
                    None => {
                        if u == 0 {
                            0
                        } else {
                            delta[fail[u]][l]
                        }
                    }
                };
                let target = if target == DEAD || dead[target] {
                    DEAD
                } else {
                    target
                };
                delta[u][l] = target;
                if let Some(c) = children[u][l] {
                    if !seen[c] {
                        seen[c] = true;
                        order.push(c);
                        queue.push_back(c);
                    }
                }
            }
        }
        let _ = order;
        FactorAutomaton { delta }
    }

    pub fn step(&self, state: usize, letter: usize) -> Option<usize> {
        match self.delta[state][letter] {
            DEAD => None,
            s => Some(s),
        }
    }

    /// Does `w` avoid every forbidden word as a factor?
    pub fn accepts(&self, w: &Word) -> bool {
        let mut state = 0;
        for l in w.letters() {
            match self.step(state, l) {
                Some(s) => state = s,
                None => return false,
            }
        }
        true
    }

    /// All avoiding words of exactly the given weighted degree (unsorted).
    pub fn words_of_degree(&self, gens: &GeneratorSet, degree: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut letters = Vec::new();
        self.enumerate_rec(gens, degree, 0, &mut letters, &mut out);
        out
    }

    fn enumerate_rec(
        &self,
        gens: &GeneratorSet,
        remaining: usize,
        state: usize,
        letters: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            out.push(Word::from_letters(letters));
            return;
        }
        for l in 0..gens.len() {
            if gens.weight(l) > remaining {
                continue;
            }
            if let Some(next) = self.step(state, l) {
                letters.push(l);
                self.enumerate_rec(gens, remaining - gens.weight(l), next, letters, out);
                letters.pop();
            }
        }
    }

    /// Counts of avoiding words per degree `0..=max_degree`.
    pub fn dimension_sequence(&self, gens: &GeneratorSet, max_degree: usize) -> Vec<u128> {
        let n_states = self.delta.len();
        // counts[d][state]
        let mut counts = vec![vec![0u128; n_states]; max_degree + 1];
        counts[0][0] = 1;
        for d in 0..max_degree {
            for state in 0..n_states {
                if counts[d][state] == 0 {
                    continue;
                }
                let c = counts[d][state];
                for l in 0..gens.len() {
                    let nd = d + gens.weight(l);
                    if nd > max_degree {
                        continue;
                    }
                    if let Some(next) = self.step(state, l) {
                        counts[nd][next] += c;
                    }
                }
            }
        }
        counts
            .into_iter()
            .map(|row| row.into_iter().sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::OrderSpec;

    fn w(letters: &[usize]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn avoids_single_factor() {
        // Forbid yx over {x, y}: avoiding words are x^i y^j.
        let auto = FactorAutomaton::build(vec![w(&[1, 0])], 2);
        assert!(auto.accepts(&w(&[0, 0, 1, 1])));
        assert!(!auto.accepts(&w(&[0, 1, 0])));
        let gens = GeneratorSet::standard(&["x", "y"]);
        let dims = auto.dimension_sequence(&gens, 6);
        assert_eq!(dims, vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn enumeration_matches_counting() {
        // Forbid yx^2, y^2x: the degree-d counts follow weights (1,1,2).
        let auto = FactorAutomaton::build(vec![w(&[1, 0, 0]), w(&[1, 1, 0])], 2);
        let gens = GeneratorSet::standard(&["x", "y"]);
        let dims = auto.dimension_sequence(&gens, 8);
        for d in 0..=8 {
            let listed = auto.words_of_degree(&gens, d);
            assert_eq!(listed.len() as u128, dims[d], "degree {d}");
        }
        assert_eq!(dims[3], 6);
    }

    #[test]
    fn overlapping_patterns_and_suffix_kills() {
        // Forbid xx and yxy; xyx must survive, xxy must not.
        let auto = FactorAutomaton::build(vec![w(&[0, 0]), w(&[1, 0, 1])], 2);
        assert!(auto.accepts(&w(&[0, 1, 0])));
        assert!(!auto.accepts(&w(&[0, 0, 1])));
        assert!(!auto.accepts(&w(&[1, 1, 0, 1])));
        // Brute-force cross-check on all words of degree <= 10.
        let gens = GeneratorSet::standard(&["x", "y"]);
        let order = OrderSpec::declaration(&gens);
        let dims = auto.dimension_sequence(&gens, 10);
        for d in 0..=10 {
            let brute = crate::freealg::words_of_degree(&gens, &order, d)
                .into_iter()
                .filter(|v| {
                    v.find_factor(&w(&[0, 0])).is_none()
                        && v.find_factor(&w(&[1, 0, 1])).is_none()
                })
                .count();
            assert_eq!(dims[d], brute as u128, "degree {d}");
        }
    }
}
