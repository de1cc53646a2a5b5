//! Noncommutative polynomials in finitely many letters and a degree-capped
//! completion procedure (overlap resolution in the sense of the diamond
//! lemma) under the degree-lexicographic word order.
//!
//! Completion only resolves overlaps whose combined word has length at most
//! the cap `d`. The resulting rules generate a subideal of the true ideal,
//! so the number of normal words of length `≤ ℓ` is an upper bound for the
//! dimension of the image of `T^{≤ℓ}` in the quotient.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::field::{FieldSpec, Scalar};

/// A word in the letters `0..L`, ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x as u8])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|x| format!("x{x}")).collect();
        f.write_str(&parts.join("·"))
    }
}

/// A noncommutative polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · left · other · right`
    pub fn add_scaled(&mut self, c: &Scalar, left: &Word, other: &Poly, right: &Word) {
        for (w, d) in &other.terms {
            self.add_term(left.concat(w).concat(right), c * d);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut p = Poly::zero();
        for (w, d) in &self.terms {
            p.add_term(w.clone(), c * d);
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let field = other
            .terms
            .values()
            .next()
            .or_else(|| self.terms.values().next())
            .map(Scalar::field);
        match field {
            None => Poly::zero(),
            Some(f) => self.add(&other.scale(&f.from_i64(-1))),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                p.add_term(u.concat(v), c * d);
            }
        }
        p
    }

    fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| format!("{c}*{w:?}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
struct Rule {
    lhs: Word,
    rhs: Poly,
}

/// Rewriting rules `lhs → rhs` obtained by degree-capped completion.
#[derive(Clone, Debug)]
pub struct Rewriter {
    field: FieldSpec,
    letters: usize,
    cap: usize,
    rules: Vec<Option<Rule>>,
    index: HashMap<Vec<u8>, usize>,
    max_lhs: usize,
}

impl Rewriter {
    pub fn new(field: FieldSpec, letters: usize, cap: usize) -> Self {
        assert!(letters <= 256, "at most 256 letters");
        Rewriter {
            field,
            letters,
            cap,
            rules: Vec::new(),
            index: HashMap::new(),
            max_lhs: 0,
        }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn num_rules(&self) -> usize {
        self.index.len()
    }

    /// Leading words of the current rules.
    pub fn leading_words(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.rules.iter().flatten().map(|r| r.lhs.clone()).collect();
        v.sort();
        v
    }

    /// First rule whose left side occurs in `w`, with its position.
    fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            let end_max = (start + self.max_lhs).min(w.len());
            for end in start + 1..=end_max {
                if let Some(&i) = self.index.get(&w[start..end]) {
                    return Some((start, i));
                }
            }
        }
        None
    }

    /// Whether some left side is a subword of `w` ending at its last letter.
    fn reducible_suffix(&self, w: &[u8]) -> bool {
        let n = w.len();
        (n.saturating_sub(self.max_lhs)..n).any(|s| self.index.contains_key(&w[s..]))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find(&w.0).is_none()
    }

    /// Normal form: repeatedly rewrite the largest reducible term.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut work = p.clone();
        let mut out = Poly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find(&w.0) {
                None => {
                    out.terms.insert(w, c);
                }
                Some((start, i)) => {
                    let rule = self.rules[i].as_ref().expect("indexed rule");
                    let left = Word(w.0[..start].to_vec());
                    let right = Word(w.0[start + rule.lhs.len()..].to_vec());
                    work.add_scaled(&c, &left, &rule.rhs, &right);
                }
            }
        }
        out
    }

    pub fn reduce_word(&self, w: &Word) -> Poly {
        self.reduce(&Poly::monomial(w.clone(), self.field.one()))
    }

    /// Adds relations and completes up to the degree cap.
    pub fn complete(&mut self, relations: impl IntoIterator<Item = Poly>) {
        let mut queue: VecDeque<Poly> = relations.into_iter().collect();
        while let Some(p) = queue.pop_front() {
            let r = self.reduce(&p);
            let Some((lead, lc)) = r.leading() else {
                continue;
            };
            if lead.len() > self.cap {
                // only reachable for relations given above the cap
                continue;
            }
            let lead = lead.clone();
            let inv = lc.inv().expect("nonzero leading coefficient");
            let minus_inv = -&inv;
            let mut rhs = Poly::zero();
            for (w, c) in r.terms() {
                if *w != lead {
                    rhs.add_term(w.clone(), &minus_inv * c);
                }
            }
            // rules whose left side contains the new one become reducible
            for slot in 0..self.rules.len() {
                let contains = self.rules[slot]
                    .as_ref()
                    .is_some_and(|old| contains_subword(&old.lhs.0, &lead.0));
                if contains {
                    let old = self.rules[slot].take().expect("checked");
                    self.index.remove(&old.lhs.0);
                    let mut back = old.rhs.scale(&self.field.from_i64(-1));
                    back.add_term(old.lhs, self.field.one());
                    queue.push_back(back);
                }
            }
            let new = Rule { lhs: lead, rhs };
            let id = self.rules.len();
            for other in self.rules.iter().flatten() {
                for s in overlaps(&new, other, self.cap) {
                    queue.push_back(s);
                }
                for s in overlaps(other, &new, self.cap) {
                    queue.push_back(s);
                }
            }
            for s in overlaps(&new, &new, self.cap) {
                queue.push_back(s);
            }
            self.max_lhs = self.max_lhs.max(new.lhs.len());
            self.index.insert(new.lhs.0.clone(), id);
            self.rules.push(Some(new));
        }
    }

    /// All normal words of length at most `max_len`, in increasing order.
    pub fn normal_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for x in 0..self.letters {
                    let mut v = w.0.clone();
                    v.push(x as u8);
                    if !self.reducible_suffix(&v) {
                        next.push(Word(v));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }
}

fn contains_subword(w: &[u8], s: &[u8]) -> bool {
    s.len() <= w.len() && w.windows(s.len()).any(|x| x == s)
}

/// S-polynomials for proper overlaps `a = x y`, `b = y z` of total length
/// at most `cap`: the two rewrites of `x y z` subtracted.
fn overlaps(f: &Rule, g: &Rule, cap: usize) -> Vec<Poly> {
    let (a, b) = (&f.lhs.0, &g.lhs.0);
    let mut out = Vec::new();
    let max_k = a.len().min(b.len()).saturating_sub(1);
    for k in 1..=max_k {
        if a.len() + b.len() - k > cap {
            continue;
        }
        if a[a.len() - k..] == b[..k] {
            let x = Word(a[..a.len() - k].to_vec());
            let z = Word(b[k..].to_vec());
            let one = f.rhs.terms().next().map(|(_, c)| c.field()).or_else(|| g.rhs.terms().next().map(|(_, c)| c.field()));
            let Some(field) = one else {
                // both sides rewrite to zero
                continue;
            };
            let mut s = Poly::zero();
            s.add_scaled(&field.one(), &Word::empty(), &f.rhs, &z);
            s.add_scaled(&field.from_i64(-1), &x, &g.rhs, &Word::empty());
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn w(v: &[u8]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn deglex_order() {
        assert!(w(&[1]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
        assert!(Word::empty() < w(&[0]));
    }

    #[test]
    fn commutative_idempotents() {
        // x0, x1 idempotent and commuting: dimension 4
        let f = q();
        let one = f.one();
        let mut rels = Vec::new();
        for x in 0..2u8 {
            let mut p = Poly::monomial(w(&[x, x]), one.clone());
            p.add_term(w(&[x]), f.from_i64(-1));
            rels.push(p);
        }
        let mut p = Poly::monomial(w(&[1, 0]), one.clone());
        p.add_term(w(&[0, 1]), f.from_i64(-1));
        rels.push(p);
        let mut rw = Rewriter::new(f, 2, 4);
        rw.complete(rels);
        let nw = rw.normal_words(4);
        assert_eq!(nw, vec![w(&[]), w(&[0]), w(&[1]), w(&[0, 1])]);
    }

    #[test]
    fn overlap_resolution() {
        // x^2 = y, xy = 1 forces y x = 1 as well: x^3 reduces both ways
        let f = q();
        let mut a = Poly::monomial(w(&[0, 0]), f.one());
        a.add_term(w(&[1]), f.from_i64(-1));
        let mut b = Poly::monomial(w(&[0, 1]), f.one());
        b.add_term(w(&[]), f.from_i64(-1));
        let mut rw = Rewriter::new(f, 2, 4);
        rw.complete([a, b]);
        let yx = rw.reduce_word(&w(&[1, 0]));
        assert_eq!(yx, Poly::constant(f.one()));
    }
}
