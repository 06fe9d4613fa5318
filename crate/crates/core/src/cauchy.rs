//! The quotient monomial algebra behind the Cauchy-type identities.
//!
//! Monomials in the noncommutative x-variables are words of letters; two
//! monomials are equal when one can be rewritten into the other using
//!
//! * the pair rule `x_{-i} x_i = x_{i+1} x_{-(i+1)}` for `i >= 1`, and
//! * commutation of any two adjacent variables that are not an opposite
//!   pair `x_i, x_{-i}` - except that in type D the middle pair
//!   `x_1, x_{-1}` does commute, mirroring the incomparable letters
//!   (without this the quotient would separate congruent words).
//!
//! Equality is decided by a bidirectional closure, not by a normal form:
//! directed rewriting toward the sorted pattern is not confluent (for
//! instance `x_{-2} x_{-1} x_1` reaches both `x_2 x_{-2} x_{-2}` and
//! `x_3 x_{-2} x_{-3}`, two distinct sorted words in one class). Where a
//! canonical representative is needed we take the least closure element.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::letters::{Letter, LieType, Word};
use crate::partition::Partition;
use crate::poly::MultiPoly;
use crate::rs::{rs, Biword};
use crate::schur::schur_poly;
use crate::tableau::Tableau;

/// A monomial of the quotient algebra: a word of x-variable letters.
/// Equality of the underlying words is *not* algebra equality; use
/// [`algebra_equal`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XMonomial {
    letters: Vec<Letter>,
    ty: LieType,
}

impl XMonomial {
    pub fn new(letters: Vec<Letter>, ty: LieType) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|l| !l.is_legal(ty)) {
            return Err(Error::IllegalLetter { letter: l, ty });
        }
        Ok(XMonomial { letters, ty })
    }

    pub fn parse(s: &str, ty: LieType) -> Result<Self> {
        let w = Word::parse(s, ty)?;
        Ok(XMonomial {
            letters: w.letters().to_vec(),
            ty,
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// Conserved under every relation: length, barred count, zero count.
    fn signature(&self) -> (usize, usize, usize) {
        (
            self.letters.len(),
            self.letters.iter().filter(|l| l.is_barred()).count(),
            self.letters.iter().filter(|l| l.is_zero()).count(),
        )
    }

    /// Single-step neighbors under the defining relations, capped at
    /// letter index `cap`.
    fn neighbors(&self, cap: u32, out: &mut Vec<XMonomial>) {
        out.clear();
        let ls = &self.letters;
        for k in 0..ls.len().saturating_sub(1) {
            let (a, b) = (ls[k], ls[k + 1]);
            // commutation, unless the pair is opposite (i, -i), i != 0;
            // the type-D middle pair commutes
            let opposite =
                !a.is_zero() && a == b.bar() && !(self.ty == LieType::D && a.index() == 1);
            if !opposite && a != b {
                let mut next = ls.clone();
                next.swap(k, k + 1);
                out.push(XMonomial {
                    letters: next,
                    ty: self.ty,
                });
            }
            // pair rule up: x_{-i} x_i -> x_{i+1} x_{-(i+1)}
            if a.is_barred() && b.is_unbarred() && a.index() == b.index() && a.index() < cap {
                let mut next = ls.clone();
                next[k] = Letter::unbarred(a.index() + 1);
                next[k + 1] = Letter::barred(a.index() + 1);
                out.push(XMonomial {
                    letters: next,
                    ty: self.ty,
                });
            }
            // pair rule down: x_i x_{-i} -> x_{-(i-1)} x_{i-1} for i >= 2
            if a.is_unbarred() && b.is_barred() && a.index() == b.index() && a.index() >= 2 {
                let mut next = ls.clone();
                next[k] = Letter::barred(a.index() - 1);
                next[k + 1] = Letter::unbarred(a.index() - 1);
                out.push(XMonomial {
                    letters: next,
                    ty: self.ty,
                });
            }
        }
    }

    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }
}

impl std::fmt::Display for XMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.value())?;
            first = false;
        }
        Ok(())
    }
}

/// Caps for the closure search: largest letter index allowed and the node
/// budget. The default cap follows the quadratic-in-degree policy.
#[derive(Debug, Clone, Copy)]
pub struct ClosureCaps {
    pub max_index: u32,
    pub budget: usize,
}

impl ClosureCaps {
    pub fn default_for(m1: &XMonomial, m2: &XMonomial) -> ClosureCaps {
        let deg = m1.degree().max(m2.degree()) as u32;
        let max_index = m1.max_index().max(m2.max_index()) + deg * deg / 4 + 2;
        ClosureCaps {
            max_index,
            budget: 200_000,
        }
    }
}

/// Decides equality in the quotient algebra by growing both closures
/// breadth-first until they meet, the budget runs out, or both are
/// exhausted. A spent budget with live frontiers is an indeterminate
/// outcome, reported as an error distinct from `false`.
pub fn algebra_equal(m1: &XMonomial, m2: &XMonomial, caps: ClosureCaps) -> Result<bool> {
    if m1.ty() != m2.ty() {
        return Err(Error::TypeMismatch);
    }
    if m1.signature() != m2.signature() {
        return Ok(false);
    }
    if m1 == m2 {
        return Ok(true);
    }
    fn expand(
        q: &mut VecDeque<XMonomial>,
        seen: &mut BTreeSet<XMonomial>,
        other: &BTreeSet<XMonomial>,
        caps: ClosureCaps,
        steps: &mut usize,
        scratch: &mut Vec<XMonomial>,
    ) -> Result<bool> {
        if let Some(cur) = q.pop_front() {
            cur.neighbors(caps.max_index, scratch);
            for next in scratch.drain(..) {
                if other.contains(&next) {
                    return Ok(true);
                }
                if seen.insert(next.clone()) {
                    q.push_back(next);
                }
                *steps += 1;
                if *steps > caps.budget {
                    return Err(Error::Indeterminate);
                }
            }
        }
        Ok(false)
    }
    let mut seen1: BTreeSet<XMonomial> = [m1.clone()].into();
    let mut seen2: BTreeSet<XMonomial> = [m2.clone()].into();
    let mut q1: VecDeque<XMonomial> = [m1.clone()].into();
    let mut q2: VecDeque<XMonomial> = [m2.clone()].into();
    let mut steps = 0usize;
    let mut scratch = Vec::new();
    while !(q1.is_empty() && q2.is_empty()) {
        if expand(&mut q1, &mut seen1, &seen2, caps, &mut steps, &mut scratch)? {
            return Ok(true);
        }
        if expand(&mut q2, &mut seen2, &seen1, caps, &mut steps, &mut scratch)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The canonical representative: the least element of the closure.
pub fn canonical_form(m: &XMonomial, caps: ClosureCaps) -> Result<XMonomial> {
    let mut seen: BTreeSet<XMonomial> = [m.clone()].into();
    let mut queue: VecDeque<XMonomial> = [m.clone()].into();
    let mut scratch = Vec::new();
    while let Some(cur) = queue.pop_front() {
        cur.neighbors(caps.max_index, &mut scratch);
        for next in scratch.drain(..) {
            if seen.insert(next.clone()) {
                if seen.len() > caps.budget {
                    return Err(Error::BudgetExceeded {
                        what: "canonical_form",
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().next().expect("closure contains the start"))
}

/// The x-monomial of a word: letterwise transcription.
pub fn x_of_word(w: &Word) -> XMonomial {
    XMonomial {
        letters: w.letters().to_vec(),
        ty: w.ty(),
    }
}

/// Commutative y-monomial: a multiset of positive integers.
pub type YMonomial = BTreeMap<u32, usize>;

/// The y-side monomial of a biword: label `p` with multiplicity `tau_p`.
pub fn y_of_rows(b: &Biword) -> YMonomial {
    let mut m = YMonomial::new();
    for (row, &label) in b.rows().iter().zip(b.labels()) {
        *m.entry(label).or_insert(0) += row.len();
    }
    m
}

/// The term-by-term mechanism of the Cauchy identity: under the
/// correspondence `b -> (P, Q)`, the x-monomials of `w_x` and of the reading
/// of `P` agree in the quotient algebra, and the y-monomial of `b` is the
/// content of `Q`.
pub fn cauchy_biword_check(b: &Biword) -> Result<bool> {
    let (p, q) = rs(b)?;
    let mx = x_of_word(&b.word());
    let mp = x_of_word(&p.reading());
    let caps = ClosureCaps::default_for(&mx, &mp);
    if !algebra_equal(&mx, &mp, caps)? {
        return Ok(false);
    }
    let content: YMonomial = q.content();
    Ok(content == y_of_rows(b))
}

/// Verifies the type-A Cauchy identity as an exact identity of truncated
/// commutative power series: the product of `1/(1 - x_i y_j)` over
/// `i <= m`, `j <= k` agrees with the sum of paired Schur polynomials in
/// every total x-degree up to `max_degree`.
pub fn cauchy_truncated_a(m: usize, k: usize, max_degree: usize) -> bool {
    let vars = m + k;
    // box-degree counts an x and a y together, so each factor is expanded to
    // x-degree max_degree and products are truncated at 2 * max_degree total
    let mut kernel = MultiPoly::one(vars);
    for i in 0..m {
        for j in 0..k {
            let mut factor = MultiPoly::zero(vars);
            for d in 0..=max_degree as u16 {
                let mut expo = vec![0u16; vars];
                expo[i] = d;
                expo[m + j] = d;
                factor.add_term(expo, 1);
            }
            kernel = kernel.mul_truncated(&factor, 2 * max_degree);
        }
    }
    keep_balanced_up_to(&mut kernel, m, max_degree);

    let mut rhs = MultiPoly::zero(vars);
    for size in 0..=max_degree as u32 {
        for shape in Partition::all_of_size(size) {
            let sx = schur_poly(&shape, m);
            let sy = schur_poly(&shape, k);
            if sx.is_zero() || sy.is_zero() {
                continue;
            }
            rhs = rhs.add(&sx.mul_disjoint(&sy));
        }
    }
    keep_balanced_up_to(&mut rhs, m, max_degree);
    kernel == rhs
}

/// Restricts to the terms whose x-degree is at most `max_degree` (kernel
/// terms always have equal x- and y-degrees).
fn keep_balanced_up_to(p: &mut MultiPoly, m: usize, max_degree: usize) {
    let mut out = MultiPoly::zero(p.vars());
    for (expo, coeff) in p.terms() {
        let xdeg: usize = expo[..m].iter().map(|&d| d as usize).sum();
        let ydeg: usize = expo[m..].iter().map(|&d| d as usize).sum();
        if xdeg == ydeg && xdeg <= max_degree {
            out.add_term(expo.clone(), coeff);
        }
    }
    *p = out;
}

/// Plactic congruence implies equality of x-monomials: the compatibility
/// property connecting the monoid with the quotient algebra.
pub fn compatible_with_congruence(w1: &Word, w2: &Word) -> Result<bool> {
    let m1 = x_of_word(w1);
    let m2 = x_of_word(w2);
    let caps = ClosureCaps::default_for(&m1, &m2);
    algebra_equal(&m1, &m2, caps)
}

/// Prints a monomial as the canonical closure representative.
pub fn display_canonical(m: &XMonomial) -> Result<String> {
    let caps = ClosureCaps {
        max_index: m.max_index() + (m.degree() * m.degree() / 4) as u32 + 2,
        budget: 200_000,
    };
    Ok(canonical_form(m, caps)?.to_string())
}

/// Used by the CLI for reading checks against a tableau.
pub fn x_of_tableau(t: &Tableau) -> XMonomial {
    x_of_word(&t.reading())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::LieType::{B, C};

    fn xm(s: &str, ty: LieType) -> XMonomial {
        XMonomial::parse(s, ty).unwrap()
    }

    fn caps() -> ClosureCaps {
        ClosureCaps {
            max_index: 10,
            budget: 100_000,
        }
    }

    #[test]
    fn pair_rule_and_commutation() {
        assert!(algebra_equal(&xm("-1 1", C), &xm("2 -2", C), caps()).unwrap());
        assert!(algebra_equal(&xm("1 2", C), &xm("2 1", C), caps()).unwrap());
        assert!(!algebra_equal(&xm("-1 1", C), &xm("1 -1", C), caps()).unwrap());
        assert!(algebra_equal(&xm("", C), &xm("", C), caps()).unwrap());
    }

    #[test]
    fn non_confluence_witness() {
        // both sorted-pattern words lie in one class
        let start = xm("-2 -1 1", C);
        assert!(algebra_equal(&start, &xm("2 -2 -2", C), caps()).unwrap());
        assert!(algebra_equal(&start, &xm("3 -2 -3", C), caps()).unwrap());
    }

    #[test]
    fn zero_letters_commute() {
        assert!(algebra_equal(&xm("0 1", B), &xm("1 0", B), caps()).unwrap());
        assert!(algebra_equal(&xm("0 0", B), &xm("0 0", B), caps()).unwrap());
    }

    #[test]
    fn canonical_is_least() {
        let c = canonical_form(&xm("-1 1", C), caps()).unwrap();
        assert_eq!(c, xm("-1 1", C).min(xm("2 -2", C)));
        assert_eq!(display_canonical(&xm("2 -2", C)).unwrap(), "x-1 x1");
        assert_eq!(display_canonical(&xm("", C)).unwrap(), "1");
    }

    #[test]
    fn congruent_words_have_equal_monomials() {
        // a relation instance: the pair-shift rewrite preserves the monomial
        let w1 = Word::parse("-1 1 1", C).unwrap();
        let w2 = Word::parse("2 -2 1", C).unwrap();
        assert!(compatible_with_congruence(&w1, &w2).unwrap());
    }

    #[test]
    fn biword_mechanism() {
        let b = Biword::new(
            vec![
                vec![Letter::new(1)],
                vec![Letter::new(-1)],
                vec![Letter::new(1)],
                vec![Letter::new(-1)],
            ],
            C,
        )
        .unwrap();
        assert!(cauchy_biword_check(&b).unwrap());
        assert!(cauchy_biword_check(&Biword::empty(C)).unwrap());
        let two_rows = Biword::new(vec![vec![Letter::new(1)], vec![Letter::new(-1)]], C).unwrap();
        assert_eq!(
            y_of_rows(&two_rows),
            [(1u32, 1usize), (2u32, 1usize)].into_iter().collect()
        );
    }

    #[test]
    fn congruence_compatibility_exhaustive_small() {
        // every pair inside one plactic class has one monomial class
        use crate::plactic::plactic_class;
        for ty in [LieType::B, C, LieType::D] {
            let letters: Vec<Letter> = (-2..=2)
                .map(Letter::new)
                .filter(|l| l.is_legal(ty))
                .collect();
            let mut words = vec![Vec::<Letter>::new()];
            for _ in 0..3 {
                let mut next = Vec::new();
                for v in &words {
                    for &l in &letters {
                        let mut v2 = v.clone();
                        v2.push(l);
                        next.push(v2);
                    }
                }
                words = next;
            }
            for v in words {
                let w = Word::new(v, ty).unwrap();
                let class = plactic_class(&w, 10_000).unwrap();
                for other in &class {
                    assert!(
                        compatible_with_congruence(&w, other).unwrap(),
                        "monomials split the class of {w} at {other} in type {ty}"
                    );
                }
            }
        }
    }

    #[test]
    fn truncated_type_a_kernels() {
        assert!(cauchy_truncated_a(2, 2, 3));
        assert!(cauchy_truncated_a(1, 1, 2));
        assert!(cauchy_truncated_a(2, 1, 0));
    }

    #[test]
    fn tiny_budget_is_indeterminate_not_false() {
        let caps = ClosureCaps {
            max_index: 10,
            budget: 1,
        };
        assert_eq!(
            algebra_equal(&xm("-2 -1 1", C), &xm("3 -2 -3", C), caps),
            Err(crate::Error::Indeterminate)
        );
    }

    #[test]
    fn transitivity_spot_check() {
        let a = xm("-2 -1 1", C);
        let b = xm("-2 2 -2", C);
        let c = xm("3 -3 -2", C);
        for (u, v) in [(&a, &b), (&b, &c), (&a, &c)] {
            assert!(algebra_equal(u, v, caps()).unwrap());
        }
    }
}
