//! The four plactic monoids as length-preserving rewriting systems.
//!
//! Each type contributes a family of relations between words of length 3,
//! applied as two-way rewrites inside a sliding window. Closure under these
//! rewrites is the plactic congruence; every class is finite and is labelled
//! by the common insertion tableau of its members.
//!
//! In type D all side conditions are read in the partial alphabet order:
//! a window whose required comparison involves the incomparable pair
//! `{1, -1}` does not fire.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::letters::{le, lt, Letter, LieType, Word};

/// A single application of a defining relation at a window position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    /// Index of the leftmost letter of the window.
    pub position: usize,
    pub before: [Letter; 3],
    pub after: [Letter; 3],
    /// Name of the relation family that fired, for tracing.
    pub rule: &'static str,
}

fn unb(i: i32) -> Letter {
    Letter::new(i)
}

fn bar(i: i32) -> Letter {
    Letter::new(-i)
}

/// All windows reachable from `w` by one application of a type-A relation,
/// in either direction.
fn window_rewrites_a(w: [Letter; 3], out: &mut Vec<([Letter; 3], &'static str)>) {
    let t = LieType::A;
    let [p, q, r] = w;
    // abx = bax if a < x <= b
    if lt(p, r, t) && le(r, q, t) {
        out.push(([q, p, r], "knuth-row"));
    }
    if lt(q, r, t) && le(r, p, t) {
        out.push(([q, p, r], "knuth-row"));
    }
    // abx = axb if x <= a < b
    if le(r, p, t) && lt(p, q, t) {
        out.push(([p, r, q], "knuth-col"));
    }
    if le(q, p, t) && lt(p, r, t) {
        out.push(([p, r, q], "knuth-col"));
    }
}

/// Shared Knuth-like relations of types B, C and D, with the strictness of
/// the first relation and the opposite-letter exclusions per type.
fn window_rewrites_knuth_like(
    w: [Letter; 3],
    t: LieType,
    strict_first: bool,
    out: &mut Vec<([Letter; 3], &'static str)>,
) {
    let [p, q, r] = w;
    let first_upper = |x: Letter, b: Letter| {
        if strict_first {
            lt(x, b, t)
        } else {
            le(x, b, t)
        }
    };
    // abx ≡ bax if a < x (<=|<) b and b != bar(a)
    if lt(p, r, t) && first_upper(r, q) && q != p.bar() {
        out.push(([q, p, r], "knuth-row"));
    }
    if lt(q, r, t) && first_upper(r, p) && p != q.bar() {
        out.push(([q, p, r], "knuth-row"));
    }
    // abx ≡ axb if x (<=|<) a < b and b != bar(x)
    let second_lower = |x: Letter, a: Letter| {
        if strict_first {
            lt(x, a, t)
        } else {
            le(x, a, t)
        }
    };
    if second_lower(r, p) && lt(p, q, t) && q != r.bar() {
        out.push(([p, r, q], "knuth-col"));
    }
    if second_lower(q, p) && lt(p, r, t) && r != q.bar() {
        out.push(([p, r, q], "knuth-col"));
    }
}

/// The index-shifting pair relations shared by B, C and D:
/// `(-b) b x ≡ (b+1) (-(b+1)) x` and `a b (-b) ≡ a (-(b-1)) (b-1)`.
fn window_rewrites_pair_shift(
    w: [Letter; 3],
    t: LieType,
    out: &mut Vec<([Letter; 3], &'static str)>,
) {
    let [p, q, r] = w;
    // (-b) b x -> (b+1) (-(b+1)) x, condition -b <= x <= b, (B: b != 0)
    if p.is_barred() && q.is_unbarred() && p.index() == q.index() {
        let b = q.value();
        if le(p, r, t) && le(r, q, t) {
            out.push(([unb(b + 1), bar(b + 1), r], "pair-up"));
        }
    }
    // reverse: c (-c) x -> (-(c-1)) (c-1) x for c >= 2 with -(c-1) <= x <= c-1
    if p.is_unbarred() && q.is_barred() && p.index() == q.index() && p.index() >= 2 {
        let b = p.value() - 1;
        if (t != LieType::B || b != 0) && le(bar(b), r, t) && le(r, unb(b), t) {
            out.push(([bar(b), unb(b), r], "pair-up"));
        }
    }
    // a b (-b) -> a (-(b-1)) (b-1), condition -b < a < b, (B: (a,b) != (0,1)).
    // In type D the boundary case b = 2 is replaced by the two fixed triples
    // below: the result would touch the incomparable middle pair.
    if q.is_unbarred() && r.is_barred() && q.index() == r.index() {
        let b = q.value();
        if lt(r, p, t)
            && lt(p, q, t)
            && !(t == LieType::B && p.is_zero() && b == 1)
            && !(t == LieType::D && b == 2)
        {
            out.push(([p, bar(b - 1), unb(b - 1)], "pair-down"));
        }
    }
    // reverse: a (-c) c -> a (c+1) (-(c+1)) for -(c+1) < a < c+1
    if q.is_barred() && r.is_unbarred() && q.index() == r.index() {
        let b = r.value() + 1;
        if lt(bar(b), p, t)
            && lt(p, unb(b), t)
            && !(t == LieType::B && p.is_zero() && b == 1)
            && !(t == LieType::D && b == 2)
        {
            out.push(([p, unb(b), bar(b)], "pair-down"));
        }
    }
}

fn window_rewrites_b(w: [Letter; 3], out: &mut Vec<([Letter; 3], &'static str)>) {
    let t = LieType::B;
    let [p, q, r] = w;
    window_rewrites_knuth_like(w, t, true, out);
    // axx ≡ xax if a < x, x != bar(a), x != 0
    if q == r && lt(p, q, t) && q != p.bar() && !q.is_zero() {
        out.push(([q, p, r], "equal-row"));
    }
    if p == r && lt(q, p, t) && p != q.bar() && !p.is_zero() {
        out.push(([q, p, r], "equal-row")); // xax -> axx read backwards
    }
    // xbx ≡ xxb if x < b, b != bar(x), x != 0
    if p == r && lt(p, q, t) && q != p.bar() && !p.is_zero() {
        out.push(([p, r, q], "equal-col"));
    }
    if p == q && lt(p, r, t) && r != p.bar() && !p.is_zero() {
        out.push(([p, r, q], "equal-col")); // xxb -> xbx read backwards
    }
    window_rewrites_pair_shift(w, t, out);
    // 00x ≡ 0x0 if x <= -1
    if p.is_zero() && q.is_zero() && le(r, bar(1), t) {
        out.push(([p, r, q], "zero-col"));
    }
    if p.is_zero() && r.is_zero() && le(q, bar(1), t) {
        out.push(([p, r, q], "zero-col"));
    }
    // 0b0 ≡ b00 if b >= 1
    if p.is_zero() && r.is_zero() && le(unb(1), q, t) {
        out.push(([q, p, r], "zero-row"));
    }
    if q.is_zero() && r.is_zero() && le(unb(1), p, t) {
        out.push(([q, p, r], "zero-row"));
    }
    // 01(-1) ≡ 1(-1)0
    if w == [Letter::zero(), unb(1), bar(1)] {
        out.push(([unb(1), bar(1), Letter::zero()], "zero-pair"));
    }
    if w == [unb(1), bar(1), Letter::zero()] {
        out.push(([Letter::zero(), unb(1), bar(1)], "zero-pair"));
    }
}

fn window_rewrites_c(w: [Letter; 3], out: &mut Vec<([Letter; 3], &'static str)>) {
    window_rewrites_knuth_like(w, LieType::C, false, out);
    window_rewrites_pair_shift(w, LieType::C, out);
}

fn window_rewrites_d(w: [Letter; 3], out: &mut Vec<([Letter; 3], &'static str)>) {
    let t = LieType::D;
    let [p, q, r] = w;
    window_rewrites_knuth_like(w, t, false, out);
    window_rewrites_pair_shift(w, t, out);
    let one = unb(1);
    let bone = bar(1);
    let two = unb(2);
    let btwo = bar(2);
    // 1 b -1 ≡ b 1 -1 if b >= 2
    if p == one && r == bone && le(two, q, t) {
        out.push(([q, p, r], "d-mixed"));
    }
    if q == one && r == bone && le(two, p, t) {
        out.push(([q, p, r], "d-mixed"));
    }
    // -1 b 1 ≡ b -1 1 if b >= 2
    if p == bone && r == one && le(two, q, t) {
        out.push(([q, p, r], "d-mixed"));
    }
    if q == bone && r == one && le(two, p, t) {
        out.push(([q, p, r], "d-mixed"));
    }
    // 1 -1 x ≡ 1 x -1 if x <= -2
    if p == one && q == bone && le(r, btwo, t) {
        out.push(([p, r, q], "d-mixed"));
    }
    if p == one && r == bone && le(q, btwo, t) {
        out.push(([p, r, q], "d-mixed"));
    }
    // -1 1 x ≡ -1 x 1 if x <= -2
    if p == bone && q == one && le(r, btwo, t) {
        out.push(([p, r, q], "d-mixed"));
    }
    if p == bone && r == one && le(q, btwo, t) {
        out.push(([p, r, q], "d-mixed"));
    }
    // fixed triples; the last two are the b = 2 boundary of the second pair
    // relation, which lands on the incomparable middle letters and flips the
    // order on one side
    let fixed: [([Letter; 3], [Letter; 3]); 4] = [
        ([bone, one, one], [two, btwo, one]),
        ([one, bone, bone], [two, btwo, bone]),
        ([one, two, btwo], [one, one, bone]),
        ([bone, two, btwo], [bone, bone, one]),
    ];
    for (lhs, rhs) in fixed {
        if w == lhs {
            out.push((rhs, "d-special"));
        }
        if w == rhs {
            out.push((lhs, "d-special"));
        }
    }
}

/// All single applications of the type's relations, in both directions, at
/// every window of `w`.
pub fn rewrites(w: &Word) -> Vec<(RewriteStep, Word)> {
    let ty = w.ty();
    let letters = w.letters();
    let mut result = Vec::new();
    if letters.len() < 3 {
        return result;
    }
    let mut alts: Vec<([Letter; 3], &'static str)> = Vec::new();
    for pos in 0..=letters.len() - 3 {
        let window = [letters[pos], letters[pos + 1], letters[pos + 2]];
        alts.clear();
        match ty {
            LieType::A => window_rewrites_a(window, &mut alts),
            LieType::B => window_rewrites_b(window, &mut alts),
            LieType::C => window_rewrites_c(window, &mut alts),
            LieType::D => window_rewrites_d(window, &mut alts),
        }
        for &(after, rule) in alts.iter() {
            if after == window {
                continue;
            }
            let mut new_letters = letters.to_vec();
            new_letters[pos..pos + 3].copy_from_slice(&after);
            let next = Word::new(new_letters, ty).expect("relations stay in the alphabet");
            result.push((
                RewriteStep {
                    position: pos,
                    before: window,
                    after,
                    rule,
                },
                next,
            ));
        }
    }
    result
}

/// The plactic class of `w`: the closure of `{w}` under [`rewrites`].
///
/// The relations preserve length, and the class of a word is finite, with
/// as many elements as there are standard tableaux of its insertion shape.
/// Exceeding `budget` therefore signals a property violation, not a large
/// input.
pub fn plactic_class(w: &Word, budget: usize) -> Result<BTreeSet<Word>> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for (_, next) in rewrites(&cur) {
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded {
                        what: "plactic_class",
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Plactic congruence, by membership in the closure.
pub fn congruent(w1: &Word, w2: &Word) -> Result<bool> {
    if w1.ty() != w2.ty() {
        return Err(Error::TypeMismatch);
    }
    if w1.len() != w2.len() {
        return Ok(false);
    }
    if w1 == w2 {
        return Ok(true);
    }
    // classes at desk scale are small; the budget is a tripwire
    let budget = 1_000_000;
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w1.clone());
    queue.push_back(w1.clone());
    while let Some(cur) = queue.pop_front() {
        for (_, next) in rewrites(&cur) {
            if next == *w2 {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded { what: "congruent" });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::LieType::{A, C, D};

    fn w(s: &str, ty: LieType) -> Word {
        Word::parse(s, ty).unwrap()
    }

    #[test]
    fn defining_relation_instances() {
        // (-1) 1 1 ≡ 2 (-2) 1 in type C, the pair-up relation with b = 1
        let steps = rewrites(&w("-1 1 1", C));
        assert!(steps.iter().any(|(_, word)| *word == w("2 -2 1", C)));
        // -2 -1 -1 ≡ -1 -2 -1 in type A: a = -2 < x = -1 <= b = -1
        let steps = rewrites(&w("-2 -1 -1", A));
        assert!(steps.iter().any(|(_, word)| *word == w("-1 -2 -1", A)));
        assert!(rewrites(&Word::empty(A)).is_empty());
    }

    #[test]
    fn rewrite_steps_are_consistent() {
        for ty in LieType::ALL {
            for s in ["-1 -2 -1", "-1 1 1", "-2 -1 -1 -2"] {
                let word = Word::parse(s, ty);
                let Ok(word) = word else { continue };
                for (step, next) in rewrites(&word) {
                    assert_eq!(next.len(), word.len());
                    assert_eq!(next.weight(), word.weight(), "{s} type {ty}");
                    let win = &next.letters()[step.position..step.position + 3];
                    assert_eq!(win, step.after);
                }
            }
        }
    }

    #[test]
    fn classes() {
        let class = plactic_class(&w("-1 -1", A), 100).unwrap();
        assert_eq!(class.len(), 1);
        let class = plactic_class(&w("-2 -1 -1", A), 100).unwrap();
        assert_eq!(
            class,
            [w("-2 -1 -1", A), w("-1 -2 -1", A)].into_iter().collect()
        );
        let class = plactic_class(&w("-1 1 1", C), 1000).unwrap();
        assert!(class.contains(&w("2 -2 1", C)));
    }

    #[test]
    fn congruence() {
        assert!(congruent(&w("-1 1 1", C), &w("2 -2 1", C)).unwrap());
        let word = w("-2 -1 0", crate::letters::LieType::B);
        assert!(congruent(&word, &word).unwrap());
        assert!(!congruent(&w("-1 -1", A), &w("-2 -2", A)).unwrap());
    }

    #[test]
    fn class_budget_is_loud() {
        let w = Word::parse("-2 -1 -1", LieType::A).unwrap();
        assert!(matches!(
            plactic_class(&w, 1),
            Err(crate::Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn mixed_types_are_rejected() {
        let w1 = Word::parse("-1", LieType::A).unwrap();
        let w2 = Word::parse("-1", LieType::C).unwrap();
        assert!(matches!(
            congruent(&w1, &w2),
            Err(crate::Error::TypeMismatch)
        ));
    }

    #[test]
    fn d_side_conditions_respect_incomparability() {
        // the d-mixed family fires on (1, 2, -1); guards that would compare
        // the incomparable pair stay silent
        let steps = rewrites(&w("1 2 -1", D));
        assert!(steps.iter().any(|(_, word)| *word == w("2 1 -1", D)));
        assert!(!steps.iter().any(|(_, word)| *word == w("1 1 -1", D)));
        // the b = 2 boundary of the pair relation flips to the row order
        let steps = rewrites(&w("1 2 -2", D));
        assert!(steps.iter().any(|(_, word)| *word == w("1 1 -1", D)));
        assert!(!steps.iter().any(|(_, word)| *word == w("1 -1 1", D)));
        // and its mirror keeps the column order
        let steps = rewrites(&w("-1 2 -2", D));
        assert!(steps.iter().any(|(_, word)| *word == w("-1 -1 1", D)));
    }
}
