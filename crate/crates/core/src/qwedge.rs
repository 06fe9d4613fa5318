//! Straightening of q-deformed wedge monomials onto the column basis, with
//! exact Laurent-polynomial coefficients.
//!
//! A wedge monomial is a sequence of basis letters; the target basis is
//! indexed by the structurally valid columns of the type. An adjacent pair
//! that is not a legal column adjacency is rewritten:
//!
//! * equal letters (other than two zeros in type B) annihilate,
//! * a strictly descending pair anticommutes, with a factor `-q^2` in
//!   type B and `-q` in types C and D,
//! * the pair `(i, -i)` expands into lower opposite pairs with the
//!   type-specific coefficient ladder, bottoming out at `(0, 0)` in type B
//!   and at the two orders of `(1, -1)` in type D.
//!
//! Types B, C and D only; the straightening relations do not exist for
//! type A.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::letters::{Letter, LieType, Word};
use crate::tableau::legal_column_adjacency;

/// An exact integer Laurent polynomial in one variable `q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(1, 0)
    }

    /// `c * q^e`
    pub fn term(c: i64, e: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.add_term(c, e);
        }
        out
    }

    pub fn add_term(&mut self, c: i64, e: i32) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// A finite linear combination of wedge monomials of one common length, with
/// coefficients in the Laurent ring. Keys with zero coefficient are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeExpr {
    len: usize,
    ty: LieType,
    terms: BTreeMap<Vec<Letter>, LaurentPoly>,
}

impl WedgeExpr {
    /// A single wedge monomial with coefficient 1.
    pub fn monomial(letters: Vec<Letter>, ty: LieType) -> Result<Self> {
        if ty == LieType::A {
            return Err(Error::InvalidInput(
                "straightening is defined for types B, C, D".into(),
            ));
        }
        if let Some(&l) = letters.iter().find(|l| !l.is_legal(ty)) {
            return Err(Error::IllegalLetter { letter: l, ty });
        }
        let len = letters.len();
        let mut terms = BTreeMap::new();
        terms.insert(letters, LaurentPoly::one());
        Ok(WedgeExpr { len, ty, terms })
    }

    pub fn parse(s: &str, ty: LieType) -> Result<Self> {
        let w = Word::parse(s, ty)?;
        WedgeExpr::monomial(w.letters().to_vec(), ty)
    }

    pub fn zero(len: usize, ty: LieType) -> Self {
        WedgeExpr {
            len,
            ty,
            terms: BTreeMap::new(),
        }
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[Letter]) -> LaurentPoly {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_scaled(&mut self, key: Vec<Letter>, coeff: &LaurentPoly) {
        debug_assert_eq!(key.len(), self.len);
        if coeff.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(key.clone())
            .or_insert_with(LaurentPoly::zero);
        *slot = slot.add(coeff);
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl fmt::Display for WedgeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (key, coeff) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({coeff}) * [")?;
            let mut inner_first = true;
            for l in key {
                if !inner_first {
                    f.write_str(" ")?;
                }
                write!(f, "{l}")?;
                inner_first = false;
            }
            f.write_str("]")?;
            first = false;
        }
        Ok(())
    }
}

/// The replacement of one illegal adjacent pair `(a, b)` as a linear
/// combination of pairs, or `None` when the pair is a legal column adjacency.
fn pair_rewrite(a: Letter, b: Letter, ty: LieType) -> Option<Vec<(Letter, Letter, LaurentPoly)>> {
    if legal_column_adjacency(a, b, ty) {
        return None;
    }
    // equal letters annihilate (two zeros are a legal adjacency in type B)
    if a == b {
        return Some(Vec::new());
    }
    // the opposite pair (i, -i) expands by the coefficient ladder
    if a.is_unbarred() && b.is_barred() && a.index() == b.index() {
        let i = a.index() as i32;
        let mut out = Vec::new();
        match ty {
            LieType::A => unreachable!("type A is rejected at construction"),
            LieType::B => {
                out.push((b, a, LaurentPoly::term(-1, 4)));
                // (1 - q^4) * sum_{k<i} (-1)^(i-k) q^(2(i-k)) (-k, k)
                let unit = LaurentPoly::one().add(&LaurentPoly::term(-1, 4));
                for k in 1..i {
                    let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                    let c = unit.mul(&LaurentPoly::term(sign, 2 * (i - k)));
                    out.push((Letter::barred(k as u32), Letter::unbarred(k as u32), c));
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.push((
                    Letter::zero(),
                    Letter::zero(),
                    LaurentPoly::term(sign, 2 * i - 1),
                ));
            }
            LieType::C => {
                out.push((b, a, LaurentPoly::term(-1, 2)));
                let unit = LaurentPoly::one().add(&LaurentPoly::term(-1, 2));
                for k in 1..i {
                    let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                    let c = unit.mul(&LaurentPoly::term(sign, i - k));
                    out.push((Letter::barred(k as u32), Letter::unbarred(k as u32), c));
                }
            }
            LieType::D => {
                // (1, -1) and (-1, 1) are legal adjacencies, so i >= 2 here
                out.push((b, a, LaurentPoly::term(-1, 2)));
                let unit = LaurentPoly::one().add(&LaurentPoly::term(-1, 2));
                for k in 2..i {
                    let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                    let c = unit.mul(&LaurentPoly::term(sign, i - k));
                    out.push((Letter::barred(k as u32), Letter::unbarred(k as u32), c));
                }
                // (-q)^(i-1) * ((1, -1) + (-1, 1))
                let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
                let c = LaurentPoly::term(sign, i - 1);
                out.push((Letter::unbarred(1), Letter::barred(1), c.clone()));
                out.push((Letter::barred(1), Letter::unbarred(1), c));
            }
        }
        return Some(out);
    }
    // strictly descending pair anticommutes
    let factor = match ty {
        LieType::B => LaurentPoly::term(-1, 2),
        _ => LaurentPoly::term(-1, 1),
    };
    Some(vec![(b, a, factor)])
}

/// Which illegal pair to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Straightens every monomial onto the column basis: the fixed point where
/// each surviving key is the cell sequence of a structurally valid column.
/// Termination is enforced by a step budget and failure is loud.
pub fn straighten(e: &WedgeExpr) -> Result<WedgeExpr> {
    straighten_with(e, Strategy::LeftmostFirst, 1_000_000)
}

pub fn straighten_with(e: &WedgeExpr, strategy: Strategy, budget: usize) -> Result<WedgeExpr> {
    let ty = e.ty();
    let mut done = WedgeExpr::zero(e.len(), ty);
    let mut work: Vec<(Vec<Letter>, LaurentPoly)> =
        e.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    let mut steps = 0usize;
    while let Some((key, coeff)) = work.pop() {
        if coeff.is_zero() {
            continue;
        }
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded { what: "straighten" });
        }
        let violation = {
            let positions = 0..key.len().saturating_sub(1);
            let mut found = None;
            let scan: Box<dyn Iterator<Item = usize>> = match strategy {
                Strategy::LeftmostFirst => Box::new(positions),
                Strategy::RightmostFirst => Box::new(positions.rev()),
            };
            for k in scan {
                if !legal_column_adjacency(key[k], key[k + 1], ty) {
                    found = Some(k);
                    break;
                }
            }
            found
        };
        match violation {
            None => done.add_scaled(key, &coeff),
            Some(pos) => {
                let combo = pair_rewrite(key[pos], key[pos + 1], ty)
                    .expect("position was found as a violation");
                for (a, b, c) in combo {
                    let mut next = key.clone();
                    next[pos] = a;
                    next[pos + 1] = b;
                    work.push((next, coeff.mul(&c)));
                }
            }
        }
    }
    Ok(done)
}

/// Equality of wedge expressions modulo the straightening relations.
pub fn wedge_equal(e1: &WedgeExpr, e2: &WedgeExpr) -> Result<bool> {
    if e1.ty() != e2.ty() || e1.len() != e2.len() {
        return Ok(false);
    }
    Ok(straighten(e1)? == straighten(e2)?)
}
