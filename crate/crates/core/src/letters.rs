//! Alphabets, letters, words and weights for the four infinite types.
//!
//! Each type carries an infinite ordered alphabet:
//!
//! ```text
//! A:  ... < -2 < -1
//! B:  ... < -2 < -1 < 0 < 1 < 2 < ...
//! C:  ... < -2 < -1 < 1 < 2 < ...
//! D:  ... < -2 < {1, -1} < 2 < ...      (1 and -1 are not comparable)
//! ```
//!
//! A barred letter with index `i` is written `-i`, an unbarred one `i`; the
//! letter `0` exists only in type B. This signed-integer syntax is used in
//! all text input and output of the crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The four infinite root systems everything in this crate is parameterized by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    /// Smallest color of the type: 1 for A, 0 otherwise.
    pub fn min_color(self) -> Color {
        match self {
            LieType::A => 1,
            _ => 0,
        }
    }

    /// The colors `i` with `min_color <= i < n`, ascending.
    pub fn colors_below(self, n: usize) -> impl Iterator<Item = Color> {
        (self.min_color() as usize..n).map(|i| i as Color)
    }

    pub fn letter(self, value: i32) -> Result<Letter> {
        let l = Letter::new(value);
        if l.is_legal(self) {
            Ok(l)
        } else {
            Err(Error::IllegalLetter {
                letter: l,
                ty: self,
            })
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "a",
            LieType::B => "b",
            LieType::C => "c",
            LieType::D => "d",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(LieType::A),
            "b" => Ok(LieType::B),
            "c" => Ok(LieType::C),
            "d" => Ok(LieType::D),
            _ => Err(Error::InvalidInput(format!(
                "unknown type '{s}', expected a|b|c|d"
            ))),
        }
    }
}

/// One letter of an alphabet, stored as a signed integer: `-i` is the barred
/// letter with index `i`, `i` the unbarred one, `0` the type-B zero letter.
///
/// The derived `Ord` is the storage order (plain integer order). It agrees
/// with the alphabet order of types A, B and C; for type D use
/// [`compare_letters`], which knows that `1` and `-1` are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i32) -> Self {
        Letter(value)
    }

    pub fn barred(index: u32) -> Self {
        Letter(-(index as i32))
    }

    pub fn unbarred(index: u32) -> Self {
        Letter(index as i32)
    }

    pub fn zero() -> Self {
        Letter(0)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn is_unbarred(self) -> bool {
        self.0 > 0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Index of the letter; 0 for the zero letter.
    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// The opposite letter `i <-> -i`; the zero letter is its own opposite.
    pub fn bar(self) -> Self {
        Letter(-self.0)
    }

    pub fn is_legal(self, ty: LieType) -> bool {
        match ty {
            LieType::A => self.0 < 0,
            LieType::B => true,
            LieType::C | LieType::D => self.0 != 0,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<i32>()
            .map(Letter)
            .map_err(|_| Error::InvalidInput(format!("bad letter '{s}'")))
    }
}

/// Colors label the crystal operators: `I = {1, 2, ...}` for type A and
/// `I = {0, 1, 2, ...}` for types B, C, D.
pub type Color = u32;

/// Compares two letters in the alphabet order of the given type.
///
/// Returns `None` exactly for the incomparable pair `{1, -1}` of type D.
pub fn compare_letters(a: Letter, b: Letter, ty: LieType) -> Result<Option<std::cmp::Ordering>> {
    for l in [a, b] {
        if !l.is_legal(ty) {
            return Err(Error::IllegalLetter { letter: l, ty });
        }
    }
    if ty == LieType::D && a.index() == 1 && b.index() == 1 && a != b {
        return Ok(None);
    }
    Ok(Some(a.0.cmp(&b.0)))
}

/// `a < b` in the alphabet order; false when incomparable.
pub(crate) fn lt(a: Letter, b: Letter, ty: LieType) -> bool {
    if ty == LieType::D && a.index() == 1 && b.index() == 1 {
        return false;
    }
    a.0 < b.0
}

/// `a <= b` in the alphabet order; false when incomparable.
pub(crate) fn le(a: Letter, b: Letter, ty: LieType) -> bool {
    a == b || lt(a, b, ty)
}

/// A finite word over the alphabet of one type. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    ty: LieType,
}

impl Word {
    pub fn new(letters: Vec<Letter>, ty: LieType) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|l| !l.is_legal(ty)) {
            return Err(Error::IllegalLetter { letter: l, ty });
        }
        Ok(Word { letters, ty })
    }

    pub fn empty(ty: LieType) -> Self {
        Word {
            letters: Vec::new(),
            ty,
        }
    }

    /// Parses a whitespace- or comma-separated word, e.g. `"-2 1 0"`.
    pub fn parse(s: &str, ty: LieType) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            letters.push(tok.parse::<Letter>()?);
        }
        Word::new(letters, ty)
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter index occurring in the word; 0 for the empty word.
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            letters,
            ty: self.ty,
        })
    }

    pub(crate) fn letters_mut(&mut self) -> &mut [Letter] {
        &mut self.letters
    }

    /// The letterwise index shift: `i -> i+1` and `-i -> -(i+1)`.
    ///
    /// Undefined on the zero letter.
    pub fn theta(&self) -> Result<Word> {
        let mut letters = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if l.is_zero() {
                return Err(Error::ZeroLetter);
            }
            letters.push(Letter(l.0 + l.0.signum()));
        }
        Ok(Word {
            letters,
            ty: self.ty,
        })
    }

    /// The weight of the word: coordinate `i` counts the barred letters `-i`
    /// minus the unbarred letters `i`. Zero letters contribute nothing.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for &l in &self.letters {
            if l.is_barred() {
                w.add_to(l.index(), 1);
            } else if l.is_unbarred() {
                w.add_to(l.index(), -1);
            }
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// A finitely supported integer vector in the standard basis: the weight
/// lattice elements that actually occur for words and tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: std::collections::BTreeMap<u32, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn coord(&self, i: u32) -> i64 {
        self.coords.get(&i).copied().unwrap_or(0)
    }

    pub fn add_to(&mut self, i: u32, delta: i64) {
        let e = self.coords.entry(i).or_insert(0);
        *e += delta;
        if *e == 0 {
            self.coords.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Sum of all coordinates.
    pub fn total(&self) -> i64 {
        self.coords.values().sum()
    }

    /// Largest index with a nonzero coordinate; 0 if none.
    pub fn max_support(&self) -> u32 {
        self.coords.keys().next_back().copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coords.iter().map(|(&i, &c)| (i, c))
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_to(i, c);
        }
        out
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_to(i, -c);
        }
        out
    }
}

impl FromIterator<(u32, i64)> for Weight {
    fn from_iter<T: IntoIterator<Item = (u32, i64)>>(iter: T) -> Self {
        let mut w = Weight::zero();
        for (i, c) in iter {
            w.add_to(i, c);
        }
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in &self.coords {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}*e{i}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn l(v: i32) -> Letter {
        Letter::new(v)
    }

    #[test]
    fn alphabet_legality() {
        assert!(l(-2).is_legal(LieType::A));
        assert!(!l(1).is_legal(LieType::A));
        assert!(!l(0).is_legal(LieType::A));
        assert!(l(0).is_legal(LieType::B));
        assert!(!l(0).is_legal(LieType::C));
        assert!(!l(0).is_legal(LieType::D));
    }

    #[test]
    fn compare_chains() {
        // ... < -2 < -1 < 1 < 2 < ... in type C
        assert_eq!(
            compare_letters(l(-2), l(-1), LieType::C).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare_letters(l(-1), l(1), LieType::C).unwrap(),
            Some(Ordering::Less)
        );
        // 1 and -1 are not comparable in type D
        assert_eq!(compare_letters(l(1), l(-1), LieType::D).unwrap(), None);
        assert_eq!(compare_letters(l(-1), l(1), LieType::D).unwrap(), None);
        assert_eq!(
            compare_letters(l(1), l(1), LieType::D).unwrap(),
            Some(Ordering::Equal)
        );
        // -k < {1,-1} < m for k,m >= 2 in type D
        assert_eq!(
            compare_letters(l(-2), l(1), LieType::D).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare_letters(l(-2), l(-1), LieType::D).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare_letters(l(1), l(2), LieType::D).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare_letters(l(-1), l(2), LieType::D).unwrap(),
            Some(Ordering::Less)
        );
        // all barred < 0 < all unbarred in type B
        assert_eq!(
            compare_letters(l(-1), l(0), LieType::B).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare_letters(l(0), l(1), LieType::B).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare_letters(l(0), l(0), LieType::B).unwrap(),
            Some(Ordering::Equal)
        );
        assert!(compare_letters(l(0), l(1), LieType::C).is_err());
    }

    #[test]
    fn theta_shifts_indices() {
        let w = Word::parse("-1 2", LieType::C).unwrap();
        assert_eq!(w.theta().unwrap(), Word::parse("-2 3", LieType::C).unwrap());
        let empty = Word::empty(LieType::B);
        assert_eq!(empty.theta().unwrap(), empty);
        let w = Word::parse("-3", LieType::A).unwrap();
        assert_eq!(w.theta().unwrap(), Word::parse("-4", LieType::A).unwrap());
        let z = Word::parse("0", LieType::B).unwrap();
        assert_eq!(z.theta(), Err(Error::ZeroLetter));
    }

    #[test]
    fn weight_counts() {
        let w = Word::parse("-2 1", LieType::C).unwrap();
        let expect: Weight = [(2u32, 1i64), (1u32, -1i64)].into_iter().collect();
        assert_eq!(w.weight(), expect);
        // zero letters contribute nothing
        assert!(Word::parse("0 0", LieType::B).unwrap().weight().is_zero());
        assert!(Word::empty(LieType::A).weight().is_zero());
    }

    #[test]
    fn word_parse_display_roundtrip() {
        let w = Word::parse("-3, 0  2", LieType::B).unwrap();
        assert_eq!(w.to_string(), "-3 0 2");
        assert_eq!(Word::parse(&w.to_string(), LieType::B).unwrap(), w);
        assert!(Word::parse("1", LieType::A).is_err());
    }
}
