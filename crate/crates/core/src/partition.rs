//! Integer partitions, strips and standard-tableau counting.

use std::fmt;

use crate::error::{Error, Result};

/// An integer partition in canonical decreasing form: a weakly decreasing
/// sequence of strictly positive parts. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts not decreasing: {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("zero part in partition".into()));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn from_slice(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parses a whitespace/comma separated list of parts, e.g. `"2 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad partition part '{tok}'")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams, row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|r| inner.part(r) <= self.part(r))
    }

    /// Partitions obtained by adding a single box.
    pub fn with_box_added(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            if r == 0 || self.part(r) < self.part(r - 1) {
                let mut parts = self.parts.clone();
                if r == self.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by removing a single (corner) box.
    pub fn with_box_removed(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..self.len() {
            if r + 1 == self.len() || self.parts[r] > self.parts[r + 1] {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                if parts[r] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// All partitions of `n`.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            let mut p = remaining.min(max_part);
            while p >= 1 {
                acc.push(p);
                rec(remaining - p, p, acc, out);
                acc.pop();
                p -= 1;
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Classification of the skew shape `outer / inner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    /// No two added boxes in the same column.
    Horizontal,
    /// No two added boxes in the same row.
    Vertical,
    /// Both at once (at most one box per row and per column).
    Both,
    Neither,
}

/// Classifies `outer / inner` as a horizontal strip, a vertical strip, both
/// or neither. Errors when the shapes are not nested.
pub fn strips(inner: &Partition, outer: &Partition) -> Result<StripKind> {
    if !outer.contains(inner) {
        return Err(Error::InvalidInput(format!(
            "{inner} is not contained in {outer}"
        )));
    }
    // horizontal: in every column at most one added box, i.e. each row of the
    // inner shape still covers the next row of the outer one
    let horizontal = (0..outer.len()).all(|r| r == 0 || outer.part(r) <= inner.part(r - 1));
    // vertical: at most one added box per row
    let vertical = (0..outer.len()).all(|r| outer.part(r) <= inner.part(r) + 1);
    Ok(match (horizontal, vertical) {
        (true, true) => StripKind::Both,
        (true, false) => StripKind::Horizontal,
        (false, true) => StripKind::Vertical,
        (false, false) => StripKind::Neither,
    })
}

impl StripKind {
    pub fn is_horizontal(self) -> bool {
        matches!(self, StripKind::Horizontal | StripKind::Both)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, StripKind::Vertical | StripKind::Both)
    }
}

/// Number of standard Young tableaux of the given shape, by recursive
/// corner removal with memoization.
pub fn count_syt(shape: &Partition) -> u64 {
    fn rec(shape: &Partition, memo: &mut std::collections::HashMap<Partition, u64>) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let v = shape.with_box_removed().iter().map(|s| rec(s, memo)).sum();
        memo.insert(shape.clone(), v);
        v
    }
    rec(shape, &mut std::collections::HashMap::new())
}

/// Hook-length formula, used as an independent cross-check of [`count_syt`].
pub fn count_syt_hook(shape: &Partition) -> u64 {
    let n = shape.size();
    let conj = shape.conjugate();
    let mut numerator = 1u128;
    for k in 1..=n {
        numerator *= k as u128;
    }
    let mut denom = 1u128;
    for r in 0..shape.len() {
        for c in 0..shape.part(r) as usize {
            let hook = (shape.part(r) as usize - c) + (conj.part(c) as usize - r) - 1;
            denom *= hook as u128;
        }
    }
    (numerator / denom) as u64
}
