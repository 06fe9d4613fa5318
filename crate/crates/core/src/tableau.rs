//! Columns, Kashiwara-Nakashima tableaux and the crystal membership oracles.
//!
//! A filling of a Young diagram is a tableau exactly when its reading word
//! lies in the connected component of the canonical highest-weight filling.
//! Validity, column admissibility and row recognition are all decided by that
//! single oracle: raise the reading at a stabilized rank and compare the
//! endpoint with the canonical highest reading. This replaces the duplication
//! (splitting) algorithm for columns entirely.

use std::fmt;

use crate::crystal::stabilize;
use crate::error::{Error, Result};
use crate::letters::{lt, Letter, LieType, Word};
use crate::partition::Partition;

/// A column-shaped filling, cells listed top to bottom.
///
/// Structural validity follows the per-type block description: barred letters
/// strictly increase, then (type B) any run of zeros, then unbarred letters
/// strictly increase. In type D the letters 1 and -1 form a middle block that
/// alternates, with different letters in adjacent boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Column {
    cells: Vec<Letter>,
    ty: LieType,
}

impl Column {
    pub fn new(cells: Vec<Letter>, ty: LieType) -> Result<Self> {
        if let Some(&l) = cells.iter().find(|l| !l.is_legal(ty)) {
            return Err(Error::IllegalLetter { letter: l, ty });
        }
        Ok(Column { cells, ty })
    }

    pub fn parse(s: &str, ty: LieType) -> Result<Self> {
        let w = Word::parse(s, ty)?;
        Column::new(w.letters().to_vec(), ty)
    }

    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    /// Top-to-bottom reading.
    pub fn reading(&self) -> Word {
        Word::new(self.cells.clone(), self.ty).expect("cells already checked")
    }

    /// Structural column condition (the block description above).
    pub fn is_column(&self) -> bool {
        self.cells
            .windows(2)
            .all(|w| legal_column_adjacency(w[0], w[1], self.ty))
    }

    /// True when the reading lies in the rank-`n` crystal of the column
    /// shape: the crystal-membership form of `n`-admissibility.
    pub fn is_admissible(&self, n: usize) -> Result<bool> {
        let h = self.height();
        if let Some(&l) = self.cells.iter().find(|l| l.index() as usize > n) {
            return Err(Error::RankTooSmall {
                rank: n,
                needed: l.index() as usize,
            });
        }
        if h > n {
            return Ok(false);
        }
        if h == 0 {
            return Ok(true);
        }
        let shape = Partition::from_unsorted(vec![1; h]);
        let target = highest_tableau(n, &shape, self.ty)?.reading();
        let (endpoint, _) = self.reading().raise_to_highest(n)?;
        Ok(endpoint == target)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reading())
    }
}

/// Is `top` allowed directly above `bottom` inside one column?
pub(crate) fn legal_column_adjacency(top: Letter, bottom: Letter, ty: LieType) -> bool {
    match ty {
        LieType::A | LieType::C => lt(top, bottom, ty),
        LieType::B => lt(top, bottom, ty) || (top.is_zero() && bottom.is_zero()),
        LieType::D => {
            lt(top, bottom, ty) || (top.index() == 1 && bottom.index() == 1 && top != bottom)
        }
    }
}

/// A filling of a Young diagram by letters, rows top to bottom.
///
/// The struct does not promise tableau-hood: build one freely, then ask
/// [`Tableau::is_tableau`]. Reading and shape are always available.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
    ty: LieType,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Letter>>, ty: LieType) -> Result<Self> {
        for row in &rows {
            if let Some(&l) = row.iter().find(|l| !l.is_legal(ty)) {
                return Err(Error::IllegalLetter { letter: l, ty });
            }
        }
        let t = Tableau { rows, ty };
        t.shape()?;
        Ok(t)
    }

    pub fn empty(ty: LieType) -> Self {
        Tableau {
            rows: Vec::new(),
            ty,
        }
    }

    pub fn from_column(c: &Column) -> Self {
        Tableau {
            rows: c.cells().iter().map(|&l| vec![l]).collect(),
            ty: c.ty(),
        }
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    pub fn shape(&self) -> Result<Partition> {
        let parts: Vec<u32> = self.rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(parts)
            .map_err(|_| Error::InvalidInput("row lengths do not form a partition".into()))
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// The `c`-th column as a [`Column`], top to bottom.
    pub fn column(&self, c: usize) -> Column {
        let cells = self.rows.iter().filter_map(|r| r.get(c).copied()).collect();
        Column { cells, ty: self.ty }
    }

    pub fn columns(&self) -> impl Iterator<Item = Column> + '_ {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width).map(|c| self.column(c))
    }

    /// The column reading: columns from right to left, each read top to
    /// bottom. On a single row this is right-to-left (weakly decreasing), on
    /// a single column top-to-bottom.
    pub fn reading(&self) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        let width = self.rows.first().map_or(0, |r| r.len());
        for c in (0..width).rev() {
            for row in &self.rows {
                if let Some(&l) = row.get(c) {
                    letters.push(l);
                }
            }
        }
        Word::new(letters, self.ty).expect("letters already checked")
    }

    /// Rebuilds the filling of `shape` whose column reading is `w`.
    pub fn from_reading(w: &Word, shape: &Partition) -> Result<Self> {
        if w.len() as u64 != shape.size() {
            return Err(Error::ShapeMismatch);
        }
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<Letter>> = shape
            .parts()
            .iter()
            .map(|&p| vec![Letter::new(0); p as usize])
            .collect();
        let mut rest = w.letters();
        for c in (0..conj.len()).rev() {
            let height = conj.part(c) as usize;
            let (chunk, tail) = rest.split_at(height);
            for (r, &l) in chunk.iter().enumerate() {
                rows[r][c] = l;
            }
            rest = tail;
        }
        Ok(Tableau { rows, ty: w.ty() })
    }

    /// The crystal-membership oracle: true exactly when the reading raises to
    /// the reading of the canonical highest filling of the same shape.
    pub fn is_tableau(&self) -> Result<bool> {
        let Ok(shape) = self.shape() else {
            return Ok(false);
        };
        if shape.is_empty() {
            return Ok(true);
        }
        if !self.columns().all(|c| c.is_column()) {
            return Ok(false);
        }
        let reading = self.reading();
        let Ok(st) = stabilize(&reading) else {
            return Ok(false);
        };
        if st.shape != shape {
            return Ok(false);
        }
        let target = highest_tableau(st.rank, &shape, self.ty)?.reading();
        Ok(st.endpoint == target)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for l in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{l}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// The canonical highest-weight filling of `shape` at rank `n`: row `k`
/// (1-based, rows in decreasing-length order) contains only the barred
/// letter of index `n - k + 1`. Barred letters exist in every type.
pub fn highest_tableau(n: usize, shape: &Partition, ty: LieType) -> Result<Tableau> {
    if shape.len() > n {
        return Err(Error::RankTooSmall {
            rank: n,
            needed: shape.len(),
        });
    }
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &p)| vec![Letter::barred((n - k) as u32); p as usize])
        .collect();
    Ok(Tableau { rows, ty })
}

/// Row recognition: `w` is the reading of a length-`|w|` row vertex exactly
/// when it raises to the all-barred highest row reading. Decided by the
/// oracle, which settles in particular which type-D mixtures of 1 and -1
/// are rows.
pub fn is_row(w: &Word, ty: LieType) -> Result<bool> {
    if w.ty() != ty {
        return Err(Error::TypeMismatch);
    }
    if w.is_empty() {
        return Ok(true);
    }
    let Ok(st) = stabilize(w) else {
        return Ok(false);
    };
    let shape = Partition::from_unsorted(vec![w.len() as u32]);
    if st.shape != shape {
        return Ok(false);
    }
    let target = highest_tableau(st.rank, &shape, ty)?.reading();
    Ok(st.endpoint == target)
}
