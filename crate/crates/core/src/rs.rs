//! Infinite-rank Robinson-Schensted correspondences on biwords, and the two
//! commuting crystal structures they induce.
//!
//! The P-symbol of a word is computed without any insertion algorithm: raise
//! the word to the highest-weight vertex of its component at a stabilized
//! rank, recording the colors used, then replay the reversed path from the
//! canonical highest filling of the component shape. Words occupying the same
//! position in isomorphic components share their P-symbol, and the vertices
//! of the canonical component are precisely the readings of tableaux.
//!
//! The Q-symbol records the shapes of the P-symbols of the growing biword
//! prefixes; consecutive shapes differ by a horizontal strip (a vertical one
//! in the antisymmetric variant on column sequences).

use std::fmt;

use crate::crystal::{stabilize, stabilize_at_rank, Stabilized};
use crate::error::{Error, Result};
use crate::letters::{Color, Letter, LieType, Word};
use crate::partition::{strips, Partition};
use crate::tableau::{highest_tableau, is_row, Column, Tableau};

/// A row-segmented crystal vertex: rows `R_1, ..., R_k`, each a nonempty row
/// vertex stored as its reading (weakly decreasing word), with a strictly
/// increasing `y`-label over each segment. A biword in canonical form is
/// exactly such a family; labels default to `1..k` but the Y-side crystal
/// moves them around, so they are carried explicitly. Zero-length rows are
/// never represented: a skipped label plays that role.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biword {
    rows: Vec<Vec<Letter>>,
    labels: Vec<u32>,
    ty: LieType,
}

impl Biword {
    /// Builds a biword from row readings with labels `1..k`, checking every
    /// segment against the row-crystal oracle.
    pub fn new(rows: Vec<Vec<Letter>>, ty: LieType) -> Result<Self> {
        let labels = (1..=rows.len() as u32).collect();
        Biword::with_labels(rows, labels, ty)
    }

    /// Builds a biword with explicit y-labels, which must strictly increase.
    pub fn with_labels(rows: Vec<Vec<Letter>>, labels: Vec<u32>, ty: LieType) -> Result<Self> {
        if labels.len() != rows.len() {
            return Err(Error::InvalidInput("one label per row required".into()));
        }
        if labels.first().is_some_and(|&l| l == 0) || labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "labels must be strictly increasing and >= 1".into(),
            ));
        }
        for row in &rows {
            if row.is_empty() {
                return Err(Error::InvalidInput("biword rows must be nonempty".into()));
            }
            let w = Word::new(row.clone(), ty)?;
            if !is_row(&w, ty)? {
                return Err(Error::InvalidInput(format!("segment '{w}' is not a row")));
            }
        }
        Ok(Biword { rows, labels, ty })
    }

    pub fn empty(ty: LieType) -> Self {
        Biword {
            rows: Vec::new(),
            labels: Vec::new(),
            ty,
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    /// The row lengths `tau_1, ..., tau_k`.
    pub fn profile(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Concatenation of the row readings: the underlying word `w_x`.
    pub fn word(&self) -> Word {
        let letters = self.rows.iter().flatten().copied().collect();
        Word::new(letters, self.ty).expect("letters were checked on construction")
    }

    /// Splits a word back into labeled rows of the given lengths, re-checking
    /// each segment.
    pub fn from_word(w: &Word, profile: &[usize], labels: &[u32]) -> Result<Self> {
        if profile.iter().sum::<usize>() != w.len() {
            return Err(Error::ShapeMismatch);
        }
        let mut rows = Vec::with_capacity(profile.len());
        let mut rest = w.letters();
        for &len in profile {
            let (chunk, tail) = rest.split_at(len);
            rows.push(chunk.to_vec());
            rest = tail;
        }
        Biword::with_labels(rows, labels.to_vec(), w.ty())
    }

    /// The X-side crystal operator `f_i`, acting through the concatenated
    /// word. Segment lengths are preserved; each changed segment stays a row.
    pub fn f_op(&self, i: Color) -> Option<Biword> {
        let w = self.word().f_op(i)?;
        Some(self.resplit(w))
    }

    /// The X-side crystal operator `e_i`.
    pub fn e_op(&self, i: Color) -> Option<Biword> {
        let w = self.word().e_op(i)?;
        Some(self.resplit(w))
    }

    fn resplit(&self, w: Word) -> Biword {
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut rest = w.letters();
        for r in &self.rows {
            let (chunk, tail) = rest.split_at(r.len());
            rows.push(chunk.to_vec());
            rest = tail;
        }
        debug_assert!(rows
            .iter()
            .all(|r| { is_row(&Word::new(r.clone(), self.ty).unwrap(), self.ty).unwrap() }));
        Biword {
            rows,
            labels: self.labels.clone(),
            ty: self.ty,
        }
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let canonical = self
            .labels
            .iter()
            .enumerate()
            .all(|(k, &l)| l == k as u32 + 1);
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            if !canonical {
                write!(f, "{}: ", self.labels[k])?;
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

/// A sequence of columns: a vertex of the antisymmetric analogue of the
/// biword crystal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSeq {
    columns: Vec<Column>,
    labels: Vec<u32>,
    ty: LieType,
}

impl ColumnSeq {
    pub fn new(columns: Vec<Column>, ty: LieType) -> Result<Self> {
        let labels = (1..=columns.len() as u32).collect();
        ColumnSeq::with_labels(columns, labels, ty)
    }

    pub fn with_labels(columns: Vec<Column>, labels: Vec<u32>, ty: LieType) -> Result<Self> {
        if labels.len() != columns.len() {
            return Err(Error::InvalidInput("one label per column required".into()));
        }
        if labels.first().is_some_and(|&l| l == 0) || labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "labels must be strictly increasing and >= 1".into(),
            ));
        }
        for c in &columns {
            if c.ty() != ty {
                return Err(Error::TypeMismatch);
            }
            if c.height() == 0 {
                return Err(Error::InvalidInput("columns must be nonempty".into()));
            }
            if !c.is_column() {
                return Err(Error::InvalidInput(format!("'{c}' is not a column")));
            }
        }
        Ok(ColumnSeq {
            columns,
            labels,
            ty,
        })
    }

    pub fn empty(ty: LieType) -> Self {
        ColumnSeq {
            columns: Vec::new(),
            labels: Vec::new(),
            ty,
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn ty(&self) -> LieType {
        self.ty
    }

    pub fn profile(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.height()).collect()
    }

    /// Concatenation of the column readings.
    pub fn word(&self) -> Word {
        let letters = self
            .columns
            .iter()
            .flat_map(|c| c.cells().iter().copied())
            .collect();
        Word::new(letters, self.ty).expect("cells were checked on construction")
    }

    pub fn from_word(w: &Word, profile: &[usize], labels: &[u32]) -> Result<Self> {
        if profile.iter().sum::<usize>() != w.len() {
            return Err(Error::ShapeMismatch);
        }
        let mut columns = Vec::with_capacity(profile.len());
        let mut rest = w.letters();
        for &len in profile {
            let (chunk, tail) = rest.split_at(len);
            columns.push(Column::new(chunk.to_vec(), w.ty())?);
            rest = tail;
        }
        ColumnSeq::with_labels(columns, labels.to_vec(), w.ty())
    }
}

impl fmt::Display for ColumnSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.columns.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A semistandard tableau over the positive integers: rows weakly increase,
/// columns strictly increase. Records which strip each box arrived in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecordingTableau {
    rows: Vec<Vec<u32>>,
}

impl RecordingTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = RecordingTableau { rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidInput("not a semistandard tableau".into()));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        RecordingTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        if !shape_ok {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.rows.len()).all(|r| {
            self.rows[r]
                .iter()
                .enumerate()
                .all(|(c, &v)| self.rows[r - 1][c] < v)
        });
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&v| v >= 1)
    }

    /// Content of the tableau: how many times each entry occurs.
    pub fn content(&self) -> std::collections::BTreeMap<u32, usize> {
        let mut m = std::collections::BTreeMap::new();
        for &v in self.rows.iter().flatten() {
            *m.entry(v).or_insert(0) += 1;
        }
        m
    }

    /// Largest entry; 0 when empty.
    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Column reading over the Y alphabet: columns right to left, top to
    /// bottom, matching the reading convention for tableaux of letters.
    fn reading(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        let width = self.rows.first().map_or(0, |r| r.len());
        for c in (0..width).rev() {
            for row in &self.rows {
                if let Some(&v) = row.get(c) {
                    out.push(v);
                }
            }
        }
        out
    }

    fn from_reading(reading: &[u32], shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<u32>> = shape
            .parts()
            .iter()
            .map(|&p| vec![0u32; p as usize])
            .collect();
        let mut rest = reading;
        for c in (0..conj.len()).rev() {
            let (chunk, tail) = rest.split_at(conj.part(c) as usize);
            for (r, &v) in chunk.iter().enumerate() {
                rows[r][c] = v;
            }
            rest = tail;
        }
        RecordingTableau { rows }
    }

    /// The cells (row, col) holding entry `p`, 0-based.
    pub fn strip_cells(&self, p: u32) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == p {
                    cells.push((r, c));
                }
            }
        }
        cells
    }
}

impl fmt::Display for RecordingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// The P-symbol: the unique tableau whose reading is plactically congruent
/// to `w`, computed by position transport into the canonical component.
pub fn p_symbol(w: &Word) -> Result<Tableau> {
    let st = stabilize(w)?;
    p_symbol_from_stabilized(w, &st)
}

/// P-symbol at a forced rank, for the rank-stability suite.
pub fn p_symbol_at_rank(w: &Word, rank: usize) -> Result<Tableau> {
    let st = stabilize_at_rank(w, rank)?;
    p_symbol_from_stabilized(w, &st)
}

fn p_symbol_from_stabilized(w: &Word, st: &Stabilized) -> Result<Tableau> {
    let canonical = highest_tableau(st.rank, &st.shape, w.ty())?.reading();
    let mut path = st.path.clone();
    path.reverse();
    let transported = canonical.apply_f_path(&path)?;
    let p = Tableau::from_reading(&transported, &st.shape)?;
    debug_assert!(
        p.columns().all(|c| c.is_column()),
        "p_symbol of '{w}' is not column-valid"
    );
    Ok(p)
}

/// Shapes of the P-symbols of the prefixes `R_1 .. R_p`, `p = 1..k`.
fn prefix_shapes(b: &Biword) -> Result<Vec<Partition>> {
    let mut shapes = Vec::with_capacity(b.rows().len());
    let mut prefix: Vec<Letter> = Vec::with_capacity(b.size());
    for row in b.rows() {
        prefix.extend_from_slice(row);
        let w = Word::new(prefix.clone(), b.ty())?;
        shapes.push(stabilize(&w)?.shape);
    }
    Ok(shapes)
}

/// The recording tableau: fill the first prefix shape with 1, then each
/// shape increment with the next entry. Every increment must be a horizontal
/// strip.
pub fn q_symbol(b: &Biword) -> Result<RecordingTableau> {
    let shapes = prefix_shapes(b)?;
    build_recording(&shapes, &b.profile(), b.labels(), true)
}

fn build_recording(
    shapes: &[Partition],
    profile: &[usize],
    labels: &[u32],
    horizontal: bool,
) -> Result<RecordingTableau> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut prev = Partition::empty();
    for (idx, shape) in shapes.iter().enumerate() {
        let entry = labels[idx];
        if shape.size() != prev.size() + profile[idx] as u64 {
            return Err(Error::StripViolation {
                detail: format!(
                    "prefix {entry} shape {shape} does not grow by {}",
                    profile[idx]
                ),
            });
        }
        if !shape.contains(&prev) {
            return Err(Error::StripViolation {
                detail: format!("prefix shapes {prev} and {shape} are not nested"),
            });
        }
        let kind = strips(&prev, shape)?;
        let ok = if horizontal {
            kind.is_horizontal()
        } else {
            kind.is_vertical()
        };
        if !ok {
            return Err(Error::StripViolation {
                detail: format!(
                    "increment {prev} -> {shape} is not a {} strip",
                    if horizontal { "horizontal" } else { "vertical" }
                ),
            });
        }
        for r in 0..shape.len() {
            if r >= rows.len() {
                rows.push(Vec::new());
            }
            while rows[r].len() < shape.part(r) as usize {
                rows[r].push(entry);
            }
        }
        prev = shape.clone();
    }
    let t = RecordingTableau { rows };
    debug_assert!(!horizontal || t.is_semistandard());
    Ok(t)
}

/// The Robinson-Schensted correspondence on biwords.
pub fn rs(b: &Biword) -> Result<(Tableau, RecordingTableau)> {
    let p = p_symbol(&b.word())?;
    let q = q_symbol(b)?;
    if p.shape()? != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    Ok((p, q))
}

/// The highest-weight vertex of the biword component with recording tableau
/// `t`, at rank `n`: each box of strip `p` in diagram row `i` contributes the
/// barred letter of index `n - i + 1` to row `R_p`, sorted into reading
/// order. Both defining properties are checked on every call.
pub fn hw_for_recording(t: &RecordingTableau, n: usize, ty: LieType) -> Result<Biword> {
    if !t.is_semistandard() {
        return Err(Error::InvalidInput(
            "recording tableau is not semistandard".into(),
        ));
    }
    if t.shape().len() > n {
        return Err(Error::RankTooSmall {
            rank: n,
            needed: t.shape().len(),
        });
    }
    hw_for_recording_typed(t, n, ty)
}

pub(crate) fn hw_for_recording_typed(
    t: &RecordingTableau,
    n: usize,
    ty: LieType,
) -> Result<Biword> {
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for &p in t.content().keys() {
        let cells = t.strip_cells(p);
        // deeper diagram rows give larger barred letters; reading order is
        // weakly decreasing, so sort by descending row index
        let mut letters: Vec<Letter> = cells
            .iter()
            .map(|&(r, _)| Letter::barred((n - r) as u32))
            .collect();
        letters.sort();
        letters.reverse();
        rows.push(letters);
        labels.push(p);
    }
    let b = Biword::with_labels(rows, labels, ty)?;
    // postcondition 1: killed by every raising operator at rank n
    let word = b.word();
    if !word.is_highest(n) {
        return Err(Error::PropertyViolation(format!(
            "constructed biword '{b}' is not highest at rank {n}"
        )));
    }
    // postcondition 2: its recording tableau is t
    let q = q_symbol(&b)?;
    if q != *t {
        return Err(Error::PropertyViolation(format!(
            "constructed biword '{b}' records as\n{q}\nnot\n{t}"
        )));
    }
    Ok(b)
}

/// Inverse Robinson-Schensted: the unique biword with the given symbols.
pub fn rs_inverse(p: &Tableau, q: &RecordingTableau) -> Result<Biword> {
    if p.shape()? != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !q.is_semistandard() {
        return Err(Error::InvalidInput("Q is not semistandard".into()));
    }
    if !p.is_tableau()? {
        return Err(Error::InvalidInput("P is not a tableau".into()));
    }
    if p.size() == 0 {
        return Ok(Biword::empty(p.ty()));
    }
    let st = stabilize(&p.reading())?;
    let hw = hw_for_recording_typed(q, st.rank, p.ty())?;
    let mut path = st.path.clone();
    path.reverse();
    let transported = hw.word().apply_f_path(&path)?;
    let b = Biword::from_word(&transported, &hw.profile(), hw.labels())?;
    // postcondition: the symbols of the result are exactly (P, Q)
    let (p2, q2) = rs(&b)?;
    if p2 != *p || q2 != *q {
        return Err(Error::PropertyViolation(format!(
            "rs_inverse roundtrip failed for '{b}'"
        )));
    }
    Ok(b)
}

/// The antisymmetric correspondence on column sequences: the P-symbol of the
/// concatenated column readings, recorded on the conjugate shape. Shape
/// increments must be vertical strips.
pub fn rs_hat(b: &ColumnSeq) -> Result<(Tableau, RecordingTableau)> {
    let mut shapes = Vec::with_capacity(b.columns().len());
    let mut prefix: Vec<Letter> = Vec::with_capacity(b.word().len());
    for c in b.columns() {
        prefix.extend_from_slice(c.cells());
        let w = Word::new(prefix.clone(), b.ty())?;
        shapes.push(stabilize(&w)?.shape);
    }
    let q_on_shape = build_recording(&shapes, &b.profile(), b.labels(), false)?;
    let p = p_symbol(&b.word())?;
    // transpose the recording onto the conjugate shape: the vertical strip in
    // the shape becomes a horizontal strip there, making rows weakly increase
    let shape = p.shape()?;
    let conj = shape.conjugate();
    let mut rows: Vec<Vec<u32>> = conj
        .parts()
        .iter()
        .map(|&p| vec![0u32; p as usize])
        .collect();
    for (r, row) in q_on_shape.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            rows[c][r] = v;
        }
    }
    let q = RecordingTableau::new(rows)
        .map_err(|_| Error::PropertyViolation("conjugated recording is not semistandard".into()))?;
    Ok((p, q))
}

/// Inverse of [`rs_hat`]: `p` and `q` must have conjugate shapes.
pub fn rs_hat_inverse(p: &Tableau, q: &RecordingTableau) -> Result<ColumnSeq> {
    let shape = p.shape()?;
    if shape.conjugate() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !q.is_semistandard() {
        return Err(Error::InvalidInput("Q is not semistandard".into()));
    }
    if !p.is_tableau()? {
        return Err(Error::InvalidInput("P is not a tableau".into()));
    }
    if p.size() == 0 {
        return Ok(ColumnSeq::empty(p.ty()));
    }
    let st = stabilize(&p.reading())?;
    let n = st.rank;
    // highest vertex of the hat component: strip p of the shape (vertical,
    // read off the conjugate recording) puts letter -(n - i + 1) in column p
    // for each of its boxes in diagram row i, sorted increasing down
    let mut columns: Vec<Vec<Letter>> = Vec::new();
    let mut labels: Vec<u32> = Vec::new();
    for &entry in q.content().keys() {
        // cells of q are (row, col) on the conjugate shape; transpose back
        let cells = q.strip_cells(entry);
        let mut letters: Vec<Letter> = cells
            .iter()
            .map(|&(_, c)| Letter::barred((n - c) as u32))
            .collect();
        letters.sort();
        columns.push(letters);
        labels.push(entry);
    }
    let profile: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    let hw_word = Word::new(columns.into_iter().flatten().collect(), p.ty())?;
    if !hw_word.is_highest(n) {
        return Err(Error::PropertyViolation(format!(
            "constructed column sequence '{hw_word}' is not highest at rank {n}"
        )));
    }
    let mut path = st.path.clone();
    path.reverse();
    let transported = hw_word.apply_f_path(&path)?;
    let b = ColumnSeq::from_word(&transported, &profile, &labels)?;
    let (p2, q2) = rs_hat(&b)?;
    if p2 != *p || q2 != *q {
        return Err(Error::PropertyViolation(format!(
            "rs_hat_inverse roundtrip failed for '{b}'"
        )));
    }
    Ok(b)
}

/// The Y-side lowering operator on recording tableaux: the type-A crystal on
/// the alphabet `1 < 2 < ...` with edges `j --j--> j+1`, evaluated by the
/// signature rule on the reading. `None` encodes the zero action; a non-null
/// result is again semistandard.
pub fn y_f_op(t: &RecordingTableau, j: u32) -> Option<RecordingTableau> {
    y_op(t, j, false)
}

/// The Y-side raising operator.
pub fn y_e_op(t: &RecordingTableau, j: u32) -> Option<RecordingTableau> {
    y_op(t, j, true)
}

fn y_op(t: &RecordingTableau, j: u32, raise: bool) -> Option<RecordingTableau> {
    debug_assert!(j >= 1);
    let reading = t.reading();
    // signature over the reading: entry j is a plus, entry j+1 a minus
    let mut plus_stack: Vec<usize> = Vec::new();
    let mut last_minus: Option<usize> = None;
    for (pos, &v) in reading.iter().enumerate() {
        if v == j + 1 {
            if plus_stack.pop().is_none() {
                last_minus = Some(pos);
            }
        } else if v == j {
            plus_stack.push(pos);
        }
    }
    let pos = if raise {
        last_minus?
    } else {
        *plus_stack.first()?
    };
    let mut new_reading = reading;
    new_reading[pos] = if raise { j } else { j + 1 };
    let out = RecordingTableau::from_reading(&new_reading, &t.shape());
    debug_assert!(
        out.is_semistandard(),
        "y operator broke semistandardness on\n{t}"
    );
    Some(out)
}

/// The Y-side lowering operator transported to biwords through the
/// correspondence: recompose the unchanged P with the moved Q.
pub fn bicrystal_f_y(b: &Biword, j: u32) -> Result<Option<Biword>> {
    let (p, q) = rs(b)?;
    match y_f_op(&q, j) {
        Some(q2) => Ok(Some(rs_inverse(&p, &q2)?)),
        None => Ok(None),
    }
}

/// The Y-side raising operator on biwords.
pub fn bicrystal_e_y(b: &Biword, j: u32) -> Result<Option<Biword>> {
    let (p, q) = rs(b)?;
    match y_e_op(&q, j) {
        Some(q2) => Ok(Some(rs_inverse(&p, &q2)?)),
        None => Ok(None),
    }
}
