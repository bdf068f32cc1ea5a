//! Rook matrices: the matrix avatar of rook diagrams.
//!
//! A rook diagram `k -> l` with strands `{p_i, q_i'}` corresponds to the
//! `l x k` 0/1 matrix with a 1 at each `(q_i, p_i)`; the correspondence is a
//! bijection, reflection in a horizontal line becomes transposition, and
//! planarity becomes the pseudo-echelon condition below.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagram::{Diagram, Family, Vertex};
use crate::error::{Error, Result};

/// A 0/1 matrix with at most one 1 per row and per column.
/// Entries are stored 1-based as `(row, column)` positions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RookMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeSet<(usize, usize)>,
}

/// Order of the factors in a permutation/pseudo-echelon factorization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FactorMode {
    /// `M = S * P`: permutation on the left.
    SP,
    /// `M = P * S`: permutation on the right.
    PS,
}

impl RookMatrix {
    pub fn new(rows: usize, cols: usize, entries: BTreeSet<(usize, usize)>) -> Result<Self> {
        let mut seen_rows = BTreeSet::new();
        let mut seen_cols = BTreeSet::new();
        for &(r, c) in &entries {
            if r < 1 || r > rows || c < 1 || c > cols {
                return Err(Error::BadMatrix(format!(
                    "entry ({r},{c}) outside a {rows} x {cols} matrix"
                )));
            }
            if !seen_rows.insert(r) {
                return Err(Error::BadMatrix(format!("two entries in row {r}")));
            }
            if !seen_cols.insert(c) {
                return Err(Error::BadMatrix(format!("two entries in column {c}")));
            }
        }
        Ok(RookMatrix { rows, cols, entries })
    }

    pub fn identity(n: usize) -> Self {
        RookMatrix {
            rows: n,
            cols: n,
            entries: (1..=n).map(|i| (i, i)).collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RookMatrix {
            rows,
            cols,
            entries: BTreeSet::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entries as 1-based `(row, column)` pairs, in row order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().copied()
    }

    /// The number of 1s.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_permutation(&self) -> bool {
        self.rows == self.cols && self.entries.len() == self.rows
    }

    /// True when the entries read top to bottom also move strictly rightward,
    /// i.e. each leading entry is in a column to the right of all leading
    /// entries above it. The zero matrix satisfies this vacuously.
    pub fn is_pseudo_echelon(&self) -> bool {
        let mut prev_col = 0;
        for &(_, c) in &self.entries {
            if c <= prev_col {
                return false;
            }
            prev_col = c;
        }
        true
    }

    pub fn transpose(&self) -> RookMatrix {
        RookMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Matrix product. The product of two rook matrices is again a rook
    /// matrix: it composes the underlying partial injections.
    pub fn mul(&self, rhs: &RookMatrix) -> Result<RookMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::BadMatrix(format!(
                "cannot multiply {} x {} by {} x {}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = BTreeSet::new();
        for &(r, m) in &self.entries {
            if let Some(&(_, c)) = rhs.entries.iter().find(|&&(rr, _)| rr == m) {
                entries.insert((r, c));
            }
        }
        Ok(RookMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    /// Factors the matrix as a product of a permutation matrix and a
    /// pseudo-echelon rook matrix, returned in the order named by `mode`.
    ///
    /// The pseudo-echelon factor keeps exactly the zero rows and columns of
    /// the original, which pins it uniquely; the permutation factor fixes
    /// every row that carries no entry.
    pub fn factor(&self, mode: FactorMode) -> (RookMatrix, RookMatrix) {
        match mode {
            FactorMode::SP => {
                let (s, p) = self.factor_sp();
                (s, p)
            }
            FactorMode::PS => {
                // Transpose, factor, transpose back: (S P)^T = P^T S^T.
                let (s, p) = self.transpose().factor_sp();
                (p.transpose(), s.transpose())
            }
        }
    }

    fn factor_sp(&self) -> (RookMatrix, RookMatrix) {
        // Entries in row order give columns (c_1, .., c_r); sorting the
        // columns gives the pseudo-echelon positions (q_i, p_i).
        let by_row: Vec<(usize, usize)> = self.entries.iter().copied().collect();
        let q: Vec<usize> = by_row.iter().map(|&(r, _)| r).collect();
        let mut p: Vec<usize> = by_row.iter().map(|&(_, c)| c).collect();
        p.sort_unstable();
        let echelon = RookMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: q.iter().zip(p.iter()).map(|(&r, &c)| (r, c)).collect(),
        };
        // Row q_i of the original equals row q_{h_i} of the echelon factor,
        // where p_{h_i} is the column of the original entry in row q_i.
        let mut perm: Vec<(usize, usize)> = Vec::with_capacity(self.rows);
        let mut moved = BTreeSet::new();
        for &(r, c) in &by_row {
            let h = p.binary_search(&c).unwrap();
            perm.push((r, q[h]));
            moved.insert(r);
        }
        for r in 1..=self.rows {
            if !moved.contains(&r) {
                perm.push((r, r));
            }
        }
        let s = RookMatrix {
            rows: self.rows,
            cols: self.rows,
            entries: perm.into_iter().collect(),
        };
        debug_assert!(echelon.is_pseudo_echelon());
        debug_assert_eq!(s.mul(&echelon).unwrap(), *self);
        (s, echelon)
    }
}

impl fmt::Display for RookMatrix {
    /// Rows of 0/1 characters separated by newlines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows {
            if r > 1 {
                writeln!(f)?;
            }
            for c in 1..=self.cols {
                let bit = if self.entries.contains(&(r, c)) { '1' } else { '0' };
                write!(f, "{bit}")?;
            }
        }
        Ok(())
    }
}

/// Converts a rook diagram `k -> l` to its `l x k` rook matrix: an entry at
/// `(q, p)` for every strand `{p, q'}`.
pub fn to_matrix(d: &Diagram) -> Result<RookMatrix> {
    if !d.is_family(Family::Rook) {
        return Err(Error::NotARookDiagram(d.to_string()));
    }
    let mut entries = BTreeSet::new();
    for block in d.blocks() {
        if block.len() == 2 {
            // Canonical block order puts the bottom vertex first.
            entries.insert((block[1].index, block[0].index));
        }
    }
    Ok(RookMatrix {
        rows: d.top(),
        cols: d.bottom(),
        entries,
    })
}

/// The inverse of [`to_matrix`]: every entry `(q, p)` becomes a strand
/// `{p, q'}` and all untouched vertices become singletons.
pub fn from_matrix(m: &RookMatrix) -> Diagram {
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut used_bottom = vec![false; m.cols];
    let mut used_top = vec![false; m.rows];
    for &(q, p) in &m.entries {
        blocks.push(vec![Vertex::bottom(p), Vertex::top(q)]);
        used_bottom[p - 1] = true;
        used_top[q - 1] = true;
    }
    for (i, used) in used_bottom.iter().enumerate() {
        if !used {
            blocks.push(vec![Vertex::bottom(i + 1)]);
        }
    }
    for (i, used) in used_top.iter().enumerate() {
        if !used {
            blocks.push(vec![Vertex::top(i + 1)]);
        }
    }
    Diagram::from_canonical_blocks(m.cols, m.rows, blocks)
}
