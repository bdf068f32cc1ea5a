//! Canonical partition diagrams and the family membership predicates.
//!
//! A diagram of type `k -> l` is a set partition of `k` bottom vertices
//! (labeled `1..k`) and `l` top vertices (labeled `1'..l'`). Two diagrams are
//! equal exactly when they induce the same set partition, so construction
//! always canonicalizes: vertices sorted within a block (bottom before top,
//! then by index), blocks sorted by their minimal vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Which row of a diagram a vertex lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Row {
    Bottom,
    Top,
}

/// A labeled vertex: 1-based position within the bottom or top row.
///
/// The derived order is the canonical one: all bottom vertices before all top
/// vertices, then by index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    pub row: Row,
    pub index: usize,
}

impl Vertex {
    pub fn bottom(index: usize) -> Self {
        Vertex { row: Row::Bottom, index }
    }

    pub fn top(index: usize) -> Self {
        Vertex { row: Row::Top, index }
    }

    pub fn is_bottom(&self) -> bool {
        self.row == Row::Bottom
    }

    pub fn is_top(&self) -> bool {
        self.row == Row::Top
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Bottom => write!(f, "{}", self.index),
            Row::Top => write!(f, "{}'", self.index),
        }
    }
}

/// The diagram families, each a predicate cutting out a subcategory.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Partition,
    PlanarPartition,
    Brauer,
    TemperleyLieb,
    RookBrauer,
    Motzkin,
    Rook,
    PlanarRook,
    Permutation,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Partition,
        Family::PlanarPartition,
        Family::Brauer,
        Family::TemperleyLieb,
        Family::RookBrauer,
        Family::Motzkin,
        Family::Rook,
        Family::PlanarRook,
        Family::Permutation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Partition => "partition",
            Family::PlanarPartition => "planar-partition",
            Family::Brauer => "brauer",
            Family::TemperleyLieb => "temperley-lieb",
            Family::RookBrauer => "rook-brauer",
            Family::Motzkin => "motzkin",
            Family::Rook => "rook",
            Family::PlanarRook => "planar-rook",
            Family::Permutation => "permutation",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A partition diagram in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagram {
    bottom: usize,
    top: usize,
    blocks: Vec<Vec<Vertex>>,
}

impl Diagram {
    /// Builds the canonical diagram on `bottom + top` vertices from an
    /// explicit list of blocks. The blocks must tile the whole vertex set:
    /// unlisted vertices are an error, not implied singletons.
    pub fn new(bottom: usize, top: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut seen = vec![false; bottom + top];
        let slot = |v: &Vertex| -> Result<usize> {
            let ok = v.index >= 1
                && match v.row {
                    Row::Bottom => v.index <= bottom,
                    Row::Top => v.index <= top,
                };
            if !ok {
                return Err(Error::OutOfRange {
                    vertex: v.to_string(),
                    bottom,
                    top,
                });
            }
            Ok(match v.row {
                Row::Bottom => v.index - 1,
                Row::Top => bottom + v.index - 1,
            })
        };
        let mut canon: Vec<Vec<Vertex>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            let mut b = block;
            for v in &b {
                let s = slot(v)?;
                if seen[s] {
                    return Err(Error::NotAPartition(format!("vertex {v} repeated")));
                }
                seen[s] = true;
            }
            b.sort_unstable();
            canon.push(b);
        }
        if let Some(s) = seen.iter().position(|covered| !covered) {
            let v = if s < bottom {
                Vertex::bottom(s + 1)
            } else {
                Vertex::top(s - bottom + 1)
            };
            return Err(Error::NotAPartition(format!("vertex {v} missing")));
        }
        canon.sort_unstable();
        Ok(Diagram {
            bottom,
            top,
            blocks: canon,
        })
    }

    /// The diagram with all `bottom + top` vertices isolated.
    pub fn discrete(bottom: usize, top: usize) -> Self {
        let mut blocks: Vec<Vec<Vertex>> =
            (1..=bottom).map(|i| vec![Vertex::bottom(i)]).collect();
        blocks.extend((1..=top).map(|i| vec![Vertex::top(i)]));
        Diagram { bottom, top, blocks }
    }

    /// The empty diagram, the unique one of type `0 -> 0`.
    pub fn empty() -> Self {
        Diagram {
            bottom: 0,
            top: 0,
            blocks: Vec::new(),
        }
    }

    pub(crate) fn from_canonical_blocks(
        bottom: usize,
        top: usize,
        mut blocks: Vec<Vec<Vertex>>,
    ) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        Diagram { bottom, top, blocks }
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    /// The block containing `v`, if `v` is in range.
    pub fn block_of(&self, v: Vertex) -> Option<&[Vertex]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&v))
            .map(|b| b.as_slice())
    }

    pub fn is_singleton(&self, v: Vertex) -> bool {
        self.block_of(v).map(|b| b.len() == 1).unwrap_or(false)
    }

    /// Position of a vertex in the boundary traversal order: bottom row left
    /// to right, then top row right to left.
    fn boundary_position(&self, v: &Vertex) -> usize {
        match v.row {
            Row::Bottom => v.index - 1,
            Row::Top => self.bottom + self.top - v.index,
        }
    }

    /// True when the diagram can be drawn inside its bounding rectangle
    /// without edge crossings, i.e. when the partition is non-crossing with
    /// respect to the boundary traversal order.
    pub fn is_planar(&self) -> bool {
        let n = self.bottom + self.top;
        if n == 0 {
            return true;
        }
        let mut block_at = vec![usize::MAX; n];
        let mut first = vec![usize::MAX; self.blocks.len()];
        let mut last = vec![0usize; self.blocks.len()];
        for (i, block) in self.blocks.iter().enumerate() {
            first[i] = usize::MAX;
            for v in block {
                let p = self.boundary_position(v);
                block_at[p] = i;
                first[i] = first[i].min(p);
                last[i] = last[i].max(p);
            }
        }
        // A partition is non-crossing iff a scan of the boundary order only
        // ever revisits the block currently on top of the open-block stack.
        let mut stack: Vec<usize> = Vec::new();
        for (p, &b) in block_at.iter().enumerate() {
            if first[b] == p {
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return false;
            }
            if last[b] == p {
                stack.pop();
            }
        }
        true
    }

    fn all_blocks_at_most(&self, n: usize) -> bool {
        self.blocks.iter().all(|b| b.len() <= n)
    }

    fn all_blocks_exactly(&self, n: usize) -> bool {
        self.blocks.iter().all(|b| b.len() == n)
    }

    /// No block joins two vertices of the same row.
    fn rows_distinct_within_blocks(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.len() < 2 || (b.len() == 2 && b[0].row != b[1].row))
    }

    /// Membership test for the given family predicate.
    pub fn is_family(&self, family: Family) -> bool {
        match family {
            Family::Partition => true,
            Family::PlanarPartition => self.is_planar(),
            Family::Brauer => self.all_blocks_exactly(2),
            Family::TemperleyLieb => self.all_blocks_exactly(2) && self.is_planar(),
            Family::RookBrauer => self.all_blocks_at_most(2),
            Family::Motzkin => self.all_blocks_at_most(2) && self.is_planar(),
            Family::Rook => self.all_blocks_at_most(2) && self.rows_distinct_within_blocks(),
            Family::PlanarRook => self.is_family(Family::Rook) && self.is_planar(),
            Family::Permutation => {
                self.bottom == self.top
                    && self.all_blocks_exactly(2)
                    && self.rows_distinct_within_blocks()
            }
        }
    }

    /// Bottom vertices that form singleton blocks, ascending.
    pub fn isolated_bottom(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .blocks
            .iter()
            .filter(|b| b.len() == 1 && b[0].is_bottom())
            .map(|b| b[0].index)
            .collect();
        v.sort_unstable();
        v
    }

    /// Top vertices that form singleton blocks, ascending.
    pub fn isolated_top(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .blocks
            .iter()
            .filter(|b| b.len() == 1 && b[0].is_top())
            .map(|b| b[0].index)
            .collect();
        v.sort_unstable();
        v
    }
}
