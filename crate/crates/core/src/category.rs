//! The strict monoidal structure on diagrams: vertical composition with its
//! power-of-t count, tensor product, the two reflections, identities, and the
//! skeleton map.

use crate::diagram::{Diagram, Row, Vertex};
use crate::error::{Error, Result};

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug)]
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            self.parent[ra] = rb;
            self.size[rb] += self.size[ra];
        } else {
            self.parent[rb] = ra;
            self.size[ra] += self.size[rb];
        }
    }
}

/// Result of stacking one diagram on top of another: the induced diagram on
/// the outer rows together with the number of components that stayed entirely
/// in the glued middle row. The composite morphism is `t^alpha * diagram`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composed {
    pub alpha: usize,
    pub diagram: Diagram,
}

/// One of the two diagram reflections.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Involution {
    /// Reflection in a horizontal line: swaps the rows, reverses composition.
    Star,
    /// Reflection in a vertical line: reverses each row, reverses tensor order.
    Sharp,
}

impl Diagram {
    /// The identity diagram on `k` strands.
    pub fn identity(k: usize) -> Diagram {
        let blocks = (1..=k)
            .map(|i| vec![Vertex::bottom(i), Vertex::top(i)])
            .collect();
        Diagram::from_canonical_blocks(k, k, blocks)
    }

    /// Stacks `self` on top of `lower` and contracts the shared middle row.
    ///
    /// Requires `self.bottom() == lower.top()`. Vertices of the outer rows
    /// end up in the same block exactly when they are connected through the
    /// stack; `alpha` counts the components swallowed by the middle row.
    pub fn compose(&self, lower: &Diagram) -> Result<Composed> {
        if self.bottom() != lower.top() {
            return Err(Error::TypeMismatch {
                expected: self.bottom(),
                found: lower.top(),
            });
        }
        let k = lower.bottom();
        let mid = lower.top();
        let l = self.top();
        // Slots: 0..k outer bottom, k..k+mid middle, k+mid.. outer top.
        let mut uf = UnionFind::new(k + mid + l);
        let lower_slot = |v: &Vertex| match v.row {
            Row::Bottom => v.index - 1,
            Row::Top => k + v.index - 1,
        };
        let upper_slot = |v: &Vertex| match v.row {
            Row::Bottom => k + v.index - 1,
            Row::Top => k + mid + v.index - 1,
        };
        for block in lower.blocks() {
            for pair in block.windows(2) {
                uf.union(lower_slot(&pair[0]), lower_slot(&pair[1]));
            }
        }
        for block in self.blocks() {
            for pair in block.windows(2) {
                uf.union(upper_slot(&pair[0]), upper_slot(&pair[1]));
            }
        }
        let mut outer_members: Vec<Vec<Vertex>> = vec![Vec::new(); k + mid + l];
        let mut middle_only: Vec<bool> = vec![false; k + mid + l];
        for slot in 0..k + mid + l {
            let root = uf.find(slot);
            if slot < k {
                outer_members[root].push(Vertex::bottom(slot + 1));
            } else if slot < k + mid {
                if outer_members[root].is_empty() {
                    middle_only[root] = true;
                }
            } else {
                outer_members[root].push(Vertex::top(slot - k - mid + 1));
            }
        }
        let mut alpha = 0;
        let mut blocks = Vec::new();
        for (root, members) in outer_members.into_iter().enumerate() {
            if !members.is_empty() {
                blocks.push(members);
            } else if middle_only[root] && uf.find(root) == root {
                alpha += 1;
            }
        }
        Ok(Composed {
            alpha,
            diagram: Diagram::from_canonical_blocks(k, l, blocks),
        })
    }

    /// Horizontal juxtaposition, `self` on the left of `right`.
    pub fn tensor(&self, right: &Diagram) -> Diagram {
        let shift = |v: &Vertex| match v.row {
            Row::Bottom => Vertex::bottom(v.index + self.bottom()),
            Row::Top => Vertex::top(v.index + self.top()),
        };
        let mut blocks: Vec<Vec<Vertex>> = self.blocks().to_vec();
        blocks.extend(
            right
                .blocks()
                .iter()
                .map(|b| b.iter().map(&shift).collect::<Vec<_>>()),
        );
        Diagram::from_canonical_blocks(
            self.bottom() + right.bottom(),
            self.top() + right.top(),
            blocks,
        )
    }

    /// Applies one of the two reflections.
    pub fn involute(&self, mode: Involution) -> Diagram {
        match mode {
            Involution::Star => {
                let blocks = self
                    .blocks()
                    .iter()
                    .map(|block| {
                        block
                            .iter()
                            .map(|v| match v.row {
                                Row::Bottom => Vertex::top(v.index),
                                Row::Top => Vertex::bottom(v.index),
                            })
                            .collect()
                    })
                    .collect();
                Diagram::from_canonical_blocks(self.top(), self.bottom(), blocks)
            }
            Involution::Sharp => {
                let blocks = self
                    .blocks()
                    .iter()
                    .map(|block| {
                        block
                            .iter()
                            .map(|v| match v.row {
                                Row::Bottom => Vertex::bottom(self.bottom() + 1 - v.index),
                                Row::Top => Vertex::top(self.top() + 1 - v.index),
                            })
                            .collect()
                    })
                    .collect();
                Diagram::from_canonical_blocks(self.bottom(), self.top(), blocks)
            }
        }
    }

    /// Reflection in a horizontal line.
    pub fn star(&self) -> Diagram {
        self.involute(Involution::Star)
    }

    /// Reflection in a vertical line.
    pub fn sharp(&self) -> Diagram {
        self.involute(Involution::Sharp)
    }

    /// Deletes every singleton block and re-indexes the surviving vertices
    /// order-preservingly.
    pub fn skeleton(&self) -> Skeleton {
        let kept_bottom: Vec<usize> = (1..=self.bottom())
            .filter(|&i| !self.is_singleton(Vertex::bottom(i)))
            .collect();
        let kept_top: Vec<usize> = (1..=self.top())
            .filter(|&i| !self.is_singleton(Vertex::top(i)))
            .collect();
        let bottom_rank = |i: usize| kept_bottom.iter().position(|&x| x == i).unwrap() + 1;
        let top_rank = |i: usize| kept_top.iter().position(|&x| x == i).unwrap() + 1;
        let blocks = self
            .blocks()
            .iter()
            .filter(|b| b.len() > 1)
            .map(|block| {
                block
                    .iter()
                    .map(|v| match v.row {
                        Row::Bottom => Vertex::bottom(bottom_rank(v.index)),
                        Row::Top => Vertex::top(top_rank(v.index)),
                    })
                    .collect()
            })
            .collect();
        Skeleton {
            diagram: Diagram::from_canonical_blocks(kept_bottom.len(), kept_top.len(), blocks),
            kept_bottom,
            kept_top,
        }
    }
}

/// A skeleton together with the original indices that survived.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Skeleton {
    pub diagram: Diagram,
    pub kept_bottom: Vec<usize>,
    pub kept_top: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_diagram;

    fn d(s: &str) -> Diagram {
        parse_diagram(s).unwrap()
    }

    fn running_example() -> Diagram {
        d("7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}")
    }

    #[test]
    fn worked_composition_gives_t_squared() {
        let upper = running_example();
        let lower = d("4 -> 7 ; {1,1'},{2},{3,7'},{4,5'},{2',4'},{3'},{6'}");
        let got = upper.compose(&lower).unwrap();
        assert_eq!(got.alpha, 2);
        assert_eq!(got.diagram, d("4 -> 5 ; {1,1'},{2},{3,2'},{4,3',5'},{4'}"));
    }

    #[test]
    fn identity_laws() {
        let e = running_example();
        let left = Diagram::identity(5).compose(&e).unwrap();
        assert_eq!(left.alpha, 0);
        assert_eq!(left.diagram, e);
        let right = e.compose(&Diagram::identity(7)).unwrap();
        assert_eq!(right.alpha, 0);
        assert_eq!(right.diagram, e);
        let idem = Diagram::identity(5).compose(&Diagram::identity(5)).unwrap();
        assert_eq!(idem.alpha, 0);
        assert_eq!(idem.diagram, Diagram::identity(5));
    }

    #[test]
    fn closed_loop_counts_one_power_of_t() {
        let eps = d("1 -> 0 ; {1}");
        let eta = d("0 -> 1 ; {1'}");
        let got = eps.compose(&eta).unwrap();
        assert_eq!(got.alpha, 1);
        assert_eq!(got.diagram, Diagram::empty());
    }

    #[test]
    fn type_mismatch_is_reported() {
        let err = Diagram::identity(2).compose(&Diagram::identity(3)).unwrap_err();
        assert!(matches!(err, Error::TypeMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn tensor_places_left_operand_leftmost() {
        let eta = d("0 -> 1 ; {1'}");
        let eps = d("1 -> 0 ; {1}");
        assert_eq!(eta.tensor(&eps), d("1 -> 1 ; {1},{1'}"));

        let e = running_example();
        assert_eq!(e.tensor(&Diagram::empty()), e);
        assert_eq!(Diagram::empty().tensor(&e), e);
    }

    #[test]
    fn tensor_chain_builds_planar_rook_example() {
        let id1 = Diagram::identity(1);
        let eta = d("0 -> 1 ; {1'}");
        let eps = d("1 -> 0 ; {1}");
        let chain = [&id1, &eta, &eta, &eta, &id1, &eta, &eps, &id1, &eps];
        let got = chain
            .iter()
            .fold(Diagram::empty(), |acc, f| acc.tensor(f));
        assert_eq!(
            got,
            d("5 -> 7 ; {1,1'},{2,5'},{4,7'},{3},{5},{2'},{3'},{4'},{6'}")
        );
    }

    #[test]
    fn worked_involutions() {
        let e = running_example();
        assert_eq!(
            e.star(),
            d("5 -> 7 ; {1,1',3'},{2,7'},{3,5,5'},{4},{2',4'},{6'}")
        );
        assert_eq!(
            e.sharp(),
            d("7 -> 5 ; {1,4'},{2},{3,1',3'},{4,6},{5,7,5'},{2'}")
        );
        assert_eq!(Diagram::identity(4).star(), Diagram::identity(4));
    }

    #[test]
    fn skeleton_of_running_example() {
        let s = running_example().skeleton();
        assert_eq!(s.diagram, d("6 -> 4 ; {1,3,1'},{2,4},{5,3',4'},{6,2'}"));
        assert_eq!(s.kept_bottom, vec![1, 2, 3, 4, 5, 7]);
        assert_eq!(s.kept_top, vec![1, 2, 3, 5]);
    }

    #[test]
    fn skeleton_edge_cases() {
        let id = Diagram::identity(3);
        let s = id.skeleton();
        assert_eq!(s.diagram, id);
        assert_eq!(s.kept_bottom, vec![1, 2, 3]);

        let discrete = Diagram::discrete(2, 3);
        let s = discrete.skeleton();
        assert_eq!(s.diagram, Diagram::empty());
        assert!(s.kept_bottom.is_empty());
        assert!(s.kept_top.is_empty());
    }
}
