//! Exhaustive generation of family diagrams, with two independent generators
//! that cross-validate each other, plus the pairwise closure driver.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{Diagram, Family, Vertex};

fn vertex_of(slot: usize, bottom: usize) -> Vertex {
    if slot < bottom {
        Vertex::bottom(slot + 1)
    } else {
        Vertex::top(slot - bottom + 1)
    }
}

/// All set partitions of `n` slots as block lists, by restricted-growth
/// labeling: slot 0 gets label 0 and every later slot a label at most one
/// above the maximum so far.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(labels: &mut Vec<usize>, i: usize, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = labels.len();
        if i == n {
            let nblocks = if n == 0 { 0 } else { max + 1 };
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
            for (slot, &lab) in labels.iter().enumerate() {
                blocks[lab].push(slot);
            }
            out.push(blocks);
            return;
        }
        for lab in 0..=max + 1 {
            labels[i] = lab;
            rec(labels, i + 1, max.max(lab), out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        labels[0] = 0;
        rec(&mut labels, 1, 0, &mut out);
    }
    out
}

/// All diagrams of the family of type `bottom -> top`, in canonical order.
/// Generic route: every set partition of the vertices, filtered by the
/// family predicate.
pub fn enumerate(family: Family, bottom: usize, top: usize) -> Vec<Diagram> {
    let mut out: Vec<Diagram> = set_partitions(bottom + top)
        .into_iter()
        .map(|blocks| {
            Diagram::from_canonical_blocks(
                bottom,
                top,
                blocks
                    .into_iter()
                    .map(|b| b.into_iter().map(|s| vertex_of(s, bottom)).collect())
                    .collect(),
            )
        })
        .filter(|d| d.is_family(family))
        .collect();
    out.sort_unstable();
    out
}

/// The number of family diagrams of the given type.
pub fn count(family: Family, bottom: usize, top: usize) -> usize {
    enumerate(family, bottom, top).len()
}

// ---------------------------------------------------------------------------
// Family-specialized generation (the independent cross-check)
// ---------------------------------------------------------------------------

/// All ways to partition `slots` into blocks of size at most 2, optionally
/// forcing a perfect matching, optionally non-crossing in slot order.
fn matchings(
    slots: &[usize],
    perfect: bool,
    non_crossing: bool,
    current: &mut Vec<(usize, Option<usize>)>,
    out: &mut Vec<Vec<(usize, Option<usize>)>>,
) {
    let Some((&first, rest)) = slots.split_first() else {
        out.push(current.clone());
        return;
    };
    if !perfect {
        current.push((first, None));
        matchings(rest, perfect, non_crossing, current, out);
        current.pop();
    }
    for (i, &partner) in rest.iter().enumerate() {
        if non_crossing {
            // Pairing `first` with `partner` walls off the slots in between.
            let inside: Vec<usize> = rest[..i].to_vec();
            let outside: Vec<usize> = rest[i + 1..].to_vec();
            if perfect && inside.len() % 2 == 1 {
                continue;
            }
            let mut inner_out = Vec::new();
            matchings(&inside, perfect, true, &mut Vec::new(), &mut inner_out);
            let mut outer_out = Vec::new();
            matchings(&outside, perfect, true, &mut Vec::new(), &mut outer_out);
            for inner in &inner_out {
                for outer in &outer_out {
                    let mut full = current.clone();
                    full.push((first, Some(partner)));
                    full.extend(inner.iter().cloned());
                    full.extend(outer.iter().cloned());
                    out.push(full);
                }
            }
        } else {
            let remaining: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &s)| s)
                .collect();
            current.push((first, Some(partner)));
            matchings(&remaining, perfect, non_crossing, current, out);
            current.pop();
        }
    }
}

/// All non-crossing set partitions of `slots` (in slot order).
fn non_crossing_partitions(slots: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = slots.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    // Choose the rest of first's block: an increasing subset of `rest`; the
    // gaps between chosen elements must then be partitioned independently.
    let n = rest.len();
    for mask in 0..(1usize << n) {
        let chosen: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut block = vec![first];
        block.extend(chosen.iter().map(|&i| rest[i]));
        let mut segments: Vec<Vec<usize>> = Vec::new();
        let mut prev = 0;
        for &c in &chosen {
            segments.push(rest[prev..c].to_vec());
            prev = c + 1;
        }
        segments.push(rest[prev..].to_vec());
        let mut partials: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for seg in &segments {
            let seg_parts = non_crossing_partitions(seg);
            let mut next = Vec::new();
            for p in &partials {
                for sp in &seg_parts {
                    let mut q = p.clone();
                    q.extend(sp.iter().cloned());
                    next.push(q);
                }
            }
            partials = next;
        }
        out.extend(partials);
    }
    out
}

fn pairs_to_diagram(bottom: usize, top: usize, pairs: &[(usize, Option<usize>)]) -> Diagram {
    let blocks = pairs
        .iter()
        .map(|&(a, b)| match b {
            None => vec![vertex_of(a, bottom)],
            Some(b) => vec![vertex_of(a, bottom), vertex_of(b, bottom)],
        })
        .collect();
    Diagram::from_canonical_blocks(bottom, top, blocks)
}

/// Boundary slot order (bottom left to right, then top right to left),
/// mapped back to vertex slots. Non-crossing structures generated in this
/// order are exactly the planar diagrams.
fn boundary_slots(bottom: usize, top: usize) -> Vec<usize> {
    let mut slots: Vec<usize> = (0..bottom).collect();
    slots.extend((0..top).rev().map(|j| bottom + j));
    slots
}

/// Same diagrams as [`enumerate`], produced by per-family construction
/// rather than filtering; the two must agree.
pub fn enumerate_direct(family: Family, bottom: usize, top: usize) -> Vec<Diagram> {
    let n = bottom + top;
    let natural: Vec<usize> = (0..n).collect();
    let mut out: Vec<Diagram> = match family {
        Family::Partition => set_partitions(n)
            .into_iter()
            .map(|blocks| {
                Diagram::from_canonical_blocks(
                    bottom,
                    top,
                    blocks
                        .into_iter()
                        .map(|b| b.into_iter().map(|s| vertex_of(s, bottom)).collect())
                        .collect(),
                )
            })
            .collect(),
        Family::PlanarPartition => non_crossing_partitions(&boundary_slots(bottom, top))
            .into_iter()
            .map(|blocks| {
                Diagram::from_canonical_blocks(
                    bottom,
                    top,
                    blocks
                        .into_iter()
                        .map(|b| b.into_iter().map(|s| vertex_of(s, bottom)).collect())
                        .collect(),
                )
            })
            .collect(),
        Family::Brauer | Family::RookBrauer => {
            let mut raw = Vec::new();
            matchings(
                &natural,
                family == Family::Brauer,
                false,
                &mut Vec::new(),
                &mut raw,
            );
            raw.iter().map(|p| pairs_to_diagram(bottom, top, p)).collect()
        }
        Family::TemperleyLieb | Family::Motzkin => {
            let mut raw = Vec::new();
            matchings(
                &boundary_slots(bottom, top),
                family == Family::TemperleyLieb,
                true,
                &mut Vec::new(),
                &mut raw,
            );
            raw.iter().map(|p| pairs_to_diagram(bottom, top, p)).collect()
        }
        Family::Rook | Family::PlanarRook | Family::Permutation => {
            let mut out = Vec::new();
            let max_r = bottom.min(top);
            let min_r = if family == Family::Permutation {
                if bottom != top {
                    return Vec::new();
                }
                max_r
            } else {
                0
            };
            for r in min_r..=max_r {
                for feet in subsets_of_size(bottom, r) {
                    for heads in subsets_of_size(top, r) {
                        if family == Family::PlanarRook {
                            out.push(strand_diagram(bottom, top, &feet, &heads));
                        } else {
                            for perm in permutations(r) {
                                let permuted: Vec<usize> =
                                    perm.iter().map(|&i| heads[i]).collect();
                                out.push(strand_diagram(bottom, top, &feet, &permuted));
                            }
                        }
                    }
                }
            }
            out
        }
    };
    out.sort_unstable();
    out.dedup();
    out
}

fn subsets_of_size(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, r: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            rec(i + 1, n, r, current, out);
            current.pop();
        }
    }
    rec(1, n, r, &mut current, &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn strand_diagram(bottom: usize, top: usize, feet: &[usize], heads: &[usize]) -> Diagram {
    let mut blocks: Vec<Vec<Vertex>> = feet
        .iter()
        .zip(heads)
        .map(|(&f, &h)| vec![Vertex::bottom(f), Vertex::top(h)])
        .collect();
    for i in 1..=bottom {
        if !feet.contains(&i) {
            blocks.push(vec![Vertex::bottom(i)]);
        }
    }
    for j in 1..=top {
        if !heads.contains(&j) {
            blocks.push(vec![Vertex::top(j)]);
        }
    }
    Diagram::from_canonical_blocks(bottom, top, blocks)
}

// ---------------------------------------------------------------------------
// Closure checking
// ---------------------------------------------------------------------------

/// Result of composing every pair of family diagrams `upper: mid -> top`,
/// `lower: bottom -> mid`: how many pairs, the distribution of loop counts,
/// and any composites that left the family (expected none).
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub family: Family,
    pub pairs: usize,
    pub alpha_histogram: BTreeMap<usize, usize>,
    pub violations: Vec<(Diagram, Diagram, Diagram)>,
}

impl ClosureReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "pairs: {}", self.pairs)?;
        for (alpha, count) in &self.alpha_histogram {
            writeln!(f, "alpha {alpha}: {count}")?;
        }
        write!(f, "violations: {}", self.violations.len())
    }
}

/// Composes every pair `upper ∘ lower` with `lower: bottom -> mid` and
/// `upper: mid -> top`, recording the alpha histogram and any composite that
/// is not in the family.
pub fn closure_check(family: Family, bottom: usize, mid: usize, top: usize) -> ClosureReport {
    let uppers = enumerate(family, mid, top);
    let lowers = enumerate(family, bottom, mid);
    let mut histogram = BTreeMap::new();
    let mut violations = Vec::new();
    let mut pairs = 0;
    for upper in &uppers {
        for lower in &lowers {
            pairs += 1;
            let c = upper.compose(lower).expect("types match by construction");
            *histogram.entry(c.alpha).or_insert(0) += 1;
            if !c.diagram.is_family(family) {
                violations.push((upper.clone(), lower.clone(), c.diagram));
            }
        }
    }
    ClosureReport {
        family,
        pairs,
        alpha_histogram: histogram,
        violations,
    }
}
