//! Deterministic factorizations of diagrams into simpler families.
//!
//! Every function here returns factors that recompose to the input exactly,
//! with total `alpha = 0` (no stray powers of t). The factorizations are not
//! unique; the choices below are canonical so results are reproducible.

use crate::diagram::{Diagram, Family, Row, Vertex};
use crate::error::{Error, Result};
use crate::matrix::{from_matrix, to_matrix, FactorMode};

/// Factors of the skeleton decomposition `upper ∘ core ∘ lower`, where the
/// outer factors are planar rook diagrams that delete the bottom singletons
/// and insert the top singletons in place.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkeletonFactors {
    pub upper: Diagram,
    pub core: Diagram,
    pub lower: Diagram,
}

/// Which two-factor decomposition of a rook-Brauer diagram to compute. The
/// letters name the factors in composition order, upper factor first:
/// `Bp` means `D = B ∘ P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RookBrauerMode {
    /// Brauer above a planar rook diagram.
    Bp,
    /// Planar rook diagram above a Brauer diagram.
    Pb,
    /// Permutation above a Motzkin diagram.
    Sm,
    /// Motzkin diagram above a permutation.
    Ms,
}

/// Splits any diagram around its skeleton: `upper ∘ core ∘ lower` recomposes
/// to the input with no scalar. The lower factor deletes the bottom
/// singletons in place; the upper factor inserts the top singletons.
pub fn decompose_skeleton(d: &Diagram) -> SkeletonFactors {
    let sk = d.skeleton();
    let mut lower_blocks: Vec<Vec<Vertex>> = sk
        .kept_bottom
        .iter()
        .enumerate()
        .map(|(j, &i)| vec![Vertex::bottom(i), Vertex::top(j + 1)])
        .collect();
    lower_blocks.extend(d.isolated_bottom().into_iter().map(|i| vec![Vertex::bottom(i)]));
    let lower = Diagram::from_canonical_blocks(d.bottom(), sk.kept_bottom.len(), lower_blocks);

    let mut upper_blocks: Vec<Vec<Vertex>> = sk
        .kept_top
        .iter()
        .enumerate()
        .map(|(j, &i)| vec![Vertex::bottom(j + 1), Vertex::top(i)])
        .collect();
    upper_blocks.extend(d.isolated_top().into_iter().map(|i| vec![Vertex::top(i)]));
    let upper = Diagram::from_canonical_blocks(sk.kept_top.len(), d.top(), upper_blocks);

    SkeletonFactors {
        upper,
        core: sk.diagram,
        lower,
    }
}

/// The skeleton decomposition specialized to a family whose skeletons land in
/// a smaller family: rook diagrams have permutation cores, rook-Brauer
/// diagrams Brauer cores, and Motzkin diagrams Temperley-Lieb cores.
pub fn decompose_via_skeleton_family(d: &Diagram, family: Family) -> Result<SkeletonFactors> {
    let core_family = match family {
        Family::Rook => Family::Permutation,
        Family::RookBrauer => Family::Brauer,
        Family::Motzkin => Family::TemperleyLieb,
        other => {
            return Err(Error::FamilyMismatch {
                expected: format!("rook, rook-brauer or motzkin (got family {other})"),
                diagram: d.to_string(),
            })
        }
    };
    if !d.is_family(family) {
        return Err(Error::FamilyMismatch {
            expected: family.to_string(),
            diagram: d.to_string(),
        });
    }
    let factors = decompose_skeleton(d);
    debug_assert!(factors.core.is_family(core_family));
    Ok(factors)
}

/// Factors a rook diagram through its matrix as permutation x planar rook,
/// in the order named by `mode` (upper factor first): `SP` returns `(S, P)`
/// with `D = S ∘ P`, `PS` returns `(P, S)` with `D = P ∘ S`.
pub fn decompose_rook(d: &Diagram, mode: FactorMode) -> Result<(Diagram, Diagram)> {
    let m = to_matrix(d)?;
    match mode {
        FactorMode::SP => {
            let (s, p) = m.factor(FactorMode::SP);
            Ok((from_matrix(&s), from_matrix(&p)))
        }
        FactorMode::PS => {
            let (p, s) = m.factor(FactorMode::PS);
            Ok((from_matrix(&p), from_matrix(&s)))
        }
    }
}

/// Two-factor decompositions of a rook-Brauer diagram; see [`RookBrauerMode`]
/// for the factor order. `Bp` and `Pb` exist for every rook-Brauer diagram.
///
/// `Sm` and `Ms` do not: with a permutation as one factor, the other factor
/// must reproduce one row of the input verbatim, so that row's arcs and
/// strand endpoints must already be non-crossing. A diagram such as
/// `3 -> 3 ; {1,3},{2,2'},{1',3'}` (a strand trapped under an arc on both
/// rows) admits neither. Those two modes report [`Error::NoPlanarFactor`]
/// with the offending pattern instead.
pub fn decompose_rook_brauer(d: &Diagram, mode: RookBrauerMode) -> Result<(Diagram, Diagram)> {
    if !d.is_family(Family::RookBrauer) {
        return Err(Error::NotARookBrauerDiagram(d.to_string()));
    }
    match mode {
        RookBrauerMode::Bp => decompose_bp(d),
        RookBrauerMode::Pb => {
            let (b, p) = decompose_bp(&d.star())?;
            Ok((p.star(), b.star()))
        }
        RookBrauerMode::Ms => decompose_ms(d),
        RookBrauerMode::Sm => {
            let mut arcs = Vec::new();
            let mut feet = Vec::new();
            for block in d.blocks() {
                match block.as_slice() {
                    [a, b] if a.is_bottom() && b.is_bottom() => arcs.push((a.index, b.index)),
                    [a, b] if a.is_bottom() && b.is_top() => feet.push(a.index),
                    _ => {}
                }
            }
            if let Some(msg) = fixed_row_obstruction(&arcs, &feet, "bottom arc", "strand foot", "") {
                return Err(Error::NoPlanarFactor(msg));
            }
            let (m, s) = decompose_ms(&d.star())?;
            Ok((s.star(), m.star()))
        }
    }
}

/// With a permutation as one factor, the other factor must copy one row of
/// the input verbatim; that row's arcs may not cross each other and no strand
/// endpoint may sit strictly under an arc.
fn fixed_row_obstruction(
    arcs: &[(usize, usize)],
    strand_ends: &[usize],
    arc_name: &str,
    end_name: &str,
    suffix: &str,
) -> Option<String> {
    for (i, &(a, b)) in arcs.iter().enumerate() {
        for &(c, e) in &arcs[i + 1..] {
            let (a, b, c, e) = if a < c { (a, b, c, e) } else { (c, e, a, b) };
            if a < c && c < b && b < e {
                return Some(format!(
                    "{arc_name}s {{{a}{suffix},{b}{suffix}}} and {{{c}{suffix},{e}{suffix}}} cross"
                ));
            }
        }
        for &j in strand_ends {
            if a < j && j < b {
                return Some(format!(
                    "{end_name} {j}{suffix} is trapped under {arc_name} {{{a}{suffix},{b}{suffix}}}"
                ));
            }
        }
    }
    None
}

/// `D = B ∘ P`: the planar rook factor feeds every non-isolated bottom
/// vertex straight up, drops the bottom singletons, and supplies one fresh
/// middle strand per top singleton; the Brauer factor holds everything else.
fn decompose_bp(d: &Diagram) -> Result<(Diagram, Diagram)> {
    let non_singleton_bottom: Vec<usize> = (1..=d.bottom())
        .filter(|&i| !d.is_singleton(Vertex::bottom(i)))
        .collect();
    let top_singletons = d.isolated_top();
    let mid = non_singleton_bottom.len() + top_singletons.len();
    let slot = |i: usize| {
        non_singleton_bottom
            .iter()
            .position(|&x| x == i)
            .expect("non-singleton bottom vertex")
            + 1
    };

    let mut lower_blocks: Vec<Vec<Vertex>> = non_singleton_bottom
        .iter()
        .map(|&i| vec![Vertex::bottom(i), Vertex::top(slot(i))])
        .collect();
    lower_blocks.extend(d.isolated_bottom().into_iter().map(|i| vec![Vertex::bottom(i)]));
    lower_blocks.extend(
        (0..top_singletons.len())
            .map(|s| vec![Vertex::top(non_singleton_bottom.len() + s + 1)]),
    );
    let lower = Diagram::from_canonical_blocks(d.bottom(), mid, lower_blocks);

    let mut upper_blocks: Vec<Vec<Vertex>> = Vec::new();
    for block in d.blocks() {
        if block.len() == 2 {
            upper_blocks.push(
                block
                    .iter()
                    .map(|v| match v.row {
                        Row::Bottom => Vertex::bottom(slot(v.index)),
                        Row::Top => Vertex::top(v.index),
                    })
                    .collect(),
            );
        }
    }
    for (s, &j) in top_singletons.iter().enumerate() {
        upper_blocks.push(vec![
            Vertex::bottom(non_singleton_bottom.len() + s + 1),
            Vertex::top(j),
        ]);
    }
    let upper = Diagram::from_canonical_blocks(mid, d.top(), upper_blocks);
    if !upper.is_family(Family::Brauer) {
        return Err(Error::NoBrauerFactor(format!(
            "middle row of {upper} is not perfectly matched"
        )));
    }
    Ok((upper, lower))
}

/// One bottom-row block of the input, as seen by the `Ms` construction.
enum BottomItem {
    Isolated(usize),
    Arc(usize, usize),
    Strand { foot: usize, head: usize },
}

impl BottomItem {
    fn width(&self) -> usize {
        match self {
            BottomItem::Arc(..) => 2,
            _ => 1,
        }
    }

    fn min_bottom(&self) -> usize {
        match *self {
            BottomItem::Isolated(i) => i,
            BottomItem::Arc(i, _) => i,
            BottomItem::Strand { foot, .. } => foot,
        }
    }
}

/// `D = M ∘ S`: the lower permutation reroutes the bottom row so that the
/// upper factor can hold every arc, singleton and strand planarly. The upper
/// factor's top row is the input's top row verbatim, which is exactly why
/// this decomposition only exists when that row's own pattern is planar.
fn decompose_ms(d: &Diagram) -> Result<(Diagram, Diagram)> {
    let mut top_arcs: Vec<(usize, usize)> = Vec::new();
    let mut strand_heads: Vec<usize> = Vec::new();
    let mut items: Vec<BottomItem> = Vec::new();
    for block in d.blocks() {
        match block.as_slice() {
            [v] if v.is_bottom() => items.push(BottomItem::Isolated(v.index)),
            [_] => {} // top singleton, stays in place
            [a, b] if a.is_bottom() && b.is_bottom() => {
                items.push(BottomItem::Arc(a.index, b.index))
            }
            [a, b] if a.is_bottom() && b.is_top() => {
                items.push(BottomItem::Strand {
                    foot: a.index,
                    head: b.index,
                });
                strand_heads.push(b.index);
            }
            [a, b] => top_arcs.push((a.index, b.index)),
            _ => unreachable!("rook-Brauer blocks have size at most 2"),
        }
    }

    if let Some(msg) = fixed_row_obstruction(&top_arcs, &strand_heads, "top arc", "strand head", "'") {
        return Err(Error::NoPlanarFactor(msg));
    }

    // Lay the items out by minimal bottom vertex, then reorder just the
    // strands among their own positions so their heads increase.
    items.sort_by_key(BottomItem::min_bottom);
    let strand_positions: Vec<usize> = items
        .iter()
        .enumerate()
        .filter(|(_, it)| matches!(it, BottomItem::Strand { .. }))
        .map(|(i, _)| i)
        .collect();
    let mut strands: Vec<(usize, usize)> = items
        .iter()
        .filter_map(|it| match *it {
            BottomItem::Strand { foot, head } => Some((head, foot)),
            _ => None,
        })
        .collect();
    strands.sort_unstable();
    for (&pos, &(head, foot)) in strand_positions.iter().zip(strands.iter()) {
        items[pos] = BottomItem::Strand { foot, head };
    }

    let mut lower_blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut upper_blocks: Vec<Vec<Vertex>> = Vec::new();
    for &j in &d.isolated_top() {
        upper_blocks.push(vec![Vertex::top(j)]);
    }
    for &(a, b) in &top_arcs {
        upper_blocks.push(vec![Vertex::top(a), Vertex::top(b)]);
    }
    let mut next_slot = 1;
    for item in &items {
        let s = next_slot;
        next_slot += item.width();
        match *item {
            BottomItem::Isolated(i) => {
                lower_blocks.push(vec![Vertex::bottom(i), Vertex::top(s)]);
                upper_blocks.push(vec![Vertex::bottom(s)]);
            }
            BottomItem::Arc(i, j) => {
                lower_blocks.push(vec![Vertex::bottom(i), Vertex::top(s)]);
                lower_blocks.push(vec![Vertex::bottom(j), Vertex::top(s + 1)]);
                upper_blocks.push(vec![Vertex::bottom(s), Vertex::bottom(s + 1)]);
            }
            BottomItem::Strand { foot, head } => {
                lower_blocks.push(vec![Vertex::bottom(foot), Vertex::top(s)]);
                upper_blocks.push(vec![Vertex::bottom(s), Vertex::top(head)]);
            }
        }
    }
    let lower = Diagram::from_canonical_blocks(d.bottom(), d.bottom(), lower_blocks);
    let upper = Diagram::from_canonical_blocks(d.bottom(), d.top(), upper_blocks);
    debug_assert!(lower.is_family(Family::Permutation));
    debug_assert!(upper.is_family(Family::Motzkin));
    Ok((upper, lower))
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

    fn recompose3(f: &SkeletonFactors) -> (usize, Diagram) {
        let inner = f.core.compose(&f.lower).unwrap();
        let outer = f.upper.compose(&inner.diagram).unwrap();
        (inner.alpha + outer.alpha, outer.diagram)
    }

    #[test]
    fn skeleton_factors_of_the_running_example() {
        let f = decompose_skeleton(&running_example());
        assert_eq!(f.core, d("6 -> 4 ; {1,3,1'},{2,4},{5,3',4'},{6,2'}"));
        assert_eq!(
            f.lower,
            d("7 -> 6 ; {1,1'},{2,2'},{3,3'},{4,4'},{5,5'},{7,6'},{6}")
        );
        assert_eq!(f.upper, d("4 -> 5 ; {1,1'},{2,2'},{3,3'},{4,5'},{4'}"));
        assert!(f.lower.is_family(Family::PlanarRook));
        assert!(f.upper.is_family(Family::PlanarRook));
        let (alpha, back) = recompose3(&f);
        assert_eq!(alpha, 0);
        assert_eq!(back, running_example());
    }

    #[test]
    fn skeleton_factors_degenerate_cases() {
        let no_singletons = d("2 -> 2 ; {1,2},{1',2'}");
        let f = decompose_skeleton(&no_singletons);
        assert_eq!(f.lower, Diagram::identity(2));
        assert_eq!(f.upper, Diagram::identity(2));

        let discrete = Diagram::discrete(2, 3);
        let f = decompose_skeleton(&discrete);
        assert_eq!(f.core, Diagram::empty());
        assert_eq!(f.lower, d("2 -> 0 ; {1},{2}"));
        assert_eq!(f.upper, d("0 -> 3 ; {1'},{2'},{3'}"));
        let (alpha, back) = recompose3(&f);
        assert_eq!(alpha, 0);
        assert_eq!(back, discrete);
    }

    #[test]
    fn rook_sp_matches_the_worked_matrices() {
        let rook = d("5 -> 4 ; {2,1'},{5,2'},{3,4'},{1},{4},{3'}");
        let (s, p) = decompose_rook(&rook, FactorMode::SP).unwrap();
        assert_eq!(s, d("4 -> 4 ; {1,1'},{4,2'},{3,3'},{2,4'}"));
        assert_eq!(p, d("5 -> 4 ; {2,1'},{3,2'},{5,4'},{1},{4},{3'}"));
        let c = s.compose(&p).unwrap();
        assert_eq!((c.alpha, c.diagram), (0, rook));
    }

    #[test]
    fn rook_trivial_cases() {
        let planar = d("3 -> 2 ; {1,1'},{3,2'},{2}");
        let (s, p) = decompose_rook(&planar, FactorMode::SP).unwrap();
        assert_eq!(s, Diagram::identity(2));
        assert_eq!(p, planar);

        let perm = d("3 -> 3 ; {1,2'},{2,3'},{3,1'}");
        let (p2, s2) = decompose_rook(&perm, FactorMode::PS).unwrap();
        assert_eq!(p2, Diagram::identity(3));
        assert_eq!(s2, perm);
    }

    #[test]
    fn bp_factors_the_worked_rook_brauer_example() {
        let rb = d("8 -> 5 ; {1},{2,5'},{3,5},{4,3'},{6},{7,8},{1',2'},{4'}");
        let (b, p) = decompose_rook_brauer(&rb, RookBrauerMode::Bp).unwrap();
        assert!(b.is_family(Family::Brauer));
        assert!(p.is_family(Family::PlanarRook));
        let c = b.compose(&p).unwrap();
        assert_eq!((c.alpha, c.diagram), (0, rb));
    }

    #[test]
    fn bp_of_a_brauer_diagram_has_identity_planar_factor() {
        let brauer = d("3 -> 3 ; {1,2},{3,2'},{1',3'}");
        let (b, p) = decompose_rook_brauer(&brauer, RookBrauerMode::Bp).unwrap();
        assert_eq!(p, Diagram::identity(3));
        assert_eq!(b, brauer);
    }

    #[test]
    fn sm_of_a_single_deleted_strand() {
        let eps = d("1 -> 0 ; {1}");
        let (s, m) = decompose_rook_brauer(&eps, RookBrauerMode::Sm).unwrap();
        assert_eq!(s, Diagram::empty());
        assert_eq!(m, eps);
        let c = s.compose(&m).unwrap();
        assert_eq!((c.alpha, c.diagram), (0, eps));
    }

    #[test]
    fn ms_handles_bottom_crossings() {
        let rb = d("4 -> 0 ; {1,3},{2,4}");
        let (m, s) = decompose_rook_brauer(&rb, RookBrauerMode::Ms).unwrap();
        assert!(m.is_family(Family::Motzkin));
        assert!(s.is_family(Family::Permutation));
        let c = m.compose(&s).unwrap();
        assert_eq!((c.alpha, c.diagram), (0, rb));
    }

    #[test]
    fn the_stuck_diagram_really_has_no_permutation_motzkin_factorization() {
        // Exhaustive search over every (permutation, Motzkin) pair confirms
        // that the error reported below is a fact about the diagram, not a
        // limitation of the construction.
        let stuck = d("3 -> 3 ; {1,3},{2,2'},{1',3'}");
        let perms = crate::enumeration::enumerate(Family::Permutation, 3, 3);
        let motzkins = crate::enumeration::enumerate(Family::Motzkin, 3, 3);
        for s in &perms {
            for m in &motzkins {
                let sm = s.compose(m).unwrap();
                assert!(sm.alpha > 0 || sm.diagram != stuck, "S={s} M={m}");
                let ms = m.compose(s).unwrap();
                assert!(ms.alpha > 0 || ms.diagram != stuck, "M={m} S={s}");
            }
        }
    }

    #[test]
    fn sm_and_ms_report_their_obstructions() {
        // Both rows trap a strand under an arc; neither order can work.
        let stuck = d("3 -> 3 ; {1,3},{2,2'},{1',3'}");
        assert!(matches!(
            decompose_rook_brauer(&stuck, RookBrauerMode::Sm),
            Err(Error::NoPlanarFactor(_))
        ));
        assert!(matches!(
            decompose_rook_brauer(&stuck, RookBrauerMode::Ms),
            Err(Error::NoPlanarFactor(_))
        ));
        // But the Brauer-sided modes always succeed.
        for mode in [RookBrauerMode::Bp, RookBrauerMode::Pb] {
            let (upper, lower) = decompose_rook_brauer(&stuck, mode).unwrap();
            let c = upper.compose(&lower).unwrap();
            assert_eq!((c.alpha, c.diagram), (0, stuck.clone()));
        }
    }

    #[test]
    fn skeleton_family_cores() {
        let motzkin = d("2 -> 2 ; {1,1'},{2},{2'}");
        let f = decompose_via_skeleton_family(&motzkin, Family::Motzkin).unwrap();
        assert_eq!(f.core, Diagram::identity(1));
        assert_eq!(f.lower, d("2 -> 1 ; {1,1'},{2}"));
        assert_eq!(f.upper, d("1 -> 2 ; {1,1'},{2'}"));
        let inner = f.core.compose(&f.lower).unwrap();
        let outer = f.upper.compose(&inner.diagram).unwrap();
        assert_eq!(outer.alpha + inner.alpha, 0);
        assert_eq!(outer.diagram, motzkin);

        let rook = d("5 -> 4 ; {2,1'},{5,2'},{3,4'},{1},{4},{3'}");
        let f = decompose_via_skeleton_family(&rook, Family::Rook).unwrap();
        assert!(f.core.is_family(Family::Permutation));
        assert_eq!(f.core.bottom(), 3);

        let tl = d("2 -> 2 ; {1,2},{1',2'}");
        let f = decompose_via_skeleton_family(&tl, Family::Motzkin).unwrap();
        assert_eq!(f.lower, Diagram::identity(2));
        assert_eq!(f.upper, Diagram::identity(2));

        let err = decompose_via_skeleton_family(&running_example(), Family::Motzkin).unwrap_err();
        assert!(matches!(err, Error::FamilyMismatch { .. }));
    }
}
