//! Presentations of the eight diagram categories: generator sets, relation
//! catalogs closed under the two reflections, symbolic soundness checks, and
//! synthesis of a generator word for any diagram of the right family.

use std::collections::BTreeSet;
use std::fmt;

use crate::category::Involution;
use crate::diagram::{Diagram, Family, Row, Vertex};
use crate::error::{Error, Result};
use crate::factorization::{decompose_rook_brauer, decompose_skeleton, RookBrauerMode};
use crate::matrix::FactorMode;
use crate::morphism::Morphism;
use crate::scalar::Scalar;
use crate::word::{Atom, Slice, Word};

/// The presented categories.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CategoryName {
    Partition,
    PlanarRook,
    Rook,
    Brauer,
    RookBrauer,
    TemperleyLieb,
    Motzkin,
    SymmetricGroup,
}

impl CategoryName {
    pub const ALL: [CategoryName; 8] = [
        CategoryName::Partition,
        CategoryName::PlanarRook,
        CategoryName::Rook,
        CategoryName::Brauer,
        CategoryName::RookBrauer,
        CategoryName::TemperleyLieb,
        CategoryName::Motzkin,
        CategoryName::SymmetricGroup,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CategoryName::Partition => "partition",
            CategoryName::PlanarRook => "planar-rook",
            CategoryName::Rook => "rook",
            CategoryName::Brauer => "brauer",
            CategoryName::RookBrauer => "rook-brauer",
            CategoryName::TemperleyLieb => "temperley-lieb",
            CategoryName::Motzkin => "motzkin",
            CategoryName::SymmetricGroup => "symmetric-group",
        }
    }

    /// The diagram family whose members the category's words evaluate to.
    pub fn family(&self) -> Family {
        match self {
            CategoryName::Partition => Family::Partition,
            CategoryName::PlanarRook => Family::PlanarRook,
            CategoryName::Rook => Family::Rook,
            CategoryName::Brauer => Family::Brauer,
            CategoryName::RookBrauer => Family::RookBrauer,
            CategoryName::TemperleyLieb => Family::TemperleyLieb,
            CategoryName::Motzkin => Family::Motzkin,
            CategoryName::SymmetricGroup => Family::Permutation,
        }
    }

    /// The generator atoms of the presentation (identity strands are always
    /// available and not counted as generators).
    pub fn generators(&self) -> &'static [Atom] {
        use Atom::*;
        match self {
            CategoryName::Partition => &[Mu, Delta, Cross, Eta, Eps],
            CategoryName::PlanarRook => &[Eta, Eps],
            CategoryName::Rook => &[Cross, Eta, Eps],
            CategoryName::Brauer => &[Cross, Cap, Cup],
            CategoryName::RookBrauer => &[Cross, Cap, Cup, Eta, Eps],
            CategoryName::TemperleyLieb => &[Cap, Cup],
            CategoryName::Motzkin => &[Cap, Cup, Eta, Eps],
            CategoryName::SymmetricGroup => &[Cross],
        }
    }

    pub fn spec(&self) -> CategorySpec {
        CategorySpec::of(*self)
    }
}

impl std::str::FromStr for CategoryName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CategoryName::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown category `{s}`"))
    }
}

impl fmt::Display for CategoryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One defining equation: `lhs = scalar * rhs`, both sides words over the
/// category's generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
    pub scalar: Scalar,
}

impl Relation {
    fn new(name: &str, lhs: Word, rhs: Word) -> Relation {
        Relation {
            name: name.into(),
            lhs,
            rhs,
            scalar: Scalar::one(),
        }
    }

    fn scaled(name: &str, lhs: Word, rhs: Word, scalar: Scalar) -> Relation {
        Relation {
            name: name.into(),
            lhs,
            rhs,
            scalar,
        }
    }

    fn involute(&self, mode: Involution, suffix: &str) -> Relation {
        Relation {
            name: format!("{}{}", self.name, suffix),
            lhs: self.lhs.involute(mode),
            rhs: self.rhs.involute(mode),
            scalar: self.scalar.clone(),
        }
    }

    /// Key used to deduplicate reflected copies of the same equation; for
    /// scalar-free relations the sides are unordered.
    fn dedup_key(&self) -> (Word, Word, Scalar) {
        if self.scalar.is_one() && self.rhs < self.lhs {
            (self.rhs.clone(), self.lhs.clone(), self.scalar.clone())
        } else {
            (self.lhs.clone(), self.rhs.clone(), self.scalar.clone())
        }
    }
}

/// A presentation: generators plus base relations. The full catalog also
/// contains the reflected copies of every base relation.
#[derive(Clone, Debug)]
pub struct CategorySpec {
    pub name: CategoryName,
    pub generators: Vec<Atom>,
    pub relations: Vec<Relation>,
    /// Consequences of the base relations that are verified alongside them.
    pub derived: Vec<Relation>,
}

fn word(domain: usize, slices: Vec<Vec<Atom>>) -> Word {
    Word::new(domain, slices.into_iter().map(Slice).collect())
        .expect("relation words are well-typed")
}

/// `s ∘ s = 1` and the braid relation.
fn symmetric_relations(prefix: &str) -> Vec<Relation> {
    use Atom::*;
    vec![
        Relation::new(
            &format!("{prefix}a"),
            word(2, vec![vec![Cross], vec![Cross]]),
            Word::identity(2),
        ),
        Relation::new(
            &format!("{prefix}b"),
            word(
                3,
                vec![vec![Cross, Id], vec![Id, Cross], vec![Cross, Id]],
            ),
            word(
                3,
                vec![vec![Id, Cross], vec![Cross, Id], vec![Id, Cross]],
            ),
        ),
    ]
}

/// The zigzag identity for cap and cup.
fn zigzag() -> Relation {
    use Atom::*;
    Relation::new(
        "zigzag",
        word(1, vec![vec![Id, Cup], vec![Cap, Id]]),
        Word::identity(1),
    )
}

impl CategorySpec {
    pub fn of(name: CategoryName) -> CategorySpec {
        use Atom::*;
        let relations: Vec<Relation> = match name {
            CategoryName::SymmetricGroup => symmetric_relations("S1"),
            CategoryName::Partition => {
                let mut rels = vec![
                    // Merging a fresh strand is a no-op.
                    Relation::new(
                        "P1a",
                        word(1, vec![vec![Id, Eta], vec![Mu]]),
                        Word::identity(1),
                    ),
                    // Merge and split interact associatively.
                    Relation::new(
                        "P1b",
                        word(2, vec![vec![Id, Delta], vec![Mu, Id]]),
                        word(2, vec![vec![Mu], vec![Delta]]),
                    ),
                ];
                rels.extend(symmetric_relations("P2"));
                rels.push(Relation::new(
                    "P3a",
                    word(1, vec![vec![Id, Eta], vec![Cross]]),
                    word(1, vec![vec![Eta, Id]]),
                ));
                rels.push(Relation::new(
                    "P3b",
                    word(
                        3,
                        vec![vec![Id, Cross], vec![Cross, Id], vec![Id, Mu]],
                    ),
                    word(3, vec![vec![Mu, Id], vec![Cross]]),
                ));
                rels.push(Relation::new(
                    "P4a",
                    word(2, vec![vec![Cross], vec![Mu]]),
                    word(2, vec![vec![Mu]]),
                ));
                rels.push(Relation::new(
                    "P4b",
                    word(1, vec![vec![Delta], vec![Mu]]),
                    Word::identity(1),
                ));
                rels.push(Relation::scaled(
                    "P4c",
                    word(0, vec![vec![Eta], vec![Eps]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ));
                rels
            }
            CategoryName::PlanarRook => vec![Relation::scaled(
                "PR1",
                word(0, vec![vec![Eta], vec![Eps]]),
                Word::identity(0),
                Scalar::t_power(1),
            )],
            CategoryName::Rook => {
                let mut rels = symmetric_relations("R1");
                rels.push(Relation::new(
                    "R2",
                    word(1, vec![vec![Eta, Id], vec![Cross]]),
                    word(1, vec![vec![Id, Eta]]),
                ));
                rels.push(Relation::scaled(
                    "R3",
                    word(0, vec![vec![Eta], vec![Eps]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ));
                rels
            }
            CategoryName::Brauer => {
                let mut rels = symmetric_relations("B1");
                rels.push(Relation {
                    name: "B2a".into(),
                    ..zigzag()
                });
                rels.push(Relation::new(
                    "B2b",
                    word(3, vec![vec![Cross, Id], vec![Id, Cap]]),
                    word(3, vec![vec![Id, Cross], vec![Cap, Id]]),
                ));
                rels.push(Relation::new(
                    "B3a",
                    word(2, vec![vec![Cross], vec![Cap]]),
                    word(2, vec![vec![Cap]]),
                ));
                rels.push(Relation::scaled(
                    "B3b",
                    word(0, vec![vec![Cup], vec![Cap]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ));
                rels
            }
            CategoryName::RookBrauer => {
                let mut rels = symmetric_relations("RB1");
                rels.push(Relation {
                    name: "RB2a".into(),
                    ..zigzag()
                });
                rels.push(Relation::new(
                    "RB2b",
                    word(3, vec![vec![Cross, Id], vec![Id, Cap]]),
                    word(3, vec![vec![Id, Cross], vec![Cap, Id]]),
                ));
                rels.push(Relation::new(
                    "RB3a",
                    word(2, vec![vec![Cross], vec![Cap]]),
                    word(2, vec![vec![Cap]]),
                ));
                rels.push(Relation::new(
                    "RB3b",
                    word(1, vec![vec![Eta, Id], vec![Cross]]),
                    word(1, vec![vec![Id, Eta]]),
                ));
                rels.push(Relation::scaled(
                    "RB4a",
                    word(0, vec![vec![Cup], vec![Cap]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ));
                rels.push(Relation::scaled(
                    "RB4b",
                    word(0, vec![vec![Eta, Eta], vec![Cap]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ));
                rels.push(Relation::scaled(
                    "RB4c",
                    word(0, vec![vec![Eta], vec![Eps]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ));
                rels
            }
            CategoryName::TemperleyLieb => vec![
                Relation {
                    name: "TL1".into(),
                    ..zigzag()
                },
                Relation::new(
                    "TL2",
                    word(1, vec![vec![Cup, Id], vec![Id, Cap]]),
                    Word::identity(1),
                ),
                Relation::scaled(
                    "TL3",
                    word(0, vec![vec![Cup], vec![Cap]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ),
            ],
            CategoryName::Motzkin => vec![
                Relation::new(
                    "M1a",
                    word(1, vec![vec![Id, Eta], vec![Cap]]),
                    word(1, vec![vec![Eps]]),
                ),
                Relation {
                    name: "M1b".into(),
                    ..zigzag()
                },
                Relation::scaled(
                    "M2a",
                    word(0, vec![vec![Cup], vec![Cap]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ),
                Relation::scaled(
                    "M2b",
                    word(0, vec![vec![Eta], vec![Eps]]),
                    Word::identity(0),
                    Scalar::t_power(1),
                ),
            ],
        };
        let derived: Vec<Relation> = match name {
            // The two single-vertex generators commute past each other.
            CategoryName::PlanarRook => vec![Relation::new(
                "PR2",
                word(1, vec![vec![Eta, Eps]]),
                word(1, vec![vec![Eps, Eta]]),
            )],
            // The crossing fixes a pair of fresh strands.
            CategoryName::Rook => vec![Relation::new(
                "R4",
                word(0, vec![vec![Eta, Eta], vec![Cross]]),
                word(0, vec![vec![Eta, Eta]]),
            )],
            // The cap passes through the crossing.
            CategoryName::RookBrauer => vec![Relation::new(
                "RB5",
                word(
                    3,
                    vec![vec![Id, Cross], vec![Cross, Id], vec![Id, Cap]],
                ),
                word(3, vec![vec![Cap, Id]]),
            )],
            _ => Vec::new(),
        };
        CategorySpec {
            name,
            generators: name.generators().to_vec(),
            relations,
            derived,
        }
    }
}

/// Expands a relation list with its reflections under Star, Sharp and both,
/// dropping duplicates.
fn close_under_involutions(base: &[Relation]) -> Vec<Relation> {
    let mut seen: BTreeSet<(Word, Word, Scalar)> = BTreeSet::new();
    let mut out = Vec::new();
    for r in base {
        let variants = [
            r.clone(),
            r.involute(Involution::Star, "*"),
            r.involute(Involution::Sharp, "#"),
            r.involute(Involution::Star, "*").involute(Involution::Sharp, "#"),
        ];
        for v in variants {
            if seen.insert(v.dedup_key()) {
                out.push(v);
            }
        }
    }
    out
}

/// The full relation catalog of a presentation: every base relation plus its
/// distinct reflected copies.
pub fn relation_catalog(spec: &CategorySpec) -> Vec<Relation> {
    close_under_involutions(&spec.relations)
}

/// The derived relations of a presentation, closed under the reflections.
pub fn derived_catalog(spec: &CategorySpec) -> Vec<Relation> {
    close_under_involutions(&spec.derived)
}

/// The outcome of checking one relation by evaluating both sides.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub name: String,
    pub derived: bool,
    pub holds: bool,
    pub lhs_value: Morphism,
    pub rhs_value: Morphism,
}

/// Evaluates both sides of a relation over `Z[t]` and compares exactly.
pub fn verify_relation(r: &Relation, derived: bool) -> RelationReport {
    let lhs_value = r.lhs.evaluate();
    let rhs_value = r.rhs.evaluate().scale(&r.scalar);
    RelationReport {
        name: r.name.clone(),
        derived,
        holds: lhs_value == rhs_value,
        lhs_value,
        rhs_value,
    }
}

/// Checks every cataloged relation of the presentation, plus its derived
/// relations, returning one report per instance. Failures are reports, not
/// errors.
pub fn verify_presentation(name: CategoryName) -> Vec<RelationReport> {
    let spec = name.spec();
    let mut reports: Vec<RelationReport> = relation_catalog(&spec)
        .iter()
        .map(|r| verify_relation(r, false))
        .collect();
    reports.extend(
        derived_catalog(&spec)
            .iter()
            .map(|r| verify_relation(r, true)),
    );
    reports
}

// ---------------------------------------------------------------------------
// Word synthesis
// ---------------------------------------------------------------------------

/// A single planar rook diagram as one slice of `|`, `eta` and `eps` atoms:
/// scan the top row left to right, flushing deletions whose feet lie below
/// the next strand.
fn planar_rook_slice(d: &Diagram) -> Slice {
    debug_assert!(d.is_family(Family::PlanarRook));
    let mut strands: Vec<(usize, usize)> = d
        .blocks()
        .iter()
        .filter(|b| b.len() == 2)
        .map(|b| (b[1].index, b[0].index)) // (head, foot)
        .collect();
    strands.sort_unstable();
    let isolated_top: BTreeSet<usize> = d.isolated_top().into_iter().collect();
    let isolated_bottom: Vec<usize> = d.isolated_bottom();
    let mut atoms = Vec::new();
    let mut next_eps = 0;
    let mut strand_iter = strands.iter().peekable();
    for head in 1..=d.top() {
        if isolated_top.contains(&head) {
            atoms.push(Atom::Eta);
        } else {
            let &(_, foot) = strand_iter.next().expect("head belongs to a strand");
            while next_eps < isolated_bottom.len() && isolated_bottom[next_eps] < foot {
                atoms.push(Atom::Eps);
                next_eps += 1;
            }
            atoms.push(Atom::Id);
        }
    }
    while next_eps < isolated_bottom.len() {
        atoms.push(Atom::Eps);
        next_eps += 1;
    }
    Slice(atoms)
}

/// Adjacent-transposition slices for a permutation given in one-line
/// notation (`targets[i]` is the top index reached from bottom `i+1`),
/// bubble-sorting the leftmost inversion first.
fn permutation_slices(targets: &[usize]) -> Vec<Slice> {
    let n = targets.len();
    let mut cur = targets.to_vec();
    let mut slices = Vec::new();
    while let Some(j) = (0..n.saturating_sub(1)).find(|&j| cur[j] > cur[j + 1]) {
        cur.swap(j, j + 1);
        let mut atoms = vec![Atom::Id; n];
        atoms[j] = Atom::Cross;
        atoms.remove(j + 1);
        slices.push(Slice(atoms));
    }
    slices
}

fn permutation_targets(d: &Diagram) -> Vec<usize> {
    let mut targets = vec![0; d.bottom()];
    for block in d.blocks() {
        if let [foot, head] = block.as_slice() {
            targets[foot.index - 1] = head.index;
        }
    }
    targets
}

/// Word for a Brauer diagram over `{s, d, c}`: peel bottom arcs (moving the
/// far endpoint next to the near one with crossings, innermost arc first),
/// do the same to the top arcs through the Star reflection, and bubble-sort
/// the remaining permutation.
fn brauer_word(d: &Diagram) -> Word {
    debug_assert!(d.is_family(Family::Brauer));
    let (lower, rest) = peel_bottom_arcs(d);
    let (upper_reflected, core_reflected) = peel_bottom_arcs(&rest.star());
    let core = core_reflected.star();
    let mut w = lower;
    for slice in permutation_slices(&permutation_targets(&core)) {
        w = w.then(&Word::new(w.codomain(), vec![slice]).unwrap()).unwrap();
    }
    w.then(&upper_reflected.involute(Involution::Star)).unwrap()
}

/// Removes every bottom-to-bottom arc of `d`, returning the word of slices
/// that reinstates them below the returned remainder.
fn peel_bottom_arcs(d: &Diagram) -> (Word, Diagram) {
    let mut w = Word::identity(d.bottom());
    let mut current = d.clone();
    loop {
        // The arc with the smallest right endpoint closes first.
        let arc = current
            .blocks()
            .iter()
            .filter(|b| b.len() == 2 && b[0].is_bottom() && b[1].is_bottom())
            .map(|b| (b[1].index, b[0].index))
            .min();
        let Some((right, left)) = arc else {
            return (w, current);
        };
        let n = current.bottom();
        // Walk the right endpoint leftward until it sits beside the left one.
        for pos in (left + 1..right).rev() {
            let mut atoms = vec![Atom::Id; n];
            atoms[pos - 1] = Atom::Cross;
            atoms.remove(pos);
            w = w.then(&Word::new(n, vec![Slice(atoms)]).unwrap()).unwrap();
        }
        let mut atoms = vec![Atom::Id; n];
        atoms[left - 1] = Atom::Cap;
        atoms.remove(left);
        w = w
            .then(&Word::new(n, vec![Slice(atoms)]).unwrap())
            .unwrap();
        // The remainder sees the two arc vertices deleted and the vertices
        // between left and right shifted one place outward.
        let relabel = |v: &Vertex| -> Option<Vertex> {
            match v.row {
                Row::Top => Some(*v),
                Row::Bottom => {
                    let i = v.index;
                    if i == left || i == right {
                        None
                    } else if i < left {
                        Some(Vertex::bottom(i))
                    } else if i < right {
                        Some(Vertex::bottom(i - 1))
                    } else {
                        Some(Vertex::bottom(i - 2))
                    }
                }
            }
        };
        let blocks: Vec<Vec<Vertex>> = current
            .blocks()
            .iter()
            .filter_map(|b| {
                let nb: Vec<Vertex> = b.iter().filter_map(&relabel).collect();
                if b.len() == 2 && b[0].is_bottom() && b[1].is_bottom() && nb.is_empty() {
                    None
                } else {
                    Some(nb)
                }
            })
            .filter(|b| !b.is_empty())
            .collect();
        current = Diagram::from_canonical_blocks(n - 2, current.top(), blocks);
    }
}

/// For diagrams whose non-singleton part is planar, the peeled arcs never
/// need crossings, so the same routine yields Temperley-Lieb words.
fn temperley_lieb_word(d: &Diagram) -> Word {
    debug_assert!(d.is_family(Family::TemperleyLieb));
    let w = brauer_word(d);
    debug_assert!(w
        .slices()
        .iter()
        .all(|s| s.0.iter().all(|a| !matches!(a, Atom::Cross))));
    w
}

/// Synthesizes a generator word for `d` in the given category; evaluation
/// returns exactly the diagram with coefficient 1.
pub fn synthesize_word(d: &Diagram, category: CategoryName) -> Result<Word> {
    let family = category.family();
    if !d.is_family(family) {
        return Err(Error::FamilyMismatch {
            expected: family.to_string(),
            diagram: d.to_string(),
        });
    }
    let w = match category {
        CategoryName::PlanarRook => {
            Word::new(d.bottom(), vec![planar_rook_slice(d)]).expect("slice arity")
        }
        CategoryName::SymmetricGroup => Word::new(
            d.bottom(),
            permutation_slices(&permutation_targets(d)),
        )
        .expect("swap slices chain"),
        CategoryName::Rook => {
            let m = crate::matrix::to_matrix(d)?;
            let (s, p) = m.factor(FactorMode::SP);
            let p_word = Word::new(
                d.bottom(),
                vec![planar_rook_slice(&crate::matrix::from_matrix(&p))],
            )
            .expect("slice arity");
            let s_diag = crate::matrix::from_matrix(&s);
            let s_word = Word::new(
                s_diag.bottom(),
                permutation_slices(&permutation_targets(&s_diag)),
            )
            .expect("swap slices chain");
            p_word.then(&s_word).expect("factor arities chain")
        }
        CategoryName::Brauer => brauer_word(d),
        CategoryName::RookBrauer => {
            let (b, p) = decompose_rook_brauer(d, RookBrauerMode::Bp)?;
            let p_word =
                Word::new(d.bottom(), vec![planar_rook_slice(&p)]).expect("slice arity");
            p_word.then(&brauer_word(&b)).expect("factor arities chain")
        }
        CategoryName::TemperleyLieb => temperley_lieb_word(d),
        CategoryName::Motzkin => {
            let f = decompose_skeleton(d);
            let lower = Word::new(d.bottom(), vec![planar_rook_slice(&f.lower)])
                .expect("slice arity");
            let upper = Word::new(f.core.top(), vec![planar_rook_slice(&f.upper)])
                .expect("slice arity");
            lower
                .then(&temperley_lieb_word(&f.core))
                .and_then(|w| w.then(&upper))
                .expect("factor arities chain")
        }
        CategoryName::Partition => partition_word(d),
    };
    let w = drop_identity_slices(w);
    debug_assert_eq!(w.domain(), d.bottom());
    debug_assert_eq!(w.codomain(), d.top());
    Ok(w)
}

/// Slices made of identity strands only contribute nothing; dropping them
/// keeps arities intact and, in particular, sends identity diagrams to the
/// empty word.
fn drop_identity_slices(w: Word) -> Word {
    let slices: Vec<Slice> = w
        .slices()
        .iter()
        .filter(|s| s.0.iter().any(|a| !matches!(a, Atom::Id)))
        .cloned()
        .collect();
    Word::new(w.domain(), slices).expect("identity slices preserve the chain")
}

/// Word for an arbitrary partition diagram: sort the bottom row by block,
/// merge each group to one strand, delete bottom-only blocks, create
/// top-only blocks, split every survivor into one strand per top vertex,
/// and route the copies to their top positions.
fn partition_word(d: &Diagram) -> Word {
    let k = d.bottom();
    // Blocks that touch the bottom row, in order of their minimal bottom
    // vertex; `group[i]` is the rank of bottom vertex i+1's block.
    let mut bottom_blocks: Vec<(usize, &Vec<Vertex>)> = d
        .blocks()
        .iter()
        .filter(|b| b[0].is_bottom())
        .map(|b| (b[0].index, b))
        .collect();
    bottom_blocks.sort_by_key(|&(min, _)| min);
    let rank_of = |i: usize| -> usize {
        bottom_blocks
            .iter()
            .position(|(_, b)| b.iter().any(|v| v.is_bottom() && v.index == i))
            .expect("bottom vertex belongs to a bottom block")
    };

    // Stage 1: group the bottom row by block rank, stable within a group.
    let mut order: Vec<usize> = (1..=k).collect();
    order.sort_by_key(|&i| (rank_of(i), i));
    let mut targets = vec![0; k];
    for (slot, &i) in order.iter().enumerate() {
        targets[i - 1] = slot + 1;
    }
    let mut w = Word::new(k, permutation_slices(&targets)).expect("sort slices chain");

    // Stage 2: merge each group down to a single strand.
    let group_sizes: Vec<usize> = bottom_blocks
        .iter()
        .map(|(_, b)| b.iter().filter(|v| v.is_bottom()).count())
        .collect();
    let mut layout: Vec<usize> = Vec::new();
    for (g, &size) in group_sizes.iter().enumerate() {
        layout.extend(std::iter::repeat_n(g, size));
    }
    while let Some(pos) = layout.windows(2).position(|p| p[0] == p[1]) {
        let mut atoms = vec![Atom::Id; layout.len()];
        atoms[pos] = Atom::Mu;
        atoms.remove(pos + 1);
        w = w
            .then(&Word::new(layout.len(), vec![Slice(atoms)]).unwrap())
            .unwrap();
        layout.remove(pos);
    }

    // Stage 3: delete the strands of blocks with no top vertex.
    let tops_of_group: Vec<Vec<usize>> = bottom_blocks
        .iter()
        .map(|(_, b)| {
            b.iter()
                .filter(|v| v.is_top())
                .map(|v| v.index)
                .collect()
        })
        .collect();
    let mut atoms = Vec::new();
    let mut survivors: Vec<usize> = Vec::new();
    for &g in &layout {
        if tops_of_group[g].is_empty() {
            atoms.push(Atom::Eps);
        } else {
            atoms.push(Atom::Id);
            survivors.push(g);
        }
    }
    if atoms.iter().any(|a| matches!(a, Atom::Eps)) {
        w = w
            .then(&Word::new(layout.len(), vec![Slice(atoms)]).unwrap())
            .unwrap();
    }

    // Stage 4: create one strand per top-only block, appended on the right.
    let top_only: Vec<Vec<usize>> = d
        .blocks()
        .iter()
        .filter(|b| b[0].is_top())
        .map(|b| b.iter().map(|v| v.index).collect())
        .collect();
    if !top_only.is_empty() {
        let mut atoms = vec![Atom::Id; survivors.len()];
        atoms.extend(std::iter::repeat_n(Atom::Eta, top_only.len()));
        w = w
            .then(&Word::new(survivors.len(), vec![Slice(atoms)]).unwrap())
            .unwrap();
    }

    // Stage 5: split every strand into one copy per top vertex of its block.
    let mut strand_tops: Vec<Vec<usize>> = survivors
        .iter()
        .map(|&g| tops_of_group[g].clone())
        .collect();
    strand_tops.extend(top_only);
    let mut copies: Vec<usize> = vec![1; strand_tops.len()];
    while let Some(slot) = (0..strand_tops.len()).find(|&i| copies[i] < strand_tops[i].len()) {
        let width: usize = copies.iter().sum();
        let offset: usize = copies[..slot].iter().sum();
        let mut atoms = vec![Atom::Id; width];
        atoms[offset] = Atom::Delta;
        w = w
            .then(&Word::new(width, vec![Slice(atoms)]).unwrap())
            .unwrap();
        copies[slot] += 1;
    }

    // Stage 6: route every copy to its top position.
    let mut final_targets = Vec::new();
    for tops in &strand_tops {
        final_targets.extend(tops.iter().copied());
    }
    let route = Word::new(final_targets.len(), permutation_slices(&final_targets))
        .expect("routing slices chain");
    w.then(&route).expect("routing arity")
}
