//! Syntactic morphisms: words in the generators of a presented category.
//!
//! A word is a stack of slices, applied bottom to top; each slice is a
//! horizontal row of generator atoms and identity strands. Evaluation sends a
//! word to the morphism it denotes, which for these categories is always a
//! single diagram times a power of t.

use std::fmt;

use crate::category::Involution;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::scalar::Scalar;

/// A generator atom with fixed arity, or an identity strand.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    /// Identity strand, `1 -> 1`.
    Id,
    /// Merge two strands, `2 -> 1`.
    Mu,
    /// Split a strand in two, `1 -> 2`.
    Delta,
    /// Cross two strands, `2 -> 2`.
    Cross,
    /// Create a strand, `0 -> 1`.
    Eta,
    /// Delete a strand, `1 -> 0`.
    Eps,
    /// Cap: join two strands from above, `2 -> 0`.
    Cap,
    /// Cup: a new joined pair from below, `0 -> 2`.
    Cup,
}

impl Atom {
    pub const ALL: [Atom; 8] = [
        Atom::Id,
        Atom::Mu,
        Atom::Delta,
        Atom::Cross,
        Atom::Eta,
        Atom::Eps,
        Atom::Cap,
        Atom::Cup,
    ];

    pub fn domain(&self) -> usize {
        match self {
            Atom::Id => 1,
            Atom::Mu => 2,
            Atom::Delta => 1,
            Atom::Cross => 2,
            Atom::Eta => 0,
            Atom::Eps => 1,
            Atom::Cap => 2,
            Atom::Cup => 0,
        }
    }

    pub fn codomain(&self) -> usize {
        match self {
            Atom::Id => 1,
            Atom::Mu => 1,
            Atom::Delta => 2,
            Atom::Cross => 2,
            Atom::Eta => 1,
            Atom::Eps => 0,
            Atom::Cap => 0,
            Atom::Cup => 2,
        }
    }

    /// The diagram the atom denotes.
    pub fn diagram(&self) -> Diagram {
        use crate::diagram::Vertex as V;
        let blocks = |k, l, blocks: Vec<Vec<V>>| Diagram::new(k, l, blocks).unwrap();
        match self {
            Atom::Id => Diagram::identity(1),
            Atom::Mu => blocks(2, 1, vec![vec![V::bottom(1), V::bottom(2), V::top(1)]]),
            Atom::Delta => blocks(1, 2, vec![vec![V::bottom(1), V::top(1), V::top(2)]]),
            Atom::Cross => blocks(
                2,
                2,
                vec![vec![V::bottom(1), V::top(2)], vec![V::bottom(2), V::top(1)]],
            ),
            Atom::Eta => blocks(0, 1, vec![vec![V::top(1)]]),
            Atom::Eps => blocks(1, 0, vec![vec![V::bottom(1)]]),
            Atom::Cap => blocks(2, 0, vec![vec![V::bottom(1), V::bottom(2)]]),
            Atom::Cup => blocks(0, 2, vec![vec![V::top(1), V::top(2)]]),
        }
    }

    /// The atom as a single-term morphism.
    pub fn morphism(&self) -> Morphism {
        Morphism::single(self.diagram())
    }

    /// What the atom becomes under a reflection: `Star` swaps each atom with
    /// its vertical dual, `Sharp` mirrors atoms in place.
    pub fn involute(&self, mode: Involution) -> Atom {
        match mode {
            Involution::Star => match self {
                Atom::Mu => Atom::Delta,
                Atom::Delta => Atom::Mu,
                Atom::Eta => Atom::Eps,
                Atom::Eps => Atom::Eta,
                Atom::Cap => Atom::Cup,
                Atom::Cup => Atom::Cap,
                fixed => *fixed,
            },
            Involution::Sharp => *self,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            Atom::Id => "|",
            Atom::Mu => "mu",
            Atom::Delta => "delta",
            Atom::Cross => "s",
            Atom::Eta => "eta",
            Atom::Eps => "eps",
            Atom::Cap => "d",
            Atom::Cup => "c",
        }
    }

    pub fn from_token(tok: &str) -> Option<Atom> {
        Atom::ALL.iter().copied().find(|a| a.token() == tok)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A horizontal row of atoms. The empty slice is the identity of the unit
/// object `0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Slice(pub Vec<Atom>);

impl Slice {
    pub fn domain(&self) -> usize {
        self.0.iter().map(Atom::domain).sum()
    }

    pub fn codomain(&self) -> usize {
        self.0.iter().map(Atom::codomain).sum()
    }

    /// The tensor product of the atoms, left to right.
    pub fn diagram(&self) -> Diagram {
        self.0
            .iter()
            .fold(Diagram::empty(), |acc, a| acc.tensor(&a.diagram()))
    }

    fn involute(&self, mode: Involution) -> Slice {
        match mode {
            Involution::Star => Slice(self.0.iter().map(|a| a.involute(mode)).collect()),
            Involution::Sharp => Slice(self.0.iter().rev().map(|a| a.involute(mode)).collect()),
        }
    }
}

/// A chain of slices applied bottom to top. The empty word is the identity
/// on its declared object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    domain: usize,
    slices: Vec<Slice>,
}

impl Word {
    /// The empty word: the identity on object `k`.
    pub fn identity(k: usize) -> Word {
        Word {
            domain: k,
            slices: Vec::new(),
        }
    }

    /// Builds a word after checking that consecutive slice arities chain.
    pub fn new(domain: usize, slices: Vec<Slice>) -> Result<Word> {
        let mut current = domain;
        for (i, s) in slices.iter().enumerate() {
            if s.domain() != current {
                return Err(Error::ArityMismatch(format!(
                    "slice {} expects {} strands but receives {current}",
                    i + 1,
                    s.domain()
                )));
            }
            current = s.codomain();
        }
        Ok(Word { domain, slices })
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.slices.last().map(Slice::codomain).unwrap_or(self.domain)
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// Evaluates to `(alpha, diagram)`: the word denotes `t^alpha * diagram`.
    pub fn evaluate_parts(&self) -> (usize, Diagram) {
        let mut alpha = 0;
        let mut diagram = Diagram::identity(self.domain);
        for slice in &self.slices {
            let c = slice
                .diagram()
                .compose(&diagram)
                .expect("arities were checked at construction");
            alpha += c.alpha;
            diagram = c.diagram;
        }
        (alpha, diagram)
    }

    /// Evaluates the word to the morphism it denotes.
    pub fn evaluate(&self) -> Morphism {
        let (alpha, diagram) = self.evaluate_parts();
        Morphism::with_coeff(Scalar::t_power(alpha), diagram)
    }

    /// Star reverses the stack and dualizes every atom; Sharp mirrors every
    /// slice in place. Evaluation commutes with the reflections.
    pub fn involute(&self, mode: Involution) -> Word {
        match mode {
            Involution::Star => Word {
                domain: self.codomain(),
                slices: self.slices.iter().rev().map(|s| s.involute(mode)).collect(),
            },
            Involution::Sharp => Word {
                domain: self.domain,
                slices: self.slices.iter().map(|s| s.involute(mode)).collect(),
            },
        }
    }

    /// Stacks `upper` on top of this word (vertical composition).
    pub fn then(&self, upper: &Word) -> Result<Word> {
        if upper.domain() != self.codomain() {
            return Err(Error::ArityMismatch(format!(
                "cannot stack a word on {} strands onto one producing {}",
                upper.domain(),
                self.codomain()
            )));
        }
        let mut slices = self.slices.clone();
        slices.extend(upper.slices.iter().cloned());
        Ok(Word {
            domain: self.domain,
            slices,
        })
    }

    /// Horizontal composition: pads the shorter word with identity slices on
    /// top, then joins the slices side by side.
    pub fn tensor(&self, right: &Word) -> Word {
        let height = self.slices.len().max(right.slices.len());
        let pad = |w: &Word| -> Vec<Slice> {
            let mut out = w.slices.clone();
            let top = vec![Atom::Id; w.codomain()];
            while out.len() < height {
                out.push(Slice(top.clone()));
            }
            out
        };
        let left_slices = pad(self);
        let right_slices = pad(right);
        let slices = left_slices
            .into_iter()
            .zip(right_slices)
            .map(|(mut l, r)| {
                l.0.extend(r.0);
                l
            })
            .collect();
        Word {
            domain: self.domain + right.domain,
            slices,
        }
    }
}

impl fmt::Display for Word {
    /// Text form: the domain, a colon, then slices separated by `;` with
    /// atoms separated by spaces, e.g. `2 : | eta | ; mu |`. A slice with no
    /// atoms (the identity on the unit object) prints as `nil`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :", self.domain)?;
        for (i, slice) in self.slices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ;")?;
            }
            if slice.0.is_empty() {
                f.write_str(" nil")?;
            }
            for atom in &slice.0 {
                write!(f, " {atom}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_diagram;

    fn d(s: &str) -> Diagram {
        parse_diagram(s).unwrap()
    }

    #[test]
    fn atoms_have_their_stated_diagrams() {
        assert_eq!(Atom::Eta.diagram(), d("0 -> 1 ; {1'}"));
        assert_eq!(Atom::Cap.diagram(), d("2 -> 0 ; {1,2}"));
        assert_eq!(Atom::Id.diagram(), Diagram::identity(1));
        assert_eq!(Atom::Mu.diagram(), d("2 -> 1 ; {1,2,1'}"));
        assert_eq!(Atom::Cross.diagram(), d("2 -> 2 ; {1,2'},{2,1'}"));
        for a in Atom::ALL {
            assert_eq!(a.diagram().bottom(), a.domain());
            assert_eq!(a.diagram().top(), a.codomain());
        }
    }

    #[test]
    fn closed_loop_evaluates_to_t() {
        let w = Word::new(0, vec![Slice(vec![Atom::Eta]), Slice(vec![Atom::Eps])]).unwrap();
        let (alpha, diagram) = w.evaluate_parts();
        assert_eq!(alpha, 1);
        assert_eq!(diagram, Diagram::empty());
        assert_eq!(
            w.evaluate(),
            Morphism::with_coeff(Scalar::t_power(1), Diagram::empty())
        );
    }

    #[test]
    fn single_slice_builds_the_planar_rook_example() {
        use Atom::{Eps, Eta, Id};
        let w = Word::new(
            5,
            vec![Slice(vec![Id, Eta, Eta, Eta, Id, Eta, Eps, Id, Eps])],
        )
        .unwrap();
        let (alpha, diagram) = w.evaluate_parts();
        assert_eq!(alpha, 0);
        assert_eq!(
            diagram,
            d("5 -> 7 ; {1,1'},{2,5'},{4,7'},{3},{5},{2'},{3'},{4'},{6'}")
        );
    }

    #[test]
    fn cap_passes_through_the_crossing() {
        use Atom::{Cap, Cross, Id};
        let lhs = Word::new(
            3,
            vec![
                Slice(vec![Id, Cross]),
                Slice(vec![Cross, Id]),
                Slice(vec![Id, Cap]),
            ],
        )
        .unwrap();
        let rhs = Word::new(3, vec![Slice(vec![Cap, Id])]).unwrap();
        assert_eq!(lhs.evaluate(), rhs.evaluate());
        assert_eq!(lhs.evaluate_parts().1, d("3 -> 1 ; {1,2},{3,1'}"));
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let err = Word::new(1, vec![Slice(vec![Atom::Mu])]).unwrap_err();
        assert!(matches!(err, Error::ArityMismatch(_)));
        let err = Word::new(
            0,
            vec![Slice(vec![Atom::Eta]), Slice(vec![Atom::Cap])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ArityMismatch(_)));
    }

    #[test]
    fn involutions_on_words() {
        let w = Word::new(0, vec![Slice(vec![Atom::Eta])]).unwrap();
        let star = w.involute(Involution::Star);
        assert_eq!(star, Word::new(1, vec![Slice(vec![Atom::Eps])]).unwrap());

        let slice = Word::new(1, vec![Slice(vec![Atom::Id, Atom::Eta])]).unwrap();
        let sharp = slice.involute(Involution::Sharp);
        assert_eq!(
            sharp,
            Word::new(1, vec![Slice(vec![Atom::Eta, Atom::Id])]).unwrap()
        );
    }

    #[test]
    fn evaluation_commutes_with_involutions() {
        use Atom::{Cross, Delta, Eta, Id, Mu};
        let w = Word::new(
            2,
            vec![
                Slice(vec![Id, Delta]),
                Slice(vec![Mu, Id]),
                Slice(vec![Cross]),
                Slice(vec![Id, Eta, Id]),
            ],
        )
        .unwrap();
        for mode in [Involution::Star, Involution::Sharp] {
            assert_eq!(
                w.involute(mode).evaluate(),
                w.evaluate().involute(mode),
                "involution {mode:?}"
            );
        }
    }

    #[test]
    fn empty_word_is_the_identity() {
        let w = Word::identity(3);
        let (alpha, diagram) = w.evaluate_parts();
        assert_eq!(alpha, 0);
        assert_eq!(diagram, Diagram::identity(3));
        assert_eq!(w.to_string(), "3 :");
    }

    #[test]
    fn stacking_and_side_by_side_match_morphism_operations() {
        let w1 = Word::new(0, vec![Slice(vec![Atom::Eta])]).unwrap();
        let w2 = Word::new(1, vec![Slice(vec![Atom::Delta])]).unwrap();
        let stacked = w1.then(&w2).unwrap();
        assert_eq!(
            stacked.evaluate(),
            w2.evaluate().compose(&w1.evaluate()).unwrap()
        );
        let side = w1.tensor(&w2);
        assert_eq!(side.evaluate(), w1.evaluate().tensor(&w2.evaluate()));
    }
}
