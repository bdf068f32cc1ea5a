//! Formal linear combinations of diagrams of a common type over `Z[t]`, with
//! the bilinear extensions of composition, tensor product, and the
//! reflections.

use std::collections::BTreeMap;

use crate::category::Involution;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element of Hom(source, target): a finite formal sum of diagrams of type
/// `source -> target` with `Scalar` coefficients. Zero coefficients are never
/// stored; term order is the canonical diagram order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Morphism {
    source: usize,
    target: usize,
    terms: BTreeMap<Diagram, Scalar>,
}

impl Morphism {
    pub fn zero(source: usize, target: usize) -> Self {
        Morphism {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    /// A single diagram with coefficient 1.
    pub fn single(diagram: Diagram) -> Self {
        Morphism::with_coeff(Scalar::one(), diagram)
    }

    pub fn with_coeff(coeff: Scalar, diagram: Diagram) -> Self {
        let mut m = Morphism::zero(diagram.bottom(), diagram.top());
        m.add_term(&coeff, diagram);
        m
    }

    pub fn identity(k: usize) -> Self {
        Morphism::single(Diagram::identity(k))
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of(&self, d: &Diagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, coeff: &Scalar, diagram: Diagram) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(diagram.bottom(), self.source);
        debug_assert_eq!(diagram.top(), self.target);
        let entry = self
            .terms
            .entry(diagram.clone())
            .or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&diagram);
        }
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::TypeMismatch {
                expected: self.source,
                found: other.source,
            });
        }
        let mut out = self.clone();
        for (d, s) in other.terms() {
            out.add_term(s, d.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let mut out = Morphism::zero(self.source, self.target);
        for (d, s) in self.terms() {
            out.add_term(&(c * s), d.clone());
        }
        out
    }

    /// Bilinear extension of diagram composition: each pair of terms
    /// contributes `t^alpha` times the contracted diagram.
    pub fn compose(&self, lower: &Morphism) -> Result<Morphism> {
        if self.source != lower.target {
            return Err(Error::TypeMismatch {
                expected: self.source,
                found: lower.target,
            });
        }
        let mut out = Morphism::zero(lower.source, self.target);
        for (d_up, s_up) in self.terms() {
            for (d_lo, s_lo) in lower.terms() {
                let c = d_up.compose(d_lo)?;
                let coeff = &(s_up * s_lo) * &Scalar::t_power(c.alpha);
                out.add_term(&coeff, c.diagram);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the tensor product, `self` on the left.
    pub fn tensor(&self, right: &Morphism) -> Morphism {
        let mut out = Morphism::zero(
            self.source + right.source,
            self.target + right.target,
        );
        for (d1, s1) in self.terms() {
            for (d2, s2) in right.terms() {
                out.add_term(&(s1 * s2), d1.tensor(d2));
            }
        }
        out
    }

    /// Term-wise reflection; coefficients are untouched.
    pub fn involute(&self, mode: Involution) -> Morphism {
        let (source, target) = match mode {
            Involution::Star => (self.target, self.source),
            Involution::Sharp => (self.source, self.target),
        };
        let mut out = Morphism::zero(source, target);
        for (d, s) in self.terms() {
            out.add_term(s, d.involute(mode));
        }
        out
    }

    /// Substitutes an integer for `t` in every coefficient.
    pub fn specialize(&self, t: i64) -> Morphism {
        let mut out = Morphism::zero(self.source, self.target);
        for (d, s) in self.terms() {
            out.add_term(&Scalar::constant(s.eval_at(t)), d.clone());
        }
        out
    }
}
