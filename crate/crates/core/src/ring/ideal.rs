use std::fmt;

use num_integer::Integer;

use super::{Residue, RingElement, RingSpec};
use crate::error::{Error, Result};

/// A finitely generated ideal together with a single canonical generator.
///
/// Every supported ring is a principal-ideal setting: over `Z` and `Q[x]` the
/// canonical generator is the normalized gcd of the generators, over `Z/m` it
/// is `gcd(generators, m)` read back as a residue. Two ideals are equal iff
/// their canonical generators are.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingSpec,
    generators: Vec<RingElement>,
    canonical: RingElement,
}

impl Ideal {
    pub fn new(generators: Vec<RingElement>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let ring = first.ring();
        if let Some(bad) = generators.iter().find(|g| g.ring() != ring) {
            return Err(Error::RingMismatch {
                expected: ring,
                found: bad.ring(),
            });
        }
        let canonical = match ring {
            RingSpec::IntegersMod(m) => {
                let g = generators
                    .iter()
                    .map(|e| e.as_residue().expect("checked ring").value())
                    .fold(m.get(), |acc, v| acc.gcd(&v));
                RingElement::Mod(Residue::new(g, m))
            }
            _ => {
                let mut acc = ring.zero();
                for g in &generators {
                    acc = acc.gcd(g)?;
                }
                acc
            }
        };
        Ok(Ideal {
            ring,
            generators,
            canonical,
        })
    }

    pub fn principal(generator: RingElement) -> Self {
        Self::new(vec![generator]).expect("one generator, one ring")
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    pub fn canonical(&self) -> &RingElement {
        &self.canonical
    }

    /// For `Z/m`, the integer `gcd(generators, m)` in `1..=m` whose multiples form the ideal.
    fn modular_divisor(&self) -> Option<u64> {
        let m = self.ring.modulus()?;
        let c = self.canonical.as_residue()?.value();
        Some(if c == 0 { m } else { c })
    }

    pub fn is_zero(&self) -> bool {
        self.canonical.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        match self.modular_divisor() {
            Some(d) => d == 1,
            None => self.canonical.is_unit(),
        }
    }

    /// Ideal membership, decided by divisibility by the canonical generator.
    pub fn contains(&self, a: &RingElement) -> Result<bool> {
        if a.ring() != self.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: a.ring(),
            });
        }
        match self.modular_divisor() {
            Some(d) => Ok(a.as_residue().expect("checked ring").value().is_multiple_of(d)),
            None => self.canonical.divides(a),
        }
    }

    /// `r * I`, generated by the scaled generators.
    pub fn scaled(&self, r: &RingElement) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| r.try_mul(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.canonical == other.canonical
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.canonical)
    }
}
