//! Finite magmas given by their Cayley table.

use std::fmt;

use crate::error::{Error, Result};

/// Index of an element in a magma of order `n`, always in `[0, n)` for the
/// magma it was validated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u32);

impl ElementId {
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    fn from(index: usize) -> Self {
        ElementId::new(index)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite groupoid: order `n` plus an `n × n` multiplication table.
///
/// No axioms are assumed; commutativity, the Moufang identities and so on are
/// checked properties (see [`crate::identity`]). Values are immutable once
/// built, so they can be shared freely between threads.
///
/// Ordering compares by order first, then lexicographically by the row-major
/// table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Magma {
    order: usize,
    table: Vec<u32>,
}

impl Magma {
    /// Validates a row-major table of `order²` entries.
    pub fn new(order: usize, entries: &[usize]) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMagma);
        }
        let expected = order * order;
        if entries.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                actual: entries.len(),
            });
        }
        if let Some((k, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::EntryOutOfRange {
                row: k / order,
                col: k % order,
                value,
                order,
            });
        }
        Ok(Magma {
            order,
            table: entries.iter().map(|&v| v as u32).collect(),
        })
    }

    /// Builds a table by evaluating `f` on every pair of indices.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Magma::new(order, &entries)
    }

    pub(crate) fn from_raw(order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(table.iter().all(|&v| (v as usize) < order));
        Magma { order, table }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Table lookup `a·b`.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.table[a.index() * self.order + b.index()])
    }

    /// Index-level product, the hot path for the scanning algorithms.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn element(&self, index: usize) -> Result<ElementId> {
        if index < self.order {
            Ok(ElementId::new(index))
        } else {
            Err(Error::InvalidElement {
                index,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId::new)
    }

    /// Row-major table entries.
    pub fn entries(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_idempotent_element(&self, a: ElementId) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&a| self.is_idempotent_element(a))
            .collect()
    }

    /// `x₁·(x₂·(…·(x_k·a)…))`: the translation word applied to `a`.
    pub fn apply_word(&self, word: &TranslationWord, a: ElementId) -> ElementId {
        word.letters
            .iter()
            .rev()
            .fold(a, |acc, &x| self.mul(x, acc))
    }

    /// Componentwise product; element `(i, j)` is encoded as `i·n₂ + j`.
    pub fn direct_product(&self, other: &Magma) -> Magma {
        let n2 = other.order;
        let order = self.order * n2;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (xi, xj) = (x / n2, x % n2);
            for y in 0..order {
                let (yi, yj) = (y / n2, y % n2);
                table.push((self.op(xi, yi) * n2 + other.op(xj, yj)) as u32);
            }
        }
        Magma::from_raw(order, table)
    }

    /// Induced magma on a multiplicatively closed subset.
    ///
    /// Elements are renumbered in increasing order of their original index;
    /// the returned vector maps new indices back to the originals.
    pub fn submagma(&self, subset: &[ElementId]) -> Result<(Magma, Vec<ElementId>)> {
        let mut members: Vec<ElementId> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(bad) = members.iter().find(|m| m.index() >= self.order) {
            return Err(Error::InvalidElement {
                index: bad.index(),
                order: self.order,
            });
        }
        let mut position = vec![u32::MAX; self.order];
        for (k, m) in members.iter().enumerate() {
            position[m.index()] = k as u32;
        }
        let order = members.len();
        let mut table = Vec::with_capacity(order * order);
        for &a in &members {
            for &b in &members {
                let p = position[self.mul(a, b).index()];
                if p == u32::MAX {
                    return Err(Error::NotClosed { a, b });
                }
                table.push(p);
            }
        }
        Ok((Magma::from_raw(order, table), members))
    }
}

/// A composite of left translations `L_{x₁} ∘ … ∘ L_{x_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TranslationWord {
    letters: Vec<ElementId>,
}

impl TranslationWord {
    pub fn new(letters: Vec<ElementId>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidParameter(
                "translation word needs at least one letter".into(),
            ));
        }
        Ok(TranslationWord { letters })
    }

    /// Validates every letter against `magma`.
    pub fn in_magma(magma: &Magma, letters: Vec<ElementId>) -> Result<Self> {
        for l in &letters {
            magma.element(l.index())?;
        }
        TranslationWord::new(letters)
    }

    pub fn letters(&self) -> &[ElementId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn construction_errors() {
        assert!(Magma::new(1, &[0]).is_ok());
        assert!(Magma::new(2, &[0, 0, 0, 1]).is_ok());
        assert_eq!(
            Magma::new(2, &[0, 0, 0, 2]),
            Err(Error::EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                order: 2
            })
        );
        assert_eq!(
            Magma::new(2, &[0, 0, 0]),
            Err(Error::SizeMismatch {
                expected: 4,
                actual: 3
            })
        );
        assert_eq!(Magma::new(0, &[]), Err(Error::EmptyMagma));
    }

    #[test]
    fn lookup() {
        let chain = Magma::new(2, &[0, 0, 0, 1]).unwrap();
        assert_eq!(chain.mul(e(0), e(1)), e(0));
        let one = Magma::new(1, &[0]).unwrap();
        assert_eq!(one.mul(e(0), e(0)), e(0));
    }

    #[test]
    fn translation_words() {
        let chain = Magma::new(2, &[0, 0, 0, 1]).unwrap();
        let w = TranslationWord::new(vec![e(1), e(1)]).unwrap();
        assert_eq!(chain.apply_word(&w, e(0)), e(0));
        let single = TranslationWord::new(vec![e(0)]).unwrap();
        assert_eq!(chain.apply_word(&single, e(1)), chain.mul(e(0), e(1)));
        assert!(TranslationWord::new(vec![]).is_err());
        assert!(TranslationWord::in_magma(&chain, vec![e(2)]).is_err());
    }

    #[test]
    fn product_with_trivial_factor_is_unchanged() {
        let one = Magma::new(1, &[0]).unwrap();
        let z2 = Magma::new(2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(one.direct_product(&z2), z2);
    }

    #[test]
    fn klein_four_from_z2_squared() {
        let z2 = Magma::new(2, &[0, 1, 1, 0]).unwrap();
        let v4 = z2.direct_product(&z2);
        assert_eq!(v4.order(), 4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(v4.op(a, b), a ^ b);
            }
        }
    }

    #[test]
    fn submagmas() {
        let chain = Magma::new(2, &[0, 0, 0, 1]).unwrap();
        let (whole, map) = chain.submagma(&[e(1), e(0)]).unwrap();
        assert_eq!(whole, chain);
        assert_eq!(map, vec![e(0), e(1)]);
        let (top, map) = chain.submagma(&[e(1)]).unwrap();
        assert_eq!(top, Magma::new(1, &[0]).unwrap());
        assert_eq!(map, vec![e(1)]);

        let z2 = Magma::new(2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(
            z2.submagma(&[e(1)]),
            Err(Error::NotClosed { a: e(1), b: e(1) })
        );
        assert_eq!(z2.submagma(&[]), Err(Error::EmptySubset));
    }
}
