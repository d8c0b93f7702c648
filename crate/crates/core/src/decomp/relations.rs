use std::collections::HashMap;

use rayon::prelude::*;

use super::ideal::principal_ideal;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::magma::{ElementId, Magma};
use crate::power::power_orbit;

/// Square boolean matrix stored as packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Self {
        let words = n.div_ceil(64);
        let bits = rows.into_iter().flatten().collect();
        BitMatrix { n, words, bits }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    fn transpose(&self) -> Self {
        let mut rows = vec![vec![0u64; self.words]; self.n];
        for (a, row) in rows.iter_mut().enumerate() {
            for b in 0..self.n {
                if self.get(b, a) {
                    row[b / 64] |= 1 << (b % 64);
                }
            }
        }
        BitMatrix::from_rows(self.n, rows)
    }
}

/// The full relation `ρ` of a magma, computed once from all `n` power orbits
/// and all `n` principal ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoTable {
    rho: BitMatrix,
}

impl RhoTable {
    pub fn new(magma: &Magma) -> Self {
        let n = magma.order();
        let words = n.div_ceil(64);
        let orbits: Vec<Vec<ElementId>> = (0..n)
            .into_par_iter()
            .map(|a| power_orbit(magma, ElementId::new(a)).sequence)
            .collect();
        // column b of ρ is determined by I_b
        let columns: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|b| {
                let ideal = principal_ideal(magma, ElementId::new(b));
                let mut col = vec![0u64; words];
                for (a, orbit) in orbits.iter().enumerate() {
                    if orbit.iter().any(|&x| ideal.contains(x)) {
                        col[a / 64] |= 1 << (a % 64);
                    }
                }
                col
            })
            .collect();
        RhoTable {
            rho: BitMatrix::from_rows(n, columns).transpose(),
        }
    }

    pub fn order(&self) -> usize {
        self.rho.n
    }

    pub fn rho(&self, a: ElementId, b: ElementId) -> bool {
        self.rho.get(a.index(), b.index())
    }

    pub fn sigma(&self, a: ElementId, b: ElementId) -> bool {
        self.rho(a, b) && self.rho(b, a)
    }

    /// Lexicographically smallest `(a, b, c)` with `a ρ b`, `b ρ c` and not
    /// `a ρ c`.
    pub fn rho_transitivity_violation(&self) -> Option<(ElementId, ElementId, ElementId)> {
        let n = self.order();
        for a in 0..n {
            for b in (0..n).filter(|&b| self.rho.get(a, b)) {
                if let Some(c) = (0..n).find(|&c| self.rho.get(b, c) && !self.rho.get(a, c)) {
                    return Some((ElementId::new(a), ElementId::new(b), ElementId::new(c)));
                }
            }
        }
        None
    }

    fn sigma_matrix(&self) -> BitMatrix {
        let t = self.rho.transpose();
        let rows = (0..self.order())
            .map(|a| {
                self.rho
                    .row(a)
                    .iter()
                    .zip(t.row(a))
                    .map(|(x, y)| x & y)
                    .collect()
            })
            .collect();
        BitMatrix::from_rows(self.order(), rows)
    }

    /// Groups elements into `σ`-classes, failing with the lexicographically
    /// smallest transitivity witness when `σ` is not an equivalence.
    pub fn sigma_partition(&self) -> Result<Partition> {
        let sigma = self.sigma_matrix();
        let n = self.order();
        // σ is reflexive and symmetric by construction; it is transitive iff
        // every element's row is exactly the set of elements sharing that row
        let mut groups: HashMap<&[u64], Vec<usize>> = HashMap::new();
        for a in 0..n {
            groups.entry(sigma.row(a)).or_default().push(a);
        }
        let transitive = groups.iter().all(|(row, members)| {
            let count: u32 = row.iter().map(|w| w.count_ones()).sum();
            count as usize == members.len() && members.iter().all(|&m| sigma.get(members[0], m))
        });
        if transitive {
            let labels: Vec<&[u64]> = (0..n).map(|a| sigma.row(a)).collect();
            return Ok(Partition::from_labels(&labels));
        }
        for a in 0..n {
            for b in (0..n).filter(|&b| sigma.get(a, b)) {
                if let Some(c) = (0..n).find(|&c| sigma.get(b, c) && !sigma.get(a, c)) {
                    return Err(Error::NotAnEquivalence {
                        a: ElementId::new(a),
                        b: ElementId::new(b),
                        c: ElementId::new(c),
                    });
                }
            }
        }
        unreachable!("non-transitive relation without a witness")
    }

    /// Classes of the transitive closure of `σ`; always a partition.
    pub fn sigma_closure(&self) -> Partition {
        let sigma = self.sigma_matrix();
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = start;
            while let Some(x) = stack.pop() {
                for (y, slot) in label.iter_mut().enumerate() {
                    if *slot == usize::MAX && sigma.get(x, y) {
                        *slot = start;
                        stack.push(y);
                    }
                }
            }
        }
        Partition::from_labels(&label)
    }
}

/// `a ρ b`: some power of `a` lies in `I_b`.
pub fn rho(magma: &Magma, a: ElementId, b: ElementId) -> bool {
    let ideal = principal_ideal(magma, b);
    power_orbit(magma, a)
        .sequence
        .iter()
        .any(|&x| ideal.contains(x))
}

pub fn sigma_partition(magma: &Magma) -> Result<Partition> {
    RhoTable::new(magma).sigma_partition()
}

/// A single `σ`-class.
pub fn is_archimedean(magma: &Magma) -> Result<bool> {
    Ok(sigma_partition(magma)?.class_count() == 1)
}
