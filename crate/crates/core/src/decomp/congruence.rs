use super::partition::Partition;
use crate::error::{Error, Result};
use crate::magma::{ElementId, Magma};

/// Which side the multiplier `c` stands on in a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `c·a` and `c·b` fall in different classes.
    Left,
    /// `a·c` and `b·c` fall in different classes.
    Right,
}

/// `a` and `b` share a class but their products with `c` do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceViolation {
    pub c: ElementId,
    pub a: ElementId,
    pub b: ElementId,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub is_equivalence: bool,
    pub is_congruence: bool,
    pub violation: Option<CongruenceViolation>,
}

/// Scans pairs `a < b` of the same class in lexicographic order and, for each,
/// every `c` ascending (left product checked before right); the first
/// incompatible product is reported.
pub fn verify_congruence(magma: &Magma, partition: &Partition) -> Result<CongruenceReport> {
    if partition.len() != magma.order() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} elements, magma has {}",
            partition.len(),
            magma.order()
        )));
    }
    let n = magma.order();
    for a in magma.elements() {
        for b in (a.index() + 1..n).map(ElementId::new) {
            if !partition.same_class(a, b) {
                continue;
            }
            for c in magma.elements() {
                let side = if !partition.same_class(magma.mul(c, a), magma.mul(c, b)) {
                    Some(Side::Left)
                } else if !partition.same_class(magma.mul(a, c), magma.mul(b, c)) {
                    Some(Side::Right)
                } else {
                    None
                };
                if let Some(side) = side {
                    return Ok(CongruenceReport {
                        is_equivalence: true,
                        is_congruence: false,
                        violation: Some(CongruenceViolation { c, a, b, side }),
                    });
                }
            }
        }
    }
    Ok(CongruenceReport {
        is_equivalence: true,
        is_congruence: true,
        violation: None,
    })
}

/// `M/P` on class indices, `[a]·[b] = [a·b]`. Well-definedness is checked on
/// every pair of elements while the table is filled.
pub fn quotient(magma: &Magma, partition: &Partition) -> Result<Magma> {
    if partition.len() != magma.order() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} elements, magma has {}",
            partition.len(),
            magma.order()
        )));
    }
    let k = partition.class_count();
    let mut table = vec![u32::MAX; k * k];
    for a in magma.elements() {
        for b in magma.elements() {
            let (ca, cb) = (partition.class_of(a), partition.class_of(b));
            let cab = partition.class_of(magma.mul(a, b)) as u32;
            let slot = &mut table[ca * k + cb];
            if *slot == u32::MAX {
                *slot = cab;
            } else if *slot != cab {
                return Err(Error::NotACongruence(format!(
                    "class of {a}·{b} is {cab}, expected {slot}"
                )));
            }
        }
    }
    Ok(Magma::from_raw(k, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::sigma_partition;
    use crate::generators::{jordan_left_zero, JordanParams};

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn trivial_partitions_are_congruences() {
        let z3 = Magma::from_fn(3, |i, j| (i + j) % 3).unwrap();
        for p in [Partition::identity(3), Partition::universal(3)] {
            let r = verify_congruence(&z3, &p).unwrap();
            assert!(r.is_congruence && r.is_equivalence && r.violation.is_none());
        }
        assert_eq!(
            quotient(&z3, &Partition::universal(3)).unwrap(),
            Magma::new(1, &[0]).unwrap()
        );
        assert_eq!(quotient(&z3, &Partition::identity(3)).unwrap(), z3);
    }

    #[test]
    fn z3_violation() {
        let z3 = Magma::from_fn(3, |i, j| (i + j) % 3).unwrap();
        let p = Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap();
        let r = verify_congruence(&z3, &p).unwrap();
        assert!(!r.is_congruence);
        assert_eq!(
            r.violation,
            Some(CongruenceViolation {
                c: e(1),
                a: e(0),
                b: e(1),
                side: Side::Left
            })
        );
        assert!(matches!(quotient(&z3, &p), Err(Error::NotACongruence(_))));
    }

    #[test]
    fn jordan_quotient_is_two_chain() {
        let (j, _) = jordan_left_zero(JordanParams::new(3, 2).unwrap()).unwrap();
        let p = sigma_partition(&j).unwrap();
        assert_eq!(quotient(&j, &p).unwrap().entries(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn size_mismatch() {
        let z3 = Magma::from_fn(3, |i, j| (i + j) % 3).unwrap();
        assert!(verify_congruence(&z3, &Partition::identity(2)).is_err());
        assert!(quotient(&z3, &Partition::identity(4)).is_err());
    }
}
