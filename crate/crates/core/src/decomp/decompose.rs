use super::congruence::{quotient, verify_congruence};
use super::order::is_semilattice;
use super::partition::Partition;
use super::relations::{is_archimedean, RhoTable};
use crate::error::{Error, Result};
use crate::identity::{check_identity, IdentityKind};
use crate::magma::{ElementId, Magma};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Refuse inputs that are not commutative central-Moufang. When false the
    /// pipeline runs on anything and only reports which flags hold.
    pub require_hypotheses: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            require_hypotheses: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CertificationFlags {
    pub input_commutative: bool,
    pub input_moufang: bool,
    pub sigma_is_congruence: bool,
    pub quotient_is_semilattice: bool,
    pub components_archimedean: bool,
}

impl CertificationFlags {
    pub fn all(&self) -> bool {
        self.input_commutative && self.input_moufang && self.structural()
    }

    /// The three flags describing the decomposition itself, ignoring the
    /// input hypotheses.
    pub fn structural(&self) -> bool {
        self.sigma_is_congruence && self.quotient_is_semilattice && self.components_archimedean
    }
}

/// One class of the partition, materialized as a groupoid when it is closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub members: Vec<ElementId>,
    /// Induced magma, absent when the class is not multiplicatively closed.
    pub submagma: Option<Magma>,
    /// Idempotents of the component, as original element indices.
    pub idempotents: Vec<ElementId>,
    /// Archimedean as a standalone groupoid.
    pub archimedean: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub sigma: Partition,
    /// False when `σ` failed to be transitive and `sigma` holds the classes of
    /// its transitive closure instead (explorative mode only).
    pub sigma_is_equivalence: bool,
    /// `M/σ`, absent when `σ` is not a congruence.
    pub quotient: Option<Magma>,
    pub components: Vec<Component>,
    pub flags: CertificationFlags,
}

/// Splits `magma` into its `σ`-classes and certifies the result: `σ` is a
/// congruence, `M/σ` is a semilattice, and each class is Archimedean using
/// only its own elements.
///
/// Component order follows class numbering, i.e. by smallest member.
pub fn decompose(magma: &Magma, opts: DecomposeOptions) -> Result<Decomposition> {
    let commutative = check_identity(magma, IdentityKind::Commutative);
    let moufang = check_identity(magma, IdentityKind::CentralMoufang);
    if opts.require_hypotheses {
        for report in [&commutative, &moufang] {
            if !report.holds() {
                return Err(Error::HypothesisViolation(report.clone()));
            }
        }
    }
    let mut flags = CertificationFlags {
        input_commutative: commutative.holds(),
        input_moufang: moufang.holds(),
        ..Default::default()
    };

    let table = RhoTable::new(magma);
    let (sigma, sigma_is_equivalence) = match table.sigma_partition() {
        Ok(p) => (p, true),
        Err(err @ Error::NotAnEquivalence { .. }) => {
            if opts.require_hypotheses {
                return Err(err);
            }
            (table.sigma_closure(), false)
        }
        Err(err) => return Err(err),
    };

    let congruence = verify_congruence(magma, &sigma)?;
    flags.sigma_is_congruence = sigma_is_equivalence && congruence.is_congruence;
    let quotient = if congruence.is_congruence {
        Some(quotient(magma, &sigma)?)
    } else {
        None
    };
    flags.quotient_is_semilattice = quotient.as_ref().is_some_and(is_semilattice);

    let components: Vec<Component> = sigma
        .classes()
        .iter()
        .map(|members| {
            let idempotents = members
                .iter()
                .copied()
                .filter(|&a| magma.is_idempotent_element(a))
                .collect();
            let submagma = magma.submagma(members).ok().map(|(m, _)| m);
            let archimedean = submagma
                .as_ref()
                .is_some_and(|m| is_archimedean(m).unwrap_or(false));
            Component {
                members: members.clone(),
                submagma,
                idempotents,
                archimedean,
            }
        })
        .collect();
    flags.components_archimedean = components.iter().all(|c| c.archimedean);

    Ok(Decomposition {
        sigma,
        sigma_is_equivalence,
        quotient,
        components,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{chain_semilattice, jordan_left_zero, JordanParams};

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn trivial() {
        let d = decompose(&Magma::new(1, &[0]).unwrap(), Default::default()).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.quotient.unwrap().order(), 1);
        assert!(d.flags.all());
    }

    #[test]
    fn jordan_3_2() {
        let (j, _) = jordan_left_zero(JordanParams::new(3, 2).unwrap()).unwrap();
        // the Jordan groupoid fails the central Moufang identity, so only the
        // explorative run goes through
        assert!(matches!(
            decompose(&j, Default::default()),
            Err(Error::HypothesisViolation(_))
        ));
        let d = decompose(
            &j,
            DecomposeOptions {
                require_hypotheses: false,
            },
        )
        .unwrap();
        let sizes: Vec<usize> = d.components.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![3, 6]);
        assert_eq!(d.quotient.unwrap(), chain_semilattice(2).unwrap());
        assert!(d.flags.input_commutative && !d.flags.input_moufang);
        assert!(d.flags.structural());
        assert_eq!(d.components[0].idempotents, vec![e(0)]);
        // x∗x = |x|x, so every weight-1 element is idempotent
        assert_eq!(d.components[1].idempotents.len(), 3);
    }

    #[test]
    fn semilattice_decomposes_into_singletons() {
        let c4 = chain_semilattice(4).unwrap();
        let d = decompose(&c4, Default::default()).unwrap();
        assert_eq!(d.components.len(), 4);
        assert_eq!(d.quotient.unwrap(), c4);
    }

    #[test]
    fn hypotheses_enforced() {
        let bad = Magma::new(2, &[1, 1, 1, 0]).unwrap();
        match decompose(&bad, Default::default()) {
            Err(Error::HypothesisViolation(r)) => {
                assert_eq!(r.kind, IdentityKind::CentralMoufang);
                assert_eq!(r.counterexample, Some(vec![e(0), e(0), e(0)]));
            }
            other => panic!("unexpected {other:?}"),
        }
        let d = decompose(
            &bad,
            DecomposeOptions {
                require_hypotheses: false,
            },
        )
        .unwrap();
        assert!(!d.flags.input_moufang);
        assert!(!d.flags.all());
    }

    #[test]
    fn explorative_mode_on_left_zero_band() {
        let lz = Magma::new(2, &[0, 0, 1, 1]).unwrap();
        let d = decompose(
            &lz,
            DecomposeOptions {
                require_hypotheses: false,
            },
        )
        .unwrap();
        assert!(!d.flags.input_commutative);
        // a left-zero band is a rectangular band: a single Archimedean class
        assert_eq!(d.components.len(), 1);
        assert!(d.flags.structural());
    }
}
