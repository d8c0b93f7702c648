//! The complete battery of structural properties expected of a commutative
//! Moufang groupoid, run exhaustively on one table.

use itertools::Itertools;

use crate::caps::Caps;
use crate::decomp::{decompose, DecomposeOptions, RhoTable};
use crate::error::Result;
use crate::identity::require_commutative_moufang;
use crate::lemmas::{corollary4_check, lemma3_check, lemma5_check};
use crate::magma::{ElementId, Magma, TranslationWord};
use crate::power::{bracketings_agree, power};

/// Longest translation word exercised by the corollary-4 check.
pub const MAX_WORD_LEN: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    /// Number of instances evaluated.
    pub instances: usize,
    /// Description of the first failing instance.
    pub witness: Option<String>,
}

impl PropertyCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub nmax: u32,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(PropertyCheck::holds)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn scan<I, T>(
    name: &'static str,
    items: I,
    mut fails: impl FnMut(&T) -> Option<String>,
) -> PropertyCheck
where
    I: IntoIterator<Item = T>,
{
    let mut instances = 0;
    let mut witness = None;
    for item in items {
        instances += 1;
        if witness.is_none() {
            witness = fails(&item);
        }
    }
    PropertyCheck {
        name,
        instances,
        witness,
    }
}

/// Runs every property on `magma`, which must be commutative and
/// central-Moufang.
pub fn run_suite(magma: &Magma, nmax: u32, caps: &Caps) -> Result<PropertyReport> {
    require_commutative_moufang(magma)?;
    let elems: Vec<ElementId> = magma.elements().collect();
    let pairs = || {
        elems
            .iter()
            .copied()
            .cartesian_product(elems.iter().copied())
    };
    let mut checks = Vec::new();

    let max_len = caps.bracketing_len;
    let mut bracketing = Vec::with_capacity(elems.len());
    for &a in &elems {
        bracketing.push(bracketings_agree(magma, a, max_len, caps)?);
    }
    checks.push(scan("power-associativity", bracketing, |r| {
        r.failure.as_ref().map(|f| {
            format!(
                "a = {}: {} = {} but a^{} = {}",
                r.element, f.bracketing, f.value, f.length, f.expected
            )
        })
    }));

    checks.push(scan("lemma3", pairs(), |&(a, b)| {
        (!lemma3_check(magma, a, b, nmax)).then(|| format!("a = {a}, b = {b}"))
    }));

    let mut words = Vec::new();
    for len in 1..=MAX_WORD_LEN {
        for letters in std::iter::repeat_n(elems.iter().copied(), len).multi_cartesian_product() {
            words.push(TranslationWord::new(letters)?);
        }
    }
    checks.push(scan(
        "corollary4",
        words.iter().cartesian_product(elems.iter()),
        |&(w, &last)| {
            (!corollary4_check(magma, w, last, nmax)).then(|| {
                let letters = w.letters().iter().map(|l| l.to_string()).join(", ");
                format!("word [{letters}], last = {last}")
            })
        },
    ));

    checks.push(scan("lemma5", pairs(), |&(a, b)| {
        (!lemma5_check(magma, a, b, nmax.max(1))).then(|| format!("a = {a}, b = {b}"))
    }));

    let rho = RhoTable::new(magma);
    checks.push(scan("rho-transitive", std::iter::once(()), |_| {
        rho.rho_transitivity_violation()
            .map(|(a, b, c)| format!("{a} ρ {b}, {b} ρ {c}, not {a} ρ {c}"))
    }));
    checks.push(scan("sigma-square", elems.iter().copied(), |&a| {
        let a2 = power(magma, a, 2);
        (!rho.sigma(a, a2)).then(|| format!("a = {a}, a² = {a2}"))
    }));

    let d = decompose(magma, DecomposeOptions::default());
    let (congruence, semilattice, archimedean) = match &d {
        Ok(d) => (
            d.flags.sigma_is_congruence,
            d.flags.quotient_is_semilattice,
            d.flags.components_archimedean,
        ),
        Err(_) => (false, false, false),
    };
    let err_text = d.as_ref().err().map(|e| e.to_string());
    for (name, ok) in [
        ("sigma-congruence", congruence),
        ("quotient-semilattice", semilattice),
        ("components-archimedean", archimedean),
    ] {
        checks.push(PropertyCheck {
            name,
            instances: 1,
            witness: (!ok).then(|| err_text.clone().unwrap_or_else(|| "flag is false".into())),
        });
    }

    Ok(PropertyReport { nmax, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{jordan_left_zero, JordanParams};

    #[test]
    fn suite_passes_on_examples() {
        let caps = Caps::default();
        let one = Magma::new(1, &[0]).unwrap();
        assert!(run_suite(&one, 3, &caps).unwrap().all_hold());
        let z9 = Magma::from_fn(9, |i, j| i * j % 9).unwrap();
        let r = run_suite(&z9, 3, &caps).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.get("lemma3").unwrap().instances, 81);
        assert_eq!(r.get("corollary4").unwrap().instances, (9 + 81 + 729) * 9);
        let (j, _) = jordan_left_zero(JordanParams::new(5, 1).unwrap()).unwrap();
        assert!(run_suite(&j, 3, &caps).unwrap().all_hold());
    }

    #[test]
    fn suite_requires_hypotheses() {
        let bad = Magma::new(2, &[1, 1, 1, 0]).unwrap();
        assert!(matches!(
            run_suite(&bad, 3, &Caps::default()),
            Err(Error::HypothesisViolation(_))
        ));
        let (j, _) = jordan_left_zero(JordanParams::new(3, 2).unwrap()).unwrap();
        assert!(matches!(
            run_suite(&j, 3, &Caps::default()),
            Err(Error::HypothesisViolation(_))
        ));
    }
}
