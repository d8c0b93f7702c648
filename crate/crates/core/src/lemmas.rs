//! Translation identities satisfied by commutative Moufang groupoids, as
//! executable checks on a finite table.
//!
//! `L_a` is the left translation `b ↦ a·b`; `L_aᵏ` is its `k`-fold iterate.
//! All exponents are evaluated through eventually periodic orbits, so
//! arbitrarily large `nmax` is fine.
//!
//! On inputs that are not commutative central-Moufang the results are
//! informational only.

use crate::magma::{ElementId, Magma, TranslationWord};
use crate::power::{power_orbit, translation_orbit};

/// `L_a^(2ⁿ) x`.
fn translate_pow2(magma: &Magma, a: ElementId, x: ElementId, n: u32) -> ElementId {
    ElementId::new(translation_orbit(magma, a, x).at_pow2(n))
}

/// `(ab)^(2ⁿ) = L_a^(2ⁿ) b^(2ⁿ)` for every `0 ≤ n ≤ nmax`.
pub fn lemma3_check(magma: &Magma, a: ElementId, b: ElementId, nmax: u32) -> bool {
    let ab = power_orbit(magma, magma.mul(a, b));
    let bo = power_orbit(magma, b);
    (0..=nmax).all(|n| ab.power_pow2(n) == translate_pow2(magma, a, bo.power_pow2(n), n))
}

/// `(L_{a₁}…L_{a_{k−1}} a_k)^(2ⁿ) = L_{a₁}^(2ⁿ)…L_{a_{k−1}}^(2ⁿ) a_k^(2ⁿ)` for
/// every `0 ≤ n ≤ nmax`, with `word = [a₁, …, a_{k−1}]` and `last = a_k`.
pub fn corollary4_check(magma: &Magma, word: &TranslationWord, last: ElementId, nmax: u32) -> bool {
    let lhs_orbit = power_orbit(magma, magma.apply_word(word, last));
    let last_orbit = power_orbit(magma, last);
    (0..=nmax).all(|n| {
        let rhs = word
            .letters()
            .iter()
            .rev()
            .fold(last_orbit.power_pow2(n), |acc, &x| {
                translate_pow2(magma, x, acc, n)
            });
        lhs_orbit.power_pow2(n) == rhs
    })
}

/// `L_a^(2n) L_b = L_{L_aⁿ b} L_aⁿ` pointwise on every `c`, for `1 ≤ n ≤ nmax`.
pub fn lemma5_check(magma: &Magma, a: ElementId, b: ElementId, nmax: u32) -> bool {
    let b_orbit = translation_orbit(magma, a, b);
    magma.elements().all(|c| {
        let c_orbit = translation_orbit(magma, a, c);
        let bc_orbit = translation_orbit(magma, a, magma.mul(b, c));
        (1..=nmax as u64).all(|n| {
            let lhs = bc_orbit.at(2 * n);
            let rhs = magma.op(b_orbit.at(n), c_orbit.at(n));
            lhs == rhs
        })
    })
}
