//! Concrete families of commutative Moufang groupoids.
//!
//! The main family is the multiplicative groupoid of the symmetrized
//! semigroup algebra `F_p S` of a left-zero semigroup `S` with `m` elements.
//! Writing `x = Σ αₛ s` and `|x| = Σ αₛ`, the Jordan product collapses to
//! `x∗y = ½(|x|y + |y|x)`, computed here coefficientwise over `F_p`.

use crate::error::{Error, Result};
use crate::magma::{ElementId, Magma};

/// Largest table the generators will build.
pub const MAX_GENERATED_ORDER: usize = 4096;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JordanParams {
    p: u64,
    m: u32,
}

impl JordanParams {
    /// `p` must be an odd prime, `m ≥ 1`, and `p^m` at most
    /// [`MAX_GENERATED_ORDER`].
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        match p.checked_pow(m) {
            Some(order) if order as usize <= MAX_GENERATED_ORDER => Ok(JordanParams { p, m }),
            _ => Err(Error::InvalidParameter(format!(
                "{p}^{m} exceeds the generator limit {MAX_GENERATED_ORDER}"
            ))),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.m) as usize
    }
}

/// Base-`p` digit encoding: index `Σ αᵢ pⁱ` ↔ coefficient vector `(α₀, …, α_{m−1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorEncoding {
    params: JordanParams,
}

impl VectorEncoding {
    pub fn new(params: JordanParams) -> Self {
        VectorEncoding { params }
    }

    pub fn params(&self) -> JordanParams {
        self.params
    }

    pub fn order(&self) -> usize {
        self.params.order()
    }

    pub fn digits(&self, x: ElementId) -> Vec<u64> {
        let p = self.params.p;
        let mut rest = x.index() as u64;
        (0..self.params.m)
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }

    /// Inverse of [`digits`](Self::digits); coefficients are reduced mod `p`.
    pub fn encode(&self, digits: &[u64]) -> ElementId {
        let p = self.params.p;
        let index = digits.iter().rev().fold(0u64, |acc, &d| acc * p + d % p);
        ElementId::new(index as usize)
    }

    /// Coefficient sum `|x|` in `F_p`.
    pub fn weight(&self, x: ElementId) -> u64 {
        self.digits(x).iter().sum::<u64>() % self.params.p
    }

    /// `x∗y = ½(|x|y + |y|x)` straight from the coefficient vectors.
    pub fn jordan_product(&self, x: ElementId, y: ElementId) -> ElementId {
        let p = self.params.p;
        let half = p.div_ceil(2);
        let (wx, wy) = (self.weight(x), self.weight(y));
        let (xd, yd) = (self.digits(x), self.digits(y));
        let out: Vec<u64> = xd
            .iter()
            .zip(&yd)
            .map(|(&xi, &yi)| half * ((wx * yi + wy * xi) % p) % p)
            .collect();
        self.encode(&out)
    }
}

/// The multiplicative groupoid of the Jordan algebra `(F_p S, ∗)`, `|S| = m`.
pub fn jordan_left_zero(params: JordanParams) -> Result<(Magma, VectorEncoding)> {
    let enc = VectorEncoding::new(params);
    let magma = Magma::from_fn(enc.order(), |i, j| {
        enc.jordan_product(ElementId::new(i), ElementId::new(j))
            .index()
    })?;
    Ok((magma, enc))
}

/// Elements of weight zero.
pub fn radical(enc: &VectorEncoding) -> Vec<ElementId> {
    (0..enc.order())
        .map(ElementId::new)
        .filter(|&x| enc.weight(x) == 0)
        .collect()
}

/// `t = |x|⁻²(2|x|y − |y|x)`, which satisfies `x∗t = y` whenever both weights
/// are nonzero.
pub fn witness_t(enc: &VectorEncoding, x: ElementId, y: ElementId) -> Result<ElementId> {
    let p = enc.params.p;
    let (wx, wy) = (enc.weight(x), enc.weight(y));
    if wx == 0 {
        return Err(Error::ZeroWeight(x));
    }
    if wy == 0 {
        return Err(Error::ZeroWeight(y));
    }
    let scale = pow_mod(wx * wx % p, p - 2, p);
    let out: Vec<u64> = enc
        .digits(x)
        .iter()
        .zip(enc.digits(y))
        .map(|(&xi, yi)| {
            let v = (2 * wx % p * yi % p + p - wy * xi % p) % p;
            scale * v % p
        })
        .collect();
    Ok(enc.encode(&out))
}

/// The chain `0 < 1 < … < k−1` with product `min`.
pub fn chain_semilattice(k: usize) -> Result<Magma> {
    Magma::from_fn(k, |i, j| i.min(j))
}

/// `(ℤ_k, ×)`.
pub fn zn_multiplicative(k: usize) -> Result<Magma> {
    Magma::from_fn(k, |i, j| (i * j) % k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{check_identity, IdentityKind};

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn jordan(p: u64, m: u32) -> (Magma, VectorEncoding) {
        jordan_left_zero(JordanParams::new(p, m).unwrap()).unwrap()
    }

    #[test]
    fn params_validation() {
        assert_eq!(
            JordanParams::new(2, 1),
            Err(Error::InvalidCharacteristic(2))
        );
        assert_eq!(
            JordanParams::new(9, 1),
            Err(Error::InvalidCharacteristic(9))
        );
        assert_eq!(
            JordanParams::new(1, 1),
            Err(Error::InvalidCharacteristic(1))
        );
        assert!(JordanParams::new(3, 0).is_err());
        assert!(JordanParams::new(3, 9).is_err());
        assert_eq!(JordanParams::new(5, 2).unwrap().order(), 25);
    }

    #[test]
    fn jordan_3_1_is_multiplication_mod_3() {
        let (m, _) = jordan(3, 1);
        assert_eq!(m.entries(), vec![0, 0, 0, 0, 1, 2, 0, 2, 1]);
        assert_eq!(m.mul(e(2), e(2)), e(1));
        assert_eq!(m, zn_multiplicative(3).unwrap());
    }

    #[test]
    fn jordan_3_2_entry() {
        let (m, enc) = jordan(3, 2);
        assert_eq!(m.order(), 9);
        let x = enc.encode(&[1, 2]);
        let y = enc.encode(&[1, 0]);
        assert_eq!(x, e(7));
        assert_eq!(m.mul(x, y), enc.encode(&[2, 1]));
    }

    #[test]
    fn weights() {
        let (_, enc) = jordan(3, 2);
        assert_eq!(enc.weight(enc.encode(&[0, 0])), 0);
        assert_eq!(enc.weight(enc.encode(&[1, 2])), 0);
        assert_eq!(enc.weight(enc.encode(&[2, 2])), 1);
        for i in 0..9 {
            assert_eq!(enc.encode(&enc.digits(e(i))), e(i));
        }
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(&jordan(3, 1).1), vec![e(0)]);
        assert_eq!(radical(&jordan(3, 2).1), vec![e(0), e(5), e(7)]);
        assert_eq!(radical(&jordan(5, 2).1).len(), 5);
        assert_eq!(radical(&jordan(3, 3).1).len(), 9);
    }

    #[test]
    fn witnesses() {
        let (m, enc) = jordan(3, 1);
        assert_eq!(witness_t(&enc, e(2), e(1)).unwrap(), e(2));
        assert_eq!(m.mul(e(2), e(2)), e(1));
        assert_eq!(witness_t(&enc, e(1), e(1)).unwrap(), e(1));
        assert_eq!(witness_t(&enc, e(0), e(1)), Err(Error::ZeroWeight(e(0))));

        let (m, enc) = jordan(3, 2);
        let x = enc.encode(&[1, 0]);
        let y = enc.encode(&[0, 1]);
        let t = witness_t(&enc, x, y).unwrap();
        // |x| = |y| = 1: t = 2y − x = (−1, 2) = (2, 2)
        assert_eq!(t, enc.encode(&[2, 2]));
        assert_eq!(m.mul(x, t), y);
    }

    #[test]
    fn simple_families() {
        assert_eq!(chain_semilattice(1).unwrap(), Magma::new(1, &[0]).unwrap());
        assert_eq!(chain_semilattice(2).unwrap().entries(), vec![0, 0, 0, 1]);
        assert_eq!(zn_multiplicative(1).unwrap(), Magma::new(1, &[0]).unwrap());
        let z6 = zn_multiplicative(6).unwrap();
        assert!(check_identity(&z6, IdentityKind::Associative).holds());
        assert!(check_identity(&z6, IdentityKind::CentralMoufang).holds());
    }
}
