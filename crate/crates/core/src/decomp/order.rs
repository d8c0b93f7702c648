use crate::error::{Error, Result};
use crate::identity::{check_identity, IdentityKind};
use crate::magma::{ElementId, Magma};

/// `a ≤ b ⇔ a·b = a` on an idempotent commutative magma, verified to be a
/// partial order in which `a·b` is the meet of `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilatticeOrder {
    n: usize,
    leq: Vec<bool>,
}

impl SemilatticeOrder {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a.index() * self.n + b.index()]
    }

    /// All related pairs `(a, b)` with `a ≤ b`, lexicographically.
    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.leq[a * self.n + b] {
                    out.push((ElementId::new(a), ElementId::new(b)));
                }
            }
        }
        out
    }

    /// Covering pairs `a ⋖ b` (the transitive reduction), sorted by `(a, b)`.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        self.pairs()
            .into_iter()
            .filter(|&(a, b)| {
                a != b
                    && !(0..self.n)
                        .map(ElementId::new)
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
            })
            .collect()
    }
}

pub fn natural_order(magma: &Magma) -> Result<SemilatticeOrder> {
    if let Some(a) = magma.elements().find(|&a| !magma.is_idempotent_element(a)) {
        return Err(Error::NotIdempotent(a));
    }
    if let Some(v) = check_identity(magma, IdentityKind::Commutative).counterexample {
        return Err(Error::NotCommutative(v[0], v[1]));
    }
    let n = magma.order();
    let leq: Vec<bool> = (0..n * n)
        .map(|k| magma.op(k / n, k % n) == k / n)
        .collect();
    let order = SemilatticeOrder { n, leq };
    let le = |a: usize, b: usize| order.leq[a * n + b];

    // reflexivity follows from idempotence, checked anyway
    if let Some(a) = (0..n).find(|&a| !le(a, a)) {
        return Err(Error::OrderAxiomFailure(format!("{a} ≤ {a} fails")));
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                return Err(Error::OrderAxiomFailure(format!(
                    "antisymmetry: {a} ≤ {b} and {b} ≤ {a}"
                )));
            }
        }
    }
    for a in 0..n {
        for b in (0..n).filter(|&b| le(a, b)) {
            if let Some(c) = (0..n).find(|&c| le(b, c) && !le(a, c)) {
                return Err(Error::OrderAxiomFailure(format!(
                    "transitivity: {a} ≤ {b} ≤ {c} but not {a} ≤ {c}"
                )));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = magma.op(a, b);
            if !le(ab, a) || !le(ab, b) {
                return Err(Error::OrderAxiomFailure(format!(
                    "{a}·{b} = {ab} is not a lower bound"
                )));
            }
            if let Some(x) = (0..n).find(|&x| le(x, a) && le(x, b) && !le(x, ab)) {
                return Err(Error::OrderAxiomFailure(format!(
                    "{x} is a lower bound of {a}, {b} but not below {a}·{b} = {ab}"
                )));
            }
        }
    }
    Ok(order)
}

/// Commutative, idempotent and associative.
pub fn is_semilattice(magma: &Magma) -> bool {
    [
        IdentityKind::Commutative,
        IdentityKind::Idempotent,
        IdentityKind::Associative,
    ]
    .into_iter()
    .all(|k| check_identity(magma, k).holds())
}
