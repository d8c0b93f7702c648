//! Powers, translation iterates and power associativity.

use std::fmt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::magma::{ElementId, Magma};

/// An eventually periodic sequence `s₀, s₁, …` produced by iterating a map on
/// a finite set, stored up to the first repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    seq: Vec<usize>,
    preperiod: usize,
}

impl Orbit {
    /// Iterates `step` from `start` until a value repeats.
    pub fn trace(start: usize, bound: usize, mut step: impl FnMut(usize) -> usize) -> Orbit {
        let mut first_seen = vec![usize::MAX; bound];
        let mut seq = Vec::new();
        let mut cur = start;
        while first_seen[cur] == usize::MAX {
            first_seen[cur] = seq.len();
            seq.push(cur);
            cur = step(cur);
        }
        Orbit {
            preperiod: first_seen[cur],
            seq,
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.seq
    }

    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.seq.len() - self.preperiod
    }

    /// `s_k`.
    pub fn at(&self, k: u64) -> usize {
        let len = self.seq.len() as u64;
        if k < len {
            return self.seq[k as usize];
        }
        let pre = self.preperiod as u64;
        let period = self.period() as u64;
        self.seq[(pre + (k - pre) % period) as usize]
    }

    /// `s_{2ⁿ}`, valid for every `n` without overflow.
    pub fn at_pow2(&self, n: u32) -> usize {
        match 1u64.checked_shl(n) {
            Some(k) => self.at(k),
            None => {
                // 2ⁿ exceeds any preperiod here
                let pre = self.preperiod as u64;
                let period = self.period() as u64;
                let r = (pow2_mod(n, period) + period - pre % period) % period;
                self.seq[(pre + r) as usize]
            }
        }
    }
}

fn pow2_mod(n: u32, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut base = 2 % m;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    result
}

/// The powers `a, a², a³, …` with `aᵏ⁺¹ = a·aᵏ`.
///
/// `sequence[k]` is `a^(k+1)`; the sequence stops just before the first
/// repeated power, so `a^(preperiod + period + 1) = a^(preperiod + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit {
    pub element: ElementId,
    pub sequence: Vec<ElementId>,
    pub preperiod: usize,
    pub period: usize,
}

impl PowerOrbit {
    /// `aᵏ` for `k ≥ 1`.
    pub fn power(&self, k: u64) -> ElementId {
        assert!(k >= 1, "powers start at 1");
        let len = self.sequence.len() as u64;
        if k <= len {
            return self.sequence[(k - 1) as usize];
        }
        let pre = self.preperiod as u64;
        let idx = pre + (k - 1 - pre) % self.period as u64;
        self.sequence[idx as usize]
    }

    /// `a^(2ⁿ)`, valid for every `n` without overflow.
    pub fn power_pow2(&self, n: u32) -> ElementId {
        if let Some(k) = 1u64.checked_shl(n) {
            return self.power(k);
        }
        let pre = self.preperiod as u64;
        let period = self.period as u64;
        let r = (pow2_mod(n, period) + period - (pre + 1) % period) % period;
        self.sequence[(pre + r) as usize]
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.sequence.contains(&x)
    }
}

pub fn power_orbit(magma: &Magma, a: ElementId) -> PowerOrbit {
    let orbit = Orbit::trace(a.index(), magma.order(), |b| magma.op(a.index(), b));
    PowerOrbit {
        element: a,
        preperiod: orbit.preperiod(),
        period: orbit.period(),
        sequence: orbit.values().iter().map(|&v| ElementId::new(v)).collect(),
    }
}

/// Left-iterated power `aᵏ = a·(a·(…·a))`, `k ≥ 1`.
pub fn power(magma: &Magma, a: ElementId, k: u64) -> ElementId {
    power_orbit(magma, a).power(k)
}

/// The iterates `c, L_a c, L_a² c, …`.
pub fn translation_orbit(magma: &Magma, a: ElementId, c: ElementId) -> Orbit {
    Orbit::trace(c.index(), magma.order(), |b| magma.op(a.index(), b))
}

/// Full bracketing of a word `aa…a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bracketing {
    Leaf,
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn len(&self) -> usize {
        match self {
            Bracketing::Leaf => 1,
            Bracketing::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn eval(&self, magma: &Magma, a: usize) -> usize {
        match self {
            Bracketing::Leaf => a,
            Bracketing::Node(l, r) => magma.op(l.eval(magma, a), r.eval(magma, a)),
        }
    }

    /// All Catalan(len − 1) bracketings of length `len`, ordered by the size
    /// of the left factor.
    pub fn all(len: usize) -> Vec<Bracketing> {
        if len <= 1 {
            return vec![Bracketing::Leaf];
        }
        let mut out = Vec::new();
        for left in 1..len {
            let ls = Bracketing::all(left);
            let rs = Bracketing::all(len - left);
            for l in &ls {
                for r in &rs {
                    out.push(Bracketing::Node(Box::new(l.clone()), Box::new(r.clone())));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(b: &Bracketing, top: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match b {
                Bracketing::Leaf => f.write_str("a"),
                Bracketing::Node(l, r) => {
                    if !top {
                        f.write_str("(")?;
                    }
                    go(l, false, f)?;
                    go(r, false, f)?;
                    if !top {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, true, f)
    }
}

/// First bracketing that disagrees with the left-iterated power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketingFailure {
    pub length: usize,
    pub bracketing: String,
    pub value: ElementId,
    pub expected: ElementId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketingReport {
    pub element: ElementId,
    pub max_len: usize,
    pub failure: Option<BracketingFailure>,
}

impl BracketingReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Evaluates every bracketing of `aa…a` for lengths `3..=max_len` and
/// compares each against `a(a(…a))`. Lengths 1 and 2 have a single
/// bracketing.
pub fn bracketings_agree(
    magma: &Magma,
    a: ElementId,
    max_len: usize,
    caps: &Caps,
) -> Result<BracketingReport> {
    if max_len > caps.bracketing_len {
        return Err(Error::CapExceeded {
            what: "bracketing length",
            requested: max_len,
            cap: caps.bracketing_len,
        });
    }
    let orbit = power_orbit(magma, a);
    for len in 3..=max_len {
        let expected = orbit.power(len as u64);
        for b in Bracketing::all(len) {
            let value = ElementId::new(b.eval(magma, a.index()));
            if value != expected {
                return Ok(BracketingReport {
                    element: a,
                    max_len,
                    failure: Some(BracketingFailure {
                        length: len,
                        bracketing: b.to_string(),
                        value,
                        expected,
                    }),
                });
            }
        }
    }
    Ok(BracketingReport {
        element: a,
        max_len,
        failure: None,
    })
}
