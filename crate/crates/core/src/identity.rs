//! Equational identities and their exhaustive verification.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::magma::{ElementId, Magma};

/// The identities the toolkit knows how to check.
///
/// | kind | identity |
/// |------|----------|
/// | `commutative` | `xy = yx` |
/// | `idempotent` | `xx = x` |
/// | `associative` | `(xy)z = x(yz)` |
/// | `central-moufang` | `(xy)(zx) = (x(yz))x` |
/// | `left-moufang` | `x(y(xz)) = ((xy)x)z` |
/// | `right-moufang` | `((zx)y)x = z(x(yx))` |
/// | `eq2` | `(xy)x = xy` |
/// | `eq3` | `x(yz) = (xy)(xz)` |
///
/// Variables are always listed in the order `x, y, z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityKind {
    Commutative,
    Idempotent,
    Associative,
    CentralMoufang,
    LeftMoufang,
    RightMoufang,
    Eq2,
    Eq3,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 8] = [
        IdentityKind::Commutative,
        IdentityKind::Idempotent,
        IdentityKind::Associative,
        IdentityKind::CentralMoufang,
        IdentityKind::LeftMoufang,
        IdentityKind::RightMoufang,
        IdentityKind::Eq2,
        IdentityKind::Eq3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Commutative => "commutative",
            IdentityKind::Idempotent => "idempotent",
            IdentityKind::Associative => "associative",
            IdentityKind::CentralMoufang => "central-moufang",
            IdentityKind::LeftMoufang => "left-moufang",
            IdentityKind::RightMoufang => "right-moufang",
            IdentityKind::Eq2 => "eq2",
            IdentityKind::Eq3 => "eq3",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            IdentityKind::Commutative => "xy = yx",
            IdentityKind::Idempotent => "xx = x",
            IdentityKind::Associative => "(xy)z = x(yz)",
            IdentityKind::CentralMoufang => "(xy)(zx) = (x(yz))x",
            IdentityKind::LeftMoufang => "x(y(xz)) = ((xy)x)z",
            IdentityKind::RightMoufang => "((zx)y)x = z(x(yx))",
            IdentityKind::Eq2 => "(xy)x = xy",
            IdentityKind::Eq3 => "x(yz) = (xy)(xz)",
        }
    }

    /// Number of variables.
    pub fn arity(self) -> usize {
        match self {
            IdentityKind::Idempotent => 1,
            IdentityKind::Commutative | IdentityKind::Eq2 => 2,
            _ => 3,
        }
    }

    /// Evaluates both sides at `vars` (`x, y, z` order) under a possibly
    /// partial operation. Returns `None` as soon as an undefined product is
    /// needed.
    #[inline]
    pub fn eval_partial<F>(self, op: F, vars: &[usize]) -> Option<(usize, usize)>
    where
        F: Fn(usize, usize) -> Option<usize>,
    {
        let x = vars[0];
        let y = vars.get(1).copied().unwrap_or(0);
        let z = vars.get(2).copied().unwrap_or(0);
        Some(match self {
            IdentityKind::Commutative => (op(x, y)?, op(y, x)?),
            IdentityKind::Idempotent => (op(x, x)?, x),
            IdentityKind::Associative => (op(op(x, y)?, z)?, op(x, op(y, z)?)?),
            IdentityKind::CentralMoufang => {
                let xy = op(x, y)?;
                let zx = op(z, x)?;
                let lhs = op(xy, zx)?;
                let yz = op(y, z)?;
                let rhs = op(op(x, yz)?, x)?;
                (lhs, rhs)
            }
            IdentityKind::LeftMoufang => {
                let lhs = op(x, op(y, op(x, z)?)?)?;
                let rhs = op(op(op(x, y)?, x)?, z)?;
                (lhs, rhs)
            }
            IdentityKind::RightMoufang => {
                let lhs = op(op(op(z, x)?, y)?, x)?;
                let rhs = op(z, op(x, op(y, x)?)?)?;
                (lhs, rhs)
            }
            IdentityKind::Eq2 => {
                let xy = op(x, y)?;
                (op(xy, x)?, xy)
            }
            IdentityKind::Eq3 => {
                let lhs = op(x, op(y, z)?)?;
                let rhs = op(op(x, y)?, op(x, z)?)?;
                (lhs, rhs)
            }
        })
    }

    /// Both sides of the identity at `vars` in a complete table.
    #[inline]
    pub fn eval(self, magma: &Magma, vars: &[usize]) -> (usize, usize) {
        self.eval_partial(|a, b| Some(magma.op(a, b)), vars)
            .expect("total operation")
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity `{s}`")))
    }
}

/// Outcome of [`check_identity`]. `counterexample` is present exactly when the
/// identity fails, and holds the lexicographically smallest failing tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub counterexample: Option<Vec<ElementId>>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{} ({}) holds", self.kind, self.kind.formula()),
            Some(tuple) => {
                let parts: Vec<String> = tuple.iter().map(|e| e.to_string()).collect();
                write!(
                    f,
                    "{} ({}) fails at ({})",
                    self.kind,
                    self.kind.formula(),
                    parts.join(", ")
                )
            }
        }
    }
}

/// Exhaustive check over all `nᵏ` assignments, `k` = arity.
///
/// The first variable's range is split across the rayon pool; `find_first`
/// keeps the reported counterexample identical to a sequential scan.
pub fn check_identity(magma: &Magma, kind: IdentityKind) -> IdentityReport {
    let n = magma.order();
    let arity = kind.arity();
    let counterexample = (0..n).into_par_iter().find_map_first(|x| {
        let mut vars = [x, 0, 0];
        let inner = n.pow(arity as u32 - 1);
        for rest in 0..inner {
            // decode `rest` so that later variables vary fastest
            let mut r = rest;
            for slot in (1..arity).rev() {
                vars[slot] = r % n;
                r /= n;
            }
            let (lhs, rhs) = kind.eval(magma, &vars[..arity]);
            if lhs != rhs {
                return Some(vars[..arity].iter().map(|&v| ElementId::new(v)).collect());
            }
        }
        None
    });
    IdentityReport {
        kind,
        counterexample,
    }
}

/// Checks several identities, in the given order.
pub fn check_all(magma: &Magma, kinds: &[IdentityKind]) -> Vec<IdentityReport> {
    kinds.iter().map(|&k| check_identity(magma, k)).collect()
}

/// `Ok(())` when `magma` is commutative and satisfies the central Moufang
/// identity; otherwise the first failing report.
pub fn require_commutative_moufang(magma: &Magma) -> Result<()> {
    for kind in [IdentityKind::Commutative, IdentityKind::CentralMoufang] {
        let report = check_identity(magma, kind);
        if !report.holds() {
            return Err(Error::HypothesisViolation(report));
        }
    }
    Ok(())
}
