//! Exhaustive enumeration of small magmas satisfying a set of identities.
//!
//! Cells are filled in row-major order (only the upper triangle when
//! commutativity is required, with the diagonal pinned when idempotence is
//! required). After every assignment each identity instance whose products are
//! all determined is evaluated, and the branch is cut on the first mismatch.
//! Values are tried in increasing order, so models come out sorted
//! lexicographically by table.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::caps::Caps;
use crate::decomp::{decompose, is_archimedean, DecomposeOptions};
use crate::error::{Error, Result};
use crate::identity::{check_identity, IdentityKind};
use crate::magma::Magma;

/// Orders up to which the unpruned generate-and-filter oracle is allowed.
pub const NAIVE_MAX_ORDER: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    pub order: usize,
    pub constraints: BTreeSet<IdentityKind>,
    /// Keep only the canonical representative of each isomorphism class.
    pub iso_reduce: bool,
    /// Stop after this many models.
    pub limit: Option<usize>,
}

impl EnumerationTask {
    pub fn new(order: usize, constraints: impl IntoIterator<Item = IdentityKind>) -> Self {
        EnumerationTask {
            order,
            constraints: constraints.into_iter().collect(),
            iso_reduce: false,
            limit: None,
        }
    }

    pub fn iso_reduced(mut self) -> Self {
        self.iso_reduce = true;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    fn validate(&self, caps: &Caps) -> Result<()> {
        if self.order == 0 {
            return Err(Error::EmptyMagma);
        }
        if self.constraints.is_empty() {
            return Err(Error::NoConstraints);
        }
        if self.order > caps.enumeration_order {
            return Err(Error::CapExceeded {
                what: "enumeration order",
                requested: self.order,
                cap: caps.enumeration_order,
            });
        }
        if self.iso_reduce && self.order > caps.canonical_order {
            return Err(Error::CapExceeded {
                what: "canonical form order",
                requested: self.order,
                cap: caps.canonical_order,
            });
        }
        Ok(())
    }
}

const UNSET: u32 = u32::MAX;

struct Search<'a> {
    n: usize,
    commutative: bool,
    /// Identities checked during the search; commutativity and idempotence are
    /// enforced by the cell layout instead.
    checked: Vec<IdentityKind>,
    constraints: &'a BTreeSet<IdentityKind>,
    cells: Vec<(usize, usize)>,
    table: Vec<u32>,
    iso_reduce: bool,
}

impl<'a> Search<'a> {
    fn new(task: &'a EnumerationTask) -> Self {
        let n = task.order;
        let commutative = task.constraints.contains(&IdentityKind::Commutative);
        let idempotent = task.constraints.contains(&IdentityKind::Idempotent);
        let mut table = vec![UNSET; n * n];
        if idempotent {
            for i in 0..n {
                table[i * n + i] = i as u32;
            }
        }
        let cells = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(commutative && j < i))
            .filter(|&(i, j)| !(idempotent && i == j))
            .collect();
        let checked = task
            .constraints
            .iter()
            .copied()
            .filter(|k| !matches!(k, IdentityKind::Commutative | IdentityKind::Idempotent))
            .collect();
        Search {
            n,
            commutative,
            checked,
            constraints: &task.constraints,
            cells,
            table,
            iso_reduce: task.iso_reduce,
        }
    }

    fn set(&mut self, (i, j): (usize, usize), v: u32) {
        self.table[i * self.n + j] = v;
        if self.commutative {
            self.table[j * self.n + i] = v;
        }
    }

    /// No fully determined instance of a checked identity fails.
    fn consistent(&self) -> bool {
        let n = self.n;
        let table = &self.table;
        let op = |a: usize, b: usize| {
            let v = table[a * n + b];
            (v != UNSET).then_some(v as usize)
        };
        self.checked.iter().all(|&kind| {
            let arity = kind.arity();
            (0..n.pow(arity as u32)).all(|code| {
                let vars = [code % n, code / n % n, code / n / n % n];
                match kind.eval_partial(op, &vars[..arity]) {
                    Some((l, r)) => l == r,
                    None => true,
                }
            })
        })
    }

    fn leaf(&self) -> Option<Magma> {
        let magma = Magma::from_raw(self.n, self.table.clone());
        // full re-check of every constraint at the leaf
        if !self
            .constraints
            .iter()
            .all(|&k| check_identity(&magma, k).holds())
        {
            debug_assert!(false, "incremental check admitted a non-model");
            return None;
        }
        if self.iso_reduce && canonical_table(&magma) != magma.entries() {
            return None;
        }
        Some(magma)
    }

    fn run<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(Magma) -> ControlFlow<()>,
    {
        if depth == self.cells.len() {
            return match self.leaf() {
                Some(m) => visit(m),
                None => ControlFlow::Continue(()),
            };
        }
        let cell = self.cells[depth];
        for v in 0..self.n as u32 {
            self.set(cell, v);
            if self.consistent() {
                self.run(depth + 1, visit)?;
            }
        }
        self.set(cell, UNSET);
        ControlFlow::Continue(())
    }
}

/// Streams every model of `task` in lexicographic table order to `visit`,
/// which may stop the search early. Returns the number of models visited.
pub fn for_each_model<F>(task: &EnumerationTask, caps: &Caps, mut visit: F) -> Result<usize>
where
    F: FnMut(&Magma) -> ControlFlow<()>,
{
    task.validate(caps)?;
    let mut count = 0usize;
    let limit = task.limit.unwrap_or(usize::MAX);
    if limit == 0 {
        return Ok(0);
    }
    let mut search = Search::new(task);
    let _ = search.run(0, &mut |m: Magma| {
        count += 1;
        visit(&m)?;
        if count >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(count)
}

/// All models of `task`, sorted by table.
pub fn enumerate(task: &EnumerationTask, caps: &Caps) -> Result<Vec<Magma>> {
    let mut out = Vec::new();
    for_each_model(task, caps, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Same output as [`enumerate`], with the search tree split by the value of
/// the first free cell and explored on the rayon pool.
pub fn enumerate_parallel(task: &EnumerationTask, caps: &Caps) -> Result<Vec<Magma>> {
    task.validate(caps)?;
    let probe = Search::new(task);
    let Some(&first) = probe.cells.first() else {
        return enumerate(task, caps);
    };
    let n = task.order;
    let parts: Vec<Vec<Magma>> = (0..n as u32)
        .into_par_iter()
        .map(|v| {
            let mut search = Search::new(task);
            let mut out = Vec::new();
            search.set(first, v);
            if search.consistent() {
                let _ = search.run(1, &mut |m: Magma| {
                    out.push(m);
                    ControlFlow::Continue(())
                });
            }
            out
        })
        .collect();
    let mut all: Vec<Magma> = parts.into_iter().flatten().collect();
    all.sort();
    if let Some(limit) = task.limit {
        all.truncate(limit);
    }
    Ok(all)
}

/// Unpruned generate-and-filter: every table (every symmetric table when
/// commutativity is required) checked against all constraints.
pub fn naive_enumerate(order: usize, constraints: &BTreeSet<IdentityKind>) -> Result<Vec<Magma>> {
    if order == 0 {
        return Err(Error::EmptyMagma);
    }
    if order > NAIVE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "naive enumeration order",
            requested: order,
            cap: NAIVE_MAX_ORDER,
        });
    }
    let n = order;
    let commutative = constraints.contains(&IdentityKind::Commutative);
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(commutative && j < i))
        .collect();
    let total = n.pow(free.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut table = vec![0u32; n * n];
        let mut rest = code;
        // last free cell varies fastest, giving lexicographic order
        for &(i, j) in free.iter().rev() {
            let v = (rest % n) as u32;
            rest /= n;
            table[i * n + j] = v;
            if commutative {
                table[j * n + i] = v;
            }
        }
        let magma = Magma::from_raw(n, table);
        if constraints
            .iter()
            .all(|&k| check_identity(&magma, k).holds())
        {
            out.push(magma);
        }
    }
    Ok(out)
}

/// Lexicographically smallest row-major table over all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub table: Vec<usize>,
}

impl CanonicalForm {
    pub fn to_magma(&self) -> Magma {
        Magma::new(self.order, &self.table).expect("canonical table is valid")
    }
}

fn canonical_table(magma: &Magma) -> Vec<usize> {
    let n = magma.order();
    let mut best: Vec<usize> = magma.entries();
    let mut inverse = vec![0usize; n];
    let mut candidate = vec![0usize; n * n];
    for perm in (0..n).permutations(n) {
        // perm maps old labels to new ones
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let mut better = false;
        let mut worse = false;
        for r in 0..n {
            for c in 0..n {
                let v = perm[magma.op(inverse[r], inverse[c])];
                candidate[r * n + c] = v;
                if !better {
                    let b = best[r * n + c];
                    if v < b {
                        better = true;
                    } else if v > b {
                        worse = true;
                        break;
                    }
                }
            }
            if worse {
                break;
            }
        }
        if better {
            best.copy_from_slice(&candidate);
        }
    }
    best
}

/// Canonical form by brute force over all `n!` relabelings applied to rows,
/// columns and values at once.
pub fn canonical_form(magma: &Magma, caps: &Caps) -> Result<CanonicalForm> {
    if magma.order() > caps.canonical_order {
        return Err(Error::CapExceeded {
            what: "canonical form order",
            requested: magma.order(),
            cap: caps.canonical_order,
        });
    }
    Ok(CanonicalForm {
        order: magma.order(),
        table: canonical_table(magma),
    })
}

/// Named probes for the open structural questions. Closed set on purpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchPredicate {
    /// Archimedean with at least two idempotents.
    ArchimedeanMultiIdempotent,
    /// Commutative left-Moufang, yet the decomposition does not certify.
    DecompositionFailsLeftMoufang,
    /// Commutative right-Moufang, yet the decomposition does not certify.
    DecompositionFailsRightMoufang,
    /// Central-Moufang (commutativity not required), yet the decomposition
    /// does not certify.
    DecompositionFailsNoncommutative,
}

impl SearchPredicate {
    pub const ALL: [SearchPredicate; 4] = [
        SearchPredicate::ArchimedeanMultiIdempotent,
        SearchPredicate::DecompositionFailsLeftMoufang,
        SearchPredicate::DecompositionFailsRightMoufang,
        SearchPredicate::DecompositionFailsNoncommutative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchPredicate::ArchimedeanMultiIdempotent => "archimedean-multi-idempotent",
            SearchPredicate::DecompositionFailsLeftMoufang => "decomposition-fails-left-moufang",
            SearchPredicate::DecompositionFailsRightMoufang => "decomposition-fails-right-moufang",
            SearchPredicate::DecompositionFailsNoncommutative => {
                "decomposition-fails-noncommutative"
            }
        }
    }

    /// Identities a model must satisfy for the predicate to apply.
    pub fn required_identities(self) -> &'static [IdentityKind] {
        match self {
            SearchPredicate::ArchimedeanMultiIdempotent => &[],
            SearchPredicate::DecompositionFailsLeftMoufang => {
                &[IdentityKind::Commutative, IdentityKind::LeftMoufang]
            }
            SearchPredicate::DecompositionFailsRightMoufang => {
                &[IdentityKind::Commutative, IdentityKind::RightMoufang]
            }
            SearchPredicate::DecompositionFailsNoncommutative => &[IdentityKind::CentralMoufang],
        }
    }

    pub fn matches(self, magma: &Magma) -> bool {
        if !self
            .required_identities()
            .iter()
            .all(|&k| check_identity(magma, k).holds())
        {
            return false;
        }
        match self {
            SearchPredicate::ArchimedeanMultiIdempotent => {
                magma.idempotents().len() >= 2 && is_archimedean(magma).unwrap_or(false)
            }
            _ => {
                let opts = DecomposeOptions {
                    require_hypotheses: false,
                };
                match decompose(magma, opts) {
                    Ok(d) => !d.sigma_is_equivalence || !d.flags.structural(),
                    Err(_) => true,
                }
            }
        }
    }
}

impl fmt::Display for SearchPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown predicate `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { magma: Magma, examined: usize },
    Exhausted { examined: usize },
}

/// First model of `task` (in enumeration order) satisfying `predicate`.
pub fn search(
    task: &EnumerationTask,
    predicate: SearchPredicate,
    caps: &Caps,
) -> Result<SearchOutcome> {
    let mut found = None;
    let examined = for_each_model(task, caps, |m| {
        if predicate.matches(m) {
            found = Some(m.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(match found {
        Some(magma) => SearchOutcome::Found { magma, examined },
        None => SearchOutcome::Exhausted { examined },
    })
}
