use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use moufang_core::caps::Caps;
use moufang_core::decomp::{decompose, DecomposeOptions};
use moufang_core::enumerate::{
    canonical_form, enumerate_parallel, naive_enumerate, search, EnumerationTask, SearchOutcome,
    SearchPredicate, NAIVE_MAX_ORDER,
};
use moufang_core::generators::{
    chain_semilattice, jordan_left_zero, zn_multiplicative, JordanParams,
};
use moufang_core::identity::check_all;
use moufang_core::suite::run_suite;
use moufang_core::{IdentityKind, Magma};

use crate::dot::hasse_dot;
use crate::exit;
use crate::report::{DecompositionEntry, Report};
use crate::table::{parse_table, write_table, ParseError};
use crate::{
    CheckArgs, Cli, Command, DecomposeArgs, EnumerateArgs, Family, GenArgs, PropsArgs, SearchArgs,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}:{source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] moufang_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(moufang_core::Error::CapExceeded { .. }) => exit::CAP_EXCEEDED,
            CliError::Core(moufang_core::Error::HypothesisViolation(_)) => exit::PROPERTY_FAILURE,
            _ => exit::INPUT_ERROR,
        }
    }
}

/// Everything a command produced; `main` only forwards it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Default::default()
        }
    }

    fn verdict(stdout: String, pass: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if pass {
                exit::OK
            } else {
                exit::PROPERTY_FAILURE
            },
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command)),
            Err(e) => Err(CliError::Usage(format!("cannot start {jobs} workers: {e}"))),
        },
        None => dispatch(&cli.command),
    };
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    })
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    let caps = Caps::from_env();
    match command {
        Command::Check(a) => cmd_check(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Enumerate(a) => cmd_enumerate(a, &caps),
        Command::Search(a) => cmd_search(a, &caps),
        Command::Props(a) => cmd_props(a, &caps),
    }
}

pub fn read_table(path: &Path) -> Result<Magma, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_table(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parse_kinds(names: &[String]) -> Result<Vec<IdentityKind>, CliError> {
    let mut kinds = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let kind: IdentityKind = name.parse()?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

fn cmd_check(args: &CheckArgs) -> Result<Outcome, CliError> {
    let magma = read_table(&args.path)?;
    let kinds = parse_kinds(&args.kinds)?;
    if kinds.is_empty() {
        return Err(CliError::Usage("no identities requested".into()));
    }
    let reports = check_all(&magma, &kinds);
    let pass = reports.iter().all(|r| r.holds());
    let stdout = if args.json {
        Report::new(&magma, &reports).to_json()
    } else {
        reports.iter().map(|r| format!("{r}\n")).collect()
    };
    Ok(Outcome::verdict(stdout, pass))
}

fn hypotheses(magma: &Magma) -> Vec<moufang_core::IdentityReport> {
    check_all(
        magma,
        &[IdentityKind::Commutative, IdentityKind::CentralMoufang],
    )
}

/// JSON report and DOT text for `decompose`, without touching the filesystem.
pub fn decompose_outputs(magma: &Magma, force: bool) -> Result<(String, String), CliError> {
    let opts = DecomposeOptions {
        require_hypotheses: !force,
    };
    let d = decompose(magma, opts)?;
    let mut report = Report::new(magma, &hypotheses(magma));
    report.decomposition = Some(DecompositionEntry::new(&d, force));
    Ok((report.to_json(), hasse_dot(&d)))
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<Outcome, CliError> {
    let magma = read_table(&args.path)?;
    let (json, dot) = decompose_outputs(&magma, args.force)?;
    let mut stdout = String::new();
    if let Some(path) = &args.json {
        write_file(path, &json)?;
    }
    if let Some(path) = &args.dot {
        write_file(path, &dot)?;
    }
    if args.json.is_none() && args.dot.is_none() {
        stdout = json;
    }
    Ok(Outcome::ok(stdout))
}

fn required<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for the {family} family")))
}

fn required_path<'a>(value: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, CliError> {
    value
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required for the product family")))
}

pub fn generate(args: &GenArgs) -> Result<Magma, CliError> {
    Ok(match args.family {
        Family::Jordan => {
            let p = required(args.p, "p", "jordan")?;
            let m = required(args.m, "m", "jordan")?;
            jordan_left_zero(JordanParams::new(p, m)?)?.0
        }
        Family::Chain => chain_semilattice(required(args.k, "k", "chain")?)?,
        Family::Zn => zn_multiplicative(required(args.k, "k", "zn")?)?,
        Family::Product => {
            let left = read_table(required_path(&args.left, "left")?)?;
            let right = read_table(required_path(&args.right, "right")?)?;
            left.direct_product(&right)
        }
    })
}

fn cmd_gen(args: &GenArgs) -> Result<Outcome, CliError> {
    let text = write_table(&generate(args)?);
    match &args.output {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn cmd_enumerate(args: &EnumerateArgs, caps: &Caps) -> Result<Outcome, CliError> {
    let constraints = parse_kinds(&args.constraints)?;
    let mut task = EnumerationTask::new(args.order, constraints);
    if args.iso {
        task = task.iso_reduced();
    }
    if let Some(limit) = args.limit {
        task = task.with_limit(limit);
    }
    if args.oracle_check && args.limit.is_some() {
        return Err(CliError::Usage(
            "--oracle-check needs the full model set and cannot be combined with --limit".into(),
        ));
    }
    if args.oracle_check && args.order > NAIVE_MAX_ORDER {
        return Err(CliError::Usage(format!(
            "--oracle-check supports orders up to {NAIVE_MAX_ORDER}"
        )));
    }
    let models = enumerate_parallel(&task, caps)?;

    let mut stdout = String::new();
    if args.count_only {
        let _ = writeln!(stdout, "{}", models.len());
    } else {
        for (i, m) in models.iter().enumerate() {
            if i > 0 {
                stdout.push('\n');
            }
            stdout.push_str(&write_table(m));
        }
    }

    let mut pass = true;
    let mut stderr = String::new();
    if args.oracle_check {
        let naive = naive_enumerate(args.order, &task.constraints)?;
        let (expected, actual) = if args.iso {
            let classes = |ms: &[Magma]| -> Result<BTreeSet<Vec<usize>>, CliError> {
                ms.iter()
                    .map(|m| Ok(canonical_form(m, caps)?.table))
                    .collect()
            };
            let naive_classes = classes(&naive)?;
            let found = classes(&models)?;
            // every representative must be its own canonical form and distinct
            pass &=
                found.len() == models.len() && models.iter().all(|m| found.contains(&m.entries()));
            (naive_classes.len(), found.len())
        } else {
            pass &= naive == models;
            (naive.len(), models.len())
        };
        pass &= expected == actual;
        let _ = writeln!(
            stderr,
            "oracle-check: naive {expected}, pruned {actual}: {}",
            if pass { "ok" } else { "MISMATCH" }
        );
    }
    Ok(Outcome {
        stdout,
        stderr,
        code: if pass {
            exit::OK
        } else {
            exit::PROPERTY_FAILURE
        },
    })
}

fn cmd_search(args: &SearchArgs, caps: &Caps) -> Result<Outcome, CliError> {
    let predicate: SearchPredicate = args.predicate.parse()?;
    let mut constraints = parse_kinds(&args.constraints)?;
    constraints.extend_from_slice(predicate.required_identities());
    let task = EnumerationTask::new(args.order, constraints);
    let stdout = match search(&task, predicate, caps)? {
        SearchOutcome::Found { magma, examined } => {
            format!(
                "found {predicate} after {examined} models\n{}",
                write_table(&magma)
            )
        }
        SearchOutcome::Exhausted { examined } => {
            format!(
                "no {predicate} among {examined} models of order {}\n",
                args.order
            )
        }
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_props(args: &PropsArgs, caps: &Caps) -> Result<Outcome, CliError> {
    let magma = read_table(&args.path)?;
    let props = run_suite(&magma, args.nmax, caps)?;
    let pass = props.all_hold();
    let stdout = if args.json {
        Report::new(&magma, &hypotheses(&magma))
            .with_properties(&props)
            .to_json()
    } else {
        let mut s = String::new();
        for c in &props.checks {
            match &c.witness {
                None => {
                    let _ = writeln!(s, "{} holds ({} instances)", c.name, c.instances);
                }
                Some(w) => {
                    let _ = writeln!(s, "{} FAILS: {w}", c.name);
                }
            }
        }
        s
    };
    Ok(Outcome::verdict(stdout, pass))
}
