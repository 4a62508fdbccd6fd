//! Command-line front end.
//!
//! Exit status: 0 success, 1 domain error, 2 usage error, 3 validation mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::borel::{expand_b1, power_generators};
use crate::config::Limits;
use crate::depth::quotient_profile;
use crate::error::{Error, Result};
use crate::localization::{localize_closed_form, VariableSubset};
use crate::monomial::{parse_labels, GroundSet, SquarefreeMonomial};
use crate::report::{
    squarefree_json, AssJson, ColonProfileJson, Document, EntryJson, EverAssociatedJson, GeneratorsJson,
    LambdaJson, LocalizeJson, Output, PersistJson, StableSetJson, ValidateJson,
};
use crate::stability::{ever_associated, lambda_max_ideal, lambda_of_prime, stable_set_enumerate, StableSetEntry};
use crate::Exp;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Worked example used by `table` when no generator is given.
pub const REFERENCE_U: &[usize] = &[1, 3, 4, 5];
pub const REFERENCE_N: usize = 5;

/// Reference row order of the stable set of `x_1x_3x_4x_5` over `[5]`.
const REFERENCE_ROWS: &[&[usize]] = &[
    &[2, 3, 4, 5],
    &[1, 2, 5],
    &[1, 3, 4],
    &[1, 3, 5],
    &[1, 4, 5],
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[1],
];

#[derive(Parser, Debug)]
#[command(name = "borel-ass", version, about = "Associated primes of powers of squarefree principal Borel ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Squarefree Borel generator as an index list, e.g. `1,3,4,5`.
    #[arg(long)]
    pub u: Option<String>,
    /// Ground set `[n]`; defaults to `max(u)`.
    #[arg(long, conflicts_with = "vars")]
    pub n: Option<usize>,
    /// General ground set as an index list.
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// TOML file with `max_n`, `max_k` and `max_generators`.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generators of B_k(u^k); B_1(u) by default.
    Expand {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Minimal generators of I^k computed as a product of ideals.
    Power {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Localization I(P_A) and its Borel generator u_A.
    Localize {
        #[command(flatten)]
        target: Target,
        #[arg(long = "A")]
        a: String,
    },
    /// Linear-quotient colon sets, q(I^k) and depth(S/I^k).
    ColonProfile {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Index of stability of the maximal ideal, or of P_A with --A.
    Lambda {
        #[command(flatten)]
        target: Target,
        #[arg(long = "A")]
        a: Option<String>,
    },
    /// Whether the maximal ideal is associated to some power.
    EverAssociated {
        #[command(flatten)]
        target: Target,
    },
    /// Stable set of associated primes with their indices of stability.
    StableSet {
        #[command(flatten)]
        target: Target,
        /// Include subsets whose prime is not stable.
        #[arg(long)]
        all: bool,
        /// Reference row order of the worked example instead of size then lex.
        #[arg(long)]
        paper_order: bool,
    },
    /// Associated primes of I^k for k up to kmax, by brute force.
    Ass {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Checks Ass(I^k) ⊆ Ass(I^{k+1}) for k < kmax.
    Persist {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Compares every closed form with the brute force.
    Validate {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        kmax: u32,
    },
    /// Stable-set table in reference row order; the worked example by default.
    Table {
        #[command(flatten)]
        target: Target,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

struct Inputs {
    u: SquarefreeMonomial,
    format: Format,
    limits: Limits,
}

impl Target {
    fn resolve(&self, fallback: Option<(&[usize], usize)>) -> std::result::Result<Inputs, Failure> {
        let limits = match &self.config {
            Some(path) => Limits::load(path).map_err(usage)?,
            None => Limits::default(),
        };
        let (indices, default_n) = match (&self.u, fallback) {
            (Some(text), _) => {
                let indices = parse_labels(text).map_err(usage)?;
                let max = indices.iter().copied().max().unwrap_or(0);
                (indices, max)
            }
            (None, Some((idx, n))) if self.n.is_none() && self.vars.is_none() => (idx.to_vec(), n),
            (None, _) => return Err(Failure::Usage("missing --u".into())),
        };
        let ground = match (&self.vars, self.n) {
            (Some(vars), _) => GroundSet::new(parse_labels(vars).map_err(usage)?),
            (None, Some(n)) => GroundSet::contiguous(n),
            (None, None) => GroundSet::contiguous(default_n),
        }
        .map_err(usage)?;
        let u = SquarefreeMonomial::new(ground, indices).map_err(usage)?;
        Ok(Inputs {
            u,
            format: self.format,
            limits,
        })
    }
}

fn parse_subset(text: &str, u: &SquarefreeMonomial) -> std::result::Result<VariableSubset, Failure> {
    VariableSubset::parse(text, u.ground().clone()).map_err(usage)
}

fn entries_json(entries: &[StableSetEntry], all: bool) -> Vec<EntryJson> {
    entries.iter().filter(|e| all || e.member).map(EntryJson::from).collect()
}

/// Reorders rows to the reference order when `u` is the worked example, and
/// otherwise by `λ`, then decreasing `|A|`, then lexicographically.
pub fn reference_order(u: &SquarefreeMonomial, rows: &mut [EntryJson]) {
    let is_example = u.ground().is_contiguous() && u.ground().len() == REFERENCE_N && u.indices() == REFERENCE_U;
    if is_example {
        let rank = |a: &[usize]| REFERENCE_ROWS.iter().position(|r| *r == a).unwrap_or(REFERENCE_ROWS.len());
        rows.sort_by(|x, y| rank(&x.a).cmp(&rank(&y.a)).then_with(|| x.a.cmp(&y.a)));
    } else {
        rows.sort_by(|x, y| {
            x.lambda
                .cmp(&y.lambda)
                .then_with(|| y.a.len().cmp(&x.a.len()))
                .then_with(|| x.a.cmp(&y.a))
        });
    }
}

fn stable_set(inputs: &Inputs, all: bool, reference: bool) -> std::result::Result<StableSetJson, Failure> {
    let entries = stable_set_enumerate(&inputs.u, inputs.limits.max_n)?;
    let mut rows = entries_json(&entries, all);
    if reference {
        reference_order(&inputs.u, &mut rows);
    }
    Ok(StableSetJson {
        u: squarefree_json(&inputs.u),
        n: inputs.u.ground().len(),
        order: if reference { "reference" } else { "size-lex" }.into(),
        entries: rows,
    })
}

fn execute(command: &Command) -> std::result::Result<(Output, Format), Failure> {
    let (output, format) = match command {
        Command::Expand { target, k } => {
            let i = target.resolve(None)?;
            i.limits.check_k(*k)?;
            let ideal = power_generators::<Exp>(&i.u, *k)?;
            (Output::Expand(GeneratorsJson::new(&i.u, *k, &ideal)), i.format)
        }
        Command::Power { target, k } => {
            let i = target.resolve(None)?;
            i.limits.check_k(*k)?;
            let ideal = expand_b1::<Exp>(&i.u, i.u.ground())?.power(*k)?;
            (Output::Power(GeneratorsJson::new(&i.u, *k, &ideal)), i.format)
        }
        Command::Localize { target, a } => {
            let i = target.resolve(None)?;
            let a = parse_subset(a, &i.u)?;
            let loc = localize_closed_form(&i.u, &a)?;
            (Output::Localize(LocalizeJson::new(&i.u, &loc)?), i.format)
        }
        Command::ColonProfile { target, k } => {
            let i = target.resolve(None)?;
            i.limits.check_k(*k)?;
            let profile = quotient_profile::<Exp>(&i.u, *k)?;
            (Output::ColonProfile(ColonProfileJson::new(&i.u, *k, &profile)), i.format)
        }
        Command::Lambda { target, a } => {
            let i = target.resolve(None)?;
            let (subset, prime, lambda) = match a {
                Some(text) => {
                    let a = parse_subset(text, &i.u)?;
                    let lambda = lambda_of_prime(&i.u, &a)?;
                    (Some(a.members().to_vec()), a.complement(), lambda)
                }
                None => (None, i.u.ground().indices().to_vec(), lambda_max_ideal(&i.u)?),
            };
            let json = LambdaJson {
                u: squarefree_json(&i.u),
                n: i.u.ground().len(),
                a: subset,
                prime,
                lambda,
            };
            (Output::Lambda(json), i.format)
        }
        Command::EverAssociated { target } => {
            let i = target.resolve(None)?;
            let json = EverAssociatedJson {
                u: squarefree_json(&i.u),
                n: i.u.ground().len(),
                ever_associated: ever_associated(&i.u)?,
            };
            (Output::EverAssociated(json), i.format)
        }
        Command::StableSet { target, all, paper_order } => {
            let i = target.resolve(None)?;
            (Output::StableSet(stable_set(&i, *all, *paper_order)?), i.format)
        }
        Command::Table { target } => {
            let i = target.resolve(Some((REFERENCE_U, REFERENCE_N)))?;
            (Output::Table(stable_set(&i, false, true)?), i.format)
        }
        Command::Ass { target, kmax } => {
            let i = target.resolve(None)?;
            i.limits.check_k(*kmax)?;
            let profile = i.limits.oracle().ass_profile(&i.u, *kmax)?;
            (Output::Ass(AssJson::from(&profile)), i.format)
        }
        Command::Persist { target, kmax } => {
            let i = target.resolve(None)?;
            i.limits.check_k(*kmax)?;
            let report = i.limits.oracle().persistence_scan(&i.u, *kmax)?;
            (Output::Persist(PersistJson::from(&report)), i.format)
        }
        Command::Validate { target, kmax } => {
            let i = target.resolve(None)?;
            i.limits.check_k(*kmax)?;
            if i.u.ground().len() > i.limits.max_n {
                return Err(Failure::Domain(Error::LimitExceeded {
                    what: "n",
                    limit: i.limits.max_n,
                    actual: i.u.ground().len(),
                }));
            }
            let report = i.limits.oracle().cross_validate(&i.u, *kmax)?;
            (Output::Validate(ValidateJson::from(&report)), i.format)
        }
    };
    Ok((output, format))
}

fn mismatch_of(output: &Output) -> Option<String> {
    match output {
        Output::Persist(p) if !p.ok => Some(format!("{} persistence violations", p.violations.len())),
        Output::Validate(v) if !v.ok => Some(format!("{} mismatches", v.mismatches.len())),
        _ => None,
    }
}

fn render(output: &Output, format: Format) -> String {
    match format {
        Format::Table => output.to_table(),
        Format::Json => {
            let mut text = Document::new(output.clone()).to_json();
            text.push('\n');
            text
        }
    }
}

/// Parses `args` (including the program name) and runs one verb.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli.command).and_then(|(output, format)| {
        let text = render(&output, format);
        if out.write_all(text.as_bytes()).is_err() {
            return Err(Failure::Domain(Error::Internal("failed to write output".into())));
        }
        match mismatch_of(&output) {
            Some(msg) => Err(Failure::Mismatch(msg)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "validation failed: {msg}");
            EXIT_MISMATCH
        }
    }
}

/// Runs with captured output, returning `(status, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

/// Runs one verb without rendering. `args` excludes the program name.
pub fn execute_to_document(args: &[&str]) -> Result<Document> {
    let mut argv = vec!["borel-ass"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::parse(e.to_string()))?;
    match execute(&cli.command) {
        Ok((output, _)) => Ok(Document::new(output)),
        Err(Failure::Domain(e)) => Err(e),
        Err(Failure::Usage(m)) | Err(Failure::Mismatch(m)) => Err(Error::parse(m)),
    }
}
