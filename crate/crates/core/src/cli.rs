//! The `schurdim` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 input outside what the
//! formulas cover (singular weight, `c < n`, unlinked pair), 3 a
//! verification that ran and failed. JSON output is one object per line.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::alcoves::{d_separating_count, is_regular, linked};
use crate::error::{Error, Result};
use crate::homdim::{
    block_dimension_table, category_o_dims, module_families, type_a_positive_roots, BlockDimRow,
};
use crate::lattice::{Context, Mode, Weight};
use crate::oracle::{
    orbit_in_box, verify_bfs_lengths, verify_lengths_grid, verify_orbit_linkage, VerificationReport,
};
use crate::registry::Registry;
use crate::schur::{schur_sweep, wfd_schur, SchurDimResult};
use crate::symchar::{verify_pieri_ses, PieriReport};
use crate::uporder::{maximal_chain, saturated_set, Domain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

pub const SCHUR_CSV_HEADER: [&str; 8] = ["n", "r", "c", "mode", "wfd", "glob", "status", "witness"];
pub const DIM_CSV_HEADER: [&str; 5] = ["family", "weight", "invariant", "value", "status"];
pub const BLOCK_CSV_HEADER: [&str; 9] = [
    "mu",
    "d",
    "inj_L",
    "proj_L",
    "proj_nabla",
    "inj_delta",
    "inj_nabla",
    "proj_delta",
    "status",
];
pub const VERIFY_CSV_HEADER: [&str; 5] = ["subject", "expected", "observed", "ok", "witness"];
pub const PIERI_CSV_HEADER: [&str; 4] = ["lhs", "constituents", "expected", "ok"];
pub const CHAIN_CSV_HEADER: [&str; 3] = ["step", "weight", "d"];
pub const ORBIT_CSV_HEADER: [&str; 4] = ["weight", "dominant", "regular", "d"];
pub const O_DIMS_CSV_HEADER: [&str; 6] = [
    "num_pos_roots",
    "length_w",
    "gfd_verma",
    "proj_verma",
    "proj_simple_upper",
    "glob_o",
];

#[derive(Parser, Debug)]
#[command(
    name = "schurdim",
    version,
    about = "Alcove combinatorics and homological dimensions for GL_n and Schur algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Args, Debug, Clone)]
pub struct Modulus {
    /// The prime p, or the order l of the root of unity with --quantum.
    #[arg(long)]
    pub c: i64,
    #[arg(long)]
    pub quantum: bool,
}

impl Modulus {
    fn context(&self, n: usize) -> Result<Context> {
        Context::new(
            n,
            self.c,
            if self.quantum {
                Mode::Quantum
            } else {
                Mode::Classical
            },
        )
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weyl and good filtration dimensions of one module.
    Dim {
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
        /// Must match the number of coordinates of the weight when given.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        modulus: Modulus,
        /// Also print injective and projective dimensions for the whole block.
        #[arg(long)]
        block: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Weyl filtration and global dimension of S(n, r).
    Schur {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "sweep")]
        r: Option<u64>,
        #[command(flatten)]
        modulus: Modulus,
        /// One row for every r in 0..=RMAX.
        #[arg(long, value_name = "RMAX")]
        sweep: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Run one of the brute-force checks: lengths, linkage, pieri.
    Verify(VerifyArgs),
    /// Weights reachable from a weight by affine reflections inside a box.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long, default_value_t = 8)]
        radius: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// A longest up-chain ending at a weight, bottom first.
    Chain {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        modulus: Modulus,
        /// Xplus keeps every member dominant; X allows any weight.
        #[arg(long, default_value = "Xplus")]
        domain: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// The dominant weights up-below a weight.
    Saturated {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Reference tables.
    Table {
        #[command(subcommand)]
        table: TableCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum TableCommand {
    /// Dimensions in the principal block of category O, one row per l(w).
    ODims {
        #[arg(long = "type", default_value = "A")]
        kind: String,
        #[arg(long)]
        rank: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    pub check: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub c: Option<i64>,
    #[arg(long)]
    pub quantum: bool,
    #[arg(long)]
    pub dmax: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<Weight>,
    #[arg(long)]
    pub radius: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub j: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

impl VerifyArgs {
    fn need<T: Copy>(&self, v: Option<T>, flag: &str) -> Result<T> {
        v.ok_or_else(|| Error::Parse(format!("verify {} needs --{flag}", self.check)))
    }

    fn context(&self, n: usize) -> Result<Context> {
        let c = self.need(self.c, "c")?;
        Context::new(
            n,
            c,
            if self.quantum {
                Mode::Quantum
            } else {
                Mode::Classical
            },
        )
    }
}

/// One line of verifier output in every format.
pub struct Outcome {
    pub ok: bool,
    pub json: String,
    pub csv: Vec<String>,
    pub plain: String,
}

pub trait Verifier: Send + Sync {
    fn csv_header(&self) -> &'static [&'static str];
    fn run(&self, args: &VerifyArgs) -> Result<Vec<Outcome>>;
}

fn report_outcome(rep: &VerificationReport) -> Outcome {
    let witness = rep
        .witness
        .as_ref()
        .map(|c| c.to_string())
        .unwrap_or_default();
    let mut plain = format!(
        "{} {}: expected {}, observed {}",
        if rep.ok { "ok" } else { "FAIL" },
        rep.subject,
        rep.expected,
        rep.observed
    );
    if !witness.is_empty() {
        let _ = write!(plain, "; witness {witness}");
    }
    Outcome {
        ok: rep.ok,
        json: to_json(rep),
        csv: vec![
            rep.subject.clone(),
            rep.expected.to_string(),
            rep.observed.to_string(),
            rep.ok.to_string(),
            witness,
        ],
        plain,
    }
}

pub struct LengthsVerifier;

impl Verifier for LengthsVerifier {
    fn csv_header(&self) -> &'static [&'static str] {
        &VERIFY_CSV_HEADER
    }

    fn run(&self, args: &VerifyArgs) -> Result<Vec<Outcome>> {
        let ctx = args.context(args.need(args.n, "n")?)?;
        let dmax = args.need(args.dmax, "dmax")?;
        let mut out: Vec<Outcome> = verify_lengths_grid(&ctx, dmax)?
            .iter()
            .map(report_outcome)
            .collect();
        out.push(report_outcome(&verify_bfs_lengths(&ctx, dmax)?));
        Ok(out)
    }
}

pub struct LinkageVerifier;

impl Verifier for LinkageVerifier {
    fn csv_header(&self) -> &'static [&'static str] {
        &VERIFY_CSV_HEADER
    }

    fn run(&self, args: &VerifyArgs) -> Result<Vec<Outcome>> {
        let weight = args
            .weight
            .clone()
            .ok_or_else(|| Error::Parse("verify linkage needs --weight".into()))?;
        let ctx = args.context(weight.len())?;
        let radius = args.need(args.radius, "radius")?;
        Ok(vec![report_outcome(&verify_orbit_linkage(
            &weight, &ctx, radius,
        )?)])
    }
}

pub struct PieriVerifier;

fn pieri_outcome(rep: &PieriReport) -> Outcome {
    let constituents: Vec<String> = rep
        .constituents
        .iter()
        .map(|c| format!("{}*s{}", c.multiplicity, c.partition))
        .collect();
    let expected: Vec<String> = rep.expected.iter().map(|p| format!("s{p}")).collect();
    Outcome {
        ok: rep.ok,
        json: to_json(rep),
        csv: vec![
            rep.lhs.clone(),
            constituents.join(" + "),
            expected.join(" + "),
            rep.ok.to_string(),
        ],
        plain: format!(
            "{} {} = {} (expected {})",
            if rep.ok { "ok" } else { "FAIL" },
            rep.lhs,
            constituents.join(" + "),
            expected.join(" + ")
        ),
    }
}

impl Verifier for PieriVerifier {
    fn csv_header(&self) -> &'static [&'static str] {
        &PIERI_CSV_HEADER
    }

    fn run(&self, args: &VerifyArgs) -> Result<Vec<Outcome>> {
        let ctx = args.context(args.need(args.n, "n")?)?;
        let rep = verify_pieri_ses(args.need(args.m, "m")?, args.need(args.j, "j")?, &ctx)?;
        Ok(vec![pieri_outcome(&rep)])
    }
}

pub fn verifiers() -> Registry<dyn Verifier> {
    Registry::<dyn Verifier>::new("verifier")
        .with("lengths", Box::new(LengthsVerifier))
        .with("linkage", Box::new(LinkageVerifier))
        .with("pieri", Box::new(PieriVerifier))
}

/// What a finished invocation wants printed, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types always serialize")
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn json_lines<T: Serialize>(items: &[T]) -> String {
    items.iter().map(|x| to_json(x) + "\n").collect()
}

fn modulus_name(ctx: &Context) -> &'static str {
    match ctx.mode() {
        Mode::Classical => "p",
        Mode::Quantum => "l",
    }
}

fn schur_row(r: &SchurDimResult) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.r.to_string(),
        r.c.to_string(),
        r.mode.to_string(),
        r.wfd.to_string(),
        r.glob.to_string(),
        r.status.to_string(),
        r.witness
            .as_ref()
            .map(|w| w.to_string())
            .unwrap_or_default(),
    ]
}

fn block_row(row: &BlockDimRow) -> Vec<String> {
    let mut v = vec![row.mu.to_string(), row.d.to_string()];
    match row.dims {
        Some(b) => v.extend(
            [
                b.inj_simple,
                b.proj_simple,
                b.proj_nabla,
                b.inj_delta,
                b.inj_nabla,
                b.proj_delta,
            ]
            .map(|x| x.to_string()),
        ),
        None => v.extend(std::iter::repeat_n(String::new(), 6)),
    }
    v.push(row.status.to_string());
    v
}

fn context_for(weight: &Weight, n: Option<usize>, modulus: &Modulus) -> Result<Context> {
    if let Some(n) = n {
        if n != weight.len() {
            return Err(Error::LengthMismatch {
                expected: n,
                got: weight.len(),
            });
        }
    }
    modulus.context(weight.len())
}

fn dim(
    family: &str,
    weight: &Weight,
    n: Option<usize>,
    modulus: &Modulus,
    block: bool,
    format: OutputFormat,
) -> Result<String> {
    let ctx = context_for(weight, n, modulus)?;
    let families = module_families();
    let reports = families.get(family)?.reports(weight, &ctx)?;
    let table = if block {
        Some(block_dimension_table(weight, &ctx)?)
    } else {
        None
    };
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            out += &json_lines(&reports);
            if let Some(t) = &table {
                out += &json_lines(t);
            }
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.label.family.to_string(),
                        r.label.weight.to_string(),
                        r.invariant.clone(),
                        r.value.to_string(),
                        r.status.to_string(),
                    ]
                })
                .collect();
            out += &csv_table(&DIM_CSV_HEADER, &rows);
            if let Some(t) = &table {
                out += "\n";
                out += &csv_table(
                    &BLOCK_CSV_HEADER,
                    &t.iter().map(block_row).collect::<Vec<_>>(),
                );
            }
        }
        OutputFormat::Plain => {
            for r in &reports {
                let _ = writeln!(
                    out,
                    "{} {} = {} [{}]",
                    r.invariant, r.label, r.value, r.status
                );
            }
            if let Some(t) = &table {
                let _ = writeln!(
                    out,
                    "block of {weight}, {}={}:",
                    modulus_name(&ctx),
                    ctx.c()
                );
                let _ = writeln!(out, "{}", BLOCK_CSV_HEADER.join("\t"));
                for row in t {
                    let _ = writeln!(out, "{}", block_row(row).join("\t"));
                }
            }
        }
    }
    Ok(out)
}

fn schur(
    n: usize,
    r: Option<u64>,
    modulus: &Modulus,
    sweep: Option<u64>,
    format: OutputFormat,
) -> Result<String> {
    let ctx = modulus.context(n)?;
    let rows = match (sweep, r) {
        (Some(rmax), _) => schur_sweep(&ctx, rmax)?,
        (None, Some(r)) => vec![wfd_schur(&ctx, r)?],
        (None, None) => return Err(Error::Parse("schur needs --r or --sweep".into())),
    };
    Ok(match format {
        OutputFormat::Json => json_lines(&rows),
        OutputFormat::Csv => csv_table(
            &SCHUR_CSV_HEADER,
            &rows.iter().map(schur_row).collect::<Vec<_>>(),
        ),
        OutputFormat::Plain => {
            let mut out = String::new();
            for row in &rows {
                let _ = write!(
                    out,
                    "S({},{}) {}={}: wfd {}, glob {} [{}]",
                    row.n,
                    row.r,
                    modulus_name(&ctx),
                    row.c,
                    row.wfd,
                    row.glob,
                    row.status
                );
                if let Some(w) = &row.witness {
                    let _ = write!(out, " witness {w}");
                }
                out.push('\n');
            }
            out
        }
    })
}

fn verify(args: &VerifyArgs) -> Result<(bool, String)> {
    let registry = verifiers();
    let verifier = registry.get(&args.check)?;
    let outcomes = verifier.run(args)?;
    let ok = outcomes.iter().all(|o| o.ok);
    let text = match args.format {
        OutputFormat::Json => outcomes.iter().map(|o| o.json.clone() + "\n").collect(),
        OutputFormat::Csv => csv_table(
            verifier.csv_header(),
            &outcomes.iter().map(|o| o.csv.clone()).collect::<Vec<_>>(),
        ),
        OutputFormat::Plain => outcomes.iter().map(|o| o.plain.clone() + "\n").collect(),
    };
    Ok((ok, text))
}

#[derive(Serialize)]
struct OrbitEntry {
    weight: Weight,
    dominant: bool,
    regular: bool,
    d: Option<u64>,
}

fn orbit(weight: &Weight, modulus: &Modulus, radius: u64, format: OutputFormat) -> Result<String> {
    let ctx = modulus.context(weight.len())?;
    let mut entries = Vec::new();
    for w in orbit_in_box(weight, &ctx, radius)? {
        debug_assert!(linked(weight, &w, &ctx)?);
        let d = if ctx.c() >= ctx.n() as i64 {
            Some(d_separating_count(&w, &ctx)?)
        } else {
            None
        };
        entries.push(OrbitEntry {
            dominant: w.is_dominant(),
            regular: is_regular(&w, &ctx)?,
            d,
            weight: w,
        });
    }
    let row = |e: &OrbitEntry| {
        vec![
            e.weight.to_string(),
            e.dominant.to_string(),
            e.regular.to_string(),
            e.d.map(|d| d.to_string()).unwrap_or_default(),
        ]
    };
    Ok(match format {
        OutputFormat::Json => json_lines(&entries),
        OutputFormat::Csv => csv_table(
            &ORBIT_CSV_HEADER,
            &entries.iter().map(row).collect::<Vec<_>>(),
        ),
        OutputFormat::Plain => entries.iter().map(|e| row(e).join("\t") + "\n").collect(),
    })
}

fn chain(
    weight: &Weight,
    n: Option<usize>,
    modulus: &Modulus,
    domain: &str,
    format: OutputFormat,
) -> Result<String> {
    let ctx = context_for(weight, n, modulus)?;
    let domain = match domain {
        "X" => Domain::All,
        "Xplus" => Domain::Dominant,
        other => {
            return Err(Error::Unknown {
                kind: "domain",
                name: other.to_string(),
            })
        }
    };
    let chain = maximal_chain(weight, &ctx, domain)?;
    Ok(match format {
        OutputFormat::Json => to_json(&chain) + "\n",
        OutputFormat::Csv => {
            let rows = chain
                .weights
                .iter()
                .enumerate()
                .map(|(k, w)| {
                    Ok(vec![
                        k.to_string(),
                        w.to_string(),
                        d_separating_count(w, &ctx)?.to_string(),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            csv_table(&CHAIN_CSV_HEADER, &rows)
        }
        OutputFormat::Plain => format!("{chain}\n"),
    })
}

fn saturated(weight: &Weight, modulus: &Modulus, format: OutputFormat) -> Result<String> {
    let ctx = modulus.context(weight.len())?;
    let set = saturated_set(weight, &ctx)?;
    let rows = set
        .members
        .iter()
        .map(|w| {
            Ok(vec![
                w.to_string(),
                d_separating_count(w, &ctx)?.to_string(),
                is_regular(w, &ctx)?.to_string(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match format {
        OutputFormat::Json => to_json(&set) + "\n",
        OutputFormat::Csv => csv_table(&["mu", "d", "regular"], &rows),
        OutputFormat::Plain => rows.iter().map(|r| r.join("\t") + "\n").collect(),
    })
}

fn o_dims(kind: &str, rank: u64, format: OutputFormat) -> Result<String> {
    if kind != "A" {
        return Err(Error::Unknown {
            kind: "root system type",
            name: kind.to_string(),
        });
    }
    if rank == 0 {
        return Err(Error::Precondition("rank must be at least 1".into()));
    }
    let big_n = type_a_positive_roots(rank);
    let rows = (0..=big_n)
        .map(|l| category_o_dims(big_n, l))
        .collect::<Result<Vec<_>>>()?;
    let cells = |d: &crate::homdim::CategoryODims| {
        [
            d.num_pos_roots,
            d.length_w,
            d.gfd_verma,
            d.proj_verma,
            d.proj_simple_upper,
            d.glob_o,
        ]
        .map(|x| x.to_string())
    };
    Ok(match format {
        OutputFormat::Json => json_lines(&rows),
        OutputFormat::Csv => csv_table(
            &O_DIMS_CSV_HEADER,
            &rows.iter().map(|d| cells(d).to_vec()).collect::<Vec<_>>(),
        ),
        OutputFormat::Plain => {
            let mut out = format!("type A{rank}: N = {big_n}, glob = {}\n", 2 * big_n);
            let _ = writeln!(out, "{}", O_DIMS_CSV_HEADER.join("\t"));
            for d in &rows {
                let _ = writeln!(out, "{}", cells(d).join("\t"));
            }
            out
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    if e.is_out_of_scope() {
        EXIT_OUT_OF_SCOPE
    } else {
        EXIT_USAGE
    }
}

fn execute(cli: Cli) -> Result<(i32, String)> {
    let ok = |s: String| Ok((EXIT_OK, s));
    match cli.command {
        Command::Dim {
            family,
            weight,
            n,
            modulus,
            block,
            format,
        } => ok(dim(&family, &weight, n, &modulus, block, format)?),
        Command::Schur {
            n,
            r,
            modulus,
            sweep,
            format,
        } => ok(schur(n, r, &modulus, sweep, format)?),
        Command::Verify(args) => {
            let (passed, text) = verify(&args)?;
            Ok((if passed { EXIT_OK } else { EXIT_VERIFY_FAILED }, text))
        }
        Command::Orbit {
            weight,
            modulus,
            radius,
            format,
        } => ok(orbit(&weight, &modulus, radius, format)?),
        Command::Chain {
            weight,
            n,
            modulus,
            domain,
            format,
        } => ok(chain(&weight, n, &modulus, &domain, format)?),
        Command::Saturated {
            weight,
            modulus,
            format,
        } => ok(saturated(&weight, &modulus, format)?),
        Command::Table {
            table: TableCommand::ODims { kind, rank, format },
        } => ok(o_dims(&kind, rank, format)?),
    }
}

/// Parses `args` (program name first) and runs the command without touching
/// the process streams.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli) {
        Ok((code, stdout)) => Output {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
