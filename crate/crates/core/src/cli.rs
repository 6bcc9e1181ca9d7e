//! The `arclocal` command line.
//!
//! Exit codes: `0` success, `1` the input was rejected or a sweep found a
//! counterexample (the witness is printed), `2` usage, parse or cap errors.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classes::{classify, DigraphClass};
use crate::config::{OracleCap, ORACLE_CAP_ENV};
use crate::decomposition::{
    classify_arc_locally_semicomplete, decompose_in_semicomplete, decompose_out_semicomplete,
    verify_als_outcome, verify_decomposition,
};
use crate::digraph::Digraph;
use crate::edgelist;
use crate::error::Error;
use crate::lemmas::Property;
use crate::oracles::brute::{brute_force_has_clique_cut, brute_force_is_perfect};
use crate::oracles::generate::{make_extended_cycle, random_connected_members, random_digraph, RandomModel};
use crate::render::{self, Rejection};
use crate::structure::{
    find_induced_nonoriented_odd_cycle_ge5, find_induced_odd_directed_cycle_ge5, recognize_extended_cycle,
};
use crate::sweep::{run_exhaustive, SweepSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    In,
    Out,
    Als,
}

impl From<ClassArg> for DigraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::In => DigraphClass::InSemicomplete,
            ClassArg::Out => DigraphClass::OutSemicomplete,
            ClassArg::Als => DigraphClass::ArcLocallySemicomplete,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "arclocal",
    version,
    about = "Recognize and decompose arc-locally semicomplete digraphs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest vertex count for exponential subset searches.
    #[arg(long, env = ORACLE_CAP_ENV, default_value_t = OracleCap::DEFAULT.get(), global = true)]
    pub oracle_cap: usize,

    /// Seed for random generation.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// An edge-list file, `-` for standard input, or `--inline` text with `;`
/// separating lines.
#[derive(Debug, Args)]
pub struct Input {
    #[arg(required_unless_present = "inline", conflicts_with = "inline")]
    pub path: Option<PathBuf>,

    #[arg(long)]
    pub inline: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report class memberships with violation witnesses.
    Classify(Input),
    /// Decompose a connected member of a class; the result is verified before printing.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Emit a constructed or random digraph.
    #[command(subcommand)]
    Generate(Generate),
    /// Check properties over every labeled digraph on `n` vertices.
    EnumerateVerify {
        #[arg(long)]
        n: usize,
        /// Keep only connected members of this class.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Property to check (repeatable); defaults to all.
        #[arg(long = "property")]
        properties: Vec<Property>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also keep disconnected digraphs.
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Run a brute-force oracle on a digraph.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum Generate {
    /// Extended cycle with the given part sizes, e.g. `2,1,3,2,1`.
    ExtendedCycle {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Independent random pairs.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p_arc: f64,
        #[arg(long, default_value_t = 0.0)]
        p_digon: f64,
    },
    /// A connected member of a class.
    Member {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Perfection of the underlying graph (odd holes and antiholes).
    Perfect,
    /// Smallest clique cut.
    CliqueCut,
    /// Induced odd directed cycle of length at least five.
    OddCycle,
    /// Induced non-oriented odd cycle of length at least five.
    NonOriented,
    /// Extended cycle recognition.
    ExtendedCycle,
}

/// Outcome of a command: printed output and exit code.
struct Report {
    stdout: String,
    code: i32,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }

    fn rejected(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_REJECTED,
        }
    }
}

fn read_input(input: &Input) -> Result<Digraph, String> {
    let text = match (&input.inline, &input.path) {
        (Some(inline), _) => inline.replace(';', "\n"),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            s
        }
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        (None, None) => return Err("no input given".into()),
    };
    edgelist::parse(&text).map_err(|e| match &input.path {
        Some(path) => format!("{}: {e}", path.display()),
        None => e.to_string(),
    })
}

fn usage(message: impl std::fmt::Display) -> Result<Report, (i32, String)> {
    Err((EXIT_USAGE, message.to_string()))
}

fn rejection(format: Format, class: DigraphClass, r: Rejection) -> Report {
    Report::rejected(match format {
        Format::Json => render::rejection_json(class, r),
        _ => render::rejection_text(class, r),
    })
}

fn internal(message: String) -> Result<Report, (i32, String)> {
    Err((EXIT_REJECTED, format!("internal verification failure: {message}")))
}

fn decompose(
    d: &Digraph,
    class: DigraphClass,
    format: Format,
    cap: OracleCap,
) -> Result<Report, (i32, String)> {
    let result = match class {
        DigraphClass::ArcLocallySemicomplete => classify_arc_locally_semicomplete(d).map(|o| {
            if let Err(e) = verify_als_outcome(d, &o, cap) {
                return internal(e.to_string());
            }
            Ok(Report::ok(match format {
                Format::Text => render::als_text(&o),
                Format::Json => render::als_json(&o),
                Format::Dot => render::als_dot(d, &o),
            }))
        }),
        _ => {
            let dec = if class == DigraphClass::InSemicomplete {
                decompose_in_semicomplete(d)
            } else {
                decompose_out_semicomplete(d)
            };
            dec.map(|dec| {
                if let Err(e) = verify_decomposition(d, &dec, cap) {
                    return internal(e.to_string());
                }
                Ok(Report::ok(match format {
                    Format::Text => render::decomposition_text(&dec),
                    Format::Json => render::decomposition_json(&dec),
                    Format::Dot => render::decomposition_dot(d, &dec),
                }))
            })
        }
    };
    match result {
        Ok(report) => report,
        Err(Error::ClassViolation(w)) => Ok(rejection(format, class, Rejection::OutOfClass(w))),
        Err(Error::Disconnected) => Ok(rejection(format, class, Rejection::Disconnected)),
        Err(e) => internal(e.to_string()),
    }
}

fn emit_digraph(d: &Digraph, format: Format) -> String {
    match format {
        Format::Text => edgelist::serialize(d),
        Format::Json => render::digraph_json(d, None),
        Format::Dot => render::plain_dot(d),
    }
}

fn generate(g: &Generate, format: Format, seed: u64) -> Result<Report, (i32, String)> {
    match g {
        Generate::ExtendedCycle { sizes } => {
            let (d, cert) = make_extended_cycle(sizes).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            Ok(Report::ok(match format {
                Format::Text => edgelist::serialize(&d),
                Format::Json => render::digraph_json(&d, Some(&cert)),
                Format::Dot => render::certificate_dot(&d, &cert),
            }))
        }
        Generate::Random { n, p_arc, p_digon } => {
            let model =
                RandomModel::new(*n, *p_arc, *p_digon, seed).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let d = random_digraph(&model).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            Ok(Report::ok(emit_digraph(&d, format)))
        }
        Generate::Member { class, n } => {
            if *n == 0 {
                return usage("--n must be at least 1");
            }
            let d = random_connected_members((*class).into(), *n..=*n, 1, seed).remove(0);
            Ok(Report::ok(emit_digraph(&d, format)))
        }
    }
}

fn oracle(kind: OracleKind, d: &Digraph, format: Format, cap: OracleCap) -> Result<Report, (i32, String)> {
    let cap_error = |e: Error| (EXIT_USAGE, e.to_string());
    let json = format == Format::Json;
    let out = match kind {
        OracleKind::Perfect => {
            let v = brute_force_is_perfect(&d.underlying_graph(), cap).map_err(cap_error)?;
            match (json, &v.witness) {
                (true, _) => render::json(&v),
                (false, Some(w)) => format!("perfect: NO\nwitness: {w}\n"),
                (false, None) => "perfect: YES\n".to_string(),
            }
        }
        OracleKind::CliqueCut => {
            let cut = brute_force_has_clique_cut(d, cap)
                .map_err(cap_error)?
                .map(|c| c.cut);
            match (json, &cut) {
                (true, _) => render::json(&serde_json::json!({ "cut": cut })),
                (false, Some(c)) => format!("clique cut: {c}\n"),
                (false, None) => "clique cut: none\n".to_string(),
            }
        }
        OracleKind::OddCycle | OracleKind::NonOriented => {
            let found = if kind == OracleKind::OddCycle {
                find_induced_odd_directed_cycle_ge5(d, cap)
            } else {
                find_induced_nonoriented_odd_cycle_ge5(d, cap)
            }
            .map_err(cap_error)?;
            match (json, &found) {
                (true, _) => render::json(&serde_json::json!({ "vertices": found })),
                (false, Some(s)) => format!("found: {s}\n"),
                (false, None) => "found: none\n".to_string(),
            }
        }
        OracleKind::ExtendedCycle => {
            let cert = recognize_extended_cycle(d);
            match (format, &cert) {
                (Format::Json, _) => render::json(&serde_json::json!({ "parts": cert })),
                (Format::Dot, Some(c)) => render::certificate_dot(d, c),
                (Format::Dot, None) => render::plain_dot(d),
                (Format::Text, Some(c)) => {
                    let parts: Vec<String> = c.parts().iter().map(|p| p.to_string()).collect();
                    format!("extended cycle: {}\n", parts.join(" "))
                }
                (Format::Text, None) => "extended cycle: none\n".to_string(),
            }
        }
    };
    Ok(Report::ok(out))
}

fn execute(cli: &Cli) -> Result<Report, (i32, String)> {
    let cap = OracleCap::new(cli.oracle_cap).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let load = |input: &Input| read_input(input).map_err(|e| (EXIT_USAGE, e));
    match &cli.command {
        Command::Classify(input) => {
            let d = load(input)?;
            let report = classify(&d);
            Ok(Report::ok(match cli.format {
                Format::Text => render::class_report_text(&report),
                Format::Json => render::class_report_json(&report),
                Format::Dot => render::components_dot(&d),
            }))
        }
        Command::Decompose { input, class } => decompose(&load(input)?, (*class).into(), cli.format, cap),
        Command::Generate(g) => generate(g, cli.format, cli.seed),
        Command::EnumerateVerify {
            n,
            class,
            properties,
            jobs,
            include_disconnected,
        } => {
            let properties = if properties.is_empty() {
                Property::ALL.to_vec()
            } else {
                properties.clone()
            };
            let spec = SweepSpec {
                connected_only: !include_disconnected,
                cap,
                jobs: *jobs,
                ..SweepSpec::new(*n, class.map(Into::into), properties)
            };
            let summary = run_exhaustive(&spec).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let mut out = match cli.format {
                Format::Json => render::json(&summary),
                _ => format!("{summary}\n"),
            };
            if let (Some(f), false) = (&summary.first_failure, cli.format == Format::Json) {
                out.push_str(&format!(
                    "first failure: index {} property {}: {}\n",
                    f.index, f.property, f.reason
                ));
            }
            Ok(if summary.is_clean() {
                Report::ok(out)
            } else {
                Report::rejected(out)
            })
        }
        Command::Oracle { kind, input } => oracle(*kind, &load(input)?, cli.format, cap),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = stdout.write_all(report.stdout.as_bytes());
            report.code
        }
        Err((code, message)) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}
