//! Command-line front end. `run` is pure: it returns the exit code and both streams.

use std::fmt::Write;

use clap::{ColorChoice, Parser, Subcommand, ValueEnum};

use crate::analysis::{engines, Built};
use crate::catalog::{self, Target};
use crate::dump::{dump, to_json};
use crate::error::Error;
use crate::mckay::{quiver, quiver_emit, Side};
use crate::poly::{RatFun, DEFAULT_ORDER};
use crate::report::{Context, Report, Status, Suite};
use crate::series::{closed_form_invariants, closed_form_text};

#[derive(Debug, Parser)]
#[command(name = "slodowy", version, about = "Exact McKay and McKay-Slodowy computations", color = ColorChoice::Never)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Rest,
    Ind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DumpFormat {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Det,
    Molien,
    Closed,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog groups.
    ListGroups,
    /// List catalog normal pairs.
    ListPairs,
    /// Print the character table of a group.
    CharTable { group: String },
    /// Print the McKay quiver of a group, or of one side of a pair.
    Quiver {
        target: String,
        #[arg(long, value_enum, default_value = "rest")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: QuiverFormat,
    },
    /// Print the Poincaré series of one module.
    Series {
        target: String,
        /// Module label (e.g. r0, res1, ind2) or its index; default is the trivial module.
        #[arg(long)]
        label: Option<String>,
        /// Number of coefficients printed (powers 0..K-1).
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "rest")]
        side: SideArg,
    },
    /// Run a verification suite over the whole catalog.
    Verify {
        /// orthogonality, eigen, transpose, fourway, proportionality, tcheb, tables, exponents, dimsum or all
        suite: String,
        /// Print passing checks too.
        #[arg(long)]
        verbose: bool,
    },
    /// Write everything computed for a group or pair as JSON.
    Dump {
        target: String,
        #[arg(long, value_enum)]
        format: DumpFormat,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Compute(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) | Error::LabelError(_) => Failure::Usage(e.to_string()),
            e => Failure::Compute(e),
        }
    }
}

/// argv includes the program name.
pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: 2, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(()) => CliOutput { code: 0, stdout: out, stderr: String::new() },
        Err(Failure::Verify(msg)) => CliOutput { code: 1, stdout: out, stderr: msg },
        Err(Failure::Compute(e)) => CliOutput { code: 1, stdout: out, stderr: format!("error: {e}\n") },
        Err(Failure::Usage(msg)) => CliOutput { code: 2, stdout: out, stderr: format!("error: {msg}\n") },
    }
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Rest => Side::Restriction,
        SideArg::Ind => Side::Induction,
    }
}

fn execute(cmd: Command, out: &mut String) -> std::result::Result<(), Failure> {
    match cmd {
        Command::ListGroups => list_groups(out),
        Command::ListPairs => list_pairs(out),
        Command::CharTable { group } => char_table(&group, out)?,
        Command::Quiver { target, side: s, format } => {
            let b = Built::build(&target.parse()?)?;
            let (sys, _) = b.system(side(s));
            match format {
                QuiverFormat::Dot => out.push_str(&quiver_emit(sys.first(), &sys.name)),
                QuiverFormat::Json => {
                    let q = quiver(sys.first());
                    let text = serde_json::to_string_pretty(&q).map_err(|e| Error::Json(e.to_string()))?;
                    out.push_str(&text);
                    out.push('\n');
                }
            }
        }
        Command::Series { target, label, order, method, side: s } => series(&target, label, order, method, side(s), out)?,
        Command::Verify { suite, verbose } => verify(&suite, verbose, out)?,
        Command::Dump { target, format: DumpFormat::Json } => {
            let b = Built::build(&target.parse()?)?;
            out.push_str(&to_json(&dump(&b)?)?);
        }
    }
    Ok(())
}

fn list_groups(out: &mut String) {
    for g in catalog::groups() {
        let name = Target::Group(g.clone()).to_string();
        writeln!(out, "{name:<18} order {:<4} dim {}", g.expected_order(), g.dim()).unwrap();
    }
}

fn list_pairs(out: &mut String) {
    for p in catalog::pairs() {
        let name = Target::Pair(p).to_string();
        let index = p.ambient().expected_order() / p.sub().expected_order();
        writeln!(out, "{name:<18} index {index} family {}", p.family()).unwrap();
    }
}

fn char_table(name: &str, out: &mut String) -> std::result::Result<(), Failure> {
    let Target::Group(spec) = name.parse::<Target>()? else {
        return Err(Failure::Usage("char-table takes a group".into()));
    };
    let b = Built::build(&Target::Group(spec.clone()))?;
    let Built::Group(g) = &b else { unreachable!() };
    let grp = g.group();
    writeln!(out, "group:{spec} order {} classes {}", grp.order(), grp.num_classes()).unwrap();
    let sizes: Vec<String> = grp.classes().iter().map(|c| c.size().to_string()).collect();
    let orders: Vec<String> = grp.classes().iter().map(|c| grp.element_order(c.rep).to_string()).collect();
    writeln!(out, "class sizes: {}", sizes.join(" ")).unwrap();
    writeln!(out, "element orders: {}", orders.join(" ")).unwrap();
    for ((label, x), d) in g.table.labels.iter().zip(&g.table.irreducibles).zip(&g.table.degrees) {
        let vals: Vec<String> = x.values.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{label} (degree {d}): {}", vals.join(", ")).unwrap();
    }
    Ok(())
}

fn series(
    target: &str,
    label: Option<String>,
    order: usize,
    method: MethodArg,
    s: Side,
    out: &mut String,
) -> std::result::Result<(), Failure> {
    let t: Target = target.parse()?;
    let b = Built::build(&t)?;
    let (sys, table) = b.system(s);
    let e = engines(sys, table)?;
    let idx = match &label {
        None => 0,
        Some(l) => match sys.labels.iter().position(|x| x == l) {
            Some(i) => i,
            None => l
                .parse::<usize>()
                .ok()
                .filter(|&i| i < sys.labels.len())
                .ok_or_else(|| Failure::Usage(format!("unknown label {l:?}; labels: {}", sys.labels.join(" "))))?,
        },
    };
    let closed = match (&e.ty, idx) {
        (Some(ty), 0) => Some((closed_form_invariants(ty), closed_form_text(ty))),
        _ => None,
    };
    if method == MethodArg::Closed && closed.is_none() {
        return Err(Failure::Usage("a closed form exists only for the trivial module of an SL2 entry".into()));
    }
    let tag = e.ty.as_ref().map(|t| t.tag.clone()).unwrap_or_else(|| "no affine type".into());
    writeln!(out, "target: {t}").unwrap();
    writeln!(out, "system: {} ({tag})", sys.name).unwrap();
    writeln!(out, "label: {}", sys.labels[idx]).unwrap();
    let mut rows: Vec<(&str, RatFun)> = Vec::new();
    if matches!(method, MethodArg::Det | MethodArg::All) {
        rows.push(("det", e.det.series[idx].clone()));
    }
    if matches!(method, MethodArg::Molien | MethodArg::All) {
        rows.push(("molien", e.molien.series[idx].clone()));
    }
    if let (MethodArg::Closed | MethodArg::All, Some((f, _))) = (method, &closed) {
        rows.push(("closed", f.clone()));
    }
    let mut expansions = Vec::new();
    for (name, f) in &rows {
        let s = f.expand(order)?;
        writeln!(out, "{name}: {}", s.pretty()).unwrap();
        expansions.push(s);
    }
    writeln!(out, "coefficients: {}", expansions[0].coeff_string()).unwrap();
    writeln!(out, "ratfun: {}", rows[0].1).unwrap();
    if let Some((_, text)) = &closed {
        writeln!(out, "closed_form: {text}").unwrap();
    }
    if rows.iter().any(|(_, f)| *f != rows[0].1) {
        writeln!(out, "FAIL methods disagree").unwrap();
        return Err(Failure::Verify("methods disagree\n".into()));
    }
    Ok(())
}

fn verify(suite: &str, verbose: bool, out: &mut String) -> std::result::Result<(), Failure> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let ctx = if suites == [Suite::Tcheb] { Context::new(&[])? } else { Context::catalog()? };
    let mut total = Report::default();
    for s in suites {
        let r = ctx.run(s);
        for o in &r.outcomes {
            if verbose || o.status != Status::Pass {
                writeln!(out, "{o}").unwrap();
            }
        }
        writeln!(out, "{}: {}", s.name(), r.summary()).unwrap();
        total.outcomes.extend(r.outcomes);
    }
    if total.ok() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("{} verification failures\n", total.count(Status::Fail))))
    }
}
