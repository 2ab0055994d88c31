//! Command-line front end: reads structure files, runs the verification
//! suites, and renders their reports.
//!
//! Every command prints one or more reports, as aligned plain text by
//! default or as `name<TAB>verdict<TAB>witness` lines under `--machine`.
//! The exit status is the contract scripts rely on: 0 when every check
//! passed, 1 when any check failed, 2 for unusable input (bad arguments,
//! unreadable files, parse errors).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bowtie::bilattice::{
    bilattice_eval, check_residuation, twist_construct, AbstractBilattice, Connective, EvalValue,
    TwistAlgebra,
};
use bowtie::blame::eval::{eval_cast, Outcome};
use bowtie::blame::parse::{parse_type, render_term};
use bowtie::blame::subtype::{subtype, Rel};
use bowtie::blame::suites::{blame_safety_suite, check_decomposition};
use bowtie::blame::{render_type, TypeConfig};
use bowtie::chu::{chu_carrier, verify_chu_identities, verify_term_definability, CanonicalLinear, LinearConnective, LinearEval};
use bowtie::dframe::ndframe::{check_ndframe, NdFrame};
use bowtie::dframe::partial::{dframe_from_partial, partial_frame, prec_suite};
use bowtie::dframe::formula::axiom_suite;
use bowtie::dframe::{check_dframe, dframes_isomorphic, DFrame};
use bowtie::lvar::{determinism_check, simulate, GetRecord, Trace};
use bowtie::order::{find_isomorphism, FiniteLattice};
use bowtie::structure_file::{parse_structure_file, Block, StructureFile};
use bowtie::Report;

#[derive(Parser)]
#[command(name = "bowtie", version, about = "Finite-model workbench for two-ordered algebras")]
struct Cli {
    /// Emit tab-separated report lines instead of aligned text.
    #[arg(long, global = true)]
    machine: bool,
    /// Directory to resolve relative fixture paths against.
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice law checks on the lattice blocks of a file.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Operation tables of the twist product of a file's lattices.
    Twist(FileArg),
    /// Recover the component lattice of a twist and round-trip it.
    Represent(FileArg),
    /// The linear-logic model over a Heyting algebra.
    Chu {
        #[command(subcommand)]
        cmd: ChuCmd,
    },
    /// D-frame axiom checks.
    Dframe {
        #[command(subcommand)]
        cmd: DframeCmd,
    },
    /// Negation d-frame axioms and implication theorems.
    Ndframe {
        #[command(subcommand)]
        cmd: NdframeCmd,
    },
    /// Partial-frame equivalence.
    Partial {
        #[command(subcommand)]
        cmd: PartialCmd,
    },
    /// The cast calculus: subtyping queries, evaluation, suites.
    Blame {
        #[command(subcommand)]
        cmd: BlameCmd,
    },
    /// Join-semilattice variables under interleaving.
    Lvar {
        #[command(subcommand)]
        cmd: LvarCmd,
    },
}

#[derive(Args)]
struct FileArg {
    /// Structure file to read.
    file: PathBuf,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Verify the lattice laws, optionally demanding distributivity.
    Check {
        file: PathBuf,
        /// Also require the lattice to be distributive.
        #[arg(long)]
        distributive: bool,
    },
}

#[derive(Subcommand)]
enum ChuCmd {
    /// Print one connective's full operation table.
    Table {
        file: PathBuf,
        /// oplus, tensor, with, par, dual, lolli, bang, or whynot.
        connective: String,
    },
    /// Run the term-definability and side-identity suites.
    Verify { file: PathBuf },
}

#[derive(Subcommand)]
enum DframeCmd {
    /// Verify the four d-frame axioms on every frame block.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum NdframeCmd {
    /// Verify the bridge axioms and the implication theorems.
    Verify { file: PathBuf },
}

#[derive(Subcommand)]
enum PartialCmd {
    /// Collapse to a partial frame and rebuild; check the result.
    Roundtrip { file: PathBuf },
}

#[derive(Subcommand)]
enum BlameCmd {
    /// Decide one subtyping judgment.
    Subtype {
        /// standard, naive, positive, or negative.
        rel: String,
        /// Source type, e.g. "(int -> {int: 0,1,2,3})".
        source: String,
        /// Target type.
        target: String,
    },
    /// Evaluate the term block of a file.
    Eval { file: PathBuf },
    /// Run the decomposition and blame-safety suites.
    Verify {
        /// Maximum type depth (1 to 3; safety is capped at 2).
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum LvarCmd {
    /// Run a schedule and print the trace.
    Simulate {
        file: PathBuf,
        /// Print one line per interleaving instead of program order.
        #[arg(long)]
        all_interleavings: bool,
    },
    /// Check that every interleaving agrees.
    Verify { file: PathBuf },
}

/// Unusable input; maps to exit 2.
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reports = match run(&cli) {
        Ok(reports) => reports,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let mut failures = 0;
    let mut out = String::new();
    for report in &reports {
        failures += report.failures();
        if cli.machine {
            out.push_str(&report.render_machine());
        } else {
            out.push_str(&report.to_string());
        }
    }
    // A closed pipe on the reading side is not our failure.
    use std::io::Write;
    let _ = std::io::stdout().write_all(out.as_bytes());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> Result<Vec<Report>, UsageError> {
    match &cli.command {
        Command::Lattice { cmd } => {
            let LatticeCmd::Check { file, distributive } = cmd;
            let parsed = load(cli, file)?;
            let mut reports = Vec::new();
            let mut any = false;
            for (_, block) in &parsed.blocks {
                if let Block::Lattice(l) = block {
                    any = true;
                    reports.push(lattice_laws(l, *distributive));
                }
            }
            if !any {
                return Err(UsageError(format!("no lattice block in {}", file.display())));
            }
            Ok(reports)
        }
        Command::Twist(arg) => {
            let (plus, minus) = two_lattices(&load(cli, &arg.file)?, &arg.file)?;
            Ok(vec![twist_tables(&twist_construct(&plus, &minus))])
        }
        Command::Represent(arg) => {
            let (plus, minus) = two_lattices(&load(cli, &arg.file)?, &arg.file)?;
            Ok(vec![represent(&twist_construct(&plus, &minus))?])
        }
        Command::Chu { cmd } => match cmd {
            ChuCmd::Table { file, connective } => {
                let parsed = load(cli, file)?;
                let l = first_lattice(&parsed, file)?;
                let model = chu_carrier(l)?;
                let conn = LinearConnective::parse(connective)
                    .ok_or_else(|| UsageError(format!("unknown connective {connective}")))?;
                Ok(vec![chu_table(&model, conn)])
            }
            ChuCmd::Verify { file } => {
                let parsed = load(cli, file)?;
                let model = chu_carrier(first_lattice(&parsed, file)?)?;
                let eval = CanonicalLinear(&model);
                Ok(vec![verify_term_definability(&eval), verify_chu_identities(&eval)])
            }
        },
        Command::Dframe { cmd } => {
            let DframeCmd::Check { file } = cmd;
            let parsed = load(cli, file)?;
            let mut reports = Vec::new();
            for (_, block) in &parsed.blocks {
                match block {
                    Block::DFrame(d) => reports.push(check_dframe(d)),
                    Block::NdFrame(n) => reports.push(check_dframe(&n.base)),
                    _ => {}
                }
            }
            if reports.is_empty() {
                return Err(UsageError(format!("no dframe block in {}", file.display())));
            }
            Ok(reports)
        }
        Command::Ndframe { cmd } => {
            let NdframeCmd::Verify { file } = cmd;
            let parsed = load(cli, file)?;
            let n = first_ndframe(&parsed, file)?;
            Ok(vec![check_ndframe(n), axiom_suite(n)?])
        }
        Command::Partial { cmd } => {
            let PartialCmd::Roundtrip { file } = cmd;
            let parsed = load(cli, file)?;
            let mut reports = Vec::new();
            for (_, block) in &parsed.blocks {
                let (d, bridges): (&DFrame, Option<&NdFrame>) = match block {
                    Block::DFrame(d) => (d, None),
                    Block::NdFrame(n) => (&n.base, Some(n)),
                    _ => continue,
                };
                reports.push(partial_roundtrip(d));
                if let Some(n) = bridges {
                    reports.push(prec_suite(n)?);
                }
            }
            if reports.is_empty() {
                return Err(UsageError(format!("no dframe block in {}", file.display())));
            }
            Ok(reports)
        }
        Command::Blame { cmd } => match cmd {
            BlameCmd::Subtype { rel, source, target } => {
                let rel = Rel::parse(rel).ok_or_else(|| UsageError(format!("unknown relation {rel}")))?;
                let cfg = TypeConfig::depth3_default();
                let s = parse_type(&cfg, source)?;
                let t = parse_type(&cfg, target)?;
                let mut report = Report::new("subtyping judgment");
                let judgment = format!(
                    "{} <= {} under {}",
                    render_type(&cfg, &s),
                    render_type(&cfg, &t),
                    rel.name()
                );
                report.note("query", &judgment);
                report.check("holds", subtype(rel, &s, &t), format!("{judgment} fails"));
                Ok(vec![report])
            }
            BlameCmd::Eval { file } => {
                let parsed = load(cli, file)?;
                let term = parsed
                    .first_term()
                    .ok_or_else(|| UsageError(format!("no term block in {}", file.display())))?;
                let outcome = eval_cast(&term.config, &term.term)?;
                let mut report = Report::new("cast evaluation");
                report.note("term", render_term(&term.config, &term.term));
                match outcome {
                    Outcome::Result(v) => report.note("outcome", format!("value {}", v.render(&term.config))),
                    Outcome::Blame(l) => report.note("outcome", l.describe()),
                }
                Ok(vec![report])
            }
            BlameCmd::Verify { depth } => {
                if !(1..=3).contains(depth) {
                    return Err(UsageError("depth must be between 1 and 3".to_string()));
                }
                let cfg = TypeConfig::depth3_default();
                let decomposition = check_decomposition(&cfg, *depth);
                let safety = blame_safety_suite(&cfg, (*depth).min(2))?;
                Ok(vec![decomposition, safety])
            }
        },
        Command::Lvar { cmd } => match cmd {
            LvarCmd::Simulate { file, all_interleavings } => {
                let parsed = load(cli, file)?;
                let s = parsed
                    .first_schedule()
                    .ok_or_else(|| UsageError(format!("no schedule block in {}", file.display())))?;
                let mut report = Report::new("lvar simulation");
                let orders = if *all_interleavings {
                    s.schedule.all_interleavings()
                } else {
                    let mut program_order = Vec::new();
                    for (t, ops) in s.schedule.threads.iter().enumerate() {
                        program_order.extend(std::iter::repeat(t).take(ops.len()));
                    }
                    vec![program_order]
                };
                for order in orders {
                    let trace = simulate(&s.lattice, &s.schedule, &order)?;
                    let key: String = order.iter().map(ToString::to_string).collect();
                    report.note(format!("run {key}"), describe_trace(&s.lattice, &trace));
                }
                Ok(vec![report])
            }
            LvarCmd::Verify { file } => {
                let parsed = load(cli, file)?;
                let s = parsed
                    .first_schedule()
                    .ok_or_else(|| UsageError(format!("no schedule block in {}", file.display())))?;
                Ok(vec![determinism_check(&s.lattice, &s.schedule)])
            }
        },
    }
}

/// Resolves `path` against `--fixtures` when it does not exist as given.
fn resolve(cli: &Cli, path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    match &cli.fixtures {
        Some(dir) => dir.join(path),
        None => path.to_path_buf(),
    }
}

fn load(cli: &Cli, path: &Path) -> Result<StructureFile, UsageError> {
    let resolved = resolve(cli, path);
    let text = std::fs::read_to_string(&resolved)
        .map_err(|e| UsageError(format!("{}: {e}", resolved.display())))?;
    parse_structure_file(&text).map_err(|e| UsageError(format!("{}: {e}", resolved.display())))
}

fn first_lattice<'a>(file: &'a StructureFile, path: &Path) -> Result<&'a FiniteLattice, UsageError> {
    file.first_lattice()
        .ok_or_else(|| UsageError(format!("no lattice block in {}", path.display())))
}

fn first_ndframe<'a>(file: &'a StructureFile, path: &Path) -> Result<&'a NdFrame, UsageError> {
    file.first_ndframe()
        .ok_or_else(|| UsageError(format!("no ndframe block in {}", path.display())))
}

/// The twist components named by a file: its first two lattices, or the
/// first twice when there is only one.
fn two_lattices(file: &StructureFile, path: &Path) -> Result<(FiniteLattice, FiniteLattice), UsageError> {
    let lattices: Vec<&FiniteLattice> = file
        .blocks
        .iter()
        .filter_map(|(_, b)| match b {
            Block::Lattice(l) => Some(l),
            _ => None,
        })
        .collect();
    match lattices.as_slice() {
        [] => Err(UsageError(format!("no lattice block in {}", path.display()))),
        [l] => Ok(((*l).clone(), (*l).clone())),
        [plus, minus, ..] => Ok(((*plus).clone(), (*minus).clone())),
    }
}

/// Exhaustive lattice-law scan: bounds, idempotence, commutativity,
/// absorption, associativity, and optionally distributivity.
fn lattice_laws(l: &FiniteLattice, distributive: bool) -> Report {
    let mut report = Report::new(format!("lattice laws for {}", l.name()));
    report.note("elements", l.len().to_string());
    let name = |a: usize| l.element_name(a).to_string();
    let bounds_ok = (0..l.len()).all(|a| l.leq(l.bottom(), a) && l.leq(a, l.top()));
    report.check("bounds", bounds_ok, "an element escapes the bounds");

    let mut idem = None;
    let mut comm = None;
    let mut absorb = None;
    for a in 0..l.len() {
        if l.meet(a, a) != a || l.join(a, a) != a {
            idem.get_or_insert(name(a));
        }
        for b in 0..l.len() {
            if l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a) {
                comm.get_or_insert(format!("({}, {})", name(a), name(b)));
            }
            if l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a {
                absorb.get_or_insert(format!("({}, {})", name(a), name(b)));
            }
        }
    }
    report.check("idempotence", idem.is_none(), idem.unwrap_or_default());
    report.check("commutativity", comm.is_none(), comm.unwrap_or_default());
    report.check("absorption", absorb.is_none(), absorb.unwrap_or_default());

    let mut assoc = None;
    'outer: for a in 0..l.len() {
        for b in 0..l.len() {
            for c in 0..l.len() {
                if l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c)
                    || l.join(a, l.join(b, c)) != l.join(l.join(a, b), c)
                {
                    assoc = Some(format!("({}, {}, {})", name(a), name(b), name(c)));
                    break 'outer;
                }
            }
        }
    }
    report.check("associativity", assoc.is_none(), assoc.unwrap_or_default());

    if distributive {
        let witness = l
            .distributivity_witness()
            .map(|(a, b, c)| format!("({}, {}, {})", name(a), name(b), name(c)));
        report.check(
            "distributivity",
            witness.is_none(),
            witness.unwrap_or_default(),
        );
    }
    report
}

/// Renders every available connective of a twist, one note per left
/// argument row, in declared pair order.
fn twist_tables(t: &TwistAlgebra) -> Report {
    let mut report = Report::new(format!(
        "twist tables for {} against {}",
        t.plus().name(),
        t.minus().name()
    ));
    let pairs = t.pairs();
    let carrier: Vec<String> = pairs.iter().map(|&p| t.pair_name(p)).collect();
    report.note("carrier", carrier.join(" "));
    for conn in Connective::all() {
        if matches!(conn, Connective::Not) {
            if !t.symmetric() {
                continue;
            }
            let row: Vec<String> = pairs
                .iter()
                .map(|&x| match bilattice_eval(t, conn, &[x]).expect("symmetric") {
                    EvalValue::Pair(p) => t.pair_name(p),
                    EvalValue::Bool(b) => b.to_string(),
                })
                .collect();
            report.note(conn.name(), row.join(" "));
            continue;
        }
        if matches!(
            conn,
            Connective::Implies | Connective::StrongImplies | Connective::Fusion
        ) && !t.implicative()
        {
            continue;
        }
        for &x in &pairs {
            let row: Vec<String> = pairs
                .iter()
                .map(|&y| match bilattice_eval(t, conn, &[x, y]).expect("availability checked") {
                    EvalValue::Pair(p) => t.pair_name(p),
                    EvalValue::Bool(b) => b.to_string(),
                })
                .collect();
            report.note(format!("{} {}", conn.name(), t.pair_name(x)), row.join(" "));
        }
    }
    report
}

/// Runs the representation round trip: recover the component lattice,
/// rebuild the twist, and demand an isomorphism with the original.
fn represent(t: &TwistAlgebra) -> Result<Report, UsageError> {
    let b = AbstractBilattice::from_twist(t)?;
    let mut report = Report::new(format!("twist representation of {}", b.name()));
    report.absorb("axioms", b.check_axioms());
    match b.interlacing_witness() {
        None => report.pass("interlaced"),
        Some(w) => report.fail("interlaced", w),
    }
    let (component, _) = b.twist_representation()?;
    report.note("component", format!("{} with {} elements", component.name(), component.len()));
    let rebuilt = AbstractBilattice::from_twist(&twist_construct(&component, &component))?;
    let iso = find_isomorphism(&b.as_structure(), &rebuilt.as_structure());
    report.check("round-trip-isomorphic", iso.is_some(), "no isomorphism found");
    if let Ok(residuation) = check_residuation(t) {
        report.absorb("residuation", residuation);
    }
    Ok(report)
}

/// One connective's table over the Chu carrier, one note per row.
fn chu_table(model: &bowtie::chu::ChuModel, conn: LinearConnective) -> Report {
    let mut report = Report::new(format!("chu table {} over {}", conn.name(), model.heyting().name()));
    let eval = CanonicalLinear(model);
    let carrier: Vec<String> = model.carrier().iter().map(|&p| model.pair_name(p)).collect();
    report.note("carrier", carrier.join(" "));
    let apply = |a: bowtie::bilattice::Pair, b: bowtie::bilattice::Pair| match conn {
        LinearConnective::Oplus => eval.oplus(a, b),
        LinearConnective::Tensor => eval.tensor(a, b),
        LinearConnective::With => eval.with(a, b),
        LinearConnective::Par => eval.par(a, b),
        LinearConnective::Lolli => eval.lolli(a, b),
        LinearConnective::Dual | LinearConnective::Bang | LinearConnective::WhyNot => {
            unreachable!("unary handled separately")
        }
    };
    if conn.arity() == 1 {
        let row: Vec<String> = model
            .carrier()
            .iter()
            .map(|&a| {
                let out = match conn {
                    LinearConnective::Dual => eval.dual(a),
                    LinearConnective::Bang => eval.bang(a),
                    LinearConnective::WhyNot => eval.whynot(a),
                    _ => unreachable!(),
                };
                model.pair_name(out)
            })
            .collect();
        report.note(conn.name(), row.join(" "));
    } else {
        for &a in model.carrier() {
            let row: Vec<String> = model
                .carrier()
                .iter()
                .map(|&b| model.pair_name(apply(a, b)))
                .collect();
            report.note(format!("{} {}", conn.name(), model.pair_name(a)), row.join(" "));
        }
    }
    report
}

/// Collapses a d-frame to its partial frame, rebuilds, and checks the
/// rebuilt frame is isomorphic.
fn partial_roundtrip(d: &DFrame) -> Report {
    let mut report = Report::new(format!("partial round-trip for {}", d.name));
    let partial = partial_frame(d);
    report.note("partial-elements", partial.len().to_string());
    let rebuilt = dframe_from_partial(&partial);
    report.check(
        "roundtrip-isomorphic",
        dframes_isomorphic(d, &rebuilt),
        "rebuilt frame is not isomorphic to the original",
    );
    report
}

fn describe_trace(lat: &bowtie::lvar::JoinSemilattice, trace: &Trace) -> String {
    let mut gets = Vec::new();
    for (thread, op, record) in &trace.gets {
        let answer = match record {
            GetRecord::Threshold(t) => lat.element_name(*t).to_string(),
            GetRecord::Conflict => "conflict".to_string(),
            GetRecord::Stuck => "stuck".to_string(),
        };
        gets.push(format!("{thread}.{op}={answer}"));
    }
    let gets = if gets.is_empty() {
        "none".to_string()
    } else {
        gets.join(" ")
    };
    format!(
        "final={} conflicted={} gets={}",
        trace.final_name, trace.conflicted, gets
    )
}
