//! `ulam`: sequences, verifications and injections from the command line.
//!
//! Exit status: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage, parse, domain or budget errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ulam_core::census::shapes::sequence_by_shapes;
use ulam_core::census::verify::{verify_formulas, verify_injection, FormulaLimits, InjectionKind};
use ulam_core::census::{parse_lm, sequence, verify_conjecture, Budget, ClassLabel, CountMethod};
use ulam_core::injections::{hook_inject, protected_inject};
use ulam_core::paths::{flip_inject, tableau_to_path};
use ulam_core::{rsk, rsk_inverse, Error, Execution, LatticePath, Permutation, Tableau};

#[derive(Parser)]
#[command(name = "ulam", version, about = "Log-concavity census for Ulam-distance classes")]
struct Cli {
    /// Run enumeration on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts of a class by LIS length or first-row length.
    Sequence(SequenceArgs),
    /// Exhaustive verifications.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Robinson–Schensted in either direction.
    Rsk(RskArgs),
    /// Apply an injection to an explicit pair of tableaux.
    Inject {
        #[command(subcommand)]
        what: InjectCommand,
    },
    /// Lattice path of a two-row tableau, or the flip of two paths.
    Path(PathArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Walk every member of the class.
    Enumerate,
    /// Sum tableau counts over shapes.
    Shapes,
}

#[derive(Args)]
struct SequenceArgs {
    /// u, i, h, p(l,m), a, b, m, sm, p24 or hb.
    #[arg(long = "class")]
    class: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Parameters for `--class p`, as `l,m`.
    #[arg(long)]
    lm: Option<String>,
    #[arg(long, value_enum, default_value = "enumerate")]
    method: Method,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Log-concavity of u(n, k) for every n up to `--n-max`.
    Conjecture {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "enumerate")]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Injectivity and codomain of one injection over its full domain.
    Injection {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Lower first-row length for hook and flip, middle one for
        /// protected and lift. All valid values when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// `l,m` for protected tableaux.
        #[arg(long)]
        lm: Option<String>,
        /// Second first-row length for the hook map (default k + 2).
        #[arg(long)]
        l: Option<usize>,
        /// Tableau class the lift acts on.
        #[arg(long, value_enum, default_value = "hook")]
        via: LiftVia,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Closed forms against enumeration for every n up to `--n-max`.
    Formulas {
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Hook,
    Protected,
    Flip,
    Lift,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LiftVia {
    Hook,
    TwoRow,
}

#[derive(Args)]
struct RskArgs {
    /// Permutation in one-line notation, e.g. "3,1,4,2".
    #[arg(long, conflicts_with = "inverse", required_unless_present = "inverse")]
    perm: Option<String>,
    /// Tableau pair "P;Q", e.g. "1,4/2/3;1,3/2/4".
    #[arg(long)]
    inverse: Option<String>,
}

#[derive(Subcommand)]
enum InjectCommand {
    /// The hook map; n, k and l are read off the tableaux.
    Hook {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
    },
    /// The protected-tableau map; k is one more than the first row of T1.
    Protected {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        #[arg(long)]
        lm: String,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct PathArgs {
    /// Two-row tableau, e.g. "1,3,4,5,6,7/2".
    #[arg(long)]
    tableau: Option<String>,
    #[command(subcommand)]
    flip: Option<PathCommand>,
}

#[derive(Subcommand)]
enum PathCommand {
    /// Translate, cut at the last common point, exchange tails.
    Flip {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
}

/// What went wrong, and how it maps to the exit status.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<(), Failure>;

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::from)
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let budget = match Budget::from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Sequence(args) => run_sequence(args, &budget, exec),
        Command::Verify { what } => run_verify(what, &budget, exec),
        Command::Rsk(args) => run_rsk(args),
        Command::Inject { what } => run_inject(what),
        Command::Path(args) => run_path(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn class_label(class: &str, lm: Option<&str>) -> Result<ClassLabel, Failure> {
    match (class, lm) {
        ("p" | "protected", Some(lm)) => {
            let (l, m) = parse_lm(lm)?;
            Ok(ClassLabel::Protected { l, m })
        }
        ("p" | "protected", None) => Err(Failure::Usage("class p needs --lm l,m".into())),
        (_, Some(_)) => Err(Failure::Usage("--lm only applies to class p".into())),
        (class, None) => parse(class),
    }
}

fn run_sequence(args: SequenceArgs, budget: &Budget, exec: Execution) -> Run {
    let label = class_label(&args.class, args.lm.as_deref())?;
    let seq = match args.method {
        Method::Enumerate => sequence(label, args.n, budget, exec)?,
        Method::Shapes => sequence_by_shapes(label, args.n)?,
    };
    match args.format {
        Format::Csv => print!("{}", seq.to_csv()),
        Format::Json => println!("{}", json(&seq)),
    }
    Ok(())
}

fn count_method(m: Method) -> CountMethod {
    match m {
        Method::Enumerate => CountMethod::Enumerate,
        Method::Shapes => CountMethod::Shapes,
    }
}

fn run_verify(what: VerifyCommand, budget: &Budget, exec: Execution) -> Run {
    match what {
        VerifyCommand::Conjecture { n_max, method, format } => {
            let reports = verify_conjecture(n_max, budget, exec, count_method(method))?;
            match format {
                Some(Format::Json) => println!("{}", json(&reports)),
                _ => {
                    for r in &reports {
                        if r.holds {
                            println!("n = {}: holds", r.n);
                        } else {
                            println!("n = {}: fails at k = {:?}", r.n, r.witnesses);
                        }
                    }
                }
            }
            if reports.iter().all(|r| r.holds) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        VerifyCommand::Injection { kind, n, k, lm, l, via, format } => {
            let kind = match kind {
                Kind::Hook => InjectionKind::Hook { l },
                Kind::Protected => {
                    let lm = lm.ok_or_else(|| Failure::Usage("--kind protected needs --lm l,m".into()))?;
                    let (l, m) = parse_lm(&lm)?;
                    InjectionKind::Protected { l, m }
                }
                Kind::Flip => InjectionKind::Flip,
                Kind::Lift if via == LiftVia::Hook => InjectionKind::LiftHook,
                Kind::Lift => InjectionKind::LiftTwoRow,
            };
            let reports = verify_injection(kind, n, k, budget, exec)?;
            if matches!(format, Some(Format::Json)) {
                println!("{}", json(&reports));
            } else {
                if reports.is_empty() {
                    println!("{kind} n = {n}: no valid k");
                }
                for r in &reports {
                    println!(
                        "{} n = {} k = {}: {} ({} pairs, {} distinct images, codomain {})",
                        r.kind,
                        r.n,
                        r.k,
                        if r.holds { "injective" } else { "FAILS" },
                        r.domain_size,
                        r.distinct_images,
                        if r.codomain_ok { "ok" } else { "violated" },
                    );
                    for c in &r.counterexamples {
                        println!("  {c}");
                    }
                }
            }
            if reports.iter().all(|r| r.holds) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        VerifyCommand::Formulas { n_max } => {
            let checks = verify_formulas(FormulaLimits::uniform(n_max), budget, exec)?;
            let bad: Vec<_> = checks.iter().filter(|c| !c.agrees).collect();
            for c in &bad {
                let at = c.k.map_or(String::new(), |k| format!(" k = {k}"));
                println!("{} n = {}{at}: closed form {} != counted {}", c.what, c.n, c.closed_form, c.counted);
            }
            println!("{} of {} values agree", checks.len() - bad.len(), checks.len());
            if bad.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn run_rsk(args: RskArgs) -> Run {
    if let Some(perm) = args.perm {
        let p: Permutation = parse(&perm)?;
        let (pp, qq) = rsk(&p)?;
        println!("{pp};{qq}");
    } else if let Some(pair) = args.inverse {
        let (a, b) = pair
            .split_once(';')
            .ok_or_else(|| Failure::Usage(format!("expected \"P;Q\", got {pair:?}")))?;
        let p = rsk_inverse(&parse::<Tableau>(a)?, &parse::<Tableau>(b)?)?;
        println!("{p}");
    }
    Ok(())
}

fn run_inject(what: InjectCommand) -> Run {
    let (u1, u2) = match what {
        InjectCommand::Hook { t1, t2 } => {
            let (t1, t2): (Tableau, Tableau) = (parse(&t1)?, parse(&t2)?);
            hook_inject(t1.size(), t1.first_row_len(), t2.first_row_len(), &t1, &t2)?
        }
        InjectCommand::Protected { t1, t2, lm } => {
            let (t1, t2): (Tableau, Tableau) = (parse(&t1)?, parse(&t2)?);
            let (l, m) = parse_lm(&lm)?;
            protected_inject(t1.size(), t1.first_row_len() + 1, l, m, &t1, &t2)?
        }
    };
    println!("{u1} {u2}");
    Ok(())
}

fn run_path(args: PathArgs) -> Run {
    match (args.tableau, args.flip) {
        (Some(t), None) => {
            let t: Tableau = parse(&t)?;
            println!("{}", tableau_to_path(&t)?);
        }
        (None, Some(PathCommand::Flip { p, q })) => {
            let (p, q): (LatticePath, LatticePath) = (parse(&p)?, parse(&q)?);
            let (r, s) = flip_inject(&p, &q)?;
            println!("{r} {s}");
        }
        _ => return Err(Failure::Usage("give --tableau or the flip subcommand".into())),
    }
    Ok(())
}
