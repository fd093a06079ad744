use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qmaj::bijections::{phi_inverse_with_trace, phi_with_trace, psi_collisions, PhiTrace};
use qmaj::closedform::{mbdel_closed, mdel_closed, msch_closed};
use qmaj::stats::maj_distribution;
use qmaj::verify::{self, VerifyScope};
use qmaj::{Error, LatticeWord, PathFamily, QPoly, Result, StepOrder};

#[derive(Parser)]
#[command(
    name = "qmaj",
    version,
    about = "maj distributions over Delannoy and Schröder lattice paths, \
             with closed forms and verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every word of a path family in canonical order.
    Enumerate {
        /// Family designator: del:m,n,l, sch:n,l or bdel:n,l.
        family: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the maj distribution of a family, brute-forced and/or closed.
    Majdist {
        /// Family designator: del:m,n,l, sch:n,l or bdel:n,l.
        family: String,
        /// Step ordering, e.g. "E<D<N".
        #[arg(long)]
        order: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Apply the depth-pivot bijection (or its inverse) to one word.
    Phi {
        /// Word over E/D/N, e.g. "NENNEE".
        word: String,
        /// Step ordering, e.g. "E<D<N".
        #[arg(long)]
        order: String,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
    },
    /// Report collisions of the flawed single-letter map over the bad
    /// paths in Del(n,n,l).
    PsiCollisions { n: i64, l: i64 },
    /// Sweep the closed-form identities and bijection checks up to a
    /// bound; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value_t = 7)]
        n_max: i64,
        /// theorem | lemma | bijection | all.
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate { family, format } => cmd_enumerate(&family, format),
        Command::Majdist { family, order, mode, format } => {
            cmd_majdist(&family, &order, mode, format)
        }
        Command::Phi { word, order, direction } => cmd_phi(&word, &order, direction),
        Command::PsiCollisions { n, l } => cmd_psi_collisions(n, l),
        Command::Verify { n_max, scope, format } => cmd_verify(n_max, &scope, format),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_enumerate(family: &str, format: Format) -> Result<ExitCode> {
    let family: PathFamily = family.parse()?;
    match format {
        Format::Plain => {
            for word in family.words()? {
                println!("{word}");
            }
        }
        Format::Json => {
            let words: Vec<String> = family.words()?.map(|w| w.to_string()).collect();
            println!("{}", serde_json::to_string(&words).expect("string array"));
        }
        Format::Csv => {
            return Err(Error::InvalidFamily(
                "csv format applies to distributions; use plain or json".into(),
            ));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct MajDistOutput {
    family: String,
    order: String,
    mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<QPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<QPoly>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

fn closed_distribution(family: &PathFamily, order: StepOrder) -> Result<QPoly> {
    match *family {
        PathFamily::Del { m, n, l } => Ok(mdel_closed(m, n, l)),
        PathFamily::Sch { n, l } => msch_closed(n, l, order),
        PathFamily::BDel { n, l } => Ok(mbdel_closed(n, l, order)),
    }
}

fn cmd_majdist(family: &str, order: &str, mode: Mode, format: Format) -> Result<ExitCode> {
    let parsed: PathFamily = family.parse()?;
    let order: StepOrder = order.parse()?;
    let brute = match mode {
        Mode::Brute | Mode::Both => Some(maj_distribution(&parsed, order)?),
        Mode::Closed => None,
    };
    let closed = match mode {
        Mode::Closed | Mode::Both => Some(closed_distribution(&parsed, order)?),
        Mode::Brute => None,
    };
    let matches = brute
        .as_ref()
        .zip(closed.as_ref())
        .map(|(b, c)| b == c);

    match format {
        Format::Plain => match mode {
            Mode::Brute => println!("{}", brute.as_ref().expect("computed")),
            Mode::Closed => println!("{}", closed.as_ref().expect("computed")),
            Mode::Both => {
                println!("brute:  {}", brute.as_ref().expect("computed"));
                println!("closed: {}", closed.as_ref().expect("computed"));
                println!("{}", if matches == Some(true) { "MATCH" } else { "MISMATCH" });
            }
        },
        Format::Json => {
            let output = MajDistOutput {
                family: parsed.to_string(),
                order: order.to_string(),
                mode: match mode {
                    Mode::Brute => "brute",
                    Mode::Closed => "closed",
                    Mode::Both => "both",
                }
                .into(),
                brute,
                closed,
                matches,
            };
            println!("{}", serde_json::to_string(&output).expect("serializable"));
            if matches == Some(false) {
                return Ok(ExitCode::from(1));
            }
            return Ok(ExitCode::SUCCESS);
        }
        Format::Csv => {
            let poly = match mode {
                Mode::Brute => brute.as_ref().expect("computed"),
                Mode::Closed => closed.as_ref().expect("computed"),
                Mode::Both => {
                    return Err(Error::InvalidFamily(
                        "csv format holds a single distribution; use --mode brute or closed"
                            .into(),
                    ))
                }
            };
            let (n, l) = match parsed {
                PathFamily::Del { n, l, .. }
                | PathFamily::Sch { n, l }
                | PathFamily::BDel { n, l } => (n, l),
            };
            println!("family,n,l,order,power,coefficient");
            for (power, coeff) in poly.coeffs().iter().enumerate() {
                if !num_traits::Zero::is_zero(coeff) {
                    println!("\"{parsed}\",{n},{l},{order},{power},{coeff}");
                }
            }
        }
    }
    if matches == Some(false) {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_phi(word: &str, order: &str, direction: Direction) -> Result<ExitCode> {
    let word: LatticeWord = word.parse()?;
    let order: StepOrder = order.parse()?;
    let (image, trace): (LatticeWord, PhiTrace) = match direction {
        Direction::Forward => phi_with_trace(&word, order)?,
        Direction::Inverse => phi_inverse_with_trace(&word, order)?,
    };
    println!("{image}");
    println!(
        "k={} r={} s={} case={} maj {} -> {}",
        trace.k, trace.r, trace.s, trace.case, trace.maj_before, trace.maj_after
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_psi_collisions(n: i64, l: i64) -> Result<ExitCode> {
    let groups = psi_collisions(n, l)?;
    if groups.is_empty() {
        println!("no collisions");
    }
    for group in groups {
        let preimages: Vec<String> = group.preimages.iter().map(|w| w.to_string()).collect();
        println!("{} <= {{{}}}", group.image, preimages.join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(n_max: i64, scope: &str, format: Format) -> Result<ExitCode> {
    if n_max < 0 {
        return Err(Error::InvalidFamily("n-max must be nonnegative".into()));
    }
    let scope: VerifyScope = scope.parse()?;
    let report = verify::run(scope, n_max);
    match format {
        Format::Plain => print!("{}", report.human_summary()),
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            return Err(Error::InvalidFamily(
                "csv format applies to distributions; use plain or json".into(),
            ));
        }
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
