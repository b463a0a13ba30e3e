use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use kwall::exact::parse_rat;
use kwall_cli::eval;
use kwall_cli::registry;
use kwall_cli::report::Report;
use kwall_cli::scenario::*;
use kwall_cli::verify;

/// Exact wall-crossing computations for log Fano pairs.
#[derive(Debug, Parser)]
#[command(name = "kwall", version)]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A scenario, named or read from a JSON file.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in fixture name.
    #[arg(long)]
    fixture: Option<String>,
    /// Scenario file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulated walls.
    Walls {
        #[command(subcommand)]
        which: Walls,
    },
    /// Solve `A(c) = S(c)` for one divisor.
    Wall(Source),
    /// The first wall for curves of degree `d`.
    FirstWall {
        #[arg(long)]
        degree: u64,
    },
    /// The volume profile `vol(L - tE)`.
    Volume(Source),
    /// Log canonical threshold of a germ such as "x^2 + y^13".
    Lct {
        #[arg(long)]
        germ: String,
    },
    /// Largest local Gorenstein index allowed at a coefficient.
    IndexBound {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        coeff: String,
        /// Cyclic quotient point "n,a,b" to test against the local volume bound.
        #[arg(long)]
        point: Option<String>,
        /// Order of the curve at the point.
        #[arg(long)]
        ord_d: Option<String>,
    },
    /// Centroid test of a complexity-one degeneration.
    Centroid(Source),
    /// GIT stability.
    Git {
        #[command(subcommand)]
        which: Git,
    },
    /// Degree of the CM line bundle on a hypersurface family.
    Cm {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        coeff: String,
    },
    /// Stratum of a quintic jet "s,r,h,u" or D6 point "s1,s2".
    Stratum {
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Run the acceptance checklist.
    VerifyAll,
    /// List the built-in fixtures.
    Fixtures,
    /// Evaluate a scenario of any kind.
    Run(Source),
    /// Print a built-in fixture as a scenario file.
    Export {
        #[arg(long)]
        fixture: String,
    },
}

#[derive(Debug, Subcommand)]
enum Walls {
    /// The five walls for plane quintics.
    Quintic,
}

#[derive(Debug, Subcommand)]
enum Git {
    /// Systems of binary forms.
    Binary(Source),
    /// Hilbert-Mumford weight of a plane curve support.
    Plane(Source),
}

/// Exit status when an annotation disagrees with the computed value.
const MISMATCH: u8 = 1;
/// Exit status for structural errors.
const FAILURE: u8 = 2;

fn fixture(name: &str) -> Result<Scenario> {
    registry::get(name).ok_or_else(|| anyhow!(registry::unknown_fixture_message(name)))
}

fn load(src: &Source) -> Result<Scenario> {
    match (&src.fixture, &src.file) {
        (Some(name), None) => fixture(name),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Scenario::from_json(&text).with_context(|| format!("in {}", path.display()))
        }
        _ => bail!("give exactly one of --fixture, --file"),
    }
}

fn require(s: &Scenario, kinds: &[Kind]) -> Result<()> {
    if !kinds.contains(&s.kind) {
        let want: Vec<String> = kinds.iter().map(Kind::to_string).collect();
        bail!("scenario {:?} has kind {}, expected {}", s.name, s.kind, want.join(" or "));
    }
    Ok(())
}

/// The profile part of a wall case, as its own scenario.
fn profile_scenario(s: Scenario) -> Result<Scenario> {
    if let Body::WallCase(p) = s.body()? {
        let body = match p.profile {
            Some(ProfilePayload::TwoRay(t)) => Body::TwoRay(t),
            Some(ProfilePayload::Toric(t)) => Body::Toric(t),
            None => bail!("wall case {:?} has no volume profile", s.name),
        };
        return Ok(Scenario::new(&s.name, body, &s.provenance));
    }
    Ok(s)
}

fn coeff(text: &str) -> Result<R> {
    parse_rat(text).map(R).map_err(|e| anyhow!("coefficient {text:?}: {e}"))
}

fn coeff_point(text: &str) -> Result<PointPayload> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [n, a, b] = parts.as_slice() else {
        bail!("point must be \"n,a,b\", got {text:?}");
    };
    let bad = |x: &str| anyhow!("point entry {x:?} is not an integer");
    Ok(PointPayload {
        n: n.parse().map_err(|_| bad(n))?,
        a: a.parse().map_err(|_| bad(a))?,
        b: b.parse().map_err(|_| bad(b))?,
    })
}

/// A report, plus annotation mismatches to send to stderr. `raw` replaces
/// the report when a command prints a document of its own.
struct Outcome {
    report: Report,
    mismatches: Vec<String>,
    failed: bool,
    raw: Option<String>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, mismatches: Vec::new(), failed: false, raw: None }
    }
}

fn evaluate(s: &Scenario) -> Result<Outcome> {
    let report = eval::evaluate(s)?;
    let mismatches = eval::mismatches(s, &report)
        .into_iter()
        .map(|(k, want, got)| format!("{}: {k} annotated as {want}, computed {got}", s.name))
        .collect();
    Ok(Outcome { report, mismatches, failed: false, raw: None })
}

fn adhoc(name: &str, body: Body) -> Result<Outcome> {
    evaluate(&Scenario::new(name, body, ""))
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Walls { which: Walls::Quintic } => Ok(eval::quintic_report()?.into()),
        Command::Wall(src) => {
            let s = load(&src)?;
            require(&s, &[Kind::WallCase])?;
            evaluate(&s)
        }
        Command::FirstWall { degree } => Ok(eval::first_wall_report(degree)?.into()),
        Command::Volume(src) => {
            let s = load(&src)?;
            require(&s, &[Kind::TwoRay, Kind::Toric, Kind::WallCase])?;
            evaluate(&profile_scenario(s)?)
        }
        Command::Lct { germ } => adhoc("germ", Body::Lct(LctPayload { germ: Some(germ), quasi_homogeneous: None })),
        Command::IndexBound { degree, coeff: c, point, ord_d } => {
            let point = point.as_deref().map(coeff_point).transpose()?;
            let ord_d = ord_d.as_deref().map(coeff).transpose()?;
            adhoc("index", Body::Index(IndexPayload { degree, coeff: coeff(&c)?, point, ord_d }))
        }
        Command::Centroid(src) => {
            let s = load(&src)?;
            require(&s, &[Kind::Centroid])?;
            evaluate(&s)
        }
        Command::Git { which: Git::Binary(src) } => {
            let s = load(&src)?;
            require(&s, &[Kind::GitBinary])?;
            evaluate(&s)
        }
        Command::Git { which: Git::Plane(src) } => {
            let s = load(&src)?;
            require(&s, &[Kind::GitPlane])?;
            evaluate(&s)
        }
        Command::Cm { n, degree, coeff: c } => adhoc("cm", Body::Cm(CmPayload { n, degree, coeff: coeff(&c)? })),
        Command::Stratum { coords } => {
            let p = eval::parse_coords(&coords)?;
            eval::stratum_report("stratum", &[(coords, p)]).map(Outcome::from)
        }
        Command::VerifyAll => {
            let results = verify::run_all();
            let failed = results.iter().any(|r| !r.passed);
            Ok(Outcome { report: verify::report(&results), mismatches: Vec::new(), failed, raw: None })
        }
        Command::Fixtures => {
            let mut r = Report::new("fixtures");
            let mut t = kwall_cli::report::Table::new("fixtures", &["name", "kind"]);
            for name in registry::NAMES {
                t.row(vec![name.to_string(), fixture(name)?.kind.to_string()]);
            }
            r.table(t);
            Ok(r.into())
        }
        Command::Run(src) => evaluate(&load(&src)?),
        Command::Export { fixture: name } => {
            let s = fixture(&name)?;
            Ok(Outcome { raw: Some(s.to_json()), ..Outcome::from(Report::new(name)) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if let Some(raw) = &out.raw {
                println!("{raw}");
            } else if cli.json {
                println!("{}", out.report.render_json());
            } else {
                print!("{}", out.report.render_text());
            }
            for m in &out.mismatches {
                eprintln!("annotation mismatch: {m}");
            }
            if out.failed || !out.mismatches.is_empty() {
                ExitCode::from(MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(FAILURE)
        }
    }
}
