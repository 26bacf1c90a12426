//! Command-line front end: parse body/family files, dispatch to the
//! library, and emit deterministic machine-readable reports.
//!
//! Exit codes: 0 all pass, 1 failure, 2 inconclusive, 3 usage or parse
//! error. Timings go to stderr so stdout stays bit-identical across runs
//! with the same configuration.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use coconvex::error::Error;
use coconvex::io;
use coconvex::report::{Check, Report, Status};
use coconvex::scalar::{format_rational, parse_rational};

#[derive(Parser)]
#[command(name = "cocovex", version, about = "Exact computations with coconvex bodies")]
struct Cli {
    /// Seed for every randomized choice (weight vectors, random families).
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Output style: `text` (aligned) or `kv` (key=value lines).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on enumerated bounding-box volume.
    #[arg(long, global = true, default_value_t = coconvex::geom::DEFAULT_BBOX_CAP)]
    bbox_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Body-file operations.
    Body {
        #[command(subcommand)]
        sub: BodyCmd,
    },
    /// Covolume of a body file.
    Covolume { file: PathBuf },
    /// Combine two bodies with the semigroup operation.
    Oplus {
        a: PathBuf,
        b: PathBuf,
        /// Write the combined body here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bilinear-form checks for families.
    Af {
        #[command(subcommand)]
        sub: AfCmd,
    },
    /// Plane support-number model.
    Polygon2d {
        #[command(subcommand)]
        sub: Polygon2dCmd,
    },
    /// Convex-chain identities.
    Chains {
        #[command(subcommand)]
        sub: ChainsCmd,
    },
    /// Integer-point generating functions.
    Genfun {
        #[command(subcommand)]
        sub: GenfunCmd,
    },
    /// Counting polynomial of a coconvex integer family.
    Ehrhart {
        #[arg(long)]
        family: PathBuf,
        /// Also evaluate at (-1,...,-1) and compare both sides.
        #[arg(long)]
        reciprocity: bool,
    },
    /// Run every acceptance criterion.
    Suite,
}

#[derive(Subcommand)]
enum BodyCmd {
    /// Validate a body file; print the certified threshold and covolume.
    Validate { file: PathBuf },
}

#[derive(Subcommand)]
enum AfCmd {
    /// Nonnegativity (coconvex) or signature (convex) of the family form.
    Check {
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand)]
enum Polygon2dCmd {
    /// Exact sum-of-squares data of a wedge family.
    Sos {
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand)]
enum ChainsCmd {
    /// Pointwise product identities for a body pair.
    VerifyB {
        a: PathBuf,
        b: PathBuf,
        /// Override the grid step (a rational like "1/4").
        #[arg(long)]
        grid_step: Option<String>,
        /// Dump the verified chains as (coefficient, polytope-file) pairs.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Pointwise inverse-chain identity for one body.
    VerifyInverse {
        a: PathBuf,
        #[arg(long)]
        grid_step: Option<String>,
    },
}

#[derive(Subcommand)]
enum GenfunCmd {
    /// Vertex-cone expansion for a coconvex body.
    Coconvex {
        bodyfile: PathBuf,
        /// Cross-check route: `enumeration` or `truncation`.
        #[arg(long)]
        check: Option<CheckRoute>,
    },
    /// Vertex-cone expansion for an integer polytope.
    Brion { polytopefile: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckRoute {
    Enumeration,
    Truncation,
}

struct Output {
    format: Format,
    lines: Vec<(String, String)>,
}

impl Output {
    fn new(format: Format) -> Self {
        Output { format, lines: Vec::new() }
    }

    fn push(&mut self, k: impl Into<String>, v: impl Into<String>) {
        self.lines.push((k.into(), v.into()));
    }

    fn push_check(&mut self, c: &Check) {
        self.push(format!("check.{}", c.id), c.status.word());
        for (k, v) in &c.details {
            self.push(format!("{}.{}", c.id, k), v.clone());
        }
    }

    fn print(&self) {
        match self.format {
            Format::Kv => {
                for (k, v) in &self.lines {
                    println!("{k}={v}");
                }
            }
            Format::Text => {
                let w = self.lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.lines {
                    println!("{k:<w$}  {v}");
                }
            }
        }
    }
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Inconclusive => 2,
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io(_) => 3,
        Error::Inconclusive(_) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let mut out = Output::new(cli.format);
    let code = match cli.command {
        Command::Body { sub: BodyCmd::Validate { file } } => {
            let body = io::read_body(&file)?;
            out.push("file", file.display().to_string());
            out.push("status", "valid");
            out.push("dim", body.dim().to_string());
            out.push("tstar", format_rational(body.tstar()));
            out.push("covolume", format_rational(&body.covolume()?));
            0
        }
        Command::Covolume { file } => {
            let body = io::read_body(&file)?;
            out.push("covolume", format_rational(&body.covolume()?));
            0
        }
        Command::Oplus { a, b, out: target } => {
            let sum = coconvex::body::oplus(&io::read_body(&a)?, &io::read_body(&b)?)?;
            let rendered = io::serialize_body(&sum);
            match target {
                Some(path) => {
                    std::fs::write(&path, rendered)?;
                    out.push("written", path.display().to_string());
                    out.push("covolume", format_rational(&sum.covolume()?));
                }
                None => {
                    println!("{rendered}");
                    return Ok(0);
                }
            }
            0
        }
        Command::Af { sub: AfCmd::Check { family } } => {
            let check = match io::parse_family_file(&family)? {
                io::ParsedFamily::Coconvex(fam) => {
                    coconvex::mixed::coconvex_af_check(&fam, cli.seed, 10)?
                }
                io::ParsedFamily::Convex(fam) => coconvex::mixed::convex_af_check(&fam)?,
            };
            out.push_check(&check);
            status_code(check.status)
        }
        Command::Polygon2d { sub: Polygon2dCmd::Sos { family } } => {
            let fam = io::parse_wedge_str(&std::fs::read_to_string(&family)?)?;
            let dec = coconvex::polygon2d::sos_decomposition(&fam)?;
            for (k, (c, form)) in dec.coefficients.iter().zip(&dec.base_forms).enumerate() {
                out.push(format!("c{}", k + 1), format_rational(c));
                let rendered: Vec<String> = form.iter().map(format_rational).collect();
                out.push(format!("lambda{}", k + 1), rendered.join(","));
            }
            let inertia = dec.inertia();
            out.push(
                "inertia",
                format!("({},{},{})", inertia.positive, inertia.negative, inertia.zero),
            );
            let check = coconvex::polygon2d::sos_check(&fam)?;
            out.push_check(&check);
            status_code(check.status)
        }
        Command::Chains { sub } => match sub {
            ChainsCmd::VerifyB { a, b, grid_step, dump_dir } => {
                let body_a = io::read_body(&a)?;
                let body_b = io::read_body(&b)?;
                let step = grid_step.as_deref().map(parse_rational).transpose()?;
                let check = coconvex::chains::verify_product_identities(
                    &body_a,
                    &body_b,
                    step.as_ref(),
                    cli.bbox_cap,
                )?;
                if let Some(dir) = dump_dir {
                    for (name, body) in [("a", &body_a), ("b", &body_b)] {
                        let chain = coconvex::chains::coconvex_chain(body)?;
                        let path = io::write_chain_dump(&chain, &dir, name)?;
                        out.push(format!("dump.{name}"), path.display().to_string());
                    }
                }
                out.push_check(&check);
                status_code(check.status)
            }
            ChainsCmd::VerifyInverse { a, grid_step } => {
                let body = io::read_body(&a)?;
                let step = grid_step.as_deref().map(parse_rational).transpose()?;
                let check =
                    coconvex::chains::verify_inverse_chain(&body, step.as_ref(), cli.bbox_cap)?;
                out.push_check(&check);
                status_code(check.status)
            }
        },
        Command::Genfun { sub } => match sub {
            GenfunCmd::Coconvex { bodyfile, check } => {
                let body = io::read_body(&bodyfile)?;
                let g = coconvex::genfun::genfun_coconvex(&body, cli.seed)?;
                for line in g.render() {
                    println!("{line}");
                }
                match check {
                    None => 0,
                    Some(route) => {
                        let other = match route {
                            CheckRoute::Enumeration => {
                                coconvex::genfun::genfun_enumeration_body(&body, cli.bbox_cap)?
                            }
                            CheckRoute::Truncation => {
                                coconvex::genfun::genfun_coconvex_via_truncation(&body, cli.seed)?
                            }
                        };
                        let equal = coconvex::genfun::genfun_equal(&g, &other, cli.seed)?;
                        out.push("cross_check", if equal { "pass" } else { "fail" });
                        u8::from(!equal)
                    }
                }
            }
            GenfunCmd::Brion { polytopefile } => {
                let p = io::read_polytope(&polytopefile)?;
                let g = coconvex::genfun::brion_convex(&p, cli.seed)?;
                for line in g.render() {
                    println!("{line}");
                }
                let e = coconvex::genfun::genfun_enumeration_polytope(&p, cli.bbox_cap)?;
                let equal = coconvex::genfun::genfun_equal(&g, &e, cli.seed)?;
                out.push("enumeration_check", if equal { "pass" } else { "fail" });
                u8::from(!equal)
            }
        },
        Command::Ehrhart { family, reciprocity } => {
            let fam = match io::parse_family_file(&family)? {
                io::ParsedFamily::Coconvex(f) => {
                    coconvex::ehrhart::CoconvexIntegerFamily::new(f.bodies)?
                }
                io::ParsedFamily::Convex(_) => {
                    return Err(Error::Contract(
                        "the counting polynomial needs a coconvex family".into(),
                    ))
                }
            };
            let e = coconvex::ehrhart::ehrhart_interpolate(&fam, cli.bbox_cap)?;
            out.push("polynomial", e.display("m"));
            for (expo, coeff) in e.terms() {
                let key: Vec<String> = expo.iter().map(u32::to_string).collect();
                out.push(format!("coeff[{}]", key.join(",")), format_rational(coeff));
            }
            let mut code = 0;
            if reciprocity {
                let minus = vec![-1i64; fam.nvars()];
                let lhs = coconvex::ehrhart::evaluate(&e, &minus);
                let rhs = coconvex::ehrhart::reciprocity_rhs_chain(&fam, cli.bbox_cap)?;
                out.push("E(-1,...,-1)", format_rational(&lhs));
                out.push("rhs", rhs.to_string());
                if fam.nvars() == 1 {
                    let rhs1 =
                        coconvex::ehrhart::reciprocity_rhs_n1(&fam.bodies[0], cli.bbox_cap)?;
                    out.push("rhs_enumeration", rhs1.to_string());
                }
                let ok = lhs == coconvex::Scalar::from(rhs);
                out.push("reciprocity", if ok { "pass" } else { "fail" });
                code = u8::from(!ok);
            }
            code
        }
        Command::Suite => {
            let mut report = Report::new();
            for (id, f) in coconvex::acceptance::CRITERIA {
                let start = Instant::now();
                let check = f(cli.seed)?;
                eprintln!("{id} finished in {:.2?}", start.elapsed());
                report.push(check);
            }
            for line in report.render_lines() {
                println!("{line}");
            }
            return Ok(report.exit_code() as u8);
        }
    };
    out.print();
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // keep clap's rendered help but pin the exit-code contract
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(3);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
