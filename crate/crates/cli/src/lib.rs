//! The `sge` command line. [`run`] takes its streams as arguments so tests can drive it
//! in-process.

pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sge_core::certificate::VerifyReport;
use sge_core::construct::{construct, Method};
use sge_core::fmax::{max_f3, max_f4, F4Constraints};
use sge_core::formulas::{sge_grid, SgeValue};
use sge_core::solver::{exact_sge_grid, SearchBudget};
use sge_core::{from_json, to_json, verify, Certificate, DecodeError, SolveError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVALID_CERTIFICATE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "sge", version, about = "Strong edge geodetic sets on grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a certificate for P_n □ P_m and print it as JSON.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Check a certificate file ("-" reads standard input).
    Verify { file: PathBuf },
    /// Compute the exact value by exhaustive search.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Wall-clock limit in seconds.
        #[arg(long, default_value_t = 600)]
        time_limit: u64,
        #[arg(long, default_value_t = 1 << 40)]
        max_nodes: u64,
        #[arg(long, default_value_t = 1 << 16)]
        max_geodesics: usize,
        /// Also write the witness certificate here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Closed-form value, or lower and upper bounds, as JSON.
    Formula {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// CSV of formula value, construction size and (optionally) exact value per n.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        /// Run the exact solver on grids with at most this many vertices.
        #[arg(long, default_value_t = 0)]
        exact_max_vertices: usize,
    },
    /// Draw a certificate as SVG or TikZ.
    Render {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
    /// Integer maximum of the three- or four-row counting polynomial.
    Maxf {
        #[arg(long)]
        arity: u8,
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 0)]
        min_b: u64,
        #[arg(long, default_value_t = 0)]
        min_c: u64,
        #[arg(long, default_value_t = 0)]
        min_bc_sum: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Auto,
    Alg1,
    Alg1star,
    P2,
    P3,
    P4,
    General,
    Corners,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Alg1 => Method::Alg1,
            MethodArg::Alg1star => Method::Alg1Star,
            MethodArg::P2 => Method::P2,
            MethodArg::P3 => Method::P3,
            MethodArg::P4 => Method::P4,
            MethodArg::General => Method::General,
            MethodArg::Corners => Method::Corners,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Svg,
    Tikz,
}

/// A failed command: exit code plus message for standard error.
struct Failure(i32, String);

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure(EXIT_INPUT, msg.to_string())
    }

    fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Failure(EXIT_IO, format!("{}: {e}", path.display()))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure(EXIT_IO, format!("standard output: {e}")))
    }

    fn read(&mut self, path: &std::path::Path) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure(EXIT_IO, format!("standard input: {e}")))?;
            return Ok(s);
        }
        fs::read_to_string(path).map_err(|e| Failure::io(path, e))
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Failure> {
    match command {
        Command::Construct { n, m, method } => {
            let c = construct(method.into(), n, m).map_err(Failure::input)?;
            io.print(&to_json(&c))?;
            Ok(EXIT_OK)
        }
        Command::Verify { file } => verify_file(&file, io),
        Command::Exact {
            n,
            m,
            time_limit,
            max_nodes,
            max_geodesics,
            witness,
        } => {
            let budget = SearchBudget {
                max_geodesics_per_pair: max_geodesics,
                max_nodes,
                time_limit: Duration::from_secs(time_limit),
            };
            exact(n, m, &budget, witness, io)
        }
        Command::Formula { n, m } => {
            let value = sge_grid(n, m).map_err(Failure::input)?;
            let doc = match value {
                SgeValue::Exact(v) => json!({"n": n, "m": m, "value": v}),
                SgeValue::Bracket(b) => json!({"n": n, "m": m, "bracket": b}),
            };
            io.print(&format!("{doc}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Table {
            max_n,
            m,
            min_n,
            exact_max_vertices,
        } => table(min_n, max_n, m, exact_max_vertices, io),
        Command::Render { file, format, out } => {
            let c = load(&file, io)?;
            let text = match format {
                Format::Svg => render::svg(&c),
                Format::Tikz => render::tikz(&c),
            };
            fs::write(&out, text).map_err(|e| Failure::io(&out, e))?;
            Ok(EXIT_OK)
        }
        Command::Maxf {
            arity,
            s,
            min_b,
            min_c,
            min_bc_sum,
        } => {
            let doc = match arity {
                3 if min_c == 0 && min_bc_sum == 0 => {
                    serde_json::to_value(max_f3(s, min_b).map_err(Failure::input)?)
                }
                3 => return Err(Failure::input("--min-c and --min-bc-sum need --arity 4")),
                4 => {
                    let constraints = F4Constraints {
                        min_b,
                        min_c,
                        min_bc_sum,
                    };
                    serde_json::to_value(max_f4(s, constraints).map_err(Failure::input)?)
                }
                _ => return Err(Failure::input("--arity must be 3 or 4")),
            }
            .expect("plain data serializes");
            io.print(&format!("{doc}\n"))?;
            Ok(EXIT_OK)
        }
    }
}

fn decode_failure(path: &std::path::Path, e: DecodeError) -> Failure {
    let code = if e.is_syntax() {
        EXIT_INPUT
    } else {
        EXIT_INVALID_CERTIFICATE
    };
    Failure(code, format!("{}: {e}", path.display()))
}

fn load(path: &std::path::Path, io: &mut Io) -> Result<Certificate, Failure> {
    let text = io.read(path)?;
    from_json(&text).map_err(|e| decode_failure(path, e))
}

fn report_text(c: &Certificate, r: &VerifyReport) -> String {
    let mut out = format!(
        "grid: {}\nvalid: {}\nvertices: {}\npaths: {}\ncovered edges: {}/{}\n",
        c.spec,
        if r.valid { "yes" } else { "no" },
        c.size(),
        c.assignments.len(),
        r.stats.covered_edges,
        r.stats.total_edges,
    );
    for e in &r.uncovered_edges {
        out.push_str(&format!("uncovered edge: {e}\n"));
    }
    for &i in &r.non_geodesic_paths {
        out.push_str(&format!("not a geodesic: paths[{i}]\n"));
    }
    for p in &r.duplicate_pairs {
        out.push_str(&format!("pair used more than once: {p}\n"));
    }
    for &i in &r.foreign_endpoints {
        out.push_str(&format!("endpoints not a pair of S: paths[{i}]\n"));
    }
    out
}

fn verify_file(path: &std::path::Path, io: &mut Io) -> Result<i32, Failure> {
    let c = load(path, io)?;
    let r = verify(&c);
    io.print(&report_text(&c, &r))?;
    Ok(if r.valid {
        EXIT_OK
    } else {
        EXIT_INVALID_CERTIFICATE
    })
}

fn exact(
    n: usize,
    m: usize,
    budget: &SearchBudget,
    witness: Option<PathBuf>,
    io: &mut Io,
) -> Result<i32, Failure> {
    match exact_sge_grid(n, m, budget) {
        Ok((result, certificate)) => {
            let valid = verify(&certificate).valid;
            if let Some(path) = &witness {
                fs::write(path, to_json(&certificate)).map_err(|e| Failure::io(path, e))?;
            }
            let doc = json!({
                "n": n,
                "m": m,
                "value": result.value,
                "infeasibility_checked_at": result.infeasibility_checked_at,
                "witness_valid": valid,
                "stats": result.stats,
            });
            io.print(&format!("{doc}\n"))?;
            Ok(EXIT_OK)
        }
        Err(SolveError::Inconclusive {
            reason,
            proven_infeasible,
            best_found,
        }) => {
            let doc = json!({
                "n": n,
                "m": m,
                "inconclusive": reason.to_string(),
                "proven_infeasible": proven_infeasible,
                "best_found": best_found,
            });
            io.print(&format!("{doc}\n"))?;
            Ok(EXIT_INCONCLUSIVE)
        }
        Err(e) => Err(Failure::input(e)),
    }
}

fn table(
    min_n: usize,
    max_n: usize,
    m: usize,
    exact_max_vertices: usize,
    io: &mut Io,
) -> Result<i32, Failure> {
    if min_n < 2 || m < 2 {
        return Err(Failure::input("grids in the table need n, m >= 2"));
    }
    let mut out = String::from("n,m,formula,construction,exact\n");
    for n in min_n..=max_n {
        let formula = match sge_grid(n as u64, m as u64).map_err(Failure::input)? {
            SgeValue::Exact(v) => v.to_string(),
            SgeValue::Bracket(b) => format!("{}..{}", b.lower, b.upper),
        };
        let size = construct(Method::Auto, n, m).map_err(Failure::input)?.size();
        let exact = if n * m <= exact_max_vertices {
            match exact_sge_grid(n, m, &SearchBudget::default()) {
                Ok((r, _)) => r.value.to_string(),
                Err(SolveError::Inconclusive { .. }) => "inconclusive".into(),
                Err(e) => return Err(Failure::input(e)),
            }
        } else {
            String::new()
        };
        out.push_str(&format!("{n},{m},{formula},{size},{exact}\n"));
    }
    io.print(&out)?;
    Ok(EXIT_OK)
}
