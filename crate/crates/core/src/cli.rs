//! The `dinitz` command line.
//!
//! Exit codes: 0 success or valid, 1 negative result (invalid solution,
//! property fails, no kernel) or solver defect, 2 usage or input error.
//! Machine-readable output goes to stdout, warnings and diagnostics to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::digraph::Digraph;
use crate::format::{generate_instance, GeneratorParams, InstanceFile, SolutionFile};
use crate::galvin::{
    build_square_orientation, solve_dinitz, square_kernel_oracle, square_orientation_order,
    verify_generalized_latin, DinitzError, LatinReport,
};
use crate::kernel::{find_kernel_bruteforce, has_property_x, DEFAULT_PROPERTY_X_CAP};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dinitz", version, about = "Kernel-based list coloring and Dinitz solving")]
pub struct Cli {
    /// Suppress warnings on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random instance as JSON on stdout.
    Gen {
        #[arg(long)]
        n: usize,
        /// Number of distinct labels to draw from.
        #[arg(long = "universe")]
        universe_size: usize,
        #[arg(long = "list-size")]
        list_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Permit list sizes below n (with a warning).
        #[arg(long)]
        allow_undersized: bool,
    },
    /// Solve an instance file.
    Solve {
        input: PathBuf,
        /// Solution path; stdout if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a solution against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Print the Latin-square orientation of the n x n grid in digraph text format.
    Orient { n: usize },
    /// Check that every vertex subset of a digraph has a kernel.
    Propx {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PROPERTY_X_CAP)]
        max_vertices: usize,
    },
    /// Find a kernel of the subgraph induced on a subset.
    ///
    /// SUBSET is comma-separated vertex ids ("0,3,4"), cells of a square
    /// graph ("@0,1@1,0"), "all", or "" for the empty set.
    Kernel {
        graph: PathBuf,
        subset: String,
        #[arg(long, value_enum, default_value_t = KernelMode::Bruteforce)]
        mode: KernelMode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelMode {
    Bruteforce,
    GsSquare,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    quiet: bool,
}

impl Io<'_> {
    fn warn(&mut self, msg: impl std::fmt::Display) {
        if !self.quiet {
            let _ = writeln!(self.err, "warning: {msg}");
        }
    }

    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }
}

/// Runs one parsed command and returns its exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err, quiet: cli.quiet };
    match cli.command {
        Command::Gen { n, universe_size, list_size, seed, allow_undersized } => {
            cmd_gen(&mut io, GeneratorParams { n, universe_size, list_size, seed, allow_undersized })
        }
        Command::Solve { input, output } => cmd_solve(&mut io, &input, output.as_deref()),
        Command::Verify { instance, solution } => cmd_verify(&mut io, &instance, &solution),
        Command::Orient { n } => cmd_orient(&mut io, n),
        Command::Propx { graph, max_vertices } => cmd_propx(&mut io, &graph, max_vertices),
        Command::Kernel { graph, subset, mode } => cmd_kernel(&mut io, &graph, &subset, mode),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            code
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_gen(io: &mut Io, params: GeneratorParams) -> i32 {
    if params.list_size < params.n && params.allow_undersized {
        io.warn(format!(
            "list size {} is below n = {}; the solver will reject this instance",
            params.list_size, params.n
        ));
    }
    match generate_instance(params) {
        Ok(file) => {
            let _ = io.out.write_all(file.to_json().as_bytes());
            EXIT_OK
        }
        Err(e) => io.fail(EXIT_INPUT, e),
    }
}

fn load_instance(io: &mut Io, path: &Path) -> Result<crate::galvin::DinitzInstance, i32> {
    let text = read(path).map_err(|e| io.fail(EXIT_INPUT, e))?;
    let file = InstanceFile::from_json(&text).map_err(|e| io.fail(EXIT_INPUT, e))?;
    let (inst, duplicates) = file.to_instance().map_err(|e| io.fail(EXIT_INPUT, e))?;
    for d in duplicates {
        io.warn(format!("cell ({}, {}) lists {:?} more than once", d.row, d.col, d.label));
    }
    Ok(inst)
}

fn cmd_solve(io: &mut Io, input: &Path, output: Option<&Path>) -> i32 {
    let inst = match load_instance(io, input) {
        Ok(inst) => inst,
        Err(code) => return code,
    };
    let grid = match solve_dinitz(&inst) {
        Ok(grid) => grid,
        Err(e @ DinitzError::Solver(_)) => return io.fail(EXIT_NEGATIVE, e),
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let json = SolutionFile::from_grid(&inst, &grid).to_json();
    match output {
        Some(path) => match fs::write(path, json) {
            Ok(()) => EXIT_OK,
            Err(e) => io.fail(EXIT_INPUT, format!("{}: {e}", path.display())),
        },
        None => {
            let _ = io.out.write_all(json.as_bytes());
            EXIT_OK
        }
    }
}

fn cmd_verify(io: &mut Io, instance: &Path, solution: &Path) -> i32 {
    let inst = match load_instance(io, instance) {
        Ok(inst) => inst,
        Err(code) => return code,
    };
    let parsed = read(solution)
        .and_then(|t| SolutionFile::from_json(&t).map_err(|e| e.to_string()))
        .and_then(|s| s.to_grid(&inst).map_err(|e| e.to_string()));
    let (grid, labels) = match parsed {
        Ok(x) => x,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let label = |c: u32| labels[c as usize].as_str();
    let report = match verify_generalized_latin(&inst, &grid) {
        Ok(r) => r,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let verdict = match report {
        LatinReport::Valid => {
            let _ = writeln!(io.out, "valid");
            return EXIT_OK;
        }
        LatinReport::RowRepeat { row, cols: (a, b), color } => {
            format!("row {row}: {:?} repeats at columns {a} and {b}", label(color))
        }
        LatinReport::ColumnRepeat { col, rows: (a, b), color } => {
            format!("column {col}: {:?} repeats at rows {a} and {b}", label(color))
        }
        LatinReport::NotInList { row, col, color } => {
            format!("cell ({row}, {col}): {:?} is not in its list", label(color))
        }
    };
    let _ = writeln!(io.out, "invalid: {verdict}");
    EXIT_NEGATIVE
}

fn cmd_orient(io: &mut Io, n: usize) -> i32 {
    let _ = io.out.write_all(build_square_orientation(n).to_text().as_bytes());
    EXIT_OK
}

fn load_graph(io: &mut Io, path: &Path) -> Result<Digraph, i32> {
    let text = read(path).map_err(|e| io.fail(EXIT_INPUT, e))?;
    Digraph::from_text(&text).map_err(|e| io.fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn cmd_propx(io: &mut Io, graph: &Path, cap: usize) -> i32 {
    let g = match load_graph(io, graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match has_property_x(&g, cap) {
        Ok(report) if report.holds => {
            let _ = writeln!(io.out, "holds");
            EXIT_OK
        }
        Ok(report) => {
            let witness = report.witness.expect("failing report carries a witness");
            let _ = writeln!(io.out, "fails {witness}");
            EXIT_NEGATIVE
        }
        Err(e) => io.fail(EXIT_INPUT, e),
    }
}

fn cmd_kernel(io: &mut Io, graph: &Path, subset: &str, mode: KernelMode) -> i32 {
    let g = match load_graph(io, graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let s = match parse_subset(subset, g.num_vertices()) {
        Ok(s) => s,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let kernel = match mode {
        KernelMode::Bruteforce => match find_kernel_bruteforce(&g, &s) {
            Ok(k) => k,
            Err(e) => return io.fail(EXIT_INPUT, e),
        },
        KernelMode::GsSquare => match square_orientation_order(&g) {
            Some(n) => Some(square_kernel_oracle(n, &s)),
            None => return io.fail(EXIT_INPUT, "gs-square mode needs a graph produced by `orient`"),
        },
    };
    match kernel {
        Some(k) => {
            let ids: Vec<String> = k.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(io.out, "{}", ids.join(","));
            EXIT_OK
        }
        None => {
            let _ = writeln!(io.out, "none");
            EXIT_NEGATIVE
        }
    }
}

/// Parses a subset spec against a graph on `num_vertices` vertices.
///
/// Accepts `all`, the empty string, comma-separated ids, or `@r,c` cells
/// (each cell prefixed by `@`) when `num_vertices` is a perfect square.
pub fn parse_subset(spec: &str, num_vertices: usize) -> Result<VertexSet, String> {
    let spec = spec.trim();
    if spec == "all" {
        return Ok(VertexSet::full(num_vertices));
    }
    let in_range = |v: usize| {
        if v < num_vertices {
            Ok(v)
        } else {
            Err(format!("vertex {v} outside 0..{num_vertices}"))
        }
    };
    let number = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number {:?} in subset", t.trim()));
    if spec.starts_with('@') {
        let n = (num_vertices as f64).sqrt().round() as usize;
        if n * n != num_vertices {
            return Err(format!("cell syntax needs a square graph, got {num_vertices} vertices"));
        }
        spec.split('@')
            .map(|t| t.trim().trim_end_matches([';', ',']))
            .filter(|t| !t.is_empty())
            .map(|cell| {
                let (r, c) = cell.split_once(',').ok_or_else(|| format!("bad cell {cell:?}, want @r,c"))?;
                let (r, c) = (number(r)?, number(c)?);
                if r >= n || c >= n {
                    return Err(format!("cell ({r}, {c}) outside a {n}x{n} square"));
                }
                Ok(r * n + c)
            })
            .collect()
    } else {
        spec.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| number(t).and_then(in_range))
            .collect()
    }
}
