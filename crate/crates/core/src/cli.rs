//! Command-line front end: `verify`, `search` and `table`.
//!
//! Exit status: 0 when the verdict is true or a code was found, 1 when the
//! verdict is false or nothing was found, 2 on usage errors, 3 if the fast
//! path and the oracle disagree.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::binmat::{build_generator, parity_check, systematize};
use crate::bursts::{build_syndrome_set, burst_b_weight};
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::oracle;
use crate::scanner::{scan, scan_all_hits, Verdict};
use crate::search::{CodeSpec, GuardResult, Searcher};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "burstcode",
    version,
    about = "Optimal shortened cyclic burst-correcting code search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a generator polynomial gives an [n, k, <b, ell>] code.
    Verify(VerifyArgs),
    /// Find the first generator of an [n, k, <b, ell>] code.
    Search(SearchArgs),
    /// Best codes for burst length b over a range of guard spaces.
    Table(TableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub ell: usize,
}

impl CodeArgs {
    fn spec(&self) -> Result<CodeSpec> {
        CodeSpec::new(self.n, self.k, self.b, self.ell)
    }
}

#[derive(Debug, Clone, Args)]
pub struct WorkerArgs {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "BURSTCODE_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

impl WorkerArgs {
    fn searcher(&self) -> Result<Searcher> {
        let workers = self
            .workers
            .map(|w| w as usize)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        Searcher::new(workers)
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Generator polynomial in hex, highest degree first.
    pub poly: String,
    #[command(flatten)]
    pub code: CodeArgs,
    /// Cross-check with the brute-force oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[command(flatten)]
    pub workers: WorkerArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub b: usize,
    /// Guard space range, inclusive.
    #[arg(long, num_args = 2, value_names = ["G_MIN", "G_MAX"])]
    pub g: Vec<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
    /// Also print the bit-reversed generator.
    #[arg(long)]
    pub match_paper: bool,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub workers: WorkerArgs,
}

/// Rendered command output and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Search(a) => cmd_search(a),
        Command::Table(a) => cmd_table(a),
    }
}

fn code_label(c: &CodeSpec) -> String {
    format!("[{}, {}, <{}, {}>]", c.n, c.k, c.b, c.ell)
}

fn word_positions(w: u128) -> String {
    let pos: Vec<String> = (0..128)
        .filter(|j| w >> j & 1 == 1)
        .map(|j| j.to_string())
        .collect();
    format!("{{{}}}", pos.join(","))
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let spec = args.code.spec()?;
    let g = Gf2Poly::parse_hex(&args.poly)?;
    if g.degree() != spec.redundancy() {
        return Err(Error::Argument(format!(
            "polynomial degree {} does not match n - k = {}",
            g.degree(),
            spec.redundancy()
        )));
    }
    if !g.coeff(0) {
        return Err(Error::Argument(
            "polynomial needs a nonzero constant term".into(),
        ));
    }
    let mut out = String::new();
    writeln!(out, "code {}", code_label(&spec)).unwrap();
    writeln!(out, "generator {} = {:?}", g, g).unwrap();
    writeln!(
        out,
        "burst-{} weight {}",
        spec.b,
        burst_b_weight(&g.coeffs(), spec.b)
    )
    .unwrap();

    let h = parity_check(&systematize(&build_generator(&g, spec.n, spec.k)?)?)?;
    let fast = match build_syndrome_set(&spec, &h)? {
        Err(c) => {
            writeln!(out, "syndrome set: collision at syndrome {}", c.value).unwrap();
            false
        }
        Ok(set) => {
            writeln!(out, "syndrome set: {} members", set.len()).unwrap();
            match scan(&h, spec.k, spec.b, &set) {
                Verdict::Clean => {
                    writeln!(out, "scan: clean").unwrap();
                    true
                }
                Verdict::Hit(hit) => {
                    writeln!(
                        out,
                        "scan: burst {} at start {} has syndrome {} in S",
                        hit.index(spec.b) + 1,
                        hit.start,
                        hit.syndrome
                    )
                    .unwrap();
                    let mut all: Vec<u128> = scan_all_hits(&h, spec.k, spec.b, &set)
                        .iter()
                        .map(|h| h.syndrome)
                        .collect();
                    all.sort_unstable();
                    all.dedup();
                    let list: Vec<String> = all.iter().map(u128::to_string).collect();
                    writeln!(out, "colliding syndromes: {}", list.join(" ")).unwrap();
                    false
                }
            }
        }
    };
    writeln!(out, "cyclic: {}", yes_no(g.divides_x_n_plus_1(spec.n)?)).unwrap();
    let mut code = if fast { EXIT_OK } else { EXIT_FALSE };
    if args.oracle {
        let collision = oracle::find_collision(&g, &spec)?;
        match collision {
            None => writeln!(out, "oracle: true").unwrap(),
            Some((a, b)) => writeln!(
                out,
                "oracle: false, patterns {} and {} share a syndrome",
                word_positions(a),
                word_positions(b)
            )
            .unwrap(),
        }
        if collision.is_none() != fast {
            writeln!(out, "MISMATCH between fast path and oracle").unwrap();
            code = EXIT_MISMATCH;
        }
    }
    writeln!(out, "verdict: {fast}").unwrap();
    Ok(Outcome { stdout: out, code })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_search(args: &SearchArgs) -> Result<Outcome> {
    let spec = args.code.spec()?;
    let searcher = args.workers.searcher()?;
    let r = searcher.exists_code(&spec);
    let mut out = String::new();
    writeln!(out, "code {}", code_label(&spec)).unwrap();
    match r.generator {
        Some(g) => writeln!(out, "generator {} = {:?}", g, g).unwrap(),
        None => writeln!(out, "generator none").unwrap(),
    }
    let c = r.counters;
    writeln!(
        out,
        "tested {} skipped-weight {} skipped-reversal {} S-collision {} scan-hit {}",
        c.tested, c.pruned_weight, c.pruned_reversal, c.pruned_collision, c.scan_hit
    )
    .unwrap();
    let code = if r.generator.is_some() {
        EXIT_OK
    } else {
        EXIT_FALSE
    };
    Ok(Outcome { stdout: out, code })
}

/// One `[n, k]` pair of a table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub n: usize,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BestRecord {
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub rate: f64,
}

/// A table row in the JSON layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowRecord {
    pub g: usize,
    pub per_ell: Vec<PairRecord>,
    pub best: Option<BestRecord>,
    pub poly_hex: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub poly_hex_reversed: Option<String>,
    pub cyclic: bool,
}

impl RowRecord {
    pub fn from_result(r: &GuardResult, match_paper: bool) -> Self {
        let best_g = r.best.and_then(|e| e.generator);
        RowRecord {
            g: r.g,
            per_ell: r
                .per_ell
                .iter()
                .map(|e| PairRecord { n: e.n, k: e.k })
                .collect(),
            best: r.best.map(|e| BestRecord {
                n: e.n,
                k: e.k,
                ell: e.ell,
                rate: e.rate(),
            }),
            poly_hex: best_g.map(|g| g.to_hex()),
            poly_hex_reversed: best_g
                .filter(|_| match_paper)
                .map(|g| g.reverse(g.degree() + 1).expect("fits").to_hex()),
            cyclic: r.cyclic,
        }
    }
}

pub const CSV_HEADER: &str = "g,ell,n,k,best,poly,cyclic";

pub fn render_text(rows: &[GuardResult], match_paper: bool) -> String {
    let mut out = String::new();
    for r in rows {
        let pairs: Vec<String> = r
            .per_ell
            .iter()
            .map(|e| format!("[{},{}]", e.n, e.k))
            .collect();
        write!(out, "g={}: {}", r.g, pairs.join(" ")).unwrap();
        match (r.best, r.best.and_then(|e| e.generator)) {
            (Some(best), Some(g)) => {
                write!(
                    out,
                    ", best [{},{}] ell={}, {}",
                    best.n, best.k, best.ell, g
                )
                .unwrap();
                if match_paper {
                    write!(
                        out,
                        " (reversal {})",
                        g.reverse(g.degree() + 1).expect("fits")
                    )
                    .unwrap();
                }
                write!(out, ", {}", if r.cyclic { "cyclic" } else { "non-cyclic" }).unwrap();
            }
            _ => write!(out, ", best none").unwrap(),
        }
        out.push('\n');
    }
    out
}

/// One line per `(g, ell)`. `poly` and `cyclic` describe that column's own
/// generator; `best` marks the column with the highest rate.
pub fn render_csv(rows: &[GuardResult], match_paper: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = CSV_HEADER.split(',').collect();
    if match_paper {
        header.push("poly_reversed");
    }
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        for e in &r.per_ell {
            let is_best = r.best.map(|b| b.ell) == Some(e.ell);
            let poly = e.generator.map(|g| g.to_hex()).unwrap_or_default();
            let cyclic = e
                .generator
                .map(|g| g.divides_x_n_plus_1(e.n).expect("degree below n"))
                .unwrap_or(false);
            let mut rec = vec![
                r.g.to_string(),
                e.ell.to_string(),
                e.n.to_string(),
                e.k.to_string(),
                is_best.to_string(),
                poly,
                cyclic.to_string(),
            ];
            if match_paper {
                rec.push(
                    e.generator
                        .map(|g| g.reverse(g.degree() + 1).expect("fits").to_hex())
                        .unwrap_or_default(),
                );
            }
            w.write_record(&rec).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII fields")
}

/// JSON Lines, one [`RowRecord`] per guard space.
pub fn render_json(rows: &[GuardResult], match_paper: bool) -> String {
    let mut out = String::new();
    for r in rows {
        let rec = RowRecord::from_result(r, match_paper);
        out.push_str(&serde_json::to_string(&rec).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

pub fn cmd_table(args: &TableArgs) -> Result<Outcome> {
    let (g_min, g_max) = match args.g.as_slice() {
        [lo, hi] => (*lo, *hi),
        _ => return Err(Error::Argument("--g takes G_MIN G_MAX".into())),
    };
    if g_min > g_max {
        return Err(Error::Argument(format!(
            "empty guard range {g_min}..={g_max}"
        )));
    }
    if args.b == 0 || g_min < 2 * args.b {
        return Err(Error::Argument(format!(
            "guard space must be at least 2b = {}",
            2 * args.b
        )));
    }
    let searcher = args.workers.searcher()?;
    let rows = (g_min..=g_max)
        .map(|g| searcher.best_for_guard(args.b, g))
        .collect::<Result<Vec<_>>>()?;
    let text = match args.format {
        TableFormat::Text => render_text(&rows, args.match_paper),
        TableFormat::Csv => render_csv(&rows, args.match_paper),
        TableFormat::Json => render_json(&rows, args.match_paper),
    };
    let code = if rows.iter().all(|r| r.best.is_some()) {
        EXIT_OK
    } else {
        EXIT_FALSE
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Error::Argument(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                stdout: String::new(),
                code,
            })
        }
        None => Ok(Outcome { stdout: text, code }),
    }
}
