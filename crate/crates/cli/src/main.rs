//! Command line for origami orbit computations: orbit summaries, diameter
//! sweeps, verification suites, prototype reductions and butterfly moves,
//! graph exports and the H(2) census.

mod config;

use clap::{Parser, Subcommand};
use config::Config;
use origami_core::error::Error as CoreError;
use origami_core::h2::{butterfly, reduce_to_reduced, spin_components, H2Prototype, Q};
use origami_core::h2_surface::{prototype_to_origami, realize_butterfly_word};
use origami_core::invariants::hlk_invariant;
use origami_core::orbit::OrbitGraph;
use origami_core::origami::Origami;
use origami_core::prym::{
    butterfly4, butterfly6, reduce4, reduce6, Prym4Prototype, Prym6Prototype,
};
use origami_core::sweep::{fit_exponent, plot_svg, sweep, SweepRecord};
use origami_core::verify::{run_suite, CheckResult, SUITES};
use serde_json::json;
use std::io::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "origami",
    about = "SL(2,Z) orbits of square-tiled surfaces: orbit graphs, prototypes, butterfly moves"
)]
struct Cli {
    /// Config file with key=value lines; ORIGAMI_* environment variables
    /// override.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize the SL(2,Z) orbit of an origami
    Orbit {
        /// Origami literal: compact "n;h-images;v-images" or a JSON record
        #[arg(long)]
        seed: String,
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Also export the graph (dot|json|edge-csv) to --out
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Sweep orbits over a range of n and report diameters vs the envelope
    Sweep {
        #[arg(long, value_parser = ["h2", "prym4", "prym6"])]
        stratum: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// csv (default), json or svg
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Run a verification suite (golden, formulas, butterflies, hl,
    /// components, bounds, orbits, or "all")
    Verify {
        suite: String,
        /// Write a machine-readable JSON report
        #[arg(long)]
        report: Option<String>,
    },
    /// Iterate B_1 to a reduced prototype, printing the trace
    Reduce {
        #[arg(long, value_parser = ["h2", "prym4", "prym6"])]
        stratum: String,
        /// Prototype literal: "(a,b,c,e)", "(w,h,t,e,+)" or "(w,h,t,e)"
        #[arg(long)]
        prototype: String,
    },
    /// Apply one butterfly move B_q
    Butterfly {
        #[arg(long, value_parser = ["h2", "prym4", "prym6"])]
        stratum: String,
        #[arg(long)]
        prototype: String,
        /// q value: a positive integer or "inf"
        #[arg(long)]
        q: String,
    },
    /// Connect two prototypes by butterfly moves through the reduced locus
    Path {
        #[arg(long, value_parser = ["h2"])]
        stratum: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Export an orbit graph
    Export {
        #[arg(long)]
        seed: String,
        #[arg(long, value_parser = ["dot", "json", "edge-csv"])]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Enumerate the primitive H(2) cusp representatives with n squares
    Census {
        #[arg(long)]
        n: usize,
        /// lines (default) or json
        #[arg(long, default_value = "lines")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
}

fn exit_code_for(err: &CoreError) -> u8 {
    match err {
        CoreError::Parse(_) | CoreError::NotBijective(_) | CoreError::BadArgument(_) => 4,
        CoreError::ResourceLimit(_) => 3,
        _ => 1,
    }
}

fn write_output(out: Option<&str>, bytes: &[u8]) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => std::io::stdout().write_all(bytes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match Config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    };
    match run(cli.command, &config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(command: Command, config: &Config) -> Result<ExitCode, CoreError> {
    match command {
        Command::Orbit {
            seed,
            max_vertices,
            format,
            out,
        } => {
            let o = Origami::parse_flexible(&seed)?;
            let g = OrbitGraph::build(&o, max_vertices.unwrap_or(config.max_vertices))?;
            let diameter = g.diameter_with_threshold(config.all_pairs_threshold);
            let hlk = hlk_invariant(&o)
                .map(|h| h.to_string())
                .unwrap_or_else(|_| "none".to_string());
            let summary = json!({
                "n": o.n(),
                "stratum": o.stratum(),
                "hlk": hlk,
                "vertices": g.len(),
                "edges": g.edge_count(),
                "diameter": diameter,
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
            if let Some(fmt) = format {
                let bytes = g.export(&fmt)?;
                write_output(out.as_deref(), &bytes)
                    .map_err(|e| CoreError::Parse(e.to_string()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            stratum,
            n_min,
            n_max,
            format,
            out,
            max_vertices,
        } => {
            if n_max > config.sweep_max_n {
                return Err(CoreError::ResourceLimit(format!(
                    "n_max {} exceeds the configured cap {}",
                    n_max, config.sweep_max_n
                )));
            }
            let records = sweep(
                &stratum,
                n_min,
                n_max,
                max_vertices.unwrap_or(config.max_vertices),
                config.all_pairs_threshold,
            )?;
            let bytes = match format.as_str() {
                "csv" => {
                    let mut s = String::from(SweepRecord::csv_header());
                    s.push('\n');
                    for r in &records {
                        s.push_str(&r.csv_row());
                        s.push('\n');
                    }
                    s.into_bytes()
                }
                "json" => serde_json::to_vec_pretty(&records).unwrap(),
                "svg" => plot_svg(&records).into_bytes(),
                other => return Err(CoreError::UnknownFormat(other.to_string())),
            };
            write_output(out.as_deref(), &bytes).map_err(|e| CoreError::Parse(e.to_string()))?;
            if format == "csv" {
                if let Ok((alpha, c, rms)) = fit_exponent(&records) {
                    eprintln!("# fit: alpha = {alpha:.4}, C = {c:.4}, rms = {rms:.4}");
                }
                let worst = records.iter().map(|r| r.ratio).fold(0.0f64, f64::max);
                eprintln!("# max ratio = {worst:.4} (cap {})", config.c_max);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, report } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all: Vec<CheckResult> = Vec::new();
            for name in names {
                all.extend(run_suite(name, config.c_max)?);
            }
            let mut passed = true;
            for r in &all {
                println!(
                    "[{}] {} — {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.details
                );
                passed &= r.passed;
            }
            if let Some(path) = report {
                let doc = json!({
                    "suite": suite,
                    "passed": passed,
                    "checks": all,
                });
                std::fs::write(path, serde_json::to_vec_pretty(&doc).unwrap())
                    .map_err(|e| CoreError::Parse(e.to_string()))?;
            }
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Reduce { stratum, prototype } => {
            let trace = match stratum.as_str() {
                "h2" => h2_reduce_trace(&prototype)?,
                "prym4" => {
                    let p = Prym4Prototype::parse(&prototype)?;
                    let (_, steps) = reduce4(&p);
                    let mut nodes = vec![p];
                    let mut cur = p;
                    for _ in 0..steps {
                        cur = butterfly4(&cur, Q::Finite(1))?;
                        nodes.push(cur);
                    }
                    trace_json(&nodes.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                }
                "prym6" => {
                    let p = Prym6Prototype::parse(&prototype)?;
                    let (_, _, steps) = reduce6(&p)?;
                    let mut nodes = vec![p];
                    let mut cur = p;
                    for _ in 0..steps {
                        cur = butterfly6(&cur, Q::Finite(1))?;
                        nodes.push(cur);
                    }
                    trace_json(&nodes.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                }
                other => return Err(CoreError::BadArgument(format!("unknown stratum {other}"))),
            };
            println!("{}", serde_json::to_string_pretty(&trace).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Butterfly { stratum, prototype, q } => {
            let q = Q::parse(&q)?;
            let image = match stratum.as_str() {
                "h2" => butterfly(&H2Prototype::parse(&prototype)?, q)?.to_string(),
                "prym4" => butterfly4(&Prym4Prototype::parse(&prototype)?, q)?.to_string(),
                "prym6" => butterfly6(&Prym6Prototype::parse(&prototype)?, q)?.to_string(),
                other => return Err(CoreError::BadArgument(format!("unknown stratum {other}"))),
            };
            println!("{image}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Path { stratum: _, from, to } => {
            let doc = h2_path(&from, &to)?;
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            seed,
            format,
            out,
            max_vertices,
        } => {
            let o = Origami::parse_flexible(&seed)?;
            let g = OrbitGraph::build(&o, max_vertices.unwrap_or(config.max_vertices))?;
            let bytes = g.export(&format)?;
            write_output(out.as_deref(), &bytes).map_err(|e| CoreError::Parse(e.to_string()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { n, format, out } => {
            let census = origami_core::census::enumerate_h2_census(n)?;
            let bytes = match format.as_str() {
                "lines" => {
                    let mut s = String::new();
                    for o in &census {
                        s.push_str(&o.compact_line());
                        s.push('\n');
                    }
                    s.into_bytes()
                }
                "json" => {
                    let records: Vec<_> = census.iter().map(|o| o.record()).collect();
                    serde_json::to_vec_pretty(&records).unwrap()
                }
                other => return Err(CoreError::UnknownFormat(other.to_string())),
            };
            write_output(out.as_deref(), &bytes).map_err(|e| CoreError::Parse(e.to_string()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn trace_json(nodes: &[String]) -> serde_json::Value {
    json!({
        "start": nodes.first(),
        "reduced": nodes.last(),
        "moves": nodes
            .windows(2)
            .map(|w| json!({"prototype": w[0], "q": 1, "to": w[1]}))
            .collect::<Vec<_>>(),
    })
}

/// B1 trace with realized word lengths when the discriminant is a square.
fn h2_reduce_trace(text: &str) -> Result<serde_json::Value, CoreError> {
    let p = H2Prototype::parse(text)?;
    let d = p.discriminant();
    let n = origami_core::arith::isqrt(d);
    let square = n * n == d;
    let (_, steps) = reduce_to_reduced(&p);
    let mut cur = p;
    let mut entries = Vec::new();
    for _ in 0..steps {
        let next = butterfly(&cur, Q::Finite(1))?;
        let word_length = if square {
            prototype_to_origami(&cur, n as usize)
                .and_then(|o| realize_butterfly_word(&o, Q::Finite(1)))
                .map(|(w, _)| w.len())
                .ok()
        } else {
            None
        };
        entries.push(json!({
            "prototype": cur.to_string(),
            "q": 1,
            "to": next.to_string(),
            "word_length": word_length,
        }));
        cur = next;
    }
    Ok(json!({
        "start": p.to_string(),
        "reduced": cur.to_string(),
        "moves": entries,
    }))
}

/// Connect two H(2) prototypes of one discriminant: reduce both, then walk
/// the reduced locus. Reports the total word length of the realized moves
/// when D is a square, and diagnoses a component mismatch otherwise.
fn h2_path(from: &str, to: &str) -> Result<serde_json::Value, CoreError> {
    let a = H2Prototype::parse(from)?;
    let b = H2Prototype::parse(to)?;
    let d = a.discriminant();
    if b.discriminant() != d {
        return Err(CoreError::BadArgument(format!(
            "discriminants differ: {} vs {}",
            d,
            b.discriminant()
        )));
    }
    let (ra, _) = reduce_to_reduced(&a);
    let (rb, _) = reduce_to_reduced(&b);
    let es = origami_core::h2::reduced_set(d)?;
    let mut prev: std::collections::HashMap<i64, (i64, Q)> = std::collections::HashMap::new();
    let mut frontier = vec![ra.e];
    let mut seen: std::collections::HashSet<i64> = frontier.iter().copied().collect();
    while !frontier.is_empty() && !seen.contains(&rb.e) {
        let mut next = Vec::new();
        for &e in &frontier {
            let p = origami_core::h2::reduced_prototype(d, e)?;
            for q in origami_core::h2::admissible_q(&p) {
                let img = butterfly(&p, q)?;
                if img.is_reduced() && es.contains(&img.e) && seen.insert(img.e) {
                    prev.insert(img.e, (e, q));
                    next.push(img.e);
                }
            }
        }
        frontier = next;
    }
    if !seen.contains(&rb.e) {
        let comps = spin_components(d)?;
        let find = |e: i64| comps.components.iter().position(|c| c.contains(&e));
        return Err(CoreError::SearchExhausted(format!(
            "{ra} and {rb} lie in different spin components ({:?} vs {:?}) of D = {d}",
            find(ra.e),
            find(rb.e)
        )));
    }
    let mut chain = vec![rb.e];
    let mut cur = rb.e;
    while cur != ra.e {
        let (p, _) = prev[&cur];
        chain.push(p);
        cur = p;
    }
    chain.reverse();
    // realized word length when D is a square
    let n = origami_core::arith::isqrt(d);
    let mut total_words: Option<usize> = if n * n == d { Some(0) } else { None };
    if let Some(total) = total_words.as_mut() {
        let mut add_reduction = |p: &H2Prototype| -> Result<(), CoreError> {
            let mut cur = *p;
            while !cur.is_reduced() {
                if let Ok(o) = prototype_to_origami(&cur, n as usize) {
                    let (w, _) = realize_butterfly_word(&o, Q::Finite(1))?;
                    *total += w.len();
                }
                cur = butterfly(&cur, Q::Finite(1))?;
            }
            Ok(())
        };
        add_reduction(&a)?;
        add_reduction(&b)?;
        for pair in chain.windows(2) {
            let p = origami_core::h2::reduced_prototype(d, pair[0])?;
            for q in origami_core::h2::admissible_q(&p) {
                let img = butterfly(&p, q)?;
                if img.is_reduced() && img.e == pair[1] {
                    if let Ok(o) = prototype_to_origami(&p, n as usize) {
                        let (w, _) = realize_butterfly_word(&o, q)?;
                        *total += w.len();
                    }
                    break;
                }
            }
        }
    }
    Ok(json!({
        "from": a.to_string(),
        "to": b.to_string(),
        "reduced_from": ra.to_string(),
        "reduced_to": rb.to_string(),
        "reduced_chain": chain,
        "total_word_length": total_words,
    }))
}
