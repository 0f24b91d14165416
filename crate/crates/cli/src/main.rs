//! `mckay`: command-line access to the modular McKay graph of `SL_n(p)`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mckay_core::char0::char0_neighborhood;
use mckay_core::export::{char0_dot, distance_csv, graph_dot, graph_json, plan_dot, plan_json};
use mckay_core::graph::DEFAULT_VERTEX_BUDGET;
use mckay_core::verify::verify_instance;
use mckay_core::{
    bk_children, block_form, canonical_path_char0, certified_moves, char0_distance, diameter_bound,
    is_prime, lr_neighbors, plan_path, validate_move, CertifiedGraph, DominantWeight, Error,
    IndexSets,
};
use serde_json::json;

const SCOPE_NOTE: &str = "distances are measured in the certified subgraph";

#[derive(Parser, Debug)]
#[command(name = "mckay", version, about = "Modular McKay graph of SL_n(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rank parameter of SL_n. Inferred from weight length when omitted.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Characteristic.
    #[arg(long, global = true)]
    p: Option<u64>,

    /// Weight as comma-separated entries, e.g. 1,0,2.
    #[arg(long, global = true)]
    weight: Option<String>,

    #[arg(long, global = true)]
    from: Option<String>,

    #[arg(long, global = true)]
    to: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Vertex limit for graph commands, depth limit for char0-dist.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Run breadth-first searches on all cores.
    #[arg(long, global = true)]
    parallel: bool,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Accept composite p.
    #[arg(long, global = true)]
    allow_nonprime: bool,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// f(weight) = sum of i * m_i.
    F,
    /// Root coordinates of a weight, scaled by n.
    Coeffs,
    /// Neighbours in the characteristic-zero graph.
    LrNeighbors,
    /// Characteristic-zero path from 0 to St_p.
    CanonicalPath,
    /// Distance in the characteristic-zero graph.
    Char0Dist,
    /// Addable, removable and conormal rows of the partition label.
    Conormal,
    /// Certified moves out of a p-restricted weight.
    Moves,
    /// Checks that --from -> --to is a certified edge.
    Validate,
    /// Explicit path between two p-restricted weights.
    Plan,
    /// The certified subgraph.
    Graph,
    /// Distances from --from, or the whole matrix as CSV when --from is absent.
    Bfs,
    /// Diameter of the certified subgraph.
    Diameter,
    /// Runs every self-check for (n, p).
    Verify,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

/// Failure categories, mapped to exit codes 2 and 1.
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. }
            | Error::Unreachable { .. }
            | Error::InvariantViolation(_)
            | Error::NoSuchEdge { .. } => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Rendered output plus whether the command's own check passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = if out.text.ends_with('\n') {
                out.text
            } else {
                out.text + "\n"
            };
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    let dot_only_for = |allowed: bool| {
        if fmt == Format::Dot && !allowed {
            Err(Failure::Input(format!(
                "--format dot is not available for {:?}",
                cli.command
            )))
        } else {
            Ok(())
        }
    };
    match cli.command {
        Command::F => {
            dot_only_for(false)?;
            let w = weight(cli, cli.weight.as_deref(), "--weight")?;
            Ok(Output::ok(match fmt {
                Format::Json => json!({ "weight": w, "f": w.f_value() }).to_string(),
                _ => w.f_value().to_string(),
            }))
        }
        Command::Coeffs => {
            dot_only_for(false)?;
            let w = weight(cli, cli.weight.as_deref(), "--weight")?;
            let c = w.to_scaled_root_coeffs();
            Ok(Output::ok(match fmt {
                Format::Json => json!({
                    "weight": w,
                    "n": w.n(),
                    "scaled": c.scaled(),
                    "root_coeffs": c.root_coeffs(),
                })
                .to_string(),
                _ => {
                    let n = w.n() as i64;
                    let shown: Vec<String> = c.scaled().iter().map(|&x| fraction(x, n)).collect();
                    format!("{}\n", shown.join(","))
                }
            }))
        }
        Command::LrNeighbors => {
            let w = weight(cli, cli.weight.as_deref(), "--weight")?;
            Ok(Output::ok(match fmt {
                Format::Dot => char0_dot(&char0_neighborhood(&w, 1)),
                Format::Json => {
                    let items: Vec<_> = lr_neighbors(&w)
                        .into_iter()
                        .map(|(k, v)| json!({ "edge": k.to_string(), "to": v }))
                        .collect();
                    serde_json::to_string_pretty(&items).unwrap()
                }
                Format::Text => lines(lr_neighbors(&w).iter().map(|(k, v)| format!("{k} ({v})"))),
            }))
        }
        Command::CanonicalPath => {
            dot_only_for(false)?;
            let (n, p) = instance(cli)?;
            let path = canonical_path_char0(n, p);
            Ok(Output::ok(match fmt {
                Format::Json => serde_json::to_string_pretty(&path).unwrap(),
                _ => lines(path.iter().map(|w| format!("({w})"))),
            }))
        }
        Command::Char0Dist => {
            dot_only_for(false)?;
            let (src, tgt) = endpoints(cli)?;
            let bound = cli.budget.unwrap_or(64);
            let d = char0_distance(&src, &tgt, bound)?;
            Ok(Output {
                text: match fmt {
                    Format::Json => {
                        json!({ "from": src, "to": tgt, "distance": d, "depth_limit": bound })
                            .to_string()
                    }
                    _ => d.map_or(format!("none within {bound}"), |d| d.to_string()),
                },
                ok: d.is_some(),
            })
        }
        Command::Conormal => {
            dot_only_for(false)?;
            let w = weight(cli, cli.weight.as_deref(), "--weight")?;
            let p = prime(cli)?;
            let label = w.to_partition();
            let sets = IndexSets::of(&label, p);
            let children = bk_children(&label, p);
            Ok(Output::ok(match fmt {
                Format::Json => json!({
                    "weight": w,
                    "partition": label.parts(),
                    "block_form": block_form(&label),
                    "addable": sets.addable,
                    "removable": sets.removable,
                    "conormal": sets.conormal,
                    "children": children
                        .iter()
                        .map(|(row, mu)| json!({ "row": row, "weight": mu }))
                        .collect::<Vec<_>>(),
                })
                .to_string(),
                _ => {
                    let mut out = String::new();
                    writeln!(out, "partition  {}", list(label.parts())).unwrap();
                    writeln!(out, "addable    {}", list(&sets.addable)).unwrap();
                    writeln!(out, "removable  {}", list(&sets.removable)).unwrap();
                    writeln!(out, "conormal   {}", list(&sets.conormal)).unwrap();
                    for (row, mu) in children {
                        writeln!(out, "row {row} -> ({mu})").unwrap();
                    }
                    out
                }
            }))
        }
        Command::Moves => {
            dot_only_for(false)?;
            let w = weight(cli, cli.weight.as_deref(), "--weight")?;
            let p = prime(cli)?;
            let moves = certified_moves(&w, p)?;
            Ok(Output::ok(match fmt {
                Format::Json => {
                    let items: Vec<_> = moves
                        .iter()
                        .map(|(mv, to)| json!({ "move": mv, "to": to }))
                        .collect();
                    serde_json::to_string_pretty(&items).unwrap()
                }
                _ => lines(moves.iter().map(|(mv, to)| format!("{mv} ({to})"))),
            }))
        }
        Command::Validate => {
            dot_only_for(false)?;
            let (src, tgt) = endpoints(cli)?;
            let p = prime(cli)?;
            let mv = validate_move(&src, &tgt, p)?;
            Ok(Output::ok(match fmt {
                Format::Json => json!({ "from": src, "to": tgt, "move": mv }).to_string(),
                _ => mv.to_string(),
            }))
        }
        Command::Plan => {
            let (src, tgt) = endpoints(cli)?;
            let p = prime(cli)?;
            let plan = plan_path(&src, &tgt, p)?;
            Ok(Output::ok(match fmt {
                Format::Json => plan_json(&plan),
                Format::Dot => plan_dot(&plan),
                Format::Text => {
                    let mut out = format!("length {}\n({})\n", plan.length, plan.source);
                    for (mv, w) in plan.moves.iter().zip(&plan.waypoints[1..]) {
                        writeln!(out, "  {mv} -> ({w})").unwrap();
                    }
                    out
                }
            }))
        }
        Command::Graph => {
            let g = graph(cli)?;
            Ok(Output::ok(match fmt {
                Format::Json => graph_json(&g),
                Format::Dot => graph_dot(&g),
                Format::Text => {
                    let mut out = format!("{} vertices, {} edges\n", g.len(), g.edge_count());
                    for (i, v) in g.vertices.iter().enumerate() {
                        let heads: Vec<String> = g.adjacency[i]
                            .iter()
                            .map(|e| format!("{} ({})", e.mv, g.vertices[e.to]))
                            .collect();
                        writeln!(out, "({v}): {}", heads.join("; ")).unwrap();
                    }
                    out
                }
            }))
        }
        Command::Bfs => {
            dot_only_for(false)?;
            let g = graph(cli)?;
            let Some(from) = cli.from.as_deref() else {
                let matrix = g.distance_matrix(cli.parallel);
                return Ok(Output::ok(match fmt {
                    Format::Json => serde_json::to_string(&matrix).unwrap(),
                    _ => distance_csv(&g, &matrix)?,
                }));
            };
            let src = weight(cli, Some(from), "--from")?;
            let idx = g
                .index_of(&src)
                .ok_or_else(|| Failure::Input(format!("({src}) is not {}-restricted", g.p)))?;
            let dist = g.bfs_distances(idx);
            Ok(Output::ok(match fmt {
                Format::Json => {
                    let items: Vec<_> = g
                        .vertices
                        .iter()
                        .zip(&dist)
                        .map(|(v, d)| json!({ "to": v, "distance": d }))
                        .collect();
                    serde_json::to_string_pretty(&items).unwrap()
                }
                _ => lines(
                    g.vertices
                        .iter()
                        .zip(&dist)
                        .map(|(v, d)| format!("({v}) {}", d.map_or("-".into(), |d| d.to_string()))),
                ),
            }))
        }
        Command::Diameter => {
            dot_only_for(false)?;
            let g = graph(cli)?;
            let d = g.diameter(cli.parallel)?;
            let bound = diameter_bound(g.n, g.p);
            Ok(Output::ok(match fmt {
                Format::Json => json!({
                    "n": g.n,
                    "p": g.p,
                    "diameter": d.value,
                    "source": d.source,
                    "target": d.target,
                    "bound": bound,
                    "scope": SCOPE_NOTE,
                })
                .to_string(),
                _ => {
                    eprintln!(
                        "note: {SCOPE_NOTE}; witness ({}) -> ({})",
                        d.source, d.target
                    );
                    d.value.to_string()
                }
            }))
        }
        Command::Verify => {
            dot_only_for(false)?;
            let (n, p) = instance(cli)?;
            let budget = cli.budget.unwrap_or(DEFAULT_VERTEX_BUDGET);
            let report = verify_instance(n, p, budget, cli.parallel)?;
            Ok(Output {
                text: match fmt {
                    Format::Json => serde_json::to_string_pretty(&report).unwrap(),
                    _ => report.table(),
                },
                ok: report.passed(),
            })
        }
    }
}

fn fraction(num: i64, den: i64) -> String {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = gcd(num, den).max(1);
    if den / g == 1 {
        (num / g).to_string()
    } else {
        format!("{}/{}", num / g, den / g)
    }
}

fn list<T: ToString>(items: &[T]) -> String {
    let shown: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", shown.join(","))
}

fn lines(items: impl Iterator<Item = String>) -> String {
    items.fold(String::new(), |mut out, line| {
        out.push_str(&line);
        out.push('\n');
        out
    })
}

fn check_n(n: usize) -> Result<usize, Failure> {
    if n < 2 {
        return Err(Failure::Input(format!("n must be at least 2, got {n}")));
    }
    Ok(n)
}

fn weight(cli: &Cli, text: Option<&str>, flag: &str) -> Result<DominantWeight, Failure> {
    let text = text.ok_or_else(|| Failure::Input(format!("{flag} is required")))?;
    let w: DominantWeight = text.parse()?;
    if let Some(n) = cli.n {
        check_n(n)?;
        if w.n() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: w.n(),
            }
            .into());
        }
    }
    if let Some(p) = cli.p {
        prime_value(cli, p)?;
    }
    Ok(w)
}

fn endpoints(cli: &Cli) -> Result<(DominantWeight, DominantWeight), Failure> {
    let src = weight(cli, cli.from.as_deref(), "--from")?;
    let tgt = weight(cli, cli.to.as_deref(), "--to")?;
    if src.n() != tgt.n() {
        return Err(Error::RankMismatch {
            expected: src.n(),
            found: tgt.n(),
        }
        .into());
    }
    Ok((src, tgt))
}

fn prime_value(cli: &Cli, p: u64) -> Result<u64, Failure> {
    if p < 2 {
        return Err(Failure::Input(format!("p must be at least 2, got {p}")));
    }
    if !cli.allow_nonprime && !is_prime(p) {
        return Err(Failure::Input(format!(
            "p = {p} is not prime (pass --allow-nonprime to continue)"
        )));
    }
    Ok(p)
}

fn prime(cli: &Cli) -> Result<u64, Failure> {
    let p = cli
        .p
        .ok_or_else(|| Failure::Input("--p is required".into()))?;
    prime_value(cli, p)
}

/// `(n, p)` from the flags, with `n` falling back to the length of any weight given.
fn instance(cli: &Cli) -> Result<(usize, u64), Failure> {
    let p = prime(cli)?;
    let inferred = [&cli.weight, &cli.from, &cli.to]
        .into_iter()
        .flatten()
        .next()
        .map(|text| text.parse::<DominantWeight>().map(|w| w.n()))
        .transpose()?;
    let n = match (cli.n, inferred) {
        (Some(n), Some(m)) if n != m => {
            return Err(Error::RankMismatch {
                expected: n,
                found: m,
            }
            .into())
        }
        (Some(n), _) | (None, Some(n)) => n,
        (None, None) => return Err(Failure::Input("--n is required".into())),
    };
    Ok((check_n(n)?, p))
}

fn graph(cli: &Cli) -> Result<CertifiedGraph, Failure> {
    let (n, p) = instance(cli)?;
    let budget = cli.budget.unwrap_or(DEFAULT_VERTEX_BUDGET);
    Ok(CertifiedGraph::build(n, p, budget)?)
}
