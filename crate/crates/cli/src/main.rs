use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use boxkit::circulant::{gen_circulant, witness_41, witness_42};
use boxkit::coloring::{chromatic_number, greedy_coloring, maximum_independent_set, ColorClasses, CHROMATIC_GUARD, INDEPENDENCE_GUARD};
use boxkit::io::{emit, parse_graph, parse_witness, Artifact, Format, GraphFormat};
use boxkit::oracle::{boxicity_report, crown_search, guard_from_env};
use boxkit::pipeline::{certify, explore};
use boxkit::realization::realize_interval;
use boxkit::recognition::{asteroidal_triples, is_chordal, is_interval, perfect_elimination_ordering, split_partition};
use boxkit::witness::{build_family, from_neighborhoods, validate_witness, WitnessFamily};
use boxkit::{generate, Error, Graph};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "boxkit", version, about = "Split interval witnesses and box representations")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file (JSON or edge list); `-` reads stdin.
    input: PathBuf,
    #[arg(long, default_value = "auto", value_parser = parse_graph_format)]
    input_format: GraphFormat,
}

#[derive(Args)]
#[group(multiple = false)]
struct WitnessSource {
    /// Circulant G_{nb,b} with its built-in witness.
    #[arg(long, num_args = 2, value_names = ["N", "B"])]
    thm41: Option<Vec<usize>>,
    /// Circulant G_{nb+r,b} with its built-in witness.
    #[arg(long, num_args = 3, value_names = ["N", "B", "R"])]
    thm42: Option<Vec<usize>>,
    /// Neighborhood chains over an exact optimal coloring (the default).
    #[arg(long)]
    cor33: bool,
    /// Witness JSON file.
    #[arg(long, value_name = "PATH")]
    from_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: circulant A B | crown N | cycle N | path N | complete N | multipartite S..
    Gen {
        kind: String,
        params: Vec<usize>,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
    },
    /// Recognition report; with no flags every test runs.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        chordal: bool,
        #[arg(long)]
        split: bool,
        #[arg(long)]
        interval: bool,
        /// List all asteroidal triples with witness paths.
        #[arg(long)]
        at: bool,
    },
    /// Proper coloring, exact by default.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        #[arg(long)]
        greedy: bool,
        /// Vertex order for --greedy (default: 0..n).
        #[arg(long, value_delimiter = ',', requires = "greedy")]
        order: Option<Vec<usize>>,
    },
    /// Maximum independent set.
    Alpha {
        #[command(flatten)]
        input: Input,
    },
    /// Produce and validate a witness family.
    Witness {
        #[command(flatten)]
        source: WitnessSource,
        /// Graph file; implied by --thm41/--thm42.
        input: Option<PathBuf>,
        #[arg(long, default_value = "auto", value_parser = parse_graph_format)]
        input_format: GraphFormat,
    },
    /// Build and verify the split interval family of a witness.
    Family {
        #[command(flatten)]
        source: WitnessSource,
        input: Option<PathBuf>,
        #[arg(long, default_value = "auto", value_parser = parse_graph_format)]
        input_format: GraphFormat,
    },
    /// Interval model of an interval graph.
    Realize {
        #[command(flatten)]
        input: Input,
    },
    /// Full pipeline: coloring, witness, family, realizations, boxes.
    Boxes {
        #[command(flatten)]
        source: WitnessSource,
        input: Option<PathBuf>,
        #[arg(long, default_value = "auto", value_parser = parse_graph_format)]
        input_format: GraphFormat,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
    },
    /// Exact boxicity by completion catalog and set cover.
    Boxicity {
        #[command(flatten)]
        input: Input,
        /// Accepted for symmetry; the computation is always exact.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Look for a 2-dimensional box model of the crown K_{n,n} minus a perfect matching.
    CrownSearch {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every ordering instead of sampling.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Sweep circulants G_{a,b} and report which admit verified witnesses.
    Explore {
        #[arg(long, default_value_t = 16)]
        a_max: usize,
        #[arg(long, default_value_t = 4)]
        b_max: usize,
        /// Largest a for which the exact chromatic number is computed.
        #[arg(long, default_value_t = 14)]
        chi_limit: usize,
    },
    /// Re-emit a graph in another format.
    #[command(alias = "emit")]
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
    },
}

fn parse_graph_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced: an artifact, or a failed verification report.
enum Outcome {
    Done(String),
    Rejected(Value),
}

fn read_input(path: &PathBuf) -> anyhow::Result<Vec<u8>> {
    let mut bytes = Vec::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes)?;
    } else {
        bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(bytes)
}

fn load_graph(path: &PathBuf, format: GraphFormat) -> anyhow::Result<Graph> {
    let bytes = read_input(path)?;
    parse_graph(&bytes, format).with_context(|| format!("parsing {}", path.display()))
}

fn json_out(v: &Value) -> anyhow::Result<String> {
    Ok(emit(Artifact::Report(v), Format::Json)?)
}

fn classes_json(c: &ColorClasses) -> Value {
    json!({ "k": c.len(), "classes": c.classes })
}

/// Resolves the graph and witness for `witness`, `family` and `boxes`.
fn resolve(
    source: &WitnessSource,
    input: Option<&PathBuf>,
    format: GraphFormat,
) -> anyhow::Result<Result<(Graph, WitnessFamily), Value>> {
    let given = input.map(|p| load_graph(p, format)).transpose()?;
    if let Some(p) = &source.thm41 {
        let (n, b) = (p[0], p[1]);
        let g = given.unwrap_or(gen_circulant(n * b, b)?);
        return Ok(Ok((g, witness_41(n, b)?)));
    }
    if let Some(p) = &source.thm42 {
        let (n, b, r) = (p[0], p[1], p[2]);
        let g = given.unwrap_or(gen_circulant(n * b + r, b)?);
        return Ok(Ok((g, witness_42(n, b, r)?)));
    }
    let Some(g) = given else {
        bail!("a graph file is required unless --thm41 or --thm42 is given");
    };
    if let Some(path) = &source.from_file {
        let w = parse_witness(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))?;
        return Ok(Ok((g, w)));
    }
    let (chi, c) = chromatic_number(&g, CHROMATIC_GUARD)?;
    Ok(match from_neighborhoods(&g, &c)? {
        Some(w) => Ok((g, w)),
        None => Err(json!({
            "verified": false,
            "reason": "no class of the optimal coloring orders its neighborhoods into two chains",
            "chromatic": chi,
            "classes": c.classes,
        })),
    })
}

/// Validates first so that a bad witness yields a report, not an error.
fn validated(g: &Graph, w: &WitnessFamily) -> anyhow::Result<Option<Value>> {
    let report = validate_witness(g, w)?;
    if report.passes() {
        return Ok(None);
    }
    Ok(Some(json!({
        "verified": false,
        "summary": report.summary(),
        "report": report,
    })))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    use Outcome::*;
    Ok(match &cli.command {
        Command::Gen { kind, params, format } => {
            let g = match kind.as_str() {
                "circulant" => match params[..] {
                    [a, b] => gen_circulant(a, b)?,
                    _ => bail!("circulant takes two parameters: A B"),
                },
                other => generate(other, params)?,
            };
            Done(emit(Artifact::Graph(&g), *format)?)
        }
        Command::Recognize {
            input,
            chordal,
            split,
            interval,
            at,
        } => {
            let g = load_graph(&input.input, input.input_format)?;
            let all = !(*chordal || *split || *interval || *at);
            let mut report = serde_json::Map::new();
            report.insert("n".into(), json!(g.n()));
            if all || *chordal {
                report.insert("chordal".into(), json!(is_chordal(&g)));
                report.insert("elimination_order".into(), json!(perfect_elimination_ordering(&g)));
            }
            if all || *split {
                let p = split_partition(&g);
                report.insert("split".into(), json!(p.is_some()));
                report.insert("partition".into(), json!(p));
            }
            if all || *interval {
                report.insert("interval".into(), json!(is_interval(&g)));
            }
            if all || *at {
                report.insert("asteroidal_triples".into(), json!(asteroidal_triples(&g, *at)));
            }
            Done(json_out(&Value::Object(report))?)
        }
        Command::Color { input, greedy, order, .. } => {
            let g = load_graph(&input.input, input.input_format)?;
            let c = if *greedy {
                let order = order.clone().unwrap_or_else(|| (0..g.n()).collect());
                greedy_coloring(&g, &order)?
            } else {
                chromatic_number(&g, CHROMATIC_GUARD)?.1
            };
            let mut v = classes_json(&c);
            v["exact"] = json!(!*greedy);
            Done(json_out(&v)?)
        }
        Command::Alpha { input } => {
            let g = load_graph(&input.input, input.input_format)?;
            let set = maximum_independent_set(&g, INDEPENDENCE_GUARD)?;
            Done(json_out(&json!({ "alpha": set.len(), "set": set }))?)
        }
        Command::Witness {
            source,
            input,
            input_format,
        } => match resolve(source, input.as_ref(), *input_format)? {
            Err(report) => Rejected(report),
            Ok((g, w)) => match validated(&g, &w)? {
                Some(report) => Rejected(report),
                None => Done(emit(Artifact::Witness(&w), Format::Json)?),
            },
        },
        Command::Family {
            source,
            input,
            input_format,
        } => match resolve(source, input.as_ref(), *input_format)? {
            Err(report) => Rejected(report),
            Ok((g, w)) => match validated(&g, &w)? {
                Some(report) => Rejected(report),
                None => match build_family(&g, &w) {
                    Err(e) => Rejected(json!({ "verified": false, "reason": e.to_string() })),
                    Ok(family) => {
                        let members: Vec<Value> = family
                            .members
                            .iter()
                            .enumerate()
                            .map(|(i, m)| {
                                json!({
                                    "index": i + 1,
                                    "n": m.graph.n(),
                                    "edges": m.graph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                                    "partition": m.partition,
                                    "nested_neighborhoods": m.premise_holds,
                                })
                            })
                            .collect();
                        Done(json_out(&json!({
                            "verified": true,
                            "members": members,
                            "intersection": {
                                "edges": g.num_edges(),
                                "non_edges": g.non_edges().len(),
                                "equals_input": true,
                            },
                        }))?)
                    }
                },
            },
        },
        Command::Realize { input } => {
            let g = load_graph(&input.input, input.input_format)?;
            match realize_interval(&g) {
                Some(r) => Done(emit(Artifact::Realization(&r), Format::Json)?),
                None => Rejected(json!({
                    "verified": false,
                    "interval": false,
                    "chordal": is_chordal(&g),
                    "asteroidal_triples": asteroidal_triples(&g, false),
                })),
            }
        }
        Command::Boxes {
            source,
            input,
            input_format,
            format,
        } => match resolve(source, input.as_ref(), *input_format)? {
            Err(report) => Rejected(report),
            Ok((g, w)) => match validated(&g, &w)? {
                Some(report) => Rejected(report),
                None => match certify(&g, &w) {
                    Err(e) => Rejected(json!({ "verified": false, "reason": e.to_string() })),
                    Ok(cert) => Done(emit(Artifact::Boxes(&cert.boxes), *format)?),
                },
            },
        },
        Command::Boxicity { input, kmax, .. } => {
            let g = load_graph(&input.input, input.input_format)?;
            match boxicity_report(&g, *kmax, guard_from_env()) {
                Ok(report) => Done(json_out(&json!(report))?),
                Err(e @ Error::KMaxInsufficient { .. }) => Rejected(json!({
                    "verified": false,
                    "reason": e.to_string(),
                    "kmax": kmax,
                })),
                Err(e) => return Err(e.into()),
            }
        }
        Command::CrownSearch {
            n,
            trials,
            seed,
            exhaustive,
        } => {
            let report = crown_search(*n, *trials, *seed, *exhaustive)?;
            let mut v = json!(report);
            v["proves_box_above_two"] = json!(report.proves_box_above_two());
            Done(json_out(&v)?)
        }
        Command::Explore {
            a_max,
            b_max,
            chi_limit,
        } => {
            let rows = explore(*a_max, *b_max, *chi_limit)?;
            Done(json_out(&json!(rows))?)
        }
        Command::Convert { input, format } => {
            let g = load_graph(&input.input, input.input_format)?;
            Done(emit(Artifact::Graph(&g), *format)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Done(text)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(Into::into),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(2)
                }
            }
        }
        Ok(Outcome::Rejected(report)) => {
            print!("{}", emit(Artifact::Report(&report), Format::Json).unwrap_or_default());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
