//! Command-line front end for the `lpm` library.
//!
//! [`run`] parses arguments, dispatches one verb and writes its output, returning the exit code:
//! 0 on success, 2 on invalid input or usage, 1 on an internal consistency failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lpm::ehrhart::{count_with, ehrhart_polynomial, hstar_from_ehrhart, CountMethod};
use lpm::fence::{fence_of_snake, linear_extension_graph, Fence};
use lpm::gorenstein::gorenstein_classify;
use lpm::lpm::{snake_composition, snakes_inside};
use lpm::polytope::{concave_points, dimension, facet_hyperplanes, h_description};
use lpm::rank2::{hstar_rank2, rank2_lpm, rank2_params, sigma, sigma_table};
use lpm::triangulation::{default_base, dual_graph, hstar_from_orientation, orient_away, volume_by_snakes};
use lpm::{Composition, Lpm};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "lpm", version, about = "Lattice path matroids, their base polytopes and h*-vectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the bases as N/E step strings
    Bases {
        lpm: String,
        #[arg(long)]
        csv: bool,
    },
    /// Dimension, H-description and concave points of the base polytope
    Polytope { lpm: String },
    /// Facet-defining hyperplanes (connected LPMs only)
    Facets {
        lpm: String,
        #[arg(long)]
        csv: bool,
    },
    /// Snakes inside the diagram with their compositions
    Snakes { lpm: String },
    /// Fence poset of a snake or a composition
    Fence(PosetInput),
    /// Linear extensions of a fence and their adjacency graph
    Extensions {
        #[command(flatten)]
        input: PosetInput,
        #[arg(long, conflicts_with = "csv")]
        dot: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Dual graph of the alcoved triangulation
    Dualgraph {
        lpm: String,
        /// Orient edges away from a base simplex
        #[arg(long)]
        orient: bool,
        /// Base node for the orientation (default: smallest vertex list)
        #[arg(long, requires = "orient")]
        base: Option<usize>,
        #[arg(long)]
        dot: bool,
    },
    /// h*-vector, length dim + 1
    Hstar {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value_t = Method::Ehrhart)]
        method: Method,
        #[arg(long)]
        csv: bool,
    },
    /// Normalized volume as a sum over snakes
    Volume {
        #[command(flatten)]
        input: MatroidInput,
    },
    /// Lattice point counts L(t) of the dilates (CSV unless --json)
    Ehrhart {
        lpm: String,
        /// Largest dilation factor (default: the dimension)
        #[arg(long)]
        tmax: Option<u64>,
        /// Count by enumerating the box instead of the prefix recursion
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Gorenstein classification with a witness
    Gorenstein { lpm: String },
    /// Normalized volume of M_n[k,l]
    Sigma { n: usize, k: usize, l: usize },
    /// Table of f_l(n) for 0 <= n <= nmax, 1 <= l <= lmax (CSV unless --json)
    SigmaTable {
        #[arg(long)]
        lmax: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MatroidInput {
    lpm: Option<String>,
    /// The rank-2 LPM M_n[k,l]
    #[arg(long, num_args = 3, value_names = ["N", "K", "L"])]
    rank2: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct PosetInput {
    #[arg(required_unless_present = "composition", conflicts_with = "composition")]
    lpm: Option<String>,
    /// Fence given directly by its composition, e.g. 1,1,2
    #[arg(long, value_delimiter = ',')]
    composition: Option<Vec<usize>>,
    /// Use the dual fence
    #[arg(long)]
    dual: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Dualgraph,
    Ehrhart,
}

enum Failure {
    Usage(String),
    Lib(lpm::Error),
}

impl From<lpm::Error> for Failure {
    fn from(e: lpm::Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn parse_lpm(text: &str) -> Result<Lpm, Failure> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid LPM JSON: {e}")))
    } else {
        Ok(text.parse()?)
    }
}

fn matroid(input: &MatroidInput) -> Result<Lpm, Failure> {
    match (&input.lpm, &input.rank2) {
        (Some(text), _) => parse_lpm(text),
        (None, Some(t)) => Ok(rank2_lpm(t[0], t[1], t[2])?),
        (None, None) => Err(Failure::Usage("an LPM or --rank2 N K L is required".into())),
    }
}

fn fence(input: &PosetInput) -> Result<Fence, Failure> {
    let f = match (&input.lpm, &input.composition) {
        (_, Some(parts)) => Fence::new(Composition::new(parts.clone())?, false),
        (Some(text), None) => fence_of_snake(&parse_lpm(text)?)?,
        (None, None) => return Err(Failure::Usage("an LPM or --composition is required".into())),
    };
    Ok(if input.dual { Fence::new(f.composition().clone(), !f.dualized()) } else { f })
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = format!("{header}\n");
    for r in rows {
        s.push_str(&r);
        s.push('\n');
    }
    s
}

fn hstar(input: &MatroidInput, method: Method) -> Result<Vec<u64>, Failure> {
    let m = matroid(input)?;
    Ok(match method {
        Method::Ehrhart => hstar_from_ehrhart(&m)?,
        Method::Dualgraph => {
            let g = dual_graph(&m)?;
            hstar_from_orientation(&orient_away(&g, default_base(&g))?)
        }
        Method::Formula => {
            let (n, k, l) = match &input.rank2 {
                Some(t) => (t[0], t[1], t[2]),
                None => rank2_params(&m)
                    .ok_or_else(|| Failure::Usage("the formula method needs a connected rank-2 LPM".into()))?,
            };
            hstar_rank2(n, k, l)?
        }
    })
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Bases { lpm, csv: as_csv } => {
            let m = parse_lpm(&lpm)?;
            let bases: Vec<String> = m.bases().iter().map(ToString::to_string).collect();
            if as_csv {
                Ok(csv("index,path", bases.iter().enumerate().map(|(i, b)| format!("{i},{b}"))))
            } else {
                Ok(line(json!({"n": m.n(), "k": m.k(), "count": bases.len(), "bases": bases})))
            }
        }
        Command::Polytope { lpm } => {
            let m = parse_lpm(&lpm)?;
            Ok(line(json!({
                "n": m.n(),
                "k": m.k(),
                "dimension": dimension(&m),
                "components": m.components(),
                "connected": m.is_connected(),
                "snake": m.is_snake(),
                "vertices": m.bases().len(),
                "h_description": h_description(&m),
                "concave_points": concave_points(&m),
            })))
        }
        Command::Facets { lpm, csv: as_csv } => {
            let facets = facet_hyperplanes(&parse_lpm(&lpm)?)?;
            if as_csv {
                Ok(csv(
                    "type,i,bound,equation",
                    facets.iter().map(|f| {
                        let tag = serde_json::to_value(f.kind).unwrap();
                        format!("{},{},{},{f}", tag.as_str().unwrap_or_default(), f.i, f.bound)
                    }),
                ))
            } else {
                let list: Vec<Value> = facets
                    .iter()
                    .map(|f| {
                        let mut v = serde_json::to_value(f).unwrap();
                        v["equation"] = Value::String(f.to_string());
                        v
                    })
                    .collect();
                Ok(line(Value::Array(list)))
            }
        }
        Command::Snakes { lpm } => {
            let m = parse_lpm(&lpm)?;
            let mut list = Vec::new();
            for (index, s) in snakes_inside(&m)?.iter().enumerate() {
                let (composition, starred) = match snake_composition(s) {
                    Ok((c, starred)) => (json!(c), json!(starred)),
                    Err(_) => (Value::Null, Value::Null),
                };
                list.push(json!({
                    "index": index,
                    "lpm": s,
                    "text": s.to_string(),
                    "composition": composition,
                    "starred": starred,
                }));
            }
            Ok(line(Value::Array(list)))
        }
        Command::Fence(input) => {
            let f = fence(&input)?;
            let poset = f.poset();
            Ok(line(json!({
                "composition": f.composition(),
                "dualized": f.dualized(),
                "size": f.size(),
                "relations": f.relations(),
                "covers": poset.covers(),
                "linear_extensions": poset.linear_extensions()?.len(),
            })))
        }
        Command::Extensions { input, dot, csv: as_csv } => {
            let g = linear_extension_graph(&fence(&input)?.poset())?;
            if dot {
                Ok(g.to_dot())
            } else if as_csv {
                Ok(csv(
                    "index,labels",
                    g.extensions.iter().enumerate().map(|(i, l)| format!("{i},{l}")),
                ))
            } else {
                Ok(line(json!({
                    "count": g.extensions.len(),
                    "extensions": g.extensions,
                    "edges": g.graph.edges(),
                })))
            }
        }
        Command::Dualgraph { lpm, orient, base, dot } => {
            let m = parse_lpm(&lpm)?;
            let g = dual_graph(&m)?;
            let o = if orient { Some(orient_away(&g, base.unwrap_or_else(|| default_base(&g)))?) } else { None };
            if dot {
                return Ok(match &o {
                    Some(o) => o.to_dot(),
                    None => g.to_dot(),
                });
            }
            let nodes: Vec<Value> = g
                .nodes
                .iter()
                .enumerate()
                .map(|(id, s)| {
                    let vertices: Vec<String> = s.vertices.iter().map(ToString::to_string).collect();
                    json!({"id": id, "snake": s.snake, "labelling": s.labelling, "vertices": vertices})
                })
                .collect();
            let snakes: Vec<String> = g.snakes.iter().map(ToString::to_string).collect();
            let mut v = json!({"snakes": snakes, "nodes": nodes, "edges": g.graph.edges()});
            if let Some(o) = &o {
                v["orientation"] = json!({
                    "base": o.base,
                    "arcs": o.arcs,
                    "in_degree": o.in_degree,
                    "hstar": hstar_from_orientation(o),
                });
            }
            Ok(line(v))
        }
        Command::Hstar { input, method, csv: as_csv } => {
            let h = hstar(&input, method)?;
            if as_csv {
                Ok(csv("i,h", h.iter().enumerate().map(|(i, x)| format!("{i},{x}"))))
            } else {
                Ok(line(json!(h)))
            }
        }
        Command::Volume { input } => Ok(line(json!(volume_by_snakes(&matroid(&input)?)?))),
        Command::Ehrhart { lpm, tmax, naive, json: as_json } => {
            let m = parse_lpm(&lpm)?;
            let d = dimension(&m);
            let method = if naive { CountMethod::Naive } else { CountMethod::Prefix };
            let counts = (0..=tmax.unwrap_or(d as u64))
                .map(|t| count_with(&m, t, method).map(|c| c.to_string()))
                .collect::<lpm::Result<Vec<_>>>()?;
            if as_json {
                let p = ehrhart_polynomial(&m);
                let coefficients: Vec<String> = p.coeffs.iter().map(ToString::to_string).collect();
                Ok(line(json!({"dimension": d, "coefficients": coefficients, "counts": counts})))
            } else {
                Ok(csv("t,count", counts.iter().enumerate().map(|(t, c)| format!("{t},{c}"))))
            }
        }
        Command::Gorenstein { lpm } => Ok(line(json!(gorenstein_classify(&parse_lpm(&lpm)?)?))),
        Command::Sigma { n, k, l } => Ok(line(json!(sigma(n, k, l)?))),
        Command::SigmaTable { lmax, nmax, json: as_json } => {
            let table = sigma_table(lmax, nmax)?;
            if as_json {
                Ok(line(json!({"lmax": lmax, "nmax": nmax, "rows": table})))
            } else {
                let header: Vec<String> =
                    std::iter::once("n".to_string()).chain((1..=lmax).map(|l| format!("l={l}"))).collect();
                Ok(csv(
                    &header.join(","),
                    table.iter().enumerate().map(|(n, row)| {
                        std::iter::once(n.to_string()).chain(row.iter().map(ToString::to_string)).collect::<Vec<_>>().join(",")
                    }),
                ))
            }
        }
    }
}

/// Run one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            if write!(out, "{text}").is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                1
            } else {
                2
            }
        }
    }
}
