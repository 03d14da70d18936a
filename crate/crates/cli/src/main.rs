use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chordcone::{
    boundary_witness, char_roots, clique_rank_one_decomposition, gen_disjoint_cliques,
    gen_max_degree_family, gen_path, gen_random_chordal, gen_random_homogeneous, is_chordal,
    is_homogeneous_chordal, membership_dual, membership_primal, minimal_polynomial,
    minimality_certificate, parse_graph, random_clique_sizes, read_pattern_matrix, reconstruct,
    report_with_certificate, ChordalCertificate, Chordality, ConeError, Graph,
    MinimalityCertificate, PatternMatrix, RankOneTerm, StructureReport, Tolerance,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod render;

const EXIT_ERROR: u8 = 1;
const EXIT_NOT_CHORDAL: u8 = 2;
const EXIT_EXTERIOR: u8 = 3;

/// Minimal polynomials and membership tests for chordal sparsity cones.
#[derive(Parser)]
#[command(name = "chordcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chordality, maximal cliques, minimal polynomial degree, bounds and ROG verdict.
    Analyze {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Tests membership of a pattern matrix in S+(G) or S*(G).
    Member {
        graph: PathBuf,
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Dual)]
        side: Side,
        #[command(flatten)]
        common: Common,
    },
    /// Boundary witness for one maximal clique, or for all of them.
    Witness {
        graph: PathBuf,
        /// Comma-separated clique nodes, e.g. 1,2.
        #[arg(long, value_parser = parse_nodes)]
        clique: Option<NodeList>,
        #[command(flatten)]
        common: Common,
    },
    /// Roots of t -> p_G(tI - X) and the hyperbolic rank of X.
    Rank {
        graph: PathBuf,
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Clique-supported rank-one decomposition of a matrix in S+(G).
    Decompose {
        graph: PathBuf,
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Writes a graph file from one of the built-in families.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clique sizes for the cliques family, e.g. 2,3.
        #[arg(long, value_parser = parse_nodes)]
        sizes: Option<NodeList>,
        /// Edge probability for the chordal family, root probability for forest.
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Relative tolerance for eigenvalue and determinant tests.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn tolerance(&self) -> Result<Tolerance> {
        Ok(Tolerance::relative(self.tol)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Primal,
    Dual,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Maxdeg,
    Cliques,
    Path,
    Chordal,
    Forest,
}

#[derive(Clone, Debug, PartialEq)]
struct NodeList(Vec<usize>);

fn parse_nodes(s: &str) -> Result<NodeList, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(NodeList)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_matrix(path: &Path, g: &Graph) -> Result<PatternMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_pattern_matrix(&text, g, path.parent())
        .with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Certificate for `g`, or an early exit naming the chordless cycle.
fn require_chordal(g: &Graph, path: &Path) -> std::result::Result<ChordalCertificate, u8> {
    match is_chordal(g) {
        Chordality::Chordal(c) => Ok(c),
        Chordality::NotChordal { cycle } => {
            eprintln!(
                "{}: not chordal, chordless cycle {}",
                path.display(),
                render::nodes(&cycle)
            );
            Err(EXIT_NOT_CHORDAL)
        }
    }
}

#[derive(Serialize)]
struct WitnessSummary {
    clique: Vec<usize>,
    target_min_eigenvalue: f64,
    others_min_eigenvalue: f64,
    value: f64,
}

#[derive(Serialize)]
struct MinimalitySummary {
    degree: usize,
    minimal: bool,
    witnesses: Vec<WitnessSummary>,
}

impl From<&MinimalityCertificate> for MinimalitySummary {
    fn from(m: &MinimalityCertificate) -> Self {
        MinimalitySummary {
            degree: m.degree,
            minimal: m.minimal,
            witnesses: m
                .witnesses
                .iter()
                .map(|w| WitnessSummary {
                    clique: w.clique.clone(),
                    target_min_eigenvalue: w.target.min_eigenvalue,
                    others_min_eigenvalue: w
                        .others
                        .iter()
                        .map(|o| o.check.min_eigenvalue)
                        .fold(f64::INFINITY, f64::min),
                    value: w.value,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Analysis {
    Chordal {
        file: String,
        chordal: bool,
        peo: Vec<usize>,
        cliques: Vec<Vec<usize>>,
        homogeneity: chordcone::Homogeneity,
        report: Box<StructureReport>,
        minimality: MinimalitySummary,
    },
    NotChordal {
        file: String,
        chordal: bool,
        cycle: Vec<usize>,
    },
}

fn analyze_one(path: &Path, tol: &Tolerance) -> Result<Analysis> {
    let g = read_graph(path)?;
    let file = path.display().to_string();
    let cert = match is_chordal(&g) {
        Chordality::Chordal(c) => c,
        Chordality::NotChordal { cycle } => {
            return Ok(Analysis::NotChordal {
                file,
                chordal: false,
                cycle,
            })
        }
    };
    let report = report_with_certificate(&g, &cert)?;
    let minimality = minimality_certificate(&g, &cert, tol)?;
    Ok(Analysis::Chordal {
        file,
        chordal: true,
        peo: cert.peo.clone(),
        homogeneity: is_homogeneous_chordal(&g),
        cliques: cert.maximal_cliques,
        report: Box::new(report),
        minimality: MinimalitySummary::from(&minimality),
    })
}

fn cmd_analyze(graphs: &[PathBuf], common: &Common) -> Result<u8> {
    let tol = common.tolerance()?;
    let (mut failed, mut non_chordal) = (false, false);
    let mut results = Vec::new();
    for path in graphs {
        match analyze_one(path, &tol) {
            Ok(a) => {
                non_chordal |= matches!(a, Analysis::NotChordal { .. });
                results.push(a);
            }
            Err(e) => {
                eprintln!("error: {e:#}");
                failed = true;
            }
        }
    }
    let text = if common.json {
        match results.as_slice() {
            [one] => to_json(one)?,
            many => to_json(&many)?,
        }
    } else {
        results
            .iter()
            .map(render::analysis)
            .collect::<Vec<_>>()
            .join("\n")
    };
    emit(common.out.as_deref(), &text)?;
    Ok(if failed {
        EXIT_ERROR
    } else if non_chordal {
        EXIT_NOT_CHORDAL
    } else {
        0
    })
}

fn cmd_member(graph: &Path, matrix: &Path, side: Side, common: &Common) -> Result<u8> {
    let tol = common.tolerance()?;
    let g = read_graph(graph)?;
    let x = read_matrix(matrix, &g)?;
    let verdict = match side {
        Side::Primal => membership_primal(&x, &tol),
        Side::Dual => match require_chordal(&g, graph) {
            Ok(cert) => membership_dual(&x, &cert, &tol),
            Err(code) => return Ok(code),
        },
    };
    let text = if common.json {
        to_json(&verdict)?
    } else {
        render::verdict(&verdict)
    };
    emit(common.out.as_deref(), &text)?;
    Ok(if verdict.is_member() {
        0
    } else {
        EXIT_EXTERIOR
    })
}

fn cmd_witness(graph: &Path, clique: Option<NodeList>, common: &Common) -> Result<u8> {
    let tol = common.tolerance()?;
    let g = read_graph(graph)?;
    let cert = match require_chordal(&g, graph) {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    let text = match clique {
        Some(c) => to_json(&boundary_witness(&g, &cert, &c.0)?)?,
        None => to_json(&minimality_certificate(&g, &cert, &tol)?)?,
    };
    emit(common.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_rank(graph: &Path, matrix: &Path, common: &Common) -> Result<u8> {
    let tol = common.tolerance()?;
    let g = read_graph(graph)?;
    let cert = match require_chordal(&g, graph) {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    let x = read_matrix(matrix, &g)?;
    let report = char_roots(&minimal_polynomial(&g, &cert)?, &x, &tol)?;
    let text = if common.json {
        to_json(&report)?
    } else {
        render::rank(&report)
    };
    emit(common.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct Decomposition<'a> {
    graph: &'a Graph,
    terms: Vec<RankOneTerm>,
    max_error: f64,
}

fn cmd_decompose(graph: &Path, matrix: &Path, common: &Common) -> Result<u8> {
    let tol = common.tolerance()?;
    let g = read_graph(graph)?;
    let cert = match require_chordal(&g, graph) {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    let x = read_matrix(matrix, &g)?;
    let terms = match clique_rank_one_decomposition(&x, &cert, &tol) {
        Ok(t) => t,
        Err(ConeError::NotMember) => {
            eprintln!("{}: not in S+(G), nothing to decompose", matrix.display());
            return Ok(EXIT_EXTERIOR);
        }
        Err(e) => return Err(e.into()),
    };
    let max_error = reconstruct(g.node_count(), &terms).max_abs_diff(x.matrix());
    let d = Decomposition {
        graph: &g,
        terms,
        max_error,
    };
    let text = if common.json {
        to_json(&d)?
    } else {
        render::decomposition(&d.terms, d.max_error)
    };
    emit(common.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_gen(
    family: Family,
    n: Option<usize>,
    seed: u64,
    sizes: Option<NodeList>,
    density: Option<f64>,
    out: Option<&Path>,
) -> Result<u8> {
    let need_n = || n.context("--n is required for this family");
    let g = match family {
        Family::Maxdeg => gen_max_degree_family(need_n()?)?,
        Family::Path => gen_path(need_n()?)?,
        Family::Cliques => match sizes {
            Some(s) => gen_disjoint_cliques(&s.0)?,
            None => gen_disjoint_cliques(&random_clique_sizes(need_n()?, seed))?,
        },
        Family::Chordal => gen_random_chordal(need_n()?, density.unwrap_or(0.3), seed)?,
        Family::Forest => gen_random_homogeneous(need_n()?, density.unwrap_or(0.2), seed)?,
    };
    if let (Some(n), Family::Cliques) = (n, family) {
        if g.node_count() != n {
            bail!("--sizes add up to {} nodes, not {n}", g.node_count());
        }
    }
    emit(out, &g.to_text())?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { graphs, common } => cmd_analyze(&graphs, &common),
        Command::Member {
            graph,
            matrix,
            side,
            common,
        } => cmd_member(&graph, &matrix, side, &common),
        Command::Witness {
            graph,
            clique,
            common,
        } => cmd_witness(&graph, clique, &common),
        Command::Rank {
            graph,
            matrix,
            common,
        } => cmd_rank(&graph, &matrix, &common),
        Command::Decompose {
            graph,
            matrix,
            common,
        } => cmd_decompose(&graph, &matrix, &common),
        Command::Gen {
            family,
            n,
            seed,
            sizes,
            density,
            out,
        } => cmd_gen(family, n, seed, sizes, density, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
