use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use short_links::format::{self, Document};
use short_links::metric::{find_scaled_embedding, DEFAULT_HYPERMETRIC_BOUND};
use short_links::report::{self, ComplexReport, GraphReport, QuadReport};
use short_links::symmetry::{
    automorphisms, coxeter_order_bruteforce, coxeter_presentation, vertex_orbits,
};
use short_links::{build_kp, kp_summary, Error, Graph, Partition};

/// Exit code for malformed input or invalid arguments.
const EXIT_INPUT: u8 = 2;
/// Exit code for instances refused as too large.
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "short-links", version, about = "Complexes with short links, zones and hypercube embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build K(P) for a partition such as "1,2|3,4,5".
    BuildKp {
        #[arg(long)]
        partition: Partition,
        /// Write the complex here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the table of type-{3,4} complexes up to a dimension, as TSV.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=report::TABLE_MAX_DIM as i64))]
        max_dim: u8,
        /// Append a column recomputing every row by brute force.
        #[arg(long)]
        verify: bool,
    },
    /// Report on a simplicial complex or quadrillage file.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_HYPERMETRIC_BOUND, value_parser = parse_bound)]
        hypermetric_bound: usize,
        #[arg(long)]
        tsv: bool,
    },
    /// Test hypercube embeddability of a graph, or of a complex's skeleton.
    Embed {
        file: PathBuf,
        /// Require FILE to be a graph file.
        #[arg(long)]
        graph: bool,
        /// Search for addresses with Hamming distance SCALE times the path distance.
        #[arg(long, requires = "dim")]
        scale: Option<u64>,
        /// Address length for the scaled search.
        #[arg(long, requires = "scale")]
        dim: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_HYPERMETRIC_BOUND, value_parser = parse_bound)]
        hypermetric_bound: usize,
        #[arg(long)]
        tsv: bool,
    },
    /// Automorphism group order and vertex orbits of a complex.
    Aut { file: PathBuf },
    /// Coxeter matrix and group order for a partition.
    Cox {
        #[arg(long)]
        partition: Partition,
    },
}

fn parse_bound(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(k) if k >= 2 => Ok(k),
        _ => Err(format!("expected an integer >= 2, got {s:?}")),
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_guard() { EXIT_GUARD } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

fn input_failure(message: String) -> Failure {
    Failure { code: EXIT_INPUT, message }
}

fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::BuildKp { partition, output } => {
            let complex = build_kp(&partition);
            let s = kp_summary(&partition);
            let summary = format!(
                "partition {partition}\nfacets {}\nskeleton {}\naut_order {}\nvertex_orbits {}\ncox_order {}\n",
                s.facet_count,
                s.skeleton_name(),
                s.aut_order,
                s.vertex_orbit_count,
                s.cox_order
            );
            let body = format::write_simplicial(&complex);
            match output {
                Some(path) => {
                    std::fs::write(&path, body)
                        .map_err(|e| input_failure(format!("cannot write {}: {e}", path.display())))?;
                    Ok(summary)
                }
                None => Ok(summary.lines().map(|l| format!("# {l}\n")).collect::<String>() + &body),
            }
        }
        Command::Table { max_dim, verify } => Ok(report::table(max_dim as usize, verify)?),
        Command::Analyze { file, hypermetric_bound, tsv } => match read_document(&file)? {
            Document::Simplicial(c) => {
                let r = ComplexReport::new(&c, hypermetric_bound);
                Ok(if tsv { r.to_tsv() } else { r.to_text() })
            }
            Document::Quad(q) => {
                let r = QuadReport::new(&q);
                Ok(if tsv { r.to_tsv() } else { r.to_text() })
            }
            Document::Graph(_) => {
                Err(input_failure("analyze takes a simplicial or quad file; use embed for graphs".into()))
            }
        },
        Command::Embed { file, graph, scale, dim, hypermetric_bound, tsv } => {
            let g: Graph = match read_document(&file)? {
                Document::Graph(g) => g,
                _ if graph => return Err(input_failure(format!("{} is not a graph file", file.display()))),
                Document::Simplicial(c) => c.skeleton(),
                Document::Quad(q) => q.skeleton(),
            };
            let r = GraphReport::new(&g, hypermetric_bound);
            let mut out = if tsv { r.to_tsv() } else { r.to_text() };
            if let (Some(scale), Some(dim)) = (scale, dim) {
                match find_scaled_embedding(&g, scale, dim)? {
                    Some(addresses) => {
                        let _ = writeln!(out, "scale {scale} embedding in the {dim}-cube:");
                        for (i, a) in addresses.iter().enumerate() {
                            let _ = writeln!(out, "{}\t{a}", g.label(i));
                        }
                    }
                    None => {
                        let _ = writeln!(out, "no scale {scale} embedding in the {dim}-cube");
                    }
                }
            }
            Ok(out)
        }
        Command::Aut { file } => {
            let Document::Simplicial(c) = read_document(&file)? else {
                return Err(input_failure(format!("{} is not a simplicial file", file.display())));
            };
            let auts = automorphisms(&c)?;
            let mut out = format!("aut_order {}\n", auts.len());
            for orbit in vertex_orbits(&c, &auts) {
                let ids: Vec<String> = orbit.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "orbit {}", ids.join(","));
            }
            Ok(out)
        }
        Command::Cox { partition } => {
            let presentation = coxeter_presentation(&partition);
            let mut out = String::from("coxeter matrix\n");
            for row in presentation.matrix() {
                let cells: Vec<String> = row.iter().map(u8::to_string).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
            let _ = writeln!(out, "order {}", kp_summary(&partition).cox_order);
            let _ = writeln!(out, "order by closure {}", coxeter_order_bruteforce(&partition)?);
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
