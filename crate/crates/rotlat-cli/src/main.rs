//! Command-line surface for the rotational lattice workbench. Structured
//! output is JSON on stdout (`--format dot` for diagrams); diagnostics go
//! to stderr. Exit codes: 0 success, 1 verification counterexamples,
//! 2 invalid input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rotlat::json::{
    algebra_doc, algebra_doc_with_generator, certificate_doc, parse_algebra, parse_lattice,
    parse_poset, poset_doc, Document,
};
use rotlat::{
    all_congruences, build_corpus, direct_product, dot, embed_cube, enumerate_posets,
    free_one_generated, hs_cube, is_simple, monolith, recognize_cube, rotational_cube,
    subdirect_factors, variety_contains_algebra, verify_lemmas, verify_si_classification,
    verify_variety_lattice, OrderIdeal, RotationalLattice, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "rotlat",
    version,
    about = "Finite rotational lattices: cubes, congruences, varieties, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the n-dimensional rotational cube
    Cube {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the free one-generated algebra of order dividing n
    Free {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Direct product; each spec is a cube dimension or an algebra file
    Product {
        #[arg(required = true)]
        specs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Congruence lattice of the algebra in a file
    Con {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Simplicity, subdirect irreducibility, monolith and cube recognition
    Si { file: PathBuf },
    /// Subdirect factors with kernels and recognized cube dimensions
    Factors { file: PathBuf },
    /// Is the m-cube a homomorphic image of a subalgebra of the n-cube
    Hs { m: usize, n: usize },
    /// The spanning embedding of the m-cube into the n-cube (m must divide n)
    Embed { m: usize, n: usize },
    /// Does the algebra in the file lie in the variety of the given ideal
    Member {
        /// Comma-separated ideal members, e.g. 1,2,4 (empty for the trivial variety)
        #[arg(long)]
        ideal: String,
        file: PathBuf,
    },
    /// Run a verification sweep; exits 1 if counterexamples are found
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Enumerate posets up to isomorphism, one JSON document per line
    Enumerate {
        #[arg(long, default_value_t = 5)]
        max_poset: usize,
    },
    /// Hasse diagram of the poset, lattice or algebra in a file
    ExportDot { file: PathBuf },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Subdirect irreducibility coincides with being a cube; cubes are simple
    Si {
        #[arg(long, default_value_t = 5)]
        max_poset: usize,
    },
    /// Structural lemma sweep over the corpus
    Lemmas {
        #[arg(long, default_value_t = 4)]
        max_poset: usize,
    },
    /// Variety containment matches ideal containment
    Varieties {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_document(path: &Path) -> Result<Document, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Document::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_algebra(path: &Path) -> Result<RotationalLattice, String> {
    parse_algebra(&read_document(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_ideal_list(list: &str) -> Result<OrderIdeal, String> {
    let members: Vec<usize> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| format!("ideal member {s:?}: {e}")))
        .collect::<Result<_, _>>()?;
    OrderIdeal::new(members).map_err(|e| e.to_string())
}

fn emit_algebra(a: &RotationalLattice, generator: Option<usize>, format: Format) {
    match format {
        Format::Json => {
            let doc = match generator {
                Some(x) => algebra_doc_with_generator(a, x),
                None => algebra_doc(a),
            };
            println!("{}", doc.to_json_pretty());
        }
        Format::Dot => print!("{}", dot::algebra_dot(a)),
    }
}

fn emit_report(report: &VerificationReport) -> ExitCode {
    eprintln!(
        "check={} instances={} counterexamples={} wall_ms={}",
        report.check,
        report.instances,
        report.counterexamples.len(),
        report.wall_ms
    );
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serialization")
    );
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Cube { n, format } => {
            let cube = rotational_cube(n).map_err(|e| e.to_string())?;
            emit_algebra(&cube, None, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Free { n, format } => {
            let free = free_one_generated(n).map_err(|e| e.to_string())?;
            emit_algebra(&free.algebra, Some(free.generator), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { specs, format } => {
            let factors: Vec<RotationalLattice> = specs
                .iter()
                .map(|spec| match spec.parse::<usize>() {
                    Ok(n) => rotational_cube(n).map_err(|e| e.to_string()),
                    Err(_) => read_algebra(Path::new(spec)),
                })
                .collect::<Result<_, _>>()?;
            let product = direct_product(&factors).map_err(|e| e.to_string())?;
            emit_algebra(&product, None, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Con { file, format } => {
            let algebra = read_algebra(&file)?;
            let con = all_congruences(&algebra).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let labels: Vec<Vec<usize>> = con
                        .congruences()
                        .iter()
                        .map(|c| c.labels().to_vec())
                        .collect();
                    let out = json!({
                        "kind": "con_lattice",
                        "algebra_size": algebra.size(),
                        "count": con.len(),
                        "congruences": labels,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Dot => print!("{}", dot::con_dot(&con)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Si { file } => {
            let algebra = read_algebra(&file)?;
            let mono = monolith(&algebra);
            let out = json!({
                "size": algebra.size(),
                "order": algebra.order(),
                "simple": is_simple(&algebra),
                "subdirectly_irreducible": mono.is_some(),
                "monolith": mono.map(|m| m.labels().to_vec()),
                "cube": recognize_cube(&algebra),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Factors { file } => {
            let algebra = read_algebra(&file)?;
            let factors = subdirect_factors(&algebra).map_err(|e| e.to_string())?;
            let items: Vec<serde_json::Value> = factors
                .iter()
                .map(|(kernel, q)| {
                    json!({
                        "kernel_labels": kernel.labels().to_vec(),
                        "size": q.size(),
                        "cube": recognize_cube(q),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "factors": items })).unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Hs { m, n } => {
            let divides = hs_cube(m, n).map_err(|e| e.to_string())?;
            let reason = if divides {
                format!("{m} divides {n}")
            } else {
                format!("{m} does not divide {n}")
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "hs": divides, "reason": reason }))
                    .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed { m, n } => {
            let map = embed_cube(m, n).map_err(|e| e.to_string())?;
            let out = json!({
                "kind": "algebra_map",
                "source_dimension": m,
                "target_dimension": n,
                "map_kind": format!("{:?}", map.kind()).to_lowercase(),
                "map": map.map(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { ideal, file } => {
            let x = parse_ideal_list(&ideal)?;
            let algebra = read_algebra(&file)?;
            let cert = variety_contains_algebra(&x, &algebra).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&certificate_doc(&cert)).unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { what } => {
            let report = match what {
                VerifyWhat::Si { max_poset } => {
                    let corpus = build_corpus(max_poset, true).map_err(|e| e.to_string())?;
                    verify_si_classification(&corpus)
                }
                VerifyWhat::Lemmas { max_poset } => {
                    let corpus = build_corpus(max_poset, true).map_err(|e| e.to_string())?;
                    verify_lemmas(&corpus)
                }
                VerifyWhat::Varieties { max } => {
                    verify_variety_lattice(max).map_err(|e| e.to_string())?
                }
            };
            Ok(emit_report(&report))
        }
        Command::Enumerate { max_poset } => {
            for poset in enumerate_posets(max_poset).map_err(|e| e.to_string())? {
                println!("{}", poset_doc(&poset).to_json());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { file } => {
            let doc = read_document(&file)?;
            let rendered = match &doc {
                Document::Poset { .. } => {
                    dot::poset_dot(&parse_poset(&doc).map_err(|e| e.to_string())?)
                }
                Document::Lattice { .. } => {
                    dot::lattice_dot(&parse_lattice(&doc).map_err(|e| e.to_string())?)
                }
                Document::RotationalLattice { .. } | Document::RotPoset { .. } => {
                    dot::algebra_dot(&parse_algebra(&doc).map_err(|e| e.to_string())?)
                }
                _ => return Err("document has no diagram".into()),
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
    }
}
