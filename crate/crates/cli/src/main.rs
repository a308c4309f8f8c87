//! `posberg`: positive Bergman complexes and tree spaces from JSON files.
//!
//! Exit codes: 0 success or true, 1 a negative answer (failed validation,
//! not a member), 2 bad input, 3 an enumeration bound was exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use itertools::Itertools;
use serde_json::{json, Value};

use posberg::bergman::CellComplexSummary;
use posberg::error::Error;
use posberg::initial::{flag_of, in_positive_bergman_fan, matroid_of_flag};
use posberg::io;
use posberg::trees::{
    covering_statistics, kn_oriented_matroid, permutation_of_tree, tree_from_point,
    tree_of_permutation, EquidistantTree, TreeShape,
};
use posberg::{
    circuits_from_matrix, circuits_of_column_dependencies, Limits, OrientedMatroid, Rational,
    ValidationMode,
};

#[derive(Parser)]
#[command(
    name = "posberg",
    version,
    about = "Positive Bergman complexes of oriented matroids"
)]
struct Cli {
    /// Lower every enumeration bound to this ground-set size.
    #[arg(long, global = true)]
    bound: Option<usize>,

    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the circuit axioms; exits 1 with a witness on failure.
    Validate {
        /// Circuits JSON, or `-` for standard input.
        circuits: String,
        /// Check strong elimination instead of weak elimination.
        #[arg(long)]
        strong: bool,
        /// Report every violation, not just the first.
        #[arg(long)]
        all: bool,
    },
    /// Print the circuits of the initial oriented matroid.
    Mw {
        circuits: String,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Summarize the fine (and coarse) subdivision of a Bergman complex.
    Bergman {
        circuits: String,
        /// Use the positive Bergman complex.
        #[arg(long)]
        positive: bool,
        /// Also group fine cells into coarse cells.
        #[arg(long)]
        coarse: bool,
    },
    /// Circuits of the oriented matroid of a rational matrix.
    FromMatrix {
        matrix: String,
        #[command(flatten)]
        reading: MatrixReading,
    },
    /// Whether a weight vector lies in the positive tropical variety of a
    /// linear ideal; exits 1 if not.
    Member {
        matrix: String,
        /// Weights JSON, inline or as a file path.
        #[arg(long)]
        w: String,
        #[command(flatten)]
        reading: MatrixReading,
    },
    /// Counts and conversions on the space of phylogenetic trees.
    Trees(TreesArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WeightArgs {
    /// Weights JSON, inline or as a file path.
    #[arg(long)]
    w: Option<String>,
    /// Flag JSON, inline or as a file path.
    #[arg(long)]
    flag: Option<String>,
}

#[derive(Args)]
struct MatrixReading {
    /// Treat the rows as spanning the variety, so circuits are the linear
    /// dependencies among the columns. By default the rows are linear forms
    /// generating the ideal.
    #[arg(long)]
    dependencies: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("task").required(true).args(["count", "shape", "bijection", "covering"])))]
struct TreesArgs {
    /// Number of leaves, for `--count` and `--covering`.
    n: Option<usize>,
    /// Full-dimensional fine cells of the positive and the whole complex.
    #[arg(long, requires = "n")]
    count: bool,
    /// Hook-length count of increasing labelings of a binary shape, e.g. `((1,2),(3,4))`.
    #[arg(long)]
    shape: Option<String>,
    /// The increasing tree of a permutation, e.g. `57316284`.
    #[arg(long)]
    bijection: Option<String>,
    /// How the positive complexes of all leaf orders cover the whole complex.
    #[arg(long, requires = "n")]
    covering: bool,
}

/// A command's JSON result and whether the answer was positive.
struct Outcome {
    value: Value,
    ok: bool,
}

impl Outcome {
    fn yes(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_capacity() {
            Failure::Capacity(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Run<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        emit(cli.output.as_ref(), &outcome.value)?;
        Ok(outcome.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(output: Option<&PathBuf>, value: &Value) -> Run<()> {
    let mut text = io::to_canonical_string(value);
    text.push('\n');
    let written = match output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    written.map_err(|e| Failure::Input(format!("cannot write output: {e}")))
}

fn limits(cli: &Cli) -> Run<Limits> {
    Ok(match cli.bound {
        Some(k) => Limits::lowered(k)?,
        None => Limits::default(),
    })
}

/// Reads a file, or standard input for `-`.
fn read_input(source: &str) -> Run<String> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(source).map_err(|e| Failure::Input(format!("cannot read {source}: {e}")))
}

/// Inline JSON if it starts with `{`, otherwise a path.
fn read_inline_or_file(arg: &str) -> Run<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        read_input(arg)
    }
}

fn load_matroid(source: &str, limits: Limits) -> Run<OrientedMatroid> {
    Ok(io::circuits_from_json(&read_input(source)?)?.with_limits(limits))
}

fn load_matrix_matroid(
    source: &str,
    reading: &MatrixReading,
    limits: Limits,
) -> Run<OrientedMatroid> {
    let a = io::matrix_from_json(&read_input(source)?)?;
    limits.check_subsets(a.cols())?;
    let m = if reading.dependencies {
        circuits_of_column_dependencies(&a)?
    } else {
        circuits_from_matrix(&a)?
    };
    Ok(m.with_limits(limits))
}

fn check_bound(cli: &Cli, n: usize) -> Run<()> {
    match cli.bound {
        Some(b) if n > b => Err(Error::Capacity {
            what: "requested",
            n,
            bound: b,
        }
        .into()),
        _ => Ok(()),
    }
}

fn run(cli: &Cli) -> Run<Outcome> {
    let limits = limits(cli)?;
    match &cli.command {
        Command::Validate {
            circuits,
            strong,
            all,
        } => {
            let m = load_matroid(circuits, limits)?;
            let report = m.validate(ValidationMode {
                all: *all,
                strong: *strong,
            });
            Ok(Outcome {
                ok: report.passed,
                value: io::report_to_json(&report),
            })
        }
        Command::Mw { circuits, weight } => {
            let m = load_matroid(circuits, limits)?;
            let flag = match (&weight.w, &weight.flag) {
                (Some(w), _) => {
                    let w = io::weights_from_json(&read_inline_or_file(w)?)?;
                    if w.len() != m.ground_size() {
                        return Err(Error::GroundSizeMismatch {
                            expected: m.ground_size(),
                            found: w.len(),
                        }
                        .into());
                    }
                    flag_of(&w)
                }
                (None, Some(f)) => io::flag_from_json(m.ground_size(), &read_inline_or_file(f)?)?,
                (None, None) => unreachable!("clap requires one of --w and --flag"),
            };
            Ok(Outcome::yes(io::circuits_to_json(&matroid_of_flag(
                &m, &flag,
            )?)))
        }
        Command::Bergman {
            circuits,
            positive,
            coarse,
        } => {
            let m = load_matroid(circuits, limits)?;
            let summary = CellComplexSummary::build(&m, *positive, *coarse)?;
            Ok(Outcome::yes(io::bergman_summary_to_json(&summary)))
        }
        Command::FromMatrix { matrix, reading } => {
            let m = load_matrix_matroid(matrix, reading, limits)?;
            Ok(Outcome::yes(io::circuits_to_json(&m)))
        }
        Command::Member { matrix, w, reading } => {
            let m = load_matrix_matroid(matrix, reading, limits)?;
            let w = io::weights_from_json(&read_inline_or_file(w)?)?;
            if w.len() != m.ground_size() {
                return Err(Error::GroundSizeMismatch {
                    expected: m.ground_size(),
                    found: w.len(),
                }
                .into());
            }
            let member = in_positive_bergman_fan(&m, &w)?;
            Ok(Outcome {
                ok: member,
                value: json!({ "member": member }),
            })
        }
        Command::Trees(args) => run_trees(cli, args),
    }
}

fn run_trees(cli: &Cli, args: &TreesArgs) -> Run<Outcome> {
    if let Some(n) = args.n {
        check_bound(cli, n)?;
    }
    if args.count {
        let n = args.n.unwrap();
        let m = kn_oriented_matroid(n)?;
        let positive = CellComplexSummary::build(&m, true, false)?.full_dimensional_fine();
        let total = CellComplexSummary::build(&m, false, false)?.full_dimensional_fine();
        return Ok(Outcome::yes(
            json!({ "n": n, "positive": positive, "total": total }),
        ));
    }
    if args.covering {
        let s = covering_statistics(args.n.unwrap())?;
        return Ok(Outcome::yes(json!({
            "n": s.n,
            "maximal_chains": s.maximal_chains,
            "complexes": s.complexes,
            "cells_per_complex": s.cells_per_complex.iter().all_equal_value().ok(),
            "multiplicity": s.uniform_multiplicity(),
            "covered_with_first_fixed": s.covered_with_first_fixed,
        })));
    }
    if let Some(text) = &args.shape {
        let shape: TreeShape = text.parse()?;
        check_bound(cli, shape.leaf_count())?;
        let count = shape.hook_count()?;
        let count = u64::try_from(count).map_or_else(|_| json!(count.to_string()), |c| json!(c));
        return Ok(Outcome::yes(
            json!({ "shape": shape.to_string(), "hook_count": count }),
        ));
    }
    let text = args.bijection.as_ref().expect("clap requires one task");
    let word = io::permutation_from_str(text)?;
    check_bound(cli, word.len() + 1)?;
    let t = tree_of_permutation(&word)?;
    let labeled = t.to_labeled_shape();
    let base = *word.iter().min().unwrap();
    let heights: Vec<Rational> = labeled
        .labels()
        .iter()
        .map(|&l| Rational::from_integer(((l - base) as i64).into()))
        .collect();
    let top = *word.iter().max().unwrap() - base + 1;
    let tree = EquidistantTree::from_shape(
        labeled.shape(),
        &heights,
        Rational::from_integer((top as i64).into()),
    )?;

    let back = tree_from_point(&tree.distance_vector())?;
    let roundtrip =
        permutation_of_tree(&t) == word && labeled.permutation() == word && back == tree;
    Ok(Outcome {
        ok: roundtrip,
        value: json!({
            "permutation": word,
            "shape": labeled.shape().to_string(),
            "tree": io::tree_to_json(&tree),
            "roundtrip": roundtrip,
        }),
    })
}
