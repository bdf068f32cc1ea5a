//! Command-line surface over the library: one subcommand per operation.
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use diagcat::enumeration::{closure_check, count, enumerate};
use diagcat::text::{
    ascii_diagram, diagram_to_json, morphism_to_json, parse_diagram, parse_word, word_to_json,
};
use diagcat::{
    decompose_rook, decompose_rook_brauer, decompose_skeleton, synthesize_word, to_matrix,
    verify_presentation, CategoryName, Diagram, Family, FactorMode, Involution, Morphism,
    RookBrauerMode, RookMatrix, Scalar, Word,
};

#[derive(Parser)]
#[command(name = "diagcat", version, about = "Exact calculus for diagram categories")]
struct Cli {
    /// Output format for diagrams, morphisms and words.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Substitute an integer for t after computing (never before).
    #[arg(long, global = true)]
    t: Option<i64>,

    /// Override the per-family size guard on enumeration commands.
    #[arg(long, global = true)]
    max_size: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeMode {
    Skeleton,
    Sp,
    Ps,
    Bp,
    Pb,
    Sm,
    Ms,
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorModeArg {
    Sp,
    Ps,
}

#[derive(Subcommand)]
enum Command {
    /// Parse diagram text and print its canonical form.
    Parse { diagram: String },
    /// Compose two diagrams: prints `t^alpha * (result)`.
    Compose {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// Tensor two diagrams, left operand leftmost.
    Tensor { left: String, right: String },
    /// Reflect a diagram in a horizontal line.
    Star { diagram: String },
    /// Reflect a diagram in a vertical line.
    Sharp { diagram: String },
    /// Remove all singleton blocks; prints the skeleton and kept indices.
    Skeleton { diagram: String },
    /// Print the rook matrix of a rook diagram (rows of 0/1).
    Matrix { diagram: String },
    /// Factor the rook matrix of a diagram as permutation x pseudo-echelon.
    Factor {
        #[arg(long)]
        mode: FactorModeArg,
        diagram: String,
    },
    /// Factor a diagram; mode letters name the factors top to bottom.
    Decompose {
        #[arg(long)]
        mode: DecomposeMode,
        diagram: String,
    },
    /// List all family diagrams of a type, one per line.
    Enumerate {
        #[arg(long)]
        family: Family,
        bottom: usize,
        top: usize,
    },
    /// Count the family diagrams of a type.
    Count {
        #[arg(long)]
        family: Family,
        bottom: usize,
        top: usize,
    },
    /// Compose every pair of family diagrams and report closure.
    Closure {
        #[arg(long)]
        family: Family,
        bottom: usize,
        mid: usize,
        top: usize,
    },
    /// Write a diagram as a word in a category's generators.
    Synthesize {
        #[arg(long)]
        category: CategoryName,
        diagram: String,
    },
    /// Evaluate a generator word to a morphism.
    EvalWord {
        #[arg(long)]
        category: CategoryName,
        word: String,
    },
    /// Check every defining relation of a presentation symbolically.
    Verify {
        #[arg(long)]
        category: CategoryName,
    },
    /// Print the End(k) multiplication table of a family.
    Table {
        #[arg(long)]
        family: Family,
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn size_guard(family: Family, sizes: &[usize], max_size: Option<usize>) -> Result<(), String> {
    let default_cap = match family {
        Family::Partition | Family::PlanarPartition => 4,
        _ => 5,
    };
    let cap = max_size.unwrap_or(default_cap);
    if let Some(&too_big) = sizes.iter().find(|&&s| s > cap) {
        return Err(format!(
            "size {too_big} exceeds the cap {cap} for family {family}; raise it with --max-size"
        ));
    }
    Ok(())
}

fn render_diagram(d: &Diagram, format: Format) -> String {
    match format {
        Format::Text => d.to_string(),
        Format::Json => diagram_to_json(d).to_string(),
        Format::Ascii => ascii_diagram(d),
    }
}

fn render_morphism(m: &Morphism, t: Option<i64>, format: Format) -> String {
    let m = match t {
        Some(value) => m.specialize(value),
        None => m.clone(),
    };
    match format {
        Format::Json => morphism_to_json(&m).to_string(),
        _ => m.to_string(),
    }
}

fn render_word(w: &Word, format: Format) -> String {
    match format {
        Format::Json => word_to_json(w).to_string(),
        _ => w.to_string(),
    }
}

fn run(cli: &Cli) -> diagcat::Result<ExitCode> {
    let format = cli.format;
    match &cli.command {
        Command::Parse { diagram } => {
            let d = parse_diagram(diagram)?;
            println!("{}", render_diagram(&d, format));
        }
        Command::Compose { upper, lower } => {
            let upper = parse_diagram(upper)?;
            let lower = parse_diagram(lower)?;
            let c = upper.compose(&lower)?;
            let m = Morphism::with_coeff(Scalar::t_power(c.alpha), c.diagram);
            println!("{}", render_morphism(&m, cli.t, format));
        }
        Command::Tensor { left, right } => {
            let left = parse_diagram(left)?;
            let right = parse_diagram(right)?;
            println!("{}", render_diagram(&left.tensor(&right), format));
        }
        Command::Star { diagram } => {
            let d = parse_diagram(diagram)?;
            println!("{}", render_diagram(&d.involute(Involution::Star), format));
        }
        Command::Sharp { diagram } => {
            let d = parse_diagram(diagram)?;
            println!("{}", render_diagram(&d.involute(Involution::Sharp), format));
        }
        Command::Skeleton { diagram } => {
            let d = parse_diagram(diagram)?;
            let s = d.skeleton();
            if format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "skeleton": diagram_to_json(&s.diagram),
                        "kept_bottom": s.kept_bottom,
                        "kept_top": s.kept_top,
                    })
                );
            } else {
                println!("{}", render_diagram(&s.diagram, format));
                println!(
                    "kept bottom: {}",
                    s.kept_bottom
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                println!(
                    "kept top: {}",
                    s.kept_top
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }
        Command::Matrix { diagram } => {
            let d = parse_diagram(diagram)?;
            let m = to_matrix(&d)?;
            if format == Format::Json {
                println!("{}", matrix_json(&m));
            } else {
                println!("{m}");
            }
        }
        Command::Factor { mode, diagram } => {
            let d = parse_diagram(diagram)?;
            let m = to_matrix(&d)?;
            let (first, second) = match mode {
                FactorModeArg::Sp => m.factor(FactorMode::SP),
                FactorModeArg::Ps => m.factor(FactorMode::PS),
            };
            if format == Format::Json {
                println!(
                    "{}",
                    json!({ "first": matrix_json(&first), "second": matrix_json(&second) })
                );
            } else {
                println!("{first}");
                println!();
                println!("{second}");
            }
        }
        Command::Decompose { mode, diagram } => {
            let d = parse_diagram(diagram)?;
            let factors: Vec<Diagram> = match mode {
                DecomposeMode::Skeleton => {
                    let f = decompose_skeleton(&d);
                    vec![f.upper, f.core, f.lower]
                }
                DecomposeMode::Sp => {
                    let (s, p) = decompose_rook(&d, FactorMode::SP)?;
                    vec![s, p]
                }
                DecomposeMode::Ps => {
                    let (p, s) = decompose_rook(&d, FactorMode::PS)?;
                    vec![p, s]
                }
                DecomposeMode::Bp => {
                    let (b, p) = decompose_rook_brauer(&d, RookBrauerMode::Bp)?;
                    vec![b, p]
                }
                DecomposeMode::Pb => {
                    let (p, b) = decompose_rook_brauer(&d, RookBrauerMode::Pb)?;
                    vec![p, b]
                }
                DecomposeMode::Sm => {
                    let (s, m) = decompose_rook_brauer(&d, RookBrauerMode::Sm)?;
                    vec![s, m]
                }
                DecomposeMode::Ms => {
                    let (m, s) = decompose_rook_brauer(&d, RookBrauerMode::Ms)?;
                    vec![m, s]
                }
            };
            if format == Format::Json {
                let list: Vec<Value> = factors.iter().map(diagram_to_json).collect();
                println!("{}", Value::Array(list));
            } else {
                for f in &factors {
                    println!("{}", render_diagram(f, format));
                }
            }
        }
        Command::Enumerate { family, bottom, top } => {
            size_guard(*family, &[*bottom, *top], cli.max_size)
                .map_err(|m| usage_error(&m))?;
            let all = enumerate(*family, *bottom, *top);
            if format == Format::Json {
                let list: Vec<Value> = all.iter().map(diagram_to_json).collect();
                println!("{}", Value::Array(list));
            } else {
                for d in &all {
                    println!("{d}");
                }
            }
        }
        Command::Count { family, bottom, top } => {
            size_guard(*family, &[*bottom, *top], cli.max_size)
                .map_err(|m| usage_error(&m))?;
            println!("{}", count(*family, *bottom, *top));
        }
        Command::Closure {
            family,
            bottom,
            mid,
            top,
        } => {
            size_guard(*family, &[*bottom, *mid, *top], cli.max_size)
                .map_err(|m| usage_error(&m))?;
            let report = closure_check(*family, *bottom, *mid, *top);
            println!("{report}");
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Synthesize { category, diagram } => {
            let d = parse_diagram(diagram)?;
            let w = synthesize_word(&d, *category)?;
            println!("{}", render_word(&w, format));
        }
        Command::EvalWord { category, word } => {
            let w = parse_word(word)?;
            let allowed = category.generators();
            for slice in w.slices() {
                for atom in &slice.0 {
                    if *atom != diagcat::Atom::Id && !allowed.contains(atom) {
                        return Err(diagcat::Error::NotAGenerator {
                            atom: atom.to_string(),
                            category: category.to_string(),
                        });
                    }
                }
            }
            println!("{}", render_morphism(&w.evaluate(), cli.t, format));
        }
        Command::Verify { category } => {
            let mut all_hold = true;
            let reports = verify_presentation(*category);
            for report in &reports {
                let status = if report.holds { "PASS" } else { "FAIL" };
                let kind = if report.derived { " (derived)" } else { "" };
                println!("{status} {}{kind}", report.name);
                if !report.holds {
                    println!("  lhs = {}", report.lhs_value);
                    println!("  rhs = {}", report.rhs_value);
                    all_hold = false;
                }
            }
            if !all_hold {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table { family, k } => {
            size_guard(*family, &[*k], cli.max_size).map_err(|m| usage_error(&m))?;
            let basis = enumerate(*family, *k, *k);
            for left in &basis {
                let row: Vec<String> = basis
                    .iter()
                    .map(|right| {
                        let c = left.compose(right).expect("square diagrams compose");
                        let index = basis
                            .binary_search(&c.diagram)
                            .expect("family closed under composition")
                            + 1;
                        match cli.t {
                            Some(t) => format!("{} * {index}", Scalar::t_power(c.alpha).eval_at(t)),
                            None => format!("t^{} * {index}", c.alpha),
                        }
                    })
                    .collect();
                println!("{}", row.join(" | "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn matrix_json(m: &RookMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().map(|(r, c)| json!([r, c])).collect::<Vec<_>>(),
    })
}

fn usage_error(message: &str) -> diagcat::Error {
    // Mirrors clap's usage-error exit code.
    clap::Error::raw(clap::error::ErrorKind::InvalidValue, format!("{message}\n")).exit()
}
