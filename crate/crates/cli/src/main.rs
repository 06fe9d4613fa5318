//! Command-line front door: every library operation behind a subcommand,
//! with plain-text or JSON output and DOT emission for crystal components.
//!
//! Exit codes: 0 success, 1 input error, 2 property violation, 3 budget
//! exhausted or indeterminate.

use std::collections::{BTreeSet, VecDeque};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use plactica::json;
use plactica::{
    cauchy, congruent, lr_oracle, plactic_class, qwedge, schur_poly, tensor_decompose, verify,
    Biword, Column, Error, LieType, Partition, Tableau, WedgeExpr, Word,
};

#[derive(Parser)]
#[command(
    name = "plactica",
    version,
    about = "crystal combinatorics of the four infinite types"
)]
struct Cli {
    /// Lie type of the alphabet
    #[arg(long = "type", global = true, default_value = "c")]
    ty: LieType,

    /// Rank for rank-dependent operations
    #[arg(long, global = true)]
    rank: Option<usize>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Node budget for enumerative commands (required there)
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Read the primary input from a file instead of the argument
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    /// Parallelize enumeration (deterministic merged output)
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// P-symbol of a word
    Psym {
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Q-symbol of a biword (word or biword JSON)
    Qsym {
        #[arg(allow_hyphen_values = true)]
        biword: Option<String>,
    },
    /// Both symbols of a biword (word or biword JSON)
    Rs {
        #[arg(allow_hyphen_values = true)]
        biword: Option<String>,
    },
    /// Inverse correspondence from {"P":...,"Q":...}
    RsInv {
        #[arg(allow_hyphen_values = true)]
        pair: Option<String>,
    },
    /// Antisymmetric correspondence on a column sequence (word or JSON);
    /// with --inverse, invert a {"P":...,"Q":...} pair
    RsHat {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
        #[arg(long)]
        inverse: bool,
    },
    /// Plactic congruence of two words
    Congruent {
        #[arg(allow_hyphen_values = true)]
        word1: String,
        #[arg(allow_hyphen_values = true)]
        word2: String,
    },
    /// Plactic class of a word
    Class {
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Column admissibility at --rank
    Admissible {
        #[arg(allow_hyphen_values = true)]
        column: Option<String>,
    },
    /// Tableau validity via the crystal oracle (tableau JSON)
    TableauCheck {
        #[arg(allow_hyphen_values = true)]
        tableau: Option<String>,
    },
    /// Littlewood-Richardson coefficient of three partitions
    Lr {
        lambda: String,
        mu: String,
        nu: String,
    },
    /// Tensor decomposition of two components
    Tensor { lambda: String, mu: String },
    /// Number of standard tableaux of a shape
    Syt { lambda: String },
    /// Schur polynomial in a number of variables
    Schur { lambda: String, vars: usize },
    /// Cauchy mechanism check for one biword
    CauchyCheck {
        #[arg(allow_hyphen_values = true)]
        biword: Option<String>,
    },
    /// Truncated type-A Cauchy identity: indices, variables, degree
    CauchyA {
        max_index: usize,
        vars: usize,
        degree: usize,
    },
    /// Straighten a wedge monomial onto the column basis
    Straighten {
        #[arg(allow_hyphen_values = true)]
        wedge: Option<String>,
    },
    /// Emit a rank-n crystal component as DOT
    Graph {
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Run a named acceptance suite (or "all")
    Verify { suite: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are not errors; everything else is bad input
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::Indeterminate => 3,
        Error::PropertyViolation(_)
        | Error::StripViolation { .. }
        | Error::RankInstability { .. } => 2,
        _ => 1,
    }
}

/// Primary input: --file wins, then the positional argument, "-" is stdin.
fn input(arg: Option<String>, file: &Option<PathBuf>) -> Result<String, Error> {
    if let Some(path) = file {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())));
    }
    match arg.as_deref() {
        Some("-") | None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
        Some(s) => Ok(s.to_string()),
    }
}

/// A biword argument: JSON when it looks like JSON, otherwise a word taken
/// as the standard biword with one letter per row.
fn parse_biword(text: &str, ty: LieType) -> Result<Biword, Error> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
        return json::biword_from_json(&v);
    }
    let w = Word::parse(trimmed, ty)?;
    Biword::new(w.letters().iter().map(|&l| vec![l]).collect(), ty)
}

fn parse_column_seq(text: &str, ty: LieType) -> Result<plactica::ColumnSeq, Error> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
        return json::column_seq_from_json(&v);
    }
    let w = Word::parse(trimmed, ty)?;
    plactica::ColumnSeq::new(
        w.letters()
            .iter()
            .map(|&l| Column::new(vec![l], ty))
            .collect::<Result<_, _>>()?,
        ty,
    )
}

fn parse_pair(text: &str) -> Result<(Tableau, plactica::RecordingTableau), Error> {
    let v: serde_json::Value = serde_json::from_str(text.trim())
        .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    let p = v
        .get("P")
        .ok_or_else(|| Error::InvalidInput("missing \"P\"".into()))?;
    let q = v
        .get("Q")
        .ok_or_else(|| Error::InvalidInput("missing \"Q\"".into()))?;
    Ok((json::tableau_from_json(p)?, json::recording_from_json(q)?))
}

fn parse_tableau(text: &str) -> Result<Tableau, Error> {
    let v: serde_json::Value = serde_json::from_str(text.trim())
        .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    json::tableau_from_json(&v)
}

fn need_budget(b: Option<usize>) -> Result<usize, Error> {
    b.ok_or_else(|| Error::InvalidInput("this command requires an explicit --budget".into()))
}

fn need_rank(r: Option<usize>) -> Result<usize, Error> {
    r.ok_or_else(|| Error::InvalidInput("this command requires --rank".into()))
}

fn print_bool(v: bool, as_json: bool) {
    if as_json {
        println!("{}", serde_json::Value::Bool(v));
    } else {
        println!("{}", if v { "true" } else { "false" });
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let ty = cli.ty;
    match cli.cmd {
        Cmd::Psym { word } => {
            let w = Word::parse(&input(word, &cli.file)?, ty)?;
            let p = plactica::p_symbol(&w)?;
            if cli.json {
                println!("{}", json::tableau_to_json(&p));
            } else {
                println!("{p}");
            }
        }
        Cmd::Qsym { biword } => {
            let b = parse_biword(&input(biword, &cli.file)?, ty)?;
            let q = plactica::q_symbol(&b)?;
            if cli.json {
                println!("{}", json::recording_to_json(&q));
            } else {
                println!("{q}");
            }
        }
        Cmd::Rs { biword } => {
            let b = parse_biword(&input(biword, &cli.file)?, ty)?;
            let (p, q) = plactica::rs(&b)?;
            if cli.json {
                println!("{}", json::pair_to_json(&p, &q));
            } else {
                println!("P:\n{p}\nQ:\n{q}");
            }
        }
        Cmd::RsInv { pair } => {
            let (p, q) = parse_pair(&input(pair, &cli.file)?)?;
            let b = plactica::rs_inverse(&p, &q)?;
            if cli.json {
                println!("{}", json::biword_to_json(&b));
            } else {
                println!("{b}");
            }
        }
        Cmd::RsHat {
            input: arg,
            inverse,
        } => {
            let text = input(arg, &cli.file)?;
            if inverse {
                let (p, q) = parse_pair(&text)?;
                let cs = plactica::rs_hat_inverse(&p, &q)?;
                if cli.json {
                    println!("{}", json::column_seq_to_json(&cs));
                } else {
                    println!("{cs}");
                }
            } else {
                let cs = parse_column_seq(&text, ty)?;
                let (p, q) = plactica::rs_hat(&cs)?;
                if cli.json {
                    println!("{}", json::pair_to_json(&p, &q));
                } else {
                    println!("P:\n{p}\nQ:\n{q}");
                }
            }
        }
        Cmd::Congruent { word1, word2 } => {
            let w1 = Word::parse(&word1, ty)?;
            let w2 = Word::parse(&word2, ty)?;
            print_bool(congruent(&w1, &w2)?, cli.json);
        }
        Cmd::Class { word } => {
            let w = Word::parse(&input(word, &cli.file)?, ty)?;
            let class = plactic_class(&w, need_budget(cli.budget)?)?;
            if cli.json {
                let words: Vec<serde_json::Value> = class.iter().map(json::word_to_json).collect();
                println!("{}", serde_json::Value::Array(words));
            } else {
                for m in &class {
                    println!("{m}");
                }
            }
        }
        Cmd::Admissible { column } => {
            let c = Column::parse(&input(column, &cli.file)?, ty)?;
            print_bool(c.is_admissible(need_rank(cli.rank)?)?, cli.json);
        }
        Cmd::TableauCheck { tableau } => {
            let t = parse_tableau(&input(tableau, &cli.file)?)?;
            print_bool(t.is_tableau()?, cli.json);
        }
        Cmd::Lr { lambda, mu, nu } => {
            let c = lr_oracle(
                &Partition::parse(&lambda)?,
                &Partition::parse(&mu)?,
                &Partition::parse(&nu)?,
            );
            println!("{c}");
        }
        Cmd::Tensor { lambda, mu } => {
            let d = tensor_decompose(
                &Partition::parse(&lambda)?,
                &Partition::parse(&mu)?,
                ty,
                need_budget(cli.budget)?,
            )?;
            if cli.json {
                let mut m = serde_json::Map::new();
                for (shape, mult) in &d {
                    m.insert(
                        shape
                            .parts()
                            .iter()
                            .map(u32::to_string)
                            .collect::<Vec<_>>()
                            .join(" "),
                        serde_json::json!(mult),
                    );
                }
                println!("{}", serde_json::Value::Object(m));
            } else {
                for (shape, mult) in &d {
                    println!("{shape}: {mult}");
                }
            }
        }
        Cmd::Syt { lambda } => {
            println!("{}", plactica::count_syt(&Partition::parse(&lambda)?));
        }
        Cmd::Schur { lambda, vars } => {
            let p = schur_poly(&Partition::parse(&lambda)?, vars);
            let names: Vec<String> = (1..=vars).map(|k| format!("y{k}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            println!("{}", p.to_string_with(&refs));
        }
        Cmd::CauchyCheck { biword } => {
            let b = parse_biword(&input(biword, &cli.file)?, ty)?;
            print_bool(cauchy::cauchy_biword_check(&b)?, cli.json);
        }
        Cmd::CauchyA {
            max_index,
            vars,
            degree,
        } => {
            print_bool(
                cauchy::cauchy_truncated_a(max_index, vars, degree),
                cli.json,
            );
        }
        Cmd::Straighten { wedge } => {
            let e = WedgeExpr::parse(&input(wedge, &cli.file)?, ty)?;
            let s = qwedge::straighten(&e)?;
            if cli.json {
                let terms: Vec<serde_json::Value> = s
                    .terms()
                    .map(|(key, coeff)| {
                        serde_json::json!({
                            "coeff": coeff.to_string(),
                            "letters": key.iter().map(|l| l.value()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(terms));
            } else {
                println!("{s}");
            }
        }
        Cmd::Graph { word } => {
            let w = Word::parse(&input(word, &cli.file)?, ty)?;
            let rank = need_rank(cli.rank)?;
            let budget = need_budget(cli.budget)?;
            let dot = emit_dot(&w, rank, budget, cli.parallel)?;
            print!("{dot}");
        }
        Cmd::Verify { suite } => {
            let reports = verify::run(&suite)?;
            let mut all_ok = true;
            for r in &reports {
                println!(
                    "[{}] {} - {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                all_ok &= r.passed;
            }
            if !all_ok {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// DOT emission: vertices in breadth-first order from the highest-weight
/// vertex, edges labeled by their colors. With `parallel`, each frontier
/// level is expanded across threads and merged back in frontier order, so
/// the output is byte-identical either way.
fn emit_dot(w: &Word, rank: usize, budget: usize, parallel: bool) -> Result<String, Error> {
    let (hw, _) = w.raise_to_highest(rank)?;
    let colors = [
        "black",
        "red",
        "blue",
        "darkgreen",
        "orange",
        "purple",
        "brown",
        "cadetblue",
    ];
    let mut order: Vec<Word> = vec![hw.clone()];
    let mut seen: BTreeSet<Word> = [hw.clone()].into();
    let mut edges: Vec<(usize, u32, usize)> = Vec::new();
    let mut index_of = std::collections::BTreeMap::new();
    index_of.insert(hw.clone(), 0usize);
    let mut frontier: VecDeque<Word> = [hw].into();
    while !frontier.is_empty() {
        let level: Vec<Word> = frontier.drain(..).collect();
        let expansions: Vec<Vec<(Word, u32, Word)>> = if parallel && level.len() > 1 {
            let chunks: Vec<&[Word]> = level.chunks(level.len().div_ceil(4)).collect();
            std::thread::scope(|scope| {
                let handles: Vec<_> = chunks
                    .into_iter()
                    .map(|chunk| scope.spawn(move || expand_level(chunk, rank)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("no panics"))
                    .collect()
            })
        } else {
            vec![expand_level(&level, rank)]
        };
        for (parent, color, child) in expansions.into_iter().flatten() {
            if seen.insert(child.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded { what: "graph" });
                }
                index_of.insert(child.clone(), order.len());
                order.push(child.clone());
                frontier.push_back(child.clone());
            }
            edges.push((index_of[&parent], color, index_of[&child]));
        }
    }
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
    for (k, v) in order.iter().enumerate() {
        out.push_str(&format!("  n{k} [label=\"{v}\"];\n"));
    }
    for (a, color, b) in edges {
        let c = colors[color as usize % colors.len()];
        out.push_str(&format!(
            "  n{a} -> n{b} [label=\"{color}\", color=\"{c}\"];\n"
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

fn expand_level(level: &[Word], rank: usize) -> Vec<(Word, u32, Word)> {
    let mut out = Vec::new();
    for w in level {
        for i in w.ty().colors_below(rank) {
            if let Some(next) = w.f_op(i) {
                out.push((w.clone(), i, next));
            }
        }
    }
    out
}
