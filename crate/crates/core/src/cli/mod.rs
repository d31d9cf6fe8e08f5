//! Command-line front end. Every command prints its artifact on standard
//! output and, when an output directory is configured (`--out` or
//! `CRYSTAL_FOLD_OUT`), also writes it there. Rejected input produces an
//! error document on standard error and exit status 2; a failing
//! verification exits with status 1.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::crystal::{character, generate_binfinity, generate_blambda, isomorphic, CrystalGraph};
use crate::folding::{
    check_fixed_equals_generated, fold_binfinity, fold_blambda, induced_automorphism, verify_folded_is_target,
    FoldedCrystal, HeightBound,
};
use crate::rootdata::{
    fold, freudenthal, parse_fold_spec, parse_quiver_shorthand, parse_vector, weyl_dim, Automorphism, CartanDatum,
    FoldedDatum, Quiver, Weight,
};
use crate::spin::{build_spin_crystal, chevalley_matrices, rep_from_young, verify_relations, YoungDiagram};
use crate::{Error, Result, SCHEMA};

#[derive(Debug, Parser)]
#[command(name = "crystal-fold", version, about = "Fold simply-laced crystals and check the results")]
pub struct Cli {
    /// Directory receiving a copy of every artifact.
    #[arg(long, global = true, env = "CRYSTAL_FOLD_OUT")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fold a quiver along an automorphism and print the Cartan datum.
    Fold {
        /// `A<n>`, `D<n>`, or a quiver JSON file.
        #[arg(long)]
        quiver: String,
        /// `from:to,…` on vertex names, `identity`, or a JSON file.
        #[arg(long)]
        auto: String,
    },
    /// Generate `B(λ)` (with `--weight`) or a truncation of `B(∞)`.
    Generate {
        /// Built-in type (`A3`, `B2`, `C3`, `D4`, `G2`, …) or a Cartan JSON file.
        #[arg(long = "type")]
        ty: String,
        /// Highest weight: `a,b,…`, `omega<k>` or `spin`.
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Fold a crystal of the source type into the target type.
    FoldCrystal {
        /// `SOURCE:TARGET`, e.g. `A5:Bn`, `D4:G2`, `D5:Cn`, `A3:id`.
        #[arg(long)]
        fold: String,
        /// Highest weight in target coordinates; omit for `B(∞)`.
        #[arg(long)]
        weight: Option<String>,
        /// Height bound (in the target) for `B(∞)`.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Run every check on a fold and print the report.
    Verify {
        #[arg(long)]
        fold: String,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = Against::Direct)]
        against: Against,
    },
    /// The spin crystal on self-conjugate diagrams.
    Spin {
        #[arg(long)]
        n: usize,
        /// Print the quiver-variety point of this diagram (e.g. `2,1`) instead.
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = SpinEmit::Json)]
        emit: SpinEmit,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpinEmit {
    Json,
    Dot,
    Table,
    Matrices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Against {
    /// Compare with crystals generated directly over the folded datum.
    Direct,
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub file_name: String,
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn artifact(file_name: impl Into<String>, text: String) -> Self {
        Outcome { file_name: file_name.into(), text, passed: true }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", error_document(&e));
            ExitCode::from(2)
        }
    }
}

pub fn error_document(e: &Error) -> String {
    json!({"schema": SCHEMA, "error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

/// Runs a command and writes the artifact to the output directory, if any.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let outcome = match &cli.command {
        Command::Fold { quiver, auto } => cmd_fold(quiver, auto)?,
        Command::Generate { ty, weight, depth, emit } => cmd_generate(ty, weight.as_deref(), *depth, *emit)?,
        Command::FoldCrystal { fold, weight, depth, emit } => {
            cmd_fold_crystal(fold, weight.as_deref(), *depth, *emit)?
        }
        Command::Verify { fold, weight, depth, against: Against::Direct } => {
            cmd_verify(fold, weight.as_deref(), *depth)?
        }
        Command::Spin { n, diagram, emit } => cmd_spin(*n, diagram.as_deref(), *emit)?,
    };
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(&outcome.file_name), &outcome.text)?;
    }
    Ok(outcome)
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("artifact serializes");
    s.push('\n');
    s
}

fn read_if_file(arg: &str) -> Result<Option<String>> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || path.is_file() {
        Ok(Some(std::fs::read_to_string(path)?))
    } else {
        Ok(None)
    }
}

fn load_quiver(arg: &str) -> Result<Quiver> {
    match read_if_file(arg)? {
        Some(text) => Quiver::from_json(&text),
        None => parse_quiver_shorthand(arg),
    }
}

fn load_cartan(arg: &str) -> Result<CartanDatum> {
    match read_if_file(arg)? {
        Some(text) => Ok(serde_json::from_str(&text)?),
        None => CartanDatum::builtin(arg),
    }
}

/// `a,b,…`, `omega<k>` (1-based) or `spin` (the last node of `B_n`).
fn parse_weight(cd: &CartanDatum, spec: &str) -> Result<Vec<i64>> {
    let n = cd.rank();
    let spec = spec.trim();
    let lambda = if spec == "spin" {
        let short = n.checked_sub(1).filter(|&k| (0..n).all(|j| cd.symmetrizer()[j] >= cd.symmetrizer()[k]));
        let k = short.ok_or_else(|| Error::Parse("`spin` needs a datum whose last node is short".into()))?;
        Weight::fundamental(n, k).base
    } else if let Some(k) = spec.strip_prefix("omega") {
        let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad weight {spec:?}")))?;
        if k == 0 || k > n {
            return Err(Error::Parse(format!("omega{k} outside 1..={n}")));
        }
        Weight::fundamental(n, k - 1).base
    } else {
        parse_vector(spec)?
    };
    if lambda.len() != n {
        return Err(Error::Shape(format!("weight has {} entries, rank is {n}", lambda.len())));
    }
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda));
    }
    Ok(lambda)
}

fn emit_graph(g: &CrystalGraph, emit: Emit, stem: &str, folded: Option<&FoldedCrystal>) -> Outcome {
    match emit {
        Emit::Json => {
            let text = match folded {
                Some(fc) => fc.to_json_string(),
                None => g.to_json_string(None),
            };
            Outcome::artifact(format!("{stem}.json"), text)
        }
        Emit::Dot => Outcome::artifact(format!("{stem}.dot"), g.to_dot()),
        Emit::Table => Outcome::artifact(format!("{stem}.tsv"), g.to_table()),
    }
}

fn cmd_fold(quiver: &str, auto: &str) -> Result<Outcome> {
    let q = load_quiver(quiver)?;
    let a = match read_if_file(auto)? {
        Some(text) => Automorphism::from_json(&q, &text)?,
        None => Automorphism::parse(&q, auto)?,
    };
    let fd = fold(&q, &a)?;
    let cd = fd.cartan();
    let names = q.names();
    let doc = json!({
        "schema": SCHEMA,
        "nodes": cd.nodes(),
        "matrix": cd.matrix(),
        "symmetrizer": cd.symmetrizer(),
        "form": fd.form(),
        "orbits": fd.orbits().iter().map(|o| o.iter().map(|&i| names[i].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "finite_type": cd.is_finite_type(),
    });
    Ok(Outcome::artifact("cartan.json", pretty(&doc)))
}

fn cmd_generate(ty: &str, weight: Option<&str>, depth: Option<usize>, emit: Emit) -> Result<Outcome> {
    let cd = load_cartan(ty)?;
    let g = match weight {
        Some(w) => generate_blambda(&cd, &parse_weight(&cd, w)?, depth)?,
        None => {
            let depth = depth.ok_or_else(|| Error::Parse("B(∞) needs --depth".into()))?;
            generate_binfinity(&cd, depth)
        }
    };
    Ok(emit_graph(&g, emit, "crystal", None))
}

fn folded(fd: &FoldedDatum, weight: Option<&str>, depth: Option<usize>) -> Result<FoldedCrystal> {
    match weight {
        Some(w) => {
            let lambda = parse_weight(fd.cartan(), w)?;
            let fc = fold_blambda(fd, &lambda)?;
            let source = generate_blambda(fd.source_cartan(), &fd.unfold_vector(&lambda)?, None)?;
            let ia = induced_automorphism(&source, fd.automorphism())?;
            Ok(fc.with_sigma(&source, &ia))
        }
        None => {
            let depth = depth.ok_or_else(|| Error::Parse("B(∞) needs --depth".into()))?;
            fold_binfinity(fd, HeightBound::Folded(depth))
        }
    }
}

fn cmd_fold_crystal(spec: &str, weight: Option<&str>, depth: Option<usize>, emit: Emit) -> Result<Outcome> {
    let fd = parse_fold_spec(spec)?;
    let fc = folded(&fd, weight, depth)?;
    Ok(emit_graph(fc.graph(), emit, "folded", Some(&fc)))
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    detail: Value,
}

fn cmd_verify(spec: &str, weight: Option<&str>, depth: Option<usize>) -> Result<Outcome> {
    let fd = parse_fold_spec(spec)?;
    let cd = fd.cartan();
    let mut checks = Vec::new();

    let mut identity = true;
    for i in 0..cd.rank() {
        for j in 0..cd.rank() {
            let mut alpha = vec![0; cd.rank()];
            alpha[j] = 1;
            let lifted = fd.unfold_weight(&Weight::from_drop(alpha))?;
            identity &= -fd.lifted_pairing(i, &lifted)? * fd.d(i) == fd.form()[i][j];
        }
    }
    checks.push(Check { name: "cartan_pairing_identity", passed: identity, detail: json!(cd.matrix()) });

    let fc = match weight {
        Some(w) => {
            let lambda = parse_weight(cd, w)?;
            let source = generate_blambda(fd.source_cartan(), &fd.unfold_vector(&lambda)?, None)?;
            let ia = induced_automorphism(&source, fd.automorphism())?;
            let fc = fold_blambda(&fd, &lambda)?;
            let fixed = check_fixed_equals_generated(&source, &ia, &fc, None);
            checks.push(Check { name: "fixed_equals_generated", passed: fixed.passed(), detail: json!(fixed) });

            let table = freudenthal(cd, &lambda)?;
            let ch: Vec<(Weight, u64)> = character(fc.graph()).into_iter().map(|(w, c)| (w, c as u64)).collect();
            let dim = weyl_dim(cd, &lambda)?;
            let agree = ch == table.into_iter().collect::<Vec<_>>() && fc.graph().len() as u64 == dim;
            checks.push(Check { name: "freudenthal_character", passed: agree, detail: json!({"weyl_dim": dim}) });

            if cd.matrix() == CartanDatum::builtin(&format!("B{}", cd.rank()))?.matrix()
                && lambda == Weight::fundamental(cd.rank(), cd.rank() - 1).base
            {
                let n = cd.rank();
                let spin = build_spin_crystal(n)?;
                let iso = isomorphic(&spin, fc.graph())?.is_some();
                checks.push(Check { name: "spin_crystal_isomorphic", passed: iso, detail: json!({"n": n}) });
                let relations = verify_relations(&chevalley_matrices(n, &spin.cartan().clone())?, spin.cartan());
                checks.push(Check { name: "chevalley_relations", passed: relations.passed(), detail: json!(relations) });
            }
            fc.with_sigma(&source, &ia)
        }
        None => {
            let depth = depth.ok_or_else(|| Error::Parse("B(∞) needs --weight or --depth".into()))?;
            let source = generate_binfinity(fd.source_cartan(), depth);
            let ia = induced_automorphism(&source, fd.automorphism())?;
            let fc = fold_binfinity(&fd, HeightBound::Source(depth))?;
            let fixed = check_fixed_equals_generated(&source, &ia, &fc, Some(depth));
            checks.push(Check { name: "fixed_equals_generated", passed: fixed.passed(), detail: json!(fixed) });
            fc
        }
    };
    let target = verify_folded_is_target(&fc, &fd)?;
    checks.push(Check { name: "folded_is_target", passed: target.passed(), detail: json!(target) });

    let passed = checks.iter().all(|c| c.passed);
    let doc = json!({"schema": SCHEMA, "fold": spec, "passed": passed, "checks": checks});
    Ok(Outcome { file_name: "report.json".into(), text: pretty(&doc), passed })
}

fn cmd_spin(n: usize, diagram: Option<&str>, emit: SpinEmit) -> Result<Outcome> {
    if let Some(d) = diagram {
        let y = YoungDiagram::parse(n, d)?;
        return Ok(Outcome::artifact("point.json", rep_from_young(&y).to_json_string()));
    }
    let g = build_spin_crystal(n)?;
    Ok(match emit {
        SpinEmit::Json => emit_graph(&g, Emit::Json, "spin", None),
        SpinEmit::Dot => emit_graph(&g, Emit::Dot, "spin", None),
        SpinEmit::Table => emit_graph(&g, Emit::Table, "spin", None),
        SpinEmit::Matrices => {
            let m = chevalley_matrices(n, g.cartan())?;
            Outcome::artifact("spin-matrices.json", pretty(&json!({"schema": SCHEMA, "n": n, "matrices": m})))
        }
    })
}
