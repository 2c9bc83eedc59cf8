//! Command-line front end. Constructs catalog systems, verifies documents,
//! and interrogates them (classification, components, orbits, strings,
//! isomorphism, towers).
//!
//! Exit codes: 0 on success, 1 on a semantic failure (failed verification,
//! unreadable file, no isomorphism), 2 on usage errors. All numbers in the
//! output are exact `p/q` strings and identical invocations produce
//! byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use rootsuper::axioms;
use rootsuper::catalog::{self, TypeLabel};
use rootsuper::classify;
use rootsuper::doc;
use rootsuper::orbits;
use rootsuper::weyl;
use rootsuper::{Rational, RootSupersystem, Vector};

#[derive(Parser)]
#[command(name = "rootsuper", version, about = "Exact root supersystem toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a catalog system and write its document.
    Generate(GenerateArgs),
    /// Run the axiom checks on a document.
    Verify(VerifyArgs),
    /// Name the isomorphism class of each connected component.
    Classify { file: PathBuf },
    /// Emit one document per connected component.
    Components { file: PathBuf },
    /// Enumerate a reflection orbit, or scan for small orbits.
    Orbits(OrbitsArgs),
    /// Walk the root string of beta along a real root alpha.
    String(StringArgs),
    /// Decide whether two documents present isomorphic systems.
    Isomorphic(IsomorphicArgs),
    /// Verify a chain of same-family truncations.
    Tower(TowerArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Family name combined with --rank / --t --p / --lambda, or a complete
    /// label such as "Adot(0,3)" or "G2" on its own.
    #[arg(long = "type")]
    type_name: String,
    /// Rank of a one-parameter family (A, B, C, D, BC).
    #[arg(long)]
    rank: Option<usize>,
    /// First size of a two-parameter family.
    #[arg(long)]
    t: Option<usize>,
    /// Second size of a two-parameter family.
    #[arg(long)]
    p: Option<usize>,
    /// Scalar for the one-scalar family, e.g. "1/2" or "-2".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Which check list to run.
    #[arg(long, value_enum, default_value_t = Mode::T)]
    mode: Mode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Axioms with local finiteness.
    T,
    /// Axioms with the root-string condition in its place.
    Tprime,
    /// Integer-lattice checks alone.
    Lattice,
}

#[derive(Args)]
#[command(group = ArgGroup::new("what").required(true).args(["seed", "small"]))]
struct OrbitsArgs {
    file: PathBuf,
    /// Seed vector as comma-separated coordinates, e.g. "1,0,-1/2".
    #[arg(long, allow_hyphen_values = true)]
    seed: Option<String>,
    /// Scan weight multiples and report which orbits are small.
    #[arg(long)]
    small: bool,
    /// Largest weight multiple scanned by --small.
    #[arg(long, default_value_t = 4)]
    bound: i64,
}

#[derive(Args)]
struct StringArgs {
    file: PathBuf,
    /// Real root along which to walk, as comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Starting root, same format.
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
}

#[derive(Args)]
struct IsomorphicArgs {
    a: PathBuf,
    b: PathBuf,
    /// Search for a witness (the default when --witness is absent).
    #[arg(long)]
    search: bool,
    /// Cap on ambient dimension during search.
    #[arg(long, default_value_t = 8)]
    dim_limit: usize,
    /// Check a stored witness instead of searching.
    #[arg(long, conflicts_with_all = ["search", "dim_limit"])]
    witness: Option<PathBuf>,
}

#[derive(Args)]
struct TowerArgs {
    /// Family name: A, B, C, D, BC, Adot, or Cdot.
    #[arg(long = "type")]
    type_name: String,
    /// Member parameters: "2,3,4" for one-parameter families, or
    /// semicolon-separated pairs "2,3;2,4;3,4".
    #[arg(long)]
    params: String,
}

fn main() -> ExitCode {
    // Die quietly when the reader closes the pipe (`rootsuper ... | head`),
    // instead of panicking on the next print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

/// Dispatch. `Ok(code)` carries the command's own verdict; `Err` is a
/// semantic failure reported uniformly on stderr with exit 1.
fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Generate(args) => generate(args),
        Command::Verify(args) => verify(args),
        Command::Classify { file } => classify_cmd(&file),
        Command::Components { file } => components(&file),
        Command::Orbits(args) => orbits_cmd(args),
        Command::String(args) => string_cmd(args),
        Command::Isomorphic(args) => isomorphic(args),
        Command::Tower(args) => tower(args),
    }
}

fn load(path: &PathBuf) -> Result<RootSupersystem, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    doc::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_vector(text: &str, dim: usize, name: &str) -> Result<Vector, String> {
    let v = Vector::parse_lenient(text).map_err(|e| format!("--{name}: {e}"))?;
    if v.dim() != dim {
        return Err(format!(
            "--{name} has {} coordinates, the document has dimension {dim}",
            v.dim()
        ));
    }
    Ok(v)
}

fn resolve_label(args: &GenerateArgs) -> Result<TypeLabel, String> {
    let text = match (&args.rank, &args.t, &args.p, &args.lambda) {
        (Some(rank), None, None, None) => format!("{}_{rank}", args.type_name),
        (None, Some(t), Some(p), None) => format!("{}({t},{p})", args.type_name),
        (None, None, None, Some(lambda)) => {
            let scalar = Rational::parse_lenient(lambda).map_err(|e| format!("--lambda: {e}"))?;
            format!("{}(2,1,{scalar})", args.type_name)
        }
        (None, None, None, None) => args.type_name.clone(),
        _ => {
            return Err(
                "give --rank, or --t with --p, or --lambda; they do not combine".to_string(),
            )
        }
    };
    text.parse::<TypeLabel>().map_err(|e| e.to_string())
}

fn generate(args: GenerateArgs) -> Result<ExitCode, String> {
    let label = resolve_label(&args)?;
    let system = catalog::construct(&label).map_err(|e| e.to_string())?;
    let text = doc::to_json(&system);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let system = load(&args.file)?;
    let report = match args.mode {
        Mode::T => axioms::verify_t(&system),
        Mode::Tprime => axioms::verify_tprime(&system),
        Mode::Lattice => {
            axioms::verify_lattice(system.form(), system.roots()).map_err(|e| e.to_string())?
        }
    };
    print!("{}", doc::report_to_json(&report));
    Ok(exit_verdict(report.verdict))
}

fn classify_cmd(file: &PathBuf) -> Result<ExitCode, String> {
    let system = load(file)?;
    match classify::classify(&system) {
        Ok(classification) => {
            println!("{classification}");
            Ok(ExitCode::SUCCESS)
        }
        // An unrecognized profile is a negative answer, not a crash: emit it
        // on stdout and signal failure through the exit code.
        Err(e) => {
            println!("{e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn components(file: &PathBuf) -> Result<ExitCode, String> {
    let system = load(file)?;
    let parts = classify::connected_components(&system);
    for index in 0..parts.len() {
        let sub = classify::component_system(&system, index).map_err(|e| e.to_string())?;
        print!("{}", doc::to_json(&sub));
    }
    Ok(ExitCode::SUCCESS)
}

fn orbits_cmd(args: OrbitsArgs) -> Result<ExitCode, String> {
    let system = load(&args.file)?;
    if let Some(seed_text) = &args.seed {
        let seed = parse_vector(seed_text, system.dim(), "seed")?;
        let members = weyl::orbit(&system, &seed).map_err(|e| e.to_string())?;
        println!("size={}", members.len());
        for member in &members {
            println!("{member}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let report = orbits::small_orbit_search(&system, args.bound).map_err(|e| e.to_string())?;
    for candidate in &report.candidates {
        println!(
            "seed={} size={} small={}",
            candidate.seed,
            candidate.orbit.len(),
            if candidate.small { "yes" } else { "no" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn string_cmd(args: StringArgs) -> Result<ExitCode, String> {
    let system = load(&args.file)?;
    let alpha = parse_vector(&args.alpha, system.dim(), "alpha")?;
    let beta = parse_vector(&args.beta, system.dim(), "beta")?;
    let string = weyl::root_string(&system, &beta, &alpha).map_err(|e| e.to_string())?;
    println!("p={} q={}", string.p, string.q);
    for member in &string.members {
        println!("{member}");
    }
    Ok(ExitCode::SUCCESS)
}

fn isomorphic(args: IsomorphicArgs) -> Result<ExitCode, String> {
    let a = load(&args.a)?;
    let b = load(&args.b)?;
    if let Some(witness_path) = &args.witness {
        let text = fs::read_to_string(witness_path)
            .map_err(|e| format!("{}: {e}", witness_path.display()))?;
        let witness = doc::witness_from_json(&text).map_err(|e| e.to_string())?;
        let ok = classify::check_isomorphism(&a, &b, &witness).map_err(|e| e.to_string())?;
        println!("witness {}", if ok { "accepted" } else { "rejected" });
        return Ok(exit_verdict(ok));
    }
    match classify::find_isomorphism(&a, &b, args.dim_limit).map_err(|e| e.to_string())? {
        Some(witness) => {
            println!("isomorphic scalar={}", witness.scalar);
            print!("{}", doc::witness_to_json(&witness));
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("not isomorphic");
            Ok(ExitCode::from(1))
        }
    }
}

fn tower(args: TowerArgs) -> Result<ExitCode, String> {
    let labels = tower_labels(&args.type_name, &args.params)?;
    let report = classify::truncation_tower(&labels).map_err(|e| e.to_string())?;
    for step in &report.steps {
        if step.holds() {
            println!("{} in {}: ok", step.smaller, step.larger);
        } else {
            println!(
                "{} in {}: FAIL (isometric={} embedded={} reflection_closed={} \
                 null_condition={} nondegenerate={})",
                step.smaller,
                step.larger,
                step.isometric,
                step.embedded,
                step.reflection_closed,
                step.null_condition,
                step.nondegenerate
            );
        }
    }
    println!("verdict: {}", if report.verdict { "pass" } else { "fail" });
    Ok(exit_verdict(report.verdict))
}

/// "2,3,4" is a list of single parameters; "2,3;2,4" a list of pairs. Each
/// entry is spliced into the family's label grammar.
fn tower_labels(family: &str, params: &str) -> Result<Vec<TypeLabel>, String> {
    let groups: Vec<Vec<&str>> = if params.contains(';') {
        params
            .split(';')
            .map(|group| group.split(',').map(str::trim).collect())
            .collect()
    } else {
        params.split(',').map(|p| vec![p.trim()]).collect()
    };
    let mut labels = Vec::with_capacity(groups.len());
    for group in groups {
        let text = match group.as_slice() {
            [n] => match family {
                "Adot" | "Cdot" => format!("{family}(0,{n})"),
                _ => format!("{family}_{n}"),
            },
            [t, u] => format!("{family}({t},{u})"),
            _ => return Err(format!("--params entry has {} numbers", group.len())),
        };
        labels.push(text.parse::<TypeLabel>().map_err(|e| e.to_string())?);
    }
    Ok(labels)
}

fn exit_verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
