//! `valquiver <subcommand> <quiver-file> [args]`
//!
//! Output is one `key=value` or bare data record per line. Failures print
//! `error=<Code>` on stdout and exit 1; usage errors exit 2.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use valquiver::{
    AdmissibleSequence, ErrorCode, Orientation, PreprojectiveComponent, PrincipalSequenceId,
    QuiverFile, Verdict, Vertex, WeylGroup, Word,
};

#[derive(Debug, Parser)]
#[command(
    name = "valquiver",
    version,
    about = "Valued quivers, admissible sequences and Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the graph and report its symmetrizer and type.
    Validate { file: PathBuf },
    /// Print the generalized Cartan matrix.
    Cartan { file: PathBuf },
    /// Whether a word in the simple reflections is reduced.
    WordReduced { file: PathBuf, letters: Vec<Vertex> },
    /// Length of the Weyl group element of a word.
    WordLength { file: PathBuf, letters: Vec<Vertex> },
    /// Check that a sequence is (+)-admissible.
    SeqValidate { file: PathBuf, letters: Vec<Vertex> },
    /// Canonical form, blocks separated by `|`.
    SeqCanon { file: PathBuf, letters: Vec<Vertex> },
    /// Compare two sequences: `~` and `⪯`.
    SeqEquiv(PairArgs),
    /// Meet of two sequences.
    SeqMeet(PairArgs),
    /// Join of two sequences.
    SeqJoin(PairArgs),
    /// The principal sequence `S_{r,x}`.
    SeqPrincipal { file: PathBuf, r: usize, x: Vertex },
    /// Whether a sequence is equivalent to `S_M` for a preprojective `M`.
    SeqRealizable { file: PathBuf, letters: Vec<Vertex> },
    /// Dimension-vector trace of a sequence.
    PreprojDim { file: PathBuf, letters: Vec<Vertex> },
    /// Indecomposable preprojective classes up to a level.
    PreprojEnum {
        file: PathBuf,
        #[arg(long)]
        max_r: usize,
    },
    /// Lengths of powers of a Coxeter element.
    CoxeterPowers {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        perm: Vec<Vertex>,
        #[arg(long)]
        max_m: u32,
    },
    /// Brute-force Cayley graph search.
    #[cfg(feature = "oracle")]
    #[command(hide = true)]
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
}

#[derive(Debug, clap::Args)]
struct PairArgs {
    file: PathBuf,
    #[arg(long, num_args = 0..)]
    left: Vec<Vertex>,
    #[arg(long, num_args = 0..)]
    right: Vec<Vertex>,
}

#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
}

impl<E: ErrorCode + fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

type Output = Result<Vec<String>, Failure>;

fn load(path: &PathBuf) -> Result<QuiverFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: "Io",
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(text.parse()?)
}

fn oriented(path: &PathBuf) -> Result<(QuiverFile, Arc<Orientation>), Failure> {
    let file = load(path)?;
    let o = Arc::new(file.orientation()?);
    Ok((file, o))
}

fn component(path: &PathBuf) -> Result<PreprojectiveComponent, Failure> {
    let (file, o) = oriented(path)?;
    Ok(PreprojectiveComponent::new(&file.graph, o))
}

fn weyl(path: &PathBuf) -> Result<WeylGroup, Failure> {
    Ok(WeylGroup::new(load(path)?.graph.cartan_matrix()))
}

fn sequence(path: &PathBuf, letters: &[Vertex]) -> Result<AdmissibleSequence, Failure> {
    let (_, o) = oriented(path)?;
    Ok(AdmissibleSequence::new(o, letters.to_vec())?)
}

fn pair(args: &PairArgs) -> Result<(AdmissibleSequence, AdmissibleSequence), Failure> {
    let (_, o) = oriented(&args.file)?;
    let left = AdmissibleSequence::new(Arc::clone(&o), args.left.clone())?;
    let right = AdmissibleSequence::new(o, args.right.clone())?;
    Ok((left, right))
}

fn run(command: &Command) -> Output {
    match command {
        Command::Validate { file } => {
            let q = load(file)?;
            Ok(vec![
                "ok=true".to_string(),
                format!("symmetrizer={}", q.graph.symmetrizer()),
                format!("finite_type={}", q.graph.is_finite_type()?),
            ])
        }
        Command::Cartan { file } => {
            let q = load(file)?;
            Ok(q.graph
                .cartan_matrix()
                .to_string()
                .lines()
                .map(String::from)
                .collect())
        }
        Command::WordReduced { file, letters } => {
            let w = weyl(file)?;
            let reduced = w.is_reduced(&Word::new(letters.clone()))?;
            Ok(vec![format!("reduced={reduced}")])
        }
        Command::WordLength { file, letters } => {
            let w = weyl(file)?;
            let e = w.element_of(&Word::new(letters.clone()))?;
            let len = w.length(&e, w.default_length_cap(letters.len()))?;
            Ok(vec![format!("length={len}")])
        }
        Command::SeqValidate { file, letters } => {
            let s = sequence(file, letters)?;
            Ok(vec![
                "admissible=true".to_string(),
                format!("multiplicity={}", s.multiplicity()),
            ])
        }
        Command::SeqCanon { file, letters } => {
            let s = sequence(file, letters)?;
            Ok(vec![s.canonical_form()?.to_string()])
        }
        Command::SeqEquiv(args) => {
            let (left, right) = pair(args)?;
            Ok(vec![
                format!("equivalent={}", left.is_equivalent(&right)?),
                format!("subsequence={}", left.is_subsequence(&right)?),
            ])
        }
        Command::SeqMeet(args) => {
            let (left, right) = pair(args)?;
            Ok(vec![left.meet(&right)?.to_string()])
        }
        Command::SeqJoin(args) => {
            let (left, right) = pair(args)?;
            Ok(vec![left.join(&right)?.to_string()])
        }
        Command::SeqPrincipal { file, r, x } => {
            let (_, o) = oriented(file)?;
            let s = AdmissibleSequence::principal(o, PrincipalSequenceId::new(*r, *x))?;
            Ok(vec![s.to_string()])
        }
        Command::SeqRealizable { file, letters } => {
            let c = component(file)?;
            let s = AdmissibleSequence::new(Arc::clone(c.base()), letters.clone())?;
            Ok(vec![format!("realizable={}", c.realizable(&s)?)])
        }
        Command::PreprojDim { file, letters } => {
            let c = component(file)?;
            let s = AdmissibleSequence::new(Arc::clone(c.base()), letters.clone())?;
            let trace = c.dim_of_sequence(&s)?;
            let mut out: Vec<String> = trace
                .steps
                .iter()
                .map(|step| format!("{} : {}", step.reflection, step.vector))
                .collect();
            match (&trace.verdict, trace.dim()) {
                (Verdict::Positive, Some(dim)) => out.push(format!("dim={dim}")),
                (Verdict::HitZero { position }, _) => out.push(format!("zero_at={position}")),
                (Verdict::Positive, None) => unreachable!("positive traces carry a dimension"),
            }
            Ok(out)
        }
        Command::PreprojEnum { file, max_r } => {
            let c = component(file)?;
            Ok(c.enumerate_classes(*max_r)?
                .iter()
                .map(ToString::to_string)
                .collect())
        }
        Command::CoxeterPowers { file, perm, max_m } => {
            let q = load(file)?;
            let n = q.graph.rank();
            let w = WeylGroup::new(q.graph.cartan_matrix());
            let lengths = w.coxeter_power_lengths(perm, *max_m)?;
            let mut out = Vec::with_capacity(lengths.len() + 1);
            let mut all_match = true;
            for (k, &len) in lengths.iter().enumerate() {
                let m = k + 1;
                all_match &= len == m * n;
                out.push(format!("m={m} len={len} expected={}", m * n));
            }
            let consistent = if q.graph.is_finite_type()? {
                // c has finite order, and c^order has length 0, so a window
                // shorter than the order cannot show a violation.
                let c = w.coxeter_element(perm)?;
                let order = w.order(&c, u32::MAX)?.expect("finite group");
                !all_match || *max_m < order
            } else {
                all_match
            };
            out.push(format!("weyl_infinite_consistent={consistent}"));
            Ok(out)
        }
        #[cfg(feature = "oracle")]
        Command::Oracle { file, cap } => {
            use valquiver_oracles::{bfs_lengths, Closure};
            let q = load(file)?;
            let table = bfs_lengths(&q.graph.cartan_matrix(), *cap);
            let status = match table.closure {
                Closure::Finite { order } => format!("closure=finite order={order}"),
                Closure::Truncated => format!("closure=truncated explored={}", table.lengths.len()),
            };
            Ok(vec![status, format!("max_length={}", table.max_length())])
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            println!("error={}", failure.code);
            eprintln!("{}", failure.message);
            ExitCode::from(1)
        }
    }
}
