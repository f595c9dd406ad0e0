mod input;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seaweed::gen::{generate, max_exons, GenConfig};
use seaweed::quasilocal::QuasiLocal;
use seaweed::verify::{self, Level, VerifyOptions};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "seaweed",
    version,
    about = "Spliced alignment and quasi-local LCS on seaweed matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Args)]
struct Inputs {
    /// Candidate gene (the string exons are cut from).
    #[arg(long)]
    a: PathBuf,
    /// Reference gene.
    #[arg(long)]
    b: PathBuf,
    /// Exons, one `start<TAB>end` per line, 1-based inclusive; `#` starts a comment.
    #[arg(long)]
    exons: PathBuf,
    /// Read both sequences as single-record FASTA.
    #[arg(long)]
    fasta: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Best chain of exons against the reference.
    Splice {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Answer `exon_id i j` queries: LCS of exon `exon_id` (0-based line
    /// index in the exon file) against `b[i+1..=j]`.
    Quasilocal {
        #[command(flatten)]
        inputs: Inputs,
        /// Query file; standard input when absent.
        #[arg(long)]
        queries: Option<PathBuf>,
    },
    /// Write a random instance: a.txt, b.txt, exons.tsv and, with --plant, plant.json.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "acgt")]
        alphabet: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Copy a random chain of exons, in order, into b.
        #[arg(long)]
        plant: bool,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Check every fast routine against its slow oracle.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deliberately corrupt a routine to check the harness catches it.
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Multiply,
}

#[derive(Serialize)]
struct SpliceDoc {
    score: usize,
    chain: Vec<[usize; 2]>,
    m: usize,
    n: usize,
    k: usize,
}

#[derive(Serialize)]
struct PlantDoc<'a> {
    seed: u64,
    chain: Vec<[usize; 2]>,
    total_length: usize,
    offsets: &'a [usize],
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("SEAWEED_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("SEAWEED_THREADS must be a positive integer, got '{v}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("cannot configure the thread pool")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Splice { inputs, format } => splice(&inputs, format, &mut out)?,
        Command::Quasilocal { inputs, queries } => quasilocal(&inputs, queries, &mut out)?,
        Command::Gen {
            m,
            n,
            k,
            alphabet,
            seed,
            plant,
            out: dir,
        } => gen(m, n, k, alphabet, seed, plant, dir)?,
        Command::Verify {
            level,
            seed,
            inject_fault,
        } => run_verify(level, seed, inject_fault, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

/// `a`, `b` and the exons as half-open intervals.
type Loaded = (Vec<u8>, Vec<u8>, Vec<(usize, usize)>);

fn load(inputs: &Inputs) -> Result<Loaded> {
    let a = input::read_sequence(&inputs.a, inputs.fasta)?;
    let b = input::read_sequence(&inputs.b, inputs.fasta)?;
    let exons = input::read_exons(&inputs.exons)?;
    let intervals = input::to_intervals(&exons, a.len())?;
    Ok((a, b, intervals))
}

fn splice(inputs: &Inputs, format: Format, out: &mut impl Write) -> Result<ExitCode> {
    let (a, b, intervals) = load(inputs)?;
    let dag = seaweed::ExonDag::new(a.len(), b.len(), intervals)?;
    let chain = seaweed::splice::solve_dag(&a, &b, &dag)?;
    match format {
        Format::Json => {
            let doc = SpliceDoc {
                score: chain.score,
                chain: chain.one_based().into_iter().map(|(i, j)| [i, j]).collect(),
                m: a.len(),
                n: b.len(),
                k: dag.edges().len(),
            };
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Tsv => {
            writeln!(out, "#score={}", chain.score)?;
            for (i, j) in chain.one_based() {
                writeln!(out, "{i}\t{j}")?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn quasilocal(inputs: &Inputs, queries: Option<PathBuf>, out: &mut impl Write) -> Result<ExitCode> {
    let (a, b, intervals) = load(inputs)?;
    let text = match &queries {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read queries from stdin")?;
            s
        }
    };
    let queries = input::parse_queries(&text).context("in the query input")?;
    let ql = QuasiLocal::compute(&a, &b, &intervals)?;
    for (t, &(id, i, j)) in queries.iter().enumerate() {
        let Some(&iv) = intervals.get(id) else {
            bail!(
                "query {t}: exon id {id} out of range ({} exons)",
                intervals.len()
            );
        };
        let v = ql
            .query(iv, i, j)
            .with_context(|| format!("query {t}: ({id}, {i}, {j})"))?;
        writeln!(out, "{v}")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn gen(
    m: usize,
    n: usize,
    k: usize,
    alphabet: String,
    seed: u64,
    plant: bool,
    dir: PathBuf,
) -> Result<ExitCode> {
    if k > max_exons(m) {
        bail!("--k {k} exceeds m(m+1)/2 = {}", max_exons(m));
    }
    let inst = generate(&GenConfig {
        m,
        n,
        k,
        alphabet: alphabet.into_bytes(),
        seed,
        plant,
    })?;
    fs::create_dir_all(&dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let write = |name: &str, bytes: &[u8]| {
        let p = dir.join(name);
        fs::write(&p, bytes).with_context(|| format!("cannot write {}", p.display()))
    };
    let line = |s: &[u8]| [s, b"\n"].concat();
    write("a.txt", &line(&inst.a))?;
    write("b.txt", &line(&inst.b))?;
    let mut exons = String::from("# start\tend (1-based, inclusive)\n");
    for (i, j) in inst.exons_one_based() {
        exons.push_str(&format!("{i}\t{j}\n"));
    }
    write("exons.tsv", exons.as_bytes())?;
    if let Some(p) = &inst.planted {
        let doc = PlantDoc {
            seed,
            chain: p.chain.iter().map(|&(i, j)| [i, j]).collect(),
            total_length: p.total_length,
            offsets: &p.offsets,
        };
        write(
            "plant.json",
            &line(serde_json::to_string_pretty(&doc)?.as_bytes()),
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    level: VerifyLevel,
    seed: u64,
    fault: Option<Fault>,
    out: &mut impl Write,
) -> Result<ExitCode> {
    let opts = VerifyOptions {
        level: match level {
            VerifyLevel::Quick => Level::Quick,
            VerifyLevel::Full => Level::Full,
        },
        seed,
        inject_multiply_fault: matches!(fault, Some(Fault::Multiply)),
    };
    let reports = verify::run(&opts);
    let mut ok = true;
    for r in &reports {
        let verdict = if r.passed() { "ok" } else { "FAILED" };
        write!(out, "{:<11} {verdict:<6} {} cases", r.name, r.cases)?;
        if let Some(f) = &r.first_failure {
            write!(out, ", {} failures; first: {f}", r.failures)?;
        }
        writeln!(out)?;
        ok &= r.passed();
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}
