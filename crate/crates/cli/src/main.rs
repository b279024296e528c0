use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chainminor::bench::{run_bench, BenchRow, DEFAULT_SAMPLES};
use chainminor::oracle::check_definition;
use chainminor::poset::{generate, Family};
use chainminor::random::{RandomOptions, DEFAULT_CAP, DEFAULT_DELTA};
use chainminor::solve::{solve, ModeChoice, SolveOptions};
use chainminor::{
    parse_mapping, parse_poset, serialize_mapping, serialize_poset, Answer, Poset, ReportDocument, SolveReport,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chainminor",
    version,
    about = "Decide whether one finite poset is a chain minor of another"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide P ⪯ Q. Exit 0 = yes, 1 = no, 3 = inconclusive.
    Check {
        #[arg(long = "p", value_name = "FILE")]
        p: PathBuf,
        #[arg(long = "q", value_name = "FILE")]
        q: PathBuf,
        #[arg(long, default_value = "auto", value_parser = parse_mode)]
        mode: ModeChoice,
        /// Failure probability allowed for a randomized "no".
        #[arg(long, default_value_t = DEFAULT_DELTA, value_parser = parse_delta)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper bound on mappings, trials or candidates tried.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
        /// Print the JSON report on stdout (the summary then goes to stderr).
        #[arg(long)]
        json: bool,
        /// Where to write the witness when the answer is yes.
        #[arg(long, value_name = "FILE")]
        witness_out: Option<PathBuf>,
    },
    /// Check a witness file. Exit 0 if accepted, 1 if rejected.
    Verify {
        #[arg(long = "p", value_name = "FILE")]
        p: PathBuf,
        #[arg(long = "q", value_name = "FILE")]
        q: PathBuf,
        #[arg(long, value_name = "FILE")]
        witness: PathBuf,
        /// Also evaluate the definition directly and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Print a generated poset.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Number of chains (pcq) or elements (antichain).
        #[arg(short = 'p')]
        chains: Option<usize>,
        /// Chain length (chain, pcq).
        #[arg(short = 'q')]
        length: Option<usize>,
        /// Number of elements (random).
        #[arg(short = 'n')]
        size: Option<usize>,
        /// Probability of each comparability (random).
        #[arg(long)]
        density: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the verifier and the randomized solver on generated yes-instances.
    Bench {
        #[arg(long = "p", value_name = "FILE")]
        p: PathBuf,
        /// Comma-separated sizes of Q.
        #[arg(long, value_name = "N1,N2,...")]
        sizes: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_DELTA, value_parser = parse_delta)]
        delta: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Chain,
    Antichain,
    Pcq,
    Random,
}

fn parse_mode(s: &str) -> Result<ModeChoice, String> {
    s.parse().map_err(|e: chainminor::Error| e.to_string())
}

fn parse_delta(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(d) if d > 0.0 && d < 1.0 => Ok(d),
        Ok(_) => Err("must lie strictly between 0 and 1".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Exit code 2 with a message.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            p,
            q,
            mode,
            delta,
            seed,
            cap,
            threads,
            json,
            witness_out,
        } => {
            let opts = SolveOptions {
                mode,
                seed,
                delta,
                cap,
                threads: threads as usize,
            };
            cmd_check(&p, &q, &opts, json, witness_out.as_deref())
        }
        Command::Verify {
            p,
            q,
            witness,
            cross_check,
        } => cmd_verify(&p, &q, &witness, cross_check),
        Command::Generate {
            family,
            chains,
            length,
            size,
            density,
            seed,
        } => cmd_generate(family, chains, length, size, density, seed),
        Command::Bench {
            p,
            sizes,
            json,
            seed,
            delta,
            samples,
        } => cmd_bench(&p, &sizes, json, seed, delta, samples),
    };
    result.unwrap_or_else(|Failure(msg)| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    parse_poset(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn answer_code(answer: Answer) -> ExitCode {
    match answer {
        Answer::Yes => ExitCode::SUCCESS,
        Answer::No => ExitCode::from(1),
        Answer::Inconclusive => ExitCode::from(3),
    }
}

fn cmd_check(p_path: &Path, q_path: &Path, opts: &SolveOptions, json: bool, witness_out: Option<&Path>) -> Outcome {
    let p = load_poset(p_path)?;
    let q = load_poset(q_path)?;
    let report = solve(&p, &q, opts)?;

    let summary = summarize(&report, &p, &q);
    if json {
        eprint!("{summary}");
        println!("{}", ReportDocument::from_report(&report, &p, &q).to_json());
    } else {
        print!("{summary}");
    }
    if let (Some(path), Some(w)) = (witness_out, &report.witness) {
        fs::write(path, serialize_mapping(w, &p, &q)).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(answer_code(report.answer))
}

fn summarize(r: &SolveReport, p: &Poset, q: &Poset) -> String {
    let b = &r.bounds;
    let mut out = format!("answer: {}\nmode: {}\n", r.answer, r.mode);
    out += &format!("bounds: k={} n={} s={} l={}\n", b.k, b.n, b.s, b.l);
    if let Some(size) = r.family_size {
        out += &format!("family size: {size}\n");
    }
    if let Some(t) = r.trials_used {
        out += &format!("trials used: {t}\n");
    }
    if let Some(e) = r.error_bound {
        out += &format!("error bound: {e:e}\n");
    }
    if let Some(d) = &r.detail {
        out += &format!("note: {d}\n");
    }
    out += &format!("elapsed: {:.3} ms\n", r.elapsed.as_secs_f64() * 1e3);
    if let Some(w) = &r.witness {
        out += "witness:\n";
        for (x, y) in w.token_pairs(p, q) {
            out += &format!("  {x} -> {y}\n");
        }
    }
    out
}

fn cmd_verify(p_path: &Path, q_path: &Path, witness: &Path, cross_check: bool) -> Outcome {
    let p = load_poset(p_path)?;
    let q = load_poset(q_path)?;
    let f = parse_mapping(&read(witness)?, &p, &q).map_err(|e| Failure(format!("{}: {e}", witness.display())))?;

    let accepted = chainminor::verify_witness(&p, &q, &f);
    println!("{}", if accepted { "accepted" } else { "rejected" });
    if cross_check {
        let direct = check_definition(&p, &q, &f);
        if direct != accepted {
            eprintln!("cross-check disagrees: definition says {direct}");
            return Ok(ExitCode::from(1));
        }
        println!("cross-check agrees");
    }
    Ok(if accepted { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_generate(
    family: FamilyName,
    chains: Option<usize>,
    length: Option<usize>,
    size: Option<usize>,
    density: Option<f64>,
    seed: u64,
) -> Outcome {
    fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
        v.ok_or_else(|| Failure(format!("family {family} needs {flag}")))
    }
    let family = match family {
        FamilyName::Chain => Family::Chain(need(length, "-q", "chain")?),
        FamilyName::Antichain => Family::Antichain(need(chains.or(size), "-p", "antichain")?),
        FamilyName::Pcq => Family::DisjointChains(need(chains, "-p", "pcq")?, need(length, "-q", "pcq")?),
        FamilyName::Random => Family::Random {
            n: need(size, "-n", "random")?,
            density: need(density, "--density", "random")?,
            seed,
        },
    };
    print!("{}", serialize_poset(&generate(&family)?));
    Ok(ExitCode::SUCCESS)
}

fn parse_sizes(list: &str) -> Result<Vec<usize>, Failure> {
    let sizes: Vec<usize> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure(format!("invalid size `{s}`"))))
        .collect::<Result<_, _>>()?;
    if sizes.is_empty() {
        return Err(Failure("no sizes given".into()));
    }
    Ok(sizes)
}

fn cmd_bench(p_path: &Path, sizes: &str, json: bool, seed: u64, delta: f64, samples: usize) -> Outcome {
    let sizes = parse_sizes(sizes)?;
    let p = load_poset(p_path)?;
    let opts = RandomOptions {
        seed,
        delta,
        ..Default::default()
    };
    let rows = run_bench(&p, &sizes, samples, &opts)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        print!("{}", table(&rows));
    }
    Ok(ExitCode::SUCCESS)
}

fn table(rows: &[BenchRow]) -> String {
    let ratio = |r: Option<f64>| r.map_or_else(|| "-".to_string(), |r| format!("{r:.2}"));
    let mut out = format!(
        "{:>10}  {:>12}  {:>8}  {:>12}  {:>8}  {:>7}\n",
        "n", "verify ms", "ratio", "solve ms", "ratio", "answer"
    );
    for r in rows {
        out += &format!(
            "{:>10}  {:>12.4}  {:>8}  {:>12.4}  {:>8}  {:>7}\n",
            r.n,
            r.verify_ms,
            ratio(r.verify_ratio),
            r.solve_ms,
            ratio(r.solve_ratio),
            r.answer
        );
    }
    out
}
