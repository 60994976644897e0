//! `wpump`: command-line access to every stage of the pumping pipeline.
//!
//! Reports go to stdout, diagnostics to stderr. Exit codes: 0 on success,
//! 1 on a domain error, 2 on a usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wpump_core::endos::{injective_surjective, is_pseudoregular, EndoReport};
use wpump_core::format;
use wpump_core::linrep::DEFAULT_SUPPORT_BUDGET;
use wpump_core::pump::{
    find_quasipower, gap_sequence, pump_verify, quasipower_constant, reduce_alphabet, refute_support,
    verify_quasipower, Claim, PumpingWitness, QuasipowerMode, Verdict, WitnessMode, WitnessSource,
    DEFAULT_K,
};
use wpump_core::scalars::{axiom_suite, AxiomSamples};
use wpump_core::spans::{
    enumerate_lattice, length_bound, length_exact, maxtimes_chain, DEFAULT_ENUMERATION_BUDGET,
};
use wpump_core::{Error, Matrix, Semiring, SemiringSpec};

#[derive(Parser)]
#[command(name = "wpump", version, about = "Pumping witnesses for weighted automata")]
struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Scan,
    Chain,
}

impl From<ModeArg> for WitnessMode {
    fn from(m: ModeArg) -> WitnessMode {
        match m {
            ModeArg::Scan => WitnessMode::Scan,
            ModeArg::Chain => WitnessMode::Chain,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weight of a word.
    Eval { file: PathBuf, word: String },
    /// Every support word up to a length.
    Support {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// The matrix μ(w).
    Mu { file: PathBuf, word: String },
    /// Whether μ(w) is pseudoregular.
    Pseudoregular { file: PathBuf, word: String },
    /// Injectivity and surjectivity of μ(w).
    Injsurj { file: PathBuf, word: String },
    /// A factorization w = u·x·v with μ(x) pseudoregular.
    Witness {
        file: PathBuf,
        word: String,
        #[arg(long, value_enum, default_value = "scan")]
        mode: ModeArg,
    },
    /// Witness plus pumped weights and the gap verdict.
    Pump {
        file: PathBuf,
        word: String,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long, value_enum, default_value = "scan")]
        mode: ModeArg,
    },
    /// Pumped weights for an explicit factorization.
    Gap {
        file: PathBuf,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
    },
    /// Length of S^n: an upper bound, or the exact value by enumeration.
    Length {
        #[arg(long)]
        semiring: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        #[arg(long)]
        bound: bool,
    },
    /// The subsemimodule lattice of S^n.
    Lattice {
        #[arg(long)]
        semiring: String,
        #[arg(long)]
        dim: usize,
    },
    /// The quasipower constant N_r.
    Constant {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        sigma: usize,
    },
    /// A quasipower of order r inside a word.
    Quasipower {
        word: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        best_effort: bool,
    },
    /// Merge letters with identical matrices.
    ReduceAlphabet {
        file: PathBuf,
        /// Write the reduced automaton here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Look for evidence against a claimed support.
    Refute {
        file: PathBuf,
        /// anbn, equal-counts, even-length or words.
        #[arg(long)]
        claim: String,
        /// Comma-separated word list for --claim words.
        #[arg(long, value_delimiter = ',')]
        words: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
    },
    /// Check the semiring axioms.
    Axioms {
        #[arg(long)]
        semiring: String,
        /// Random triples for infinite carriers.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rewrite an automaton file in canonical form.
    Canonicalize {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Demonstrations.
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand)]
enum Demo {
    /// The strictly increasing chain in Qmax².
    MaxtimesChain {
        #[arg(long, default_value_t = 25)]
        steps: usize,
    },
}

type Outcome = Result<String, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

fn semiring_arg(text: &str) -> Result<Semiring, Error> {
    let spec: SemiringSpec = if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(e.to_string()))?
    } else {
        text.parse()?
    };
    Semiring::from_spec(&spec)
}

fn matrix_table(m: &Matrix) -> String {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [ {} ]", cells.join("  "));
    }
    out
}

fn vectors(vs: &[Vec<wpump_core::Scalar>]) -> String {
    let parts: Vec<String> = vs
        .iter()
        .map(|v| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    parts.join(" ")
}

fn show_word(w: &str) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

fn endo_text(r: &EndoReport) -> String {
    let mut out = String::new();
    out.push_str(&matrix_table(&r.matrix));
    let _ = writeln!(out, "pseudoregular: {}", r.pseudoregular);
    let _ = writeln!(out, "im generators: {}", vectors(r.im_basis.generators()));
    let _ = writeln!(out, "im² generators: {}", vectors(r.im_sq_basis.generators()));
    if let (Some(i), Some(s)) = (r.injective, r.surjective) {
        let _ = writeln!(out, "injective: {i}\nsurjective: {s}");
    }
    out
}

fn source_name(s: WitnessSource) -> &'static str {
    match s {
        WitnessSource::QuasipowerChain => "quasipower-chain",
        WitnessSource::OpportunisticScan => "opportunistic-scan",
        WitnessSource::PowerRule => "power-rule",
    }
}

fn witness_text(w: &PumpingWitness) -> String {
    format!(
        "u = {}\nx = {}\nv = {}\nsource: {}\n",
        show_word(&w.u),
        show_word(&w.x),
        show_word(&w.v),
        source_name(w.source)
    )
}

fn gap_text(g: &wpump_core::pump::GapReport) -> String {
    let bound = g.gap_bound.map_or("unavailable".to_string(), |b| b.to_string());
    let violated = g.violated.map_or("undefined".to_string(), |v| v.to_string());
    format!(
        "gap bound: {bound}\nmax zero run after first nonzero: {}\nviolated: {violated}\n",
        g.max_zero_run_after_first_nonzero
    )
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Eval { file, word } => {
            let rep = format::load(file)?;
            let weight = rep.evaluate(word)?;
            Ok(if json {
                to_json(&json!({ "word": word, "weight": weight }))
            } else {
                format!("{weight}\n")
            })
        }
        Command::Support { file, max_len } => {
            let rep = format::load(file)?;
            let sample = rep.support_sample(*max_len, DEFAULT_SUPPORT_BUDGET)?;
            if json {
                return Ok(to_json(&sample));
            }
            let mut out = String::new();
            for s in &sample {
                let _ = writeln!(out, "{}\t{}", show_word(&s.word), s.weight);
            }
            Ok(out)
        }
        Command::Mu { file, word } => {
            let m = format::load(file)?.mu_of_word(word)?;
            Ok(if json { to_json(&m) } else { matrix_table(&m) })
        }
        Command::Pseudoregular { file, word } => {
            let r = is_pseudoregular(&format::load(file)?.mu_of_word(word)?)?;
            Ok(if json { to_json(&r) } else { endo_text(&r) })
        }
        Command::Injsurj { file, word } => {
            let m = format::load(file)?.mu_of_word(word)?;
            let (injective, surjective) = injective_surjective(&m)?;
            Ok(if json {
                to_json(&json!({ "injective": injective, "surjective": surjective }))
            } else {
                format!("injective: {injective}\nsurjective: {surjective}\n")
            })
        }
        Command::Witness { file, word, mode } => {
            let rep = format::load(file)?;
            let w = wpump_core::pump::extract_witness(&rep, word, (*mode).into())?;
            Ok(if json {
                to_json(&w)
            } else {
                format!("{}{}", witness_text(&w), endo_text(&w.evidence))
            })
        }
        Command::Pump { file, word, k, mode } => {
            let rep = format::load(file)?;
            let report = pump_verify(&rep, word, *k, (*mode).into())?;
            if json {
                return Ok(to_json(&report));
            }
            let mut out = format!("word: {}\nweight: {}\n", show_word(word), report.weight);
            out.push_str(&witness_text(&report.witness));
            out.push_str("k\tweight\tword\n");
            for p in &report.pumped {
                let _ = writeln!(out, "{}\t{}\t{}", p.k, p.weight, show_word(&p.word));
            }
            let _ = writeln!(out, "nonzero pumped weights: {} of {}", report.nonzero_count, report.pumped.len());
            out.push_str(&gap_text(&report.gap));
            Ok(out)
        }
        Command::Gap { file, u, x, v, k } => {
            let rep = format::load(file)?;
            let evidence = is_pseudoregular(&rep.mu_of_word(x)?)?;
            if !evidence.pseudoregular {
                return Err(Error::InvalidArgument(format!("mu({x:?}) is not pseudoregular")));
            }
            let witness = PumpingWitness {
                u: u.clone(),
                x: x.clone(),
                v: v.clone(),
                evidence,
                source: WitnessSource::OpportunisticScan,
            };
            let g = gap_sequence(&rep, &witness, *k)?;
            if json {
                return Ok(to_json(&g));
            }
            let mut out = String::from("k\ts_k\n");
            for (i, s) in g.weights.iter().enumerate() {
                let _ = writeln!(out, "{i}\t{s}");
            }
            out.push_str(&gap_text(&g));
            Ok(out)
        }
        Command::Length { semiring, dim, exact, .. } => {
            let s = semiring_arg(semiring)?;
            let (kind, value) = if *exact {
                let lattice = enumerate_lattice(&s, *dim, DEFAULT_ENUMERATION_BUDGET)?;
                ("exact", length_exact(&lattice))
            } else {
                ("bound", length_bound(&s, *dim)?)
            };
            Ok(if json {
                to_json(&json!({ "semiring": s.name(), "dim": dim, "kind": kind, "length": value }))
            } else {
                format!("{value}\n")
            })
        }
        Command::Lattice { semiring, dim } => {
            let s = semiring_arg(semiring)?;
            let lattice = enumerate_lattice(&s, *dim, DEFAULT_ENUMERATION_BUDGET)?;
            let length = length_exact(&lattice);
            let sizes: Vec<usize> = (0..lattice.node_count()).map(|i| lattice.node_size(i)).collect();
            if json {
                return Ok(to_json(&json!({
                    "semiring": s.name(),
                    "dim": dim,
                    "nodes": sizes,
                    "covers": lattice.covers(),
                    "length": length,
                })));
            }
            let mut out = format!("{} subsemimodules of {}^{dim}, length {length}\n", lattice.node_count(), s.name());
            for (i, size) in sizes.iter().enumerate() {
                let _ = writeln!(out, "#{i}\t{size} elements");
            }
            for (a, b) in lattice.covers() {
                let _ = writeln!(out, "#{a} < #{b}");
            }
            Ok(out)
        }
        Command::Constant { r, sigma } => {
            let n = quasipower_constant(*r, *sigma)?;
            Ok(if json {
                to_json(&json!({ "r": r, "sigma": sigma, "value": n.to_string() }))
            } else {
                format!("{n}\n")
            })
        }
        Command::Quasipower { word, r, best_effort } => {
            let mode = if *best_effort { QuasipowerMode::BestEffort } else { QuasipowerMode::Strict };
            let d = find_quasipower(word, *r, mode)?;
            if !verify_quasipower(&d) || !d.occurs_in(word) {
                return Err(Error::Invariant("quasipower failed verification".into()));
            }
            if json {
                return Ok(to_json(&d));
            }
            let mut out = format!("position: {}\n", d.position);
            for (i, u) in d.levels.iter().enumerate() {
                let _ = writeln!(out, "u_{i} = {}", show_word(u));
            }
            for (i, v) in d.middles.iter().enumerate() {
                let _ = writeln!(out, "v_{} = {}", i + 1, show_word(v));
            }
            Ok(out)
        }
        Command::ReduceAlphabet { file, output } => {
            let rep = format::load(file)?;
            let red = reduce_alphabet(&rep)?;
            if let Some(path) = output {
                format::save(&red.reduced, path)?;
            }
            if json {
                return Ok(to_json(&json!({
                    "mapping": red.mapping,
                    "representatives": red.representatives(),
                })));
            }
            let mut out = String::new();
            for (from, to) in &red.mapping {
                let _ = writeln!(out, "{from} -> {to}");
            }
            Ok(out)
        }
        Command::Refute { file, claim, words, max_len, k } => {
            let rep = format::load(file)?;
            let claim = Claim::from_name(claim, words)?;
            let verdict = refute_support(&rep, &claim, *max_len, *k)?;
            Ok(if json { to_json(&verdict) } else { verdict_text(&verdict) })
        }
        Command::Axioms { semiring, samples, seed } => {
            let s = semiring_arg(semiring)?;
            let mode = if s.is_finite() {
                AxiomSamples::Exhaustive
            } else {
                AxiomSamples::random(&s, *samples, *seed)
            };
            let violations = axiom_suite(&s, &mode)?;
            if json {
                return Ok(to_json(&json!({ "semiring": s.name(), "violations": violations })));
            }
            if violations.is_empty() {
                return Ok(format!("{}: all axioms hold\n", s.name()));
            }
            let mut out = String::new();
            for v in &violations {
                let _ = writeln!(out, "{} fails on ({})", v.axiom, v.witness_string());
            }
            Ok(out)
        }
        Command::Canonicalize { file, output } => canonicalize(file, output.as_deref()),
        Command::Demo(Demo::MaxtimesChain { steps }) => {
            let report = maxtimes_chain(*steps)?;
            if json {
                return Ok(to_json(&report));
            }
            let mut out = String::from("i\tu_{i+1}\tbest approximation in M_i\tstrict\n");
            for s in &report.steps {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    s.index,
                    vectors(std::slice::from_ref(&s.next_generator)),
                    vectors(std::slice::from_ref(&s.residual)),
                    s.strict
                );
            }
            let _ = writeln!(out, "all strict: {}", report.all_strict);
            Ok(out)
        }
    }
}

fn canonicalize(file: &Path, output: Option<&Path>) -> Outcome {
    let rep = format::load(file)?;
    match output {
        Some(path) => format::save(&rep, path).map(|()| String::new()),
        None => Ok(format::to_canonical_string(&rep)),
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Consistent { words_checked, witnesses_pumped } => format!(
            "CONSISTENT\nwords checked: {words_checked}\nwitnesses pumped: {witnesses_pumped}\n"
        ),
        Verdict::SupportMismatch { word, weight, in_support, claimed } => format!(
            "SUPPORT_MISMATCH\nword: {}\nweight: {weight}\nin support: {in_support}\nclaimed: {claimed}\n",
            show_word(word)
        ),
        Verdict::PumpingContradiction { word, u, x, v, k, pumped_word, weight } => format!(
            "PUMPING_CONTRADICTION\nword: {}\nu = {}\nx = {}\nv = {}\nk = {k}\npumped word: {}\nweight: {weight}\n",
            show_word(word),
            show_word(u),
            show_word(x),
            show_word(v),
            show_word(pumped_word)
        ),
    }
}
