//! `wltl`: batch front end for the weighted LTL toolkit.
//!
//! Exit codes: 0 yes or success, 1 no (a witness is printed), 2 usage or
//! input error, 3 resource cap exceeded. Diagnostics go to stderr.

use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wltl_core::automata::{
    buchi_inclusion_via_complement, buchi_inclusion_with, safety_counterexample, wba_behavior, Buchi, ComplementLimits,
    InclusionLimits,
};
use wltl_core::decide::{
    decide_formula_automaton_with, is_k_safe_formula, k_safety_counterexample, quantitative_equivalence_with,
    quantitative_inclusion_with, DecideOptions, Verdict,
};
use wltl_core::io::{buchi_to_text, parse_automaton, parse_wba, parse_wts, wba_to_text, wts_to_text, AutomatonFile};
use wltl_core::logic::{classify, parse_classical, parse_formula};
use wltl_core::monoid::{check_axioms, liminf_monotonicity_counterexample, MonoidId, OmegaMonoid, PairLex};
use wltl_core::semantics::{eval, eval_classical};
use wltl_core::translate::{formula_to_wba_over, ltl_to_buchi_over, threshold_buchi, wts_to_wba};
use wltl_core::{Error, ExtRat, Lasso, Letter, Monoid, Wba};

#[derive(Parser)]
#[command(name = "wltl", version, about = "Weighted LTL: evaluation, translation and decision procedures")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Config {
    /// Monoid: k1 (liminf), k2 (limsup), k3 (sup); `axioms` also takes pairlex.
    #[arg(long, global = true)]
    monoid: Option<MonoidId>,
    /// Seed for sampled checks; equal seeds give identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of samples for sampled checks.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    /// Cap on search elements for inclusion and on states for complementation.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// `text` for people, `lines` for `key=value` lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Lines,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Antichain search over transition profiles.
    Ramsey,
    /// Intersection with a rank-based complement; small right sides only.
    Complement,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an input and print it in canonical form.
    #[command(group(ArgGroup::new("input").required(true)))]
    Parse {
        #[arg(long, group = "input")]
        formula: Option<String>,
        #[arg(long, group = "input")]
        classical: Option<String>,
        #[arg(long, group = "input")]
        automaton: Option<String>,
        #[arg(long, group = "input")]
        lasso: Option<String>,
        #[arg(long, group = "input")]
        wts: Option<String>,
    },
    /// Report fragment membership of a weighted formula.
    Classify {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        k: Option<ExtRat>,
    },
    /// Evaluate a formula on a lasso.
    Eval {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        lasso: String,
        /// Read the formula as classical LTL and print true or false.
        #[arg(long)]
        classical: bool,
    },
    /// Behavior of a weighted automaton on a lasso.
    Behavior {
        #[arg(long)]
        automaton: String,
        #[arg(long)]
        lasso: String,
    },
    /// Translate a formula into an automaton.
    Translate {
        #[arg(long)]
        formula: String,
        /// Read the formula as classical LTL and build a Büchi automaton.
        #[arg(long)]
        classical: bool,
        /// Comma-separated propositions to build over, in addition to the formula's.
        #[arg(long, value_delimiter = ',')]
        aps: Vec<String>,
        /// Compare the automaton with the evaluator on `--samples` lassos.
        #[arg(long)]
        verify: bool,
    },
    /// Büchi automaton of the words whose behavior is at least a value.
    Threshold {
        #[arg(long)]
        automaton: String,
        #[arg(long)]
        value: ExtRat,
    },
    /// Language inclusion (Büchi) or pointwise `<=` (weighted).
    Include {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = Engine::Ramsey)]
        engine: Engine,
    },
    /// Language or behavior equality.
    Equiv {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = Engine::Ramsey)]
        engine: Engine,
    },
    /// Whether a formula of the k-indexed fragment and an automaton agree on every word.
    Decide {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        automaton: String,
        #[arg(long)]
        k: ExtRat,
        /// Extra threshold values to check.
        #[arg(long, value_delimiter = ',')]
        thresholds: Vec<ExtRat>,
    },
    /// Safety of a Büchi language, or k-safety of a weighted automaton or formula.
    #[command(group(ArgGroup::new("subject").required(true)))]
    Safety {
        #[arg(long, group = "subject")]
        automaton: Option<String>,
        #[arg(long, group = "subject")]
        formula: Option<String>,
        #[arg(long)]
        k: Option<ExtRat>,
    },
    /// Turn a weighted transition system into a weighted automaton.
    Wts2wba {
        #[arg(long)]
        wts: String,
    },
    /// Check the ω-valuation monoid laws on random samples.
    Axioms,
}

/// Output as ordered key/value pairs.
#[derive(Default)]
struct Report {
    pairs: Vec<(String, String)>,
    /// Exit code 1 instead of 0.
    negative: bool,
}

impl Report {
    fn add(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.pairs.push((key.to_string(), value.to_string()));
        self
    }

    fn value(key: &str, value: impl ToString) -> Report {
        let mut r = Report::default();
        r.add(key, value);
        r
    }

    fn print(&self, format: Format) {
        for (k, v) in &self.pairs {
            match format {
                Format::Lines => println!("{k}={v}"),
                Format::Text if self.pairs.len() == 1 => println!("{v}"),
                Format::Text => println!("{k}: {v}"),
            }
        }
    }

    fn verdict(v: &Verdict) -> Report {
        let mut r = Report { negative: !v.holds, ..Report::default() };
        r.add("verdict", if v.holds { "yes" } else { "no" });
        let ts: Vec<String> = v.thresholds_checked.iter().map(ToString::to_string).collect();
        r.add("thresholds", ts.join(","));
        if let Some(w) = &v.witness {
            r.add("witness", &w.lasso).add("left", &w.left).add("right", &w.right).add("at_threshold", &w.threshold);
        }
        r
    }

    fn boolean(holds: bool, witness: Option<&Lasso>) -> Report {
        let mut r = Report { negative: !holds, ..Report::default() };
        r.add("verdict", if holds { "yes" } else { "no" });
        if let Some(w) = witness {
            r.add("witness", w);
        }
        r
    }
}

/// Outcome of a command: either a report or raw text such as an automaton file.
enum Output {
    Report(Report),
    Text(String),
}

/// Reads `arg` as a file when one exists at that path, else as inline text.
fn source(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

fn monoid(cfg: &Config) -> Result<Monoid> {
    let id = cfg.monoid.ok_or_else(|| anyhow!("--monoid is required"))?;
    Ok(Monoid::from_id(id)?)
}

/// A weighted automaton, read over `--monoid` when one is given.
fn weighted(cfg: &Config, arg: &str) -> Result<Wba> {
    let a = parse_wba(&source(arg)?).with_context(|| format!("in {arg}"))?;
    Ok(match cfg.monoid {
        Some(id) => a.with_monoid(Monoid::from_id(id)?),
        None => a,
    })
}

fn automaton(cfg: &Config, arg: &str) -> Result<AutomatonFile> {
    Ok(match parse_automaton(&source(arg)?).with_context(|| format!("in {arg}"))? {
        AutomatonFile::Weighted(a) => AutomatonFile::Weighted(match cfg.monoid {
            Some(id) => a.with_monoid(Monoid::from_id(id)?),
            None => a,
        }),
        b => b,
    })
}

fn lasso(arg: &str) -> Result<Lasso> {
    source(arg)?.trim().parse::<Lasso>().with_context(|| format!("lasso `{arg}`"))
}

fn inclusion_limits(cfg: &Config) -> InclusionLimits {
    cfg.cap.map_or_else(InclusionLimits::default, |max_elements| InclusionLimits { max_elements })
}

fn complement_limits(cfg: &Config) -> ComplementLimits {
    let d = ComplementLimits::default();
    ComplementLimits { output_states: cfg.cap.unwrap_or(d.output_states), ..d }
}

fn decide_options(cfg: &Config) -> DecideOptions {
    DecideOptions { inclusion: inclusion_limits(cfg), ..DecideOptions::default() }
}

fn buchi_inclusion(cfg: &Config, engine: Engine, a: &Buchi, b: &Buchi) -> Result<Option<Lasso>> {
    Ok(match engine {
        Engine::Ramsey => buchi_inclusion_with(a, b, inclusion_limits(cfg))?,
        Engine::Complement => buchi_inclusion_via_complement(a, b, complement_limits(cfg))?,
    })
}

fn compare(cfg: &Config, left: &str, right: &str, engine: Engine, both_ways: bool) -> Result<Report> {
    match (automaton(cfg, left)?, automaton(cfg, right)?) {
        (AutomatonFile::Buchi(a), AutomatonFile::Buchi(b)) => {
            let mut w = buchi_inclusion(cfg, engine, &a, &b)?;
            let mut side = "left";
            if w.is_none() && both_ways {
                w = buchi_inclusion(cfg, engine, &b, &a)?;
                side = "right";
            }
            let mut r = Report::boolean(w.is_none(), w.as_ref());
            if w.is_some() {
                r.add("accepted_by", side);
            }
            Ok(r)
        }
        (AutomatonFile::Weighted(a), AutomatonFile::Weighted(b)) => {
            if engine == Engine::Complement {
                bail!("--engine complement applies to Büchi automata only");
            }
            let v = if both_ways {
                quantitative_equivalence_with(&a, &b, decide_options(cfg))?
            } else {
                quantitative_inclusion_with(&a, &b, decide_options(cfg))?
            };
            Ok(Report::verdict(&v))
        }
        _ => bail!("cannot compare a Büchi automaton with a weighted one"),
    }
}

fn random_letter(r: &mut impl Rng, aps: &[String]) -> Letter {
    aps.iter().filter(|_| r.gen_bool(0.5)).cloned().collect()
}

fn random_lasso(r: &mut impl Rng, aps: &[String]) -> Lasso {
    let (p, c) = (r.gen_range(0..=4), r.gen_range(1..=4));
    Lasso::new((0..p).map(|_| random_letter(r, aps)).collect(), (0..c).map(|_| random_letter(r, aps)).collect())
}

fn run(cfg: &Config, cmd: Cmd) -> Result<Output> {
    let out = match cmd {
        Cmd::Parse { formula, classical, automaton: aut, lasso: l, wts } => Output::Text(if let Some(f) = formula {
            format!("{}\n", parse_formula(&source(&f)?)?)
        } else if let Some(f) = classical {
            format!("{}\n", parse_classical(&source(&f)?)?)
        } else if let Some(a) = aut {
            match automaton(cfg, &a)? {
                AutomatonFile::Buchi(b) => buchi_to_text(&b),
                AutomatonFile::Weighted(w) => wba_to_text(&w),
            }
        } else if let Some(l) = l {
            format!("{}\n", lasso(&l)?)
        } else {
            wts_to_text(&parse_wts(&source(&wts.expect("clap requires one input"))?)?)
        }),
        Cmd::Classify { formula, k } => {
            let rep = classify(&parse_formula(&source(&formula)?)?, k.as_ref())?;
            let mut r = Report::default();
            for line in rep.to_string().lines() {
                let (key, v) = line.split_once('=').expect("key=value lines");
                r.add(key, v);
            }
            Output::Report(r)
        }
        Cmd::Eval { formula, lasso: l, classical } => {
            let w = lasso(&l)?;
            if classical {
                Output::Report(Report::value("value", eval_classical(&parse_classical(&source(&formula)?)?, &w)))
            } else {
                Output::Report(Report::value("value", eval(&parse_formula(&source(&formula)?)?, &w, monoid(cfg)?)))
            }
        }
        Cmd::Behavior { automaton: a, lasso: l } => {
            Output::Report(Report::value("value", wba_behavior(&weighted(cfg, &a)?, &lasso(&l)?)?))
        }
        Cmd::Translate { formula, classical, aps, verify } => {
            let text = source(&formula)?;
            if classical {
                let f = parse_classical(&text)?;
                let aps: Vec<String> = f.atoms().into_iter().chain(aps).collect();
                let b = ltl_to_buchi_over(&f, &aps)?;
                if verify {
                    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
                    for _ in 0..cfg.samples {
                        let w = random_lasso(&mut r, b.aps());
                        if b.accepts(&w) != eval_classical(&f, &w) {
                            bail!("automaton and evaluator disagree on `{w}`");
                        }
                    }
                }
                Output::Text(buchi_to_text(&b))
            } else {
                let f = parse_formula(&text)?;
                let m = monoid(cfg)?;
                let aps: Vec<String> = f.atoms().into_iter().chain(aps).collect();
                let a = formula_to_wba_over(&f, m, &aps)?;
                if verify {
                    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
                    for _ in 0..cfg.samples {
                        let w = random_lasso(&mut r, a.aps());
                        let (got, want) = (wba_behavior(&a, &w)?, eval(&f, &w, m));
                        if got != want {
                            bail!("automaton gives {got} but the formula {want} on `{w}`");
                        }
                    }
                }
                Output::Text(wba_to_text(&a))
            }
        }
        Cmd::Threshold { automaton: a, value } => Output::Text(buchi_to_text(&threshold_buchi(&weighted(cfg, &a)?, &value)?)),
        Cmd::Include { left, right, engine } => Output::Report(compare(cfg, &left, &right, engine, false)?),
        Cmd::Equiv { left, right, engine } => Output::Report(compare(cfg, &left, &right, engine, true)?),
        Cmd::Decide { formula, automaton: a, k, thresholds } => {
            let f = parse_formula(&source(&formula)?)?;
            let opts = DecideOptions { extra_thresholds: thresholds, ..decide_options(cfg) };
            Output::Report(Report::verdict(&decide_formula_automaton_with(&f, &weighted(cfg, &a)?, &k, opts)?))
        }
        Cmd::Safety { automaton: Some(a), k, .. } => Output::Report(match automaton(cfg, &a)? {
            AutomatonFile::Buchi(b) => {
                let w = safety_counterexample(&b, inclusion_limits(cfg))?;
                Report::boolean(w.is_none(), w.as_ref())
            }
            AutomatonFile::Weighted(wa) => {
                let k = k.ok_or_else(|| anyhow!("--k is required for a weighted automaton"))?;
                let w = k_safety_counterexample(&wa, &k, inclusion_limits(cfg))?;
                Report::boolean(w.is_none(), w.as_ref())
            }
        }),
        Cmd::Safety { formula: Some(f), k, .. } => {
            let f = parse_formula(&source(&f)?)?;
            let k = k.ok_or_else(|| anyhow!("--k is required for a formula"))?;
            let m = monoid(cfg)?;
            let (safe, method) = is_k_safe_formula(&f, &k, m)?;
            let w = if safe {
                None
            } else {
                let aps: Vec<String> = f.atoms().into_iter().collect();
                k_safety_counterexample(&formula_to_wba_over(&f, m, &aps)?, &k, inclusion_limits(cfg))?
            };
            let mut r = Report::boolean(safe, w.as_ref());
            r.add("method", method);
            Output::Report(r)
        }
        Cmd::Safety { .. } => unreachable!("clap requires an automaton or a formula"),
        Cmd::Wts2wba { wts } => Output::Text(wba_to_text(&wts_to_wba(&parse_wts(&source(&wts)?)?)?)),
        Cmd::Axioms => {
            let ids = match cfg.monoid {
                Some(id) => vec![id],
                None => vec![MonoidId::K1, MonoidId::K2, MonoidId::K3, MonoidId::PairLex],
            };
            let mut r = Report::default();
            for id in ids {
                let rep = match id {
                    MonoidId::PairLex => check_axioms(&PairLex, cfg.samples, cfg.seed),
                    m => check_axioms(&Monoid::from_id(m)?, cfg.samples, cfg.seed),
                };
                r.negative |= !rep.all_passed();
                for c in &rep.checks {
                    let v = match &c.failure {
                        None => format!("pass ({} samples)", c.samples),
                        Some(why) => format!("fail: {why}"),
                    };
                    r.add(&format!("{id}.{}", c.name), v);
                }
                if id == MonoidId::K1 {
                    let (lo, hi) = liminf_monotonicity_counterexample();
                    let (a, b) = (Monoid::K1.val_omega(&lo), Monoid::K1.val_omega(&hi));
                    r.add("k1.unconditional-monotonicity", format!("fails as expected: Val({lo}) = {a} > Val({hi}) = {b}"));
                    r.negative |= a <= b;
                }
            }
            Output::Report(r)
        }
    };
    Ok(out)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::CapExceeded { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.config, cli.cmd) {
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            r.print(cli.config.format);
            ExitCode::from(u8::from(r.negative))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
