//! Command-line front end: argument parsing, dispatch and report output.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::character::clifford::D4Instance;
use crate::character::{complement_pcgs, orbit_bfs, AbelianSection};
use crate::constructions::tower;
use crate::fqfield::FqElem;
use crate::root_data::{Kind, RootSystemTable};
use crate::unipotent::GroupContext;
use crate::verification::{
    count_family, mutation_suite, property_suite, suite_d4, suite_e6, suite_e8, verify_prop_fq, verify_reduction_lemma,
    FamilyCount, Status, SuiteConfig, SuiteReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_BUDGET: u128 = 1 << 21;

#[derive(Parser, Debug)]
#[command(name = "unichar", version, about = "Exact character constructions for unipotent groups at bad primes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Sample count for sampled checks.
    #[arg(long, global = true, default_value_t = 10_000)]
    samples: usize,
    /// Enumeration cap.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Required for budgets above the default cap.
    #[arg(long, global = true)]
    allow_large_budget: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    D4,
    E6,
    E8,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::D4 => Kind::D4,
            KindArg::E6 => Kind::E6,
            KindArg::E8 => Kind::E8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Prop,
    Reduction,
    D4,
    E6,
    E8,
    Mutation,
    Properties,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exhaustive check of the T_a proposition over F_{p^f}.
    FieldCheck {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        f: usize,
    },
    /// Print a commutator table.
    Tables {
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Multiply a word and print its normal form.
    Collect {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        word: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Field order; defaults to the kind's bad prime.
        #[arg(long)]
        q: Option<usize>,
        /// Kind for the mutation and properties suites.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Count characters by degree for one central character and in total.
    Census {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        q: usize,
    },
    /// Orbit of a functional on the top tower levels under the complement T.
    Orbit {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        q: usize,
        /// Number of tower levels in the section, counted from the center.
        #[arg(long)]
        level: usize,
        /// Coefficients as "root=c,root=c"; unspecified roots are 0.
        #[arg(long, default_value = "")]
        start: String,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

enum Output {
    Report(SuiteReport),
    Census(FamilyCount),
    Plain { text: String, json: Value, pass: bool },
}

/// Parses `argv`, runs the command, writes output and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match execute(&cli) {
        Ok(out) => emit(&cli.common, out),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Usage> {
    let c = &cli.common;
    if c.budget > DEFAULT_BUDGET && !c.allow_large_budget {
        return Err(Usage(format!("budget {} exceeds the default cap {DEFAULT_BUDGET}; pass --allow-large-budget", c.budget)));
    }
    if let Some(n) = c.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let cfg = SuiteConfig { seed: c.seed, samples: c.samples, budget: c.budget };
    Ok(match &cli.command {
        Command::FieldCheck { p, f } => Output::Report(verify_prop_fq(*p, *f)),
        Command::Tables { kind } => {
            let t = RootSystemTable::load((*kind).into())?;
            let v = t.validate();
            let text = format!(
                "kind {} hmax {} roots {} quotient roots {} entries {} quotient entries {}\n",
                Kind::from(*kind),
                t.to_json()["hmax"],
                t.order().len(),
                v.quotient_roots,
                v.entries,
                v.quotient_entries
            );
            Output::Plain { text, json: t.to_json(), pass: v.passed() }
        }
        Command::Collect { kind, q, word } => {
            let ctx = GroupContext::standard((*kind).into(), *q)?;
            let u = ctx.parse_word(word)?;
            Output::Plain { text: format!("{}\n", ctx.format(&u)), json: ctx.to_json(&u), pass: true }
        }
        Command::Verify { suite, q, kind } => {
            let kind = kind.map(Kind::from);
            let need_kind = || kind.ok_or_else(|| Usage("this suite needs --kind".to_string()));
            let q_for = |k: Kind| q.unwrap_or(k.paired_prime() as usize);
            Output::Report(match suite {
                SuiteArg::Prop => prop_grid(*q)?,
                SuiteArg::Reduction => reduction_all(),
                SuiteArg::D4 => suite_d4(q_for(Kind::D4), &cfg),
                SuiteArg::E6 => suite_e6(q_for(Kind::E6), &cfg),
                SuiteArg::E8 => suite_e8(q_for(Kind::E8), &cfg),
                SuiteArg::Mutation => {
                    let k = need_kind()?;
                    mutation_suite(k, q_for(k), &cfg)
                }
                SuiteArg::Properties => {
                    let k = need_kind()?;
                    property_suite(k, q_for(k), &cfg)
                }
            })
        }
        Command::Census { kind, q } => Output::Census(count_family((*kind).into(), *q).map_err(Usage)?),
        Command::Orbit { kind, q, level, start } => orbit((*kind).into(), *q, *level, start, c.budget)?,
    })
}

fn prop_grid(q: Option<usize>) -> Result<SuiteReport, Usage> {
    let mut r = SuiteReport::new("prop_fq", json!({"q": q}));
    let pairs: Vec<(u32, usize)> = match q {
        Some(q) => {
            let f = crate::fqfield::FieldSpec::of_order(q)?;
            vec![(f.p(), f.f())]
        }
        None => [2, 3, 5].iter().flat_map(|&p| (1..=4).map(move |f| (p, f))).collect(),
    };
    for (p, f) in pairs {
        r.merge(&format!("p{p}f{f}"), verify_prop_fq(p, f));
    }
    Ok(r.finish())
}

fn reduction_all() -> SuiteReport {
    let mut r = SuiteReport::new("reduction", json!({"kind": "D4", "q": 2}));
    for (name, which) in [("inert", D4Instance::Inert), ("split", D4Instance::Split), ("mutant", D4Instance::Mutant)] {
        r.merge(name, verify_reduction_lemma(which));
    }
    r.finish()
}

fn orbit(kind: Kind, q: usize, level: usize, start: &str, budget: u128) -> Result<Output, Usage> {
    let ctx = GroupContext::standard(kind, q)?;
    let spec = tower(kind);
    if level == 0 || level > spec.levels.len() {
        return Err(Usage(format!("level must be between 1 and {}", spec.levels.len())));
    }
    let roots: Vec<usize> = spec.levels[..level].concat();
    let section = AbelianSection::new(&ctx, &roots)?;
    let mut b = vec![FqElem::ZERO; roots.len()];
    for item in start.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (r, c) = item.split_once('=').ok_or_else(|| Usage(format!("malformed coefficient {item:?}")))?;
        let r: usize = r.trim().parse()?;
        let pos = roots.iter().position(|&x| x == r).ok_or_else(|| Usage(format!("root {r} is not in the section")))?;
        b[pos] = ctx.field().parse(c.trim())?;
    }
    let ell = section.functional(&ctx, &b);
    let gens = complement_pcgs(&ctx, &spec.complement);
    let mats = gens.iter().map(|g| section.conj_matrix(&ctx, g)).collect::<Result<Vec<_>, _>>()?;
    let order = (ctx.field().p() as u128).pow(gens.len() as u32);
    let cap = usize::try_from(budget.min(1_000_000)).unwrap_or(1_000_000);
    let rep = orbit_bfs(&section, &ell, &mats, order, cap)?;
    let text = format!(
        "kind {kind} q {q} section {:?}\norbit {} stabilizer {} group {}\n",
        roots, rep.orbit_size, rep.stabilizer_order, rep.group_order
    );
    Ok(Output::Plain { text, json: json!({"kind": kind, "q": q, "section": roots, "orbit": rep}), pass: true })
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Info => "info",
        Status::Skipped => "skipped",
    }
}

fn csv_field(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn census_text(c: &FamilyCount) -> String {
    let mut out = format!("census {} q={} torus_orbit={}\n", c.kind, c.q, c.torus_orbit);
    for (d, n) in &c.per_central {
        let f = c.formula.get(d);
        out.push_str(&format!(
            "  degree {d}: per_central {n} total {} closed_form {}\n",
            c.totals[d],
            f.map_or("-".to_string(), |f| format!("{}/{}", f.numerator, f.denominator))
        ));
    }
    out.push_str(&format!("  sum_of_squares {} expected {}\n", c.sum_of_squares, c.expected_sum_of_squares));
    out.push_str(if census_pass(c) { "result: pass\n" } else { "result: FAIL\n" });
    out
}

fn census_pass(c: &FamilyCount) -> bool {
    c.sum_of_squares == c.expected_sum_of_squares && c.formula_agrees()
}

fn render(common: &Common, out: &Output) -> (String, bool) {
    match out {
        Output::Report(r) => {
            let s = match common.emit {
                Emit::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
                Emit::Text => r.to_text(),
                Emit::Csv => {
                    let mut s = String::from("anchor,status,measured,expected,witness\n");
                    for c in &r.checks {
                        s.push_str(&format!(
                            "{},{},{},{},{}\n",
                            c.anchor,
                            status_word(c.status),
                            csv_field(&c.measured),
                            csv_field(&c.expected),
                            csv_field(&c.witness.clone().map_or(Value::Null, Value::String))
                        ));
                    }
                    s
                }
            };
            (s, r.passed())
        }
        Output::Census(c) => {
            let s = match common.emit {
                Emit::Json => serde_json::to_string_pretty(c).expect("census serializes") + "\n",
                Emit::Text => census_text(c),
                Emit::Csv => {
                    let mut s = String::from("kind,q,degree,per_central,torus_orbit,total,formula_numerator,formula_denominator\n");
                    for (d, n) in &c.per_central {
                        let (fnum, fden) = c.formula.get(d).map_or((String::new(), String::new()), |f| {
                            (f.numerator.to_string(), f.denominator.to_string())
                        });
                        s.push_str(&format!("{},{},{d},{n},{},{},{fnum},{fden}\n", c.kind, c.q, c.torus_orbit, c.totals[d]));
                    }
                    s
                }
            };
            (s, census_pass(c))
        }
        Output::Plain { text, json, pass } => {
            let s = match common.emit {
                Emit::Json | Emit::Csv => serde_json::to_string_pretty(json).expect("value serializes") + "\n",
                Emit::Text => text.clone(),
            };
            (s, *pass)
        }
    }
}

fn emit(common: &Common, out: Output) -> i32 {
    let (s, pass) = render(common, &out);
    let written = match &common.out {
        Some(path) => std::fs::write(path, s.as_bytes()),
        None => std::io::stdout().write_all(s.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
