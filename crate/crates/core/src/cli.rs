//! Command-line front end.
//!
//! Inputs are DFA files when the argument names an existing file and regular
//! expressions otherwise. Exit status is 0 on success, 1 when a check fails
//! and 2 on usage or input errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::alphabet::Alphabet;
use crate::automata::{
    boolean_combine, complement, concatenate, determinize, kappa, minimize, reverse, star, BoolOp,
    Dfa,
};
use crate::ideals::{check_freeness, classify, closure, min_generator, IdealType};
use crate::regex::{infer_alphabet, Regex};
use crate::verify::{
    check_tightness, fuzz_upper_bounds, reproduce_tables, CheckResult, FuzzOp, Verdict,
    DEFAULT_TRIALS, VERSION,
};
use crate::witnesses::{make_witness, SearchBudget, WitnessParams, WitnessTag};

const SYNOPSIS: &str = "\
inputs are DFA files or regular expressions
regex syntax:
  0 empty set   1 empty word   a 'a1' symbols   . any symbol
  x|y union   xy concatenation   x* star   x+ plus   x^k power
  !x complement   x&y intersection   x-y difference   x~y symmetric difference
DFA file format:
  alphabet: a b
  states: 3
  initial: 0
  final: 1 2
  trans: 0 a 1      (one line per state and symbol)";

#[derive(Debug, Parser)]
#[command(name = "quotient", version, about = "Quotient complexity of regular ideals")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for witness search and random generation.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the quotient complexity of a language.
    Kappa {
        input: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Print the minimal DFA of the ideal generated by a language.
    Close {
        #[arg(long)]
        ideal: IdealType,
        input: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Print the minimal generator of an ideal.
    Mingen {
        #[arg(long)]
        ideal: IdealType,
        input: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// List the ideal types a language belongs to.
    Classify {
        input: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Apply an operation and print the minimal DFA of the result.
    Op {
        op: OpName,
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<String>,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Print the witness automata of a family.
    Witness {
        #[arg(long)]
        theorem: WitnessTag,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        alphabet_size: Option<usize>,
    },
    /// Check the tightness claims of a family over parameter ranges.
    Verify {
        #[arg(long)]
        theorem: WitnessTag,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        m: Option<RangeInclusive<usize>>,
        /// Candidate budget for witness search.
        #[arg(long, default_value_t = SearchBudget::default().max_trials)]
        max_trials: usize,
    },
    /// Check upper bounds on random ideals.
    Fuzz {
        /// Class of operands (`regular` for arbitrary languages); all classes when omitted.
        #[arg(long, value_parser = parse_class)]
        ideal: Option<Class>,
        /// Operation; every applicable one when omitted.
        #[arg(long)]
        op: Option<FuzzOp>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Reproduce the summary tables.
    Tables {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_trials)]
        max_trials: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpName {
    Union,
    Inter,
    Diff,
    Xor,
    Concat,
    Star,
    Reverse,
    Complement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Class(Option<IdealType>);

fn parse_class(s: &str) -> Result<Class, String> {
    match s {
        "regular" => Ok(Class(None)),
        _ => s.parse::<IdealType>().map(|t| Class(Some(t))).map_err(|e| e.to_string()),
    }
}

/// `a..b` and `a..=b` are inclusive; a single number is a one-point range.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected a number or a range like 2..8, got `{s}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Comma- or space-separated names, or one letter per character.
fn parse_alphabet(s: &str) -> Result<Alphabet> {
    let names: Vec<String> = if s.contains([',', ' ']) {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect()
    } else {
        s.chars().map(String::from).collect()
    };
    Alphabet::new(names).with_context(|| format!("invalid alphabet `{s}`"))
}

fn is_file(input: &str) -> bool {
    Path::new(input).is_file()
}

fn read_file(input: &str) -> Result<Dfa> {
    let text = fs::read_to_string(input).with_context(|| format!("cannot read `{input}`"))?;
    Dfa::from_text(&text).with_context(|| format!("invalid DFA file `{input}`"))
}

/// The alphabet shared by all inputs: the explicit one, else that of a DFA
/// file among the inputs, else the symbols written in the expressions.
fn shared_alphabet(inputs: &[String], explicit: Option<&str>) -> Result<Alphabet> {
    if let Some(s) = explicit {
        return parse_alphabet(s);
    }
    if let Some(file) = inputs.iter().find(|i| is_file(i)) {
        return Ok(read_file(file)?.alphabet().clone());
    }
    let mut names = BTreeSet::new();
    for input in inputs {
        let sigma = infer_alphabet(input).with_context(|| format!("invalid expression `{input}`"))?;
        names.extend(sigma.names().iter().cloned());
    }
    Ok(Alphabet::new(names)?)
}

fn load(input: &str, sigma: &Alphabet) -> Result<Dfa> {
    if is_file(input) {
        let d = read_file(input)?;
        if d.alphabet() != sigma {
            bail!(
                "`{input}` is over {{{}}}, expected {{{}}}",
                d.alphabet(),
                sigma
            );
        }
        return Ok(minimize(&d));
    }
    let r = Regex::parse(input, sigma).with_context(|| format!("invalid expression `{input}`"))?;
    let d = r.to_dfa().with_context(|| format!("cannot compile `{input}`"))?;
    Ok(minimize(&d))
}

fn load_one(input: &str, alphabet: Option<&str>) -> Result<Dfa> {
    let sigma = shared_alphabet(&[input.to_string()], alphabet)?;
    load(input, &sigma)
}

struct Report {
    text: String,
    records: Vec<serde_json::Value>,
    pass: bool,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            records: Vec::new(),
            pass: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn record(&mut self, v: impl Serialize) {
        self.records
            .push(serde_json::to_value(v).expect("serializable"));
    }

    fn dfa(&mut self, d: &Dfa) {
        self.text.push_str(&d.to_text());
    }

    fn check(&mut self, r: &CheckResult) {
        self.text.push_str(&r.to_text());
        for e in &r.entries {
            self.record(e);
        }
        for c in &r.counterexamples {
            self.record(c);
        }
        self.record(json!({ "label": r.label, "pass": r.pass }));
        self.pass &= r.pass;
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let mut out = Report::new();
    match &cli.command {
        Command::Kappa { input, alphabet } => {
            let d = load_one(input, alphabet.as_deref())?;
            let k = kappa(&d);
            out.line(k.to_string());
            out.record(json!({ "input": input, "kappa": k }));
        }
        Command::Close {
            ideal,
            input,
            alphabet,
        } => {
            let d = load_one(input, alphabet.as_deref())?;
            let c = closure(&d, *ideal).with_context(|| format!("cannot close `{input}`"))?;
            out.line(format!("# {} closure, kappa {}", ideal, kappa(&c)));
            out.dfa(&c);
            out.record(json!({ "ideal": ideal, "kappa": kappa(&c), "dfa": c.to_text() }));
        }
        Command::Mingen {
            ideal,
            input,
            alphabet,
        } => {
            let d = load_one(input, alphabet.as_deref())?;
            let g = min_generator(&d, *ideal)?;
            let free = check_freeness(&g.generator, *ideal);
            out.line(format!(
                "# minimal generator, kappa {}, {} {}",
                kappa(&g.generator),
                ideal.freeness(),
                if free { "verified" } else { "FAILED" }
            ));
            out.dfa(&g.generator);
            out.record(json!({
                "ideal": ideal,
                "kappa": kappa(&g.generator),
                "free": free,
                "dfa": g.generator.to_text(),
            }));
            out.pass = free;
        }
        Command::Classify { input, alphabet } => {
            let d = load_one(input, alphabet.as_deref())?;
            let types: Vec<&str> = classify(&d).into_iter().map(IdealType::name).collect();
            out.line(format!("kappa {}", kappa(&d)));
            out.line(if types.is_empty() {
                "none".to_string()
            } else {
                types.join(" ")
            });
            out.record(json!({ "kappa": kappa(&d), "ideals": types }));
        }
        Command::Op {
            op,
            inputs,
            alphabet,
        } => {
            let sigma = shared_alphabet(inputs, alphabet.as_deref())?;
            let operands = inputs
                .iter()
                .map(|i| load(i, &sigma))
                .collect::<Result<Vec<_>>>()?;
            let result = apply(*op, &operands)?;
            let name = op.to_possible_value().expect("named").get_name().to_string();
            out.line(format!("# {name}, kappa {}", kappa(&result)));
            out.dfa(&result);
            out.record(json!({ "op": name, "kappa": kappa(&result), "dfa": result.to_text() }));
        }
        Command::Witness {
            theorem,
            n,
            m,
            alphabet_size,
        } => {
            let w = make_witness(
                *theorem,
                WitnessParams {
                    n: *n,
                    m: *m,
                    alphabet_size: *alphabet_size,
                },
            )?;
            for (role, d) in &w.operands {
                out.line(format!("# {theorem} {role}, kappa {}", kappa(d)));
                out.dfa(d);
                out.record(json!({
                    "tag": theorem.name(),
                    "role": role.to_string(),
                    "kappa": kappa(d),
                    "dfa": d.to_text(),
                }));
            }
        }
        Command::Verify {
            theorem,
            n,
            m,
            max_trials,
        } => {
            let budget = SearchBudget {
                seed: cli.seed,
                max_trials: *max_trials,
            };
            let r = check_tightness(*theorem, n.clone(), m.clone(), &budget)?;
            out.check(&r);
        }
        Command::Fuzz {
            ideal,
            op,
            trials,
            max_n,
        } => {
            let cells: Vec<_> = FuzzOp::cells()
                .into_iter()
                .filter(|&(c, o)| ideal.is_none_or(|i| i.0 == c) && op.is_none_or(|x| x == o))
                .collect();
            if cells.is_empty() {
                bail!("no fuzz cell matches the requested class and operation");
            }
            for (class, o) in cells {
                let r = fuzz_upper_bounds(class, o, *trials, *max_n, cli.seed)?;
                out.check(&r);
            }
        }
        Command::Tables {
            max_n,
            max_m,
            max_trials,
        } => {
            if *max_n > 8 || *max_m > 8 {
                bail!("--max-n and --max-m are limited to 8");
            }
            let budget = SearchBudget {
                seed: cli.seed,
                max_trials: *max_trials,
            };
            let report = reproduce_tables(*max_n, *max_m, &budget);
            let table = report.to_table();
            out.text.push_str(table.split_once('\n').map_or("", |(_, rest)| rest));
            for e in &report.entries {
                out.record(e);
            }
            let counts: serde_json::Map<String, serde_json::Value> = [
                Verdict::TightMet,
                Verdict::WithinBound,
                Verdict::MismatchVsPaper,
                Verdict::Skipped,
                Verdict::Violation,
            ]
            .into_iter()
            .map(|v| (v.name().to_string(), json!(report.count(v))))
            .collect();
            out.pass = report.pass();
            out.record(json!({ "label": "tables", "pass": out.pass, "counts": counts }));
        }
    }
    Ok(out)
}

fn apply(op: OpName, operands: &[Dfa]) -> Result<Dfa> {
    let binary = |bop: Option<BoolOp>| -> Result<Dfa> {
        let [k, l] = operands else {
            bail!("this operation takes two inputs");
        };
        Ok(match bop {
            Some(b) => minimize(&boolean_combine(k, l, b)?),
            None => concatenate(k, l)?,
        })
    };
    let unary = || -> Result<&Dfa> {
        match operands {
            [l] => Ok(l),
            _ => Err(anyhow!("this operation takes one input")),
        }
    };
    match op {
        OpName::Union => binary(Some(BoolOp::Union)),
        OpName::Inter => binary(Some(BoolOp::Inter)),
        OpName::Diff => binary(Some(BoolOp::Diff)),
        OpName::Xor => binary(Some(BoolOp::Xor)),
        OpName::Concat => binary(None),
        OpName::Star => Ok(star(unary()?)),
        OpName::Reverse => Ok(minimize(&determinize(&reverse(unary()?)))),
        OpName::Complement => Ok(minimize(&complement(unary()?))),
    }
}

fn quote(arg: &str) -> String {
    let plain = !arg.is_empty()
        && arg
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "-_=./:,".contains(c));
    if plain {
        arg.to_string()
    } else {
        format!("'{}'", arg.replace('\'', r"'\''"))
    }
}

fn render(cli: &Cli, args: &[String], report: &Report) -> String {
    match cli.format {
        Format::Text => {
            let invocation: Vec<String> = args.iter().map(|a| quote(a)).collect();
            let mut s = format!(
                "# quotient {VERSION} seed {}: {}\n",
                cli.seed,
                invocation.join(" ")
            );
            s.push_str(&report.text);
            s
        }
        Format::Structured => {
            let header = json!({
                "tool": "quotient",
                "version": VERSION,
                "seed": cli.seed,
                "command": args,
            });
            let mut s = header.to_string();
            s.push('\n');
            for r in &report.records {
                let _ = writeln!(s, "{r}");
            }
            s
        }
    }
}

/// Runs one invocation, writing to standard output or `--output`, and
/// returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let shown: Vec<String> = std::iter::once("quotient".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect();
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            eprintln!("\n{SYNOPSIS}");
            return 2;
        }
    };
    let text = render(&cli, &shown, &report);
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write `{}`: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if report.pass {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..8"), Ok(2..=8));
        assert_eq!(parse_range("2..=8"), Ok(2..=8));
        assert_eq!(parse_range("5"), Ok(5..=5));
        assert!(parse_range("8..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn alphabets() {
        assert_eq!(parse_alphabet("ab").unwrap().len(), 2);
        assert_eq!(parse_alphabet("a1,a2,b").unwrap().names()[0], "a1");
        let sigma = shared_alphabet(&["a*".into(), "b".into()], None).unwrap();
        assert_eq!(sigma.to_string(), "a b");
    }

    #[test]
    fn kappa_of_expression() {
        let d = load_one("a(a|b)^2(a|b)*", None).unwrap();
        assert_eq!(kappa(&d), 5);
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("kappa"), "kappa");
        assert_eq!(quote("a(a|b)*"), "'a(a|b)*'");
    }
}
