//! Witness pipelines: build a witness, apply an operation, measure κ.

use crate::alphabet::Alphabet;
use crate::automata::{
    boolean_combine, concatenate, determinize, kappa, minimize, reverse, star, BoolOp, Dfa,
};
use crate::ideals::{closure, min_generator, IdealType};
use crate::regex::Regex;
use crate::witnesses::{
    make_witness, search_witness, Quantity, Role, SearchBudget, SearchConstraint, SearchOutcome,
    Witness, WitnessError, WitnessParams, WitnessTag,
};

use super::{bound_value, BoundParams, BoundTag, Entry, Verdict, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    /// κ of the closure of one operand.
    Closure(Role, IdealType),
    /// κ of the minimal generator of one operand.
    Generator(Role, IdealType),
    /// κ of the ideal generated by the unary generator with κ = n.
    UnaryGeneratorClosure,
    Boolean(BoolOp),
    Product(Role, Role),
    Star(Role),
    Reversal(Role),
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub bound: BoundTag,
    pub family: WitnessTag,
    pub pipeline: Pipeline,
    pub alphabet_size: Option<usize>,
    /// Class and alphabet size (as a function of n) for witness search.
    pub fallback: Option<(IdealType, fn(usize) -> usize)>,
    /// A second closed form to confront the computed value with.
    pub reference: Option<BoundTag>,
    pub label: Option<String>,
}

impl Cell {
    pub fn new(bound: BoundTag, family: WitnessTag, pipeline: Pipeline) -> Self {
        Cell {
            bound,
            family,
            pipeline,
            alphabet_size: None,
            fallback: None,
            reference: None,
            label: None,
        }
    }

    pub fn searchable(mut self, ideal: IdealType, alphabet: fn(usize) -> usize) -> Self {
        self.fallback = Some((ideal, alphabet));
        self
    }

    pub fn over(mut self, alphabet_size: usize) -> Self {
        self.alphabet_size = Some(alphabet_size);
        self
    }

    pub fn against(mut self, reference: BoundTag) -> Self {
        self.reference = Some(reference);
        self
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    fn quantity(&self) -> Option<Quantity> {
        match self.pipeline {
            Pipeline::Reversal(_) => Some(Quantity::Reversal),
            Pipeline::Star(_) => Some(Quantity::Star),
            _ => None,
        }
    }
}

fn unary_generator_closure(n: usize) -> u64 {
    let sigma = Alphabet::letters("a").expect("alphabet");
    let g = Regex::parse(&format!("a^{}", n - 2), &sigma)
        .expect("valid")
        .to_dfa()
        .expect("small");
    kappa(&closure(&g, IdealType::Right).expect("non-empty")) as u64
}

fn measure(p: Pipeline, w: &Witness) -> Result<u64, VerifyError> {
    let same = |r: Result<Dfa, _>| r.expect("witness operands share an alphabet");
    let value = match p {
        Pipeline::Closure(role, t) => kappa(&closure(w.get(role), t).expect("non-empty")),
        Pipeline::Generator(role, t) => {
            let g = min_generator(w.get(role), t).map_err(|e| {
                VerifyError::Unsupported(format!("{} {role}: {e}", w.tag))
            })?;
            kappa(&g.generator)
        }
        Pipeline::UnaryGeneratorClosure => return Ok(unary_generator_closure(w.params.n)),
        Pipeline::Boolean(op) => kappa(&same(boolean_combine(w.get(Role::K), w.get(Role::L), op))),
        Pipeline::Product(x, y) => kappa(&same(concatenate(w.get(x), w.get(y)))),
        Pipeline::Star(role) => kappa(&star(w.get(role))),
        Pipeline::Reversal(role) => minimize(&determinize(&reverse(w.get(role)))).state_count(),
    };
    Ok(value as u64)
}

/// Evaluates one cell at one parameter point.
///
/// A printed witness that falls short of the bound is replaced by a searched
/// one when the cell allows search; the entry is a mismatch only when an
/// exhaustive search also fails. Cells with no printed witness and no
/// searched one are skipped.
pub fn evaluate(
    cell: &Cell,
    m: Option<usize>,
    n: usize,
    budget: &SearchBudget,
) -> Result<Entry, VerifyError> {
    let params = BoundParams {
        m: if cell.bound.uses_m() { m } else { None },
        n,
        ..Default::default()
    };
    let predicted = bound_value(cell.bound, params)?;
    let mut entry = Entry {
        tag: cell.bound.name(),
        params,
        predicted,
        computed: None,
        verdict: Verdict::Skipped,
        seed: None,
        cell: cell.label.clone(),
        reference: None,
        note: String::new(),
    };
    let wp = WitnessParams {
        n,
        m: m.or(cell.family.info().min_m),
        alphabet_size: cell.alphabet_size,
    };
    let printed = match make_witness(cell.family, wp) {
        Ok(w) => Some(measure(cell.pipeline, &w)?),
        Err(WitnessError::RequiresSearch { .. }) if cell.fallback.is_some() => None,
        Err(source) => {
            return Err(VerifyError::Witness {
                context: format!("{} at {params}", cell.bound),
                source,
            })
        }
    };
    if let Some(value) = printed {
        entry.computed = Some(value);
        entry.verdict = Verdict::judge(predicted, value);
        if entry.verdict != Verdict::WithinBound {
            return Ok(finish(cell, entry));
        }
    }
    let (Some((ideal, alphabet)), Some(quantity)) = (cell.fallback, cell.quantity()) else {
        return Ok(finish(cell, entry));
    };
    let constraint = SearchConstraint {
        ideal,
        n,
        alphabet_size: alphabet(n),
        quantity,
        target: predicted as usize,
    };
    entry.seed = Some(budget.seed);
    match search_witness(&constraint, budget) {
        SearchOutcome::Found { dfa, trials, .. } => {
            let value = quantity.measure(&dfa) as u64;
            entry.note = match printed {
                Some(p) => format!("printed witness gives {p}; searched witness after {trials} trials"),
                None => format!("searched witness after {trials} trials"),
            };
            entry.computed = Some(value);
            entry.verdict = Verdict::judge(predicted, value);
        }
        SearchOutcome::NotFound {
            exhausted: true,
            trials,
            best,
        } => {
            entry.note = format!("exhaustive search over {trials} candidates, best {best:?}");
            entry.verdict = if printed.is_some() {
                Verdict::MismatchVsPaper
            } else {
                Verdict::Skipped
            };
        }
        SearchOutcome::NotFound { trials, best, .. } => {
            entry.note = format!("not found within {trials} trials, best {best:?}");
            if printed.is_none() {
                entry.verdict = Verdict::Skipped;
            }
        }
    }
    Ok(finish(cell, entry))
}

fn finish(cell: &Cell, mut entry: Entry) -> Entry {
    let Some(reference) = cell.reference else {
        return entry;
    };
    let Ok(alternative) = bound_value(reference, entry.params) else {
        return entry;
    };
    entry.reference = Some(alternative);
    if let Some(computed) = entry.computed {
        if entry.verdict != Verdict::TightMet && computed == alternative {
            entry.verdict = Verdict::MismatchVsPaper;
            entry.note = format!(
                "table gives {}, exact value {computed} matches {}",
                entry.predicted,
                reference.name()
            );
        }
    }
    entry
}
