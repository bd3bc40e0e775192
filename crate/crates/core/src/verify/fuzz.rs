//! Randomized checks of upper bounds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Symbol};
use crate::automata::{
    boolean_combine, concatenate, determinize, kappa, minimize, reverse, star, BoolOp, Dfa,
    QuotientFeatures,
};
use crate::ideals::{closure, min_generator, IdealType};

use super::{
    bound_value, BoundParams, BoundTag, CheckResult, Counterexample, Entry, Prop2, Verdict,
    VerifyError,
};

pub const DEFAULT_TRIALS: usize = 1_000;

const ATTEMPTS: usize = 400;
const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzOp {
    /// Closures of arbitrary languages.
    Closure,
    /// Closure of the minimal generator of a random ideal.
    GeneratorClosure,
    /// Minimal generator of a random ideal.
    Generator,
    Boolean,
    Product,
    /// Product of an arbitrary language with a left ideal.
    LeftProduct,
    Star,
    Reversal,
    /// `L_v ⊆ L_uv` for left ideals.
    Remark1,
    /// Quotient-structure bounds for boolean operations and reversal.
    Prop2,
}

impl FuzzOp {
    pub const ALL: [FuzzOp; 10] = [
        FuzzOp::Closure,
        FuzzOp::GeneratorClosure,
        FuzzOp::Generator,
        FuzzOp::Boolean,
        FuzzOp::Product,
        FuzzOp::LeftProduct,
        FuzzOp::Star,
        FuzzOp::Reversal,
        FuzzOp::Remark1,
        FuzzOp::Prop2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuzzOp::Closure => "closure",
            FuzzOp::GeneratorClosure => "generator-closure",
            FuzzOp::Generator => "generator",
            FuzzOp::Boolean => "boolean",
            FuzzOp::Product => "product",
            FuzzOp::LeftProduct => "left-product",
            FuzzOp::Star => "star",
            FuzzOp::Reversal => "reversal",
            FuzzOp::Remark1 => "remark1",
            FuzzOp::Prop2 => "prop2",
        }
    }

    /// Whether the operation is checked on the class (`None` = all regular
    /// languages).
    pub fn applies(self, ideal: Option<IdealType>) -> bool {
        match self {
            FuzzOp::Closure | FuzzOp::LeftProduct => ideal.is_none(),
            FuzzOp::Remark1 => ideal == Some(IdealType::Left),
            FuzzOp::Prop2 => true,
            _ => ideal.is_some(),
        }
    }

    /// Every applicable (class, operation) pair.
    pub fn cells() -> Vec<(Option<IdealType>, FuzzOp)> {
        let classes = std::iter::once(None).chain(IdealType::ALL.map(Some));
        classes
            .flat_map(|c| FuzzOp::ALL.into_iter().map(move |op| (c, op)))
            .filter(|&(c, op)| op.applies(c))
            .collect()
    }
}

impl fmt::Display for FuzzOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FuzzOp {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        FuzzOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown fuzz operation `{s}`"))
    }
}

/// A random DFA with uniform transitions in which each state is final with
/// probability ½, with at least one final state.
pub fn random_dfa(rng: &mut impl Rng, sigma: &Alphabet, states: usize) -> Dfa {
    let states = states.max(1);
    let delta = (0..states * sigma.len())
        .map(|_| rng.gen_range(0..states))
        .collect();
    let mut finals: Vec<bool> = (0..states).map(|_| rng.gen_bool(0.5)).collect();
    if !finals.iter().any(|&f| f) {
        finals[rng.gen_range(0..states)] = true;
    }
    Dfa::new(sigma.clone(), delta, 0, finals).expect("valid table")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomIdeal {
    pub dfa: Dfa,
    pub kappa: usize,
    pub attempts: usize,
}

/// A random ideal of the class (or a random non-empty regular language for
/// `None`) whose complexity is `n` if found within `max_attempts`, otherwise
/// the closest one seen. Deterministic per seed.
pub fn random_ideal(
    ideal: Option<IdealType>,
    n: usize,
    sigma: &Alphabet,
    seed: u64,
    max_attempts: usize,
) -> RandomIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n.max(1);
    let (lo, hi) = match ideal {
        None => (n, n + 1),
        Some(IdealType::Right) => (n, 2 * n + 1),
        Some(_) => (1, n + 1),
    };
    let mut best: Option<RandomIdeal> = None;
    for attempt in 1..=max_attempts.max(1) {
        let states = rng.gen_range(lo..=hi);
        let d = random_dfa(&mut rng, sigma, states);
        let candidate = match ideal {
            Some(t) => match closure(&d, t) {
                Ok(c) => c,
                Err(_) => continue,
            },
            None if d.is_empty_language() => continue,
            None => minimize(&d),
        };
        let kappa = candidate.state_count();
        let closer = best
            .as_ref()
            .is_none_or(|b| kappa.abs_diff(n) < b.kappa.abs_diff(n));
        if closer {
            best = Some(RandomIdeal {
                dfa: candidate,
                kappa,
                attempts: attempt,
            });
        }
        if kappa == n {
            break;
        }
    }
    best.unwrap_or_else(|| {
        let dfa = match ideal {
            Some(_) => Dfa::universal(sigma.clone(), true),
            None => Dfa::epsilon(sigma.clone()),
        };
        RandomIdeal {
            kappa: dfa.state_count(),
            dfa,
            attempts: max_attempts,
        }
    })
}

fn letters(k: usize) -> Alphabet {
    let names: String = ('a'..='z').take(k.clamp(1, 26)).collect();
    Alphabet::letters(&names).expect("alphabet")
}

struct Tally {
    cells: BTreeMap<(BoundTag, BoundParams), (u64, u64, u64)>,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn record(&mut self, tag: BoundTag, params: BoundParams, computed: u64, seed: u64, operands: &[&Dfa]) {
        let Ok(predicted) = bound_value(tag, params) else {
            return;
        };
        let slot = self.cells.entry((tag, params)).or_insert((predicted, 0, seed));
        if computed > slot.1 || slot.1 == 0 {
            slot.1 = slot.1.max(computed);
            slot.2 = seed;
        }
        if computed > predicted && self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                tag: tag.name(),
                params,
                seed,
                detail: format!("computed {computed} exceeds bound {predicted}"),
                dfa: operands
                    .iter()
                    .map(|d| d.to_text())
                    .collect::<Vec<_>>()
                    .join("\n"),
            });
        }
    }
}

/// Draws random ideals of the class, applies the operation and checks each
/// applicable bound at the achieved complexities. One entry per bound and
/// parameter point holds the largest value observed.
pub fn fuzz_upper_bounds(
    ideal: Option<IdealType>,
    op: FuzzOp,
    trials: usize,
    max_n: usize,
    seed: u64,
) -> Result<CheckResult, VerifyError> {
    if !op.applies(ideal) {
        let class = ideal.map_or("regular".to_string(), |t| t.to_string());
        return Err(VerifyError::Unsupported(format!(
            "operation {op} is not checked on {class} languages"
        )));
    }
    let mut tally = Tally {
        cells: BTreeMap::new(),
        counterexamples: Vec::new(),
    };
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let max_n = max_n.max(2);
    for _ in 0..trials.max(1) {
        let s: u64 = master.gen();
        trial(ideal, op, max_n, s, &mut tally);
    }
    let entries: Vec<Entry> = tally
        .cells
        .iter()
        .map(|(&(tag, params), &(predicted, computed, seed))| Entry {
            tag: tag.name(),
            params,
            predicted,
            computed: Some(computed),
            verdict: Verdict::judge(predicted, computed),
            seed: Some(seed),
            cell: None,
            reference: None,
            note: String::new(),
        })
        .collect();
    let pass = entries.iter().all(|e| e.verdict != Verdict::Violation);
    let class = ideal.map_or("regular".to_string(), |t| t.to_string());
    Ok(CheckResult {
        label: format!("fuzz {class} {op}"),
        pass,
        entries,
        counterexamples: tally.counterexamples,
    })
}

fn trial(ideal: Option<IdealType>, op: FuzzOp, max_n: usize, s: u64, tally: &mut Tally) {
    use IdealType::*;
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let draw = |t: Option<IdealType>, n: usize, sigma: &Alphabet, salt: u64| {
        random_ideal(t, n, sigma, s.wrapping_add(salt.wrapping_mul(0x9E37_79B9_7F4A_7C15)), ATTEMPTS).dfa
    };
    let ab = letters(2);
    match op {
        FuzzOp::Closure => {
            let sigma = letters(rng.gen_range(2..=3));
            let l = draw(None, rng.gen_range(1..=max_n), &sigma, 1);
            let n = l.state_count();
            let p = BoundParams::n(n);
            let c = |t| kappa(&closure(&l, t).expect("non-empty")) as u64;
            tally.record(BoundTag::T1, p, c(Right), s, &[&l]);
            let left = c(Left);
            tally.record(BoundTag::T2, p, left, s, &[&l]);
            if sigma.len() == 2 {
                let q0 = l.initial();
                let (qa, qb) = (l.next(q0, Symbol(0)), l.next(q0, Symbol(1)));
                if qa != qb && qa != q0 && qb != q0 {
                    tally.record(BoundTag::T3, p, left, s, &[&l]);
                }
                if qa == qb && qa != q0 {
                    tally.record(BoundTag::T4, p, left, s, &[&l]);
                }
            }
            if !l.is_final(l.initial()) {
                tally.record(BoundTag::T5, p, c(TwoSided), s, &[&l]);
            }
            tally.record(BoundTag::T6, p, c(AllSided), s, &[&l]);
        }
        FuzzOp::GeneratorClosure | FuzzOp::Generator => {
            let t = ideal.expect("class");
            let l = draw(ideal, rng.gen_range(1..=max_n), &ab, 1);
            let g = min_generator(&l, t).expect("ideal").generator;
            if op == FuzzOp::Generator {
                let tag = match t {
                    Right => BoundTag::T11,
                    Left => BoundTag::T12,
                    _ => BoundTag::T13,
                };
                tally.record(tag, BoundParams::n(l.state_count()), kappa(&g) as u64, s, &[&l]);
            } else {
                let tag = match t {
                    Right => BoundTag::T7,
                    Left => BoundTag::T8,
                    TwoSided => BoundTag::T9,
                    AllSided => BoundTag::T10,
                };
                let computed = kappa(&closure(&g, t).expect("non-empty")) as u64;
                tally.record(tag, BoundParams::n(kappa(&g)), computed, s, &[&g]);
            }
        }
        FuzzOp::Boolean => {
            let t = ideal.expect("class");
            let k = draw(ideal, rng.gen_range(2..=max_n), &ab, 1);
            let l = draw(ideal, rng.gen_range(2..=max_n), &ab, 2);
            if k.is_final(k.initial()) || l.is_final(l.initial()) {
                return;
            }
            let p = BoundParams::mn(k.state_count(), l.state_count());
            for op in BoolOp::ALL {
                let computed = kappa(&boolean_combine(&k, &l, op).expect("same alphabet")) as u64;
                let tag = if t == Left {
                    BoundTag::T14Left(op)
                } else {
                    BoundTag::T14(op)
                };
                tally.record(tag, p, computed, s, &[&k, &l]);
            }
        }
        FuzzOp::Product => {
            let t = ideal.expect("class");
            let k = draw(ideal, rng.gen_range(1..=max_n), &ab, 1);
            let l = draw(ideal, rng.gen_range(1..=max_n), &ab, 2);
            let computed = kappa(&concatenate(&k, &l).expect("same alphabet")) as u64;
            let tag = if t == Right {
                BoundTag::T15Right
            } else {
                BoundTag::T15Other
            };
            let p = BoundParams::mn(k.state_count(), l.state_count());
            tally.record(tag, p, computed, s, &[&k, &l]);
        }
        FuzzOp::LeftProduct => {
            let k = draw(None, rng.gen_range(1..=max_n), &ab, 1);
            let nn = draw(Some(Left), rng.gen_range(1..=max_n), &ab, 2);
            let computed = kappa(&concatenate(&k, &nn).expect("same alphabet")) as u64;
            let p = BoundParams::mn(k.state_count(), nn.state_count());
            tally.record(BoundTag::L1, p, computed, s, &[&k, &nn]);
        }
        FuzzOp::Star => {
            let l = draw(ideal, rng.gen_range(2..=max_n), &ab, 1);
            if l.is_final(l.initial()) {
                return;
            }
            let computed = kappa(&star(&l)) as u64;
            tally.record(BoundTag::T16, BoundParams::n(l.state_count()), computed, s, &[&l]);
        }
        FuzzOp::Reversal => {
            let t = ideal.expect("class");
            let n = rng.gen_range(1..=max_n);
            let sigma = match t {
                Right | Left => ab,
                TwoSided => letters(3),
                AllSided => letters((2 * n).saturating_sub(4).max(2)),
            };
            let l = draw(ideal, n, &sigma, 1);
            let computed = minimize(&determinize(&reverse(&l))).state_count() as u64;
            let tag = match t {
                Right => BoundTag::T17,
                Left => BoundTag::T18,
                TwoSided => BoundTag::T19,
                AllSided => BoundTag::T20,
            };
            tally.record(tag, BoundParams::n(l.state_count()), computed, s, &[&l]);
        }
        FuzzOp::Remark1 => {
            let l = draw(ideal, rng.gen_range(1..=max_n), &ab, 1);
            let failures = remark1_failures(&l) as u64;
            tally.record(BoundTag::Remark1, BoundParams::n(l.state_count()), failures, s, &[&l]);
        }
        FuzzOp::Prop2 => {
            let k = draw(ideal, rng.gen_range(2..=max_n), &ab, 1);
            let l = draw(ideal, rng.gen_range(2..=max_n), &ab, 2);
            prop2(&k, &l, s, tally);
        }
    }
}

/// Number of pairs `(v, u)` with `L_v ⊄ L_uv`, found by exploring pairs
/// of states `(δ(q0, v), δ(p, v))` for every reachable `p`.
fn remark1_failures(d: &Dfa) -> usize {
    let n = d.state_count();
    let incl = d.inclusion_relation();
    let mut seen = vec![false; n * n];
    let mut queue: Vec<(usize, usize)> = d
        .reachable()
        .into_iter()
        .map(|p| (d.initial(), p))
        .collect();
    for &(x, y) in &queue {
        seen[x * n + y] = true;
    }
    let mut failures = 0;
    while let Some((x, y)) = queue.pop() {
        if !incl[x * n + y] {
            failures += 1;
        }
        for a in d.alphabet().symbols() {
            let next = (d.next(x, a), d.next(y, a));
            if !seen[next.0 * n + next.1] {
                seen[next.0 * n + next.1] = true;
                queue.push(next);
            }
        }
    }
    failures
}

fn prop2(k: &Dfa, l: &Dfa, s: u64, tally: &mut Tally) {
    let (fk, fl) = (QuotientFeatures::of(k), QuotientFeatures::of(l));
    let p = BoundParams {
        m: Some(k.state_count()),
        n: l.state_count(),
        k: Some(k.final_count()),
        l: Some(l.final_count()),
    };
    let both = |f: fn(&QuotientFeatures) -> bool| f(&fk) && f(&fl);
    for clause in Prop2::ALL {
        let Some(op) = clause.op() else { continue };
        let holds = match clause {
            Prop2::EpsilonUnion | Prop2::EpsilonInter | Prop2::EpsilonDiff | Prop2::EpsilonXor => {
                both(|f| f.epsilon)
            }
            Prop2::PlusInter | Prop2::PlusUnion | Prop2::PlusDiff | Prop2::PlusXor => {
                both(|f| f.sigma_plus)
            }
            Prop2::EmptyInter | Prop2::EmptyDiff => both(|f| f.empty),
            _ => both(|f| f.sigma_star),
        };
        if holds {
            let computed = kappa(&boolean_combine(k, l, op).expect("same alphabet")) as u64;
            tally.record(BoundTag::Prop2(clause), p, computed, s, &[k, l]);
        }
    }
    for d in [k, l] {
        let f = QuotientFeatures::of(d);
        let computed = minimize(&determinize(&reverse(d))).state_count() as u64;
        let p = BoundParams::n(d.state_count());
        let clauses = [
            (Prop2::ReverseEpsilon, f.epsilon),
            (Prop2::ReversePlus, f.sigma_plus),
            (Prop2::ReverseEmpty, f.empty),
            (Prop2::ReverseStar, f.sigma_star),
            (Prop2::ReverseEmptyStar, f.empty && f.sigma_star),
            (Prop2::ReverseEmptyPlus, f.empty && f.sigma_plus),
        ];
        for (clause, holds) in clauses {
            if holds {
                tally.record(BoundTag::Prop2(clause), p, computed, s, &[d]);
            }
        }
    }
}
