//! Witness search over small DFAs.
//!
//! Candidates for right, two-sided and all-sided ideals have state `n - 1` as
//! their single accepting sink, which every such quotient automaton has.
//! Left-ideal candidates are unrestricted tables. Tiny spaces are enumerated
//! exhaustively; otherwise seeded random restarts climb a score that rewards
//! valid candidates by the measured quantity and penalizes invalid ones by
//! their distance from validity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{determinize, minimize, reverse, star, Dfa, State};
use crate::ideals::{closure, is_ideal_structural, IdealType};

/// Largest candidate space that is enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

const RESTART_STEPS: usize = 4_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// κ of the reversed language.
    Reversal,
    /// κ of the star.
    Star,
    /// κ of the closure of the given type.
    Closure(IdealType),
}

impl Quantity {
    pub fn measure(self, d: &Dfa) -> usize {
        match self {
            Quantity::Reversal => minimize(&determinize(&reverse(d))).state_count(),
            Quantity::Star => star(d).state_count(),
            Quantity::Closure(t) => closure(d, t).map_or(0, |c| c.state_count()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConstraint {
    pub ideal: IdealType,
    pub n: usize,
    pub alphabet_size: usize,
    pub quantity: Quantity,
    pub target: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub seed: u64,
    pub max_trials: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            seed: 1,
            max_trials: 200_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        dfa: Dfa,
        trials: usize,
        exhaustive: bool,
    },
    NotFound {
        /// The whole candidate space was enumerated.
        exhausted: bool,
        trials: usize,
        /// Largest quantity seen on a valid candidate.
        best: Option<usize>,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Dfa> {
        match self {
            SearchOutcome::Found { dfa, .. } => Some(dfa),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// Candidate table: `delta[q * k + a]`, initial state 0.
struct Space {
    sigma: Alphabet,
    n: usize,
    k: usize,
    ideal: IdealType,
}

impl Space {
    fn sink_form(&self) -> bool {
        self.ideal != IdealType::Left
    }

    /// Transition cells that vary.
    fn free_cells(&self) -> usize {
        if self.sink_form() {
            (self.n - 1) * self.k
        } else {
            self.n * self.k
        }
    }

    fn size(&self) -> Option<u64> {
        let mut total: u64 = 1;
        for _ in 0..self.free_cells() {
            total = total.checked_mul(self.n as u64)?;
        }
        if !self.sink_form() {
            total = total.checked_mul((1u64 << self.n) - 1)?;
        }
        Some(total)
    }

    fn build(&self, cells: &[State], finals: &[bool]) -> Dfa {
        let (n, k) = (self.n, self.k);
        let mut delta = cells.to_vec();
        let finals = if self.sink_form() {
            delta.extend(std::iter::repeat_n(n - 1, k));
            (0..n).map(|q| q == n - 1).collect()
        } else {
            finals.to_vec()
        };
        Dfa::new(self.sigma.clone(), delta, 0, finals).expect("valid table")
    }

    /// Distance from validity, or `None` for a valid candidate.
    fn defect(&self, d: &Dfa) -> Option<usize> {
        let kappa = minimize(d).state_count();
        let mut defect = self.n.abs_diff(kappa);
        if !is_ideal_structural(d, self.ideal) {
            defect += 1 + self.violations(d);
        }
        (defect > 0).then_some(defect)
    }

    fn violations(&self, d: &Dfa) -> usize {
        let n = d.state_count();
        let incl = d.inclusion_relation();
        let reachable = d.reachable();
        let left = reachable
            .iter()
            .filter(|&&q| !incl[d.initial() * n + q])
            .count();
        let upward = || {
            reachable
                .iter()
                .flat_map(|&q| d.alphabet().symbols().map(move |a| (q, d.next(q, a))))
                .filter(|&(q, r)| !incl[q * n + r])
                .count()
        };
        match self.ideal {
            IdealType::Right => 0,
            IdealType::Left | IdealType::TwoSided => left,
            IdealType::AllSided => upward(),
        }
    }
}

/// Finds a DFA of the requested ideal class with κ = n whose quantity
/// reaches the target. Deterministic for a given seed.
pub fn search_witness(c: &SearchConstraint, budget: &SearchBudget) -> SearchOutcome {
    let names: String = ('a'..='z').take(c.alphabet_size.clamp(1, 26)).collect();
    let space = Space {
        sigma: Alphabet::letters(&names).expect("alphabet"),
        n: c.n.max(1),
        k: names.len(),
        ideal: c.ideal,
    };
    match space.size() {
        Some(size) if size <= EXHAUSTIVE_LIMIT => exhaustive(&space, c),
        _ => climb(&space, c, budget),
    }
}

fn exhaustive(space: &Space, c: &SearchConstraint) -> SearchOutcome {
    let (n, cells) = (space.n, space.free_cells());
    let mut table = vec![0; cells];
    let final_masks: Vec<u32> = if space.sink_form() {
        vec![0]
    } else {
        (1..1u32 << n).collect()
    };
    let mut trials = 0;
    let mut best = None;
    loop {
        for &mask in &final_masks {
            let finals: Vec<bool> = (0..n).map(|q| mask >> q & 1 == 1).collect();
            let d = space.build(&table, &finals);
            trials += 1;
            if space.defect(&d).is_none() {
                let value = c.quantity.measure(&d);
                best = best.max(Some(value));
                if value >= c.target {
                    return SearchOutcome::Found {
                        dfa: minimize(&d),
                        trials,
                        exhaustive: true,
                    };
                }
            }
        }
        let mut i = 0;
        loop {
            if i == cells {
                return SearchOutcome::NotFound {
                    exhausted: true,
                    trials,
                    best,
                };
            }
            table[i] += 1;
            if table[i] < n {
                break;
            }
            table[i] = 0;
            i += 1;
        }
    }
}

fn climb(space: &Space, c: &SearchConstraint, budget: &SearchBudget) -> SearchOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let n = space.n;
    let cells = space.free_cells();
    let mut trials = 0;
    let mut best = None;
    let score = |d: &Dfa, best: &mut Option<usize>| -> (i64, usize) {
        match space.defect(d) {
            Some(defect) => (-(defect as i64), 0),
            None => {
                let value = c.quantity.measure(d);
                *best = (*best).max(Some(value));
                (value as i64, value)
            }
        }
    };
    while trials < budget.max_trials {
        let mut table: Vec<State> = (0..cells).map(|_| rng.gen_range(0..n)).collect();
        let mut finals: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        if !finals.iter().any(|&f| f) {
            finals[rng.gen_range(0..n)] = true;
        }
        let (mut current, _) = score(&space.build(&table, &finals), &mut best);
        trials += 1;
        for _ in 0..RESTART_STEPS {
            if trials >= budget.max_trials {
                break;
            }
            let flip_final = !space.sink_form() && rng.gen_ratio(1, 8);
            let undo = if flip_final {
                let q = rng.gen_range(0..n);
                finals[q] = !finals[q];
                Err(q)
            } else {
                let cell = rng.gen_range(0..cells);
                let old = table[cell];
                table[cell] = rng.gen_range(0..n);
                Ok((cell, old))
            };
            let d = space.build(&table, &finals);
            trials += 1;
            let valid_finals = finals.iter().any(|&f| f);
            let (s, value) = if valid_finals {
                score(&d, &mut best)
            } else {
                (i64::MIN, 0)
            };
            if s >= 0 && value >= c.target {
                return SearchOutcome::Found {
                    dfa: minimize(&d),
                    trials,
                    exhaustive: false,
                };
            }
            if s >= current {
                current = s;
            } else {
                match undo {
                    Ok((cell, old)) => table[cell] = old,
                    Err(q) => finals[q] = !finals[q],
                }
            }
        }
    }
    SearchOutcome::NotFound {
        exhausted: false,
        trials,
        best,
    }
}
