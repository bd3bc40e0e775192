use std::ops::RangeInclusive;

use crate::automata::BoolOp;
use crate::ideals::IdealType;
use crate::witnesses::{Role, SearchBudget, WitnessTag};

use super::{evaluate, BoundTag, Cell, CheckResult, Pipeline, Verdict, VerifyError};

/// The claims a witness family is meant to meet exactly.
pub fn tightness_cells(tag: WitnessTag) -> Vec<Cell> {
    use IdealType::*;
    use Pipeline as P;
    use WitnessTag as W;
    let cell = |bound, pipeline| Cell::new(bound, tag, pipeline);
    match tag {
        W::P3 => {
            let mut cells = vec![
                cell(BoundTag::UnaryGenerator, P::Generator(Role::L, Right)),
                cell(BoundTag::UnaryIdeal, P::UnaryGeneratorClosure),
            ];
            cells.extend(BoolOp::ALL.map(|op| cell(BoundTag::UnaryBool(op), P::Boolean(op))));
            cells.extend([
                cell(BoundTag::UnaryProduct, P::Product(Role::K, Role::L)),
                cell(BoundTag::UnaryStar, P::Star(Role::L)),
                cell(BoundTag::UnaryReversal, P::Reversal(Role::L)),
            ]);
            cells
        }
        W::T1 => vec![cell(BoundTag::T1, P::Closure(Role::K, Right))],
        W::T2 => vec![cell(BoundTag::T2, P::Closure(Role::L, Left))],
        W::T3 => vec![cell(BoundTag::T3, P::Closure(Role::L, Left))],
        W::T4 => vec![cell(BoundTag::T4, P::Closure(Role::L, Left))],
        W::T5 => vec![cell(BoundTag::T5, P::Closure(Role::L, TwoSided)).over(3)],
        W::T6 => vec![cell(BoundTag::T6, P::Closure(Role::L, AllSided))],
        W::T7 => vec![cell(BoundTag::T7, P::Closure(Role::G, Right))],
        W::T8 => vec![cell(BoundTag::T8, P::Closure(Role::G, Left))],
        W::T9 => vec![cell(BoundTag::T9, P::Closure(Role::G, TwoSided))],
        W::T10 => vec![cell(BoundTag::T10, P::Closure(Role::G, AllSided))],
        W::T11 => vec![cell(BoundTag::T11, P::Generator(Role::L, Right))],
        W::T12 => vec![cell(BoundTag::T12, P::Generator(Role::L, Left))],
        W::T13 => vec![
            cell(BoundTag::T13, P::Generator(Role::L, TwoSided)),
            cell(BoundTag::T13, P::Generator(Role::L, AllSided)),
        ],
        W::T14 => {
            let mut cells: Vec<Cell> = BoolOp::ALL
                .map(|op| cell(BoundTag::T14(op), P::Boolean(op)))
                .into();
            cells.extend(
                [BoolOp::Inter, BoolOp::Xor].map(|op| cell(BoundTag::T14Left(op), P::Boolean(op))),
            );
            cells
        }
        W::T14LeftUnion => [BoolOp::Union, BoolOp::Diff]
            .map(|op| cell(BoundTag::T14Left(op), P::Boolean(op)))
            .into(),
        W::T15 => vec![
            cell(BoundTag::T15Right, P::Product(Role::K, Role::L)),
            Cell::new(BoundTag::T15Other, W::L1, P::Product(Role::K, Role::N)),
        ],
        W::L1 => vec![cell(BoundTag::L1, P::Product(Role::K, Role::N))],
        W::T16 => vec![
            cell(BoundTag::T16, P::Star(Role::L)).searchable(AllSided, |_| 2),
            cell(BoundTag::T16, P::Star(Role::LeftL)).searchable(Left, |_| 2),
        ],
        W::T17 => vec![cell(BoundTag::T17, P::Reversal(Role::L)).searchable(Right, |_| 2)],
        W::T18 => vec![cell(BoundTag::T18, P::Reversal(Role::L)).searchable(Left, |_| 3)],
        W::T19 => vec![cell(BoundTag::T19, P::Reversal(Role::L)).searchable(TwoSided, |_| 3)],
        W::T20 => vec![cell(BoundTag::T20, P::Reversal(Role::L))
            .searchable(AllSided, |n| (2 * n).saturating_sub(4).max(1))],
    }
}

/// Evaluates every claim of a family over the parameter ranges; points
/// outside a claim's domain are left out. Passes when every entry is
/// tight-met or skipped for lack of a searched witness.
pub fn check_tightness(
    tag: WitnessTag,
    ns: RangeInclusive<usize>,
    ms: Option<RangeInclusive<usize>>,
    budget: &SearchBudget,
) -> Result<CheckResult, VerifyError> {
    let mut entries = Vec::new();
    for cell in tightness_cells(tag) {
        let (min_n, min_m) = cell.bound.min_params();
        let min_n = min_n.max(cell.family.info().min_n);
        let m_values: Vec<Option<usize>> = if cell.bound.uses_m() {
            let min_m = min_m.max(cell.family.info().min_m.unwrap_or(1));
            ms.clone()
                .unwrap_or(ns.clone())
                .filter(|&m| m >= min_m)
                .map(Some)
                .collect()
        } else {
            vec![None]
        };
        for m in m_values {
            for n in ns.clone().filter(|&n| n >= min_n) {
                entries.push(evaluate(&cell, m, n, budget)?);
            }
        }
    }
    let pass = !entries.is_empty()
        && entries
            .iter()
            .all(|e| matches!(e.verdict, Verdict::TightMet | Verdict::Skipped));
    Ok(CheckResult {
        label: format!("tightness {tag}"),
        pass,
        entries,
        counterexamples: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_closure_family_is_tight() {
        let r = check_tightness(WitnessTag::T2, 2..=8, None, &SearchBudget::default()).unwrap();
        assert!(r.pass, "{}", r.to_text());
        let computed: Vec<u64> = r.entries.iter().filter_map(|e| e.computed).collect();
        assert_eq!(computed, [2, 4, 8, 16, 32, 64, 128]);
    }

    #[test]
    fn two_sided_generator_family_is_tight() {
        let r = check_tightness(WitnessTag::T9, 4..=8, None, &SearchBudget::default()).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.entries.len(), 5);
    }
}
