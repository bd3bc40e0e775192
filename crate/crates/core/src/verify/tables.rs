use crate::automata::BoolOp;
use crate::ideals::IdealType;
use crate::witnesses::{Role, SearchBudget, WitnessTag};

use super::{evaluate, BoundReport, BoundTag, Cell, Pipeline, Verdict, VERSION};

fn op_column(op: BoolOp) -> &'static str {
    match op {
        BoolOp::Union => "union",
        BoolOp::Inter => "inter",
        BoolOp::Diff => "diff",
        BoolOp::Xor => "xor",
    }
}

fn boolean_cells() -> Vec<Cell> {
    let mut cells = Vec::new();
    for op in BoolOp::ALL {
        let bound = match op {
            BoolOp::Diff => BoundTag::TableUnaryDiff,
            BoolOp::Xor => BoundTag::TableUnaryXor,
            _ => BoundTag::UnaryBool(op),
        };
        cells.push(
            Cell::new(bound, WitnessTag::P3, Pipeline::Boolean(op))
                .labelled(format!("table1/unary/{}", op_column(op))),
        );
    }
    for op in BoolOp::ALL {
        cells.push(
            Cell::new(BoundTag::T14(op), WitnessTag::T14, Pipeline::Boolean(op))
                .labelled(format!("table1/right,2-sided,all-sided/{}", op_column(op))),
        );
    }
    for op in BoolOp::ALL {
        let family = match op {
            BoolOp::Union | BoolOp::Diff => WitnessTag::T14LeftUnion,
            _ => WitnessTag::T14,
        };
        cells.push(
            Cell::new(BoundTag::T14Left(op), family, Pipeline::Boolean(op))
                .labelled(format!("table1/left/{}", op_column(op))),
        );
    }
    cells
}

fn generation_cells() -> Vec<Cell> {
    use IdealType::*;
    use Pipeline as P;
    use WitnessTag as W;
    let rows: [(&str, [Cell; 6]); 5] = [
        (
            "unary",
            [
                Cell::new(BoundTag::T1, W::P3, P::Closure(Role::L, Right)),
                Cell::new(BoundTag::UnaryIdeal, W::P3, P::UnaryGeneratorClosure),
                Cell::new(BoundTag::T11, W::P3, P::Generator(Role::L, Right)),
                Cell::new(BoundTag::UnaryProduct, W::P3, P::Product(Role::K, Role::L)),
                Cell::new(BoundTag::TableUnaryStar, W::P3, P::Star(Role::L))
                    .against(BoundTag::UnaryStar),
                Cell::new(BoundTag::UnaryReversal, W::P3, P::Reversal(Role::L)),
            ],
        ),
        (
            "right",
            [
                Cell::new(BoundTag::T1, W::T1, P::Closure(Role::K, Right)),
                Cell::new(BoundTag::T7, W::T7, P::Closure(Role::G, Right)),
                Cell::new(BoundTag::T11, W::T11, P::Generator(Role::L, Right)),
                Cell::new(BoundTag::T15Right, W::T15, P::Product(Role::K, Role::L)),
                Cell::new(BoundTag::T16, W::T16, P::Star(Role::L)).searchable(AllSided, |_| 2),
                Cell::new(BoundTag::T17, W::T17, P::Reversal(Role::L)).searchable(Right, |_| 2),
            ],
        ),
        (
            "2-sided",
            [
                Cell::new(BoundTag::T5, W::T5, P::Closure(Role::L, TwoSided)).over(3),
                Cell::new(BoundTag::T9, W::T9, P::Closure(Role::G, TwoSided)),
                Cell::new(BoundTag::T13, W::T13, P::Generator(Role::L, TwoSided)),
                Cell::new(BoundTag::T15Other, W::L1, P::Product(Role::K, Role::N)),
                Cell::new(BoundTag::T16, W::T16, P::Star(Role::L)).searchable(AllSided, |_| 2),
                Cell::new(BoundTag::T19, W::T19, P::Reversal(Role::L)).searchable(TwoSided, |_| 3),
            ],
        ),
        (
            "all-sided",
            [
                Cell::new(BoundTag::T6, W::T6, P::Closure(Role::L, AllSided)),
                Cell::new(BoundTag::T10, W::T10, P::Closure(Role::G, AllSided)),
                Cell::new(BoundTag::T13, W::T13, P::Generator(Role::L, AllSided)),
                Cell::new(BoundTag::T15Other, W::L1, P::Product(Role::K, Role::N)),
                Cell::new(BoundTag::T16, W::T16, P::Star(Role::L)).searchable(AllSided, |_| 2),
                Cell::new(BoundTag::T20, W::T20, P::Reversal(Role::L))
                    .searchable(AllSided, |n| (2 * n).saturating_sub(4).max(1)),
            ],
        ),
        (
            "left",
            [
                Cell::new(BoundTag::T2, W::T2, P::Closure(Role::L, Left)),
                Cell::new(BoundTag::T8, W::T8, P::Closure(Role::G, Left)),
                Cell::new(BoundTag::T12, W::T12, P::Generator(Role::L, Left)),
                Cell::new(BoundTag::T15Other, W::L1, P::Product(Role::K, Role::N)),
                Cell::new(BoundTag::T16, W::T16, P::Star(Role::LeftL)).searchable(Left, |_| 2),
                Cell::new(BoundTag::T18, W::T18, P::Reversal(Role::L)).searchable(Left, |_| 3),
            ],
        ),
    ];
    let columns = ["f(L)", "f(G)", "k(G)", "KL", "K*", "K^R"];
    rows.into_iter()
        .flat_map(|(row, cells)| {
            cells
                .into_iter()
                .zip(columns)
                .map(move |(c, col)| c.labelled(format!("table2/{row}/{col}")))
        })
        .collect()
}

/// Every cell of both summary tables at every parameter point with
/// `n ≤ max_n` and `m ≤ max_m` inside the cell's domain, in table order.
pub fn reproduce_tables(max_n: usize, max_m: usize, budget: &SearchBudget) -> BoundReport {
    let mut entries = Vec::new();
    for cell in boolean_cells().into_iter().chain(generation_cells()) {
        let (min_n, min_m) = cell.bound.min_params();
        let info = cell.family.info();
        let min_n = min_n.max(info.min_n);
        let ms: Vec<Option<usize>> = if cell.bound.uses_m() {
            let min_m = min_m.max(info.min_m.unwrap_or(1));
            (min_m..=max_m).map(Some).collect()
        } else {
            vec![None]
        };
        for &m in &ms {
            for n in min_n..=max_n {
                let entry = match evaluate(&cell, m, n, budget) {
                    Ok(e) => e,
                    Err(e) => unevaluated(&cell, m, n, e.to_string()),
                };
                entries.push(entry);
            }
        }
    }
    BoundReport {
        version: VERSION.to_string(),
        seed: budget.seed,
        entries,
    }
}

fn unevaluated(cell: &Cell, m: Option<usize>, n: usize, note: String) -> super::Entry {
    let params = super::BoundParams {
        m: if cell.bound.uses_m() { m } else { None },
        n,
        ..Default::default()
    };
    super::Entry {
        tag: cell.bound.name(),
        params,
        predicted: super::bound_value(cell.bound, params).unwrap_or(0),
        computed: None,
        verdict: Verdict::Skipped,
        seed: None,
        cell: cell.label.clone(),
        reference: None,
        note,
    }
}
