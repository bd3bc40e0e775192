//! Closed-form complexity bounds.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::automata::BoolOp;

/// Parameters a bound may read: operand complexities `m`, `n` and the
/// accepting-quotient counts `k`, `l` of the two operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
}

impl BoundParams {
    pub fn n(n: usize) -> Self {
        BoundParams {
            n,
            ..Default::default()
        }
    }

    pub fn mn(m: usize, n: usize) -> Self {
        BoundParams {
            m: Some(m),
            n,
            ..Default::default()
        }
    }
}

impl fmt::Display for BoundParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(m) = self.m {
            write!(f, "m={m} ")?;
        }
        write!(f, "n={}", self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        Ok(())
    }
}

/// Hypotheses on the quotients of the operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prop2 {
    EpsilonUnion,
    EpsilonInter,
    EpsilonDiff,
    EpsilonXor,
    PlusInter,
    PlusUnion,
    PlusDiff,
    PlusXor,
    EmptyInter,
    EmptyDiff,
    StarUnion,
    StarDiff,
    ReverseEpsilon,
    ReversePlus,
    ReverseEmpty,
    ReverseStar,
    ReverseEmptyStar,
    ReverseEmptyPlus,
}

impl Prop2 {
    pub const ALL: [Prop2; 18] = [
        Prop2::EpsilonUnion,
        Prop2::EpsilonInter,
        Prop2::EpsilonDiff,
        Prop2::EpsilonXor,
        Prop2::PlusInter,
        Prop2::PlusUnion,
        Prop2::PlusDiff,
        Prop2::PlusXor,
        Prop2::EmptyInter,
        Prop2::EmptyDiff,
        Prop2::StarUnion,
        Prop2::StarDiff,
        Prop2::ReverseEpsilon,
        Prop2::ReversePlus,
        Prop2::ReverseEmpty,
        Prop2::ReverseStar,
        Prop2::ReverseEmptyStar,
        Prop2::ReverseEmptyPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Prop2::EpsilonUnion => "eps-union",
            Prop2::EpsilonInter => "eps-inter",
            Prop2::EpsilonDiff => "eps-diff",
            Prop2::EpsilonXor => "eps-xor",
            Prop2::PlusInter => "plus-inter",
            Prop2::PlusUnion => "plus-union",
            Prop2::PlusDiff => "plus-diff",
            Prop2::PlusXor => "plus-xor",
            Prop2::EmptyInter => "empty-inter",
            Prop2::EmptyDiff => "empty-diff",
            Prop2::StarUnion => "star-union",
            Prop2::StarDiff => "star-diff",
            Prop2::ReverseEpsilon => "eps-reversal",
            Prop2::ReversePlus => "plus-reversal",
            Prop2::ReverseEmpty => "empty-reversal",
            Prop2::ReverseStar => "star-reversal",
            Prop2::ReverseEmptyStar => "empty-star-reversal",
            Prop2::ReverseEmptyPlus => "empty-plus-reversal",
        }
    }

    /// The boolean operation a clause constrains, or `None` for reversal.
    pub fn op(self) -> Option<BoolOp> {
        use Prop2::*;
        match self {
            EpsilonUnion | PlusUnion | StarUnion => Some(BoolOp::Union),
            EpsilonInter | PlusInter | EmptyInter => Some(BoolOp::Inter),
            EpsilonDiff | PlusDiff | EmptyDiff | StarDiff => Some(BoolOp::Diff),
            EpsilonXor | PlusXor => Some(BoolOp::Xor),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundTag {
    UnaryGenerator,
    UnaryIdeal,
    UnaryBool(BoolOp),
    UnaryProduct,
    UnaryStar,
    UnaryReversal,
    /// Table entries for unary ideals that are stated as plain bounds.
    TableUnaryDiff,
    TableUnaryXor,
    TableUnaryStar,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14(BoolOp),
    T14Left(BoolOp),
    T15Right,
    T15Other,
    L1,
    T16,
    T17,
    T18,
    T19,
    T20,
    Prop2(Prop2),
    /// Number of failed inclusions `L_v ⊆ L_uv` in a left ideal.
    Remark1,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{tag} is not defined at {params}")]
pub struct OutOfDomain {
    pub tag: BoundTag,
    pub params: BoundParams,
}

impl BoundTag {
    pub fn name(self) -> String {
        match self {
            BoundTag::UnaryGenerator => "P3-gen".into(),
            BoundTag::UnaryIdeal => "P3-ideal".into(),
            BoundTag::UnaryBool(op) => format!("P3-{}", op.name()),
            BoundTag::UnaryProduct => "P3-product".into(),
            BoundTag::UnaryStar => "P3-star".into(),
            BoundTag::UnaryReversal => "P3-reversal".into(),
            BoundTag::TableUnaryDiff => "table-unary-diff".into(),
            BoundTag::TableUnaryXor => "table-unary-xor".into(),
            BoundTag::TableUnaryStar => "table-unary-star".into(),
            BoundTag::T11 => "T11-gen".into(),
            BoundTag::T12 => "T12-gen".into(),
            BoundTag::T13 => "T13-gen".into(),
            BoundTag::T14(op) => format!("T14-{}", op.name()),
            BoundTag::T14Left(op) => format!("T14-left-{}", op.name()),
            BoundTag::T15Right => "T15-right".into(),
            BoundTag::T15Other => "T15-other".into(),
            BoundTag::Prop2(c) => format!("P2-{}", c.name()),
            other => format!("{other:?}"),
        }
    }

    /// Minimum `n` (and `m`) over which the formula is stated.
    pub fn min_params(self) -> (usize, usize) {
        use BoundTag::*;
        match self {
            T3 | T7 | T9 | T12 => (3, 1),
            T10 => (4, 1),
            T4 | T5 | T6 | T8 | T18 | T19 | T20 | T15Right | UnaryIdeal | TableUnaryStar => (2, 1),
            T14(_) | T14Left(_) => (2, 2),
            Prop2(c) => match c {
                self::Prop2::ReverseEmptyPlus => (3, 2),
                _ => (2, 2),
            },
            _ => (1, 1),
        }
    }

    pub fn uses_m(self) -> bool {
        use BoundTag::*;
        matches!(
            self,
            UnaryBool(_) | UnaryProduct | TableUnaryDiff | TableUnaryXor | T14(_) | T14Left(_) | T15Right | T15Other | L1
        ) || matches!(self, Prop2(c) if c.op().is_some())
    }
}

impl fmt::Display for BoundTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for BoundTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

fn pow2(e: i64) -> i64 {
    1 << e
}

/// The closed-form value of a bound.
pub fn bound_value(tag: BoundTag, p: BoundParams) -> Result<u64, OutOfDomain> {
    let out = || OutOfDomain { tag, params: p };
    let (min_n, min_m) = tag.min_params();
    if p.n < min_n || p.n > 40 {
        return Err(out());
    }
    let n = p.n as i64;
    let m = if tag.uses_m() {
        let m = p.m.ok_or_else(out)?;
        if m < min_m || m > 40 {
            return Err(out());
        }
        m as i64
    } else {
        0
    };
    let k = || p.k.map(|k| k as i64).ok_or_else(out);
    let l = || p.l.map(|l| l as i64).ok_or_else(out);
    use BoundTag as B;
    use Prop2 as C;
    let value: i64 = match tag {
        B::UnaryGenerator | B::T11 | B::T13 | B::T16 => n + 1,
        B::UnaryIdeal => n - 1,
        B::UnaryBool(BoolOp::Union) => m.min(n),
        B::UnaryBool(BoolOp::Inter) | B::TableUnaryXor => m.max(n),
        B::UnaryBool(BoolOp::Diff) => {
            if m < n {
                n
            } else {
                1
            }
        }
        B::UnaryBool(BoolOp::Xor) => {
            if m != n {
                m.max(n)
            } else {
                1
            }
        }
        B::UnaryProduct | B::T15Other | B::L1 => m + n - 1,
        B::UnaryStar => {
            if n <= 2 {
                1
            } else {
                n
            }
        }
        B::UnaryReversal | B::TableUnaryDiff | B::T1 | B::T7 => n,
        B::TableUnaryStar => n - 1,
        B::T2 | B::T17 => pow2(n - 1),
        B::T3 => pow2(n - 1) - pow2(n - 3) + 1,
        B::T4 | B::T5 | B::T6 | B::T19 | B::T20 => pow2(n - 2) + 1,
        B::T8 => pow2(n - 2),
        B::T9 | B::T10 => pow2(n - 3) + 1,
        B::T12 => n * (n - 1) / 2 + 2,
        B::T14(BoolOp::Union) => m * n - (m + n - 2),
        B::T14(BoolOp::Diff) => m * n - (m - 1),
        B::T14(_) | B::T14Left(_) => m * n,
        B::T15Right => m + pow2(n - 2),
        B::T18 => pow2(n - 1) + 1,
        B::Remark1 => return Ok(0),
        B::Prop2(c) => match c {
            C::EpsilonUnion | C::EpsilonXor | C::PlusInter | C::PlusXor => m * n - 2,
            C::EpsilonInter | C::PlusUnion => m * n - (2 * m + 2 * n - 6),
            C::EpsilonDiff => m * n - (m + 2 * n - k()? - 3),
            C::PlusDiff => m * n - (2 * m + l()? - 3),
            C::EmptyInter | C::StarUnion => m * n - (m + n - 2),
            C::EmptyDiff => m * n - n + 1,
            C::StarDiff => m * n - m + 1,
            C::ReverseEpsilon | C::ReversePlus => pow2(n - 2) + 1,
            C::ReverseEmpty | C::ReverseStar => pow2(n - 1),
            C::ReverseEmptyStar => pow2(n - 2),
            C::ReverseEmptyPlus => pow2(n - 3) + 1,
        },
    };
    if value < 1 {
        return Err(out());
    }
    Ok(value as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(bound_value(BoundTag::T14(BoolOp::Union), BoundParams::mn(3, 4)), Ok(7));
        assert_eq!(bound_value(BoundTag::T15Right, BoundParams::mn(4, 5)), Ok(12));
        assert_eq!(bound_value(BoundTag::T12, BoundParams::n(5)), Ok(12));
        assert_eq!(bound_value(BoundTag::T3, BoundParams::n(5)), Ok(13));
        let row: Vec<u64> = BoolOp::ALL
            .iter()
            .map(|&op| bound_value(BoundTag::T14(op), BoundParams::mn(4, 4)).unwrap())
            .collect();
        assert_eq!(row, [10, 16, 13, 16]);
    }

    #[test]
    fn domain_is_enforced() {
        assert!(bound_value(BoundTag::T10, BoundParams::n(3)).is_err());
        assert!(bound_value(BoundTag::T14(BoolOp::Inter), BoundParams::n(3)).is_err());
        assert!(bound_value(BoundTag::Prop2(Prop2::PlusDiff), BoundParams::mn(3, 3)).is_err());
        assert_eq!(
            bound_value(
                BoundTag::Prop2(Prop2::PlusDiff),
                BoundParams {
                    l: Some(1),
                    ..BoundParams::mn(3, 3)
                }
            ),
            Ok(5)
        );
    }

    #[test]
    fn names() {
        assert_eq!(BoundTag::T14(BoolOp::Union).name(), "T14-union");
        assert_eq!(BoundTag::T12.name(), "T12-gen");
        assert_eq!(BoundTag::T2.name(), "T2");
    }
}
