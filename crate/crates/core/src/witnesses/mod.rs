//! Parametric witness languages for tightness of complexity bounds.
//!
//! Every family is rebuilt as a minimal DFA and re-validated on construction:
//! the complexity of each operand and its ideal class are recomputed, so a
//! mistranscribed family surfaces as an error instead of a wrong answer.

mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{Alphabet, Symbol};
use crate::automata::{concatenate, kappa, minimize, Dfa, State};
use crate::ideals::{check_freeness, is_ideal, IdealType};
use crate::regex::Regex;

pub use search::{search_witness, Quantity, SearchBudget, SearchConstraint, SearchOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessTag {
    P3,
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
    T14,
    T14LeftUnion,
    T15,
    T16,
    T17,
    T18,
    T19,
    T20,
    L1,
}

/// Which operand of a multi-language family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    K,
    L,
    G,
    N,
    /// The left-ideal operand of the star family.
    LeftL,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::K => "K",
            Role::L => "L",
            Role::G => "G",
            Role::N => "N",
            Role::LeftL => "L(left)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct WitnessParams {
    pub n: usize,
    pub m: Option<usize>,
    /// Larger alphabet than the family's smallest one, where supported.
    pub alphabet_size: Option<usize>,
}

impl WitnessParams {
    pub fn n(n: usize) -> Self {
        WitnessParams {
            n,
            ..Default::default()
        }
    }

    pub fn mn(m: usize, n: usize) -> Self {
        WitnessParams {
            n,
            m: Some(m),
            alphabet_size: None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FamilyInfo {
    pub tag: WitnessTag,
    pub roles: &'static [Role],
    pub min_n: usize,
    pub min_m: Option<usize>,
    /// Alphabet size as a function of n, when it grows.
    pub alphabet: &'static str,
    pub summary: &'static str,
}

pub const CATALOG: &[FamilyInfo] = &[
    FamilyInfo { tag: WitnessTag::P3, roles: &[Role::K, Role::L], min_n: 1, min_m: Some(1), alphabet: "1", summary: "K = a^(m-1)a*, L = a^(n-1)a*" },
    FamilyInfo { tag: WitnessTag::T1, roles: &[Role::K], min_n: 1, min_m: None, alphabet: "2 (1 for n<=2)", summary: "K = aΣ^(n-3); a*, aa* for n = 1, 2" },
    FamilyInfo { tag: WitnessTag::T2, roles: &[Role::L], min_n: 1, min_m: None, alphabet: "2 (1 for n<=2)", summary: "L = (b | a(a|b)^(n-1))* a(a|b)^(n-2)" },
    FamilyInfo { tag: WitnessTag::T3, roles: &[Role::L], min_n: 3, min_m: None, alphabet: "2", summary: "L = aL1 | bL(n-1); Li = (a|b)L(i+1); L(n-1) = aL1 | bL | ε" },
    FamilyInfo { tag: WitnessTag::T4, roles: &[Role::L], min_n: 2, min_m: None, alphabet: "2", summary: "L = ΣL' with L' from the T2 family; Σ⁺ for n = 2" },
    FamilyInfo { tag: WitnessTag::T5, roles: &[Role::L], min_n: 2, min_m: None, alphabet: "3 (1 for n<=3)", summary: "right ideal with L(n-2) = (a|b)L | cL(n-1)" },
    FamilyInfo { tag: WitnessTag::T6, roles: &[Role::L], min_n: 2, min_m: None, alphabet: "n-2", summary: "L = Σ*(a1a1 | ... | atat)Σ*, t = n-2" },
    FamilyInfo { tag: WitnessTag::T7, roles: &[Role::G], min_n: 3, min_m: None, alphabet: "2", summary: "G = aΣ^(n-3)" },
    FamilyInfo { tag: WitnessTag::T8, roles: &[Role::G], min_n: 2, min_m: None, alphabet: "2 (1 for n=2)", summary: "G = aΣ^(n-3); ε for n = 2" },
    FamilyInfo { tag: WitnessTag::T9, roles: &[Role::G], min_n: 3, min_m: None, alphabet: "2 (1 for n=3)", summary: "G = aΣ^(n-4)a; a for n = 3" },
    FamilyInfo { tag: WitnessTag::T10, roles: &[Role::G], min_n: 4, min_m: None, alphabet: "n-3", summary: "G = a1a1 | ... | atat, t = n-3" },
    FamilyInfo { tag: WitnessTag::T11, roles: &[Role::L], min_n: 1, min_m: None, alphabet: "1", summary: "L = a^(n-1)a*" },
    FamilyInfo { tag: WitnessTag::T12, roles: &[Role::L], min_n: 3, min_m: None, alphabet: "2", summary: "L = (b|ab)*a(ab*)^(n-3)a(a|b)*" },
    FamilyInfo { tag: WitnessTag::T13, roles: &[Role::L], min_n: 1, min_m: None, alphabet: "1", summary: "L = Σ* ⧢ a^(n-1)" },
    FamilyInfo { tag: WitnessTag::T14, roles: &[Role::K, Role::L], min_n: 1, min_m: Some(1), alphabet: "2", summary: "K = (b*a)^(m-1)Σ*, L = (a*b)^(n-1)Σ*" },
    FamilyInfo { tag: WitnessTag::T14LeftUnion, roles: &[Role::K, Role::L], min_n: 2, min_m: Some(2), alphabet: "4", summary: "left ideals over {a,b,c,d} counting a (resp. b) since the last c (resp. d)" },
    FamilyInfo { tag: WitnessTag::T15, roles: &[Role::K, Role::L], min_n: 2, min_m: Some(1), alphabet: "3", summary: "K = Σ^(m-1)Σ*, L = the T5 right ideal" },
    FamilyInfo { tag: WitnessTag::T16, roles: &[Role::L, Role::LeftL], min_n: 2, min_m: None, alphabet: "2", summary: "L = (b*a)^(n-1)Σ*, left case Σ*a^(n-1)" },
    FamilyInfo { tag: WitnessTag::T17, roles: &[Role::L], min_n: 1, min_m: None, alphabet: "2 (1 for n<=2)", summary: "L = (Σ^(n-2)b)*Σ^(n-2)aΣ*" },
    FamilyInfo { tag: WitnessTag::T18, roles: &[Role::L], min_n: 2, min_m: None, alphabet: "3 (1 for n=2)", summary: "left ideals for n = 2, 3, 4; search beyond" },
    FamilyInfo { tag: WitnessTag::T19, roles: &[Role::L], min_n: 2, min_m: None, alphabet: "1", summary: "L = a*aa*, a*aa*aa*; search beyond" },
    FamilyInfo { tag: WitnessTag::T20, roles: &[Role::L], min_n: 2, min_m: None, alphabet: "2n-4", summary: "L = BL | ∪ ai Li; Li = (B - bi)Li | (A | bi)L(n-1)" },
    FamilyInfo { tag: WitnessTag::L1, roles: &[Role::K, Role::N], min_n: 1, min_m: Some(1), alphabet: "1", summary: "K = a* ⧢ a^(m-1), N = a* ⧢ a^(n-1)" },
];

impl WitnessTag {
    pub fn info(self) -> &'static FamilyInfo {
        CATALOG.iter().find(|f| f.tag == self).expect("every tag is catalogued")
    }

    pub fn name(self) -> &'static str {
        match self {
            WitnessTag::P3 => "P3",
            WitnessTag::T1 => "T1",
            WitnessTag::T2 => "T2",
            WitnessTag::T3 => "T3",
            WitnessTag::T4 => "T4",
            WitnessTag::T5 => "T5",
            WitnessTag::T6 => "T6",
            WitnessTag::T7 => "T7",
            WitnessTag::T8 => "T8",
            WitnessTag::T9 => "T9",
            WitnessTag::T10 => "T10",
            WitnessTag::T11 => "T11",
            WitnessTag::T12 => "T12",
            WitnessTag::T13 => "T13",
            WitnessTag::T14 => "T14",
            WitnessTag::T14LeftUnion => "T14-left-union",
            WitnessTag::T15 => "T15",
            WitnessTag::T16 => "T16",
            WitnessTag::T17 => "T17",
            WitnessTag::T18 => "T18",
            WitnessTag::T19 => "T19",
            WitnessTag::T20 => "T20",
            WitnessTag::L1 => "L1",
        }
    }
}

impl fmt::Display for WitnessTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CATALOG
            .iter()
            .map(|f| f.tag)
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown witness family `{s}`"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("{tag}: parameter {param} = {value} is below the family minimum {min}")]
    BelowMinimum {
        tag: WitnessTag,
        param: char,
        value: usize,
        min: usize,
    },
    #[error("{tag}: parameter m is required")]
    MissingM { tag: WitnessTag },
    #[error("{tag}: no printed witness for n = {n}; use witness search")]
    RequiresSearch { tag: WitnessTag, n: usize },
    #[error("{tag}: alphabet size {size} is not supported for n = {n}")]
    Alphabet { tag: WitnessTag, n: usize, size: usize },
    #[error("{tag}: validation failed: {detail}")]
    Validation { tag: WitnessTag, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tag: WitnessTag,
    pub params: WitnessParams,
    pub operands: Vec<(Role, Dfa)>,
}

impl Witness {
    pub fn get(&self, role: Role) -> &Dfa {
        &self
            .operands
            .iter()
            .find(|(r, _)| *r == role)
            .unwrap_or_else(|| panic!("{} has no operand {role}", self.tag))
            .1
    }
}

fn letters(chars: &str) -> Alphabet {
    Alphabet::letters(chars).expect("valid letters")
}

fn compile(text: &str, sigma: &Alphabet) -> Dfa {
    let r = Regex::parse(text, sigma).unwrap_or_else(|e| panic!("witness regex {text}: {e}"));
    minimize(&r.to_dfa().unwrap_or_else(|e| panic!("witness regex {text}: {e}")))
}

/// Minimal DFA from a system of quotient equations given as a table.
fn equations(
    sigma: Alphabet,
    states: usize,
    next: impl FnMut(State, Symbol) -> State,
    is_final: impl FnMut(State) -> bool,
) -> Dfa {
    minimize(&Dfa::from_fn(sigma, states, 0, next, is_final).expect("valid table"))
}

fn unary_ideal(k: usize) -> Dfa {
    compile(&format!("a^{k}a*"), &letters("a"))
}

/// `aΣ^(n-3)` over {a, b}.
fn a_then_block(n: usize) -> Dfa {
    compile(&format!("a.^{}", n - 3), &letters("ab"))
}

/// The binary language with an `a` in position `p - 1` from the end of
/// every sufficiently long left extension, valid for `p >= 2`.
fn left_closure_family(p: usize) -> Dfa {
    compile(&format!("(b|a(a|b)^{})*a(a|b)^{}", p - 1, p - 2), &letters("ab"))
}

fn t3(n: usize) -> Dfa {
    equations(
        letters("ab"),
        n,
        |q, x| match (q, x.index()) {
            (0, 0) => 1,
            (0, _) => n - 1,
            (q, 0) if q == n - 1 => 1,
            (q, _) if q == n - 1 => 0,
            (q, _) => q + 1,
        },
        |q| q == n - 1,
    )
}

/// Right ideal over {a, b, c}: `a` and `b` advance through states
/// `1..n-2`, `c` holds, and `c` from state `n-2` reaches the accepting sink.
fn t5_ternary(n: usize) -> Dfa {
    const C: usize = 2;
    let sink = n - 1;
    equations(
        letters("abc"),
        n,
        |q, x| match (q, x.index()) {
            (q, _) if q == sink => sink,
            (q, C) if q == n - 2 => sink,
            (q, _) if q == n - 2 => 0,
            (0, 0) => 1,
            (0, _) => 0,
            (q, C) => q,
            (q, _) => q + 1,
        },
        |q| q == sink,
    )
}

fn t6(n: usize) -> Dfa {
    if n == 2 {
        return unary_ideal(1);
    }
    let t = n - 2;
    let sigma = Alphabet::indexed("a", t).expect("alphabet");
    let doubles: Vec<String> = (1..=t).map(|i| format!("'a{i}''a{i}'")).collect();
    compile(&format!(".*({}).*", doubles.join("|")), &sigma)
}

fn t10(n: usize) -> Dfa {
    let t = n - 3;
    let sigma = Alphabet::indexed("a", t).expect("alphabet");
    let doubles: Vec<String> = (1..=t).map(|i| format!("'a{i}''a{i}'")).collect();
    compile(&doubles.join("|"), &sigma)
}

/// The four-letter left ideals: `K` counts `a`s since the last `c` up to
/// `m - 1`, `L` counts `b`s since the last `d` up to `n - 1`.
fn t14_left(m: usize, n: usize) -> (Dfa, Dfa) {
    let counter = |len: usize, up: usize, reset: usize| {
        equations(
            letters("abcd"),
            len,
            move |q, x| match x.index() {
                x if x == reset => 0,
                x if x == up => (q + 1).min(len - 1),
                _ => q,
            },
            move |q| q == len - 1,
        )
    };
    (counter(m, 0, 2), counter(n, 1, 3))
}

fn t18_four() -> Dfa {
    const A: usize = 0;
    const C: usize = 2;
    equations(
        letters("abc"),
        4,
        |q, x| match (q, x.index()) {
            (3, A) => 3,
            (3, _) | (_, C) => 1,
            (0, _) => 0,
            (q, _) => q + 1,
        },
        |q| q == 1,
    )
}

fn t20(n: usize) -> Dfa {
    if n == 2 {
        return unary_ideal(1);
    }
    let t = n - 2;
    let mut names: Vec<String> = (1..=t).map(|i| format!("a{i}")).collect();
    names.extend((1..=t).map(|i| format!("b{i}")));
    let sigma = Alphabet::new(names).expect("alphabet");
    let sink = n - 1;
    equations(
        sigma,
        n,
        |q, x| {
            let (is_a, i) = if x.index() < t {
                (true, x.index() + 1)
            } else {
                (false, x.index() - t + 1)
            };
            match q {
                0 if is_a => i,
                0 => 0,
                q if q == sink => sink,
                q if is_a || i == q => sink,
                q => q,
            }
        },
        |q| q == sink,
    )
}

/// Builds and validates a witness.
pub fn make_witness(tag: WitnessTag, p: WitnessParams) -> Result<Witness, WitnessError> {
    let info = tag.info();
    let n = p.n;
    if n < info.min_n {
        return Err(WitnessError::BelowMinimum {
            tag,
            param: 'n',
            value: n,
            min: info.min_n,
        });
    }
    let m = match info.min_m {
        Some(min) => {
            let m = p.m.ok_or(WitnessError::MissingM { tag })?;
            if m < min {
                return Err(WitnessError::BelowMinimum {
                    tag,
                    param: 'm',
                    value: m,
                    min,
                });
            }
            m
        }
        None => 0,
    };
    let unsupported = |size| WitnessError::Alphabet { tag, n, size };
    if let Some(size) = p.alphabet_size {
        if !(tag == WitnessTag::T5 && size == 3) {
            return Err(unsupported(size));
        }
    }

    use WitnessTag as W;
    let ab = letters("ab");
    let operands: Vec<(Role, Dfa)> = match tag {
        W::P3 | W::L1 => {
            let second = if tag == W::P3 { Role::L } else { Role::N };
            vec![(Role::K, unary_ideal(m - 1)), (second, unary_ideal(n - 1))]
        }
        W::T1 if n <= 2 => vec![(Role::K, unary_ideal(n - 1))],
        W::T17 if n <= 2 => vec![(Role::L, unary_ideal(n - 1))],
        W::T1 => vec![(Role::K, a_then_block(n))],
        W::T2 => vec![(
            Role::L,
            match n {
                1 => unary_ideal(0),
                2 => compile("a*a", &letters("a")),
                _ => left_closure_family(n),
            },
        )],
        W::T3 => vec![(Role::L, t3(n))],
        W::T4 => {
            let l = if n == 2 {
                compile("..*", &ab)
            } else {
                let sigma = Dfa::lengths(ab.clone(), 1, Some(1));
                [n - 1, n - 2, n]
                    .into_iter()
                    .filter(|&q| q >= 2)
                    .map(|q| concatenate(&sigma, &left_closure_family(q)).expect("same alphabet"))
                    .find(|d| d.state_count() == n)
                    .ok_or_else(|| WitnessError::Validation {
                        tag,
                        detail: format!("no instance of ΣL' has complexity {n}"),
                    })?
            };
            vec![(Role::L, l)]
        }
        W::T5 => {
            let ternary = p.alphabet_size == Some(3);
            let l = match n {
                2 if ternary => compile("..*", &letters("abc")),
                2 => unary_ideal(1),
                3 if !ternary => unary_ideal(2),
                _ => t5_ternary(n),
            };
            vec![(Role::L, l)]
        }
        W::T6 => vec![(Role::L, t6(n))],
        W::T7 => vec![(Role::G, a_then_block(n))],
        W::T8 => vec![(
            Role::G,
            if n == 2 {
                Dfa::epsilon(letters("a"))
            } else {
                a_then_block(n)
            },
        )],
        W::T9 => vec![(
            Role::G,
            if n == 3 {
                compile("a", &letters("a"))
            } else {
                compile(&format!("a.^{}a", n - 4), &ab)
            },
        )],
        W::T10 => vec![(Role::G, t10(n))],
        W::T11 | W::T13 => vec![(Role::L, unary_ideal(n - 1))],
        W::T12 => vec![(
            Role::L,
            compile(&format!("(b|ab)*a(ab*)^{}a(a|b)*", n - 3), &ab),
        )],
        W::T14 => vec![
            (Role::K, compile(&format!("(b*a)^{}.*", m - 1), &ab)),
            (Role::L, compile(&format!("(a*b)^{}.*", n - 1), &ab)),
        ],
        W::T14LeftUnion => {
            let (k, l) = t14_left(m, n);
            vec![(Role::K, k), (Role::L, l)]
        }
        W::T15 => {
            let abc = letters("abc");
            let l = if n == 2 {
                compile("..*", &abc)
            } else {
                t5_ternary(n)
            };
            vec![(Role::K, compile(&format!(".^{}.*", m - 1), &abc)), (Role::L, l)]
        }
        W::T16 => vec![
            (Role::L, compile(&format!("(b*a)^{}.*", n - 1), &ab)),
            (Role::LeftL, compile(&format!(".*a^{}", n - 1), &ab)),
        ],
        W::T17 => vec![(
            Role::L,
            compile(&format!("(.^{}b)*.^{}a.*", n - 2, n - 2), &ab),
        )],
        W::T18 => vec![(
            Role::L,
            match n {
                2 => compile("a*a", &letters("a")),
                3 => compile("(a|b)*c(c|(a|b)b*(a|c))*", &letters("abc")),
                4 => t18_four(),
                _ => return Err(WitnessError::RequiresSearch { tag, n }),
            },
        )],
        W::T19 => vec![(
            Role::L,
            match n {
                2 => compile("a*aa*", &letters("a")),
                3 => compile("a*aa*aa*", &letters("a")),
                _ => return Err(WitnessError::RequiresSearch { tag, n }),
            },
        )],
        W::T20 => vec![(Role::L, t20(n))],
    };
    let w = Witness {
        tag,
        params: p,
        operands,
    };
    validate(&w, m)?;
    Ok(w)
}

/// Requirements for one operand: its complexity and the class it must lie in.
enum Expect {
    Ideal(IdealType),
    Free(IdealType),
    Any,
}

fn expectations(tag: WitnessTag, role: Role) -> Vec<Expect> {
    use IdealType::*;
    use WitnessTag as W;
    let every = || IdealType::ALL.into_iter().map(Expect::Ideal).collect();
    match (tag, role) {
        (W::P3 | W::L1 | W::T11 | W::T13, _) => every(),
        (W::T1 | W::T2 | W::T3 | W::T4 | W::T6, _) => vec![Expect::Any],
        (W::T5 | W::T15 | W::T17, _) => vec![Expect::Ideal(Right)],
        (W::T7, _) => vec![Expect::Free(Right)],
        (W::T8, _) => vec![Expect::Free(Left)],
        (W::T9, _) => vec![Expect::Free(TwoSided)],
        (W::T10, _) => vec![Expect::Free(AllSided)],
        (W::T12 | W::T14LeftUnion | W::T18, _) => vec![Expect::Ideal(Left)],
        (W::T16, Role::LeftL) => vec![Expect::Ideal(Left)],
        (W::T14 | W::T16 | W::T20, _) => vec![Expect::Ideal(AllSided)],
        (W::T19, _) => vec![Expect::Ideal(TwoSided)],
    }
}

fn validate(w: &Witness, m: usize) -> Result<(), WitnessError> {
    let fail = |detail: String| WitnessError::Validation { tag: w.tag, detail };
    for (role, d) in &w.operands {
        let want = match role {
            Role::K if w.tag.info().min_m.is_some() => m,
            _ => w.params.n,
        };
        let got = kappa(d);
        if got != want {
            return Err(fail(format!("κ({role}) = {got}, expected {want}")));
        }
        for e in expectations(w.tag, *role) {
            match e {
                Expect::Ideal(t) if !is_ideal(d, t) => {
                    return Err(fail(format!("{role} is not a {t} ideal")))
                }
                Expect::Free(t) if !check_freeness(d, t) => {
                    return Err(fail(format!("{role} is not {}", t.freeness())))
                }
                _ => {}
            }
        }
    }
    if matches!(w.tag, WitnessTag::T3 | WitnessTag::T4) {
        let d = w.get(Role::L);
        let (qa, qb) = (d.next(d.initial(), Symbol(0)), d.next(d.initial(), Symbol(1)));
        let q0 = d.initial();
        let ok = match w.tag {
            WitnessTag::T3 => qa != qb && qa != q0 && qb != q0,
            _ => qa == qb && qa != q0,
        };
        if !ok {
            return Err(fail("letter quotients violate the family hypothesis".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, reverse};
    use crate::ideals::closure;

    fn l(tag: WitnessTag, n: usize) -> Dfa {
        make_witness(tag, WitnessParams::n(n)).unwrap().operands[0].1.clone()
    }

    #[test]
    fn left_closure_family_at_five() {
        let d = l(WitnessTag::T2, 5);
        assert_eq!(d.state_count(), 5);
        assert_eq!(kappa(&closure(&d, IdealType::Left).unwrap()), 16);
    }

    #[test]
    fn all_sided_generator_at_six() {
        let g = l(WitnessTag::T10, 6);
        assert_eq!(g.alphabet().len(), 3);
        assert_eq!(kappa(&closure(&g, IdealType::AllSided).unwrap()), 9);
    }

    #[test]
    fn growing_alphabet_reversal() {
        let d = l(WitnessTag::T20, 5);
        assert_eq!(d.alphabet().len(), 6);
        assert_eq!(kappa(&determinize(&reverse(&d))), 9);
    }

    #[test]
    fn every_family_builds_at_small_sizes() {
        for info in CATALOG {
            for n in info.min_n..=6 {
                let p = WitnessParams {
                    n,
                    m: info.min_m.map(|m| m.max(3)),
                    alphabet_size: None,
                };
                match make_witness(info.tag, p) {
                    Ok(w) => assert_eq!(w.operands.len(), info.roles.len()),
                    Err(WitnessError::RequiresSearch { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(matches!(
            make_witness(WitnessTag::T3, WitnessParams::n(2)),
            Err(WitnessError::BelowMinimum { .. })
        ));
        assert!(matches!(
            make_witness(WitnessTag::T19, WitnessParams::n(4)),
            Err(WitnessError::RequiresSearch { .. })
        ));
        assert!(matches!(
            make_witness(WitnessTag::T14, WitnessParams::n(3)),
            Err(WitnessError::MissingM { .. })
        ));
    }

    #[test]
    fn tags_round_trip_through_names() {
        for info in CATALOG {
            assert_eq!(info.tag.name().parse::<WitnessTag>(), Ok(info.tag));
        }
    }
}
