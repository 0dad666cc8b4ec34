//! Named series of rigid tuples, their generators and the chains the
//! reduction walks through.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jnf::{ConjugacyShape, MultiplicityVector, Pmv};
use crate::reduction::{decide, ReductionTrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    HG,
    Star,
    Xi,
    Theta,
    Psi6,
    Pi,
    Delta,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    X1,
    X2,
    Y1,
    Y2,
    Y3,
    Y4,
    Y5,
    Y6,
    Y7,
    Z1,
    Z2,
    Z3,
    Z4,
    OG,
    W,
    B,
    C,
    D,
    E,
    F,
    Phi,
    G,
    H,
    I,
    J,
    K,
    L,
    V,
    N,
    P,
    R,
    S,
    T,
    OF,
    EF,
    FF,
    /// `(1);…;(1)`, the end point of every successful reduction.
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Index {
    /// Indexed by an auxiliary parameter `k`.
    K,
    /// Indexed by the size `n`.
    Size,
    /// Indexed by the number of entries (size 1 only).
    Entries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Any,
    Even,
    Odd,
}

struct FamilySpec {
    name: &'static str,
    index: Index,
    min: u64,
    max: Option<u64>,
    parity: Parity,
    label: Option<&'static str>,
}

const fn spec(
    name: &'static str,
    index: Index,
    min: u64,
    parity: Parity,
) -> FamilySpec {
    FamilySpec {
        name,
        index,
        min,
        max: None,
        parity,
        label: None,
    }
}

impl Family {
    /// Every family, in the order used to pick a name when a tuple belongs to
    /// several series.
    pub const ALL: [Family; 48] = [
        Family::HG,
        Family::Star,
        Family::Xi,
        Family::Theta,
        Family::Psi6,
        Family::Pi,
        Family::Delta,
        Family::Gamma1,
        Family::Gamma2,
        Family::Gamma3,
        Family::Gamma4,
        Family::X1,
        Family::X2,
        Family::Y1,
        Family::Y2,
        Family::Y3,
        Family::Y4,
        Family::Y5,
        Family::Y6,
        Family::Y7,
        Family::Z1,
        Family::Z2,
        Family::Z3,
        Family::Z4,
        Family::OG,
        Family::W,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::Phi,
        Family::G,
        Family::H,
        Family::I,
        Family::J,
        Family::K,
        Family::L,
        Family::V,
        Family::N,
        Family::P,
        Family::R,
        Family::S,
        Family::T,
        Family::OF,
        Family::EF,
        Family::FF,
        Family::Unit,
    ];

    fn spec(self) -> FamilySpec {
        use Family::*;
        use Index::{Entries, Size, K as Kp};
        use Parity::*;
        let labelled = |name, min, parity, label| FamilySpec {
            label: Some(label),
            ..spec(name, Size, min, parity)
        };
        match self {
            HG => spec("HG", Size, 1, Any),
            Star => spec("Star", Size, 2, Any),
            Xi => spec("Xi", Size, 4, Even),
            Theta => spec("Theta", Size, 4, Even),
            Psi6 => FamilySpec {
                max: Some(6),
                ..spec("Psi", Size, 6, Even)
            },
            Pi => spec("Pi", Size, 3, Odd),
            Delta => spec("Delta", Size, 3, Odd),
            Gamma1 => labelled("Gamma1", 6, Even, "1a"),
            Gamma2 => labelled("Gamma2", 4, Even, "1b"),
            Gamma3 => labelled("Gamma3", 4, Even, "1c"),
            Gamma4 => labelled("Gamma4", 4, Even, "1d"),
            Y1 => labelled("Y1", 4, Even, "1e"),
            Y2 => labelled("Y2", 4, Even, "1f"),
            Y3 => labelled("Y3", 4, Even, "1g"),
            Y4 => labelled("Y4", 6, Even, "1h"),
            Y5 => labelled("Y5", 2, Even, "1i"),
            Y6 => labelled("Y6", 4, Even, "1j"),
            Y7 => labelled("Y7", 6, Even, "1k"),
            X1 => labelled("X1", 5, Odd, "2a"),
            X2 => labelled("X2", 3, Odd, "2b"),
            Z1 => labelled("Z1", 3, Odd, "2d"),
            Z2 => labelled("Z2", 5, Odd, "2e"),
            Z3 => labelled("Z3", 3, Odd, "2f"),
            Z4 => labelled("Z4", 3, Odd, "2g"),
            OG => FamilySpec {
                label: Some("2c"),
                ..spec("OG", Kp, 1, Any)
            },
            W => spec("W", Kp, 0, Any),
            B => spec("B", Kp, 1, Any),
            C => spec("C", Kp, 1, Any),
            D => spec("D", Kp, 0, Any),
            E => spec("E", Kp, 1, Any),
            F => spec("F", Kp, 1, Any),
            Phi => spec("Phi", Kp, 1, Any),
            G => spec("G", Kp, 0, Any),
            H => spec("H", Kp, 0, Any),
            I => spec("I", Kp, 1, Any),
            J => spec("J", Kp, 1, Any),
            K => spec("K", Kp, 1, Any),
            L => spec("L", Kp, 1, Any),
            V => spec("V", Kp, 0, Any),
            N => spec("N", Kp, 0, Any),
            P => spec("P", Kp, 1, Any),
            R => spec("R", Kp, 1, Any),
            S => spec("S", Kp, 0, Any),
            T => spec("T", Kp, 1, Any),
            OF => spec("OF", Size, 3, Odd),
            EF => spec("EF", Size, 2, Even),
            FF => FamilySpec {
                max: Some(8),
                ..spec("FF", Size, 5, Any)
            },
            Unit => spec("Unit", Entries, 2, Any),
        }
    }

    pub fn name(self) -> &'static str {
        self.spec().name
    }

    /// Label of the family in the list of rigid triples with first entry
    /// `(2,…,2,…)`, e.g. `"1a"`.
    pub fn label(self) -> Option<&'static str> {
        self.spec().label
    }

    /// Whether the parameter is the matrix size rather than `k`.
    pub fn indexed_by_size(self) -> bool {
        self.spec().index == Index::Size
    }

    pub fn valid_param(self, param: u64) -> bool {
        let s = self.spec();
        param >= s.min
            && s.max.is_none_or(|m| param <= m)
            && match s.parity {
                Parity::Any => true,
                Parity::Even => param.is_multiple_of(2),
                Parity::Odd => param % 2 == 1,
            }
    }

    fn expected_range(self) -> &'static str {
        use Family::*;
        match self {
            HG => "n >= 1",
            Star => "n >= 2",
            Xi | Theta | Gamma2 | Gamma3 | Gamma4 | Y1 | Y2 | Y3 | Y6 => "even n >= 4",
            Psi6 => "n = 6",
            Pi | Delta | X2 | Z1 | Z3 | Z4 | OF => "odd n >= 3",
            Gamma1 | Y4 | Y7 => "even n >= 6",
            Y5 | EF => "even n >= 2",
            X1 | Z2 => "odd n >= 5",
            FF => "5 <= n <= 8",
            W | D | G | H | V | N | S => "k >= 0",
            OG | B | C | E | F | Phi | I | J | K | L | P | R | T => "k >= 1",
            Unit => "at least 2 entries",
        }
    }

    fn from_name(s: &str) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.label() == Some(s))
            .or(match s {
                "Psi6" => Some(Family::Psi6),
                _ => None,
            })
    }
}

/// A member of a named series: the family and its parameter (`k`, `n` or,
/// for [`Family::Unit`], the number of entries).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesId {
    pub family: Family,
    pub param: u64,
}

impl SeriesId {
    pub fn new(family: Family, param: u64) -> Result<Self> {
        if !family.valid_param(param) {
            return Err(Error::ParameterOutOfRange {
                series: family.name().to_string(),
                param,
                expected: family.expected_range(),
            });
        }
        Ok(SeriesId { family, param })
    }

    fn checked(family: Family, param: u64) -> Option<Self> {
        Self::new(family, param).ok()
    }

    /// Matrix size of the instance.
    pub fn size(&self) -> u64 {
        let first = &raw_entries(self.family, self.param)[0];
        first.iter().sum()
    }

    /// The name with the theorem label, e.g. `"1a_22"`, when there is one.
    pub fn labelled(&self) -> Option<String> {
        let n = self.size();
        self.family.label().map(|l| format!("{l}_{n}"))
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.name(), self.param)
    }
}

impl FromStr for SeriesId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Psi6" {
            return SeriesId::new(Family::Psi6, 6);
        }
        let (name, param) = s
            .rsplit_once('_')
            .ok_or_else(|| Error::Parse(format!("expected NAME_PARAM, got {s:?}")))?;
        let family = Family::from_name(name)
            .ok_or_else(|| Error::Parse(format!("unknown series {name:?}")))?;
        let param: u64 = param
            .parse()
            .map_err(|_| Error::Parse(format!("bad series parameter {param:?}")))?;
        // Labels such as "2c" are indexed by n even when the family is not.
        if family.label() == Some(name) && !family.indexed_by_size() {
            if param.is_multiple_of(2) || param < 3 {
                return Err(Error::ParameterOutOfRange {
                    series: name.to_string(),
                    param,
                    expected: "odd n >= 3",
                });
            }
            return SeriesId::new(family, (param - 1) / 2);
        }
        SeriesId::new(family, param)
    }
}

impl Serialize for SeriesId {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SeriesId {
    fn deserialize<De: serde::Deserializer<'de>>(d: De) -> std::result::Result<Self, De::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(2,…,2,1,…,1)` of size `n` with `ones` trailing ones.
fn twos(n: i64, ones: i64) -> Vec<i64> {
    debug_assert!(n >= ones && (n - ones) % 2 == 0);
    let mut v = vec![2; ((n - ones) / 2) as usize];
    v.extend(std::iter::repeat_n(1, ones as usize));
    v
}

fn raw_entries(family: Family, param: u64) -> Vec<Vec<u64>> {
    use Family::*;
    let a = param as i64;
    let (k, n) = (a, a);
    let rep = |v: Vec<i64>, times: usize| vec![v; times];
    let ones = |n: i64| vec![1; n as usize];
    let raw: Vec<Vec<i64>> = match family {
        W => rep(vec![k, k, k + 1], 3),
        B => rep(vec![k, k, k - 1], 3),
        C => vec![vec![k, k, k], vec![k, k, k], vec![k, k + 1, k - 1]],
        D => [rep(vec![k, k, k, k + 1], 2), vec![vec![2 * k, 2 * k + 1]]].concat(),
        E => [rep(vec![k, k, k, k - 1], 2), vec![vec![2 * k, 2 * k - 1]]].concat(),
        F => [rep(vec![k; 4], 2), vec![vec![2 * k + 1, 2 * k - 1]]].concat(),
        Phi => vec![vec![k, k, k + 1, k - 1], vec![k; 4], vec![2 * k, 2 * k]],
        G => [rep(vec![k, k, k + 1, k + 1], 2), vec![vec![2 * k + 1, 2 * k + 1]]].concat(),
        H => vec![
            vec![k, k, k, k, k, k + 1],
            vec![3 * k, 3 * k + 1],
            vec![2 * k, 2 * k, 2 * k + 1],
        ],
        I => vec![
            vec![k, k, k, k, k, k - 1],
            vec![3 * k, 3 * k - 1],
            vec![2 * k, 2 * k, 2 * k - 1],
        ],
        J => vec![vec![k; 6], vec![3 * k + 1, 3 * k - 1], vec![2 * k; 3]],
        K => vec![vec![k; 6], vec![3 * k, 3 * k], vec![2 * k, 2 * k + 1, 2 * k - 1]],
        L => vec![vec![k, k, k, k, k + 1, k - 1], vec![3 * k, 3 * k], vec![2 * k; 3]],
        V => vec![
            vec![k, k, k, k, k + 1, k + 1],
            vec![3 * k + 1, 3 * k + 1],
            vec![2 * k, 2 * k + 1, 2 * k + 1],
        ],
        N => vec![
            vec![k, k, k, k + 1, k + 1, k + 1],
            vec![3 * k + 1, 3 * k + 2],
            vec![2 * k + 1; 3],
        ],
        P => vec![
            vec![k, k, k, k, k - 1, k - 1],
            vec![3 * k - 1, 3 * k - 1],
            vec![2 * k, 2 * k - 1, 2 * k - 1],
        ],
        R => [rep(vec![k, k], 3), vec![vec![k + 1, k - 1]]].concat(),
        S => rep(vec![k + 1, k], 4),
        T => [vec![vec![2 * k + 1, 2 * k - 1]], rep(vec![3 * k, k], 4)].concat(),
        OG => {
            let n = 2 * k + 1;
            vec![twos(n, 3), twos(n, 1), vec![2 * k - 1, 1, 1]]
        }
        HG => vec![vec![n - 1, 1], ones(n), ones(n)],
        OF => vec![
            vec![(n + 1) / 2, (n - 1) / 2],
            vec![(n - 1) / 2, (n - 1) / 2, 1],
            ones(n),
        ],
        EF => vec![vec![n / 2, n / 2], vec![n / 2, (n - 2) / 2, 1], ones(n)],
        FF => {
            let mut second = vec![2; (n - 4) as usize];
            second.extend(ones(8 - n));
            let mut first = vec![2];
            first.extend(ones(n - 2));
            vec![first, second, vec![n - 2, 2]]
        }
        Star => rep(vec![n - 1, 1], (n + 1) as usize),
        Xi => vec![twos(n, 0), vec![n / 2, n / 2], vec![n / 2, n / 2], vec![n - 1, 1]],
        Theta => vec![
            twos(n, 2),
            vec![n / 2, n / 2],
            vec![n / 2 + 1, n / 2 - 1],
            vec![n - 1, 1],
        ],
        Psi6 => vec![vec![2, 2, 2], vec![3, 3], vec![4, 1, 1], vec![5, 1]],
        Pi => vec![
            twos(n, 1),
            vec![(n + 1) / 2, (n - 1) / 2],
            vec![(n + 1) / 2, (n - 1) / 2],
            vec![n - 1, 1],
        ],
        Delta => vec![twos(n, 1), twos(n, 1), vec![n - 1, 1], vec![n - 1, 1]],
        Gamma1 => vec![twos(n, 0), twos(n, 6), vec![n - 2, 2]],
        Gamma2 => vec![twos(n, 2), twos(n, 4), vec![n - 2, 2]],
        Gamma3 => vec![twos(n, 2), twos(n, 2), vec![n - 2, 1, 1]],
        Gamma4 => vec![twos(n, 0), twos(n, 4), vec![n - 2, 1, 1]],
        Y1 => {
            let m = (n - 2) / 2;
            vec![twos(n, 4), vec![m, m, 2], vec![m + 1, m + 1]]
        }
        Y2 => {
            let m = (n - 2) / 2;
            vec![twos(n, 2), vec![m, m, 1, 1], vec![m + 1, m + 1]]
        }
        Y3 => {
            let m = (n - 4) / 2;
            vec![twos(n, 4), vec![m + 2, m, 1, 1], vec![m + 2, m + 2]]
        }
        Y4 => {
            let m = (n - 4) / 2;
            vec![twos(n, 6), vec![m + 2, m, 2], vec![m + 2, m + 2]]
        }
        Y5 => {
            let m = (n - 2) / 2;
            vec![twos(n, 2), vec![m + 1, m, 1], vec![m + 1, m, 1]]
        }
        Y6 => {
            let m = (n - 2) / 2;
            vec![twos(n, 4), vec![m, m, 1, 1], vec![m + 2, m]]
        }
        Y7 => {
            let m = (n - 2) / 2;
            vec![twos(n, 6), vec![m, m, 2], vec![m + 2, m]]
        }
        X1 => vec![twos(n, 5), twos(n, 1), vec![n - 2, 2]],
        X2 => vec![twos(n, 3), twos(n, 3), vec![n - 2, 2]],
        Z1 => {
            let m = (n - 1) / 2;
            vec![twos(n, 1), vec![m, m, 1], vec![m, m, 1]]
        }
        Z2 => {
            let m = (n - 1) / 2;
            vec![twos(n, 5), vec![m, m - 1, 2], vec![m + 1, m]]
        }
        Z3 => {
            let m = (n - 1) / 2;
            vec![twos(n, 3), vec![m, m - 1, 1, 1], vec![m + 1, m]]
        }
        Z4 => {
            let m = (n - 1) / 2;
            vec![twos(n, 3), vec![m, m, 1], vec![m + 1, m - 1, 1]]
        }
        Unit => vec![vec![1]; param as usize],
    };
    raw.into_iter()
        .map(|mv| {
            mv.into_iter()
                .map(|x| u64::try_from(x).expect("parameter ranges keep parts non-negative"))
                .collect()
        })
        .collect()
}

/// The tuple of multiplicity vectors of a series instance.
pub fn series(id: SeriesId) -> Result<Pmv> {
    let id = SeriesId::new(id.family, id.param)?;
    let raw = raw_entries(id.family, id.param);
    let entries = raw
        .iter()
        .map(|mv| MultiplicityVector::from_raw(mv))
        .collect::<Vec<_>>();
    let n = id.size();
    debug_assert!(entries.iter().all(|e| e.size() == n));
    Pmv::new(entries)
}

/// The parameter of `family` whose instance has size `n` and `entries`
/// entries, if there is one.
fn param_for(family: Family, n: u64, entries: usize) -> Option<u64> {
    match family.spec().index {
        Index::Size => Some(n),
        Index::Entries => (n == 1).then_some(entries as u64),
        Index::K => {
            let min = family.spec().min;
            let at = |k: u64| SeriesId { family, param: k }.size();
            let (base, slope) = (at(min), at(min + 1) - at(min));
            (n >= base && (n - base).is_multiple_of(slope)).then(|| min + (n - base) / slope)
        }
    }
    .filter(|&p| family.valid_param(p))
}

fn matches(id: SeriesId, t: &Pmv) -> bool {
    series(id).is_ok_and(|s| s.same_up_to_scalars(t))
}

/// Every series instance equal to `t` up to permutation and scalar entries,
/// in preference order. Tuples of size 1 are only named by
/// [`Family::Unit`].
pub fn identify(t: &Pmv) -> Vec<SeriesId> {
    if t.n() == 1 {
        return vec![SeriesId {
            family: Family::Unit,
            param: t.len() as u64,
        }];
    }
    Family::ALL
        .into_iter()
        .filter_map(|family| {
            let param = param_for(family, t.n(), t.len())?;
            let id = SeriesId { family, param };
            matches(id, t).then_some(id)
        })
        .collect()
}

/// The series member the reduction leads to from `id`, as read off the
/// known chains.
pub fn successor(id: SeriesId) -> Option<SeriesId> {
    use Family::*;
    let SeriesId { family, param: a } = id;
    let to = |f, p| SeriesId::checked(f, p);
    let down = |f, by: u64| a.checked_sub(by).and_then(|p| to(f, p));
    match family {
        W => down(B, 0),
        B => down(W, 1),
        C => down(B, 0),
        D | F | Phi => down(E, 0),
        E => down(G, 1),
        G => down(D, 0),
        H | J | K | L => down(I, 0),
        I => down(P, 0),
        P => down(N, 1),
        N => down(V, 0),
        V => down(H, 0),
        R | S | T => down(S, 1),
        OG if a == 1 => to(HG, 2),
        OG => down(OG, 1),
        HG => down(HG, 1),
        Star => to(Unit, a + 1),
        OF => down(EF, 1),
        EF => down(OF, 1),
        Xi => down(Pi, 1),
        Pi if a == 3 => to(Unit, 4),
        Pi => down(Pi, 2),
        Delta if a == 3 => to(Unit, 4),
        Delta => down(Delta, 2),
        Theta if a == 4 => to(HG, 2),
        Theta => down(Theta, 2),
        Psi6 => to(Theta, 4),
        Gamma1 if a == 6 => to(X1, 5),
        Gamma2 | Gamma4 if a == 4 => to(HG, 3),
        Gamma3 if a == 4 => to(HG, 2),
        Gamma1 | Gamma2 | Gamma3 | Gamma4 => down(family, 2),
        X1 if a == 5 => to(Gamma2, 4),
        X2 if a == 3 => to(HG, 2),
        X1 | X2 => down(family, 2),
        Y1 if a == 4 => to(HG, 3),
        Y1 => down(Z2, 1),
        Z2 if a == 5 => to(Gamma4, 4),
        Z2 => down(Z2, 2),
        Z3 | Z4 if a == 3 => to(HG, 2),
        Z3 | Z4 => down(family, 2),
        Z1 => down(Y5, 1),
        Y5 if a == 2 => to(HG, 1),
        Y5 => down(Y5, 2),
        Y2 => down(Z3, 1),
        Y3 | Y6 if a == 4 => to(HG, 3),
        Y3 => down(Y6, 2),
        Y6 => down(Y3, 2),
        Y4 => down(Y7, 2),
        Y7 => down(Y4, 2),
        FF | Unit => None,
    }
}

/// Names every step of a trace: the predicted successor when it matches,
/// otherwise the preferred catalog name. Unnamed steps are `None`.
pub fn name_trace(
    trace: &ReductionTrace<MultiplicityVector>,
    start: Option<SeriesId>,
) -> Vec<Option<SeriesId>> {
    let mut names: Vec<Option<SeriesId>> = Vec::with_capacity(trace.steps.len());
    for (i, step) in trace.steps.iter().enumerate() {
        let predicted = if i == 0 {
            start
        } else {
            names[i - 1].and_then(successor)
        };
        let name = predicted
            .filter(|&id| matches(id, &step.tuple))
            .or_else(|| identify(&step.tuple).first().copied());
        names.push(name);
    }
    names
}

/// Runs the reduction on a series instance and names every step, failing
/// on the first step that matches no catalog entry.
pub fn verify_chain(id: SeriesId) -> Result<Vec<SeriesId>> {
    let t = series(id)?;
    let trace = decide(&t);
    if !trace.solvable() {
        return Err(Error::ChainMismatch {
            step: trace.verdict.at_step,
            detail: format!("{id} is not solvable ({:?})", trace.verdict.reason),
        });
    }
    let names = name_trace(&trace, Some(id));
    names
        .into_iter()
        .enumerate()
        .map(|(step, name)| {
            name.ok_or_else(|| Error::ChainMismatch {
                step,
                detail: format!("{} matches no catalog entry", trace.steps[step].tuple),
            })
        })
        .collect()
}

/// Every series instance (except [`Family::Unit`]) with size `<= max_n`.
pub fn all_instances(max_n: u64) -> Vec<(SeriesId, Pmv)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        if family == Family::Unit {
            continue;
        }
        let min = family.spec().min;
        for param in min..=max_n.max(min) {
            let Some(id) = SeriesId::checked(family, param) else {
                continue;
            };
            if id.size() > max_n {
                break;
            }
            out.push((id, series(id).expect("valid parameter")));
        }
    }
    out
}

/// One catalog line: `{n, entries, defect, series_names}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub n: u64,
    pub entries: Vec<Vec<u64>>,
    pub defect: i64,
    pub series_names: Vec<String>,
}

impl CatalogEntry {
    pub fn from_tuple(t: &Pmv) -> Self {
        let mut series_names = Vec::new();
        for id in identify(t) {
            series_names.push(id.to_string());
            if let Some(l) = id.labelled() {
                series_names.push(l);
            }
        }
        CatalogEntry {
            n: t.n(),
            entries: t.entries().iter().map(|m| m.parts().to_vec()).collect(),
            defect: crate::reduction::defect(t),
            series_names,
        }
    }

    pub fn to_tuple(&self) -> Result<Pmv> {
        let raw: Vec<&[u64]> = self.entries.iter().map(Vec::as_slice).collect();
        let t = Pmv::from_parts(&raw)?;
        if t.n() != self.n {
            return Err(Error::InvalidInput(format!(
                "declared n = {} but the entries have size {}",
                self.n,
                t.n()
            )));
        }
        Ok(t)
    }
}
