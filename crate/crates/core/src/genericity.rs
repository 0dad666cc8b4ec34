//! Exact eigenvalue assignments and the search for non-genericity relations.
//!
//! Eigenvalues are rational combinations of `1` and formally independent
//! transcendentals `t_1, t_2, …`. In multiplicative mode a value `x` stands
//! for the eigenvalue `exp(2πi·x)`, so a product equals 1 exactly when the
//! summed exponent has zero formal part and an integer constant part.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jnf::{ConjugacyShape, Jnf, ShapeTuple};

/// Largest size accepted by [`is_generic`].
pub const GENERIC_MAX_N: u64 = 14;
/// Attempts made by [`generate_generic`] before giving up.
pub const MAX_ATTEMPTS: u32 = 16;

/// A basis element: the constant `1` or a formal `t_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    One,
    T(u32),
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::One => f.write_str("1"),
            Coord::T(b) => write!(f, "t{b}"),
        }
    }
}

impl std::str::FromStr for Coord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(Coord::One);
        }
        s.strip_prefix('t')
            .and_then(|b| b.parse().ok())
            .map(Coord::T)
            .ok_or_else(|| Error::Parse(format!("unknown basis element {s:?}")))
    }
}

/// `q_0 + Σ q_b·t_b` with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactValue(BTreeMap<Coord, BigRational>);

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue::default()
    }

    pub fn constant(q: BigRational) -> Self {
        let mut v = ExactValue::zero();
        v.add_term(Coord::One, q);
        v
    }

    pub fn formal(b: u32) -> Self {
        let mut v = ExactValue::zero();
        v.add_term(Coord::T(b), BigRational::one());
        v
    }

    pub fn coeff(&self, c: Coord) -> BigRational {
        self.0.get(&c).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coord, &BigRational)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// No formal part.
    pub fn is_constant(&self) -> bool {
        self.0.keys().all(|&c| c == Coord::One)
    }

    pub fn add_term(&mut self, c: Coord, q: BigRational) {
        let entry = self.0.entry(c).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.0.remove(&c);
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &ExactValue, factor: &BigRational) {
        for (&c, q) in &other.0 {
            self.add_term(c, q * factor);
        }
    }

    pub fn scaled(&self, factor: &BigRational) -> ExactValue {
        let mut out = ExactValue::zero();
        out.add_scaled(self, factor);
        out
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, q)) in self.0.iter().enumerate() {
            let sign = if q.is_negative() { "-" } else { "+" };
            if i == 0 {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = q.abs();
            match c {
                Coord::One => write!(f, "{abs}")?,
                _ if abs.is_one() => write!(f, "{c}")?,
                _ => write!(f, "{abs}·{c}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(c, q)| (c.to_string(), q.to_string())))
    }
}

impl<'de> Deserialize<'de> for ExactValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut v = ExactValue::zero();
        for (c, q) in raw {
            let c: Coord = c.parse().map_err(D::Error::custom)?;
            let q: BigRational = q
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad rational {q:?}")))?;
            v.add_term(c, q);
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Matrices summing to 0; eigenvalues are the values themselves.
    Additive,
    /// Matrices with product `I`; a value `x` is the eigenvalue `exp(2πi·x)`.
    Multiplicative,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive" => Ok(Mode::Additive),
            "multiplicative" => Ok(Mode::Multiplicative),
            _ => Err(Error::Parse(format!("mode must be additive or multiplicative, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub coeffs: ExactValue,
    pub mult: u64,
}

/// Eigenvalues of every entry of a tuple, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueAssignment {
    pub mode: Mode,
    pub entries: Vec<Vec<Eigenvalue>>,
}

impl EigenvalueAssignment {
    pub fn n(&self) -> u64 {
        self.entries
            .first()
            .map_or(0, |e| e.iter().map(|v| v.mult).sum())
    }

    pub fn validate(&self) -> Result<()> {
        if self.entries.len() < 2 {
            return Err(Error::InvalidInput(
                "an assignment needs at least two entries".into(),
            ));
        }
        let n = self.n();
        if n == 0 {
            return Err(Error::InvalidInput("entries must have size at least 1".into()));
        }
        for (j, entry) in self.entries.iter().enumerate() {
            if entry.iter().any(|v| v.mult == 0) {
                return Err(Error::InvalidInput(format!("entry {j} has a zero multiplicity")));
            }
            let size: u64 = entry.iter().map(|v| v.mult).sum();
            if size != n {
                return Err(Error::InvalidInput(format!(
                    "entry {j} has size {size}, expected {n}"
                )));
            }
            for (a, x) in entry.iter().enumerate() {
                if entry[..a].iter().any(|y| y.coeffs == x.coeffs) {
                    return Err(Error::InvalidInput(format!(
                        "entry {j} repeats the eigenvalue {}",
                        x.coeffs
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether the multiplicities agree with the eigenvalue slots of `t`,
    /// entry by entry in the tuple's canonical order.
    pub fn fits<S: ConjugacyShape>(&self, t: &ShapeTuple<S>) -> bool {
        self.entries.len() == t.len()
            && self.entries.iter().zip(t.entries()).all(|(e, s)| {
                let mut got: Vec<u64> = e.iter().map(|v| v.mult).collect();
                let mut want = s.multiplicities();
                got.sort_unstable();
                want.sort_unstable();
                got == want
            })
    }

    /// Sum of all eigenvalues (exponents) counted with multiplicity.
    pub fn total(&self) -> ExactValue {
        let mut sum = ExactValue::zero();
        for v in self.entries.iter().flatten() {
            sum.add_scaled(&v.coeffs, &BigRational::from_integer(v.mult.into()));
        }
        sum
    }
}

/// The sum of all eigenvalues is 0 (additive) or the product is 1
/// (multiplicative).
pub fn trace_condition(a: &EigenvalueAssignment) -> bool {
    is_relation(a.mode, &a.total())
}

fn is_relation(mode: Mode, sum: &ExactValue) -> bool {
    match mode {
        Mode::Additive => sum.is_zero(),
        Mode::Multiplicative => sum.is_constant() && sum.coeff(Coord::One).is_integer(),
    }
}

/// A non-genericity relation: `sub_multiplicities[j][i]` copies of the
/// `i`-th eigenvalue of entry `j`, `kappa` in every entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kappa: u64,
    pub sub_multiplicities: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaCases {
    pub kappa: u64,
    /// Combinations of per-entry sub-multiplicity vectors examined.
    pub cases: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub generic: bool,
    /// The relation with the least `kappa`, then the least sub-multiplicities
    /// in lexicographic order.
    pub witness: Option<Witness>,
    pub cases: Vec<KappaCases>,
}

/// Coordinates of every eigenvalue as integers over a common denominator.
struct Dense {
    /// Entry, then eigenvalue, then coordinate (constant first).
    values: Vec<Vec<Vec<i128>>>,
    mults: Vec<Vec<u64>>,
    denominator: i128,
}

impl Dense {
    fn new(a: &EigenvalueAssignment) -> Result<Self> {
        let mut coords: Vec<Coord> = vec![Coord::One];
        let mut denominator = BigInt::one();
        for v in a.entries.iter().flatten() {
            for (c, q) in v.coeffs.terms() {
                if !coords.contains(c) {
                    coords.push(*c);
                }
                denominator = denominator.lcm(q.denom());
            }
        }
        coords.sort_unstable();
        let to_i128 = |q: &BigRational| -> Result<i128> {
            (q * BigRational::from_integer(denominator.clone()))
                .to_integer()
                .to_i128()
                .ok_or(Error::Overflow("scaling eigenvalues to a common denominator"))
        };
        let values = a
            .entries
            .iter()
            .map(|e| {
                e.iter()
                    .map(|v| coords.iter().map(|&c| to_i128(&v.coeffs.coeff(c))).collect())
                    .collect::<Result<Vec<Vec<i128>>>>()
            })
            .collect::<Result<_>>()?;
        let mults = a
            .entries
            .iter()
            .map(|e| e.iter().map(|v| v.mult).collect())
            .collect();
        let denominator = denominator
            .to_i128()
            .ok_or(Error::Overflow("computing a common denominator"))?;
        Ok(Dense {
            values,
            mults,
            denominator,
        })
    }
}

/// Every sub-multiplicity vector of `mults` summing to `kappa`, in
/// lexicographic order, with the matching weighted sum of `values`.
fn sub_vectors(mults: &[u64], values: &[Vec<i128>], kappa: u64) -> Vec<(Vec<u64>, Vec<i128>)> {
    fn fill(
        mults: &[u64],
        values: &[Vec<i128>],
        i: usize,
        left: u64,
        chosen: &mut Vec<u64>,
        sum: &mut Vec<i128>,
        out: &mut Vec<(Vec<u64>, Vec<i128>)>,
    ) {
        if i == mults.len() {
            if left == 0 {
                out.push((chosen.clone(), sum.clone()));
            }
            return;
        }
        let room: u64 = mults[i + 1..].iter().sum();
        let lo = left.saturating_sub(room);
        for take in lo..=mults[i].min(left) {
            chosen.push(take);
            for (s, v) in sum.iter_mut().zip(&values[i]) {
                *s += take as i128 * v;
            }
            fill(mults, values, i + 1, left - take, chosen, sum, out);
            for (s, v) in sum.iter_mut().zip(&values[i]) {
                *s -= take as i128 * v;
            }
            chosen.pop();
        }
    }
    let dim = values.first().map_or(1, Vec::len);
    let mut out = Vec::new();
    fill(mults, values, 0, kappa, &mut Vec::new(), &mut vec![0; dim], &mut out);
    out
}

/// Number of sub-multiplicity vectors of `mults` summing to `kappa`.
pub fn sub_vector_count(mults: &[u64], kappa: u64) -> u64 {
    let values = vec![vec![0i128]; mults.len()];
    sub_vectors(mults, &values, kappa).len() as u64
}

fn relation_key(mode: Mode, sum: &[i128], denominator: i128) -> Vec<i128> {
    let mut key = sum.to_vec();
    if mode == Mode::Multiplicative {
        key[0] = key[0].rem_euclid(denominator);
    }
    key
}

fn negated(v: &[i128]) -> Vec<i128> {
    v.iter().map(|x| -x).collect()
}

fn search_kappa(dense: &Dense, mode: Mode, kappa: u64) -> (Option<Witness>, u128) {
    let lists: Vec<Vec<(Vec<u64>, Vec<i128>)>> = dense
        .mults
        .iter()
        .zip(&dense.values)
        .map(|(m, v)| sub_vectors(m, v, kappa))
        .collect();
    let (last, prefix) = lists.split_last().expect("at least two entries");
    let mut lookup: HashMap<Vec<i128>, usize> = HashMap::with_capacity(last.len());
    for (i, (_, sum)) in last.iter().enumerate() {
        lookup
            .entry(relation_key(mode, sum, dense.denominator))
            .or_insert(i);
    }

    struct Search<'a> {
        prefix: &'a [Vec<(Vec<u64>, Vec<i128>)>],
        last: &'a [(Vec<u64>, Vec<i128>)],
        lookup: &'a HashMap<Vec<i128>, usize>,
        mode: Mode,
        denominator: i128,
        cases: u128,
        chosen: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize, sum: &mut Vec<i128>) -> Option<usize> {
            if depth == self.prefix.len() {
                self.cases += self.last.len() as u128;
                let key = relation_key(self.mode, &negated(sum), self.denominator);
                return self.lookup.get(&key).copied();
            }
            for (i, (_, part)) in self.prefix[depth].iter().enumerate() {
                self.chosen.push(i);
                for (s, p) in sum.iter_mut().zip(part) {
                    *s += p;
                }
                let hit = self.run(depth + 1, sum);
                for (s, p) in sum.iter_mut().zip(part) {
                    *s -= p;
                }
                if hit.is_some() {
                    return hit;
                }
                self.chosen.pop();
            }
            None
        }
    }

    let dim = dense.values[0][0].len();
    let mut search = Search {
        prefix,
        last,
        lookup: &lookup,
        mode,
        denominator: dense.denominator,
        cases: 0,
        chosen: Vec::new(),
    };
    let hit = search.run(0, &mut vec![0; dim]);
    let witness = hit.map(|l| {
        let mut sub_multiplicities: Vec<Vec<u64>> = search
            .chosen
            .iter()
            .enumerate()
            .map(|(j, &i)| prefix[j][i].0.clone())
            .collect();
        sub_multiplicities.push(last[l].0.clone());
        Witness {
            kappa,
            sub_multiplicities,
        }
    });
    (witness, search.cases)
}

/// Searches every `1 < κ < n` for a non-genericity relation.
pub fn is_generic(a: &EigenvalueAssignment) -> Result<GenericityReport> {
    a.validate()?;
    let n = a.n();
    if n > GENERIC_MAX_N {
        return Err(Error::SizeExceeded {
            what: "genericity check",
            size: n,
            limit: GENERIC_MAX_N,
        });
    }
    let dense = Dense::new(a)?;
    let results: Vec<(u64, Option<Witness>, u128)> = (2..n)
        .into_par_iter()
        .map(|kappa| {
            let (w, cases) = search_kappa(&dense, a.mode, kappa);
            (kappa, w, cases)
        })
        .collect();
    let witness = results.iter().find_map(|(_, w, _)| w.clone());
    Ok(GenericityReport {
        generic: witness.is_none(),
        witness,
        cases: results
            .into_iter()
            .map(|(kappa, _, cases)| KappaCases { kappa, cases })
            .collect(),
    })
}

/// The gcd of all eigenvalue multiplicities, when it is at least 2. Then
/// the trace condition itself, divided by the gcd, is a relation in additive
/// mode. For `n = 2` there is no admissible `κ`, so nothing is reported.
pub fn gcd_obstruction<S: ConjugacyShape>(t: &ShapeTuple<S>) -> Option<u64> {
    if t.n() < 3 {
        return None;
    }
    let g = t
        .all_multiplicities()
        .into_iter()
        .fold(0u64, |g, m| g.gcd(&m));
    (g >= 2).then_some(g)
}

fn random_offset(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=9).into())
}

/// Builds an assignment for `t` from per-slot values, solving the last slot
/// of the last entry so that the eigenvalues sum to `total`.
fn assemble<S, F>(t: &ShapeTuple<S>, mode: Mode, total: i64, mut value: F) -> EigenvalueAssignment
where
    S: ConjugacyShape,
    F: FnMut() -> ExactValue,
{
    let shape: Vec<Vec<u64>> = t.entries().iter().map(|e| e.multiplicities()).collect();
    let mut sum = ExactValue::zero();
    let mut entries: Vec<Vec<Eigenvalue>> = Vec::with_capacity(shape.len());
    let (last_entry, first_entries) = shape.split_last().expect("at least two entries");
    for mults in first_entries {
        entries.push(
            mults
                .iter()
                .map(|&mult| {
                    let coeffs = value();
                    sum.add_scaled(&coeffs, &BigRational::from_integer(mult.into()));
                    Eigenvalue { coeffs, mult }
                })
                .collect(),
        );
    }
    let (&designated, free) = last_entry.split_last().expect("entries are non-empty");
    let mut last: Vec<Eigenvalue> = free
        .iter()
        .map(|&mult| {
            let coeffs = value();
            sum.add_scaled(&coeffs, &BigRational::from_integer(mult.into()));
            Eigenvalue { coeffs, mult }
        })
        .collect();
    let mut solved = ExactValue::constant(BigRational::from_integer(total.into()));
    solved.add_scaled(&sum, &-BigRational::one());
    last.push(Eigenvalue {
        coeffs: solved.scaled(&BigRational::new(1.into(), designated.into())),
        mult: designated,
    });
    entries.push(last);
    EigenvalueAssignment { mode, entries }
}

/// Fresh formal `t_b` plus a seeded rational offset on every slot except the
/// last slot of the last entry, which is solved so that the eigenvalues sum
/// to `total`.
pub fn formal_assignment<S: ConjugacyShape>(
    t: &ShapeTuple<S>,
    mode: Mode,
    total: i64,
    seed: u64,
) -> EigenvalueAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = 0u32;
    assemble(t, mode, total, || {
        next += 1;
        let mut v = ExactValue::formal(next);
        v.add_term(Coord::One, random_offset(&mut rng));
        v
    })
}

/// Seeded rational values with no formal part, solved as in
/// [`formal_assignment`]. Distinctness within an entry is not guaranteed.
pub fn rational_assignment<S: ConjugacyShape>(
    t: &ShapeTuple<S>,
    mode: Mode,
    total: i64,
    seed: u64,
) -> EigenvalueAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    assemble(t, mode, total, || ExactValue::constant(random_offset(&mut rng)))
}

/// A certified generic assignment for `t`: the eigenvalues sum to 0
/// (additive) or multiply to 1 with the exponents summing to 1
/// (multiplicative).
pub fn generate_generic<S: ConjugacyShape>(
    t: &ShapeTuple<S>,
    mode: Mode,
    seed: u64,
) -> Result<EigenvalueAssignment> {
    if mode == Mode::Additive {
        if let Some(g) = gcd_obstruction(t) {
            return Err(Error::Obstruction(g));
        }
    }
    let total = match mode {
        Mode::Additive => 0,
        Mode::Multiplicative => 1,
    };
    let mut last_witness = String::from("none");
    for attempt in 0..MAX_ATTEMPTS {
        let a = formal_assignment(t, mode, total, seed.wrapping_add(attempt as u64));
        if a.validate().is_err() {
            last_witness = "repeated eigenvalue".into();
            continue;
        }
        let report = is_generic(&a)?;
        if report.generic && trace_condition(&a) {
            return Ok(a);
        }
        if let Some(w) = report.witness {
            last_witness = format!("{w:?}");
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
        last_witness,
    })
}

/// Replaces entry `j` of a diagonal tuple by a single eigenvalue whose Jordan
/// blocks are the dual of that entry's multiplicities. Both tuples have the
/// same corresponding diagonal tuple.
pub fn single_eigenvalue_variant(
    t: &ShapeTuple<crate::jnf::MultiplicityVector>,
    j: usize,
) -> Result<ShapeTuple<Jnf>> {
    let mut entries: Vec<Jnf> = t.entries().iter().map(|m| m.to_jnf()).collect();
    let source = t.entries().get(j).ok_or_else(|| {
        Error::InvalidInput(format!("entry {j} out of range for {} entries", t.len()))
    })?;
    entries[j] = Jnf::new(vec![source.partition().dual()])?;
    ShapeTuple::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jnf::Pmv;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn pmv(s: &str) -> Pmv {
        s.parse().unwrap()
    }

    #[test]
    fn exact_value_arithmetic_and_json() {
        let mut v = ExactValue::formal(1);
        v.add_term(Coord::One, q(-1, 2));
        assert_eq!(v.to_string(), "-1/2 + t1");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"1":"-1/2","t1":"1"}"#);
        assert_eq!(serde_json::from_str::<ExactValue>(&json).unwrap(), v);
        let mut w = v.clone();
        w.add_scaled(&v, &q(-1, 1));
        assert!(w.is_zero());
    }

    #[test]
    fn assignment_json_form() {
        let raw = r#"{"mode":"additive","entries":[[{"coeffs":{"1":"-1/2","t1":"1"},"mult":2}],[{"coeffs":{"1":"1/2","t1":"-1"},"mult":2}]]}"#;
        let a: EigenvalueAssignment = serde_json::from_str(raw).unwrap();
        assert_eq!(a.n(), 2);
        assert!(trace_condition(&a));
        assert_eq!(serde_json::to_string(&a).unwrap(), raw);
    }

    #[test]
    fn trace_condition_examples() {
        let hg = pmv("(1,1);(1,1);(1,1)");
        assert!(trace_condition(&formal_assignment(&hg, Mode::Additive, 0, 1)));
        let zeros = EigenvalueAssignment {
            mode: Mode::Multiplicative,
            entries: vec![
                vec![Eigenvalue { coeffs: ExactValue::zero(), mult: 2 }],
                vec![Eigenvalue { coeffs: ExactValue::zero(), mult: 2 }],
            ],
        };
        assert!(trace_condition(&zeros));
        let mut shifted = zeros.clone();
        shifted.entries[0][0].coeffs = ExactValue::constant(q(1, 4));
        assert!(!trace_condition(&shifted));
        shifted.entries[1][0].coeffs = ExactValue::constant(q(1, 4));
        assert!(trace_condition(&shifted));
    }

    #[test]
    fn exhibited_relation_is_found() {
        // Entry 0 has eigenvalue 0 twice, entry 1 has a zero-sum pair.
        let c = |a, b| ExactValue::constant(q(a, b));
        let a = EigenvalueAssignment {
            mode: Mode::Additive,
            entries: vec![
                vec![
                    Eigenvalue { coeffs: c(0, 1), mult: 2 },
                    Eigenvalue { coeffs: c(1, 1), mult: 1 },
                    Eigenvalue { coeffs: c(-1, 1), mult: 1 },
                ],
                vec![
                    Eigenvalue { coeffs: c(3, 1), mult: 1 },
                    Eigenvalue { coeffs: c(-3, 1), mult: 1 },
                    Eigenvalue { coeffs: c(5, 1), mult: 1 },
                    Eigenvalue { coeffs: c(-5, 1), mult: 1 },
                ],
            ],
        };
        let report = is_generic(&a).unwrap();
        assert!(!report.generic);
        let w = report.witness.unwrap();
        assert_eq!(w.kappa, 2);
        // Smallest lexicographic choice: the pair (1, -1) with (5, -5).
        assert_eq!(w.sub_multiplicities, vec![vec![0, 1, 1], vec![0, 0, 1, 1]]);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_obstruction(&pmv("(2,2,2);(2,2,2);(2,2,2)")), Some(2));
        assert_eq!(gcd_obstruction(&pmv("(2,2,2);(2,2,2);(3,2,1)")), None);
        assert_eq!(gcd_obstruction(&pmv("(3,1);(1,1,1,1);(1,1,1,1)")), None);
        assert_eq!(gcd_obstruction(&pmv("(2);(2);(1,1)")), None);
        assert_eq!(gcd_obstruction(&pmv("(3);(3);(3)")), Some(3));
        assert_eq!(gcd_obstruction(&pmv("(2,2,2,2);(4,4);(4,4);(7,1)")), None);
        let diag = pmv("(2,2,2);(2,2,2);(3,2,1)");
        let j = diag.entries().iter().position(|m| m.parts() == [3, 2, 1]).unwrap();
        let c2 = single_eigenvalue_variant(&diag, j).unwrap();
        assert_eq!(gcd_obstruction(&c2), Some(2));
        assert_eq!(c2.corresponding_diagonal(), diag);
    }

    #[test]
    fn generation_examples() {
        let hg2 = pmv("(1,1);(1,1);(1,1)");
        let a = generate_generic(&hg2, Mode::Additive, 7).unwrap();
        assert!(a.fits(&hg2));
        assert!(is_generic(&a).unwrap().generic);
        let c2 = pmv("(2,2,2);(2,2,2);(2,2,2)");
        assert_eq!(generate_generic(&c2, Mode::Additive, 0), Err(Error::Obstruction(2)));
        let m = generate_generic(&c2, Mode::Multiplicative, 0).unwrap();
        assert!(trace_condition(&m));
        assert_eq!(m.total(), ExactValue::constant(q(1, 1)));
        let bad = formal_assignment(&c2, Mode::Multiplicative, 2, 0);
        assert!(trace_condition(&bad));
        let w = is_generic(&bad).unwrap().witness.unwrap();
        assert_eq!(w.kappa, 3);
    }

    #[test]
    fn case_counts_match_sub_vector_counts() {
        let t = pmv("(2,1,1);(2,2);(3,1)");
        let a = generate_generic(&t, Mode::Additive, 3).unwrap();
        let report = is_generic(&a).unwrap();
        for kc in report.cases {
            let want: u128 = t
                .entries()
                .iter()
                .map(|m| sub_vector_count(m.parts(), kc.kappa) as u128)
                .product();
            assert_eq!(kc.cases, want);
        }
    }

    #[test]
    fn size_guard() {
        let big = pmv("(14,1);(1,1,1,1,1,1,1,1,1,1,1,1,1,1,1);(1,1,1,1,1,1,1,1,1,1,1,1,1,1,1)");
        let a = formal_assignment(&big, Mode::Additive, 0, 0);
        assert!(matches!(is_generic(&a), Err(Error::SizeExceeded { .. })));
    }
}
