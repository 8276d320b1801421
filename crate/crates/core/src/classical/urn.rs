use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::polytope::{rational_from_f64, rational_to_f64, Rational, Scenario};
use crate::rng::SplitMix64;

/// Largest number of observables an urn may carry (`2^n` ball types).
pub const MAX_URN_OBSERVABLES: usize = 20;
/// Allowed `|Σλ − 1|` for floating-point weights before exact renormalization.
pub const FLOAT_SUM_TOLERANCE: f64 = 1e-12;

/// One colour's painted value. `Plus` sorts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A ball painted with one sign per observable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BallType(Vec<Sign>);

impl BallType {
    pub fn new(signs: Vec<Sign>) -> Self {
        BallType(signs)
    }

    /// Ball number `index` in lexicographic order over `n` signs.
    pub fn from_index(n: usize, index: usize) -> Self {
        BallType(
            (0..n)
                .map(|k| {
                    if index >> (n - 1 - k) & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect(),
        )
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, i: usize) -> i64 {
        self.0[i].value()
    }
}

impl fmt::Display for BallType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for BallType {
    type Err = Error;

    /// Accepts `+`, `-` and the typographic minus `−`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                other => Err(Error::InvalidUrn(format!("bad sign `{other}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BallType)
    }
}

/// Probabilities `λ` over ball types, held exactly. Zero weights are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrnDistribution {
    observables: usize,
    weights: BTreeMap<BallType, Rational>,
}

fn check_observables(n: usize) -> Result<()> {
    if n == 0 || n > MAX_URN_OBSERVABLES {
        return Err(Error::InvalidUrn(format!(
            "{n} observables; between 1 and {MAX_URN_OBSERVABLES} are supported"
        )));
    }
    Ok(())
}

fn collect(
    observables: usize,
    weights: impl IntoIterator<Item = (BallType, Rational)>,
) -> Result<BTreeMap<BallType, Rational>> {
    check_observables(observables)?;
    let mut map = BTreeMap::new();
    for (ball, w) in weights {
        if ball.len() != observables {
            return Err(Error::InvalidUrn(format!(
                "ball `{ball}` has {} signs, expected {observables}",
                ball.len()
            )));
        }
        if w.is_negative() {
            return Err(Error::InvalidUrn(format!("negative weight {w} for `{ball}`")));
        }
        if map.contains_key(&ball) {
            return Err(Error::InvalidUrn(format!("ball `{ball}` listed twice")));
        }
        if !w.is_zero() {
            map.insert(ball, w);
        }
    }
    Ok(map)
}

impl UrnDistribution {
    /// Exact weights; they must sum to exactly one.
    pub fn new(observables: usize, weights: impl IntoIterator<Item = (BallType, Rational)>) -> Result<Self> {
        let weights = collect(observables, weights)?;
        let total: Rational = weights.values().sum();
        if !total.is_one() {
            return Err(Error::InvalidUrn(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { observables, weights })
    }

    /// Double weights summing to one within [`FLOAT_SUM_TOLERANCE`], then
    /// rescaled exactly so the sum is one.
    pub fn from_f64(observables: usize, weights: impl IntoIterator<Item = (BallType, f64)>) -> Result<Self> {
        let exact = weights
            .into_iter()
            .map(|(b, w)| rational_from_f64(w).map(|q| (b, q)))
            .collect::<Result<Vec<_>>>()?;
        let weights = collect(observables, exact)?;
        let total: Rational = weights.values().sum();
        if (rational_to_f64(&total) - 1.0).abs() > FLOAT_SUM_TOLERANCE {
            return Err(Error::InvalidUrn(format!(
                "weights sum to {}, not 1",
                rational_to_f64(&total)
            )));
        }
        let weights = weights.into_iter().map(|(b, w)| (b, w / &total)).collect();
        Ok(Self { observables, weights })
    }

    pub fn uniform(observables: usize) -> Result<Self> {
        check_observables(observables)?;
        let count = 1usize << observables;
        let w = Rational::new(1.into(), count.into());
        Self::new(observables, (0..count).map(|k| (BallType::from_index(observables, k), w.clone())))
    }

    /// Every ball painted the same way.
    pub fn deterministic(ball: BallType) -> Result<Self> {
        Self::new(ball.len(), [(ball, Rational::one())])
    }

    /// `{"weights": {"+++": "1/2", "--+": "1/2"}}`. Weights given as strings
    /// are exact rationals; bare JSON numbers go through [`Self::from_f64`].
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::InvalidUrn(e.to_string()))?;
        let weights = doc
            .get("weights")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::InvalidUrn("missing `weights` object".into()))?;
        let mut balls = Vec::with_capacity(weights.len());
        for key in weights.keys() {
            balls.push(key.parse::<BallType>()?);
        }
        let observables = balls.first().map_or(0, BallType::len);
        if weights.values().all(Value::is_string) {
            let exact = balls
                .into_iter()
                .zip(weights.values())
                .map(|(b, v)| {
                    let s = v.as_str().expect("checked");
                    s.trim()
                        .parse::<Rational>()
                        .map(|q| (b, q))
                        .map_err(|_| Error::InvalidUrn(format!("`{s}` is not a rational")))
                })
                .collect::<Result<Vec<_>>>()?;
            Self::new(observables, exact)
        } else {
            let floats = balls
                .into_iter()
                .zip(weights.values())
                .map(|(b, v)| {
                    v.as_f64()
                        .map(|w| (b, w))
                        .ok_or_else(|| Error::InvalidUrn(format!("weight {v} is not a number")))
                })
                .collect::<Result<Vec<_>>>()?;
            Self::from_f64(observables, floats)
        }
    }

    pub fn to_json(&self) -> Value {
        let weights: Map<String, Value> = self
            .weights
            .iter()
            .map(|(b, w)| (b.to_string(), Value::String(w.to_string())))
            .collect();
        serde_json::json!({ "weights": weights })
    }

    pub fn observables(&self) -> usize {
        self.observables
    }

    /// Ball types with positive weight, in lexicographic order.
    pub fn weights(&self) -> impl Iterator<Item = (&BallType, &Rational)> {
        self.weights.iter()
    }

    pub fn weight(&self, ball: &BallType) -> Rational {
        self.weights.get(ball).cloned().unwrap_or_else(Rational::zero)
    }

    /// `t·self + (1 − t)·other`.
    pub fn mixture(&self, other: &Self, t: &Rational) -> Result<Self> {
        if other.observables != self.observables {
            return Err(Error::DimensionMismatch {
                expected: self.observables,
                found: other.observables,
            });
        }
        if t.is_negative() || *t > Rational::one() {
            return Err(Error::Domain(format!("mixing weight {t} outside [0, 1]")));
        }
        let s = Rational::one() - t;
        let mut weights: BTreeMap<BallType, Rational> = BTreeMap::new();
        for (b, w) in &self.weights {
            *weights.entry(b.clone()).or_insert_with(Rational::zero) += w * t;
        }
        for (b, w) in &other.weights {
            *weights.entry(b.clone()).or_insert_with(Rational::zero) += w * &s;
        }
        Self::new(self.observables, weights)
    }
}

fn check_observable(urn: &UrnDistribution, i: usize) -> Result<()> {
    if i >= urn.observables {
        return Err(Error::Domain(format!(
            "observable {i} out of range for {} observables",
            urn.observables
        )));
    }
    Ok(())
}

/// `E(i,j) = Σ λ·sᵢ·sⱼ` over ball types.
pub fn exact_pairwise_expectation(urn: &UrnDistribution, pair: (usize, usize)) -> Result<Rational> {
    let (i, j) = pair;
    if i == j || i >= urn.observables || j >= urn.observables {
        return Err(Error::InvalidPair(i, j));
    }
    Ok(urn
        .weights
        .iter()
        .map(|(b, w)| w * Rational::from_integer((b.value(i) * b.value(j)).into()))
        .sum())
}

/// `E(i) = Σ λ·sᵢ`. Not needed for pairwise polytopes; reported alongside.
pub fn marginal_expectation(urn: &UrnDistribution, i: usize) -> Result<Rational> {
    check_observable(urn, i)?;
    Ok(urn
        .weights
        .iter()
        .map(|(b, w)| w * Rational::from_integer(b.value(i).into()))
        .sum())
}

/// Pairwise expectations in the scenario's monomial order.
pub fn correlation_point(urn: &UrnDistribution, scenario: &Scenario) -> Result<Vec<Rational>> {
    if scenario.observables() != urn.observables {
        return Err(Error::DimensionMismatch {
            expected: scenario.observables(),
            found: urn.observables,
        });
    }
    (0..scenario.dimension())
        .map(|k| exact_pairwise_expectation(urn, scenario.pair(k)?))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct UrnSample {
    pub draws: u64,
    pub seed: u64,
    /// Draw counts per ball type with positive weight, in lexicographic order.
    pub counts: Vec<(BallType, u64)>,
}

impl UrnSample {
    /// Average of `sᵢ·sⱼ` over the draws.
    pub fn pairwise(&self, i: usize, j: usize) -> f64 {
        let sum: i64 = self
            .counts
            .iter()
            .map(|(b, c)| b.value(i) * b.value(j) * *c as i64)
            .sum();
        sum as f64 / self.draws as f64
    }

    /// Empirical counterpart of [`correlation_point`].
    pub fn correlation_point(&self, scenario: &Scenario) -> Result<Vec<f64>> {
        (0..scenario.dimension())
            .map(|k| scenario.pair(k).map(|(i, j)| self.pairwise(i, j)))
            .collect()
    }
}

/// `draws` independent balls by inverse CDF over the lexicographic order.
pub fn sample_urn(urn: &UrnDistribution, draws: u64, seed: u64) -> Result<UrnSample> {
    if draws == 0 {
        return Err(Error::Domain("at least one draw is required".into()));
    }
    let mut cumulative = Vec::with_capacity(urn.weights.len());
    let mut acc = Rational::zero();
    for w in urn.weights.values() {
        acc += w;
        cumulative.push(rational_to_f64(&acc));
    }
    let last = cumulative.len() - 1;
    cumulative[last] = f64::INFINITY;
    let mut counts = vec![0u64; cumulative.len()];
    let mut rng = SplitMix64::new(seed);
    for _ in 0..draws {
        let u = rng.next_f64();
        let k = cumulative.partition_point(|&c| c <= u);
        counts[k] += 1;
    }
    Ok(UrnSample {
        draws,
        seed,
        counts: urn.weights.keys().cloned().zip(counts).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ball(s: &str) -> BallType {
        s.parse().unwrap()
    }

    fn split() -> UrnDistribution {
        UrnDistribution::new(3, [(ball("++-"), q(1, 2)), (ball("--+"), q(1, 2))]).unwrap()
    }

    #[test]
    fn ball_order_is_lexicographic_plus_first() {
        let order: Vec<String> = (0..8).map(|k| BallType::from_index(3, k).to_string()).collect();
        assert_eq!(order, ["+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"]);
        let mut sorted = order.iter().map(|s| ball(s)).collect::<Vec<_>>();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted[1], ball("++-"));
        assert_eq!(ball("+−+"), ball("+-+"));
    }

    #[test]
    fn pairwise_examples() {
        let uniform = UrnDistribution::uniform(3).unwrap();
        let pure = UrnDistribution::deterministic(ball("+++")).unwrap();
        for pair in [(0, 1), (0, 2), (1, 2)] {
            assert!(exact_pairwise_expectation(&uniform, pair).unwrap().is_zero());
            assert!(exact_pairwise_expectation(&pure, pair).unwrap().is_one());
        }
        let u = split();
        assert_eq!(exact_pairwise_expectation(&u, (0, 1)).unwrap(), q(1, 1));
        assert_eq!(exact_pairwise_expectation(&u, (0, 2)).unwrap(), q(-1, 1));
        assert_eq!(exact_pairwise_expectation(&u, (1, 2)).unwrap(), q(-1, 1));
        assert_eq!(exact_pairwise_expectation(&u, (1, 1)), Err(Error::InvalidPair(1, 1)));
        assert_eq!(exact_pairwise_expectation(&u, (0, 3)), Err(Error::InvalidPair(0, 3)));
        assert!(marginal_expectation(&u, 0).unwrap().is_zero());
    }

    #[test]
    fn correlation_points() {
        let sz = Scenario::suppes_zanotti();
        assert_eq!(correlation_point(&split(), &sz).unwrap(), vec![q(1, 1), q(-1, 1), q(-1, 1)]);
        assert!(correlation_point(&UrnDistribution::uniform(3).unwrap(), &sz)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        assert!(correlation_point(&split(), &Scenario::chsh()).is_err());
    }

    #[test]
    fn validation() {
        assert!(UrnDistribution::new(3, [(ball("+++"), q(1, 2))]).is_err());
        assert!(UrnDistribution::new(3, [(ball("++"), q(1, 1))]).is_err());
        assert!(UrnDistribution::new(3, [(ball("+++"), q(3, 2)), (ball("---"), q(-1, 2))]).is_err());
        assert!(UrnDistribution::uniform(21).is_err());
        assert!(UrnDistribution::from_f64(2, [(ball("++"), 0.1), (ball("--"), 0.9)]).is_ok());
        assert!(UrnDistribution::from_f64(2, [(ball("++"), 0.1), (ball("--"), 0.8)]).is_err());
        let third = 1.0 / 3.0;
        let urn = UrnDistribution::from_f64(1, [(ball("+"), third), (ball("-"), 1.0 - third)]).unwrap();
        assert!(urn.weights().map(|(_, w)| w.clone()).sum::<Rational>().is_one());
    }

    #[test]
    fn json_round_trip() {
        let urn = UrnDistribution::from_json(r#"{"weights": {"++-": "1/2", "--+": "1/2"}}"#).unwrap();
        assert_eq!(urn, split());
        assert_eq!(UrnDistribution::from_json(&urn.to_json().to_string()).unwrap(), urn);
        let floats = UrnDistribution::from_json(r#"{"weights": {"+": 0.25, "-": 0.75}}"#).unwrap();
        assert_eq!(floats.weight(&ball("+")), q(1, 4));
        assert!(UrnDistribution::from_json(r#"{"weights": {"+x": "1"}}"#).is_err());
        assert!(UrnDistribution::from_json(r#"{"weights": {"+": "one"}}"#).is_err());
    }

    #[test]
    fn mixture_is_linear() {
        let sz = Scenario::suppes_zanotti();
        let a = split();
        let b = UrnDistribution::deterministic(ball("+-+")).unwrap();
        let t = q(1, 3);
        let mixed = correlation_point(&a.mixture(&b, &t).unwrap(), &sz).unwrap();
        let pa = correlation_point(&a, &sz).unwrap();
        let pb = correlation_point(&b, &sz).unwrap();
        for k in 0..3 {
            assert_eq!(mixed[k], &t * &pa[k] + (q(1, 1) - &t) * &pb[k]);
        }
    }

    #[test]
    fn sampling_deterministic_urn() {
        let pure = UrnDistribution::deterministic(ball("+++")).unwrap();
        let s = sample_urn(&pure, 1000, 3).unwrap();
        assert_eq!(s.correlation_point(&Scenario::suppes_zanotti()).unwrap(), vec![1.0; 3]);
        assert_eq!(s.counts, vec![(ball("+++"), 1000)]);
        assert!(sample_urn(&pure, 0, 3).is_err());
    }

    #[test]
    fn sampling_is_reproducible() {
        let u = UrnDistribution::uniform(3).unwrap();
        assert_eq!(sample_urn(&u, 5000, 17).unwrap(), sample_urn(&u, 5000, 17).unwrap());
        assert_ne!(sample_urn(&u, 5000, 17).unwrap(), sample_urn(&u, 5000, 18).unwrap());
        let total: u64 = sample_urn(&u, 5000, 17).unwrap().counts.iter().map(|c| c.1).sum();
        assert_eq!(total, 5000);
    }
}
