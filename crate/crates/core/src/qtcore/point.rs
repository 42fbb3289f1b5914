use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Scalar = num_rational::BigRational;

pub fn scalar(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn scalar_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Canonical `numerator/denominator` text, also used for integers (`3/1`).
pub fn format_scalar(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational number: {text:?}")))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(parse_int(n)?, d))
        }
        None => Ok(Scalar::from_integer(parse_int(text)?)),
    }
}

/// Rational specialization of the parameters `q` and `t`.
///
/// Values of `f(n;m)` are memoized per point; clones share the cache.
#[derive(Clone)]
pub struct QtPoint {
    q: Scalar,
    t: Scalar,
    cache: Arc<RwLock<HashMap<u32, Vec<Scalar>>>>,
}

impl QtPoint {
    pub fn new(q: Scalar, t: Scalar) -> Result<Self> {
        for (name, v) in [("q", &q), ("t", &t)] {
            if v.is_zero() || v.abs().is_one() {
                return Err(Error::InvalidPoint(format!(
                    "{name} = {} must avoid 0, 1 and -1",
                    format_scalar(v)
                )));
            }
        }
        Ok(Self {
            q,
            t,
            cache: Arc::default(),
        })
    }

    /// Parses `p/q,r/s`.
    pub fn parse(text: &str) -> Result<Self> {
        let (q, t) = text
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `q,t`, got {text:?}")))?;
        Self::new(parse_scalar(q)?, parse_scalar(t)?)
    }

    /// The diagonal point `q = t`, where every weight collapses to 1.
    pub fn diagonal(q: Scalar) -> Result<Self> {
        Self::new(q.clone(), q)
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }

    pub fn is_diagonal(&self) -> bool {
        self.q == self.t
    }

    fn degenerate(&self, i: u32, m: u32) -> Error {
        Error::DegenerateDenominator {
            i,
            m,
            q: format_scalar(&self.q),
            t: format_scalar(&self.t),
        }
    }

    /// `f(n;m) = prod_{i<n} (1 - q^i t^{m+1}) / (1 - q^{i+1} t^m)`.
    pub fn f(&self, n: u32, m: u32) -> Result<Scalar> {
        if let Some(v) = self
            .cache
            .read()
            .expect("f cache poisoned")
            .get(&m)
            .and_then(|row| row.get(n as usize))
        {
            return Ok(v.clone());
        }
        let mut cache = self.cache.write().expect("f cache poisoned");
        let row = cache.entry(m).or_insert_with(|| vec![Scalar::one()]);
        let tm = pow(&self.t, m);
        let tm1 = &tm * &self.t;
        while row.len() <= n as usize {
            let i = (row.len() - 1) as u32;
            let qi = pow(&self.q, i);
            let den = Scalar::one() - &qi * &self.q * &tm;
            if den.is_zero() {
                return Err(self.degenerate(i + 1, m));
            }
            let num = Scalar::one() - qi * &tm1;
            let next = row.last().expect("row starts non-empty") * num / den;
            row.push(next);
        }
        Ok(row[n as usize].clone())
    }
}

fn pow(x: &Scalar, e: u32) -> Scalar {
    num_traits::pow(x.clone(), e as usize)
}

impl PartialEq for QtPoint {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.t == other.t
    }
}

impl Eq for QtPoint {}

impl fmt::Debug for QtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoint(q={}, t={})", self.q, self.t)
    }
}

impl fmt::Display for QtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", format_scalar(&self.q), format_scalar(&self.t))
    }
}

/// Free-function form of [`QtPoint::f`].
pub fn f_eval(n: u32, m: u32, pt: &QtPoint) -> Result<Scalar> {
    pt.f(n, m)
}

const MAX_MAGNITUDE: i64 = 20;

fn draw_unit_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-MAX_MAGNITUDE..=MAX_MAGNITUDE);
    let den = rng.gen_range(1..=MAX_MAGNITUDE);
    scalar(num, den)
}

/// Deterministic generic point for a seed.
///
/// Candidates have numerators and denominators of magnitude at most 20 and are
/// resampled until `0 < |q|, |t| < 1` and `q != t`. Points strictly inside the
/// unit disc are never roots of unity, so every `f(n;m)` denominator is nonzero.
pub fn sample_qt_point(seed: u64) -> QtPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let q = draw_unit_rational(&mut rng);
        let t = draw_unit_rational(&mut rng);
        if let Some(pt) = accept_candidate(q, t) {
            return pt;
        }
    }
}

fn accept_candidate(q: Scalar, t: Scalar) -> Option<QtPoint> {
    let inside = |v: &Scalar| !v.is_zero() && v.abs() < Scalar::one();
    if !inside(&q) || !inside(&t) || q == t {
        return None;
    }
    QtPoint::new(q, t).ok()
}

/// Points for `trials` independent trials starting at `seed`.
pub fn sample_points(seed: u64, trials: usize) -> Vec<QtPoint> {
    (0..trials as u64)
        .map(|k| sample_qt_point(seed.wrapping_mul(1_000_003).wrapping_add(k)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(q: (i64, i64), t: (i64, i64)) -> QtPoint {
        QtPoint::new(scalar(q.0, q.1), scalar(t.0, t.1)).unwrap()
    }

    /// Termwise product straight from the definition, no caching.
    fn f_direct(n: u32, m: u32, p: &QtPoint) -> Scalar {
        let mut acc = Scalar::one();
        for i in 0..n {
            let num = Scalar::one() - pow(p.q(), i) * pow(p.t(), m + 1);
            let den = Scalar::one() - pow(p.q(), i + 1) * pow(p.t(), m);
            acc = acc * num / den;
        }
        acc
    }

    #[test]
    fn empty_product_is_one() {
        let p = pt((1, 2), (1, 3));
        assert_eq!(p.f(0, 5).unwrap(), Scalar::one());
    }

    #[test]
    fn single_factor() {
        let p = pt((2, 5), (3, 7));
        let expect = (Scalar::one() - p.t()) / (Scalar::one() - p.q());
        assert_eq!(p.f(1, 0).unwrap(), expect);
    }

    #[test]
    fn worked_value() {
        let p = pt((1, 2), (1, 3));
        // (8/9)/(5/6) * (17/18)/(11/12)
        let oracle = scalar(8, 9) / scalar(5, 6) * (scalar(17, 18) / scalar(11, 12));
        assert_eq!(oracle, scalar(544, 495));
        assert_eq!(p.f(2, 1).unwrap(), oracle);
    }

    #[test]
    fn cached_matches_direct() {
        let p = pt((-3, 7), (5, 11));
        for m in 0..6 {
            for n in (0..10).rev() {
                assert_eq!(p.f(n, m).unwrap(), f_direct(n, m, &p), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn diagonal_point_gives_one() {
        let p = QtPoint::diagonal(scalar(2, 7)).unwrap();
        for n in 0..=12 {
            for m in 0..=12 {
                assert!(p.f(n, m).unwrap().is_one());
            }
        }
    }

    #[test]
    fn recurrence() {
        let p = sample_qt_point(9);
        for m in 0..5 {
            for n in 0..=10u32 {
                let ratio = (Scalar::one() - pow(p.q(), n) * pow(p.t(), m + 1))
                    / (Scalar::one() - pow(p.q(), n + 1) * pow(p.t(), m));
                assert_eq!(p.f(n + 1, m).unwrap(), p.f(n, m).unwrap() * ratio);
            }
        }
    }

    #[test]
    fn degenerate_denominator_is_reported() {
        // q^2 t = 1 with q = 2, t = 1/4
        let p = pt((2, 1), (1, 4));
        assert!(matches!(
            p.f(3, 1),
            Err(Error::DegenerateDenominator { i: 2, m: 1, .. })
        ));
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        for seed in 0..50 {
            let a = sample_qt_point(seed);
            assert_eq!(a, sample_qt_point(seed));
            assert!(a.q().abs() < Scalar::one() && !a.q().is_zero());
            assert!(a.t().abs() < Scalar::one() && !a.t().is_zero());
            assert_ne!(a.q(), a.t());
            assert!(a.q().numer().abs() <= BigInt::from(20));
            assert!(a.q().denom() <= &BigInt::from(20));
        }
    }

    #[test]
    fn invalid_candidates_are_rejected() {
        assert!(accept_candidate(scalar(1, 1), scalar(1, 3)).is_none());
        assert!(accept_candidate(scalar(1, 3), scalar(-1, 1)).is_none());
        assert!(accept_candidate(scalar(0, 1), scalar(1, 3)).is_none());
        assert!(accept_candidate(scalar(1, 3), scalar(1, 3)).is_none());
        assert!(accept_candidate(scalar(1, 3), scalar(2, 5)).is_some());
        assert!(QtPoint::new(scalar(1, 1), scalar(1, 2)).is_err());
    }

    #[test]
    fn scalar_text_round_trip() {
        let s = scalar(-6, 4);
        assert_eq!(format_scalar(&s), "-3/2");
        assert_eq!(parse_scalar("-3/2").unwrap(), s);
        assert_eq!(format_scalar(&scalar_int(3)), "3/1");
        assert_eq!(parse_scalar("7").unwrap(), scalar_int(7));
        assert!(parse_scalar("1/0").is_err());
        let p = QtPoint::parse("2/5,3/7").unwrap();
        assert_eq!(p.to_string(), "2/5,3/7");
    }
}
