use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, VarLabel};
use super::point::{format_scalar, parse_scalar, QtPoint, Scalar};
use crate::error::{Error, Result};

/// Multivariate power series truncated at total degree `D`, with exact
/// rational coefficients. Terms are kept in canonical monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<Monomial, Scalar>,
    degree: u32,
}

/// First coefficient (in canonical order) where two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: Monomial,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Two independently built sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn mismatch(&self) -> Result<Option<Mismatch>> {
        self.lhs.first_mismatch(&self.rhs)
    }

    /// Number of distinct monomials on either side.
    pub fn terms(&self) -> usize {
        let mut keys: Vec<&Monomial> = self.lhs.terms.keys().chain(self.rhs.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.len()
    }
}

impl TruncatedSeries {
    pub fn zero(degree: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            degree,
        }
    }

    pub fn one(degree: u32) -> Self {
        Self::constant(Scalar::one(), degree)
    }

    pub fn constant(c: Scalar, degree: u32) -> Self {
        let mut s = Self::zero(degree);
        s.add_term(Monomial::one(), c);
        s
    }

    /// `c * m`, or zero when `m` lies beyond the truncation degree.
    pub fn term(m: Monomial, c: Scalar, degree: u32) -> Result<Self> {
        let mut s = Self::zero(degree);
        s.try_add_term(m, c)?;
        Ok(s)
    }

    pub fn truncation_degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Lowest total degree among the terms, `None` for the zero series.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().and_then(Monomial::int_degree)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * m`; terms above the truncation degree are dropped.
    pub fn try_add_term(&mut self, m: Monomial, c: Scalar) -> Result<()> {
        if !m.is_admissible() {
            return Err(Error::InvalidMonomial(format!(
                "{m} has a fractional or negative exponent"
            )));
        }
        if m.int_degree().expect("admissible") <= self.degree {
            self.add_term(m, c);
        }
        Ok(())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::TruncationMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_same(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            degree: self.degree,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.degree;
        let mut out = Self::zero(d);
        let right: Vec<(&Monomial, &Scalar, u32)> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c, m.int_degree().expect("series terms are admissible")))
            .collect();
        for (ma, ca) in &self.terms {
            let da = ma.int_degree().expect("series terms are admissible");
            // `right` is sorted by degree, so stop at the first overflow
            for &(mb, cb, db) in &right {
                if da + db > d {
                    break;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies every term by a (possibly non-admissible) monomial; the
    /// products themselves must be admissible.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        let mut out = Self::zero(self.degree);
        for (k, c) in &self.terms {
            out.try_add_term(k.mul(m), c.clone())?;
        }
        Ok(out)
    }

    /// Renames variable `from` to `to`, summing colliding coefficients.
    pub fn substitute(&self, from: VarLabel, to: VarLabel) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.substitute(from, to), c.clone());
        }
        out
    }

    /// Same coefficients, smaller truncation degree.
    pub fn retruncate(&self, degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.int_degree().is_some_and(|d| d <= degree))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            degree,
        }
    }

    /// Exact coefficientwise equality.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.terms == other.terms)
    }

    /// First monomial in canonical order whose coefficients differ.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<Mismatch>> {
        self.check_same(other)?;
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let (m, lhs, rhs) = match (a.peek(), b.peek()) {
                (None, None) => return Ok(None),
                (Some((ma, ca)), None) => ((*ma).clone(), (*ca).clone(), Scalar::zero()),
                (None, Some((mb, cb))) => ((*mb).clone(), Scalar::zero(), (*cb).clone()),
                (Some((ma, ca)), Some((mb, cb))) => {
                    if ma < mb {
                        ((*ma).clone(), (*ca).clone(), Scalar::zero())
                    } else if mb < ma {
                        ((*mb).clone(), Scalar::zero(), (*cb).clone())
                    } else if ca != cb {
                        ((*ma).clone(), (*ca).clone(), (*cb).clone())
                    } else {
                        a.next();
                        b.next();
                        continue;
                    }
                }
            };
            return Ok(Some(Mismatch {
                monomial: m,
                lhs,
                rhs,
            }));
        }
    }

    /// Adds `delta` to the `index`-th term in canonical order, used to
    /// exercise failure reporting.
    pub fn perturb(&mut self, index: usize, delta: &Scalar) -> Option<Monomial> {
        let m = self.terms.keys().nth(index)?.clone();
        self.add_term(m.clone(), delta.clone());
        Some(m)
    }

    /// Product of several series.
    pub fn product<'a>(degree: u32, factors: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut acc = Self::one(degree);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesJson::from(self)).expect("series serializes")
    }

    pub fn from_json(value: &serde_json::Value, degree: u32) -> Result<Self> {
        let terms: Vec<TermJson> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("series: {e}")))?;
        let mut out = Self::zero(degree);
        for t in terms {
            let m = Monomial::from_factor_strings(&t.monomial)?;
            out.try_add_term(m, parse_scalar(&t.coefficient)?)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: Vec<String>,
    coefficient: String,
}

#[derive(Serialize)]
#[serde(transparent)]
struct SeriesJson(Vec<TermJson>);

impl From<&TruncatedSeries> for SeriesJson {
    fn from(s: &TruncatedSeries) -> Self {
        SeriesJson(
            s.terms
                .iter()
                .map(|(m, c)| TermJson {
                    monomial: m.to_factor_strings(),
                    coefficient: format_scalar(c),
                })
                .collect(),
        )
    }
}

fn check_f_argument(x: &Monomial) -> Result<u32> {
    if !x.is_admissible() {
        return Err(Error::InvalidMonomial(format!(
            "{x} must have non-negative integral exponents"
        )));
    }
    match x.int_degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::InvalidMonomial("argument of F must have degree >= 1".into())),
    }
}

/// `F(x;q,t) = (tx;q)_inf / (x;q)_inf = sum_n f(n;0) x^n`, truncated at `degree`.
pub fn f_series(x: &Monomial, pt: &QtPoint, degree: u32) -> Result<TruncatedSeries> {
    let d = check_f_argument(x)?;
    let mut out = TruncatedSeries::zero(degree);
    let mut power = Monomial::one();
    for n in 0..=degree / d {
        out.add_term(power.clone(), pt.f(n, 0)?);
        power = power.mul(x);
    }
    Ok(out)
}

/// `F(a x) = sum_n f(n;0) a^n x^n` for a rational `a`.
pub fn f_series_scaled(x: &Monomial, a: &Scalar, pt: &QtPoint, degree: u32) -> Result<TruncatedSeries> {
    let d = check_f_argument(x)?;
    let mut out = TruncatedSeries::zero(degree);
    let mut power = Monomial::one();
    let mut scale = Scalar::one();
    for n in 0..=degree / d {
        out.add_term(power.clone(), pt.f(n, 0)? * &scale);
        power = power.mul(x);
        scale *= a;
    }
    Ok(out)
}

/// `1/(1-x)` truncated at `degree`.
pub fn geometric_series(x: &Monomial, degree: u32) -> Result<TruncatedSeries> {
    let d = check_f_argument(x)?;
    let mut out = TruncatedSeries::zero(degree);
    let mut power = Monomial::one();
    for _ in 0..=degree / d {
        out.add_term(power.clone(), Scalar::one());
        power = power.mul(x);
    }
    Ok(out)
}

/// `prod_i F(m_i;q,t)`.
pub fn product_f(monomials: &[Monomial], pt: &QtPoint, degree: u32) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(degree);
    for m in monomials {
        acc = acc.mul(&f_series(m, pt, degree)?)?;
    }
    Ok(acc)
}

/// `prod_i 1/(1-m_i)`.
pub fn product_geometric(monomials: &[Monomial], degree: u32) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(degree);
    for m in monomials {
        acc = acc.mul(&geometric_series(m, degree)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtcore::point::{sample_qt_point, scalar, scalar_int};
    use proptest::prelude::*;
    use VarLabel::*;

    fn s(terms: &[(Monomial, i64)], d: u32) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(d);
        for (m, c) in terms {
            out.try_add_term(m.clone(), scalar_int(*c)).unwrap();
        }
        out
    }

    fn z(k: i32) -> Monomial {
        Monomial::z(k)
    }

    #[test]
    fn truncating_product() {
        let a = s(&[(Monomial::one(), 1), (z(0), 1)], 1);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, s(&[(Monomial::one(), 1), (z(0), 2)], 1));
    }

    #[test]
    fn product_of_geometric_factors() {
        let pt = QtPoint::diagonal(scalar(1, 3)).unwrap();
        let got = product_f(&[z(1), z(0).mul(&z(1))], &pt, 2).unwrap();
        let want = s(
            &[(Monomial::one(), 1), (z(1), 1), (z(1).pow(2), 1), (z(0).mul(&z(1)), 1)],
            2,
        );
        assert!(got.equal(&want).unwrap());
        assert!(got.equal(&got).unwrap());
    }

    #[test]
    fn f_series_on_diagonal_is_geometric() {
        let pt = QtPoint::diagonal(scalar(-2, 9)).unwrap();
        for d in 0..=12 {
            assert_eq!(
                f_series(&z(0), &pt, d).unwrap(),
                geometric_series(&z(0), d).unwrap()
            );
        }
    }

    #[test]
    fn f_series_degree_bound_and_coefficients() {
        let pt = sample_qt_point(3);
        let x = z(0).mul(&z(1));
        let got = f_series(&x, &pt, 3).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got.coefficient(&x), pt.f(1, 0).unwrap());
        let one = Scalar::one();
        let f2 = (&one - pt.t()) / (&one - pt.q()) * ((&one - pt.q() * pt.t()) / (&one - pt.q() * pt.q()));
        let big = f_series(&z(0), &pt, 4).unwrap();
        assert_eq!(big.coefficient(&z(0).pow(2)), f2);
    }

    #[test]
    fn f_series_rejects_bad_arguments() {
        let pt = sample_qt_point(0);
        assert!(f_series(&Monomial::one(), &pt, 3).is_err());
        assert!(f_series(&Monomial::from_halves(Int(0), 1), &pt, 3).is_err());
        assert!(f_series(&z(0).inverse(), &pt, 3).is_err());
    }

    #[test]
    fn mismatched_truncation() {
        let a = TruncatedSeries::one(2);
        let b = TruncatedSeries::one(3);
        assert!(matches!(a.add(&b), Err(Error::TruncationMismatch { .. })));
        assert!(a.mul(&b).is_err());
        assert!(a.equal(&b).is_err());
    }

    #[test]
    fn substitution() {
        let a = s(&[(Monomial::var(ZeroPrime).mul(&z(1)), 1)], 3);
        assert_eq!(a.substitute(ZeroPrime, Int(0)), s(&[(z(0).mul(&z(1)), 1)], 3));
        let b = s(&[(z(0), 1), (Monomial::var(ZeroPrime), 1)], 3);
        assert_eq!(b.substitute(ZeroPrime, Int(0)), s(&[(z(0), 2)], 3));
        let c = s(&[(z(4), 5)], 3);
        assert_eq!(c.substitute(ZeroPrime, Int(0)), c);
    }

    #[test]
    fn substitute_commutes_with_f() {
        let pt = sample_qt_point(11);
        let x = Monomial::var(ZeroPrime).mul(&z(2));
        let lhs = f_series(&x, &pt, 6).unwrap().substitute(ZeroPrime, Int(0));
        let rhs = f_series(&x.substitute(ZeroPrime, Int(0)), &pt, 6).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_mismatch_is_canonical() {
        let a = s(&[(z(0), 1), (z(1).pow(2), 3)], 4);
        let b = s(&[(z(0), 1), (z(0).pow(2), 2), (z(1).pow(2), 4)], 4);
        let mm = a.first_mismatch(&b).unwrap().unwrap();
        assert_eq!(mm.monomial, z(0).pow(2));
        assert_eq!(mm.lhs, scalar_int(0));
        assert_eq!(mm.rhs, scalar_int(2));
        assert_eq!(a.first_mismatch(&a).unwrap(), None);
    }

    #[test]
    fn json_round_trip() {
        let pt = sample_qt_point(2);
        let f = f_series(&z(-1).mul(&Monomial::var(ZeroPrime)), &pt, 5).unwrap();
        let j = f.to_json();
        assert_eq!(TruncatedSeries::from_json(&j, 5).unwrap(), f);
        let text = serde_json::to_string(&s(&[(z(0), 2)], 2).to_json()).unwrap();
        assert_eq!(text, r#"[{"coefficient":"2/1","monomial":["0^1"]}]"#);
    }

    #[test]
    fn non_admissible_terms_rejected() {
        let mut a = TruncatedSeries::zero(3);
        assert!(a.try_add_term(z(0).inverse(), scalar_int(1)).is_err());
        a.try_add_term(z(0).pow(5), scalar_int(1)).unwrap();
        assert!(a.is_zero());
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(((0u8..3, 0u8..3, 0u8..2), -4i64..5), 0..6).prop_map(|terms| {
            let mut out = TruncatedSeries::zero(4);
            for ((a, b, c), v) in terms {
                let m = z(0).pow(a as i32).mul(&z(1).pow(b as i32)).mul(&Monomial::var_pow(ZeroPrime, c as i32));
                out.try_add_term(m, scalar(v, 3)).unwrap();
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }

        #[test]
        fn json_round_trips(a in arb_series()) {
            prop_assert_eq!(TruncatedSeries::from_json(&a.to_json(), 4).unwrap(), a);
        }
    }
}
