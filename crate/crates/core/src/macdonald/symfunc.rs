use std::collections::BTreeMap;
use std::fmt;

use super::pieri::{phi_minus, phi_plus};
use crate::error::{Error, Result};
use crate::qtcore::{format_scalar, Monomial, QtPoint, TruncatedSeries};
use crate::tableaux::{complement_and_epsilon, Partition, Sign, StrictPartition};

/// Finite combination `sum_λ c_λ P_λ` with truncated-series coefficients.
/// Partitions larger than `bound` are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, TruncatedSeries>,
    degree: u32,
    bound: u32,
}

impl SymFunc {
    pub fn zero(degree: u32, bound: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            degree,
            bound,
        }
    }

    /// The element `1 = P_∅`.
    pub fn one(degree: u32, bound: u32) -> Self {
        Self::basis(Partition::empty(), degree, bound)
    }

    pub fn basis(lambda: Partition, degree: u32, bound: u32) -> Self {
        let mut out = Self::zero(degree, bound);
        out.add_term(lambda, TruncatedSeries::one(degree))
            .expect("same truncation degree");
        out
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &TruncatedSeries)> {
        self.terms.iter()
    }

    /// Coefficient of `P_λ` (zero if absent).
    pub fn coefficient(&self, lambda: &Partition) -> TruncatedSeries {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| TruncatedSeries::zero(self.degree))
    }

    pub fn add_term(&mut self, lambda: Partition, c: TruncatedSeries) -> Result<()> {
        if lambda.size() > self.bound || c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if c.truncation_degree() != self.degree {
                    return Err(Error::TruncationMismatch {
                        left: self.degree,
                        right: c.truncation_degree(),
                    });
                }
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c)?;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a series.
    pub fn scale_series(&self, s: &TruncatedSeries) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.bound);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.mul(s)?)?;
        }
        Ok(out)
    }

    /// `G⁺(u) h = sum φ⁺_{α,β} u^{|α|-|β|} c_β P_α`.
    pub fn apply_gplus(&self, u: &Monomial, pt: &QtPoint) -> Result<Self> {
        let udeg = u
            .int_degree()
            .ok_or_else(|| Error::InvalidMonomial(format!("{u} is not integral")))?;
        let mut out = Self::zero(self.degree, self.bound);
        for (beta, c) in &self.terms {
            let mut cap = self.bound - beta.size();
            if udeg > 0 {
                let low = c.min_degree().unwrap_or(0);
                cap = cap.min(self.degree.saturating_sub(low) / udeg);
            }
            for alpha in beta.strips_above(cap) {
                let n = (alpha.size() - beta.size()) as i32;
                let coeff = c.mul_monomial(&u.pow(n))?.scale(&phi_plus(&alpha, beta, pt)?);
                out.add_term(alpha, coeff)?;
            }
        }
        Ok(out)
    }

    /// `G⁻(u) h = sum φ⁻_{β,α} u^{|α|-|β|} c_α P_β`. `u` may carry negative
    /// exponents as long as every product with a coefficient is admissible.
    pub fn apply_gminus(&self, u: &Monomial, pt: &QtPoint) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.bound);
        for (alpha, c) in &self.terms {
            for beta in alpha.strips_below() {
                let n = (alpha.size() - beta.size()) as i32;
                let coeff = c.mul_monomial(&u.pow(n))?.scale(&phi_minus(&beta, alpha, pt)?);
                out.add_term(beta, coeff)?;
            }
        }
        Ok(out)
    }

    /// `D(y) P_λ = y^{|λ|} P_λ`.
    pub fn apply_d(&self, y: &Monomial) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.bound);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.mul_monomial(&y.pow(l.size() as i32))?)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.terms
                .iter()
                .map(|(l, c)| (l.to_string(), c.to_json()))
                .collect(),
        )
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, c) in &self.terms {
            write!(f, "P{l}: ")?;
            let parts: Vec<String> = c
                .iter()
                .map(|(m, v)| format!("{}*{m}", format_scalar(v)))
                .collect();
            writeln!(f, "{}", parts.join(" + "))?;
        }
        Ok(())
    }
}

/// `D(z_0) G^{ε_1}(1) D(z_1) ⋯ D(z_{N-1}) G^{ε_N}(1) 1` with partition bound
/// `bound` (`bound = degree` is always safe, since each `G` is followed by a
/// `D(z_k)`).
pub fn operator_word_eval_bounded(
    mu: &StrictPartition,
    n: u32,
    pt: &QtPoint,
    degree: u32,
    bound: u32,
) -> Result<SymFunc> {
    let (_, eps) = complement_and_epsilon(mu, n)?;
    let one = Monomial::one();
    let mut h = SymFunc::one(degree, bound);
    for k in (1..=n as usize).rev() {
        h = match eps[k - 1] {
            Sign::Plus => h.apply_gplus(&one, pt)?,
            Sign::Minus => h.apply_gminus(&one, pt)?,
        };
        h = h.apply_d(&Monomial::z(k as i32 - 1))?;
    }
    Ok(h)
}

pub fn operator_word_eval(mu: &StrictPartition, n: u32, pt: &QtPoint, degree: u32) -> Result<SymFunc> {
    operator_word_eval_bounded(mu, n, pt, degree, degree)
}

/// The word as text, e.g. `D(z0)G-(1)D(z1)G+(1)`.
pub fn operator_word(mu: &StrictPartition, n: u32) -> Result<String> {
    let (_, eps) = complement_and_epsilon(mu, n)?;
    Ok(eps
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let sign = if *s == Sign::Plus { '+' } else { '-' };
            format!("D(z{k})G{sign}(1)")
        })
        .collect())
}
