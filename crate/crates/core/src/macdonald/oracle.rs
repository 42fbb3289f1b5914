//! Independent Macdonald polynomials by Gram–Schmidt in the power-sum basis.
//!
//! `m_λ` is expanded in power sums by inverting `p_ρ = sum_λ L_{ρλ} m_λ`,
//! where `L_{ρλ}` counts the ways to distribute the parts of `ρ` into rows
//! with sums `λ`. The `(q,t)` inner product is diagonal on power sums.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::pieri::{phi_minus, phi_plus};
use crate::error::{Error, Result};
use crate::qtcore::{QtPoint, Scalar};
use crate::tableaux::Partition;

/// A symmetric function in the power-sum basis.
pub type PowerSum = BTreeMap<Partition, Scalar>;

fn add_to(acc: &mut PowerSum, key: Partition, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn power(x: &Scalar, e: u32) -> Scalar {
    (0..e).fold(Scalar::one(), |acc, _| acc * x)
}

pub fn ps_add(a: &PowerSum, b: &PowerSum) -> PowerSum {
    let mut out = a.clone();
    for (k, v) in b {
        add_to(&mut out, k.clone(), v.clone());
    }
    out
}

pub fn ps_scale(a: &PowerSum, c: &Scalar) -> PowerSum {
    let mut out = PowerSum::new();
    for (k, v) in a {
        add_to(&mut out, k.clone(), v * c);
    }
    out
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted positive parts")
}

/// `p_ρ p_σ = p_{ρ ∪ σ}`.
pub fn ps_mul(a: &PowerSum, b: &PowerSum) -> PowerSum {
    let mut out = PowerSum::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            add_to(&mut out, union(ka, kb), va * vb);
        }
    }
    out
}

/// `z_ρ = prod_i i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> Scalar {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let mut z = Scalar::one();
    for (i, m) in counts {
        for k in 1..=m {
            z *= Scalar::from_integer((i as i64 * k as i64).into());
        }
    }
    z
}

/// Number of maps from the parts of `rho` to the rows of `lambda` whose
/// fibre sums are the row lengths.
fn distributions(rho: &[u32], rows: &mut [u32]) -> u64 {
    let Some((&first, rest)) = rho.split_first() else {
        return rows.iter().all(|&r| r == 0) as u64;
    };
    let mut total = 0;
    for k in 0..rows.len() {
        if rows[k] >= first {
            rows[k] -= first;
            total += distributions(rest, rows);
            rows[k] += first;
        }
    }
    total
}

/// Solves `a x = b` over the rationals.
pub fn solve(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Result<Vec<Scalar>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularGram)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = Scalar::one() / &a[col][col];
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Ok((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Power-sum oracle at a fixed `(q,t)` point.
pub struct Oracle {
    pt: QtPoint,
    m_cache: HashMap<Partition, PowerSum>,
    p_cache: HashMap<Partition, BTreeMap<Partition, Scalar>>,
}

impl Oracle {
    pub fn new(pt: &QtPoint) -> Self {
        Self {
            pt: pt.clone(),
            m_cache: HashMap::new(),
            p_cache: HashMap::new(),
        }
    }

    fn fill_degree(&mut self, n: u32) -> Result<()> {
        let parts = Partition::all(n);
        let k = parts.len();
        // columns of L^{-1}: m_λ = sum_ρ M_{λρ} p_ρ, found by solving L^T
        let l: Vec<Vec<Scalar>> = parts
            .iter()
            .map(|rho| {
                parts
                    .iter()
                    .map(|lam| {
                        let mut rows = lam.parts().to_vec();
                        Scalar::from_integer(distributions(rho.parts(), &mut rows).into())
                    })
                    .collect()
            })
            .collect();
        for (j, lam) in parts.iter().enumerate() {
            // sum_ρ M_{λρ} L_{ρμ} = δ_{λμ}
            let a: Vec<Vec<Scalar>> = (0..k).map(|mu| (0..k).map(|rho| l[rho][mu].clone()).collect()).collect();
            let b: Vec<Scalar> = (0..k).map(|mu| if mu == j { Scalar::one() } else { Scalar::zero() }).collect();
            let coeffs = solve(a, b)?;
            let mut ps = PowerSum::new();
            for (rho, c) in parts.iter().zip(coeffs) {
                add_to(&mut ps, rho.clone(), c);
            }
            self.m_cache.insert(lam.clone(), ps);
        }
        Ok(())
    }

    /// `m_λ` in power sums.
    pub fn monomial(&mut self, lambda: &Partition) -> Result<PowerSum> {
        if !self.m_cache.contains_key(lambda) {
            self.fill_degree(lambda.size())?;
        }
        Ok(self.m_cache[lambda].clone())
    }

    /// `⟨p_ρ, p_ρ⟩ = z_ρ prod (1 - q^{ρ_i}) / (1 - t^{ρ_i})`.
    pub fn norm_p(&self, rho: &Partition) -> Scalar {
        let mut v = z_rho(rho);
        for &r in rho.parts() {
            v *= (Scalar::one() - power(self.pt.q(), r)) / (Scalar::one() - power(self.pt.t(), r));
        }
        v
    }

    pub fn inner(&self, a: &PowerSum, b: &PowerSum) -> Scalar {
        let mut s = Scalar::zero();
        for (k, va) in a {
            if let Some(vb) = b.get(k) {
                s += va * vb * self.norm_p(k);
            }
        }
        s
    }

    /// `P_λ = m_λ + sum_{μ<λ} u_{λμ} m_μ` (monomial coefficients), fixed by
    /// orthogonality to every `m_ν` with `ν < λ`.
    pub fn gram_schmidt_p(&mut self, lambda: &Partition) -> Result<BTreeMap<Partition, Scalar>> {
        if let Some(c) = self.p_cache.get(lambda) {
            return Ok(c.clone());
        }
        let below: Vec<Partition> = Partition::all(lambda.size())
            .into_iter()
            .filter(|nu| nu != lambda && lambda.dominates(nu))
            .collect();
        let m_lambda = self.monomial(lambda)?;
        let ms: Vec<PowerSum> = below.iter().map(|nu| self.monomial(nu)).collect::<Result<_>>()?;
        let a: Vec<Vec<Scalar>> = ms
            .iter()
            .map(|m_nu| ms.iter().map(|m_mu| self.inner(m_mu, m_nu)).collect())
            .collect();
        let b: Vec<Scalar> = ms.iter().map(|m_nu| -self.inner(&m_lambda, m_nu)).collect();
        let u = solve(a, b)?;
        let mut out = BTreeMap::new();
        out.insert(lambda.clone(), Scalar::one());
        for (nu, c) in below.into_iter().zip(u) {
            if !c.is_zero() {
                out.insert(nu, c);
            }
        }
        self.p_cache.insert(lambda.clone(), out.clone());
        Ok(out)
    }

    /// Converts a monomial-basis expansion to power sums.
    pub fn from_monomial_basis(&mut self, m: &BTreeMap<Partition, Scalar>) -> Result<PowerSum> {
        let mut out = PowerSum::new();
        for (lam, c) in m {
            out = ps_add(&out, &ps_scale(&self.monomial(lam)?, c));
        }
        Ok(out)
    }

    pub fn macdonald_p(&mut self, lambda: &Partition) -> Result<PowerSum> {
        let m = self.gram_schmidt_p(lambda)?;
        self.from_monomial_basis(&m)
    }

    /// `Q_λ = P_λ / ⟨P_λ, P_λ⟩`.
    pub fn macdonald_q(&mut self, lambda: &Partition) -> Result<PowerSum> {
        let p = self.macdonald_p(lambda)?;
        let norm = self.inner(&p, &p);
        if norm.is_zero() {
            return Err(Error::SingularGram);
        }
        Ok(ps_scale(&p, &(Scalar::one() / norm)))
    }

    /// `g_n = Q_{(n)}`.
    pub fn g(&mut self, n: u32) -> Result<PowerSum> {
        if n == 0 {
            return Ok(PowerSum::from([(Partition::empty(), Scalar::one())]));
        }
        self.macdonald_q(&Partition::new(vec![n])?)
    }
}

/// `g_n P_β` computed in power sums against `sum_{α≻β} φ⁺_{α,β} P_α` with
/// `|α| = |β| + n`.
pub fn pieri_agrees(oracle: &mut Oracle, beta: &Partition, n: u32, pt: &QtPoint) -> Result<bool> {
    let lhs = ps_mul(&oracle.g(n)?, &oracle.macdonald_p(beta)?);
    let mut rhs = PowerSum::new();
    for alpha in beta.strips_above(n) {
        if alpha.size() != beta.size() + n {
            continue;
        }
        let c = phi_plus(&alpha, beta, pt)?;
        rhs = ps_add(&rhs, &ps_scale(&oracle.macdonald_p(&alpha)?, &c));
    }
    Ok(lhs == rhs)
}

/// `⟨g_n^- P_α, P_β⟩ = ⟨P_α, g_n P_β⟩` with `g_n^-` taken from `φ⁻`.
pub fn skewing_agrees(oracle: &mut Oracle, alpha: &Partition, beta: &Partition, pt: &QtPoint) -> Result<bool> {
    let n = alpha.size() - beta.size();
    let p_beta = oracle.macdonald_p(beta)?;
    let p_alpha = oracle.macdonald_p(alpha)?;
    let g_p_beta = ps_mul(&oracle.g(n)?, &p_beta);
    let right = oracle.inner(&p_alpha, &g_p_beta);
    let mut skewed = PowerSum::new();
    for b in alpha.strips_below() {
        if b.size() == beta.size() {
            let c = phi_minus(&b, alpha, pt)?;
            skewed = ps_add(&skewed, &ps_scale(&oracle.macdonald_p(&b)?, &c));
        }
    }
    Ok(oracle.inner(&skewed, &p_beta) == right)
}
