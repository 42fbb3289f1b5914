use std::collections::HashMap;

use super::pieri::phi_minus;
use crate::error::{Error, Result};
use crate::qtcore::{Monomial, QtPoint, TruncatedSeries};
use crate::tableaux::{tau_factors, Partition};

/// Branching evaluator for `P_τ(x_1, …, x_n)` at monomial arguments,
/// memoized over `(τ, n)`.
pub struct Evaluator<'a> {
    args: &'a [Monomial],
    pt: &'a QtPoint,
    degree: u32,
    memo: HashMap<(Partition, usize), TruncatedSeries>,
}

impl<'a> Evaluator<'a> {
    pub fn new(args: &'a [Monomial], pt: &'a QtPoint, degree: u32) -> Result<Self> {
        if let Some(bad) = args.iter().find(|m| !m.is_admissible()) {
            return Err(Error::InvalidMonomial(format!("argument {bad} is not admissible")));
        }
        Ok(Self {
            args,
            pt,
            degree,
            memo: HashMap::new(),
        })
    }

    /// `P_τ(x_1, …, x_n) = sum_{β≺τ} φ⁻_{β,τ} P_β(x_1, …, x_{n-1}) x_n^{|τ|-|β|}`.
    pub fn p(&mut self, tau: &Partition, n: usize) -> Result<TruncatedSeries> {
        if tau.len() > n {
            return Ok(TruncatedSeries::zero(self.degree));
        }
        if n == 0 {
            return Ok(TruncatedSeries::one(self.degree));
        }
        let key = (tau.clone(), n);
        if let Some(s) = self.memo.get(&key) {
            return Ok(s.clone());
        }
        let x = &self.args[n - 1];
        let mut out = TruncatedSeries::zero(self.degree);
        for beta in tau.strips_below() {
            if beta.len() > n - 1 {
                continue;
            }
            let k = tau.size() - beta.size();
            if x.int_degree().expect("admissible") * k > self.degree {
                continue;
            }
            let inner = self.p(&beta, n - 1)?;
            if inner.is_zero() {
                continue;
            }
            let phi = phi_minus(&beta, tau, self.pt)?;
            out.add_assign(&inner.mul_monomial(&x.pow(k as i32))?.scale(&phi))?;
        }
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    pub fn p_all(&mut self, tau: &Partition) -> Result<TruncatedSeries> {
        self.p(tau, self.args.len())
    }

    /// `Q_τ = b_τ P_τ`.
    pub fn q_all(&mut self, tau: &Partition) -> Result<TruncatedSeries> {
        let b = tau_factors(tau, self.pt)?.b;
        Ok(self.p_all(tau)?.scale(&b))
    }
}

pub fn eval_p_at_monomials(
    tau: &Partition,
    args: &[Monomial],
    pt: &QtPoint,
    degree: u32,
) -> Result<TruncatedSeries> {
    Evaluator::new(args, pt, degree)?.p_all(tau)
}

pub fn eval_q_at_monomials(
    tau: &Partition,
    args: &[Monomial],
    pt: &QtPoint,
    degree: u32,
) -> Result<TruncatedSeries> {
    Evaluator::new(args, pt, degree)?.q_all(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtcore::{f_series, sample_qt_point, scalar_int, VarLabel};
    use crate::tableaux::tilde_z;

    fn x(i: u32) -> Monomial {
        Monomial::var(VarLabel::Aux('x', i))
    }

    fn p(v: &[u32]) -> Partition {
        Partition::from_padded(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        let pt = sample_qt_point(2);
        let args = [x(1), x(2)];
        let got = eval_p_at_monomials(&p(&[1]), &args, &pt, 4).unwrap();
        let mut want = TruncatedSeries::zero(4);
        want.try_add_term(x(1), scalar_int(1)).unwrap();
        want.try_add_term(x(2), scalar_int(1)).unwrap();
        assert_eq!(got, want);
        assert!(eval_p_at_monomials(&p(&[1, 1]), &args[..1], &pt, 4).unwrap().is_zero());
        assert_eq!(
            eval_p_at_monomials(&Partition::empty(), &[], &pt, 4).unwrap(),
            TruncatedSeries::one(4)
        );
    }

    #[test]
    fn single_variable_rows() {
        let pt = sample_qt_point(12);
        let arg = [tilde_z(1)];
        let mut total = TruncatedSeries::zero(6);
        for n in 0..=6u32 {
            let q = eval_q_at_monomials(&p(&[n]), &arg, &pt, 6).unwrap();
            let want = TruncatedSeries::term(Monomial::z(0).pow(n as i32), pt.f(n, 0).unwrap(), 6).unwrap();
            assert_eq!(q, want);
            total.add_assign(&q).unwrap();
        }
        assert_eq!(total, f_series(&Monomial::z(0), &pt, 6).unwrap());
    }

    #[test]
    fn symmetric_in_arguments() {
        let pt = sample_qt_point(13);
        for tau in [p(&[2, 1]), p(&[3]), p(&[2, 2]), p(&[1, 1, 1])] {
            let a = eval_p_at_monomials(&tau, &[x(1), x(2), x(3)], &pt, 5).unwrap();
            let b = eval_p_at_monomials(&tau, &[x(3), x(1), x(2)], &pt, 5).unwrap();
            assert_eq!(a, b, "{tau}");
        }
    }
}
