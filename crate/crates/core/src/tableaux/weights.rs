use num_traits::One;

use super::array::PPartitionArray;
use super::diagram::Diagram;
use super::partition::Partition;
use crate::error::Result;
use crate::qtcore::{QtPoint, Scalar};

/// `f(a - b; m)` with `a >= b` guaranteed by order reversal along diagonals.
fn fdiff(pt: &QtPoint, a: u32, b: u32, m: i32) -> Result<Scalar> {
    debug_assert!(a >= b, "order reversal gives non-negative differences");
    pt.f(a - b, m as u32)
}

/// Four-term factor at `(i, j)` summed over `m >= 0`:
/// `f(σ_ij - σ_{i-m,j-m-1}; m) f(σ_ij - σ_{i-m-1,j-m}; m)
///  / f(σ_ij - σ_{i-m,j-m}; m) f(σ_ij - σ_{i-m-1,j-m-1}; m)`.
fn bulk_factor(
    sigma: &PPartitionArray,
    d: &Diagram,
    i: i32,
    j: i32,
    pt: &QtPoint,
) -> Result<(Scalar, Scalar)> {
    let v = sigma.entry(d, i, j);
    let (mut num, mut den) = (Scalar::one(), Scalar::one());
    // beyond m = max(i, j) every neighbour reads 0 and the factor is 1
    for m in 0..=i.max(j) {
        num *= fdiff(pt, v, sigma.entry(d, i - m, j - m - 1), m)?;
        num *= fdiff(pt, v, sigma.entry(d, i - m - 1, j - m), m)?;
        den *= fdiff(pt, v, sigma.entry(d, i - m, j - m), m)?;
        den *= fdiff(pt, v, sigma.entry(d, i - m - 1, j - m - 1), m)?;
    }
    Ok((num, den))
}

/// Weight `W_{D(λ)}(π; q, t)` of a reverse plane partition.
pub fn weight_w_shape(pi: &PPartitionArray, d: &Diagram, pt: &QtPoint) -> Result<Scalar> {
    let (mut num, mut den) = (Scalar::one(), Scalar::one());
    for c in d.cells() {
        let (n, m) = bulk_factor(pi, d, c.i, c.j, pt)?;
        num *= n;
        den *= m;
    }
    Ok(num / den)
}

/// Off-diagonal part shared by `W_{S(μ)}` and `V_{S(μ)}`.
fn shifted_bulk(sigma: &PPartitionArray, d: &Diagram, pt: &QtPoint) -> Result<(Scalar, Scalar)> {
    let (mut num, mut den) = (Scalar::one(), Scalar::one());
    for c in d.cells().iter().filter(|c| c.i < c.j) {
        let (n, m) = bulk_factor(sigma, d, c.i, c.j, pt)?;
        num *= n;
        den *= m;
    }
    Ok((num, den))
}

/// Weight `W_{S(μ)}(σ; q, t)` of a reverse shifted plane partition.
pub fn weight_w_shifted(sigma: &PPartitionArray, d: &Diagram, pt: &QtPoint) -> Result<Scalar> {
    let (mut num, mut den) = shifted_bulk(sigma, d, pt)?;
    for c in d.cells().iter().filter(|c| c.i == c.j) {
        let i = c.i;
        let v = sigma.entry(d, i, i);
        for m in 0..=i {
            let (e, o) = (2 * m, 2 * m + 1);
            num *= fdiff(pt, v, sigma.entry(d, i - e - 1, i - e), e)?;
            num *= fdiff(pt, v, sigma.entry(d, i - e - 2, i - e - 1), o)?;
            den *= fdiff(pt, v, sigma.entry(d, i - e, i - e), e)?;
            den *= fdiff(pt, v, sigma.entry(d, i - e - 2, i - e - 2), o)?;
        }
    }
    Ok(num / den)
}

/// Weight `V_{S(μ)}(σ; q, t)` used for fixed-profile generating functions.
pub fn weight_v_shifted(sigma: &PPartitionArray, d: &Diagram, pt: &QtPoint) -> Result<Scalar> {
    let (mut num, mut den) = shifted_bulk(sigma, d, pt)?;
    for c in d.cells().iter().filter(|c| c.i == c.j) {
        let i = c.i;
        let v = sigma.entry(d, i, i);
        for m in 0..=i {
            num *= fdiff(pt, v, sigma.entry(d, i - m - 1, i - m), m)?;
            den *= fdiff(pt, v, sigma.entry(d, i - m, i - m), m)?;
        }
    }
    Ok(num / den)
}

/// `(b_τ, b^el_τ, o(τ))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauFactors {
    pub b: Scalar,
    pub b_el: Scalar,
    pub odd_columns: u32,
}

/// `b_τ = prod_{i<=j} f(τ_i - τ_{j+1}; j-i) / f(τ_i - τ_j; j-i)`, and the same
/// product restricted to even `j - i`.
pub fn tau_factors(tau: &Partition, pt: &QtPoint) -> Result<TauFactors> {
    let l = tau.len();
    let (mut b, mut b_el) = (Scalar::one(), Scalar::one());
    for i in 1..=l {
        for j in i..=l {
            let m = (j - i) as u32;
            let ratio = pt.f(tau.part(i) - tau.part(j + 1), m)? / pt.f(tau.part(i) - tau.part(j), m)?;
            if m.is_multiple_of(2) {
                b_el *= &ratio;
            }
            b *= ratio;
        }
    }
    Ok(TauFactors {
        b,
        b_el,
        odd_columns: tau.odd_columns(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtcore::{sample_qt_point, scalar};
    use crate::tableaux::partition::StrictPartition;

    #[test]
    fn single_box() {
        let pt = sample_qt_point(4);
        let d = Diagram::normal(&Partition::new(vec![1]).unwrap());
        for n in 0..6 {
            let w = weight_w_shape(&PPartitionArray::new(vec![n]), &d, &pt).unwrap();
            assert_eq!(w, pt.f(n, 0).unwrap());
        }
    }

    #[test]
    fn diagonal_point_weights_are_one() {
        let pt = QtPoint::diagonal(scalar(3, 7)).unwrap();
        let mu = StrictPartition::new(vec![6, 5, 2]).unwrap();
        let d = Diagram::shifted(&mu);
        let a = PPartitionArray::from_rows(&d, &[vec![0, 0, 1, 2, 3, 3], vec![1, 2, 3, 3, 3], vec![2, 4]]).unwrap();
        assert!(weight_w_shifted(&a, &d, &pt).unwrap().is_one());
        assert!(weight_v_shifted(&a, &d, &pt).unwrap().is_one());
        let l = Diagram::normal(&Partition::new(vec![3, 2]).unwrap());
        let b = PPartitionArray::new(vec![0, 1, 3, 2, 2]);
        assert!(weight_w_shape(&b, &l, &pt).unwrap().is_one());
    }

    #[test]
    fn w_and_v_differ_by_profile_factor() {
        let pt = sample_qt_point(17);
        let mu = StrictPartition::new(vec![6, 5, 2]).unwrap();
        let d = Diagram::shifted(&mu);
        let a = PPartitionArray::from_rows(&d, &[vec![0, 0, 1, 2, 3, 3], vec![1, 2, 3, 3, 3], vec![2, 4]]).unwrap();
        let tf = tau_factors(&a.profile(&d), &pt).unwrap();
        let w = weight_w_shifted(&a, &d, &pt).unwrap();
        let v = weight_v_shifted(&a, &d, &pt).unwrap();
        assert_eq!(w, tf.b_el / tf.b * v);
    }

    #[test]
    fn tau_factor_values() {
        let pt = sample_qt_point(1);
        let empty = tau_factors(&Partition::empty(), &pt).unwrap();
        assert!(empty.b.is_one() && empty.b_el.is_one());
        assert_eq!(empty.odd_columns, 0);
        let one = tau_factors(&Partition::new(vec![1]).unwrap(), &pt).unwrap();
        let expect = (Scalar::one() - pt.t()) / (Scalar::one() - pt.q());
        assert_eq!(one.b, expect);
        assert_eq!(tau_factors(&Partition::new(vec![2, 1]).unwrap(), &pt).unwrap().odd_columns, 1);
    }
}
