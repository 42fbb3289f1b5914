//! Diagrams, hooks, traces, weights and weighted enumeration for shapes
//! `D(λ)` and shifted shapes `S(μ)`.

mod array;
mod diagram;
mod partition;
mod weights;

pub use array::{traces_and_profile, PPartitionArray, ProfileData};
pub use diagram::{
    cells_monomial, closed_form_hook_monomial, closed_form_normal_hook, closed_form_shifted_hook,
    complement_and_epsilon, default_n, diagram_cells, frobenius_split, tilde_x, tilde_y, tilde_z,
    Cell, Diagram, Shape, Sign,
};
pub use partition::{parse_parts, Partition, StrictPartition};
pub use weights::{tau_factors, weight_v_shifted, weight_w_shape, weight_w_shifted, TauFactors};

use crate::enumerate::PartitionEnumerator;
use crate::error::{Error, Result};
use crate::par;
use crate::qtcore::{Monomial, QtPoint, Scalar, TruncatedSeries};
use num_traits::One;

/// Which weight multiplies `z^{tr(σ)}` in a left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// `W_{D(λ)}` or `W_{S(μ)}`.
    W,
    /// `V_{S(μ)}` (shifted shapes only).
    V,
    Unweighted,
}

fn enumerator(d: &Diagram) -> PartitionEnumerator {
    PartitionEnumerator::new(d.upper_neighbors(), (0..d.len()).collect())
}

/// All reverse (shifted) plane partitions with `|σ| <= degree`, optionally
/// restricted to a profile `τ` (shifted shapes only, diagonal pinned to
/// `σ_{i,i} = τ_{r-i+1}`).
pub fn enumerate_ppartitions(
    d: &Diagram,
    degree: u32,
    profile: Option<&Partition>,
) -> Result<Vec<PPartitionArray>> {
    let mut en = enumerator(d);
    if let Some(tau) = profile {
        let Shape::Shifted(mu) = d.shape() else {
            return Err(Error::Config("profiles apply to shifted shapes only".into()));
        };
        let r = mu.len();
        if tau.len() > r {
            return Err(Error::InfeasibleProfile(format!(
                "profile {tau} is longer than {mu}"
            )));
        }
        if tau.size() > degree {
            return Err(Error::InfeasibleProfile(format!(
                "|{tau}| exceeds the degree bound {degree}"
            )));
        }
        for i in 1..=r {
            let idx = d.index_of(Cell::new(i as i32, i as i32)).expect("diagonal cell");
            en.fix(idx, tau.part(r - i + 1));
        }
    }
    Ok(en.enumerate(degree)?.into_iter().map(PPartitionArray::new).collect())
}

/// Weight of one array.
pub fn weight(sigma: &PPartitionArray, d: &Diagram, kind: WeightKind, pt: &QtPoint) -> Result<Scalar> {
    match (kind, d.is_shifted()) {
        (WeightKind::Unweighted, _) => Ok(Scalar::one()),
        (WeightKind::W, false) => weight_w_shape(sigma, d, pt),
        (WeightKind::W, true) => weight_w_shifted(sigma, d, pt),
        (WeightKind::V, true) => weight_v_shifted(sigma, d, pt),
        (WeightKind::V, false) => Err(Error::Config("the V weight is defined for shifted shapes".into())),
    }
}

/// `sum_σ weight(σ) z^{tr(σ)}` truncated at `degree`. `pt` may be `None` only
/// for unweighted sums.
pub fn lhs_series(
    d: &Diagram,
    pt: Option<&QtPoint>,
    degree: u32,
    kind: WeightKind,
    profile: Option<&Partition>,
) -> Result<TruncatedSeries> {
    let arrays = enumerate_ppartitions(d, degree, profile)?;
    lhs_from_arrays(d, &arrays, pt, degree, kind)
}

pub fn lhs_from_arrays(
    d: &Diagram,
    arrays: &[PPartitionArray],
    pt: Option<&QtPoint>,
    degree: u32,
    kind: WeightKind,
) -> Result<TruncatedSeries> {
    if kind != WeightKind::Unweighted && pt.is_none() {
        return Err(Error::Config("weighted sums need a (q,t) point".into()));
    }
    par::sum_series(arrays, degree, |a| {
        let w = match pt {
            Some(pt) => weight(a, d, kind, pt)?,
            None => Scalar::one(),
        };
        TruncatedSeries::term(a.trace_monomial(d), w, degree)
    })
}

/// Splits a reverse plane partition of shape `λ` into the shifted arrays on
/// `S(μ)` (cells on or right of the diagonal) and `S(ν)` (cells on or below
/// it, transposed), where `(μ, ν)` is the Frobenius split of `λ`.
pub fn glue_split(
    pi: &PPartitionArray,
    lambda_diagram: &Diagram,
) -> Result<(Diagram, PPartitionArray, Diagram, PPartitionArray)> {
    let Shape::Normal(lambda) = lambda_diagram.shape() else {
        return Err(Error::Config("gluing splits ordinary shapes".into()));
    };
    let (_, mu, nu) = frobenius_split(lambda);
    let dm = Diagram::shifted(&mu);
    let dn = Diagram::shifted(&nu);
    let upper = dm
        .cells()
        .iter()
        .map(|c| pi.get(lambda_diagram, c.i, c.j).expect("upper half lies in D(λ)"))
        .collect();
    let lower = dn
        .cells()
        .iter()
        .map(|c| pi.get(lambda_diagram, c.j, c.i).expect("lower half lies in D(λ)"))
        .collect();
    Ok((dm, PPartitionArray::new(upper), dn, PPartitionArray::new(lower)))
}

/// `x^{tr(σ)}` with `x_0 = z_0^{1/2}`, `x_k = z_k` (or `y_k = z_{-k}` when
/// `negate` is set).
pub fn half_trace_monomial(sigma: &PPartitionArray, d: &Diagram, negate: bool) -> Monomial {
    let mut m = Monomial::one();
    for (c, &v) in d.cells().iter().zip(sigma.values()) {
        if v == 0 {
            continue;
        }
        let k = c.content();
        let factor = if k == 0 {
            Monomial::from_halves(crate::qtcore::VarLabel::Int(0), v as i32)
        } else {
            Monomial::var_pow(crate::qtcore::VarLabel::Int(if negate { -k } else { k }), v as i32)
        };
        m = m.mul(&factor);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtcore::{product_geometric, sample_qt_point, scalar, scalar_int};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn strict(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let d1 = Diagram::normal(&part(&[1]));
        let got: Vec<Vec<u32>> = enumerate_ppartitions(&d1, 3, None)
            .unwrap()
            .iter()
            .map(|a| a.values().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![2], vec![3]]);

        let d2 = Diagram::normal(&part(&[2]));
        let got: Vec<Vec<u32>> = enumerate_ppartitions(&d2, 2, None)
            .unwrap()
            .iter()
            .map(|a| a.values().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1]]);

        let s = Diagram::shifted(&strict(&[2, 1]));
        assert!(enumerate_ppartitions(&s, 2, Some(&part(&[1, 1]))).unwrap().is_empty());
        assert!(matches!(
            enumerate_ppartitions(&s, 2, Some(&part(&[1, 1, 1]))),
            Err(Error::InfeasibleProfile(_))
        ));
        assert!(matches!(
            enumerate_ppartitions(&s, 2, Some(&part(&[3]))),
            Err(Error::InfeasibleProfile(_))
        ));
    }

    /// Exhaustive enumeration over a value box, filtered by the definition.
    fn brute_force(d: &Diagram, degree: u32) -> Vec<Vec<u32>> {
        let n = d.len();
        let mut out = Vec::new();
        let mut v = vec![0u32; n];
        loop {
            let a = PPartitionArray::new(v.clone());
            if a.total() <= degree && a.is_order_reversing(d) {
                out.push(v.clone());
            }
            let mut k = n;
            loop {
                if k == 0 {
                    out.sort();
                    return out;
                }
                k -= 1;
                if v[k] < degree {
                    v[k] += 1;
                    break;
                }
                v[k] = 0;
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for d in [
            Diagram::normal(&part(&[2, 1])),
            Diagram::normal(&part(&[2, 2])),
            Diagram::shifted(&strict(&[3, 1])),
            Diagram::shifted(&strict(&[3, 2])),
        ] {
            let mut got: Vec<Vec<u32>> = enumerate_ppartitions(&d, 4, None)
                .unwrap()
                .iter()
                .map(|a| a.values().to_vec())
                .collect();
            got.sort();
            assert_eq!(got, brute_force(&d, 4));
        }
    }

    #[test]
    fn lhs_examples() {
        let d1 = Diagram::normal(&part(&[1]));
        let s = lhs_series(&d1, None, 4, WeightKind::Unweighted, None).unwrap();
        assert_eq!(s, product_geometric(&[Monomial::z(0)], 4).unwrap());

        let d2 = Diagram::normal(&part(&[2]));
        let s = lhs_series(&d2, None, 2, WeightKind::Unweighted, None).unwrap();
        let mut want = TruncatedSeries::one(2);
        for m in [Monomial::z(1), Monomial::z(1).pow(2), Monomial::z(0).mul(&Monomial::z(1))] {
            want.try_add_term(m, scalar_int(1)).unwrap();
        }
        assert_eq!(s, want);

        let pt = QtPoint::diagonal(scalar(2, 9)).unwrap();
        let d3 = Diagram::shifted(&strict(&[3, 1]));
        assert_eq!(
            lhs_series(&d3, Some(&pt), 5, WeightKind::W, None).unwrap(),
            lhs_series(&d3, None, 5, WeightKind::Unweighted, None).unwrap()
        );
        assert!(lhs_series(&d1, None, 3, WeightKind::W, None).is_err());
    }

    #[test]
    fn profiles_partition_every_array() {
        let mu = strict(&[4, 2, 1]);
        let d = Diagram::shifted(&mu);
        let (_, eps) = complement_and_epsilon(&mu, 4).unwrap();
        let all = enumerate_ppartitions(&d, 6, None).unwrap();
        let mut by_profile = 0;
        for tau in Partition::all_up_to(6, 3) {
            by_profile += enumerate_ppartitions(&d, 6, Some(&tau)).unwrap().len();
        }
        assert_eq!(by_profile, all.len());
        for a in &all {
            let data = traces_and_profile(a, &d, 4);
            assert!(data.interlaces(&eps));
            assert_eq!(a.trace_monomial(&d).int_degree(), Some(a.total()));
        }
    }

    #[test]
    fn gluing_law() {
        let pt = sample_qt_point(23);
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let d = Diagram::normal(&lambda);
                for pi in enumerate_ppartitions(&d, 5, None).unwrap() {
                    let (dm, sigma, dn, rho) = glue_split(&pi, &d).unwrap();
                    let tau = sigma.profile(&dm);
                    assert_eq!(tau, rho.profile(&dn));
                    let b = tau_factors(&tau, &pt).unwrap().b;
                    let glued = weight_v_shifted(&sigma, &dm, &pt).unwrap()
                        * weight_v_shifted(&rho, &dn, &pt).unwrap()
                        / b;
                    assert_eq!(weight_w_shape(&pi, &d, &pt).unwrap(), glued, "λ={lambda}");
                    let mono = half_trace_monomial(&sigma, &dm, false)
                        .mul(&half_trace_monomial(&rho, &dn, true));
                    assert_eq!(mono, pi.trace_monomial(&d));
                }
            }
        }
    }
}
