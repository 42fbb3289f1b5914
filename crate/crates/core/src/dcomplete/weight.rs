use super::coloring::ColoredPoset;
use super::poset::{LabeledPoset, Poset};
use crate::enumerate::PartitionEnumerator;
use crate::error::{Error, Result};
use crate::par;
use crate::qtcore::{f_series, product_f, Comparison, Monomial, QtPoint, Scalar, TruncatedSeries};
use num_traits::One;

/// Pairs entering `W_P`, precomputed once per poset.
#[derive(Debug, Clone)]
pub struct WeightPlan {
    /// `(x, y, d(x,y))` with `x < y` and adjacent colors.
    numerator: Vec<(usize, usize, u32)>,
    /// `(x, e(x, v_0))` for `c(x) = v_0`.
    top_color: Vec<(usize, u32)>,
    /// `(x, y, e(x,y))` with `x < y` and equal colors.
    denominator: Vec<(usize, usize, u32)>,
}

impl WeightPlan {
    pub fn new(cp: &ColoredPoset) -> Result<Self> {
        let p = &cp.poset;
        let (r, c) = (&cp.rank, &cp.color);
        let mut plan = Self {
            numerator: Vec::new(),
            top_color: Vec::new(),
            denominator: Vec::new(),
        };
        let parity = |x: usize, y: usize, want_odd: bool| -> Result<u32> {
            let dr = r[y] - r[x];
            if dr <= 0 || (dr % 2 == 1) != want_odd {
                return Err(Error::ParityViolation(format!(
                    "r({}) - r({}) = {dr}",
                    p.name(y),
                    p.name(x)
                )));
            }
            Ok(dr as u32)
        };
        for x in 0..p.len() {
            for y in 0..p.len() {
                if !p.lt(x, y) {
                    continue;
                }
                if cp.adjacent_colors(c[x], c[y]) {
                    let dr = parity(x, y, true)?;
                    plan.numerator.push((x, y, (dr - 1) / 2));
                } else if c[x] == c[y] {
                    let dr = parity(x, y, false)?;
                    plan.denominator.push((x, y, dr / 2));
                }
            }
            if c[x] == cp.max_element {
                let e = if x == cp.max_element {
                    0
                } else {
                    parity(x, cp.max_element, false)? / 2
                };
                plan.top_color.push((x, e));
            }
        }
        Ok(plan)
    }
}

fn diff(sigma: &[u32], x: usize, y: usize) -> u32 {
    debug_assert!(sigma[x] >= sigma[y], "P-partitions reverse the order");
    sigma[x] - sigma[y]
}

fn denominator(plan: &WeightPlan, sigma: &[u32], pt: &QtPoint) -> Result<Scalar> {
    let mut den = Scalar::one();
    for &(x, y, e) in &plan.denominator {
        let n = diff(sigma, x, y);
        den *= pt.f(n, e)?;
        den *= pt.f(n, e - 1)?;
    }
    Ok(den)
}

/// `W_P(σ; q, t)`.
pub fn weight_w_p(plan: &WeightPlan, sigma: &[u32], pt: &QtPoint) -> Result<Scalar> {
    let mut num = Scalar::one();
    for &(x, y, d) in &plan.numerator {
        num *= pt.f(diff(sigma, x, y), d)?;
    }
    for &(x, e) in &plan.top_color {
        num *= pt.f(sigma[x], e)?;
    }
    Ok(num / denominator(plan, sigma, pt)?)
}

/// `W_P` through the extended poset `P̂ = P ⊔ {1̂}` with `σ̂(1̂) = 0` and `1̂`
/// adjacent to `v_0` in the extended top tree.
pub fn weight_w_p_extended(cp: &ColoredPoset, plan: &WeightPlan, sigma: &[u32], pt: &QtPoint) -> Result<Scalar> {
    let p = &cp.poset;
    let n = p.len();
    let hat = n;
    let mut names = p.names().to_vec();
    names.push("1^".into());
    let mut covers = p.cover_pairs();
    covers.push((cp.max_element, hat));
    let ext = Poset::new(names, &covers)?;
    let mut color = cp.color.clone();
    color.push(hat);
    let mut rank = cp.rank.clone();
    rank.push(cp.rank[cp.max_element] + 1);
    let mut sig = sigma.to_vec();
    sig.push(0);
    let adjacent = |a: usize, b: usize| {
        if a == hat || b == hat {
            (a == hat && b == cp.max_element) || (b == hat && a == cp.max_element)
        } else {
            cp.adjacent_colors(a, b)
        }
    };
    let mut num = Scalar::one();
    for x in 0..=n {
        for y in 0..=n {
            if ext.lt(x, y) && adjacent(color[x], color[y]) {
                let d = ((rank[y] - rank[x] - 1) / 2) as u32;
                num *= pt.f(sig[x] - sig[y], d)?;
            }
        }
    }
    Ok(num / denominator(plan, sigma, pt)?)
}

/// P-partitions with `|σ| <= degree`, values indexed by element.
pub fn enumerate_p_partitions(cp: &ColoredPoset, degree: u32) -> Result<Vec<Vec<u32>>> {
    let mut order: Vec<usize> = (0..cp.len()).collect();
    order.sort_by_key(|&e| (-cp.rank[e], e));
    PartitionEnumerator::new(cp.poset.all_uppers(), order).enumerate(degree)
}

/// `sum_σ W_P(σ) z^σ` (or unweighted when `pt` is `None`).
pub fn conjecture_lhs(cp: &ColoredPoset, pt: Option<&QtPoint>, degree: u32) -> Result<TruncatedSeries> {
    conjecture_lhs_from(cp, &enumerate_p_partitions(cp, degree)?, pt, degree)
}

/// As [`conjecture_lhs`], over already enumerated P-partitions.
pub fn conjecture_lhs_from(
    cp: &ColoredPoset,
    sigmas: &[Vec<u32>],
    pt: Option<&QtPoint>,
    degree: u32,
) -> Result<TruncatedSeries> {
    let plan = WeightPlan::new(cp)?;
    par::sum_series(sigmas, degree, |s| {
        let w = match pt {
            Some(pt) => weight_w_p(&plan, s, pt)?,
            None => Scalar::one(),
        };
        TruncatedSeries::term(cp.color_monomial(s), w, degree)
    })
}

/// `prod_v F(z[H_P(v)])`.
pub fn conjecture_rhs(cp: &ColoredPoset, pt: &QtPoint, degree: u32) -> Result<TruncatedSeries> {
    product_f(&cp.hook_monomials()?, pt, degree)
}

pub fn conjecture_check(cp: &ColoredPoset, pt: &QtPoint, degree: u32) -> Result<Comparison> {
    Ok(Comparison::new(
        "conjecture",
        conjecture_lhs(cp, Some(pt), degree)?,
        conjecture_rhs(cp, pt, degree)?,
    ))
}

/// For a rooted tree: the generating function equals `F(z[T])` times the
/// generating functions of the subtrees below the root's children.
pub fn tree_recursion_check(lp: &LabeledPoset, pt: &QtPoint, degree: u32) -> Result<Comparison> {
    let cp = ColoredPoset::new(lp)?;
    if cp.top_tree.len() != cp.len() {
        return Err(Error::InvalidSpec("not a rooted tree".into()));
    }
    let lhs = conjecture_lhs(&cp, Some(pt), degree)?;
    let root = cp.max_element;
    let whole = Monomial::from_factors((0..cp.len()).map(|x| (cp.label(x), crate::qtcore::HalfInt::from_int(1))));
    let mut rhs = f_series(&whole, pt, degree)?;
    for &child in cp.poset.lowers(root) {
        let elems = cp.poset.down_set(child);
        let sub = LabeledPoset {
            poset: cp.poset.induced(&elems),
            top_labels: elems.iter().enumerate().map(|(i, &e)| (i, cp.label(e))).collect(),
        };
        let sub_cp = ColoredPoset::new(&sub)?;
        rhs = rhs.mul(&conjecture_lhs(&sub_cp, Some(pt), degree)?)?;
    }
    Ok(Comparison::new("rooted-tree recursion", lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dcomplete::poset::{build, PosetSpec};
    use crate::qtcore::{product_geometric, sample_qt_point, scalar};
    use crate::tableaux::{
        enumerate_ppartitions, weight_w_shape, weight_w_shifted, Diagram, PPartitionArray, Partition,
        StrictPartition,
    };

    fn colored(spec: PosetSpec) -> ColoredPoset {
        ColoredPoset::new(&build(&spec).unwrap()).unwrap()
    }

    #[test]
    fn single_element() {
        let pt = sample_qt_point(1);
        let cp = colored(PosetSpec::Tree("(a)".into()));
        let c = conjecture_check(&cp, &pt, 5).unwrap();
        assert_eq!(c.mismatch().unwrap(), None);
        assert_eq!(c.lhs, f_series(&Monomial::var(crate::qtcore::VarLabel::Id(0)), &pt, 5).unwrap());
    }

    #[test]
    fn diagonal_point_gives_peterson_proctor() {
        let pt = QtPoint::diagonal(scalar(2, 7)).unwrap();
        let cp = colored(PosetSpec::Dk1(3));
        let lhs = conjecture_lhs(&cp, Some(&pt), 5).unwrap();
        assert_eq!(lhs, conjecture_lhs(&cp, None, 5).unwrap());
        assert_eq!(lhs, product_geometric(&cp.hook_monomials().unwrap(), 5).unwrap());
    }

    #[test]
    fn matches_diagram_weights() {
        let pt = sample_qt_point(14);
        for l in [vec![2, 1], vec![3, 2], vec![2, 2, 1]] {
            let lambda = Partition::new(l).unwrap();
            let d = Diagram::normal(&lambda);
            let cp = colored(PosetSpec::Shape(lambda));
            let plan = WeightPlan::new(&cp).unwrap();
            for a in enumerate_ppartitions(&d, 4, None).unwrap() {
                let w = weight_w_p(&plan, a.values(), &pt).unwrap();
                assert_eq!(w, weight_w_shape(&a, &d, &pt).unwrap());
                assert_eq!(w, weight_w_p_extended(&cp, &plan, a.values(), &pt).unwrap());
            }
        }
        for m in [vec![3, 1], vec![3, 2, 1]] {
            let mu = StrictPartition::new(m).unwrap();
            let d = Diagram::shifted(&mu);
            let cp = colored(PosetSpec::Shifted { mu, two_color: true });
            let plan = WeightPlan::new(&cp).unwrap();
            for a in enumerate_ppartitions(&d, 4, None).unwrap() {
                let w = weight_w_p(&plan, a.values(), &pt).unwrap();
                assert_eq!(w, weight_w_shifted(&a, &d, &pt).unwrap());
            }
        }
        let _ = PPartitionArray::new(vec![]);
    }

    #[test]
    fn small_conjecture_cases() {
        let pt = sample_qt_point(15);
        for spec in [
            PosetSpec::Dk1(3),
            PosetSpec::Dk1(4),
            PosetSpec::Tree("(a(b)(c(d)))".into()),
            PosetSpec::Shifted { mu: StrictPartition::new(vec![3, 1]).unwrap(), two_color: true },
        ] {
            let cp = colored(spec);
            assert_eq!(conjecture_check(&cp, &pt, 4).unwrap().mismatch().unwrap(), None);
        }
        let lp = build(&PosetSpec::Tree("(a(b(c))(d))".into())).unwrap();
        assert_eq!(tree_recursion_check(&lp, &pt, 4).unwrap().mismatch().unwrap(), None);
    }
}
