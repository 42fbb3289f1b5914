use std::collections::BTreeSet;

use super::eval::Evaluator;
use super::symfunc::SymFunc;
use crate::error::Result;
use crate::qtcore::{
    f_series, f_series_scaled, product_f, Comparison, Monomial, QtPoint, Scalar, TruncatedSeries,
    VarLabel,
};
use crate::tableaux::{tau_factors, Partition};

/// Fresh variables `c_1, …, c_n`.
pub fn alphabet(c: char, n: u32) -> Vec<Monomial> {
    (1..=n).map(|i| Monomial::var(VarLabel::Aux(c, i))).collect()
}

/// The symbol `a` of Warnaar's identity.
pub fn symbol_a() -> Monomial {
    Monomial::var(VarLabel::Aux('a', 0))
}

/// `a` in Warnaar's identity: a fresh series variable or a rational number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WarnaarParam {
    Symbolic,
    Rational(Scalar),
}

/// `prod_{k,i} F(x_i u_k) = sum_τ Q_τ(u) P_τ(x)`.
pub fn cauchy(nx: u32, nu: u32, pt: &QtPoint, degree: u32) -> Result<Comparison> {
    let (x, u) = (alphabet('x', nx), alphabet('u', nu));
    let pairs: Vec<Monomial> = x.iter().flat_map(|xi| u.iter().map(move |uk| xi.mul(uk))).collect();
    let lhs = product_f(&pairs, pt, degree)?;
    let mut ex = Evaluator::new(&x, pt, degree)?;
    let mut eu = Evaluator::new(&u, pt, degree)?;
    let mut rhs = TruncatedSeries::zero(degree);
    for tau in Partition::all_up_to(degree / 2, nx.min(nu) as usize) {
        rhs.add_assign(&eu.q_all(&tau)?.mul(&ex.p_all(&tau)?)?)?;
    }
    Ok(Comparison::new(format!("cauchy {nx}x{nu}"), lhs, rhs))
}

/// `sum_n g_n(x) u^n = prod_i F(x_i u)`.
pub fn gn_generating_function(nx: u32, pt: &QtPoint, degree: u32) -> Result<Comparison> {
    let x = alphabet('x', nx);
    let u = Monomial::var(VarLabel::Aux('u', 0));
    let mut ev = Evaluator::new(&x, pt, degree)?;
    let mut lhs = TruncatedSeries::zero(degree);
    for n in 0..=degree / 2 {
        let row = Partition::from_padded(vec![n])?;
        lhs.add_assign(&ev.q_all(&row)?.mul_monomial(&u.pow(n as i32))?)?;
    }
    let args: Vec<Monomial> = x.iter().map(|xi| xi.mul(&u)).collect();
    let rhs = product_f(&args, pt, degree)?;
    Ok(Comparison::new(format!("g_n generating function, {nx} variables"), lhs, rhs))
}

/// Which power of `a` accompanies `Q_τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AExponent {
    Odd,
    Plus,
    Minus,
}

fn a_exponent(kind: AExponent, tau: &Partition) -> u32 {
    let o = tau.odd_columns();
    match kind {
        AExponent::Odd => o,
        AExponent::Plus => (tau.size() + o) / 2,
        AExponent::Minus => (tau.size() - o) / 2,
    }
}

/// `sum_τ a^{e(τ)} (b^el_τ / b_τ) Q_τ(x)`, with `a` absent when `None`.
fn littlewood_lhs(
    x: &[Monomial],
    a: Option<(&WarnaarParam, AExponent)>,
    pt: &QtPoint,
    degree: u32,
) -> Result<TruncatedSeries> {
    let mut ev = Evaluator::new(x, pt, degree)?;
    let mut lhs = TruncatedSeries::zero(degree);
    for tau in Partition::all_up_to(degree, x.len()) {
        let tf = tau_factors(&tau, pt)?;
        let mut term = ev.q_all(&tau)?.scale(&(tf.b_el / tf.b));
        if let Some((param, kind)) = a {
            let e = a_exponent(kind, &tau);
            term = match param {
                WarnaarParam::Symbolic => term.mul_monomial(&symbol_a().pow(e as i32))?,
                WarnaarParam::Rational(r) => term.scale(&(0..e).fold(Scalar::from_integer(1.into()), |acc, _| acc * r)),
            };
        }
        lhs.add_assign(&term)?;
    }
    Ok(lhs)
}

/// `prod_i F(a_1 x_i) prod_{i<j} F(a_2 x_i x_j)` where each `a_k` is either
/// `a` or absent.
fn littlewood_rhs(
    x: &[Monomial],
    a: &WarnaarParam,
    on_singles: bool,
    on_pairs: bool,
    pt: &QtPoint,
    degree: u32,
) -> Result<TruncatedSeries> {
    let factor = |m: Monomial, with_a: bool| -> Result<TruncatedSeries> {
        match (with_a, a) {
            (false, _) => f_series(&m, pt, degree),
            (true, WarnaarParam::Symbolic) => f_series(&m.mul(&symbol_a()), pt, degree),
            (true, WarnaarParam::Rational(r)) => f_series_scaled(&m, r, pt, degree),
        }
    };
    let mut rhs = TruncatedSeries::one(degree);
    for xi in x {
        rhs = rhs.mul(&factor(xi.clone(), on_singles)?)?;
    }
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            rhs = rhs.mul(&factor(x[i].mul(&x[j]), on_pairs)?)?;
        }
    }
    Ok(rhs)
}

/// `sum_τ (b^el_τ / b_τ) Q_τ(x) = prod_i F(x_i) prod_{i<j} F(x_i x_j)`.
pub fn schur_littlewood(nx: u32, pt: &QtPoint, degree: u32) -> Result<Comparison> {
    let x = alphabet('x', nx);
    let lhs = littlewood_lhs(&x, None, pt, degree)?;
    let one = WarnaarParam::Rational(Scalar::from_integer(1.into()));
    let rhs = littlewood_rhs(&x, &one, false, false, pt, degree)?;
    Ok(Comparison::new(format!("schur-littlewood, {nx} variables"), lhs, rhs))
}

/// `sum_τ a^{o(τ)} (b^el_τ / b_τ) Q_τ(x) = prod_i F(a x_i) prod_{i<j} F(x_i x_j)`.
pub fn warnaar(nx: u32, a: &WarnaarParam, pt: &QtPoint, degree: u32) -> Result<Comparison> {
    let x = alphabet('x', nx);
    let lhs = littlewood_lhs(&x, Some((a, AExponent::Odd)), pt, degree)?;
    let rhs = littlewood_rhs(&x, a, true, false, pt, degree)?;
    Ok(Comparison::new(format!("warnaar, {nx} variables"), lhs, rhs))
}

/// The two rescaled forms, with `a^{(|τ|+o(τ))/2}` and `a^{(|τ|-o(τ))/2}`.
pub fn warnaar_rescaled(nx: u32, pt: &QtPoint, degree: u32) -> Result<[Comparison; 2]> {
    let x = alphabet('x', nx);
    let a = WarnaarParam::Symbolic;
    let plus = Comparison::new(
        format!("warnaar (|τ|+o(τ))/2, {nx} variables"),
        littlewood_lhs(&x, Some((&a, AExponent::Plus)), pt, degree)?,
        littlewood_rhs(&x, &a, true, true, pt, degree)?,
    );
    let minus = Comparison::new(
        format!("warnaar (|τ|-o(τ))/2, {nx} variables"),
        littlewood_lhs(&x, Some((&a, AExponent::Minus)), pt, degree)?,
        littlewood_rhs(&x, &a, false, true, pt, degree)?,
    );
    Ok([plus, minus])
}

/// One comparison per partition appearing on either side.
pub fn symfunc_comparisons(label: &str, lhs: &SymFunc, rhs: &SymFunc) -> Vec<Comparison> {
    let keys: BTreeSet<&Partition> = lhs.iter().map(|(k, _)| k).chain(rhs.iter().map(|(k, _)| k)).collect();
    keys.into_iter()
        .map(|k| Comparison::new(format!("{label} [P{k}]"), lhs.coefficient(k), rhs.coefficient(k)))
        .collect()
}

/// The commutation relations applied to `P_β`:
/// `G⁻(u)G⁺(v) = F(uv) G⁺(v)G⁻(u)`, `D(z)G⁺(u) = G⁺(zu)D(z)`,
/// `D(z)G⁻(u) = G⁻(z⁻¹u)D(z)` and `D(z)D(z') = D(zz')`.
pub fn lemma2(beta: &Partition, pt: &QtPoint, degree: u32) -> Result<Vec<Comparison>> {
    let aux = |c| Monomial::var(VarLabel::Aux(c, 0));
    let (u, v, z, z2) = (aux('u'), aux('v'), aux('z'), aux('w'));
    let h = SymFunc::basis(beta.clone(), degree, beta.size() + degree);
    let mut out = Vec::new();

    let left = h.apply_gplus(&v, pt)?.apply_gminus(&u, pt)?;
    let right = h
        .apply_gminus(&u, pt)?
        .apply_gplus(&v, pt)?
        .scale_series(&f_series(&u.mul(&v), pt, degree)?)?;
    out.extend(symfunc_comparisons(&format!("G-G+ on P{beta}"), &left, &right));

    let left = h.apply_gplus(&u, pt)?.apply_d(&z)?;
    let right = h.apply_d(&z)?.apply_gplus(&z.mul(&u), pt)?;
    out.extend(symfunc_comparisons(&format!("DG+ on P{beta}"), &left, &right));

    let left = h.apply_gminus(&u, pt)?.apply_d(&z)?;
    let right = h.apply_d(&z)?.apply_gminus(&z.inverse().mul(&u), pt)?;
    out.extend(symfunc_comparisons(&format!("DG- on P{beta}"), &left, &right));

    let left = h.apply_d(&z2)?.apply_d(&z)?;
    let right = h.apply_d(&z.mul(&z2))?;
    out.extend(symfunc_comparisons(&format!("DD on P{beta}"), &left, &right));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtcore::sample_qt_point;

    fn ok(c: &Comparison) {
        assert_eq!(c.mismatch().unwrap(), None, "{}", c.label);
    }

    #[test]
    fn small_identities() {
        let pt = sample_qt_point(31);
        ok(&cauchy(2, 2, &pt, 4).unwrap());
        ok(&gn_generating_function(2, &pt, 4).unwrap());
        ok(&schur_littlewood(2, &pt, 4).unwrap());
        ok(&warnaar(2, &WarnaarParam::Symbolic, &pt, 4).unwrap());
        for c in warnaar_rescaled(2, &pt, 4).unwrap() {
            ok(&c);
        }
    }

    #[test]
    fn cauchy_degree_one_slice() {
        let pt = sample_qt_point(4);
        let c = cauchy(2, 2, &pt, 2).unwrap();
        let m = alphabet('x', 2)[0].mul(&alphabet('u', 2)[1]);
        assert_eq!(c.rhs.coefficient(&m), pt.f(1, 0).unwrap());
        assert_eq!(c.lhs.coefficient(&m), pt.f(1, 0).unwrap());
    }

    #[test]
    fn warnaar_at_one_is_schur_littlewood() {
        let pt = sample_qt_point(5);
        let w = warnaar(3, &WarnaarParam::Rational(Scalar::from_integer(1.into())), &pt, 4).unwrap();
        let s = schur_littlewood(3, &pt, 4).unwrap();
        assert_eq!(w.lhs, s.lhs);
        assert_eq!(w.rhs, s.rhs);
    }

    #[test]
    fn commutation_on_small_partitions() {
        let pt = sample_qt_point(6);
        for beta in Partition::all_up_to(2, 2) {
            for c in lemma2(&beta, &pt, 4).unwrap() {
                ok(&c);
            }
        }
    }

    #[test]
    fn broken_identity_is_detected() {
        let pt = sample_qt_point(7);
        let mut c = schur_littlewood(2, &pt, 3).unwrap();
        c.rhs.perturb(3, &Scalar::from_integer(1.into()));
        assert!(c.mismatch().unwrap().is_some());
    }
}
