use super::job::{Subject, Target, VerificationJob};
use super::report::{Check, Trial};
use crate::dcomplete::{
    build, conjecture_lhs_from, conjecture_rhs, enumerate_p_partitions, tree_recursion_check, weight_w_p,
    weight_w_p_extended, ColoredPoset, PosetSpec, WeightPlan,
};
use crate::error::{Error, Result};
use crate::macdonald::oracle::{ps_add, ps_mul, ps_scale, PowerSum};
use crate::macdonald::{
    cauchy, gn_generating_function, lemma2, operator_word_eval, phi_minus, phi_plus, schur_littlewood,
    warnaar, warnaar_rescaled, Evaluator, Oracle, WarnaarParam,
};
use crate::qtcore::{
    product_f, product_geometric, scalar_int, Comparison, HalfInt, Monomial, QtPoint, Scalar, TruncatedSeries,
    VarLabel,
};
use crate::tableaux::{
    closed_form_hook_monomial, complement_and_epsilon, default_n, enumerate_ppartitions, lhs_from_arrays,
    tilde_z, weight_w_shape, weight_w_shifted, Diagram, PPartitionArray, Partition, StrictPartition, WeightKind,
};

/// Computes every comparison of a job without judging it.
pub fn collect(job: &VerificationJob) -> Result<Vec<Trial>> {
    job.validate()?;
    let points = job.sample();
    let d = job.degree;
    match job.target {
        Target::Gansner => gansner(subject(job)?, d),
        Target::MainA | Target::MainB => main_theorem(&diagram(job)?, &points, d),
        Target::Refined => refined(&shifted(job)?, job.profile.as_ref(), &points, d),
        Target::Lemma1 => lemma1(&shifted(job)?, &points, d),
        Target::Identities => identities(&points, d),
        Target::Conjecture => conjecture(subject(job)?, &points, d),
        Target::CrossChecks => cross_checks(job.subject.as_ref(), &points, d),
    }
}

fn subject(job: &VerificationJob) -> Result<&Subject> {
    job.subject
        .as_ref()
        .ok_or_else(|| Error::Config(format!("target {} needs a poset", job.target)))
}

fn spec_diagram(spec: &PosetSpec) -> Option<Diagram> {
    match spec {
        PosetSpec::Shape(l) => Some(Diagram::normal(l)),
        PosetSpec::Shifted { mu, .. } => Some(Diagram::shifted(mu)),
        _ => None,
    }
}

fn diagram(job: &VerificationJob) -> Result<Diagram> {
    match &job.subject {
        Some(Subject::Spec(s)) => spec_diagram(s),
        _ => None,
    }
    .ok_or_else(|| Error::Config(format!("target {} needs a shape", job.target)))
}

fn shifted(job: &VerificationJob) -> Result<StrictPartition> {
    match &job.subject {
        Some(Subject::Spec(PosetSpec::Shifted { mu, .. })) => Ok(mu.clone()),
        _ => Err(Error::Config(format!("target {} needs a shifted shape", job.target))),
    }
}

fn gansner(subject: &Subject, degree: u32) -> Result<Vec<Trial>> {
    let check = match subject {
        Subject::Spec(spec) if spec_diagram(spec).is_some() => {
            let d = spec_diagram(spec).expect("diagram spec");
            let arrays = enumerate_ppartitions(&d, degree, None)?;
            let lhs = lhs_from_arrays(&d, &arrays, None, degree, WeightKind::Unweighted)?;
            let rhs = product_geometric(&d.hook_monomials(), degree)?;
            Check::new(Comparison::new("hook product", lhs, rhs), arrays.len())
        }
        _ => {
            let cp = ColoredPoset::new(&subject.labeled()?)?;
            let sigmas = enumerate_p_partitions(&cp, degree)?;
            let lhs = conjecture_lhs_from(&cp, &sigmas, None, degree)?;
            let rhs = product_geometric(&cp.hook_monomials()?, degree)?;
            Check::new(Comparison::new("hook product", lhs, rhs), sigmas.len())
        }
    };
    Ok(vec![Trial {
        point: None,
        checks: vec![check],
    }])
}

fn main_theorem(d: &Diagram, points: &[QtPoint], degree: u32) -> Result<Vec<Trial>> {
    let arrays = enumerate_ppartitions(d, degree, None)?;
    let hooks = d.hook_monomials();
    points
        .iter()
        .map(|pt| {
            let lhs = lhs_from_arrays(d, &arrays, Some(pt), degree, WeightKind::W)?;
            let rhs = product_f(&hooks, pt, degree)?;
            Ok(Trial {
                point: Some(pt.clone()),
                checks: vec![Check::new(Comparison::new("weighted hook product", lhs, rhs), arrays.len())],
            })
        })
        .collect()
}

/// `(μᶜ_k, μ_l)` with `μᶜ_k < μ_l`, complement taken in `[n]`.
pub fn refined_pairs(mu: &StrictPartition, n: u32) -> Result<Vec<(u32, u32)>> {
    let (comp, _) = complement_and_epsilon(mu, n)?;
    let mut out = Vec::new();
    for &k in &comp {
        for &l in mu.parts() {
            if k < l {
                out.push((k, l));
            }
        }
    }
    Ok(out)
}

/// The arguments `z̃_{μᶜ_k}^{-1} z̃_{μ_l}` of the `F` factors.
pub fn refined_prefactor_monomials(mu: &StrictPartition, n: u32) -> Result<Vec<Monomial>> {
    refined_pairs(mu, n)?
        .into_iter()
        .map(|(k, l)| {
            let m = tilde_z(l).div(&tilde_z(k));
            if m.is_admissible() {
                Ok(m)
            } else {
                Err(Error::InvalidMonomial(format!("z̃_{k}^-1 z̃_{l} = {m}")))
            }
        })
        .collect()
}

fn refined(mu: &StrictPartition, profile: Option<&Partition>, points: &[QtPoint], degree: u32) -> Result<Vec<Trial>> {
    let d = Diagram::shifted(mu);
    let n = mu.largest();
    let taus = match profile {
        Some(t) => vec![t.clone()],
        None => Partition::all_up_to(degree, mu.len()),
    };
    let arrays: Vec<Vec<PPartitionArray>> = taus
        .iter()
        .map(|t| enumerate_ppartitions(&d, degree, Some(t)))
        .collect::<Result<_>>()?;
    let prefactor = refined_prefactor_monomials(mu, n)?;
    let args: Vec<Monomial> = mu.parts().iter().map(|&m| tilde_z(m)).collect();
    points
        .iter()
        .map(|pt| {
            let pre = product_f(&prefactor, pt, degree)?;
            let mut eval = Evaluator::new(&args, pt, degree)?;
            let mut checks = Vec::with_capacity(taus.len());
            for (tau, arr) in taus.iter().zip(&arrays) {
                let lhs = lhs_from_arrays(&d, arr, Some(pt), degree, WeightKind::V)?;
                let rhs = pre.mul(&eval.q_all(tau)?)?;
                checks.push(Check::new(Comparison::new(format!("profile {tau}"), lhs, rhs), arr.len()));
            }
            Ok(Trial {
                point: Some(pt.clone()),
                checks,
            })
        })
        .collect()
}

fn lemma1(mu: &StrictPartition, points: &[QtPoint], degree: u32) -> Result<Vec<Trial>> {
    let d = Diagram::shifted(mu);
    let taus = Partition::all_up_to(degree, mu.len());
    let arrays: Vec<Vec<PPartitionArray>> = taus
        .iter()
        .map(|t| enumerate_ppartitions(&d, degree, Some(t)))
        .collect::<Result<_>>()?;
    points
        .iter()
        .map(|pt| {
            let word = operator_word_eval(mu, mu.largest(), pt, degree)?;
            let mut checks = Vec::new();
            for (tau, arr) in taus.iter().zip(&arrays) {
                let lhs = lhs_from_arrays(&d, arr, Some(pt), degree, WeightKind::V)?;
                let label = format!("coefficient of P{tau}");
                checks.push(Check::new(Comparison::new(label, lhs, word.coefficient(tau)), arr.len()));
            }
            // profiles longer than μ have no arrays
            for (tau, c) in word.iter().filter(|(t, _)| t.len() > mu.len()) {
                let label = format!("coefficient of P{tau}");
                checks.push(Check::new(Comparison::new(label, TruncatedSeries::zero(degree), c.clone()), 0));
            }
            Ok(Trial {
                point: Some(pt.clone()),
                checks,
            })
        })
        .collect()
}

fn identities(points: &[QtPoint], degree: u32) -> Result<Vec<Trial>> {
    points
        .iter()
        .map(|pt| {
            let mut cmps = vec![
                cauchy(2, 2, pt, degree)?,
                cauchy(3, 2, pt, degree)?,
                gn_generating_function(3, pt, degree)?,
            ];
            let sl = schur_littlewood(3, pt, degree)?;
            let w1 = warnaar(3, &WarnaarParam::Rational(scalar_int(1)), pt, degree)?;
            cmps.push(Comparison::new("warnaar at a=1, left side", w1.lhs, sl.lhs.clone()));
            cmps.push(Comparison::new("warnaar at a=1, right side", w1.rhs, sl.rhs.clone()));
            cmps.push(sl);
            cmps.push(warnaar(3, &WarnaarParam::Symbolic, pt, degree)?);
            cmps.extend(warnaar_rescaled(3, pt, degree)?);
            for n in 0..=3 {
                for beta in Partition::all(n) {
                    cmps.extend(lemma2(&beta, pt, degree)?);
                }
            }
            Ok(Trial {
                point: Some(pt.clone()),
                checks: cmps.into_iter().map(|c| Check::new(c, 0)).collect(),
            })
        })
        .collect()
}

fn conjecture(subject: &Subject, points: &[QtPoint], degree: u32) -> Result<Vec<Trial>> {
    let lp = subject.labeled()?;
    let cp = ColoredPoset::new(&lp)?;
    let sigmas = enumerate_p_partitions(&cp, degree)?;
    let is_tree = cp.top_tree.len() == cp.len();
    let shifted_hooks = match subject {
        Subject::Spec(PosetSpec::Shifted { mu, .. }) => Some(Diagram::shifted(mu).hook_monomials()),
        _ => None,
    };
    points
        .iter()
        .map(|pt| {
            let lhs = conjecture_lhs_from(&cp, &sigmas, Some(pt), degree)?;
            let rhs = conjecture_rhs(&cp, pt, degree)?;
            let mut checks = Vec::new();
            if let Some(hooks) = &shifted_hooks {
                let merged = lhs.substitute(VarLabel::ZeroPrime, VarLabel::Int(0));
                let cmp = Comparison::new("merged diagonal colors", merged, product_f(hooks, pt, degree)?);
                checks.push(Check::new(cmp, sigmas.len()));
            }
            checks.insert(0, Check::new(Comparison::new("hook product", lhs, rhs), sigmas.len()));
            if is_tree {
                checks.push(Check::new(tree_recursion_check(&lp, pt, degree)?, sigmas.len()));
            }
            Ok(Trial {
                point: Some(pt.clone()),
                checks,
            })
        })
        .collect()
}

fn marker(c: char, counts: impl IntoIterator<Item = (u32, u32)>) -> Monomial {
    Monomial::from_factors(
        counts
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(k, e)| (VarLabel::Aux(c, k), HalfInt::from_int(e as i32))),
    )
}

/// Faithful encoding of a partition as a monomial of degree `|λ|`.
fn partition_marker(c: char, lambda: &Partition) -> Monomial {
    let mut counts = std::collections::BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    marker(c, counts.into_iter().map(|(p, n)| (p, p * n)))
}

/// Power sums as a series with `p_r` read as `Aux('p', r)`.
fn power_sum_series(ps: &PowerSum, degree: u32) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(degree);
    for (rho, c) in ps {
        let mut counts = std::collections::BTreeMap::new();
        for &p in rho.parts() {
            *counts.entry(p).or_insert(0u32) += 1;
        }
        let m = Monomial::from_factors(counts.into_iter().map(|(p, n)| (VarLabel::Aux('p', p), HalfInt::from_int(n as i32))));
        s.try_add_term(m, c.clone())?;
    }
    Ok(s)
}

/// The diagrams checked by `cross_checks` with no subject.
pub fn cross_check_specs() -> Vec<PosetSpec> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.extend(Partition::all(n).into_iter().map(PosetSpec::Shape));
    }
    for n in 1..=5 {
        out.extend(
            StrictPartition::all(n)
                .into_iter()
                .map(|mu| PosetSpec::Shifted { mu, two_color: true }),
        );
    }
    out
}

struct CrossSubject {
    name: String,
    diagram: Diagram,
    colored: ColoredPoset,
    arrays: Vec<PPartitionArray>,
}

fn hook_checks(s: &CrossSubject) -> Result<Vec<Check>> {
    let d = &s.diagram;
    let n = default_n(d.shape());
    let from_poset = s.colored.hook_monomials()?;
    let diagram_hooks = d.hook_monomials();
    let closed: Vec<Monomial> = d
        .cells()
        .iter()
        .map(|&c| closed_form_hook_monomial(d.shape(), c, n))
        .collect::<Result<_>>()?;
    let degree = diagram_hooks.iter().filter_map(Monomial::int_degree).max().unwrap_or(0) + 1;
    let encode = |hooks: &[Monomial]| -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::zero(degree);
        for (v, h) in hooks.iter().enumerate() {
            let m = h.mul(&marker('h', [(v as u32, 1)]));
            acc.try_add_term(m.substitute(VarLabel::ZeroPrime, VarLabel::Int(0)), Scalar::from_integer(1.into()))?;
        }
        Ok(acc)
    };
    let reference = encode(&diagram_hooks)?;
    Ok(vec![
        Check::new(
            Comparison::new(format!("{}: inductive hooks", s.name), encode(&from_poset)?, reference.clone()),
            0,
        ),
        Check::new(Comparison::new(format!("{}: closed-form hooks", s.name), encode(&closed)?, reference), 0),
    ])
}

fn weight_checks(s: &CrossSubject, pt: &QtPoint, degree: u32) -> Result<Vec<Check>> {
    let plan = WeightPlan::new(&s.colored)?;
    let d = &s.diagram;
    let encode = |w: &dyn Fn(&PPartitionArray) -> Result<Scalar>| -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::zero(degree);
        for a in &s.arrays {
            let m = marker('s', a.values().iter().enumerate().map(|(e, &v)| (e as u32, v)));
            acc.try_add_term(m, w(a)?)?;
        }
        Ok(acc)
    };
    let direct = encode(&|a| weight_w_p(&plan, a.values(), pt))?;
    let extended = encode(&|a| weight_w_p_extended(&s.colored, &plan, a.values(), pt))?;
    let diagram_weight = encode(&|a| {
        if d.is_shifted() {
            weight_w_shifted(a, d, pt)
        } else {
            weight_w_shape(a, d, pt)
        }
    })?;
    let n = s.arrays.len();
    Ok(vec![
        Check::new(Comparison::new(format!("{}: poset weight", s.name), direct.clone(), diagram_weight), n),
        Check::new(Comparison::new(format!("{}: extended-poset weight", s.name), extended, direct), n),
    ])
}

fn pieri_checks(pt: &QtPoint) -> Result<Vec<Check>> {
    let mut oracle = Oracle::new(pt);
    let mut out = Vec::new();
    for size in 0..=4 {
        for beta in Partition::all(size) {
            let p_beta = oracle.macdonald_p(&beta)?;
            for n in 1..=3 {
                let top = size + n;
                let g_p_beta = ps_mul(&oracle.g(n)?, &p_beta);
                let mut expanded = PowerSum::new();
                let mut skew_lhs = TruncatedSeries::zero(top);
                let mut skew_rhs = TruncatedSeries::zero(top);
                for alpha in beta.strips_above(n).into_iter().filter(|a| a.size() == top) {
                    let p_alpha = oracle.macdonald_p(&alpha)?;
                    expanded = ps_add(&expanded, &ps_scale(&p_alpha, &phi_plus(&alpha, &beta, pt)?));
                    let mut skewed = PowerSum::new();
                    for b in alpha.strips_below().into_iter().filter(|b| b.size() == size) {
                        skewed = ps_add(&skewed, &ps_scale(&oracle.macdonald_p(&b)?, &phi_minus(&b, &alpha, pt)?));
                    }
                    let m = partition_marker('a', &alpha);
                    skew_lhs.try_add_term(m.clone(), oracle.inner(&skewed, &p_beta))?;
                    skew_rhs.try_add_term(m, oracle.inner(&p_alpha, &g_p_beta))?;
                }
                out.push(Check::new(
                    Comparison::new(
                        format!("g_{n} P{beta} by φ⁺"),
                        power_sum_series(&g_p_beta, top)?,
                        power_sum_series(&expanded, top)?,
                    ),
                    0,
                ));
                out.push(Check::new(Comparison::new(format!("skewing onto P{beta} by φ⁻, n={n}"), skew_lhs, skew_rhs), 0));
            }
        }
    }
    Ok(out)
}

fn cross_checks(subject: Option<&Subject>, points: &[QtPoint], degree: u32) -> Result<Vec<Trial>> {
    let specs = match subject {
        Some(Subject::Spec(s)) => vec![match s {
            PosetSpec::Shifted { mu, .. } => PosetSpec::Shifted {
                mu: mu.clone(),
                two_color: true,
            },
            other => other.clone(),
        }],
        Some(Subject::File { .. }) => return Err(Error::Config("cross checks need a diagram".into())),
        None => cross_check_specs(),
    };
    let subjects: Vec<CrossSubject> = specs
        .iter()
        .map(|spec| {
            let diagram = spec_diagram(spec).ok_or_else(|| Error::Config("cross checks need a diagram".into()))?;
            let colored = ColoredPoset::new(&build(spec)?)?;
            let arrays = enumerate_ppartitions(&diagram, degree, None)?;
            let name = Subject::Spec(spec.clone()).to_string();
            Ok(CrossSubject {
                name,
                diagram,
                colored,
                arrays,
            })
        })
        .collect::<Result<_>>()?;
    let mut trials = vec![Trial {
        point: None,
        checks: subjects.iter().map(hook_checks).collect::<Result<Vec<_>>>()?.concat(),
    }];
    for pt in points {
        let mut checks = Vec::new();
        for s in &subjects {
            checks.extend(weight_checks(s, pt, degree)?);
        }
        if subject.is_none() {
            checks.extend(pieri_checks(pt)?);
        }
        trials.push(Trial {
            point: Some(pt.clone()),
            checks,
        });
    }
    Ok(trials)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refined_pair_count() {
        let mu = StrictPartition::new(vec![6, 5, 2]).unwrap();
        let pairs = refined_pairs(&mu, 6).unwrap();
        // each part l sees l - 1 smaller integers, minus the smaller parts
        let by_parts: usize = mu
            .parts()
            .iter()
            .map(|&l| (l - 1) as usize - mu.parts().iter().filter(|&&m| m < l).count())
            .sum();
        assert_eq!(pairs.len(), by_parts);
        assert_eq!(by_parts, 7);
        for m in refined_prefactor_monomials(&mu, 6).unwrap() {
            assert!(m.is_admissible() && !m.is_one());
        }
    }

    #[test]
    fn partition_markers_are_faithful() {
        let mut seen = std::collections::BTreeSet::new();
        for n in 0..=6 {
            for l in Partition::all(n) {
                let m = partition_marker('a', &l);
                assert_eq!(m.int_degree(), Some(n));
                assert!(seen.insert(m));
            }
        }
    }
}
