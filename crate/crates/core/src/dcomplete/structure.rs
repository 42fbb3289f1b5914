use std::collections::BTreeSet;

use super::poset::{dk1, dk1_minus, Poset};
use crate::error::{Error, Result};

/// Whether two small posets are isomorphic (backtracking over bijections
/// that preserve covers, pruned by cover degrees).
pub fn is_isomorphic(a: &Poset, b: &Poset) -> bool {
    let n = a.len();
    if n != b.len() || a.cover_pairs().len() != b.cover_pairs().len() {
        return false;
    }
    let sig = |p: &Poset, e: usize| (p.uppers(e).len(), p.lowers(e).len());
    let mut sa: Vec<_> = (0..n).map(|e| sig(a, e)).collect();
    let mut sb: Vec<_> = (0..n).map(|e| sig(b, e)).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(a: &Poset, b: &Poset, k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if k == a.len() {
            return true;
        }
        for cand in 0..b.len() {
            if used[cand]
                || a.uppers(k).len() != b.uppers(cand).len()
                || a.lowers(k).len() != b.lowers(cand).len()
            {
                continue;
            }
            let consistent = (0..k).all(|j| {
                a.covers(k, j) == b.covers(cand, map[j]) && a.covers(j, k) == b.covers(map[j], cand)
            });
            if !consistent {
                continue;
            }
            map[k] = cand;
            used[cand] = true;
            if extend(a, b, k + 1, map, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    extend(a, b, 0, &mut map, &mut used)
}

/// A `d_k`-interval `[bottom, top]` with its two sides.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DkInterval {
    pub k: u32,
    pub bottom: usize,
    pub top: usize,
    pub sides: (usize, usize),
}

/// A `d_k^-`-interval: elements, bottom and maximal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DkMinus {
    pub k: u32,
    pub bottom: usize,
    pub maximal: Vec<usize>,
    pub elements: Vec<usize>,
}

/// All `d_k`- and `d_k^-`-intervals of a poset.
#[derive(Debug, Clone, Default)]
pub struct Intervals {
    pub full: Vec<DkInterval>,
    pub minus: Vec<DkMinus>,
}

impl Intervals {
    pub fn with_top(&self, v: usize) -> impl Iterator<Item = &DkInterval> {
        self.full.iter().filter(move |i| i.top == v)
    }

    pub fn with_bottom(&self, w: usize) -> impl Iterator<Item = &DkInterval> {
        self.full.iter().filter(move |i| i.bottom == w)
    }
}

pub fn find_intervals(p: &Poset) -> Intervals {
    let n = p.len();
    let mut out = Intervals::default();
    let mut full_templates = Vec::new();
    let mut minus_templates = Vec::new();
    for w in 0..n {
        for v in 0..n {
            if !p.lt(w, v) {
                continue;
            }
            let elems = p.interval(w, v);
            let size = elems.len() as u32;
            if size >= 4 && size.is_multiple_of(2) {
                let k = size / 2 + 1;
                while full_templates.len() <= k as usize {
                    let kk = full_templates.len() as u32;
                    full_templates.push(if kk >= 3 { Some(dk1(kk).expect("k >= 3")) } else { None });
                }
                let sub = p.induced(&elems);
                if is_isomorphic(&sub, full_templates[k as usize].as_ref().expect("k >= 3")) {
                    let sides: Vec<usize> = elems
                        .iter()
                        .copied()
                        .filter(|&x| elems.iter().any(|&y| !p.comparable(x, y)))
                        .collect();
                    out.full.push(DkInterval {
                        k,
                        bottom: w,
                        top: v,
                        sides: (sides[0], sides[1]),
                    });
                }
            }
            if size >= 5 && size % 2 == 1 {
                let k = (size + 3) / 2;
                while minus_templates.len() <= k as usize {
                    let kk = minus_templates.len() as u32;
                    minus_templates.push(if kk >= 4 { Some(dk1_minus(kk).expect("k >= 4")) } else { None });
                }
                let sub = p.induced(&elems);
                if is_isomorphic(&sub, minus_templates[k as usize].as_ref().expect("k >= 4")) {
                    out.minus.push(DkMinus {
                        k,
                        bottom: w,
                        maximal: vec![v],
                        elements: elems,
                    });
                }
            }
        }
    }
    // d_3^-: w covered by two elements x, y
    for w in 0..n {
        let ups = p.uppers(w);
        for (i, &x) in ups.iter().enumerate() {
            for &y in &ups[i + 1..] {
                out.minus.push(DkMinus {
                    k: 3,
                    bottom: w,
                    maximal: vec![x, y],
                    elements: vec![w, x, y],
                });
            }
        }
    }
    out
}

/// Outcome of checking (D1)–(D3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCompleteReport {
    pub violations: Vec<String>,
}

impl DCompleteReport {
    pub fn is_dcomplete(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_dcomplete(p: &Poset) -> DCompleteReport {
    let mut violations = Vec::new();
    let maxima = p.maximal_elements();
    if maxima.len() != 1 {
        violations.push(format!("{} maximal elements", maxima.len()));
    }
    let iv = find_intervals(p);
    let names = |v: &[usize]| v.iter().map(|&e| p.name(e).to_string()).collect::<Vec<_>>().join(",");
    for m in &iv.minus {
        // (D1): some v covering the maximal elements completes a d_k-interval
        let completes = (0..p.len()).any(|v| {
            m.maximal.iter().all(|&x| p.covers(v, x))
                && iv.full.iter().any(|f| f.bottom == m.bottom && f.top == v && f.k == m.k)
        });
        if !completes {
            violations.push(format!(
                "D1: d_{}^- interval with bottom {} and top {} has no completion",
                m.k,
                p.name(m.bottom),
                names(&m.maximal)
            ));
        }
    }
    for f in &iv.full {
        let elems: BTreeSet<usize> = p.interval(f.bottom, f.top).into_iter().collect();
        for &u in p.lowers(f.top) {
            if !elems.contains(&u) {
                violations.push(format!(
                    "D2: top {} of a d_{} interval covers {} outside it",
                    p.name(f.top),
                    f.k,
                    p.name(u)
                ));
            }
        }
    }
    for (i, a) in iv.minus.iter().enumerate() {
        for b in &iv.minus[i + 1..] {
            if a.k != b.k || a.bottom == b.bottom {
                continue;
            }
            let rest = |m: &DkMinus| -> BTreeSet<usize> {
                m.elements.iter().copied().filter(|&e| e != m.bottom).collect()
            };
            if rest(a) == rest(b) {
                violations.push(format!(
                    "D3: d_{}^- intervals below {} differ only in their minimal elements",
                    a.k,
                    names(&a.maximal)
                ));
            }
        }
    }
    DCompleteReport { violations }
}

/// Elements `x` such that every `y >= x` has at most one upper cover.
pub fn top_tree(p: &Poset) -> Result<Vec<usize>> {
    let tree: Vec<usize> = (0..p.len())
        .filter(|&x| (0..p.len()).filter(|&y| p.leq(x, y)).all(|y| p.uppers(y).len() <= 1))
        .collect();
    // connected and acyclic on its induced Hasse edges
    let edges = p
        .cover_pairs()
        .into_iter()
        .filter(|(a, b)| tree.contains(a) && tree.contains(b))
        .count();
    if !tree.is_empty() && edges + 1 != tree.len() {
        return Err(Error::InvalidSpec("the top tree is not a tree".into()));
    }
    Ok(tree)
}

/// Unique maximal element and `r(v) = maxdepth - depth(v)`, where `depth`
/// is the length of every saturated chain from `v` up to the maximum.
pub fn rank(p: &Poset) -> Result<(usize, Vec<i32>)> {
    let maxima = p.maximal_elements();
    let [v0] = maxima[..] else {
        return Err(Error::InvalidSpec(format!(
            "expected a unique maximal element, found {}",
            maxima.len()
        )));
    };
    let n = p.len();
    let mut depth: Vec<Option<i32>> = vec![None; n];
    depth[v0] = Some(0);
    // repeated relaxation in order of the number of elements above
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (0..n).filter(|&y| p.lt(e, y)).count());
    for &e in &order {
        if e == v0 {
            continue;
        }
        let mut d = None;
        for &u in p.uppers(e) {
            let du = depth[u].expect("upper covers come first") + 1;
            match d {
                None => d = Some(du),
                Some(x) if x != du => {
                    return Err(Error::InconsistentChainLengths(format!(
                        "chains from {} to the maximum have lengths {x} and {du}",
                        p.name(e)
                    )))
                }
                _ => {}
            }
        }
        depth[e] = d;
    }
    let depth: Vec<i32> = depth.into_iter().map(|d| d.expect("connected below the maximum")).collect();
    let maxdepth = depth.iter().copied().max().unwrap_or(0);
    Ok((v0, depth.into_iter().map(|d| maxdepth - d).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dcomplete::poset::{build, diagram_poset, parse_tree, PosetSpec};
    use crate::tableaux::{Diagram, Partition, StrictPartition};

    fn shape(v: &[u32]) -> Poset {
        diagram_poset(&Diagram::normal(&Partition::new(v.to_vec()).unwrap()))
    }

    fn shifted(v: &[u32]) -> Poset {
        diagram_poset(&Diagram::shifted(&StrictPartition::new(v.to_vec()).unwrap()))
    }

    #[test]
    fn small_isomorphisms() {
        assert!(is_isomorphic(&dk1(3).unwrap(), &shape(&[2, 2])));
        assert!(is_isomorphic(&dk1(4).unwrap(), &shifted(&[3, 2, 1])));
        assert!(!is_isomorphic(&dk1(3).unwrap(), &shape(&[3, 1])));
        assert!(!is_isomorphic(&dk1(4).unwrap(), &shape(&[3, 2, 1])));
    }

    #[test]
    fn intervals_of_diamond() {
        for k in 3..=6 {
            let p = dk1(k).unwrap();
            let iv = find_intervals(&p);
            let tops: Vec<_> = iv.full.iter().map(|f| (f.k, f.bottom, f.top)).collect();
            assert!(tops.contains(&(k, 0, p.len() - 1)));
            assert!(tops.iter().all(|&(j, _, _)| j <= k));
            assert!(check_dcomplete(&p).is_dcomplete());
        }
    }

    #[test]
    fn dcomplete_examples() {
        for n in 1..=6 {
            for l in Partition::all(n) {
                assert!(check_dcomplete(&shape(l.parts())).is_dcomplete(), "{l}");
            }
            for m in StrictPartition::all(n) {
                assert!(check_dcomplete(&shifted(m.parts())).is_dcomplete());
            }
        }
        assert!(check_dcomplete(&parse_tree("(a(b)(c(d)(e)))").unwrap()).is_dcomplete());
        let v = Poset::new(vec!["w".into(), "x".into(), "y".into()], &[(0, 1), (0, 2)]).unwrap();
        assert!(!check_dcomplete(&v).is_dcomplete());
        // the diamond minus its top has no completion
        let bare = crate::dcomplete::poset::dk1_minus(5).unwrap();
        assert!(!check_dcomplete(&bare).is_dcomplete());
    }

    #[test]
    fn top_trees() {
        let chain = Poset::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(top_tree(&chain).unwrap(), vec![0, 1, 2]);
        for k in 3..=6 {
            assert_eq!(top_tree(&dk1(k).unwrap()).unwrap().len() as u32, k);
        }
        let l = Partition::new(vec![5, 4, 3, 1]).unwrap();
        let d = Diagram::normal(&l);
        let want: Vec<usize> = d
            .cells()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.i == 1 || c.j == 1)
            .map(|(k, _)| k)
            .collect();
        assert_eq!(top_tree(&diagram_poset(&d)).unwrap(), want);
        let s = build(&PosetSpec::Shifted {
            mu: StrictPartition::new(vec![7, 6, 3, 1]).unwrap(),
            two_color: true,
        })
        .unwrap();
        assert_eq!(top_tree(&s.poset).unwrap().len(), 8);
    }

    #[test]
    fn ranks() {
        let p = shape(&[3, 2]);
        let (v0, r) = rank(&p).unwrap();
        assert_eq!(v0, 0);
        assert_eq!(r, vec![2, 1, 0, 1, 0]);
        let bad = Poset::new(
            (0..5).map(|i| i.to_string()).collect(),
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
        .unwrap();
        assert!(matches!(rank(&bad), Err(Error::InconsistentChainLengths(_))));
    }
}
