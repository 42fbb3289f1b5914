use std::collections::BTreeMap;

use super::poset::{LabeledPoset, Poset};
use super::structure::{find_intervals, rank, top_tree, Intervals};
use crate::error::{Error, Result};
use crate::qtcore::{HalfInt, Monomial, VarLabel};

/// A connected d-complete poset with its top tree, rank function,
/// d-complete coloring and hook monomials.
///
/// Colors are top-tree elements: `color[x]` is the element of `T` whose
/// color `x` carries. `labels` names each top-tree element's variable; two
/// top-tree elements may share a label (e.g. `0` and `0'` merged).
#[derive(Debug, Clone)]
pub struct ColoredPoset {
    pub poset: Poset,
    pub max_element: usize,
    pub rank: Vec<i32>,
    pub top_tree: Vec<usize>,
    pub color: Vec<usize>,
    pub labels: BTreeMap<usize, VarLabel>,
    pub intervals: Intervals,
}

impl ColoredPoset {
    pub fn new(lp: &LabeledPoset) -> Result<Self> {
        let poset = lp.poset.clone();
        if !poset.is_connected() {
            return Err(Error::InvalidSpec("the poset is not connected".into()));
        }
        let (max_element, rank) = rank(&poset)?;
        let tree = top_tree(&poset)?;
        let mut labels = BTreeMap::new();
        for &e in &tree {
            let label = lp
                .top_labels
                .get(&e)
                .cloned()
                .unwrap_or(VarLabel::Id(e as u32));
            labels.insert(e, label);
        }
        let intervals = find_intervals(&poset);
        let color = extend_coloring(&poset, &tree, &rank, &intervals)?;
        let out = Self {
            poset,
            max_element,
            rank,
            top_tree: tree,
            color,
            labels,
            intervals,
        };
        out.check_coloring()?;
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Label of the variable attached to element `x`.
    pub fn label(&self, x: usize) -> VarLabel {
        self.labels[&self.color[x]]
    }

    /// Whether two colors (top-tree elements) are adjacent in `T`.
    pub fn adjacent_colors(&self, a: usize, b: usize) -> bool {
        self.poset.covers(a, b) || self.poset.covers(b, a)
    }

    /// `z^σ = prod_v z_{c(v)}^{σ(v)}`.
    pub fn color_monomial(&self, sigma: &[u32]) -> Monomial {
        Monomial::from_factors(
            sigma
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(x, &v)| (self.label(x), HalfInt::from_int(v as i32))),
        )
    }

    /// Exhaustive check of (C1)–(C4).
    pub fn check_coloring(&self) -> Result<()> {
        let p = &self.poset;
        let c = &self.color;
        let n = p.len();
        let fail = |msg: String| Err(Error::ExtensionFailed(msg));
        for x in 0..n {
            for y in x + 1..n {
                if !p.comparable(x, y) && c[x] == c[y] {
                    return fail(format!("C1: {} and {} are incomparable", p.name(x), p.name(y)));
                }
            }
            for &u in p.uppers(x) {
                if c[x] == c[u] {
                    return fail(format!("C2: {} covers {}", p.name(u), p.name(x)));
                }
            }
        }
        for w in 0..n {
            for v in 0..n {
                if !p.leq(w, v) {
                    continue;
                }
                let iv = p.interval(w, v);
                let is_chain = iv.iter().all(|&a| iv.iter().all(|&b| p.comparable(a, b)));
                if is_chain {
                    let mut colors: Vec<usize> = iv.iter().map(|&a| c[a]).collect();
                    colors.sort_unstable();
                    colors.dedup();
                    if colors.len() != iv.len() {
                        return fail(format!("C3: chain [{}, {}] repeats a color", p.name(w), p.name(v)));
                    }
                }
            }
        }
        for f in &self.intervals.full {
            if c[f.bottom] != c[f.top] {
                return fail(format!("C4: d_{}-interval [{}, {}]", f.k, p.name(f.bottom), p.name(f.top)));
            }
        }
        Ok(())
    }

    /// Hook monomials `z[H_P(v)]`, computed upward in rank.
    pub fn hook_monomials(&self) -> Result<Vec<Monomial>> {
        let p = &self.poset;
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&e| (self.rank[e], e));
        let mut hooks: Vec<Option<Monomial>> = vec![None; p.len()];
        for &v in &order {
            let mut candidates = self.intervals.with_top(v).map(|f| {
                let get = |e: usize| hooks[e].clone().expect("lower ranks come first");
                get(f.sides.0).mul(&get(f.sides.1)).div(&get(f.bottom))
            });
            let h = match candidates.next() {
                None => Monomial::from_factors(
                    p.down_set(v)
                        .into_iter()
                        .map(|w| (self.label(w), HalfInt::from_int(1))),
                ),
                Some(first) => {
                    for other in candidates {
                        if other != first {
                            return Err(Error::AmbiguousHook(format!(
                                "{} heads d_k-intervals giving {first} and {other}",
                                p.name(v)
                            )));
                        }
                    }
                    first
                }
            };
            if !h.is_admissible() || h.is_one() {
                return Err(Error::AmbiguousHook(format!(
                    "hook monomial {h} of {} is not a positive monomial",
                    p.name(v)
                )));
            }
            hooks[v] = Some(h);
        }
        Ok(hooks.into_iter().map(|h| h.expect("every element visited")).collect())
    }
}

/// Extends the identity coloring of the top tree downward: an uncolored
/// element is the bottom of a d_k-interval whose top already has a color.
pub fn extend_coloring(
    p: &Poset,
    tree: &[usize],
    rank: &[i32],
    intervals: &Intervals,
) -> Result<Vec<usize>> {
    let n = p.len();
    let mut color: Vec<Option<usize>> = vec![None; n];
    for &t in tree {
        color[t] = Some(t);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (-rank[e], e));
    for &x in &order {
        if color[x].is_some() {
            continue;
        }
        let mut found = None;
        for f in intervals.with_bottom(x) {
            let c = color[f.top].ok_or_else(|| {
                Error::ExtensionFailed(format!("top {} is still uncolored", p.name(f.top)))
            })?;
            match found {
                None => found = Some(c),
                Some(prev) if prev != c => {
                    return Err(Error::ExtensionFailed(format!(
                        "{} is the bottom of d_k-intervals with different top colors",
                        p.name(x)
                    )))
                }
                _ => {}
            }
        }
        color[x] = Some(found.ok_or_else(|| {
            Error::ExtensionFailed(format!("{} is outside the top tree and bottoms no d_k-interval", p.name(x)))
        })?);
    }
    Ok(color.into_iter().map(|c| c.expect("all colored")).collect())
}
