//! Budgeted depth-first enumeration of P-partitions.
//!
//! Elements are visited along a linear extension that lists every element
//! after all elements above it. Each value is bounded below by the values of
//! the elements covering it (order-reversing maps) and the running total is
//! kept within the degree budget.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct PartitionEnumerator {
    /// `uppers[e]`: elements covering `e`, all earlier in `order`.
    uppers: Vec<Vec<usize>>,
    /// `lowers[e]`: elements covered by `e`.
    lowers: Vec<Vec<usize>>,
    order: Vec<usize>,
    fixed: Vec<Option<u32>>,
}

impl PartitionEnumerator {
    /// `uppers[e]` lists the elements covering `e`; `order` must be a linear
    /// extension from the top down.
    pub fn new(uppers: Vec<Vec<usize>>, order: Vec<usize>) -> Self {
        let n = uppers.len();
        debug_assert_eq!(order.len(), n);
        let mut lowers = vec![Vec::new(); n];
        for (e, ups) in uppers.iter().enumerate() {
            for &u in ups {
                lowers[u].push(e);
            }
        }
        Self {
            uppers,
            lowers,
            order,
            fixed: vec![None; n],
        }
    }

    /// Pins the value of element `e`.
    pub fn fix(&mut self, e: usize, value: u32) {
        self.fixed[e] = Some(value);
    }

    pub fn len(&self) -> usize {
        self.uppers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.uppers.is_empty()
    }

    /// Largest value allowed at each element by the pinned values below it.
    fn fixed_caps(&self) -> Vec<u32> {
        let n = self.len();
        let mut cap = vec![u32::MAX; n];
        // bottom-up: reverse of the top-down order
        for &e in self.order.iter().rev() {
            let mut c = self.fixed[e].unwrap_or(u32::MAX);
            for &l in &self.lowers[e] {
                c = c.min(cap[l]);
            }
            cap[e] = c;
        }
        cap
    }

    /// Pinned values must themselves be order-reversing and fit in the budget.
    pub fn check_fixed(&self, budget: u32) -> Result<()> {
        let total: u64 = self.fixed.iter().flatten().map(|&v| v as u64).sum();
        if total > budget as u64 {
            return Err(Error::InfeasibleProfile(format!(
                "pinned values sum to {total}, above the degree bound {budget}"
            )));
        }
        let cap = self.fixed_caps();
        for e in 0..self.len() {
            if let Some(v) = self.fixed[e] {
                for &l in &self.lowers[e] {
                    if cap[l] < v {
                        return Err(Error::InfeasibleProfile(format!(
                            "pinned value {v} lies above a smaller pinned value below it"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// All order-reversing maps with total at most `budget`, in the
    /// deterministic DFS order (values indexed by element).
    pub fn enumerate(&self, budget: u32) -> Result<Vec<Vec<u32>>> {
        self.check_fixed(budget)?;
        let mut out = Vec::new();
        self.for_each(budget, |v| out.push(v.to_vec()));
        Ok(out)
    }

    /// Calls `visit` on every map; pinned values must already be consistent.
    pub fn for_each(&self, budget: u32, mut visit: impl FnMut(&[u32])) {
        let n = self.len();
        let cap = self.fixed_caps();
        let pinned: u32 = self.fixed.iter().flatten().sum();
        if pinned > budget {
            return;
        }
        let mut values = vec![0u32; n];
        self.dfs(0, budget - pinned, &cap, &mut values, &mut visit);
    }

    fn dfs(
        &self,
        pos: usize,
        free: u32,
        cap: &[u32],
        values: &mut [u32],
        visit: &mut impl FnMut(&[u32]),
    ) {
        if pos == self.order.len() {
            visit(values);
            return;
        }
        let e = self.order[pos];
        let lo = self.uppers[e].iter().map(|&u| values[u]).max().unwrap_or(0);
        if let Some(v) = self.fixed[e] {
            if v >= lo {
                values[e] = v;
                self.dfs(pos + 1, free, cap, values, visit);
            }
            return;
        }
        let hi = cap[e].min(free);
        for v in lo..=hi {
            values[e] = v;
            self.dfs(pos + 1, free - v, cap, values, visit);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> PartitionEnumerator {
        let uppers = (0..n).map(|e| if e == 0 { vec![] } else { vec![e - 1] }).collect();
        PartitionEnumerator::new(uppers, (0..n).collect())
    }

    #[test]
    fn chain_counts() {
        // weakly increasing sequences of length 2 with sum <= 2
        let got = chain(2).enumerate(2).unwrap();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1]]);
        assert_eq!(chain(1).enumerate(3).unwrap().len(), 4);
    }

    #[test]
    fn brute_force_agreement() {
        // V-shaped poset: 0 covers 1 and 2
        let uppers = vec![vec![], vec![0], vec![0]];
        let en = PartitionEnumerator::new(uppers, vec![0, 1, 2]);
        let got = en.enumerate(5).unwrap();
        let mut want = Vec::new();
        for a in 0..=5u32 {
            for b in 0..=5 {
                for c in 0..=5 {
                    if a <= b && a <= c && a + b + c <= 5 {
                        want.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn pinned_values() {
        let mut en = chain(3);
        en.fix(2, 2);
        let got = en.enumerate(4).unwrap();
        assert_eq!(got, vec![vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2], vec![1, 1, 2]]);
        let mut bad = chain(3);
        bad.fix(0, 2);
        bad.fix(2, 1);
        assert!(matches!(bad.enumerate(9), Err(Error::InfeasibleProfile(_))));
        let mut over = chain(2);
        over.fix(1, 5);
        assert!(over.enumerate(4).is_err());
    }
}
