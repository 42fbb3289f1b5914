use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::partition::{Partition, StrictPartition};
use crate::error::{Error, Result};
use crate::qtcore::{Monomial, VarLabel};

/// Cell `(i, j)` of a (shifted) diagram, 1-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub i: i32,
    pub j: i32,
}

impl Cell {
    pub const fn new(i: i32, j: i32) -> Self {
        Cell { i, j }
    }

    pub fn content(self) -> i32 {
        self.j - self.i
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A shape `D(λ)` or a shifted shape `S(μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Normal(Partition),
    Shifted(StrictPartition),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Normal(l) => write!(f, "D{l}"),
            Shape::Shifted(m) => write!(f, "S{m}"),
        }
    }
}

/// Cells of a shape in row-major order, with an index for lookups.
#[derive(Debug, Clone)]
pub struct Diagram {
    shape: Shape,
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
}

impl Diagram {
    pub fn new(shape: Shape) -> Self {
        let cells = diagram_cells(&shape);
        let index = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        Self {
            shape,
            cells,
            index,
        }
    }

    pub fn normal(lambda: &Partition) -> Self {
        Self::new(Shape::Normal(lambda.clone()))
    }

    pub fn shifted(mu: &StrictPartition) -> Self {
        Self::new(Shape::Shifted(mu.clone()))
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_shifted(&self) -> bool {
        matches!(self.shape, Shape::Shifted(_))
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.index.contains_key(&c)
    }

    fn check(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellOutsideDiagram { i: c.i, j: c.j })
        }
    }

    /// Indices of the cells directly above and to the left of each cell: the
    /// elements covering it in the poset order.
    pub fn upper_neighbors(&self) -> Vec<Vec<usize>> {
        self.cells
            .iter()
            .map(|c| {
                [Cell::new(c.i - 1, c.j), Cell::new(c.i, c.j - 1)]
                    .into_iter()
                    .filter_map(|n| self.index_of(n))
                    .collect()
            })
            .collect()
    }

    /// Hook (shifted hook for `S(μ)`) at `c`.
    pub fn hook(&self, c: Cell) -> Result<BTreeSet<Cell>> {
        self.check(c)?;
        let mut h = BTreeSet::new();
        h.insert(c);
        for &d in &self.cells {
            let arm = d.i == c.i && d.j > c.j;
            let leg = d.j == c.j && d.i > c.i;
            let broken = self.is_shifted() && d.i == c.j + 1 && d.j > c.j;
            if arm || leg || broken {
                h.insert(d);
            }
        }
        Ok(h)
    }

    /// `z[H] = prod_{(i,j) in H} z_{j-i}`.
    pub fn hook_monomial(&self, c: Cell) -> Result<Monomial> {
        Ok(cells_monomial(self.hook(c)?.iter()))
    }

    pub fn hook_monomials(&self) -> Vec<Monomial> {
        self.cells
            .iter()
            .map(|&c| self.hook_monomial(c).expect("cell in diagram"))
            .collect()
    }
}

/// Row-major cell list of a (shifted) diagram.
pub fn diagram_cells(shape: &Shape) -> Vec<Cell> {
    let mut out = Vec::new();
    match shape {
        Shape::Normal(l) => {
            for (r, &len) in l.parts().iter().enumerate() {
                let i = r as i32 + 1;
                out.extend((1..=len as i32).map(|j| Cell::new(i, j)));
            }
        }
        Shape::Shifted(m) => {
            for (r, &len) in m.parts().iter().enumerate() {
                let i = r as i32 + 1;
                out.extend((i..i + len as i32).map(|j| Cell::new(i, j)));
            }
        }
    }
    out
}

pub fn cells_monomial<'a>(cells: impl Iterator<Item = &'a Cell>) -> Monomial {
    Monomial::from_factors(cells.map(|c| {
        (VarLabel::Int(c.content()), crate::qtcore::HalfInt::from_int(1))
    }))
}

/// `z̃_k = z_0 z_1 ... z_{k-1}`, with `z̃_0 = 1`.
pub fn tilde_z(k: u32) -> Monomial {
    tilde_with(k, |i| Monomial::z(i as i32))
}

/// `x̃_k` with `x_0 = z_0^{1/2}`, `x_i = z_i`.
pub fn tilde_x(k: u32) -> Monomial {
    tilde_with(k, |i| {
        if i == 0 {
            Monomial::from_halves(VarLabel::Int(0), 1)
        } else {
            Monomial::z(i as i32)
        }
    })
}

/// `ỹ_k` with `y_0 = z_0^{1/2}`, `y_i = z_{-i}`.
pub fn tilde_y(k: u32) -> Monomial {
    tilde_with(k, |i| {
        if i == 0 {
            Monomial::from_halves(VarLabel::Int(0), 1)
        } else {
            Monomial::z(-(i as i32))
        }
    })
}

fn tilde_with(k: u32, var: impl Fn(u32) -> Monomial) -> Monomial {
    (0..k).fold(Monomial::one(), |acc, i| acc.mul(&var(i)))
}

/// Sign pattern `ε_k = +` iff `k` is a part of `μ`, `k = 1..N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Complement of `μ` in `[N]` (decreasing) and the sign sequence `ε`.
pub fn complement_and_epsilon(mu: &StrictPartition, n: u32) -> Result<(Vec<u32>, Vec<Sign>)> {
    if n < mu.largest() {
        return Err(Error::NTooSmall {
            n,
            largest: mu.largest(),
        });
    }
    let comp: Vec<u32> = (1..=n).rev().filter(|k| !mu.contains_part(*k)).collect();
    let eps = (1..=n)
        .map(|k| if mu.contains_part(k) { Sign::Plus } else { Sign::Minus })
        .collect();
    Ok((comp, eps))
}

/// Shifted hook monomial through the `z̃` case analysis:
/// `z̃_{μ_i} z̃_{μ_{j+1}}` for `i <= j < r`, `z̃_{μ_i}` for `j = r`, and
/// `z̃_{μᶜ_{N-j+1}}^{-1} z̃_{μ_i}` for `j > r`.
pub fn closed_form_shifted_hook(mu: &StrictPartition, c: Cell, n: u32) -> Result<Monomial> {
    let diagram = Diagram::shifted(mu);
    diagram.check(c)?;
    let (comp, _) = complement_and_epsilon(mu, n)?;
    let r = mu.len() as i32;
    let (i, j) = (c.i, c.j);
    let mu_i = mu.part(i as usize);
    Ok(if j < r {
        tilde_z(mu_i).mul(&tilde_z(mu.part(j as usize + 1)))
    } else if j == r {
        tilde_z(mu_i)
    } else {
        let k = comp[(n as i32 - j) as usize];
        tilde_z(k).inverse().mul(&tilde_z(mu_i))
    })
}

/// Frobenius-type split `μ_i = λ_i - i + 1`, `ν_i = ᵗλ_i - i + 1` for
/// `i <= r = #{i : λ_i >= i}`.
pub fn frobenius_split(lambda: &Partition) -> (usize, StrictPartition, StrictPartition) {
    let conj = lambda.conjugate();
    let r = (1..=lambda.len()).filter(|&i| lambda.part(i) as usize >= i).count();
    let mu = (1..=r).map(|i| lambda.part(i) + 1 - i as u32).collect();
    let nu = (1..=r).map(|i| conj.part(i) + 1 - i as u32).collect();
    (
        r,
        StrictPartition::new(mu).expect("diagonal hooks strictly decrease"),
        StrictPartition::new(nu).expect("diagonal hooks strictly decrease"),
    )
}

/// Ordinary hook monomial through the glued halves, with `x_0 = y_0 = z_0^{1/2}`.
/// Requires `N >= max(λ_1, ᵗλ_1)`.
pub fn closed_form_normal_hook(lambda: &Partition, c: Cell, n: u32) -> Result<Monomial> {
    let diagram = Diagram::normal(lambda);
    diagram.check(c)?;
    let (r, mu, nu) = frobenius_split(lambda);
    let (mu_c, _) = complement_and_epsilon(&mu, n)?;
    let (nu_c, _) = complement_and_epsilon(&nu, n)?;
    let r = r as i32;
    let (i, j) = (c.i, c.j);
    Ok(if i <= r && j <= r {
        tilde_x(mu.part(i as usize)).mul(&tilde_y(nu.part(j as usize)))
    } else if i <= r {
        let k = mu_c[(n as i32 - j) as usize];
        tilde_x(k).inverse().mul(&tilde_x(mu.part(i as usize)))
    } else {
        let k = nu_c[(n as i32 - i) as usize];
        tilde_y(k).inverse().mul(&tilde_y(nu.part(j as usize)))
    })
}

/// Dispatches to the shifted or ordinary closed form.
pub fn closed_form_hook_monomial(shape: &Shape, c: Cell, n: u32) -> Result<Monomial> {
    match shape {
        Shape::Normal(l) => closed_form_normal_hook(l, c, n),
        Shape::Shifted(m) => closed_form_shifted_hook(m, c, n),
    }
}

/// Smallest admissible `N` for the closed forms.
pub fn default_n(shape: &Shape) -> u32 {
    match shape {
        Shape::Normal(l) => l.part(1).max(l.len() as u32),
        Shape::Shifted(m) => m.largest(),
    }
}
