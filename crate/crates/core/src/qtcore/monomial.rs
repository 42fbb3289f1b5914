use std::fmt;

use crate::error::{Error, Result};

/// Name of a series variable.
///
/// Diagram contents are `Int(k)` (the variable `z_k`), the second diagonal
/// color of a shifted shape is `ZeroPrime`, poset elements are `Id(index)`
/// and auxiliary alphabets (`x1`, `u2`, `a0`, ...) are `Aux`. The derived
/// order is the canonical one: integers by value, then `0'`, then ids, then
/// auxiliary symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarLabel {
    Int(i32),
    ZeroPrime,
    Id(u32),
    Aux(char, u32),
}

impl fmt::Display for VarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarLabel::Int(k) => write!(f, "{k}"),
            VarLabel::ZeroPrime => write!(f, "0'"),
            VarLabel::Id(k) => write!(f, "#{k}"),
            VarLabel::Aux(c, k) => write!(f, "{c}{k}"),
        }
    }
}

impl VarLabel {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0'" {
            return Ok(VarLabel::ZeroPrime);
        }
        if let Ok(k) = text.parse::<i32>() {
            return Ok(VarLabel::Int(k));
        }
        if let Some(rest) = text.strip_prefix('#') {
            return rest
                .parse()
                .map(VarLabel::Id)
                .map_err(|_| Error::Parse(format!("bad id label {text:?}")));
        }
        let mut chars = text.chars();
        if let Some(c) = chars.next() {
            if c.is_ascii_alphabetic() {
                if let Ok(k) = chars.as_str().parse() {
                    return Ok(VarLabel::Aux(c, k));
                }
            }
        }
        Err(Error::Parse(format!("bad variable label {text:?}")))
    }
}

/// Exponent with denominator dividing 2, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    pub const fn from_halves(h: i32) -> Self {
        HalfInt(h)
    }

    pub const fn halves(self) -> i32 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i32> {
        self.is_integral().then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Sparse monomial in [`VarLabel`] variables.
///
/// Ordering is by total degree, then lexicographic on the sorted factor list;
/// this is the canonical order used for serialization and mismatch reports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    degree: HalfInt,
    factors: Vec<(VarLabel, HalfInt)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(label: VarLabel) -> Self {
        Self::var_pow(label, 1)
    }

    pub fn var_pow(label: VarLabel, exp: i32) -> Self {
        Self::from_halves(label, 2 * exp)
    }

    /// `label^(halves/2)`.
    pub fn from_halves(label: VarLabel, halves: i32) -> Self {
        Self::from_factors([(label, HalfInt::from_halves(halves))])
    }

    /// `z_k` for an integer content `k`.
    pub fn z(k: i32) -> Self {
        Self::var(VarLabel::Int(k))
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (VarLabel, HalfInt)>) -> Self {
        let mut v: Vec<(VarLabel, HalfInt)> = factors.into_iter().collect();
        v.sort_by_key(|(l, _)| *l);
        let mut merged: Vec<(VarLabel, HalfInt)> = Vec::with_capacity(v.len());
        for (l, e) in v {
            match merged.last_mut() {
                Some((last, acc)) if *last == l => *acc = HalfInt(acc.0 + e.0),
                _ => merged.push((l, e)),
            }
        }
        merged.retain(|(_, e)| e.0 != 0);
        let degree = HalfInt(merged.iter().map(|(_, e)| e.0).sum());
        Monomial {
            degree,
            factors: merged,
        }
    }

    pub fn factors(&self) -> &[(VarLabel, HalfInt)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> HalfInt {
        self.degree
    }

    pub fn exponent(&self, label: VarLabel) -> HalfInt {
        self.factors
            .binary_search_by_key(&label, |(l, _)| *l)
            .map(|i| self.factors[i].1)
            .unwrap_or_default()
    }

    /// True when every exponent is a non-negative integer, i.e. the monomial
    /// may appear as a term of a truncated series.
    pub fn is_admissible(&self) -> bool {
        self.factors.iter().all(|(_, e)| e.0 >= 0 && e.is_integral())
    }

    /// Total degree of an admissible monomial.
    pub fn int_degree(&self) -> Option<u32> {
        self.degree.to_int().and_then(|d| u32::try_from(d).ok())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(la, ea)), Some(&&(lb, eb))) => {
                    if la < lb {
                        out.push((la, ea));
                        a.next();
                    } else if lb < la {
                        out.push((lb, eb));
                        b.next();
                    } else {
                        if ea.0 + eb.0 != 0 {
                            out.push((la, HalfInt(ea.0 + eb.0)));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            degree: HalfInt(self.degree.0 + other.degree.0),
            factors: out,
        }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            degree: HalfInt(-self.degree.0),
            factors: self.factors.iter().map(|&(l, e)| (l, HalfInt(-e.0))).collect(),
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, n: i32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            degree: HalfInt(self.degree.0 * n),
            factors: self.factors.iter().map(|&(l, e)| (l, HalfInt(e.0 * n))).collect(),
        }
    }

    /// Renames `from` to `to`, merging exponents.
    pub fn substitute(&self, from: VarLabel, to: VarLabel) -> Monomial {
        if self.exponent(from).0 == 0 {
            return self.clone();
        }
        Monomial::from_factors(
            self.factors
                .iter()
                .map(|&(l, e)| (if l == from { to } else { l }, e)),
        )
    }

    /// Drops the variable `label` entirely (evaluates it at 1).
    pub fn without(&self, label: VarLabel) -> Monomial {
        Monomial::from_factors(self.factors.iter().copied().filter(|(l, _)| *l != label))
    }

    /// `["0^2", "1^1"]`-style factor list.
    pub fn to_factor_strings(&self) -> Vec<String> {
        self.factors.iter().map(|(l, e)| format!("{l}^{e}")).collect()
    }

    pub fn from_factor_strings<S: AsRef<str>>(items: &[S]) -> Result<Monomial> {
        let mut factors = Vec::with_capacity(items.len());
        for item in items {
            let item = item.as_ref();
            let (label, exp) = item
                .rsplit_once('^')
                .ok_or_else(|| Error::Parse(format!("expected label^exp, got {item:?}")))?;
            let halves = match exp.split_once('/') {
                Some((n, "2")) => n.parse::<i32>().ok(),
                Some(_) => None,
                None => exp.parse::<i32>().ok().map(|n| 2 * n),
            }
            .ok_or_else(|| Error::Parse(format!("bad exponent in {item:?}")))?;
            factors.push((VarLabel::parse(label)?, HalfInt(halves)));
        }
        Ok(Monomial::from_factors(factors))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(l, e)| match e.to_int() {
                Some(1) => format!("z[{l}]"),
                _ => format!("z[{l}]^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
