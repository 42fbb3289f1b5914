use crate::error::{Error, Result};
use crate::qtcore::{QtPoint, Scalar};
use crate::tableaux::Partition;
use num_traits::One;

fn check_strip(alpha: &Partition, beta: &Partition) -> Result<()> {
    if alpha.interlaces_above(beta) {
        Ok(())
    } else {
        Err(Error::NotAHorizontalStrip {
            alpha: alpha.parts().to_vec(),
            beta: beta.parts().to_vec(),
        })
    }
}

/// Shared numerator `prod_{i<=j} f(α_i - β_j; j-i) f(β_i - α_{j+1}; j-i)`
/// divided by a caller-chosen denominator pair.
fn pieri_product(
    alpha: &Partition,
    beta: &Partition,
    pt: &QtPoint,
    denominators: impl Fn(usize, usize) -> ((u32, u32), (u32, u32)),
) -> Result<Scalar> {
    let l = alpha.len();
    let (a, b) = (|k| alpha.part(k), |k| beta.part(k));
    let (mut num, mut den) = (Scalar::one(), Scalar::one());
    for i in 1..=l {
        for j in i..=l {
            let m = (j - i) as u32;
            num *= pt.f(a(i) - b(j), m)?;
            num *= pt.f(b(i) - a(j + 1), m)?;
            let ((x1, y1), (x2, y2)) = denominators(i, j);
            den *= pt.f(x1 - y1, m)?;
            den *= pt.f(x2 - y2, m)?;
        }
    }
    Ok(num / den)
}

/// `φ⁺_{α,β}`: coefficient of `u^{|α|-|β|} P_α` in `G⁺(u) P_β`.
pub fn phi_plus(alpha: &Partition, beta: &Partition, pt: &QtPoint) -> Result<Scalar> {
    check_strip(alpha, beta)?;
    pieri_product(alpha, beta, pt, |i, j| {
        ((alpha.part(i), alpha.part(j)), (beta.part(i), beta.part(j + 1)))
    })
}

/// `φ⁻_{β,α}`: coefficient of `u^{|α|-|β|} P_β` in `G⁻(u) P_α`.
pub fn phi_minus(beta: &Partition, alpha: &Partition, pt: &QtPoint) -> Result<Scalar> {
    check_strip(alpha, beta)?;
    pieri_product(alpha, beta, pt, |i, j| {
        ((alpha.part(i), alpha.part(j + 1)), (beta.part(i), beta.part(j)))
    })
}
