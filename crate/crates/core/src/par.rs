//! Data-parallel helpers. With the `parallel` feature these run on rayon's
//! global pool; without it they are plain sequential loops.

use crate::error::Result;
use crate::qtcore::TruncatedSeries;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Maps `f` over `items` and stops at the first error (in item order).
pub fn try_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    map(items, f).into_iter().collect()
}

/// `sum_i f(items[i])` as a truncated series. Addition is exact, so the
/// reduction order does not affect the result.
pub fn sum_series<T, F>(items: &[T], degree: u32, f: F) -> Result<TruncatedSeries>
where
    T: Sync,
    F: Fn(&T) -> Result<TruncatedSeries> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .map(f)
            .try_fold(
                || TruncatedSeries::zero(degree),
                |mut acc, s| {
                    acc.add_assign(&s?)?;
                    Ok(acc)
                },
            )
            .try_reduce(
                || TruncatedSeries::zero(degree),
                |mut a, b| {
                    a.add_assign(&b)?;
                    Ok(a)
                },
            )
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut acc = TruncatedSeries::zero(degree);
        for item in items {
            acc.add_assign(&f(item)?)?;
        }
        Ok(acc)
    }
}

/// Runs `f` with all helpers in this module forced onto a single thread.
pub fn sequential<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .expect("single-thread pool")
            .install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        f()
    }
}
