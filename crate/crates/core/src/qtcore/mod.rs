//! Exact scalars at a `(q,t)` specialization, sparse monomials and
//! degree-truncated multivariate power series.

mod monomial;
mod point;
mod series;

pub use monomial::{HalfInt, Monomial, VarLabel};
pub use point::{
    f_eval, format_scalar, parse_scalar, sample_points, sample_qt_point, scalar, scalar_int,
    QtPoint, Scalar,
};
pub use series::{
    f_series, f_series_scaled, geometric_series, product_f, product_geometric, Comparison, Mismatch,
    TruncatedSeries,
};
