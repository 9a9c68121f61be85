//! Interpolation and approximation methods. Each turns samples (or a target
//! function plus settings) into an [`Approximant`](crate::approximant::Approximant).

mod efci;
mod lagrange;
mod mock;
mod regression;
mod spline;
mod tisi;
mod truncated;

pub use efci::{efc_positions, efci_fit, EfciConfig, EfciFit, EFCI_SEARCH_M};
pub use lagrange::{chebyshev_interpolate, lagrange_interpolate};
pub use mock::{constrained_mock_chebyshev_lstsq, default_ls_degree, mock_chebyshev_interpolate};
pub use regression::{fit_regularized, tikhonov_fit, tikhonov_operator, Penalty, TikhonovOperator};
pub use spline::{cubic_spline, spline_moments};
pub use tisi::{tisi_fit, BandStrategy, TisiConfig};
pub use truncated::{svd_truncated_fit, svd_truncated_fit_with_rank, TruncatedFit};
