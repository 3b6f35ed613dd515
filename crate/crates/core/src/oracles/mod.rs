//! Classical invariants computed independently of the universal series.

mod ado;
mod alexander;
mod jones;
mod lambda;

pub use ado::{ado, AdoPolynomial};
pub use alexander::{alexander, alexander_link};
pub use jones::{colored_jones, colored_jones_link};
pub use lambda::{binomial_inner_sum, binomial_lemma_check, lambda_coeffs, lambda_tilde, lambda_tilde_row};
