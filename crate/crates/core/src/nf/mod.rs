//! Exact arithmetic in quadratic fields and 2-power cyclotomic fields.

mod field;
mod prime;

pub use field::{parse_rational, FieldElement, FieldKind, NumberField};
pub use prime::{factor_prime, factor_two, ord_at, ord_rational, prime_order_key, PrimeIdeal};
