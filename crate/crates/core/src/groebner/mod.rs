//! Term orders, Buchberger's algorithm for binomial ideals, toric ideals,
//! minimal generators, Hilbert polynomials and radical membership.

pub mod binomial;
pub mod buchberger;
pub mod hilbert;
pub mod lexsearch;
pub mod mingen;
pub mod order;
pub mod polynomial;
pub mod radical;
pub mod toric;

pub use binomial::{canonical_sort, same_ideal, Binomial, OrientedBinomialSet};
pub use buchberger::{buchberger, buchberger_binomials, GroebnerBuilder};
pub use order::{OrderFlavor, TermOrder, TieBreak};
pub use polynomial::SparsePolynomial;
pub use toric::{toric_ideal, toric_ideal_elimination_oracle};
pub use hilbert::{hilbert_function, hilbert_polynomial, HilbertFunction, HilbertSeries};
pub use lexsearch::{lex_groebner_of_degree, LexSearch};
pub use mingen::minimal_generators;
pub use radical::{radical_membership_bounded, RadicalVerdict};
