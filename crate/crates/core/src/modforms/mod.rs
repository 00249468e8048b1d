//! Elliptic cusp forms of level 1, 2 and 4 through exact q-expansions.

pub mod basis;
pub mod dims;
pub mod hecke;
pub mod newforms;
pub mod series;
pub mod standard;

pub use basis::{cusp_basis, default_precision, echelonize};
pub use dims::dim_cusp;
pub use hecke::{hecke_matrix, hecke_trace, HeckeOperator};
pub use newforms::{
    al_split_oracle, al_split_trace, check_fixtures, fricke_trace, new_dimensions, newform_counts, parse_fixtures,
    FixtureEntry, FixtureMismatch, NewformCounts,
};
pub use series::QExpansion;
pub use standard::{eta_product, sigma, standard_series, StandardSeries};
