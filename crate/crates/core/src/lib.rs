//! Computation engine for finite skew braces.
//!
//! A skew brace is a set carrying two compatible group structures; skew
//! braces classify non-degenerate set-theoretic solutions of the
//! Yang-Baxter equation. This crate works with braces given concretely as
//! pairs of Cayley tables and provides:
//!
//! * validated construction of groups and braces from tables ([`group`],
//!   [`brace`]);
//! * the star product, λ-maps, subset grading (sub-brace / left ideal /
//!   strong left ideal / ideal), quotients and restrictions ([`brace`]);
//! * the classical descending and ascending series (right, left, socle,
//!   zeta) and the derived nilpotency classifiers, including per-element
//!   nil indices and a decision procedure for the strong-nil property
//!   ([`series`]);
//! * constructions: semidirect products, trifactorised-group extraction of
//!   bijective 1-cocycles, braces from cocycles, exhaustive enumeration of
//!   braces of small order, and two fully worked example braces of orders 6
//!   and 32 ([`construct`]);
//! * Yang-Baxter solution tables derived from braces, with braid-equation
//!   and non-degeneracy verification ([`ybe`]);
//! * a plain-text file format ([`io`]) and a scripted end-to-end
//!   verification run ([`reproduce`]).

pub mod brace;
pub mod construct;
pub mod group;
pub mod io;
pub mod iso;
pub mod reproduce;
pub mod series;
pub mod ybe;

pub use brace::{
    almost_trivial_brace, direct_product, make_brace, trivial_brace, BraceError, Grade, Side,
    SkewBrace, SubSet,
};
pub use construct::{
    brace_from_cocycle, build_example_b, check_trifactorised, enumerate_braces,
    enumerate_braces_by_scan, example_a, example_b, example_b_blueprint, holomorph,
    semidirect_product, small_group_catalogue, Cocycle, ConstructError, ExampleB,
    ExampleBBlueprint, GroupAction, SemidirectProduct,
};
pub use group::{
    dihedral_group, direct_product_groups, make_group, quaternion_group, standard_group,
    CentralSeries, FiniteGroup, GroupError, GroupSpec, Subgroup,
};
pub use io::{parse_brace, serialize_brace, IoError};
pub use iso::{brace_isomorphism, group_isomorphism, maps_subset_onto};
pub use series::{
    check_theorems, classify, is_strong_nil, kernel_lambda, nil_index, series, socle, zeta,
    ClassificationReport, NilSide, PropertyStatus, PropertyVerdict, SeriesKind, SeriesResult,
    StrongNilVerdict, DEFAULT_MAX_WORD_LEN,
};
pub use ybe::{YbeError, YbeSolution};
