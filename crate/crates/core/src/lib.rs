//! Numerical theory of arithmetically Cohen-Macaulay space curves: h-vectors
//! and biliaison types, maximal genus `G_CM(d, s)`, bounds on how many points
//! two ACM curves can share, linkage, and explicit maximal unions.
//!
//! Everything is exact integer arithmetic on short sequences. The [`oracle`]
//! module re-derives the closed forms by exhaustive enumeration.
//!
//! ```
//! use acm_core::{gmax, HVector};
//!
//! let h: HVector = "1,2,3,4,2,1".parse().unwrap();
//! let inv = h.invariants().unwrap();
//! assert_eq!((inv.degree, inv.genus), (13, 21));
//! assert_eq!(gmax(13, 4).witness, h);
//! ```

pub mod bounds;
pub mod error;
pub mod hvector;
pub mod liaison;
pub mod oracle;
pub mod ordinary;

pub use bounds::{
    ci_bound, gap_possible, gmax, main_bound, refined_bound, BoundReport, GmaxResult, MainBound,
    Rule,
};
pub use error::{Error, Result};
pub use hvector::{
    add_hyperplane, intersection_from_union, subtract_hyperplane, BiliaisonType, CurveInvariants,
    DavisSplit, HVector,
};
pub use liaison::{
    check_linkage_clauses, ci_hvector, ladder_intersection, ladder_union, link,
    linked_intersection, LinkageClauses, LinkageFrame,
};
pub use ordinary::{
    ordinary_h, ordinary_intersection, union_on_surface, union_ordinary, union_ordinary_general,
    Certification, OrdinaryCurve, ReducedUnion, UnionCase, UnionConstruction,
};
