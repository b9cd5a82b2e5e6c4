//! Representations of branched-twist-spin knot groups into finite groups.
//!
//! The knot group of the branched twist spin `K^{m,n}` is presented by a
//! Wirtinger presentation of `K`, a central generator `h`, commutators
//! `[x_i, h]` and one power relator `x₁^{|m|} h^β`. This crate builds those
//! presentations, counts homomorphisms into SL₂(ℤ/3) and the dihedral groups
//! `⟨r, s | r^{2k}, s², rsrs⟩` with `h` sent to a chosen central element,
//! and compares the counts with closed-form predictions.
//!
//! ```
//! use twistspin::{catalog, build_bts, count_reps, SearchConfig, TargetGroup};
//!
//! let trefoil = catalog::lookup("trefoil").unwrap();
//! let bts = build_bts(&trefoil, 2, 1).unwrap();
//! let g = TargetGroup::Sl2Z3;
//! let h = g.default_h_image().unwrap();
//! let report = count_reps(&bts, &g, &SearchConfig::new(h)).unwrap();
//! assert_eq!(report.count, 6);
//! ```

pub mod cli;
pub mod closed_forms;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod presentation;
pub mod verify;

pub use closed_forms::{
    dihedral_count, dihedral_count_exact, distinguish, sl2z3_count, DihedralCountParams,
    Distinction, Sl2z3Count,
};
pub use enumerate::{
    count_reps, enumerate_backtracking, enumerate_oracle, evaluate_word, search, CountReport,
    Representation, SearchConfig, SearchOutcome, Strategy,
};
pub use error::{EnumerationError, GroupError, PresentationError};
pub use group::{
    classify_sl2z3, CayleyTable, Dihedral, DihedralElt, FiniteGroup, GroupDescriptor, GroupElement,
    Mat2Z3, OrderClass, Sl2Z3, TableElt, TargetGroup,
};
pub use presentation::{
    build_bts, catalog, compute_beta, crossing_relator, parse_knot_file, serialize_knot,
    BtsPresentation, WirtingerPresentation, Word,
};

// Guide chapters, compiled as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
