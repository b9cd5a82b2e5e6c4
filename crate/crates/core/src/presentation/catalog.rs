//! Built-in knot diagrams.
//!
//! Each entry is a knot file embedded at compile time. Relators were read off
//! the PD code named in the file header: arcs are numbered by first edge along
//! the orientation, and each crossing gives `x_c = x_a^{±1} x_b x_a^{∓1}`
//! written in crossing form. The diagrams were checked against their known
//! Alexander polynomials when the catalog was assembled.

use super::{parse_knot_file, WirtingerPresentation};
use crate::error::PresentationError;

pub const UNKNOT_FILE: &str = include_str!("../../knots/unknot.knot");
pub const TREFOIL_FILE: &str = include_str!("../../knots/trefoil.knot");
pub const TREFOIL_BRAID_FILE: &str = include_str!("../../knots/trefoil-braid.knot");
pub const FIGURE_EIGHT_FILE: &str = include_str!("../../knots/figure-eight.knot");
pub const KNOT_5_1_FILE: &str = include_str!("../../knots/5_1.knot");
pub const KNOT_5_2_FILE: &str = include_str!("../../knots/5_2.knot");
pub const KNOT_6_1_FILE: &str = include_str!("../../knots/6_1.knot");

/// A named diagram with a note on where its relators come from.
#[derive(Debug, Clone)]
pub struct KnotCatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub presentation: WirtingerPresentation,
    pub citation: &'static str,
}

const SOURCES: &[(&str, &[&str], &str, &str)] = &[
    ("unknot", &["0_1"], UNKNOT_FILE, "zero-crossing diagram"),
    (
        "trefoil",
        &["3_1"],
        TREFOIL_FILE,
        "standard three-crossing diagram",
    ),
    (
        "trefoil-braid",
        &[],
        TREFOIL_BRAID_FILE,
        "closure of the braid s1^3 s2 (four crossings)",
    ),
    (
        "figure-eight",
        &["4_1"],
        FIGURE_EIGHT_FILE,
        "KnotInfo PD code of the minimal diagram",
    ),
    (
        "5_1",
        &["cinquefoil"],
        KNOT_5_1_FILE,
        "KnotInfo PD code of the minimal diagram",
    ),
    (
        "5_2",
        &[],
        KNOT_5_2_FILE,
        "KnotInfo PD code of the minimal diagram",
    ),
    (
        "6_1",
        &["stevedore"],
        KNOT_6_1_FILE,
        "KnotInfo PD code of the minimal diagram",
    ),
];

/// All catalog entries in a fixed order.
pub fn entries() -> Vec<KnotCatalogEntry> {
    SOURCES
        .iter()
        .map(|&(name, aliases, text, citation)| KnotCatalogEntry {
            name,
            aliases,
            presentation: parse_knot_file(text)
                .expect("built-in knot files parse")
                .with_provenance(citation),
            citation,
        })
        .collect()
}

/// Looks up a knot by name or alias.
pub fn lookup(name: &str) -> Result<WirtingerPresentation, PresentationError> {
    entries()
        .into_iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .map(|e| e.presentation)
        .ok_or_else(|| PresentationError::UnknownKnot(name.to_string()))
}

/// Names of the catalog knots with non-trivial group, one diagram each.
pub const NONTRIVIAL: &[&str] = &["trefoil", "figure-eight", "5_1", "5_2", "6_1"];

/// The knot set used by the theorem sweeps: the unknot plus [`NONTRIVIAL`].
pub const SWEEP: &[&str] = &["unknot", "trefoil", "figure-eight", "5_1", "5_2", "6_1"];
