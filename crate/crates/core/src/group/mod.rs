//! Finite group arithmetic.
//!
//! Every group exposes its elements through [`FiniteGroup`]. Element iteration
//! order is fixed: lexicographic on each element type's canonical fields. The
//! representation search relies on that order to produce stable output.

mod any;
mod dihedral;
mod sl2z3;
mod table;

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

pub use any::{GroupDescriptor, GroupElement, TargetGroup};
pub use dihedral::{Dihedral, DihedralElt};
pub use sl2z3::{classify_sl2z3, Mat2Z3, OrderClass, Sl2Z3};
pub use table::{CayleyTable, TableElt, MAX_COMPILED_ORDER, MAX_TABLE_ORDER};

/// A finite group given by its element list and multiplication.
///
/// Implementations are immutable, so every method may be called from several
/// threads at once.
pub trait FiniteGroup: Sync {
    type Element: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    /// All elements in canonical order.
    fn elements(&self) -> Vec<Self::Element>;

    fn identity(&self) -> Self::Element;

    fn mul(&self, a: Self::Element, b: Self::Element) -> Self::Element;

    fn inverse(&self, a: Self::Element) -> Self::Element;

    /// Short label such as `sl2z3` or `d2k:3`.
    fn descriptor(&self) -> String;

    /// The group order |G|.
    fn size(&self) -> usize {
        self.elements().len()
    }

    /// `g^t` by square-and-multiply. Negative exponents use the inverse.
    fn power(&self, g: Self::Element, t: i64) -> Self::Element {
        let mut base = if t < 0 { self.inverse(g) } else { g };
        let mut exp = t.unsigned_abs();
        let mut acc = self.identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Least `t >= 1` with `g^t = e`.
    fn element_order(&self, g: Self::Element) -> usize {
        let e = self.identity();
        let mut acc = g;
        let mut t = 1;
        while acc != e {
            acc = self.mul(acc, g);
            t += 1;
        }
        t
    }

    fn is_central(&self, z: Self::Element) -> bool {
        self.elements()
            .into_iter()
            .all(|g| self.mul(z, g) == self.mul(g, z))
    }

    /// The center, computed exhaustively, in canonical order.
    fn center(&self) -> Vec<Self::Element> {
        let all = self.elements();
        all.iter()
            .copied()
            .filter(|&z| all.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Central elements of order exactly 2.
    fn central_involutions(&self) -> Vec<Self::Element> {
        self.center()
            .into_iter()
            .filter(|&z| z != self.identity() && self.mul(z, z) == self.identity())
            .collect()
    }

    /// Subgroup generated by `gens`, grown by closure under right
    /// multiplication by the generators. Returned in canonical order.
    fn generated_subgroup(&self, gens: &[Self::Element]) -> Vec<Self::Element> {
        let mut seen: HashSet<Self::Element> = HashSet::new();
        let mut frontier = vec![self.identity()];
        seen.insert(self.identity());
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }
}
