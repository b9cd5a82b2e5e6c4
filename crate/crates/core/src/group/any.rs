use std::fmt;
use std::sync::Arc;

use super::{CayleyTable, Dihedral, DihedralElt, FiniteGroup, Mat2Z3, Sl2Z3, TableElt};
use crate::error::GroupError;

/// Which target group a computation runs in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Sl2Z3,
    Dihedral { k: u32 },
    Table { label: String },
}

impl GroupDescriptor {
    /// Parses `sl2z3` or `d2k:<k>`. Table groups are built from data, not
    /// parsed from a descriptor.
    pub fn parse(text: &str) -> Result<GroupDescriptor, GroupError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("sl2z3") {
            return Ok(GroupDescriptor::Sl2Z3);
        }
        if let Some(k) = t.strip_prefix("d2k:") {
            let k: u32 = k
                .parse()
                .map_err(|_| GroupError::BadDescriptor(text.to_string()))?;
            if k == 0 {
                return Err(GroupError::ZeroRotationParameter);
            }
            return Ok(GroupDescriptor::Dihedral { k });
        }
        Err(GroupError::BadDescriptor(text.to_string()))
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Sl2Z3 => f.write_str("sl2z3"),
            GroupDescriptor::Dihedral { k } => write!(f, "d2k:{k}"),
            GroupDescriptor::Table { label } => write!(f, "table:{label}"),
        }
    }
}

/// An element of some [`TargetGroup`]; carries its kind so mixed products are
/// caught.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Mat(Mat2Z3),
    Dihedral(DihedralElt),
    Table(TableElt),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Mat(m) => m.fmt(f),
            GroupElement::Dihedral(d) => d.fmt(f),
            GroupElement::Table(t) => t.fmt(f),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Runtime choice of target group.
#[derive(Debug, Clone)]
pub enum TargetGroup {
    Sl2Z3,
    Dihedral(Dihedral),
    Table(Arc<CayleyTable>),
}

impl TargetGroup {
    pub fn from_descriptor(d: &GroupDescriptor) -> Result<TargetGroup, GroupError> {
        match d {
            GroupDescriptor::Sl2Z3 => Ok(TargetGroup::Sl2Z3),
            GroupDescriptor::Dihedral { k } => Ok(TargetGroup::Dihedral(Dihedral::new(*k)?)),
            GroupDescriptor::Table { .. } => Err(GroupError::BadDescriptor(d.to_string())),
        }
    }

    pub fn descriptor_value(&self) -> GroupDescriptor {
        match self {
            TargetGroup::Sl2Z3 => GroupDescriptor::Sl2Z3,
            TargetGroup::Dihedral(d) => GroupDescriptor::Dihedral { k: d.k() },
            TargetGroup::Table(t) => GroupDescriptor::Table {
                label: t.label().to_string(),
            },
        }
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        match (self, x) {
            (TargetGroup::Sl2Z3, GroupElement::Mat(_)) => true,
            // normal form is enforced by construction, but the modulus is per group
            (TargetGroup::Dihedral(d), GroupElement::Dihedral(e)) => {
                e.rotation_exponent() < 2 * d.k()
            }
            (TargetGroup::Table(t), GroupElement::Table(e)) => t.contains(e),
            _ => false,
        }
    }

    fn check(&self, x: GroupElement) -> Result<(), GroupError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(GroupError::ForeignElement {
                element: x.to_string(),
                group: self.descriptor(),
            })
        }
    }

    /// Checked product; operands from another group are a usage error.
    pub fn try_mul(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement, GroupError> {
        match (self, a, b) {
            (TargetGroup::Sl2Z3, GroupElement::Mat(x), GroupElement::Mat(y)) => {
                Ok(GroupElement::Mat(x * y))
            }
            (TargetGroup::Dihedral(d), GroupElement::Dihedral(x), GroupElement::Dihedral(y)) => {
                self.check(a)?;
                self.check(b)?;
                Ok(GroupElement::Dihedral(d.mul(x, y)))
            }
            (TargetGroup::Table(t), GroupElement::Table(x), GroupElement::Table(y)) => {
                self.check(a)?;
                self.check(b)?;
                Ok(GroupElement::Table(t.mul(x, y)))
            }
            _ => Err(GroupError::MixedGroups {
                left: kind_of(a).into(),
                right: kind_of(b).into(),
            }),
        }
    }

    pub fn try_inverse(&self, a: GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(self.inverse(a))
    }

    /// The order-2 central element used as the default image of `h`:
    /// `-I` in SL₂(ℤ/3), `r^k` in the dihedral group, and the unique central
    /// involution of a table group if there is exactly one.
    pub fn default_h_image(&self) -> Result<GroupElement, GroupError> {
        match self {
            TargetGroup::Sl2Z3 => Ok(GroupElement::Mat(Mat2Z3::MINUS_I)),
            TargetGroup::Dihedral(d) => Ok(GroupElement::Dihedral(d.central_rotation())),
            TargetGroup::Table(t) => {
                let inv = t.central_involutions();
                match inv.as_slice() {
                    [z] => Ok(GroupElement::Table(*z)),
                    _ => Err(GroupError::BadElement {
                        text: "auto".into(),
                        reason: format!(
                            "{} has {} central involutions; give the h image explicitly",
                            t.descriptor(),
                            inv.len()
                        ),
                    }),
                }
            }
        }
    }

    /// Parses an element rendering produced by `Display`.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement, GroupError> {
        let res = match self {
            TargetGroup::Sl2Z3 => Mat2Z3::parse(text).map(GroupElement::Mat),
            TargetGroup::Dihedral(d) => d.parse_element(text).map(GroupElement::Dihedral),
            TargetGroup::Table(t) => t.parse_element(text).map(GroupElement::Table),
        };
        res.map_err(|reason| GroupError::BadElement {
            text: text.to_string(),
            reason,
        })
    }
}

fn kind_of(x: GroupElement) -> &'static str {
    match x {
        GroupElement::Mat(_) => "sl2z3",
        GroupElement::Dihedral(_) => "dihedral",
        GroupElement::Table(_) => "table",
    }
}

impl FiniteGroup for TargetGroup {
    type Element = GroupElement;

    fn elements(&self) -> Vec<GroupElement> {
        match self {
            TargetGroup::Sl2Z3 => Sl2Z3
                .elements()
                .into_iter()
                .map(GroupElement::Mat)
                .collect(),
            TargetGroup::Dihedral(d) => d
                .elements()
                .into_iter()
                .map(GroupElement::Dihedral)
                .collect(),
            TargetGroup::Table(t) => t.elements().into_iter().map(GroupElement::Table).collect(),
        }
    }

    fn identity(&self) -> GroupElement {
        match self {
            TargetGroup::Sl2Z3 => GroupElement::Mat(Mat2Z3::IDENTITY),
            TargetGroup::Dihedral(d) => GroupElement::Dihedral(d.identity()),
            TargetGroup::Table(t) => GroupElement::Table(t.identity()),
        }
    }

    /// Panics on operands from another group; use [`TargetGroup::try_mul`]
    /// for untrusted input.
    fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.try_mul(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    fn inverse(&self, a: GroupElement) -> GroupElement {
        match (self, a) {
            (TargetGroup::Sl2Z3, GroupElement::Mat(x)) => GroupElement::Mat(x.inverse()),
            (TargetGroup::Dihedral(d), GroupElement::Dihedral(x)) => {
                GroupElement::Dihedral(d.inverse(x))
            }
            (TargetGroup::Table(t), GroupElement::Table(x)) => GroupElement::Table(t.inverse(x)),
            _ => panic!("element {a} does not belong to {}", self.descriptor()),
        }
    }

    fn descriptor(&self) -> String {
        self.descriptor_value().to_string()
    }

    fn size(&self) -> usize {
        match self {
            TargetGroup::Sl2Z3 => 24,
            TargetGroup::Dihedral(d) => d.size(),
            TargetGroup::Table(t) => t.size(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_operands_are_rejected() {
        let g = TargetGroup::Sl2Z3;
        let d = Dihedral::new(3).unwrap();
        let err = g
            .try_mul(
                GroupElement::Mat(Mat2Z3::IDENTITY),
                GroupElement::Dihedral(d.identity()),
            )
            .unwrap_err();
        assert!(matches!(err, GroupError::MixedGroups { .. }));
    }

    #[test]
    fn dihedral_elements_from_larger_group_are_foreign() {
        let big = Dihedral::new(6).unwrap();
        let small = TargetGroup::Dihedral(Dihedral::new(2).unwrap());
        let x = GroupElement::Dihedral(big.rotation(7));
        assert!(matches!(
            small.try_mul(x, x),
            Err(GroupError::ForeignElement { .. })
        ));
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            GroupDescriptor::parse("sl2z3").unwrap(),
            GroupDescriptor::Sl2Z3
        );
        assert_eq!(
            GroupDescriptor::parse("d2k:7").unwrap(),
            GroupDescriptor::Dihedral { k: 7 }
        );
        assert!(GroupDescriptor::parse("d2k:0").is_err());
        assert!(GroupDescriptor::parse("d2k:x").is_err());
        assert!(GroupDescriptor::parse("s4").is_err());
        assert_eq!(GroupDescriptor::Dihedral { k: 3 }.to_string(), "d2k:3");
    }

    #[test]
    fn default_h_images() {
        assert_eq!(
            TargetGroup::Sl2Z3.default_h_image().unwrap().to_string(),
            "[[-1,0],[0,-1]]"
        );
        let d = TargetGroup::Dihedral(Dihedral::new(3).unwrap());
        assert_eq!(d.default_h_image().unwrap().to_string(), "r^3");
        let z4 = TargetGroup::Table(Arc::new(CayleyTable::cyclic(4).unwrap()));
        assert_eq!(z4.default_h_image().unwrap().to_string(), "g2");
        let z3 = TargetGroup::Table(Arc::new(CayleyTable::cyclic(3).unwrap()));
        assert!(z3.default_h_image().is_err());
    }

    #[test]
    fn parse_render_round_trip() {
        for g in [
            TargetGroup::Sl2Z3,
            TargetGroup::Dihedral(Dihedral::new(4).unwrap()),
            TargetGroup::Table(Arc::new(CayleyTable::cyclic(6).unwrap())),
        ] {
            for x in g.elements() {
                assert_eq!(g.parse_element(&x.to_string()).unwrap(), x);
            }
        }
    }
}
