use std::fmt;

use super::FiniteGroup;
use crate::error::GroupError;

/// An element `r^p s^δ` of `⟨r, s | r^{2k}, s², rsrs⟩` in normal form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElt {
    p: u32,
    reflection: bool,
}

impl DihedralElt {
    /// Rotation exponent in `[0, 2k)`.
    pub fn rotation_exponent(&self) -> u32 {
        self.p
    }

    /// Whether the `s` factor is present.
    pub fn is_reflection(&self) -> bool {
        self.reflection
    }

    /// Renders as `1`, `r^p`, `s` or `r^p*s`.
    fn render(&self) -> String {
        match (self.p, self.reflection) {
            (0, false) => "1".into(),
            (0, true) => "s".into(),
            (p, false) => format!("r^{p}"),
            (p, true) => format!("r^{p}*s"),
        }
    }
}

impl fmt::Display for DihedralElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for DihedralElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The group `⟨r, s | r^{2k}, s², rsrs⟩` of order `4k`.
///
/// The rotation `r` has order `2k`, so `r^k` is a central involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dihedral {
    k: u32,
}

impl Dihedral {
    pub fn new(k: u32) -> Result<Dihedral, GroupError> {
        if k == 0 {
            return Err(GroupError::ZeroRotationParameter);
        }
        Ok(Dihedral { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    fn modulus(&self) -> i64 {
        2 * self.k as i64
    }

    /// `r^p s^δ` with `p` reduced mod `2k`.
    pub fn element(&self, p: i64, reflection: bool) -> DihedralElt {
        DihedralElt {
            p: p.rem_euclid(self.modulus()) as u32,
            reflection,
        }
    }

    pub fn rotation(&self, p: i64) -> DihedralElt {
        self.element(p, false)
    }

    /// `r^k`, the central involution.
    pub fn central_rotation(&self) -> DihedralElt {
        self.rotation(self.k as i64)
    }

    /// Parses the `Display` rendering (`1`, `s`, `r`, `r^p`, `r^p*s`, `r*s`).
    /// Any integer exponent is reduced mod `2k`.
    pub fn parse_element(&self, text: &str) -> Result<DihedralElt, String> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "1" | "e" => return Ok(self.rotation(0)),
            "s" => return Ok(self.element(0, true)),
            _ => {}
        }
        let (rot, reflection) = match t.strip_suffix("*s").or_else(|| t.strip_suffix('s')) {
            Some(rest) => (rest, true),
            None => (t.as_str(), false),
        };
        let exp = match rot {
            "r" => 1,
            _ => rot
                .strip_prefix("r^")
                .ok_or_else(|| format!("expected r^p or r^p*s, got {text:?}"))?
                .parse::<i64>()
                .map_err(|e| format!("bad exponent in {text:?}: {e}"))?,
        };
        Ok(self.element(exp, reflection))
    }
}

impl FiniteGroup for Dihedral {
    type Element = DihedralElt;

    fn elements(&self) -> Vec<DihedralElt> {
        (0..self.modulus())
            .flat_map(|p| [self.element(p, false), self.element(p, true)])
            .collect()
    }

    fn identity(&self) -> DihedralElt {
        self.rotation(0)
    }

    /// `(p₁,δ₁)·(p₂,δ₂) = (p₁ + (-1)^{δ₁} p₂, δ₁ ⊕ δ₂)`.
    fn mul(&self, a: DihedralElt, b: DihedralElt) -> DihedralElt {
        let q = if a.reflection {
            -(b.p as i64)
        } else {
            b.p as i64
        };
        self.element(a.p as i64 + q, a.reflection ^ b.reflection)
    }

    fn inverse(&self, a: DihedralElt) -> DihedralElt {
        if a.reflection {
            a
        } else {
            self.rotation(-(a.p as i64))
        }
    }

    fn descriptor(&self) -> String {
        format!("d2k:{}", self.k)
    }

    fn size(&self) -> usize {
        4 * self.k as usize
    }
}
