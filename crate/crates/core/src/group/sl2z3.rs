use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use super::FiniteGroup;

/// A 2×2 matrix over ℤ/3 with determinant 1.
///
/// Entries are stored as residues in `{0, 1, 2}`, so equal matrices are equal
/// field by field. `Display` renders 2 as -1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2Z3 {
    a: u8,
    b: u8,
    c: u8,
    d: u8,
}

fn residue(x: i64) -> u8 {
    x.rem_euclid(3) as u8
}

impl Mat2Z3 {
    pub const IDENTITY: Mat2Z3 = Mat2Z3 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    pub const MINUS_I: Mat2Z3 = Mat2Z3 {
        a: 2,
        b: 0,
        c: 0,
        d: 2,
    };

    /// Builds `[[a, b], [c, d]]` from arbitrary integers, reduced mod 3.
    /// Returns `None` unless the determinant is 1 mod 3.
    pub fn from_signed(a: i64, b: i64, c: i64, d: i64) -> Option<Mat2Z3> {
        let m = Mat2Z3 {
            a: residue(a),
            b: residue(b),
            c: residue(c),
            d: residue(d),
        };
        (m.det() == 1).then_some(m)
    }

    /// Entries as residues `[a, b, c, d]`.
    pub fn entries(&self) -> [u8; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Entries with 2 shown as -1.
    pub fn signed_entries(&self) -> [i8; 4] {
        self.entries().map(|x| if x == 2 { -1 } else { x as i8 })
    }

    fn det(&self) -> u8 {
        ((self.a as i64 * self.d as i64 - self.b as i64 * self.c as i64).rem_euclid(3)) as u8
    }

    /// Inverse via the adjugate (determinant is 1).
    pub fn inverse(self) -> Mat2Z3 {
        Mat2Z3 {
            a: self.d,
            b: (3 - self.b) % 3,
            c: (3 - self.c) % 3,
            d: self.a,
        }
    }

    /// Parses `[[a,b],[c,d]]` with integer entries; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Mat2Z3, String> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = cleaned
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| "expected [[a,b],[c,d]]".to_string())?;
        let rows: Vec<&str> = inner.split("],[").collect();
        let mut nums = Vec::with_capacity(4);
        for row in &rows {
            for s in row.split(',') {
                nums.push(s.parse::<i64>().map_err(|e| format!("{s:?}: {e}"))?);
            }
        }
        if rows.len() != 2 || nums.len() != 4 || rows.iter().any(|r| r.split(',').count() != 2) {
            return Err("expected exactly four entries [[a,b],[c,d]]".into());
        }
        Mat2Z3::from_signed(nums[0], nums[1], nums[2], nums[3])
            .ok_or_else(|| "determinant is not 1 mod 3".to_string())
    }
}

impl Neg for Mat2Z3 {
    type Output = Mat2Z3;

    fn neg(self) -> Mat2Z3 {
        Mat2Z3 {
            a: (3 - self.a) % 3,
            b: (3 - self.b) % 3,
            c: (3 - self.c) % 3,
            d: (3 - self.d) % 3,
        }
    }
}

impl Mul for Mat2Z3 {
    type Output = Mat2Z3;

    fn mul(self, o: Mat2Z3) -> Mat2Z3 {
        let (a, b, c, d) = (self.a as u16, self.b as u16, self.c as u16, self.d as u16);
        let (e, f, g, h) = (o.a as u16, o.b as u16, o.c as u16, o.d as u16);
        Mat2Z3 {
            a: ((a * e + b * g) % 3) as u8,
            b: ((a * f + b * h) % 3) as u8,
            c: ((c * e + d * g) % 3) as u8,
            d: ((c * f + d * h) % 3) as u8,
        }
    }
}

impl fmt::Display for Mat2Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.signed_entries();
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for Mat2Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Mat2Z3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Mat2Z3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Mat2Z3, D::Error> {
        let text = String::deserialize(d)?;
        Mat2Z3::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// SL₂(ℤ/3), the binary tetrahedral group of order 24.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Sl2Z3;

impl FiniteGroup for Sl2Z3 {
    type Element = Mat2Z3;

    fn elements(&self) -> Vec<Mat2Z3> {
        let mut out = Vec::with_capacity(24);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if let Some(m) = Mat2Z3::from_signed(a, b, c, d) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    fn identity(&self) -> Mat2Z3 {
        Mat2Z3::IDENTITY
    }

    fn mul(&self, a: Mat2Z3, b: Mat2Z3) -> Mat2Z3 {
        a * b
    }

    fn inverse(&self, a: Mat2Z3) -> Mat2Z3 {
        a.inverse()
    }

    fn descriptor(&self) -> String {
        "sl2z3".into()
    }

    fn size(&self) -> usize {
        24
    }
}

/// Classes of SL₂(ℤ/3) by the power that reaches ±I.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OrderClass {
    Identity,
    MinusI,
    /// `A² = -I` (order 4).
    P2Minus,
    /// `A³ = I`, `A ≠ I` (order 3).
    P3Plus,
    /// `A³ = -I`, `A ≠ -I` (order 6).
    P3Minus,
}

/// Classifies by the defining power conditions, never by lookup.
pub fn classify_sl2z3(g: Mat2Z3) -> OrderClass {
    let sq = g * g;
    let cube = sq * g;
    if g == Mat2Z3::IDENTITY {
        OrderClass::Identity
    } else if g == Mat2Z3::MINUS_I {
        OrderClass::MinusI
    } else if sq == Mat2Z3::MINUS_I {
        OrderClass::P2Minus
    } else if cube == Mat2Z3::IDENTITY {
        OrderClass::P3Plus
    } else if cube == Mat2Z3::MINUS_I {
        OrderClass::P3Minus
    } else {
        unreachable!("every element of SL2(Z3) has order 1, 2, 3, 4 or 6")
    }
}
