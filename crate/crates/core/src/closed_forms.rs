//! Closed-form representation counts and the dihedral distinguisher.

use serde::{Deserialize, Serialize};

use crate::presentation::gcd;

/// Predicted number of representations into SL₂(ℤ/3) with `h ↦ −I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Sl2z3Count {
    Known(u64),
    /// Odd multiples of 3; the count there depends on the knot.
    NotCovered,
}

impl Sl2z3Count {
    pub fn known(self) -> Option<u64> {
        match self {
            Sl2z3Count::Known(c) => Some(c),
            Sl2z3Count::NotCovered => None,
        }
    }
}

/// `m` odd and prime to 3 gives 1 (every meridian to `I`), `4 | m` gives 0,
/// `m ≡ 2 (mod 4)` gives 6 (every meridian to one order-4 element).
/// `m = 0` kills `h`, so no representation sends it to `−I`.
pub fn sl2z3_count(m: i64) -> Sl2z3Count {
    let a = m.unsigned_abs();
    if a == 0 {
        Sl2z3Count::Known(0)
    } else if a % 2 == 1 {
        if a.is_multiple_of(3) {
            Sl2z3Count::NotCovered
        } else {
            Sl2z3Count::Known(1)
        }
    } else if a.is_multiple_of(4) {
        Sl2z3Count::Known(0)
    } else {
        Sl2z3Count::Known(6)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralCountParams {
    pub m: i64,
    pub k: u64,
    /// `gcd(|m|, k)`, with `gcd(0, k) = 0`.
    pub d: u64,
}

impl DihedralCountParams {
    /// # Panics
    /// If `k == 0`.
    pub fn new(m: i64, k: u64) -> DihedralCountParams {
        assert!(k >= 1, "dihedral parameter k must be positive");
        let a = m.unsigned_abs();
        let d = if a == 0 { 0 } else { gcd(a, k) };
        DihedralCountParams { m, k, d }
    }

    pub fn m_even(&self) -> bool {
        self.m % 2 == 0
    }
}

/// The published count for `D(k) = ⟨r, s | r^{2k}, s², rsrs⟩` with
/// `h ↦ r^k`: 0 for `m` even and `d` odd, `d/2` for `m` even and `d` even
/// (so 0 at `m = 0`), `(d+1)/2` for `m` odd.
///
/// These values count representations up to conjugation by `s`. See
/// [`dihedral_count_exact`] for the number of homomorphisms.
pub fn dihedral_count(m: i64, k: u64) -> u64 {
    let p = DihedralCountParams::new(m, k);
    match (p.m_even(), p.d.is_multiple_of(2)) {
        (true, false) => 0,
        (true, true) => p.d / 2,
        (false, _) => p.d.div_ceil(2),
    }
}

fn two_adic(x: u64) -> u32 {
    x.trailing_zeros()
}

/// The number of homomorphisms with `h ↦ r^k`, as the enumerator counts
/// them. Every meridian goes to one rotation `r^p` with `|m| p ≡ 0` (`m`
/// odd) or `≡ k` (`m` even) mod `2k`, which has `d` solutions when `m` is
/// odd or `v₂(m) ≤ v₂(k)`, and none otherwise. `m = 0` gives 0.
pub fn dihedral_count_exact(m: i64, k: u64) -> u64 {
    let p = DihedralCountParams::new(m, k);
    if p.m == 0 {
        0
    } else if !p.m_even() || two_adic(m.unsigned_abs()) <= two_adic(k) {
        p.d
    } else {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum Distinction {
    Witness { k: u64, count1: u64, count2: u64 },
    Indistinguishable,
}

/// Least `k ≤ k_max` at which [`dihedral_count`] separates `m1` from `m2`.
pub fn distinguish(m1: i64, m2: i64, k_max: u64) -> Distinction {
    distinguish_with(m1, m2, k_max, dihedral_count)
}

/// [`distinguish`] against an arbitrary count function.
pub fn distinguish_with(
    m1: i64,
    m2: i64,
    k_max: u64,
    count: impl Fn(i64, u64) -> u64,
) -> Distinction {
    (1..=k_max)
        .find_map(|k| {
            let (count1, count2) = (count(m1, k), count(m2, k));
            (count1 != count2).then_some(Distinction::Witness { k, count1, count2 })
        })
        .unwrap_or(Distinction::Indistinguishable)
}

/// Default scan bound `max(|m1|, |m2|, 2)`.
pub fn default_k_max(m1: i64, m2: i64) -> u64 {
    m1.unsigned_abs().max(m2.unsigned_abs()).max(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sl2z3_cases() {
        assert_eq!(sl2z3_count(5), Sl2z3Count::Known(1));
        assert_eq!(sl2z3_count(-7), Sl2z3Count::Known(1));
        assert_eq!(sl2z3_count(1), Sl2z3Count::Known(1));
        assert_eq!(sl2z3_count(4), Sl2z3Count::Known(0));
        assert_eq!(sl2z3_count(-8), Sl2z3Count::Known(0));
        assert_eq!(sl2z3_count(2), Sl2z3Count::Known(6));
        assert_eq!(sl2z3_count(-6), Sl2z3Count::Known(6));
        assert_eq!(sl2z3_count(3), Sl2z3Count::NotCovered);
        assert_eq!(sl2z3_count(-9), Sl2z3Count::NotCovered);
        assert_eq!(sl2z3_count(0), Sl2z3Count::Known(0));
    }

    #[test]
    fn dihedral_published_examples() {
        assert_eq!(dihedral_count(2, 3), 0);
        assert_eq!(dihedral_count(2, 2), 1);
        assert_eq!(dihedral_count(3, 3), 2);
        for k in 1..=12 {
            assert_eq!(dihedral_count(0, k), 0);
            assert_eq!(dihedral_count(1, k), 1);
            assert_eq!(dihedral_count(-1, k), 1);
        }
    }

    #[test]
    fn exact_examples() {
        assert_eq!(dihedral_count_exact(3, 3), 3);
        assert_eq!(dihedral_count_exact(2, 3), 0);
        assert_eq!(dihedral_count_exact(2, 2), 2);
        assert_eq!(dihedral_count_exact(4, 2), 0);
        assert_eq!(dihedral_count_exact(4, 4), 4);
        assert_eq!(dihedral_count_exact(6, 4), 2);
        assert_eq!(dihedral_count_exact(0, 5), 0);
        assert_eq!(dihedral_count_exact(-1, 5), 1);
    }

    /// Count `p ∈ [0, 2k)` with `|m| p ≡ target (mod 2k)` directly.
    fn rotation_scan(m: i64, k: u64) -> u64 {
        if m == 0 {
            return 0;
        }
        let a = m.unsigned_abs();
        let target = if a.is_multiple_of(2) { k } else { 0 };
        (0..2 * k).filter(|p| (a * p) % (2 * k) == target).count() as u64
    }

    /// Classes of those rotations under `p ↦ −p`.
    fn rotation_classes(m: i64, k: u64) -> u64 {
        if m == 0 {
            return 0;
        }
        let a = m.unsigned_abs();
        let target = if a.is_multiple_of(2) { k } else { 0 };
        (0..2 * k)
            .filter(|p| (a * p) % (2 * k) == target)
            .filter(|&p| p <= (2 * k - p) % (2 * k))
            .count() as u64
    }

    #[test]
    fn exact_matches_rotation_scan() {
        for m in -24..=24 {
            for k in 1..=24 {
                assert_eq!(
                    dihedral_count_exact(m, k),
                    rotation_scan(m, k),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn published_counts_classes_except_high_two_power() {
        for m in -24i64..=24 {
            for k in 1..=24u64 {
                let p = DihedralCountParams::new(m, k);
                let exception = m != 0
                    && p.m_even()
                    && p.d.is_multiple_of(2)
                    && two_adic(m.unsigned_abs()) > two_adic(k);
                if !exception {
                    assert_eq!(dihedral_count(m, k), rotation_classes(m, k), "m={m} k={k}");
                } else {
                    assert_eq!(rotation_classes(m, k), 0);
                    assert!(dihedral_count(m, k) > 0);
                }
            }
        }
    }

    #[test]
    fn distinguish_examples() {
        assert_eq!(
            distinguish(2, 3, 8),
            Distinction::Witness {
                k: 1,
                count1: 0,
                count2: 1
            }
        );
        assert_eq!(distinguish(5, 5, 10), Distinction::Indistinguishable);
        assert_eq!(
            distinguish(0, 1, 1),
            Distinction::Witness {
                k: 1,
                count1: 0,
                count2: 1
            }
        );
        assert_eq!(distinguish(4, -4, 8), Distinction::Indistinguishable);
        assert_eq!(default_k_max(0, 1), 2);
        assert_eq!(default_k_max(-7, 3), 7);
    }

    #[test]
    fn params_invariants() {
        assert_eq!(DihedralCountParams::new(0, 9).d, 0);
        assert_eq!(DihedralCountParams::new(-12, 8).d, 4);
    }

    proptest! {
        #[test]
        fn depends_on_abs_m(m in -200i64..200, k in 1u64..200) {
            prop_assert_eq!(dihedral_count(m, k), dihedral_count(-m, k));
            prop_assert_eq!(dihedral_count_exact(m, k), dihedral_count_exact(-m, k));
        }

        #[test]
        fn bounded_by_half_gcd(m in -200i64..200, k in 1u64..200) {
            let d = DihedralCountParams::new(m, k).d;
            prop_assert!(dihedral_count(m, k) <= d.div_ceil(2));
            prop_assert!(dihedral_count_exact(m, k) <= d);
        }

        #[test]
        fn distinct_abs_values_are_separated(a in 0i64..40, b in 0i64..40) {
            prop_assume!(a != b);
            let r = distinguish(a, b, default_k_max(a, b));
            let found = matches!(r, Distinction::Witness { .. });
            prop_assert!(found);
        }
    }
}
