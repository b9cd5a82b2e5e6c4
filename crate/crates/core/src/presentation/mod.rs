//! Wirtinger presentations of classical knots and the presentation of the
//! branched twist spin built from them.
//!
//! Generator indices start at 1 for the meridians `x_1..x_l`. Index 0 is
//! reserved for the fibre generator `h` and only appears in
//! [`BtsPresentation`] relators.

pub mod catalog;
mod format;
mod word;

use serde::Serialize;

use crate::error::PresentationError;

pub use format::{parse_knot_file, serialize_knot};
pub use word::{Letter, Word, H};

/// `⟨x_1, …, x_l | r_1, …, r_k⟩` for a knot diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirtingerPresentation {
    name: String,
    generators: usize,
    relators: Vec<Word>,
    provenance: Option<String>,
}

impl WirtingerPresentation {
    pub fn new(
        name: impl Into<String>,
        generators: usize,
        relators: Vec<Word>,
    ) -> Result<WirtingerPresentation, PresentationError> {
        if generators == 0 {
            return Err(PresentationError::IndexOutOfRange {
                index: 0,
                generators: 0,
            });
        }
        for w in &relators {
            for l in w.letters() {
                if l.generator == H || l.generator > generators {
                    return Err(PresentationError::IndexOutOfRange {
                        index: l.generator,
                        generators,
                    });
                }
            }
        }
        Ok(WirtingerPresentation {
            name: name.into(),
            generators,
            relators,
            provenance: None,
        })
    }

    /// One relator `x_a x_b x_a⁻¹ x_c⁻¹` per `(a, b, c)`.
    pub fn from_crossings(
        name: impl Into<String>,
        generators: usize,
        crossings: &[(usize, usize, usize)],
    ) -> Result<WirtingerPresentation, PresentationError> {
        let relators = crossings
            .iter()
            .map(|&(a, b, c)| crossing_relator(a, b, c, generators))
            .collect::<Result<_, _>>()?;
        WirtingerPresentation::new(name, generators, relators)
    }

    pub fn with_provenance(mut self, note: impl Into<String>) -> WirtingerPresentation {
        self.provenance = Some(note.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of meridian generators `l`.
    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    /// True when every relator has the shape `x_a x_b x_a⁻¹ x_c⁻¹`.
    pub fn is_crossing_form(&self) -> bool {
        self.relators.iter().all(|w| w.crossing_form().is_some())
    }

    /// Row `i` holds the exponent sum of each generator `x_1..x_l` in relator `i`.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|w| w.exponent_sums(self.generators)[1..].to_vec())
            .collect()
    }

    /// Invariant factors of the abelianization, `0` standing for a free ℤ
    /// summand. Trivial factors are dropped, so a knot group gives `[0]`.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        abelian_invariants(self.exponent_matrix(), self.generators)
    }

    /// The abelianization is infinite cyclic, as for every knot group.
    pub fn has_knot_abelianization(&self) -> bool {
        self.abelian_invariants() == [0]
    }
}

/// The relator `x_a x_b x_a⁻¹ x_c⁻¹`, i.e. `x_c = x_a x_b x_a⁻¹`.
pub fn crossing_relator(
    a: usize,
    b: usize,
    c: usize,
    generators: usize,
) -> Result<Word, PresentationError> {
    for index in [a, b, c] {
        if index == 0 || index > generators {
            return Err(PresentationError::IndexOutOfRange { index, generators });
        }
    }
    Ok(Word::crossing(a, b, c))
}

/// Smith normal form diagonal of the relation matrix, padded with zeros for
/// free generators, with unit entries removed.
fn abelian_invariants(mut a: Vec<Vec<i64>>, cols: usize) -> Vec<u64> {
    let rows = a.len();
    let mut diag: Vec<u64> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let pivot_row = a[t].clone();
            for row in a.iter_mut().skip(t + 1) {
                let q = row[t] / p;
                for (x, y) in row[t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= q * y;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                for r in a.iter_mut() {
                    r[j] -= q * r[t];
                }
            }
            // remainders are smaller than the pivot; move the smallest in
            let in_col = (t + 1..rows)
                .filter(|&i| a[i][t] != 0)
                .min_by_key(|&i| a[i][t].abs());
            let in_row = (t + 1..cols)
                .filter(|&j| a[t][j] != 0)
                .min_by_key(|&j| a[t][j].abs());
            match (in_col, in_row) {
                (None, None) => break,
                (Some(i), _) => a.swap(t, i),
                (None, Some(j)) => {
                    for r in a.iter_mut() {
                        r.swap(t, j);
                    }
                }
            }
        }
        diag.push(a[t][t].unsigned_abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (x, y) = (diag[i], diag[j]);
            let g = gcd(x, y);
            diag[i] = g;
            diag[j] = x / g * y;
        }
    }
    let free = cols - diag.len();
    diag.into_iter()
        .filter(|&x| x != 1)
        .chain(std::iter::repeat_n(0, free))
        .collect()
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `ε = 1` for `m ≥ 0`, `-1` otherwise.
pub fn sign_epsilon(m: i64) -> i64 {
    if m >= 0 {
        1
    } else {
        -1
    }
}

/// Least `β ≥ 0` with `nβ ≡ ε (mod |m|)` and parity opposite to `m`.
///
/// Such a `β` always lies in `[0, 2|m|)`: when `m` is even every solution is
/// odd, and when `m` is odd consecutive solutions `β`, `β + |m|` alternate.
pub fn compute_beta(m: i64, n: i64) -> Result<i64, PresentationError> {
    if m.abs() < 2 {
        return Err(PresentationError::OutOfDomain { m });
    }
    if n < 1 {
        return Err(PresentationError::InvalidParameters {
            m,
            n,
            reason: "n must be positive".into(),
        });
    }
    let modulus = m.abs();
    if gcd(modulus as u64, n as u64) != 1 {
        return Err(PresentationError::InvalidParameters {
            m,
            n,
            reason: "m and n must be coprime".into(),
        });
    }
    let eps = sign_epsilon(m);
    let beta = (0..2 * modulus)
        .find(|&b| (n * b - eps).rem_euclid(modulus) == 0 && b.rem_euclid(2) != m.rem_euclid(2))
        .expect("a solution exists in [0, 2|m|) for coprime m, n");
    Ok(beta)
}

/// The presentation
/// `⟨x_1..x_l, h | r_i, [x_i, h], x_1^{|m|} h^β⟩` of the branched twist spin
/// `K^{m,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BtsPresentation {
    #[serde(skip)]
    base: WirtingerPresentation,
    m: i64,
    n: i64,
    /// `None` when `m = 0`; there the power relator is replaced by `h`.
    beta: Option<i64>,
    #[serde(skip)]
    relators: Vec<Word>,
}

impl BtsPresentation {
    pub fn base(&self) -> &WirtingerPresentation {
        &self.base
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn beta(&self) -> Option<i64> {
        self.beta
    }

    /// Number of meridian generators; `h` comes on top of these.
    pub fn meridians(&self) -> usize {
        self.base.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// `x_i^{|m|} h^β`, which holds in the group for every `i` once it holds
    /// for `i = 1`. Returns `None` for `m = 0`.
    pub fn power_relator(&self, i: usize) -> Option<Word> {
        let beta = self.beta?;
        let mut w = Word::power(i, self.m.abs());
        w.extend(&Word::power(H, beta));
        Some(w)
    }

    /// Same presentation with `β` replaced; used to check that shifting `β`
    /// by multiples of `2|m|` leaves counts unchanged.
    pub fn with_beta(&self, beta: i64) -> BtsPresentation {
        let mut out = self.clone();
        if self.beta.is_some() {
            out.beta = Some(beta);
            *out.relators.last_mut().expect("power relator present") =
                out.power_relator(1).expect("beta set");
        }
        out
    }
}

/// Builds the branched-twist-spin presentation.
///
/// For `|m| ≥ 2` the relator list is the base relators, the `l` commutators
/// `x_i h x_i⁻¹ h⁻¹`, then `x_1^{|m|} h^β` with `β` from [`compute_beta`].
/// For `|m| = 1` the last relator is `x_1` (`β = 0`); for `m = 0` it is `h`.
pub fn build_bts(
    base: &WirtingerPresentation,
    m: i64,
    n: i64,
) -> Result<BtsPresentation, PresentationError> {
    if n < 1 {
        return Err(PresentationError::InvalidParameters {
            m,
            n,
            reason: "n must be positive".into(),
        });
    }
    let beta = match m.abs() {
        0 => None,
        1 => Some(0),
        _ => Some(compute_beta(m, n)?),
    };
    let mut relators = base.relators.clone();
    for i in 1..=base.generators {
        relators.push(Word::commutator(i, H));
    }
    let mut out = BtsPresentation {
        base: base.clone(),
        m,
        n,
        beta,
        relators,
    };
    let last = out.power_relator(1).unwrap_or_else(|| Word::generator(H));
    out.relators.push(last);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_beta(m: i64, n: i64) -> i64 {
        // scan the first 2|m| candidates directly against both conditions
        let eps = if m >= 0 { 1 } else { -1 };
        let mut b = 0;
        loop {
            let congruent =
                ((n * b) % m.abs() + m.abs()) % m.abs() == ((eps % m.abs()) + m.abs()) % m.abs();
            let opposite = (b % 2) != (m.abs() % 2);
            if congruent && opposite {
                return b;
            }
            b += 1;
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(compute_beta(2, 1).unwrap(), 1);
        assert_eq!(compute_beta(3, 1).unwrap(), 4);
        assert_eq!(compute_beta(-3, 2).unwrap(), 4);
        assert_eq!(compute_beta(5, 2).unwrap(), 8);
    }

    #[test]
    fn beta_errors() {
        assert_eq!(
            compute_beta(1, 1),
            Err(PresentationError::OutOfDomain { m: 1 })
        );
        assert_eq!(
            compute_beta(0, 1),
            Err(PresentationError::OutOfDomain { m: 0 })
        );
        assert!(matches!(
            compute_beta(4, 2),
            Err(PresentationError::InvalidParameters { .. })
        ));
        assert!(matches!(
            compute_beta(4, 0),
            Err(PresentationError::InvalidParameters { .. })
        ));
    }

    #[test]
    fn beta_sweep() {
        for m in -12i64..=12 {
            if m.abs() < 2 {
                continue;
            }
            for n in 1..=12 {
                if gcd(m.unsigned_abs(), n as u64) != 1 {
                    continue;
                }
                let b = compute_beta(m, n).unwrap();
                assert_eq!(b, brute_beta(m, n), "m={m} n={n}");
                assert_eq!((n * b - sign_epsilon(m)).rem_euclid(m.abs()), 0);
                assert_ne!(b.rem_euclid(2), m.rem_euclid(2));
                assert!((0..2 * m.abs()).contains(&b));
            }
        }
    }

    #[test]
    fn trefoil_bts_shape() {
        let t = catalog::lookup("trefoil").unwrap();
        let p = build_bts(&t, 2, 1).unwrap();
        assert_eq!(p.beta(), Some(1));
        assert_eq!(p.relators().len(), 3 + 3 + 1);
        assert_eq!(p.relators()[6], Word::from_pairs(&[(1, 1), (1, 1), (H, 1)]));
        assert_eq!(p.relators()[3], Word::commutator(1, H));
    }

    #[test]
    fn unknot_bts() {
        let u = catalog::lookup("unknot").unwrap();
        let p = build_bts(&u, 5, 2).unwrap();
        assert_eq!(p.beta(), Some(8));
        assert_eq!(p.relators().len(), 2);
        let mut expected = Word::power(1, 5);
        expected.extend(&Word::power(H, 8));
        assert_eq!(p.relators()[1], expected);
    }

    #[test]
    fn special_m_values() {
        let f = catalog::lookup("figure-eight").unwrap();
        let p0 = build_bts(&f, 0, 1).unwrap();
        assert_eq!(p0.beta(), None);
        assert_eq!(p0.relators().len(), 4 + 4 + 1);
        assert_eq!(p0.relators().last().unwrap(), &Word::generator(H));
        let p1 = build_bts(&f, -1, 3).unwrap();
        assert_eq!(p1.beta(), Some(0));
        assert_eq!(p1.relators().last().unwrap(), &Word::generator(1));
        assert!(build_bts(&f, 6, 4).is_err());
        assert!(build_bts(&f, 6, 0).is_err());
    }

    #[test]
    fn relator_count_law() {
        for entry in catalog::entries() {
            let p = &entry.presentation;
            for m in [-7, -2, 2, 3, 5] {
                let b = build_bts(p, m, 1).unwrap();
                assert_eq!(b.relators().len(), p.relators().len() + p.generators() + 1);
            }
        }
    }

    #[test]
    fn crossing_relator_word() {
        let w = crossing_relator(1, 2, 3, 3).unwrap();
        assert_eq!(w.signed(), vec![1, 2, -1, -3]);
        assert!(crossing_relator(1, 2, 4, 3).is_err());
        assert!(crossing_relator(0, 2, 3, 3).is_err());
    }

    #[test]
    fn abelianization() {
        for entry in catalog::entries() {
            assert!(
                entry.presentation.has_knot_abelianization(),
                "{}",
                entry.name
            );
        }
        // two unlinked meridians: ℤ²
        let link = WirtingerPresentation::new("x", 2, vec![]).unwrap();
        assert_eq!(link.abelian_invariants(), vec![0, 0]);
        // ⟨x | x^6⟩ and ⟨x,y | x^2 y^-2, x^4⟩
        let c6 = WirtingerPresentation::new("c6", 1, vec![Word::power(1, 6)]).unwrap();
        assert_eq!(c6.abelian_invariants(), vec![6]);
        let mut w = Word::power(1, 2);
        w.extend(&Word::power(2, -2));
        let g = WirtingerPresentation::new("g", 2, vec![w, Word::power(1, 4)]).unwrap();
        // relation matrix [[2,-2],[4,0]] has invariant factors 2, 4
        assert_eq!(g.abelian_invariants(), vec![2, 4]);
    }
}
