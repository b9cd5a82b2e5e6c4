use std::fmt;

/// Index of the fibre generator `h`.
pub const H: usize = 0;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![Letter {
            generator: g,
            inverse: false,
        }])
    }

    /// Builds from `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Word {
        Word(
            pairs
                .iter()
                .map(|&(generator, e)| Letter {
                    generator,
                    inverse: e < 0,
                })
                .collect(),
        )
    }

    /// Builds from signed meridian indices as written in knot files
    /// (`-3` is `x_3⁻¹`). Zero is not representable here.
    pub fn from_signed(indices: &[i64]) -> Word {
        Word(
            indices
                .iter()
                .map(|&i| Letter {
                    generator: i.unsigned_abs() as usize,
                    inverse: i < 0,
                })
                .collect(),
        )
    }

    /// `g^e` written out letter by letter.
    pub fn power(g: usize, e: i64) -> Word {
        let letter = Letter {
            generator: g,
            inverse: e < 0,
        };
        Word(vec![letter; e.unsigned_abs() as usize])
    }

    /// `x_a x_b x_a⁻¹ x_c⁻¹`.
    pub fn crossing(a: usize, b: usize, c: usize) -> Word {
        Word::from_pairs(&[(a, 1), (b, 1), (a, -1), (c, -1)])
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(x: usize, y: usize) -> Word {
        Word::from_pairs(&[(x, 1), (y, 1), (x, -1), (y, -1)])
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Signed indices as written in knot files.
    pub fn signed(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|l| {
                let g = l.generator as i64;
                if l.inverse {
                    -g
                } else {
                    g
                }
            })
            .collect()
    }

    /// `Some((a, b, c))` when the word is `x_a x_b x_a⁻¹ x_c⁻¹` over meridians.
    pub fn crossing_form(&self) -> Option<(usize, usize, usize)> {
        match self.0.as_slice() {
            [p, q, r, s]
                if !p.inverse
                    && !q.inverse
                    && r.inverse
                    && s.inverse
                    && p.generator == r.generator
                    && [p, q, s].iter().all(|l| l.generator != super::H) =>
            {
                Some((p.generator, q.generator, s.generator))
            }
            _ => None,
        }
    }

    /// Exponent sum per generator index `0..=max_index`.
    pub fn exponent_sums(&self, max_index: usize) -> Vec<i64> {
        let mut sums = vec![0; max_index + 1];
        for l in &self.0 {
            sums[l.generator] += if l.inverse { -1 } else { 1 };
        }
        sums
    }

    /// Collapses runs of one generator into `(generator, exponent)` syllables.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.0 {
            let e = if l.inverse { -1 } else { 1 };
            match out.last_mut() {
                Some((g, acc)) if *g == l.generator => *acc += e,
                _ => out.push((l.generator, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.syllables().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = if g == super::H {
                "h".to_string()
            } else {
                format!("x{g}")
            };
            if e == 1 {
                f.write_str(&name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
