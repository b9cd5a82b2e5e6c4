use std::collections::HashMap;
use std::fmt;

use super::FiniteGroup;
use crate::error::GroupError;

/// Largest user-supplied table accepted by [`CayleyTable::new`].
pub const MAX_TABLE_ORDER: usize = 256;
/// Largest group [`CayleyTable::compile`] will tabulate.
pub const MAX_COMPILED_ORDER: usize = 4096;

/// Element `g_i` of a [`CayleyTable`] group, identified by its row index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableElt(pub u16);

impl fmt::Display for TableElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

impl fmt::Debug for TableElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// A finite group given by its full multiplication table.
///
/// `table[a * n + b]` is the index of `a·b`.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    identity: u16,
    label: String,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyTable")
            .field("label", &self.label)
            .field("order", &self.n)
            .finish()
    }
}

impl CayleyTable {
    /// Validates `rows` as a group table: square, closed, associative, with a
    /// two-sided identity and inverses.
    pub fn new(label: impl Into<String>, rows: Vec<Vec<u16>>) -> Result<CayleyTable, GroupError> {
        let n = rows.len();
        let bad = |msg: String| Err(GroupError::InvalidTable(msg));
        if n == 0 {
            return bad("table is empty".into());
        }
        if n > MAX_TABLE_ORDER {
            return Err(GroupError::TooLarge {
                order: n,
                max: MAX_TABLE_ORDER,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {i} has {} entries, expected {n}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x as usize >= n) {
                return bad(format!("row {i} contains out-of-range entry {x}"));
            }
        }
        let table: Vec<u16> = rows.into_iter().flatten().collect();
        let at = |a: usize, b: usize| table[a * n + b] as usize;

        let identity = match (0..n).find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a)) {
            Some(e) => e,
            None => return bad("no two-sided identity".into()),
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inverses.push(b as u16),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(CayleyTable {
            n,
            table,
            inverses,
            identity: identity as u16,
            label: label.into(),
        })
    }

    /// ℤ/n as a table, mostly useful in tests.
    pub fn cyclic(n: usize) -> Result<CayleyTable, GroupError> {
        let rows = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u16).collect())
            .collect();
        CayleyTable::new(format!("cyclic:{n}"), rows)
    }

    /// Tabulates any finite group. Row `i` is the `i`-th element of
    /// `g.elements()`, so index order matches canonical element order.
    pub fn compile<G: FiniteGroup>(g: &G) -> Result<(CayleyTable, Vec<G::Element>), GroupError> {
        let elements = g.elements();
        let n = elements.len();
        if n > MAX_COMPILED_ORDER {
            return Err(GroupError::TooLarge {
                order: n,
                max: MAX_COMPILED_ORDER,
            });
        }
        let index: HashMap<G::Element, u16> = elements
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i as u16))
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for &a in &elements {
            for &b in &elements {
                table.push(index[&g.mul(a, b)]);
            }
        }
        let inverses = elements.iter().map(|&a| index[&g.inverse(a)]).collect();
        let identity = index[&g.identity()];
        Ok((
            CayleyTable {
                n,
                table,
                inverses,
                identity,
                label: g.descriptor(),
            },
            elements,
        ))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.n + b as usize]
    }

    #[inline]
    pub(crate) fn inv_idx(&self, a: u16) -> u16 {
        self.inverses[a as usize]
    }

    #[inline]
    pub(crate) fn identity_idx(&self) -> u16 {
        self.identity
    }

    pub(crate) fn pow_idx(&self, g: u16, t: i64) -> u16 {
        let mut base = if t < 0 { self.inv_idx(g) } else { g };
        let mut exp = t.unsigned_abs();
        let mut acc = self.identity;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn order_usize(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: TableElt) -> bool {
        (x.0 as usize) < self.n
    }

    /// Parses `g<i>` or a bare index.
    pub fn parse_element(&self, text: &str) -> Result<TableElt, String> {
        let t = text.trim();
        let digits = t.strip_prefix('g').unwrap_or(t);
        let i: u16 = digits
            .parse()
            .map_err(|e| format!("bad table element {text:?}: {e}"))?;
        let x = TableElt(i);
        if self.contains(x) {
            Ok(x)
        } else {
            Err(format!(
                "index {i} out of range for a group of order {}",
                self.n
            ))
        }
    }
}

impl FiniteGroup for CayleyTable {
    type Element = TableElt;

    fn elements(&self) -> Vec<TableElt> {
        (0..self.n as u16).map(TableElt).collect()
    }

    fn identity(&self) -> TableElt {
        TableElt(self.identity)
    }

    fn mul(&self, a: TableElt, b: TableElt) -> TableElt {
        TableElt(self.mul_idx(a.0, b.0))
    }

    fn inverse(&self, a: TableElt) -> TableElt {
        TableElt(self.inv_idx(a.0))
    }

    fn descriptor(&self) -> String {
        format!("table:{}", self.label)
    }

    fn size(&self) -> usize {
        self.n
    }
}
