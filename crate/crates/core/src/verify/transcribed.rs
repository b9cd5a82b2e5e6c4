//! Matrices as printed in the published lemma statements, kept verbatim
//! (including entries that are not in SL₂(ℤ/3)) so they can be diffed
//! against exhaustive computation.

pub(crate) type Signed = [i64; 4];

/// The displayed order-4 class.
pub(crate) const P2_MINUS: [Signed; 6] = [
    [0, 1, -1, 1],
    [0, -1, 1, 1],
    [1, 1, 1, -1],
    [-1, -1, -1, 1],
    [-1, 1, 1, 1],
    [1, -1, -1, -1],
];

/// The displayed order-3 class.
pub(crate) const P3_PLUS: [Signed; 8] = [
    [1, 0, 1, 1],
    [1, 0, -1, 1],
    [1, 1, 0, 1],
    [1, -1, 0, 1],
    [0, 1, -1, -1],
    [0, -1, 1, -1],
    [-1, 1, -1, 0],
    [-1, -1, 1, 0],
];

/// The displayed order-6 class.
pub(crate) const P3_MINUS: [Signed; 8] = [
    [-1, 0, 1, -1],
    [-1, 0, -1, -1],
    [-1, 1, 0, -1],
    [-1, -1, 0, -1],
    [0, 1, -1, 1],
    [0, -1, 1, 1],
    [1, -1, 1, 0],
    [1, 1, -1, 0],
];

/// Row and column headers of the `ABA` table.
pub(crate) const TABLE_HEADERS: [Signed; 6] = [
    [0, 1, -1, 0],
    [0, -1, 1, 0],
    [1, 1, 1, -1],
    [-1, -1, -1, 1],
    [1, -1, -1, -1],
    [-1, 1, 1, 1],
];

/// `TABLE[i][j]` is the printed value of `A B A` with `A = TABLE_HEADERS[i]`
/// and `B = TABLE_HEADERS[j]`.
pub(crate) const TABLE: [[Signed; 6]; 6] = [
    [
        [0, -1, 1, 0],
        [0, 1, -1, 0],
        [1, 1, 1, -1],
        [-1, -1, -1, 1],
        [1, -1, -1, -1],
        [-1, 1, 1, 1],
    ],
    [
        [0, -1, 1, 0],
        [0, 1, -1, 0],
        [1, 1, 1, -1],
        [-1, -1, -1, 1],
        [1, -1, -1, -1],
        [-1, 1, 1, 1],
    ],
    [
        [0, 1, -1, 0],
        [0, -1, 1, 0],
        [-1, -1, -1, 1],
        [1, 1, 1, -1],
        [1, -1, -1, -1],
        [-1, 1, 1, 1],
    ],
    [
        [0, 1, -1, 0],
        [0, -1, 1, 0],
        [-1, -1, -1, 1],
        [1, 1, 1, -1],
        [1, -1, -1, -1],
        [-1, 1, 1, 1],
    ],
    [
        [0, 1, -1, 0],
        [0, -1, 1, 0],
        [1, 1, 1, -1],
        [-1, -1, -1, 1],
        [-1, 1, 1, 1],
        [1, -1, -1, -1],
    ],
    [
        [0, 1, -1, 0],
        [0, -1, 1, 0],
        [1, 1, 1, -1],
        [-1, -1, -1, 1],
        [-1, 1, 1, 1],
        [1, -1, 1, -1],
    ],
];

pub(crate) fn render(m: &Signed) -> String {
    format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
}
