//! Catalog diagrams against Fox colorings counted by brute force.
//!
//! A p-coloring assigns residues mod p to arcs with `2 c_a = c_b + c_c` at
//! each crossing `(a, b, c)`. Colorings are exactly the homomorphisms of the
//! knot group to the dihedral group of order 2p sending meridians to
//! reflections.

use twistspin::presentation::catalog;
use twistspin::{
    build_bts, count_reps, CayleyTable, SearchConfig, TableElt, WirtingerPresentation,
};

fn crossings(k: &WirtingerPresentation) -> Vec<(usize, usize, usize)> {
    k.relators()
        .iter()
        .map(|w| w.crossing_form().expect("crossing form"))
        .collect()
}

fn colorings(k: &WirtingerPresentation, p: u64) -> u64 {
    let l = k.generators();
    let xs = crossings(k);
    let mut count = 0;
    let mut c = vec![0u64; l + 1];
    'outer: loop {
        if xs
            .iter()
            .all(|&(a, b, cc)| (2 * c[a]) % p == (c[b] + c[cc]) % p)
        {
            count += 1;
        }
        let mut i = l;
        loop {
            if i == 0 {
                break 'outer;
            }
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i -= 1;
        }
    }
    count
}

/// Dihedral group of order 2p: index i is r^i, index p + i is r^i s.
fn dihedral_table(p: u16) -> CayleyTable {
    let n = 2 * p;
    let rows = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (a, s1) = (x % p, x >= p);
                    let (b, s2) = (y % p, y >= p);
                    let rot = if s1 { (a + p - b) % p } else { (a + b) % p };
                    rot + if s1 != s2 { p } else { 0 }
                })
                .collect()
        })
        .collect();
    CayleyTable::new(format!("dihedral-{n}"), rows).unwrap()
}

#[test]
fn known_coloring_numbers() {
    let cases = [
        ("unknot", 3, 3),
        ("trefoil", 3, 9),
        ("trefoil-braid", 3, 9),
        ("trefoil", 5, 5),
        ("figure-eight", 5, 25),
        ("figure-eight", 3, 3),
        ("5_1", 5, 25),
        ("5_1", 3, 3),
        ("5_2", 7, 49),
        ("5_2", 5, 5),
        ("6_1", 3, 9),
        ("6_1", 5, 5),
    ];
    for (name, p, expected) in cases {
        let k = catalog::lookup(name).unwrap();
        assert_eq!(colorings(&k, p), expected, "{name} p={p}");
    }
}

#[test]
fn enumerator_counts_colorings() {
    // With h trivial and m = 2 the power relator is x1^2 = 1, so the
    // representations are the colorings plus the trivial one.
    for e in catalog::entries() {
        for p in [3u16, 5, 7] {
            let g = dihedral_table(p);
            let bts = build_bts(&e.presentation, 2, 1).unwrap();
            let r = count_reps(&bts, &g, &SearchConfig::new(TableElt(0))).unwrap();
            assert_eq!(
                r.count,
                colorings(&e.presentation, p as u64) + 1,
                "{} p={p}",
                e.name
            );
        }
    }
}

#[test]
fn diagrams_of_one_knot_agree() {
    use twistspin::{Dihedral, Mat2Z3, Sl2Z3};
    let a = catalog::lookup("trefoil").unwrap();
    let b = catalog::lookup("trefoil-braid").unwrap();
    for m in -6..=6 {
        let (pa, pb) = (build_bts(&a, m, 1).unwrap(), build_bts(&b, m, 1).unwrap());
        let s = SearchConfig::new(Mat2Z3::MINUS_I);
        assert_eq!(
            count_reps(&pa, &Sl2Z3, &s).unwrap().count,
            count_reps(&pb, &Sl2Z3, &s).unwrap().count,
            "m={m}"
        );
        for k in 1..=6 {
            let d = Dihedral::new(k).unwrap();
            let s = SearchConfig::new(d.central_rotation());
            assert_eq!(
                count_reps(&pa, &d, &s).unwrap().count,
                count_reps(&pb, &d, &s).unwrap().count
            );
        }
    }
}
