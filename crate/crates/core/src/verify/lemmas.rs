use std::collections::BTreeSet;
use std::time::Instant;

use super::transcribed::{self, Signed};
use super::{CheckResult, Failures, Status, VerifyConfig};
use crate::group::{classify_sl2z3, Dihedral, FiniteGroup, Mat2Z3, OrderClass, Sl2Z3};
use crate::presentation::{compute_beta, gcd, sign_epsilon};

/// Largest `n` in the central-power sweep.
const KEYLEMMA_N_MAX: i64 = 12;

fn from_signed(m: &Signed) -> Option<Mat2Z3> {
    Mat2Z3::from_signed(m[0], m[1], m[2], m[3])
}

fn det_mod3(m: &Signed) -> i64 {
    (m[0] * m[3] - m[1] * m[2]).rem_euclid(3)
}

/// The three non-central classes, straight from their defining equations.
fn classes_by_definition() -> [(&'static str, BTreeSet<Mat2Z3>); 3] {
    let g = Sl2Z3;
    let (i, mi) = (Mat2Z3::IDENTITY, Mat2Z3::MINUS_I);
    let pick = |f: &dyn Fn(Mat2Z3) -> bool| g.elements().into_iter().filter(|&a| f(a)).collect();
    [
        ("P2-", pick(&|a| a * a == mi)),
        ("P3+", pick(&|a| a != i && g.power(a, 3) == i)),
        ("P3-", pick(&|a| a != mi && g.power(a, 3) == mi)),
    ]
}

fn class_label(c: OrderClass) -> &'static str {
    match c {
        OrderClass::Identity => "I",
        OrderClass::MinusI => "-I",
        OrderClass::P2Minus => "P2-",
        OrderClass::P3Plus => "P3+",
        OrderClass::P3Minus => "P3-",
    }
}

/// Partition of SL₂(ℤ/3) into `{I}`, `{−I}` and the three classes, with the
/// printed class lists diffed against it.
pub fn check_decomposition() -> CheckResult {
    let start = Instant::now();
    let all: BTreeSet<Mat2Z3> = Sl2Z3.elements().into_iter().collect();
    let classes = classes_by_definition();
    let mut fails = Failures::default();
    let mut details = Vec::new();

    if all.len() != 24 {
        fails.push(format!("group order {} (expected 24)", all.len()));
    }
    let sizes: Vec<usize> = classes.iter().map(|(_, s)| s.len()).collect();
    details.push(format!(
        "class sizes I:1 -I:1 P2-:{} P3+:{} P3-:{}",
        sizes[0], sizes[1], sizes[2]
    ));
    if sizes != [6, 8, 8] {
        fails.push(format!("class sizes {sizes:?} (expected [6, 8, 8])"));
    }
    for x in 0..3 {
        for y in x + 1..3 {
            for a in classes[x].1.intersection(&classes[y].1) {
                fails.push(format!(
                    "{a} lies in both {} and {}",
                    classes[x].0, classes[y].0
                ));
            }
        }
    }
    let mut union: BTreeSet<Mat2Z3> = classes
        .iter()
        .flat_map(|(_, s)| s.iter().copied())
        .collect();
    union.insert(Mat2Z3::IDENTITY);
    union.insert(Mat2Z3::MINUS_I);
    for a in all.difference(&union) {
        fails.push(format!("{a} is in no class"));
    }
    for (name, set) in &classes {
        for &a in set {
            if class_label(classify_sl2z3(a)) != *name {
                fails.push(format!(
                    "classifier puts {a} in {}, definition in {name}",
                    class_label(classify_sl2z3(a))
                ));
            }
        }
    }

    let mut discrepancies = Vec::new();
    let printed: [(&str, &[Signed]); 3] = [
        ("P2-", &transcribed::P2_MINUS),
        ("P3+", &transcribed::P3_PLUS),
        ("P3-", &transcribed::P3_MINUS),
    ];
    for ((name, list), (_, truth)) in printed.iter().zip(&classes) {
        let mut shown = BTreeSet::new();
        for m in list.iter() {
            match from_signed(m) {
                None => discrepancies.push(format!(
                    "printed {name} entry {} has determinant {} mod 3",
                    transcribed::render(m),
                    det_mod3(m)
                )),
                Some(a) => {
                    shown.insert(a);
                    let actual = class_label(classify_sl2z3(a));
                    if actual != *name {
                        discrepancies.push(format!(
                            "printed {name} entry {a} satisfies the {actual} condition instead"
                        ));
                    }
                }
            }
        }
        for a in truth.difference(&shown) {
            discrepancies.push(format!(
                "{name} member {a} is missing from the printed list"
            ));
        }
    }

    let status = if !fails.is_empty() {
        Status::Fail
    } else if !discrepancies.is_empty() {
        Status::DiscrepancyDocumented
    } else {
        Status::Pass
    };
    details.extend(fails.into_lines());
    details.extend(discrepancies);
    CheckResult::timed("sl2z3-decomposition", start, status, details)
}

/// `ABA` for every pair in the order-4 class: `B⁻¹` when `B = A^{±1}`,
/// otherwise `B`. The printed table is regenerated and diffed.
pub fn check_quasiconj() -> CheckResult {
    let start = Instant::now();
    let p2 = &classes_by_definition()[0].1;
    let mut fails = Failures::default();
    let mut discrepancies = Vec::new();

    let headers: Vec<Option<Mat2Z3>> = transcribed::TABLE_HEADERS.iter().map(from_signed).collect();
    let header_set: BTreeSet<Mat2Z3> = headers.iter().flatten().copied().collect();
    if &header_set != p2 {
        discrepancies.push("printed table headers are not the P2- class".to_string());
    }

    for &a in p2 {
        for &b in p2 {
            let aba = a * b * a;
            let expected = if b == a || b == a.inverse() {
                b.inverse()
            } else {
                b
            };
            if aba != expected {
                fails.push(format!("A={a} B={b}: ABA={aba}, rule gives {expected}"));
            }
        }
    }

    let mut cells = 0;
    for (i, a) in headers.iter().enumerate() {
        for (j, b) in headers.iter().enumerate() {
            let (Some(a), Some(b)) = (a, b) else { continue };
            cells += 1;
            let computed = *a * *b * *a;
            let cell = &transcribed::TABLE[i][j];
            match from_signed(cell) {
                Some(shown) if shown == computed => {}
                Some(shown) => discrepancies.push(format!(
                    "table row {} col {} (A={a}, B={b}): printed {shown}, computed {computed}",
                    i + 1,
                    j + 1
                )),
                None => discrepancies.push(format!(
                    "table row {} col {} (A={a}, B={b}): printed {} has determinant {} mod 3, computed {computed}",
                    i + 1,
                    j + 1,
                    transcribed::render(cell),
                    det_mod3(cell)
                )),
            }
        }
    }

    let mut details = vec![format!(
        "{} pairs checked against the rule, {cells} printed cells compared",
        p2.len() * p2.len()
    )];
    let status = if !fails.is_empty() {
        Status::Fail
    } else if !discrepancies.is_empty() {
        Status::DiscrepancyDocumented
    } else {
        Status::Pass
    };
    details.extend(fails.into_lines());
    details.extend(discrepancies);
    CheckResult::timed("p2-quasiconjugation", start, status, details)
}

/// For `|m| ≥ 2` and coprime `n`: `β` solves `nβ ≡ ε (mod |m|)` with parity
/// opposite to `m`, and every central involution `c` has `c^β = 1` for odd
/// `m` and `c^β = c` for even `m`.
pub fn check_keylemma(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut fails = Failures::default();
    let mut tuples = 0usize;

    let sl_central = Sl2Z3.central_involutions();
    let dihedral: Vec<(Dihedral, Vec<_>)> = cfg
        .k_range
        .clone()
        .filter_map(|k| Dihedral::new(u32::try_from(k).ok()?).ok())
        .map(|d| {
            let c = d.central_involutions();
            (d, c)
        })
        .collect();

    for m in cfg.m_range.clone().filter(|m| m.abs() >= 2) {
        for n in (1..=KEYLEMMA_N_MAX).filter(|&n| gcd(m.unsigned_abs(), n as u64) == 1) {
            tuples += 1;
            let beta = match compute_beta(m, n) {
                Ok(b) => b,
                Err(e) => {
                    fails.push(format!("m={m} n={n}: {e}"));
                    continue;
                }
            };
            if (n * beta - sign_epsilon(m)).rem_euclid(m.abs()) != 0 {
                fails.push(format!(
                    "m={m} n={n}: beta={beta} fails n*beta = eps mod |m|"
                ));
            }
            if beta.rem_euclid(2) == m.rem_euclid(2) {
                fails.push(format!("m={m} n={n}: beta={beta} has the parity of m"));
            }
            let odd = m % 2 != 0;
            for &c in &sl_central {
                let p = Sl2Z3.power(c, beta);
                if (odd && p != Mat2Z3::IDENTITY) || (!odd && p != c) {
                    fails.push(format!("m={m} n={n} beta={beta} c={c}: c^beta={p}"));
                }
            }
            for (d, central) in &dihedral {
                for &c in central {
                    let p = d.power(c, beta);
                    if (odd && p != d.identity()) || (!odd && p != c) {
                        fails.push(format!(
                            "m={m} n={n} beta={beta} c={c} in {}: c^beta={p}",
                            d.descriptor()
                        ));
                    }
                }
            }
        }
    }
    let mut details = vec![format!(
        "{tuples} (m, n) pairs, central involutions of sl2z3 and {} dihedral groups",
        dihedral.len()
    )];
    let status = if fails.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    details.extend(fails.into_lines());
    CheckResult::timed("central-power-parity", start, status, details)
}

/// Subgroup generated by `gens`, grown by right multiplication until closed.
/// Stops at 24 elements, the whole group.
fn generated_order(gens: &[Mat2Z3]) -> usize {
    let mut seen = BTreeSet::from([Mat2Z3::IDENTITY]);
    let mut frontier = vec![Mat2Z3::IDENTITY];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x * g;
            if seen.insert(y) {
                if seen.len() == 24 {
                    return 24;
                }
                frontier.push(y);
            }
        }
    }
    seen.len()
}

/// Searches all triples for `a³ = b³ = c² = abc` generating the whole group
/// and checks that the common value is `−I` at each of them.
pub fn check_sl2z3_presentation_witness() -> CheckResult {
    let start = Instant::now();
    let g = Sl2Z3;
    let elements = g.elements();
    let mut fails = Failures::default();
    let mut witnesses = Vec::new();
    for &a in &elements {
        let a3 = g.power(a, 3);
        for &b in &elements {
            if g.power(b, 3) != a3 {
                continue;
            }
            for &c in &elements {
                if c * c != a3 || a * b * c != a3 {
                    continue;
                }
                if generated_order(&[a, b, c]) == 24 {
                    witnesses.push((a, b, c));
                    if a * b * c != Mat2Z3::MINUS_I {
                        fails.push(format!("a={a} b={b} c={c}: abc={}", a * b * c));
                    }
                }
            }
        }
    }
    let mut details = vec![format!("group order {}", elements.len())];
    if elements.len() != 24 {
        fails.push(format!("group order {} (expected 24)", elements.len()));
    }
    match witnesses.first() {
        Some((a, b, c)) => {
            details.push(format!("{} generating witnesses", witnesses.len()));
            details.push(format!(
                "first witness a={a} b={b} c={c}, abc={}",
                *a * *b * *c
            ));
        }
        None => fails.push("no generating triple with a^3 = b^3 = c^2 = abc".to_string()),
    }
    let center = g.center();
    details.push(format!(
        "center {{{}}}",
        center
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    if center != [Mat2Z3::IDENTITY, Mat2Z3::MINUS_I] {
        fails.push("center is not {I, -I}".to_string());
    }
    let status = if fails.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    details.extend(fails.into_lines());
    CheckResult::timed("sl2z3-presentation-witness", start, status, details)
}
