//! Plain-text knot files.
//!
//! ```text
//! # comments run to the end of a line
//! name: trefoil
//! generators: 3
//! crossing: 1 2 3        # x1 x2 x1^-1 x3^-1
//! relator: 2 3 -2 -1     # any word in signed indices
//! ```
//!
//! `generators:` must come before any relator line. Canonical output is the
//! name line, the generators line, then one line per relator in input order,
//! crossing-form words written as `crossing:`, single spaces, and a trailing
//! newline.

use std::fmt::Write;

use super::{WirtingerPresentation, Word};
use crate::error::PresentationError;

const DEFAULT_NAME: &str = "unnamed";

fn err(line: usize, column: usize, message: impl Into<String>) -> PresentationError {
    PresentationError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a value into whitespace-separated tokens with 1-based columns.
fn tokens(value: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in value.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((offset + value[..s].chars().count() + 1, &value[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((offset + value[..s].chars().count() + 1, &value[s..]));
    }
    out
}

fn parse_index(
    line: usize,
    column: usize,
    tok: &str,
    generators: usize,
    signed: bool,
) -> Result<i64, PresentationError> {
    let v: i64 = tok
        .parse()
        .map_err(|_| err(line, column, format!("expected an integer, found {tok:?}")))?;
    if v == 0 {
        return Err(err(line, column, "generator index 0 is reserved for h"));
    }
    if v < 0 && !signed {
        return Err(err(
            line,
            column,
            format!("negative index {v} in a crossing line"),
        ));
    }
    if v.unsigned_abs() as usize > generators {
        return Err(err(
            line,
            column,
            format!("generator index {} out of range 1..={generators}", v.abs()),
        ));
    }
    Ok(v)
}

/// Parses a knot file. Errors carry 1-based line and column numbers.
pub fn parse_knot_file(text: &str) -> Result<WirtingerPresentation, PresentationError> {
    let mut name: Option<String> = None;
    let mut generators: Option<usize> = None;
    let mut relators = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let key_col = content.len() - content.trim_start().len() + 1;
        let Some(colon) = content.find(':') else {
            return Err(err(line_no, key_col, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let value = &content[colon + 1..];
        let value_offset = content[..colon + 1].chars().count();

        match key {
            "name" => {
                if name.is_some() {
                    return Err(err(line_no, key_col, "duplicate name line"));
                }
                let label = value.trim();
                if label.is_empty() {
                    return Err(err(line_no, value_offset + 1, "empty name"));
                }
                name = Some(label.to_string());
            }
            "generators" => {
                if generators.is_some() {
                    return Err(err(line_no, key_col, "duplicate generators line"));
                }
                let toks = tokens(value, value_offset);
                let [(col, tok)] = toks.as_slice() else {
                    return Err(err(
                        line_no,
                        value_offset + 1,
                        "expected one generator count",
                    ));
                };
                let l: usize = tok
                    .parse()
                    .map_err(|_| err(line_no, *col, format!("expected a count, found {tok:?}")))?;
                if l == 0 {
                    return Err(err(line_no, *col, "empty generator set"));
                }
                generators = Some(l);
            }
            "crossing" | "relator" => {
                let Some(l) = generators else {
                    return Err(err(line_no, key_col, "relator before the generators line"));
                };
                let toks = tokens(value, value_offset);
                let signed = key == "relator";
                let mut ints = Vec::with_capacity(toks.len());
                for (col, tok) in &toks {
                    ints.push(parse_index(line_no, *col, tok, l, signed)?);
                }
                if signed {
                    if ints.is_empty() {
                        return Err(err(line_no, value_offset + 1, "empty relator"));
                    }
                    relators.push(Word::from_signed(&ints));
                } else {
                    let [a, b, c] = ints.as_slice() else {
                        return Err(err(
                            line_no,
                            value_offset + 1,
                            "crossing needs exactly three indices",
                        ));
                    };
                    relators.push(Word::crossing(*a as usize, *b as usize, *c as usize));
                }
            }
            other => return Err(err(line_no, key_col, format!("unknown key {other:?}"))),
        }
    }

    let Some(l) = generators else {
        return Err(err(last_line + 1, 1, "missing generators line"));
    };
    WirtingerPresentation::new(
        name.unwrap_or_else(|| DEFAULT_NAME.to_string()),
        l,
        relators,
    )
}

/// Canonical text form; `parse_knot_file(serialize_knot(p)) == p` up to
/// provenance.
pub fn serialize_knot(p: &WirtingerPresentation) -> String {
    let mut out = String::new();
    writeln!(out, "name: {}", p.name()).unwrap();
    writeln!(out, "generators: {}", p.generators()).unwrap();
    for w in p.relators() {
        match w.crossing_form() {
            Some((a, b, c)) => writeln!(out, "crossing: {a} {b} {c}").unwrap(),
            None => {
                let body: Vec<String> = w.signed().iter().map(|i| i.to_string()).collect();
                writeln!(out, "relator: {}", body.join(" ")).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::catalog;
    use proptest::prelude::*;

    #[test]
    fn parses_trefoil_file() {
        let p = parse_knot_file(catalog::TREFOIL_FILE).unwrap();
        assert_eq!(p.generators(), 3);
        assert_eq!(p.relators().len(), 3);
        assert!(p.is_crossing_form());
        assert_eq!(p.name(), "trefoil");
    }

    #[test]
    fn reserved_index_zero() {
        let e = parse_knot_file("generators: 2\ncrossing: 1 0 2\n").unwrap_err();
        assert_eq!(
            e,
            PresentationError::Parse {
                line: 2,
                column: 13,
                message: "generator index 0 is reserved for h".into()
            }
        );
    }

    #[test]
    fn error_positions() {
        let cases = [
            ("generators: 0\n", 1, 13),
            ("crossing: 1 2 3\n", 1, 1),
            ("generators: 3\n  crossing: 1 2 4\n", 2, 17),
            ("generators: 3\nrelator: 1 x\n", 2, 12),
            ("generators: 3\nfoo: 1\n", 2, 1),
            ("generators: 3\ncrossing: 1 2\n", 2, 10),
            ("# nothing\n", 2, 1),
            ("generators: 3\ngenerators: 3\n", 2, 1),
            ("generators: 3\nno colon here\n", 2, 1),
            ("generators: 3\ncrossing: 1 -2 3\n", 2, 13),
        ];
        for (text, line, column) in cases {
            match parse_knot_file(text) {
                Err(PresentationError::Parse {
                    line: l, column: c, ..
                }) => {
                    assert_eq!((l, c), (line, column), "{text:?}")
                }
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_general_relators() {
        let text = "# figure eight, by hand\nname: demo  # trailing\n\ngenerators: 2\nrelator: 1 2 -1 -2 -2\n";
        let p = parse_knot_file(text).unwrap();
        assert_eq!(p.name(), "demo");
        assert_eq!(p.relators()[0].signed(), vec![1, 2, -1, -2, -2]);
        assert_eq!(
            serialize_knot(&p),
            "name: demo\ngenerators: 2\nrelator: 1 2 -1 -2 -2\n"
        );
    }

    #[test]
    fn canonicalises_crossing_shaped_relators() {
        let p = parse_knot_file("generators: 3\nrelator: 1   2 -1 -3\n").unwrap();
        assert_eq!(
            serialize_knot(&p),
            "name: unnamed\ngenerators: 3\ncrossing: 1 2 3\n"
        );
    }

    #[test]
    fn figure_eight_round_trip() {
        let p = catalog::lookup("figure-eight").unwrap();
        let text = serialize_knot(&p);
        assert_eq!(serialize_knot(&parse_knot_file(&text).unwrap()), text);
        assert_eq!(
            text,
            catalog::FIGURE_EIGHT_FILE
                .lines()
                .filter(|l| !l.starts_with('#'))
                .map(|l| format!("{l}\n"))
                .collect::<String>()
        );
    }

    fn presentation() -> impl Strategy<Value = WirtingerPresentation> {
        (1usize..7).prop_flat_map(|l| {
            let idx = 1..=l as i64;
            let crossing = (idx.clone(), idx.clone(), idx.clone())
                .prop_map(|(a, b, c)| Word::crossing(a as usize, b as usize, c as usize));
            let general = prop::collection::vec(
                (idx, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i }),
                1..8,
            )
            .prop_map(|v| Word::from_signed(&v));
            let rel = prop_oneof![crossing, general];
            (
                Just(l),
                "[a-z][a-z0-9_-]{0,10}",
                prop::collection::vec(rel, 0..6),
            )
                .prop_map(|(l, name, rels)| WirtingerPresentation::new(name, l, rels).unwrap())
        })
    }

    proptest! {
        #[test]
        fn serialize_parse_round_trip(p in presentation()) {
            let text = serialize_knot(&p);
            let back = parse_knot_file(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(serialize_knot(&back), text);
        }
    }
}
