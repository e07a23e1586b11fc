//! Set literal syntax: comma-separated integers and inclusive ranges `a..b`,
//! e.g. `-7,0,5,8,15` or `0..3,7`.

use crate::error::{Error, Result};
use crate::intset::IntSet;

/// Ranges wider than this are rejected rather than allocated.
const MAX_RANGE_LEN: u64 = 10_000_000;

pub fn parse_set_literal(text: &str) -> Result<IntSet> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(IntSet::empty());
    }
    let mut values = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::Parse(format!(
                "empty element in set literal {text:?}"
            )));
        }
        match token.split_once("..") {
            Some((lo, hi)) => {
                let lo = parse_int(lo)?;
                let hi = parse_int(hi)?;
                if lo > hi {
                    return Err(Error::Parse(format!("empty range {token:?}")));
                }
                if hi.abs_diff(lo) >= MAX_RANGE_LEN {
                    return Err(Error::Parse(format!("range {token:?} is too long")));
                }
                values.extend(lo..=hi);
            }
            None => values.push(parse_int(token)?),
        }
    }
    IntSet::new(values)
}

fn parse_int(s: &str) -> Result<i64> {
    let s = s.trim();
    s.parse::<i64>()
        .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_ranges() {
        assert_eq!(
            parse_set_literal("-7,0,5,8,15").unwrap().as_slice(),
            &[-7, 0, 5, 8, 15]
        );
        assert_eq!(
            parse_set_literal(" 3 , 1,1, 2 ").unwrap().as_slice(),
            &[1, 2, 3]
        );
        assert_eq!(
            parse_set_literal("0..3,7").unwrap().as_slice(),
            &[0, 1, 2, 3, 7]
        );
        assert_eq!(
            parse_set_literal("-3..-1").unwrap().as_slice(),
            &[-3, -2, -1]
        );
        assert_eq!(parse_set_literal("4..4").unwrap().as_slice(), &[4]);
        assert!(parse_set_literal("").unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "1,,2",
            "1,",
            "a",
            "1..",
            "..2",
            "3..1",
            "1.5",
            "0..99999999",
            "1;2",
        ] {
            assert!(
                matches!(parse_set_literal(bad), Err(Error::Parse(_))),
                "{bad}"
            );
        }
        assert!(matches!(
            parse_set_literal("9223372036854775807"),
            Err(Error::OverflowRisk(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        let a = parse_set_literal("-24,-23,0..5,40").unwrap();
        assert_eq!(parse_set_literal(&a.to_string()).unwrap(), a);
    }
}
