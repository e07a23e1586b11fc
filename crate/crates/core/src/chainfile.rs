//! Line-oriented chain files:
//!
//! ```text
//! # method=Method1 base=0,2,3,4,7,11,12,14 n=17
//! 0,2,3,4,7,11,12,14
//! 0,2,3,4,7,11,12,14,17
//! ```
//!
//! The header is followed by one set literal per line. `n` is left empty for
//! chains without a modulus. Blank lines are ignored.

use crate::chain::{Chain, MethodTag};
use crate::error::{Error, Result};
use crate::literal::parse_set_literal;

pub fn write_chain(chain: &Chain) -> String {
    let mut out = format!(
        "# method={} base={} n={}\n",
        chain.method(),
        chain.set(1),
        chain.modulus().map(|n| n.to_string()).unwrap_or_default()
    );
    for s in chain.sets() {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

pub fn read_chain(text: &str) -> Result<Chain> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("chain file is empty".into()))?;
    let fields = header
        .strip_prefix('#')
        .ok_or_else(|| Error::Parse(format!("missing header line, got {header:?}")))?;

    let (mut method, mut base, mut modulus) = (None, None, None);
    for field in fields.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("malformed header field {field:?}")))?;
        match key {
            "method" => method = Some(value.parse::<MethodTag>()?),
            "base" => base = Some(parse_set_literal(value)?),
            "n" if value.is_empty() => {}
            "n" => {
                modulus = Some(
                    value
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad modulus {value:?}: {e}")))?,
                )
            }
            _ => return Err(Error::Parse(format!("unknown header field {key:?}"))),
        }
    }
    let method = method.ok_or_else(|| Error::Parse("header lacks method=".into()))?;
    let base = base.ok_or_else(|| Error::Parse("header lacks base=".into()))?;

    let sets = lines.map(parse_set_literal).collect::<Result<Vec<_>>>()?;
    if sets.first() != Some(&base) {
        return Err(Error::Parse(
            "header base does not match the first set".into(),
        ));
    }
    let chain = Chain::new(method, sets)?;
    Ok(match modulus {
        Some(n) => chain.with_modulus(n),
        None => chain,
    })
}
