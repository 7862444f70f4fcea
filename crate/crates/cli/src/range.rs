use std::fmt;
use std::str::FromStr;

/// Integers given as `8`, `3:10` (inclusive) or a comma list of either.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

const MAX_ITEMS: usize = 100_000;

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim) {
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("`{t}` is not a non-negative integer"))
            };
            match item.split_once(':') {
                Some((a, b)) => {
                    let (a, b) = (parse(a)?, parse(b)?);
                    if a > b {
                        return Err(format!("empty range `{item}`"));
                    }
                    if b - a >= MAX_ITEMS {
                        return Err(format!("range `{item}` is too long"));
                    }
                    out.extend(a..=b);
                }
                None => out.push(parse(item)?),
            }
            if out.len() > MAX_ITEMS {
                return Err("too many values".into());
            }
        }
        Ok(IntList(out))
    }
}

impl fmt::Display for IntList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
