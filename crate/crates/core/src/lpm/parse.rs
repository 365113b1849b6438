//! Text form `U=<list or steps>; L=<list or steps>; n=<int>`.

use std::str::FromStr;

use super::{LatticePath, Lpm};
use crate::error::{Error, Result};

enum PathSpec {
    Steps(LatticePath),
    Indices(Vec<usize>),
}

fn parse_path(value: &str) -> Result<PathSpec> {
    let v = value.trim();
    if v.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace()) {
        let indices = v
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("bad index {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(PathSpec::Indices(indices))
    } else {
        Ok(PathSpec::Steps(v.parse()?))
    }
}

impl FromStr for Lpm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut upper, mut lower, mut n) = (None, None, None);
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {field:?}")))?;
            let slot_taken = match key.trim() {
                "U" => upper.replace(parse_path(value)?).is_some(),
                "L" => lower.replace(parse_path(value)?).is_some(),
                "n" => n
                    .replace(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad n {value:?}: {e}")))?,
                    )
                    .is_some(),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            };
            if slot_taken {
                return Err(Error::Parse(format!("key {:?} given twice", key.trim())));
            }
        }
        let upper = upper.ok_or_else(|| Error::Parse("missing U".into()))?;
        let lower = lower.ok_or_else(|| Error::Parse("missing L".into()))?;
        let resolve = |spec: PathSpec| -> Result<LatticePath> {
            match spec {
                PathSpec::Steps(p) => {
                    if let Some(n) = n {
                        if p.len() != n {
                            return Err(Error::Parse(format!(
                                "path {p} has {} steps but n={n}",
                                p.len()
                            )));
                        }
                    }
                    Ok(p)
                }
                PathSpec::Indices(ix) => {
                    let n = n.ok_or_else(|| Error::Parse("index lists need n".into()))?;
                    LatticePath::from_north_set(n, &ix)
                }
            }
        };
        Lpm::new(resolve(upper)?, resolve(lower)?)
    }
}
