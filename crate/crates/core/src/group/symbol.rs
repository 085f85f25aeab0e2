use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A symbol `p₀[q₀]p₁[q₁]…p_{ℓ−1}`: generator orders `p` and braid lengths `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShephardSymbol {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
}

impl ShephardSymbol {
    pub fn new(p: Vec<u32>, q: Vec<u32>) -> Result<Self> {
        let sym = ShephardSymbol { p, q };
        sym.validate()?;
        Ok(sym)
    }

    pub fn rank(&self) -> usize {
        self.p.len()
    }

    fn validate(&self) -> Result<()> {
        let text = self.to_string();
        let fail = |reason: String| {
            Err(Error::Symbol {
                text: text.clone(),
                reason,
            })
        };
        if self.p.is_empty() {
            return fail("no generators".into());
        }
        if self.q.len() + 1 != self.p.len() {
            return fail("expected one braid length between consecutive generators".into());
        }
        if let Some(p) = self.p.iter().find(|&&p| p < 2) {
            return fail(alloc::format!("generator order {p} is below 2"));
        }
        if let Some(q) = self.q.iter().find(|&&q| q < 3) {
            return fail(alloc::format!("braid length {q} is below 3"));
        }
        Ok(())
    }
}

impl FromStr for ShephardSymbol {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let malformed = |reason: &str| Error::Symbol {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(malformed("empty symbol"));
        }
        let mut p = Vec::new();
        let mut q = Vec::new();
        let mut rest = s.as_str();
        loop {
            let end = rest.find('[').unwrap_or(rest.len());
            p.push(
                parse_number(&rest[..end])
                    .ok_or_else(|| malformed("expected a generator order"))?,
            );
            rest = &rest[end..];
            if rest.is_empty() {
                break;
            }
            let close = rest.find(']').ok_or_else(|| malformed("unclosed '['"))?;
            q.push(
                parse_number(&rest[1..close])
                    .ok_or_else(|| malformed("expected a braid length"))?,
            );
            rest = &rest[close + 1..];
            if rest.is_empty() {
                return Err(malformed("symbol ends with a braid length"));
            }
        }
        let sym = ShephardSymbol { p, q };
        sym.validate().map_err(|e| match e {
            Error::Symbol { reason, .. } => Error::Symbol {
                text: text.to_string(),
                reason,
            },
            other => other,
        })?;
        Ok(sym)
    }
}

fn parse_number(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for ShephardSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.p.iter().enumerate() {
            if i > 0 {
                write!(f, "[{}]", self.q.get(i - 1).copied().unwrap_or(0))?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parses_catalog_symbols() {
        let s: ShephardSymbol = "3[3]3".parse().unwrap();
        assert_eq!((s.p.clone(), s.q.clone()), (vec![3, 3], vec![3]));
        let s: ShephardSymbol = "2[4]3[3]3".parse().unwrap();
        assert_eq!((s.p.clone(), s.q.clone()), (vec![2, 3, 3], vec![4, 3]));
        assert_eq!(s.to_string(), "2[4]3[3]3");
        let s: ShephardSymbol = "5".parse().unwrap();
        assert_eq!((s.p, s.q), (vec![5], vec![]));
    }

    #[test]
    fn rejects_bad_symbols() {
        for bad in [
            "3[2]3", "1", "3[3]1", "", "3[3]", "[3]3", "3[x]3", "3[33", "3]3", "-3",
        ] {
            assert!(
                matches!(bad.parse::<ShephardSymbol>(), Err(Error::Symbol { .. })),
                "{bad}"
            );
        }
    }
}
