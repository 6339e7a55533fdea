//! Text syntax for command-line operands.
//!
//! Hypercomplex numbers are sums such as `1 + 2e1 - 3/4e5` (`i`, `j`, `k`
//! alias `e1`, `e2`, `e3`) or Cayley–Dickson pairs `(a, b)` of such sums.
//! Clifford elements are sums of blades such as `2e1e2 - 1/2e3`.

use exceptia::clifford::{CliffordElement, CliffordSignature};
use exceptia::exactnum::parse_rational;
use exceptia::hypercomplex::HyperNumber;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::CliError;

/// A parsed operand whose level is fixed only when it is built.
#[derive(Debug, Clone, PartialEq)]
pub enum HyperExpr {
    Pair(Box<HyperExpr>, Box<HyperExpr>),
    /// `(coefficient, basis index)` terms.
    Sum(Vec<(BigRational, usize)>),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Split at top-level occurrences of `sep`, ignoring parenthesized parts.
fn split_top(s: &str, sep: char) -> Result<Vec<&str>, CliError> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
        if depth < 0 {
            return Err(usage(format!("unbalanced parentheses in `{s}`")));
        }
    }
    if depth != 0 {
        return Err(usage(format!("unbalanced parentheses in `{s}`")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

/// Signed terms of a sum: `"1-2e1+e3"` → `["1", "-2e1", "+e3"]`.
fn signed_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        // a sign after `/` would be part of a malformed rational; keep it attached
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
            out.push(&s[start..i]);
            start = i;
        }
    }
    if !s.is_empty() {
        out.push(&s[start..]);
    }
    out
}

/// `"-3/4"` → −3/4, `"+"`/`""` → 1, `"-"` → −1.
fn coefficient(s: &str) -> Result<BigRational, CliError> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(s.trim_start_matches('+'))
            .map_err(|_| usage(format!("bad coefficient `{s}`"))),
    }
}

pub fn parse_hyper(text: &str) -> Result<HyperExpr, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(usage("empty hypercomplex operand"));
    }
    if s.starts_with('(') && s.ends_with(')') {
        let inner = &s[1..s.len() - 1];
        let parts = split_top(inner, ',')?;
        if parts.len() == 2 {
            return Ok(HyperExpr::Pair(
                Box::new(parse_hyper(parts[0])?),
                Box::new(parse_hyper(parts[1])?),
            ));
        }
        if parts.len() == 1 {
            return parse_hyper(inner);
        }
        return Err(usage(format!("a pair has two halves: `{text}`")));
    }
    let mut terms = Vec::new();
    for t in signed_terms(&s) {
        let (coef, unit) = match t.find(['e', 'i', 'j', 'k']) {
            Some(p) => t.split_at(p),
            None => (t, ""),
        };
        let index = match unit {
            "" => 0,
            "i" => 1,
            "j" => 2,
            "k" => 3,
            _ => unit
                .strip_prefix('e')
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| usage(format!("bad basis unit `{unit}` in `{text}`")))?,
        };
        let c = if unit.is_empty() {
            parse_rational(t.trim_start_matches('+'))
                .map_err(|_| usage(format!("bad term `{t}`")))?
        } else {
            coefficient(coef)?
        };
        terms.push((c, index));
    }
    Ok(HyperExpr::Sum(terms))
}

impl HyperExpr {
    /// Smallest Cayley–Dickson level that holds the expression.
    pub fn required_level(&self) -> u32 {
        match self {
            HyperExpr::Pair(a, b) => 1 + a.required_level().max(b.required_level()),
            HyperExpr::Sum(ts) => {
                let top = ts.iter().map(|(_, i)| *i).max().unwrap_or(0);
                let mut level = 0;
                while (1usize << level) <= top {
                    level += 1;
                }
                level
            }
        }
    }

    pub fn build(&self, level: u32) -> Result<HyperNumber<BigRational>, CliError> {
        if level < self.required_level() {
            return Err(usage(format!(
                "operand needs level ≥ {}, got {level}",
                self.required_level()
            )));
        }
        match self {
            HyperExpr::Pair(a, b) => Ok(HyperNumber::pair(
                &a.build(level - 1)?,
                &b.build(level - 1)?,
            )?),
            HyperExpr::Sum(ts) => {
                let mut c = vec![BigRational::zero(); 1 << level];
                for (k, i) in ts {
                    c[*i] += k;
                }
                Ok(HyperNumber::new(level, c)?)
            }
        }
    }
}

/// Build operands at `level`, or at the least level that holds them all.
pub fn hyper_operands(
    texts: &[String],
    level: Option<u32>,
) -> Result<Vec<HyperNumber<BigRational>>, CliError> {
    let exprs = texts
        .iter()
        .map(|t| parse_hyper(t))
        .collect::<Result<Vec<_>, _>>()?;
    let level = level.unwrap_or_else(|| {
        exprs
            .iter()
            .map(HyperExpr::required_level)
            .max()
            .unwrap_or(0)
    });
    exprs.iter().map(|e| e.build(level)).collect()
}

/// `2e1e2 - 1/2e3 + 1` in the algebra `sig`.
pub fn parse_clifford(text: &str, sig: CliffordSignature) -> Result<CliffordElement, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(usage("empty Clifford operand"));
    }
    let mut acc = CliffordElement::zero(sig);
    for t in signed_terms(&s) {
        let (coef, blade) = match t.find('e') {
            Some(p) => t.split_at(p),
            None => (t, ""),
        };
        let c = if blade.is_empty() {
            parse_rational(t.trim_start_matches('+'))
                .map_err(|_| usage(format!("bad term `{t}`")))?
        } else {
            coefficient(coef)?
        };
        let indices = blade
            .split('e')
            .skip(1)
            .map(|n| {
                n.parse::<usize>()
                    .map_err(|_| usage(format!("bad blade `{blade}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        acc = acc.add(&CliffordElement::blade(sig, &indices, c)?)?;
    }
    Ok(acc)
}

/// Comma- or space-separated rationals.
pub fn parse_vector(text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split([',', ' '])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(|_| usage(format!("bad coordinate `{s}`"))))
        .collect()
}

/// Two blocks of integer triples separated by a blank line.
pub fn parse_loops(text: &str) -> Result<(Vec<[i64; 3]>, Vec<[i64; 3]>), CliError> {
    let mut blocks: Vec<Vec<[i64; 3]>> = vec![Vec::new()];
    for line in text.lines().map(str::trim) {
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !blocks.last().is_some_and(Vec::is_empty) {
                blocks.push(Vec::new());
            }
            continue;
        }
        let nums = line
            .split([',', ' ', '\t'])
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| usage(format!("bad integer `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let p: [i64; 3] = nums
            .try_into()
            .map_err(|_| usage(format!("expected three integers: `{line}`")))?;
        blocks.last_mut().expect("nonempty").push(p);
    }
    blocks.retain(|b| !b.is_empty());
    match <[Vec<[i64; 3]>; 2]>::try_from(blocks) {
        Ok([g, h]) => Ok((g, h)),
        Err(b) => Err(usage(format!("expected two loops, found {}", b.len()))),
    }
}
