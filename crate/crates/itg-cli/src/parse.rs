//! Input parsing: exact rationals, curve specifications, generator lists.

use anyhow::{anyhow, bail, Result};
use itg_core::arith::{Int, Rat};
use itg_core::ec::WeierstrassCurve;
use itg_core::gl2::MatModN;

/// Parse an exact rational "p/q" or integer "p" of arbitrary size.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        let t = t.trim();
        let (neg, digits) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            bail!("invalid integer '{t}'");
        }
        let mut n = Int::from(0);
        for b in digits.bytes() {
            n = n * Int::from(10) + Int::from((b - b'0') as u32);
        }
        Ok(if neg { -n } else { n })
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == Int::from(0) {
                bail!("zero denominator in '{s}'");
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Parse "[a1,a2,a3,a4,a6]" with exact rational entries.
pub fn parse_curve_list(s: &str) -> Result<WeierstrassCurve> {
    let body = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| anyhow!("curve list must look like [a1,a2,a3,a4,a6]"))?;
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 5 {
        bail!("expected 5 coefficients, found {}", parts.len());
    }
    let mut a = Vec::with_capacity(5);
    for p in parts {
        a.push(parse_rat(p)?);
    }
    WeierstrassCurve::new(
        a[0].clone(),
        a[1].clone(),
        a[2].clone(),
        a[3].clone(),
        a[4].clone(),
    )
    .map_err(|e| anyhow!("{e}"))
}

/// Parse "y^2=x^3+A*x+B" (either term may be absent or negated).
pub fn parse_curve_equation(s: &str) -> Result<WeierstrassCurve> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = compact
        .strip_prefix("y^2=x^3")
        .ok_or_else(|| anyhow!("equation must start with y^2=x^3"))?;
    let mut a = Rat::from_integer(Int::from(0));
    let mut b = Rat::from_integer(Int::from(0));
    if !rest.is_empty() {
        // split into signed terms
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, c) in rest.chars().enumerate() {
            if (c == '+' || c == '-') && i != 0 && !cur.ends_with('/') {
                terms.push(cur.clone());
                cur.clear();
            }
            cur.push(c);
        }
        terms.push(cur);
        for t in terms {
            let t = t.trim_start_matches('+').to_string();
            if let Some(coeff) = t.strip_suffix("*x").or_else(|| t.strip_suffix('x')) {
                a = if coeff.is_empty() || coeff == "-" {
                    parse_rat(&format!("{coeff}1"))?
                } else {
                    parse_rat(coeff)?
                };
            } else {
                b = parse_rat(&t)?;
            }
        }
    }
    WeierstrassCurve::short(a, b).map_err(|e| anyhow!("{e}"))
}

/// Either syntax.
pub fn parse_curve(s: &str) -> Result<WeierstrassCurve> {
    if s.trim_start().starts_with('[') {
        parse_curve_list(s)
    } else if s.trim_start().starts_with('y') {
        parse_curve_equation(s)
    } else {
        bail!("curve must be a coefficient list [a1,a2,a3,a4,a6] or an equation y^2=x^3+A*x+B")
    }
}

/// Parse generators "a,b,c,d;a,b,c,d;..." at a given level.
pub fn parse_gens(level: u32, s: &str) -> Result<Vec<MatModN>> {
    let mut out = Vec::new();
    for mat in s.split(';') {
        let nums: Vec<&str> = mat.split(',').collect();
        if nums.len() != 4 {
            bail!("each generator needs 4 entries, found {}", nums.len());
        }
        let mut e = [0u32; 4];
        for (i, n) in nums.iter().enumerate() {
            let v: i64 = n
                .trim()
                .parse()
                .map_err(|_| anyhow!("invalid matrix entry '{n}'"))?;
            e[i] = (v.rem_euclid(level as i64)) as u32;
        }
        out.push(MatModN::new(level, e[0], e[1], e[2], e[3]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("-25/2").unwrap().to_string(), "-25/2");
        assert_eq!(parse_rat("17").unwrap().to_string(), "17");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn curve_forms() {
        let e1 = parse_curve("[0,0,0,-1,0]").unwrap();
        let e2 = parse_curve("y^2 = x^3 - x").unwrap();
        assert_eq!(e1.j, e2.j);
        let e3 = parse_curve("y^2=x^3+4*x").unwrap();
        assert_eq!(e3.a4, parse_rat("4").unwrap());
        let e4 = parse_curve("y^2=x^3-1/2*x+3").unwrap();
        assert_eq!(e4.a4, parse_rat("-1/2").unwrap());
        assert!(parse_curve("[1,2,3]").is_err());
        assert!(parse_curve("z^2=x^3").is_err());
    }

    #[test]
    fn gens() {
        let g = parse_gens(8, "3,0,0,1;5,0,0,1").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].m, [3, 0, 0, 1]);
        assert!(parse_gens(8, "1,2,3").is_err());
    }
}
