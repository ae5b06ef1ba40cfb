//! Field descriptors: `fp:P`, `fq:P^N[:mod=POLY]`, `ratfn:P`,
//! `laurent:P[:prec=N][:ram=M]`.

use super::{parse_expr, perr, Expr, Node};
use crate::error::Result;
use crate::fields::{Field, FieldDescriptor, FpPoly};

pub const DEFAULT_LAURENT_PRECISION: i64 = 40;

fn number<T: std::str::FromStr>(text: &str, offset: usize, what: &str) -> Result<T> {
    text.trim().parse().map_err(|_| perr(offset, format!("expected {what}, found '{text}'")))
}

/// Dense coefficients of a polynomial in `a` with integer coefficients.
fn int_poly(node: &Node, p: u32) -> Result<Vec<i64>> {
    let add = |a: Vec<i64>, b: Vec<i64>, sign: i64| {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in b.iter().enumerate() {
            out[i] = (out[i] + sign * x).rem_euclid(p as i64);
        }
        out
    };
    let mul = |a: &[i64], b: &[i64]| {
        let mut out = vec![0; a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y).rem_euclid(p as i64);
            }
        }
        out
    };
    Ok(match &node.expr {
        Expr::Num(n) => vec![n.rem_euclid(p as i64)],
        Expr::Var(v) if v == "a" => vec![0, 1],
        Expr::Add(a, b) => add(int_poly(a, p)?, int_poly(b, p)?, 1),
        Expr::Sub(a, b) => add(int_poly(a, p)?, int_poly(b, p)?, -1),
        Expr::Neg(a) => add(Vec::new(), int_poly(a, p)?, -1),
        Expr::Mul(a, b) => mul(&int_poly(a, p)?, &int_poly(b, p)?),
        Expr::Pow(a, e) if e.is_integer() && *e.numer() >= 0 => {
            let base = int_poly(a, p)?;
            let mut acc = vec![1];
            for _ in 0..*e.numer() {
                acc = mul(&acc, &base);
            }
            acc
        }
        _ => return Err(perr(node.pos, format!("'{node}' is not a polynomial in a"))),
    })
}

/// Parses a field descriptor string.
pub fn parse_descriptor(src: &str) -> Result<Field> {
    let mut parts = src.split(':');
    let kind = parts.next().unwrap_or_default();
    let mut offset = kind.len() + 1;
    let Some(base) = parts.next() else {
        return Err(perr(src.len(), "expected ':' followed by the characteristic"));
    };
    let base_offset = offset;
    offset += base.len() + 1;
    let mut options = Vec::new();
    for part in parts {
        let Some((key, value)) = part.split_once('=') else {
            return Err(perr(offset, format!("expected key=value, found '{part}'")));
        };
        options.push((key, value, offset, offset + key.len() + 1));
        offset += part.len() + 1;
    }
    let allowed: &[&str] = match kind {
        "fp" | "ratfn" => &[],
        "fq" => &["mod"],
        "laurent" => &["prec", "ram"],
        _ => return Err(perr(0, format!("unknown field kind '{kind}'"))),
    };
    for &(key, _, at, _) in &options {
        if !allowed.contains(&key) {
            return Err(perr(at, format!("unknown option '{key}' for {kind}")));
        }
    }
    let option = |name: &str| options.iter().find(|o| o.0 == name).map(|o| (o.1, o.3));
    match kind {
        "fp" => FieldDescriptor::prime(number(base, base_offset, "a prime")?),
        "ratfn" => FieldDescriptor::rational_function(number(base, base_offset, "a prime")?),
        "fq" => {
            let Some((p, n)) = base.split_once('^') else {
                return Err(perr(base_offset, "expected P^N"));
            };
            let p: u32 = number(p, base_offset, "a prime")?;
            let n: usize = number(n, base_offset + p.to_string().len() + 1, "an extension degree")?;
            match option("mod") {
                None => FieldDescriptor::extension(p, n),
                Some((text, at)) => {
                    let node = parse_expr(text).map_err(|e| shift(e, at))?;
                    let coeffs = int_poly(&node, p).map_err(|e| shift(e, at))?;
                    let modulus = FpPoly::new(p, coeffs.into_iter().map(|c| c as u32).collect());
                    if modulus.deg() != n || modulus.is_zero() {
                        return Err(perr(at, format!("modulus {text} does not have degree {n}")));
                    }
                    FieldDescriptor::with_modulus(modulus)
                }
            }
        }
        _ => {
            let p = number(base, base_offset, "a prime")?;
            let prec = match option("prec") {
                Some((text, at)) => number(text, at, "an integer precision")?,
                None => DEFAULT_LAURENT_PRECISION,
            };
            let ram = match option("ram") {
                Some((text, at)) => number(text, at, "a ramification index")?,
                None => 1,
            };
            FieldDescriptor::laurent(p, ram, prec)
        }
    }
}

fn shift(e: crate::Error, by: usize) -> crate::Error {
    match e {
        crate::Error::Parse { position, message } => perr(position + by, message),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn round_trip() {
        for s in ["fp:2", "fq:2^2:mod=a^2+a+1", "ratfn:3", "laurent:2:prec=40:ram=1", "fq:3^3:mod=a^3+2*a+1"] {
            assert_eq!(parse_descriptor(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_descriptor("fq:2^2").unwrap().to_string(), "fq:2^2:mod=a^2+a+1");
        assert_eq!(parse_descriptor("laurent:3").unwrap().to_string(), "laurent:3:prec=40:ram=1");
        assert_eq!(parse_descriptor("fq:3^3:mod=a^3-a-1").unwrap().to_string(), "fq:3^3:mod=a^3+2*a+2");
    }

    #[test]
    fn rejects() {
        assert!(matches!(parse_descriptor("fp:4"), Err(Error::InvalidDescriptor(_))));
        assert!(matches!(parse_descriptor("gf:2"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(
            parse_descriptor("fq:2^2:mod=a^2+1"),
            Err(Error::NotIrreducible(_)) | Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(parse_descriptor("fq:2^2:mod=a^2+*"), Err(Error::Parse { position: 15, .. })));
        assert!(matches!(parse_descriptor("laurent:2:ram=3"), Err(Error::InvalidDescriptor(_))));
    }
}
