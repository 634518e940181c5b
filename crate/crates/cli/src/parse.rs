//! Scalars, vectors, matrices, algebra elements and relations in input files.

use toml::Value;
use trimat::algebra::RelationTerm;
use trimat::{Field, Matrix};

pub type Parsed<T> = Result<T, String>;

/// A scalar written as a TOML integer or string (`"3"`, `"-1/2"`).
pub fn scalar<F: Field>(v: &Value) -> Parsed<F> {
    match v {
        Value::Integer(n) => Ok(F::from_i64(*n)),
        Value::String(s) => F::parse_scalar(s).map_err(|e| e.to_string()),
        other => Err(format!("expected a scalar, found {other}")),
    }
}

pub fn array<'a>(v: &'a Value, what: &str) -> Parsed<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| format!("{what} must be an array"))
}

pub fn vector<F: Field>(v: &Value, len: usize) -> Parsed<Vec<F>> {
    let items = array(v, "a vector")?;
    if items.len() != len {
        return Err(format!("expected a vector of length {len}, found {}", items.len()));
    }
    items.iter().map(scalar).collect()
}

/// A matrix as a list of rows. `[]` stands for any matrix with no entries.
pub fn matrix<F: Field>(v: &Value, rows: usize, cols: usize) -> Parsed<Matrix<F>> {
    let items = array(v, "a matrix")?;
    if items.is_empty() && rows * cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    if items.len() != rows {
        return Err(format!("expected {rows} rows, found {}", items.len()));
    }
    let rows: Vec<Vec<F>> = items.iter().map(|r| vector(r, cols)).collect::<Parsed<_>>()?;
    Ok(Matrix::from_rows_with_width(&rows, cols))
}

pub fn matrices<F: Field>(v: &Value, count: usize, rows: usize, cols: usize) -> Parsed<Vec<Matrix<F>>> {
    let items = array(v, "a list of matrices")?;
    if items.len() != count {
        return Err(format!("expected {count} matrices, found {}", items.len()));
    }
    items.iter().enumerate().map(|(i, m)| matrix(m, rows, cols).map_err(|e| format!("matrix {i}: {e}"))).collect()
}

/// Splits `a + 2 b - c` into signed terms of tokens.
fn signed_terms(text: &str) -> Parsed<Vec<(bool, Vec<&str>)>> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut current: Vec<&str> = Vec::new();
    for tok in text.split_whitespace() {
        match tok {
            "+" | "-" => {
                if current.is_empty() && !terms.is_empty() {
                    return Err(format!("dangling sign in {text:?}"));
                }
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                }
                negative = tok == "-";
            }
            _ => current.push(tok),
        }
    }
    if current.is_empty() {
        return Err(format!("empty term in {text:?}"));
    }
    terms.push((negative, current));
    Ok(terms)
}

/// An algebra element, either a coordinate vector or an expression in basis
/// labels such as `"e_1@1 + e_1@2"` or `"2 x - alpha*beta"`.
pub fn element<F: Field>(v: &Value, labels: &[String]) -> Parsed<Vec<F>> {
    let text = match v {
        Value::String(s) => s,
        _ => return vector(v, labels.len()),
    };
    let mut out = vec![F::zero(); labels.len()];
    for (negative, toks) in signed_terms(text)? {
        let (coeff, label) = match toks.as_slice() {
            [label] => (F::one(), *label),
            [c, label] => (F::parse_scalar(c).map_err(|e| e.to_string())?, *label),
            _ => return Err(format!("cannot read term {:?}", toks.join(" "))),
        };
        let i = labels.iter().position(|l| l == label).ok_or_else(|| format!("unknown basis label {label:?}"))?;
        let c = if negative { -coeff } else { coeff };
        out[i] = out[i].clone() + c;
    }
    Ok(out)
}

/// A relation such as `"alpha*alpha"` or `"g1*a2 - a1*g3"`, paths written in
/// composition order.
pub fn relation(text: &str) -> Parsed<Vec<RelationTerm>> {
    signed_terms(text)?
        .into_iter()
        .map(|(negative, toks)| {
            let (coeff, path) = match toks.as_slice() {
                [path] => (1, *path),
                [c, path] => (c.parse::<i64>().map_err(|_| format!("bad coefficient {c:?}"))?, *path),
                _ => return Err(format!("cannot read term {:?}", toks.join(" "))),
            };
            let path: Vec<String> = path.split('*').map(str::to_string).collect();
            if path.iter().any(String::is_empty) {
                return Err(format!("empty arrow in {text:?}"));
            }
            Ok(RelationTerm { coeff: if negative { -coeff } else { coeff }, path })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use trimat::{F3, Q};

    #[test]
    fn expressions_and_relations() {
        let labels: Vec<String> = ["e_1", "e_2", "x"].iter().map(|s| s.to_string()).collect();
        let v: Vec<F3> = element(&Value::String("e_1 - 2 x".into()), &labels).unwrap();
        assert_eq!(v, vec![F3::new(1), F3::new(0), F3::new(1)]);
        let r = relation("g1*a2 - a1*g3").unwrap();
        assert_eq!((r[0].coeff, r[1].coeff), (1, -1));
        assert_eq!(r[1].path, vec!["a1", "g3"]);
        assert!(relation("a + ").is_err());
        assert!(element::<F3>(&Value::String("y".into()), &labels).is_err());
    }

    #[test]
    fn matrices_with_empty_shapes() {
        let m: Matrix<Q> = matrix(&toml::from_str::<toml::Table>("m = []").unwrap()["m"], 0, 3).unwrap();
        assert_eq!(m.shape(), (0, 3));
        let t: toml::Table = toml::from_str("m = [[1, \"1/2\"], [0, -1]]").unwrap();
        let m: Matrix<Q> = matrix(&t["m"], 2, 2).unwrap();
        assert_eq!(m[(0, 1)], Q::new(1.into(), 2.into()));
        assert!(matrix::<Q>(&t["m"], 3, 2).is_err());
    }
}
