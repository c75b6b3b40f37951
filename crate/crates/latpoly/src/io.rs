//! Interchange format and human-readable formatting.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Int, Rat};
use crate::polytope::LatticePolytope;

/// Polytope JSON: {"vertices": [[..], ..], "name": optional}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

pub fn polytope_from_json(json: &str) -> Result<LatticePolytope> {
    let parsed: PolytopeJson =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    LatticePolytope::from_vertices_i64(&parsed.vertices)
}

pub fn polytope_to_json(p: &LatticePolytope, name: Option<&str>) -> String {
    let vertices: Vec<Vec<i64>> = p
        .vertices()
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    let s = x.to_string();
                    s.parse::<i64>().expect("desk-scale coordinate")
                })
                .collect()
        })
        .collect();
    serde_json::to_string(&PolytopeJson {
        vertices,
        name: name.map(|s| s.to_string()),
    })
    .expect("serializable")
}

/// "p/q" in lowest terms, integers without "/1".
pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// "x0^a0*x1^a1", omitting zero exponents and unit powers; "1" for the
/// constant monomial.
pub fn format_monomial(exponents: &[Int]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, e) in exponents.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if e.is_one() {
            parts.push(format!("x{i}"));
        } else {
            parts.push(format!("x{i}^{e}"));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Parse a comma-separated rational vector like "1,1" or "1/2,3".
pub fn parse_rational_point(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            if let Some((num, den)) = part.split_once('/') {
                let n: Int = num
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational '{part}'")))?;
                let d: Int = den
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational '{part}'")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in '{part}'")));
                }
                Ok(Rat::new(n, d))
            } else {
                let n: Int = part
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer '{part}'")))?;
                Ok(Rat::from_integer(n))
            }
        })
        .collect()
}

/// Parse a comma-separated list of indices like "0,2,3".
pub fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index '{part}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use num_rational::BigRational;

    #[test]
    fn polytope_roundtrip() {
        let p = LatticePolytope::from_vertices_i64(&[
            vec![0, 0],
            vec![1, 0],
            vec![3, 1],
            vec![0, 2],
        ])
        .unwrap();
        let json = polytope_to_json(&p, Some("gauss"));
        let back = polytope_from_json(&json).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&Rat::from_integer(int(2))), "2");
        assert_eq!(
            format_rational(&BigRational::new(int(3), int(-6))),
            "-1/2"
        );
    }

    #[test]
    fn monomial_formatting() {
        assert_eq!(format_monomial(&[int(4), int(5)]), "x0^4*x1^5");
        assert_eq!(format_monomial(&[int(1), int(0)]), "x0");
        assert_eq!(format_monomial(&[int(0), int(0)]), "1");
        assert_eq!(format_monomial(&[int(-1), int(2)]), "x0^-1*x1^2");
    }

    #[test]
    fn point_parsing() {
        assert_eq!(
            parse_rational_point("1,1").unwrap(),
            vec![Rat::from_integer(int(1)), Rat::from_integer(int(1))]
        );
        assert_eq!(
            parse_rational_point("1/2, 3").unwrap(),
            vec![BigRational::new(int(1), int(2)), Rat::from_integer(int(3))]
        );
        assert!(parse_rational_point("x").is_err());
        assert!(parse_rational_point("1/0").is_err());
    }
}
