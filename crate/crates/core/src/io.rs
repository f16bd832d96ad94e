//! JSON interchange for morphisms, rational parsing and the document
//! shapes printed by the command-line tool.
//!
//! A morphism document looks like
//!
//! ```json
//! {"n":1,"m":1,"terms":[{"coeff":"1","parts":[{"bottom":[1],"top":[1],"genus":0}],"closed":{}}]}
//! ```
//!
//! Coefficients are strings (`"p/q"` or an integer) so no precision is lost.
//! Serialization is canonical: terms and parts in canonical order,
//! coefficients in lowest terms with a positive denominator.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{ClosedComponents, Morphism, SurfaceDiagram};
use crate::error::{Error, Result};
use crate::partition::{BoundaryLabel, Side, WeightedPartition};
use crate::ratfun::RationalSeries;
use crate::statespace::GramResult;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartDocument {
    #[serde(default)]
    pub bottom: Vec<i64>,
    #[serde(default)]
    pub top: Vec<i64>,
    #[serde(default)]
    pub genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub coeff: String,
    pub parts: Vec<PartDocument>,
    #[serde(default)]
    pub closed: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    pub n: i64,
    pub m: i64,
    pub terms: Vec<TermDocument>,
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

/// Comma-separated rationals, e.g. `1,-1` or `7/2`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

pub fn parse_series(num: &str, den: &str) -> Result<RationalSeries> {
    RationalSeries::normalize(parse_rational_list(num)?, parse_rational_list(den)?)
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Validation { path: path.into(), message: message.into() }
}

fn part_document(block: &[BoundaryLabel], genus: u32) -> PartDocument {
    let pick = |side| block.iter().filter(|l| l.side == side).map(|l| l.index as i64).collect();
    PartDocument { bottom: pick(Side::Bottom), top: pick(Side::Top), genus: genus.into() }
}

pub fn parts_document(w: &WeightedPartition) -> Vec<PartDocument> {
    w.parts().map(|(b, g)| part_document(b, g)).collect()
}

pub fn morphism_document(x: &Morphism) -> MorphismDocument {
    let terms = x
        .terms()
        .iter()
        .map(|(d, c)| TermDocument {
            coeff: c.to_string(),
            parts: parts_document(d.parts()),
            closed: d.closed().iter().map(|(g, c)| (g.to_string(), i64::from(*c))).collect(),
        })
        .collect();
    MorphismDocument { n: x.n() as i64, m: x.m() as i64, terms }
}

#[derive(Serialize)]
struct CanonicalTerm<'a> {
    coeff: String,
    parts: Vec<PartDocument>,
    // numeric key order, which a string-keyed map would not give
    closed: &'a ClosedComponents,
}

#[derive(Serialize)]
struct CanonicalMorphism<'a> {
    n: usize,
    m: usize,
    terms: Vec<CanonicalTerm<'a>>,
}

/// Canonical compact JSON.
pub fn serialize_morphism(x: &Morphism) -> String {
    let terms = x
        .terms()
        .iter()
        .map(|(d, c)| CanonicalTerm { coeff: c.to_string(), parts: parts_document(d.parts()), closed: d.closed() })
        .collect();
    let doc = CanonicalMorphism { n: x.n(), m: x.m(), terms };
    serde_json::to_string(&doc).expect("documents always serialize")
}

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let doc: MorphismDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed morphism document: {e}")))?;
    morphism_from_document(&doc)
}

pub fn morphism_from_document(doc: &MorphismDocument) -> Result<Morphism> {
    if doc.n < 0 {
        return Err(invalid("n", "must be non-negative"));
    }
    if doc.m < 0 {
        return Err(invalid("m", "must be non-negative"));
    }
    let (n, m) = (doc.n as usize, doc.m as usize);
    let mut x = Morphism::zero(n, m);
    for (ti, term) in doc.terms.iter().enumerate() {
        let path = format!("terms[{ti}]");
        let coeff = parse_rational(&term.coeff).map_err(|e| invalid(format!("{path}.coeff"), e.to_string()))?;
        let d = diagram_from_term(n, m, term, &path)?;
        x.add_term(d, coeff);
    }
    Ok(x)
}

fn diagram_from_term(n: usize, m: usize, term: &TermDocument, path: &str) -> Result<SurfaceDiagram> {
    let mut owner: Vec<Option<usize>> = vec![None; n + m];
    let mut blocks = Vec::with_capacity(term.parts.len());
    for (pi, part) in term.parts.iter().enumerate() {
        let ppath = format!("{path}.parts[{pi}]");
        if part.genus < 0 {
            return Err(invalid(format!("{ppath}.genus"), format!("genus {} is negative", part.genus)));
        }
        let genus = u32::try_from(part.genus).map_err(|_| invalid(format!("{ppath}.genus"), "genus too large"))?;
        if part.bottom.is_empty() && part.top.is_empty() {
            return Err(invalid(ppath, "part has no boundary circles; use \"closed\" for closed components"));
        }
        let mut labels = Vec::new();
        for (side, list, bound) in [(Side::Bottom, &part.bottom, n), (Side::Top, &part.top, m)] {
            let field = if side == Side::Bottom { "bottom" } else { "top" };
            for &i in list {
                if i < 1 || i as usize > bound {
                    return Err(invalid(
                        format!("{ppath}.{field}"),
                        format!("circle {i} out of range 1..={bound}"),
                    ));
                }
                let label = BoundaryLabel { side, index: i as usize };
                let pos = label.position(n);
                if let Some(other) = owner[pos] {
                    return Err(invalid(
                        format!("{ppath}.{field}"),
                        format!("circle {label} already belongs to part {other}"),
                    ));
                }
                owner[pos] = Some(pi);
                labels.push(label);
            }
        }
        blocks.push((labels, genus));
    }
    if let Some(pos) = owner.iter().position(Option::is_none) {
        let (side, idx) = if pos < n { ("bottom", pos + 1) } else { ("top", pos - n + 1) };
        return Err(invalid(format!("{path}.parts"), format!("parts do not cover {side} circle {idx}")));
    }
    let mut closed = ClosedComponents::new();
    for (key, &mult) in &term.closed {
        let g: u32 = key
            .parse()
            .map_err(|_| invalid(format!("{path}.closed"), format!("genus key {key:?} is not a non-negative integer")))?;
        if mult < 0 {
            return Err(invalid(format!("{path}.closed.{key}"), format!("multiplicity {mult} is negative")));
        }
        let mult = u32::try_from(mult).map_err(|_| invalid(format!("{path}.closed.{key}"), "multiplicity too large"))?;
        if mult > 0 {
            *closed.entry(g).or_insert(0) += mult;
        }
    }
    let parts = WeightedPartition::from_parts(n, m, blocks).map_err(|e| invalid(format!("{path}.parts"), e.to_string()))?;
    Ok(SurfaceDiagram::new(parts, closed))
}

#[derive(Clone, Debug, Serialize)]
pub struct GramDocument {
    pub n: usize,
    pub k: u32,
    pub basis: Vec<Vec<PartDocument>>,
    pub matrix: Vec<Vec<String>>,
    pub rank: usize,
    pub kernel: Vec<Vec<String>>,
}

pub fn gram_document(n: usize, k: u32, g: &GramResult) -> GramDocument {
    let strings = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    GramDocument {
        n,
        k,
        basis: g.basis.iter().map(parts_document).collect(),
        matrix: (0..g.matrix.rows()).map(|i| strings(g.matrix.row(i))).collect(),
        rank: g.rank,
        kernel: g.kernel.iter().map(|v| strings(v)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_document() {
        let text = r#"{"n":1,"m":1,"terms":[{"coeff":"1","parts":[{"bottom":[1],"top":[1],"genus":0}],"closed":{}}]}"#;
        assert_eq!(serialize_morphism(&Morphism::identity(1)), text);
        assert_eq!(parse_morphism(text).unwrap(), Morphism::identity(1));
    }

    #[test]
    fn parse_canonicalizes() {
        let text = r#"{"n":2,"m":0,"terms":[
            {"coeff":"2/4","parts":[{"bottom":[2]},{"bottom":[1],"genus":3}],"closed":{"10":1,"2":2}},
            {"coeff":"1/2","parts":[{"bottom":[1],"genus":3},{"bottom":[2]}],"closed":{"2":2,"10":1}}
        ]}"#;
        let x = parse_morphism(text).unwrap();
        assert_eq!(x.len(), 1);
        let out = serialize_morphism(&x);
        assert_eq!(
            out,
            r#"{"n":2,"m":0,"terms":[{"coeff":"1","parts":[{"bottom":[1],"top":[],"genus":3},{"bottom":[2],"top":[],"genus":0}],"closed":{"2":2,"10":1}}]}"#
        );
        assert_eq!(parse_morphism(&out).unwrap(), x);
    }

    #[test]
    fn zero_terms_vanish() {
        let text = r#"{"n":0,"m":0,"terms":[{"coeff":"0","parts":[],"closed":{"1":1}}]}"#;
        let x = parse_morphism(text).unwrap();
        assert!(x.is_zero());
        assert_eq!(serialize_morphism(&x), r#"{"n":0,"m":0,"terms":[]}"#);
    }

    fn err(text: &str) -> String {
        parse_morphism(text).unwrap_err().to_string()
    }

    #[test]
    fn validation_messages() {
        let overlap = r#"{"n":1,"m":1,"terms":[{"coeff":"1","parts":[{"bottom":[1],"top":[1]},{"top":[1]}]}]}"#;
        let e = err(overlap);
        assert!(e.contains("terms[0].parts[1].top") && e.contains("1'"), "{e}");

        let gap = r#"{"n":2,"m":0,"terms":[{"coeff":"1","parts":[{"bottom":[1]}]}]}"#;
        assert!(err(gap).contains("parts do not cover bottom circle 2"));

        let neg = r#"{"n":1,"m":0,"terms":[{"coeff":"1","parts":[{"bottom":[1],"genus":-1}]}]}"#;
        assert!(err(neg).contains("terms[0].parts[0].genus"));

        let range = r#"{"n":1,"m":0,"terms":[{"coeff":"1","parts":[{"bottom":[2]}]}]}"#;
        assert!(err(range).contains("out of range"));

        let coeff = r#"{"n":0,"m":0,"terms":[{"coeff":"1/0","parts":[]}]}"#;
        assert!(err(coeff).contains("terms[0].coeff"));

        let key = r#"{"n":0,"m":0,"terms":[{"coeff":"1","parts":[],"closed":{"x":1}}]}"#;
        assert!(err(key).contains("closed"));

        assert!(matches!(parse_morphism("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_morphism(r#"{"n":0,"m":0,"terms":[],"x":1}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("7/2").unwrap(), Rational::new(7.into(), 2.into()));
        assert_eq!(parse_rational("-3").unwrap(), Rational::from_integer((-3).into()));
        assert_eq!(parse_rational("4/-6").unwrap(), Rational::new((-2).into(), 3.into()));
        assert!(parse_rational("x").is_err());
        let z = parse_series("1", "1,-1,-1").unwrap();
        assert_eq!(z, RationalSeries::from_integers(&[1], &[1, -1, -1]).unwrap());
        assert_eq!(parse_series("1", "0,1"), Err(Error::UndefinedAtZero));
    }
}
