//! The `hpc-1` JSON definition format.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fodc::RightIdeal;
use crate::group::{ByPair, FiniteGroup, GroupElement};
use crate::hopf::{Algebra, HopfPiCoalgebra, PiCoalgebra};
use crate::linalg::{Field, Matrix, Scalar, Vector};

pub const SCHEMA: &str = "hpc-1";

/// An exact scalar literal: a JSON integer or a string such as `"-3/7"`.
/// Floating point numbers are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub String);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.parse::<i64>() {
            Ok(n) => s.serialize_i64(n),
            Err(_) => s.serialize_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Exact, D::Error> {
        struct ExactVisitor;
        impl Visitor<'_> for ExactVisitor {
            type Value = Exact;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string like \"3/7\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exact, E> {
                Ok(Exact(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exact, E> {
                Ok(Exact(v.to_string()))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exact, E> {
                Err(E::custom(format!("float {v} is not an exact scalar; write it as a string \"p/q\"")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Exact, E> {
                Ok(Exact(v.to_string()))
            }
        }
        d.deserialize_any(ExactVisitor)
    }
}

impl From<i64> for Exact {
    fn from(n: i64) -> Exact {
        Exact(n.to_string())
    }
}

impl From<&Scalar> for Exact {
    fn from(s: &Scalar) -> Exact {
        Exact(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldBlock {
    Rationals,
    Prime { p: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub basis: Vec<String>,
    /// `(i, j, k, c)`: `e_i e_j` contains `c e_k`.
    pub mult: Vec<(usize, usize, usize, Exact)>,
    pub unit: Vec<Exact>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComultBlock {
    pub grading: (usize, usize),
    pub matrix: Vec<Vec<Exact>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealBlock {
    pub name: String,
    pub generators: Vec<Vec<Exact>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub schema: String,
    pub group: GroupBlock,
    pub field: FieldBlock,
    pub components: Vec<Component>,
    pub comult: Vec<ComultBlock>,
    pub counit: Vec<Exact>,
    pub antipode: Vec<Vec<Vec<Exact>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Vec<Vec<Exact>>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<IdealBlock>,
}

/// Display names for group elements and basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Names {
    pub elements: Vec<String>,
    pub bases: Vec<Vec<String>>,
}

impl Names {
    pub fn element(&self, a: GroupElement) -> &str {
        &self.elements[a.0]
    }

    pub fn basis(&self, a: GroupElement, i: usize) -> String {
        self.bases[a.0].get(i).cloned().unwrap_or_else(|| format!("#{i}"))
    }

    /// `Σ c_i e_i` written with the basis names of `A_α`.
    pub fn combination(&self, a: GroupElement, v: &Vector) -> String {
        let mut out = String::new();
        for (i, c) in v.nonzero() {
            let name = self.basis(a, i);
            let text = c.to_string();
            let (sign, magnitude) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", text),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if magnitude == "1" {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{magnitude}·{name}"));
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// A parsed and validated definition.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub hopf: HopfPiCoalgebra,
    pub names: Names,
    pub ideals: Vec<(String, RightIdeal)>,
}

impl Loaded {
    pub fn ideal(&self, name: &str) -> Result<&RightIdeal> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
            .ok_or_else(|| {
                let known: Vec<&str> = self.ideals.iter().map(|(n, _)| n.as_str()).collect();
                Error::UnknownIdeal(format!("{name:?} (document defines {known:?})"))
            })
    }
}

fn scalar(field: Field, e: &Exact, context: &str) -> Result<Scalar> {
    field.parse(&e.0).map_err(|err| Error::Parse(format!("{context}: {err}")))
}

fn vector(field: Field, entries: &[Exact], len: usize, context: &str) -> Result<Vector> {
    if entries.len() != len {
        return Err(Error::Parse(format!("{context}: expected {len} entries, found {}", entries.len())));
    }
    let values = entries
        .iter()
        .enumerate()
        .map(|(i, e)| scalar(field, e, &format!("{context}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Vector::from_entries(field, values))
}

fn matrix(field: Field, rows: &[Vec<Exact>], shape: (usize, usize), context: &str) -> Result<Matrix> {
    if rows.len() != shape.0 {
        return Err(Error::Parse(format!("{context}: expected {} rows, found {}", shape.0, rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(field, r, shape.1, &format!("{context} row {i}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, shape.1, &rows))
}

fn rows_of(m: &Matrix) -> Vec<Vec<Exact>> {
    (0..m.rows()).map(|i| m.row(i).entries().iter().map(Exact::from).collect()).collect()
}

impl Document {
    pub fn from_json(text: &str) -> Result<Document> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(Error::Parse(format!("schema {:?} is not {SCHEMA:?}", doc.schema)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents serialize");
        text.push('\n');
        text
    }

    pub fn load(&self) -> Result<Loaded> {
        let group = FiniteGroup::from_table(self.group.table.clone())?;
        let order = group.order();
        if self.group.elements.len() != order {
            return Err(Error::Parse(format!("group: {} names for {order} elements", self.group.elements.len())));
        }
        let field = match self.field {
            FieldBlock::Rationals => Field::Rationals,
            FieldBlock::Prime { p } => Field::prime(p)?,
        };
        if self.components.len() != order {
            return Err(Error::Parse(format!("components: expected {order}, found {}", self.components.len())));
        }
        let dims: Vec<usize> = self.components.iter().map(|c| c.basis.len()).collect();
        let mut algebras = Vec::with_capacity(order);
        for (a, c) in self.components.iter().enumerate() {
            let context = format!("components[{a}]");
            let constants = c
                .mult
                .iter()
                .enumerate()
                .map(|(t, (i, j, k, v))| Ok((*i, *j, *k, scalar(field, v, &format!("{context}.mult[{t}]"))?)))
                .collect::<Result<Vec<_>>>()?;
            let unit = vector(field, &c.unit, dims[a], &format!("{context}.unit"))?;
            algebras.push(Algebra::from_structure_constants(field, dims[a], constants, unit)?);
        }
        let mut blocks = BTreeMap::new();
        for (t, b) in self.comult.iter().enumerate() {
            let (a, bb) = b.grading;
            if a >= order || bb >= order {
                return Err(Error::Parse(format!("comult[{t}]: grading ({a}, {bb}) outside the group")));
            }
            if blocks.insert((a, bb), (t, b)).is_some() {
                return Err(Error::Parse(format!("comult[{t}]: grading ({a}, {bb}) given twice")));
            }
        }
        let comult = ByPair::try_build(&group, |a, b| {
            let (t, block) = blocks
                .get(&(a.0, b.0))
                .ok_or_else(|| Error::Parse(format!("comult: grading ({}, {}) missing", a.0, b.0)))?;
            let ab = group.mul(a, b);
            matrix(field, &block.matrix, (dims[a.0] * dims[b.0], dims[ab.0]), &format!("comult[{t}]"))
        })?;
        let one = group.identity();
        let counit = Matrix::row_of(&vector(field, &self.counit, dims[one.0], "counit")?);
        if self.antipode.len() != order {
            return Err(Error::Parse(format!("antipode: expected {order} matrices, found {}", self.antipode.len())));
        }
        let antipode = group
            .elements()
            .map(|a| matrix(field, &self.antipode[a.0], (dims[group.inv(a).0], dims[a.0]), &format!("antipode[{}]", a.0)))
            .collect::<Result<Vec<_>>>()?;
        let psi = match &self.psi {
            None => None,
            Some(maps) => {
                if maps.len() != order {
                    return Err(Error::Parse(format!("psi: expected {order} matrices, found {}", maps.len())));
                }
                Some(
                    group
                        .elements()
                        .map(|a| matrix(field, &maps[a.0], (dims[one.0], dims[a.0]), &format!("psi[{}]", a.0)))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        let names = Names {
            elements: self.group.elements.clone(),
            bases: self.components.iter().map(|c| c.basis.clone()).collect(),
        };
        let coalgebra = PiCoalgebra::new(group, field, dims.clone(), comult, counit)?;
        let hopf = HopfPiCoalgebra::new(coalgebra, algebras, antipode, psi)?;
        let mut ideals = Vec::new();
        for (t, block) in self.ideals.iter().enumerate() {
            if ideals.iter().any(|(n, _)| n == &block.name) {
                return Err(Error::Parse(format!("ideals[{t}]: name {:?} given twice", block.name)));
            }
            let generators = block
                .generators
                .iter()
                .enumerate()
                .map(|(g, v)| vector(field, v, dims[one.0], &format!("ideals[{t}].generators[{g}]")))
                .collect::<Result<Vec<_>>>()?;
            ideals.push((block.name.clone(), RightIdeal::generated_by(&hopf, &generators)?));
        }
        Ok(Loaded { hopf, names, ideals })
    }

    /// The document describing `h`, with the given display names and named ideals.
    pub fn from_hopf(h: &HopfPiCoalgebra, names: &Names, ideals: &[(String, Vec<Vector>)]) -> Document {
        let group = h.group();
        let field = match h.field() {
            Field::Rationals => FieldBlock::Rationals,
            Field::Prime(p) => FieldBlock::Prime { p },
        };
        let components = group
            .elements()
            .map(|a| Component {
                basis: names.bases[a.0].clone(),
                mult: h
                    .algebra(a)
                    .structure_constants()
                    .iter()
                    .map(|(i, j, k, c)| (*i, *j, *k, Exact::from(c)))
                    .collect(),
                unit: h.unit(a).entries().iter().map(Exact::from).collect(),
            })
            .collect();
        let comult = group
            .pairs()
            .into_iter()
            .map(|(a, b)| ComultBlock { grading: (a.0, b.0), matrix: rows_of(h.comult(a, b)) })
            .collect();
        Document {
            schema: SCHEMA.into(),
            group: GroupBlock { elements: names.elements.clone(), table: group.table().to_vec() },
            field,
            components,
            comult,
            counit: h.counit().row(0).entries().iter().map(Exact::from).collect(),
            antipode: h.antipodes().iter().map(rows_of).collect(),
            psi: h.psi_maps().map(|maps| maps.iter().map(rows_of).collect()),
            ideals: ideals
                .iter()
                .map(|(name, gens)| IdealBlock {
                    name: name.clone(),
                    generators: gens.iter().map(|g| g.entries().iter().map(Exact::from).collect()).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_are_rejected() {
        let err = serde_json::from_str::<Vec<Exact>>("[1, 0.5]").unwrap_err();
        assert!(err.to_string().contains("not an exact scalar"));
        let ok: Vec<Exact> = serde_json::from_str(r#"[1, "-3/7"]"#).unwrap();
        assert_eq!(ok, vec![Exact("1".into()), Exact("-3/7".into())]);
    }

    #[test]
    fn combinations_use_basis_names() {
        let names = Names { elements: vec!["1".into()], bases: vec![vec!["e".into(), "u".into()]] };
        let q = Field::Rationals;
        let g = GroupElement(0);
        assert_eq!(names.combination(g, &Vector::from_i64s(q, &[1, -1])), "e - u");
        assert_eq!(names.combination(g, &Vector::from_i64s(q, &[-2, 3])), "-2·e + 3·u");
        assert_eq!(names.combination(g, &Vector::from_i64s(q, &[0, 0])), "0");
    }
}
