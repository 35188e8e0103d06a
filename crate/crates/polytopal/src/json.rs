//! Serde document types for the on-disk JSON formats.
//!
//! * Polytope: `{"name": .., "vertices": [..], "facets": [{"name", "vertices"}]}`
//!   with 0-based vertex indices.
//! * Orientation: `{"polytope": .., "edges": [[tail, head], ..]}`.
//! * Geometry: `{"coordinates": [[..], ..], "inequalities": [{"a": [..], "b": ..}]}`
//!   with rationals written as integers or `"p/q"` strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::geometry::{Halfspace, Rat, RationalPoint};
use crate::incidence::VertexFacetIncidence;
use crate::set::IndexSet;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FacetDoc {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub name: String,
    pub vertices: Vec<String>,
    pub facets: Vec<FacetDoc>,
}

impl PolytopeDoc {
    pub fn from_incidence(name: &str, inc: &VertexFacetIncidence) -> Self {
        PolytopeDoc {
            name: name.to_string(),
            vertices: inc.vertex_names().to_vec(),
            facets: (0..inc.facet_count())
                .map(|j| FacetDoc {
                    name: inc.facet_name(j).to_string(),
                    vertices: inc.facet(j).to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_incidence(&self) -> Result<VertexFacetIncidence> {
        for f in &self.facets {
            if f.vertices.iter().any(|&v| v >= 64) {
                return Err(Error::InvalidIncidence(format!(
                    "facet {} has a vertex index out of range",
                    f.name
                )));
            }
        }
        VertexFacetIncidence::new(
            self.vertices.clone(),
            self.facets.iter().map(|f| f.name.clone()).collect(),
            self.facets
                .iter()
                .map(|f| f.vertices.iter().copied().collect::<IndexSet>())
                .collect(),
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrientationDoc {
    /// Name (or path) of the polytope this orientation belongs to.
    pub polytope: String,
    /// Directed edges `tail -> head` in 0-based vertex indices.
    pub edges: Vec<(usize, usize)>,
}

/// A rational number in a JSON document: an integer or a `"p/q"` string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Int(i64),
    Str(String),
}

impl RatValue {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            RatValue::Int(x) => Ok(Rat::from_integer(BigInt::from(*x))),
            RatValue::Str(s) => {
                let parse = |part: &str| -> Result<BigInt> {
                    part.trim()
                        .parse::<BigInt>()
                        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
                };
                match s.split_once('/') {
                    Some((num, den)) => {
                        let den = parse(den)?;
                        if den == BigInt::from(0) {
                            return Err(Error::Parse(format!("zero denominator in {s:?}")));
                        }
                        Ok(Rat::new(parse(num)?, den))
                    }
                    None => Ok(Rat::from_integer(parse(s)?)),
                }
            }
        }
    }

    pub fn from_rat(r: &Rat) -> RatValue {
        if r.is_integer() {
            if let Ok(small) = i64::try_from(r.numer()) {
                return RatValue::Int(small);
            }
        }
        RatValue::Str(if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InequalityDoc {
    pub a: Vec<RatValue>,
    pub b: RatValue,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeometryDoc {
    pub coordinates: Vec<Vec<RatValue>>,
    pub inequalities: Vec<InequalityDoc>,
}

impl GeometryDoc {
    pub fn from_geometry(points: &[RationalPoint], halfspaces: &[Halfspace]) -> Self {
        GeometryDoc {
            coordinates: points
                .iter()
                .map(|p| p.iter().map(RatValue::from_rat).collect())
                .collect(),
            inequalities: halfspaces
                .iter()
                .map(|h| InequalityDoc {
                    a: h.normal.iter().map(RatValue::from_rat).collect(),
                    b: RatValue::from_rat(&h.offset),
                })
                .collect(),
        }
    }

    pub fn to_geometry(&self) -> Result<(Vec<RationalPoint>, Vec<Halfspace>)> {
        let points = self
            .coordinates
            .iter()
            .map(|p| p.iter().map(RatValue::to_rat).collect())
            .collect::<Result<Vec<RationalPoint>>>()?;
        let halfspaces = self
            .inequalities
            .iter()
            .map(|ineq| {
                Ok(Halfspace {
                    normal: ineq
                        .a
                        .iter()
                        .map(RatValue::to_rat)
                        .collect::<Result<Vec<Rat>>>()?,
                    offset: ineq.b.to_rat()?,
                })
            })
            .collect::<Result<Vec<Halfspace>>>()?;
        Ok((points, halfspaces))
    }
}
