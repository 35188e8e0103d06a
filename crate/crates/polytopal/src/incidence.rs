//! Vertex-facet incidence, the sole combinatorial input format.

use crate::set::IndexSet;
use crate::{Error, Result};

/// Names of the vertices and, per facet, the set of incident vertices.
///
/// This is the complete combinatorial description of a polytope: the
/// face lattice is reconstructed from it by intersection closure. The
/// constructor enforces the structural invariants:
///
/// * every vertex index used by a facet is in range,
/// * no facet's vertex set contains another facet's vertex set,
/// * every vertex lies on at least one facet,
/// * vertex and facet names are nonempty and unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFacetIncidence {
    vertex_names: Vec<String>,
    facet_names: Vec<String>,
    facets: Vec<IndexSet>,
}

impl VertexFacetIncidence {
    pub fn new(
        vertex_names: Vec<String>,
        facet_names: Vec<String>,
        facets: Vec<IndexSet>,
    ) -> Result<Self> {
        let n = vertex_names.len();
        let m = facets.len();
        if n == 0 || m == 0 {
            return Err(Error::InvalidIncidence(
                "need at least one vertex and one facet".into(),
            ));
        }
        if n > 64 || m > 64 {
            return Err(Error::InvalidIncidence(
                "at most 64 vertices and 64 facets are supported".into(),
            ));
        }
        if facet_names.len() != m {
            return Err(Error::InvalidIncidence(format!(
                "{} facets but {} facet names",
                m,
                facet_names.len()
            )));
        }
        for (names, kind) in [(&vertex_names, "vertex"), (&facet_names, "facet")] {
            let mut sorted: Vec<&String> = names.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err(Error::InvalidIncidence(format!("duplicate {kind} name")));
            }
            if names.iter().any(|s| s.is_empty()) {
                return Err(Error::InvalidIncidence(format!("empty {kind} name")));
            }
        }
        let all = IndexSet::full(n);
        let mut covered = IndexSet::EMPTY;
        for (j, f) in facets.iter().enumerate() {
            if !f.is_subset(all) {
                return Err(Error::InvalidIncidence(format!(
                    "facet {} ({}) references a vertex index >= {}",
                    j, facet_names[j], n
                )));
            }
            covered = covered.union(*f);
        }
        if covered != all {
            let missing = all.minus(covered).iter().next().unwrap();
            return Err(Error::InvalidIncidence(format!(
                "vertex {} ({}) lies on no facet",
                missing, vertex_names[missing]
            )));
        }
        for j in 0..m {
            for k in 0..m {
                if j != k && facets[j].is_subset(facets[k]) {
                    return Err(Error::InvalidIncidence(format!(
                        "facet {} ({}) is contained in facet {} ({})",
                        j, facet_names[j], k, facet_names[k]
                    )));
                }
            }
        }
        Ok(VertexFacetIncidence {
            vertex_names,
            facet_names,
            facets,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet(&self, j: usize) -> IndexSet {
        self.facets[j]
    }

    pub fn facets(&self) -> &[IndexSet] {
        &self.facets
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn facet_name(&self, j: usize) -> &str {
        &self.facet_names[j]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn facet_names(&self) -> &[String] {
        &self.facet_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|s| s == name)
    }

    pub fn facet_index(&self, name: &str) -> Option<usize> {
        self.facet_names.iter().position(|s| s == name)
    }

    /// Facets of the polytope containing vertex `v`.
    pub fn facets_at(&self, v: usize) -> IndexSet {
        (0..self.facets.len())
            .filter(|&j| self.facets[j].contains(v))
            .collect()
    }

    /// The transposed incidence: vertices and facets swap roles.
    ///
    /// This is the incidence of the combinatorially polar polytope.
    /// Facet names become vertex names, so polarity preserves labels.
    pub fn transpose(&self) -> Result<VertexFacetIncidence> {
        let facets = (0..self.vertex_names.len())
            .map(|v| self.facets_at(v))
            .collect();
        VertexFacetIncidence::new(self.facet_names.clone(), self.vertex_names.clone(), facets)
    }
}
