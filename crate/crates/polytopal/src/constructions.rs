//! Truncation and pyramid constructions on polytopes-with-digraphs.
//!
//! Truncation cuts a simple unique-sink vertex `v` of a 4-polytope off
//! with a hyperplane through two edge points `u1, u2` and the two
//! neighbours `v3, v4`; the facet list of the result is determined
//! combinatorially, so no coordinates are involved. New edges are
//! oriented into `u1` and `u2` with `(u1, u2)` last, which keeps the
//! digraph acyclic and makes `u2` the new unique sink (again simple, so
//! truncation composes). Pyramid adds an apex above any polytope with
//! every new edge directed into the apex.
//!
//! Both operations preserve the acyclic-USO-Holt-Klee-but-not-shelling
//! classification, which is how infinite families of such digraphs are
//! generated: truncate to add vertices, then take pyramids to raise the
//! dimension.

use crate::digraph::PolytopalDigraph;
use crate::incidence::VertexFacetIncidence;
use crate::lattice::build_face_lattice;
use crate::set::IndexSet;
use crate::{Error, Result};

/// Where to truncate: the vertex, and optionally the role assignment
/// `[v1, v2, v3, v4]` of its four neighbours. Without an explicit
/// split, all assignments with no directed path `v4 -> v3` are
/// enumerated and the lexicographically least is used.
#[derive(Clone, Debug)]
pub struct TruncationSpec {
    pub vertex: usize,
    pub split: Option<[usize; 4]>,
}

/// Target of a family construction: a `dimension`-polytope with
/// `vertices` vertices, reached by truncations followed by pyramids.
#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub dimension: i32,
    pub vertices: usize,
}

fn fresh_name(used: &[String], prefix: &str) -> String {
    let mut k = 1;
    loop {
        let name = format!("{prefix}{k}");
        if !used.iter().any(|s| s == &name) {
            return name;
        }
        k += 1;
    }
}

fn undirected_neighbors(g: &PolytopalDigraph, v: usize) -> Vec<usize> {
    let mut nbrs: Vec<usize> = g
        .out_neighbors(v)
        .iter()
        .chain(g.in_neighbors(v))
        .copied()
        .collect();
    nbrs.sort();
    nbrs.dedup();
    nbrs
}

fn permutations4(items: &[usize; 4]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            if b == a {
                continue;
            }
            for c in 0..4 {
                if c == a || c == b {
                    continue;
                }
                let d = 6 - a - b - c;
                out.push([items[a], items[b], items[c], items[d]]);
            }
        }
    }
    out
}

/// Truncate the simple unique-sink vertex given by `spec` off the
/// 4-polytope carrying `g`. The result has one more vertex (`v` is
/// replaced by `u1, u2`) and one more facet (the cut).
pub fn truncate(g: &PolytopalDigraph, spec: &TruncationSpec) -> Result<PolytopalDigraph> {
    let lat = g.lattice();
    if lat.dimension() != 4 {
        return Err(Error::NotDimensionFour(lat.dimension()));
    }
    if !g.is_acyclic().0 {
        return Err(Error::CyclicInput);
    }
    let inc = lat.to_incidence()?;
    let n = inc.vertex_count();
    let v = spec.vertex;
    if v >= n {
        return Err(Error::FaceNotFound(format!("vertex index {v}")));
    }
    let v_name = inc.vertex_name(v).to_string();

    let facets_at_v = inc.facets_at(v);
    let neighbors = undirected_neighbors(g, v);
    if facets_at_v.len() != 4 || neighbors.len() != 4 {
        return Err(Error::NotSimpleVertex(v_name));
    }
    if !g.out_neighbors(v).is_empty() {
        return Err(Error::NotUniqueSink(v_name));
    }
    if let Some(other) = (0..n).find(|&u| u != v && g.out_neighbors(u).is_empty()) {
        return Err(Error::NotUniqueSink(format!(
            "{} is also a sink",
            inc.vertex_name(other)
        )));
    }

    // Each facet at v omits exactly one neighbour; that match fixes the
    // facet roles once the neighbour split [v1,v2,v3,v4] is chosen.
    let role_facet = |vi: usize| -> Result<usize> {
        let omitting: Vec<usize> = facets_at_v
            .iter()
            .filter(|&j| !inc.facet(j).contains(vi))
            .collect();
        match omitting.as_slice() {
            [j] => Ok(*j),
            _ => Err(Error::NotSimpleVertex(format!(
                "{} facets at {} omit neighbour {}",
                omitting.len(),
                v_name,
                inc.vertex_name(vi)
            ))),
        }
    };

    let candidates: Vec<[usize; 4]> = match spec.split {
        Some(split) => {
            let mut sorted = split;
            sorted.sort();
            if sorted != *neighbors.as_slice() {
                return Err(Error::BadSplit(format!(
                    "split must assign the four neighbours of {v_name}"
                )));
            }
            vec![split]
        }
        None => permutations4(&[neighbors[0], neighbors[1], neighbors[2], neighbors[3]]),
    };
    let explicit = spec.split.is_some();
    let mut chosen = None;
    for split in candidates {
        let [_, _, v3, v4] = split;
        if g.has_path(v4, v3) {
            if explicit {
                return Err(Error::BadSplit(format!(
                    "directed path from {} to {}",
                    inc.vertex_name(v4),
                    inc.vertex_name(v3)
                )));
            }
            continue;
        }
        chosen = Some(split);
        break;
    }
    let Some([v1, v2, v3, v4]) = chosen else {
        return Err(Error::BadSplit(format!(
            "every relabelling of the neighbours of {v_name} has a directed path from v4 to v3"
        )));
    };
    let roles = [
        role_facet(v1)?,
        role_facet(v2)?,
        role_facet(v3)?,
        role_facet(v4)?,
    ];

    // v is removed, u1 and u2 appended.
    let remap = |u: usize| if u < v { u } else { u - 1 };
    let remap_set = |s: IndexSet| -> IndexSet { s.iter().filter(|&u| u != v).map(remap).collect() };
    let u1 = n - 1;
    let u2 = n;

    let mut vertex_names: Vec<String> = (0..n)
        .filter(|&u| u != v)
        .map(|u| inc.vertex_name(u).to_string())
        .collect();
    let u1_name = fresh_name(&vertex_names, "u");
    vertex_names.push(u1_name);
    let u2_name = fresh_name(&vertex_names, "u");
    vertex_names.push(u2_name);

    let mut facet_names = Vec::new();
    let mut facet_sets = Vec::new();
    for j in 0..inc.facet_count() {
        if !facets_at_v.contains(j) {
            facet_names.push(inc.facet_name(j).to_string());
            facet_sets.push(remap_set(inc.facet(j)));
        }
    }
    for (i, &j) in roles.iter().enumerate() {
        let mut s = remap_set(inc.facet(j));
        match i {
            0 => s.insert(u2),
            1 => s.insert(u1),
            _ => {
                s.insert(u1);
                s.insert(u2);
            }
        }
        facet_names.push(inc.facet_name(j).to_string());
        facet_sets.push(s);
    }
    let cut: IndexSet = [u1, u2, remap(v3), remap(v4)].into_iter().collect();
    facet_names.push(fresh_name(&facet_names, "cut"));
    facet_sets.push(cut);

    let new_inc = VertexFacetIncidence::new(vertex_names, facet_names, facet_sets)?;
    let lattice = build_face_lattice(&new_inc)?;

    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(t, h)| t != v && h != v)
        .map(|&(t, h)| (remap(t), remap(h)))
        .collect();
    let had_v3_v4 = g
        .edges()
        .iter()
        .any(|&(t, h)| (t, h) == (v3, v4) || (t, h) == (v4, v3));
    if !had_v3_v4 {
        edges.push((remap(v3), remap(v4)));
    }
    edges.extend([
        (remap(v1), u1),
        (remap(v3), u1),
        (remap(v4), u1),
        (remap(v2), u2),
        (remap(v3), u2),
        (remap(v4), u2),
        (u1, u2),
    ]);
    let out = PolytopalDigraph::new(lattice, edges)?;

    if !out.is_acyclic().0 {
        return Err(Error::Internal("truncation produced a cycle".into()));
    }
    let sinks: Vec<usize> = (0..out.vertex_count())
        .filter(|&u| out.out_neighbors(u).is_empty())
        .collect();
    if sinks != [u2] {
        return Err(Error::Internal(format!(
            "truncation sink set {sinks:?} is not the new vertex"
        )));
    }
    let new_inc = out.lattice().to_incidence()?;
    if new_inc.facets_at(u2).len() != 4 {
        return Err(Error::Internal("new sink is not simple".into()));
    }
    Ok(out)
}

/// The pyramid over the polytope carrying `g`: one apex vertex joined
/// to every old facet, the old polytope as the new base facet, and
/// every new edge directed into the apex. Dimension and vertex count
/// both grow by one.
pub fn pyramid(g: &PolytopalDigraph) -> Result<PolytopalDigraph> {
    let inc = g.lattice().to_incidence()?;
    let n = inc.vertex_count();
    let mut vertex_names = inc.vertex_names().to_vec();
    vertex_names.push(fresh_name(&vertex_names, "apex"));

    let mut facet_names = inc.facet_names().to_vec();
    let mut facet_sets: Vec<IndexSet> = inc
        .facets()
        .iter()
        .map(|f| {
            let mut s = *f;
            s.insert(n);
            s
        })
        .collect();
    facet_names.push(fresh_name(&facet_names, "base"));
    facet_sets.push(IndexSet::full(n));

    let new_inc = VertexFacetIncidence::new(vertex_names, facet_names, facet_sets)?;
    let lattice = build_face_lattice(&new_inc)?;
    if lattice.dimension() != g.lattice().dimension() + 1 {
        return Err(Error::Internal(
            "pyramid did not raise the dimension by one".into(),
        ));
    }
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|i| (i, n)));
    PolytopalDigraph::new(lattice, edges)
}

/// Grow a 4-polytope digraph whose unique sink is simple into a
/// `spec.dimension`-polytope with `spec.vertices` vertices: truncate
/// the unique sink `n - n0 - (d-4)` times, then take `d - 4` pyramids.
/// Splits are chosen automatically, so the output is deterministic.
pub fn family(g0: &PolytopalDigraph, spec: &FamilySpec) -> Result<PolytopalDigraph> {
    let d0 = g0.lattice().dimension();
    if d0 != 4 {
        return Err(Error::NotDimensionFour(d0));
    }
    let n0 = g0.vertex_count();
    if spec.dimension < 4 {
        return Err(Error::BoundsViolation(format!(
            "dimension must be at least 4, got {}",
            spec.dimension
        )));
    }
    let extra_dims = (spec.dimension - 4) as usize;
    if spec.vertices < n0 + extra_dims {
        return Err(Error::BoundsViolation(format!(
            "need at least {} vertices for dimension {}, got {}",
            n0 + extra_dims,
            spec.dimension,
            spec.vertices
        )));
    }
    let truncations = spec.vertices - n0 - extra_dims;
    let mut g = g0.clone();
    for _ in 0..truncations {
        let sinks: Vec<usize> = (0..g.vertex_count())
            .filter(|&u| g.out_neighbors(u).is_empty())
            .collect();
        let [sink] = sinks.as_slice() else {
            return Err(Error::NotUniqueSink(format!("{} sinks", sinks.len())));
        };
        g = truncate(
            &g,
            &TruncationSpec {
                vertex: *sink,
                split: None,
            },
        )?;
    }
    for _ in 0..extra_dims {
        g = pyramid(&g)?;
    }
    Ok(g)
}
