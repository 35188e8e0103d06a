//! Embedded datasets: the `omega` 4-polytope with its canonical
//! orientation, hypercubes, polygons, simplices and crosspolytopes.
//!
//! `omega-star` is a 4-polytope with eight vertices `1..8` and ten
//! facets `F_1..F_10`, given both combinatorially and by exact rational
//! coordinates and supporting halfspaces. `omega` is its combinatorial
//! polar: ten vertices named `F_1..F_10` and eight facets named `1..8`.
//! Orienting every skeleton edge of `omega` from smaller to larger
//! index yields its canonical digraph: acyclic, with a unique
//! topological sort `F_1..F_10` whose polar facet order fails the
//! shelling conditions at the third facet. Note that this orientation
//! is not a unique sink orientation: the facet at vertex 7 of
//! `omega-star` is a bipyramid over `{F_1,F_2,F_3}` whose apexes `F_4`
//! and `F_10` are both sinks, and in fact no acyclic orientation of
//! this particular polytope is USO and Holt-Klee without also having
//! the shelling property (established by exhaustive search).

use crate::digraph::PolytopalDigraph;
use crate::geometry::{rat, Halfspace, RationalPoint};
use crate::incidence::VertexFacetIncidence;
use crate::lattice::{build_face_lattice, FaceLattice};
use crate::set::IndexSet;

/// Vertex lists of the ten facets of `omega-star`, 0-based.
const OMEGA_STAR_FACETS: [&[usize]; 10] = [
    &[0, 1, 3, 4, 6], // F_1  = {1,2,4,5,7}
    &[0, 2, 3, 5, 6], // F_2  = {1,3,4,6,7}
    &[1, 2, 4, 5, 6], // F_3  = {2,3,5,6,7}
    &[0, 1, 2, 6],    // F_4  = {1,2,3,7}
    &[0, 1, 2, 7],    // F_5  = {1,2,3,8}
    &[0, 1, 3, 4, 7], // F_6  = {1,2,4,5,8}
    &[0, 2, 3, 5, 7], // F_7  = {1,3,4,6,8}
    &[1, 2, 4, 5, 7], // F_8  = {2,3,5,6,8}
    &[3, 4, 5, 7],    // F_9  = {4,5,6,8}
    &[3, 4, 5, 6],    // F_10 = {4,5,6,7}
];

/// Coordinates of the eight vertices of `omega-star`.
const OMEGA_STAR_COORDS: [[i64; 4]; 8] = [
    [-2, 1, 1, 1],
    [2, 1, 1, 1],
    [0, -2, 1, 1],
    [-4, 2, -2, -1],
    [4, 2, -2, -1],
    [0, -4, -2, -1],
    [0, 0, 2, -1],
    [0, 0, -1, 1],
];

/// Supporting halfspaces `a·x <= b` of the ten facets, as `(a1..a4, b)`.
const OMEGA_STAR_HALFSPACES: [[i64; 5]; 10] = [
    [0, 4, 2, -1, 5],
    [-3, -2, 2, -1, 5],
    [3, -2, 2, -1, 5],
    [0, 0, 2, 1, 3],
    [0, 0, 0, 1, 1],
    [0, 4, -2, 5, 7],
    [-3, -2, -2, 5, 7],
    [3, -2, -2, 5, 7],
    [0, 0, -2, 1, 3],
    [0, 0, 0, -1, 1],
];

pub fn omega_star_incidence() -> VertexFacetIncidence {
    let vertex_names = (1..=8).map(|i| i.to_string()).collect();
    let facet_names = (1..=10).map(|j| format!("F_{j}")).collect();
    let facets = OMEGA_STAR_FACETS
        .iter()
        .map(|f| f.iter().copied().collect())
        .collect();
    VertexFacetIncidence::new(vertex_names, facet_names, facets).unwrap()
}

pub fn omega_star_lattice() -> FaceLattice {
    build_face_lattice(&omega_star_incidence()).unwrap()
}

/// Exact coordinates and supporting halfspaces of `omega-star`.
pub fn omega_star_geometry() -> (Vec<RationalPoint>, Vec<Halfspace>) {
    let points = OMEGA_STAR_COORDS
        .iter()
        .map(|c| c.iter().map(|&x| rat(x)).collect())
        .collect();
    let halfspaces = OMEGA_STAR_HALFSPACES
        .iter()
        .map(|h| Halfspace {
            normal: h[..4].iter().map(|&x| rat(x)).collect(),
            offset: rat(h[4]),
        })
        .collect();
    (points, halfspaces)
}

/// The combinatorial polar of `omega-star`: vertices `F_1..F_10`.
pub fn omega_incidence() -> VertexFacetIncidence {
    omega_star_incidence().transpose().unwrap()
}

pub fn omega_lattice() -> FaceLattice {
    build_face_lattice(&omega_incidence()).unwrap()
}

/// The canonical orientation of `omega`: every skeleton edge directed
/// from smaller to larger vertex index.
pub fn omega_digraph() -> PolytopalDigraph {
    linear_digraph(&omega_incidence())
}

/// Orient every skeleton edge of `inc` from smaller to larger vertex
/// index. For polytopes whose index order is induced by a linear
/// function this is the corresponding LP digraph.
pub fn linear_digraph(inc: &VertexFacetIncidence) -> PolytopalDigraph {
    let lattice = build_face_lattice(inc).unwrap();
    let edges = lattice.skeleton().unwrap();
    PolytopalDigraph::new(lattice, edges).unwrap()
}

/// Orient every skeleton edge of `inc` along the given vertex order.
pub fn order_digraph(inc: &VertexFacetIncidence, order: &[usize]) -> PolytopalDigraph {
    let lattice = build_face_lattice(inc).unwrap();
    let mut position = vec![0usize; inc.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let edges = lattice
        .skeleton()
        .unwrap()
        .into_iter()
        .map(|(u, v)| {
            if position[u] < position[v] {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    PolytopalDigraph::new(lattice, edges).unwrap()
}

/// An orientation of `omega` that is an acyclic unique sink orientation
/// with the Holt-Klee property: edges follow the vertex order
/// F_4, F_1, F_2, F_3, F_5, .., F_10, which puts one apex of each
/// bipyramid facet before its equator.
pub fn omega_uso_digraph() -> PolytopalDigraph {
    order_digraph(&omega_incidence(), &[3, 0, 1, 2, 4, 5, 6, 7, 8, 9])
}

/// The d-cube: `2^d` vertices named by sign strings, `2d` facets.
pub fn cube(d: u32) -> VertexFacetIncidence {
    assert!((1..=6).contains(&d));
    let n = 1usize << d;
    let sign = |v: usize, k: u32| if v >> k & 1 == 1 { '+' } else { '-' };
    let vertex_names = (0..n)
        .map(|v| (0..d).map(|k| sign(v, k)).collect::<String>())
        .collect();
    let mut facet_names = Vec::new();
    let mut facets = Vec::new();
    for k in 0..d {
        for positive in [true, false] {
            facet_names.push(format!("x{}{}", k + 1, if positive { '+' } else { '-' }));
            facets.push(
                (0..n)
                    .filter(|&v| (v >> k & 1 == 1) == positive)
                    .collect::<IndexSet>(),
            );
        }
    }
    VertexFacetIncidence::new(vertex_names, facet_names, facets).unwrap()
}

/// The d-cube `[-1,1]^d` as exact points and halfspaces, facet order
/// matching [`cube`].
pub fn cube_geometry(d: u32) -> (Vec<RationalPoint>, Vec<Halfspace>) {
    assert!((1..=6).contains(&d));
    let n = 1usize << d;
    let points = (0..n)
        .map(|v| {
            (0..d)
                .map(|k| if v >> k & 1 == 1 { rat(1) } else { rat(-1) })
                .collect()
        })
        .collect();
    let mut halfspaces = Vec::new();
    for k in 0..d {
        for sgn in [1i64, -1] {
            let normal = (0..d).map(|i| rat(if i == k { sgn } else { 0 })).collect();
            halfspaces.push(Halfspace {
                normal,
                offset: rat(1),
            });
        }
    }
    (points, halfspaces)
}

/// Convex polygon with `k >= 3` vertices; facets are the edges.
pub fn polygon(k: usize) -> VertexFacetIncidence {
    assert!(k >= 3);
    let vertex_names = (0..k).map(|i| format!("v{i}")).collect();
    let facet_names = (0..k).map(|i| format!("e{i}")).collect();
    let facets = (0..k)
        .map(|i| [i, (i + 1) % k].into_iter().collect())
        .collect();
    VertexFacetIncidence::new(vertex_names, facet_names, facets).unwrap()
}

/// The d-simplex: `d+1` vertices, facets omit one vertex each.
pub fn simplex(d: usize) -> VertexFacetIncidence {
    assert!((1..=10).contains(&d));
    let n = d + 1;
    let vertex_names = (0..n).map(|i| format!("v{i}")).collect();
    let facet_names = (0..n).map(|i| format!("f{i}")).collect();
    let facets = (0..n)
        .map(|skip| (0..n).filter(|&v| v != skip).collect())
        .collect();
    VertexFacetIncidence::new(vertex_names, facet_names, facets).unwrap()
}

/// An embedded dataset: incidence plus, when available, a canonical
/// orientation (edge list) and an exact geometric realization.
pub struct Dataset {
    pub name: &'static str,
    pub incidence: VertexFacetIncidence,
    pub orientation: Option<Vec<(usize, usize)>>,
    pub geometry: Option<(Vec<RationalPoint>, Vec<Halfspace>)>,
}

pub const DATASET_NAMES: [&str; 9] = [
    "omega",
    "omega-star",
    "cube-3",
    "cube-4",
    "crosspolytope-2",
    "crosspolytope-3",
    "crosspolytope-4",
    "triangle",
    "simplex-4",
];

/// Look up an embedded dataset by name.
pub fn dataset(name: &str) -> Option<Dataset> {
    let d = match name {
        "omega" => Dataset {
            name: "omega",
            incidence: omega_incidence(),
            orientation: Some(omega_digraph().edges().to_vec()),
            geometry: None,
        },
        "omega-star" => Dataset {
            name: "omega-star",
            incidence: omega_star_incidence(),
            orientation: None,
            geometry: Some(omega_star_geometry()),
        },
        "cube-3" => Dataset {
            name: "cube-3",
            incidence: cube(3),
            orientation: Some(linear_digraph(&cube(3)).edges().to_vec()),
            geometry: Some(cube_geometry(3)),
        },
        "cube-4" => Dataset {
            name: "cube-4",
            incidence: cube(4),
            orientation: Some(linear_digraph(&cube(4)).edges().to_vec()),
            geometry: Some(cube_geometry(4)),
        },
        "crosspolytope-2" => crosspolytope_dataset("crosspolytope-2", 2),
        "crosspolytope-3" => crosspolytope_dataset("crosspolytope-3", 3),
        "crosspolytope-4" => crosspolytope_dataset("crosspolytope-4", 4),
        "triangle" => Dataset {
            name: "triangle",
            incidence: polygon(3),
            orientation: Some(linear_digraph(&polygon(3)).edges().to_vec()),
            geometry: None,
        },
        "simplex-4" => Dataset {
            name: "simplex-4",
            incidence: simplex(4),
            orientation: Some(linear_digraph(&simplex(4)).edges().to_vec()),
            geometry: None,
        },
        _ => return None,
    };
    Some(d)
}

fn crosspolytope_dataset(name: &'static str, d: u32) -> Dataset {
    let incidence = crate::crosspolytope::crosspolytope(d).unwrap();
    // The orientation induced by the linear function x -> sum 2^k x_k
    // on the standard crosspolytope: pair sequence (1 2d)(2 2d-1)...
    let pairs = (1..=d).map(|k| (k, 2 * d + 1 - k)).collect();
    let seq = crate::crosspolytope::PairSequence::new(pairs).unwrap();
    let orientation = crate::crosspolytope::orientation_of(&seq).unwrap();
    Dataset {
        name,
        incidence,
        orientation: Some(orientation.edges().to_vec()),
        geometry: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_datasets_validate_on_load() {
        for name in DATASET_NAMES {
            let ds = dataset(name).unwrap();
            let lattice = build_face_lattice(&ds.incidence).unwrap();
            if let Some(edges) = ds.orientation {
                PolytopalDigraph::new(lattice, edges).unwrap();
            }
        }
        assert!(dataset("no-such-thing").is_none());
    }

    #[test]
    fn omega_counts() {
        let inc = omega_incidence();
        assert_eq!(inc.vertex_count(), 10);
        assert_eq!(inc.facet_count(), 8);
        assert_eq!(inc.vertex_name(9), "F_10");
    }

    #[test]
    fn crosspolytope_dataset_orientations_are_good() {
        // The bundled crosspolytope orientations come from a linear
        // function, so their pair sequences must be good.
        for d in 2..=4u32 {
            let ds = dataset(&format!("crosspolytope-{d}")).unwrap();
            let o =
                crate::crosspolytope::CrossOrientation::new(d, ds.orientation.unwrap()).unwrap();
            let seq = crate::crosspolytope::pair_sequence_of(&o).unwrap();
            assert!(seq.is_good(), "d={d}: {seq}");
        }
    }

    #[test]
    fn cube_counts() {
        let inc = cube(4);
        assert_eq!(inc.vertex_count(), 16);
        assert_eq!(inc.facet_count(), 8);
        for j in 0..8 {
            assert_eq!(inc.facet(j).len(), 8);
        }
    }
}
