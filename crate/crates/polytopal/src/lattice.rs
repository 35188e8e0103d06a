//! Face lattices built from vertex-facet incidence by intersection closure.
//!
//! A face is identified with its vertex set. The faces of a polytope
//! are exactly the intersections of subsets of facets, together with
//! the empty face (bottom) and the whole polytope (top), ordered by
//! inclusion. Construction computes that closure system, ranks it by
//! longest chains, and rejects anything that is not a graded lattice
//! whose atoms are the vertices and whose coatoms are the facets.

use std::collections::HashMap;

use crate::incidence::VertexFacetIncidence;
use crate::set::IndexSet;
use crate::{Error, Result};

/// One face of the lattice: a closed vertex set with its dimension and
/// the set of facets containing it. The bottom face is the empty set at
/// dimension -1; vertices have dimension 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: IndexSet,
    pub dim: i32,
    pub containing_facets: IndexSet,
}

/// Graded face lattice of a polytope.
///
/// Faces are stored sorted by `(dim, vertex set)`, so all iteration is
/// deterministic. Vertex indices always refer to the ambient vertex
/// list, which makes the lattice of a face (see [`FaceLattice::faces_of`])
/// directly comparable with its parent.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    vertex_names: Vec<String>,
    facet_names: Vec<String>,
    dimension: i32,
    faces: Vec<Face>,
    by_mask: HashMap<u64, usize>,
    atoms: Vec<usize>,
    coatoms: Vec<usize>,
}

/// Undirected skeleton: one entry `(u, v)` with `u < v` per 1-face.
pub type Skeleton = Vec<(usize, usize)>;

/// Build the face lattice of `inc` by iterated pairwise intersection of
/// facets. Fails with [`Error::NotALattice`] when the closure system is
/// not graded or its atoms/coatoms are not the vertices/facets, which
/// means the input was not the incidence data of a polytope.
pub fn build_face_lattice(inc: &VertexFacetIncidence) -> Result<FaceLattice> {
    let n = inc.vertex_count();
    let top = IndexSet::full(n);

    // Closure under intersection, seeded with the facets, top and bottom.
    let mut masks: Vec<u64> = Vec::new();
    let mut seen: HashMap<u64, ()> = HashMap::new();
    let push = |masks: &mut Vec<u64>, seen: &mut HashMap<u64, ()>, m: u64| {
        if seen.insert(m, ()).is_none() {
            masks.push(m);
        }
    };
    push(&mut masks, &mut seen, top.mask());
    push(&mut masks, &mut seen, 0);
    for f in inc.facets() {
        push(&mut masks, &mut seen, f.mask());
    }
    let mut head = 0;
    while head < masks.len() {
        let s = masks[head];
        head += 1;
        for f in inc.facets() {
            push(&mut masks, &mut seen, s & f.mask());
        }
    }

    // Rank by longest chain from the bottom; process by popcount so all
    // proper subsets are ranked first.
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let index_of: HashMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut rank = vec![0usize; masks.len()];
    let mut strict_subsets: Vec<Vec<usize>> = vec![Vec::new(); masks.len()];
    for (i, &m) in masks.iter().enumerate() {
        for (j, &t) in masks.iter().enumerate().take(i) {
            if t != m && t & m == t {
                strict_subsets[i].push(j);
                rank[i] = rank[i].max(rank[j] + 1);
            }
        }
    }

    // Graded: every covering pair must differ in rank by exactly one.
    for i in 0..masks.len() {
        for &j in &strict_subsets[i] {
            let is_cover = !strict_subsets[i]
                .iter()
                .any(|&k| k != j && strict_subsets[k].contains(&j));
            if is_cover && rank[i] != rank[j] + 1 {
                return Err(Error::NotALattice(format!(
                    "face {:?} covers {:?} but their ranks differ by {}",
                    IndexSet::from_mask(masks[i]),
                    IndexSet::from_mask(masks[j]),
                    rank[i] - rank[j]
                )));
            }
        }
    }

    let top_rank = rank[index_of[&top.mask()]];
    let dimension = top_rank as i32 - 1;

    // Atoms must be exactly the vertices.
    for v in 0..n {
        match index_of.get(&IndexSet::singleton(v).mask()) {
            Some(&i) if rank[i] == 1 => {}
            _ => {
                return Err(Error::NotALattice(format!(
                    "vertex {} ({}) is not an atom of the closure system",
                    v,
                    inc.vertex_name(v)
                )));
            }
        }
    }
    let atom_count = rank.iter().filter(|&&r| r == 1).count();
    if atom_count != n {
        return Err(Error::NotALattice(format!(
            "{atom_count} atoms for {n} vertices"
        )));
    }

    // Coatoms must be exactly the facets.
    let coatom_count = rank.iter().filter(|&&r| r + 1 == top_rank).count();
    if coatom_count != inc.facet_count() {
        return Err(Error::NotALattice(format!(
            "{} coatoms for {} facets",
            coatom_count,
            inc.facet_count()
        )));
    }
    for (j, f) in inc.facets().iter().enumerate() {
        let i = index_of[&f.mask()];
        if rank[i] + 1 != top_rank {
            return Err(Error::NotALattice(format!(
                "facet {} ({}) is not a coatom",
                j,
                inc.facet_name(j)
            )));
        }
    }

    let mut faces: Vec<Face> = masks
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let vertices = IndexSet::from_mask(m);
            let containing_facets = (0..inc.facet_count())
                .filter(|&j| vertices.is_subset(inc.facet(j)))
                .collect();
            Face {
                vertices,
                dim: rank[i] as i32 - 1,
                containing_facets,
            }
        })
        .collect();
    faces.sort_by_key(|f| (f.dim, f.vertices));

    Ok(FaceLattice::assemble(
        inc.vertex_names().to_vec(),
        inc.facet_names().to_vec(),
        dimension,
        faces,
        inc.facets(),
    ))
}

impl FaceLattice {
    fn assemble(
        vertex_names: Vec<String>,
        facet_names: Vec<String>,
        dimension: i32,
        faces: Vec<Face>,
        coatom_sets: &[IndexSet],
    ) -> FaceLattice {
        let by_mask: HashMap<u64, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertices.mask(), i))
            .collect();
        let atoms = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dim == 0)
            .map(|(i, _)| i)
            .collect();
        let coatoms = coatom_sets.iter().map(|s| by_mask[&s.mask()]).collect();
        FaceLattice {
            vertex_names,
            facet_names,
            dimension,
            faces,
            by_mask,
            atoms,
            coatoms,
        }
    }

    pub fn dimension(&self) -> i32 {
        self.dimension
    }

    /// All faces, sorted by `(dim, vertex set)`, bottom first, top last.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn face_id(&self, vertices: IndexSet) -> Option<usize> {
        self.by_mask.get(&vertices.mask()).copied()
    }

    pub fn dim_of(&self, vertices: IndexSet) -> Option<i32> {
        self.face_id(vertices).map(|i| self.faces[i].dim)
    }

    /// Faces of one dimension, in vertex-set order.
    pub fn faces_of_dim(&self, dim: i32) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    /// Face ids of the vertices, ascending by vertex index.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    /// Face ids of the facets, in facet-name order.
    pub fn coatoms(&self) -> &[usize] {
        &self.coatoms
    }

    pub fn facet_count(&self) -> usize {
        self.coatoms.len()
    }

    pub fn facet_set(&self, j: usize) -> IndexSet {
        self.faces[self.coatoms[j]].vertices
    }

    pub fn facet_name(&self, j: usize) -> &str {
        &self.facet_names[j]
    }

    pub fn facet_names(&self) -> &[String] {
        &self.facet_names
    }

    pub fn facet_index(&self, name: &str) -> Option<usize> {
        self.facet_names.iter().position(|s| s == name)
    }

    /// Ambient vertex names. For sub-lattices this is the parent list.
    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|s| s == name)
    }

    /// Vertex set of the top face.
    pub fn top(&self) -> IndexSet {
        self.faces.last().unwrap().vertices
    }

    /// Render a face as `{name,name,..}`.
    pub fn face_label(&self, vertices: IndexSet) -> String {
        let names: Vec<&str> = vertices.iter().map(|v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Rebuild the incidence data (coatoms as facets). For sub-lattices
    /// the vertex list is restricted to the atoms actually present.
    pub fn to_incidence(&self) -> Result<VertexFacetIncidence> {
        let vertices: Vec<usize> = self
            .atoms
            .iter()
            .map(|&a| self.faces[a].vertices.iter().next().unwrap())
            .collect();
        let reindex: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let facets = self
            .coatoms
            .iter()
            .map(|&c| self.faces[c].vertices.iter().map(|v| reindex[&v]).collect())
            .collect();
        VertexFacetIncidence::new(
            vertices
                .iter()
                .map(|&v| self.vertex_names[v].clone())
                .collect(),
            self.facet_names.clone(),
            facets,
        )
    }

    /// The combinatorially polar lattice: order reversed, vertices and
    /// facets swapped. Atoms of the result inherit this lattice's facet
    /// names. Applying `polar` twice rebuilds the original lattice.
    pub fn polar(&self) -> Result<FaceLattice> {
        build_face_lattice(&self.to_incidence()?.transpose()?)
    }

    /// Undirected skeleton graph on the vertices.
    pub fn skeleton(&self) -> Result<Skeleton> {
        let mut edges = Vec::new();
        for f in self.faces_of_dim(1) {
            let vs = f.vertices.to_vec();
            if vs.len() != 2 {
                return Err(Error::MalformedLattice(format!(
                    "1-face {} has {} vertices",
                    self.face_label(f.vertices),
                    vs.len()
                )));
            }
            edges.push((vs[0], vs[1]));
        }
        edges.sort();
        Ok(edges)
    }

    /// The interval from the bottom to `vertices` as a lattice of its
    /// own: the face lattice of that face. Vertex indices stay ambient.
    pub fn faces_of(&self, vertices: IndexSet) -> Result<FaceLattice> {
        let Some(id) = self.face_id(vertices) else {
            return Err(Error::FaceNotFound(self.face_label(vertices)));
        };
        let target = self.faces[id].clone();
        let faces: Vec<Face> = self
            .faces
            .iter()
            .filter(|f| f.vertices.is_subset(target.vertices))
            .cloned()
            .collect();
        let coatom_sets: Vec<IndexSet> = faces
            .iter()
            .filter(|f| f.dim == target.dim - 1)
            .map(|f| f.vertices)
            .collect();
        let facet_names = coatom_sets.iter().map(|s| self.face_label(*s)).collect();
        Ok(FaceLattice::assemble(
            self.vertex_names.clone(),
            facet_names,
            target.dim,
            faces,
            &coatom_sets,
        ))
    }

    /// Structural equality: same dimension and identical face list.
    pub fn same_structure(&self, other: &FaceLattice) -> bool {
        self.dimension == other.dimension && self.faces == other.faces
    }
}
