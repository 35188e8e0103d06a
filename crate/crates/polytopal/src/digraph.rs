//! Polytopal digraphs: orientations of a polytope skeleton, and the
//! acyclicity, unique-sink-orientation and Holt-Klee deciders.

use crate::flow::FlowNetwork;
use crate::lattice::FaceLattice;
use crate::set::IndexSet;
use crate::shelling::{self, ShellingVerdict};
use crate::{Error, Result};

/// An orientation of the skeleton of a polytope, kept together with the
/// polytope's face lattice. The constructor checks that the undirected
/// support of the edge list is exactly the skeleton, each edge oriented
/// exactly once.
#[derive(Clone, Debug)]
pub struct PolytopalDigraph {
    lattice: FaceLattice,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl PolytopalDigraph {
    pub fn new(lattice: FaceLattice, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        let skeleton = lattice.skeleton()?;
        edges.sort();
        let mut support: Vec<(usize, usize)> =
            edges.iter().map(|&(t, h)| (t.min(h), t.max(h))).collect();
        support.sort();
        for w in support.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidOrientation(format!(
                    "edge {:?} oriented more than once",
                    w[0]
                )));
            }
        }
        if support != skeleton {
            for e in &support {
                if !skeleton.contains(e) {
                    return Err(Error::InvalidOrientation(format!(
                        "({},{}) is not a skeleton edge",
                        e.0, e.1
                    )));
                }
            }
            let missing = skeleton.iter().find(|e| !support.contains(e)).unwrap();
            return Err(Error::InvalidOrientation(format!(
                "skeleton edge ({},{}) is not oriented",
                missing.0, missing.1
            )));
        }
        let n = lattice.atoms().len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(t, h) in &edges {
            out_adj[t].push(h);
            in_adj[h].push(t);
        }
        Ok(PolytopalDigraph {
            lattice,
            edges,
            out_adj,
            in_adj,
        })
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// Directed edges `(tail, head)`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Is there a directed path from `from` to `to`?
    pub fn has_path(&self, from: usize, to: usize) -> bool {
        let mut seen = IndexSet::singleton(from);
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &w in &self.out_adj[u] {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Acyclicity, with one directed cycle as witness on failure.
    pub fn is_acyclic(&self) -> (bool, Option<Vec<usize>>) {
        let n = self.vertex_count();
        // 0 = white, 1 = on stack, 2 = done.
        let mut color = vec![0u8; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if *next < self.out_adj[u].len() {
                    let w = self.out_adj[u][*next];
                    *next += 1;
                    match color[w] {
                        0 => {
                            color[w] = 1;
                            parent[w] = u;
                            stack.push((w, 0));
                        }
                        1 => {
                            // Back edge u -> w closes a cycle.
                            let mut cycle = vec![w];
                            let mut x = u;
                            while x != w {
                                cycle.push(x);
                                x = parent[x];
                            }
                            cycle.reverse();
                            return (false, Some(cycle));
                        }
                        _ => {}
                    }
                } else {
                    color[u] = 2;
                    stack.pop();
                }
            }
        }
        (true, None)
    }

    /// Iterator over all topological sorts, in lexicographic order by
    /// vertex index. Errors with [`Error::CyclicInput`] on cyclic input.
    pub fn topological_sorts(&self) -> Result<TopologicalSorts<'_>> {
        if !self.is_acyclic().0 {
            return Err(Error::CyclicInput);
        }
        Ok(TopologicalSorts::new(self))
    }

    /// Number of topological sorts, or `None` if it exceeds `cap`.
    pub fn count_topological_sorts(&self, cap: usize) -> Result<Option<usize>> {
        let mut count = 0;
        for _ in self.topological_sorts()? {
            count += 1;
            if count > cap {
                return Ok(None);
            }
        }
        Ok(Some(count))
    }

    /// Sources and sinks of the subdigraph induced by a face.
    pub fn face_sources_sinks(&self, face: IndexSet) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.lattice.face_id(face).is_none() {
            return Err(Error::FaceNotFound(self.lattice.face_label(face)));
        }
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for v in face.iter() {
            if !self.in_adj[v].iter().any(|&u| face.contains(u)) {
                sources.push(v);
            }
            if !self.out_adj[v].iter().any(|&u| face.contains(u)) {
                sinks.push(v);
            }
        }
        Ok((sources, sinks))
    }

    /// Unique sink orientation: every face of dimension >= 1 induces a
    /// subdigraph with exactly one source and one sink. The witness is
    /// the first offending face in `(dim, vertex set)` order.
    pub fn is_uso(&self) -> (bool, Option<Witness>) {
        for f in self.lattice.faces() {
            if f.dim < 1 {
                continue;
            }
            let (sources, sinks) = self.face_sources_sinks(f.vertices).unwrap();
            if sources.len() != 1 || sinks.len() != 1 {
                return (
                    false,
                    Some(Witness::FaceSourceSink {
                        face: f.vertices,
                        sources,
                        sinks,
                    }),
                );
            }
        }
        (true, None)
    }

    /// Maximum number of internally-vertex-disjoint directed paths from
    /// the face's source to its sink (endpoints shared), by splitting
    /// every interior vertex into a capacity-one pair.
    pub fn disjoint_path_count(&self, face: IndexSet) -> Result<usize> {
        let (sources, sinks) = self.face_sources_sinks(face)?;
        let verts = face.to_vec();
        if verts.len() < 2 || sources.len() != 1 || sinks.len() != 1 {
            return Ok(0);
        }
        let (s, t) = (sources[0], sinks[0]);
        let pos: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // Node 2i = v_in, 2i+1 = v_out. Interior vertices carry unit
        // capacity; every skeleton edge does too, so a direct
        // source-sink edge counts as one path.
        let big = verts.len() as i64 + 1;
        let mut net = FlowNetwork::new(2 * verts.len());
        for (i, &v) in verts.iter().enumerate() {
            let cap = if v == s || v == t { big } else { 1 };
            net.add_edge(2 * i, 2 * i + 1, cap);
        }
        for &(u, w) in &self.edges {
            if face.contains(u) && face.contains(w) {
                net.add_edge(2 * pos[&u] + 1, 2 * pos[&w], 1);
            }
        }
        Ok(net.max_flow(2 * pos[&s] + 1, 2 * pos[&t]) as usize)
    }

    /// Holt-Klee: unique sink orientation plus, on every k-face with
    /// k >= 2, k vertex-disjoint directed paths from source to sink.
    /// Faces of dimension 0 and 1 hold trivially.
    pub fn holt_klee(&self) -> (bool, Option<Witness>) {
        let (uso, witness) = self.is_uso();
        if !uso {
            return (false, witness);
        }
        for f in self.lattice.faces() {
            if f.dim < 2 {
                continue;
            }
            let needed = f.dim as usize;
            let found = self.disjoint_path_count(f.vertices).unwrap();
            if found < needed {
                return (
                    false,
                    Some(Witness::DisjointPaths {
                        face: f.vertices,
                        needed,
                        found,
                    }),
                );
            }
        }
        (true, None)
    }

    /// GraphViz rendering with vertex names, edges in sorted order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!("  \"{}\";\n", self.lattice.vertex_name(v)));
        }
        for &(t, h) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.lattice.vertex_name(t),
                self.lattice.vertex_name(h)
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Enumerates every topological sort by backtracking, always trying the
/// smallest available vertex index first.
pub struct TopologicalSorts<'a> {
    g: &'a PolytopalDigraph,
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    missing: Vec<usize>,
    used: IndexSet,
    done: bool,
}

impl<'a> TopologicalSorts<'a> {
    fn new(g: &'a PolytopalDigraph) -> Self {
        let n = g.vertex_count();
        let missing = (0..n).map(|v| g.in_adj[v].len()).collect();
        TopologicalSorts {
            g,
            prefix: Vec::new(),
            cursor: vec![0; n + 1],
            missing,
            used: IndexSet::EMPTY,
            done: n == 0,
        }
    }

    fn place(&mut self, v: usize) {
        self.prefix.push(v);
        self.used.insert(v);
        for &w in &self.g.out_adj[v] {
            self.missing[w] -= 1;
        }
        self.cursor[self.prefix.len()] = 0;
    }

    fn unplace(&mut self) -> usize {
        let v = self.prefix.pop().unwrap();
        self.used.remove(v);
        for &w in &self.g.out_adj[v] {
            self.missing[w] += 1;
        }
        self.cursor[self.prefix.len()] = v + 1;
        v
    }
}

impl Iterator for TopologicalSorts<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let n = self.g.vertex_count();
        loop {
            if self.prefix.len() == n {
                let result = self.prefix.clone();
                self.unplace();
                return Some(result);
            }
            let start = self.cursor[self.prefix.len()];
            let next = (start..n).find(|&v| !self.used.contains(v) && self.missing[v] == 0);
            match next {
                Some(v) => self.place(v),
                None => {
                    if self.prefix.is_empty() {
                        self.done = true;
                        return None;
                    }
                    self.unplace();
                }
            }
        }
    }
}

/// Failure evidence attached to a [`PropertyReport`].
#[derive(Clone, Debug)]
pub enum Witness {
    /// A directed cycle.
    Cycle(Vec<usize>),
    /// A face with the wrong number of sources or sinks.
    FaceSourceSink {
        face: IndexSet,
        sources: Vec<usize>,
        sinks: Vec<usize>,
    },
    /// A k-face with fewer than k disjoint source-sink paths.
    DisjointPaths {
        face: IndexSet,
        needed: usize,
        found: usize,
    },
    /// The canonical topological sort and where its shelling fails.
    Shelling {
        order: Vec<usize>,
        verdict: ShellingVerdict,
    },
}

/// The four-property classification of a polytopal digraph.
///
/// `holt_klee` implies `uso` by definition. `x_type` records digraphs
/// that pass the first three checks but fail the shelling check.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub acyclic: bool,
    pub uso: bool,
    pub holt_klee: bool,
    pub shelling: bool,
    pub x_type: bool,
    pub witness: Option<Witness>,
}

/// Run all four property checks. The witness belongs to the first
/// failing property in the order acyclic, USO, Holt-Klee, shelling.
pub fn classify(g: &PolytopalDigraph) -> PropertyReport {
    let (acyclic, cycle) = g.is_acyclic();
    let (uso, uso_witness) = g.is_uso();
    let (holt_klee, hk_witness) = if uso { g.holt_klee() } else { (false, None) };
    let shelling = shelling::shelling_property_exists(g);
    let witness = if !acyclic {
        cycle.map(Witness::Cycle)
    } else if !uso {
        uso_witness
    } else if !holt_klee {
        hk_witness
    } else if !shelling {
        let order = g.topological_sorts().unwrap().next().unwrap();
        let polar = g.lattice().polar().unwrap();
        let verdict = shelling::is_shelling(&polar, &order);
        Some(Witness::Shelling { order, verdict })
    } else {
        None
    };
    PropertyReport {
        acyclic,
        uso,
        holt_klee,
        shelling,
        x_type: acyclic && uso && holt_klee && !shelling,
        witness,
    }
}
