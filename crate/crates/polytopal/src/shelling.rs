//! Shelling verification and the shelling property of polytopal digraphs.
//!
//! A linear order of the facets of a polytope is a shelling when either
//! the facets are points, or each facet past the first meets the union
//! of its predecessors in a nonempty, pure codimension-one complex that
//! is a beginning segment of some shelling of that facet. The check is
//! recursive over facet boundaries; all searches are memoized on vertex
//! sets, which is sound because the step condition at position `j` only
//! depends on the *set* of facets placed before `j`, never their order.
//!
//! A polytopal digraph has the *shelling property* when some topological
//! sort of it, read as a facet order of the combinatorially polar
//! polytope, is a shelling. For acyclic unique sink orientations this is
//! equivalent to every topological sort being one; both directions are
//! implemented ([`shelling_property_exists`] searches with pruning,
//! [`shelling_property_all_audit`] checks every sort).

use std::collections::HashMap;
use std::rc::Rc;

use crate::digraph::PolytopalDigraph;
use crate::lattice::FaceLattice;
use crate::set::IndexSet;
use crate::{Error, Result};

/// Why a facet order failed to be a shelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailReason {
    /// The facet misses the union of its predecessors entirely.
    EmptyIntersection,
    /// Some maximal intersection face has dimension below `d - 2`.
    NotPureCodimOne,
    /// The intersection is no beginning segment of any shelling of the facet.
    NotBeginningSegment,
}

/// Outcome of a shelling check. `failing_index` is the 1-based position
/// of the first facet at which the order fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingVerdict {
    pub is_shelling: bool,
    pub failing_index: Option<usize>,
    pub failing_reason: Option<FailReason>,
}

impl ShellingVerdict {
    fn ok() -> Self {
        ShellingVerdict {
            is_shelling: true,
            failing_index: None,
            failing_reason: None,
        }
    }

    fn fail(index: usize, reason: FailReason) -> Self {
        ShellingVerdict {
            is_shelling: false,
            failing_index: Some(index),
            failing_reason: Some(reason),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Ok,
    Empty,
    NotPure,
    NotBegin,
}

/// Inclusion-maximal nonempty faces among `{g ∩ h : h ∈ others}`,
/// sorted by vertex set.
fn maximal_intersections(g: IndexSet, others: impl Iterator<Item = IndexSet>) -> Vec<IndexSet> {
    let mut sets: Vec<IndexSet> = others
        .map(|h| g.inter(h))
        .filter(|s| !s.is_empty())
        .collect();
    sets.sort();
    sets.dedup();
    sets.iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| s.is_strict_subset(*t)))
        .collect()
}

/// Memoized shelling engine over one face lattice. All memo tables are
/// keyed by ambient vertex sets, so one context serves the whole
/// recursion through facet boundaries, and can be reused across many
/// facet orders of the same lattice.
struct ShellingCtx<'a> {
    lat: &'a FaceLattice,
    coatoms: HashMap<u64, Rc<Vec<IndexSet>>>,
    prefix_memo: HashMap<(u64, u64), bool>,
    extend_memo: HashMap<(u64, u64), bool>,
    step_memo: HashMap<(u64, usize, u64), Step>,
}

impl<'a> ShellingCtx<'a> {
    fn new(lat: &'a FaceLattice) -> Self {
        ShellingCtx {
            lat,
            coatoms: HashMap::new(),
            prefix_memo: HashMap::new(),
            extend_memo: HashMap::new(),
            step_memo: HashMap::new(),
        }
    }

    /// Facets of the boundary of `face`, in vertex-set order.
    fn coatoms_of(&mut self, face: IndexSet) -> Rc<Vec<IndexSet>> {
        if let Some(c) = self.coatoms.get(&face.mask()) {
            return Rc::clone(c);
        }
        let dim = self.lat.dim_of(face).expect("face must be in the lattice");
        let sets: Vec<IndexSet> = self
            .lat
            .faces()
            .iter()
            .filter(|f| f.dim == dim - 1 && f.vertices.is_subset(face))
            .map(|f| f.vertices)
            .collect();
        let rc = Rc::new(sets);
        self.coatoms.insert(face.mask(), Rc::clone(&rc));
        rc
    }

    /// Shelling condition for appending boundary facet `g_idx` of `face`
    /// after the facets in `t_mask` (indices into `coatoms_of(face)`).
    fn step(&mut self, face: IndexSet, g_idx: usize, t_mask: u64) -> Step {
        if t_mask == 0 {
            return Step::Ok;
        }
        let face_dim = self.lat.dim_of(face).unwrap();
        if face_dim <= 1 {
            // Facets are points; any order is a shelling.
            return Step::Ok;
        }
        let key = (face.mask(), g_idx, t_mask);
        if let Some(&s) = self.step_memo.get(&key) {
            return s;
        }
        let coatoms = self.coatoms_of(face);
        let g = coatoms[g_idx];
        let ridges = maximal_intersections(
            g,
            (0..coatoms.len())
                .filter(|h| t_mask >> h & 1 == 1)
                .map(|h| coatoms[h]),
        );
        let result = if ridges.is_empty() {
            Step::Empty
        } else if ridges
            .iter()
            .any(|r| self.lat.dim_of(*r) != Some(face_dim - 2))
        {
            Step::NotPure
        } else if self.begins(g, &ridges) {
            Step::Ok
        } else {
            Step::NotBegin
        };
        self.step_memo.insert(key, result);
        result
    }

    /// Does some shelling of `facet` begin with exactly `ridges`?
    fn begins(&mut self, facet: IndexSet, ridges: &[IndexSet]) -> bool {
        if self.lat.dim_of(facet).unwrap() <= 1 {
            return true;
        }
        let coatoms = self.coatoms_of(facet);
        let mut mask = 0u64;
        for r in ridges {
            let pos = coatoms
                .binary_search(r)
                .expect("ridge must be a boundary facet of the face");
            mask |= 1u64 << pos;
        }
        self.prefix_ok(facet, mask) && self.extend_ok(facet, mask)
    }

    /// Can the facets in `t_mask` be ordered into a valid shelling prefix?
    fn prefix_ok(&mut self, face: IndexSet, t_mask: u64) -> bool {
        if t_mask == 0 {
            return true;
        }
        let key = (face.mask(), t_mask);
        if let Some(&b) = self.prefix_memo.get(&key) {
            return b;
        }
        let len = self.coatoms_of(face).len();
        let mut ok = false;
        for g_idx in 0..len {
            let bit = 1u64 << g_idx;
            if t_mask & bit != 0
                && self.step(face, g_idx, t_mask & !bit) == Step::Ok
                && self.prefix_ok(face, t_mask & !bit)
            {
                ok = true;
                break;
            }
        }
        self.prefix_memo.insert(key, ok);
        ok
    }

    /// Can a valid prefix covering exactly `t_mask` be extended facet by
    /// facet to the complete boundary?
    fn extend_ok(&mut self, face: IndexSet, t_mask: u64) -> bool {
        let len = self.coatoms_of(face).len();
        let full = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        if t_mask == full {
            return true;
        }
        let key = (face.mask(), t_mask);
        if let Some(&b) = self.extend_memo.get(&key) {
            return b;
        }
        let mut ok = false;
        for g_idx in 0..len {
            let bit = 1u64 << g_idx;
            if t_mask & bit == 0
                && self.step(face, g_idx, t_mask) == Step::Ok
                && self.extend_ok(face, t_mask | bit)
            {
                ok = true;
                break;
            }
        }
        self.extend_memo.insert(key, ok);
        ok
    }
}

/// The inclusion-maximal faces of the intersection of the facet at
/// 1-based position `j` of `order` with the union of its predecessors,
/// each with its dimension. Position 1 yields the empty list.
pub fn boundary_intersection(lat: &FaceLattice, order: &[usize], j: usize) -> Vec<(IndexSet, i32)> {
    assert!(j >= 1 && j <= order.len(), "position out of range");
    let g = lat.facet_set(order[j - 1]);
    maximal_intersections(g, order[..j - 1].iter().map(|&i| lat.facet_set(i)))
        .into_iter()
        .map(|s| (s, lat.dim_of(s).expect("intersection of faces is a face")))
        .collect()
}

/// Does some shelling of the polytope described by `facet_lattice`
/// start with exactly the faces in `ridges` (in some order)?
///
/// `ridges` must be facets of `facet_lattice`. Decided by memoized
/// backtracking over ridge orderings and their extensions.
pub fn is_beginning_segment(facet_lattice: &FaceLattice, ridges: &[IndexSet]) -> bool {
    if facet_lattice.dimension() <= 1 {
        return true;
    }
    let mut ctx = ShellingCtx::new(facet_lattice);
    ctx.begins(facet_lattice.top(), ridges)
}

/// Check one facet order against the shelling conditions.
pub fn is_shelling(lat: &FaceLattice, order: &[usize]) -> ShellingVerdict {
    let mut ctx = ShellingCtx::new(lat);
    is_shelling_with(&mut ctx, order)
}

fn is_shelling_with(ctx: &mut ShellingCtx<'_>, order: &[usize]) -> ShellingVerdict {
    let lat = ctx.lat;
    let m = lat.facet_count();
    {
        let mut seen = IndexSet::EMPTY;
        assert_eq!(order.len(), m, "order must list every facet exactly once");
        for &j in order {
            assert!(j < m && !seen.contains(j), "order must be a permutation");
            seen.insert(j);
        }
    }
    if lat.dimension() <= 1 {
        return ShellingVerdict::ok();
    }
    let top = lat.top();
    let coatoms = ctx.coatoms_of(top);
    let posn: Vec<usize> = (0..m)
        .map(|j| coatoms.binary_search(&lat.facet_set(j)).unwrap())
        .collect();
    let mut t_mask = 0u64;
    for (idx, &j) in order.iter().enumerate() {
        if idx > 0 {
            match ctx.step(top, posn[j], t_mask) {
                Step::Ok => {}
                Step::Empty => {
                    return ShellingVerdict::fail(idx + 1, FailReason::EmptyIntersection)
                }
                Step::NotPure => {
                    return ShellingVerdict::fail(idx + 1, FailReason::NotPureCodimOne)
                }
                Step::NotBegin => {
                    return ShellingVerdict::fail(idx + 1, FailReason::NotBeginningSegment)
                }
            }
        }
        t_mask |= 1u64 << posn[j];
    }
    ShellingVerdict::ok()
}

/// Does some topological sort of `g` order the facets of the polar
/// polytope into a shelling?
///
/// The search walks topological sorts incrementally, checking the
/// shelling condition as each facet is placed; both the availability of
/// a vertex and the shelling condition depend only on the set already
/// placed, so failed prefix sets are memoized and never revisited.
pub fn shelling_property_exists(g: &PolytopalDigraph) -> bool {
    if !g.is_acyclic().0 {
        return false;
    }
    let polar = g.lattice().polar().expect("validated lattice has a polar");
    if polar.dimension() <= 1 {
        return true;
    }
    let n = g.vertex_count();
    let mut ctx = ShellingCtx::new(&polar);
    let top = polar.top();
    let coatoms = ctx.coatoms_of(top);
    // Polar facet v corresponds to vertex v of g.
    let posn: Vec<usize> = (0..n)
        .map(|v| coatoms.binary_search(&polar.facet_set(v)).unwrap())
        .collect();
    let mut search = SortSearch {
        g,
        ctx,
        top,
        posn,
        full: IndexSet::full(n),
        dead: std::collections::HashSet::new(),
    };
    search.dfs(IndexSet::EMPTY, 0)
}

/// Backtracking over topological-sort prefixes: a vertex may be placed
/// when all its in-neighbors are placed and the corresponding polar
/// facet passes the shelling step. Prefix sets that cannot be
/// completed are remembered and never re-entered.
struct SortSearch<'a> {
    g: &'a PolytopalDigraph,
    ctx: ShellingCtx<'a>,
    top: IndexSet,
    posn: Vec<usize>,
    full: IndexSet,
    dead: std::collections::HashSet<u64>,
}

impl SortSearch<'_> {
    fn dfs(&mut self, placed: IndexSet, t_mask: u64) -> bool {
        if placed == self.full {
            return true;
        }
        if self.dead.contains(&placed.mask()) {
            return false;
        }
        for v in self.full.minus(placed).iter() {
            if self.g.in_neighbors(v).iter().any(|&u| !placed.contains(u)) {
                continue;
            }
            if !placed.is_empty() && self.ctx.step(self.top, self.posn[v], t_mask) != Step::Ok {
                continue;
            }
            let mut next = placed;
            next.insert(v);
            if self.dfs(next, t_mask | (1u64 << self.posn[v])) {
                return true;
            }
        }
        self.dead.insert(placed.mask());
        false
    }
}

/// Does every topological sort of `g` shell the polar polytope?
///
/// For acyclic unique sink orientations one sort decides all of them,
/// so this checks the lexicographically first topological sort. Use
/// [`shelling_property_all_audit`] to verify every sort explicitly.
pub fn shelling_property_all(g: &PolytopalDigraph) -> bool {
    let Ok(mut sorts) = g.topological_sorts() else {
        return false;
    };
    let Some(order) = sorts.next() else {
        return false;
    };
    let polar = g.lattice().polar().expect("validated lattice has a polar");
    if polar.dimension() <= 1 {
        return true;
    }
    is_shelling(&polar, &order).is_shelling
}

/// Result of an exhaustive audit over all topological sorts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub holds_for_all: bool,
    pub sorts_checked: usize,
}

/// Check the polar facet order of *every* topological sort of `g`,
/// erroring with [`Error::LimitExceeded`] when there are more than
/// `cap` sorts. Cyclic input reports `false` over zero sorts.
pub fn shelling_property_all_audit(g: &PolytopalDigraph, cap: usize) -> Result<AuditReport> {
    if !g.is_acyclic().0 {
        return Ok(AuditReport {
            holds_for_all: false,
            sorts_checked: 0,
        });
    }
    if g.count_topological_sorts(cap)?.is_none() {
        return Err(Error::LimitExceeded(format!(
            "more than {cap} topological sorts"
        )));
    }
    let polar = g.lattice().polar()?;
    let mut ctx = ShellingCtx::new(&polar);
    let mut checked = 0;
    let mut all = true;
    for order in g.topological_sorts()? {
        checked += 1;
        if polar.dimension() > 1 && !is_shelling_with(&mut ctx, &order).is_shelling {
            all = false;
        }
    }
    Ok(AuditReport {
        holds_for_all: all,
        sorts_checked: checked,
    })
}

/// For an acyclic unique sink orientation, verify along a topological
/// sort `v_1..v_n` that at every position `k` the boundary complex
/// `F(v_k) ∩ (F(v_1) ∪ .. ∪ F(v_{k-1}))` equals the union of
/// `F(v_k) ∩ F(v_j)` over the in-neighbors `v_j` of `v_k`, comparing
/// maximal faces on both sides.
pub fn boundary_formula_check(g: &PolytopalDigraph) -> Result<bool> {
    if !g.is_acyclic().0 || !g.is_uso().0 {
        return Err(Error::NotAcyclicUso);
    }
    let polar = g.lattice().polar()?;
    let order = g
        .topological_sorts()?
        .next()
        .ok_or_else(|| Error::Internal("acyclic digraph without topological sort".into()))?;
    for k in 0..order.len() {
        let vk = order[k];
        let fk = polar.facet_set(vk);
        let lhs = maximal_intersections(fk, order[..k].iter().map(|&v| polar.facet_set(v)));
        let rhs = maximal_intersections(fk, g.in_neighbors(vk).iter().map(|&v| polar.facet_set(v)));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets;
    use crate::lattice::build_face_lattice;

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn omega_star_canonical_order_fails_at_three() {
        let lat = datasets::omega_star_lattice();
        let order: Vec<usize> = (0..10).collect();
        let verdict = is_shelling(&lat, &order);
        assert!(!verdict.is_shelling);
        assert_eq!(verdict.failing_index, Some(3));
        assert_eq!(
            verdict.failing_reason,
            Some(FailReason::NotBeginningSegment)
        );
    }

    #[test]
    fn omega_star_boundary_intersections() {
        let lat = datasets::omega_star_lattice();
        let order: Vec<usize> = (0..10).collect();
        // Position 1: empty.
        assert!(boundary_intersection(&lat, &order, 1).is_empty());
        // Position 2: F_2 ∩ F_1 = {1,4,7}, a 2-face.
        let b2 = boundary_intersection(&lat, &order, 2);
        assert_eq!(b2, vec![(set(&[0, 3, 6]), 2)]);
        // Position 3: the 2-faces {2,5,7} and {3,6,7}.
        let b3 = boundary_intersection(&lat, &order, 3);
        assert_eq!(b3, vec![(set(&[1, 4, 6]), 2), (set(&[2, 5, 6]), 2)]);
    }

    #[test]
    fn failure_is_stable_under_swapping_first_two_facets() {
        let lat = datasets::omega_star_lattice();
        let order: Vec<usize> = vec![1, 0, 2, 3, 4, 5, 6, 7, 8, 9];
        let verdict = is_shelling(&lat, &order);
        assert_eq!(verdict.failing_index, Some(3));
        assert_eq!(
            verdict.failing_reason,
            Some(FailReason::NotBeginningSegment)
        );
        assert_eq!(
            boundary_intersection(&lat, &order, 3),
            vec![(set(&[1, 4, 6]), 2), (set(&[2, 5, 6]), 2)]
        );
    }

    #[test]
    fn polygon_boundary_walk_is_a_shelling() {
        let lat = build_face_lattice(&datasets::polygon(6)).unwrap();
        let order: Vec<usize> = (0..6).collect();
        assert!(is_shelling(&lat, &order).is_shelling);
    }

    #[test]
    fn disconnected_polygon_prefix_fails_empty() {
        let lat = build_face_lattice(&datasets::polygon(6)).unwrap();
        // e0 and e2 share no vertex.
        let order = vec![0, 2, 1, 3, 4, 5];
        let verdict = is_shelling(&lat, &order);
        assert_eq!(verdict.failing_index, Some(2));
        assert_eq!(verdict.failing_reason, Some(FailReason::EmptyIntersection));
    }

    #[test]
    fn segment_any_order_is_a_shelling() {
        let lat = build_face_lattice(&datasets::simplex(1)).unwrap();
        assert_eq!(lat.dimension(), 1);
        assert!(is_shelling(&lat, &[1, 0]).is_shelling);
    }

    fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            visit(&perm);
            let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn matches_simplicial_oracle_on_all_octahedron_orders() {
        // For a simplicial polytope every ordering of a simplex boundary
        // is a shelling, so the beginning-segment condition collapses:
        // an order shells iff at every step the maximal intersection
        // faces are nonempty and all of dimension d-2. That independent
        // oracle must agree with the recursive checker on every one of
        // the 8! facet orders of the octahedron.
        let lat = build_face_lattice(&crate::crosspolytope::crosspolytope(3).unwrap()).unwrap();
        let facets: Vec<IndexSet> = (0..8).map(|j| lat.facet_set(j)).collect();
        let mut ctx = ShellingCtx::new(&lat);
        let mut agree = 0u32;
        let mut shellings = 0u32;
        for_each_permutation(8, |order| {
            let mut oracle = true;
            for j in 1..8 {
                let faces =
                    maximal_intersections(facets[order[j]], order[..j].iter().map(|&i| facets[i]));
                // Ridges of a simplicial 3-polytope are edges.
                if faces.is_empty() || faces.iter().any(|f| f.len() != 2) {
                    oracle = false;
                    break;
                }
            }
            let checked = is_shelling_with(&mut ctx, order).is_shelling;
            assert_eq!(checked, oracle, "order {order:?}");
            agree += 1;
            shellings += u32::from(checked);
        });
        assert_eq!(agree, 40_320);
        // Sanity: shellings exist and non-shellings exist.
        assert!(shellings > 0 && shellings < 40_320);
    }

    #[test]
    fn matches_path_oracle_on_all_cube_orders() {
        // For a 3-polytope, a beginning segment of a shelling of a
        // polygon boundary is exactly a connected edge set, so an order
        // of the 6 squares of the cube shells iff every step's maximal
        // intersections are edges forming a connected subgraph of the
        // new facet's boundary cycle. Independent of the recursion.
        let lat = build_face_lattice(&datasets::cube(3)).unwrap();
        let facets: Vec<IndexSet> = (0..6).map(|j| lat.facet_set(j)).collect();
        let mut ctx = ShellingCtx::new(&lat);
        let mut shellings = 0u32;
        for_each_permutation(6, |order| {
            let mut oracle = true;
            for j in 1..6 {
                let faces =
                    maximal_intersections(facets[order[j]], order[..j].iter().map(|&i| facets[i]));
                if faces.is_empty() || faces.iter().any(|f| f.len() != 2) {
                    oracle = false;
                    break;
                }
                // Connectivity of the edge set: walk from the first edge.
                let mut reached = faces[0];
                loop {
                    let before = reached;
                    for f in &faces {
                        if !f.inter(reached).is_empty() {
                            reached = reached.union(*f);
                        }
                    }
                    if reached == before {
                        break;
                    }
                }
                if faces.iter().any(|f| !f.is_subset(reached)) {
                    oracle = false;
                    break;
                }
            }
            let checked = is_shelling_with(&mut ctx, order).is_shelling;
            assert_eq!(checked, oracle, "order {order:?}");
            shellings += u32::from(checked);
        });
        assert!(shellings > 0 && shellings < 720);
    }

    #[test]
    fn omega_star_f3_ridges_are_no_beginning_segment() {
        let lat = datasets::omega_star_lattice();
        let f3 = lat.facet_set(2);
        let sub = lat.faces_of(f3).unwrap();
        // {2,5,7} and {3,6,7} meet in the single vertex 7.
        assert!(!is_beginning_segment(
            &sub,
            &[set(&[1, 4, 6]), set(&[2, 5, 6])]
        ));
        // A single ridge starts a shelling of any facet.
        assert!(is_beginning_segment(&sub, &[set(&[1, 4, 6])]));
    }

    #[test]
    fn adjacent_cube_squares_begin_a_shelling() {
        let lat = build_face_lattice(&datasets::cube(3)).unwrap();
        let a = lat.facet_set(0); // x1+
        let b = lat.facet_set(2); // x2+
        assert_eq!(a.inter(b).len(), 2);
        assert!(is_beginning_segment(&lat, &[a, b]));
    }

    #[test]
    fn beginning_segment_matches_exhaustive_search_on_cube() {
        // Oracle: S begins a shelling iff some permutation of S followed
        // by some permutation of the rest passes the order checker.
        let lat = build_face_lattice(&datasets::cube(3)).unwrap();
        let m = lat.facet_count();
        fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
            if items.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                let mut rest = items.to_vec();
                rest.remove(i);
                for mut p in permutations(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        for mask in 1u64..(1 << m) {
            let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let rest: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 0).collect();
            let mut oracle = false;
            'outer: for head in permutations(&chosen) {
                for tail in permutations(&rest) {
                    let order: Vec<usize> = head.iter().chain(tail.iter()).copied().collect();
                    if is_shelling(&lat, &order).is_shelling {
                        oracle = true;
                        break 'outer;
                    }
                }
            }
            let ridges: Vec<IndexSet> = chosen.iter().map(|&j| lat.facet_set(j)).collect();
            assert_eq!(
                is_beginning_segment(&lat, &ridges),
                oracle,
                "disagreement on subset {chosen:?}"
            );
        }
    }

    #[test]
    fn complete_boundary_is_a_beginning_segment_everywhere() {
        for inc in [
            datasets::omega_star_incidence(),
            datasets::omega_incidence(),
            datasets::cube(3),
            datasets::cube(4),
            crate::crosspolytope::crosspolytope(3).unwrap(),
            crate::crosspolytope::crosspolytope(4).unwrap(),
            datasets::polygon(5),
        ] {
            let lat = build_face_lattice(&inc).unwrap();
            for j in 0..lat.facet_count() {
                let sub = lat.faces_of(lat.facet_set(j)).unwrap();
                let ridges: Vec<IndexSet> =
                    (0..sub.facet_count()).map(|r| sub.facet_set(r)).collect();
                assert!(
                    is_beginning_segment(&sub, &ridges),
                    "facet {} of {}",
                    lat.facet_name(j),
                    inc.facet_count()
                );
            }
        }
    }

    #[test]
    fn omega_lacks_the_shelling_property() {
        let g = datasets::omega_digraph();
        assert!(!shelling_property_exists(&g));
        assert!(!shelling_property_all(&g));
        let audit = shelling_property_all_audit(&g, 1000).unwrap();
        assert!(!audit.holds_for_all);
        assert_eq!(audit.sorts_checked, 1);
    }

    #[test]
    fn linear_cube_orientation_has_the_shelling_property() {
        let g = datasets::linear_digraph(&datasets::cube(3));
        assert!(shelling_property_exists(&g));
        assert!(shelling_property_all(&g));
        let audit = shelling_property_all_audit(&g, 100_000).unwrap();
        assert!(audit.holds_for_all);
        assert!(audit.sorts_checked >= 1);
    }

    #[test]
    fn linear_simplex_orientation_has_the_shelling_property() {
        let g = datasets::linear_digraph(&datasets::simplex(3));
        assert!(shelling_property_exists(&g));
        assert!(shelling_property_all(&g));
    }

    #[test]
    fn cyclic_digraph_has_no_shelling_property() {
        let lattice = build_face_lattice(&datasets::polygon(3)).unwrap();
        let g =
            crate::digraph::PolytopalDigraph::new(lattice, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!shelling_property_exists(&g));
        assert!(!shelling_property_all(&g));
        let audit = shelling_property_all_audit(&g, 10).unwrap();
        assert_eq!(audit.sorts_checked, 0);
        assert!(!audit.holds_for_all);
    }

    #[test]
    fn audit_cap_is_enforced() {
        let seq = crate::crosspolytope::PairSequence::new(vec![(1, 2), (3, 4)]).unwrap();
        let g = crate::crosspolytope::orientation_of(&seq)
            .unwrap()
            .to_digraph()
            .unwrap();
        assert!(matches!(
            shelling_property_all_audit(&g, 2),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn boundary_formula_holds_for_uso_orientations() {
        // The canonical omega orientation is not a USO, so the check
        // rejects it; the reordered USO orientation passes.
        let g = datasets::omega_digraph();
        assert!(matches!(
            boundary_formula_check(&g),
            Err(Error::NotAcyclicUso)
        ));
        let g = datasets::omega_uso_digraph();
        assert!(boundary_formula_check(&g).unwrap());
        let g = datasets::linear_digraph(&datasets::cube(3));
        assert!(boundary_formula_check(&g).unwrap());
        // Pyramids preserve acyclic USOs, and the formula survives the
        // construction.
        let p = crate::constructions::pyramid(&datasets::omega_uso_digraph()).unwrap();
        assert!(p.is_uso().0);
        assert!(boundary_formula_check(&p).unwrap());
    }

    #[test]
    fn boundary_formula_requires_acyclic_uso() {
        let lattice = build_face_lattice(&datasets::polygon(3)).unwrap();
        let cyclic =
            crate::digraph::PolytopalDigraph::new(lattice, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            boundary_formula_check(&cyclic),
            Err(Error::NotAcyclicUso)
        ));
        let square = build_face_lattice(&datasets::polygon(4)).unwrap();
        let two_sinks =
            crate::digraph::PolytopalDigraph::new(square, vec![(0, 1), (2, 1), (2, 3), (0, 3)])
                .unwrap();
        assert!(matches!(
            boundary_formula_check(&two_sinks),
            Err(Error::NotAcyclicUso)
        ));
    }

    #[test]
    fn verdicts_reassert_purity_and_nonemptiness() {
        // Whenever an order is accepted, re-walk it and confirm every
        // boundary intersection is nonempty and pure of codimension one.
        // The octahedron orientation from the good pair sequence
        // (1 6)(2 5)(3 4) has the shelling property.
        let seq = crate::crosspolytope::PairSequence::new(vec![(1, 6), (2, 5), (3, 4)]).unwrap();
        let g = crate::crosspolytope::orientation_of(&seq)
            .unwrap()
            .to_digraph()
            .unwrap();
        let order = g.topological_sorts().unwrap().next().unwrap();
        let polar = g.lattice().polar().unwrap();
        assert!(is_shelling(&polar, &order).is_shelling);
        for j in 2..=order.len() {
            let faces = boundary_intersection(&polar, &order, j);
            assert!(!faces.is_empty());
            assert!(faces.iter().all(|&(_, d)| d == polar.dimension() - 2));
        }
    }
}
