//! Exact rational verification of V/H-representations and line
//! shellings. No floating point: incidence and genericity are decided
//! by equality tests on big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::incidence::VertexFacetIncidence;
use crate::lattice::build_face_lattice;
use crate::set::IndexSet;
use crate::{Error, Result};

pub type Rat = BigRational;

/// A point with exact rational coordinates.
pub type RationalPoint = Vec<Rat>;

/// The halfspace `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

/// A directed line `base + t * direction`.
#[derive(Clone, Debug)]
pub struct DirectedLine {
    pub base: RationalPoint,
    pub direction: Vec<Rat>,
}

pub fn rat(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn dot(a: &[Rat], x: &[Rat]) -> Rat {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

fn check_dims(points: &[RationalPoint], halfspaces: &[Halfspace]) -> Result<usize> {
    let Some(dim) = points
        .first()
        .map(|p| p.len())
        .or_else(|| halfspaces.first().map(|h| h.normal.len()))
    else {
        return Err(Error::DimensionMismatch("no points or halfspaces".into()));
    };
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch(
            "points of unequal dimension".into(),
        ));
    }
    if halfspaces.iter().any(|h| h.normal.len() != dim) {
        return Err(Error::DimensionMismatch(
            "halfspace normals of unequal dimension".into(),
        ));
    }
    if halfspaces.iter().any(|h| h.normal.iter().all(Rat::is_zero)) {
        return Err(Error::DimensionMismatch("zero normal".into()));
    }
    Ok(dim)
}

/// Check that every point satisfies every halfspace and return the
/// incidence: facet `j` is incident to the points on its hyperplane.
/// Vertices are named `1..n`, facets `F_1..F_m`.
pub fn verify_vh(
    points: &[RationalPoint],
    halfspaces: &[Halfspace],
) -> Result<VertexFacetIncidence> {
    check_dims(points, halfspaces)?;
    let mut facets = Vec::with_capacity(halfspaces.len());
    for (j, h) in halfspaces.iter().enumerate() {
        let mut incident = IndexSet::EMPTY;
        for (i, p) in points.iter().enumerate() {
            let value = dot(&h.normal, p);
            if value > h.offset {
                return Err(Error::InfeasiblePoint { point: i, facet: j });
            }
            if value == h.offset {
                incident.insert(i);
            }
        }
        facets.push(incident);
    }
    VertexFacetIncidence::new(
        (1..=points.len()).map(|i| i.to_string()).collect(),
        (1..=halfspaces.len()).map(|j| format!("F_{j}")).collect(),
        facets,
    )
}

/// Intersection parameters of a line with every facet hyperplane.
/// `None` marks a hyperplane parallel to the line.
fn parameters(halfspaces: &[Halfspace], line: &DirectedLine) -> Vec<Option<Rat>> {
    halfspaces
        .iter()
        .map(|h| {
            let denom = dot(&h.normal, &line.direction);
            if denom.is_zero() {
                None
            } else {
                Some((&h.offset - dot(&h.normal, &line.base)) / denom)
            }
        })
        .collect()
}

/// Order facet indices the way a traveller starting at parameter zero
/// meets them: positive parameters ascending, then (wrapping around at
/// infinity) negative parameters ascending.
fn wraparound_order(params: &[(usize, Rat)]) -> Vec<usize> {
    let mut positive: Vec<&(usize, Rat)> = params.iter().filter(|(_, t)| t.is_positive()).collect();
    let mut negative: Vec<&(usize, Rat)> = params.iter().filter(|(_, t)| t.is_negative()).collect();
    positive.sort_by(|a, b| a.1.cmp(&b.1));
    negative.sort_by(|a, b| a.1.cmp(&b.1));
    positive
        .into_iter()
        .chain(negative)
        .map(|&(j, _)| j)
        .collect()
}

/// The line shelling generated by a generic directed line through an
/// interior base point: facets ordered by intersection parameter along
/// the line, wrapping around at infinity.
pub fn line_shelling(halfspaces: &[Halfspace], line: &DirectedLine) -> Result<Vec<usize>> {
    if halfspaces.iter().any(|h| h.normal.len() != line.base.len())
        || line.direction.len() != line.base.len()
    {
        return Err(Error::DimensionMismatch("line vs halfspaces".into()));
    }
    if line.direction.iter().all(Rat::is_zero) {
        return Err(Error::NotGeneric("zero direction".into()));
    }
    for h in halfspaces {
        if dot(&h.normal, &line.base) >= h.offset {
            return Err(Error::NotInterior);
        }
    }
    let raw = parameters(halfspaces, line);
    let mut params = Vec::with_capacity(raw.len());
    for (j, t) in raw.into_iter().enumerate() {
        match t {
            None => {
                return Err(Error::NotGeneric(format!(
                    "line is parallel to hyperplane {j}"
                )));
            }
            Some(t) => params.push((j, t)),
        }
    }
    let mut values: Vec<&Rat> = params.iter().map(|(_, t)| t).collect();
    values.sort();
    if values.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotGeneric(
            "two hyperplanes at equal parameter".into(),
        ));
    }
    Ok(wraparound_order(&params))
}

/// Relative-interior point of a vertex set: the average of its vertices,
/// optionally with one vertex weighted `1 + 1/(jitter+2)` to perturb it
/// deterministically.
fn weighted_centroid(
    points: &[RationalPoint],
    vertices: IndexSet,
    jitter: Option<usize>,
) -> RationalPoint {
    let dim = points[0].len();
    let ids = vertices.to_vec();
    let bump = jitter.map(|k| (k % ids.len(), ratio(1, k as i64 + 2)));
    let mut total_weight = Rat::zero();
    let mut sum = vec![Rat::zero(); dim];
    for (pos, &v) in ids.iter().enumerate() {
        let mut weight = Rat::one();
        if let Some((bump_pos, ref extra)) = bump {
            if pos == bump_pos {
                weight += extra;
            }
        }
        for (s, c) in sum.iter_mut().zip(&points[v]) {
            *s += c * &weight;
        }
        total_weight += weight;
    }
    sum.into_iter().map(|s| s / &total_weight).collect()
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

const TWO_FACET_RETRIES: usize = 64;

/// A shelling that starts with facets `i` then `j` (or, reversed, ends
/// with `j` then `i`), built from a line through relative-interior
/// points of the shared ridge and the two facets. The offsets shrink by
/// halving, with a deterministic jitter on the facet points, until the
/// line is generic and facet `j` comes second.
pub fn two_facet_start_shelling(
    points: &[RationalPoint],
    halfspaces: &[Halfspace],
    i: usize,
    j: usize,
    reversed: bool,
) -> Result<Vec<usize>> {
    check_dims(points, halfspaces)?;
    if i == j || i >= halfspaces.len() || j >= halfspaces.len() {
        return Err(Error::NotAdjacentFacets(i, j));
    }
    let incidence = verify_vh(points, halfspaces)?;
    let lattice = build_face_lattice(&incidence)?;
    let ridge = incidence.facet(i).inter(incidence.facet(j));
    if lattice.dim_of(ridge) != Some(lattice.dimension() - 2) {
        return Err(Error::NotAdjacentFacets(i, j));
    }
    let p = weighted_centroid(points, ridge, None);
    for attempt in 0..TWO_FACET_RETRIES {
        let eps = ratio(1, 1 << (attempt % 48 + 1).min(48)) * ratio(1, attempt as i64 + 1);
        let q = weighted_centroid(points, incidence.facet(i), Some(attempt));
        let q2 = weighted_centroid(points, incidence.facet(j), Some(attempt + 1));
        let scale = Rat::one() + &eps;
        let r: RationalPoint = p
            .iter()
            .zip(&q)
            .map(|(pc, qc)| (pc + &eps * qc) / &scale)
            .collect();
        let r2: RationalPoint = p
            .iter()
            .zip(&q2)
            .map(|(pc, qc)| (pc + &eps * qc) / &scale)
            .collect();
        let direction: Vec<Rat> = sub(&p, &r)
            .iter()
            .zip(&sub(&p, &r2))
            .map(|(x, y)| x + y)
            .collect();
        let line = DirectedLine { base: r, direction };
        let raw = parameters(halfspaces, &line);
        if raw.iter().any(Option::is_none) {
            continue;
        }
        let params: Vec<(usize, Rat)> = raw
            .into_iter()
            .enumerate()
            .map(|(f, t)| (f, t.unwrap()))
            .collect();
        // Facet i sits exactly at parameter zero; everything else must
        // be off zero and pairwise distinct.
        if !params[i].1.is_zero() {
            continue;
        }
        if params.iter().any(|(f, t)| *f != i && t.is_zero()) {
            continue;
        }
        let mut values: Vec<&Rat> = params.iter().map(|(_, t)| t).collect();
        values.sort();
        if values.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        // Facet j must be the first one hit in the travel direction.
        let min_positive = params
            .iter()
            .filter(|(_, t)| t.is_positive())
            .min_by(|a, b| a.1.cmp(&b.1))
            .map(|&(f, _)| f);
        if min_positive != Some(j) {
            continue;
        }
        let rest: Vec<(usize, Rat)> = params.into_iter().filter(|&(f, _)| f != i).collect();
        let mut order = vec![i];
        order.extend(wraparound_order(&rest));
        if reversed {
            order.reverse();
        }
        return Ok(order);
    }
    Err(Error::DegenerateAfterRetries(TWO_FACET_RETRIES))
}

/// Deterministic family of candidate directions `(1, k, k^2, .., k^(dim-1))`.
pub fn moment_direction(dim: usize, k: i64) -> Vec<Rat> {
    (0..dim as u32).map(|p| rat(k.pow(p))).collect()
}

/// The average of a point cloud; interior for the vertex set of a polytope.
pub fn centroid(points: &[RationalPoint]) -> RationalPoint {
    let dim = points[0].len();
    let count = rat(points.len() as i64);
    (0..dim)
        .map(|c| points.iter().map(|p| &p[c]).sum::<Rat>() / &count)
        .collect()
}

/// Sample generic directed lines through `base` from the moment-curve
/// family until `count` line shellings exist, trying at most
/// `max_attempts` directions.
pub fn sample_line_shellings(
    halfspaces: &[Halfspace],
    base: &RationalPoint,
    count: usize,
    max_attempts: usize,
) -> Result<Vec<(DirectedLine, Vec<usize>)>> {
    let mut found = Vec::new();
    for k in 1..=max_attempts as i64 {
        let line = DirectedLine {
            base: base.clone(),
            direction: moment_direction(base.len(), k),
        };
        match line_shelling(halfspaces, &line) {
            Ok(order) => {
                found.push((line, order));
                if found.len() == count {
                    return Ok(found);
                }
            }
            Err(Error::NotGeneric(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::DegenerateAfterRetries(max_attempts))
}

/// Strict interiority of a point, the test `line_shelling` applies to
/// its base point.
pub fn is_interior(halfspaces: &[Halfspace], point: &RationalPoint) -> bool {
    halfspaces.iter().all(|h| dot(&h.normal, point) < h.offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets;
    use crate::shelling;

    fn unit_square() -> (Vec<RationalPoint>, Vec<Halfspace>) {
        let points = vec![
            vec![rat(0), rat(0)],
            vec![rat(1), rat(0)],
            vec![rat(1), rat(1)],
            vec![rat(0), rat(1)],
        ];
        let halfspaces = vec![
            Halfspace {
                normal: vec![rat(-1), rat(0)],
                offset: rat(0),
            },
            Halfspace {
                normal: vec![rat(1), rat(0)],
                offset: rat(1),
            },
            Halfspace {
                normal: vec![rat(0), rat(-1)],
                offset: rat(0),
            },
            Halfspace {
                normal: vec![rat(0), rat(1)],
                offset: rat(1),
            },
        ];
        (points, halfspaces)
    }

    #[test]
    fn unit_square_incidence() {
        let (points, halfspaces) = unit_square();
        let inc = verify_vh(&points, &halfspaces).unwrap();
        for v in 0..4 {
            assert_eq!(inc.facets_at(v).len(), 2);
        }
    }

    #[test]
    fn omega_star_tables_verify_exactly() {
        let (points, halfspaces) = datasets::omega_star_geometry();
        let inc = verify_vh(&points, &halfspaces).unwrap();
        assert_eq!(inc, datasets::omega_star_incidence());
        // Vertex 8 = (0,0,-1,1) lies on F_5..F_9 only.
        assert_eq!(inc.facets_at(7).to_vec(), vec![4, 5, 6, 7, 8]);
    }

    #[test]
    fn infeasible_point_is_reported() {
        let (mut points, halfspaces) = datasets::omega_star_geometry();
        points[2][1] = rat(9);
        let err = verify_vh(&points, &halfspaces).unwrap_err();
        assert!(matches!(err, Error::InfeasiblePoint { point: 2, .. }));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let (points, mut halfspaces) = unit_square();
        halfspaces[0].normal.push(rat(1));
        assert!(matches!(
            verify_vh(&points, &halfspaces),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn centroid_of_omega_star_is_interior() {
        let (points, halfspaces) = datasets::omega_star_geometry();
        let x = centroid(&points);
        assert_eq!(x, vec![rat(0), rat(0), ratio(-1, 4), rat(0)]);
        assert!(is_interior(&halfspaces, &x));
    }

    #[test]
    fn line_shelling_requires_interior_base() {
        let (points, halfspaces) = datasets::omega_star_geometry();
        let line = DirectedLine {
            base: points[0].clone(),
            direction: moment_direction(4, 1),
        };
        assert!(matches!(
            line_shelling(&halfspaces, &line),
            Err(Error::NotInterior)
        ));
    }

    #[test]
    fn parallel_direction_is_not_generic() {
        let (points, halfspaces) = unit_square();
        let line = DirectedLine {
            base: centroid(&points),
            direction: vec![rat(1), rat(0)],
        };
        assert!(matches!(
            line_shelling(&halfspaces, &line),
            Err(Error::NotGeneric(_))
        ));
    }

    #[test]
    fn triangle_line_shellings_pass_the_checker() {
        let points = vec![
            vec![rat(0), rat(0)],
            vec![rat(2), rat(0)],
            vec![rat(0), rat(2)],
        ];
        let halfspaces = vec![
            Halfspace {
                normal: vec![rat(0), rat(-1)],
                offset: rat(0),
            },
            Halfspace {
                normal: vec![rat(-1), rat(0)],
                offset: rat(0),
            },
            Halfspace {
                normal: vec![rat(1), rat(1)],
                offset: rat(2),
            },
        ];
        let inc = verify_vh(&points, &halfspaces).unwrap();
        let lat = build_face_lattice(&inc).unwrap();
        let base = centroid(&points);
        for k in [1i64, 2, 3, -1, -2] {
            let line = DirectedLine {
                base: base.clone(),
                direction: vec![rat(1), rat(k)],
            };
            if let Ok(order) = line_shelling(&halfspaces, &line) {
                assert!(shelling::is_shelling(&lat, &order).is_shelling);
            }
        }
    }

    #[test]
    fn wraparound_puts_negative_parameters_last() {
        let (points, halfspaces) = unit_square();
        let line = DirectedLine {
            base: centroid(&points),
            direction: vec![rat(2), rat(1)],
        };
        let order = line_shelling(&halfspaces, &line).unwrap();
        // Travelling towards (2,1), the line meets x=1 at t=1/4 and y=1
        // at t=1/2; wrapping around at infinity it re-enters from the
        // opposite side, meeting y=0 at t=-1/2 before x=0 at t=-1/4.
        assert_eq!(order, vec![1, 3, 2, 0]);
    }

    #[test]
    fn two_facet_start_on_omega_star() {
        let (points, halfspaces) = datasets::omega_star_geometry();
        let lat = datasets::omega_star_lattice();
        // F_1 and F_2 share the 2-face {1,4,7}.
        let order = two_facet_start_shelling(&points, &halfspaces, 0, 1, false).unwrap();
        assert_eq!(&order[..2], &[0, 1]);
        assert!(shelling::is_shelling(&lat, &order).is_shelling);
        let rev = two_facet_start_shelling(&points, &halfspaces, 0, 1, true).unwrap();
        assert_eq!(&rev[rev.len() - 2..], &[1, 0]);
        assert!(shelling::is_shelling(&lat, &rev).is_shelling);
    }

    #[test]
    fn two_facet_start_on_cube() {
        let (points, halfspaces) = datasets::cube_geometry(3);
        let lat = build_face_lattice(&datasets::cube(3)).unwrap();
        let order = two_facet_start_shelling(&points, &halfspaces, 0, 2, false).unwrap();
        assert_eq!(&order[..2], &[0, 2]);
        assert!(shelling::is_shelling(&lat, &order).is_shelling);
    }

    #[test]
    fn opposite_cube_facets_are_not_adjacent() {
        let (points, halfspaces) = datasets::cube_geometry(3);
        assert!(matches!(
            two_facet_start_shelling(&points, &halfspaces, 0, 1, false),
            Err(Error::NotAdjacentFacets(0, 1))
        ));
    }

    #[test]
    fn sampled_lines_all_shell_omega_star() {
        let (points, halfspaces) = datasets::omega_star_geometry();
        let lat = datasets::omega_star_lattice();
        let base = centroid(&points);
        let samples = sample_line_shellings(&halfspaces, &base, 5, 100).unwrap();
        assert_eq!(samples.len(), 5);
        for (_, order) in samples {
            assert!(shelling::is_shelling(&lat, &order).is_shelling);
        }
    }
}
