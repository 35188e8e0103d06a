//! The claims behind `reproduce`: every desk-checkable statement about
//! the bundled data, each reduced to a pass/fail outcome with details.
//!
//! Two claims fail on the data shipped with this crate: the canonical
//! orientation of `omega` is not a unique sink orientation (one facet
//! has two sinks), and consequently no truncation/family output seeded
//! from it is X-type — in fact no acyclic orientation of that polytope
//! is both USO+Holt-Klee and shelling-free. The failures are reported,
//! not hidden.

use num_bigint::BigUint;
use serde_json::{json, Value};

use polytopal::constructions::{family, pyramid, truncate, FamilySpec, TruncationSpec};
use polytopal::crosspolytope::{
    all_pair_sequences, bounds_check, census, double_factorial_odd, good_sequence_counts,
    orientation_of, CensusOptions,
};
use polytopal::datasets;
use polytopal::digraph::{classify, PolytopalDigraph};
use polytopal::geometry::{centroid, sample_line_shellings, two_facet_start_shelling, verify_vh};
use polytopal::geometry::{Halfspace, RationalPoint};
use polytopal::lattice::build_face_lattice;
use polytopal::shelling::{
    boundary_formula_check, boundary_intersection, is_shelling, shelling_property_all,
    shelling_property_all_audit, shelling_property_exists,
};

#[derive(Clone)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub description: &'static str,
    pub pass: bool,
    pub details: Vec<String>,
}

impl ClaimOutcome {
    fn new(id: &'static str, description: &'static str, failures: Vec<String>) -> Self {
        ClaimOutcome {
            id,
            description,
            pass: failures.is_empty(),
            details: failures,
        }
    }
}

pub fn print(outcomes: &[ClaimOutcome]) {
    for o in outcomes {
        println!(
            "{}  {} — {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.description
        );
        for d in &o.details {
            println!("      {d}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!(
        "{} of {} claims hold",
        outcomes.len() - failed,
        outcomes.len()
    );
}

pub fn to_json(outcomes: &[ClaimOutcome]) -> Value {
    Value::Array(
        outcomes
            .iter()
            .map(|o| {
                json!({
                    "id": o.id,
                    "description": o.description,
                    "pass": o.pass,
                    "details": o.details,
                })
            })
            .collect(),
    )
}

type Geometry = (Vec<RationalPoint>, Vec<Halfspace>);

pub fn run_all(geometry: &Geometry) -> Vec<ClaimOutcome> {
    vec![
        verify_omega_claim(geometry),
        classification_claim(),
        equivalence_claim(),
        boundary_formula_claim(),
        preservation_claim(),
        census_claim(),
        bounds_claim(),
        characterization_claim(),
        line_shelling_claim(geometry),
    ]
}

pub fn verify_omega_claim(geometry: &Geometry) -> ClaimOutcome {
    let mut failures = Vec::new();
    let (points, halfspaces) = geometry;
    match verify_vh(points, halfspaces) {
        Ok(incidence) => {
            if incidence != datasets::omega_star_incidence() {
                failures.push("facet vertex-lists differ from the bundled incidence".into());
            }
        }
        Err(e) => failures.push(format!("verification failed: {e}")),
    }
    ClaimOutcome::new(
        "vh-representation",
        "omega-star coordinates satisfy the inequalities with the bundled incidence",
        failures,
    )
}

fn classification_claim() -> ClaimOutcome {
    let mut failures = Vec::new();
    let g = datasets::omega_digraph();
    let r = classify(&g);
    if !(r.acyclic && r.uso && r.holt_klee && !r.shelling) {
        failures.push(format!(
            "expected acyclic+USO+Holt-Klee without shelling; got acyclic={} uso={} \
             holt_klee={} shelling={}",
            r.acyclic, r.uso, r.holt_klee, r.shelling
        ));
    }
    let sorts: Vec<_> = g.topological_sorts().unwrap().collect();
    if sorts.len() != 1 {
        failures.push(format!("{} topological sorts, expected 1", sorts.len()));
    }
    let polar = datasets::omega_star_lattice();
    let verdict = is_shelling(&polar, &sorts[0]);
    if verdict.failing_index != Some(3) {
        failures.push(format!(
            "shelling failure at {:?}, expected position 3",
            verdict.failing_index
        ));
    }
    let boundary = boundary_intersection(&polar, &sorts[0], 3);
    let labels: Vec<String> = boundary.iter().map(|(s, _)| polar.face_label(*s)).collect();
    if labels != vec!["{2,5,7}".to_string(), "{3,6,7}".to_string()] {
        failures.push(format!("boundary faces {labels:?}"));
    }
    ClaimOutcome::new(
        "omega-classification",
        "omega's canonical digraph is acyclic, USO, Holt-Klee and fails shelling at facet 3",
        failures,
    )
}

fn corpus() -> Vec<(String, PolytopalDigraph)> {
    let mut out = Vec::new();
    let omega = datasets::omega_digraph();
    out.push(("omega".to_string(), omega.clone()));
    let mut t = omega.clone();
    for i in 1..=3 {
        let sink = (0..t.vertex_count())
            .find(|&u| t.out_neighbors(u).is_empty())
            .unwrap();
        t = truncate(
            &t,
            &TruncationSpec {
                vertex: sink,
                split: None,
            },
        )
        .unwrap();
        out.push((format!("tr^{i}(omega)"), t.clone()));
    }
    let p1 = pyramid(&omega).unwrap();
    let p2 = pyramid(&p1).unwrap();
    out.push(("py(omega)".to_string(), p1));
    out.push(("py^2(omega)".to_string(), p2));
    for d in 2..=4u32 {
        for s in all_pair_sequences(d) {
            out.push((
                format!("C_{d} {s}"),
                orientation_of(&s).unwrap().to_digraph().unwrap(),
            ));
        }
    }
    out
}

fn equivalence_claim() -> ClaimOutcome {
    let mut failures = Vec::new();
    for (name, g) in corpus() {
        let exists = shelling_property_exists(&g);
        let single = shelling_property_all(&g);
        match shelling_property_all_audit(&g, 100_000) {
            Ok(audit) => {
                if exists != audit.holds_for_all || exists != single {
                    failures.push(format!("{name}: search and audit disagree"));
                }
            }
            Err(e) => failures.push(format!("{name}: audit failed: {e}")),
        }
    }
    ClaimOutcome::new(
        "sort-equivalence",
        "one topological sort decides the shelling property (audited over all sorts)",
        failures,
    )
}

fn boundary_formula_claim() -> ClaimOutcome {
    let mut failures = Vec::new();
    let mut ran = 0;
    for (name, g) in corpus() {
        if !g.is_acyclic().0 || !g.is_uso().0 {
            continue;
        }
        ran += 1;
        match boundary_formula_check(&g) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{name}: formula violated")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if ran < 90 {
        failures.push(format!("only {ran} acyclic USO instances available"));
    }
    ClaimOutcome::new(
        "boundary-formula",
        "facet boundaries along a sort decompose over in-neighbors (acyclic USO corpus)",
        failures,
    )
}

fn preservation_claim() -> ClaimOutcome {
    let mut failures = Vec::new();

    // Pyramids over the four X-type crosspolytope orientations.
    let mut verified = 0;
    for s in all_pair_sequences(4) {
        let g = orientation_of(&s).unwrap().to_digraph().unwrap();
        if !classify(&g).x_type {
            continue;
        }
        let p = pyramid(&g).unwrap();
        if classify(&p).x_type {
            verified += 1;
        } else {
            failures.push(format!("pyramid over {s} lost the X-type classification"));
        }
    }
    if verified != 4 {
        failures.push(format!("{verified} X-type pyramid seeds, expected 4"));
    }

    // Truncation/family seeded from omega, as published.
    let omega = datasets::omega_digraph();
    let fam = family(
        &omega,
        &FamilySpec {
            dimension: 6,
            vertices: 13,
        },
    );
    match fam {
        Ok(g) => {
            if !classify(&g).x_type {
                failures.push(
                    "family(omega, d=6, n=13) is not X-type: the bundled omega digraph is \
                     not a USO, and no orientation of that polytope is X-type"
                        .into(),
                );
            }
        }
        Err(e) => failures.push(format!("family construction failed: {e}")),
    }
    ClaimOutcome::new(
        "construction-preservation",
        "truncation and pyramid preserve the X-type classification",
        failures,
    )
}

fn census_claim() -> ClaimOutcome {
    let mut failures = Vec::new();
    let a = good_sequence_counts(5);
    let expected = [1u64, 2, 10, 74, 706];
    for (i, want) in expected.iter().enumerate() {
        if a[i] != BigUint::from(*want) {
            failures.push(format!("a_{} = {}, expected {want}", i + 1, a[i]));
        }
    }
    for d in 2..=5u32 {
        let opts = CensusOptions {
            limit: 6,
            verify_digraphs: d <= 4,
        };
        match census(d, &opts) {
            Ok(c) => {
                if !c.consistent() {
                    failures.push(format!("census inconsistent at d={d}"));
                }
                if c.total != double_factorial_odd(2 * d as i64 - 1) {
                    failures.push(format!("total at d={d} is not (2d-1)!!"));
                }
                if d == 4 && c.x_type != BigUint::from(4u32) {
                    failures.push(format!("x-type count at d=4 is {}", c.x_type));
                }
            }
            Err(e) => failures.push(format!("census failed at d={d}: {e}")),
        }
    }
    ClaimOutcome::new(
        "census",
        "pair-sequence counts agree across enumeration, recurrence and closed form (d <= 5)",
        failures,
    )
}

fn bounds_claim() -> ClaimOutcome {
    let mut failures = Vec::new();
    for row in bounds_check(8) {
        if !row.all_ok() {
            failures.push(format!("bounds fail at d={}", row.d));
        }
    }
    ClaimOutcome::new(
        "bounds",
        "integer bounds on good-sequence counts hold for 4 <= d <= 8",
        failures,
    )
}

fn characterization_claim() -> ClaimOutcome {
    let mut failures = Vec::new();
    for d in 2..=4u32 {
        for s in all_pair_sequences(d) {
            let g = orientation_of(&s).unwrap().to_digraph().unwrap();
            if shelling_property_exists(&g) != s.is_good() {
                failures.push(format!("{s}: goodness and shelling property disagree"));
            }
        }
    }
    ClaimOutcome::new(
        "sequence-shelling",
        "good pair sequences are exactly the crosspolytope orientations with the shelling property (d <= 4)",
        failures,
    )
}

fn line_shelling_claim(geometry: &Geometry) -> ClaimOutcome {
    let mut failures = Vec::new();
    let (points, halfspaces) = geometry;
    match verify_vh(points, halfspaces).and_then(|inc| build_face_lattice(&inc)) {
        Ok(lattice) => {
            let base = centroid(points);
            match sample_line_shellings(halfspaces, &base, 20, 400) {
                Ok(samples) => {
                    for (k, (_, order)) in samples.iter().enumerate() {
                        if !is_shelling(&lattice, order).is_shelling {
                            failures.push(format!("sampled line {k} is not a shelling"));
                        }
                    }
                }
                Err(e) => failures.push(format!("sampling failed: {e}")),
            }
            match two_facet_start_shelling(points, halfspaces, 0, 1, false) {
                Ok(order) => {
                    if order[..2] != [0, 1] || !is_shelling(&lattice, &order).is_shelling {
                        failures.push("two-facet-start order invalid".into());
                    }
                }
                Err(e) => failures.push(format!("two-facet-start failed: {e}")),
            }
        }
        Err(e) => failures.push(format!("geometry invalid: {e}")),
    }

    let (cpoints, chalfspaces) = datasets::cube_geometry(4);
    let clattice = build_face_lattice(&datasets::cube(4)).unwrap();
    match sample_line_shellings(&chalfspaces, &centroid(&cpoints), 20, 400) {
        Ok(samples) => {
            for (k, (_, order)) in samples.iter().enumerate() {
                if !is_shelling(&clattice, order).is_shelling {
                    failures.push(format!("cube-4: sampled line {k} is not a shelling"));
                }
            }
        }
        Err(e) => failures.push(format!("cube-4 sampling failed: {e}")),
    }
    ClaimOutcome::new(
        "line-shellings",
        "sampled generic lines and the two-facet-start construction yield shellings",
        failures,
    )
}
