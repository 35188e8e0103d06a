//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Criteria 2 and 5 are implemented faithfully and are expected
//! to fail on the bundled data: the canonical orientation of `omega`
//! is not a unique sink orientation (the facet of `omega` at vertex 7
//! of `omega-star` is a bipyramid whose apexes F_4 and F_10 are both
//! sinks under the index orientation), and exhaustive search shows no
//! acyclic orientation of this polytope is USO and Holt-Klee without
//! also having the shelling property, so no X-type seed exists. See
//! `omega_admits_no_x_type_orientation_exhaustive` below (run with
//! `--ignored --release`) for the machine-checked evidence.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use polytopal::constructions::{family, pyramid, truncate, FamilySpec, TruncationSpec};
use polytopal::crosspolytope::{
    all_pair_sequences, census, double_factorial_odd, orientation_of, CensusOptions,
};
use polytopal::datasets;
use polytopal::digraph::{classify, PolytopalDigraph};
use polytopal::geometry::{centroid, sample_line_shellings, two_facet_start_shelling, verify_vh};
use polytopal::lattice::build_face_lattice;
use polytopal::shelling::{
    boundary_formula_check, boundary_intersection, is_shelling, shelling_property_all,
    shelling_property_all_audit, shelling_property_exists, FailReason,
};
use polytopal::IndexSet;

fn set(v: &[usize]) -> IndexSet {
    v.iter().copied().collect()
}

fn report(criterion: usize, label: &str, failures: &[String], elapsed: Duration) {
    if failures.is_empty() {
        println!("criterion {criterion} ({label}): PASS [{elapsed:.2?}]");
    } else {
        println!("criterion {criterion} ({label}): FAIL [{elapsed:.2?}]");
        for f in failures {
            println!("  - {f}");
        }
    }
    assert!(
        failures.is_empty(),
        "criterion {criterion} failed: {failures:?}"
    );
}

#[test]
fn criterion_1_vh_verification() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let (points, halfspaces) = datasets::omega_star_geometry();
    match verify_vh(&points, &halfspaces) {
        Ok(incidence) => {
            let expected = datasets::omega_star_incidence();
            if incidence != expected {
                failures.push("incidence differs from the published facet lists".into());
            }
            let lists: [&[usize]; 10] = [
                &[0, 1, 3, 4, 6],
                &[0, 2, 3, 5, 6],
                &[1, 2, 4, 5, 6],
                &[0, 1, 2, 6],
                &[0, 1, 2, 7],
                &[0, 1, 3, 4, 7],
                &[0, 2, 3, 5, 7],
                &[1, 2, 4, 5, 7],
                &[3, 4, 5, 7],
                &[3, 4, 5, 6],
            ];
            for (j, list) in lists.iter().enumerate() {
                if incidence.facet(j) != set(list) {
                    failures.push(format!("facet F_{} has the wrong vertex list", j + 1));
                }
            }
        }
        Err(e) => failures.push(format!("verify_vh failed: {e}")),
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 1 s"));
    }
    report(1, "V/H verification", &failures, elapsed);
}

#[test]
fn criterion_2_omega_classification() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let g = datasets::omega_digraph();
    let r = classify(&g);
    if !r.acyclic {
        failures.push("expected acyclic = true".into());
    }
    if !r.uso {
        failures.push(
            "expected USO = true; the facet {F_1,F_2,F_3,F_4,F_10} has sinks F_4 and F_10 \
             under the index orientation (bundled-data defect, see the test module docs)"
                .into(),
        );
    }
    if !r.holt_klee {
        failures.push("expected Holt-Klee = true (fails because USO fails)".into());
    }
    if r.shelling {
        failures.push("expected shelling = false".into());
    }

    let sorts: Vec<Vec<usize>> = g.topological_sorts().unwrap().collect();
    if sorts.len() != 1 {
        failures.push(format!(
            "expected exactly 1 topological sort, got {}",
            sorts.len()
        ));
    }
    let order = &sorts[0];
    if *order != (0..10).collect::<Vec<_>>() {
        failures.push("unique sort is not F_1..F_10".into());
    }

    let polar = datasets::omega_star_lattice();
    let verdict = is_shelling(&polar, order);
    if verdict.failing_index != Some(3) {
        failures.push(format!(
            "expected failing_index 3, got {:?}",
            verdict.failing_index
        ));
    }
    if verdict.failing_reason != Some(FailReason::NotBeginningSegment) {
        failures.push(format!(
            "expected NotBeginningSegment, got {:?}",
            verdict.failing_reason
        ));
    }
    let boundary = boundary_intersection(&polar, order, 3);
    let expected = vec![(set(&[1, 4, 6]), 2), (set(&[2, 5, 6]), 2)]; // {2,5,7}, {3,6,7}
    if boundary != expected {
        failures.push(format!("boundary at position 3 is {boundary:?}"));
    }

    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 5 s"));
    }
    report(
        2,
        "four-property classification of omega",
        &failures,
        elapsed,
    );
}

/// The corpus shared by criteria 3 and 4: omega's canonical digraph,
/// its first three truncations, its pyramids up to dimension 6, and
/// every canonical crosspolytope orientation for d <= 4.
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
            let g = orientation_of(&s).unwrap().to_digraph().unwrap();
            out.push((format!("C_{d} {s}"), g));
        }
    }
    out
}

#[test]
fn criterion_3_sort_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (name, g) in corpus() {
        let exists = shelling_property_exists(&g);
        let single = shelling_property_all(&g);
        let audit = shelling_property_all_audit(&g, 100_000).unwrap();
        checked += 1;
        if exists != audit.holds_for_all || exists != single {
            failures.push(format!(
                "{name}: exists={exists}, single-sort={single}, audit={} over {} sorts",
                audit.holds_for_all, audit.sorts_checked
            ));
        }
    }
    println!("  equivalence checked on {checked} digraphs");
    assert!(checked >= 129);
    report(3, "one sort decides all sorts", &failures, start.elapsed());
}

#[test]
fn criterion_4_boundary_formula() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut ran = 0usize;
    for (name, g) in corpus() {
        if !g.is_acyclic().0 || !g.is_uso().0 {
            continue;
        }
        ran += 1;
        match boundary_formula_check(&g) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{name}: boundary formula violated")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    // Acyclic USO orientations of omega exist even though the bundled
    // canonical orientation is not one; include one as a live instance.
    let sigma = datasets::omega_uso_digraph();
    assert!(sigma.is_uso().0);
    if !boundary_formula_check(&sigma).unwrap() {
        failures.push("reordered omega USO orientation violates the formula".into());
    }
    ran += 1;
    println!("  boundary formula verified on {ran} acyclic USO digraphs");
    assert!(ran >= 91);
    report(4, "facet-boundary formula", &failures, start.elapsed());
}

#[test]
fn criterion_5_construction_preservation() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // The genuinely available X-type inputs: the four unique
    // source-and-sink orientations of the 4-crosspolytope with bad pair
    // sequences. Pyramids over them must stay X-type (re-classified).
    let mut pyramid_instances = 0usize;
    for s in all_pair_sequences(4) {
        let g = orientation_of(&s).unwrap().to_digraph().unwrap();
        let r = classify(&g);
        if !r.x_type {
            continue;
        }
        let p = pyramid(&g).unwrap();
        if !classify(&p).x_type {
            failures.push(format!("pyramid over {s} is not X-type"));
        }
        pyramid_instances += 1;
        if pyramid_instances == 1 {
            let pp = pyramid(&p).unwrap();
            if !classify(&pp).x_type {
                failures.push(format!("double pyramid over {s} is not X-type"));
            }
            pyramid_instances += 1;
        }
    }
    println!("  pyramid preservation verified on {pyramid_instances} X-type instances");
    if pyramid_instances < 5 {
        failures.push(format!(
            "only {pyramid_instances} X-type pyramid instances available"
        ));
    }

    // The criterion as stated: truncation/family seeded from omega's
    // canonical digraph. That digraph is not X-type (no orientation of
    // this polytope is), so these assertions fail on the bundled data.
    let omega = datasets::omega_digraph();
    if !classify(&omega).x_type {
        failures.push(
            "omega's canonical digraph is not X-type (not a USO); no orientation of the \
             bundled polytope is X-type at all, so truncation/family preservation cannot \
             be demonstrated on it (bundled-data defect, see the test module docs)"
                .into(),
        );
    }
    let fam = family(
        &omega,
        &FamilySpec {
            dimension: 6,
            vertices: 13,
        },
    )
    .unwrap();
    assert_eq!(fam.lattice().dimension(), 6);
    assert_eq!(fam.vertex_count(), 13);
    if !classify(&fam).x_type {
        failures.push("family(omega, d=6, n=13) is not X-type".into());
    }
    for (label, g) in [
        (
            "tr(omega)",
            truncate(
                &omega,
                &TruncationSpec {
                    vertex: 9,
                    split: None,
                },
            )
            .unwrap(),
        ),
        ("py(omega)", pyramid(&omega).unwrap()),
    ] {
        if !classify(&g).x_type {
            failures.push(format!("{label} is not X-type"));
        }
    }

    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(120) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 2 min"));
    }
    report(5, "truncation/pyramid preservation", &failures, elapsed);
}

#[test]
fn criterion_6_census() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let expected_a: [u64; 5] = [1, 2, 10, 74, 706];
    let a = polytopal::crosspolytope::good_sequence_counts(5);
    for (d, want) in expected_a.iter().enumerate() {
        if a[d] != BigUint::from(*want) {
            failures.push(format!("a_{} = {} (recurrence), want {want}", d + 1, a[d]));
        }
    }

    for d in 2..=5u32 {
        let opts = CensusOptions {
            limit: 6,
            verify_digraphs: d <= 4,
        };
        let c = census(d, &opts).unwrap();
        if !c.consistent() {
            failures.push(format!("census at d={d} is inconsistent: {c:?}"));
        }
        if c.total != double_factorial_odd(2 * d as i64 - 1) {
            failures.push(format!("total at d={d} is not (2d-1)!!"));
        }
        if c.good != BigUint::from(expected_a[d as usize - 1]) {
            failures.push(format!("good count at d={d} is {}", c.good));
        }
        if d == 4 {
            if c.uso != BigUint::from(78u32) {
                failures.push(format!("uso count at d=4 is {}", c.uso));
            }
            if c.x_type != BigUint::from(4u32) {
                failures.push(format!("x-type count at d=4 is {}", c.x_type));
            }
        }
        if d <= 4 {
            if c.uso_verified != Some(c.uso.clone()) {
                failures.push(format!("digraph USO verification differs at d={d}"));
            }
            if c.holt_klee_verified != Some(c.uso.clone()) {
                failures.push(format!("Holt-Klee verification differs at d={d}"));
            }
        }
    }
    report(6, "pair-sequence census", &failures, start.elapsed());
}

#[test]
fn criterion_7_bounds() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let rows = polytopal::crosspolytope::bounds_check(8);
    assert_eq!(rows.len(), 5);
    for row in &rows {
        if !row.lower_ok {
            failures.push(format!("lower bound fails at d={}", row.d));
        }
        if !row.upper_ok {
            failures.push(format!("upper bound fails at d={}", row.d));
        }
        if !row.gap_ok {
            failures.push(format!("exclusion gap fails at d={}", row.d));
        }
        if !row.ratio_ok {
            failures.push(format!("ratio bound fails at d={}", row.d));
        }
    }
    let r4 = &rows[0];
    if (r4.lower.clone(), r4.a.clone(), r4.upper.clone())
        != (
            BigUint::from(60u32),
            BigUint::from(74u32),
            BigUint::from(75u32),
        )
    {
        failures.push("d=4 bounds are not 60 < 74 < 75".into());
    }
    report(
        7,
        "integer bounds on good-sequence counts",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_8_goodness_characterizes_shelling() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // d = 1: the single sequence (1 2) is good, and every facet order
    // of the segment (facets are points) is a shelling.
    let one = all_pair_sequences(1);
    assert_eq!(one.len(), 1);
    assert!(one[0].is_good());
    let segment = build_face_lattice(&datasets::simplex(1)).unwrap();
    assert!(is_shelling(&segment, &[0, 1]).is_shelling);
    assert!(is_shelling(&segment, &[1, 0]).is_shelling);

    let mut checked = 1usize;
    for d in 2..=4u32 {
        for s in all_pair_sequences(d) {
            let g = orientation_of(&s).unwrap().to_digraph().unwrap();
            let exists = shelling_property_exists(&g);
            checked += 1;
            if exists != s.is_good() {
                failures.push(format!(
                    "{s}: good = {}, shelling property = {exists}",
                    s.is_good()
                ));
            }
        }
    }
    println!("  characterization checked on {checked} sequences");
    assert_eq!(checked, 1 + 3 + 15 + 105);
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 5 min"));
    }
    report(8, "good sequences = shelling property", &failures, elapsed);
}

#[test]
fn criterion_9_line_shellings() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for (name, (points, halfspaces), lattice) in [
        (
            "omega-star",
            datasets::omega_star_geometry(),
            datasets::omega_star_lattice(),
        ),
        (
            "cube-4",
            datasets::cube_geometry(4),
            build_face_lattice(&datasets::cube(4)).unwrap(),
        ),
    ] {
        let base = centroid(&points);
        match sample_line_shellings(&halfspaces, &base, 20, 400) {
            Ok(samples) => {
                assert_eq!(samples.len(), 20);
                for (k, (_, order)) in samples.iter().enumerate() {
                    let verdict = is_shelling(&lattice, order);
                    if !verdict.is_shelling {
                        failures.push(format!(
                            "{name}: sampled line {k} gives a non-shelling: {verdict:?}"
                        ));
                    }
                }
            }
            Err(e) => failures.push(format!("{name}: sampling failed: {e}")),
        }
    }

    let (points, halfspaces) = datasets::omega_star_geometry();
    let lattice = datasets::omega_star_lattice();
    match two_facet_start_shelling(&points, &halfspaces, 0, 1, false) {
        Ok(order) => {
            if order[..2] != [0, 1] {
                failures.push(format!("order does not start F_1,F_2: {order:?}"));
            }
            if !is_shelling(&lattice, &order).is_shelling {
                failures.push("two-facet-start order is not a shelling".into());
            }
        }
        Err(e) => failures.push(format!("two-facet-start failed: {e}")),
    }
    report(9, "line shellings", &failures, start.elapsed());
}

/// Evidence for the criterion 2/5 failures: every acyclic orientation
/// of the bundled omega polytope that is USO and Holt-Klee also has
/// the shelling property, so no X-type orientation exists. Exhaustive
/// over all 122,856 acyclic orientations; run explicitly with
/// `cargo test --release -p polytopal --test acceptance -- --ignored`.
#[test]
#[ignore = "exhaustive search, minutes in release mode"]
fn omega_admits_no_x_type_orientation_exhaustive() {
    let lattice = datasets::omega_lattice();
    let skeleton = lattice.skeleton().unwrap();
    let n = 10usize;
    let mut seen = std::collections::HashSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let (mut uso, mut hk, mut x_type) = (0u64, 0u64, 0u64);
    loop {
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut mask = 0u32;
        for (k, &(u, v)) in skeleton.iter().enumerate() {
            if pos[u] < pos[v] {
                mask |= 1 << k;
            }
        }
        if seen.insert(mask) {
            let edges: Vec<(usize, usize)> = skeleton
                .iter()
                .map(|&(u, v)| if pos[u] < pos[v] { (u, v) } else { (v, u) })
                .collect();
            let g = PolytopalDigraph::new(lattice.clone(), edges).unwrap();
            if g.is_uso().0 {
                uso += 1;
                if g.holt_klee().0 {
                    hk += 1;
                    if !shelling_property_exists(&g) {
                        x_type += 1;
                    }
                }
            }
        }
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    println!(
        "acyclic orientations: {}, USO: {uso}, USO+HK: {hk}, X-type: {x_type}",
        seen.len()
    );
    assert_eq!(seen.len(), 122_856);
    assert_eq!(uso, 29_952);
    assert_eq!(hk, 23_376);
    assert_eq!(x_type, 0);
}
