//! Text and JSON rendering of reports, with vertex and facet indices
//! resolved to their names.

use polytopal::crosspolytope::BoundsRow;
use polytopal::crosspolytope::Census;
use polytopal::digraph::{PolytopalDigraph, PropertyReport, Witness};
use polytopal::lattice::FaceLattice;
use polytopal::shelling::{FailReason, ShellingVerdict};
use polytopal::IndexSet;
use serde_json::{json, Value};

fn names(lat: &FaceLattice, set: IndexSet) -> Vec<String> {
    set.iter().map(|v| lat.vertex_name(v).to_string()).collect()
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn print_report(name: &str, g: &PolytopalDigraph, r: &PropertyReport) {
    let lat = g.lattice();
    println!(
        "polytope: {name} (dimension {}, {} vertices, {} facets)",
        lat.dimension(),
        lat.atoms().len(),
        lat.facet_count()
    );
    println!("acyclic:                 {}", flag(r.acyclic));
    println!("unique sink orientation: {}", flag(r.uso));
    println!("holt-klee:               {}", flag(r.holt_klee));
    println!("shelling property:       {}", flag(r.shelling));
    println!("x-type:                  {}", flag(r.x_type));
    match &r.witness {
        None => {}
        Some(Witness::Cycle(cycle)) => {
            let path: Vec<String> = cycle.iter().map(|&v| lat.vertex_name(v).into()).collect();
            println!("witness: directed cycle {}", path.join(" -> "));
        }
        Some(Witness::FaceSourceSink {
            face,
            sources,
            sinks,
        }) => {
            println!(
                "witness: face {{{}}} has sources {{{}}} and sinks {{{}}}",
                names(lat, *face).join(","),
                sources
                    .iter()
                    .map(|&v| lat.vertex_name(v))
                    .collect::<Vec<_>>()
                    .join(","),
                sinks
                    .iter()
                    .map(|&v| lat.vertex_name(v))
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        Some(Witness::DisjointPaths {
            face,
            needed,
            found,
        }) => {
            println!(
                "witness: face {{{}}} carries {found} disjoint paths, needs {needed}",
                names(lat, *face).join(",")
            );
        }
        Some(Witness::Shelling { order, verdict }) => {
            let sort: Vec<&str> = order.iter().map(|&v| lat.vertex_name(v)).collect();
            println!(
                "witness: polar facet order {} fails at position {:?} ({:?})",
                sort.join(","),
                verdict.failing_index,
                verdict.failing_reason
            );
        }
    }
}

pub fn report_json(name: &str, g: &PolytopalDigraph, r: &PropertyReport) -> Value {
    let lat = g.lattice();
    let witness = match &r.witness {
        None => Value::Null,
        Some(Witness::Cycle(cycle)) => json!({
            "kind": "cycle",
            "vertices": cycle.iter().map(|&v| lat.vertex_name(v)).collect::<Vec<_>>(),
        }),
        Some(Witness::FaceSourceSink {
            face,
            sources,
            sinks,
        }) => json!({
            "kind": "face_source_sink",
            "face": names(lat, *face),
            "sources": sources.iter().map(|&v| lat.vertex_name(v)).collect::<Vec<_>>(),
            "sinks": sinks.iter().map(|&v| lat.vertex_name(v)).collect::<Vec<_>>(),
        }),
        Some(Witness::DisjointPaths {
            face,
            needed,
            found,
        }) => json!({
            "kind": "disjoint_paths",
            "face": names(lat, *face),
            "needed": needed,
            "found": found,
        }),
        Some(Witness::Shelling { order, verdict }) => json!({
            "kind": "shelling",
            "order": order.iter().map(|&v| lat.vertex_name(v)).collect::<Vec<_>>(),
            "failing_index": verdict.failing_index,
            "failing_reason": verdict.failing_reason.map(reason_str),
        }),
    };
    json!({
        "polytope": name,
        "dimension": lat.dimension(),
        "acyclic": r.acyclic,
        "uso": r.uso,
        "holt_klee": r.holt_klee,
        "shelling": r.shelling,
        "x_type": r.x_type,
        "witness": witness,
    })
}

fn reason_str(r: FailReason) -> &'static str {
    match r {
        FailReason::EmptyIntersection => "empty_intersection",
        FailReason::NotPureCodimOne => "not_pure_codim_one",
        FailReason::NotBeginningSegment => "not_beginning_segment",
    }
}

pub fn print_verdict(lat: &FaceLattice, order: &[usize], v: &ShellingVerdict) {
    let facet_names: Vec<&str> = order.iter().map(|&j| lat.facet_name(j)).collect();
    println!("order: {}", facet_names.join(","));
    if v.is_shelling {
        println!("verdict: shelling");
    } else {
        let j = v.failing_index.unwrap();
        println!(
            "verdict: NOT a shelling (fails at position {j}, facet {}, {:?})",
            facet_names[j - 1],
            v.failing_reason.unwrap()
        );
        let faces = polytopal::shelling::boundary_intersection(lat, order, j);
        for (set, dim) in faces {
            println!(
                "  boundary face {{{}}} (dimension {dim})",
                names(lat, set).join(",")
            );
        }
    }
}

pub fn verdict_json(lat: &FaceLattice, order: &[usize], v: &ShellingVerdict) -> Value {
    let mut doc = json!({
        "order": order.iter().map(|&j| lat.facet_name(j)).collect::<Vec<_>>(),
        "is_shelling": v.is_shelling,
        "failing_index": v.failing_index,
        "failing_reason": v.failing_reason.map(reason_str),
    });
    if let Some(j) = v.failing_index {
        let faces: Vec<Value> = polytopal::shelling::boundary_intersection(lat, order, j)
            .into_iter()
            .map(|(set, dim)| json!({ "vertices": names(lat, set), "dimension": dim }))
            .collect();
        doc["boundary_intersection"] = Value::Array(faces);
    }
    doc
}

pub fn census_json(c: &Census) -> Value {
    json!({
        "d": c.d,
        "total": c.total.to_string(),
        "total_formula": c.total_formula.to_string(),
        "good": c.good.to_string(),
        "good_recurrence": c.good_recurrence.to_string(),
        "uso": c.uso.to_string(),
        "uso_closed_form": c.uso_closed_form.to_string(),
        "uso_inclusion_exclusion": c.uso_inclusion_exclusion.to_string(),
        "uso_verified": c.uso_verified.as_ref().map(|x| x.to_string()),
        "holt_klee_verified": c.holt_klee_verified.as_ref().map(|x| x.to_string()),
        "x_type": c.x_type.to_string(),
        "consistent": c.consistent(),
    })
}

pub fn bounds_json(r: &BoundsRow) -> Value {
    json!({
        "d": r.d,
        "a": r.a.to_string(),
        "b": r.b.to_string(),
        "lower": r.lower.to_string(),
        "upper": r.upper.to_string(),
        "gap": r.gap.to_string(),
        "lower_ok": r.lower_ok,
        "upper_ok": r.upper_ok,
        "gap_ok": r.gap_ok,
        "ratio_ok": r.ratio_ok,
        "pass": r.all_ok(),
    })
}
