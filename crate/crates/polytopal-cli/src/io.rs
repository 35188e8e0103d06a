//! Input loading: embedded datasets and the JSON document formats.

use std::path::PathBuf;

use polytopal::datasets;
use polytopal::digraph::PolytopalDigraph;
use polytopal::geometry::{Halfspace, RationalPoint};
use polytopal::json::{GeometryDoc, OrientationDoc, PolytopeDoc};
use polytopal::lattice::build_face_lattice;
use polytopal::VertexFacetIncidence;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Lib(polytopal::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(s) => write!(f, "{s}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "{e}"),
        }
    }
}

impl From<polytopal::Error> for CliError {
    fn from(e: polytopal::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

fn dataset_or_err(name: &str) -> Result<datasets::Dataset, CliError> {
    datasets::dataset(name).ok_or_else(|| {
        CliError::Validation(format!(
            "unknown dataset {name:?}; available: {}",
            datasets::DATASET_NAMES.join(", ")
        ))
    })
}

/// Load a polytope from a dataset name or a JSON file.
pub fn load_polytope(
    dataset: &Option<String>,
    path: &Option<PathBuf>,
) -> Result<VertexFacetIncidence, CliError> {
    match (dataset, path) {
        (Some(name), _) => Ok(dataset_or_err(name)?.incidence),
        (None, Some(p)) => {
            let text = std::fs::read_to_string(p)?;
            let doc: PolytopeDoc = serde_json::from_str(&text)?;
            Ok(doc.to_incidence()?)
        }
        (None, None) => Err(CliError::Validation(
            "provide a polytope file or --dataset".into(),
        )),
    }
}

/// Load a polytope plus orientation, either from one dataset or from a
/// pair of JSON files. The orientation document must name the polytope
/// it belongs to (the polytope's name or its path).
pub fn load_digraph(
    dataset: &Option<String>,
    polytope: &Option<PathBuf>,
    orientation: &Option<PathBuf>,
) -> Result<(String, PolytopalDigraph), CliError> {
    if let Some(name) = dataset {
        let ds = dataset_or_err(name)?;
        let edges = ds
            .orientation
            .ok_or_else(|| CliError::Validation(format!("dataset {name:?} has no orientation")))?;
        let lattice = build_face_lattice(&ds.incidence)?;
        return Ok((name.clone(), PolytopalDigraph::new(lattice, edges)?));
    }
    let (Some(ppath), Some(opath)) = (polytope, orientation) else {
        return Err(CliError::Validation(
            "provide a polytope and an orientation file, or --dataset".into(),
        ));
    };
    let text = std::fs::read_to_string(ppath)?;
    let pdoc: PolytopeDoc = serde_json::from_str(&text)?;
    let text = std::fs::read_to_string(opath)?;
    let odoc: OrientationDoc = serde_json::from_str(&text)?;
    if !odoc.polytope.is_empty()
        && odoc.polytope != pdoc.name
        && odoc.polytope != ppath.display().to_string()
    {
        return Err(CliError::Validation(format!(
            "orientation belongs to {:?}, not to {:?}",
            odoc.polytope, pdoc.name
        )));
    }
    let incidence = pdoc.to_incidence()?;
    let lattice = build_face_lattice(&incidence)?;
    Ok((pdoc.name, PolytopalDigraph::new(lattice, odoc.edges)?))
}

/// Load exact geometry from a dataset name or a JSON file.
pub fn load_geometry(
    dataset: &Option<String>,
    path: &Option<PathBuf>,
) -> Result<(Vec<RationalPoint>, Vec<Halfspace>), CliError> {
    match (dataset, path) {
        (Some(name), _) => dataset_or_err(name)?
            .geometry
            .ok_or_else(|| CliError::Validation(format!("dataset {name:?} has no geometry"))),
        (None, Some(p)) => {
            let text = std::fs::read_to_string(p)?;
            let doc: GeometryDoc = serde_json::from_str(&text)?;
            Ok(doc.to_geometry()?)
        }
        (None, None) => Err(CliError::Validation(
            "provide a geometry file or --dataset".into(),
        )),
    }
}
