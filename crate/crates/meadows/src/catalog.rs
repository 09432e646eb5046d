//! Catalog persistence: versioned JSON files for ring, lattice and meadow
//! lists, with validated reload and atomic writes.

use crate::build::DirectedLattice;
use crate::hom::{canonical_form, UnitalHom};
use crate::lattice::Lattice;
use crate::ring::RingTable;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

/// Identifies the generating code; a mismatch invalidates cached files.
pub const GENERATOR_VERSION: &str = concat!("meadows-", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed catalog file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported format version {found} (expected {expected})")]
    FormatVersion { found: u32, expected: u32 },
    #[error("catalog kind is {found:?}, expected {expected:?}")]
    Kind { found: String, expected: String },
    #[error("entry {index} is invalid: {reason}")]
    BadEntry { index: usize, reason: String },
}

#[derive(Debug, Serialize, Deserialize)]
struct CatalogFile {
    kind: String,
    version: u32,
    generator: String,
    entries: Vec<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingJson {
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl From<&RingTable> for RingJson {
    fn from(r: &RingTable) -> Self {
        RingJson {
            order: r.order(),
            zero: r.zero(),
            one: r.one(),
            add: r.add_rows(),
            mul: r.mul_rows(),
            name: r.name().map(str::to_string),
        }
    }
}

impl RingJson {
    pub fn validate(&self) -> Result<RingTable, String> {
        RingTable::new(
            self.order,
            self.add.clone(),
            self.mul.clone(),
            self.zero,
            self.one,
            self.name.clone(),
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub size: usize,
    pub meet: Vec<Vec<usize>>,
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        LatticeJson {
            size: l.size(),
            meet: l.meet_rows(),
        }
    }
}

impl LatticeJson {
    pub fn validate(&self) -> Result<Lattice, String> {
        Lattice::from_meet(self.size, self.meet.clone()).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeadowJson {
    pub lattice: LatticeJson,
    pub vertices: Vec<RingJson>,
    pub edges: Vec<EdgeJson>,
}

impl From<&DirectedLattice> for MeadowJson {
    fn from(dl: &DirectedLattice) -> Self {
        MeadowJson {
            lattice: dl.lattice().into(),
            vertices: dl.rings().iter().map(RingJson::from).collect(),
            edges: dl
                .covers()
                .iter()
                .zip(dl.edge_homs())
                .map(|(&(hi, lo), h)| EdgeJson {
                    from: hi,
                    to: lo,
                    map: h.map().to_vec(),
                })
                .collect(),
        }
    }
}

impl MeadowJson {
    pub fn validate(&self) -> Result<DirectedLattice, String> {
        let lattice = self.lattice.validate()?;
        let rings: Vec<RingTable> = self
            .vertices
            .iter()
            .map(|r| r.validate())
            .collect::<Result<_, _>>()?;
        let covers = lattice.hasse_covers();
        if covers.len() != self.edges.len() {
            return Err(format!(
                "expected {} cover edges, file has {}",
                covers.len(),
                self.edges.len()
            ));
        }
        let mut homs = Vec::with_capacity(covers.len());
        for &(hi, lo) in &covers {
            let e = self
                .edges
                .iter()
                .find(|e| e.from == hi && e.to == lo)
                .ok_or(format!("missing edge ({hi}, {lo})"))?;
            let h = UnitalHom::new(&rings[hi], &rings[lo], e.map.clone())
                .map_err(|e| e.to_string())?;
            homs.push(h);
        }
        DirectedLattice::new(lattice, rings, homs).map_err(|e| e.to_string())
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CatalogError> {
    let tmp = path.with_extension("tmp");
    let wrap = |source: std::io::Error| CatalogError::Io {
        path: path.display().to_string(),
        source,
    };
    fs::write(&tmp, bytes).map_err(wrap)?;
    fs::rename(&tmp, path).map_err(wrap)
}

fn save_catalog(
    kind: &str,
    entries: Vec<serde_json::Value>,
    path: &Path,
) -> Result<(), CatalogError> {
    let file = CatalogFile {
        kind: kind.to_string(),
        version: FORMAT_VERSION,
        generator: GENERATOR_VERSION.to_string(),
        entries,
    };
    let mut bytes = serde_json::to_vec_pretty(&file)?;
    bytes.push(b'\n');
    write_atomic(path, &bytes)
}

fn load_catalog(kind: &str, path: &Path) -> Result<CatalogFile, CatalogError> {
    let bytes = fs::read(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: CatalogFile = serde_json::from_slice(&bytes)?;
    if file.version != FORMAT_VERSION {
        return Err(CatalogError::FormatVersion {
            found: file.version,
            expected: FORMAT_VERSION,
        });
    }
    if file.kind != kind {
        return Err(CatalogError::Kind {
            found: file.kind,
            expected: kind.to_string(),
        });
    }
    Ok(file)
}

/// Whether a cached file exists with the current generator version.
pub fn cache_is_fresh(kind: &str, path: &Path) -> bool {
    load_catalog(kind, path).map(|f| f.generator == GENERATOR_VERSION).unwrap_or(false)
}

pub fn save_rings(rings: &[RingTable], path: &Path) -> Result<(), CatalogError> {
    let mut keyed: Vec<(Vec<u8>, &RingTable)> =
        rings.iter().map(|r| (canonical_form(r), r)).collect();
    keyed.sort_by(|a, b| (a.1.order(), &a.0).cmp(&(b.1.order(), &b.0)));
    let entries = keyed
        .iter()
        .map(|(_, r)| serde_json::to_value(RingJson::from(*r)))
        .collect::<Result<_, _>>()?;
    save_catalog("rings", entries, path)
}

pub fn load_rings(path: &Path) -> Result<Vec<RingTable>, CatalogError> {
    let file = load_catalog("rings", path)?;
    file.entries
        .into_iter()
        .enumerate()
        .map(|(index, v)| {
            let rj: RingJson = serde_json::from_value(v)?;
            rj.validate().map_err(|reason| CatalogError::BadEntry { index, reason })
        })
        .collect()
}

pub fn save_lattices(lattices: &[Lattice], path: &Path) -> Result<(), CatalogError> {
    let mut keyed: Vec<(Vec<u8>, &Lattice)> =
        lattices.iter().map(|l| (l.canonical_key(), l)).collect();
    keyed.sort_by(|a, b| (a.1.size(), &a.0).cmp(&(b.1.size(), &b.0)));
    let entries = keyed
        .iter()
        .map(|(_, l)| serde_json::to_value(LatticeJson::from(*l)))
        .collect::<Result<_, _>>()?;
    save_catalog("lattices", entries, path)
}

pub fn load_lattices(path: &Path) -> Result<Vec<Lattice>, CatalogError> {
    let file = load_catalog("lattices", path)?;
    file.entries
        .into_iter()
        .enumerate()
        .map(|(index, v)| {
            let lj: LatticeJson = serde_json::from_value(v)?;
            lj.validate().map_err(|reason| CatalogError::BadEntry { index, reason })
        })
        .collect()
}

pub fn save_meadows(meadows: &[DirectedLattice], path: &Path) -> Result<(), CatalogError> {
    // sort by the serialized entry, a stable total key
    let mut entries: Vec<serde_json::Value> = meadows
        .iter()
        .map(|dl| serde_json::to_value(MeadowJson::from(dl)))
        .collect::<Result<_, _>>()?;
    entries.sort_by_key(|v| serde_json::to_string(v).expect("value serializes"));
    save_catalog("meadows", entries, path)
}

pub fn load_meadows(path: &Path) -> Result<Vec<DirectedLattice>, CatalogError> {
    let file = load_catalog("meadows", path)?;
    file.entries
        .into_iter()
        .enumerate()
        .map(|(index, v)| {
            let mj: MeadowJson = serde_json::from_value(v)?;
            mj.validate().map_err(|reason| CatalogError::BadEntry { index, reason })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_enum::enumerate_lattices;
    use crate::ring_enum::brute_force_rings;

    #[test]
    fn ring_catalog_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rings4.json");
        let cat = brute_force_rings(4, 8).unwrap();
        save_rings(&cat.classes, &path).unwrap();
        let loaded = load_rings(&path).unwrap();
        assert_eq!(loaded.len(), 4);
        let mut before: Vec<_> = cat.classes.iter().map(canonical_form).collect();
        let mut after: Vec<_> = loaded.iter().map(canonical_form).collect();
        before.sort();
        after.sort();
        assert_eq!(before, after);
        // byte-exact re-save
        let bytes1 = std::fs::read(&path).unwrap();
        save_rings(&loaded, &path).unwrap();
        let bytes2 = std::fs::read(&path).unwrap();
        assert_eq!(bytes1, bytes2);
    }

    #[test]
    fn version_tampering_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rings.json");
        let cat = brute_force_rings(2, 8).unwrap();
        save_rings(&cat.classes, &path).unwrap();
        let text = std::fs::read_to_string(&path)
            .unwrap()
            .replace("\"version\": 1", "\"version\": 99");
        std::fs::write(&path, text).unwrap();
        assert!(matches!(
            load_rings(&path),
            Err(CatalogError::FormatVersion { found: 99, .. })
        ));
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("latt.json");
        save_lattices(&enumerate_lattices(5, 8).unwrap(), &path).unwrap();
        assert!(matches!(load_rings(&path), Err(CatalogError::Kind { .. })));
        assert_eq!(load_lattices(&path).unwrap().len(), 5);
    }

    #[test]
    fn meadow_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("meadows.json");
        let config = crate::build::PipelineConfig::default();
        let dls = crate::build::enumerate_premeadows(5, &config).unwrap();
        assert_eq!(dls.len(), 5);
        save_meadows(&dls, &path).unwrap();
        let loaded = load_meadows(&path).unwrap();
        assert_eq!(loaded.len(), 5);
        for dl in &loaded {
            assert!(crate::build::check_composition(dl));
        }
    }

    #[test]
    fn corrupt_entry_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rings.json");
        let cat = brute_force_rings(4, 8).unwrap();
        save_rings(&cat.classes, &path).unwrap();
        let mut file: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        // zero = one is impossible in a ring of order 4
        file["entries"][0]["zero"] = file["entries"][0]["one"].clone();
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(matches!(load_rings(&path), Err(CatalogError::BadEntry { .. })));
    }
}
