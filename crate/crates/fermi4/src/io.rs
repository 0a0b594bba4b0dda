//! Versioned JSON schemas for state files and analysis reports.
//!
//! Complex numbers are serialized as `[re, im]` pairs; serde_json prints
//! the shortest decimal that parses back to the identical f64, so
//! write -> read -> write is byte-stable. Unknown fields are rejected.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::decomposition::CanonicalForm;
use crate::linalg::CMatrix;
use crate::measures::EntanglementReport;
use crate::state::FermionState;

pub const STATE_FORMAT: &str = "fermi-state-v1";
pub const REPORT_FORMAT: &str = "fermi-report-v1";

/// Errors of the file layer, kept separate from the numerical errors.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

impl From<crate::Error> for IoError {
    fn from(e: crate::Error) -> Self {
        IoError::Validation(e.to_string())
    }
}

pub type Cx = [f64; 2];

fn cx(z: Complex64) -> Cx {
    [z.re, z.im]
}

fn from_cx(p: Cx) -> Complex64 {
    Complex64::new(p[0], p[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Pluecker,
    Matrix,
    Fields,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldsPayload {
    pub e: [Cx; 3],
    pub b: [Cx; 3],
}

/// On-disk state: exactly one payload, matching the representation tag.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub format: String,
    pub representation: Representation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pluecker: Option<[Cx; 6]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<[[Cx; 4]; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fields: Option<FieldsPayload>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub normalize: bool,
}

impl StateFile {
    pub fn from_pluecker(s: &FermionState) -> Self {
        StateFile {
            format: STATE_FORMAT.to_string(),
            representation: Representation::Pluecker,
            pluecker: Some(s.pluecker().map(cx)),
            matrix: None,
            fields: None,
            normalize: false,
        }
    }

    /// Validates the schema and builds the state.
    pub fn to_state(&self) -> Result<FermionState, IoError> {
        if self.format != STATE_FORMAT {
            return Err(IoError::Parse(format!(
                "unsupported format tag {:?} (expected {STATE_FORMAT:?})",
                self.format
            )));
        }
        let payloads = [
            self.pluecker.is_some(),
            self.matrix.is_some(),
            self.fields.is_some(),
        ];
        if payloads.iter().filter(|&&p| p).count() != 1 {
            return Err(IoError::Parse(
                "exactly one payload (pluecker | matrix | fields) must be present".into(),
            ));
        }
        let state = match self.representation {
            Representation::Pluecker => {
                let amps = self
                    .pluecker
                    .ok_or_else(|| IoError::Parse("representation/payload mismatch".into()))?;
                FermionState::from_pluecker(amps.map(from_cx), self.normalize)?
            }
            Representation::Matrix => {
                let m = self
                    .matrix
                    .ok_or_else(|| IoError::Parse("representation/payload mismatch".into()))?;
                let cm = CMatrix::from_fn(4, 4, |i, j| from_cx(m[i][j]));
                FermionState::from_matrix(cm, self.normalize)?
            }
            Representation::Fields => {
                let f = self
                    .fields
                    .as_ref()
                    .ok_or_else(|| IoError::Parse("representation/payload mismatch".into()))?;
                FermionState::from_fields(
                    &crate::state::FieldPair {
                        e: f.e.map(from_cx),
                        b: f.b.map(from_cx),
                    },
                    self.normalize,
                )?
            }
        };
        Ok(state)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    pub validation: f64,
    pub reconstruction: f64,
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            validation: 1e-10,
            reconstruction: 1e-9,
            rank: 1e-8,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumSection {
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSection {
    pub eta: f64,
    pub spectrum: SpectrumSection,
    pub von_neumann: f64,
    pub renyi: std::collections::BTreeMap<u32, f64>,
    pub geodesic: f64,
    pub slater_rank: u8,
    pub on_quadric: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CanonicalSection {
    pub v: [[Cx; 4]; 4],
    pub r1: f64,
    pub r2: f64,
    pub residual: f64,
}

/// Machine-readable result of an `analyze` or `decompose` run.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub format: String,
    pub tool_version: String,
    pub input_digest: String,
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<AnalysisSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalSection>,
}

impl ReportFile {
    pub fn new(input_bytes: &[u8]) -> Self {
        ReportFile {
            format: REPORT_FORMAT.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest(input_bytes),
            tolerances: Tolerances::default(),
            analysis: None,
            canonical: None,
        }
    }

    pub fn with_analysis(mut self, report: &EntanglementReport) -> Self {
        self.analysis = Some(AnalysisSection {
            eta: report.eta,
            spectrum: SpectrumSection {
                lambda_plus: report.spectrum.lambda_plus,
                lambda_minus: report.spectrum.lambda_minus,
            },
            von_neumann: report.von_neumann,
            renyi: report.renyi.clone(),
            geodesic: report.geodesic,
            slater_rank: report.slater_rank,
            on_quadric: report.on_quadric,
        });
        self
    }

    pub fn with_canonical(mut self, form: &CanonicalForm, residual: f64) -> Self {
        let mut v = [[cx(Complex64::new(0.0, 0.0)); 4]; 4];
        for (i, row) in v.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = cx(form.v[(i, j)]);
            }
        }
        self.canonical = Some(CanonicalSection {
            v,
            r1: form.r1,
            r2: form.r2,
            residual,
        });
        self
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}

pub fn to_json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("schema types serialize");
    out.push(b'\n');
    out
}

pub fn read_state_file(path: &std::path::Path) -> Result<(StateFile, FermionState, Vec<u8>), IoError> {
    let bytes = std::fs::read(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let file: StateFile =
        serde_json::from_slice(&bytes).map_err(|e| IoError::Parse(e.to_string()))?;
    let state = file.to_state()?;
    Ok((file, state, bytes))
}

pub fn write_file(path: &std::path::Path, bytes: &[u8]) -> Result<(), IoError> {
    std::fs::write(path, bytes).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}
