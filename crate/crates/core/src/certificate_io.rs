//! Canonical, content-addressed certificate documents.
//!
//! Canonical form is compact JSON with object keys sorted, integers bare
//! and rationals as `"num/den"` strings. The digest is SHA-256 over the
//! canonical form of the document with the `digest` field removed.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exponent::DeltaReport;
use crate::forcing::ForcingCertificate;

pub const SCHEMA_VERSION: &str = "1";
pub const DIGEST_ALG: &str = "sha256";
pub const FILE_EXTENSION: &str = ".fcert.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub digest_alg: String,
    pub group_spec: String,
    pub certificate: ForcingCertificate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_report: Option<DeltaReport>,
    pub digest: String,
}

impl CertificateDocument {
    pub fn new(certificate: ForcingCertificate, delta_report: Option<DeltaReport>) -> Self {
        let mut doc = CertificateDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            digest_alg: DIGEST_ALG.to_string(),
            group_spec: certificate.group_spec.clone(),
            certificate,
            delta_report,
            digest: String::new(),
        };
        doc.digest = doc.compute_digest();
        doc
    }

    pub fn compute_digest(&self) -> String {
        let mut value = serde_json::to_value(self).expect("document serializes");
        digest_of(&mut value)
    }
}

fn digest_of(value: &mut Value) -> String {
    if let Value::Object(map) = value {
        map.remove("digest");
    }
    hex::encode(Sha256::digest(canonical_bytes(value)))
}

fn canonical_bytes(value: &Value) -> Vec<u8> {
    // serde_json's default map is ordered by key
    serde_json::to_vec(value).expect("in-memory JSON value serializes")
}

/// Canonical JSON text of any serializable value.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("value serializes");
    String::from_utf8(canonical_bytes(&v)).expect("JSON is UTF-8")
}

pub fn emit(doc: &CertificateDocument) -> Vec<u8> {
    canonical_bytes(&serde_json::to_value(doc).expect("document serializes"))
}

fn byte_offset(bytes: &[u8], line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = bytes
        .split(|&b| b == b'\n')
        .take(line - 1)
        .map(|l| l.len() + 1)
        .sum();
    (line_start + column.saturating_sub(1)).min(bytes.len())
}

pub fn parse(bytes: &[u8]) -> Result<CertificateDocument> {
    let mut value: Value = serde_json::from_slice(bytes).map_err(|e| Error::Malformed {
        offset: byte_offset(bytes, e.line(), e.column()),
        reason: e.to_string(),
    })?;
    let field = |name: &str| value.get(name).and_then(Value::as_str).map(str::to_owned);
    let schema = field("schema_version").ok_or_else(|| Error::Malformed {
        offset: 0,
        reason: "missing string field `schema_version`".into(),
    })?;
    if schema != SCHEMA_VERSION {
        return Err(Error::SchemaVersionUnknown(schema));
    }
    match field("digest_alg") {
        Some(alg) if alg == DIGEST_ALG => {}
        other => {
            return Err(Error::Malformed {
                offset: 0,
                reason: format!("unsupported digest_alg {other:?}"),
            })
        }
    }
    let stored = field("digest").ok_or_else(|| Error::Malformed {
        offset: 0,
        reason: "missing string field `digest`".into(),
    })?;
    let doc: CertificateDocument =
        serde_json::from_value(value.clone()).map_err(|e| Error::Malformed {
            offset: 0,
            reason: e.to_string(),
        })?;
    let computed = digest_of(&mut value);
    if computed != stored {
        return Err(Error::DigestMismatch { stored, computed });
    }
    if doc.group_spec != doc.certificate.group_spec {
        return Err(Error::Malformed {
            offset: 0,
            reason: "document and certificate name different groups".into(),
        });
    }
    Ok(doc)
}

pub fn write_file(path: &Path, doc: &CertificateDocument) -> std::io::Result<()> {
    let mut bytes = emit(doc);
    bytes.push(b'\n');
    std::fs::write(path, bytes)
}

/// Reads a document; I/O failures surface as `Malformed` at offset 0.
pub fn read_file(path: &Path) -> Result<CertificateDocument> {
    let bytes = std::fs::read(path).map_err(|e| Error::Malformed {
        offset: 0,
        reason: format!("{}: {e}", path.display()),
    })?;
    let trimmed = bytes.strip_suffix(b"\n").unwrap_or(&bytes);
    parse(trimmed)
}
