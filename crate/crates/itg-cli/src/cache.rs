//! Append-only JSON-lines result cache, keyed by the canonical (C4, C6)
//! pair of the queried curve plus the artifact version. A hit returns the
//! stored report verbatim, so repeated identical queries are byte-identical.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use anyhow::Result;
use itg_core::ec::WeierstrassCurve;
use serde::{Deserialize, Serialize};

use crate::report::{ClassReport, ARTIFACT_VERSION};

#[derive(Debug, Serialize, Deserialize)]
struct CacheRecord {
    key: String,
    version: String,
    report: ClassReport,
}

pub fn cache_key(e: &WeierstrassCurve) -> String {
    let (c4, c6) = e.canonical_c4c6();
    format!("{c4}:{c6}")
}

pub fn lookup(path: &Path, key: &str) -> Option<ClassReport> {
    let file = std::fs::File::open(path).ok()?;
    let mut hit = None;
    for line in BufReader::new(file).lines() {
        let Ok(line) = line else { break };
        if line.trim().is_empty() {
            continue;
        }
        if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
            if rec.key == key && rec.version == ARTIFACT_VERSION {
                hit = Some(rec.report);
            }
        }
    }
    hit
}

pub fn append(path: &Path, key: &str, report: &ClassReport) -> Result<()> {
    let rec = CacheRecord {
        key: key.to_string(),
        version: ARTIFACT_VERSION.to_string(),
        report: report.clone(),
    };
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(f, "{}", serde_json::to_string(&rec)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("itg-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_file(&dir);
        let e = WeierstrassCurve::from_ai([0, -1, 1, 0, 0]).unwrap();
        let cls = itg_core::isogeny::isogeny_class(&e).unwrap();
        let rep = crate::report::class_report(&cls).unwrap();
        let key = cache_key(&e);
        assert!(lookup(&dir, &key).is_none());
        append(&dir, &key, &rep).unwrap();
        let hit = lookup(&dir, &key).unwrap();
        assert_eq!(hit, rep);
        // isomorphic representative shares the key
        let key2 = cache_key(&e.canonical_model());
        assert_eq!(key, key2);
        let _ = std::fs::remove_file(&dir);
    }
}
