use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use edgecolor_advice::graph::{parse_stream, serialize_stream, EdgeStream};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Writes to `path` via a temporary sibling and a rename, or to stdout.
pub fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            let tmp = p.with_extension("tmp");
            fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
            fs::rename(&tmp, p).with_context(|| format!("renaming to {}", p.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

pub struct LoadedStream {
    pub stream: EdgeStream,
    pub sha256: String,
}

/// Reads a stream file; the hash is over the canonical serialization so
/// comments and spacing do not change it.
pub fn load_stream(path: &Path) -> Result<LoadedStream> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let stream = parse_stream(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(LoadedStream { sha256: stream_hash(&stream), stream })
}

pub fn stream_hash(stream: &EdgeStream) -> String {
    hex::encode(Sha256::digest(serialize_stream(stream).as_bytes()))
}
