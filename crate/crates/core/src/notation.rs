//! Text notation: partitions and multipartitions as JSON arrays (`[2,1]`,
//! `[[2],[1,1],[]]`), compositions as parenthesized lists (`(3,1,0,2,3)`).

use crate::error::{Error, Result};
use crate::multipartition::Multipartition;
use crate::partition::{Composition, Partition};

pub fn parse_partition(text: &str) -> Result<Partition> {
    let parts: Vec<usize> =
        serde_json::from_str(text.trim()).map_err(|e| Error::Parse(format!("partition {text:?}: {e}")))?;
    Partition::new(parts)
}

pub fn parse_multipartition(text: &str) -> Result<Multipartition> {
    let parts: Vec<Vec<usize>> =
        serde_json::from_str(text.trim()).map_err(|e| Error::Parse(format!("multipartition {text:?}: {e}")))?;
    Multipartition::from_parts(parts)
}

/// A `;`-separated list of partitions, e.g. `[2,1];[1];[]`.
pub fn parse_partition_list(text: &str) -> Result<Vec<Partition>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';').map(parse_partition).collect()
}

pub fn parse_composition(text: &str) -> Result<Composition> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("composition {text:?}: expected (a,b,...)")))?;
    if inner.trim().is_empty() {
        return Ok(Composition::new(Vec::new()));
    }
    let parts = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("composition {text:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Composition::new(parts))
}
