use std::collections::BTreeMap;

use sha2::{Digest, Sha256};
use zerocover::{Error, Result};

/// Reads input files and remembers a digest of each for the report.
#[derive(Default)]
pub struct Inputs {
    pub digests: BTreeMap<String, String>,
}

impl Inputs {
    pub fn read(&mut self, path: &str) -> Result<String> {
        let bytes = std::fs::read(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
        self.digests.insert(path.to_string(), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes).map_err(|_| Error::Input(format!("{path}: not UTF-8")))
    }
}

/// Comma-separated 1-based indices; the empty string is the empty set.
pub fn parse_indices(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad index {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices() {
        assert_eq!(parse_indices("1, 3,4").unwrap(), vec![1, 3, 4]);
        assert_eq!(parse_indices("").unwrap(), Vec::<usize>::new());
        assert!(parse_indices("1,x").is_err());
    }
}
