//! Text format: one entry per line, `<r1>[,<r2>,...] mod <n> [weight]`.
//! Blank lines and lines starting with `#` are ignored.

use super::{ResidueClass, ResidueSystem};
use crate::error::{Error, Result};

pub fn parse_cover(text: &str) -> Result<ResidueSystem> {
    let mut classes = Vec::new();
    let mut weights = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Input(format!("line {}: {what}: {raw:?}", lineno + 1));
        let (residues, rest) = line.split_once(" mod ").ok_or_else(|| bad("missing `mod`"))?;
        let mut tail = rest.split_whitespace();
        let modulus: u64 = tail
            .next()
            .ok_or_else(|| bad("missing modulus"))?
            .parse()
            .map_err(|_| bad("bad modulus"))?;
        if modulus == 0 {
            return Err(bad("modulus must be positive"));
        }
        let weight: i64 = match tail.next() {
            Some(w) => w.parse().map_err(|_| bad("bad weight"))?,
            None => 1,
        };
        if tail.next().is_some() {
            return Err(bad("trailing tokens"));
        }
        for r in residues.split(',') {
            let r: i64 = r.trim().parse().map_err(|_| bad("bad residue"))?;
            classes.push(ResidueClass::new(r, modulus)?);
            weights.push(weight);
        }
    }
    ResidueSystem::with_weights(classes, weights)
}

/// One normalized class per line; the weight is written only when it is not 1.
pub fn serialize_cover(system: &ResidueSystem) -> String {
    let mut out = String::new();
    for (c, &w) in system.classes().iter().zip(system.weights()) {
        if w == 1 {
            out.push_str(&format!("{} mod {}\n", c.residue(), c.modulus()));
        } else {
            out.push_str(&format!("{} mod {} {}\n", c.residue(), c.modulus(), w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const CHOI: &str = "\
# Choi's exact 2-cover
1 mod 2
0 mod 3
2 mod 6
0,4,6,8 mod 10
1, 2, 4, 7, 10, 13 mod 15

5,11,12,22,23,29 mod 30
";

    #[test]
    fn parses_grouped_lines() {
        assert_eq!(parse_cover(CHOI).unwrap(), ResidueSystem::choi());
    }

    #[test]
    fn weights_and_normalization() {
        let a = parse_cover("-1,5 mod 3 4\n7 mod 2\n").unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.weights(), &[4, 4, 1]);
        assert_eq!(a.classes()[0].residue(), 2);
        assert_eq!(serialize_cover(&a), "2 mod 3 4\n2 mod 3 4\n1 mod 2\n");
    }

    #[test]
    fn rejects_malformed_lines() {
        for bad in ["1 mod 0", "1 mod", "x mod 3", "1 mod 3 2 9", "1 2 3", "", "# only comment"] {
            assert!(matches!(parse_cover(bad), Err(Error::Input(_))), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn round_trip(entries in proptest::collection::vec((-50i64..50, 1u64..40, -3i64..4), 1..20)) {
            let classes = entries.iter().map(|&(a, n, _)| ResidueClass::new(a, n).unwrap()).collect();
            let weights = entries.iter().map(|&(_, _, w)| w).collect();
            let a = ResidueSystem::with_weights(classes, weights).unwrap();
            let text = serialize_cover(&a);
            prop_assert_eq!(parse_cover(&text).unwrap(), a.clone());
            prop_assert_eq!(serialize_cover(&parse_cover(&text).unwrap()), text);
        }
    }
}
