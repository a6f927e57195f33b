use super::{GroupElement, GroupShape};
use crate::error::{Error, Result};

/// `Σ (-1)^{|I|}` over `I ⊆ [1, d*(G)+1]` with `Σ_{s∈I} c_s = c`; the result
/// is checked to be divisible by `p`.
pub fn olson_signed_count(shape: &GroupShape, c: &GroupElement, seq: &[GroupElement]) -> Result<i64> {
    let p = shape
        .prime()
        .ok_or_else(|| Error::Hypothesis(format!("{} is not a p-group", shape.name())))?;
    let need = shape.d_star() + 1;
    if seq.len() as u64 != need {
        return Err(Error::Input(format!(
            "sequence length must be d*(G)+1 = {need}, got {}",
            seq.len()
        )));
    }
    if seq.len() > 40 {
        return Err(Error::Resource(format!("{} elements is too many to enumerate", seq.len())));
    }
    shape.check(c)?;
    for e in seq {
        shape.check(e)?;
    }
    let order = shape.order() as usize;
    // signed[x] = Σ (-1)^{|I|} over subsets of the prefix with sum x
    let mut signed = vec![0i64; order];
    signed[0] = 1;
    for e in seq {
        let prev = signed.clone();
        for (i, &v) in prev.iter().enumerate().filter(|(_, &v)| v != 0) {
            let s = shape.add(&shape.element_at(i), e)?;
            signed[shape.index_of(&s)] -= v;
        }
    }
    let count = signed[shape.index_of(c)];
    if count.rem_euclid(p as i64) != 0 {
        return Err(Error::violation(
            "the signed count is divisible by p",
            serde_json::json!({
                "group": shape.to_string(),
                "target": c,
                "sequence": seq,
                "count": count,
            }),
        ));
    }
    Ok(count)
}
