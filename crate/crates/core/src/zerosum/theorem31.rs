use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{membership_dim, scaled_table, SubsetPolynomial, ZeroSumInstance};
use crate::error::{Error, Result};
use crate::exactmath::CycloElement;
use crate::subsets::{mask_to_indices, SubsetSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem31Branch {
    /// more than `1 + Δ/d` residues of `P` mod `p`
    Inequality,
    /// the `p | P` subfamily has size `≠ 1` and its signed root-of-unity sum
    /// is divisible by `p`
    Congruence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem31Report {
    pub family_size: u64,
    pub residues: Vec<u64>,
    pub branch: Theorem31Branch,
    /// `|{I ∈ 𝓘 : p | P(I)}|`
    pub divisible_count: u64,
    /// `Σ (-1)^{|I|} ζ_N^e` over that subfamily, as coefficients of `ζ_N^e`
    pub signed_phase_counts: Vec<i128>,
}

/// Either `|{P(I) mod p : I ∈ 𝓘}| > 1 + Δ/d`, or the `p | P(I)` part of `𝓘`
/// has size other than 1 and
/// `Σ (-1)^{|I|} e^{2πi Σ_{s∈I} a_s m_s/n_s} ≡ 0 (mod p)` in `Z[ζ_N]`.
pub fn theorem31_check(inst: &ZeroSumInstance, poly: &SubsetPolynomial, delta: u64) -> Result<Theorem31Report> {
    let k = inst.len();
    let p = inst
        .shape
        .prime()
        .ok_or_else(|| Error::Hypothesis(format!("{} is not a p-group", inst.shape.name())))?;
    if poly.vars() != k {
        return Err(Error::Input(format!("polynomial in {} variables for {k} classes", poly.vars())));
    }
    let d = poly.declared_degree().max(1) as u64;
    if poly.total_degree() as u64 > d {
        return Err(Error::Input("polynomial exceeds its declared degree".into()));
    }
    inst.check_cover(delta)?;

    let n = inst.system.period()?;
    let q = inst.level_modulus()?;
    let (values, modulus, target) = membership_dim(&inst.system, &inst.alpha, q)?;
    let unit = (modulus / q) as i64;
    let mut space = SubsetSpace::new(k);
    let moduli = inst.shape.moduli();
    for (t, &m) in moduli.iter().enumerate() {
        let v: Vec<i128> = inst.elements.iter().map(|e| e.components()[t] as i128).collect();
        space = space.modular(&v, m, 0)?;
    }
    let group_target: Vec<i64> = inst.target.components().iter().map(|&c| c as i64).collect();
    let space = space
        .modular(&values, modulus, target)?
        .modular(&inst.system.phase_numerators(n), n, 0)?;

    let (denom, table) = scaled_table(&poly.indicator_table());
    let denom = denom.to_i128().ok_or_else(|| Error::Resource("denominator too large".into()))?;
    let table: Vec<(u64, i128)> = table
        .into_iter()
        .map(|(s, c)| c.to_i128().map(|c| (s, c)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Resource("polynomial coefficients too large".into()))?;

    let l = moduli.len();
    let target = target as i64;
    let mut family_size = 0u64;
    let mut residues = BTreeSet::new();
    let mut divisible_count = 0u64;
    let mut phases = vec![0i128; n as usize];
    let mut not_integral = None;
    space.walk(|mask, acc| {
        // Σ m_s/n_s - α ∈ Z
        if (acc[l] - target).rem_euclid(unit) != 0 {
            return;
        }
        let scaled: i128 = table
            .iter()
            .filter(|(s, _)| s & !mask == 0)
            .map(|(_, c)| c)
            .sum();
        if scaled % denom != 0 {
            not_integral.get_or_insert(mask);
            return;
        }
        if acc[..l] != group_target[..] || acc[l] != target {
            return;
        }
        family_size += 1;
        let r = (scaled / denom).rem_euclid(p as i128) as u64;
        residues.insert(r);
        if r == 0 {
            divisible_count += 1;
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            phases[acc[l + 1] as usize] += sign;
        }
    })?;
    if let Some(mask) = not_integral {
        return Err(Error::Hypothesis(format!(
            "P is not an integer at I = {:?}",
            mask_to_indices(mask)
        )));
    }
    let residues: Vec<u64> = residues.into_iter().collect();
    let mut report = Theorem31Report {
        family_size,
        residues,
        branch: Theorem31Branch::Inequality,
        divisible_count,
        signed_phase_counts: phases,
    };
    if report.residues.len() as u64 * d > d + delta {
        return Ok(report);
    }
    report.branch = Theorem31Branch::Congruence;
    let sum = CycloElement::from_integer_coeffs(&report.signed_phase_counts);
    let divisible = sum.is_divisible_by_prime(p)?;
    if report.divisible_count == 1 || !divisible {
        let terms: Vec<(Vec<u32>, String)> = poly
            .terms()
            .map(|(e, c)| (e.to_vec(), c.to_string()))
            .collect();
        return Err(Error::violation(
            "inequality (residue count) or the mod-p congruence holds",
            serde_json::json!({
                "instance": inst, "polynomial": terms, "degree": d, "delta": delta,
                "report": report,
            }),
        ));
    }
    Ok(report)
}
