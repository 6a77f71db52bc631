//! The numerical Breuil–Mézard identity in the generic regime, where both
//! sides equal `2^{|J_II|}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::defring::{hs_multiplicity, multiplicity_from_hilbert, DeformationPresentation};
use crate::error::{capacity, Result};

/// Largest `|J_II|` for which labels are listed.
pub const MAX_LABEL_SET: usize = 20;

/// Subsets of `J_II`, ordered by the binary number whose bit `k` marks the
/// `k`-th smallest element.
pub fn generic_weight_labels(jii: &BTreeSet<usize>) -> Result<Vec<BTreeSet<usize>>> {
    let elems: Vec<usize> = jii.iter().copied().collect();
    if elems.len() > MAX_LABEL_SET {
        return capacity(format!("more than 2^{MAX_LABEL_SET} labels"));
    }
    Ok((0u64..1 << elems.len())
        .map(|mask| {
            elems
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BmReport {
    pub presentation: DeformationPresentation,
    #[serde(serialize_with = "crate::exact::big")]
    pub closed_form: BigInt,
    #[serde(serialize_with = "crate::exact::big")]
    pub hilbert_multiplicity: BigInt,
    pub weight_count: u64,
    pub holds: bool,
}

pub fn bm_identity_check(d: &DeformationPresentation) -> Result<BmReport> {
    let closed_form = hs_multiplicity(d);
    let hilbert_multiplicity = multiplicity_from_hilbert(d)?;
    let weight_count = generic_weight_labels(&d.jii)?.len() as u64;
    Ok(BmReport {
        presentation: d.clone(),
        holds: closed_form == hilbert_multiplicity && hilbert_multiplicity == BigInt::from(weight_count),
        closed_form,
        hilbert_multiplicity,
        weight_count,
    })
}
