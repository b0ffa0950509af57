//! Exhaustive scheme enumeration over the small-group catalog: every
//! group up to an order bound, every automorphism subgroup, every
//! canonical recipe within the element cap. Shared by the search
//! subcommand and the acceptance campaign.

use rayon::prelude::*;
use serde_json::{json, Value};

use nearring_core::autos::{automorphism_group, AutomorphismSet};
use nearring_core::group::{small_groups, FiniteGroup};
use nearring_core::primitivity::{cross_check, PrimitivityVerdict};
use nearring_core::sandwich::{build_phi, enumerate_recipes, SandwichScheme};
use nearring_core::{Error, Result};

use crate::report::verdict_json;

/// One scheme of the sweep, before classification.
#[derive(Debug, Clone)]
pub struct SweepItem {
    pub group_name: String,
    pub scheme: SandwichScheme,
}

/// One classified scheme of the census.
#[derive(Debug)]
pub struct CensusRecord {
    pub group_name: String,
    pub scheme: SandwichScheme,
    pub n_size: usize,
    pub verdict: PrimitivityVerdict,
}

impl CensusRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group_name,
            "verdict": verdict_json(&self.scheme, &self.verdict, self.n_size),
        })
    }
}

/// All valid schemes on all catalog groups of order <= `max_order`
/// whose near-ring size stays within `max_elements`. Within one
/// (group, S) pair the canonical recipes produce pairwise distinct phi
/// arrays, so no deduplication is needed.
pub fn sweep_schemes(max_order: usize, max_elements: usize) -> Result<Vec<SweepItem>> {
    let mut items = Vec::new();
    for (name, gamma) in small_groups(max_order) {
        let auts = automorphism_group(&gamma)?;
        for s in auts.subgroups() {
            items.extend(schemes_for(&name, &gamma, &s, max_elements)?);
        }
    }
    Ok(items)
}

/// The schemes of a single (group, S) pair.
pub fn schemes_for(
    name: &str,
    gamma: &FiniteGroup,
    s: &AutomorphismSet,
    max_elements: usize,
) -> Result<Vec<SweepItem>> {
    let mut items = Vec::new();
    for recipe in enumerate_recipes(gamma, s, max_elements)? {
        let scheme = build_phi(gamma, s, &recipe)?;
        items.push(SweepItem { group_name: name.to_string(), scheme });
    }
    Ok(items)
}

/// Classifies one sweep item via the cross-checking verdict.
pub fn classify_item(item: &SweepItem, max_elements: usize) -> Result<CensusRecord> {
    let k = item.scheme.orbit_count()?;
    let n_size = item.scheme.gamma().order().pow(k as u32);
    let verdict = cross_check(&item.scheme, max_elements)?;
    Ok(CensusRecord {
        group_name: item.group_name.clone(),
        scheme: item.scheme.clone(),
        n_size,
        verdict,
    })
}

/// Classifies a batch, in parallel unless `sequential`. Resource-limit
/// skips are collected as notices; any other error aborts the run.
pub fn classify_batch(
    items: &[SweepItem],
    max_elements: usize,
    sequential: bool,
) -> Result<(Vec<CensusRecord>, Vec<String>)> {
    let classify = |item: &SweepItem| -> Result<std::result::Result<CensusRecord, String>> {
        match classify_item(item, max_elements) {
            Ok(rec) => Ok(Ok(rec)),
            Err(Error::ResourceLimit(msg)) => Ok(Err(format!(
                "skipped a scheme on {}: {msg}",
                item.group_name
            ))),
            Err(e) => Err(e),
        }
    };
    let results: Vec<_> = if sequential {
        items.iter().map(classify).collect::<Result<_>>()?
    } else {
        items.par_iter().map(classify).collect::<Result<_>>()?
    };
    let mut records = Vec::new();
    let mut notices = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(notice) => notices.push(notice),
        }
    }
    Ok((records, notices))
}
