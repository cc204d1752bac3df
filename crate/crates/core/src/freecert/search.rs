//! Certificate search for rank-2 deformations without a fixed table: start
//! from the cone of the Weyl arrangement and add the remaining hyperplanes
//! in any order the addition theorem accepts.

use std::collections::HashSet;

use super::certificate::{ChainBuilder, FreenessCertificate};
use super::predict::predict_cone_exponents;
use crate::arrangement::Hyperplane;
use crate::deform::{deform, deform_terms, weyl_arrangement, EquivMult};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

pub const DEFAULT_NODE_BUDGET: usize = 200_000;

struct Search {
    candidates: Vec<Hyperplane>,
    dead: HashSet<u64>,
    nodes: usize,
    budget: usize,
}

impl Search {
    fn dfs(&mut self, builder: &ChainBuilder, mask: u64) -> Result<Option<ChainBuilder>> {
        let full = (1u64 << self.candidates.len()) - 1;
        if mask == full {
            return Ok(Some(builder.clone()));
        }
        for i in 0..self.candidates.len() {
            if mask >> i & 1 == 1 || self.dead.contains(&(mask | 1 << i)) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Certificate {
                    step: builder.steps().len() + 1,
                    detail: format!("search budget of {} nodes exhausted", self.budget),
                });
            }
            let mut next = builder.clone();
            if next.try_add(self.candidates[i].clone())?.is_some() {
                if let Some(done) = self.dfs(&next, mask | 1 << i)? {
                    return Ok(Some(done));
                }
            }
        }
        self.dead.insert(mask);
        Ok(None)
    }
}

/// Depth-first search over addition orders, trying hyperplanes by
/// `(|k|, root, k)` and remembering dead subsets.
pub fn certify_by_search(rs: &RootSystem, a: &EquivMult, b: &EquivMult, budget: usize) -> Result<FreenessCertificate> {
    let target = deform(rs, a, b)?;
    let mut terms = deform_terms(rs, a, b)?;
    terms.retain(|t| t.level != 0);
    terms.sort_by_key(|t| (t.level.abs(), t.root, t.level));
    if terms.len() > 63 {
        return Err(Error::InvalidInput(format!(
            "{} hyperplanes beyond the Weyl arrangement; search supports at most 63",
            terms.len()
        )));
    }
    let start = ChainBuilder::start(&weyl_arrangement(rs))?;
    let mut search = Search {
        candidates: terms.into_iter().map(|t| t.hyperplane).collect(),
        dead: HashSet::new(),
        nodes: 0,
        budget,
    };
    let builder = search.dfs(&start, 0)?.ok_or_else(|| Error::Certificate {
        step: 0,
        detail: "no addition order found".into(),
    })?;
    let cert = builder.finish();
    cert.require_target(&target)?;
    let predicted = predict_cone_exponents(rs, a, b)?;
    if cert.final_exponents != predicted {
        return Err(Error::Certificate {
            step: cert.steps.len(),
            detail: format!("final exponents {:?}, predicted {:?}", cert.final_exponents, predicted),
        });
    }
    Ok(cert)
}
