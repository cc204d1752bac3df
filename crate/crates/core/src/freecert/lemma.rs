//! Flats at infinity of a coned deformation: each comes from a unique flat
//! `Y` of the Weyl arrangement, and the localization there is the cone of
//! the deformation of `A_Y`.

use std::collections::HashMap;

use serde::Serialize;

use crate::arrangement::{cone, infinity_hyperplane, localization};
use crate::deform::{deform, flat_at_infinity_correspondence, localized_deformation_cone, weyl_arrangement, EquivMult};
use crate::error::Result;
use crate::flat::Flat;
use crate::linalg::{rat, Rat};
use crate::poset::intersection_poset;
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub a: EquivMult,
    pub b: EquivMult,
    /// Flats of the cone contained in the hyperplane at infinity.
    pub flats_at_infinity: usize,
    /// Of those, how many have exactly one Weyl flat `Y` with `cY ∩ H∞ = X`.
    pub unique_preimage: usize,
    /// Of those, how many satisfy the localization identity.
    pub localization_matches: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.unique_preimage == self.flats_at_infinity
            && self.localization_matches == self.flats_at_infinity
    }
}

/// `cY ∩ H∞` for a central flat `Y` of the ambient space.
pub fn lift_to_infinity(y: &Flat) -> Flat {
    let n = y.ambient_dim();
    let mut rows: Vec<Vec<Rat>> = y
        .equations()
        .iter()
        .map(|r| {
            let mut v = r[..n].to_vec();
            v.push(rat(0));
            v.push(r[n].clone());
            v
        })
        .collect();
    let mut inf = vec![rat(0); n + 2];
    inf[n] = rat(1);
    rows.push(inf);
    Flat::from_equations(n + 1, rows).expect("central flats are nonempty")
}

pub fn lemma_check(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<LemmaReport> {
    crate::deform::require_shi_catalan(rs, a, b)?;
    let n = rs.ambient_dim();
    let coned = cone(&deform(rs, a, b)?);
    let h_inf = infinity_hyperplane(n);
    let weyl = intersection_poset(&weyl_arrangement(rs))?;
    let mut preimages: HashMap<Flat, usize> = HashMap::new();
    for f in weyl.flats() {
        *preimages.entry(lift_to_infinity(&f.flat)).or_default() += 1;
    }

    let poset = intersection_poset(&coned)?;
    let mut report = LemmaReport {
        type_label: rs.label().to_string(),
        a: a.clone(),
        b: b.clone(),
        flats_at_infinity: 0,
        unique_preimage: 0,
        localization_matches: 0,
        failures: Vec::new(),
    };
    for pf in poset.flats() {
        let x = &pf.flat;
        if !x.lies_in(&h_inf) {
            continue;
        }
        report.flats_at_infinity += 1;
        match preimages.get(x).copied().unwrap_or(0) {
            1 => report.unique_preimage += 1,
            k => report
                .failures
                .push(format!("flat of dimension {} has {k} Weyl preimages", x.dim())),
        }
        let y = match flat_at_infinity_correspondence(rs, a, b, x) {
            Ok(y) => y,
            Err(e) => {
                report.failures.push(e.to_string());
                continue;
            }
        };
        if lift_to_infinity(&y) != *x {
            report
                .failures
                .push(format!("recovered Y of dimension {} does not lift back", y.dim()));
            continue;
        }
        if localization(&coned, x) == localized_deformation_cone(rs, a, b, &y)? {
            report.localization_matches += 1;
        } else {
            report
                .failures
                .push(format!("localization differs at a flat of dimension {}", x.dim()));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn a2_shi_and_catalan() {
        let rs = build_root_system("A2".parse().unwrap()).unwrap();
        for (a, b) in [(0, 1), (1, 1)] {
            let r = lemma_check(&rs, &EquivMult::new(vec![a]), &EquivMult::new(vec![b])).unwrap();
            assert!(r.passed(), "{r:?}");
            // H∞, three points at infinity, and the origin of the cone.
            assert_eq!(r.flats_at_infinity, 5);
        }
    }
}
