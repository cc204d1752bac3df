//! End-to-end verification of one Shi-Catalan instance against every
//! independent oracle available at its rank.

use serde::Serialize;

use super::addition::rank3_ziegler_pi_check;
use super::certificate::CertificateJson;
use super::predict::{predict_cone_exponents, predict_ziegler_exponents, printed_chamber_formula, product_chamber_count};
use crate::arrangement::{cone, infinity_hyperplane, planar_forms, ziegler_restriction, MultiArrangement};
use crate::deform::{deform, deformation_size, require_shi_catalan, weyl_arrangement, ziegler_multiplicity, EquivMult};
use crate::error::{Error, Result};
use crate::multi2d::{exponents2d, Multi2D};
use crate::poly::{factorization_check, IntPolynomial};
use crate::poset::{chambers_2d_oracle, intersection_poset_with_budget, FlatBudget};
use crate::rootsys::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberCounts {
    pub mobius: u64,
    /// Incremental line-insertion count; rank 2 only.
    pub oracle: Option<u64>,
    pub product: i64,
    /// The product formula without the `+1` per factor.
    pub printed: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub a: EquivMult,
    pub b: EquivMult,
    pub hyperplanes: usize,
    pub predicted_exponents: Vec<i64>,
    pub ziegler_exponents: Option<[usize; 2]>,
    pub poincare: IntPolynomial,
    pub chambers: ChamberCounts,
    pub certificate: Option<CertificateJson>,
    pub checks: Vec<Check>,
}

impl PipelineReport {
    /// Every check passed or was not applicable.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &'static str, ok: bool, detail: String) -> Check {
    Check {
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn skipped(name: &'static str, why: &str) -> Check {
    Check {
        name,
        status: Status::Skipped,
        detail: why.to_string(),
    }
}

/// The multiarrangement `(A(W), a+b+1)`.
pub fn weyl_multiarrangement(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<MultiArrangement> {
    let weyl = weyl_arrangement(rs);
    let m = ziegler_multiplicity(a, b);
    let mults = weyl
        .iter()
        .map(|h| {
            let root = rs.root_of_normal(h.normal()).expect("Weyl hyperplanes come from roots");
            m.get(rs.orbit_of(root))
        })
        .collect();
    MultiArrangement::new(weyl, mults)
}

pub fn verify_pipeline(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<PipelineReport> {
    verify_pipeline_with_budget(rs, a, b, FlatBudget::from_env())
}

/// Runs every check that applies at the rank of `rs`. Sub-check failures are
/// itemized in the report; input errors and budget overruns are returned as
/// errors.
pub fn verify_pipeline_with_budget(
    rs: &RootSystem,
    a: &EquivMult,
    b: &EquivMult,
    budget: FlatBudget,
) -> Result<PipelineReport> {
    require_shi_catalan(rs, a, b)?;
    let affine = deform(rs, a, b)?;
    let coned = cone(&affine);
    let predicted = predict_cone_exponents(rs, a, b)?;
    let mut checks = Vec::new();

    let size = deformation_size(rs, a, b);
    checks.push(check(
        "exponent_sum",
        predicted.iter().sum::<i64>() == size as i64 + 1 && affine.len() == size,
        format!("sum {} for {} hyperplanes plus infinity", predicted.iter().sum::<i64>(), affine.len()),
    ));

    let restricted = ziegler_restriction(&coned, &infinity_hyperplane(affine.dim()))?;
    let expected_multi = weyl_multiarrangement(rs, a, b)?;
    checks.push(check(
        "ziegler_multiplicity",
        restricted.same_as(&expected_multi),
        format!("restriction onto infinity has total multiplicity {}", restricted.total()),
    ));

    let mut ziegler_exponents = None;
    let mut certificate = None;
    if rs.rank() == 2 {
        let forms = planar_forms(&expected_multi)?;
        let (lines, mults) = forms.into_iter().unzip();
        let e = exponents2d(&Multi2D::new(lines, mults)?)?;
        let got = vec![e.d1 as i64, e.d2 as i64];
        let want = predict_ziegler_exponents(rs, a, b)?;
        checks.push(check("ziegler_exponents", got == want, format!("multi2d {got:?}, predicted {want:?}")));
        ziegler_exponents = Some([e.d1, e.d2]);

        let r3 = rank3_ziegler_pi_check(&coned, &infinity_hyperplane(affine.dim()))?;
        checks.push(match &r3.free_exponents {
            Some(f) => check("rank3_ziegler_pi", *f == predicted, format!("free with exponents {f:?}")),
            None => Check {
                name: "rank3_ziegler_pi",
                status: Status::Inconclusive,
                detail: format!("Poincaré polynomial {} does not factor", r3.poincare),
            },
        });

        checks.push(match super::certify(rs, a, b) {
            Ok(cert) => {
                let c = cert.checks();
                let ok = c.all() && cert.final_exponents == predicted;
                certificate = Some(cert.to_json());
                check(
                    "certificate",
                    ok,
                    format!("{} addition steps, final exponents {:?}", cert.steps.len(), cert.final_exponents),
                )
            }
            Err(e @ (Error::Certificate { .. } | Error::TableMismatch { .. })) => Check {
                name: "certificate",
                status: Status::Inconclusive,
                detail: e.to_string(),
            },
            Err(e) => check("certificate", false, e.to_string()),
        });
    } else {
        checks.push(skipped("ziegler_exponents", "rank is not 2"));
        checks.push(skipped("rank3_ziegler_pi", "rank is not 2"));
        checks.push(skipped("certificate", "rank is not 2"));
    }

    let cone_poset = intersection_poset_with_budget(&coned, budget)?;
    let poincare = cone_poset.poincare();
    checks.push(check(
        "pi_factorization",
        factorization_check(&poincare, &predicted),
        format!("π = {poincare}"),
    ));

    let mobius = intersection_poset_with_budget(&affine, budget)?.chambers();
    let oracle = if rs.rank() == 2 {
        Some(chambers_2d_oracle(&affine)?)
    } else {
        None
    };
    let product = product_chamber_count(&predicted);
    let printed = printed_chamber_formula(rs, a, b)?;
    checks.push(check(
        "chambers",
        mobius as i64 == product && oracle.is_none_or(|o| o == mobius),
        format!(
            "mobius {mobius}, oracle {}, product {product}, printed {printed}",
            oracle.map_or("-".to_string(), |o| o.to_string())
        ),
    ));

    Ok(PipelineReport {
        type_label: rs.label().to_string(),
        a: a.clone(),
        b: b.clone(),
        hyperplanes: affine.len(),
        predicted_exponents: predicted,
        ziegler_exponents,
        poincare,
        chambers: ChamberCounts {
            mobius,
            oracle,
            product,
            printed,
        },
        certificate,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn run(label: &str, a: &[u32], b: &[u32]) -> PipelineReport {
        let rs = build_root_system(label.parse().unwrap()).unwrap();
        verify_pipeline(&rs, &EquivMult::new(a.to_vec()), &EquivMult::new(b.to_vec())).unwrap()
    }

    #[test]
    fn g2_catalan() {
        let r = run("G2", &[1, 0], &[1, 0]);
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(
            r.chambers,
            ChamberCounts {
                mobius: 48,
                oracle: Some(48),
                product: 48,
                printed: 35
            }
        );
    }

    #[test]
    fn a2_shi() {
        let r = run("A2", &[0], &[1]);
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.predicted_exponents, vec![1, 3, 3]);
        assert_eq!(r.chambers.mobius, 16);
    }

    #[test]
    fn a3_shi() {
        let r = run("A3", &[0], &[1]);
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.predicted_exponents, vec![1, 4, 4, 4]);
        assert_eq!(r.chambers.mobius, 125);
        assert_eq!(r.check("certificate").unwrap().status, Status::Skipped);
    }

    #[test]
    fn rejects_non_shi_catalan() {
        let rs = build_root_system("A2".parse().unwrap()).unwrap();
        assert!(matches!(
            verify_pipeline(&rs, &EquivMult::new(vec![2]), &EquivMult::new(vec![0])),
            Err(Error::NotShiCatalan { orbit: 0, diff: 2 })
        ));
    }
}
