//! Freeness certificates: a base arrangement certified by the rank-3
//! Ziegler restriction check, followed by a chain of addition steps.

use serde::Serialize;

use super::addition::{addition_step, rank3_ziegler_pi_check, Rank3Check};
use crate::arrangement::{cone, infinity_hyperplane, Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rat};
use crate::poly::IntPolynomial;

/// `α = k` as the central hyperplane `α - k x_0 = 0` of the cone.
pub fn cone_hyperplane(h: &Hyperplane) -> Hyperplane {
    let mut normal: Vec<Rat> = h.normal().iter().map(|&x| rat(x)).collect();
    normal.push(-h.offset().clone());
    Hyperplane::from_rational(&normal, rat(0)).expect("nonzero normal")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCertificate {
    /// The affine base arrangement; the certificate is about its cone.
    pub arrangement: Arrangement,
    pub exponents: Vec<i64>,
    pub check: Rank3Check,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionStep {
    /// Affine hyperplane; the cone gains `cone_hyperplane(hyperplane)`.
    pub hyperplane: Hyperplane,
    pub restriction_count: usize,
    pub exponents_before: Vec<i64>,
    pub exponents_after: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub base: BaseCertificate,
    pub steps: Vec<AdditionStep>,
    pub final_exponents: Vec<i64>,
}

/// Structural checks on a certificate, each recomputed from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    pub chain: bool,
    pub sum_rule: bool,
    pub contains_t_minus_1: bool,
    pub replay: bool,
}

impl CertificateChecks {
    pub fn all(&self) -> bool {
        self.chain && self.sum_rule && self.contains_t_minus_1 && self.replay
    }
}

impl FreenessCertificate {
    /// The affine arrangement at the end of the chain.
    pub fn final_affine(&self) -> Arrangement {
        let mut a = self.base.arrangement.clone();
        for s in &self.steps {
            a.insert(s.hyperplane.clone()).expect("dimension matches");
        }
        a
    }

    /// The central arrangement the final exponents refer to.
    pub fn final_cone(&self) -> Arrangement {
        cone(&self.final_affine())
    }

    pub fn checks(&self) -> CertificateChecks {
        let mut chain = self.base.exponents == self.steps.first().map_or(self.final_exponents.clone(), |s| s.exponents_before.clone());
        for w in self.steps.windows(2) {
            chain &= w[0].exponents_after == w[1].exponents_before;
        }
        if let Some(last) = self.steps.last() {
            chain &= last.exponents_after == self.final_exponents;
        }

        let mut size = self.base.arrangement.len() as i64 + 1;
        let mut sum_rule = self.base.exponents.iter().sum::<i64>() == size;
        let mut contains_t_minus_1 = true;
        for s in &self.steps {
            size += 1;
            sum_rule &= s.exponents_after.iter().sum::<i64>() == size;
            sum_rule &= s.exponents_after.iter().sum::<i64>() == s.exponents_before.iter().sum::<i64>() + 1;
            contains_t_minus_1 &= s.exponents_after.contains(&(s.restriction_count as i64 - 1));
        }

        let replay = self.replay().is_ok();
        CertificateChecks {
            chain,
            sum_rule,
            contains_t_minus_1,
            replay,
        }
    }

    /// Re-runs the base check and every addition step.
    pub fn replay(&self) -> Result<()> {
        let mut b = ChainBuilder::start(&self.base.arrangement)?;
        if b.exponents() != self.base.exponents.as_slice() {
            return Err(Error::Certificate {
                step: 0,
                detail: "base exponents differ on replay".into(),
            });
        }
        for s in &self.steps {
            let step = b.add(s.hyperplane.clone())?;
            if step != *s {
                return Err(Error::Certificate {
                    step: b.steps.len(),
                    detail: "step differs on replay".into(),
                });
            }
        }
        Ok(())
    }

    /// Errors unless the final affine arrangement equals `target` as a set.
    pub fn require_target(&self, target: &Arrangement) -> Result<()> {
        if self.final_affine() != *target {
            return Err(Error::Certificate {
                step: self.steps.len(),
                detail: format!(
                    "final arrangement has {} hyperplanes, target has {}",
                    self.final_affine().len(),
                    target.len()
                ),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            base: BaseJson {
                hyperplanes: self.base.arrangement.len() + 1,
                exponents: self.base.exponents.clone(),
                ziegler_exponents: self.base.check.ziegler_exponents,
                poincare: self.base.check.poincare.clone(),
            },
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    hyperplane: s.hyperplane.to_string(),
                    t: s.restriction_count,
                    exp_before: s.exponents_before.clone(),
                    exp_after: s.exponents_after.clone(),
                })
                .collect(),
            final_exponents: self.final_exponents.clone(),
            checks: self.checks(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseJson {
    /// Size of the base cone, including the hyperplane at infinity.
    pub hyperplanes: usize,
    pub exponents: Vec<i64>,
    pub ziegler_exponents: [usize; 2],
    pub poincare: IntPolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepJson {
    pub hyperplane: String,
    pub t: usize,
    pub exp_before: Vec<i64>,
    pub exp_after: Vec<i64>,
}

/// `{base, steps: [{hyperplane, t, exp_before, exp_after}], final_exponents, checks}`.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub base: BaseJson,
    pub steps: Vec<StepJson>,
    pub final_exponents: Vec<i64>,
    pub checks: CertificateChecks,
}

/// Incrementally grows a certificate on the cone of an affine arrangement.
#[derive(Clone, Debug)]
pub struct ChainBuilder {
    base: BaseCertificate,
    affine: Arrangement,
    current: Arrangement,
    exps: Vec<i64>,
    steps: Vec<AdditionStep>,
}

impl ChainBuilder {
    /// Certifies `cone(base)` with the Ziegler restriction onto `H∞`.
    pub fn start(base: &Arrangement) -> Result<Self> {
        let c = cone(base);
        let check = rank3_ziegler_pi_check(&c, &infinity_hyperplane(base.dim()))?;
        let exps = check.free_exponents.clone().ok_or_else(|| Error::Certificate {
            step: 0,
            detail: format!(
                "base is inconclusive: Ziegler exponents {:?}, Poincaré polynomial {}",
                check.ziegler_exponents, check.poincare
            ),
        })?;
        Ok(ChainBuilder {
            base: BaseCertificate {
                arrangement: base.clone(),
                exponents: exps.clone(),
                check,
            },
            affine: base.clone(),
            current: c,
            exps,
            steps: Vec::new(),
        })
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    pub fn affine(&self) -> &Arrangement {
        &self.affine
    }

    pub fn steps(&self) -> &[AdditionStep] {
        &self.steps
    }

    /// Attempts one addition. `Ok(None)` means the addition theorem does not
    /// apply; the state is unchanged.
    pub fn try_add(&mut self, h: Hyperplane) -> Result<Option<AdditionStep>> {
        let ch = cone_hyperplane(&h);
        let r = addition_step(&self.current, &self.exps, &ch)?;
        let Some(after) = r.exponents else {
            return Ok(None);
        };
        let step = AdditionStep {
            hyperplane: h.clone(),
            restriction_count: r.restriction_count,
            exponents_before: self.exps.clone(),
            exponents_after: after.clone(),
        };
        self.current.insert(ch)?;
        self.affine.insert(h)?;
        self.exps = after;
        self.steps.push(step.clone());
        Ok(Some(step))
    }

    /// Like [`try_add`](Self::try_add) but an inapplicable step is an error.
    pub fn add(&mut self, h: Hyperplane) -> Result<AdditionStep> {
        let ch = cone_hyperplane(&h);
        let before = self.exps.clone();
        match self.try_add(h)? {
            Some(s) => Ok(s),
            None => Err(Error::Certificate {
                step: self.steps.len() + 1,
                detail: format!(
                    "adding {ch} to exponents {before:?}: restriction has {} lines",
                    super::addition::restriction_count(&self.current, &ch)
                ),
            }),
        }
    }

    pub fn finish(self) -> FreenessCertificate {
        FreenessCertificate {
            base: self.base,
            steps: self.steps,
            final_exponents: self.exps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::{deform, weyl_arrangement, EquivMult};
    use crate::rootsys::build_root_system;

    #[test]
    fn cone_hyperplane_matches_cone() {
        let rs = build_root_system("A2".parse().unwrap()).unwrap();
        let a = deform(&rs, &EquivMult::new(vec![0]), &EquivMult::new(vec![1])).unwrap();
        let c = cone(&a);
        for h in &a {
            assert!(c.contains(&cone_hyperplane(h)));
        }
    }

    #[test]
    fn a2_weyl_base_and_one_step() {
        let rs = build_root_system("A2".parse().unwrap()).unwrap();
        let mut b = ChainBuilder::start(&weyl_arrangement(&rs)).unwrap();
        assert_eq!(b.exponents(), &[1, 1, 2]);
        // x0 - x1 = 1 is parallel to x0 - x1 = 0, so both meet it at
        // infinity: three restriction lines instead of four.
        let h = Hyperplane::new(&[1, -1, 0], rat(1)).unwrap();
        let s = b.add(h).unwrap();
        assert_eq!(s.restriction_count, 3);
        assert_eq!(s.exponents_after, vec![1, 2, 2]);
        let cert = b.finish();
        assert!(cert.checks().all());
    }
}
