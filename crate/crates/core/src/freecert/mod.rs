//! Freeness certificates for coned rank-2 Shi-Catalan deformations, the
//! exponent predictor, and the verification pipeline.

pub mod addition;
pub mod b2;
pub mod certificate;
pub mod g2;
pub mod lemma;
pub mod pipeline;
pub mod predict;
pub mod search;
pub mod table;

pub use addition::{addition_step, rank3_ziegler_pi_check, restriction_count, Addition, Rank3Check};
pub use b2::{b2_table, certify_b2};
pub use certificate::{AdditionStep, CertificateJson, ChainBuilder, FreenessCertificate};
pub use g2::{certify_g2, g2_closed_form, g2_ii_order_analysis, g2_table, G2Case, OrderAnalysis};
pub use lemma::{lemma_check, LemmaReport};
pub use pipeline::{verify_pipeline, Check, PipelineReport, Status};
pub use predict::{predict_cone_exponents, predict_ziegler_exponents, printed_chamber_formula, product_chamber_count};
pub use search::certify_by_search;
pub use table::{Table, TableRow};

use crate::deform::EquivMult;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeylType};

/// Certificate for `c(A^[-a,b])` on a rank-2 type: table replay for G2 and
/// for B2 Catalan, search otherwise.
pub fn certify(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<FreenessCertificate> {
    crate::deform::require_shi_catalan(rs, a, b)?;
    if rs.rank() != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: rs.rank(),
        });
    }
    match rs.label().kind {
        WeylType::G => {
            let (case, s, t) = g2::g2_case_of(a, b)?;
            certify_g2(case, s, t)
        }
        WeylType::B if a == b => certify_b2(b.get(0) as i64, b.get(1) as i64),
        _ => certify_by_search(rs, a, b, search::DEFAULT_NODE_BUDGET),
    }
}
