//! Verified data: the coincidence tables, the target-algebra dictionary, the
//! rationality witnesses, the Gelfand–Tsetlin factor lists and a
//! catalogue-backed admissibility oracle.
//!
//! Every target algebra `W_s(sp(2r))`, `W_s(so(2r))^Z2`, `W_s(osp(1|2r))^Z2`
//! is realized as a degenerate member of one of the coset families (see
//! [`TargetKind::specialization`]), so a coincidence is checked as an exact
//! equality of two points on truncation curves.

mod admissible;
mod coincidence;
mod gt;
mod oracle;
mod osp_pair;
mod tables;
mod target;
mod witness;

pub use admissible::{is_admissible_nondegenerate, Admissibility};
pub use coincidence::{
    all_coincidences, coincidence_table, verify_coincidence, verify_coincidence_symbolic,
    CoincidenceEntry, CoincidenceOutcome, Exclusion,
};
pub use gt::{gelfand_tsetlin_factors, verify_gt_factor, GtFactor, GtFactorKind, GtSeries};
pub use oracle::{intersection_oracle, OracleReport, PredictedPoint};
pub use osp_pair::{osp_osp_central_charge, verify_osp_osp, OspPairCheck, OspPairReport};
pub use target::{TargetDictionary, TargetKind};
pub use witness::{
    osp_sl2_coset_point, rational_points, verify_witness, Condition, Partner, PartnerAlgebra,
    RationalityWitness, WitnessAux, WitnessBounds, WitnessCheck, WitnessStatus, WitnessTheorem,
};
