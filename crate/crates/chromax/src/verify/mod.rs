//! Exhaustive small-graph verification: enumeration up to isomorphism,
//! per-graph bound reports, structural lemma audits, inequality
//! certificates, and batch campaigns.

mod audit;
mod bounds;
mod campaign;
mod enumerate;
mod prop13;

pub use audit::{audit_structure_lemmas, LemmaAudit, LemmaId};
pub use bounds::{
    check_bound, check_bound_at_ray, check_tomescu_bound, first_negative_integer, BoundKind,
    BoundReport, BoundVerdict,
};
pub use campaign::{
    run_campaign, CampaignConfig, CampaignSummary, GraphSource, RayPolicy, Violation,
};
pub use enumerate::{enumerate_graphs, MAX_ENUM_VERTICES};
pub use prop13::{check_proposition_inequalities, Prop13Report};
