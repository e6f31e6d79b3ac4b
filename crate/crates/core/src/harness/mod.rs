//! Canonical labeling, exhaustive enumeration and the verification suites.

pub mod canon;
mod enumerate;
mod report;
mod suites;

pub use canon::{canonical_key, CANON_LIMIT};
pub use enumerate::{
    enumerate_bipartite, enumerate_bipartite_filtered, enumerate_bipartite_upto, EnumerationStream, Filter,
    ENUMERATE_LIMIT,
};
pub use report::{CaseResult, Status, SuiteReport, Verdict, Witness};
pub use suites::{
    all_permutations, antichain_check, path_subgraphs, run_suite, suite_closure, suite_identities,
    suite_lemma_key, suite_lemma_reduction, suite_s_antichain, suite_s_structure, suite_t_antichain,
    suite_t_free, suite_universality, Family, SuiteConfig, S8_INCOMPARABILITY_EDGES, SUITES,
};
