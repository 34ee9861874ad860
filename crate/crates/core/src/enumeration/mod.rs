mod canon;
mod catalog;
mod closure;
mod generate;
mod verify;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub use catalog::{read_graph_lines, write_catalog, CatalogError};
pub use closure::{class_min_degree, degree_only_closure, generate_from_base, inverse_steps, GenerationMode};
pub use generate::{
    enumerate_graphs, enumerate_graphs_brute, enumerate_range, EnumError, BRUTE_FORCE_BOUND, EXHAUSTIVE_BOUND,
};
pub use verify::{
    canonical_set, partitions_into_three_paws, verify_lemma, verify_theorem, LemmaId, VerificationReport, ALL_LEMMAS,
};
