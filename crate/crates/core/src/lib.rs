//! Mostar index computations, certified witness constructions and an
//! isomorph-free census of small connected graphs.
//!
//! ```
//! use mostar_core::{mostar_index, witness, Graph};
//!
//! let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! assert_eq!(mostar_index(&p4).unwrap(), 4);
//!
//! let plan = witness(9).unwrap();
//! assert_eq!(mostar_index(&plan.graph).unwrap(), 9);
//! ```

pub mod analytics;
pub mod canon;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod index;
pub mod structure;
pub mod witness;

pub use analytics::{
    first_realizer_order, mo_histogram, realizer_table, stats_row, verify_suite, Census, FirstRealizer,
    Histogram, RealizerTable, StatsRow, Suite, VerificationReport,
};
pub use canon::{canonical_certificate, canonical_form, canonical_labeling, Certificate, CANON_MAX_ORDER};
pub use distance::{distances, transmissions, wiener_index, DistanceMatrix, UNREACHABLE};
pub use enumerate::{generate_connected, generate_connected_up_to, GraphStream, ENUM_MAX_ORDER};
pub use error::{Error, Result};
pub use families::{starlike, Family};
pub use graph::{parse_edge_lists, Graph, MAX_ORDER};
pub use graph6::{decode_graph6, decode_graph6_stream, encode_graph6};
pub use index::{
    edge_contributions, edge_report, edge_reports, is_distance_balanced, mostar_index, transmission_band,
    EdgeReport, TransmissionBand,
};
pub use structure::{structural_profile, StructuralProfile};
pub use witness::{
    chemical_witness, cycle_even_witness, layered_even, three_layer, three_layer_graph, tree_witness, witness,
    LevelSpec, WitnessFamily, WitnessPlan, WitnessRecord,
};
