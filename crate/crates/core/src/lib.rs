//! Conversion of English UD dependency trees into enhanced dependency
//! graphs — the Enhanced-UD layer plus an event-centric layer that exposes
//! lexical relations and marks every added edge with its provenance
//! (src / unc / alt) — together with a pattern-based relation-extraction
//! harness for comparing the representations.

pub mod conllu;
pub mod error;
pub mod graph;
pub mod lexicon;
pub mod relex;
pub mod rules;

pub use conllu::extra::{decode_extra, encode_extra, EdgeInfo, EdgeSrc};
pub use conllu::{parse_conllu, parse_conllu_lenient, serialize_conllu, NodeId, Sentence, Token};
pub use graph::{DepGraph, Edge, SeedMode};
pub use lexicon::Lexicons;
pub use rules::{convert_sentence, registry, run_pipeline, ConvertConfig, Mode, PipelineOutcome};
