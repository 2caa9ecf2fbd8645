//! Semi-external construction of the Burrows-Wheeler transform.
//!
//! The transform is built by splitting the input into blocks of (almost)
//! uniform size, suffix-sorting each block on its own with the help of
//! precomputed repetition information, and then merging the per-block BWTs
//! pairwise along a balanced binary merge tree. Merging is driven by
//! gamma-coded gap arrays so that only a rank index for the left side of a
//! merge has to be held in internal memory; BWTs, gt bit vectors, gap
//! arrays and sampled inverse suffix arrays stream from external memory.
//!
//! The crate is organised as a library first. Every major capability has a
//! runnable example under `examples/`, and a thin `semibwt` binary exposes
//! `build`, `verify`, `inspect` and `bench` subcommands on top of the same
//! API.
//!
//! The module layout follows the pipeline:
//!
//! * [`textmodel`] — input text, circular suffix semantics, block planning
//! * [`succinct`] — bit vectors with rank/select, gamma codes, Huffman
//!   codes and wavelet trees
//! * [`periodicity`] — border arrays, minimal periods and per-block
//!   repetition propagation/generation analysis
//! * [`blocksort`] — suffix sorting of single blocks with repetition
//!   reduction, block BWTs, gt bits and sampled inverse suffix arrays
//! * [`gaparray`] — sparse/dense gap arrays, accumulation and doubling
//!   merges
//! * [`extio`] — bit-exact external file formats and multi-file indexing
//! * [`merge`] — pairwise merging of adjacent sorted blocks
//! * [`mergetree`] — the end-to-end serial driver (balanced and skewed)
//! * [`parallel`] — shared-memory parallel variants of the above
//! * [`oracle`] — independent brute-force references used for verification
//! * [`cli`] — the command line front end

pub mod blocksort;
pub mod cli;
pub mod extio;
pub mod gaparray;
pub mod merge;
pub mod mergetree;
pub mod oracle;
pub mod parallel;
pub mod periodicity;
pub mod succinct;
pub mod textmodel;
pub mod tracking;

pub use mergetree::{run, run_skewed, MergeMode, RunConfig, RunOutput};
pub use textmodel::{plan_blocks, BlockPlan, Text};
