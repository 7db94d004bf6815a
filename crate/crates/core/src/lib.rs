//! Cycle-chain certificates for pancyclic arcs in multipartite tournaments.
//!
//! A c-partite tournament is an orientation of a complete c-partite graph.
//! Every strongly connected c-partite tournament with `c >= 3` contains two
//! arcs that each lie on an m-cycle for every `m` in `3..=c`, with strictly
//! nested vertex sets. This crate turns that existence statement into a
//! deterministic procedure that outputs the two arcs together with their
//! cycle families, plus an independent brute-force oracle to cross-check the
//! result and a search harness that watches for instances with fewer than
//! three such arcs.
//!
//! - [`tournament`] — data model, validation and the instance text format
//! - [`witness`] — cycle chains, certificates and their verifier
//! - [`construct`] — the certificate-producing search
//! - [`oracle`] — exhaustive cycle-length spectra through arcs
//! - [`generate`] — seeded random and exhaustive instance sources
//! - [`hunt`] — batch scanning and ledger reporting

pub mod construct;
pub mod generate;
pub mod hunt;
pub mod oracle;
pub mod tournament;
pub mod witness;

pub use construct::two_pancyclic_arcs;
pub use tournament::{Arc, MultipartiteTournament};
pub use witness::{Cycle, CycleChain, TwoArcCertificate};
