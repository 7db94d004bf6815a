//! Cycle chains, two-arc certificates, and the clause-by-clause verifier.
//!
//! The verifier is the trust anchor of the crate: everything the constructor
//! produces gets re-checked here against the tournament itself, one clause at
//! a time. A report of "ok" means every clause of the certified statement
//! holds — the two arcs differ, and each lies on one cycle per length from 3
//! up to the part count with strictly nested vertex sets. The certificate
//! JSON codec lives next to the types so the on-disk form stays in lockstep
//! with the in-memory one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tournament::{Arc, MultipartiteTournament};

/// A simple directed cycle stored as its vertex sequence. The first entry is
/// the canonical start; every consecutive pair, including last -> first, must
/// be an arc of the owning tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        Cycle { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// Consecutive pairs including the wrap-around `(last, first)`.
    pub fn arc_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// True iff `arc.tail` is immediately followed by `arc.head`, cyclically.
    pub fn has_consecutive_arc(&self, arc: Arc) -> bool {
        self.arc_pairs().any(|(t, h)| t == arc.tail && h == arc.head)
    }

    /// The same cycle rotated to start at `v`. Panics if `v` is not on it.
    pub fn rotated_to(&self, v: usize) -> Cycle {
        let p = self.position(v).expect("rotation target must lie on the cycle");
        let mut vs = Vec::with_capacity(self.len());
        vs.extend_from_slice(&self.vertices[p..]);
        vs.extend_from_slice(&self.vertices[..p]);
        Cycle::new(vs)
    }

    /// The cycle traversed against its arcs: a valid cycle of the reversed
    /// tournament, starting at the same vertex.
    pub fn reversed(&self) -> Cycle {
        let mut vs = self.vertices.clone();
        vs[1..].reverse();
        Cycle::new(vs)
    }

    /// New cycle with `w` inserted between positions `pos` and `pos + 1`
    /// (cyclically). Panics if `pos` is out of range.
    pub fn spliced_after(&self, pos: usize, w: usize) -> Cycle {
        assert!(pos < self.len(), "splice position out of range");
        let mut vs = self.vertices.clone();
        vs.insert(pos + 1, w);
        Cycle::new(vs)
    }
}

/// A family of cycles through one fixed arc: the entry at index `i` holds the
/// cycle with `i + 3` vertices, and each vertex set strictly contains the
/// previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleChain {
    pub arc: Arc,
    pub cycles: Vec<Cycle>,
}

impl CycleChain {
    pub fn new(arc: Arc, cycles: Vec<Cycle>) -> Self {
        CycleChain { arc, cycles }
    }

    /// Largest cycle length the chain claims.
    pub fn max_len(&self) -> usize {
        self.cycles.len() + 2
    }

    /// The cycle with exactly `len` vertices, if the chain holds that slot.
    pub fn cycle_of_len(&self, len: usize) -> Option<&Cycle> {
        if len < 3 {
            return None;
        }
        self.cycles.get(len - 3)
    }

    /// The chain's largest cycle. Panics on an empty chain.
    pub fn top(&self) -> &Cycle {
        self.cycles.last().expect("chain holds at least one cycle")
    }
}

/// Two distinct arcs, each with a nested cycle chain up to the part count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoArcCertificate {
    pub c: usize,
    pub chains: [CycleChain; 2],
}

/// A violated clause of the cycle invariants.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CycleViolation {
    #[error("cycle has {len} vertices, need at least 3")]
    TooShort { len: usize },
    #[error("vertex id {id} out of range")]
    BadVertexId { id: usize },
    #[error("vertex {id} appears more than once")]
    DuplicateVertex { id: usize },
    #[error("missing arc {tail}->{head}")]
    MissingArc { tail: usize, head: usize },
}

/// A violated clause of the chain invariants, anchored at a cycle length.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainViolation {
    #[error("no cycle of length {len}")]
    MissingLength { len: usize },
    #[error("slot for length {len} holds a cycle with {actual} vertices")]
    WrongLength { len: usize, actual: usize },
    #[error("cycle of length {len} is invalid: {}", render(violations))]
    BadCycle {
        len: usize,
        violations: Vec<CycleViolation>,
    },
    #[error("chain arc is not consecutive on the cycle of length {len}")]
    ArcNotOnCycle { len: usize },
    #[error("cycle of length {len} does not strictly contain the previous one")]
    NotNested { len: usize },
}

/// A violated clause of the certificate invariants.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateViolation {
    #[error("both chains use the same arc {arc}")]
    SameArc { arc: Arc },
    #[error("certificate claims c = {cert_c}, instance has {actual_c} parts")]
    WrongC { cert_c: usize, actual_c: usize },
    #[error("chain {index} (arc {arc}): {}", render(violations))]
    Chain {
        index: usize,
        arc: Arc,
        violations: Vec<ChainViolation>,
    },
}

fn render<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Check every cycle clause against `d`: length, vertex ids, distinctness,
/// and the presence of each consecutive arc.
pub fn verify_cycle(
    d: &MultipartiteTournament,
    cycle: &Cycle,
) -> Result<(), Vec<CycleViolation>> {
    let mut out = Vec::new();
    let n = d.vertex_count();
    if cycle.len() < 3 {
        out.push(CycleViolation::TooShort { len: cycle.len() });
    }
    let mut ids_ok = true;
    for &v in &cycle.vertices {
        if v >= n {
            out.push(CycleViolation::BadVertexId { id: v });
            ids_ok = false;
        }
    }
    let mut seen = BTreeSet::new();
    let mut reported = BTreeSet::new();
    for &v in &cycle.vertices {
        if !seen.insert(v) && reported.insert(v) {
            out.push(CycleViolation::DuplicateVertex { id: v });
        }
    }
    if ids_ok && cycle.len() >= 3 {
        for (t, h) in cycle.arc_pairs() {
            if !d.dominates(t, h) {
                out.push(CycleViolation::MissingArc { tail: t, head: h });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Check the chain clauses for every length in `3..=required_max`: slot
/// present with the right vertex count, cycle valid, chain arc consecutive on
/// it, vertex sets strictly nested. Cycles beyond `required_max` are ignored,
/// so an ok verdict at some bound implies ok at every smaller bound.
pub fn verify_chain(
    d: &MultipartiteTournament,
    chain: &CycleChain,
    required_max: usize,
) -> Result<(), Vec<ChainViolation>> {
    let mut out = Vec::new();
    let mut prev: Option<BTreeSet<usize>> = None;
    for len in 3..=required_max {
        let Some(cycle) = chain.cycle_of_len(len) else {
            out.push(ChainViolation::MissingLength { len });
            prev = None;
            continue;
        };
        if cycle.len() != len {
            out.push(ChainViolation::WrongLength {
                len,
                actual: cycle.len(),
            });
        }
        if let Err(violations) = verify_cycle(d, cycle) {
            out.push(ChainViolation::BadCycle { len, violations });
        }
        if !cycle.has_consecutive_arc(chain.arc) {
            out.push(ChainViolation::ArcNotOnCycle { len });
        }
        let cur: BTreeSet<usize> = cycle.vertices.iter().copied().collect();
        if let Some(p) = &prev {
            if !p.is_subset(&cur) || p.len() >= cur.len() {
                out.push(ChainViolation::NotNested { len });
            }
        }
        prev = Some(cur);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Check the full certificate: the claimed `c` matches the instance, the two
/// arcs differ, and both chains verify up to `c`.
pub fn verify_certificate(
    d: &MultipartiteTournament,
    cert: &TwoArcCertificate,
) -> Result<(), Vec<CertificateViolation>> {
    let mut out = Vec::new();
    if cert.c != d.part_count() {
        out.push(CertificateViolation::WrongC {
            cert_c: cert.c,
            actual_c: d.part_count(),
        });
    }
    if cert.chains[0].arc == cert.chains[1].arc {
        out.push(CertificateViolation::SameArc {
            arc: cert.chains[0].arc,
        });
    }
    for (index, chain) in cert.chains.iter().enumerate() {
        if let Err(violations) = verify_chain(d, chain, cert.c) {
            out.push(CertificateViolation::Chain {
                index,
                arc: chain.arc,
                violations,
            });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// On-disk certificate shape: `c`, the two arcs as `[tail, head]` pairs, and
/// per arc the cycles of lengths `3..=c` in order.
#[derive(Serialize, Deserialize)]
struct CertificateWire {
    c: usize,
    arcs: [[usize; 2]; 2],
    chains: [Vec<Vec<usize>>; 2],
}

#[derive(Debug, Error)]
pub enum CertificateCodecError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Deterministic JSON rendering of a certificate (trailing newline included).
pub fn certificate_to_json(cert: &TwoArcCertificate) -> String {
    let arc_pair = |a: Arc| [a.tail, a.head];
    let cycles = |chain: &CycleChain| {
        chain
            .cycles
            .iter()
            .map(|cy| cy.vertices.clone())
            .collect::<Vec<_>>()
    };
    let wire = CertificateWire {
        c: cert.c,
        arcs: [arc_pair(cert.chains[0].arc), arc_pair(cert.chains[1].arc)],
        chains: [cycles(&cert.chains[0]), cycles(&cert.chains[1])],
    };
    let mut text = serde_json::to_string_pretty(&wire).expect("certificate serializes");
    text.push('\n');
    text
}

/// Parse certificate JSON. Shape errors surface here; semantic validity is
/// the verifier's job.
pub fn certificate_from_json(text: &str) -> Result<TwoArcCertificate, CertificateCodecError> {
    let wire: CertificateWire = serde_json::from_str(text)?;
    let [cycles0, cycles1] = wire.chains;
    let chain = |arc: [usize; 2], cycles: Vec<Vec<usize>>| {
        CycleChain::new(
            Arc::new(arc[0], arc[1]),
            cycles.into_iter().map(Cycle::new).collect(),
        )
    };
    Ok(TwoArcCertificate {
        c: wire.c,
        chains: [chain(wire.arcs[0], cycles0), chain(wire.arcs[1], cycles1)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::MultipartiteTournament;

    fn triangle() -> MultipartiteTournament {
        MultipartiteTournament::new(
            vec![1, 1, 1],
            &[Arc::new(0, 1), Arc::new(1, 2), Arc::new(2, 0)],
        )
        .unwrap()
    }

    fn four_cycle_with_chords() -> MultipartiteTournament {
        MultipartiteTournament::new(
            vec![1, 1, 1, 1],
            &[
                Arc::new(0, 1),
                Arc::new(1, 2),
                Arc::new(2, 3),
                Arc::new(3, 0),
                Arc::new(0, 2),
                Arc::new(1, 3),
            ],
        )
        .unwrap()
    }

    fn triangle_chain() -> CycleChain {
        CycleChain::new(Arc::new(0, 1), vec![Cycle::new(vec![0, 1, 2])])
    }

    #[test]
    fn verify_cycle_examples() {
        let d = triangle();
        assert!(verify_cycle(&d, &Cycle::new(vec![0, 1, 2])).is_ok());
        let errs = verify_cycle(&d, &Cycle::new(vec![0, 2, 1])).unwrap_err();
        assert!(errs.contains(&CycleViolation::MissingArc { tail: 0, head: 2 }));
        // arcs checked directly against the fixture's arc list
        let d4 = four_cycle_with_chords();
        assert!(verify_cycle(&d4, &Cycle::new(vec![0, 1, 2, 3])).is_ok());
    }

    #[test]
    fn verify_cycle_reports_each_clause() {
        let d = triangle();
        let errs = verify_cycle(&d, &Cycle::new(vec![0, 1])).unwrap_err();
        assert!(errs.contains(&CycleViolation::TooShort { len: 2 }));
        let errs = verify_cycle(&d, &Cycle::new(vec![0, 1, 0, 9])).unwrap_err();
        assert!(errs.contains(&CycleViolation::BadVertexId { id: 9 }));
        assert!(errs.contains(&CycleViolation::DuplicateVertex { id: 0 }));
    }

    #[test]
    fn verify_chain_examples() {
        let d = triangle();
        let chain = triangle_chain();
        assert!(verify_chain(&d, &chain, 3).is_ok());
        let errs = verify_chain(&d, &chain, 4).unwrap_err();
        assert_eq!(errs, vec![ChainViolation::MissingLength { len: 4 }]);
    }

    #[test]
    fn verify_chain_catches_denesting() {
        // five singleton parts; both cycles are valid and carry the arc, but
        // the 4-cycle misses vertex 2 from the 3-cycle
        let d5 = MultipartiteTournament::new(
            vec![1, 1, 1, 1, 1],
            &[
                Arc::new(0, 1),
                Arc::new(1, 2),
                Arc::new(2, 0),
                Arc::new(1, 3),
                Arc::new(3, 4),
                Arc::new(4, 0),
                Arc::new(0, 3),
                Arc::new(1, 4),
                Arc::new(2, 3),
                Arc::new(2, 4),
            ],
        )
        .unwrap();
        let chain = CycleChain::new(
            Arc::new(0, 1),
            vec![Cycle::new(vec![0, 1, 2]), Cycle::new(vec![0, 1, 3, 4])],
        );
        let errs = verify_chain(&d5, &chain, 4).unwrap_err();
        assert_eq!(errs, vec![ChainViolation::NotNested { len: 4 }]);
    }

    #[test]
    fn verify_chain_is_monotone_in_required_max() {
        let d4 = four_cycle_with_chords();
        let chain = CycleChain::new(
            Arc::new(0, 1),
            vec![Cycle::new(vec![0, 1, 3]), Cycle::new(vec![0, 1, 2, 3])],
        );
        for k in 3..=4 {
            assert!(verify_chain(&d4, &chain, k).is_ok());
        }
    }

    #[test]
    fn verify_certificate_flags_same_arc_and_wrong_c() {
        let d = triangle();
        let cert = TwoArcCertificate {
            c: 3,
            chains: [triangle_chain(), triangle_chain()],
        };
        let errs = verify_certificate(&d, &cert).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, CertificateViolation::SameArc { .. })));

        let cert = TwoArcCertificate {
            c: 4,
            chains: [
                triangle_chain(),
                CycleChain::new(Arc::new(1, 2), vec![Cycle::new(vec![1, 2, 0])]),
            ],
        };
        let errs = verify_certificate(&d, &cert).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, CertificateViolation::WrongC { cert_c: 4, actual_c: 3 })));
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = TwoArcCertificate {
            c: 3,
            chains: [
                triangle_chain(),
                CycleChain::new(Arc::new(1, 2), vec![Cycle::new(vec![1, 2, 0])]),
            ],
        };
        let json = certificate_to_json(&cert);
        let back = certificate_from_json(&json).unwrap();
        assert_eq!(back, cert);
        assert!(certificate_from_json("{\"c\": 3}").is_err());
    }

    #[test]
    fn verifier_accepts_any_rotation() {
        let d = triangle();
        // arc 0->1 sits at the wrap-around of [1, 2, 0]
        let chain = CycleChain::new(Arc::new(0, 1), vec![Cycle::new(vec![1, 2, 0])]);
        assert!(verify_chain(&d, &chain, 3).is_ok());
    }
}
