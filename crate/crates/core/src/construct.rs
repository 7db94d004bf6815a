//! Builds two-arc certificates by growing nested cycle chains.
//!
//! The search keeps two cycle chains and raises their common guaranteed
//! length one level at a time. A level either extends a chain in place — an
//! outside vertex splices into its top cycle — or replaces both chains
//! wholesale with freshly assembled ones at least one level up. Two rebuild
//! shapes exist:
//!
//! - around an outside vertex whose only in/out switch sits on the chain arc
//!   ([`rebuild_blocked_switch`]), and
//! - along a shortest escape path back to the cycle, when the outside set
//!   splits into a side dominated by the cycle and a side dominating it
//!   ([`rebuild_with_escape_path`]).
//!
//! Every scan order is fixed (ascending vertex ids, cyclic position order,
//! lexicographic breadth-first tie-breaks), so the certificate is a pure
//! function of the input.

use thiserror::Error;

use crate::tournament::{Arc, MultipartiteTournament};
use crate::witness::{verify_chain, Cycle, CycleChain, TwoArcCertificate};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("tournament is not strong")]
    NotStrong,
    #[error("part count {0} is below 3")]
    TooFewParts(usize),
    #[error("no 3-cycle found; the input violates the preconditions")]
    NoThreeCycle,
    /// A forced arc or forced structure was missing. For strong inputs with
    /// at least three parts this cannot happen; seeing it means a bug.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

/// Per-level construction state: two chains that both hold cycles of every
/// length in `3..=m`, through distinct arcs.
#[derive(Clone, Debug)]
pub struct ExtensionState {
    pub chains: [CycleChain; 2],
    pub m: usize,
}

/// A splice position for an outside vertex on a chain's top cycle: the
/// vertex at `pos` dominates `w`, and `w` dominates the vertex at `pos + 1`
/// (cyclically). `pos` is never 0, which is where the chain arc sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsertionPoint {
    pub w: usize,
    pub pos: usize,
}

/// Where an outside vertex flips from dominating the cycle to being
/// dominated by it, for a vertex blocked on the chain arc: `w` dominates the
/// cycle positions `1..=switch_pos` and every other position dominates `w`.
/// `v` is the third vertex of the chain's own 3-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwitchData {
    pub w: usize,
    pub switch_pos: usize,
    pub v: usize,
}

/// The forced split of the outside set when no outside vertex mixes: `s1` is
/// dominated by every cycle vertex, `s2` dominates every cycle vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SPartition {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
}

/// How the outside set relates to a chain's top cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutsideClassification {
    /// At least one outside vertex has both an in- and an out-neighbor on
    /// the cycle. Each such vertex is listed (ascending) with its first
    /// usable insertion point, if any.
    Mixed(Vec<(usize, Option<InsertionPoint>)>),
    /// Every outside vertex uniformly dominates or is dominated by the
    /// cycle.
    Partitioned(SPartition),
}

/// A shortest directed path from the dominated outside side back onto the
/// cycle: first vertex in `s1`, last on the cycle, interior off both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscapePath {
    pub vertices: Vec<usize>,
}

fn internal(msg: impl Into<String>) -> ConstructError {
    ConstructError::Internal(msg.into())
}

/// First 3-cycle under a lexicographic scan of ordered vertex triples.
pub fn find_three_cycle(d: &MultipartiteTournament) -> Result<Cycle, ConstructError> {
    let n = d.vertex_count();
    for a in 0..n {
        for b in 0..n {
            if !d.dominates(a, b) {
                continue;
            }
            for c in 0..n {
                if d.dominates(b, c) && d.dominates(c, a) {
                    return Ok(Cycle::new(vec![a, b, c]));
                }
            }
        }
    }
    Err(ConstructError::NoThreeCycle)
}

/// Classify the vertices outside the cycle's parts. Requires a valid cycle.
///
/// Outside vertices are adjacent to every cycle vertex, so each one either
/// mixes (has neighbors in both directions) or lands on one side of the
/// partition. For a mixing vertex the insertion positions are scanned from
/// the arc head forward, cyclically, so position 0 — the chain arc — is
/// never offered.
pub fn classify_outside(
    d: &MultipartiteTournament,
    cycle: &Cycle,
) -> OutsideClassification {
    let outside = d
        .outside_part_vertices(cycle)
        .expect("classify_outside requires a valid cycle");
    let u = &cycle.vertices;
    let m = u.len();
    let mut mixed: Vec<(usize, Option<InsertionPoint>)> = Vec::new();
    let mut partition = SPartition::default();
    for w in outside {
        let dominated_by_all = u.iter().all(|&x| d.dominates(x, w));
        let dominates_all = u.iter().all(|&x| d.dominates(w, x));
        if dominated_by_all {
            partition.s1.push(w);
        } else if dominates_all {
            partition.s2.push(w);
        } else {
            let point = (1..m)
                .find(|&p| d.dominates(u[p], w) && d.dominates(w, u[(p + 1) % m]))
                .map(|pos| InsertionPoint { w, pos });
            mixed.push((w, point));
        }
    }
    if mixed.is_empty() {
        OutsideClassification::Partitioned(partition)
    } else {
        OutsideClassification::Mixed(mixed)
    }
}

/// Extend the chain by one level if some outside vertex can splice into the
/// top cycle away from the chain arc. The first candidate by ascending
/// vertex id and then by cyclic position wins.
pub fn try_insertion(d: &MultipartiteTournament, chain: &CycleChain) -> Option<CycleChain> {
    let OutsideClassification::Mixed(candidates) = classify_outside(d, chain.top()) else {
        return None;
    };
    let point = candidates.into_iter().find_map(|(_, p)| p)?;
    let mut extended = chain.clone();
    extended.cycles.push(chain.top().spliced_after(point.pos, point.w));
    debug_assert!(verify_chain(d, &extended, extended.max_len()).is_ok());
    Some(extended)
}

/// Locate the switch of a vertex blocked on the chain arc: `w` must dominate
/// a prefix starting at the arc head and be dominated by the rest.
fn find_switch(
    d: &MultipartiteTournament,
    chain: &CycleChain,
    w: usize,
) -> Result<SwitchData, ConstructError> {
    let u = &chain.top().vertices;
    let m = u.len();
    if !d.dominates(u[0], w) || !d.dominates(w, u[1]) {
        return Err(internal(format!(
            "vertex {w} is not blocked on the chain arc {}",
            chain.arc
        )));
    }
    let mut switch_pos = 1;
    while switch_pos + 1 < m && d.dominates(w, u[switch_pos + 1]) {
        switch_pos += 1;
    }
    for &x in &u[switch_pos + 1..] {
        if !d.dominates(x, w) {
            return Err(internal(format!(
                "vertex {w} has a second in/out switch on the cycle"
            )));
        }
    }
    let v = chain.cycles[0]
        .vertices
        .iter()
        .copied()
        .find(|&x| x != chain.arc.tail && x != chain.arc.head)
        .ok_or_else(|| internal("chain 3-cycle has no third vertex"))?;
    Ok(SwitchData { w, switch_pos, v })
}

/// Rebuild both chains one level up around a blocked outside vertex `w`:
/// one whose in/out switch is exactly at the chain arc. The first new arc is
/// the cycle arc at the switch; the second hangs off `w` on whichever side
/// the third vertex of the old 3-cycle allows.
pub fn rebuild_blocked_switch(
    d: &MultipartiteTournament,
    chain: &CycleChain,
    w: usize,
) -> Result<(CycleChain, CycleChain), ConstructError> {
    let top = chain.top().clone();
    let u = &top.vertices;
    let m = u.len();
    let switch = find_switch(d, chain, w)?;
    let i0 = switch.switch_pos;

    // First chain: fan out from the switch arc through w. The short cycles
    // run forward from the switch and close through w; the longer ones wrap
    // the cycle prefix back in one vertex at a time.
    let f1 = Arc::new(u[i0], u[(i0 + 1) % m]);
    let mut cycles1 = Vec::with_capacity(m - 1);
    for j in 1..=m - i0 {
        let mut vs = Vec::with_capacity(j + 2);
        for t in 0..=j {
            vs.push(u[(i0 + t) % m]);
        }
        vs.push(w);
        cycles1.push(Cycle::new(vs));
    }
    for k in 1..i0 {
        let mut vs = Vec::with_capacity(m - i0 + k + 3);
        vs.extend_from_slice(&u[i0 - k..m]);
        vs.push(u[0]);
        vs.push(w);
        cycles1.push(Cycle::new(vs).rotated_to(f1.tail));
    }
    let chain1 = CycleChain::new(f1, cycles1);

    // Second chain: w rides on the old chain arc. Whether the new arc enters
    // or leaves w follows from the orientation between w and the third
    // vertex of the old 3-cycle, which lies on every old cycle and so keeps
    // the nesting intact.
    let v = switch.v;
    let (f2, three) = if d.dominates(w, v) {
        (Arc::new(u[0], w), Cycle::new(vec![u[0], w, v]))
    } else if d.dominates(v, w) {
        (Arc::new(w, u[1]), Cycle::new(vec![w, u[1], v]))
    } else {
        return Err(internal(format!("vertices {w} and {v} are not adjacent")));
    };
    let mut cycles2 = Vec::with_capacity(m - 1);
    cycles2.push(three);
    cycles2.push(Cycle::new(vec![u[0], w, u[1], v]).rotated_to(f2.tail));
    for len in 4..=m {
        let base = chain
            .cycle_of_len(len)
            .ok_or_else(|| internal(format!("old chain misses length {len}")))?;
        let spliced = splice_on_arc(base, chain.arc, w)
            .ok_or_else(|| internal(format!("old chain arc not on its length-{len} cycle")))?;
        cycles2.push(spliced.rotated_to(f2.tail));
    }
    let chain2 = CycleChain::new(f2, cycles2);

    debug_assert!(verify_chain(d, &chain1, m + 1).is_ok());
    debug_assert!(verify_chain(d, &chain2, m + 1).is_ok());
    Ok((chain1, chain2))
}

fn splice_on_arc(cycle: &Cycle, arc: Arc, w: usize) -> Option<Cycle> {
    let len = cycle.len();
    let pos = (0..len)
        .find(|&p| cycle.vertices[p] == arc.tail && cycle.vertices[(p + 1) % len] == arc.head)?;
    Some(cycle.spliced_after(pos, w))
}

/// Shortest directed path from any `s1` vertex to any cycle vertex, with
/// lexicographic tie-breaking: smallest feasible start, then smallest
/// feasible next vertex at every step.
pub fn shortest_escape_path(
    d: &MultipartiteTournament,
    cycle: &Cycle,
    s1: &[usize],
) -> Result<EscapePath, ConstructError> {
    assert!(!s1.is_empty(), "escape path needs a nonempty dominated side");
    let n = d.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut frontier = cycle.vertices.clone();
    for &v in &frontier {
        dist[v] = 0;
    }
    let mut layer = 0;
    while !frontier.is_empty() {
        layer += 1;
        let mut next = Vec::new();
        for &v in &frontier {
            for x in d.in_neighbors(v) {
                if dist[x] == usize::MAX {
                    dist[x] = layer;
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    let start = s1
        .iter()
        .copied()
        .filter(|&s| dist[s] != usize::MAX)
        .min_by_key(|&s| (dist[s], s))
        .ok_or_else(|| internal("no path from the dominated side back to the cycle"))?;
    let mut vertices = vec![start];
    let mut cur = start;
    while dist[cur] > 0 {
        let step = d
            .out_neighbors(cur)
            .find(|&x| dist[x] == dist[cur] - 1)
            .expect("distance layers are contiguous");
        vertices.push(step);
        cur = step;
    }
    if vertices.len() < 3 {
        return Err(internal(format!(
            "escape path {vertices:?} is shorter than three vertices"
        )));
    }
    Ok(EscapePath { vertices })
}

fn reverse_chain(chain: &CycleChain) -> CycleChain {
    let arc = chain.arc.reversed();
    let cycles = chain
        .cycles
        .iter()
        .map(|c| c.reversed().rotated_to(arc.tail))
        .collect();
    CycleChain::new(arc, cycles)
}

/// Rebuild both chains at least one level up from a partitioned outside set.
///
/// If the dominated side is empty the whole construction runs on the
/// reversed tournament — reversal swaps the two sides and maps cycles to
/// cycles — and the results are flipped back. Otherwise a shortest escape
/// path decides the shape: when its second-to-last vertex dominates the
/// whole cycle the new arcs sit where the path re-enters, and the cycles
/// reach `m + 1`; when it does not, the new arcs are the first two path arcs
/// and the cycles stretch to `m + q - 1` for a path on `q` vertices.
pub fn rebuild_with_escape_path(
    d: &MultipartiteTournament,
    chain: &CycleChain,
    part: &SPartition,
) -> Result<(CycleChain, CycleChain), ConstructError> {
    if part.s1.is_empty() && part.s2.is_empty() {
        return Err(internal("outside set is empty; nothing to rebuild from"));
    }
    if part.s1.is_empty() {
        let rd = d.reverse();
        let rchain = reverse_chain(chain);
        let rpart = SPartition {
            s1: part.s2.clone(),
            s2: part.s1.clone(),
        };
        let (a, b) = rebuild_with_escape_path(&rd, &rchain, &rpart)?;
        return Ok((reverse_chain(&a), reverse_chain(&b)));
    }
    let top = chain.top().clone();
    let u = &top.vertices;
    let m = u.len();
    let path = shortest_escape_path(d, &top, &part.s1)?;
    let y = &path.vertices;
    let q = y.len();
    let before_landing = y[q - 2];
    let two_before = y[q - 3];

    let (f1, f2, cycles) = if part.s2.contains(&before_landing) {
        // The approach vertex dominates the whole cycle: anchor on the
        // lowest-id cycle vertex outside the part of the vertex two before
        // the landing; that one is forced to dominate it.
        let anchor = u
            .iter()
            .copied()
            .filter(|&x| d.part_of(x) != d.part_of(two_before))
            .min()
            .ok_or_else(|| internal("cycle spans a single part"))?;
        if !d.dominates(anchor, two_before) {
            return Err(internal(format!(
                "missing forced arc {anchor}->{two_before}"
            )));
        }
        if !d.dominates(before_landing, anchor) {
            return Err(internal(format!(
                "vertex {before_landing} does not dominate the cycle"
            )));
        }
        let zpos = top.position(anchor).expect("anchor lies on the cycle");
        let mut cycles = Vec::with_capacity(m - 1);
        for r in 0..=m - 2 {
            let mut vs = Vec::with_capacity(r + 3);
            vs.push(anchor);
            vs.push(two_before);
            vs.push(before_landing);
            for t in 0..r {
                vs.push(u[(zpos + m - r + t) % m]);
            }
            cycles.push(Cycle::new(vs));
        }
        (
            Arc::new(anchor, two_before),
            Arc::new(two_before, before_landing),
            cycles,
        )
    } else {
        // The path interior sits outside both sides, so every interior
        // vertex is forced back onto the path start; prefixes of the path
        // close into cycles, then the walk continues around the big cycle.
        for t in 2..q {
            if !d.dominates(y[t], y[0]) {
                return Err(internal(format!("missing forced arc {}->{}", y[t], y[0])));
            }
        }
        let mut cycles = Vec::with_capacity(q - 2 + m - 1);
        for t in 2..q {
            cycles.push(Cycle::new(y[..=t].to_vec()));
        }
        let landing = y[q - 1];
        let p0 = top
            .position(landing)
            .ok_or_else(|| internal("escape path does not land on the cycle"))?;
        for r in 1..=m - 1 {
            let closer = u[(p0 + r) % m];
            if !d.dominates(closer, y[0]) {
                return Err(internal(format!("missing forced arc {closer}->{}", y[0])));
            }
            let mut vs = y.clone();
            for t in 1..=r {
                vs.push(u[(p0 + t) % m]);
            }
            cycles.push(Cycle::new(vs));
        }
        (Arc::new(y[0], y[1]), Arc::new(y[1], y[2]), cycles)
    };

    let chain1 = CycleChain::new(f1, cycles.clone());
    let chain2 = CycleChain::new(
        f2,
        cycles.into_iter().map(|c| c.rotated_to(f2.tail)).collect(),
    );
    debug_assert!(verify_chain(d, &chain1, chain1.max_len()).is_ok());
    debug_assert!(verify_chain(d, &chain2, chain2.max_len()).is_ok());
    Ok((chain1, chain2))
}

/// Produce a verified two-arc certificate for a strong tournament with at
/// least three parts.
///
/// Start from the first 3-cycle and its first two arcs; while the common
/// length is short of the part count, try to splice each chain up by one,
/// and when a chain cannot be spliced, rebuild both chains from its top
/// cycle. Rebuilds may overshoot; chains are trimmed back to `3..=c` at
/// assembly.
pub fn two_pancyclic_arcs(
    d: &MultipartiteTournament,
) -> Result<TwoArcCertificate, ConstructError> {
    let c = d.part_count();
    if c < 3 {
        return Err(ConstructError::TooFewParts(c));
    }
    if !d.is_strong() {
        return Err(ConstructError::NotStrong);
    }
    let base = find_three_cycle(d)?;
    let (a, b) = (base.vertices[0], base.vertices[1]);
    let mut state = ExtensionState {
        chains: [
            CycleChain::new(Arc::new(a, b), vec![base.clone()]),
            CycleChain::new(Arc::new(b, base.vertices[2]), vec![base.rotated_to(b)]),
        ],
        m: 3,
    };
    while state.m < c {
        debug_assert!(state
            .chains
            .iter()
            .all(|ch| verify_chain(d, ch, state.m).is_ok()));
        let mut rebuilt = false;
        for k in 0..2 {
            if let Some(extended) = try_insertion(d, &state.chains[k]) {
                state.chains[k] = extended;
                continue;
            }
            let (one, two) = match classify_outside(d, state.chains[k].top()) {
                OutsideClassification::Mixed(candidates) => {
                    debug_assert!(candidates.iter().all(|(_, p)| p.is_none()));
                    let (w, _) = candidates
                        .first()
                        .copied()
                        .ok_or_else(|| internal("mixed classification with no vertices"))?;
                    rebuild_blocked_switch(d, &state.chains[k], w)?
                }
                OutsideClassification::Partitioned(part) => {
                    rebuild_with_escape_path(d, &state.chains[k], &part)?
                }
            };
            if one.max_len() != two.max_len() {
                return Err(internal(format!(
                    "rebuilt chains disagree on length: {} vs {}",
                    one.max_len(),
                    two.max_len()
                )));
            }
            state.m = one.max_len();
            state.chains = [one, two];
            rebuilt = true;
            break;
        }
        if !rebuilt {
            state.m += 1;
        }
    }
    let mut chains = state.chains;
    for chain in &mut chains {
        chain.cycles.truncate(c - 2);
    }
    let cert = TwoArcCertificate { c, chains };
    debug_assert!(crate::witness::verify_certificate(d, &cert).is_ok());
    Ok(cert)
}
