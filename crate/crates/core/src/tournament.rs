//! Multipartite-tournament data model: vertex partition, complete cross-part
//! orientation, validation, reachability and the instance text format.
//!
//! Vertex ids run `0..n` and are assigned contiguously part by part (part 0
//! first), so the part of a vertex is derivable from the part sizes alone.
//! The orientation is stored as a dense dominance matrix, but the observable
//! contract is [`MultipartiteTournament::dominates`]. Values are immutable
//! after construction; every operation here is a pure function of the value.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::witness::{self, Cycle, CycleViolation};

/// A directed arc `tail -> head` between vertices of different parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }

    /// The same pair with the direction flipped.
    pub fn reversed(self) -> Self {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// Why a part list and arc list do not describe a multipartite tournament.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("at least one part is required")]
    NoParts,
    #[error("part {0} has size zero")]
    EmptyPart(usize),
    #[error("vertex id {id} out of range (n = {n})")]
    BadVertexId { id: usize, n: usize },
    #[error("arc {0} joins two vertices of part {1}")]
    IntraPartArc(Arc, usize),
    #[error("pair {{{0}, {1}}} is oriented more than once")]
    DoubleArc(usize, usize),
    #[error("cross-part pair {{{0}, {1}}} is not oriented")]
    MissingPair(usize, usize),
}

/// A cycle handed to [`MultipartiteTournament::outside_part_vertices`] failed
/// validation; the inner list holds the violated clauses.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("invalid cycle: {0:?}")]
pub struct InvalidCycle(pub Vec<CycleViolation>);

/// An orientation of a complete c-partite graph: every cross-part vertex pair
/// carries exactly one arc, no intra-part arcs exist.
#[derive(Clone, PartialEq, Eq)]
pub struct MultipartiteTournament {
    part_sizes: Vec<usize>,
    part_of: Vec<usize>,
    dom: Vec<bool>, // row-major n*n; dom[x*n + y] <=> arc x -> y
}

impl MultipartiteTournament {
    /// Validates and builds: all parts nonempty, every arc crosses parts, and
    /// every cross-part pair is oriented exactly once.
    pub fn new(part_sizes: Vec<usize>, arcs: &[Arc]) -> Result<Self, BuildError> {
        if part_sizes.is_empty() {
            return Err(BuildError::NoParts);
        }
        if let Some(p) = part_sizes.iter().position(|&s| s == 0) {
            return Err(BuildError::EmptyPart(p));
        }
        let n: usize = part_sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &s) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, s));
        }
        let mut dom = vec![false; n * n];
        for &arc in arcs {
            let Arc { tail, head } = arc;
            if tail >= n {
                return Err(BuildError::BadVertexId { id: tail, n });
            }
            if head >= n {
                return Err(BuildError::BadVertexId { id: head, n });
            }
            if tail == head || part_of[tail] == part_of[head] {
                return Err(BuildError::IntraPartArc(arc, part_of[tail]));
            }
            if dom[tail * n + head] || dom[head * n + tail] {
                return Err(BuildError::DoubleArc(tail.min(head), tail.max(head)));
            }
            dom[tail * n + head] = true;
        }
        for x in 0..n {
            for y in x + 1..n {
                if part_of[x] != part_of[y] && !dom[x * n + y] && !dom[y * n + x] {
                    return Err(BuildError::MissingPair(x, y));
                }
            }
        }
        Ok(MultipartiteTournament {
            part_sizes,
            part_of,
            dom,
        })
    }

    pub fn part_count(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    /// Part index of `v`. Panics if `v` is out of range.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// True iff the arc `x -> y` is present. Same-part pairs (including
    /// `x == y`) are never adjacent, so this is false for them. Panics if an
    /// id is out of range.
    pub fn dominates(&self, x: usize, y: usize) -> bool {
        let n = self.vertex_count();
        assert!(x < n && y < n, "vertex id out of range ({x}, {y} vs n = {n})");
        self.dom[x * n + y]
    }

    /// Bounds-checked arc membership; false for out-of-range ids.
    pub fn has_arc(&self, arc: Arc) -> bool {
        let n = self.vertex_count();
        arc.tail < n && arc.head < n && self.dom[arc.tail * n + arc.head]
    }

    /// All arcs in canonical `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |x| {
            (0..n).filter_map(move |y| self.dom[x * n + y].then_some(Arc::new(x, y)))
        })
    }

    /// Out-neighbors of `v`, ascending.
    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.vertex_count();
        (0..n).filter(move |&u| self.dom[v * n + u])
    }

    /// In-neighbors of `v`, ascending.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.vertex_count();
        (0..n).filter(move |&u| self.dom[u * n + v])
    }

    /// True iff every vertex reaches every other along directed paths.
    /// Double reachability from vertex 0: the forward and backward sweeps
    /// must both cover the whole vertex set.
    pub fn is_strong(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        self.reach_count(0, false) == n && self.reach_count(0, true) == n
    }

    fn reach_count(&self, start: usize, backward: bool) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            let next: Vec<usize> = if backward {
                self.in_neighbors(v).collect()
            } else {
                self.out_neighbors(v).collect()
            };
            for u in next {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count
    }

    /// The same vertices and parts with every arc direction flipped.
    pub fn reverse(&self) -> Self {
        let n = self.vertex_count();
        let mut dom = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                dom[y * n + x] = self.dom[x * n + y];
            }
        }
        MultipartiteTournament {
            part_sizes: self.part_sizes.clone(),
            part_of: self.part_of.clone(),
            dom,
        }
    }

    /// Vertices whose part has no representative on `cycle`, ascending.
    pub fn outside_part_vertices(&self, cycle: &Cycle) -> Result<Vec<usize>, InvalidCycle> {
        witness::verify_cycle(self, cycle).map_err(InvalidCycle)?;
        let mut represented = vec![false; self.part_count()];
        for &v in &cycle.vertices {
            represented[self.part_of[v]] = true;
        }
        Ok((0..self.vertex_count())
            .filter(|&v| !represented[self.part_of[v]])
            .collect())
    }
}

impl fmt::Debug for MultipartiteTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MultipartiteTournament(parts {:?}, arcs {:?})",
            self.part_sizes,
            self.arcs().collect::<Vec<_>>()
        )
    }
}

/// Canonical serialization: header, part sizes, then arcs sorted by
/// `(tail, head)`.
impl fmt::Display for MultipartiteTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mpt {}", self.part_count())?;
        write!(f, "parts")?;
        for s in &self.part_sizes {
            write!(f, " {s}")?;
        }
        writeln!(f)?;
        for arc in self.arcs() {
            writeln!(f, "arc {} {}", arc.tail, arc.head)?;
        }
        Ok(())
    }
}

/// Why a piece of text is not an instance.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    /// `line` is 1-based; 0 flags a whole-file problem such as a missing
    /// header.
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Build(#[from] BuildError),
}

impl FromStr for MultipartiteTournament {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut declared_c: Option<usize> = None;
        let mut part_sizes: Option<Vec<usize>> = None;
        let mut arcs: Vec<Arc> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |msg: String| ParseError::Syntax { line, msg };
            let mut words = content.split_whitespace();
            let key = words.next().expect("non-empty line has a first word");
            match key {
                "mpt" => {
                    if declared_c.is_some() {
                        return Err(syntax("duplicate 'mpt' header".into()));
                    }
                    let c = words
                        .next()
                        .ok_or_else(|| syntax("'mpt' needs a part count".into()))?
                        .parse::<usize>()
                        .map_err(|e| syntax(format!("bad part count: {e}")))?;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after 'mpt <c>'".into()));
                    }
                    declared_c = Some(c);
                }
                "parts" => {
                    let c = declared_c
                        .ok_or_else(|| syntax("'parts' before the 'mpt' header".into()))?;
                    if part_sizes.is_some() {
                        return Err(syntax("duplicate 'parts' line".into()));
                    }
                    let sizes = words
                        .map(|w| {
                            w.parse::<usize>()
                                .map_err(|e| syntax(format!("bad part size '{w}': {e}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    if sizes.len() != c {
                        return Err(syntax(format!(
                            "expected {c} part sizes, found {}",
                            sizes.len()
                        )));
                    }
                    part_sizes = Some(sizes);
                }
                "arc" => {
                    if part_sizes.is_none() {
                        return Err(syntax("'arc' before the 'parts' line".into()));
                    }
                    let mut id = |what: &str| {
                        words
                            .next()
                            .ok_or_else(|| syntax(format!("'arc' needs a {what}")))?
                            .parse::<usize>()
                            .map_err(|e| syntax(format!("bad {what}: {e}")))
                    };
                    let tail = id("tail")?;
                    let head = id("head")?;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after 'arc <tail> <head>'".into()));
                    }
                    arcs.push(Arc::new(tail, head));
                }
                other => {
                    return Err(syntax(format!("unknown directive '{other}'")));
                }
            }
        }
        let part_sizes = part_sizes.ok_or(ParseError::Syntax {
            line: 0,
            msg: "missing 'mpt' and 'parts' lines".into(),
        })?;
        Ok(MultipartiteTournament::new(part_sizes, &arcs)?)
    }
}
