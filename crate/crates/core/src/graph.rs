//! Matching polynomials of weighted simple graphs via the vertex-deletion
//! recurrence, with the vertex-deletion interlacing verification, and rook
//! polynomials realized as matching polynomials of bipartite board graphs.
//!
//! For a graph `G` on `n` vertices with edge weights `W`, `p(G, k)` is the
//! weighted count of `k`-matchings: the sum over sets of `k` pairwise
//! disjoint edges of the product of their weights, with `p(G, 0) = 1`.
//! Counts come from the deletion recurrence
//!
//! ```text
//! p(G, k) = p(G − v, k) + Σ_{u ∼ v} W(u, v) · p(G − {v, u}, k − 1)
//! ```
//!
//! memoized on vertex-subset bitmasks (pivot `v` = highest-degree vertex of
//! the induced subgraph). Two generating forms are exposed: the signed
//! matching polynomial `Q(G, x) = Σₖ (−1)ᵏ p(G, k) x^{n−2k}` (the ordinary
//! matching polynomial for unit weights) and the unsigned generating
//! polynomial `Σₖ p(G, k) xᵏ` (the rook form for board graphs).
//! Real-rootedness claims apply to the signed form, PF claims to the
//! unsigned form. Everything is exact.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interlace::compare_zero_orders;
use crate::poly::{Poly, Rat};
use crate::report::CheckReport;
use crate::roots::{is_real_rooted, isolate_real_roots};

/// Hard cap on vertex count: matching counts memoize on a `u32`
/// vertex-subset bitmask.
pub const VERTEX_CAP: usize = 24;

/// Cap for the edge-subset enumeration oracle, which walks all `2^m`
/// subsets of the edge set.
pub const EDGE_ENUMERATION_CAP: usize = 12;

/// A simple graph on vertices `0..vertex_count` with rational edge weights.
///
/// Construction validates the shape: every edge `(u, v)` needs `u < v` (no
/// loops), both endpoints in range, no duplicate edges, and at most
/// [`VERTEX_CAP`] vertices. Weights may be any rational — matching counts
/// are well defined regardless — but the Heilmann–Lieb verification
/// requires nonnegative weights and rejects graphs violating that
/// hypothesis.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpec {
    vertex_count: usize,
    edges: Vec<(usize, usize, Rat)>,
}

impl GraphSpec {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, Rat)>) -> Result<GraphSpec> {
        if vertex_count > VERTEX_CAP {
            return Err(Error::Graph(format!(
                "vertex count {vertex_count} exceeds the cap {VERTEX_CAP}"
            )));
        }
        let mut seen = BTreeSet::new();
        for &(u, v, _) in &edges {
            if u >= v {
                return Err(Error::Graph(format!(
                    "edge ({u}, {v}) must satisfy u < v (simple graph, no loops)"
                )));
            }
            if v >= vertex_count {
                return Err(Error::Graph(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if !seen.insert((u, v)) {
                return Err(Error::Graph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(GraphSpec {
            vertex_count,
            edges,
        })
    }

    /// Unit-weight graph from a bare edge list.
    pub fn unit(vertex_count: usize, edges: &[(usize, usize)]) -> Result<GraphSpec> {
        GraphSpec::new(
            vertex_count,
            edges.iter().map(|&(u, v)| (u, v, Rat::one())).collect(),
        )
    }

    /// Path on `n` vertices (unit weights; `n = 0` is the empty graph).
    pub fn path(n: usize) -> Result<GraphSpec> {
        GraphSpec::unit(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
    }

    /// Cycle on `n ≥ 3` vertices (unit weights).
    pub fn cycle(n: usize) -> Result<GraphSpec> {
        if n < 3 {
            return Err(Error::Graph(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        GraphSpec::unit(n, &edges)
    }

    /// Complete graph on `n` vertices (unit weights).
    pub fn complete(n: usize) -> Result<GraphSpec> {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        GraphSpec::unit(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, Rat)] {
        &self.edges
    }

    /// The graph with vertex `v` (and its incident edges) removed; vertices
    /// above `v` shift down by one.
    pub fn vertex_deleted(&self, v: usize) -> Result<GraphSpec> {
        if v >= self.vertex_count {
            return Err(Error::Graph(format!(
                "vertex {v} out of range for {} vertices",
                self.vertex_count
            )));
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        GraphSpec::new(
            self.vertex_count - 1,
            self.edges
                .iter()
                .filter(|&&(a, b, _)| a != v && b != v)
                .map(|(a, b, w)| (shift(*a), shift(*b), w.clone()))
                .collect(),
        )
    }

    /// Every vertex reachable from every other (vacuously true with ≤ 1
    /// vertex). Weights are ignored: a weight-0 edge still connects.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Parses the graph text format: the first non-comment line is the
    /// vertex count, each following line is `u v [weight]` (weight defaults
    /// to 1; rationals as `num/den`). Blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<GraphSpec> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Graph("empty graph file: expected a vertex-count line".into()))?;
        let vertex_count: usize = header
            .parse()
            .map_err(|_| Error::Graph(format!("bad vertex count line {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 && fields.len() != 3 {
                return Err(Error::Graph(format!(
                    "bad edge line {line:?}: expected `u v [weight]`"
                )));
            }
            let endpoint = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Graph(format!("bad vertex {s:?} in line {line:?}")))
            };
            let weight = match fields.get(2) {
                None => Rat::one(),
                Some(s) => s
                    .parse::<Rat>()
                    .map_err(|_| Error::Graph(format!("bad weight {s:?} in line {line:?}")))?,
            };
            edges.push((endpoint(fields[0])?, endpoint(fields[1])?, weight));
        }
        GraphSpec::new(vertex_count, edges)
    }
}

/// Memoized evaluator for the deletion recurrence; one instance per graph
/// (single-threaded per graph, batches of graphs parallel).
struct Counter {
    adj: Vec<Vec<(usize, Rat)>>,
    memo: HashMap<u32, Vec<Rat>>,
}

impl Counter {
    fn new(g: &GraphSpec) -> Counter {
        let mut adj = vec![Vec::new(); g.vertex_count];
        for (u, v, w) in &g.edges {
            adj[*u].push((*v, w.clone()));
            adj[*v].push((*u, w.clone()));
        }
        Counter {
            adj,
            memo: HashMap::new(),
        }
    }

    /// Present vertex with the most present neighbors, or `None` when the
    /// induced subgraph has no edges at all.
    fn pivot(&self, mask: u32) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.adj.len() {
            if mask & (1 << v) == 0 {
                continue;
            }
            let degree = self.adj[v]
                .iter()
                .filter(|(u, _)| mask & (1 << *u) != 0)
                .count();
            if degree > 0 && best.is_none_or(|(_, d)| degree > d) {
                best = Some((v, degree));
            }
        }
        best.map(|(v, _)| v)
    }

    /// `p(G[mask], k)` for `k = 0, 1, …`, trailing zeros trimmed.
    fn counts(&mut self, mask: u32) -> Vec<Rat> {
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        let result = match self.pivot(mask) {
            None => vec![Rat::one()],
            Some(v) => {
                let rest = mask & !(1 << v);
                let mut acc = self.counts(rest);
                let neighbors: Vec<(usize, Rat)> = self.adj[v]
                    .iter()
                    .filter(|(u, _)| mask & (1 << *u) != 0)
                    .cloned()
                    .collect();
                for (u, w) in neighbors {
                    if w.is_zero() {
                        continue;
                    }
                    let sub = self.counts(rest & !(1 << u));
                    if acc.len() < sub.len() + 1 {
                        acc.resize(sub.len() + 1, Rat::zero());
                    }
                    for (k, c) in sub.iter().enumerate() {
                        acc[k + 1] = &acc[k + 1] + &(&w * c);
                    }
                }
                while acc.len() > 1 && acc.last().is_some_and(Zero::is_zero) {
                    acc.pop();
                }
                acc
            }
        };
        self.memo.insert(mask, result.clone());
        result
    }
}

fn full_mask(vertex_count: usize) -> u32 {
    if vertex_count == 0 {
        0
    } else {
        (1u32 << vertex_count) - 1
    }
}

/// `Σₖ (−1)ᵏ counts[k] x^{n−2k}` for a subgraph on `n` vertices.
fn signed_from_counts(n: usize, counts: &[Rat]) -> Poly {
    let mut coeffs = vec![Rat::zero(); n + 1];
    for (k, c) in counts.iter().enumerate() {
        debug_assert!(2 * k <= n, "a {k}-matching needs {} vertices", 2 * k);
        coeffs[n - 2 * k] = if k.is_multiple_of(2) {
            c.clone()
        } else {
            -c.clone()
        };
    }
    Poly::new(coeffs)
}

/// Weighted matching counts `p(G, 0), p(G, 1), …` up to the largest size
/// with a nonzero count (always starts with `p(G, 0) = 1`).
pub fn matching_counts(g: &GraphSpec) -> Vec<Rat> {
    Counter::new(g).counts(full_mask(g.vertex_count))
}

/// Signed matching polynomial `Q(G, x) = Σₖ (−1)ᵏ p(G, k) x^{n−2k}`; equals
/// the ordinary matching polynomial `M(G, x)` for unit weights.
pub fn matching_polynomial(g: &GraphSpec) -> Poly {
    signed_from_counts(g.vertex_count, &matching_counts(g))
}

/// Unsigned matching generating polynomial `Σₖ p(G, k) xᵏ`.
pub fn matching_generating_polynomial(g: &GraphSpec) -> Poly {
    Poly::new(matching_counts(g))
}

/// Independent oracle for [`matching_counts`]: enumerates every edge subset
/// and keeps those that are matchings. Exponential in the edge count, so
/// capped at [`EDGE_ENUMERATION_CAP`] edges.
pub fn matching_counts_by_enumeration(g: &GraphSpec) -> Result<Vec<Rat>> {
    let m = g.edges.len();
    if m > EDGE_ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            n: m,
            cap: EDGE_ENUMERATION_CAP,
        });
    }
    let mut counts = vec![Rat::one()];
    for subset in 1u32..(1 << m) {
        let mut used = 0u32;
        let mut weight = Rat::one();
        let mut size = 0usize;
        let mut disjoint = true;
        for (i, (u, v, w)) in g.edges.iter().enumerate() {
            if subset & (1 << i) == 0 {
                continue;
            }
            let pair = (1u32 << u) | (1u32 << v);
            if used & pair != 0 {
                disjoint = false;
                break;
            }
            used |= pair;
            weight = &weight * w;
            size += 1;
        }
        if !disjoint {
            continue;
        }
        if counts.len() <= size {
            counts.resize(size + 1, Rat::zero());
        }
        counts[size] = &counts[size] + &weight;
    }
    while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
        counts.pop();
    }
    Ok(counts)
}

/// Rook polynomial of a board (a finite set of `(row, column)` cells):
/// the unsigned matching generating polynomial of the bipartite graph with
/// one vertex per occupied row and column and one unit edge per cell, so
/// the `xᵏ` coefficient counts placements of `k` nonattacking rooks.
pub fn rook_polynomial(cells: &[(u32, u32)]) -> Result<Poly> {
    let mut seen = BTreeSet::new();
    for &(r, c) in cells {
        if !seen.insert((r, c)) {
            return Err(Error::Graph(format!("duplicate cell ({r}, {c})")));
        }
    }
    let rows: Vec<u32> = cells
        .iter()
        .map(|c| c.0)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cols: Vec<u32> = cells
        .iter()
        .map(|c| c.1)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let row_index: HashMap<u32, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let col_index: HashMap<u32, usize> = cols
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, rows.len() + i))
        .collect();
    let g = GraphSpec::new(
        rows.len() + cols.len(),
        cells
            .iter()
            .map(|(r, c)| (row_index[r], col_index[c], Rat::one()))
            .collect(),
    )?;
    Ok(matching_generating_polynomial(&g))
}

/// Parses a board file: one `row column` cell per line, blank lines and
/// `#` comments skipped.
pub fn parse_board(text: &str) -> Result<Vec<(u32, u32)>> {
    let mut cells = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [r, c] = fields[..] else {
            return Err(Error::Graph(format!(
                "bad cell line {line:?}: expected `row column`"
            )));
        };
        let coord = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::Graph(format!("bad coordinate {s:?} in line {line:?}")))
        };
        cells.push((coord(r)?, coord(c)?));
    }
    Ok(cells)
}

/// Hard cap for [`small_graph_classes`]: the orbit expansion walks all
/// `2^C(n,2)` edge sets.
pub const CLASS_SWEEP_CAP: usize = 6;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    permutations(n - 1)
        .into_iter()
        .flat_map(|tail| {
            (0..n).map(move |slot| {
                let mut perm = tail.clone();
                perm.insert(slot, n - 1);
                perm
            })
        })
        .collect()
}

/// One unit-weight representative per vertex-relabeling (isomorphism) class
/// of graphs on `n` vertices, `n ≤ 6`.
///
/// Every one of the `2^C(n,2)` labeled graphs is covered by expanding the
/// full relabeling orbit of each representative, so a sweep over the
/// returned representatives is exhaustive for any property that is
/// invariant under vertex relabeling (matching counts, real-rootedness,
/// the vertex-deletion interlacing verdict, connectivity, …).
pub fn small_graph_classes(n: usize) -> Result<Vec<GraphSpec>> {
    if n > CLASS_SWEEP_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: CLASS_SWEEP_CAP,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let pair_index: HashMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, &pair)| (pair, i))
        .collect();
    // Each vertex relabeling acts on edge sets through a permutation of
    // the pair indices.
    let actions: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    pair_index[&(a, b)]
                })
                .collect()
        })
        .collect();
    let total = 1usize << pairs.len();
    let mut visited = vec![false; total];
    let mut reps = Vec::new();
    for mask in 0..total {
        if visited[mask] {
            continue;
        }
        for action in &actions {
            let mut image = 0usize;
            for (i, &j) in action.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    image |= 1 << j;
                }
            }
            debug_assert_eq!(image.count_ones(), mask.count_ones());
            visited[image] = true;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << *i) != 0)
            .map(|(_, &pair)| pair)
            .collect();
        reps.push(GraphSpec::unit(n, &edges).expect("pairs are in range"));
    }
    Ok(reps)
}

fn real_rooted_clause(p: &Poly) -> (bool, String) {
    match p.degree() {
        None => (true, "zero polynomial (vacuously real-rooted)".into()),
        Some(0) => (true, "constant (no roots)".into()),
        Some(d) => {
            let iso = isolate_real_roots(p).expect("nonzero");
            let real: usize = iso.roots.iter().map(|r| r.multiplicity).sum();
            (
                real == d,
                format!("{real} of {d} roots real (with multiplicity)"),
            )
        }
    }
}

/// Verifies the vertex-deletion interlacing property on one graph: the
/// signed matching polynomial `Q(G)` is real-rooted, and `Q(G − v)`
/// interlaces `Q(G)` for every vertex `v`. Requires nonnegative edge
/// weights (the hypothesis of the property); a negative weight is a domain
/// error, not a failed clause.
pub fn verify_heilmann_lieb(g: &GraphSpec) -> Result<CheckReport> {
    if let Some((u, v, w)) = g.edges.iter().find(|(_, _, w)| w.is_negative()) {
        return Err(Error::Graph(format!(
            "negative weight {w} on edge ({u}, {v})"
        )));
    }
    let mut rep = CheckReport::new();
    rep.hypothesis(
        "edge weights nonnegative",
        true,
        format!(
            "{} vertices, {} edges, all weights >= 0",
            g.vertex_count,
            g.edges.len()
        ),
    );
    // One memo table serves the graph and all its vertex deletions: the
    // deleted graphs are vertex subsets of the same recurrence.
    let mut counter = Counter::new(g);
    let full = full_mask(g.vertex_count);
    let q = signed_from_counts(g.vertex_count, &counter.counts(full));
    rep.constructed("Q(G, x)", q.to_text("x"));
    let (q_real, witness) = real_rooted_clause(&q);
    rep.conclusion("Q(G) real-rooted", q_real, witness);
    for v in 0..g.vertex_count {
        let qv = signed_from_counts(g.vertex_count - 1, &counter.counts(full & !(1 << v)));
        rep.constructed(format!("Q(G - {{{v}}}, x)"), qv.to_text("x"));
        let (pass, witness) = if !q_real || !is_real_rooted(&qv) {
            (
                false,
                "not evaluated: an operand is not real-rooted".to_owned(),
            )
        } else {
            let cert = compare_zero_orders(&q, &qv).expect("both operands real-rooted");
            (
                cert.relation.is_interlacing(),
                format!("relation: {}", cert.relation.label()),
            )
        };
        rep.conclusion(format!("Q(G - {{{v}}}) interlaces Q(G)"), pass, witness);
    }
    Ok(rep)
}
