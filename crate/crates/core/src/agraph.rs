//! Genus-zero stable A-graphs.
//!
//! A graph records the combinatorics of a reducible stable map: vertices are
//! components carrying a degree `beta`, edges are nodes, and tails are marked
//! points. Flags are edge endpoints plus tails. Genus is zero throughout, so
//! no genus is stored and the underlying graph must be a tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type TailId = u32;

/// Largest tooth count accepted by [`enumerate_nondegenerate_basic`].
pub const MAX_ENUMERATION_DEGREE: usize = 8;

/// Ambient data `(n, d)`: a degree-`d` hypersurface in `P^n` with `2 <= d <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientContext {
    n: i64,
    d: i64,
}

impl AmbientContext {
    pub fn new(n: i64, d: i64) -> Result<Self> {
        if d < 2 || d > n - 1 {
            return Err(Error::Hypothesis(format!(
                "hypersurface degree must satisfy 2 <= d <= n - 1 (got n = {n}, d = {d})"
            )));
        }
        Ok(Self { n, d })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn dim_x(&self) -> i64 {
        self.n - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableAGraph {
    vertices: Vec<(VertexId, u32)>,
    edges: Vec<(VertexId, VertexId)>,
    tails: Vec<(TailId, VertexId)>,
}

/// One violated invariant reported by [`StableAGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Empty,
    DuplicateVertex(VertexId),
    DuplicateTail(TailId),
    UnknownEdgeEndpoint { edge: usize, vertex: VertexId },
    UnknownTailVertex { tail: TailId, vertex: VertexId },
    NotATree,
    Disconnected,
    Unstable { vertex: VertexId, flags: usize },
    ZeroDegree,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty: no vertices"),
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex id {v}"),
            Violation::DuplicateTail(t) => write!(f, "duplicate tail id {t}"),
            Violation::UnknownEdgeEndpoint { edge, vertex } => {
                write!(f, "edge {edge} references unknown vertex {vertex}")
            }
            Violation::UnknownTailVertex { tail, vertex } => {
                write!(f, "tail {tail} attached to unknown vertex {vertex}")
            }
            Violation::NotATree => write!(f, "not a tree: the edges contain a cycle"),
            Violation::Disconnected => write!(f, "not a tree: graph is disconnected"),
            Violation::Unstable { vertex, flags } => {
                let plural = if *flags == 1 { "" } else { "s" };
                write!(f, "stability: beta-0 vertex with {flags} flag{plural} (vertex {vertex})")
            }
            Violation::ZeroDegree => write!(f, "total degree beta is zero"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

impl StableAGraph {
    /// Builds a graph without checking it; use [`validate`](Self::validate)
    /// to list violated invariants.
    pub fn new(
        vertices: Vec<(VertexId, u32)>,
        edges: Vec<(VertexId, VertexId)>,
        tails: Vec<(TailId, VertexId)>,
    ) -> Self {
        Self { vertices, edges, tails }
    }

    /// `tau_r(e)`: one vertex of degree `e` carrying `r` tails.
    pub fn single_vertex(tails: usize, beta: u32) -> Self {
        Self::new(vec![(0, beta)], Vec::new(), (0..tails as u32).map(|t| (t, 0)).collect())
    }

    /// Path of `e` degree-one vertices with the tail on vertex 0.
    pub fn chain(e: usize) -> Self {
        let vertices = (0..e as u32).map(|v| (v, 1)).collect();
        let edges = (1..e as u32).map(|v| (v - 1, v)).collect();
        Self::new(vertices, edges, vec![(0, 0)])
    }

    /// The comb: a degree-zero center (vertex 0) carrying the tail, joined to
    /// `e` degree-one teeth `1..=e`.
    pub fn comb(e: usize) -> Self {
        let mut vertices = vec![(0, 0)];
        vertices.extend((1..=e as u32).map(|v| (v, 1)));
        let edges = (1..=e as u32).map(|v| (0, v)).collect();
        Self::new(vertices, edges, vec![(0, 0)])
    }

    pub fn vertices(&self) -> &[(VertexId, u32)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn tails(&self) -> &[(TailId, VertexId)] {
        &self.tails
    }

    /// `beta(tau)`, the sum of the vertex degrees.
    pub fn total_degree(&self) -> u64 {
        self.vertices.iter().map(|&(_, b)| u64::from(b)).sum()
    }

    pub fn beta(&self, v: VertexId) -> Option<u32> {
        self.vertices.iter().find(|&&(id, _)| id == v).map(|&(_, b)| b)
    }

    /// Number of flags, `2 #Edge + #Tail`.
    pub fn flag_count(&self) -> usize {
        2 * self.edges.len() + self.tails.len()
    }

    /// Flags at `v`: edge endpoints at `v` plus tails attached to `v`.
    pub fn flags_at(&self, v: VertexId) -> usize {
        let ends: usize = self
            .edges
            .iter()
            .map(|&(x, y)| usize::from(x == v) + usize::from(y == v))
            .sum();
        ends + self.tails.iter().filter(|&&(_, w)| w == v).count()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.vertices.is_empty() {
            violations.push(Violation::Empty);
        }

        let mut index = BTreeMap::new();
        for (i, &(v, _)) in self.vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                violations.push(Violation::DuplicateVertex(v));
            }
        }
        let mut seen_tails = BTreeSet::new();
        for &(t, v) in &self.tails {
            if !seen_tails.insert(t) {
                violations.push(Violation::DuplicateTail(t));
            }
            if !index.contains_key(&v) {
                violations.push(Violation::UnknownTailVertex { tail: t, vertex: v });
            }
        }

        let mut forest = DisjointSets::new(self.vertices.len());
        let mut cycle = false;
        let mut dangling = false;
        for (i, &(x, y)) in self.edges.iter().enumerate() {
            let (Some(&ix), Some(&iy)) = (index.get(&x), index.get(&y)) else {
                let vertex = if index.contains_key(&x) { y } else { x };
                violations.push(Violation::UnknownEdgeEndpoint { edge: i, vertex });
                dangling = true;
                continue;
            };
            if !forest.union(ix, iy) {
                cycle = true;
            }
        }
        if cycle {
            violations.push(Violation::NotATree);
        }
        if !self.vertices.is_empty() && !dangling && forest.components() > 1 {
            violations.push(Violation::Disconnected);
        }

        for &(v, beta) in &self.vertices {
            let flags = self.flags_at(v);
            if beta == 0 && flags < 3 {
                violations.push(Violation::Unstable { vertex: v, flags });
            }
        }
        if !self.vertices.is_empty() && self.total_degree() == 0 {
            violations.push(Violation::ZeroDegree);
        }
        ValidationReport { violations }
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report.messages().join("; ")))
        }
    }

    /// `beta(v)` in `{0, 1}` everywhere and exactly one tail.
    pub fn is_basic(&self) -> bool {
        self.tails.len() == 1 && self.vertices.iter().all(|&(_, b)| b <= 1)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.is_basic() && self.vertices.iter().all(|&(_, b)| b == 1)
    }

    fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.iter().map(|&(v, _)| (v, Vec::new())).collect();
        for &(x, y) in &self.edges {
            adj.entry(x).or_default().push(y);
            adj.entry(y).or_default().push(x);
        }
        adj
    }

    /// Canonical encoding up to isomorphism (vertex and tail ids ignored).
    ///
    /// With exactly one tail the tree is rooted at the tail's vertex;
    /// otherwise it is rooted at its center(s) and the smaller code wins.
    pub fn canonical_form(&self) -> Result<String> {
        self.require_valid()?;
        let adj = self.adjacency();
        let betas: BTreeMap<VertexId, u32> = self.vertices.iter().copied().collect();
        let mut tails_at: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &(_, v) in &self.tails {
            *tails_at.entry(v).or_default() += 1;
        }
        let roots = match self.tails.as_slice() {
            [(_, v)] => vec![*v],
            _ => tree_centers(&adj),
        };
        let prefix = if self.tails.len() == 1 { "T" } else { "C" };
        let code = roots
            .into_iter()
            .map(|r| encode_rooted(r, None, &adj, &betas, &tails_at))
            .min()
            .expect("a valid tree has a center");
        Ok(format!("{prefix}{code}"))
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    pub fn is_chain(&self) -> bool {
        let adj = self.adjacency();
        self.validate().is_ok() && adj.values().all(|nbrs| nbrs.len() <= 2)
    }

    /// One specialization step: a new degree-zero vertex is attached to `v`
    /// and takes over the listed edges (by index) and tails (by id).
    ///
    /// The new vertex receives the next free vertex id.
    pub fn sprout(&self, v: VertexId, moved_edges: &[usize], moved_tails: &[TailId]) -> Result<Self> {
        self.require_valid()?;
        let w = self.vertices.iter().map(|&(id, _)| id).max().unwrap_or(0) + 1;
        let mut out = self.clone();
        for &i in moved_edges {
            let edge = out
                .edges
                .get_mut(i)
                .ok_or_else(|| Error::Parameter(format!("no edge with index {i}")))?;
            match edge {
                (x, _) if *x == v => *x = w,
                (_, y) if *y == v => *y = w,
                _ => return Err(Error::Parameter(format!("edge {i} is not incident to vertex {v}"))),
            }
        }
        for &t in moved_tails {
            let tail = out
                .tails
                .iter_mut()
                .find(|(id, _)| *id == t)
                .ok_or_else(|| Error::Parameter(format!("no tail with id {t}")))?;
            if tail.1 != v {
                return Err(Error::Parameter(format!("tail {t} is not attached to vertex {v}")));
            }
            tail.1 = w;
        }
        out.vertices.push((w, 0));
        out.edges.push((v, w));
        out.require_valid()?;
        Ok(out)
    }
}

/// `dim(X, tau) = (n + 1 - d) beta(tau) + #Tail - #Edge + dim X - 3`.
pub fn expected_dim(g: &StableAGraph, ctx: AmbientContext) -> Result<i64> {
    g.require_valid()?;
    let beta = g.total_degree() as i64;
    Ok((ctx.n() + 1 - ctx.d()) * beta + g.tails().len() as i64 - g.edges().len() as i64 + ctx.dim_x()
        - 3)
}

/// Replaces a nondegenerate basic chain of `e >= 2` lines, tail at an end,
/// by the comb with `e` teeth.
pub fn chain_to_comb(g: &StableAGraph) -> Result<StableAGraph> {
    g.require_valid()?;
    if !g.is_nondegenerate() || !g.is_chain() {
        return Err(Error::InvalidGraph(
            "input must be a nondegenerate basic chain".to_string(),
        ));
    }
    let tail_vertex = g.tails()[0].1;
    if g.flags_at(tail_vertex) > 2 {
        return Err(Error::InvalidGraph(
            "the tail must sit on an end vertex of the chain".to_string(),
        ));
    }
    let e = g.vertices().len();
    if e < 2 {
        return Err(Error::InvalidGraph(
            "a comb needs at least 2 teeth for its degree-0 center to be stable".to_string(),
        ));
    }
    Ok(StableAGraph::comb(e))
}

/// All nondegenerate basic graphs with `e` vertices, one per isomorphism
/// class, ordered by canonical form.
///
/// These are the rooted unlabeled trees on `e` vertices, the tail marking the
/// root. Classes are grown one leaf at a time and deduplicated by canonical
/// form.
pub fn enumerate_nondegenerate_basic(e: usize) -> Result<Vec<StableAGraph>> {
    if !(1..=MAX_ENUMERATION_DEGREE).contains(&e) {
        return Err(Error::Guard(format!(
            "enumeration supports 1 <= e <= {MAX_ENUMERATION_DEGREE}, got {e}"
        )));
    }
    // parent arrays, vertex 0 is the root
    let mut layer: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    layer.insert(rooted_code(&[usize::MAX]), vec![usize::MAX]);
    for _ in 1..e {
        let mut next = BTreeMap::new();
        for parents in layer.values() {
            for v in 0..parents.len() {
                let mut grown = parents.clone();
                grown.push(v);
                next.entry(rooted_code(&grown)).or_insert(grown);
            }
        }
        layer = next;
    }
    Ok(layer
        .into_values()
        .map(|parents| {
            let vertices = (0..parents.len() as u32).map(|v| (v, 1)).collect();
            let edges = parents
                .iter()
                .enumerate()
                .skip(1)
                .map(|(v, &p)| (p as u32, v as u32))
                .collect();
            StableAGraph::new(vertices, edges, vec![(0, 0)])
        })
        .collect())
}

fn rooted_code(parents: &[usize]) -> String {
    let mut children = vec![Vec::new(); parents.len()];
    for (v, &p) in parents.iter().enumerate().skip(1) {
        children[p].push(v);
    }
    fn go(v: usize, children: &[Vec<usize>]) -> String {
        let mut codes: Vec<String> = children[v].iter().map(|&c| go(c, children)).collect();
        codes.sort();
        format!("({})", codes.concat())
    }
    go(0, &children)
}

fn encode_rooted(
    v: VertexId,
    parent: Option<VertexId>,
    adj: &BTreeMap<VertexId, Vec<VertexId>>,
    betas: &BTreeMap<VertexId, u32>,
    tails_at: &BTreeMap<VertexId, usize>,
) -> String {
    let mut codes: Vec<String> = adj[&v]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| encode_rooted(w, Some(v), adj, betas, tails_at))
        .collect();
    codes.sort();
    format!(
        "[{}.{}{}]",
        betas[&v],
        tails_at.get(&v).copied().unwrap_or(0),
        codes.concat()
    )
}

fn tree_centers(adj: &BTreeMap<VertexId, Vec<VertexId>>) -> Vec<VertexId> {
    let mut degree: BTreeMap<VertexId, usize> = adj.iter().map(|(&v, n)| (v, n.len())).collect();
    let mut remaining = adj.len();
    let mut leaves: VecDeque<VertexId> = degree
        .iter()
        .filter(|&(_, &d)| d <= 1)
        .map(|(&v, _)| v)
        .collect();
    while remaining > 2 {
        let mut next = VecDeque::new();
        for leaf in leaves.drain(..) {
            remaining -= 1;
            for w in &adj[&leaf] {
                let d = degree.get_mut(w).expect("neighbor is a vertex");
                *d -= 1;
                if *d == 1 {
                    next.push_back(*w);
                }
            }
        }
        leaves = next;
    }
    leaves.into_iter().collect()
}

struct DisjointSets {
    parent: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), count: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.count -= 1;
        true
    }

    fn components(&self) -> usize {
        self.count
    }
}

// Text record: `vertices: 0:1, 1:0; edges: 0-1; tails: 0@1`

impl fmt::Display for StableAGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vertices: Vec<String> = self.vertices.iter().map(|(v, b)| format!("{v}:{b}")).collect();
        let edges: Vec<String> = self.edges.iter().map(|(x, y)| format!("{x}-{y}")).collect();
        let tails: Vec<String> = self.tails.iter().map(|(t, v)| format!("{t}@{v}")).collect();
        write!(
            f,
            "vertices: {}; edges: {}; tails: {}",
            vertices.join(", "),
            edges.join(", "),
            tails.join(", ")
        )
    }
}

impl FromStr for StableAGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut vertices = None;
        let mut edges = None;
        let mut tails = None;
        for section in s.split(';') {
            let section = section.trim();
            if section.is_empty() {
                continue;
            }
            let (key, body) = section
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("section without key: {section:?}")))?;
            let items = body.split(',').map(str::trim).filter(|item| !item.is_empty());
            match key.trim() {
                "vertices" => vertices = Some(items.map(|i| parse_pair(i, ':')).collect::<Result<Vec<_>>>()?),
                "edges" => edges = Some(items.map(|i| parse_pair(i, '-')).collect::<Result<Vec<_>>>()?),
                "tails" => tails = Some(items.map(|i| parse_pair(i, '@')).collect::<Result<Vec<_>>>()?),
                other => return Err(Error::Parse(format!("unknown section {other:?}"))),
            }
        }
        Ok(Self::new(
            vertices.ok_or_else(|| Error::Parse("missing vertices section".to_string()))?,
            edges.unwrap_or_default(),
            tails.unwrap_or_default(),
        ))
    }
}

fn parse_pair(item: &str, sep: char) -> Result<(u32, u32)> {
    let (x, y) = item
        .split_once(sep)
        .ok_or_else(|| Error::Parse(format!("expected `x{sep}y`, got {item:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|err| Error::Parse(format!("{s:?}: {err}")))
    };
    Ok((parse(x)?, parse(y)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: i64, d: i64) -> AmbientContext {
        AmbientContext::new(n, d).unwrap()
    }

    #[test]
    fn smallest_basic_graph_is_valid() {
        let g = StableAGraph::single_vertex(1, 1);
        assert!(g.validate().is_ok());
        assert!(g.is_basic());
        assert!(g.is_nondegenerate());
    }

    #[test]
    fn unstable_contracted_vertex() {
        let g = StableAGraph::single_vertex(1, 0);
        let report = g.validate();
        assert!(report
            .messages()
            .iter()
            .any(|m| m.starts_with("stability: beta-0 vertex with 1 flag")));
    }

    #[test]
    fn parallel_edges_are_not_a_tree() {
        let g = StableAGraph::new(vec![(0, 1), (1, 1)], vec![(0, 1), (1, 0)], vec![(0, 0)]);
        assert!(g.validate().violations.contains(&Violation::NotATree));
        let disjoint = StableAGraph::new(vec![(0, 1), (1, 1)], vec![], vec![(0, 0)]);
        assert_eq!(disjoint.validate().violations, vec![Violation::Disconnected]);
    }

    #[test]
    fn unknown_endpoints_are_reported() {
        let g = StableAGraph::new(vec![(0, 1)], vec![(0, 7)], vec![(0, 3)]);
        let v = g.validate().violations;
        assert!(v.contains(&Violation::UnknownEdgeEndpoint { edge: 0, vertex: 7 }));
        assert!(v.contains(&Violation::UnknownTailVertex { tail: 0, vertex: 3 }));
    }

    #[test]
    fn expected_dimensions() {
        assert_eq!(expected_dim(&StableAGraph::single_vertex(0, 2), ctx(5, 4)).unwrap(), 5);
        assert_eq!(expected_dim(&StableAGraph::single_vertex(1, 2), ctx(5, 4)).unwrap(), 6);
        assert_eq!(expected_dim(&StableAGraph::chain(3), ctx(6, 5)).unwrap(), 7);
        assert_eq!(expected_dim(&StableAGraph::comb(3), ctx(6, 5)).unwrap(), 6);
        assert!(expected_dim(&StableAGraph::single_vertex(1, 0), ctx(6, 5)).is_err());
    }

    #[test]
    fn ambient_context_bounds() {
        assert!(AmbientContext::new(3, 2).is_ok());
        assert!(AmbientContext::new(4, 4).is_err());
        assert!(AmbientContext::new(4, 1).is_err());
    }

    #[test]
    fn flag_counts() {
        let g = StableAGraph::chain(4);
        assert_eq!(g.flag_count(), 7);
        assert_eq!(StableAGraph::single_vertex(0, 1).flag_count(), 0);
        assert_eq!(StableAGraph::comb(4).flag_count(), 9);
    }

    #[test]
    fn basic_and_nondegenerate() {
        let comb = StableAGraph::comb(3);
        assert!(comb.is_basic());
        assert!(!comb.is_nondegenerate());
        assert!(!StableAGraph::single_vertex(1, 2).is_basic());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_nondegenerate_basic(1).unwrap().len(), 1);
        assert_eq!(enumerate_nondegenerate_basic(3).unwrap().len(), 2);
        assert_eq!(enumerate_nondegenerate_basic(5).unwrap().len(), 9);
        assert!(enumerate_nondegenerate_basic(0).is_err());
        assert!(enumerate_nondegenerate_basic(9).is_err());
        for g in enumerate_nondegenerate_basic(4).unwrap() {
            assert!(g.validate().is_ok());
            assert!(g.is_nondegenerate());
        }
    }

    #[test]
    fn chain_to_comb_examples() {
        let c = ctx(6, 5);
        for (e, chain_dim, comb_dim) in [(2, 6, 5), (3, 7, 6)] {
            let chain = StableAGraph::chain(e);
            let comb = chain_to_comb(&chain).unwrap();
            assert_eq!(expected_dim(&chain, c).unwrap(), chain_dim);
            assert_eq!(expected_dim(&comb, c).unwrap(), comb_dim);
            assert!(comb.validate().is_ok());
        }
        assert!(chain_to_comb(&StableAGraph::chain(1)).is_err());
        assert!(chain_to_comb(&StableAGraph::comb(3)).is_err());
        // tail in the middle of the path
        let middle = StableAGraph::new(vec![(0, 1), (1, 1), (2, 1)], vec![(0, 1), (1, 2)], vec![(0, 1)]);
        assert!(chain_to_comb(&middle).is_err());
    }

    #[test]
    fn sprout_adds_one_edge() {
        let chain = StableAGraph::chain(3);
        // vertex 1 carries edges 0 (0-1) and 1 (1-2); move both
        let split = chain.sprout(1, &[0, 1], &[]).unwrap();
        assert!(split.validate().is_ok());
        let c = ctx(8, 7);
        assert_eq!(expected_dim(&chain, c).unwrap() - expected_dim(&split, c).unwrap(), 1);
        // a sprouted vertex with a single flag is unstable
        assert!(chain.sprout(1, &[0], &[]).is_err());
    }

    #[test]
    fn canonical_form_ignores_ids() {
        let a = StableAGraph::new(vec![(0, 1), (1, 1), (2, 1)], vec![(0, 1), (0, 2)], vec![(0, 0)]);
        let b = StableAGraph::new(vec![(9, 1), (4, 1), (5, 1)], vec![(5, 4), (9, 4)], vec![(3, 4)]);
        assert!(a.is_isomorphic(&b).unwrap());
        assert!(!a.is_isomorphic(&StableAGraph::chain(3)).unwrap());
    }

    #[test]
    fn text_record() {
        let g = StableAGraph::comb(2);
        let text = g.to_string();
        assert_eq!(text, "vertices: 0:0, 1:1, 2:1; edges: 0-1, 0-2; tails: 0@0");
        assert_eq!(text.parse::<StableAGraph>().unwrap(), g);
        let bare: StableAGraph = "vertices: 0:3".parse().unwrap();
        assert_eq!(bare, StableAGraph::single_vertex(0, 3));
        assert!("edges: 0-1".parse::<StableAGraph>().is_err());
        assert!("vertices: 0=1".parse::<StableAGraph>().is_err());
    }
}
