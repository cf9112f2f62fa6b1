//! Line labellings of a comb and the subset-relabel move.
//!
//! A configuration assigns one of `k` line labels to each of the `e` teeth.
//! It is degenerate when all labels agree (a multiple cover of a line). A
//! move picks a strict subset `S` of the teeth with `|S| >= 2` whose labels
//! are not all equal and relabels `S` with labels that are again not all
//! equal. Moves are symmetric, so the move graph is undirected and never
//! touches a degenerate configuration.
//!
//! For a fixed subset `S` and fixed labels outside `S`, all configurations
//! that are non-constant on `S` are pairwise adjacent. The census exploits
//! this: each such clique is expanded once per search instead of walking
//! every edge.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_TEETH: usize = 7;
pub const MAX_ALPHABET: u8 = 5;
pub const MAX_STATES: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CombConfig {
    labels: Vec<u8>,
}

impl CombConfig {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::Parameter(format!("a comb has at least 2 teeth, got {}", labels.len())));
        }
        Ok(Self { labels })
    }

    pub fn teeth(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// All teeth on the same line.
    pub fn is_degenerate(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] == w[1])
    }

    pub fn label_counts(&self, k: u8) -> Vec<usize> {
        let mut counts = vec![0; usize::from(k)];
        for &l in &self.labels {
            counts[usize::from(l)] += 1;
        }
        counts
    }

    fn check_alphabet(&self, k: u8) -> Result<()> {
        match self.labels.iter().find(|&&l| l >= k) {
            Some(l) => Err(Error::Parameter(format!("label {l} outside alphabet of size {k}"))),
            None => Ok(()),
        }
    }
}

/// Relabel the teeth in `subset` with `replacement`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Move {
    subset: Vec<usize>,
    replacement: Vec<u8>,
}

fn all_equal(labels: impl IntoIterator<Item = u8>) -> bool {
    let mut it = labels.into_iter();
    match it.next() {
        Some(first) => it.all(|l| l == first),
        None => true,
    }
}

impl Move {
    pub fn new(subset: Vec<usize>, replacement: Vec<u8>) -> Result<Self> {
        if subset.len() != replacement.len() {
            return Err(Error::Parameter("one replacement label per tooth in S".to_string()));
        }
        if subset.len() < 2 {
            return Err(Error::Parameter("a move needs |S| >= 2".to_string()));
        }
        let distinct: BTreeSet<usize> = subset.iter().copied().collect();
        if distinct.len() != subset.len() {
            return Err(Error::Parameter("S lists a tooth twice".to_string()));
        }
        if all_equal(replacement.iter().copied()) {
            return Err(Error::Parameter("replacement labels on S are all equal".to_string()));
        }
        Ok(Self { subset, replacement })
    }

    /// Applies the move if it is legal for `c`.
    pub fn apply(&self, c: &CombConfig, k: u8) -> Result<CombConfig> {
        c.check_alphabet(k)?;
        if self.subset.iter().any(|&i| i >= c.teeth()) {
            return Err(Error::Parameter("S names a tooth outside the comb".to_string()));
        }
        if self.subset.len() >= c.teeth() {
            return Err(Error::Parameter("S must be a strict subset of the teeth".to_string()));
        }
        if self.replacement.iter().any(|&l| l >= k) {
            return Err(Error::Parameter(format!("replacement label outside alphabet of size {k}")));
        }
        if all_equal(self.subset.iter().map(|&i| c.labels[i])) {
            return Err(Error::Parameter("current labels on S are all equal".to_string()));
        }
        let mut labels = c.labels.clone();
        for (&i, &l) in self.subset.iter().zip(&self.replacement) {
            labels[i] = l;
        }
        Ok(CombConfig { labels })
    }
}

/// Every configuration one legal move away from `c`, sorted and without `c`.
pub fn legal_moves(c: &CombConfig, k: u8) -> Result<Vec<CombConfig>> {
    c.check_alphabet(k)?;
    if c.is_degenerate() {
        return Err(Error::Parameter("no moves from a degenerate configuration".to_string()));
    }
    let e = c.teeth();
    let full = (1u32 << e) - 1;
    let mut out = BTreeSet::new();
    for mask in 1..full {
        let subset: Vec<usize> = (0..e).filter(|&i| mask >> i & 1 == 1).collect();
        if subset.len() < 2 || all_equal(subset.iter().map(|&i| c.labels[i])) {
            continue;
        }
        let mut digits = vec![0u8; subset.len()];
        loop {
            if !all_equal(digits.iter().copied()) {
                let mut labels = c.labels.clone();
                for (&i, &l) in subset.iter().zip(&digits) {
                    labels[i] = l;
                }
                if labels != c.labels {
                    out.insert(CombConfig { labels });
                }
            }
            if !increment(&mut digits, k) {
                break;
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Base-`k` odometer; false once it wraps around.
fn increment(digits: &mut [u8], k: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < k {
            return true;
        }
        *d = 0;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub e: usize,
    pub k: u8,
    pub reduced: bool,
    /// Non-degenerate configurations, `k^e - k`.
    pub node_count: u64,
    /// Orbits of non-degenerate configurations under tooth and label permutations.
    pub orbit_count: usize,
    pub connected: bool,
    pub component_count: usize,
    /// Largest first.
    pub component_sizes: Vec<u64>,
    /// Largest component diameter; not computed in reduced mode.
    pub diameter: Option<u32>,
    pub degenerate_reached: bool,
    /// For `k = 2`: every move with `|S| = 2` preserves the label counts.
    pub pair_moves_preserve_counts: Option<bool>,
    /// Each component has a single label-count vector (raw mode only).
    pub components_count_homogeneous: Option<bool>,
}

fn check_guard(e: usize, k: u8) -> Result<()> {
    if !(2..=MAX_TEETH).contains(&e) || !(2..=MAX_ALPHABET).contains(&k) {
        return Err(Error::Guard(format!(
            "census needs 2 <= e <= {MAX_TEETH} and 2 <= k <= {MAX_ALPHABET}, got e = {e}, k = {k}"
        )));
    }
    if u64::from(k).pow(e as u32) > MAX_STATES {
        return Err(Error::Guard(format!("k^e = {}^{e} exceeds {MAX_STATES}", k)));
    }
    Ok(())
}

struct Clique {
    positions: Vec<usize>,
    /// `sum r_i k^{pos_i}` for every non-constant relabelling `r` of `S`.
    offsets: Vec<u32>,
}

/// Configurations encoded as base-`k` integers, tooth `i` at digit `i`.
struct StateSpace {
    e: usize,
    k: u8,
    pow: Vec<u32>,
    cliques: Vec<Clique>,
}

impl StateSpace {
    fn new(e: usize, k: u8) -> Self {
        let pow: Vec<u32> = (0..=e).map(|i| u32::from(k).pow(i as u32)).collect();
        let full = (1u32 << e) - 1;
        let cliques = (1..full)
            .filter(|m: &u32| m.count_ones() >= 2)
            .map(|mask| {
                let positions: Vec<usize> = (0..e).filter(|&i| mask >> i & 1 == 1).collect();
                let mut digits = vec![0u8; positions.len()];
                let mut offsets = Vec::new();
                loop {
                    if !all_equal(digits.iter().copied()) {
                        offsets.push(
                            positions
                                .iter()
                                .zip(&digits)
                                .map(|(&p, &d)| u32::from(d) * pow[p])
                                .sum(),
                        );
                    }
                    if !increment(&mut digits, k) {
                        break;
                    }
                }
                Clique { positions, offsets }
            })
            .collect();
        Self { e, k, pow, cliques }
    }

    fn size(&self) -> u32 {
        self.pow[self.e]
    }

    fn digit(&self, code: u32, i: usize) -> u8 {
        (code / self.pow[i] % u32::from(self.k)) as u8
    }

    fn decode(&self, code: u32) -> Vec<u8> {
        (0..self.e).map(|i| self.digit(code, i)).collect()
    }

    fn encode(&self, labels: &[u8]) -> u32 {
        labels.iter().enumerate().map(|(i, &l)| u32::from(l) * self.pow[i]).sum()
    }

    fn is_degenerate(&self, code: u32) -> bool {
        all_equal((0..self.e).map(|i| self.digit(code, i)))
    }

    /// The clique of `clique_index` containing `code`, if `code` is
    /// non-constant on its subset: returns the code with the subset zeroed.
    fn clique_base(&self, code: u32, clique_index: usize) -> Option<u32> {
        let c = &self.cliques[clique_index];
        if all_equal(c.positions.iter().map(|&p| self.digit(code, p))) {
            return None;
        }
        Some(code - c.positions.iter().map(|&p| u32::from(self.digit(code, p)) * self.pow[p]).sum::<u32>())
    }

    fn counts(&self, code: u32) -> Vec<u8> {
        let mut counts = vec![0u8; usize::from(self.k)];
        for i in 0..self.e {
            counts[usize::from(self.digit(code, i))] += 1;
        }
        counts
    }

    /// Breadth-first search from `source`; calls `visit(node, dist)` once per
    /// reached node and returns the eccentricity of `source`.
    fn bfs(&self, source: u32, mut visit: impl FnMut(u32, u32), mut on_edge: impl FnMut(u32, u32, usize)) -> u32 {
        let mut dist: BTreeMap<u32, u32> = BTreeMap::new();
        let mut expanded: HashSet<(usize, u32)> = HashSet::new();
        let mut queue = VecDeque::from([source]);
        dist.insert(source, 0);
        visit(source, 0);
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            ecc = ecc.max(du);
            for ci in 0..self.cliques.len() {
                let Some(base) = self.clique_base(u, ci) else { continue };
                if !expanded.insert((ci, base)) {
                    continue;
                }
                for &off in &self.cliques[ci].offsets {
                    let v = base + off;
                    on_edge(u, v, ci);
                    if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(v) {
                        slot.insert(du + 1);
                        visit(v, du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        ecc
    }
}

/// Sorted (descending) label-count partitions of `e` into at most `k` parts,
/// excluding the degenerate `[e]`.
fn orbit_keys(e: usize, k: u8) -> Vec<Vec<u8>> {
    fn go(remaining: usize, max_part: usize, parts_left: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p as u8);
            go(remaining - p, p, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, usize::from(k), &mut Vec::new(), &mut out);
    out.retain(|key| key.len() > 1);
    out
}

/// Teeth `0..c_0` get label 0, the next `c_1` teeth label 1, and so on.
fn orbit_representative(key: &[u8]) -> Vec<u8> {
    key.iter()
        .enumerate()
        .flat_map(|(label, &count)| std::iter::repeat_n(label as u8, usize::from(count)))
        .collect()
}

fn orbit_key(labels: &[u8], k: u8) -> Vec<u8> {
    let mut counts = vec![0u8; usize::from(k)];
    for &l in labels {
        counts[usize::from(l)] += 1;
    }
    counts.retain(|&c| c > 0);
    counts.sort_unstable_by(|a, b| b.cmp(a));
    counts
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of configurations with the given label-count partition.
fn orbit_size(key: &[u8], e: usize, k: u8) -> u64 {
    let arrangements = factorial(e) / key.iter().map(|&c| factorial(usize::from(c))).product::<u128>();
    let mut multiplicity: BTreeMap<u8, usize> = BTreeMap::new();
    for &c in key {
        *multiplicity.entry(c).or_default() += 1;
    }
    let label_choices = factorial(usize::from(k))
        / factorial(usize::from(k) - key.len())
        / multiplicity.values().map(|&m| factorial(m)).product::<u128>();
    (arrangements * label_choices) as u64
}

/// Exact component census of the move graph on `{0..k}^e` minus the `k`
/// degenerate configurations.
pub fn connectivity(e: usize, k: u8) -> Result<ConnectivityReport> {
    check_guard(e, k)?;
    let space = StateSpace::new(e, k);
    let total = space.size();
    let mut component = vec![u32::MAX; total as usize];
    let mut sizes = Vec::new();
    let mut degenerate_reached = false;
    let mut pairs_preserve = true;
    let mut homogeneous = true;

    for start in 0..total {
        if space.is_degenerate(start) || component[start as usize] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        let start_counts = space.counts(start);
        let mut size = 0u64;
        space.bfs(
            start,
            |v, _| {
                component[v as usize] = id;
                size += 1;
                degenerate_reached |= space.is_degenerate(v);
                homogeneous &= space.counts(v) == start_counts;
            },
            |u, v, ci| {
                if k == 2 && space.cliques[ci].positions.len() == 2 {
                    pairs_preserve &= space.counts(u) == space.counts(v);
                }
            },
        );
        sizes.push(size);
    }
    debug_assert!(!degenerate_reached, "a legal move produced a degenerate configuration");

    // eccentricity is constant on symmetry orbits, so one search per orbit
    // gives the largest component diameter
    let keys = orbit_keys(e, k);
    let diameter = keys
        .par_iter()
        .map(|key| space.bfs(space.encode(&orbit_representative(key)), |_, _| {}, |_, _, _| {}))
        .max()
        .unwrap_or(0);

    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ConnectivityReport {
        e,
        k,
        reduced: false,
        node_count: u64::from(total) - u64::from(k),
        orbit_count: keys.len(),
        connected: sizes.len() == 1,
        component_count: sizes.len(),
        component_sizes: sizes,
        diameter: Some(diameter),
        degenerate_reached,
        pair_moves_preserve_counts: (k == 2).then_some(pairs_preserve),
        components_count_homogeneous: Some(homogeneous),
    })
}

/// Element of `Sym(teeth) x Sym(labels)` acting by
/// `(g c)[teeth[i]] = labels[c[i]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Symmetry {
    teeth: [u8; MAX_TEETH],
    labels: [u8; MAX_ALPHABET as usize],
}

impl Symmetry {
    fn identity() -> Self {
        let mut teeth = [0; MAX_TEETH];
        let mut labels = [0; MAX_ALPHABET as usize];
        for (i, t) in teeth.iter_mut().enumerate() {
            *t = i as u8;
        }
        for (i, l) in labels.iter_mut().enumerate() {
            *l = i as u8;
        }
        Self { teeth, labels }
    }

    /// `self ∘ other`.
    fn compose(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..MAX_TEETH {
            out.teeth[i] = self.teeth[usize::from(other.teeth[i])];
        }
        for i in 0..MAX_ALPHABET as usize {
            out.labels[i] = self.labels[usize::from(other.labels[i])];
        }
        out
    }

    fn inverse(&self) -> Self {
        let mut out = *self;
        for i in 0..MAX_TEETH {
            out.teeth[usize::from(self.teeth[i])] = i as u8;
        }
        for i in 0..MAX_ALPHABET as usize {
            out.labels[usize::from(self.labels[i])] = i as u8;
        }
        out
    }

    fn act(&self, labels: &[u8]) -> Vec<u8> {
        let mut out = vec![0; labels.len()];
        for (i, &l) in labels.iter().enumerate() {
            out[usize::from(self.teeth[i])] = self.labels[usize::from(l)];
        }
        out
    }

    /// A symmetry taking the orbit representative of `labels` to `labels`.
    fn from_representative(labels: &[u8], k: u8) -> Self {
        let mut counts = vec![0usize; usize::from(k)];
        for &l in labels {
            counts[usize::from(l)] += 1;
        }
        let mut order: Vec<u8> = (0..k).collect();
        order.sort_by(|&a, &b| counts[usize::from(b)].cmp(&counts[usize::from(a)]).then(a.cmp(&b)));
        let mut g = Self::identity();
        for (canonical, &actual) in order.iter().enumerate() {
            g.labels[canonical] = actual;
        }
        let mut tooth = 0;
        for &actual in &order {
            for (i, _) in labels.iter().enumerate().filter(|&(_, &l)| l == actual) {
                g.teeth[tooth] = i as u8;
                tooth += 1;
            }
        }
        g
    }
}

fn closure(generators: &[Symmetry]) -> HashSet<Symmetry> {
    let id = Symmetry::identity();
    let mut group = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if group.insert(y) {
                queue.push_back(y);
            }
        }
    }
    group
}

/// Component census computed on symmetry orbits.
///
/// Orbits are explored from one representative each. Every edge that lands
/// in an already visited orbit yields an element of the setwise stabilizer
/// of the current component; those elements generate a group `H` whose
/// orbits on the representatives sweep out the whole component. Dividing
/// the raw size of an orbit-graph component by the size of one raw
/// component gives the raw component count, so the census matches
/// [`connectivity`].
pub fn symmetry_reduced_connectivity(e: usize, k: u8) -> Result<ConnectivityReport> {
    check_guard(e, k)?;
    let space = StateSpace::new(e, k);
    let keys = orbit_keys(e, k);
    let mut visited: BTreeMap<Vec<u8>, (Vec<u8>, Symmetry)> = BTreeMap::new();
    let mut sizes = Vec::new();
    let mut pairs_preserve = true;
    let mut degenerate_reached = false;

    for start in &keys {
        if visited.contains_key(start) {
            continue;
        }
        let rep = orbit_representative(start);
        visited.insert(start.clone(), (rep, Symmetry::identity()));
        let mut members = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        let mut generators = Vec::new();
        let mut group = closure(&generators);

        while let Some(key) = queue.pop_front() {
            let (rep, _) = visited[&key].clone();
            let code = space.encode(&rep);
            for ci in 0..space.cliques.len() {
                let Some(base) = space.clique_base(code, ci) else { continue };
                let pair_clique = space.cliques[ci].positions.len() == 2;
                for &off in &space.cliques[ci].offsets {
                    let v = base + off;
                    degenerate_reached |= space.is_degenerate(v);
                    if k == 2 && pair_clique {
                        pairs_preserve &= space.counts(code) == space.counts(v);
                    }
                    let labels = space.decode(v);
                    let next = orbit_key(&labels, k);
                    let to_v = Symmetry::from_representative(&labels, k);
                    match visited.get(&next) {
                        None => {
                            visited.insert(next.clone(), (labels, to_v));
                            members.push(next.clone());
                            queue.push_back(next);
                        }
                        Some((_, to_rep)) => {
                            let s = to_v.compose(&to_rep.inverse());
                            if !group.contains(&s) {
                                generators.push(s);
                                group = closure(&generators);
                            }
                        }
                    }
                }
            }
        }

        let raw_total: u64 = members.iter().map(|key| orbit_size(key, e, k)).sum();
        let component_size: u64 = members
            .iter()
            .map(|key| {
                let rep = &visited[key].0;
                group.iter().map(|h| h.act(rep)).collect::<HashSet<_>>().len() as u64
            })
            .sum();
        assert_eq!(raw_total % component_size, 0, "components must tile the orbit-graph component");
        let copies = raw_total / component_size;
        sizes.extend(std::iter::repeat_n(component_size, copies as usize));
    }

    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ConnectivityReport {
        e,
        k,
        reduced: true,
        node_count: u64::from(space.size()) - u64::from(k),
        orbit_count: keys.len(),
        connected: sizes.len() == 1,
        component_count: sizes.len(),
        component_sizes: sizes,
        diameter: None,
        degenerate_reached,
        pair_moves_preserve_counts: (k == 2).then_some(pairs_preserve),
        components_count_homogeneous: None,
    })
}
