//! Dyck graphs (unit-interval graphs) and labeled graphs, their
//! encodings, the statistics on colorings and permutations, the
//! insertion lemma machinery, the interpolating code, and the
//! `min`-type maps used by the multiplicative expansions.
//!
//! A Dyck graph on `[n]` is encoded by its Hessenberg vector: a
//! nondecreasing `h` with `i <= h(i) <= n`, the edges being all pairs
//! `(i, j)` with `i < j <= h(i)`.

use crate::partitions::{PartitionError, StaircaseDiagram};
use crate::words::{bar, packed_words, PackedWord, Permutation};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid Hessenberg vector {0:?}")]
    InvalidHessenberg(Vec<u8>),
    #[error("invalid edge ({0},{1}) on {2} vertices")]
    InvalidEdge(usize, usize, usize),
    #[error("graph is not interval-closed")]
    NotDyck,
    #[error("length mismatch: expected {0}, got {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid vertex subset")]
    InvalidSubset,
    #[error("code entry {0} out of range at index {1}")]
    CodeOutOfRange(usize, usize),
}

/// Number of Dyck graphs on `[n]`.
pub fn catalan(n: usize) -> usize {
    let mut c = vec![0usize; n + 1];
    c[0] = 1;
    for i in 1..=n {
        c[i] = (0..i).map(|k| c[k] * c[i - 1 - k]).sum();
    }
    c[n]
}

/// A finite simple graph with vertices labeled `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<(u8, u8)>,
}

impl LabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == 0 || i == j || j > n {
                return Err(GraphError::InvalidEdge(a, b, n));
            }
            set.insert((i as u8, j as u8));
        }
        Ok(LabeledGraph { n, edges: set })
    }

    pub fn edgeless(n: usize) -> Self {
        LabeledGraph { n, edges: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(i, j)| (i as usize, j as usize))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&(i as u8, j as u8))
    }

    /// Restriction to a vertex subset, relabeled order-preservingly.
    pub fn restrict(&self, verts: &[usize]) -> Result<LabeledGraph, GraphError> {
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != verts.len() || vs.iter().any(|&v| v == 0 || v > self.n) {
            return Err(GraphError::InvalidSubset);
        }
        let index = |v: usize| vs.binary_search(&v).unwrap() + 1;
        let edges = self
            .edges()
            .filter(|&(i, j)| vs.binary_search(&i).is_ok() && vs.binary_search(&j).is_ok())
            .map(|(i, j)| (index(i), index(j)));
        LabeledGraph::new(vs.len(), edges)
    }

    /// Relabel vertices by `i -> n + 1 - i`.
    pub fn mirror(&self) -> LabeledGraph {
        let n = self.n;
        LabeledGraph::new(n, self.edges().map(|(i, j)| (n + 1 - j, n + 1 - i))).unwrap()
    }

    /// Shifted union: `self` followed by `other` with labels shifted.
    pub fn shifted_concat(&self, other: &LabeledGraph) -> LabeledGraph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(i, j)| (i + shift, j + shift)));
        LabeledGraph::new(self.n + other.n, edges).unwrap()
    }

    /// Recover the Hessenberg encoding when the edge set is
    /// interval-closed.
    pub fn as_dyck(&self) -> Result<DyckGraph, GraphError> {
        let mut h: Vec<u8> = (1..=self.n as u8).collect();
        for (i, j) in self.edges() {
            if j as u8 > h[i - 1] {
                h[i - 1] = j as u8;
            }
        }
        let d = DyckGraph::new(h).map_err(|_| GraphError::NotDyck)?;
        if d.to_graph() == *self {
            Ok(d)
        } else {
            Err(GraphError::NotDyck)
        }
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(i, j)| format!("{}-{}", i, j)).collect();
        write!(f, "G{}:{}", self.n, edges.join(","))
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A Dyck graph, canonically encoded by its Hessenberg vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckGraph {
    h: Vec<u8>,
}

impl DyckGraph {
    pub fn new(h: Vec<u8>) -> Result<Self, GraphError> {
        let n = h.len();
        for i in 0..n {
            if (h[i] as usize) < i + 1 || h[i] as usize > n {
                return Err(GraphError::InvalidHessenberg(h));
            }
            if i > 0 && h[i] < h[i - 1] {
                return Err(GraphError::InvalidHessenberg(h));
            }
        }
        Ok(DyckGraph { h })
    }

    pub fn edgeless(n: usize) -> Self {
        DyckGraph { h: (1..=n as u8).collect() }
    }

    pub fn complete(n: usize) -> Self {
        DyckGraph { h: vec![n as u8; n] }
    }

    /// The path graph with edges `(i, i+1)`.
    pub fn path(n: usize) -> Self {
        if n == 0 {
            return DyckGraph { h: vec![] };
        }
        let mut h: Vec<u8> = (2..=n as u8).collect();
        h.push(n as u8);
        DyckGraph { h }
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn hessenberg(&self) -> &[u8] {
        &self.h
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        i != j && j <= self.h[i - 1] as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n() {
            for j in (i + 1)..=self.h[i - 1] as usize {
                out.push((i, j));
            }
        }
        out
    }

    pub fn to_graph(&self) -> LabeledGraph {
        LabeledGraph::new(self.n(), self.edges()).unwrap()
    }

    /// The diagram of non-edges above the diagonal.
    pub fn to_diagram(&self) -> StaircaseDiagram {
        let n = self.n();
        let mut parts = Vec::new();
        for j in (2..=n).rev() {
            let len = (1..j).filter(|&i| (self.h[i - 1] as usize) < j).count();
            parts.push(len as u8);
        }
        StaircaseDiagram::new(parts, n).expect("non-edge cells form a staircase diagram")
    }

    /// Inverse of [`DyckGraph::to_diagram`].
    pub fn from_diagram(d: &StaircaseDiagram) -> Result<Self, PartitionError> {
        let n = d.ambient();
        let mut h = Vec::with_capacity(n);
        for i in 1..=n {
            let col = d.parts().iter().filter(|&&p| p as usize >= i).count();
            h.push((n - col) as u8);
        }
        Ok(DyckGraph::new(h).expect("columns of a staircase diagram give a Hessenberg vector"))
    }

    pub fn mirror(&self) -> DyckGraph {
        self.to_graph().mirror().as_dyck().expect("mirror of a Dyck graph is Dyck")
    }

    pub fn shifted_concat(&self, other: &DyckGraph) -> DyckGraph {
        let n = self.n() as u8;
        let mut h = self.h.clone();
        h.extend(other.h.iter().map(|&x| x + n));
        DyckGraph { h }
    }

    /// Restriction to the interval `[1, k]`.
    pub fn restrict_prefix(&self, k: usize) -> DyckGraph {
        DyckGraph {
            h: self.h[..k].iter().map(|&x| x.min(k as u8)).collect(),
        }
    }

    /// Restriction to an interval `[lo, hi]`, relabeled.
    pub fn restrict_interval(&self, lo: usize, hi: usize) -> DyckGraph {
        let h = (lo..=hi)
            .map(|i| (self.h[i - 1] as usize).min(hi).saturating_sub(lo - 1).max(i - lo + 1) as u8)
            .collect();
        DyckGraph { h }
    }
}

impl fmt::Display for DyckGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}:h=", self.n())?;
        if self.h.iter().all(|&x| x <= 9) {
            for &x in &self.h {
                write!(f, "{}", x)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.h.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for DyckGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// All Dyck graphs on `[n]`, in lexicographic Hessenberg order.
pub fn enumerate_dyck(n: usize) -> Vec<DyckGraph> {
    fn rec(n: usize, i: usize, h: &mut Vec<u8>, out: &mut Vec<DyckGraph>) {
        if i == n {
            out.push(DyckGraph { h: h.clone() });
            return;
        }
        let lo = (i + 1).max(h.last().map(|&x| x as usize).unwrap_or(1));
        for v in lo..=n {
            h.push(v as u8);
            rec(n, i + 1, h, out);
            h.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of edges `(i < j)` with `c_i < c_j`.
pub fn asc(g: &LabeledGraph, coloring: &[u8]) -> Result<usize, GraphError> {
    if coloring.len() != g.n() {
        return Err(GraphError::LengthMismatch(g.n(), coloring.len()));
    }
    Ok(g.edges().filter(|&(i, j)| coloring[i - 1] < coloring[j - 1]).count())
}

/// True if adjacent vertices always receive distinct colors.
pub fn is_proper(g: &LabeledGraph, coloring: &[u8]) -> Result<bool, GraphError> {
    if coloring.len() != g.n() {
        return Err(GraphError::LengthMismatch(g.n(), coloring.len()));
    }
    Ok(g.edges().all(|(i, j)| coloring[i - 1] != coloring[j - 1]))
}

/// All packed words of length `n` that properly color `g`.
pub fn proper_packed_colorings(g: &LabeledGraph) -> Vec<PackedWord> {
    packed_words(g.n())
        .into_iter()
        .filter(|w| is_proper(g, w.letters()).unwrap())
        .collect()
}

/// Graph inversions: edges `(i < j)` with `i` to the right of `j`.
pub fn inv_g(g: &LabeledGraph, sigma: &Permutation) -> usize {
    g.edges()
        .filter(|&(i, j)| sigma.position_of(i as u8) > sigma.position_of(j as u8))
        .count()
}

/// Graph descents: positions `i` with `sigma_i > sigma_{i+1}` and
/// `(sigma_{i+1}, sigma_i)` not an edge.
pub fn des_set_g(g: &LabeledGraph, sigma: &Permutation) -> BTreeSet<usize> {
    let w = sigma.letters();
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i] && !g.has_edge(w[i] as usize, w[i - 1] as usize))
        .collect()
}

pub fn maj_g(g: &LabeledGraph, sigma: &Permutation) -> usize {
    des_set_g(g, sigma).into_iter().sum()
}

/// Values `sigma_{i+1}` at graph descents.
pub fn descent_bottoms(g: &LabeledGraph, sigma: &Permutation) -> BTreeSet<u8> {
    des_set_g(g, sigma).into_iter().map(|i| sigma.letters()[i]).collect()
}

/// The Mahonian statistic `st = inv_G + maj_G`.
pub fn st_g(g: &LabeledGraph, sigma: &Permutation) -> usize {
    inv_g(g, sigma) + maj_g(g, sigma)
}

fn insert_at(sigma: &Permutation, value: u8, slot: usize) -> Permutation {
    let mut w = sigma.letters().to_vec();
    w.insert(slot, value);
    Permutation::new(w).expect("insertion of a fresh maximum")
}

/// Restriction of `sigma` to the values `1..=k`, as a permutation of `[k]`.
pub fn restrict_perm(sigma: &Permutation, k: usize) -> Permutation {
    Permutation::new(
        sigma.letters().iter().copied().filter(|&a| a as usize <= k).collect(),
    )
    .expect("subword of small values is a permutation")
}

/// For each insertion slot `p = 0..n` of the letter `n` into `sigma`,
/// the increment `st_G(tau) - st_H(sigma)` where `H = G|[1, n-1]`.
pub fn insertion_increments(g: &DyckGraph, sigma: &Permutation) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if sigma.len() + 1 != n {
        return Err(GraphError::LengthMismatch(n - 1, sigma.len()));
    }
    let gg = g.to_graph();
    let hh = g.restrict_prefix(n - 1).to_graph();
    let base = st_g(&hh, sigma);
    Ok((0..n)
        .map(|p| st_g(&gg, &insert_at(sigma, n as u8, p)) - base)
        .collect())
}

/// Insertion slots in the order that makes the increments read
/// `0, 1, ..., n-1`: the rightmost slot, then right-to-left the slots
/// before marked values (neighbors of `n` in `G` or descent bottoms of
/// `sigma` in `H`), then left-to-right the remaining slots.
pub fn insertion_order(g: &DyckGraph, sigma: &Permutation) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if sigma.len() + 1 != n {
        return Err(GraphError::LengthMismatch(n - 1, sigma.len()));
    }
    let hh = g.restrict_prefix(n - 1).to_graph();
    let bottoms = descent_bottoms(&hh, sigma);
    let marked = |v: u8| g.has_edge(v as usize, n) || bottoms.contains(&v);
    let mut order = vec![n - 1];
    for j in (1..n).rev() {
        if marked(sigma.letters()[j - 1]) {
            order.push(j - 1);
        }
    }
    for j in 1..n {
        if !marked(sigma.letters()[j - 1]) {
            order.push(j - 1);
        }
    }
    Ok(order)
}

/// The interpolating code: entry `m` (0-based) is the `st` increment of
/// inserting the value `n - m` when rebuilding `sigma` from its
/// restrictions. Entries satisfy `c_m <= n - m - 1`.
pub fn code(g: &DyckGraph, sigma: &Permutation) -> Vec<usize> {
    let n = g.n();
    let mut st_vals = Vec::with_capacity(n + 1);
    for k in (0..=n).rev() {
        let gk = g.restrict_prefix(k).to_graph();
        st_vals.push(st_g(&gk, &restrict_perm(sigma, k)));
    }
    (0..n).map(|m| st_vals[m] - st_vals[m + 1]).collect()
}

/// Inverse of [`code`]: rebuild the permutation by inserting each value
/// at the slot realizing the prescribed increment.
pub fn decode(g: &DyckGraph, c: &[usize]) -> Result<Permutation, GraphError> {
    let n = g.n();
    if c.len() != n {
        return Err(GraphError::LengthMismatch(n, c.len()));
    }
    for (m, &v) in c.iter().enumerate() {
        if v + m + 1 > n {
            return Err(GraphError::CodeOutOfRange(v, m));
        }
    }
    let mut cur = Permutation::identity(0);
    for k in 1..=n {
        let gk = g.restrict_prefix(k);
        let want = c[n - k];
        if k == 1 {
            cur = Permutation::identity(1);
            if want != 0 {
                return Err(GraphError::CodeOutOfRange(want, n - 1));
            }
            continue;
        }
        let incs = insertion_increments(&gk, &cur)?;
        let slot = incs
            .iter()
            .position(|&d| d == want)
            .ok_or(GraphError::CodeOutOfRange(want, n - k))?;
        cur = insert_at(&cur, k as u8, slot);
    }
    Ok(cur)
}

/// The minimal proper coloring with standardization `sigma`: the letter
/// of `i` drops below the letter of `i-1`'s successor pattern exactly on
/// the non-edge ascents of `sigma`.
pub fn min_g(g: &LabeledGraph, sigma: &Permutation) -> PackedWord {
    let n = g.n();
    assert_eq!(sigma.len(), n, "permutation size must match the graph");
    let mut in_s = vec![false; n + 2];
    for i in 2..=n {
        let p = sigma.position_of(i as u8 - 1) + 1;
        let q = sigma.position_of(i as u8) + 1;
        if p < q && !g.has_edge(p, q) {
            in_s[i] = true;
        }
    }
    let mut drop = vec![0u8; n + 1];
    for v in 1..=n {
        drop[v] = drop[v - 1] + if in_s[v] { 1 } else { 0 };
    }
    let letters = sigma.letters().iter().map(|&a| a - drop[a as usize]).collect();
    PackedWord::new(letters).expect("min word is packed")
}

/// The mirrored variant `min'`: reverse of `min` on the mirrored graph
/// and reversed permutation.
pub fn min_g_prime(g: &LabeledGraph, sigma: &Permutation) -> PackedWord {
    let m = min_g(&g.mirror(), &sigma.bar());
    PackedWord::new(bar(m.letters())).unwrap()
}
