//! Finite rooted graphs, their products, and root spectral moments.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use serde_json::{json, Value};

use super::sparse::{unit, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::measure::MomentSequence;
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    labels: Vec<String>,
    root: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl RootedGraph {
    /// Simple undirected graph on `0..n`; repeated edges collapse, loops are rejected.
    pub fn new(n: usize, root: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels((0..n).map(|i| i.to_string()).collect(), root, edges)
    }

    pub fn with_labels(labels: Vec<String>, root: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if root >= n {
            return Err(Error::InvalidParameter(format!("root {root} outside {n} vertices")));
        }
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!("edge ({u}, {v}) outside {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { labels, root, adj })
    }

    pub fn single_vertex() -> Self {
        Self::new(1, 0, &[]).expect("valid graph")
    }

    /// Path on `n ≥ 1` vertices rooted at an end.
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n.max(1), 0, &edges).expect("valid path")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Non-root vertices in increasing order.
    pub fn non_root(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&v| v != self.root)
    }

    pub fn adjacency<T: Scalar>(&self) -> SparseMatrix<T> {
        SparseMatrix::from_entries(
            self.vertex_count(),
            self.edges().into_iter().flat_map(|(u, v)| [(u, v, T::one()), (v, u, T::one())]),
        )
    }

    /// `⟨Aⁿ δ(root), δ(root)⟩` for `n = 1..=n_max`.
    pub fn root_spectral_moments(&self, n_max: usize) -> MomentSequence<Rational> {
        let a = self.adjacency::<Rational>();
        let e: SparseVec<Rational> = unit(self.root);
        let mut v = e.clone();
        let moments = (0..n_max)
            .map(|_| {
                v = a.apply(&v);
                v.get(&self.root).cloned().unwrap_or_default()
            })
            .collect();
        MomentSequence::new(moments)
    }

    /// Subgraph induced on `keep` (which must contain the root), vertices renumbered in order.
    pub fn induced(&self, keep: &[bool]) -> Result<Self> {
        if !keep[self.root] {
            return Err(Error::InvalidParameter("induced subgraph must keep the root".into()));
        }
        let mut map = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::new();
        for (v, _) in keep.iter().enumerate().filter(|(_, &k)| k) {
            map[v] = labels.len();
            labels.push(self.labels[v].clone());
        }
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().filter(|&(u, v)| keep[u] && keep[v]).map(|(u, v)| (map[u], map[v])).collect();
        Self::with_labels(labels, map[self.root], &edges)
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(u, v)| [u, v]).collect();
        json!({ "vertices": self.vertex_count(), "root": self.root, "edges": edges })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("graph: {what}"));
        let n = v.get("vertices").and_then(Value::as_u64).ok_or_else(|| bad("missing vertex count"))? as usize;
        let root = v.get("root").map_or(Some(0), Value::as_u64).ok_or_else(|| bad("root must be an integer"))? as usize;
        let raw = v.get("edges").and_then(Value::as_array).ok_or_else(|| bad("missing edge list"))?;
        let mut edges = Vec::with_capacity(raw.len());
        for e in raw {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edges are [u, v] pairs"))?;
            let u = pair[0].as_u64().ok_or_else(|| bad("vertex ids are integers"))? as usize;
            let w = pair[1].as_u64().ok_or_else(|| bad("vertex ids are integers"))? as usize;
            edges.push((u, w));
        }
        Self::new(n, root, &edges).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl std::str::FromStr for RootedGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}

/// `g1` with a copy of `g2` glued by its root at each vertex of `attach`.
fn attach_copies(g1: &RootedGraph, g2: &RootedGraph, attach: &[usize]) -> RootedGraph {
    let mut labels = g1.labels.clone();
    let mut edges = g1.edges();
    for &v in attach {
        let mut map = vec![v; g2.vertex_count()];
        for u in g2.non_root() {
            map[u] = labels.len();
            labels.push(format!("{}:{}", g1.labels[v], g2.labels[u]));
        }
        edges.extend(g2.edges().into_iter().map(|(a, b)| (map[a], map[b])));
    }
    RootedGraph::with_labels(labels, g1.root, &edges).expect("valid product")
}

/// A copy of `g2` attached by its root to every non-root vertex of `g1`.
pub fn graph_orthogonal(g1: &RootedGraph, g2: &RootedGraph) -> RootedGraph {
    attach_copies(g1, g2, &g1.non_root().collect::<Vec<_>>())
}

/// A copy of `g2` attached by its root to every vertex of `g1`.
pub fn graph_comb(g1: &RootedGraph, g2: &RootedGraph) -> RootedGraph {
    attach_copies(g1, g2, &(0..g1.vertex_count()).collect::<Vec<_>>())
}

/// `g1` and `g2` glued at their roots.
pub fn graph_star(g1: &RootedGraph, g2: &RootedGraph) -> RootedGraph {
    attach_copies(g1, g2, &[g1.root])
}

/// Alternating words of non-root vertices, first letter outermost.
type GraphWord = Vec<(u8, usize)>;

fn free_product_words(g: [&RootedGraph; 2], radius: usize) -> (Vec<GraphWord>, HashMap<GraphWord, usize>) {
    let mut words: Vec<GraphWord> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for f in [0u8, 1] {
                if w.first().is_some_and(|l| l.0 == f) {
                    continue;
                }
                for v in g[f as usize].non_root() {
                    let mut nw = vec![(f, v)];
                    nw.extend_from_slice(w);
                    next.push(nw);
                }
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    (words, index)
}

/// Ball of the given radius around the empty word in the free product of rooted
/// graphs: vertices are alternating words of length `≤ radius`, and for each word
/// `h` not starting in `g_i` the words `v h` (`v ∈ V_i`, `e_i h ≡ h`) span a copy
/// of `g_i`. Root moments of order `≤ 2·radius + 1` are those of the full product.
pub fn free_product_ball(g1: &RootedGraph, g2: &RootedGraph, radius: usize) -> RootedGraph {
    let g = [g1, g2];
    let (words, index) = free_product_words(g, radius);
    let mut edges = Vec::new();
    for h in &words {
        for f in [0u8, 1] {
            if h.first().is_some_and(|l| l.0 == f) {
                continue;
            }
            let gi = g[f as usize];
            let vertex = |v: usize| -> Option<usize> {
                if v == gi.root {
                    return Some(index[h]);
                }
                let mut w = vec![(f, v)];
                w.extend_from_slice(h);
                index.get(&w).copied()
            };
            for (a, b) in gi.edges() {
                if let (Some(x), Some(y)) = (vertex(a), vertex(b)) {
                    edges.push((x, y));
                }
            }
        }
    }
    let labels = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "e".to_string()
            } else {
                w.iter().map(|(f, v)| format!("{}.{}", f + 1, g[*f as usize].labels[*v])).collect::<Vec<_>>().join(" ")
            }
        })
        .collect();
    RootedGraph::with_labels(labels, 0, &edges).expect("valid free product")
}

/// The branch of the free product ball subordinate to `g1`: the empty word and
/// the words whose last (innermost) letter lies in `g1`.
pub fn graph_branch(g1: &RootedGraph, g2: &RootedGraph, radius: usize) -> RootedGraph {
    let ball = free_product_ball(g1, g2, radius);
    let (words, _) = free_product_words([g1, g2], radius);
    let keep: Vec<bool> = words.iter().map(|w| w.last().is_none_or(|l| l.0 == 0)).collect();
    ball.induced(&keep).expect("root kept")
}

/// `(A_1 ⊗ P_{e_2}, P_{e_1}^⊥ ⊗ A_2)` on `ℓ²(V_1 × V_2)` with the vectors
/// `δ(e_1) ⊗ δ(e_2)` and `δ(v) ⊗ δ(e_2)` for the first non-root `v ∈ V_1`.
pub type GraphPair = (SparseMatrix<Rational>, SparseMatrix<Rational>, SparseVec<Rational>, SparseVec<Rational>);

pub fn orthogonal_graph_pair(g1: &RootedGraph, g2: &RootedGraph) -> Result<GraphPair> {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let v = g1.non_root().next().ok_or(Error::InvalidParameter("first graph needs a non-root vertex".into()))?;
    let p_e2 = SparseMatrix::diagonal(&(0..n2).map(|u| u == g2.root).collect::<Vec<_>>());
    let p_e1_perp = SparseMatrix::diagonal(&(0..n1).map(|u| u != g1.root).collect::<Vec<_>>());
    let a1 = g1.adjacency::<Rational>().kron(&p_e2);
    let a2 = p_e1_perp.kron(&g2.adjacency());
    Ok((a1, a2, unit(g1.root * n2 + g2.root), unit(v * n2 + g2.root)))
}

/// Connected graph on `2..=max_vertices` vertices: a random tree plus random chords.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> RootedGraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.25) {
                edges.push((u, v));
            }
        }
    }
    RootedGraph::new(n, rng.gen_range(0..n), &edges).expect("valid random graph")
}
