//! Graphs and their clustering instances.
//!
//! Each edge `{u, v}` of a graph on vertices `1..=n` becomes the 0/1 point with
//! ones exactly at coordinates `u - 1` and `v - 1`. A vertex cover
//! `i_1 < ... < i_k` induces the clustering `E_1, ..., E_k` where `E_j` holds
//! the edges touching `i_j` but no earlier cover vertex; a chain of cuts
//! `(i_j - 1, 1/2)` realizes it as a threshold tree.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::tree::Node;
use crate::{AxisCut, Dataset, Error, Partition, Result, ThresholdTree};

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl Graph {
    /// Validates vertex ranges, rejects loops and duplicate edges. Edge order
    /// and endpoint order are kept as given.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = alloc::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} outside vertices 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert(key(u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of every vertex, indexed `0..=n` (slot 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n + 1]; self.n + 1];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    /// Explicit scan: no edge has a common neighbour of its endpoints.
    pub fn is_triangle_free(&self) -> bool {
        let adj = self.adjacency();
        self.edges
            .iter()
            .all(|&(u, v)| !(1..=self.n).any(|w| adj[u][w] && adj[v][w]))
    }

    /// Fails unless the graph is triangle-free and, when given, has maximum
    /// degree at most `max_degree`.
    pub fn require(&self, max_degree: Option<usize>) -> Result<()> {
        if !self.is_triangle_free() {
            return Err(Error::InvalidGraph("graph contains a triangle".into()));
        }
        if let Some(b) = max_degree {
            let found = self.max_degree();
            if found > b {
                return Err(Error::InvalidGraph(format!("max degree {found} > {b}")));
            }
        }
        Ok(())
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        self.first_uncovered(cover).is_none()
    }

    fn first_uncovered(&self, cover: &[usize]) -> Option<(usize, usize)> {
        let mut inside = vec![false; self.n + 1];
        for &c in cover {
            if c <= self.n {
                inside[c] = true;
            }
        }
        self.edges.iter().copied().find(|&(u, v)| !inside[u] && !inside[v])
    }

    /// The graph restricted to the given edges, on the same vertex set.
    pub fn edge_subgraph(&self, edges: &[usize]) -> Graph {
        Graph {
            n: self.n,
            edges: edges.iter().map(|&e| self.edges[e]).collect(),
        }
    }
}

/// A clustering instance built from a graph: point `i` is edge `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub dataset: Dataset,
}

impl ReductionInstance {
    /// Point index of edge `e` (the identity, kept explicit for readers).
    pub fn point_of_edge(&self, e: usize) -> usize {
        e
    }
}

/// Embeds every edge as its incidence vector in `{0,1}^n`.
pub fn edges_to_points(g: &Graph) -> Result<ReductionInstance> {
    if g.edges.is_empty() {
        return Err(Error::InvalidGraph("graph has no edges".into()));
    }
    let points = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut p = vec![0.0; g.n];
            p[u - 1] = 1.0;
            p[v - 1] = 1.0;
            p
        })
        .collect();
    Ok(ReductionInstance {
        graph: g.clone(),
        dataset: Dataset::new(points)?,
    })
}

fn check_cover(g: &Graph, cover: &[usize]) -> Result<()> {
    if cover.is_empty() && !g.edges.is_empty() {
        let (u, v) = g.edges[0];
        return Err(Error::NotACover(u, v));
    }
    if cover.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGraph(format!(
            "cover must be strictly increasing, got {cover:?}"
        )));
    }
    if let Some(&c) = cover.iter().find(|&&c| c == 0 || c > g.n) {
        return Err(Error::InvalidGraph(format!("cover vertex {c} outside 1..={}", g.n)));
    }
    match g.first_uncovered(cover) {
        Some((u, v)) => Err(Error::NotACover(u, v)),
        None => Ok(()),
    }
}

/// The groups `E_1..E_k` as edge indices, straight from the set-builder
/// definition. Groups may be empty when the cover has redundant vertices.
pub fn cover_clusters(g: &Graph, cover: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_cover(g, cover)?;
    let mut groups = vec![Vec::new(); cover.len()];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        let j = cover
            .iter()
            .position(|&c| c == u || c == v)
            .expect("checked cover");
        groups[j].push(e);
    }
    Ok(groups)
}

/// The cover-induced clustering as a [`Partition`] in `E_1..E_k` order.
pub fn cover_partition(g: &Graph, cover: &[usize]) -> Result<Partition> {
    Partition::new(cover_clusters(g, cover)?, g.num_edges())
}

/// Chain tree realizing the cover-induced clustering: level `j` cuts
/// dimension `i_j - 1` at `1/2`, its right child is the leaf for `E_j`, and
/// the deepest left child is the leaf for `E_k`. Leaf ids follow the usual
/// left-to-right order.
pub fn cover_to_tree(inst: &ReductionInstance, cover: &[usize]) -> Result<ThresholdTree> {
    check_cover(&inst.graph, cover)?;
    let (_, chain) = cover.split_last().expect("non-empty cover");
    let mut node = Node::Leaf(0);
    for &v in chain.iter().rev() {
        node = Node::split(AxisCut::new(v - 1, 0.5), node, Node::Leaf(0));
    }
    Ok(ThresholdTree::with_dfs_ids(node))
}

/// Closed-form k-means cost `|E| - k` of the cover-induced clustering.
///
/// Each group is a star of `s` edges whose points sit at squared distance
/// `1 - 1/s` from the centroid, so a group costs `s - 1`. Requires every
/// group to be non-empty, which holds for minimal covers.
pub fn predicted_kmeans_cost(g: &Graph, cover: &[usize]) -> Result<f64> {
    let groups = cover_clusters(g, cover)?;
    if let Some(j) = groups.iter().position(Vec::is_empty) {
        return Err(Error::NonMinimalCover(cover[j]));
    }
    Ok((g.num_edges() - cover.len()) as f64)
}

/// Squared distance of each point of a star with `s` edges to its centroid.
pub fn star_point_sq_distance(s: usize) -> f64 {
    1.0 - 1.0 / s as f64
}

/// k-medians cost of a group of edges from vertex degrees alone:
/// `sum_i min(p - deg_C(i), deg_C(i))` with `p` the group size.
pub fn graph_cluster_median_cost(g: &Graph, cluster: &[usize]) -> usize {
    let p = cluster.len();
    g.edge_subgraph(cluster)
        .degrees()
        .into_iter()
        .map(|d| d.min(p - d))
        .sum()
}

/// True iff one vertex touches every edge of the group.
pub fn is_star(g: &Graph, cluster: &[usize]) -> bool {
    let Some(&first) = cluster.first() else {
        return false;
    };
    let (u, v) = g.edges[first];
    [u, v].into_iter().any(|c| {
        cluster.iter().all(|&e| {
            let (a, b) = g.edges[e];
            a == c || b == c
        })
    })
}

/// True iff the edges of the group form one connected component.
pub fn is_connected_edge_set(g: &Graph, cluster: &[usize]) -> bool {
    let Some(&first) = cluster.first() else {
        return false;
    };
    let mut reached = vec![false; cluster.len()];
    reached[0] = true;
    let mut touched = vec![false; g.n + 1];
    let (u, v) = g.edges[first];
    touched[u] = true;
    touched[v] = true;
    let mut grew = true;
    while grew {
        grew = false;
        for (slot, &e) in cluster.iter().enumerate() {
            let (a, b) = g.edges[e];
            if !reached[slot] && (touched[a] || touched[b]) {
                reached[slot] = true;
                touched[a] = true;
                touched[b] = true;
                grew = true;
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Graph families used to build reduction instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Path { vertices: usize },
    /// Needs at least 4 vertices to stay triangle-free.
    Cycle { vertices: usize },
    Star { arms: usize },
    Grid { rows: usize, cols: usize },
    /// Random triangle-free graph with maximum degree `max_degree`.
    RandomTriangleFree {
        vertices: usize,
        edges: usize,
        max_degree: usize,
    },
}

/// Builds a graph of the family; deterministic for a fixed seed. The result
/// is checked to be triangle-free (and degree-bounded for random graphs).
pub fn generate_graph(family: GraphFamily, seed: u64) -> Result<Graph> {
    let infeasible = |msg: alloc::string::String| Err(Error::Infeasible(msg));
    let g = match family {
        GraphFamily::Path { vertices } => {
            if vertices < 2 {
                return infeasible(format!("path needs >= 2 vertices, got {vertices}"));
            }
            Graph::new(vertices, (1..vertices).map(|i| (i, i + 1)).collect())?
        }
        GraphFamily::Cycle { vertices } => {
            if vertices < 4 {
                return infeasible(format!(
                    "cycle needs >= 4 vertices to be triangle-free, got {vertices}"
                ));
            }
            let mut edges: Vec<_> = (1..vertices).map(|i| (i, i + 1)).collect();
            edges.push((vertices, 1));
            Graph::new(vertices, edges)?
        }
        GraphFamily::Star { arms } => {
            if arms == 0 {
                return infeasible("star needs at least one arm".into());
            }
            Graph::new(arms + 1, (2..=arms + 1).map(|i| (1, i)).collect())?
        }
        GraphFamily::Grid { rows, cols } => {
            if rows * cols < 2 {
                return infeasible(format!("grid {rows}x{cols} has no edges"));
            }
            let id = |r: usize, c: usize| r * cols + c + 1;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::new(rows * cols, edges)?
        }
        GraphFamily::RandomTriangleFree {
            vertices,
            edges,
            max_degree,
        } => {
            let g = random_triangle_free(vertices, edges, max_degree, seed)?;
            g.require(Some(max_degree))?;
            return Ok(g);
        }
    };
    g.require(None)?;
    Ok(g)
}

/// Inserts shuffled vertex pairs, rejecting any that would close a triangle
/// or exceed the degree bound, until `target` edges are placed.
fn random_triangle_free(n: usize, target: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    let mut adj = vec![vec![false; n + 1]; n + 1];
    let mut deg = vec![0; n + 1];
    let mut edges = Vec::with_capacity(target);
    for (u, v) in pairs {
        if edges.len() == target {
            break;
        }
        if deg[u] >= max_degree || deg[v] >= max_degree {
            continue;
        }
        if (1..=n).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    if edges.len() < target {
        return Err(Error::Infeasible(format!(
            "placed only {} of {target} edges on {n} vertices with max degree {max_degree}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}
