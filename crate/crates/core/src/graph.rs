//! Simple undirected graphs with a canonical edge ordering, plus the
//! structural queries the weight-space pipelines are built from: distance
//! layers, claw detection, small-subgraph enumeration and line graphs.
//!
//! Vertices are dense 0-based indices. Edges are unordered pairs `(u, v)`
//! with `u < v`, stored lexicographically sorted; the position of a pair in
//! that list is its edge index, which is the coordinate system used by all
//! edge-weight vectors.

use std::fmt;

use crate::error::{Error, Result};

/// An immutable simple graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may come in any order and
    /// orientation; they are normalized to `u < v` and sorted. Self-loops
    /// and repeated edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("self-loop at vertex {a}"),
                });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    index: v,
                    size: n,
                });
            }
            norm.push((u, v));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("duplicate edge ({}, {})", w[0].0, w[0].1),
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The canonical (sorted) edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `i` in canonical order.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// The index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Multi-source BFS distances; `None` for vertices unreachable from `s`.
    pub fn distances_from(&self, s: &VertexSet) -> Result<Vec<Option<usize>>> {
        if s.is_empty() {
            return Err(Error::EmptySource);
        }
        let mut dist = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &v in s.iter() {
            self.check_vertex(v)?;
            dist[v] = Some(0);
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// `{x : d(x, s) = i}`. Layer 0 is `s` itself; unreachable vertices
    /// appear in no layer.
    pub fn distance_layer(&self, s: &VertexSet, i: usize) -> Result<VertexSet> {
        let dist = self.distances_from(s)?;
        Ok(VertexSet::from_sorted(
            (0..self.n).filter(|&v| dist[v] == Some(i)).collect(),
        ))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange {
                what: "vertex",
                index: v,
                size: self.n,
            });
        }
        Ok(())
    }

    /// The lexicographically first induced claw (K_{1,3}), if any: a vertex
    /// with three pairwise non-adjacent neighbors.
    pub fn find_claw(&self) -> Option<Claw> {
        for center in 0..self.n {
            let nb = &self.adj[center];
            for ai in 0..nb.len() {
                for bi in ai + 1..nb.len() {
                    if self.is_adjacent(nb[ai], nb[bi]) {
                        continue;
                    }
                    for ci in bi + 1..nb.len() {
                        if !self.is_adjacent(nb[ai], nb[ci]) && !self.is_adjacent(nb[bi], nb[ci]) {
                            return Some(Claw {
                                center,
                                leaves: [nb[ai], nb[bi], nb[ci]],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// All P3 subgraphs (not necessarily induced), one `(v1, v2, v3)` tuple
    /// per center `v2` and unordered endpoint pair `v1 < v3`.
    pub fn enumerate_p3(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for center in 0..self.n {
            let nb = &self.adj[center];
            for ai in 0..nb.len() {
                for bi in ai + 1..nb.len() {
                    out.push((nb[ai], center, nb[bi]));
                }
            }
        }
        out
    }

    /// All 4-cycle subgraphs (not necessarily induced), once per cycle up to
    /// rotation and reflection. The representative starts at the smallest
    /// vertex `a` and visits its smaller cycle-neighbor second.
    pub fn enumerate_c4(&self) -> Vec<CycleSpec> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let nb = &self.adj[a];
            for &b in nb {
                if b <= a {
                    continue;
                }
                for &d in nb {
                    if d <= b {
                        continue;
                    }
                    // c completes a-b-c-d-a; c > a keeps a minimal.
                    for &c in self.neighbors(b) {
                        if c > a && c != b && c != d && self.is_adjacent(c, d) {
                            out.push(
                                CycleSpec::new(self, vec![a, b, c, d])
                                    .expect("enumerated 4-cycle is valid"),
                            );
                        }
                    }
                }
            }
        }
        out
    }

    /// All non-adjacent vertex pairs `u < v`, in lexicographic order.
    pub fn nonadjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.is_adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Every induced complete bipartite subgraph of shape K_{1,1}, K_{1,2}
    /// or K_{2,2}, each reported once up to swapping the two classes. On a
    /// claw-free graph these are all induced complete bipartite subgraphs.
    pub fn enumerate_bipartite_cores(&self) -> Vec<BipartiteCore> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            out.push(BipartiteCore {
                b_x: VertexSet::from_sorted(vec![u]),
                b_y: VertexSet::from_sorted(vec![v]),
                shape: CoreShape::K11,
            });
        }
        for center in 0..self.n {
            let nb = &self.adj[center];
            for ai in 0..nb.len() {
                for bi in ai + 1..nb.len() {
                    if !self.is_adjacent(nb[ai], nb[bi]) {
                        out.push(BipartiteCore {
                            b_x: VertexSet::from_sorted(vec![center]),
                            b_y: VertexSet::from_sorted(vec![nb[ai], nb[bi]]),
                            shape: CoreShape::K12,
                        });
                    }
                }
            }
        }
        for cycle in self.enumerate_c4() {
            let vs = cycle.vertices();
            let (a, b, c, d) = (vs[0], vs[1], vs[2], vs[3]);
            // Induced 4-cycles only: the diagonals must be non-edges.
            if self.is_adjacent(a, c) || self.is_adjacent(b, d) {
                continue;
            }
            let mut diag_x = vec![a, c];
            let mut diag_y = vec![b, d];
            diag_x.sort_unstable();
            diag_y.sort_unstable();
            // a is the smallest cycle vertex, so its diagonal comes first.
            out.push(BipartiteCore {
                b_x: VertexSet::from_sorted(diag_x),
                b_y: VertexSet::from_sorted(diag_y),
                shape: CoreShape::K22,
            });
        }
        out
    }

    /// The line graph: vertex `i` of the result stands for edge `i` of
    /// `self`, adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> LineGraphMap {
        let m = self.m();
        let mut edges = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        LineGraphMap {
            graph: Graph::new(m, edges).expect("line graph of a simple graph is simple"),
            source_edges: self.edges.clone(),
        }
    }

    /// The subgraph induced by `keep`, with maps from new vertex and edge
    /// indices back to the host graph's.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> InducedSubgraph {
        let vertex_map: Vec<usize> = keep.iter().copied().collect();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in vertex_map.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                edges.push((back[u], back[v]));
                edge_map.push(i);
            }
        }
        // Renumbering is monotone, so the edge list stays sorted and the
        // edge maps line up by position.
        let graph = Graph::new(vertex_map.len(), edges).expect("induced subgraph is simple");
        debug_assert_eq!(graph.m(), edge_map.len());
        InducedSubgraph {
            graph,
            vertex_map,
            edge_map,
        }
    }

    /// True iff `s` is pairwise non-adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let vs: Vec<usize> = s.iter().copied().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.is_adjacent(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `s` is independent and no strict superset is. A dependent
    /// set is not maximal by definition.
    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        if !self.is_independent(s) {
            return false;
        }
        (0..self.n).all(|v| s.contains(v) || self.neighbors(v).iter().any(|&w| s.contains(w)))
    }

    /// True iff the edge-index set is pairwise vertex-disjoint.
    pub fn is_matching(&self, edge_indices: &[usize]) -> bool {
        let mut covered = vec![false; self.n];
        for &i in edge_indices {
            if i >= self.m() {
                return false;
            }
            let (u, v) = self.edges[i];
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        true
    }

    /// True iff a matching and every edge of the graph has an endpoint
    /// covered by it. Non-matchings are not maximal by definition.
    pub fn is_maximal_matching(&self, edge_indices: &[usize]) -> bool {
        if !self.is_matching(edge_indices) {
            return false;
        }
        let mut covered = vec![false; self.n];
        for &i in edge_indices {
            let (u, v) = self.edges[i];
            covered[u] = true;
            covered[v] = true;
        }
        self.edges.iter().all(|&(u, v)| covered[u] || covered[v])
    }
}

/// Parses the text graph format: first line `n m`, then `m` lines `u v`.
/// Lines starting with `#` are comments; blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two fields, found {}", fields.len()),
            });
        }
        let parse_field = |f: &str| -> Result<usize> {
            f.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("not a non-negative integer: {f:?}"),
            })
        };
        let a = parse_field(fields[0])?;
        let b = parse_field(fields[1])?;
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                if a == b {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("self-loop at vertex {a}"),
                    });
                }
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("vertex index out of range (n = {n})"),
                    });
                }
                let key = (a.min(b), a.max(b));
                if !seen.insert(key) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("duplicate edge ({}, {})", key.0, key.1),
                    });
                }
                edges.push(key);
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header line \"n m\"".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vertices)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A set of pairwise vertex-disjoint edges, stored as sorted edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching(Vec<usize>);

impl Matching {
    pub fn new(g: &Graph, edge_indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut idx: Vec<usize> = edge_indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let mut owner = vec![usize::MAX; g.n()];
        for &i in &idx {
            if i >= g.m() {
                return Err(Error::IndexOutOfRange {
                    what: "edge",
                    index: i,
                    size: g.m(),
                });
            }
            let (u, v) = g.edge(i);
            for vert in [u, v] {
                if owner[vert] != usize::MAX {
                    return Err(Error::NotAMatching {
                        first: owner[vert],
                        second: i,
                        vertex: vert,
                    });
                }
                owner[vert] = i;
            }
        }
        Ok(Matching(idx))
    }

    pub fn empty() -> Self {
        Matching(Vec::new())
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.binary_search(&edge).is_ok()
    }

    pub fn is_maximal(&self, g: &Graph) -> bool {
        g.is_maximal_matching(&self.0)
    }

    /// Edge indices in exactly one of the two matchings, sorted.
    pub fn sym_diff(&self, other: &Matching) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .0
            .iter()
            .filter(|i| !other.contains(**i))
            .chain(other.0.iter().filter(|i| !self.contains(**i)))
            .copied()
            .collect();
        out.sort_unstable();
        out
    }
}

/// An induced claw: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// A path `v_1, ..., v_k` (`k >= 3` vertices) with consecutive vertices
/// adjacent in the host graph and all vertices distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    vertices: Vec<usize>,
    edge_indices: Vec<usize>,
}

impl PathSpec {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPath(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath("repeated vertex".into()));
        }
        let mut edge_indices = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            match g.edge_index(w[0], w[1]) {
                Some(i) => edge_indices.push(i),
                None => {
                    return Err(Error::InvalidPath(format!(
                        "missing edge ({}, {})",
                        w[0], w[1]
                    )))
                }
            }
        }
        Ok(PathSpec {
            vertices,
            edge_indices,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Path edges in traversal order, as host-graph edge indices.
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    /// Edges v1v2, v3v4, ...: the half containing the first edge.
    pub fn odd_edges(&self) -> Vec<usize> {
        self.edge_indices.iter().step_by(2).copied().collect()
    }

    /// Edges v2v3, v4v5, ...: the complementary alternating half.
    pub fn even_edges(&self) -> Vec<usize> {
        self.edge_indices.iter().skip(1).step_by(2).copied().collect()
    }
}

/// An even cycle `v_1, ..., v_k, v_1` (`k >= 4`, `k` even), vertices
/// distinct, consecutive vertices adjacent including the closing edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSpec {
    vertices: Vec<usize>,
    edge_indices: Vec<usize>,
}

impl CycleSpec {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        if k < 4 || k % 2 != 0 {
            return Err(Error::InvalidCycle(format!(
                "need an even number of vertices >= 4, got {k}"
            )));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        let mut edge_indices = Vec::with_capacity(k);
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            match g.edge_index(u, v) {
                Some(idx) => edge_indices.push(idx),
                None => {
                    return Err(Error::InvalidCycle(format!("missing edge ({u}, {v})")));
                }
            }
        }
        Ok(CycleSpec {
            vertices,
            edge_indices,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Cycle edges in traversal order; the last one closes the cycle.
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    /// Edges v1v2, v3v4, ...
    pub fn odd_edges(&self) -> Vec<usize> {
        self.edge_indices.iter().step_by(2).copied().collect()
    }

    /// Edges v2v3, ..., v_k v_1.
    pub fn even_edges(&self) -> Vec<usize> {
        self.edge_indices.iter().skip(1).step_by(2).copied().collect()
    }
}

/// Shape of an induced complete bipartite subgraph in a claw-free graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoreShape {
    K11,
    K12,
    K22,
}

impl fmt::Display for CoreShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreShape::K11 => write!(f, "K11"),
            CoreShape::K12 => write!(f, "K12"),
            CoreShape::K22 => write!(f, "K22"),
        }
    }
}

/// A candidate generating subgraph: an induced complete bipartite subgraph
/// on classes `b_x`, `b_y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteCore {
    pub b_x: VertexSet,
    pub b_y: VertexSet,
    pub shape: CoreShape,
}

impl BipartiteCore {
    /// Validates the classes against `g`: disjoint, non-empty, internally
    /// independent, fully adjacent across, and sized to match the shape.
    pub fn new(g: &Graph, b_x: VertexSet, b_y: VertexSet, shape: CoreShape) -> Result<Self> {
        let sizes = (b_x.len(), b_y.len());
        let expected = match shape {
            CoreShape::K11 => [(1, 1)].as_slice(),
            CoreShape::K12 => [(1, 2), (2, 1)].as_slice(),
            CoreShape::K22 => [(2, 2)].as_slice(),
        };
        if !expected.contains(&sizes) {
            return Err(Error::InvalidCore(format!(
                "class sizes {sizes:?} do not match shape {shape}"
            )));
        }
        for &x in b_x.iter() {
            if b_y.contains(x) {
                return Err(Error::InvalidCore(format!("classes share vertex {x}")));
            }
        }
        for side in [&b_x, &b_y] {
            if !g.is_independent(side) {
                return Err(Error::InvalidCore(format!("class {side} is not independent")));
            }
        }
        for &x in b_x.iter() {
            for &y in b_y.iter() {
                if !g.is_adjacent(x, y) {
                    return Err(Error::InvalidCore(format!("missing cross edge ({x}, {y})")));
                }
            }
        }
        Ok(BipartiteCore { b_x, b_y, shape })
    }

    pub fn vertices(&self) -> VertexSet {
        self.b_x.union(&self.b_y)
    }
}

impl fmt::Display for BipartiteCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} core B_X={} B_Y={}", self.shape, self.b_x, self.b_y)
    }
}

/// A line graph together with the edge list of its source graph; vertex `i`
/// of `graph` stands for source edge `i`.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    graph: Graph,
    source_edges: Vec<(usize, usize)>,
}

impl LineGraphMap {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// The source edge represented by line-graph vertex `i`.
    pub fn source_edge(&self, i: usize) -> (usize, usize) {
        self.source_edges[i]
    }
}

/// An induced subgraph with maps from its vertex and edge indices back to
/// the host graph's.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertex_map[new] = old`
    pub vertex_map: Vec<usize>,
    /// `edge_map[new] = old`
    pub edge_map: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parse_p3() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_graph("2 1\n0 0").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_c4_with_comments() {
        let g = parse_graph("# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_rejects_duplicates_and_bad_indices() {
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 0"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("2 1\n0 5"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("1 0\njunk here"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn distance_layers_on_c4() {
        let g = cycle(4);
        let s = VertexSet::new(vec![0]);
        assert_eq!(
            g.distance_layer(&s, 1).unwrap(),
            VertexSet::new(vec![1, 3])
        );
        assert_eq!(g.distance_layer(&s, 2).unwrap(), VertexSet::new(vec![2]));
    }

    #[test]
    fn distance_layer_multi_source() {
        let g = path(3);
        let s = VertexSet::new(vec![0, 2]);
        assert_eq!(g.distance_layer(&s, 1).unwrap(), VertexSet::new(vec![1]));
    }

    #[test]
    fn distance_layer_rejects_empty_source() {
        let g = path(3);
        assert_eq!(
            g.distance_layer(&VertexSet::empty(), 1),
            Err(Error::EmptySource)
        );
    }

    #[test]
    fn layers_partition_reachable_vertices() {
        // Disconnected: path 0-1-2 plus isolated 3.
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let s = VertexSet::new(vec![0]);
        let mut seen = VertexSet::empty();
        for i in 0..=3 {
            let layer = g.distance_layer(&s, i).unwrap();
            for &v in layer.iter() {
                assert!(!seen.contains(v));
            }
            seen = seen.union(&layer);
        }
        assert_eq!(seen, VertexSet::new(vec![0, 1, 2]));
    }

    #[test]
    fn find_claw_on_star() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let claw = g.find_claw().unwrap();
        assert_eq!(claw.center, 0);
        assert_eq!(claw.leaves, [1, 2, 3]);
    }

    #[test]
    fn c5_is_claw_free() {
        assert!(cycle(5).find_claw().is_none());
    }

    #[test]
    fn line_graphs_are_claw_free() {
        for g in corpus::all_labeled_graphs(4) {
            assert!(g.line_graph().graph().is_claw_free());
        }
        assert!(cycle(6).line_graph().graph().is_claw_free());
        assert!(Graph::new(4, [(0, 1), (0, 2), (0, 3)])
            .unwrap()
            .line_graph()
            .graph()
            .is_claw_free());
    }

    #[test]
    fn line_graph_fixtures() {
        // L(P3) = K2
        let lp3 = path(3).line_graph();
        assert_eq!(lp3.graph().n(), 2);
        assert_eq!(lp3.graph().edges(), &[(0, 1)]);
        // L(C3) = C3
        let lk3 = cycle(3).line_graph();
        assert_eq!(lk3.graph().n(), 3);
        assert_eq!(lk3.graph().m(), 3);
        // L(K_{1,3}) = C3
        let lstar = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap().line_graph();
        assert_eq!(lstar.graph().n(), 3);
        assert_eq!(lstar.graph().m(), 3);
    }

    #[test]
    fn p3_counts() {
        assert_eq!(cycle(3).enumerate_p3().len(), 3);
        assert_eq!(cycle(4).enumerate_p3().len(), 4);
        let k4 = corpus::complete_graph(4);
        assert_eq!(k4.enumerate_p3().len(), 12);
    }

    #[test]
    fn c4_counts() {
        assert_eq!(cycle(3).enumerate_c4().len(), 0);
        assert_eq!(cycle(4).enumerate_c4().len(), 1);
        assert_eq!(corpus::complete_graph(4).enumerate_c4().len(), 3);
    }

    #[test]
    fn nonadjacent_pair_counts() {
        assert_eq!(cycle(3).nonadjacent_pairs().len(), 0);
        assert_eq!(cycle(4).nonadjacent_pairs(), vec![(0, 2), (1, 3)]);
        assert_eq!(corpus::complete_graph(4).nonadjacent_pairs().len(), 0);
    }

    /// Exhaustive reference: induced complete bipartite subgraphs found by
    /// scanning all vertex subsets of size <= 4 and trying every bipartition.
    fn cores_by_subset_scan(g: &Graph) -> std::collections::HashSet<(VertexSet, VertexSet)> {
        let n = g.n();
        let mut found = std::collections::HashSet::new();
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() < 2 || verts.len() > 4 {
                continue;
            }
            let k = verts.len();
            for split in 1u32..(1 << k) - 1 {
                let side_x: Vec<usize> = (0..k).filter(|&i| split >> i & 1 == 1).map(|i| verts[i]).collect();
                let side_y: Vec<usize> = (0..k).filter(|&i| split >> i & 1 == 0).map(|i| verts[i]).collect();
                let independent = |side: &[usize]| {
                    side.iter()
                        .enumerate()
                        .all(|(i, &u)| side[i + 1..].iter().all(|&v| !g.is_adjacent(u, v)))
                };
                let cross = side_x
                    .iter()
                    .all(|&u| side_y.iter().all(|&v| g.is_adjacent(u, v)));
                if independent(&side_x) && independent(&side_y) && cross {
                    let (a, b) = (VertexSet::new(side_x.clone()), VertexSet::new(side_y.clone()));
                    let key = if a <= b { (a, b) } else { (b, a) };
                    found.insert(key);
                }
            }
        }
        found
    }

    #[test]
    fn bipartite_cores_match_subset_scan_on_claw_free_graphs() {
        for n in 2..=5 {
            for g in corpus::all_labeled_graphs(n) {
                if !g.is_claw_free() {
                    continue;
                }
                let by_shape: std::collections::HashSet<(VertexSet, VertexSet)> = g
                    .enumerate_bipartite_cores()
                    .into_iter()
                    .map(|c| {
                        if c.b_x <= c.b_y {
                            (c.b_x, c.b_y)
                        } else {
                            (c.b_y, c.b_x)
                        }
                    })
                    .collect();
                assert_eq!(by_shape, cores_by_subset_scan(&g), "graph {:?}", g.edges());
            }
        }
    }

    #[test]
    fn bipartite_core_fixtures() {
        let p3 = path(3);
        let cores = p3.enumerate_bipartite_cores();
        assert_eq!(cores.len(), 3); // edges (0,1), (1,2); K12 ({1},{0,2})
        let c4 = cycle(4);
        let cores = c4.enumerate_bipartite_cores();
        let k11 = cores.iter().filter(|c| c.shape == CoreShape::K11).count();
        let k12 = cores.iter().filter(|c| c.shape == CoreShape::K12).count();
        let k22: Vec<_> = cores.iter().filter(|c| c.shape == CoreShape::K22).collect();
        assert_eq!((k11, k12, k22.len()), (4, 4, 1));
        assert_eq!(k22[0].b_x, VertexSet::new(vec![0, 2]));
        assert_eq!(k22[0].b_y, VertexSet::new(vec![1, 3]));
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.enumerate_bipartite_cores().len(), 1);
    }

    #[test]
    fn maximality_predicates() {
        let c4 = cycle(4);
        assert!(c4.is_maximal_independent(&VertexSet::new(vec![0, 2])));
        let p4 = path(4);
        assert!(p4.is_maximal_matching(&[p4.edge_index(1, 2).unwrap()]));
        let p3 = path(3);
        assert!(p3.is_independent(&VertexSet::new(vec![0])));
        assert!(!p3.is_maximal_independent(&VertexSet::new(vec![0])));
        // Dependent / overlapping inputs report false, not an error.
        assert!(!p3.is_maximal_independent(&VertexSet::new(vec![0, 1])));
        assert!(!p4.is_maximal_matching(&[0, 1]));
    }

    #[test]
    fn matching_construction_rejects_shared_endpoints() {
        let p3 = path(3);
        assert!(matches!(
            Matching::new(&p3, [0, 1]),
            Err(Error::NotAMatching { vertex: 1, .. })
        ));
    }

    #[test]
    fn path_and_cycle_validation() {
        let c4 = cycle(4);
        assert!(PathSpec::new(&c4, vec![0, 1, 2]).is_ok());
        assert!(PathSpec::new(&c4, vec![0, 1, 0]).is_err());
        assert!(PathSpec::new(&c4, vec![0, 2, 3]).is_err());
        assert!(CycleSpec::new(&c4, vec![0, 1, 2, 3]).is_ok());
        assert!(CycleSpec::new(&c4, vec![0, 1, 2]).is_err());
        let c6 = cycle(6);
        assert!(CycleSpec::new(&c6, vec![0, 1, 2, 3]).is_err()); // (3,0) missing
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let c5 = cycle(5);
        let sub = c5.induced_subgraph(&VertexSet::new(vec![1, 2, 3]));
        assert_eq!(sub.graph.n(), 3);
        assert_eq!(sub.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(sub.vertex_map, vec![1, 2, 3]);
        assert_eq!(
            sub.edge_map,
            vec![
                c5.edge_index(1, 2).unwrap(),
                c5.edge_index(2, 3).unwrap()
            ]
        );
    }
}
