//! Simple undirected graphs with stable vertex indices and string labels.
//!
//! Vertices are dense `usize` indices internally; the original labels only
//! matter at the I/O boundary. Adjacency lists are kept sorted so every
//! traversal in the crate is deterministic.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: expected two whitespace-separated labels, got {found}")]
    BadLine { line: usize, found: usize },
    #[error("line {line}: self-loop at vertex '{label}'")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: parallel edge {a}--{b}")]
    ParallelEdge { line: usize, a: String, b: String },
    #[error("duplicate edge {a}--{b}")]
    DuplicateEdge { a: String, b: String },
    #[error("self-loop at vertex '{label}'")]
    Loop { label: String },
    #[error("generator requires k >= 3, got {0}")]
    GkTooSmall(usize),
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build from (label, label) pairs. Labels are interned in first-appearance
    /// order. Rejects loops and parallel edges.
    pub fn from_named_edges<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Self, GraphError> {
        let mut g = Graph {
            labels: vec![],
            index: HashMap::new(),
            adj: vec![],
            edges: vec![],
        };
        for (a, b) in pairs {
            g.add_edge_by_label(a.as_ref(), b.as_ref(), None)?;
        }
        g.finish();
        Ok(g)
    }

    /// Parse the plain edge-list format: one edge per line as two
    /// whitespace-separated labels; `#` starts a comment; blank lines ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut g = Graph {
            labels: vec![],
            index: HashMap::new(),
            adj: vec![],
            edges: vec![],
        };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(GraphError::BadLine {
                    line: i + 1,
                    found: toks.len(),
                });
            }
            g.add_edge_by_label(toks[0], toks[1], Some(i + 1))?;
        }
        g.finish();
        Ok(g)
    }

    fn add_edge_by_label(
        &mut self,
        a: &str,
        b: &str,
        line: Option<usize>,
    ) -> Result<(), GraphError> {
        let ia = self.intern(a);
        let ib = self.intern(b);
        if ia == ib {
            return Err(match line {
                Some(line) => GraphError::SelfLoop {
                    line,
                    label: a.to_string(),
                },
                None => GraphError::Loop {
                    label: a.to_string(),
                },
            });
        }
        if self.adj[ia].contains(&ib) {
            return Err(match line {
                Some(line) => GraphError::ParallelEdge {
                    line,
                    a: a.to_string(),
                    b: b.to_string(),
                },
                None => GraphError::DuplicateEdge {
                    a: a.to_string(),
                    b: b.to_string(),
                },
            });
        }
        self.adj[ia].push(ib);
        self.adj[ib].push(ia);
        self.edges.push((ia.min(ib), ia.max(ib)));
        Ok(())
    }

    fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(vec![]);
        i
    }

    fn finish(&mut self) {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as index pairs (u < v), in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Maximal connected vertex sets, ordered by smallest contained index;
    /// vertices within each set ascend.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `verts` plus the map from new indices back to the
    /// originals. Labels are preserved.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut sorted: Vec<usize> = verts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut pos = HashMap::new();
        for (i, &v) in sorted.iter().enumerate() {
            pos.insert(v, i);
        }
        let mut g = Graph {
            labels: sorted.iter().map(|&v| self.labels[v].clone()).collect(),
            index: sorted
                .iter()
                .enumerate()
                .map(|(i, &v)| (self.labels[v].clone(), i))
                .collect(),
            adj: vec![vec![]; sorted.len()],
            edges: vec![],
        };
        for &(u, v) in &self.edges {
            if let (Some(&iu), Some(&iv)) = (pos.get(&u), pos.get(&v)) {
                g.adj[iu].push(iv);
                g.adj[iv].push(iu);
                g.edges.push((iu.min(iv), iu.max(iv)));
            }
        }
        g.finish();
        (g, sorted)
    }

    /// JSON export: `{"nodes":[labels], "edges":[[i,j],...]}`.
    pub fn to_json(&self) -> String {
        let nodes: Vec<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        serde_json::json!({ "nodes": nodes, "edges": edges }).to_string()
    }

    /// Junctions (degree >= 3) and the components of the graph with junctions
    /// removed. Junction-free components of the remainder can only be whole
    /// cycles (or whole paths when the graph itself has no junction); cycles
    /// are flagged instead of ordered as paths.
    pub fn junction_partition(&self) -> JunctionPartition {
        let n = self.n();
        let is_junction: Vec<bool> = (0..n).map(|v| self.degree(v) >= 3).collect();
        let junctions: Vec<usize> = (0..n).filter(|&v| is_junction[v]).collect();
        let mut vertex_class = vec![VertexClass::Junction; n];
        let mut seen = vec![false; n];
        let mut paths = vec![];
        for s in 0..n {
            if is_junction[s] || seen[s] {
                continue;
            }
            // collect the component of G - J containing s
            let mut comp = vec![s];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !is_junction[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            let inside_deg = |v: usize| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| !is_junction[u] && comp.binary_search(&u).is_ok())
                    .count()
            };
            let endpoints: Vec<usize> = comp.iter().copied().filter(|&v| inside_deg(v) <= 1).collect();
            let cyclic = endpoints.is_empty();
            let ordered = if cyclic {
                // whole component is a cycle: start at the smallest index
                walk_chain(self, &comp, comp[0], &is_junction)
            } else {
                walk_chain(self, &comp, endpoints[0], &is_junction)
            };
            let mut neighborhood: Vec<usize> = comp
                .iter()
                .flat_map(|&v| self.adj[v].iter().copied())
                .filter(|&u| is_junction[u])
                .collect();
            neighborhood.sort_unstable();
            neighborhood.dedup();
            let idx = paths.len();
            for &v in &comp {
                vertex_class[v] = VertexClass::Path(idx);
            }
            paths.push(JunctionPath {
                vertices: ordered,
                neighborhood,
                cyclic,
            });
        }
        JunctionPartition {
            junctions,
            is_junction,
            paths,
            vertex_class,
        }
    }
}

/// Walk a degree-<=2 component from `start`, visiting each vertex once.
fn walk_chain(g: &Graph, comp: &[usize], start: usize, is_junction: &[bool]) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| !is_junction[u] && u != prev && comp.binary_search(&u).is_ok() && !order.contains(&u));
        match next {
            Some(u) => {
                order.push(u);
                prev = cur;
                cur = u;
            }
            None => break,
        }
    }
    debug_assert_eq!(order.len(), comp.len());
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    Junction,
    Path(usize),
}

/// One component of G - J(G): an induced path (or a whole cycle when the
/// containing component of G is junction-free).
#[derive(Debug, Clone)]
pub struct JunctionPath {
    /// Vertices in consecutive order along the path.
    pub vertices: Vec<usize>,
    /// N(P): the junctions adjacent to the path, sorted.
    pub neighborhood: Vec<usize>,
    /// True when the component of G - J is itself a cycle (junction-free
    /// component of G); its neighborhood is then empty.
    pub cyclic: bool,
}

#[derive(Debug, Clone)]
pub struct JunctionPartition {
    /// J(G) = vertices of degree >= 3, sorted.
    pub junctions: Vec<usize>,
    pub is_junction: Vec<bool>,
    pub paths: Vec<JunctionPath>,
    pub vertex_class: Vec<VertexClass>,
}

impl JunctionPartition {
    pub fn path_of(&self, v: usize) -> Option<usize> {
        match self.vertex_class.get(v) {
            Some(VertexClass::Path(i)) => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n(), self.m())
    }
}

/// The subdivision gadget: K_k with every edge subdivided once and a pendant
/// leaf attached to each original vertex. Original vertices are labeled
/// `v{i}`, subdivision vertices `v{i}_{j}` (i < j), leaves `u{i}`.
pub fn generate_gk(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::GkTooSmall(k));
    }
    let mut pairs: Vec<(String, String)> = vec![];
    for i in 1..=k {
        for j in (i + 1)..=k {
            let mid = format!("v{i}_{j}");
            pairs.push((format!("v{i}"), mid.clone()));
            pairs.push((mid, format!("v{j}")));
        }
    }
    for i in 1..=k {
        pairs.push((format!("v{i}"), format!("u{i}")));
    }
    let pairs_ref: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_named_edges(&pairs_ref)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_edge_path() {
        let g = Graph::parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.label(0), "a");
        assert_eq!(g.neighbors(g.vertex("b").unwrap()), &[0, 2]);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let g = Graph::parse_edge_list("# header\n\na b # trailing\n  # indented\nb c\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn rejects_loop_with_line_number() {
        match Graph::parse_edge_list("x y\na a") {
            Err(GraphError::SelfLoop { line, label }) => {
                assert_eq!(line, 2);
                assert_eq!(label, "a");
            }
            other => panic!("expected self-loop error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_parallel_edge_both_orders() {
        assert!(matches!(
            Graph::parse_edge_list("a b\nb a"),
            Err(GraphError::ParallelEdge { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("a b\na b"),
            Err(GraphError::ParallelEdge { line: 2, .. })
        ));
    }

    #[test]
    fn rejects_arity_errors() {
        assert!(matches!(
            Graph::parse_edge_list("a b c"),
            Err(GraphError::BadLine { line: 1, found: 3 })
        ));
        assert!(matches!(
            Graph::parse_edge_list("a"),
            Err(GraphError::BadLine { line: 1, found: 1 })
        ));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = Graph::parse_edge_list("# nothing\n").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);
        assert!(g.components().is_empty());
    }

    #[test]
    fn components_are_deterministic() {
        let g = Graph::parse_edge_list("a b\nc d").unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn degree_sum_is_twice_m() {
        let g = Graph::parse_edge_list("a b\nb c\nc a\nc d").unwrap();
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.m());
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<(String, String)> = (0..n)
            .map(|i| (format!("c{i}"), format!("c{}", (i + 1) % n)))
            .collect();
        let r: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Graph::from_named_edges(&r).unwrap()
    }

    #[test]
    fn junction_partition_c5_is_one_cyclic_path() {
        let g = cycle(5);
        let p = g.junction_partition();
        assert!(p.junctions.is_empty());
        assert_eq!(p.paths.len(), 1);
        assert!(p.paths[0].cyclic);
        assert!(p.paths[0].neighborhood.is_empty());
        assert_eq!(p.paths[0].vertices.len(), 5);
    }

    #[test]
    fn junction_partition_star_paths() {
        // K_{1,3}: center is the only junction, each leaf is its own path
        let g = Graph::parse_edge_list("c a\nc b\nc d").unwrap();
        let p = g.junction_partition();
        assert_eq!(p.junctions, vec![0]);
        assert_eq!(p.paths.len(), 3);
        for path in &p.paths {
            assert_eq!(path.vertices.len(), 1);
            assert_eq!(path.neighborhood, vec![0]);
            assert!(!path.cyclic);
        }
    }

    #[test]
    fn path_vertices_are_consecutive() {
        // junction j with a pendant path of length 3 and two extra leaves
        let g = Graph::parse_edge_list("j a\na b\nb c\nj x\nj y").unwrap();
        let p = g.junction_partition();
        let long = p
            .paths
            .iter()
            .find(|pp| pp.vertices.len() == 3)
            .expect("three-vertex path");
        for w in long.vertices.windows(2) {
            assert!(g.has_edge(w[0], w[1]), "path order must chain adjacent vertices");
        }
        assert_eq!(long.neighborhood, vec![g.vertex("j").unwrap()]);
    }

    #[test]
    fn partition_classes_cover_every_vertex_once() {
        let g = Graph::parse_edge_list("a b\nb c\nc a\nc d\nd e\ne f\nf d").unwrap();
        let p = g.junction_partition();
        let mut count = vec![0usize; g.n()];
        for &j in &p.junctions {
            count[j] += 1;
        }
        for path in &p.paths {
            for &v in &path.vertices {
                count[v] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 1));
    }

    #[test]
    fn gk_counts_and_degrees() {
        let g3 = generate_gk(3).unwrap();
        assert_eq!((g3.n(), g3.m()), (9, 12));
        let g4 = generate_gk(4).unwrap();
        assert_eq!(g4.n(), 14);
        let g5 = generate_gk(5).unwrap();
        assert_eq!(g5.n(), 20);
        for k in 3..=6 {
            let g = generate_gk(k).unwrap();
            assert_eq!(g.n(), 2 * k + k * (k - 1) / 2);
            for v in 0..g.n() {
                assert!(
                    [1, 2, k].contains(&g.degree(v)),
                    "degree {} out of spectrum for k={}",
                    g.degree(v),
                    k
                );
            }
        }
        assert!(generate_gk(2).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = Graph::parse_edge_list("a b\nb c\nc d\nd a").unwrap();
        let (h, back) = g.induced(&[0, 1, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 2); // a-b and d-a survive
        assert_eq!(back, vec![0, 1, 3]);
        assert_eq!(h.vertex("a"), Some(0));
        assert!(h.has_edge(h.vertex("a").unwrap(), h.vertex("d").unwrap()));
    }

    #[test]
    fn json_export_shape() {
        let g = Graph::parse_edge_list("a b\nb c").unwrap();
        let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
        assert_eq!(v["edges"][0][0], 0);
        assert_eq!(v["edges"][0][1], 1);
    }
}
