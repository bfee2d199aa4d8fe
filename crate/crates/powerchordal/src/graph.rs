//! Simple undirected and directed graphs on vertices `0..n`, stored in
//! compressed sparse row form with sorted neighbor lists.
//!
//! Vertices are indices into whatever carrier produced the graph (for power
//! graphs, element indices of a group). Neighbor lists are deduplicated and
//! sorted, so adjacency tests are binary searches and neighborhood
//! intersections are linear merges.

use crate::{Error, Result};
use serde::Serialize;

/// An undirected simple graph in CSR form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Graph {
    /// Build from an edge list on `n` vertices. Loops are rejected; duplicate
    /// edges collapse.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            let (us, vs) = (u as usize, v as usize);
            if us >= n || vs >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adj[us].push(v);
            adj[vs].push(u);
        }
        Ok(Self::from_adj(adj))
    }

    /// Build from per-vertex neighbor lists (deduplicated here).
    pub(crate) fn from_adj(mut adj: Vec<Vec<u32>>) -> Graph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0usize);
        let mut neighbors = Vec::new();
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        Graph { offsets, neighbors }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Vertices of the connected component containing `start`, sorted.
    pub fn component_of(&self, start: u32) -> Vec<u32> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start as usize] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for &w in self.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n as u32 {
            if seen[s as usize] {
                continue;
            }
            let comp = self.component_of(s);
            for &v in &comp {
                seen[v as usize] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Shortest path from `src` to `dst` visiting only vertices for which
    /// `allowed` is true (both endpoints must be allowed). Returns the vertex
    /// sequence, or `None` if unreachable. Deterministic: BFS scans sorted
    /// neighbor lists, so among shortest paths the result is the one that is
    /// lexicographically least in discovery order.
    pub fn shortest_path_within(&self, src: u32, dst: u32, allowed: &[bool]) -> Option<Vec<u32>> {
        if !allowed[src as usize] || !allowed[dst as usize] {
            return None;
        }
        if src == dst {
            return Some(vec![src]);
        }
        let n = self.vertex_count();
        let mut prev: Vec<u32> = vec![u32::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        prev[src as usize] = src;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !allowed[w as usize] || prev[w as usize] != u32::MAX {
                    continue;
                }
                prev[w as usize] = u;
                if w == dst {
                    let mut path = vec![dst];
                    let mut cur = dst;
                    while cur != src {
                        cur = prev[cur as usize];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// Induced subgraph on `verts` (sorted, deduplicated internally).
    /// Returns the subgraph and the mapping from new index to old vertex.
    pub fn induced(&self, verts: &[u32]) -> (Graph, Vec<u32>) {
        let mut vs: Vec<u32> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut index_of = std::collections::HashMap::new();
        for (i, &v) in vs.iter().enumerate() {
            index_of.insert(v, i as u32);
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); vs.len()];
        for (i, &v) in vs.iter().enumerate() {
            for &w in self.neighbors(v) {
                if let Some(&j) = index_of.get(&w) {
                    adj[i].push(j);
                }
            }
        }
        (Graph::from_adj(adj), vs)
    }

    /// DOT output. `label` names each vertex; pass `None` to use indices.
    pub fn to_dot(&self, name: &str, label: Option<&dyn Fn(u32) -> String>) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph {name} {{\n"));
        for v in 0..self.vertex_count() as u32 {
            let text = match label {
                Some(f) => f(v),
                None => v.to_string(),
            };
            out.push_str(&format!("  {} [label=\"{}\"];\n", v, escape_dot(&text)));
        }
        for u in 0..self.vertex_count() as u32 {
            for &w in self.neighbors(u) {
                if u < w {
                    out.push_str(&format!("  {u} -- {w};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Edge list with `u < v`, sorted — the canonical JSON form.
    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() as u32 {
            for &w in self.neighbors(u) {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }
}

/// A directed simple graph in CSR form (out-neighbors only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    offsets: Vec<usize>,
    succ: Vec<u32>,
}

impl DiGraph {
    pub(crate) fn from_adj(mut adj: Vec<Vec<u32>>) -> DiGraph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0usize);
        let mut succ = Vec::new();
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            succ.extend_from_slice(list);
            offsets.push(succ.len());
        }
        DiGraph { offsets, succ }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn arc_count(&self) -> usize {
        self.succ.len()
    }

    /// Sorted out-neighbor list of `v`.
    pub fn successors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.succ[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.successors(u).binary_search(&v).is_ok()
    }

    /// DOT output with `->` arcs.
    pub fn to_dot(&self, name: &str, label: Option<&dyn Fn(u32) -> String>) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph {name} {{\n"));
        for v in 0..self.vertex_count() as u32 {
            let text = match label {
                Some(f) => f(v),
                None => v.to_string(),
            };
            out.push_str(&format!("  {} [label=\"{}\"];\n", v, escape_dot(&text)));
        }
        for u in 0..self.vertex_count() as u32 {
            for &w in self.successors(u) {
                out.push_str(&format!("  {u} -> {w};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn arc_list(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.vertex_count() as u32 {
            for &w in self.successors(u) {
                out.push((u, w));
            }
        }
        out
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Canonical JSON form of an undirected graph.
#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub schema_version: u32,
    pub directed: bool,
    pub vertex_count: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(u32, u32)>,
}

impl GraphJson {
    pub fn undirected(g: &Graph, labels: Vec<String>) -> GraphJson {
        GraphJson {
            schema_version: 1,
            directed: false,
            vertex_count: g.vertex_count(),
            labels,
            edges: g.edge_list(),
        }
    }

    pub fn directed(g: &DiGraph, labels: Vec<String>) -> GraphJson {
        GraphJson {
            schema_version: 1,
            directed: true,
            vertex_count: g.vertex_count(),
            labels,
            edges: g.arc_list(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn basic_adjacency() {
        let g = c5();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert!(!g.has_edge(3, 3));
        assert_eq!(g.neighbors(0), &[1, 4]);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn components_split() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(g.component_of(3), vec![2, 3]);
    }

    #[test]
    fn shortest_path_respects_mask() {
        let g = c5();
        // Full graph: 0-1-2 beats 0-4-3-2.
        let all = vec![true; 5];
        assert_eq!(g.shortest_path_within(0, 2, &all), Some(vec![0, 1, 2]));
        // Masking 1 forces the long way.
        let mut mask = vec![true; 5];
        mask[1] = false;
        assert_eq!(g.shortest_path_within(0, 2, &mask), Some(vec![0, 4, 3, 2]));
        // Masking both 1 and 4 disconnects.
        mask[4] = false;
        assert_eq!(g.shortest_path_within(0, 2, &mask), None);
        assert_eq!(g.shortest_path_within(3, 3, &all), Some(vec![3]));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = c5();
        let (sub, map) = g.induced(&[4, 0, 1]);
        assert_eq!(map, vec![0, 1, 4]);
        assert_eq!(sub.vertex_count(), 3);
        // Edges 0-1 and 0-4 survive; 1-4 does not exist in C5.
        assert!(sub.has_edge(0, 1));
        assert!(sub.has_edge(0, 2));
        assert!(!sub.has_edge(1, 2));
    }

    #[test]
    fn dot_and_json_are_deterministic() {
        let g = Graph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        let dot = g.to_dot("g", None);
        assert!(dot.starts_with("graph g {"));
        assert!(dot.contains("  0 -- 1;\n"));
        assert!(dot.contains("  0 -- 2;\n"));
        let json = GraphJson::undirected(&g, vec!["a".into(), "b".into(), "c".into()]);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"schema_version\":1"));
        assert!(text.contains("[[0,1],[0,2]]"));
    }

    #[test]
    fn digraph_arcs() {
        let d = DiGraph::from_adj(vec![vec![1, 2], vec![2], vec![]]);
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.arc_count(), 3);
        assert!(d.has_arc(0, 1));
        assert!(!d.has_arc(1, 0));
        assert_eq!(d.arc_list(), vec![(0, 1), (0, 2), (1, 2)]);
        let dot = d.to_dot("d", None);
        assert!(dot.contains("0 -> 1;"));
    }
}
