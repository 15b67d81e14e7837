use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::tensor::TensorMatrix;

/// Orientation of a bundle of parallel edges between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arrow {
    None,
    /// Points at `to`.
    Forward,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverEdge {
    pub from: String,
    pub to: String,
    pub count: u64,
    pub arrow: Arrow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub label: String,
    pub degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<QuiverVertex>,
    pub edges: Vec<QuiverEdge>,
}

/// Vertices i, j joined by max(b_ij, b_ji) edges, with an arrow towards i when b_ij > 1;
/// a diagonal entry b_ii gives that many loops.
pub fn quiver(m: &TensorMatrix) -> Quiver {
    let n = m.size();
    let b = &m.entries;
    let vertices = (0..n)
        .map(|i| QuiverVertex { label: m.labels[i].clone(), degree: m.degrees[i] })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        if b[i][i] > 0 {
            edges.push(QuiverEdge { from: m.labels[i].clone(), to: m.labels[i].clone(), count: b[i][i], arrow: Arrow::None });
        }
        for j in i + 1..n {
            let count = b[i][j].max(b[j][i]);
            if count == 0 {
                continue;
            }
            let (to_i, to_j) = (b[i][j] > 1, b[j][i] > 1);
            let (from, to, arrow) = match (to_i, to_j) {
                (true, true) => (j, i, Arrow::Both),
                (true, false) => (j, i, Arrow::Forward),
                (false, true) => (i, j, Arrow::Forward),
                (false, false) => (i, j, Arrow::None),
            };
            edges.push(QuiverEdge { from: m.labels[from].clone(), to: m.labels[to].clone(), count, arrow });
        }
    }
    Quiver { vertices, edges }
}

/// Deterministic DOT text: one line per edge, in vertex order.
pub fn quiver_emit(m: &TensorMatrix, name: &str) -> String {
    let q = quiver(m);
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    for v in &q.vertices {
        writeln!(out, "  \"{}\" [label=\"{} ({})\"];", v.label, v.label, v.degree).unwrap();
    }
    for e in &q.edges {
        let attr = match e.arrow {
            Arrow::None => "dir=none",
            Arrow::Forward => "dir=forward",
            Arrow::Both => "dir=both",
        };
        for _ in 0..e.count {
            writeln!(out, "  \"{}\" -> \"{}\" [{attr}];", e.from, e.to).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::Side;

    fn tm(entries: Vec<Vec<u64>>) -> TensorMatrix {
        let n = entries.len();
        TensorMatrix {
            labels: (0..n).map(|i| format!("v{i}")).collect(),
            degrees: vec![1; n],
            side: Side::Plain,
            r: 1,
            entries,
        }
    }

    #[test]
    fn rules() {
        let q = quiver_emit(&tm(vec![vec![0, 1], vec![4, 0]]), "x");
        assert_eq!(q.matches("\"v0\" -> \"v1\" [dir=forward]").count(), 4);
        let loops = quiver_emit(&tm(vec![vec![2]]), "triv");
        assert_eq!(loops.matches("\"v0\" -> \"v0\"").count(), 2);
        let tri = quiver(&tm(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]));
        assert_eq!(tri.edges.len(), 3);
        assert!(tri.edges.iter().all(|e| e.count == 1 && e.arrow == Arrow::None));
        let both = quiver(&tm(vec![vec![0, 2], vec![2, 0]]));
        assert_eq!(both.edges[0].arrow, Arrow::Both);
    }
}
