//! Cograph recognition by recursive complement decomposition.
//!
//! A graph on more than one vertex is a cograph iff it or its complement is
//! disconnected at every level of the decomposition; when both are connected
//! the failing vertex set contains an induced P4, which is reported as a
//! witness.

use super::{Cotree, Graph, InteriorKind, RawTree};
use thiserror::Error;

/// Recognition failure carrying an induced-P4 witness in path order:
/// `w0 - w1 - w2 - w3` with exactly those three edges present.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("not a cograph: vertices {witness:?} induce a P4")]
pub struct NotACograph {
    pub witness: [usize; 4],
}

/// Builds the minimal cotree of `g`, with leaf labels equal to the original
/// vertex ids, or reports an induced P4.
pub fn from_graph(g: &Graph) -> Result<Cotree, NotACograph> {
    let n = g.n();
    assert!(n >= 1, "graph must have at least one vertex");
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let verts: Vec<usize> = (0..n).collect();
    let raw = decompose(&adj, &verts)?;
    Ok(Cotree::from_raw(raw))
}

fn decompose(adj: &[Vec<bool>], verts: &[usize]) -> Result<RawTree, NotACograph> {
    if verts.len() == 1 {
        return Ok(RawTree::Leaf(Some(verts[0])));
    }
    let comps = components(adj, verts, false);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| decompose(adj, c))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(RawTree::Interior(InteriorKind::Union, children));
    }
    let co_comps = components(adj, verts, true);
    if co_comps.len() > 1 {
        let children = co_comps
            .iter()
            .map(|c| decompose(adj, c))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(RawTree::Interior(InteriorKind::Join, children));
    }
    // connected and co-connected on >= 2 vertices: an induced P4 exists
    Err(NotACograph {
        witness: find_p4(adj, verts).expect("connected co-connected graph must contain a P4"),
    })
}

/// Connected components of the subgraph induced on `verts`, in the
/// complement when `complement` is set.
fn components(adj: &[Vec<bool>], verts: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; verts.len()];
    let mut comps = Vec::new();
    for start in 0..verts.len() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(verts[i]);
            for j in 0..verts.len() {
                if !seen[j] {
                    let edge = adj[verts[i]][verts[j]];
                    if edge != complement {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

/// Brute-force search for an induced P4 among `verts`; returned in path order.
fn find_p4(adj: &[Vec<bool>], verts: &[usize]) -> Option<[usize; 4]> {
    let k = verts.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let quad = [verts[a], verts[b], verts[c], verts[d]];
                    if let Some(path) = as_p4(adj, quad) {
                        return Some(path);
                    }
                }
            }
        }
    }
    None
}

fn as_p4(adj: &[Vec<bool>], quad: [usize; 4]) -> Option<[usize; 4]> {
    let mut edges = 0;
    let mut deg = [0usize; 4];
    for i in 0..4 {
        for j in i + 1..4 {
            if adj[quad[i]][quad[j]] {
                edges += 1;
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    if edges != 3 || deg.iter().filter(|&&d| d == 1).count() != 2 {
        return None;
    }
    // exactly two endpoints and two middle vertices; order them as a path
    let e0 = (0..4).find(|&i| deg[i] == 1)?;
    let e1 = (e0 + 1..4).find(|&i| deg[i] == 1)?;
    let mid0 = (0..4).find(|&i| deg[i] == 2 && adj[quad[e0]][quad[i]])?;
    let mid1 = (0..4).find(|&i| deg[i] == 2 && i != mid0)?;
    if !adj[quad[mid0]][quad[mid1]] || !adj[quad[mid1]][quad[e1]] {
        return None;
    }
    Some([quad[e0], quad[mid0], quad[mid1], quad[e1]])
}

/// Checks that `witness` really induces a P4 in `g`, in path order.
pub fn is_valid_p4_witness(g: &Graph, witness: &[usize; 4]) -> bool {
    let w = witness;
    if w.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut distinct = *w;
    distinct.sort();
    if distinct.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    g.has_edge(w[0], w[1])
        && g.has_edge(w[1], w[2])
        && g.has_edge(w[2], w[3])
        && !g.has_edge(w[0], w[2])
        && !g.has_edge(w[0], w[3])
        && !g.has_edge(w[1], w[3])
}
