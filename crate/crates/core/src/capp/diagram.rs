use crate::error::{Error, Result};

use super::{Capp, Symbol};

/// The minimal rooted ordered tree traversed by a pattern's walk.
///
/// Vertex `0` is the root. Edge `j` (the pattern's symbol `j`, first
/// traversed `j+1`-th) joins `parent_of_edge[j]` to the vertex `j + 1`,
/// which it created. Children of each vertex are listed in creation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkDiagram {
    parent_of_edge: Vec<usize>,
    children: Vec<Vec<usize>>,
    traversal_counts: Vec<u32>,
    walk: Vec<usize>,
}

impl WalkDiagram {
    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent_of_edge.len()
    }

    /// `(parent, child)` endpoints of an edge.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        (self.parent_of_edge[edge], edge + 1)
    }

    /// Edges leading from `vertex` to its children, in creation order.
    pub fn children(&self, vertex: usize) -> &[usize] {
        &self.children[vertex]
    }

    /// 1-based first-traversal index of an edge (`e_1, ..., e_r`).
    pub fn edge_order(&self, edge: usize) -> usize {
        edge + 1
    }

    pub fn traversal_counts(&self) -> &[u32] {
        &self.traversal_counts
    }

    /// Vertices visited by the walk, starting and ending at the root.
    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    pub fn depth(&self, vertex: usize) -> usize {
        let mut depth = 0;
        let mut v = vertex;
        while v != 0 {
            v = self.parent_of_edge[v - 1];
            depth += 1;
        }
        depth
    }

    /// Edges sharing a tree vertex. An edge is not adjacent to itself.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let (pa, ca) = self.endpoints(a);
        let (pb, cb) = self.endpoints(b);
        pa == pb || pa == cb || ca == pb || ca == cb
    }

    /// `alpha_j`: number of earlier-traversed edges adjacent to edge `j`
    /// in the tree.
    pub fn edge_multiplicities(&self) -> Vec<u32> {
        (0..self.edge_count())
            .map(|j| (0..j).filter(|&i| self.adjacent(i, j)).count() as u32)
            .collect()
    }

    /// Recovers the symbol string by mapping each step of the walk back to
    /// the tree edge it crosses.
    pub fn replay(&self) -> Vec<Symbol> {
        self.walk
            .windows(2)
            .map(|step| {
                let (u, v) = (step[0], step[1]);
                // the edge between u and v is owned by whichever is the child
                let child = if v != 0 && self.parent_of_edge[v - 1] == u { v } else { u };
                (child - 1) as Symbol
            })
            .collect()
    }
}

/// Reconstructs the diagram by walking the pattern: a new symbol grows a
/// child edge at the current vertex, a repeated symbol must cross an edge
/// incident to the current vertex.
pub fn diagram_of(pattern: &Capp) -> Result<WalkDiagram> {
    let r = pattern.distinct();
    let mut parent_of_edge = Vec::with_capacity(r);
    let mut children = vec![Vec::new()];
    let mut traversal_counts = vec![0u32; r];
    let mut walk = Vec::with_capacity(pattern.len() + 1);
    let mut current = 0usize;
    walk.push(current);

    for (position, &s) in pattern.symbols().iter().enumerate() {
        let edge = s as usize;
        if edge == parent_of_edge.len() {
            parent_of_edge.push(current);
            children[current].push(edge);
            children.push(Vec::new());
            current = edge + 1;
        } else if edge < parent_of_edge.len() {
            let (parent, child) = (parent_of_edge[edge], edge + 1);
            current = if current == parent {
                child
            } else if current == child {
                parent
            } else {
                return Err(Error::InconsistentWalk {
                    position,
                    symbol: edge,
                });
            };
        } else {
            return Err(Error::InvalidPattern(format!(
                "symbol {edge} at position {position} skips a label"
            )));
        }
        traversal_counts[edge] += 1;
        walk.push(current);
    }
    if current != 0 {
        return Err(Error::InvalidPattern("walk does not return to the root".into()));
    }
    Ok(WalkDiagram {
        parent_of_edge,
        children,
        traversal_counts,
        walk,
    })
}
