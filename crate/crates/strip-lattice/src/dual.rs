//! The oriented dual: faces become nodes, each primal edge becomes one arc.

use crate::graph::{Color, StripGraph};

/// One dual arc per primal edge, pointing from the face that contains the
/// black→white dart to the face that contains the white→black dart. With
/// counterclockwise rotations this orients every plaquette around a black
/// node as a directed cycle one way and around a white node the other way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualArc {
    pub edge_id: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDigraph {
    pub num_faces: usize,
    /// Indexed by primal edge id.
    pub arcs: Vec<DualArc>,
}

pub fn build_dual(g: &StripGraph) -> DualDigraph {
    let arcs = g
        .edges
        .iter()
        .map(|e| DualArc {
            edge_id: e.id,
            from: g.face_of_dart(2 * e.id),
            to: g.face_of_dart(2 * e.id + 1),
        })
        .collect();
    DualDigraph {
        num_faces: g.faces().len(),
        arcs,
    }
}

impl DualDigraph {
    /// Kahn's algorithm on the digraph with the flagged arcs removed
    /// (`removed` is indexed by primal edge id).
    pub fn is_acyclic_without(&self, removed: &[bool]) -> bool {
        let mut indegree = vec![0usize; self.num_faces];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.num_faces];
        for a in &self.arcs {
            if removed[a.edge_id] {
                continue;
            }
            if a.from == a.to {
                return false; // a surviving self-loop is a cycle
            }
            indegree[a.to] += 1;
            out[a.from].push(a.to);
        }
        let mut stack: Vec<usize> = (0..self.num_faces).filter(|&f| indegree[f] == 0).collect();
        let mut seen = 0;
        while let Some(f) = stack.pop() {
            seen += 1;
            for &t in &out[f] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == self.num_faces
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_without(&vec![false; self.arcs.len()])
    }
}

/// Checks that the arcs around every primal node chain into one directed
/// cycle through the surrounding faces, with black and white nodes cycling in
/// opposite rotation senses. Returns the offending node on failure.
pub fn plaquette_cycle_violation(g: &StripGraph, d: &DualDigraph) -> Option<usize> {
    for (v, nd) in g.nodes.iter().enumerate() {
        let rot = g.rotation(v);
        let deg = rot.len();
        for i in 0..deg {
            let dart = rot[i];
            let next_dart = rot[(i + 1) % deg];
            let here = g.face_of_dart(dart);
            let neighbor = g.face_of_dart(next_dart);
            let arc = &d.arcs[g.dart_edge(dart)];
            let expected = match nd.color {
                Color::Black => (here, neighbor),
                Color::White => (neighbor, here),
            };
            if (arc.from, arc.to) != expected {
                return Some(v);
            }
        }
    }
    None
}
