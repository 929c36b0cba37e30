//! Graph construction: nodes, edges, crossing exponents, rotation system, faces.

use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("{param} must be even and at least 2 (got {value})")]
    InvalidDimension { param: &'static str, value: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    SquareStrip,
    HexagonStrip,
    SquareGeneral,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::SquareStrip => "square-strip",
            Shape::HexagonStrip => "hexagon-strip",
            Shape::SquareGeneral => "square-general",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub color: Color,
}

/// Where an edge sits in the grid: `Horizontal { row, col }` runs east from
/// `(row, col)`; `Vertical { row, col }` runs from `(row, col)` to
/// `(row + 1 mod m, col)`. A vertical with `row = m - 1` wraps the torus in
/// the z direction; a horizontal with `col = n - 1` wraps in w.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Horizontal { row: usize, col: usize },
    Vertical { row: usize, col: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    /// Index of the black endpoint.
    pub black: usize,
    /// Index of the white endpoint.
    pub white: usize,
    /// Signed crossing of the z cut by the black→white direction.
    pub e_z: i8,
    /// Signed crossing of the w cut by the black→white direction.
    pub e_w: i8,
    pub kind: EdgeKind,
}

/// A dart (directed half-edge): `2 * edge_id` points black→white,
/// `2 * edge_id + 1` points white→black.
pub type Dart = usize;

/// An immutable torus-embedded bipartite graph.
///
/// The rotation system lists, for every node, its outgoing darts in
/// counterclockwise order; faces are the orbits of the induced face
/// permutation, so the torus embedding is explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripGraph {
    pub shape: Shape,
    pub m: usize,
    pub n: usize,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    rotations: Vec<Vec<Dart>>,
    faces: Vec<Vec<Dart>>,
    face_of_dart: Vec<usize>,
}

fn check_even(param: &'static str, value: usize) -> Result<(), LatticeError> {
    if value < 2 || value % 2 != 0 {
        return Err(LatticeError::InvalidDimension {
            param,
            value: value as i64,
        });
    }
    Ok(())
}

/// The 2×n strip of squares on the torus (parallel vertical pairs included).
pub fn build_square_strip(n: usize) -> Result<StripGraph, LatticeError> {
    check_even("n", n)?;
    Ok(assemble(Shape::SquareStrip, 2, n, |_| true))
}

/// The 2×n strip of hexagons: the square strip with every black node's
/// "down" vertical deleted, leaving each black node degree 3.
pub fn build_hexagon_strip(n: usize) -> Result<StripGraph, LatticeError> {
    check_even("n", n)?;
    // Keep the wrapping vertical at even columns and the internal vertical at
    // odd columns; each black node then retains exactly one vertical edge.
    Ok(assemble(Shape::HexagonStrip, 2, n, |kind| match kind {
        EdgeKind::Horizontal { .. } => true,
        EdgeKind::Vertical { row, col } => {
            if col % 2 == 0 {
                row == 1
            } else {
                row == 0
            }
        }
    }))
}

/// The general m×n square lattice on the torus. For m = 2 this coincides,
/// node for node and edge for edge, with [`build_square_strip`].
pub fn build_square_torus(m: usize, n: usize) -> Result<StripGraph, LatticeError> {
    check_even("m", m)?;
    check_even("n", n)?;
    let shape = if m == 2 {
        Shape::SquareStrip
    } else {
        Shape::SquareGeneral
    };
    Ok(assemble(shape, m, n, |_| true))
}

/// Builds the m×n torus grid, keeping only edges passing `keep`, then derives
/// rotations and faces.
fn assemble(shape: Shape, m: usize, n: usize, keep: impl Fn(EdgeKind) -> bool) -> StripGraph {
    let nodes: Vec<Node> = (0..m)
        .flat_map(|row| {
            (0..n).map(move |col| Node {
                row,
                col,
                color: if (row + col) % 2 == 0 {
                    Color::Black
                } else {
                    Color::White
                },
            })
        })
        .collect();
    let idx = |row: usize, col: usize| row * n + col;

    let mut edges = Vec::new();
    let mut push = |kind: EdgeKind, a: usize, b: usize, e_z: i8, e_w: i8| {
        if !keep(kind) {
            return;
        }
        let (black, white) = if nodes[a].color == Color::Black {
            (a, b)
        } else {
            (b, a)
        };
        edges.push(Edge {
            id: edges.len(),
            black,
            white,
            e_z,
            e_w,
            kind,
        });
    };
    for row in 0..m {
        for col in 0..n {
            // The w cut sits in the gap between columns n-1 and 0; a crossing
            // counts +1 when the black endpoint is on the col = n-1 side.
            let e_w = if col == n - 1 {
                if (row + col) % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            push(
                EdgeKind::Horizontal { row, col },
                idx(row, col),
                idx(row, (col + 1) % n),
                0,
                e_w,
            );
        }
    }
    for row in 0..m {
        for col in 0..n {
            // The z cut sits in the gap between rows m-1 and 0; a crossing
            // counts +1 when the black endpoint is on the row 0 side.
            let e_z = if row == m - 1 {
                if col % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            push(
                EdgeKind::Vertical { row, col },
                idx(row, col),
                idx((row + 1) % m, col),
                e_z,
                0,
            );
        }
    }

    let rotations = build_rotations(m, n, &nodes, &edges);
    let (faces, face_of_dart) = trace_faces(&nodes, &edges, &rotations);
    StripGraph {
        shape,
        m,
        n,
        nodes,
        edges,
        rotations,
        faces,
        face_of_dart,
    }
}

/// Outgoing darts at each node in counterclockwise order east, north, west,
/// south (deleted edges simply drop out, preserving the cyclic order).
fn build_rotations(m: usize, n: usize, nodes: &[Node], edges: &[Edge]) -> Vec<Vec<Dart>> {
    let mut slot = vec![[None::<Dart>; 4]; nodes.len()];
    for e in edges {
        for (v, dart) in [(e.black, 2 * e.id), (e.white, 2 * e.id + 1)] {
            let (row, col) = (nodes[v].row, nodes[v].col);
            let s = match e.kind {
                EdgeKind::Horizontal { row: er, col: ec } => {
                    debug_assert_eq!(er, row);
                    if ec == col {
                        0 // east
                    } else {
                        debug_assert_eq!(ec, (col + n - 1) % n);
                        2 // west
                    }
                }
                EdgeKind::Vertical { row: er, col: ec } => {
                    debug_assert_eq!(ec, col);
                    if er == row {
                        1 // north
                    } else {
                        debug_assert_eq!(er, (row + m - 1) % m);
                        3 // south
                    }
                }
            };
            debug_assert!(slot[v][s].is_none(), "two edges in one rotation slot");
            slot[v][s] = Some(dart);
        }
    }
    slot.into_iter()
        .map(|s| s.into_iter().flatten().collect())
        .collect()
}

/// Faces are orbits of `d -> successor-at-head(reverse(d))`.
fn trace_faces(
    nodes: &[Node],
    edges: &[Edge],
    rotations: &[Vec<Dart>],
) -> (Vec<Vec<Dart>>, Vec<usize>) {
    let num_darts = 2 * edges.len();
    let head = |d: Dart| {
        let e = &edges[d / 2];
        if d % 2 == 0 {
            e.white
        } else {
            e.black
        }
    };
    let _ = nodes;
    let mut pos = vec![usize::MAX; num_darts];
    for rot in rotations {
        for (i, &d) in rot.iter().enumerate() {
            pos[d] = i;
        }
    }
    let next = |d: Dart| {
        let h = head(d);
        let rot = &rotations[h];
        rot[(pos[d ^ 1] + 1) % rot.len()]
    };

    let mut face_of_dart = vec![usize::MAX; num_darts];
    let mut faces = Vec::new();
    for start in 0..num_darts {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            cycle.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        faces.push(cycle);
    }
    (faces, face_of_dart)
}

impl StripGraph {
    /// The degenerate graph with no nodes, no edges, and no faces. Its one
    /// perfect matching is the empty set; useful as an enumeration base case.
    pub fn empty() -> StripGraph {
        StripGraph {
            shape: Shape::SquareStrip,
            m: 0,
            n: 0,
            nodes: Vec::new(),
            edges: Vec::new(),
            rotations: Vec::new(),
            faces: Vec::new(),
            face_of_dart: Vec::new(),
        }
    }

    pub fn node_index(&self, row: usize, col: usize) -> usize {
        row * self.n + col
    }

    pub fn num_darts(&self) -> usize {
        2 * self.edges.len()
    }

    /// Node the dart points away from.
    pub fn dart_tail(&self, d: Dart) -> usize {
        let e = &self.edges[d / 2];
        if d % 2 == 0 {
            e.black
        } else {
            e.white
        }
    }

    /// Node the dart points at.
    pub fn dart_head(&self, d: Dart) -> usize {
        self.dart_tail(d ^ 1)
    }

    pub fn dart_edge(&self, d: Dart) -> usize {
        d / 2
    }

    /// Signed crossing exponents in the dart's own direction.
    pub fn dart_crossing(&self, d: Dart) -> (i64, i64) {
        let e = &self.edges[d / 2];
        let sign = if d % 2 == 0 { 1 } else { -1 };
        (sign * e.e_z as i64, sign * e.e_w as i64)
    }

    /// Outgoing darts at `v` in counterclockwise order.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn edges_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotations[v].iter().map(|&d| d / 2)
    }

    /// Faces as dart cycles (each dart appears in exactly one face).
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.face_of_dart[d]
    }

    /// Signed crossing totals around a face boundary; zero for every face of
    /// a valid torus embedding because face boundaries are contractible.
    pub fn face_crossing_sum(&self, face: usize) -> (i64, i64) {
        let mut acc = (0i64, 0i64);
        for &d in &self.faces[face] {
            let (z, w) = self.dart_crossing(d);
            acc.0 += z;
            acc.1 += w;
        }
        acc
    }

    /// Moves the z cut into the gap between `gap_row` and `gap_row + 1 mod m`,
    /// reassigning every vertical edge's `e_z`. The matching histogram is
    /// unchanged by this relabeling (each gap separates equal numbers of
    /// black and white nodes).
    pub fn with_z_cut(&self, gap_row: usize) -> StripGraph {
        assert!(gap_row < self.m);
        let mut out = self.clone();
        for e in &mut out.edges {
            e.e_z = match e.kind {
                EdgeKind::Vertical { row, .. } if row == gap_row => {
                    let above = (gap_row + 1) % self.m;
                    if self.nodes[e.black].row == above {
                        1
                    } else {
                        -1
                    }
                }
                _ => 0,
            };
        }
        out
    }

    /// Moves the w cut into the gap between `gap_col` and `gap_col + 1 mod n`.
    pub fn with_w_cut(&self, gap_col: usize) -> StripGraph {
        assert!(gap_col < self.n);
        let mut out = self.clone();
        for e in &mut out.edges {
            e.e_w = match e.kind {
                EdgeKind::Horizontal { col, .. } if col == gap_col => {
                    if self.nodes[e.black].col == gap_col {
                        1
                    } else {
                        -1
                    }
                }
                _ => 0,
            };
        }
        out
    }

    /// Debug dump: nodes, edges with crossing exponents, faces as node cycles.
    pub fn to_json_string(&self) -> String {
        let nodes: Vec<_> = self
            .nodes
            .iter()
            .map(|nd| {
                json!({
                    "row": nd.row,
                    "col": nd.col,
                    "color": match nd.color { Color::Black => "black", Color::White => "white" },
                })
            })
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (kind, row, col) = match e.kind {
                    EdgeKind::Horizontal { row, col } => ("horizontal", row, col),
                    EdgeKind::Vertical { row, col } => ("vertical", row, col),
                };
                json!({
                    "id": e.id,
                    "black": e.black,
                    "white": e.white,
                    "ez": e.e_z,
                    "ew": e.e_w,
                    "kind": kind,
                    "row": row,
                    "col": col,
                })
            })
            .collect();
        let faces: Vec<Vec<usize>> = self
            .faces
            .iter()
            .map(|cycle| cycle.iter().map(|&d| self.dart_tail(d)).collect())
            .collect();
        serde_json::to_string_pretty(&json!({
            "shape": self.shape.as_str(),
            "m": self.m,
            "n": self.n,
            "nodes": nodes,
            "edges": edges,
            "faces": faces,
        }))
        .expect("serialization of plain data cannot fail")
    }
}
