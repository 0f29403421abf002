//! Conforming triangular meshes with oriented facet connectivity.
//!
//! Orientation conventions used throughout the crate:
//!
//! * every cell lists its vertices counter-clockwise (positive signed area);
//! * local edge `k` of a cell is the edge opposite local vertex `k`, i.e.
//!   edges `(1,2)`, `(2,0)`, `(0,1)` in traversal order;
//! * each facet stores an ordered vertex pair; its unit normal is the
//!   right-hand rotation of the tangent and points from the lower-numbered
//!   adjacent cell to the higher-numbered one (outward on the boundary);
//! * `cell_facets` records, per cell and local edge, the global facet id and
//!   the sign relating the cell's outward normal to the facet normal. A sign
//!   of `-1` also means the cell traverses the facet against its stored
//!   tangent direction.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Local edges in traversal order, edge `k` opposite vertex `k`.
pub const LOCAL_EDGES: [[usize; 2]; 3] = [[1, 2], [2, 0], [0, 1]];

#[derive(Debug, Clone)]
pub struct Facet {
    /// Ordered so that `normal` is the right-hand rotation of `tangent`.
    pub vertices: [usize; 2],
    /// Adjacent cells, lower id first; interior facets have both.
    pub cells: [Option<usize>; 2],
    pub boundary: bool,
    pub length: f64,
    /// Unit tangent from `vertices[0]` to `vertices[1]`.
    pub tangent: [f64; 2],
    /// Unit normal, from `cells[0]` toward `cells[1]` (outward on the boundary).
    pub normal: [f64; 2],
}

#[derive(Debug, Clone, Copy)]
pub struct CellFacet {
    pub facet: usize,
    /// +1 if the cell's outward normal equals the facet normal.
    pub sign: f64,
}

impl CellFacet {
    /// True when the cell traverses the facet against its stored tangent.
    pub fn flipped(&self) -> bool {
        self.sign < 0.0
    }
}

#[derive(Debug, Clone)]
pub struct Mesh {
    pub vertices: Vec<[f64; 2]>,
    pub cells: Vec<[usize; 3]>,
    pub facets: Vec<Facet>,
    pub cell_facets: Vec<[CellFacet; 3]>,
    pub h_per_cell: Vec<f64>,
    pub areas: Vec<f64>,
}

/// Affine map from the reference triangle {(0,0), (1,0), (0,1)} onto a cell.
#[derive(Debug, Clone, Copy)]
pub struct AffineMap {
    /// Jacobian, rows are physical components: columns are v1-v0 and v2-v0.
    pub j: [[f64; 2]; 2],
    pub det: f64,
    pub inv: [[f64; 2]; 2],
    pub origin: [f64; 2],
}

impl AffineMap {
    pub fn map_point(&self, xi: [f64; 2]) -> [f64; 2] {
        [
            self.origin[0] + self.j[0][0] * xi[0] + self.j[0][1] * xi[1],
            self.origin[1] + self.j[1][0] * xi[0] + self.j[1][1] * xi[1],
        ]
    }

    pub fn pull_point(&self, x: [f64; 2]) -> [f64; 2] {
        let d = [x[0] - self.origin[0], x[1] - self.origin[1]];
        [
            self.inv[0][0] * d[0] + self.inv[0][1] * d[1],
            self.inv[1][0] * d[0] + self.inv[1][1] * d[1],
        ]
    }
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn norm(a: [f64; 2]) -> f64 {
    a[0].hypot(a[1])
}

impl Mesh {
    /// Builds connectivity from vertices and positively oriented cells.
    pub fn from_cells(vertices: Vec<[f64; 2]>, cells: Vec<[usize; 3]>) -> Result<Self> {
        let mut facets: Vec<Facet> = Vec::new();
        let mut cell_facets: Vec<[CellFacet; 3]> = Vec::with_capacity(cells.len());
        let mut lookup: HashMap<(usize, usize), usize> = HashMap::new();
        let mut areas = Vec::with_capacity(cells.len());
        let mut h_per_cell = Vec::with_capacity(cells.len());

        for (c, cell) in cells.iter().enumerate() {
            let p = [
                vertices[cell[0]],
                vertices[cell[1]],
                vertices[cell[2]],
            ];
            let area = 0.5 * cross(sub(p[1], p[0]), sub(p[2], p[0]));
            if area <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "cell {c} is not positively oriented (signed area {area})"
                )));
            }
            areas.push(area);
            let mut h: f64 = 0.0;
            for e in LOCAL_EDGES {
                h = h.max(norm(sub(p[e[1]], p[e[0]])));
            }
            h_per_cell.push(h);

            let mut entry = [CellFacet { facet: 0, sign: 1.0 }; 3];
            for (k, e) in LOCAL_EDGES.iter().enumerate() {
                let a = cell[e[0]];
                let b = cell[e[1]];
                let key = (a.min(b), a.max(b));
                match lookup.get(&key) {
                    None => {
                        let pa = vertices[a];
                        let pb = vertices[b];
                        let len = norm(sub(pb, pa));
                        let t = [(pb[0] - pa[0]) / len, (pb[1] - pa[1]) / len];
                        let n = [t[1], -t[0]];
                        lookup.insert(key, facets.len());
                        entry[k] = CellFacet {
                            facet: facets.len(),
                            sign: 1.0,
                        };
                        facets.push(Facet {
                            vertices: [a, b],
                            cells: [Some(c), None],
                            boundary: true,
                            length: len,
                            tangent: t,
                            normal: n,
                        });
                    }
                    Some(&f) => {
                        let facet = &mut facets[f];
                        if facet.cells[1].is_some() {
                            return Err(Error::InvalidArgument(format!(
                                "facet {f} adjacent to more than two cells"
                            )));
                        }
                        // A conforming CCW mesh traverses a shared edge in
                        // opposite directions from its two cells.
                        if facet.vertices != [b, a] {
                            return Err(Error::InvalidArgument(format!(
                                "cells around facet {f} are inconsistently oriented"
                            )));
                        }
                        facet.cells[1] = Some(c);
                        facet.boundary = false;
                        entry[k] = CellFacet { facet: f, sign: -1.0 };
                    }
                }
            }
            cell_facets.push(entry);
        }

        Ok(Self {
            vertices,
            cells,
            facets,
            cell_facets,
            h_per_cell,
            areas,
        })
    }

    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn n_boundary_facets(&self) -> usize {
        self.facets.iter().filter(|f| f.boundary).count()
    }

    pub fn n_interior_facets(&self) -> usize {
        self.facets.len() - self.n_boundary_facets()
    }

    pub fn h_per_facet(&self, f: usize) -> f64 {
        self.facets[f].length
    }

    pub fn h_max(&self) -> f64 {
        self.h_per_cell.iter().cloned().fold(0.0, f64::max)
    }

    pub fn total_area(&self) -> f64 {
        self.areas.iter().sum()
    }

    pub fn cell_points(&self, c: usize) -> [[f64; 2]; 3] {
        let cell = self.cells[c];
        [
            self.vertices[cell[0]],
            self.vertices[cell[1]],
            self.vertices[cell[2]],
        ]
    }

    pub fn affine_map(&self, c: usize) -> Result<AffineMap> {
        let p = self.cell_points(c);
        let c0 = sub(p[1], p[0]);
        let c1 = sub(p[2], p[0]);
        let det = cross(c0, c1);
        if det.abs() < 1e-300 {
            return Err(Error::SingularGeometry(format!("cell {c} is degenerate")));
        }
        let inv = [
            [c1[1] / det, -c1[0] / det],
            [-c0[1] / det, c0[0] / det],
        ];
        Ok(AffineMap {
            j: [[c0[0], c1[0]], [c0[1], c1[1]]],
            det,
            inv,
            origin: p[0],
        })
    }

    /// Outward unit normal of cell `c` on its local edge `k`.
    pub fn outward_normal(&self, c: usize, k: usize) -> [f64; 2] {
        let cf = self.cell_facets[c][k];
        let n = self.facets[cf.facet].normal;
        [cf.sign * n[0], cf.sign * n[1]]
    }

    /// Plain-text node/element dump for debugging.
    pub fn dump_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "nodes {}", self.vertices.len());
        for v in &self.vertices {
            let _ = writeln!(s, "{:.17e} {:.17e}", v[0], v[1]);
        }
        let _ = writeln!(s, "elements {}", self.cells.len());
        for c in &self.cells {
            let _ = writeln!(s, "{} {} {}", c[0], c[1], c[2]);
        }
        s
    }

    pub fn validate(&self) -> Result<()> {
        for (f, facet) in self.facets.iter().enumerate() {
            let n_adj = facet.cells.iter().filter(|c| c.is_some()).count();
            if facet.boundary && n_adj != 1 || !facet.boundary && n_adj != 2 {
                return Err(Error::InvalidArgument(format!(
                    "facet {f}: boundary flag inconsistent with adjacency"
                )));
            }
        }
        for (c, entry) in self.cell_facets.iter().enumerate() {
            for cf in entry {
                let cells = self.facets[cf.facet].cells;
                if !cells.contains(&Some(c)) {
                    return Err(Error::InvalidArgument(format!(
                        "cell {c} missing from facet {} adjacency",
                        cf.facet
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Structured mesh of the unit square: `n x n` squares, each split into two
/// triangles along the same diagonal.
pub fn unit_square_mesh(n: usize) -> Result<Mesh> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "subdivision count must be at least 1".into(),
        ));
    }
    let idx = |i: usize, j: usize| j * (n + 1) + i;
    let mut vertices = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            vertices.push([i as f64 / n as f64, j as f64 / n as f64]);
        }
    }
    let mut cells = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            let a = idx(i, j);
            let b = idx(i + 1, j);
            let c = idx(i + 1, j + 1);
            let d = idx(i, j + 1);
            cells.push([a, b, c]);
            cells.push([a, c, d]);
        }
    }
    Mesh::from_cells(vertices, cells)
}

/// Splits every triangle into 4 congruent children through edge midpoints.
pub fn refine_uniform(mesh: &Mesh) -> Result<Mesh> {
    let mut vertices = mesh.vertices.clone();
    let mut midpoint: HashMap<(usize, usize), usize> = HashMap::new();
    let mut mid = |a: usize, b: usize, vertices: &mut Vec<[f64; 2]>| -> usize {
        let key = (a.min(b), a.max(b));
        *midpoint.entry(key).or_insert_with(|| {
            let pa = vertices[a];
            let pb = vertices[b];
            vertices.push([0.5 * (pa[0] + pb[0]), 0.5 * (pa[1] + pb[1])]);
            vertices.len() - 1
        })
    };
    let mut cells = Vec::with_capacity(4 * mesh.cells.len());
    for cell in &mesh.cells {
        let [v0, v1, v2] = *cell;
        let m01 = mid(v0, v1, &mut vertices);
        let m12 = mid(v1, v2, &mut vertices);
        let m20 = mid(v2, v0, &mut vertices);
        cells.push([v0, m01, m20]);
        cells.push([v1, m12, m01]);
        cells.push([v2, m20, m12]);
        cells.push([m01, m12, m20]);
    }
    Mesh::from_cells(vertices, cells)
}
