//! Named example complexes with declared metadata.
//!
//! Every declared verdict in [`catalogue`] is re-derived by the test suite.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::budget::Budget;
use crate::complex::FlagComplex;
use crate::cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::io;
use crate::thickening::{davis_complex, CellComplex, CoxeterNerve};

fn numeric(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> FlagComplex {
    FlagComplex::new(Graph::from_edges(n, edges).expect("generator edges are in range"))
}

/// The full simplex on `d + 1` vertices.
pub fn simplex(d: usize) -> FlagComplex {
    let n = d + 1;
    numeric(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// The `k`-cycle (`k = 3` is a triangle).
pub fn cycle(k: usize) -> FlagComplex {
    numeric(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> FlagComplex {
    numeric(n, (1..n).map(|i| (i - 1, i)))
}

/// `k`-wheel: hub `0`, rim `1..=k`.
pub fn wheel(k: usize) -> FlagComplex {
    numeric(k + 1, (1..=k).flat_map(|i| [(0, i), (i, i % k + 1)]))
}

/// The cone over `x`: a new apex (labelled `apex`) joined to every vertex.
pub fn cone(x: &FlagComplex) -> Result<FlagComplex> {
    let g = x.skeleton();
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(g.label(v).clone())?;
    }
    let apex = b.add_vertex("apex")?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for v in g.vertices() {
        b.add_edge(apex, v)?;
    }
    Ok(FlagComplex::new(b.build()))
}

/// Octahedron; antipodal pairs are `(0,1)`, `(2,3)`, `(4,5)`.
pub fn octahedron() -> FlagComplex {
    numeric(6, (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2))
}

/// Suspension of the `k`-cycle: rim `0..k`, poles `k` and `k + 1`.
pub fn bipyramid(k: usize) -> FlagComplex {
    numeric(k + 2, (0..k).flat_map(|i| [(i, (i + 1) % k), (i, k), (i, k + 1)]))
}

/// Icosahedron: `0` top, `1..=5` upper ring, `6..=10` lower ring, `11` bottom.
pub fn icosahedron() -> FlagComplex {
    let mut e = Vec::new();
    for i in 0..5 {
        let (u, un) = (1 + i, 1 + (i + 1) % 5);
        let (l, ln) = (6 + i, 6 + (i + 1) % 5);
        e.extend([(0, u), (u, un), (l, ln), (l, 11), (u, l), (u, ln)]);
    }
    numeric(12, e)
}

const HEX_DIRS: [(i64, i64); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

fn hex_norm(q: i64, r: i64) -> i64 {
    q.abs().max(r.abs()).max((q + r).abs())
}

/// Ball of radius `r` in the triangular tiling of the plane, in axial coordinates. Vertices are
/// in breadth-first order from the centre and labelled `q,r`.
pub fn hexpatch(r: usize) -> FlagComplex {
    let r = r as i64;
    let mut order = vec![(0i64, 0i64)];
    let mut index = HashMap::from([((0, 0), 0usize)]);
    let mut i = 0;
    while i < order.len() {
        let (q, s) = order[i];
        i += 1;
        for (dq, ds) in HEX_DIRS {
            let p = (q + dq, s + ds);
            if hex_norm(p.0, p.1) <= r && !index.contains_key(&p) {
                index.insert(p, order.len());
                order.push(p);
            }
        }
    }
    let mut b = GraphBuilder::new();
    for &(q, s) in &order {
        b.add_vertex(format!("{q},{s}")).expect("coordinates are distinct");
    }
    for (i, &(q, s)) in order.iter().enumerate() {
        for (dq, ds) in HEX_DIRS {
            if let Some(&j) = index.get(&(q + dq, s + ds)) {
                b.add_edge(i, j).expect("ids in range");
            }
        }
    }
    FlagComplex::new(b.build())
}

/// Quotient of the triangular tiling by `a·Z × b·Z`; vertex `(i, j)` has id `i·b + j`.
pub fn flag_torus(a: usize, b: usize) -> Result<FlagComplex> {
    if a < 3 || b < 3 {
        return Err(Error::InvalidParams(format!("flag torus needs both sides >= 3, got {a}x{b}")));
    }
    let id = |i: i64, j: i64| (i.rem_euclid(a as i64) as usize) * b + j.rem_euclid(b as i64) as usize;
    let mut e = Vec::new();
    for i in 0..a as i64 {
        for j in 0..b as i64 {
            for (di, dj) in HEX_DIRS {
                e.push((id(i, j), id(i + di, j + dj)));
            }
        }
    }
    Graph::from_edges(a * b, e).map(FlagComplex::new)
}

type Mat = [u8; 4];

fn mat_mul(x: Mat, y: Mat) -> Mat {
    let m = |a: u8, b: u8, c: u8, d: u8| ((a as u32 * b as u32 + c as u32 * d as u32) % 7) as u8;
    psl_norm([
        m(x[0], y[0], x[1], y[2]),
        m(x[0], y[1], x[1], y[3]),
        m(x[2], y[0], x[3], y[2]),
        m(x[2], y[1], x[3], y[3]),
    ])
}

fn psl_norm(x: Mat) -> Mat {
    let neg = x.map(|a| (7 - a) % 7);
    x.min(neg)
}

fn order(x: Mat) -> usize {
    let id = psl_norm([1, 0, 0, 1]);
    let mut p = x;
    let mut k = 1;
    while p != id {
        p = mat_mul(p, x);
        k += 1;
    }
    k
}

fn generated(gens: &[Mat]) -> usize {
    let id = psl_norm([1, 0, 0, 1]);
    let mut seen = BTreeSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for &s in gens {
            let h = mat_mul(g, s);
            if seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

/// Klein's quartic as the `{3,7}` triangulation with 24 vertices, built from `PSL(2,7)`:
/// vertices are cosets of an element `z = xy` of order 7 (`x² = y³ = 1`), and `g⟨z⟩` is
/// adjacent to `gx⟨z⟩`.
pub fn klein_quartic() -> FlagComplex {
    let mut group = BTreeSet::new();
    for a in 0..7u8 {
        for b in 0..7u8 {
            for c in 0..7u8 {
                for d in 0..7u8 {
                    if (a as u32 * d as u32 + 7 * 7 - b as u32 * c as u32) % 7 == 1 {
                        group.insert(psl_norm([a, b, c, d]));
                    }
                }
            }
        }
    }
    let elements: Vec<Mat> = group.into_iter().collect();
    let (x, z) = elements
        .iter()
        .filter(|&&x| order(x) == 2)
        .flat_map(|&x| elements.iter().filter(|&&y| order(y) == 3).map(move |&y| (x, y)))
        .map(|(x, y)| (x, y, mat_mul(x, y)))
        .find(|&(x, y, z)| order(z) == 7 && generated(&[x, y]) == elements.len())
        .map(|(x, _, z)| (x, z))
        .expect("PSL(2,7) is a Hurwitz group");
    let coset = |g: Mat| {
        let mut best = g;
        let mut h = g;
        for _ in 0..6 {
            h = mat_mul(h, z);
            best = best.min(h);
        }
        best
    };
    let mut ids: HashMap<Mat, usize> = HashMap::new();
    for &g in &elements {
        let c = coset(g);
        let next = ids.len();
        ids.entry(c).or_insert(next);
    }
    let edges: Vec<(usize, usize)> = elements.iter().map(|&g| (ids[&coset(g)], ids[&coset(mat_mul(g, x))])).collect();
    numeric(ids.len(), edges)
}

/// Ball of radius `r` in the `{3,7}` tiling of the hyperbolic plane (every vertex link is a
/// 7-cycle), built as the radius-`r` cover of [`klein_quartic`].
pub fn heptagonal_disk(r: usize) -> Result<FlagComplex> {
    Ok(cover::build_cover(&klein_quartic(), 0, r, &Budget::unlimited())?.cover)
}

/// 5-wheel with a triangle on the rim edge `1 2` whose apex `6` sees nothing else. Not dominated.
pub fn full_pendant_wheel() -> FlagComplex {
    let mut e: Vec<_> = (1..=5).flat_map(|i| [(0, i), (i, i % 5 + 1)]).collect();
    e.extend([(6, 1), (6, 2)]);
    numeric(7, e)
}

/// 5-wheel with a pendant apex `6` on rim edge `1 2` that is also joined to the rim vertex `4`.
/// Undominated but not full.
pub fn pendant_counterexample() -> FlagComplex {
    let mut e: Vec<_> = (1..=5).flat_map(|i| [(0, i), (i, i % 5 + 1)]).collect();
    e.extend([(6, 1), (6, 2), (6, 4)]);
    numeric(7, e)
}

/// 5-wheel with a pendant apex `6` on rim edge `1 2` that is joined to the hub as well.
pub fn cone_pendant_wheel() -> FlagComplex {
    let mut e: Vec<_> = (1..=5).flat_map(|i| [(0, i), (i, i % 5 + 1)]).collect();
    e.extend([(6, 1), (6, 2), (6, 0)]);
    numeric(7, e)
}

fn grid_label(c: &[usize]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `a × b` grid of unit squares.
pub fn square_grid(a: usize, b: usize) -> Result<CellComplex> {
    cube_grid(&[a, b])
}

/// Grid of unit cubes with the given side counts in each dimension.
pub fn cube_grid(sides: &[usize]) -> Result<CellComplex> {
    if sides.is_empty() || sides.contains(&0) {
        return Err(Error::InvalidParams("grid sides must be positive".into()));
    }
    let d = sides.len();
    let dims: Vec<usize> = sides.iter().map(|s| s + 1).collect();
    let total: usize = dims.iter().product();
    let coords = |mut id: usize| {
        let mut c = vec![0; d];
        for i in (0..d).rev() {
            c[i] = id % dims[i];
            id /= dims[i];
        }
        c
    };
    let id_of = |c: &[usize]| c.iter().zip(&dims).fold(0, |acc, (&x, &n)| acc * n + x);
    let mut b = GraphBuilder::new();
    for v in 0..total {
        b.add_vertex(grid_label(&coords(v)))?;
    }
    let mut cells = Vec::new();
    for v in 0..total {
        let c = coords(v);
        for i in 0..d {
            if c[i] + 1 < dims[i] {
                let mut n = c.clone();
                n[i] += 1;
                b.add_edge(v, id_of(&n))?;
            }
        }
        if c.iter().zip(sides).all(|(&x, &s)| x < s) {
            let cell = (0..1usize << d)
                .map(|mask| {
                    let n: Vec<usize> = (0..d).map(|i| c[i] + (mask >> i & 1)).collect();
                    id_of(&n)
                })
                .collect();
            cells.push(cell);
        }
    }
    CellComplex::cubical(b.build(), &cells)
}

/// A single `d`-cube.
pub fn cube(d: usize) -> Result<CellComplex> {
    cube_grid(&vec![1; d.max(1)])
}

/// `n × n × n` block of 3-cubes.
pub fn cube_block(n: usize) -> Result<CellComplex> {
    cube_grid(&[n, n, n])
}

fn cells_from(vertices: &[&str], edges: &[(&str, &str)], cells: &[&[&str]]) -> Result<CellComplex> {
    let mut b = GraphBuilder::new();
    for &v in vertices {
        b.add_vertex(v)?;
    }
    let g0 = b.build();
    let id = |l: &str| g0.id_of_str(l);
    let mut b = GraphBuilder::new();
    for &v in vertices {
        b.add_vertex(v)?;
    }
    for &(u, v) in edges {
        b.add_edge(id(u)?, id(v)?)?;
    }
    let cells: Vec<Vec<usize>> = cells.iter().map(|c| c.iter().map(|l| id(l)).collect()).collect::<Result<_>>()?;
    CellComplex::cubical(b.build(), &cells)
}

/// Three squares around a vertex `c`, pairwise sharing an edge (a corner of a cube). The
/// link of `c` is a hollow triangle.
pub fn cube_corner() -> Result<CellComplex> {
    cells_from(
        &["c", "a", "b", "d", "ab", "bd", "ad"],
        &[
            ("c", "a"),
            ("c", "b"),
            ("c", "d"),
            ("a", "ab"),
            ("b", "ab"),
            ("b", "bd"),
            ("d", "bd"),
            ("a", "ad"),
            ("d", "ad"),
        ],
        &[&["c", "a", "ab", "b"], &["c", "b", "bd", "d"], &["c", "a", "ad", "d"]],
    )
}

/// Two squares glued along an edge.
pub fn two_squares() -> Result<CellComplex> {
    square_grid(2, 1)
}

/// Three squares whose sides `ab`, `bc`, `ca` bound a hollow triangle: pairwise they meet in
/// a single vertex, all three have empty intersection.
pub fn three_squares() -> Result<CellComplex> {
    cells_from(
        &["a", "b", "c", "x1", "y1", "x2", "y2", "x3", "y3"],
        &[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("a", "x1"),
            ("x1", "y1"),
            ("y1", "b"),
            ("b", "x2"),
            ("x2", "y2"),
            ("y2", "c"),
            ("c", "x3"),
            ("x3", "y3"),
            ("y3", "a"),
        ],
        &[&["a", "x1", "y1", "b"], &["b", "x2", "y2", "c"], &["c", "x3", "y3", "a"]],
    )
}

/// Ball of radius `r` in the Davis complex of the right-angled Coxeter group whose nerve is the
/// `k`-cycle.
pub fn davis_cycle(k: usize, r: usize) -> Result<CellComplex> {
    let nerve = CoxeterNerve::new(cycle(k).skeleton().clone());
    Ok(davis_complex(&nerve, r, &Budget::default())?.complex)
}

/// A generated complex.
#[derive(Clone, Debug)]
pub enum Generated {
    Flag(FlagComplex),
    Cells(CellComplex),
}

impl Generated {
    pub fn graph(&self) -> &Graph {
        match self {
            Generated::Flag(x) => x.skeleton(),
            Generated::Cells(y) => y.graph(),
        }
    }

    /// Serialised in the text format; cell complexes list their maximal cells.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        io::write_graph(self.graph(), &mut out);
        if let Generated::Cells(y) = self {
            io::write_cells(y.graph(), &y.maximal_cells(), &mut out);
        }
        out
    }
}

/// Generator names accepted by [`generate`].
pub const GENERATORS: &[&str] = &[
    "simplex",
    "k-cycle",
    "path",
    "wheel",
    "octahedron",
    "icosahedron",
    "bipyramid",
    "hexpatch",
    "flag-torus",
    "klein-quartic",
    "heptagonal-disk",
    "full-pendant-wheel",
    "pendant-counterexample",
    "cone-pendant-wheel",
    "square-grid",
    "cube",
    "cube-block",
    "cube-corner",
    "two-squares",
    "three-squares",
    "davis-cycle",
    "davis-pentagon",
];

fn expect_params(name: &str, params: &[usize], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::InvalidParams(format!(
            "`{name}` takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn at_least(name: &str, value: usize, min: usize) -> Result<usize> {
    if value < min {
        return Err(Error::InvalidParams(format!("`{name}` needs a parameter >= {min}, got {value}")));
    }
    Ok(value)
}

/// Run a generator by name.
pub fn generate(name: &str, params: &[usize]) -> Result<Generated> {
    use Generated::{Cells, Flag};
    let p = |i: usize| params[i];
    let fixed = |n: usize| expect_params(name, params, n);
    Ok(match name {
        "simplex" => {
            fixed(1)?;
            Flag(simplex(p(0)))
        }
        "k-cycle" => {
            fixed(1)?;
            Flag(cycle(at_least(name, p(0), 3)?))
        }
        "path" => {
            fixed(1)?;
            Flag(path(at_least(name, p(0), 1)?))
        }
        "wheel" => {
            fixed(1)?;
            Flag(wheel(at_least(name, p(0), 3)?))
        }
        "bipyramid" => {
            fixed(1)?;
            Flag(bipyramid(at_least(name, p(0), 3)?))
        }
        "hexpatch" => {
            fixed(1)?;
            Flag(hexpatch(p(0)))
        }
        "flag-torus" => {
            fixed(2)?;
            Flag(flag_torus(p(0), p(1))?)
        }
        "heptagonal-disk" => {
            fixed(1)?;
            Flag(heptagonal_disk(p(0))?)
        }
        "octahedron" | "icosahedron" | "klein-quartic" | "full-pendant-wheel" | "pendant-counterexample"
        | "cone-pendant-wheel" => {
            fixed(0)?;
            Flag(match name {
                "octahedron" => octahedron(),
                "icosahedron" => icosahedron(),
                "klein-quartic" => klein_quartic(),
                "full-pendant-wheel" => full_pendant_wheel(),
                "pendant-counterexample" => pendant_counterexample(),
                _ => cone_pendant_wheel(),
            })
        }
        "square-grid" => {
            fixed(2)?;
            Cells(square_grid(p(0), p(1))?)
        }
        "cube" => {
            fixed(1)?;
            Cells(cube(at_least(name, p(0), 1)?)?)
        }
        "cube-block" => {
            fixed(1)?;
            Cells(cube_block(at_least(name, p(0), 1)?)?)
        }
        "cube-corner" | "two-squares" | "three-squares" => {
            fixed(0)?;
            Cells(match name {
                "cube-corner" => cube_corner()?,
                "two-squares" => two_squares()?,
                _ => three_squares()?,
            })
        }
        "davis-cycle" => {
            fixed(2)?;
            Cells(davis_cycle(at_least(name, p(0), 3)?, p(1))?)
        }
        "davis-pentagon" => {
            fixed(1)?;
            Cells(davis_cycle(5, p(0))?)
        }
        _ => return Err(Error::UnknownGenerator(name.to_string())),
    })
}

/// Declared properties of a corpus entry. For cell complexes the flag-complex properties refer
/// to the thickening, and `local_largeness` to the cell complex itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metadata {
    pub simply_connected: bool,
    /// Largest `k ≤ 8` for which the complex is locally `k`-large (`None`: all of them). For
    /// cell complexes `3` means some vertex link is not flag.
    pub local_largeness: Option<usize>,
    pub weakly_systolic: bool,
    pub sd2_star: bool,
    pub sd2_star_7: bool,
    /// Only for cell complexes.
    pub no_delta: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub generator: &'static str,
    pub params: Vec<usize>,
    pub meta: Metadata,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<Generated> {
        generate(self.generator, &self.params)
    }

    pub fn is_cell_complex(&self) -> bool {
        self.meta.no_delta.is_some()
    }
}

/// Upper bound on `k` recorded in [`Metadata::local_largeness`].
pub const MAX_RECORDED_LARGENESS: usize = 8;

#[rustfmt::skip]
pub fn catalogue() -> Vec<CorpusEntry> {
    // (name, generator, params, simply connected, locally k-large, WS, SD2*, SD2*(7), no-Δ)
    let rows: &[(&str, &str, &[usize], bool, Option<usize>, bool, bool, bool, Option<bool>)] = &[
        ("simplex-3", "simplex", &[3], true, None, true, true, true, None),
        ("path-5", "path", &[5], true, None, true, true, true, None),
        ("k-cycle-4", "k-cycle", &[4], false, None, false, true, true, None),
        ("k-cycle-5", "k-cycle", &[5], false, None, false, true, true, None),
        ("k-cycle-6", "k-cycle", &[6], false, None, false, true, true, None),
        ("k-cycle-7", "k-cycle", &[7], false, None, false, true, true, None),
        ("wheel-5", "wheel", &[5], true, Some(5), true, true, true, None),
        ("wheel-6", "wheel", &[6], true, Some(6), true, true, true, None),
        ("wheel-7", "wheel", &[7], true, Some(7), true, true, true, None),
        ("octahedron", "octahedron", &[], true, Some(4), false, false, false, None),
        ("icosahedron", "icosahedron", &[], true, Some(5), false, false, false, None),
        ("bipyramid-5", "bipyramid", &[5], true, Some(4), false, false, false, None),
        ("hexpatch-2", "hexpatch", &[2], true, Some(6), true, true, false, None),
        ("hexpatch-3", "hexpatch", &[3], true, Some(6), true, true, false, None),
        ("hexpatch-4", "hexpatch", &[4], true, Some(6), true, true, false, None),
        ("flag-torus-7x7", "flag-torus", &[7, 7], false, Some(6), false, true, false, None),
        ("klein-quartic", "klein-quartic", &[], false, Some(7), false, true, true, None),
        ("heptagonal-disk-2", "heptagonal-disk", &[2], true, Some(7), true, true, true, None),
        ("heptagonal-disk-3", "heptagonal-disk", &[3], true, Some(7), true, true, true, None),
        ("full-pendant-wheel", "full-pendant-wheel", &[], true, Some(5), false, false, false, None),
        ("pendant-counterexample", "pendant-counterexample", &[], false, Some(5), false, false, false, None),
        ("cone-pendant-wheel", "cone-pendant-wheel", &[], true, Some(5), true, true, true, None),
        ("square-grid-1x1", "square-grid", &[1, 1], true, None, true, true, true, Some(true)),
        ("two-squares", "two-squares", &[], true, None, true, true, true, Some(true)),
        ("square-grid-3x3", "square-grid", &[3, 3], true, Some(4), false, false, false, Some(true)),
        ("cube-3", "cube", &[3], true, None, true, true, true, Some(true)),
        ("cube-block-2", "cube-block", &[2], true, Some(4), false, false, false, Some(true)),
        ("cube-corner", "cube-corner", &[], true, Some(3), true, true, true, Some(true)),
        ("three-squares", "three-squares", &[], false, None, true, true, true, Some(false)),
        ("davis-pentagon-2", "davis-pentagon", &[2], true, Some(5), true, true, true, Some(true)),
        ("davis-pentagon-3", "davis-pentagon", &[3], true, Some(5), true, true, true, Some(true)),
    ];
    rows.iter()
        .map(|&(name, generator, params, sc, lk, ws, s2, s7, nd)| CorpusEntry {
            name,
            generator,
            params: params.to_vec(),
            meta: Metadata {
                simply_connected: sc,
                local_largeness: lk,
                weakly_systolic: ws,
                sd2_star: s2,
                sd2_star_7: s7,
                no_delta: nd,
            },
        })
        .collect()
}

/// Resolve a catalogue name (`wheel-5`), or a generator name with dash-separated parameters
/// (`hexpatch-6`, `flag-torus-9x9`, `davis-cycle-6-2`).
pub fn resolve(name: &str) -> Result<Generated> {
    if let Some(e) = catalogue().into_iter().find(|e| e.name == name) {
        return e.build();
    }
    if GENERATORS.contains(&name) {
        return generate(name, &[]);
    }
    let mut parts: Vec<&str> = name.split('-').collect();
    let mut params = Vec::new();
    while let Some(last) = parts.last() {
        let nums: Option<Vec<usize>> = last.split('x').map(|t| t.parse().ok()).collect();
        match nums {
            Some(ns) if !last.is_empty() => {
                params.splice(0..0, ns);
                parts.pop();
            }
            _ => break,
        }
    }
    let generator = parts.join("-");
    if !GENERATORS.contains(&generator.as_str()) {
        return Err(Error::UnknownGenerator(name.to_string()));
    }
    generate(&generator, &params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_sizes() {
        assert_eq!(wheel(5).len(), 6);
        assert_eq!(wheel(5).skeleton().edge_count(), 10);
        assert_eq!(octahedron().skeleton().edge_count(), 12);
        assert_eq!(icosahedron().skeleton().edge_count(), 30);
        assert!(icosahedron().skeleton().vertices().all(|v| icosahedron().skeleton().degree(v) == 5));
        assert_eq!(bipyramid(5).len(), 7);
        assert_eq!(simplex(3).skeleton().edge_count(), 6);
    }

    #[test]
    fn hexpatch_spheres_grow_linearly() {
        let x = hexpatch(4);
        let d = x.distances_from([0]);
        for r in 1..=4 {
            assert_eq!(d.iter().filter(|&&k| k == r).count(), 6 * r);
        }
        assert_eq!(x.skeleton().label(0).to_string(), "0,0");
    }

    #[test]
    fn torus_is_six_regular() {
        let t = flag_torus(7, 7).unwrap();
        assert_eq!(t.len(), 49);
        assert!(t.skeleton().vertices().all(|v| t.skeleton().degree(v) == 6));
        assert!(flag_torus(2, 5).is_err());
    }

    #[test]
    fn klein_quartic_has_heptagonal_links() {
        let k = klein_quartic();
        assert_eq!(k.len(), 24);
        assert_eq!(k.skeleton().edge_count(), 84);
        assert_eq!(k.f_vector(&Budget::default()).unwrap(), vec![24, 84, 56]);
        for v in k.skeleton().vertices() {
            let (link, _) = k.skeleton().induced(k.skeleton().row(v));
            assert_eq!(link.len(), 7);
            assert!(link.vertices().all(|u| link.degree(u) == 2));
            assert!(link.is_connected());
        }
    }

    #[test]
    fn cells_generators() {
        assert_eq!(cube(3).unwrap().cells().len(), 27);
        assert_eq!(square_grid(3, 3).unwrap().maximal().len(), 9);
        assert_eq!(cube_block(2).unwrap().len(), 27);
        assert_eq!(cube_corner().unwrap().maximal().len(), 3);
        assert_eq!(three_squares().unwrap().maximal().len(), 3);
        assert_eq!(two_squares().unwrap().len(), 6);
    }

    #[test]
    fn resolve_names() {
        assert_eq!(resolve("wheel-5").unwrap().graph().len(), 6);
        assert_eq!(resolve("hexpatch-6").unwrap().graph().len(), 127);
        assert_eq!(resolve("flag-torus-4x5").unwrap().graph().len(), 20);
        assert_eq!(resolve("octahedron").unwrap().graph().len(), 6);
        assert!(matches!(resolve("dodecahedron"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(resolve("wheel"), Err(Error::InvalidParams(_))));
        assert!(matches!(resolve("k-cycle-2"), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn catalogue_names_are_unique_and_build() {
        let cat = catalogue();
        let names: BTreeSet<_> = cat.iter().map(|e| e.name).collect();
        assert_eq!(names.len(), cat.len());
        assert!(cat.iter().filter(|e| !e.is_cell_complex()).count() >= 15);
        for e in &cat {
            e.build().unwrap();
        }
    }
}
