//! Negative-curvature diagnostics: thin bigons, strict contraction of projections, flat
//! triangles, and the inverse system of sphere subdivisions.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::complex::{DistanceMatrix, FlagComplex, INF};
use crate::conditions::{check_sd2_star_k, is_weakly_systolic};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::io;
use crate::verdict::{Certificate, Verdict};

/// A geodesic from `a` to `b` through `via`.
fn geodesic_through(g: &Graph, dm: &DistanceMatrix, a: usize, via: usize, b: usize) -> Vec<usize> {
    let descend = |from: usize, to: usize| {
        let mut path = vec![from];
        let mut c = from;
        while c != to {
            c = *g
                .neighbors(c)
                .iter()
                .find(|&&r| dm.raw(r, to) + 1 == dm.raw(c, to))
                .expect("connected");
            path.push(c);
        }
        path
    };
    let mut first = descend(via, a);
    first.reverse();
    first.pop();
    first.extend(descend(via, b));
    first
}

/// Thin bigons up to `max_dist`: any two geodesics with common endpoints stay within distance 1
/// of each other at equal times. The width at time `i` is the diameter of the set of vertices
/// that geodesics pass at time `i`.
pub fn check_thin_bigons(x: &FlagComplex, max_dist: usize, budget: &Budget) -> Result<Verdict> {
    let g = x.skeleton();
    let dm = x.all_pairs();
    let n = x.len();
    let mut v = Verdict::pass("thin-bigons");
    let mut worst: Option<(usize, Certificate)> = None;
    for a in 0..n {
        for b in a + 1..n {
            let d = dm.raw(a, b);
            if d == INF || d < 2 || d > max_dist {
                continue;
            }
            v.add_stat("pairs", 1);
            let interval: Vec<usize> = (0..n).filter(|&z| dm.raw(a, z).saturating_add(dm.raw(z, b)) == d).collect();
            for i in 1..d {
                let level: Vec<usize> = interval.iter().copied().filter(|&z| dm.raw(a, z) == i).collect();
                for (p, &z) in level.iter().enumerate() {
                    for &z2 in &level[p + 1..] {
                        budget.tick()?;
                        let w = dm.raw(z, z2);
                        if worst.as_ref().map_or(true, |(best, _)| w > *best) {
                            let cert = Certificate::Bigon {
                                first: geodesic_through(g, &dm, a, z, b),
                                second: geodesic_through(g, &dm, a, z2, b),
                                index: i,
                                width: w,
                            };
                            worst = Some((w, cert));
                        }
                    }
                }
            }
        }
    }
    let width = worst.as_ref().map_or(0, |(w, _)| *w);
    v.add_stat("max_width", width as u64);
    if width > 1 {
        v.holds = false;
        v.certificate = worst.map(|(_, c)| c);
    }
    Ok(v)
}

/// Vertices at distance `r` from the base adjacent to every vertex of `s`.
fn down(g: &Graph, dist: &[usize], s: &[usize], r: usize) -> Vec<usize> {
    let mut common = g.common_neighbors(s);
    if s.is_empty() {
        common = g.full_set();
    }
    common.ones().filter(|&u| dist[u] == r).collect()
}

fn nested(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x)) || b.iter().all(|x| a.contains(x))
}

/// Strict contraction: for adjacent `w1, w2 ∈ S_n(v)`, `n ≥ 2`, the second projections
/// `π²(w_i) = π(π(w_i))` are nested. Runs on any input; the `SD₂*(7)` status, under which
/// the property is guaranteed, is recorded in the stats.
pub fn check_strict_contraction(x: &FlagComplex, v: usize, budget: &Budget) -> Result<Verdict> {
    let g = x.skeleton();
    g.check_vertex(v)?;
    let pre = check_sd2_star_k(x, 7, budget)?;
    let dist = x.distances_from([v]);
    let top = dist.iter().copied().filter(|&d| d != INF).max().unwrap_or(0);
    let mut verdict = Verdict::pass("strict-contraction").with_stat("sd2star7", pre.holds as u64);
    let mut second = vec![Vec::new(); x.len()];
    for w in g.vertices() {
        if dist[w] != INF && dist[w] >= 2 {
            let p1 = down(g, &dist, &[w], dist[w] - 1);
            second[w] = down(g, &dist, &p1, dist[w] - 2);
        }
    }
    for n in 2..=top {
        for (a, b) in g.edges() {
            if dist[a] != n || dist[b] != n {
                continue;
            }
            budget.tick()?;
            verdict.add_stat("pairs", 1);
            if !nested(&second[a], &second[b]) {
                verdict.holds = false;
                verdict.certificate = Some(Certificate::Pair {
                    first: a,
                    second: b,
                    first_image: second[a].clone(),
                    second_image: second[b].clone(),
                });
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}

/// An isometric copy of the side-`l` triangle `Δ_l` of the triangular tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatTriangle {
    pub side: usize,
    /// `(j, m)` coordinates of the vertices `z_j^m`, row by row.
    pub coords: Vec<(usize, usize)>,
    /// Image of each vertex of `Δ_l`.
    pub embedding: Vec<usize>,
    /// `projection` when found by growing projections towards an apex, `search` otherwise.
    pub strategy: &'static str,
}

fn triangle_coords(l: usize) -> Vec<(usize, usize)> {
    (0..=l).flat_map(|m| (0..=l - m).map(move |j| (j, m))).collect()
}

/// Distance in `Δ_l` (axial coordinates of the triangular lattice).
pub fn triangle_distance(a: (usize, usize), b: (usize, usize)) -> usize {
    let dq = a.0 as i64 - b.0 as i64;
    let dr = a.1 as i64 - b.1 as i64;
    ((dq.abs() + dr.abs() + (dq + dr).abs()) / 2) as usize
}

impl FlatTriangle {
    /// All pairwise distances agree with `Δ_l`.
    pub fn validate(&self, x: &FlagComplex) -> bool {
        let dm = x.all_pairs();
        self.coords.len() == self.embedding.len()
            && self.coords.iter().enumerate().all(|(i, &a)| {
                self.coords.iter().enumerate().all(|(j, &b)| {
                    dm.get(self.embedding[i], self.embedding[j]) == Some(triangle_distance(a, b))
                })
            })
    }
}

struct FlatSearch<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    coords: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    budget: &'a Budget,
}

impl FlatSearch<'_> {
    fn place(&self, k: usize, image: &mut Vec<usize>, allow: &dyn Fn(usize, usize) -> bool) -> Result<bool> {
        if k == self.coords.len() {
            return Ok(true);
        }
        let (j, m) = self.coords[k];
        let candidates: Vec<usize> = if k == 0 {
            (0..self.g.len()).collect()
        } else if m == 0 {
            self.g.neighbors(image[k - 1]).to_vec()
        } else {
            let below = image[self.index[&(j, m - 1)]];
            let right = image[self.index[&(j + 1, m - 1)]];
            self.g.neighbors(below).iter().copied().filter(|&z| self.g.adjacent(z, right)).collect()
        };
        for z in candidates {
            self.budget.tick()?;
            if !allow(k, z) {
                continue;
            }
            let fits = (0..k).all(|i| self.dm.raw(image[i], z) == triangle_distance(self.coords[i], (j, m)));
            if !fits {
                continue;
            }
            image.push(z);
            if self.place(k + 1, image, allow)? {
                return Ok(true);
            }
            image.pop();
        }
        Ok(false)
    }
}

/// Search for an isometric embedding of `Δ_l`. First grows triangles from a geodesic in a
/// sphere `S_k(v)`, `k ≥ l`, taking each next row inside the projections towards `v`; if that
/// finds nothing, runs an exhaustive search over all placements. `None` is therefore a
/// certificate of absence. Requires `X` weakly systolic.
pub fn find_flat_triangle(x: &FlagComplex, l: usize, budget: &Budget) -> Result<Option<FlatTriangle>> {
    let ws = is_weakly_systolic(x)?;
    if !ws.holds {
        return Err(Error::precondition("weakly-systolic", ws));
    }
    let coords = triangle_coords(l);
    let index = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dm = x.all_pairs();
    let search = FlatSearch {
        g: x.skeleton(),
        dm: &dm,
        coords: coords.clone(),
        index,
        budget,
    };
    let found = |embedding: Vec<usize>, strategy| FlatTriangle {
        side: l,
        coords: coords.clone(),
        embedding,
        strategy,
    };
    for v in x.skeleton().vertices() {
        let top = (0..x.len()).map(|u| dm.raw(v, u)).filter(|&d| d != INF).max().unwrap_or(0);
        for k in l.max(1)..=top {
            let allow = |i: usize, z: usize| dm.raw(v, z) + search.coords[i].1 == k;
            let mut image = Vec::new();
            if search.place(0, &mut image, &allow)? {
                return Ok(Some(found(image, "projection")));
            }
        }
    }
    let mut image = Vec::new();
    if search.place(0, &mut image, &|_, _| true)? {
        return Ok(Some(found(image, "search")));
    }
    Ok(None)
}

/// One level `(S_{2n}(v))'` of the boundary system: the barycentric subdivision of a sphere.
#[derive(Clone, Debug)]
pub struct BoundaryLevel {
    pub radius: usize,
    /// Simplices of the sphere; simplex `i` is vertex `i` of `complex`.
    pub simplices: Vec<Vec<usize>>,
    /// Comparability graph of the simplices.
    pub complex: FlagComplex,
}

/// The inverse system `{(S_{2n}(v))', π²}`.
#[derive(Clone, Debug)]
pub struct SphereProjectionSystem {
    pub base: usize,
    pub levels: Vec<BoundaryLevel>,
    /// `maps[k]` sends level `k + 1` to level `k` (vertex ids of the subdivisions).
    pub maps: Vec<Vec<usize>>,
    /// Simpliciality verdict for each map.
    pub simplicial: Vec<Verdict>,
}

/// `π(σ)`: vertices one step closer to the base adjacent to all of `σ`; an error unless it is
/// a nonempty simplex.
fn project_checked(g: &Graph, dist: &[usize], s: &[usize]) -> Result<Vec<usize>> {
    let r = dist[s[0]];
    let p = down(g, dist, s, r - 1);
    if p.is_empty() || !g.is_clique(&p) {
        return Err(Error::precondition(
            "projection",
            Verdict::fail(
                "projection",
                Certificate::Projection {
                    simplex: s.to_vec(),
                    projection: p,
                },
            ),
        ));
    }
    Ok(p)
}

fn sphere_level(x: &FlagComplex, dist: &[usize], radius: usize, budget: &Budget) -> Result<BoundaryLevel> {
    let g = x.skeleton();
    let sphere = g.set_of(g.vertices().filter(|&u| dist[u] == radius));
    let mut simplices = Vec::new();
    let _ = enumerate::for_each_clique(g, &sphere, budget, |c| {
        simplices.push(c.to_vec());
        std::ops::ControlFlow::Continue(())
    })?;
    let ids: HashMap<Vec<usize>, usize> = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let mut b = GraphBuilder::new();
    for s in &simplices {
        let name: Vec<String> = s.iter().map(|&u| g.label(u).to_string()).collect();
        b.add_vertex(format!("L{radius}:{}", name.join("+")))?;
    }
    for (i, s) in simplices.iter().enumerate() {
        for mask in 1..(1usize << s.len()) - 1 {
            let face: Vec<usize> = (0..s.len()).filter(|&t| mask >> t & 1 == 1).map(|t| s[t]).collect();
            b.add_edge(i, ids[&face])?;
        }
    }
    Ok(BoundaryLevel {
        radius,
        simplices,
        complex: FlagComplex::new(b.build()),
    })
}

/// Build `(S_{2n}(v))'` for `n = 1..=n_levels` with the maps `σ ↦ π(π(σ))`, checking that every
/// map is simplicial. Requires `X` weakly systolic with `SD₂*(7)`.
pub fn export_boundary_system(
    x: &FlagComplex,
    v: usize,
    n_levels: usize,
    budget: &Budget,
) -> Result<SphereProjectionSystem> {
    let g = x.skeleton();
    g.check_vertex(v)?;
    let ws = is_weakly_systolic(x)?;
    if !ws.holds {
        return Err(Error::precondition("weakly-systolic", ws));
    }
    let s7 = check_sd2_star_k(x, 7, budget)?;
    if !s7.holds {
        return Err(Error::precondition("sd2star(7)", s7));
    }
    let dist = x.distances_from([v]);
    let levels: Vec<BoundaryLevel> =
        (1..=n_levels).map(|n| sphere_level(x, &dist, 2 * n, budget)).collect::<Result<_>>()?;
    let mut maps = Vec::new();
    let mut simplicial = Vec::new();
    for k in 0..levels.len().saturating_sub(1) {
        let (lower, upper) = (&levels[k], &levels[k + 1]);
        let ids: HashMap<&[usize], usize> = lower.simplices.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut map = Vec::with_capacity(upper.simplices.len());
        for s in &upper.simplices {
            budget.tick()?;
            let p2 = project_checked(g, &dist, &project_checked(g, &dist, s)?)?;
            map.push(ids[p2.as_slice()]);
        }
        let name = format!("simplicial({}->{})", upper.radius, lower.radius);
        let mut verdict = Verdict::pass(name);
        for (a, b) in upper.complex.skeleton().edges() {
            let (fa, fb) = (&lower.simplices[map[a]], &lower.simplices[map[b]]);
            if !nested(fa, fb) {
                verdict.holds = false;
                // σ ⊂ τ with incomparable images, all in the ambient complex
                verdict.certificate = Some(Certificate::Cells(vec![
                    upper.simplices[a].clone(),
                    upper.simplices[b].clone(),
                    fa.clone(),
                    fb.clone(),
                ]));
                break;
            }
        }
        maps.push(map);
        simplicial.push(verdict);
    }
    Ok(SphereProjectionSystem {
        base: v,
        levels,
        maps,
        simplicial,
    })
}

impl SphereProjectionSystem {
    /// Composing consecutive maps agrees with the fourfold projection `π⁴` computed directly
    /// on the simplices of the ambient complex.
    pub fn check_functoriality(&self, x: &FlagComplex) -> Result<Verdict> {
        let g = x.skeleton();
        let dist = x.distances_from([self.base]);
        let mut v = Verdict::pass("functoriality");
        for k in 0..self.maps.len().saturating_sub(1) {
            let top = &self.levels[k + 2];
            for (i, s) in top.simplices.iter().enumerate() {
                v.add_stat("simplices", 1);
                let composed = self.maps[k][self.maps[k + 1][i]];
                let mut direct = s.clone();
                for _ in 0..4 {
                    direct = project_checked(g, &dist, &direct)?;
                }
                if self.levels[k].simplices[composed] != direct {
                    v.holds = false;
                    v.certificate = Some(Certificate::Projection {
                        simplex: s.clone(),
                        projection: direct,
                    });
                    return Ok(v);
                }
            }
        }
        Ok(v)
    }

    /// All maps simplicial.
    pub fn is_simplicial(&self) -> bool {
        self.simplicial.iter().all(|v| v.holds)
    }

    /// Levels as consecutive complexes in the text format, each followed by the map lines to
    /// the previous level.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (k, level) in self.levels.iter().enumerate() {
            io::write_comment(&format!("level {} (sphere of radius {})", k + 1, level.radius), &mut out);
            io::write_graph(level.complex.skeleton(), &mut out);
            if k > 0 {
                io::write_map(
                    level.complex.skeleton(),
                    self.levels[k - 1].complex.skeleton(),
                    &self.maps[k - 1],
                    &mut out,
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn trees_have_thin_bigons() {
        let b = Budget::default();
        let v = check_thin_bigons(&corpus::path(6), 5, &b).unwrap();
        assert!(v.holds);
        assert_eq!(v.stats["max_width"], 0);
    }

    #[test]
    fn hexagonal_patch_has_fat_bigons() {
        let b = Budget::default();
        let x = corpus::hexpatch(3);
        assert!(check_thin_bigons(&x, 3, &b).unwrap().holds);
        let v = check_thin_bigons(&x, 4, &b).unwrap();
        assert!(!v.holds);
        let c = v.certificate.unwrap();
        assert!(c.validate(&x));
        let Certificate::Bigon { width, .. } = c else { panic!() };
        assert!(width >= 2);
    }

    #[test]
    fn contraction_fails_on_the_hexagonal_patch() {
        let b = Budget::default();
        let x = corpus::hexpatch(4);
        let v = check_strict_contraction(&x, 0, &b).unwrap();
        assert!(!v.holds);
        assert_eq!(v.stats["sd2star7"], 0);
        let Some(Certificate::Pair { first, .. }) = v.certificate else { panic!() };
        assert_eq!(x.distances_from([0])[first], 3);
    }

    #[test]
    fn contraction_holds_on_the_heptagonal_disk() {
        let b = Budget::default();
        let x = corpus::heptagonal_disk(4).unwrap();
        let v = check_strict_contraction(&x, 0, &b).unwrap();
        assert!(v.holds);
        assert_eq!(v.stats["sd2star7"], 1);
    }

    #[test]
    fn flat_triangles() {
        let b = Budget::default();
        let x = corpus::hexpatch(6);
        let t = find_flat_triangle(&x, 3, &b).unwrap().unwrap();
        assert!(t.validate(&x));
        assert_eq!(t.strategy, "projection");
        let t1 = find_flat_triangle(&corpus::wheel(5), 1, &b).unwrap().unwrap();
        assert_eq!(t1.embedding.len(), 3);
        let disk = corpus::heptagonal_disk(3).unwrap();
        assert!(find_flat_triangle(&disk, 3, &b).unwrap().is_none());
        assert!(matches!(
            find_flat_triangle(&corpus::octahedron(), 2, &b),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn triangle_distances() {
        assert_eq!(triangle_distance((0, 0), (2, 0)), 2);
        assert_eq!(triangle_distance((0, 2), (2, 0)), 2);
        assert_eq!(triangle_distance((0, 0), (0, 2)), 2);
        assert_eq!(triangle_distance((1, 0), (0, 1)), 1);
    }

    #[test]
    fn boundary_system_of_a_cone_is_trivial() {
        let b = Budget::default();
        let s = export_boundary_system(&corpus::wheel(7), 0, 2, &b).unwrap();
        assert!(s.levels.iter().all(|l| l.simplices.is_empty()));
        assert!(s.is_simplicial());
    }

    #[test]
    fn boundary_system_rejects_the_hexagonal_patch() {
        let err = export_boundary_system(&corpus::hexpatch(4), 0, 2, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }

    #[test]
    fn boundary_system_of_the_heptagonal_disk() {
        let b = Budget::default();
        let x = corpus::heptagonal_disk(4).unwrap();
        let s = export_boundary_system(&x, 0, 2, &b).unwrap();
        assert_eq!(s.levels[0].simplices.len(), 42);
        assert!(s.is_simplicial());
        let bytes = s.to_bytes();
        let doc = io::parse_document(&bytes).unwrap();
        assert_eq!(doc.maps.len(), s.levels[1].simplices.len());
    }
}
