//! Acceptance suite: one line per criterion, non-zero exit if any criterion fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsc_core::budget::Budget;
use wsc_core::complex::{ball, span, FlagComplex, Subcomplex};
use wsc_core::conditions::{
    check_locally_k_large, check_sd2_star, check_sd2_star_k, check_sd2_star_links, check_sdn, is_weakly_systolic,
    PendantMode,
};
use wsc_core::convexity::{is_3_convex, is_convex, is_locally_3_convex};
use wsc_core::corpus::{self, Generated};
use wsc_core::cover::{build_cover, validate_cover, detect_nontrivial_pi1};
use wsc_core::graph::Graph;
use wsc_core::hyperbolic::{check_thin_bigons, export_boundary_system, find_flat_triangle};
use wsc_core::thickening::{
    check_locally_k_large_cell, check_no_delta, davis_complex, euler_characteristic, euler_characteristic_cells,
    moussong_check, thicken, CellKind, CoxeterNerve,
};
use wsc_verify::lattice::hex_sphere_sizes;
use wsc_verify::sampling::random_connected_subset;
use wsc_verify::subsets::small_subset_failing_sd2_star;
use wsc_verify::tits::TitsRepresentation;

const SEED: u64 = 20_240_607;

type Check = Result<(bool, String), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Flag complexes of the corpus: flag entries as they are, cell entries through `Th`.
fn flag_corpus(b: &Budget) -> Result<Vec<(String, FlagComplex)>, String> {
    corpus::catalogue()
        .iter()
        .map(|e| {
            let x = match e.build().map_err(err)? {
                Generated::Flag(x) => x,
                Generated::Cells(y) => thicken(&y, b).map_err(err)?.complex,
            };
            Ok((e.name.to_string(), x))
        })
        .collect()
}

fn weakly_systolic_corpus(b: &Budget) -> Result<Vec<(String, FlagComplex)>, String> {
    let mut out = Vec::new();
    for (name, x) in flag_corpus(b)? {
        if x.is_connected() && is_weakly_systolic(&x).map_err(err)?.holds {
            out.push((name, x));
        }
    }
    Ok(out)
}

fn vertex(x: &FlagComplex, v: usize) -> Subcomplex<'_> {
    span(x, &[v]).expect("vertex spans")
}

fn ecc_of(x: &FlagComplex, vs: &[usize]) -> usize {
    x.distances_from(vs.iter().copied()).into_iter().filter(|&d| d != usize::MAX).max().unwrap_or(0)
}

fn criterion_1(b: &Budget) -> Check {
    let x = corpus::flag_torus(7, 7).map_err(err)?;
    let pc = build_cover(&x, 0, 5, b).map_err(err)?;
    let lattice = hex_sphere_sizes(5);
    let valid = validate_cover(&pc, b).map_err(err)?;
    let ok = pc.sphere_sizes == lattice && pc.sphere_sizes == [1, 6, 12, 18, 24, 30] && valid.holds;
    Ok((ok, format!("sphere sizes {:?}, lattice BFS {:?}, validate_cover {}", pc.sphere_sizes, lattice, valid)))
}

fn criterion_2(b: &Budget) -> Check {
    let corpus = flag_corpus(b)?;
    let (mut sd2, mut large6, mut bad) = (0, 0, Vec::new());
    for (name, x) in &corpus {
        let star = check_sd2_star(x, b).map_err(err)?.holds;
        let mut every = true;
        for v in x.skeleton().vertices() {
            every &= check_sdn(x, &vertex(x, v), 2, b).map_err(err)?.holds;
        }
        let l6 = check_locally_k_large(x, 6, b).map_err(err)?.holds;
        sd2 += every as usize;
        large6 += l6 as usize;
        if (every || l6) && !star {
            bad.push(name.clone());
        }
    }
    let ok = corpus.len() >= 15 && bad.is_empty();
    Ok((
        ok,
        format!(
            "{} complexes; SD2 everywhere on {sd2}, locally 6-large on {large6}; counterexamples {bad:?}",
            corpus.len()
        ),
    ))
}

fn criterion_3(b: &Budget) -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for k in [4, 5] {
        let x = corpus::cycle(k);
        let star = check_sd2_star(&x, b).map_err(err)?.holds;
        let mut fails_everywhere = true;
        for v in 0..k {
            fails_everywhere &= !check_sdn(&x, &vertex(&x, v), 2, b).map_err(err)?.holds;
        }
        ok &= star && fails_everywhere;
        notes.push(format!("{k}-cycle: SD2* {star}, SD2(v) fails at every v {fails_everywhere}"));
    }
    let w = corpus::wheel(5);
    let edge = span(&w, &[1, 2]).map_err(err)?;
    let y = ball(&w, &edge, 1).map_err(err)?;
    let convex = is_convex(&w, &y, b).map_err(err)?.holds;
    ok &= !convex;
    notes.push(format!("B_1(rim edge) of the 5-wheel convex: {convex}"));
    Ok((ok, notes.join("; ")))
}

fn criterion_4(b: &Budget) -> Check {
    let corpus = weakly_systolic_corpus(b)?;
    let (mut balls, mut simplex_balls, mut descents) = (0, 0, 0);
    let mut bad = Vec::new();
    for (name, x) in &corpus {
        for v in x.skeleton().vertices() {
            for i in 0..=ecc_of(x, &[v]) {
                let y = ball(x, &vertex(x, v), i).map_err(err)?;
                balls += 1;
                if !is_convex(x, &y, b).map_err(err)?.holds {
                    bad.push(format!("{name}: B_{i}(v{v})"));
                }
            }
        }
        for layer in x.simplices_in(&x.skeleton().full_set(), b).map_err(err)? {
            for s in layer {
                let a = span(x, s.vertices()).map_err(err)?;
                for i in 2..=ecc_of(x, s.vertices()).max(2) {
                    let y = ball(x, &a, i).map_err(err)?;
                    simplex_balls += 1;
                    if !is_convex(x, &y, b).map_err(err)?.holds {
                        bad.push(format!("{name}: B_{i}({:?})", s.vertices()));
                    }
                }
            }
        }
        for t in x.maximal_simplices(b).map_err(err)? {
            let a = span(x, t.vertices()).map_err(err)?;
            let n = ecc_of(x, t.vertices()).max(1);
            descents += 1;
            if !check_sdn(x, &a, n, b).map_err(err)?.holds {
                bad.push(format!("{name}: SD_{n}({:?})", t.vertices()));
            }
        }
    }
    Ok((
        bad.is_empty() && !corpus.is_empty(),
        format!(
            "{} complexes; {balls} vertex balls, {simplex_balls} simplex balls, {descents} maximal simplices; failures {:?}",
            corpus.len(),
            &bad[..bad.len().min(5)]
        ),
    ))
}

fn criterion_5(b: &Budget) -> Check {
    let corpus = weakly_systolic_corpus(b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples = 300;
    let (mut convex, mut disagreements) = (0, Vec::new());
    for _ in 0..samples {
        let (name, x) = &corpus[rng.gen_range(0..corpus.len())];
        let vs = if rng.gen_bool(0.3) {
            // balls around a random vertex or edge are convex, keeping both classes populated
            let v = rng.gen_range(0..x.len());
            let base = match x.skeleton().neighbors(v).first() {
                Some(&u) if rng.gen_bool(0.5) => vec![v, u],
                _ => vec![v],
            };
            let r = rng.gen_range(0..3);
            ball(x, &span(x, &base).map_err(err)?, r).map_err(err)?.vertices()
        } else {
            let size = rng.gen_range(1..=x.len().min(12));
            random_connected_subset(x, size, &mut rng)
        };
        let y = span(x, &vs).map_err(err)?;
        let connected = y.is_connected();
        let c = is_convex(x, &y, b).map_err(err)?.holds;
        let t = is_3_convex(x, &y, b).map_err(err)?.holds && connected;
        let l = is_locally_3_convex(x, &y, b).map_err(err)?.holds && connected;
        convex += c as usize;
        if c != t || c != l {
            disagreements.push(format!("{name} {vs:?}: convex {c}, 3-convex {t}, locally 3-convex {l}"));
        }
    }
    Ok((
        disagreements.is_empty(),
        format!(
            "{samples} samples (seed {SEED}), {convex} convex; disagreements {:?}",
            &disagreements[..disagreements.len().min(3)]
        ),
    ))
}

fn criterion_6(b: &Budget) -> Check {
    let mut candidates: Vec<(String, Option<bool>)> =
        corpus::catalogue().iter().filter(|e| e.is_cell_complex()).map(|e| (e.name.to_string(), Some(e.meta.simply_connected))).collect();
    candidates.extend(["davis-cycle-6-2", "davis-cycle-7-2"].map(|n| (n.to_string(), None)));
    let mut checked = Vec::new();
    let mut bad = Vec::new();
    for (name, declared_sc) in candidates {
        let Generated::Cells(y) = corpus::resolve(&name).map_err(err)? else { continue };
        if y.kind() != CellKind::Cubical
            || !check_locally_k_large_cell(&y, 5, b).map_err(err)?.holds
            || !check_no_delta(&y, b).map_err(err)?.holds
        {
            continue;
        }
        let th = thicken(&y, b).map_err(err)?;
        let x = &th.complex;
        let mut fail = |what: &str| bad.push(format!("{name}: {what}"));
        if !th.flag.holds {
            fail("not flag");
        }
        if !check_locally_k_large(x, 5, b).map_err(err)?.holds {
            fail("not locally 5-large");
        }
        for k in [6, 7] {
            if !check_sd2_star_k(x, k, b).map_err(err)?.holds {
                fail(&format!("fails SD2*({k})"));
            }
        }
        if euler_characteristic(x, b).map_err(err)? != euler_characteristic_cells(&y) {
            fail("Euler characteristic differs");
        }
        // SD2* holds here, so the cover detects non-trivial fundamental groups
        let sc = !detect_nontrivial_pi1(x, b).map_err(err)?;
        if declared_sc.is_some_and(|d| d != sc) {
            fail("simple connectivity disagrees with the corpus metadata");
        }
        if sc && !is_weakly_systolic(x).map_err(err)?.holds {
            fail("simply connected but Th(Y) not weakly systolic");
        }
        checked.push(name);
    }
    Ok((bad.is_empty() && !checked.is_empty(), format!("checked {checked:?}; failures {bad:?}")))
}

/// Normal forms against the faithful matrix representation on a ball of at most `limit`
/// elements; returns (elements, radius, mismatches).
fn word_kernel_mismatches(nerve_graph: &Graph, limit: usize, rng: &mut ChaCha8Rng) -> (usize, usize, Vec<String>) {
    let nerve = CoxeterNerve::new(nerve_graph.clone());
    let tits = TitsRepresentation::new(nerve_graph);
    let (elements, radius) = tits.ball(limit);
    let by_matrix: HashMap<&Vec<i128>, usize> = elements.iter().enumerate().map(|(i, (_, m))| (m, i)).collect();
    let forms: Vec<Vec<usize>> = elements.iter().map(|(w, _)| nerve.normal_form(w)).collect();
    let mut mismatches = Vec::new();
    let mut owner: HashMap<&Vec<usize>, usize> = HashMap::new();
    for (i, (w, _)) in elements.iter().enumerate() {
        if forms[i].len() != w.len() {
            mismatches.push(format!("{w:?}: normal form {:?} has the wrong length", forms[i]));
        }
        if let Some(j) = owner.insert(&forms[i], i) {
            mismatches.push(format!("{:?} and {:?} share a normal form", elements[j].0, w));
        }
    }
    for (i, (_, m)) in elements.iter().enumerate() {
        for s in 0..nerve.rank() {
            let product = nerve.normal_form(&nerve.multiply(&forms[i], s));
            match by_matrix.get(&tits.times(m, s)) {
                Some(&j) if forms[j] != product => mismatches.push(format!("{:?}·{s}", forms[i])),
                None if product.len() <= radius => mismatches.push(format!("{:?}·{s} left the ball", forms[i])),
                _ => {}
            }
        }
    }
    for _ in 0..500 {
        let len = rng.gen_range(0..=2 * radius + 2);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..nerve.rank())).collect();
        let nf = nerve.normal_form(&word);
        match by_matrix.get(&tits.of_word(&word)) {
            Some(&j) if forms[j] != nf => mismatches.push(format!("random word {word:?}")),
            None if nf.len() <= radius => mismatches.push(format!("random word {word:?} outside the ball")),
            _ => {}
        }
    }
    (elements.len(), radius, mismatches)
}

fn criterion_7(b: &Budget) -> Check {
    let pentagon = CoxeterNerve::new(corpus::cycle(5).skeleton().clone());
    let square = CoxeterNerve::new(corpus::cycle(4).skeleton().clone());
    let m5 = moussong_check(&pentagon, None, b).map_err(err)?.holds;
    let m4 = moussong_check(&square, None, b).map_err(err)?.holds;
    let d = davis_complex(&pentagon, 5, b).map_err(err)?;
    let interior = d.thickened_interior(b).map_err(err)?;
    let star = check_sd2_star(&interior, b).map_err(err)?.holds;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let nerves: Vec<(&str, Graph)> = vec![
        ("pentagon", corpus::cycle(5).skeleton().clone()),
        ("square", corpus::cycle(4).skeleton().clone()),
        ("hexagon", corpus::cycle(6).skeleton().clone()),
        ("path-4", corpus::path(4).skeleton().clone()),
        ("5-wheel", corpus::wheel(5).skeleton().clone()),
        ("octahedron", corpus::octahedron().skeleton().clone()),
        ("three points", Graph::from_edges(3, []).unwrap()),
        ("simplex-3", corpus::simplex(3).skeleton().clone()),
    ];
    let mut total = 0;
    let mut mismatches = Vec::new();
    let mut davis_sizes = Vec::new();
    for (name, g) in &nerves {
        let (n, radius, bad) = word_kernel_mismatches(g, 2000, &mut rng);
        total += n;
        mismatches.extend(bad.into_iter().map(|m| format!("{name}: {m}")));
        // the Davis ball has exactly the group elements of length ≤ radius
        let dv = davis_complex(&CoxeterNerve::new(g.clone()), radius, b).map_err(err)?;
        if dv.words.len() != n {
            mismatches.push(format!("{name}: Davis ball has {} vertices, group ball {n}", dv.words.len()));
        }
        davis_sizes.push(n);
    }
    let ok = m5 && !m4 && star && mismatches.is_empty();
    Ok((
        ok,
        format!(
            "moussong(C5) {m5}, moussong(C4) {m4}, thickened interior ({} vertices) SD2* {star}; \
             {total} group elements over {} nerves (balls {davis_sizes:?}), mismatches {:?}",
            interior.len(),
            nerves.len(),
            &mismatches[..mismatches.len().min(3)]
        ),
    ))
}

fn criterion_8(b: &Budget) -> Check {
    let disk = corpus::heptagonal_disk(3).map_err(err)?;
    let large7 = check_locally_k_large(&disk, 7, b).map_err(err)?.holds;
    let diam = disk.diameter().ok_or("disconnected")?;
    let thin = check_thin_bigons(&disk, diam, b).map_err(err)?;
    let mut flats = Vec::new();
    for side in 2..=diam / 2 {
        if let Some(t) = find_flat_triangle(&disk, side, b).map_err(err)? {
            if t.validate(&disk) {
                flats.push(side);
            }
        }
    }
    let hex = corpus::hexpatch(6);
    let hex_bigons = check_thin_bigons(&hex, hex.diameter().ok_or("disconnected")?, b).map_err(err)?;
    let hex_width = hex_bigons.stats.get("max_width").copied().unwrap_or(0);
    let hex_flat = find_flat_triangle(&hex, 3, b).map_err(err)?.is_some_and(|t| t.validate(&hex));
    let ok = large7 && thin.holds && flats.is_empty() && !hex_bigons.holds && hex_width >= 2 && hex_flat;
    Ok((
        ok,
        format!(
            "7-large disk (diameter {diam}, locally 7-large {large7}): thin bigons {}, isometric flat triangles of side {flats:?}; \
             hexagonal patch: bigon width {hex_width}, Δ_3 found {hex_flat}",
            thin.holds
        ),
    ))
}

fn criterion_9(b: &Budget) -> Check {
    let x = corpus::heptagonal_disk(6).map_err(err)?;
    let large7 = check_locally_k_large(&x, 7, b).map_err(err)?.holds;
    let sys = export_boundary_system(&x, 0, 3, b).map_err(err)?;
    let functorial = sys.check_functoriality(&x).map_err(err)?;
    let sizes: Vec<usize> = sys.levels.iter().map(|l| l.simplices.len()).collect();
    let ok = large7 && sys.is_simplicial() && functorial.holds && sys.maps.len() == 2;
    Ok((
        ok,
        format!(
            "levels S_2, S_4, S_6 with {sizes:?} simplices; maps simplicial {}, functoriality {}",
            sys.is_simplicial(),
            functorial.holds
        ),
    ))
}

fn criterion_10(b: &Budget) -> Check {
    let mut compared = 0;
    let mut bad = Vec::new();
    for (name, x) in flag_corpus(b)? {
        if x.len() > 20 {
            continue;
        }
        compared += 1;
        let links = check_sd2_star_links(&x, 6, PendantMode::default(), b).map_err(err)?.holds;
        let brute = small_subset_failing_sd2_star(&x, 12, b).map_err(err)?;
        if links != brute.is_none() {
            bad.push(format!("{name}: links {links}, brute force witness {brute:?}"));
        }
    }
    Ok((bad.is_empty() && compared > 0, format!("{compared} complexes with at most 20 vertices; disagreements {bad:?}")))
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<u64>, fn(&Budget) -> Check); 10] = [
        ("Cartan–Hadamard cover of the 7x7 torus", Some(5), criterion_1),
        ("SD2 and local 6-largeness imply SD2*", Some(30), criterion_2),
        ("cycles and the 5-wheel rim ball", None, criterion_3),
        ("convexity of balls and descent from maximal simplices", Some(60), criterion_4),
        ("convex = 3-convex = locally 3-convex on connected full subcomplexes", None, criterion_5),
        ("thickening of locally 5-large no-Δ cubical complexes", Some(120), criterion_6),
        ("Davis complex, Moussong condition and the word problem", None, criterion_7),
        ("thin bigons and flat triangles", Some(60), criterion_8),
        ("boundary inverse system", None, criterion_9),
        ("SD2*(6) links vs small induced subcomplexes", None, criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, limit, f)) in criteria.iter().enumerate() {
        let budget = Budget::unlimited();
        let start = Instant::now();
        let result = f(&budget);
        let elapsed = start.elapsed();
        let in_time = limit.map_or(true, |s| elapsed <= Duration::from_secs(s));
        let (ok, detail) = match result {
            Ok((ok, detail)) => (ok && in_time, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        let limit = limit.map_or(String::new(), |s| format!(", limit {s}s"));
        println!(
            "criterion {:>2} {}: {title} — {detail} [{:.2}s{limit}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
