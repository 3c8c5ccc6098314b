//! Seeded sampling of connected vertex sets.

use rand::seq::SliceRandom;
use rand::Rng;
use wsc_core::complex::FlagComplex;

/// A connected vertex set of at most `size` vertices grown from a random seed by adding
/// random neighbours of the current set.
pub fn random_connected_subset<R: Rng>(x: &FlagComplex, size: usize, rng: &mut R) -> Vec<usize> {
    let g = x.skeleton();
    let mut chosen = vec![rng.gen_range(0..g.len())];
    while chosen.len() < size {
        let mut frontier: Vec<usize> = chosen
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|u| !chosen.contains(u))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        match frontier.choose(rng) {
            Some(&u) => chosen.push(u),
            None => break,
        }
    }
    chosen.sort_unstable();
    chosen
}
