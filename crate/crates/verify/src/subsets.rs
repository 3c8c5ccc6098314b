//! Brute force over induced subcomplexes.

use wsc_core::budget::Budget;
use wsc_core::complex::FlagComplex;
use wsc_core::conditions::check_sd2_star;
use wsc_core::error::Result;

/// First vertex set of at most `max_size` vertices whose induced subcomplex fails `SD₂*`.
pub fn small_subset_failing_sd2_star(x: &FlagComplex, max_size: usize, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let mut current = Vec::new();
    search(x, max_size, 0, &mut current, budget)
}

fn search(
    x: &FlagComplex,
    max_size: usize,
    next: usize,
    current: &mut Vec<usize>,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    // at most two vertices pass vacuously
    if current.len() >= 3 {
        let set = x.skeleton().set_of(current.iter().copied());
        let (sub, _) = x.induced(&set);
        if !check_sd2_star(&sub, budget)?.holds {
            return Ok(Some(current.clone()));
        }
    }
    if current.len() == max_size {
        return Ok(None);
    }
    for v in next..x.len() {
        current.push(v);
        if let Some(found) = search(x, max_size, v + 1, current, budget)? {
            return Ok(Some(found));
        }
        current.pop();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use wsc_core::graph::Graph;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sd2_star_agrees_with_brute_force(n in 3usize..8, bits in proptest::collection::vec(any::<bool>(), 21)) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let g = Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap();
            let x = FlagComplex::new(g);
            let b = Budget::unlimited();
            let whole = check_sd2_star(&x, &b).unwrap().holds;
            let small = small_subset_failing_sd2_star(&x, n, &b).unwrap();
            // a full subcomplex failing forces the whole complex to fail
            prop_assert_eq!(whole, small.is_none());
        }
    }
}
