//! Sphere sizes in the triangular lattice, by BFS on axial coordinates.

use std::collections::{HashMap, VecDeque};

const STEPS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// `|S_i|` for `i = 0..=r` around the origin.
pub fn hex_sphere_sizes(r: usize) -> Vec<usize> {
    let mut dist = HashMap::from([((0i64, 0i64), 0usize)]);
    let mut queue = VecDeque::from([(0i64, 0i64)]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        if d == r {
            continue;
        }
        for (dq, dr) in STEPS {
            let q = (p.0 + dq, p.1 + dr);
            if !dist.contains_key(&q) {
                dist.insert(q, d + 1);
                queue.push_back(q);
            }
        }
    }
    let mut sizes = vec![0; r + 1];
    for d in dist.values() {
        sizes[*d] += 1;
    }
    sizes
}
