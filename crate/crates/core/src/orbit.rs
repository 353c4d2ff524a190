use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;

/// Partition of the domain into orbits, sorted by least point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    degree: usize,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut orbit_of = vec![usize::MAX; degree];
        let mut orbits = Vec::new();
        for start in 0..degree {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = id;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in gens {
                    let y = g.image(x);
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        OrbitPartition { degree, orbit_of, orbits }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, point: usize) -> usize {
        self.orbit_of[point]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Orbit lengths, sorted ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }
}

/// Orbit of one point in discovery order.
pub fn orbit_of_point(gens: &[Permutation], point: usize, degree: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut k = 0;
    while k < orbit.len() {
        let x = orbit[k];
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        k += 1;
    }
    orbit
}
