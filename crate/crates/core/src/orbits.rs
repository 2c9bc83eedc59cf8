//! Weight checks and the search for small reflection orbits.
//!
//! A finite set is *small* when any two of its elements either agree up to
//! sign or differ by a root. Small reflection-stable sets are scarce: for
//! most ordinary systems only the orbit of the first fundamental weight
//! qualifies, and the search below enumerates every candidate obtained from
//! integer multiples of fundamental weights.

use crate::catalog;
use crate::classify;
use crate::error::Error;
use crate::exactlin::Vector;
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::weyl;
use crate::Result;

/// Whether `v` pairs integrally with every nonzero real root.
pub fn is_weight(system: &RootSupersystem, v: &Vector) -> Result<bool> {
    for alpha in system.real_roots_nonzero() {
        let pairing = weyl::cartan_integer(system, v, &alpha)?;
        if !pairing.is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every two elements of `set` agree up to sign or differ by a root.
///
/// The set must be reflection-stable; a reflection that leaves it is a
/// precondition failure, not a negative answer. On a negative answer the
/// first offending pair (in the set's sorted order) is returned.
pub fn is_small_orbit(
    system: &RootSupersystem,
    set: &[Vector],
) -> Result<(bool, Option<(Vector, Vector)>)> {
    let members: std::collections::BTreeSet<&Vector> = set.iter().collect();
    for alpha in weyl::reflection_generators(system) {
        for x in set {
            let image = weyl::reflect_unchecked(system, x, &alpha);
            if !members.contains(&image) {
                return Err(Error::NotOrbitClosed {
                    element: x.to_string(),
                    missing: image.to_string(),
                });
            }
        }
    }
    let sorted: Vec<&Vector> = members.into_iter().collect();
    for (i, x) in sorted.iter().enumerate() {
        for y in sorted.iter().skip(i + 1) {
            if *x == *y || **x == -*y {
                continue;
            }
            let difference = *x - *y;
            if !system.contains(&difference) {
                return Ok((false, Some(((*x).clone(), (*y).clone()))));
            }
        }
    }
    Ok((true, None))
}

/// One seed examined by [`small_orbit_search`].
#[derive(Clone, Debug)]
pub struct OrbitCandidate {
    pub seed: Vector,
    /// Full reflection orbit of the seed, sorted.
    pub orbit: Vec<Vector>,
    pub small: bool,
    /// First pair violating smallness, when `small` is false.
    pub witness: Option<(Vector, Vector)>,
}

/// Result of scanning all weight multiples up to a bound.
#[derive(Clone, Debug)]
pub struct SmallOrbitReport {
    pub bound: i64,
    /// One entry per distinct orbit, in seed order.
    pub candidates: Vec<OrbitCandidate>,
}

impl SmallOrbitReport {
    /// The distinct small orbits found, in discovery order.
    pub fn small_orbits(&self) -> Vec<&OrbitCandidate> {
        self.candidates.iter().filter(|c| c.small).collect()
    }
}

/// Enumerate reflection orbits of `k * omega_i` for every fundamental
/// weight and `1 <= k <= bound`, both signs, keeping one candidate per
/// distinct orbit and testing each for smallness.
///
/// Requires an irreducible system without nonsingular roots: fundamental
/// weights are only defined against a simple subsystem, and orbits of
/// weights degenerate across components.
pub fn small_orbit_search(system: &RootSupersystem, bound: i64) -> Result<SmallOrbitReport> {
    let components = classify::connected_components(system);
    if components.len() != 1 {
        return Err(Error::NotOrdinaryIrreducible(format!(
            "{} components",
            components.len()
        )));
    }
    let base = catalog::root_base(system)?;
    let weights = catalog::fundamental_weights(system, &base)?;
    let mut seen_orbits: std::collections::BTreeSet<Vec<Vector>> =
        std::collections::BTreeSet::new();
    let mut candidates = Vec::new();
    for omega in &weights {
        for k in 1..=bound {
            for sign in [1i64, -1] {
                let scale = Rational::from_integer(sign * k);
                let seed = omega.scale(&scale);
                if !is_weight(system, &seed)? {
                    continue;
                }
                let orbit = weyl::orbit(system, &seed)?;
                if !seen_orbits.insert(orbit.clone()) {
                    continue;
                }
                let (small, witness) = is_small_orbit(system, &orbit)?;
                candidates.push(OrbitCandidate {
                    seed,
                    orbit,
                    small,
                    witness,
                });
            }
        }
    }
    Ok(SmallOrbitReport { bound, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{construct, TypeLabel};

    fn small_sets(label: TypeLabel, bound: i64) -> Vec<Vec<Vector>> {
        let s = construct(&label).unwrap();
        let report = small_orbit_search(&s, bound).unwrap();
        report
            .small_orbits()
            .iter()
            .map(|c| c.orbit.clone())
            .collect()
    }

    #[test]
    fn rank_one_multiples_are_all_small() {
        let sets = small_sets(TypeLabel::A(1), 4);
        assert_eq!(sets.len(), 4);
        for set in &sets {
            assert_eq!(set.len(), 2);
        }
    }

    #[test]
    fn short_roots_of_the_triple_edge_system_are_the_only_small_orbit() {
        let s = construct(&TypeLabel::G2).unwrap();
        let report = small_orbit_search(&s, 4).unwrap();
        let small: Vec<_> = report.small_orbits();
        assert_eq!(small.len(), 1);
        let shorts: Vec<Vector> = {
            let min_norm = s
                .real_roots_nonzero()
                .iter()
                .map(|r| s.norm(r))
                .min()
                .unwrap();
            s.real_roots_nonzero()
                .into_iter()
                .filter(|r| s.norm(r) == min_norm)
                .collect()
        };
        assert_eq!(small[0].orbit, shorts);
    }

    #[test]
    fn rank_four_orthonormal_system_has_no_spin_small_orbit() {
        let sets = small_sets(TypeLabel::B(4), 4);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].len(), 8); // the +-e_i orbit
    }

    #[test]
    fn half_integer_system_has_no_small_orbit_at_all() {
        assert!(small_sets(TypeLabel::F4, 4).is_empty());
    }

    #[test]
    fn doubled_rank_one_system_skips_non_weight_multiples() {
        let sets = small_sets(TypeLabel::BC(1), 4);
        assert_eq!(sets.len(), 2);
        assert_eq!(
            sets[0],
            vec![Vector::from_integers(&[-1]), Vector::from_integers(&[1])]
        );
        assert_eq!(
            sets[1],
            vec![Vector::from_integers(&[-2]), Vector::from_integers(&[2])]
        );
    }

    #[test]
    fn smallness_requires_reflection_stability() {
        let s = construct(&TypeLabel::B(2)).unwrap();
        let half_orbit = vec![Vector::from_integers(&[1, 0])];
        assert!(matches!(
            is_small_orbit(&s, &half_orbit),
            Err(Error::NotOrbitClosed { .. })
        ));
    }

    #[test]
    fn weight_check_detects_fractional_pairing() {
        let s = construct(&TypeLabel::BC(1)).unwrap();
        let half = Vector::new(vec![Rational::ratio(1, 2)]);
        assert!(!is_weight(&s, &half).unwrap());
        assert!(is_weight(&s, &Vector::from_integers(&[1])).unwrap());
    }
}
