//! Simple subsystems and fundamental weights for ordinary systems.
//!
//! A base only exists when every nonzero root is nonsingular-free; callers
//! working with a larger system first split off an ordinary component.

use crate::error::Error;
use crate::exactlin::Vector;
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::weyl;
use crate::Result;

/// The lexicographically positive simple roots, sorted descending.
///
/// Positivity is taken with respect to coordinate lex order: a root is
/// positive when its first nonzero coordinate is. A root is simple when it
/// is not the sum of two positive roots. The result is validated: its
/// length must equal the span rank and all off-diagonal pairing integers
/// must be nonpositive.
pub fn root_base(system: &RootSupersystem) -> Result<Vec<Vector>> {
    if let Some(v) = system.nonsingular_roots_nonzero().first() {
        return Err(Error::NotOrdinaryIrreducible(v.to_string()));
    }
    let positives: Vec<Vector> = system
        .roots()
        .iter()
        .filter(|r| lex_positive(r))
        .cloned()
        .collect();
    let positive_set: std::collections::BTreeSet<&Vector> = positives.iter().collect();
    let mut base: Vec<Vector> = positives
        .iter()
        .filter(|alpha| {
            // Indecomposable: no split into two positive roots.
            !positives.iter().any(|beta| {
                if beta == *alpha {
                    return false;
                }
                let rest = *alpha - beta;
                positive_set.contains(&rest)
            })
        })
        .cloned()
        .collect();
    base.sort();
    base.reverse();
    if base.len() != system.span_rank() {
        return Err(Error::NotOrdinaryIrreducible(format!(
            "base size {} for span rank {}",
            base.len(),
            system.span_rank()
        )));
    }
    for (i, alpha) in base.iter().enumerate() {
        for beta in base.iter().skip(i + 1) {
            let pairing = weyl::cartan_integer(system, beta, alpha)?;
            if pairing > Rational::zero() {
                return Err(Error::NotOrdinaryIrreducible(format!(
                    "positive pairing between {alpha} and {beta}"
                )));
            }
        }
    }
    Ok(base)
}

fn lex_positive(v: &Vector) -> bool {
    v.coords()
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| !c.is_negative())
}

/// Fundamental weights dual to `base`: `omega_j` pairs to `delta_ij`
/// against the base roots. Requires the base to span the ambient space.
pub fn fundamental_weights(system: &RootSupersystem, base: &[Vector]) -> Result<Vec<Vector>> {
    let dim = system.dim();
    if base.len() != dim {
        return Err(Error::SpanFailure {
            span_rank: base.len(),
            ambient: dim,
        });
    }
    // Row i of the constraint matrix sends v to the pairing integer of v
    // against base root i; the weights are the columns of its inverse.
    let mut rows = Vec::with_capacity(dim);
    for alpha in base {
        let norm = system.norm(alpha);
        let two_over = &Rational::from_integer(2) / &norm;
        let row: Vec<Rational> = (0..dim)
            .map(|j| {
                let ej = Vector::unit(dim, j);
                &system.form().eval(alpha, &ej) * &two_over
            })
            .collect();
        rows.push(row);
    }
    let inverse = crate::exactlin::invert(&rows).ok_or(Error::DependentBasis)?;
    let weights = (0..dim)
        .map(|j| Vector::new((0..dim).map(|i| inverse[i][j].clone()).collect()))
        .collect();
    Ok(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{construct, TypeLabel};

    fn base_of(label: TypeLabel) -> (RootSupersystem, Vec<Vector>) {
        let s = construct(&label).unwrap();
        let base = root_base(&s).unwrap();
        (s, base)
    }

    #[test]
    fn rank_two_orthonormal_base() {
        let (_, base) = base_of(TypeLabel::B(2));
        assert_eq!(
            base,
            vec![
                Vector::from_integers(&[1, -1]),
                Vector::from_integers(&[0, 1])
            ]
        );
    }

    #[test]
    fn rank_three_doubled_base() {
        let (_, base) = base_of(TypeLabel::C(3));
        assert_eq!(
            base,
            vec![
                Vector::from_integers(&[1, -1, 0]),
                Vector::from_integers(&[0, 1, -1]),
                Vector::from_integers(&[0, 0, 2]),
            ]
        );
    }

    #[test]
    fn triple_edge_base_is_one_long_one_short() {
        let (s, base) = base_of(TypeLabel::G2);
        assert_eq!(base.len(), 2);
        let norms: Vec<Rational> = base.iter().map(|b| s.norm(b)).collect();
        assert_eq!(&norms[0] / &norms[1], Rational::from_integer(3));
    }

    #[test]
    fn weights_pair_as_kronecker_delta() {
        for label in [
            TypeLabel::A(2),
            TypeLabel::B(2),
            TypeLabel::BC(1),
            TypeLabel::C(3),
        ] {
            let (s, base) = base_of(label);
            let weights = fundamental_weights(&s, &base).unwrap();
            for (j, w) in weights.iter().enumerate() {
                for (i, alpha) in base.iter().enumerate() {
                    let pairing = weyl::cartan_integer(&s, w, alpha).unwrap();
                    let expected = Rational::from_integer(i64::from(i == j));
                    assert_eq!(pairing, expected);
                }
            }
        }
    }

    #[test]
    fn familiar_weight_coordinates() {
        let (s, base) = base_of(TypeLabel::A(2));
        let weights = fundamental_weights(&s, &base).unwrap();
        assert_eq!(
            weights[0],
            Vector::new(vec![Rational::ratio(2, 3), Rational::ratio(-1, 3)])
        );
        assert_eq!(
            weights[1],
            Vector::new(vec![Rational::ratio(1, 3), Rational::ratio(1, 3)])
        );

        let (s, base) = base_of(TypeLabel::B(2));
        let weights = fundamental_weights(&s, &base).unwrap();
        assert_eq!(weights[0], Vector::from_integers(&[1, 0]));
        assert_eq!(
            weights[1],
            Vector::new(vec![Rational::ratio(1, 2), Rational::ratio(1, 2)])
        );
    }

    #[test]
    fn nonsingular_roots_block_a_base() {
        let s = construct(&TypeLabel::ImaginaryA(2)).unwrap();
        assert!(matches!(
            root_base(&s),
            Err(Error::NotOrdinaryIrreducible(_))
        ));
    }
}
