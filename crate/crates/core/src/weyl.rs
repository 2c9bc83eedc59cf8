//! Reflection machinery: integrality pairings, reflections along real roots,
//! Weyl-orbit closure, and root strings.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::Error;
use crate::exactlin::Vector;
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::Result;

/// Safety valve for orbit enumeration: far above anything a desk-scale system
/// produces, so hitting it means the input is not a finite supersystem.
const ORBIT_CAP: usize = 1 << 20;

/// The pairing `2(v, alpha) / (alpha, alpha)`. Defined only along nonzero
/// real roots of the system; `v` may be any vector.
pub fn cartan_integer(s: &RootSupersystem, v: &Vector, alpha: &Vector) -> Result<Rational> {
    let Some(position) = s.root_position(alpha) else {
        return Err(Error::NotInSystem(alpha.to_string()));
    };
    let len = s.root_norm(position);
    if len.is_zero() {
        return Err(Error::NotRealRoot(alpha.to_string()));
    }
    let two = Rational::from_integer(2);
    Ok(&(&two * &s.pairing_with_root(v, position)) / len)
}

/// Reflection of `v` in the hyperplane orthogonal to `alpha`:
/// `v - (2(v,alpha)/(alpha,alpha)) alpha`. Null roots do not define
/// reflections; asking for one is a hard error, never a silent identity.
pub fn reflect(s: &RootSupersystem, v: &Vector, alpha: &Vector) -> Result<Vector> {
    if !s.contains(alpha) {
        return Err(Error::NotInSystem(alpha.to_string()));
    }
    if s.norm(alpha).is_zero() {
        return Err(Error::NullReflection(alpha.to_string()));
    }
    Ok(reflect_unchecked(s, v, alpha))
}

/// Reflection without membership checks, for interior loops that iterate
/// over roots already known to be real.
pub(crate) fn reflect_unchecked(s: &RootSupersystem, v: &Vector, alpha: &Vector) -> Vector {
    let two = Rational::from_integer(2);
    let (pairing, len) = match s.root_position(alpha) {
        Some(position) => (
            s.pairing_with_root(v, position),
            s.root_norm(position).clone(),
        ),
        None => (s.form().eval(v, alpha), s.norm(alpha)),
    };
    debug_assert!(!len.is_zero());
    let coeff = &(&two * &pairing) / &len;
    v.add_scaled(alpha, &-&coeff)
}

/// One reflection generator per +-pair of nonzero real roots: the member of
/// each pair whose first nonzero coordinate is positive, in sorted order.
pub fn reflection_generators(s: &RootSupersystem) -> Vec<Vector> {
    s.real_roots_nonzero()
        .into_iter()
        .filter(|alpha| {
            alpha
                .coords()
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| !c.is_negative())
        })
        .collect()
}

/// Weyl orbit of `v`: closure under all reflections along nonzero real roots.
/// Returned sorted lexicographically, so equal orbits compare equal as
/// vectors of vectors.
pub fn orbit(s: &RootSupersystem, v: &Vector) -> Result<Vec<Vector>> {
    let generators = reflection_generators(s);
    let mut seen: HashSet<Vector> = HashSet::new();
    let mut queue: VecDeque<Vector> = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(current) = queue.pop_front() {
        for alpha in &generators {
            let image = reflect_unchecked(s, &current, alpha);
            if seen.insert(image.clone()) {
                if seen.len() > ORBIT_CAP {
                    return Err(Error::OrbitBound(ORBIT_CAP));
                }
                queue.push_back(image);
            }
        }
    }
    let mut members: Vec<Vector> = seen.into_iter().collect();
    members.sort();
    Ok(members)
}

/// The orbit of `v` together with the orbit of `-v`, as one sorted set.
pub fn symmetrized_orbit(s: &RootSupersystem, v: &Vector) -> Result<Vec<Vector>> {
    let mut set: BTreeSet<Vector> = orbit(s, v)?.into_iter().collect();
    let negatives: Vec<Vector> = set.iter().map(|w| -w).collect();
    set.extend(negatives);
    Ok(set.into_iter().collect())
}

/// A root string: the maximal unbroken run `beta + i*alpha` (`-p <= i <= q`)
/// inside the root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootString {
    pub p: usize,
    pub q: usize,
    /// `beta - p*alpha` through `beta + q*alpha`, in string order.
    pub members: Vec<Vector>,
}

/// Scan window for strings. Healthy systems stay far inside it; a scan that
/// reaches the edge aborts with a diagnostic instead of looping forever on
/// pathological input.
const STRING_SCAN_BOUND: i64 = 16;

/// The `alpha`-string through `beta`. Requires `alpha` to be a nonzero real
/// root and `beta` to be a root; reports the run the set actually contains,
/// with both ends certified absent.
pub fn root_string(s: &RootSupersystem, beta: &Vector, alpha: &Vector) -> Result<RootString> {
    if !s.contains(alpha) {
        return Err(Error::NotInSystem(alpha.to_string()));
    }
    if s.norm(alpha).is_zero() {
        return Err(Error::NotRealRoot(alpha.to_string()));
    }
    if !s.contains(beta) {
        return Err(Error::NotInSystem(beta.to_string()));
    }
    let (p, q) = scan_string(beta, alpha, |v| s.contains(v)).ok_or_else(|| Error::ScanBound {
        beta: beta.to_string(),
        alpha: alpha.to_string(),
    })?;
    let mut members = Vec::with_capacity(p + q + 1);
    for i in -(p as i64)..=(q as i64) {
        members.push(beta.add_scaled(alpha, &Rational::from_integer(i)));
    }
    Ok(RootString { p, q, members })
}

/// Maximal consecutive run of `member(beta + i*alpha)` around `i = 0`;
/// `None` when the run is still alive at the scan bound.
pub(crate) fn scan_string<F: Fn(&Vector) -> bool>(
    beta: &Vector,
    alpha: &Vector,
    member: F,
) -> Option<(usize, usize)> {
    let step = |i: i64| beta.add_scaled(alpha, &Rational::from_integer(i));
    let mut q = 0usize;
    while member(&step(q as i64 + 1)) {
        q += 1;
        if q as i64 >= STRING_SCAN_BOUND {
            return None;
        }
    }
    let mut p = 0usize;
    while member(&step(-(p as i64) - 1)) {
        p += 1;
        if p as i64 >= STRING_SCAN_BOUND {
            return None;
        }
    }
    Some((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::GramForm;

    // {0, +-alpha} on a line.
    fn rank_one() -> RootSupersystem {
        let form = GramForm::new(vec![vec![Rational::from_integer(2)]]).unwrap();
        let alpha = Vector::from_integers(&[1]);
        RootSupersystem::new(form, vec![Vector::zero(1), alpha.clone(), -&alpha]).unwrap()
    }

    #[test]
    fn cartan_of_a_root_with_itself_is_two() {
        let s = rank_one();
        let alpha = Vector::from_integers(&[1]);
        assert_eq!(
            cartan_integer(&s, &alpha, &alpha).unwrap(),
            Rational::from_integer(2)
        );
    }

    #[test]
    fn reflect_negates_along_the_root() {
        let s = rank_one();
        let alpha = Vector::from_integers(&[1]);
        assert_eq!(reflect(&s, &alpha, &alpha).unwrap(), -&alpha);
    }

    #[test]
    fn reflect_refuses_null_roots_and_non_roots() {
        let form = GramForm::new(vec![
            vec![Rational::zero(), Rational::from_integer(-1)],
            vec![Rational::from_integer(-1), Rational::from_integer(2)],
        ])
        .unwrap();
        let a = Vector::from_integers(&[1, 0]);
        let c = Vector::from_integers(&[0, 1]);
        let s = RootSupersystem::new(form, vec![Vector::zero(2), a.clone(), -&a, c.clone(), -&c])
            .unwrap();
        assert!(matches!(reflect(&s, &c, &a), Err(Error::NullReflection(_))));
        let outsider = Vector::from_integers(&[5, 5]);
        assert!(matches!(
            reflect(&s, &c, &outsider),
            Err(Error::NotInSystem(_))
        ));
    }

    #[test]
    fn orbit_of_zero_is_zero() {
        let s = rank_one();
        assert_eq!(orbit(&s, &Vector::zero(1)).unwrap(), vec![Vector::zero(1)]);
    }

    #[test]
    fn string_through_a_root_along_itself() {
        let s = rank_one();
        let alpha = Vector::from_integers(&[1]);
        let st = root_string(&s, &alpha, &alpha).unwrap();
        assert_eq!((st.p, st.q), (2, 0));
        assert_eq!(
            st.members,
            vec![-&alpha, Vector::zero(1), alpha.clone()],
            "string runs from -alpha through 0 to alpha"
        );
        // p - q matches the pairing 2(alpha,alpha)/(alpha,alpha).
        assert_eq!(
            Rational::from_integer((st.p as i64) - (st.q as i64)),
            cartan_integer(&s, &alpha, &alpha).unwrap()
        );
    }

    #[test]
    fn scan_aborts_on_pathologically_long_runs() {
        let form = GramForm::identity(1);
        let mut roots = Vec::new();
        for i in -20i64..=20 {
            roots.push(Vector::new(vec![Rational::from_integer(i)]));
        }
        let s = RootSupersystem::new(form, roots).unwrap();
        let alpha = Vector::from_integers(&[1]);
        let err = root_string(&s, &Vector::zero(1), &alpha).unwrap_err();
        assert!(matches!(err, Error::ScanBound { .. }));
    }

    #[test]
    fn generators_drop_one_of_each_sign_pair() {
        let s = rank_one();
        assert_eq!(reflection_generators(&s), vec![Vector::from_integers(&[1])]);
    }
}
