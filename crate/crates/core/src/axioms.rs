//! Axiom verification. Three verifiers share one report shape:
//!
//! * [`verify_t`] — the defining axioms with the finiteness condition;
//! * [`verify_tprime`] — the same with finiteness replaced by the real
//!   root-string condition (the two are equivalent, which tests exploit);
//! * [`verify_lattice`] — the integer-lattice form of the axioms for systems
//!   presented by integer coordinates and a gram matrix.
//!
//! Failed checks carry a witness: the first offending root (or pair) in the
//! canonical sorted order, chosen so that re-running the same check on the
//! same input re-reports exactly the same witness.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::Error;
use crate::exactlin::{self, GramForm, Vector};
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::weyl;
use crate::Result;

/// Identifier of one verifiable condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckId {
    /// The zero vector is a root.
    ZeroRoot,
    /// Every vector pairs nontrivially with only finitely many roots. A
    /// finite root set satisfies this outright, so the check documents the
    /// condition rather than searching for a violation.
    LocalFiniteness,
    /// Real root strings are unbroken intervals with p - q equal to the
    /// integrality pairing.
    RealStrings,
    /// The root set is closed under negation.
    Symmetry,
    /// The roots span the ambient space.
    Spanning,
    /// Pairings 2(beta,alpha)/(alpha,alpha) are integers.
    Integrality,
    /// Reflections along real roots permute the root set.
    ReflectionClosure,
    /// A null root non-orthogonal to beta admits beta - alpha or beta + alpha
    /// as a root.
    NullClosure,
    /// The ambient form is nondegenerate.
    FormNondegenerate,
    /// Integer roots generate the full integer lattice.
    LatticeSpan,
    /// The gram matrix is nonsingular, so the lattice radical is trivial.
    LatticeRadical,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::ZeroRoot => "zero-root",
            CheckId::LocalFiniteness => "local-finiteness",
            CheckId::RealStrings => "real-strings",
            CheckId::Symmetry => "symmetry",
            CheckId::Spanning => "spanning",
            CheckId::Integrality => "integrality",
            CheckId::ReflectionClosure => "reflection-closure",
            CheckId::NullClosure => "null-closure",
            CheckId::FormNondegenerate => "form-nondegenerate",
            CheckId::LatticeSpan => "lattice-span",
            CheckId::LatticeRadical => "lattice-radical",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a single check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: CheckId,
    pub pass: bool,
    /// First failing root or root pair in canonical order; empty on pass and
    /// for checks without a root-shaped witness.
    pub witness: Vec<Vector>,
}

/// Full verification report: overall verdict plus one entry per check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdict: bool,
    pub checks: Vec<CheckResult>,
}

impl AxiomReport {
    fn from_checks(checks: Vec<CheckResult>) -> Self {
        AxiomReport {
            verdict: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn check(&self, id: CheckId) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failing_ids(&self) -> Vec<CheckId> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id)
            .collect()
    }
}

/// Run one named check against a system.
pub fn run_check(s: &RootSupersystem, id: CheckId) -> CheckResult {
    let (pass, witness) = match id {
        CheckId::ZeroRoot => (s.contains(&Vector::zero(s.dim())), Vec::new()),
        CheckId::LocalFiniteness => (true, Vec::new()),
        CheckId::RealStrings => real_strings(s),
        CheckId::Symmetry => symmetry(s),
        CheckId::Spanning => (s.span_rank() == s.dim(), Vec::new()),
        CheckId::Integrality => integrality(s),
        CheckId::ReflectionClosure => reflection_closure(s),
        CheckId::NullClosure => null_closure(s),
        CheckId::FormNondegenerate => (s.form().is_nondegenerate(), Vec::new()),
        CheckId::LatticeSpan => lattice_span(s),
        CheckId::LatticeRadical => (s.form().is_nondegenerate(), Vec::new()),
    };
    CheckResult { id, pass, witness }
}

fn symmetry(s: &RootSupersystem) -> (bool, Vec<Vector>) {
    for root in s.roots() {
        if !s.contains(&-root) {
            return (false, vec![root.clone()]);
        }
    }
    (true, Vec::new())
}

fn integrality(s: &RootSupersystem) -> (bool, Vec<Vector>) {
    for alpha in &s.real_roots_nonzero() {
        for beta in s.roots() {
            let c = weyl::cartan_integer(s, beta, alpha).expect("alpha is a real root");
            if !c.is_integer() {
                return (false, vec![alpha.clone(), beta.clone()]);
            }
        }
    }
    (true, Vec::new())
}

fn reflection_closure(s: &RootSupersystem) -> (bool, Vec<Vector>) {
    for alpha in &s.real_roots_nonzero() {
        for beta in s.roots() {
            let image = weyl::reflect_unchecked(s, beta, alpha);
            if !s.contains(&image) {
                return (false, vec![alpha.clone(), beta.clone()]);
            }
        }
    }
    (true, Vec::new())
}

fn null_closure(s: &RootSupersystem) -> (bool, Vec<Vector>) {
    for alpha in &s.nonsingular_roots_nonzero() {
        for beta in s.roots() {
            if s.form().eval(alpha, beta).is_zero() {
                continue;
            }
            let down = beta - alpha;
            let up = beta + alpha;
            if !s.contains(&down) && !s.contains(&up) {
                return (false, vec![alpha.clone(), beta.clone()]);
            }
        }
    }
    (true, Vec::new())
}

fn real_strings(s: &RootSupersystem) -> (bool, Vec<Vector>) {
    // Strings live inside the real part: the zero root plus roots of nonzero
    // length. A null vector interrupting the run does not extend it.
    let member = |v: &Vector| s.contains(v) && (v.is_zero() || !s.norm(v).is_zero());
    let reals: Vec<Vector> = s
        .roots()
        .iter()
        .filter(|v| v.is_zero() || !s.norm(v).is_zero())
        .cloned()
        .collect();
    for alpha in &s.real_roots_nonzero() {
        for beta in &reals {
            let Some((p, q)) = weyl::scan_string(beta, alpha, member) else {
                return (false, vec![alpha.clone(), beta.clone()]);
            };
            let cartan = weyl::cartan_integer(s, beta, alpha).expect("alpha is a real root");
            if crate::rational::Rational::from_integer(p as i64 - q as i64) != cartan {
                return (false, vec![alpha.clone(), beta.clone()]);
            }
        }
    }
    (true, Vec::new())
}

fn lattice_span(s: &RootSupersystem) -> (bool, Vec<Vector>) {
    let mut rows = Vec::with_capacity(s.roots().len());
    for root in s.roots() {
        let mut row = Vec::with_capacity(root.dim());
        for c in root.coords() {
            match c.as_integer() {
                Some(n) => row.push(n),
                None => return (false, vec![root.clone()]),
            }
        }
        rows.push(row);
    }
    (exactlin::spans_integer_lattice(&rows, s.dim()), Vec::new())
}

/// Verify the defining axioms in their finiteness form.
pub fn verify_t(s: &RootSupersystem) -> AxiomReport {
    let ids = [
        CheckId::ZeroRoot,
        CheckId::LocalFiniteness,
        CheckId::Symmetry,
        CheckId::Spanning,
        CheckId::Integrality,
        CheckId::ReflectionClosure,
        CheckId::NullClosure,
        CheckId::FormNondegenerate,
    ];
    AxiomReport::from_checks(ids.into_iter().map(|id| run_check(s, id)).collect())
}

/// Verify the defining axioms in their root-string form.
pub fn verify_tprime(s: &RootSupersystem) -> AxiomReport {
    let ids = [
        CheckId::ZeroRoot,
        CheckId::RealStrings,
        CheckId::Symmetry,
        CheckId::Spanning,
        CheckId::Integrality,
        CheckId::ReflectionClosure,
        CheckId::NullClosure,
        CheckId::FormNondegenerate,
    ];
    AxiomReport::from_checks(ids.into_iter().map(|id| run_check(s, id)).collect())
}

/// Verify the integer-lattice axioms for a system given by a gram matrix and
/// integer root coordinates. Rejects non-integral coordinates outright: that
/// is a malformed input, not a failing axiom.
pub fn verify_lattice(form: &GramForm, roots: &[Vector]) -> Result<AxiomReport> {
    for root in roots {
        for c in root.coords() {
            if !c.is_integer() {
                return Err(Error::NonIntegralCoordinate(format!("{c} in {root}")));
            }
        }
    }
    let s = RootSupersystem::new(form.clone(), roots.to_vec())?;
    let ids = [
        CheckId::ZeroRoot,
        CheckId::LatticeSpan,
        CheckId::Symmetry,
        CheckId::Integrality,
        CheckId::ReflectionClosure,
        CheckId::RealStrings,
        CheckId::NullClosure,
        CheckId::LatticeRadical,
    ];
    Ok(AxiomReport::from_checks(
        ids.into_iter().map(|id| run_check(&s, id)).collect(),
    ))
}

/// Report of the form-invariance sweep: every deduplicated reflection
/// generator tested against every ordered pair of roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub generators: usize,
    pub root_pairs: usize,
    pub checks: usize,
    pub verdict: bool,
    /// `(generator, u, v)` for the first failing triple.
    pub witness: Option<(Vector, Vector, Vector)>,
}

/// Check that every reflection preserves the form on every pair of roots.
///
/// The quadratic sweep runs over cleared denominators: with the roots scaled
/// by `d`, their images by `d'`, and the gram matrix by `e`, the two sides of
/// each comparison carry the factors `d'^2 e` and `d^2 e`, so cross-scaling
/// restores an exact integer equality test.
pub fn check_invariance(s: &RootSupersystem) -> InvarianceReport {
    let generators = weyl::reflection_generators(s);
    let roots = s.roots();
    let root_pairs = roots.len() * roots.len();
    let gram = s.form().entries();
    let gram_scale = denominator_lcm(gram.iter().flatten());
    let gram_int: Vec<Vec<BigInt>> = gram
        .iter()
        .map(|row| row.iter().map(|c| scaled_int(c, &gram_scale)).collect())
        .collect();
    let root_scale = denominator_lcm(roots.iter().flat_map(|v| v.coords()));
    let roots_int: Vec<Vec<BigInt>> = roots
        .iter()
        .map(|v| scaled_coords(v, &root_scale))
        .collect();
    let pushed: Vec<Vec<BigInt>> = roots_int.iter().map(|v| apply_int(&gram_int, v)).collect();
    let mut checks = 0;
    let mut witness = None;
    'outer: for g in &generators {
        let images: Vec<Vector> = roots
            .iter()
            .map(|v| weyl::reflect_unchecked(s, v, g))
            .collect();
        let image_scale = denominator_lcm(images.iter().flat_map(|v| v.coords()));
        let images_int: Vec<Vec<BigInt>> = images
            .iter()
            .map(|v| scaled_coords(v, &image_scale))
            .collect();
        let pushed_images: Vec<Vec<BigInt>> =
            images_int.iter().map(|v| apply_int(&gram_int, v)).collect();
        let same_scale = image_scale == root_scale;
        let left_factor = &root_scale * &root_scale;
        let right_factor = &image_scale * &image_scale;
        for (i, u) in roots.iter().enumerate() {
            for (j, v) in roots.iter().enumerate() {
                checks += 1;
                let lhs = dot_int(&images_int[i], &pushed_images[j]);
                let rhs = dot_int(&roots_int[i], &pushed[j]);
                let equal = if same_scale {
                    lhs == rhs
                } else {
                    lhs * &left_factor == rhs * &right_factor
                };
                if !equal {
                    witness = Some((g.clone(), u.clone(), v.clone()));
                    break 'outer;
                }
            }
        }
    }
    InvarianceReport {
        generators: generators.len(),
        root_pairs,
        checks,
        verdict: witness.is_none(),
        witness,
    }
}

fn denominator_lcm<'a, I: Iterator<Item = &'a Rational>>(values: I) -> BigInt {
    let mut result = BigInt::one();
    for value in values {
        result = result.lcm(value.denom());
    }
    result
}

/// `value * scale`, exact because `scale` is a multiple of the denominator.
fn scaled_int(value: &Rational, scale: &BigInt) -> BigInt {
    value.numer() * (scale / value.denom())
}

fn scaled_coords(v: &Vector, scale: &BigInt) -> Vec<BigInt> {
    v.coords().iter().map(|c| scaled_int(c, scale)).collect()
}

fn apply_int(rows: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    rows.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn dot_int(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn rank_one() -> RootSupersystem {
        let form = GramForm::new(vec![vec![Rational::from_integer(2)]]).unwrap();
        let alpha = Vector::from_integers(&[1]);
        RootSupersystem::new(form, vec![Vector::zero(1), alpha.clone(), -&alpha]).unwrap()
    }

    #[test]
    fn rank_one_passes_both_verifiers() {
        let s = rank_one();
        assert!(verify_t(&s).verdict);
        assert!(verify_tprime(&s).verdict);
    }

    #[test]
    fn missing_negative_fails_symmetry_with_the_lost_root() {
        let form = GramForm::new(vec![vec![Rational::from_integer(2)]]).unwrap();
        let alpha = Vector::from_integers(&[1]);
        let s = RootSupersystem::new(form, vec![Vector::zero(1), alpha.clone()]).unwrap();
        let report = verify_t(&s);
        assert!(!report.verdict);
        let check = report.check(CheckId::Symmetry).unwrap();
        assert!(!check.pass);
        assert_eq!(check.witness, vec![alpha]);
    }

    #[test]
    fn broken_null_closure_is_detected_with_first_pair() {
        // Anchor a, real root c, (a, c) = -1; dropping the a+c pair breaks
        // the null axiom for (a, c)-type pairs.
        let form = GramForm::new(vec![
            vec![Rational::zero(), Rational::from_integer(-1)],
            vec![Rational::from_integer(-1), Rational::from_integer(2)],
        ])
        .unwrap();
        let a = Vector::from_integers(&[1, 0]);
        let c = Vector::from_integers(&[0, 1]);
        let s = RootSupersystem::new(form, vec![Vector::zero(2), a.clone(), -&a, c.clone(), -&c])
            .unwrap();
        let report = verify_t(&s);
        assert!(!report.verdict);
        let check = report.check(CheckId::NullClosure).unwrap();
        assert!(!check.pass);
        // First failing pair in sorted order: alpha = -a, beta = -c.
        assert_eq!(check.witness, vec![-&a, -&c]);
        // The witness re-fails when the single check is re-run.
        let again = run_check(&s, CheckId::NullClosure);
        assert_eq!(again.witness, check.witness);
    }

    #[test]
    fn string_form_detects_broken_strings() {
        // Rank-two system with the +-(1,1) pair deleted: every pairing stays
        // integral, but the string through (0,1) along (1,0) now has p - q = 0
        // against a pairing of -1.
        let gram = GramForm::new(vec![
            vec![Rational::from_integer(2), Rational::from_integer(-1)],
            vec![Rational::from_integer(-1), Rational::from_integer(2)],
        ])
        .unwrap();
        let mut roots = vec![Vector::zero(2)];
        for v in [[1, 0], [0, 1]] {
            roots.push(Vector::from_integers(&v));
            roots.push(-&Vector::from_integers(&v));
        }
        let s = RootSupersystem::new(gram, roots).unwrap();
        let report = verify_tprime(&s);
        assert!(!report.verdict);
        assert!(!report.check(CheckId::RealStrings).unwrap().pass);
        assert!(report.check(CheckId::Integrality).unwrap().pass);
        assert!(report.check(CheckId::Symmetry).unwrap().pass);
    }

    #[test]
    fn lattice_checks_on_a_rank_two_lattice_presentation() {
        let gram = GramForm::new(vec![
            vec![Rational::from_integer(2), Rational::from_integer(-1)],
            vec![Rational::from_integer(-1), Rational::from_integer(2)],
        ])
        .unwrap();
        let mut roots = vec![Vector::zero(2)];
        for v in [[1, 0], [0, 1], [1, 1]] {
            roots.push(Vector::from_integers(&v));
            roots.push(-&Vector::from_integers(&v));
        }
        let report = verify_lattice(&gram, &roots).unwrap();
        assert!(report.verdict, "failing: {:?}", report.failing_ids());

        // Dropping (1,1) alone must break symmetry and reflection closure.
        let broken: Vec<Vector> = roots
            .iter()
            .filter(|r| **r != Vector::from_integers(&[1, 1]))
            .cloned()
            .collect();
        let report = verify_lattice(&gram, &broken).unwrap();
        assert!(!report.verdict);
        let failing = report.failing_ids();
        assert!(failing.contains(&CheckId::Symmetry));
        assert!(failing.contains(&CheckId::ReflectionClosure));
        assert!(!failing.contains(&CheckId::LatticeSpan));
    }

    #[test]
    fn degenerate_gram_fails_the_radical_check() {
        let gram = GramForm::new(vec![
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::zero(), Rational::from_integer(2)],
        ])
        .unwrap();
        let roots = vec![
            Vector::zero(2),
            Vector::from_integers(&[0, 1]),
            Vector::from_integers(&[0, -1]),
        ];
        let report = verify_lattice(&gram, &roots).unwrap();
        assert!(!report.verdict);
        assert!(report.failing_ids().contains(&CheckId::LatticeRadical));
        assert!(report.failing_ids().contains(&CheckId::LatticeSpan));
    }

    #[test]
    fn lattice_rejects_fractional_coordinates() {
        let gram = GramForm::identity(1);
        let half = Vector::new(vec![Rational::ratio(1, 2)]);
        let err = verify_lattice(&gram, &[Vector::zero(1), half]).unwrap_err();
        assert!(matches!(err, Error::NonIntegralCoordinate(_)));
    }

    #[test]
    fn invariance_counts_generators_times_root_pairs() {
        let s = rank_one();
        let report = check_invariance(&s);
        assert!(report.verdict);
        assert_eq!(report.generators, 1);
        assert_eq!(report.root_pairs, 9);
        assert_eq!(report.checks, 9);
    }
}
