//! Recognition of systems against the catalog: component decomposition,
//! per-component type identification, isomorphism witnesses and search, and
//! truncation towers.
//!
//! Recognition is structural, not nominal: it looks only at ranks, root
//! counts, length ratios and the geometry of the nonsingular part, so a
//! system presented in scrambled coordinates still classifies. Small-rank
//! identifications are resolved toward the canonical family (a rank-three
//! pair system reads as the rank-three simply-laced one, and so on).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::catalog::{construct, TypeLabel};
use crate::error::Error;
use crate::exactlin::{self, GramForm, Vector};
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::weyl;
use crate::Result;

fn unrec(profile: impl Into<String>) -> Error {
    Error::Unrecognized {
        profile: profile.into(),
    }
}

// ---------------------------------------------------------------------------
// Component decomposition.

/// Connected components of the nonzero roots under the relation
/// "(alpha,beta) != 0", ordered by their smallest member; each component is
/// sorted. An irreducible system yields exactly one component.
pub fn connected_components(s: &RootSupersystem) -> Vec<Vec<Vector>> {
    let roots: Vec<Vector> = s.roots().iter().filter(|r| !r.is_zero()).cloned().collect();
    group_by_form(s, roots)
}

/// Connected components of the nonzero *real* roots alone. For systems with
/// nonsingular roots this splits the ordinary skeleton that the nonsingular
/// part ties together.
pub fn real_components(s: &RootSupersystem) -> Vec<Vec<Vector>> {
    group_by_form(s, s.real_roots_nonzero())
}

fn group_by_form(s: &RootSupersystem, roots: Vec<Vector>) -> Vec<Vec<Vector>> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if !s.form().eval(&roots[i], &roots[j]).is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    // Roots are sorted, so grouping by first occurrence orders components by
    // their minimal member.
    let mut order: Vec<usize> = Vec::new();
    let mut buckets: BTreeMap<usize, Vec<Vector>> = BTreeMap::new();
    for (i, root) in roots.into_iter().enumerate() {
        let repr = find(&mut parent, i);
        if !buckets.contains_key(&repr) {
            order.push(repr);
        }
        buckets.entry(repr).or_default().push(root);
    }
    order
        .into_iter()
        .map(|r| buckets.remove(&r).unwrap())
        .collect()
}

/// Whether the nonzero roots form a single connected component.
pub fn is_irreducible(s: &RootSupersystem) -> bool {
    connected_components(s).len() == 1
}

/// The `index`-th connected component as a standalone system on the span of
/// its roots, with the restricted form.
pub fn component_system(s: &RootSupersystem, index: usize) -> Result<RootSupersystem> {
    let components = connected_components(s);
    let component = components
        .get(index)
        .ok_or_else(|| Error::NotInSystem(format!("component index {index}")))?;
    let basis = exactlin::basis_of_span(component);
    let dim = basis.len();
    let gram: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| s.form().eval(&basis[i], &basis[j]))
                .collect()
        })
        .collect();
    let mut roots = vec![Vector::zero(dim)];
    for root in component {
        let coords = exactlin::solve_coordinates(&basis, root)
            .expect("component roots lie in their own span");
        roots.push(Vector::new(coords));
    }
    RootSupersystem::new(GramForm::new(gram)?, roots)
}

// ---------------------------------------------------------------------------
// Ordinary recognition.

/// Identify an ordinary component (no nonsingular roots) by its structural
/// profile: rank, root count, and length-class counts and ratios. Small-rank
/// identifications resolve to the canonical family.
pub fn recognize_ordinary(s: &RootSupersystem, component: &[Vector]) -> Result<TypeLabel> {
    if component.is_empty() {
        return Err(unrec("empty component"));
    }
    let mut groups: BTreeMap<Rational, usize> = BTreeMap::new();
    for root in component {
        let norm = s.norm(root);
        if norm.is_zero() {
            return Err(unrec(format!(
                "nonsingular root {root} in ordinary component"
            )));
        }
        *groups.entry(norm).or_default() += 1;
    }
    let r = exactlin::rank(component);
    let n = component.len();
    let profile = || {
        let norms: Vec<String> = groups.iter().map(|(v, c)| format!("{v} x{c}")).collect();
        format!("rank {r}, {n} nonzero roots, norms [{}]", norms.join(", "))
    };
    let mut entries: Vec<(Rational, usize)> = groups.clone().into_iter().collect();
    if entries[0].0.is_negative() != entries[entries.len() - 1].0.is_negative() {
        return Err(unrec(profile()));
    }
    entries.sort_by_key(|entry| entry.0.abs());
    let label = match entries.as_slice() {
        [(_, count)] => {
            if *count == r * (r + 1) {
                TypeLabel::A(r)
            } else if r >= 4 && *count == 2 * r * (r - 1) {
                TypeLabel::D(r)
            } else {
                return Err(unrec(profile()));
            }
        }
        [(small, c_small), (big, c_big)] => {
            let ratio = &big.abs() / &small.abs();
            if ratio == Rational::from_integer(2) {
                if r == 4 && *c_small == 24 && *c_big == 24 {
                    TypeLabel::F4
                } else if r >= 2 && *c_small == 2 * r && *c_big == 2 * r * (r - 1) {
                    TypeLabel::B(r)
                } else if r >= 3 && *c_big == 2 * r && *c_small == 2 * r * (r - 1) {
                    TypeLabel::C(r)
                } else {
                    return Err(unrec(profile()));
                }
            } else if ratio == Rational::from_integer(3) && r == 2 && *c_small == 6 && *c_big == 6 {
                TypeLabel::G2
            } else if ratio == Rational::from_integer(4) && r == 1 && *c_small == 2 && *c_big == 2 {
                TypeLabel::BC(1)
            } else {
                return Err(unrec(profile()));
            }
        }
        [(short, c_short), (mid, c_mid), (long, c_long)] => {
            let two = Rational::from_integer(2);
            let four = Rational::from_integer(4);
            if r >= 2
                && &mid.abs() / &short.abs() == two
                && &long.abs() / &short.abs() == four
                && *c_short == 2 * r
                && *c_long == 2 * r
                && *c_mid == 2 * r * (r - 1)
            {
                TypeLabel::BC(r)
            } else {
                return Err(unrec(profile()));
            }
        }
        _ => return Err(unrec(profile())),
    };
    Ok(label)
}

// ---------------------------------------------------------------------------
// Irreducible recognition.

/// Identify one irreducible system against the catalog.
///
/// Dispatches on the nonsingular part: absent, spanning a complement line
/// (the families with a one-dimensional excess over the real span), or lying
/// inside the real span (the paired families).
pub fn recognize_irreducible(s: &RootSupersystem) -> Result<TypeLabel> {
    let ns = s.nonsingular_roots_nonzero();
    if ns.is_empty() {
        let nonzero: Vec<Vector> = s.roots().iter().filter(|r| !r.is_zero()).cloned().collect();
        return recognize_ordinary(s, &nonzero);
    }
    let real_rank = s.real_span_rank();
    if s.dim() == real_rank + 1 {
        anchored_flow(s, ns)
    } else if s.dim() == real_rank {
        paired_flow(s, ns)
    } else {
        Err(unrec(format!(
            "nonsingular roots span {} dimensions beyond the real span",
            s.dim() - real_rank
        )))
    }
}

/// Shared validation: the nonsingular part must be exactly the symmetrized
/// reflection orbit of the canonical anchor.
fn check_star_orbit(s: &RootSupersystem, ns: &[Vector]) -> Result<Vector> {
    let star = s.canonical_star().expect("nonsingular roots present");
    let orbit = weyl::symmetrized_orbit(s, &star)?;
    if ns != orbit.as_slice() {
        return Err(unrec(
            "nonsingular part is not one symmetric reflection orbit".to_string(),
        ));
    }
    Ok(star)
}

/// Families whose nonsingular roots stick out of the real span by one
/// dimension.
fn anchored_flow(s: &RootSupersystem, ns: Vec<Vector>) -> Result<TypeLabel> {
    let star = check_star_orbit(s, &ns)?;
    for v in &ns {
        let coefficient = s.star_coefficient(&star, v)?;
        if coefficient.abs() != Rational::one() {
            return Err(unrec(format!(
                "nonsingular root {v} has anchor coefficient {coefficient}"
            )));
        }
    }
    let components = real_components(s);
    let kinds: Vec<TypeLabel> = components
        .iter()
        .map(|c| recognize_ordinary(s, c))
        .collect::<Result<_>>()?;
    let label = match kinds.as_slice() {
        [TypeLabel::A(k)] => {
            if !a_shape(s, &components[0], &star, *k) {
                return Err(unrec("positive-pairing set is not a common-vertex family"));
            }
            TypeLabel::ImaginaryA(k + 1)
        }
        [TypeLabel::B(2)] => {
            if !c_shape(s, &components[0], &star, 2) {
                return Err(unrec("positive-pairing set is not an apex family"));
            }
            TypeLabel::ImaginaryC(2)
        }
        [TypeLabel::C(k)] => {
            if !c_shape(s, &components[0], &star, *k) {
                return Err(unrec("positive-pairing set is not an apex family"));
            }
            TypeLabel::ImaginaryC(*k)
        }
        [TypeLabel::A(a), TypeLabel::A(b)] => {
            let (small, large) = (*a.min(b), *a.max(b));
            if small == large {
                return Err(unrec(format!(
                    "two rank-{small} simply-laced components with an anchor line"
                )));
            }
            for (component, k) in components.iter().zip([*a, *b]) {
                if !a_shape(s, component, &star, k) {
                    return Err(unrec("positive-pairing set is not a common-vertex family"));
                }
            }
            TypeLabel::ImaginaryAPair(small + 1, large + 1)
        }
        _ => {
            let names: Vec<String> = kinds.iter().map(|k| k.to_string()).collect();
            return Err(unrec(format!(
                "anchor line over components [{}]",
                names.join(", ")
            )));
        }
    };
    label.validate()?;
    Ok(label)
}

/// The elements of `component` pairing positively with `star` must be `r`
/// pairwise non-orthogonal roots whose differences are roots.
fn a_shape(s: &RootSupersystem, component: &[Vector], star: &Vector, r: usize) -> bool {
    let positive: Vec<&Vector> = component
        .iter()
        .filter(|alpha| s.form().eval(alpha, star) > Rational::zero())
        .collect();
    if positive.len() != r {
        return false;
    }
    for (i, x) in positive.iter().enumerate() {
        for y in positive.iter().skip(i + 1) {
            if s.form().eval(x, y).is_zero() || !s.contains(&(*x - *y)) {
                return false;
            }
        }
    }
    true
}

/// The elements of `component` pairing positively with `star` must number
/// `2r - 1`: a single apex at a doubled pairing value, and the rest in pairs
/// summing to the apex.
fn c_shape(s: &RootSupersystem, component: &[Vector], star: &Vector, r: usize) -> bool {
    let positive: Vec<&Vector> = component
        .iter()
        .filter(|alpha| s.form().eval(alpha, star) > Rational::zero())
        .collect();
    if positive.len() != 2 * r - 1 {
        return false;
    }
    let values: Vec<Rational> = positive.iter().map(|a| s.form().eval(a, star)).collect();
    let max = values.iter().max().unwrap().clone();
    let apexes: Vec<&&Vector> = positive
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == max)
        .map(|(a, _)| a)
        .collect();
    if apexes.len() != 1 {
        return false;
    }
    let apex: Vector = (**apexes[0]).clone();
    let common = &max / &Rational::from_integer(2);
    let rest: BTreeSet<&Vector> = positive
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v != max)
        .map(|(a, _)| *a)
        .collect();
    if !values.iter().all(|v| *v == max || *v == common) {
        return false;
    }
    rest.iter().all(|x| {
        let partner = &apex - x;
        rest.contains(&partner)
    })
}

// ---------------------------------------------------------------------------
// Paired recognition.

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Kind {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    Bc(usize),
    G,
}

fn kind_of(label: &TypeLabel) -> Option<Kind> {
    match label {
        TypeLabel::A(n) => Some(Kind::A(*n)),
        TypeLabel::B(n) => Some(Kind::B(*n)),
        TypeLabel::C(n) => Some(Kind::C(*n)),
        TypeLabel::D(n) => Some(Kind::D(*n)),
        TypeLabel::BC(n) => Some(Kind::Bc(*n)),
        TypeLabel::G2 => Some(Kind::G),
        _ => None,
    }
}

fn rank_of(kind: Kind) -> usize {
    match kind {
        Kind::A(n) | Kind::B(n) | Kind::C(n) | Kind::D(n) | Kind::Bc(n) => n,
        Kind::G => 2,
    }
}

/// Expected shape of the anchor's projection onto one component.
#[derive(Clone, Copy, Debug)]
enum Pattern {
    /// The projection is a root, of minimal length in its component, with
    /// the given orbit size.
    InRoots(usize),
    /// The projection is half a root (itself outside the root set).
    HalfOfRoot(usize),
    /// Neither the projection nor its double is a root.
    OutsideDoubled(usize),
}

fn pattern_for(row: &TypeLabel, kind: Kind) -> Option<Pattern> {
    use TypeLabel::*;
    let rank = rank_of(kind);
    match row {
        APair(1) => Some(Pattern::HalfOfRoot(2)),
        APair(l) => Some(Pattern::OutsideDoubled(l + 1)),
        BPair(..) | BCPair(..) => Some(Pattern::InRoots(2 * rank)),
        CPair(..) => Some(Pattern::HalfOfRoot(2 * rank)),
        DPair(..) => match kind {
            Kind::A(1) | Kind::B(_) | Kind::C(_) => Some(Pattern::HalfOfRoot(2 * rank)),
            Kind::A(3) | Kind::D(_) => Some(Pattern::OutsideDoubled(2 * rank)),
            _ => None,
        },
        AB13 => match kind {
            Kind::A(1) => Some(Pattern::HalfOfRoot(2)),
            Kind::B(3) => Some(Pattern::OutsideDoubled(8)),
            _ => None,
        },
        G12 => match kind {
            Kind::Bc(1) => Some(Pattern::InRoots(2)),
            Kind::G => Some(Pattern::InRoots(6)),
            _ => None,
        },
        D21(_) => Some(Pattern::HalfOfRoot(2)),
        _ => None,
    }
}

fn projection_fits(
    s: &RootSupersystem,
    component: &[Vector],
    p: &Vector,
    pattern: Pattern,
) -> Result<bool> {
    let doubled = p.scale(&Rational::from_integer(2));
    let orbit_len = weyl::orbit(s, p)?.len();
    Ok(match pattern {
        Pattern::InRoots(k) => {
            let min_abs = component
                .iter()
                .map(|r| s.norm(r).abs())
                .min()
                .expect("component is nonempty");
            s.contains(p) && orbit_len == k && s.norm(p).abs() == min_abs
        }
        Pattern::HalfOfRoot(k) => !s.contains(p) && s.contains(&doubled) && orbit_len == k,
        Pattern::OutsideDoubled(k) => !s.contains(p) && !s.contains(&doubled) && orbit_len == k,
    })
}

/// Families whose nonsingular roots lie inside the real span: two or three
/// ordinary blocks tied together by the anchor orbit.
fn paired_flow(s: &RootSupersystem, ns: Vec<Vector>) -> Result<TypeLabel> {
    let delta = check_star_orbit(s, &ns)?;
    let components = real_components(s);
    let recognized: Vec<TypeLabel> = components
        .iter()
        .map(|c| recognize_ordinary(s, c))
        .collect::<Result<_>>()?;
    let kinds: Vec<Kind> = recognized
        .iter()
        .map(|label| {
            kind_of(label).ok_or_else(|| unrec(format!("component of type {label} in a pair")))
        })
        .collect::<Result<_>>()?;
    let mut sorted = kinds.clone();
    sorted.sort();
    use Kind::*;
    let row = match sorted.as_slice() {
        [A(l1), A(l2)] if l1 == l2 => TypeLabel::APair(*l1),
        [A(1), A(3)] => TypeLabel::DPair(1, 3),
        [A(1), B(2)] => TypeLabel::CPair(1, 2),
        [A(1), B(3)] => TypeLabel::AB13,
        [A(1), C(u)] => TypeLabel::CPair(1, *u),
        [A(1), D(u)] => TypeLabel::DPair(1, *u),
        [A(1), Bc(u)] => TypeLabel::BPair(1, *u),
        [A(3), B(2)] => TypeLabel::DPair(3, 2),
        [A(3), C(u)] => TypeLabel::DPair(3, *u),
        [B(2), B(2)] => TypeLabel::CPair(2, 2),
        [B(2), C(u)] => TypeLabel::CPair(2, *u),
        [B(2), D(t)] => TypeLabel::DPair(*t, 2),
        [B(t), Bc(u)] => TypeLabel::BPair(*t, *u),
        [C(t), C(u)] => TypeLabel::CPair(*t, *u),
        [C(u), D(t)] => TypeLabel::DPair(*t, *u),
        [Bc(t), Bc(u)] => TypeLabel::BCPair(*t, *u),
        [Bc(1), G] => TypeLabel::G12,
        [A(1), A(1), A(1)] => {
            let norms: Vec<Rational> = components.iter().map(|c| s.norm(&c[0])).collect();
            TypeLabel::D21(&norms[1] / &norms[0])
        }
        [A(1), A(1), B(2)] => TypeLabel::DPair(2, 2),
        [A(1), A(1), C(u)] => TypeLabel::DPair(2, *u),
        _ => {
            let names: Vec<String> = recognized.iter().map(|k| k.to_string()).collect();
            return Err(unrec(format!(
                "no paired family over components [{}]",
                names.join(", ")
            )));
        }
    };
    if let TypeLabel::DPair(2, _) = row {
        // The two rank-one blocks must carry equal-length roots; unequal
        // scalars here cannot close the nonsingular part under root sums.
        let rank_one_norms: Vec<Rational> = components
            .iter()
            .zip(&kinds)
            .filter(|(_, k)| **k == A(1))
            .map(|(c, _)| s.norm(&c[0]))
            .collect();
        if rank_one_norms[0] != rank_one_norms[1] {
            return Err(unrec(format!(
                "rank-one blocks of unequal lengths {} and {}",
                rank_one_norms[0], rank_one_norms[1]
            )));
        }
    }
    for (i, component) in components.iter().enumerate() {
        let pattern = pattern_for(&row, kinds[i])
            .ok_or_else(|| unrec(format!("component {i} does not fit the {row} row")))?;
        let p = s.project(&components, &delta, i)?;
        if p.is_zero() {
            return Err(unrec(format!("anchor misses component {i}")));
        }
        if !projection_fits(s, component, &p, pattern)? {
            return Err(unrec(format!(
                "anchor projection onto component {i} does not match the {row} row"
            )));
        }
    }
    row.validate()?;
    Ok(row)
}

// ---------------------------------------------------------------------------
// Top-level classification.

/// The catalog types of a system's connected components, in component order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<TypeLabel>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", names.join(" (+) "))
    }
}

/// Classify a system: recognize each connected component against the
/// catalog. Fails with a structural profile if any component matches no
/// family.
pub fn classify(s: &RootSupersystem) -> Result<Classification> {
    let components = connected_components(s);
    if components.is_empty() {
        return Err(unrec("no nonzero roots"));
    }
    if components.len() == 1 {
        return Ok(Classification {
            components: vec![recognize_irreducible(s)?],
        });
    }
    let mut labels = Vec::with_capacity(components.len());
    for index in 0..components.len() {
        let subsystem = component_system(s, index)?;
        labels.push(recognize_irreducible(&subsystem)?);
    }
    Ok(Classification { components: labels })
}

// ---------------------------------------------------------------------------
// Isomorphism.

/// A claimed isomorphism: the linear map sending the first system onto the
/// second, with the scalar relating the two forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    /// Row-major matrix of the map; column `j` is the image of the `j`-th
    /// coordinate vector.
    pub matrix: Vec<Vec<Rational>>,
    /// `(phi(u), phi(v)) = scalar * (u, v)` for all vectors.
    pub scalar: Rational,
}

/// Verify a witness: the map must be invertible, send the first root set
/// exactly onto the second, and rescale the form by the witness scalar.
pub fn check_isomorphism(
    a: &RootSupersystem,
    b: &RootSupersystem,
    witness: &IsoWitness,
) -> Result<bool> {
    if witness.scalar.is_zero() {
        return Err(Error::ZeroScalar);
    }
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let dim = a.dim();
    if witness.matrix.len() != dim || witness.matrix.iter().any(|row| row.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: witness.matrix.len(),
        });
    }
    if exactlin::invert(&witness.matrix).is_none() {
        return Err(Error::SingularWitness);
    }
    let images: Vec<Vector> = a
        .roots()
        .iter()
        .map(|r| exactlin::apply_matrix(&witness.matrix, r))
        .collect();
    let image_set: BTreeSet<&Vector> = images.iter().collect();
    let target_set: BTreeSet<&Vector> = b.roots().iter().collect();
    if image_set != target_set {
        return Ok(false);
    }
    for (u, phi_u) in a.roots().iter().zip(&images) {
        for (v, phi_v) in a.roots().iter().zip(&images) {
            let lhs = b.form().eval(phi_u, phi_v);
            let rhs = &witness.scalar * &a.form().eval(u, v);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b[0].len();
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut sum = Rational::zero();
                    for (k, b_row) in b.iter().enumerate().take(inner) {
                        sum = &sum + &(&a[i][k] * &b_row[j]);
                    }
                    sum
                })
                .collect()
        })
        .collect()
}

/// Search for an isomorphism by assigning root images to a canonical basis,
/// real roots first. Deterministic: candidates are tried in sorted order, so
/// the same pair of systems always yields the same witness.
///
/// The search is exponential in the dimension; `dim_limit` guards against
/// accidental large inputs.
pub fn find_isomorphism(
    a: &RootSupersystem,
    b: &RootSupersystem,
    dim_limit: usize,
) -> Result<Option<IsoWitness>> {
    let dim = a.dim().max(b.dim());
    if dim > dim_limit {
        return Err(Error::DimLimit {
            dim,
            limit: dim_limit,
        });
    }
    if a.dim() != b.dim() || a.roots().len() != b.roots().len() {
        return Ok(None);
    }
    let (pa, pb) = (a.partition_roots(), b.partition_roots());
    if pa.real.len() != pb.real.len() || pa.nonsingular.len() != pb.nonsingular.len() {
        return Ok(None);
    }
    let mut pool: Vec<Vector> = a.real_roots_nonzero();
    pool.extend(a.nonsingular_roots_nonzero());
    let basis = exactlin::basis_of_span(&pool);
    if basis.len() != a.dim() {
        return Ok(None);
    }
    let candidates: Vec<Vector> = b.roots().iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut assigned: Vec<Vector> = Vec::with_capacity(basis.len());
    search(a, b, &basis, &candidates, &mut assigned, None)
}

fn search(
    a: &RootSupersystem,
    b: &RootSupersystem,
    basis: &[Vector],
    candidates: &[Vector],
    assigned: &mut Vec<Vector>,
    scalar: Option<Rational>,
) -> Result<Option<IsoWitness>> {
    let k = assigned.len();
    if k == basis.len() {
        let dim = basis.len();
        let b_mat: Vec<Vec<Rational>> = (0..dim)
            .map(|i| (0..dim).map(|j| basis[j].coords()[i].clone()).collect())
            .collect();
        let inverse = exactlin::invert(&b_mat).expect("basis matrix is invertible");
        let c_mat: Vec<Vec<Rational>> = (0..dim)
            .map(|i| (0..dim).map(|j| assigned[j].coords()[i].clone()).collect())
            .collect();
        let witness = IsoWitness {
            matrix: mat_mul(&c_mat, &inverse),
            scalar: scalar.unwrap_or_else(Rational::one),
        };
        if check_isomorphism(a, b, &witness)? {
            return Ok(Some(witness));
        }
        return Ok(None);
    }
    let wanted_real = !a.norm(&basis[k]).is_zero();
    'candidate: for c in candidates {
        if (!b.norm(c).is_zero()) != wanted_real {
            continue;
        }
        let mut local = scalar.clone();
        for i in 0..=k {
            let target = if i == k { c } else { &assigned[i] };
            let lhs = b.form().eval(target, c);
            let rhs = a.form().eval(&basis[i], &basis[k]);
            match (&local, rhs.is_zero()) {
                (Some(r), _) => {
                    if lhs != r * &rhs {
                        continue 'candidate;
                    }
                }
                (None, true) => {
                    if !lhs.is_zero() {
                        continue 'candidate;
                    }
                }
                (None, false) => {
                    if lhs.is_zero() {
                        continue 'candidate;
                    }
                    local = Some(&lhs / &rhs);
                }
            }
        }
        assigned.push(c.clone());
        if let Some(found) = search(a, b, basis, candidates, assigned, local)? {
            return Ok(Some(found));
        }
        assigned.pop();
    }
    Ok(None)
}

/// The same root set under the negated form. Real and nonsingular parts are
/// unchanged (length zero is preserved), reflections agree, so this is
/// always again a system — the standard nontrivial isomorphism example, with
/// the identity matrix and scalar -1 relating the two presentations when the
/// root set is symmetric enough.
pub fn negated_form_copy(s: &RootSupersystem) -> RootSupersystem {
    let entries: Vec<Vec<Rational>> = s
        .form()
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| -e).collect())
        .collect();
    let form = GramForm::new(entries).expect("negation preserves symmetry");
    RootSupersystem::new(form, s.roots().to_vec()).expect("same roots are still distinct")
}

/// The system in new coordinates: roots are mapped through `matrix`, the
/// form is transported so all pairings are preserved. Errors if the matrix
/// is singular.
pub fn change_of_basis(s: &RootSupersystem, matrix: &[Vec<Rational>]) -> Result<RootSupersystem> {
    let dim = s.dim();
    if matrix.len() != dim || matrix.iter().any(|row| row.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: matrix.len(),
        });
    }
    let inverse = exactlin::invert(matrix).ok_or(Error::SingularWitness)?;
    // G' = (M^-1)^T G M^-1 makes x -> Mx an isometry.
    let transpose: Vec<Vec<Rational>> = (0..dim)
        .map(|i| (0..dim).map(|j| inverse[j][i].clone()).collect())
        .collect();
    let gram = mat_mul(&mat_mul(&transpose, s.form().entries()), &inverse);
    let roots: Vec<Vector> = s
        .roots()
        .iter()
        .map(|r| exactlin::apply_matrix(matrix, r))
        .collect();
    RootSupersystem::new(GramForm::new(gram)?, roots)
}

// ---------------------------------------------------------------------------
// Truncation towers.

/// One inclusion step in a tower.
#[derive(Clone, Debug)]
pub struct TowerStep {
    pub smaller: TypeLabel,
    pub larger: TypeLabel,
    /// The coordinate injection matches the two forms entry by entry.
    pub isometric: bool,
    /// Every root of the smaller system maps to a root of the larger.
    pub embedded: bool,
    /// The image is closed under reflections along its own real members.
    pub reflection_closed: bool,
    /// Nonsingular members of the image satisfy the sum-or-difference
    /// condition within the image.
    pub null_condition: bool,
    /// The restricted form on the image span is nondegenerate.
    pub nondegenerate: bool,
}

impl TowerStep {
    pub fn holds(&self) -> bool {
        self.isometric
            && self.embedded
            && self.reflection_closed
            && self.null_condition
            && self.nondegenerate
    }
}

/// A verified chain of truncations within one family.
#[derive(Clone, Debug)]
pub struct TowerReport {
    pub labels: Vec<TypeLabel>,
    pub steps: Vec<TowerStep>,
    pub verdict: bool,
}

fn tower_params(label: &TypeLabel) -> Option<Vec<usize>> {
    use TypeLabel::*;
    match label {
        A(n) | B(n) | C(n) | D(n) | BC(n) | ImaginaryA(n) | ImaginaryC(n) => Some(vec![*n]),
        ImaginaryAPair(m, n) => Some(vec![*m, *n]),
        APair(l) => Some(vec![*l, *l]),
        BPair(t, u) | BCPair(t, u) | CPair(t, u) | DPair(t, u) => Some(vec![*t, *u]),
        G2 | F4 | AB13 | G12 | D21(_) => None,
    }
}

/// Coordinate chunk sizes of a label's fixed realization, used to build the
/// blockwise injection between two members of a family.
fn block_dims(label: &TypeLabel) -> Option<Vec<usize>> {
    use TypeLabel::*;
    match label {
        A(n) | B(n) | C(n) | D(n) | BC(n) | ImaginaryA(n) => Some(vec![*n]),
        ImaginaryC(n) => Some(vec![n + 1]),
        ImaginaryAPair(m, n) => Some(vec![*m, n - 1]),
        APair(l) => Some(vec![*l, *l]),
        BPair(t, u) | BCPair(t, u) | CPair(t, u) => Some(vec![*t, *u]),
        DPair(1, u) => Some(vec![1, *u]),
        DPair(2, u) => Some(vec![1, 1, *u]),
        DPair(t, u) => Some(vec![*t, *u]),
        G2 | F4 | AB13 | G12 | D21(_) => None,
    }
}

/// Verify a chain of inclusions `labels[0] in labels[1] in ...` via the
/// fixed coordinate injections of the family. Parameters must grow
/// monotonically (componentwise, strictly somewhere per step); members must
/// share a family and have compatible block structure.
pub fn truncation_tower(labels: &[TypeLabel]) -> Result<TowerReport> {
    if labels.len() < 2 {
        return Err(Error::BadParameter {
            family: "tower".to_string(),
            reason: "need at least two members".to_string(),
        });
    }
    for label in labels {
        label.validate()?;
    }
    let mut steps = Vec::new();
    for window in labels.windows(2) {
        let (small, large) = (&window[0], &window[1]);
        if !small.same_family(large) {
            return Err(Error::BadParameter {
                family: small.family_name().to_string(),
                reason: format!("tower members {small} and {large} are from different families"),
            });
        }
        let (ps, pl) = match (tower_params(small), tower_params(large)) {
            (Some(ps), Some(pl)) => (ps, pl),
            _ => {
                return Err(Error::BadParameter {
                    family: small.family_name().to_string(),
                    reason: "family has no tower structure".to_string(),
                })
            }
        };
        if ps.len() != pl.len() || ps.iter().zip(&pl).any(|(x, y)| x > y) || ps == pl {
            return Err(Error::NonMonotone(format!("{small} -> {large}")));
        }
        let (ds, dl) = match (block_dims(small), block_dims(large)) {
            (Some(ds), Some(dl)) if ds.len() == dl.len() => (ds, dl),
            _ => {
                return Err(Error::BadParameter {
                    family: small.family_name().to_string(),
                    reason: format!("{small} and {large} have incompatible block structure"),
                })
            }
        };
        steps.push(tower_step(small, large, &ds, &dl)?);
    }
    let verdict = steps.iter().all(TowerStep::holds);
    Ok(TowerReport {
        labels: labels.to_vec(),
        steps,
        verdict,
    })
}

fn tower_step(
    small: &TypeLabel,
    large: &TypeLabel,
    dims_small: &[usize],
    dims_large: &[usize],
) -> Result<TowerStep> {
    let s = construct(small)?;
    let l = construct(large)?;
    // Blockwise index injection.
    let mut index_map = Vec::with_capacity(s.dim());
    let mut offset_small = 0;
    let mut offset_large = 0;
    for (bs, bl) in dims_small.iter().zip(dims_large) {
        debug_assert!(bs <= bl);
        for i in 0..*bs {
            index_map.push(offset_large + i);
        }
        offset_small += bs;
        offset_large += bl;
    }
    debug_assert_eq!(offset_small, s.dim());
    debug_assert_eq!(offset_large, l.dim());
    let inject = |v: &Vector| -> Vector {
        let mut coords = vec![Rational::zero(); l.dim()];
        for (i, c) in v.coords().iter().enumerate() {
            coords[index_map[i]] = c.clone();
        }
        Vector::new(coords)
    };
    let isometric = (0..s.dim()).all(|i| {
        (0..s.dim())
            .all(|j| s.form().entries()[i][j] == l.form().entries()[index_map[i]][index_map[j]])
    });
    let image: Vec<Vector> = s.roots().iter().map(&inject).collect();
    let image_set: BTreeSet<&Vector> = image.iter().collect();
    let embedded = image.iter().all(|v| l.contains(v));
    let mut reflection_closed = true;
    'outer: for alpha in &image {
        if l.norm(alpha).is_zero() {
            continue;
        }
        for v in &image {
            let reflected = weyl::reflect_unchecked(&l, v, alpha);
            if !image_set.contains(&reflected) {
                reflection_closed = false;
                break 'outer;
            }
        }
    }
    let mut null_condition = true;
    'null: for alpha in &image {
        if !l.norm(alpha).is_zero() || alpha.is_zero() {
            continue;
        }
        for beta in &image {
            if l.form().eval(alpha, beta).is_zero() {
                continue;
            }
            let sum = beta + alpha;
            let difference = beta - alpha;
            if !image_set.contains(&sum) && !image_set.contains(&difference) {
                null_condition = false;
                break 'null;
            }
        }
    }
    let span_basis = exactlin::basis_of_span(&image);
    let nondegenerate = exactlin::radical(l.form(), &span_basis)
        .map(|rad| rad.is_empty())
        .unwrap_or(false);
    Ok(TowerStep {
        smaller: small.clone(),
        larger: large.clone(),
        isometric,
        embedded,
        reflection_closed,
        null_condition,
        nondegenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::standard_labels;

    fn classify_label(text: &str) -> String {
        let label: TypeLabel = text.parse().unwrap();
        let s = construct(&label).unwrap().unlabeled();
        classify(&s).unwrap().to_string()
    }

    #[test]
    fn ordinary_families_classify_to_their_canonical_names() {
        for (input, expected) in [
            ("A_3", "A_3"),
            ("B_1", "A_1"),
            ("B_4", "B_4"),
            ("C_2", "B_2"),
            ("C_4", "C_4"),
            ("D_4", "D_4"),
            ("BC_1", "BC_1"),
            ("BC_3", "BC_3"),
            ("G2", "G2"),
            ("F4", "F4"),
        ] {
            assert_eq!(classify_label(input), expected, "{input}");
        }
    }

    #[test]
    fn anchored_families_classify_back_exactly() {
        for text in [
            "Adot(0,2)",
            "Adot(0,4)",
            "Cdot(0,2)",
            "Cdot(0,3)",
            "Adot(2,3)",
            "Adot(3,4)",
        ] {
            assert_eq!(classify_label(text), text);
        }
    }

    #[test]
    fn paired_families_classify_back_exactly() {
        for text in [
            "A(1,1)",
            "A(2,2)",
            "B(1,1)",
            "B(2,1)",
            "B(2,2)",
            "BC(1,2)",
            "C(1,2)",
            "C(2,2)",
            "D(1,3)",
            "D(3,2)",
            "D(2,2)",
            "AB(1,3)",
            "G(1,2)",
            "D(2,1,2/1)",
            "D(2,1,-1/2)",
        ] {
            assert_eq!(classify_label(text), text);
        }
    }

    #[test]
    fn every_standard_label_classifies_to_its_canonical_form() {
        for label in standard_labels() {
            let s = construct(&label).unwrap().unlabeled();
            let classification = classify(&s).unwrap();
            assert_eq!(
                classification.components,
                vec![label.canonical()],
                "{label}"
            );
        }
    }

    #[test]
    fn disjoint_union_classifies_componentwise() {
        // Orthonormal rank-2 short/pair system next to an independent line.
        let gram = GramForm::new(vec![
            vec![Rational::one(), Rational::zero(), Rational::zero()],
            vec![Rational::zero(), Rational::one(), Rational::zero()],
            vec![
                Rational::zero(),
                Rational::zero(),
                Rational::from_integer(2),
            ],
        ])
        .unwrap();
        let mut roots = vec![Vector::zero(3)];
        for v in [[1, 0], [0, 1], [1, 1], [1, -1]] {
            roots.push(Vector::from_integers(&[v[0], v[1], 0]));
            roots.push(-&Vector::from_integers(&[v[0], v[1], 0]));
        }
        roots.push(Vector::from_integers(&[0, 0, 1]));
        roots.push(Vector::from_integers(&[0, 0, -1]));
        let s = RootSupersystem::new(gram, roots).unwrap();
        let classification = classify(&s).unwrap();
        assert_eq!(classification.to_string(), "B_2 (+) A_1");
    }

    #[test]
    fn profile_mismatch_is_reported_not_guessed() {
        // +-v and +-3v: rank 1 with two norm classes in ratio 9.
        let gram = GramForm::new(vec![vec![Rational::from_integer(2)]]).unwrap();
        let roots = vec![
            Vector::zero(1),
            Vector::from_integers(&[1]),
            Vector::from_integers(&[-1]),
            Vector::from_integers(&[3]),
            Vector::from_integers(&[-3]),
        ];
        let s = RootSupersystem::new(gram, roots).unwrap();
        assert!(matches!(classify(&s), Err(Error::Unrecognized { .. })));
    }

    #[test]
    fn negated_form_copy_is_isomorphic_with_scalar_minus_one() {
        let a = construct(&TypeLabel::APair(1)).unwrap();
        let b = negated_form_copy(&a);
        let witness = IsoWitness {
            matrix: vec![
                vec![Rational::one(), Rational::zero()],
                vec![Rational::zero(), Rational::from_integer(-1)],
            ],
            scalar: Rational::from_integer(-1),
        };
        assert!(check_isomorphism(&a, &b, &witness).unwrap());
        let found = find_isomorphism(&a, &b, 4).unwrap().unwrap();
        assert!(check_isomorphism(&a, &b, &found).unwrap());
    }

    #[test]
    fn different_anchored_families_are_not_isomorphic() {
        let a = construct(&TypeLabel::ImaginaryA(2)).unwrap();
        let b = construct(&TypeLabel::ImaginaryC(2)).unwrap();
        assert!(find_isomorphism(&a, &b, 4).unwrap().is_none());
    }

    #[test]
    fn relabeled_coordinates_still_find_an_isomorphism() {
        let a = construct(&TypeLabel::ImaginaryA(2)).unwrap();
        let swap = vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::zero()],
        ];
        let b = change_of_basis(&a, &swap).unwrap();
        let witness = find_isomorphism(&a, &b, 4).unwrap().unwrap();
        assert!(check_isomorphism(&a, &b, &witness).unwrap());
        assert_eq!(classify(&b).unwrap().to_string(), "Adot(0,2)");
    }

    #[test]
    fn anchored_tower_verifies() {
        let labels: Vec<TypeLabel> = ["Adot(0,2)", "Adot(0,3)", "Adot(0,4)"]
            .iter()
            .map(|t| t.parse().unwrap())
            .collect();
        let report = truncation_tower(&labels).unwrap();
        assert!(report.verdict);
        assert_eq!(report.steps.len(), 2);
    }

    #[test]
    fn tower_rejects_non_monotone_and_mixed_families() {
        let same: Vec<TypeLabel> = vec!["Adot(0,3)".parse().unwrap(), "Adot(0,3)".parse().unwrap()];
        assert!(matches!(
            truncation_tower(&same),
            Err(Error::NonMonotone(_))
        ));
        let mixed: Vec<TypeLabel> =
            vec!["Adot(0,2)".parse().unwrap(), "Cdot(0,3)".parse().unwrap()];
        assert!(matches!(
            truncation_tower(&mixed),
            Err(Error::BadParameter { .. })
        ));
    }
}
