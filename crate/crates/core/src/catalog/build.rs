//! Constructors for every catalog family. Each realization is exact and
//! fixed: the same label always produces byte-identical coordinates.
//!
//! Ordinary families use their standard orthonormal-coordinate realizations
//! (the simply-laced A family is re-based onto differences against a dropped
//! last coordinate, so its ambient dimension equals its rank). Families with
//! nonsingular roots are assembled from scaled ordinary blocks plus a null
//! anchor vector; the nonsingular roots are the anchor's reflection orbit
//! together with its negatives.

// Gram matrices are filled cell by cell; positional loops mirror the
// block layout being written.
#![allow(clippy::needless_range_loop)]

use crate::catalog::TypeLabel;
use crate::error::Error;
use crate::exactlin::{GramForm, Vector};
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::weyl;
use crate::Result;

/// Build the fixed realization of a catalog label.
pub fn construct(label: &TypeLabel) -> Result<RootSupersystem> {
    label.validate()?;
    use TypeLabel::*;
    let system = match label {
        A(n) => simply_laced_a(*n),
        B(n) => orthonormal_family(*n, &[LengthClass::Short, LengthClass::Pairs]),
        C(n) => orthonormal_family(*n, &[LengthClass::Doubled, LengthClass::Pairs]),
        D(n) => orthonormal_family(*n, &[LengthClass::Pairs]),
        BC(n) => orthonormal_family(
            *n,
            &[LengthClass::Short, LengthClass::Doubled, LengthClass::Pairs],
        ),
        G2 => g2(),
        F4 => f4(),
        ImaginaryA(n) => imaginary_a(*n),
        ImaginaryC(n) => imaginary_c(*n),
        ImaginaryAPair(m, n) => imaginary_a_pair(*m, *n),
        APair(l) => simply_laced_pair(*l)?,
        BPair(t, u) => real_pair(block_for_b_slot(*t), Block::bc(*u))?,
        BCPair(t, u) => real_pair(Block::bc(*t), Block::bc(*u))?,
        CPair(t, u) => real_pair(block_for_c_slot(*t), Block::c(*u))?,
        DPair(1, u) => real_pair(Block::a1(A1Part::Half), Block::d(*u))?,
        DPair(2, u) => {
            let blocks = vec![
                Block::a1(A1Part::Half),
                Block::a1(A1Part::Half),
                Block::c(*u),
            ];
            // Both rank-one scalars must agree here; the closure axiom for
            // pairs of nonsingular roots forces it once the third block has
            // rank at least two.
            let scalars = vec![Rational::one(), Rational::one(), Rational::from_integer(-1)];
            assemble_blocks(blocks, scalars)?
        }
        DPair(t, u) => real_pair(Block::d(*t), Block::c(*u))?,
        AB13 => real_pair(Block::a1(A1Part::Half), Block::b3_spin())?,
        G12 => real_pair(Block::bc(1), Block::g2())?,
        D21(lambda) => {
            let blocks = vec![
                Block::a1(A1Part::Half),
                Block::a1(A1Part::Half),
                Block::a1(A1Part::Half),
            ];
            let minus_one = Rational::from_integer(-1);
            let scalars = vec![Rational::one(), lambda.clone(), &minus_one - lambda];
            assemble_blocks(blocks, scalars)?
        }
    };
    Ok(system.with_label(label.clone()))
}

/// Convenience wrappers mirroring the operation names used by callers.
pub fn make_root_system(family: ClassicalFamily, rank: usize) -> Result<RootSupersystem> {
    let label = match family {
        ClassicalFamily::A => TypeLabel::A(rank),
        ClassicalFamily::B => TypeLabel::B(rank),
        ClassicalFamily::C => TypeLabel::C(rank),
        ClassicalFamily::D => TypeLabel::D(rank),
        ClassicalFamily::BC => TypeLabel::BC(rank),
    };
    construct(&label)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFamily {
    A,
    B,
    C,
    D,
    BC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalKind {
    G2,
    F4,
}

pub fn make_exceptional(kind: ExceptionalKind) -> Result<RootSupersystem> {
    match kind {
        ExceptionalKind::G2 => construct(&TypeLabel::G2),
        ExceptionalKind::F4 => construct(&TypeLabel::F4),
    }
}

/// `Adot(0,n)`, `Cdot(0,n)`, or `Adot(m,n)` by name.
pub fn make_imaginary(name: &str, sizes: &[usize]) -> Result<RootSupersystem> {
    let label = match (name, sizes) {
        ("Adot", [n]) => TypeLabel::ImaginaryA(*n),
        ("Cdot", [n]) => TypeLabel::ImaginaryC(*n),
        ("Adot", [m, n]) => TypeLabel::ImaginaryAPair(*m, *n),
        _ => {
            return Err(Error::BadLabel(format!("{name}{sizes:?}")));
        }
    };
    construct(&label)
}

/// A two- or three-component family by its full label text.
pub fn make_real(label: &str) -> Result<RootSupersystem> {
    construct(&label.parse()?)
}

// ---------------------------------------------------------------------------
// Ordinary families.

/// Simply-laced family of rank `n`, re-based so the ambient dimension is `n`:
/// basis vectors are differences against a dropped last coordinate, giving
/// the gram matrix `1 + delta`.
fn simply_laced_a(n: usize) -> RootSupersystem {
    let gram = a_gram(n, Rational::one());
    let roots = a_roots(n, 0, n, false);
    let mut all = vec![Vector::zero(n)];
    all.extend(roots);
    RootSupersystem::new(GramForm::new(gram).expect("symmetric by construction"), all)
        .expect("catalog roots are distinct")
}

/// Gram matrix `scale * (1 + delta)` of the re-based simply-laced family.
fn a_gram(n: usize, scale: Rational) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let base = if i == j { 2 } else { 1 };
                    &Rational::from_integer(base) * &scale
                })
                .collect()
        })
        .collect()
}

/// Nonzero roots of the re-based simply-laced family, embedded into an
/// ambient of dimension `dim` at coordinate `offset`; negated if `flip`.
fn a_roots(n: usize, offset: usize, dim: usize, flip: bool) -> Vec<Vector> {
    let mut roots = Vec::new();
    let mut push = |coords: Vec<(usize, i64)>| {
        let mut v = vec![Rational::zero(); dim];
        for (i, c) in coords {
            v[offset + i] = Rational::from_integer(if flip { -c } else { c });
        }
        roots.push(Vector::new(v));
    };
    for i in 0..n {
        push(vec![(i, 1)]);
        push(vec![(i, -1)]);
        for j in 0..n {
            if i != j {
                push(vec![(i, 1), (j, -1)]);
            }
        }
    }
    roots
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LengthClass {
    /// Single coordinates `+-e_i`.
    Short,
    /// Doubled coordinates `+-2e_i`.
    Doubled,
    /// Signed pairs `+-e_i +- e_j`.
    Pairs,
}

/// A family realized on orthonormal coordinates from the given length
/// classes.
fn orthonormal_family(n: usize, classes: &[LengthClass]) -> RootSupersystem {
    let mut roots = vec![Vector::zero(n)];
    roots.extend(orthonormal_roots(n, classes, 0, n));
    RootSupersystem::new(GramForm::identity(n), roots).expect("catalog roots are distinct")
}

fn orthonormal_roots(n: usize, classes: &[LengthClass], offset: usize, dim: usize) -> Vec<Vector> {
    let mut roots = Vec::new();
    let mut push = |coords: Vec<(usize, i64)>| {
        let mut v = vec![Rational::zero(); dim];
        for (i, c) in coords {
            v[offset + i] = Rational::from_integer(c);
        }
        roots.push(Vector::new(v));
    };
    for class in classes {
        match class {
            LengthClass::Short => {
                for i in 0..n {
                    push(vec![(i, 1)]);
                    push(vec![(i, -1)]);
                }
            }
            LengthClass::Doubled => {
                for i in 0..n {
                    push(vec![(i, 2)]);
                    push(vec![(i, -2)]);
                }
            }
            LengthClass::Pairs => {
                for i in 0..n {
                    for j in i + 1..n {
                        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            push(vec![(i, a), (j, b)]);
                        }
                    }
                }
            }
        }
    }
    roots
}

/// The rank-two exceptional system, in the basis of its two zero-sum simple
/// directions: six short roots of length 2, six long roots of length 6.
fn g2() -> RootSupersystem {
    let gram = GramForm::new(vec![
        vec![Rational::from_integer(2), Rational::from_integer(-1)],
        vec![Rational::from_integer(-1), Rational::from_integer(2)],
    ])
    .expect("symmetric");
    let mut roots = vec![Vector::zero(2)];
    for v in [[1, 0], [0, 1], [1, 1], [2, 1], [1, 2], [-1, 1]] {
        roots.push(Vector::from_integers(&v));
        roots.push(-&Vector::from_integers(&v));
    }
    RootSupersystem::new(gram, roots).expect("distinct")
}

/// The rank-four exceptional system on orthonormal coordinates, including
/// the sixteen half-integer roots.
fn f4() -> RootSupersystem {
    let mut roots = vec![Vector::zero(4)];
    roots.extend(orthonormal_roots(
        4,
        &[LengthClass::Short, LengthClass::Pairs],
        0,
        4,
    ));
    let half = Rational::ratio(1, 2);
    for signs in 0..16u32 {
        let coords: Vec<Rational> = (0..4)
            .map(|i| {
                if signs & (1 << i) != 0 {
                    -&half
                } else {
                    half.clone()
                }
            })
            .collect();
        roots.push(Vector::new(coords));
    }
    RootSupersystem::new(GramForm::identity(4), roots).expect("distinct")
}

// ---------------------------------------------------------------------------
// Families with one anchor over a single component.

/// Null anchor against a simply-laced component: ambient dimension `n`,
/// coordinates `[a, c_1 .. c_{n-1}]` with `(a,a) = 0`, `(a,c_i) = -1`.
fn imaginary_a(n: usize) -> RootSupersystem {
    let dim = n;
    let r = n - 1;
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    for i in 1..dim {
        gram[0][i] = Rational::from_integer(-1);
        gram[i][0] = Rational::from_integer(-1);
        for j in 1..dim {
            gram[i][j] = Rational::from_integer(if i == j { 2 } else { 1 });
        }
    }
    let mut roots = vec![Vector::zero(dim)];
    roots.extend(a_roots(r, 1, dim, false));
    // Anchor and its shifts by the component roots through the base point.
    let mut anchor = vec![Rational::zero(); dim];
    anchor[0] = Rational::one();
    let a = Vector::new(anchor);
    roots.push(a.clone());
    roots.push(-&a);
    for i in 1..dim {
        let shifted = a
            .clone()
            .add_scaled(&Vector::unit(dim, i), &Rational::one());
        roots.push(-&shifted);
        roots.push(shifted);
    }
    RootSupersystem::new(GramForm::new(gram).expect("symmetric"), roots).expect("distinct")
}

/// Null anchor against a doubled-edge component: ambient dimension `n + 1`,
/// coordinates `[a, e_1 .. e_n]` with `(a,a) = 0`, `(a,e_1) = 1`.
fn imaginary_c(n: usize) -> RootSupersystem {
    let dim = n + 1;
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    gram[0][1] = Rational::one();
    gram[1][0] = Rational::one();
    for i in 1..dim {
        gram[i][i] = Rational::one();
    }
    gram[0][0] = Rational::zero();
    let mut roots = vec![Vector::zero(dim)];
    roots.extend(orthonormal_roots(
        n,
        &[LengthClass::Doubled, LengthClass::Pairs],
        1,
        dim,
    ));
    let a = Vector::unit(dim, 0);
    let e1 = Vector::unit(dim, 1);
    let mut null_roots = vec![
        a.clone(),
        a.clone().add_scaled(&e1, &Rational::from_integer(-2)),
    ];
    for t in 2..dim {
        let et = Vector::unit(dim, t);
        let base = &a - &e1;
        null_roots.push(&base - &et);
        null_roots.push(&base + &et);
    }
    for v in null_roots {
        roots.push(-&v);
        roots.push(v);
    }
    RootSupersystem::new(GramForm::new(gram).expect("symmetric"), roots).expect("distinct")
}

/// Anchors spanning two simply-laced components of sizes `m < n`: ambient
/// dimension `m + n - 1`, coordinates `[w, u_1..u_{m-1}, v_1..v_{n-1}]`; the
/// second component carries the negated form.
fn imaginary_a_pair(m: usize, n: usize) -> RootSupersystem {
    let dim = m + n - 1;
    let ru = m - 1;
    let rv = n - 1;
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    for i in 1..dim {
        gram[0][i] = Rational::from_integer(-1);
        gram[i][0] = Rational::from_integer(-1);
    }
    for i in 0..ru {
        for j in 0..ru {
            gram[1 + i][1 + j] = Rational::from_integer(if i == j { 2 } else { 1 });
        }
    }
    for i in 0..rv {
        for j in 0..rv {
            gram[1 + ru + i][1 + ru + j] = Rational::from_integer(if i == j { -2 } else { -1 });
        }
    }
    let mut roots = vec![Vector::zero(dim)];
    roots.extend(a_roots(ru, 1, dim, false));
    roots.extend(a_roots(rv, 1 + ru, dim, false));
    // Null roots w + u_{t-1} - v_{p-1} over all index pairs, where index 0
    // means the dropped base coordinate.
    let w = Vector::unit(dim, 0);
    for t in 0..m {
        for p in 0..n {
            let mut v = w.clone();
            if t > 0 {
                v = v.add_scaled(&Vector::unit(dim, t), &Rational::one());
            }
            if p > 0 {
                v = v.add_scaled(&Vector::unit(dim, ru + p), &Rational::from_integer(-1));
            }
            roots.push(v.clone());
            roots.push(-&v);
        }
    }
    RootSupersystem::new(GramForm::new(gram).expect("symmetric"), roots).expect("distinct")
}

/// Two equal simply-laced components joined by null roots (the anchor orbit
/// fills in all cross terms). The second component carries the negated form.
fn simply_laced_pair(l: usize) -> Result<RootSupersystem> {
    let dim = 2 * l;
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    let pos = a_gram(l, Rational::one());
    let neg = a_gram(l, Rational::from_integer(-1));
    for i in 0..l {
        for j in 0..l {
            gram[i][j] = pos[i][j].clone();
            gram[l + i][l + j] = neg[i][j].clone();
        }
    }
    let mut real_roots = vec![Vector::zero(dim)];
    real_roots.extend(a_roots(l, 0, dim, false));
    real_roots.extend(a_roots(l, l, dim, false));
    let form = GramForm::new(gram).expect("symmetric");
    let skeleton = RootSupersystem::new(form.clone(), real_roots.clone())?;
    // Anchor: the sum of the two traceless first-coordinate weights.
    let over = Rational::ratio(1, l as i64 + 1);
    let mut anchor = Vector::zero(dim);
    anchor = anchor.add_scaled(&Vector::unit(dim, 0), &Rational::one());
    anchor = anchor.add_scaled(&Vector::unit(dim, l), &Rational::one());
    for i in 0..l {
        anchor = anchor.add_scaled(&Vector::unit(dim, i), &-&over);
        anchor = anchor.add_scaled(&Vector::unit(dim, l + i), &-&over);
    }
    debug_assert!(form.norm(&anchor).is_zero(), "anchor must be null");
    let null_roots = weyl::symmetrized_orbit(&skeleton, &anchor)?;
    let mut all = real_roots;
    all.extend(null_roots);
    RootSupersystem::new(form, all)
}

// ---------------------------------------------------------------------------
// Block assembly for the two- and three-component families.

/// Whether a rank-one block contributes its half root or its full root to
/// the anchor.
#[derive(Clone, Copy, PartialEq, Eq)]
enum A1Part {
    Half,
    Full,
}

/// One ordinary component in its own coordinates, with an unscaled gram
/// matrix and the block's contribution to the anchor vector.
struct Block {
    dim: usize,
    gram: Vec<Vec<Rational>>,
    /// Nonzero roots in block coordinates, as integer-pair encodings.
    roots: Vec<Vector>,
    anchor_part: Vector,
}

impl Block {
    /// Rank-one block on one coordinate: root vectors `+-2e`, so the weight
    /// `e` is half the root. Gram entry 1/2 gives the root length 2.
    fn a1(part: A1Part) -> Block {
        let roots = vec![Vector::from_integers(&[2]), Vector::from_integers(&[-2])];
        Block {
            dim: 1,
            gram: vec![vec![Rational::ratio(1, 2)]],
            roots,
            anchor_part: match part {
                A1Part::Half => Vector::from_integers(&[1]),
                A1Part::Full => Vector::from_integers(&[2]),
            },
        }
    }

    fn b(t: usize) -> Block {
        Block {
            dim: t,
            gram: identity_gram(t),
            roots: orthonormal_roots(t, &[LengthClass::Short, LengthClass::Pairs], 0, t),
            anchor_part: Vector::unit(t, 0),
        }
    }

    fn bc(t: usize) -> Block {
        Block {
            dim: t,
            gram: identity_gram(t),
            roots: orthonormal_roots(
                t,
                &[LengthClass::Short, LengthClass::Doubled, LengthClass::Pairs],
                0,
                t,
            ),
            anchor_part: Vector::unit(t, 0),
        }
    }

    fn c(t: usize) -> Block {
        Block {
            dim: t,
            gram: identity_gram(t),
            roots: orthonormal_roots(t, &[LengthClass::Doubled, LengthClass::Pairs], 0, t),
            anchor_part: Vector::unit(t, 0),
        }
    }

    fn d(t: usize) -> Block {
        Block {
            dim: t,
            gram: identity_gram(t),
            roots: orthonormal_roots(t, &[LengthClass::Pairs], 0, t),
            anchor_part: Vector::unit(t, 0),
        }
    }

    /// Rank-three short/pair block anchored at the half-sum weight.
    fn b3_spin() -> Block {
        let half = Rational::ratio(1, 2);
        Block {
            dim: 3,
            gram: identity_gram(3),
            roots: orthonormal_roots(3, &[LengthClass::Short, LengthClass::Pairs], 0, 3),
            anchor_part: Vector::new(vec![half.clone(), half.clone(), half]),
        }
    }

    /// Rank-two triple-edge block anchored at a short root.
    fn g2() -> Block {
        let sys = g2();
        Block {
            dim: 2,
            gram: sys.form().entries().to_vec(),
            roots: sys
                .roots()
                .iter()
                .filter(|r| !r.is_zero())
                .cloned()
                .collect(),
            anchor_part: Vector::from_integers(&[1, 1]),
        }
    }

    /// Length of the anchor part under the unscaled block gram.
    fn anchor_norm(&self) -> Rational {
        let form = GramForm::new(self.gram.clone()).expect("block gram symmetric");
        form.norm(&self.anchor_part)
    }
}

fn identity_gram(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// First slot of the `B(t,u)` family: rank one degenerates to the rank-one
/// block contributing its full root to the anchor.
fn block_for_b_slot(t: usize) -> Block {
    if t == 1 {
        Block::a1(A1Part::Full)
    } else {
        Block::b(t)
    }
}

/// First slot of the `C(t,u)` family: rank one contributes the half root.
fn block_for_c_slot(t: usize) -> Block {
    if t == 1 {
        Block::a1(A1Part::Half)
    } else {
        Block::c(t)
    }
}

/// Two blocks with scalars `(1, -n1/n2)` so the combined anchor is null.
fn real_pair(first: Block, second: Block) -> Result<RootSupersystem> {
    let n1 = first.anchor_norm();
    let n2 = second.anchor_norm();
    let scalars = vec![Rational::one(), -&(&n1 / &n2)];
    assemble_blocks(vec![first, second], scalars)
}

/// Assemble scaled blocks into one system: block-diagonal form, embedded
/// block roots, and the nonsingular part generated from the combined anchor.
fn assemble_blocks(blocks: Vec<Block>, scalars: Vec<Rational>) -> Result<RootSupersystem> {
    assert_eq!(blocks.len(), scalars.len());
    let dim: usize = blocks.iter().map(|b| b.dim).sum();
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    let mut offset = 0;
    let mut real_roots = vec![Vector::zero(dim)];
    let mut anchor = Vector::zero(dim);
    for (block, scalar) in blocks.iter().zip(&scalars) {
        for i in 0..block.dim {
            for j in 0..block.dim {
                gram[offset + i][offset + j] = &block.gram[i][j] * scalar;
            }
        }
        for root in &block.roots {
            let mut coords = vec![Rational::zero(); dim];
            coords[offset..offset + block.dim].clone_from_slice(root.coords());
            real_roots.push(Vector::new(coords));
        }
        let mut part = vec![Rational::zero(); dim];
        part[offset..offset + block.dim].clone_from_slice(block.anchor_part.coords());
        anchor = &anchor + &Vector::new(part);
        offset += block.dim;
    }
    let form = GramForm::new(gram)?;
    debug_assert!(
        form.norm(&anchor).is_zero(),
        "block scalars must make the anchor null"
    );
    let skeleton = RootSupersystem::new(form.clone(), real_roots.clone())?;
    let null_roots = weyl::symmetrized_orbit(&skeleton, &anchor)?;
    let mut all = real_roots;
    all.extend(null_roots);
    RootSupersystem::new(form, all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;

    fn count(label: &str) -> (usize, usize, usize) {
        let s = construct(&label.parse().unwrap()).unwrap();
        let real = s.real_roots_nonzero().len();
        let ns = s.nonsingular_roots_nonzero().len();
        (s.roots().len(), real, ns)
    }

    #[test]
    fn root_counts_match_the_family_formulas() {
        assert_eq!(count("A_2"), (7, 6, 0));
        assert_eq!(count("B_2"), (9, 8, 0));
        assert_eq!(count("BC_1"), (5, 4, 0));
        assert_eq!(count("G2"), (13, 12, 0));
        assert_eq!(count("F4"), (49, 48, 0));
        // Anchor families: 2n null roots over a size-n simply-laced part,
        // 4n over a size-n doubled part.
        assert_eq!(count("Adot(0,3)"), (13, 6, 6));
        assert_eq!(count("Cdot(0,2)"), (17, 8, 8));
        assert_eq!(count("Adot(2,3)"), (21, 8, 12));
        assert_eq!(count("A(1,1)"), (9, 4, 4));
        assert_eq!(count("A(2,2)"), (31, 12, 18));
        assert_eq!(count("D(2,1,1/1)"), (15, 6, 8));
        assert_eq!(count("AB(1,3)"), (37, 20, 16));
        assert_eq!(count("G(1,2)"), (29, 16, 12));
    }

    #[test]
    fn g2_length_ratio_is_three() {
        let s = construct(&TypeLabel::G2).unwrap();
        let mut norms: Vec<Rational> = s
            .real_roots_nonzero()
            .iter()
            .map(|r| s.norm(r))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        norms.sort();
        assert_eq!(norms.len(), 2);
        assert_eq!(&norms[1] / &norms[0], Rational::from_integer(3));
    }

    #[test]
    fn dimensions_match_labels() {
        for text in [
            "A_4",
            "Adot(0,4)",
            "Cdot(0,3)",
            "Adot(2,4)",
            "A(2,2)",
            "B(2,1)",
        ] {
            let label: TypeLabel = text.parse().unwrap();
            let s = construct(&label).unwrap();
            assert_eq!(s.dim(), label.dim(), "{text}");
            assert_eq!(s.span_rank(), s.dim(), "{text} must span");
        }
    }

    #[test]
    fn a_few_families_pass_full_verification() {
        for text in [
            "BC_2",
            "Adot(0,2)",
            "Cdot(0,2)",
            "A(1,1)",
            "B(1,1)",
            "G(1,2)",
        ] {
            let s = construct(&text.parse().unwrap()).unwrap();
            let report = axioms::verify_t(&s);
            assert!(report.verdict, "{text} failed: {:?}", report.failing_ids());
        }
    }

    #[test]
    fn anchor_scalars_balance_every_two_block_family() {
        for text in [
            "B(2,2)", "B(1,2)", "B(2,1)", "BC(1,1)", "C(1,2)", "D(1,3)", "AB(1,3)", "G(1,2)",
        ] {
            let s = construct(&text.parse().unwrap()).unwrap();
            for root in s.nonsingular_roots_nonzero() {
                assert!(s.norm(&root).is_zero(), "{text}: {root} must be null");
            }
        }
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(construct(&TypeLabel::D(3)).is_err());
        assert!(construct(&TypeLabel::C(1)).is_err());
        assert!(make_imaginary("Adot", &[1]).is_err());
        assert!(make_real("D(2,1,0/1)").is_err());
    }
}
