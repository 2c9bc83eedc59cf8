//! Exact linear algebra over the rationals: coordinate vectors, symmetric
//! bilinear forms, span ranks, radicals, nondegenerate extensions, and the
//! integer-lattice normal form. All computations are deterministic; any two
//! runs on equal input produce identical output, including ordering.

// Elimination code walks rows and columns by position on purpose: the
// indices tie pivots, factors, and targets together.
#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::rational::Rational;
use crate::Result;

/// A point of the ambient space in fixed coordinates.
///
/// Ordering is lexicographic by coordinate, which the whole crate uses as the
/// canonical order on roots and weights.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// Standard basis vector `e_i` (0-indexed) in `dim` coordinates.
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut coords = vec![Rational::zero(); dim];
        coords[i] = Rational::one();
        Vector(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Vector {
        Vector(self.0.iter().map(|c| c * r).collect())
    }

    /// `self + r * other`.
    pub fn add_scaled(&self, other: &Vector, r: &Rational) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + &(b * r))
                .collect(),
        )
    }

    /// Parse `1,0,-1/2` (lenient rational coordinates, comma-separated).
    pub fn parse_lenient(s: &str) -> Result<Vector> {
        let coords = s
            .split(',')
            .map(|part| Rational::parse_lenient(part.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector(coords))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

/// Symmetric bilinear form given by its gram matrix on the ambient
/// coordinates. Construction rejects asymmetric input.
#[derive(Clone, PartialEq, Eq)]
pub struct GramForm {
    dim: usize,
    entries: Vec<Vec<Rational>>,
}

impl GramForm {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::AsymmetricForm { row: i, col: j });
                }
            }
        }
        Ok(GramForm { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GramForm { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Evaluate the form with explicit dimension checking.
    pub fn evaluate(&self, u: &Vector, v: &Vector) -> Result<Rational> {
        for w in [u, v] {
            if w.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: w.dim(),
                });
            }
        }
        Ok(self.eval(u, v))
    }

    /// Evaluate assuming dimensions already match (checked in debug builds).
    pub fn eval(&self, u: &Vector, v: &Vector) -> Rational {
        debug_assert_eq!(u.dim(), self.dim);
        debug_assert_eq!(v.dim(), self.dim);
        let mut total = Rational::zero();
        for (i, a) in u.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coords().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                total += &(&(a * b) * &self.entries[i][j]);
            }
        }
        total
    }

    /// Squared length `(v, v)`.
    pub fn norm(&self, v: &Vector) -> Rational {
        self.eval(v, v)
    }

    /// Whether the form is nondegenerate on the whole coordinate space.
    pub fn is_nondegenerate(&self) -> bool {
        let rows: Vec<Vector> = self.entries.iter().map(|r| Vector(r.clone())).collect();
        rank(&rows) == self.dim
    }
}

impl fmt::Debug for GramForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GramForm")
            .field("dim", &self.dim)
            .field("entries", &self.entries)
            .finish()
    }
}

/// Dimension of the span of `vectors`. The empty family has rank 0.
pub fn rank(vectors: &[Vector]) -> usize {
    Eliminator::new().extend_all(vectors).rank()
}

/// Greedy spanning subfamily: scan `vectors` in order, keep each one that
/// enlarges the span. Deterministic, so usable as a canonical basis choice.
pub fn basis_of_span(vectors: &[Vector]) -> Vec<Vector> {
    let mut elim = Eliminator::new();
    let mut basis = Vec::new();
    for v in vectors {
        if elim.insert(v) {
            basis.push(v.clone());
        }
    }
    basis
}

/// Incremental row-echelon accumulator over the rationals.
struct Eliminator {
    /// Reduced rows, each stored with its pivot column; kept sorted by pivot.
    rows: Vec<(usize, Vector)>,
}

impl Eliminator {
    fn new() -> Self {
        Eliminator { rows: Vec::new() }
    }

    fn extend_all(mut self, vectors: &[Vector]) -> Self {
        for v in vectors {
            self.insert(v);
        }
        self
    }

    /// Reduce `v` against the accumulated rows; if a nonzero remainder is
    /// left, absorb it and report `true`.
    fn insert(&mut self, v: &Vector) -> bool {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            let c = v.coords()[*pivot].clone();
            if !c.is_zero() {
                v = v.add_scaled(row, &-&c);
            }
        }
        match v.coords().iter().position(|c| !c.is_zero()) {
            None => false,
            Some(pivot) => {
                let lead = v.coords()[pivot].clone();
                let row = v.scale(&lead.recip());
                let at = self.rows.partition_point(|(p, _)| *p < pivot);
                self.rows.insert(at, (pivot, row));
                true
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Coordinates of `v` in the (independent) family `basis`, or `None` when `v`
/// lies outside the span.
pub fn solve_coordinates(basis: &[Vector], v: &Vector) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return v.is_zero().then(Vec::new);
    }
    let dim = basis[0].dim();
    // Row-reduce the transpose system [B^T | v].
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|coord| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.coords()[coord].clone()).collect();
            row.push(v.coords()[coord].clone());
            row
        })
        .collect();
    let cols = basis.len();
    let mut pivot_rows: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0;
    for col in 0..cols {
        let Some(found) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, found);
        let lead = rows[next_row][col].clone().recip();
        for entry in rows[next_row].iter_mut() {
            *entry = &*entry * &lead;
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..=cols {
                    let delta = &rows[next_row][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_rows[col] = Some(next_row);
        next_row += 1;
    }
    // Inconsistent rows mean v is outside the span.
    for r in next_row..rows.len() {
        if !rows[r][cols].is_zero() {
            return None;
        }
    }
    let mut coords = Vec::with_capacity(cols);
    for col in 0..cols {
        match pivot_rows[col] {
            Some(r) => coords.push(rows[r][cols].clone()),
            // Independent basis: every column must have a pivot.
            None => unreachable!("dependent basis passed to solve_coordinates"),
        }
    }
    Some(coords)
}

/// Whether the family is linearly independent.
pub fn is_independent(vectors: &[Vector]) -> bool {
    rank(vectors) == vectors.len()
}

/// Radical of the form restricted to the span of `basis`: all `w` in the span
/// with `(w, basis) = 0`. Input must be linearly independent. The result is a
/// deterministic basis of the radical, in ambient coordinates.
pub fn radical(form: &GramForm, basis: &[Vector]) -> Result<Vec<Vector>> {
    if !is_independent(basis) {
        return Err(Error::DependentBasis);
    }
    let k = basis.len();
    // Nullspace of the restricted gram matrix G[i][j] = (b_i, b_j).
    let gram: Vec<Vector> = basis
        .iter()
        .map(|bi| Vector(basis.iter().map(|bj| form.eval(bi, bj)).collect()))
        .collect();
    let null = nullspace(&gram, k);
    Ok(null
        .into_iter()
        .map(|coeffs| {
            let mut w = Vector::zero(form.dim());
            for (c, b) in coeffs.coords().iter().zip(basis) {
                w = w.add_scaled(b, c);
            }
            w
        })
        .collect())
}

/// Deterministic nullspace basis of the matrix whose rows are `rows` (each of
/// length `cols`): one generator per free column, that column's coefficient
/// set to 1, in ascending column order.
fn nullspace(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let mut mat: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0;
    for col in 0..cols {
        let Some(found) = (next_row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(next_row, found);
        let lead = mat[next_row][col].clone().recip();
        for entry in mat[next_row].iter_mut() {
            *entry = &*entry * &lead;
        }
        for r in 0..mat.len() {
            if r != next_row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..cols {
                    let delta = &mat[next_row][c] * &factor;
                    mat[r][c] = &mat[r][c] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
    }
    let mut generators = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut gen = vec![Rational::zero(); cols];
        gen[free] = Rational::one();
        for col in 0..cols {
            if let Some(r) = pivot_of_col[col] {
                gen[col] = -&mat[r][free];
            }
        }
        generators.push(Vector(gen));
    }
    generators
}

/// Extend the subspace spanned by `subspace` to one on which the form is
/// nondegenerate, inside an ambient space where it already is.
///
/// Returns a basis of the extension `U`: a deterministic basis of the input
/// span followed by one dual vector per radical generator. The growth
/// `dim U - dim W` equals the dimension of the radical of the form on `W`,
/// which is the minimum possible.
pub fn nondegenerate_extension(
    form: &GramForm,
    ambient_basis: &[Vector],
    subspace: &[Vector],
) -> Result<Vec<Vector>> {
    let dim = form.dim();
    if ambient_basis.len() != dim || !is_independent(ambient_basis) {
        return Err(Error::DependentBasis);
    }
    let ambient_gram: Vec<Vector> = ambient_basis
        .iter()
        .map(|u| Vector(ambient_basis.iter().map(|v| form.eval(u, v)).collect()))
        .collect();
    if rank(&ambient_gram) != dim {
        return Err(Error::DegenerateAmbient);
    }
    let w_basis = basis_of_span(subspace);
    let rad = radical(form, &w_basis)?;
    let mut extension = w_basis.clone();
    for (i, _) in rad.iter().enumerate() {
        // Solve (u_j, v) = delta_{ij} for v over the ambient basis; the system
        // is consistent because the ambient form is nondegenerate.
        let rows: Vec<Vector> = rad
            .iter()
            .map(|u| Vector(ambient_basis.iter().map(|b| form.eval(u, b)).collect()))
            .collect();
        let mut target = vec![Rational::zero(); rad.len()];
        target[i] = Rational::one();
        let coeffs = solve_linear_system(&rows, &Vector(target))
            .expect("dual vector exists for a nondegenerate ambient form");
        let mut v = Vector::zero(dim);
        for (c, b) in coeffs.iter().zip(ambient_basis) {
            v = v.add_scaled(b, c);
        }
        extension.push(v);
    }
    debug_assert!(
        radical(form, &extension)?.is_empty(),
        "extension must kill the radical"
    );
    Ok(extension)
}

/// Particular solution `x` of `rows * x = target` (free variables set to 0),
/// or `None` if inconsistent. Deterministic.
fn solve_linear_system(rows: &[Vector], target: &Vector) -> Option<Vec<Rational>> {
    let cols = rows.first().map_or(0, Vector::dim);
    let mut mat: Vec<Vec<Rational>> = rows
        .iter()
        .zip(target.coords())
        .map(|(r, t)| {
            let mut row = r.coords().to_vec();
            row.push(t.clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0;
    for col in 0..cols {
        let Some(found) = (next_row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(next_row, found);
        let lead = mat[next_row][col].clone().recip();
        for entry in mat[next_row].iter_mut() {
            *entry = &*entry * &lead;
        }
        for r in 0..mat.len() {
            if r != next_row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..=cols {
                    let delta = &mat[next_row][c] * &factor;
                    mat[r][c] = &mat[r][c] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
    }
    for r in next_row..mat.len() {
        if !mat[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for col in 0..cols {
        if let Some(r) = pivot_of_col[col] {
            x[col] = mat[r][cols].clone();
        }
    }
    Some(x)
}

/// Inverse of the square matrix with the given rows, or `None` if singular.
pub fn invert(rows: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = rows.len();
    let mut mat: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n, "invert requires a square matrix");
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let found = (col..n).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, found);
        let lead = mat[col][col].clone().recip();
        for entry in mat[col].iter_mut() {
            *entry = &*entry * &lead;
        }
        for r in 0..n {
            if r != col && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..2 * n {
                    let delta = &mat[col][c] * &factor;
                    mat[r][c] = &mat[r][c] - &delta;
                }
            }
        }
    }
    Some(mat.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Coordinate dot product, skipping zero terms on the left.
pub(crate) fn dot(u: &Vector, v: &Vector) -> Rational {
    let mut total = Rational::zero();
    for (a, b) in u.coords().iter().zip(v.coords()) {
        if !a.is_zero() && !b.is_zero() {
            total += &(a * b);
        }
    }
    total
}

/// Apply the matrix (rows) to a vector.
pub fn apply_matrix(rows: &[Vec<Rational>], v: &Vector) -> Vector {
    Vector(
        rows.iter()
            .map(|row| {
                let mut total = Rational::zero();
                for (a, b) in row.iter().zip(v.coords()) {
                    total += &(a * b);
                }
                total
            })
            .collect(),
    )
}

/// Row-style Hermite normal form of an integer matrix: nonzero rows have
/// positive leading entries in strictly increasing pivot columns, and entries
/// above a pivot are reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut mat: Vec<Vec<BigInt>> = rows.to_vec();
    let mut fixed = 0;
    for col in 0..cols {
        loop {
            // Smallest nonzero absolute value in this column at or below `fixed`.
            let mut best: Option<usize> = None;
            for r in fixed..mat.len() {
                if !mat[r][col].is_zero()
                    && best.is_none_or(|b| mat[r][col].abs() < mat[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(best) = best else { break };
            mat.swap(fixed, best);
            if mat[fixed][col].is_negative() {
                for entry in mat[fixed].iter_mut() {
                    *entry = -&*entry;
                }
            }
            let mut again = false;
            for r in fixed + 1..mat.len() {
                if !mat[r][col].is_zero() {
                    let q = div_floor(&mat[r][col], &mat[fixed][col]);
                    for c in 0..cols {
                        let delta = &q * &mat[fixed][c];
                        mat[r][c] = &mat[r][c] - &delta;
                    }
                    again = again || !mat[r][col].is_zero();
                }
            }
            if !again {
                // Reduce entries above the pivot into canonical range.
                for r in 0..fixed {
                    let q = div_floor(&mat[r][col], &mat[fixed][col]);
                    if !q.is_zero() {
                        for c in 0..cols {
                            let delta = &q * &mat[fixed][c];
                            mat[r][c] = &mat[r][c] - &delta;
                        }
                    }
                }
                fixed += 1;
                break;
            }
        }
    }
    mat.truncate(fixed);
    mat
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

/// Whether the integer rows span all of `Z^cols` as a lattice.
pub fn spans_integer_lattice(rows: &[Vec<BigInt>], cols: usize) -> bool {
    let hnf = hermite_normal_form(rows);
    if hnf.len() != cols {
        return false;
    }
    hnf.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, entry)| {
            if i == j {
                entry == &BigInt::from(1)
            } else {
                entry.is_zero()
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> Vector {
        Vector::from_integers(coords)
    }

    #[test]
    fn evaluate_under_identity_is_dot_product() {
        let form = GramForm::identity(3);
        let e1 = Vector::unit(3, 0);
        let e2 = Vector::unit(3, 1);
        assert_eq!(form.evaluate(&e1, &e1).unwrap(), Rational::one());
        assert_eq!(form.evaluate(&e1, &e2).unwrap(), Rational::zero());
    }

    #[test]
    fn evaluate_rejects_dimension_mismatch() {
        let form = GramForm::identity(2);
        let err = form.evaluate(&v(&[1, 0, 0]), &v(&[1, 0])).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                got: 3
            }
        ));
    }

    #[test]
    fn gram_rejects_asymmetry() {
        let err = GramForm::new(vec![
            vec![Rational::one(), Rational::one()],
            vec![Rational::zero(), Rational::one()],
        ])
        .unwrap_err();
        assert!(matches!(err, Error::AsymmetricForm { row: 1, col: 0 }));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[v(&[0, 0])]), 0);
        assert_eq!(rank(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]), 2);
        // Difference vectors inside a 3-coordinate zero-sum plane.
        assert_eq!(rank(&[v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[1, 0, -1])]), 2);
    }

    #[test]
    fn basis_of_span_is_greedy_and_stable() {
        let fam = [v(&[1, 1]), v(&[2, 2]), v(&[0, 1])];
        assert_eq!(basis_of_span(&fam), vec![v(&[1, 1]), v(&[0, 1])]);
    }

    #[test]
    fn solve_coordinates_inside_and_outside_span() {
        let basis = [v(&[1, 0, -1]), v(&[0, 1, -1])];
        let inside = v(&[2, 3, -5]);
        assert_eq!(
            solve_coordinates(&basis, &inside).unwrap(),
            vec![Rational::from_integer(2), Rational::from_integer(3)]
        );
        assert_eq!(solve_coordinates(&basis, &v(&[1, 0, 0])), None);
    }

    #[test]
    fn radical_of_null_line() {
        // Hyperbolic-signature plane: (e1+e2) is null and orthogonal to itself.
        let form = GramForm::new(vec![
            vec![Rational::one(), Rational::zero()],
            vec![Rational::zero(), Rational::from_integer(-1)],
        ])
        .unwrap();
        let rad = radical(&form, &[v(&[1, 1])]).unwrap();
        assert_eq!(rad, vec![v(&[1, 1])]);
    }

    #[test]
    fn radical_rejects_dependent_input() {
        let form = GramForm::identity(2);
        let err = radical(&form, &[v(&[1, 0]), v(&[2, 0])]).unwrap_err();
        assert!(matches!(err, Error::DependentBasis));
    }

    #[test]
    fn radical_of_nondegenerate_restriction_is_empty() {
        let form = GramForm::identity(3);
        assert!(radical(&form, &[v(&[1, -1, 0]), v(&[0, 1, -1])])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn extension_grows_by_exactly_the_radical_dimension() {
        let form = GramForm::new(vec![
            vec![Rational::one(), Rational::zero(), Rational::zero()],
            vec![
                Rational::zero(),
                Rational::from_integer(-1),
                Rational::zero(),
            ],
            vec![Rational::zero(), Rational::zero(), Rational::one()],
        ])
        .unwrap();
        let ambient: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
        let w = [v(&[1, 1, 0])];
        let ext = nondegenerate_extension(&form, &ambient, &w).unwrap();
        assert_eq!(ext.len(), 2, "one radical generator, one dual vector");
        assert!(radical(&form, &ext).unwrap().is_empty());
        assert_eq!(ext[0], v(&[1, 1, 0]));
    }

    #[test]
    fn extension_rejects_degenerate_ambient() {
        let form = GramForm::new(vec![
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::zero(), Rational::one()],
        ])
        .unwrap();
        let ambient: Vec<Vector> = (0..2).map(|i| Vector::unit(2, i)).collect();
        let err = nondegenerate_extension(&form, &ambient, &[v(&[0, 1])]).unwrap_err();
        assert!(matches!(err, Error::DegenerateAmbient));
    }

    #[test]
    fn invert_round_trips() {
        let rows = vec![
            vec![Rational::from_integer(2), Rational::one()],
            vec![Rational::one(), Rational::one()],
        ];
        let inv = invert(&rows).unwrap();
        let test = v(&[3, 5]);
        let back = apply_matrix(&rows, &apply_matrix(&inv, &test));
        assert_eq!(back, test);
        assert!(invert(&[
            vec![Rational::one(), Rational::one()],
            vec![Rational::one(), Rational::one()],
        ])
        .is_none());
    }

    #[test]
    fn lattice_span_detects_full_and_proper_sublattices() {
        let full = [
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1)],
        ];
        assert!(spans_integer_lattice(&full, 2));
        // (1,1) and (1,-1) generate an index-2 sublattice.
        let halved = [
            vec![BigInt::from(1), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(-1)],
        ];
        assert!(!spans_integer_lattice(&halved, 2));
        let hnf = hermite_normal_form(&halved);
        assert_eq!(
            hnf,
            vec![
                vec![BigInt::from(1), BigInt::from(1)],
                vec![BigInt::from(0), BigInt::from(2)],
            ]
        );
    }

    #[test]
    fn lattice_span_handles_redundant_rows() {
        let rows = [
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(3), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(5)],
            vec![BigInt::from(0), BigInt::from(7)],
        ];
        // gcd(2,3) = 1 and gcd(5,7) = 1, so together they span.
        assert!(spans_integer_lattice(&rows, 2));
    }
}
