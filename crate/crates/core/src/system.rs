//! The root supersystem container: an ambient form plus a finite root set,
//! with the real/nonsingular partition and the projection operations used by
//! the type-recognition machinery.

use std::collections::{BTreeSet, HashMap};

use crate::catalog::TypeLabel;
use crate::error::Error;
use crate::exactlin::{self, GramForm, Vector};
use crate::rational::Rational;
use crate::Result;

/// A finite root supersystem candidate: coordinates, a symmetric bilinear
/// form, and a finite set of roots held sorted lexicographically.
///
/// Construction checks only structural sanity (dimensions, duplicates); the
/// defining axioms are the business of [`crate::axioms`], so corrupted or
/// partial systems can be represented and then judged.
#[derive(Clone)]
pub struct RootSupersystem {
    form: GramForm,
    roots: Vec<Vector>,
    /// Position of every root in `roots`, for constant-time membership.
    index: HashMap<Vector, usize>,
    /// Gram image of every root, aligned with `roots`: pairing any vector
    /// against a root is a dot product instead of a full form evaluation.
    pushed: Vec<Vector>,
    /// Squared length of every root, aligned with `roots`.
    norms: Vec<Rational>,
    label: Option<TypeLabel>,
}

/// Real and nonsingular parts of a root set. The zero root belongs to both
/// sides whenever it is present at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPartition {
    pub real: Vec<Vector>,
    pub nonsingular: Vec<Vector>,
}

impl RootSupersystem {
    pub fn new(form: GramForm, roots: Vec<Vector>) -> Result<Self> {
        let dim = form.dim();
        for root in &roots {
            if root.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: root.dim(),
                });
            }
        }
        let mut sorted = roots;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateRoot(pair[0].to_string()));
            }
        }
        let index: HashMap<Vector, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let pushed: Vec<Vector> = sorted
            .iter()
            .map(|v| exactlin::apply_matrix(form.entries(), v))
            .collect();
        let norms: Vec<Rational> = sorted
            .iter()
            .zip(&pushed)
            .map(|(v, p)| exactlin::dot(v, p))
            .collect();
        Ok(RootSupersystem {
            form,
            roots: sorted,
            index,
            pushed,
            norms,
            label: None,
        })
    }

    pub fn with_label(mut self, label: TypeLabel) -> Self {
        self.label = Some(label);
        self
    }

    /// Forget the constructor's label (classification round-trips use this).
    pub fn unlabeled(mut self) -> Self {
        self.label = None;
        self
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &GramForm {
        &self.form
    }

    /// All roots, sorted lexicographically.
    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn label(&self) -> Option<&TypeLabel> {
        self.label.as_ref()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.index.contains_key(v)
    }

    /// Position of `v` in the sorted root list.
    pub(crate) fn root_position(&self, v: &Vector) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Cached squared length of the root at `position`.
    pub(crate) fn root_norm(&self, position: usize) -> &Rational {
        &self.norms[position]
    }

    /// `(v, r)` for the root `r` at `position`, through its cached gram image.
    pub(crate) fn pairing_with_root(&self, v: &Vector, position: usize) -> Rational {
        exactlin::dot(v, &self.pushed[position])
    }

    pub fn norm(&self, v: &Vector) -> Rational {
        match self.root_position(v) {
            Some(i) => self.norms[i].clone(),
            None => self.form.norm(v),
        }
    }

    /// Whether `v` is a root with `(v, v) != 0`.
    pub fn is_real_root(&self, v: &Vector) -> bool {
        self.contains(v) && !self.norm(v).is_zero()
    }

    /// Nonzero roots of nonzero length, sorted.
    pub fn real_roots_nonzero(&self) -> Vec<Vector> {
        self.roots
            .iter()
            .filter(|r| !self.norm(r).is_zero())
            .cloned()
            .collect()
    }

    /// Nonzero null-length roots, sorted.
    pub fn nonsingular_roots_nonzero(&self) -> Vec<Vector> {
        self.roots
            .iter()
            .filter(|r| !r.is_zero() && self.norm(r).is_zero())
            .cloned()
            .collect()
    }

    pub fn partition_roots(&self) -> RootPartition {
        let zero = Vector::zero(self.dim());
        let has_zero = self.contains(&zero);
        let mut real = Vec::new();
        let mut nonsingular = Vec::new();
        for root in &self.roots {
            if root.is_zero() || !self.norm(root).is_zero() {
                real.push(root.clone());
            }
            if self.norm(root).is_zero() {
                nonsingular.push(root.clone());
            }
        }
        debug_assert!(
            !has_zero || (real.contains(&zero) && nonsingular.contains(&zero)),
            "zero root must land in both parts"
        );
        RootPartition { real, nonsingular }
    }

    /// Dimension of the span of the whole root set.
    pub fn span_rank(&self) -> usize {
        exactlin::rank(&self.roots)
    }

    /// Dimension of the span of the real roots alone.
    pub fn real_span_rank(&self) -> usize {
        exactlin::rank(&self.real_roots_nonzero())
    }

    /// The canonical nonsingular anchor: the lexicographically smallest
    /// nonzero null root, if any.
    pub fn canonical_star(&self) -> Option<Vector> {
        self.nonsingular_roots_nonzero().into_iter().next()
    }

    /// Decomposition basis for projecting onto real components: one basis
    /// slice per component, preceded by the canonical nonsingular anchor when
    /// the components alone do not span the ambient space.
    fn projection_basis(&self, components: &[Vec<Vector>]) -> Result<ProjectionBasis> {
        let mut slices = Vec::with_capacity(components.len());
        let mut flat = Vec::new();
        let mut star = None;
        if exactlin::rank(&components.concat()) < self.dim() {
            let anchor = self.canonical_star().ok_or(Error::ComponentSpanFailure)?;
            star = Some(anchor.clone());
            flat.push(anchor);
        }
        for component in components {
            let start = flat.len();
            let before = exactlin::rank(&flat);
            flat.extend(exactlin::basis_of_span(component));
            if exactlin::rank(&flat) != before + (flat.len() - start) {
                // Component spans must be independent of each other (and of
                // the anchor line) for projections to be well defined.
                return Err(Error::ComponentSpanFailure);
            }
            slices.push(start..flat.len());
        }
        if flat.len() != self.dim() || exactlin::rank(&flat) != self.dim() {
            return Err(Error::ComponentSpanFailure);
        }
        Ok(ProjectionBasis {
            basis: flat,
            slices,
            star,
        })
    }

    /// Component projection of `v`: the part of `v` lying in the span of
    /// `components[i]`, relative to the direct-sum decomposition of the
    /// ambient space into the component spans (plus the nonsingular anchor
    /// line when those spans do not fill the space).
    pub fn project(&self, components: &[Vec<Vector>], v: &Vector, i: usize) -> Result<Vector> {
        let pb = self.projection_basis(components)?;
        let slice = pb
            .slices
            .get(i)
            .ok_or_else(|| Error::NotInSystem(format!("component index {i}")))?
            .clone();
        let coords =
            exactlin::solve_coordinates(&pb.basis, v).ok_or(Error::ComponentSpanFailure)?;
        let mut part = Vector::zero(self.dim());
        for k in slice {
            part = part.add_scaled(&pb.basis[k], &coords[k]);
        }
        Ok(part)
    }

    /// Indices of the components on which `v` has a nonzero projection.
    pub fn support(&self, components: &[Vec<Vector>], v: &Vector) -> Result<BTreeSet<usize>> {
        let mut indices = BTreeSet::new();
        for i in 0..components.len() {
            if !self.project(components, v, i)?.is_zero() {
                indices.insert(i);
            }
        }
        Ok(indices)
    }

    /// Coefficient of `v` along the anchor line in the decomposition
    /// `ambient = F*anchor (+) span(real roots)`. Real vectors get 0; the
    /// anchor itself gets 1.
    pub fn star_coefficient(&self, anchor: &Vector, v: &Vector) -> Result<Rational> {
        if !self.contains(anchor) || !self.norm(anchor).is_zero() || anchor.is_zero() {
            return Err(Error::NotNonsingularRoot(anchor.to_string()));
        }
        let mut basis = vec![anchor.clone()];
        basis.extend(exactlin::basis_of_span(&self.real_roots_nonzero()));
        if basis.len() != self.dim() || !exactlin::is_independent(&basis) {
            return Err(Error::SpanFailure {
                span_rank: exactlin::rank(&basis),
                ambient: self.dim(),
            });
        }
        let coords = exactlin::solve_coordinates(&basis, v).ok_or(Error::SpanFailure {
            span_rank: basis.len(),
            ambient: self.dim(),
        })?;
        Ok(coords[0].clone())
    }
}

struct ProjectionBasis {
    basis: Vec<Vector>,
    slices: Vec<std::ops::Range<usize>>,
    #[allow(dead_code)]
    star: Option<Vector>,
}

impl std::fmt::Debug for RootSupersystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RootSupersystem")
            .field("dim", &self.dim())
            .field("roots", &self.roots.len())
            .field("label", &self.label)
            .finish()
    }
}
