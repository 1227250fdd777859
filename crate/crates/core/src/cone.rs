//! Rational polyhedral cones generated by nonnegative integer vectors:
//! double description (extremal rays and facet normals) and complete
//! face-lattice enumeration.
//!
//! Everything is exact. Rays and facet normals are stored as primitive
//! integer vectors; the inequality convention is `f . x >= 0` for every
//! facet normal `f`, so facet activity is `= 0`. For cones that do not span
//! the ambient space, the defining equalities of the span are carried as
//! pairs of opposite normals in front of the facet list.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::kernel_basis;
use crate::matrix::{dot, hnf, primitive_part, Int, IntMatrix, IntVector};

#[derive(Debug, Clone)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<IntVector>,
    rays: Vec<IntVector>,
    facet_normals: Vec<IntVector>,
    // number of span equalities; facet_normals[..2*span_equalities] are the
    // corresponding +/- pairs, the rest are the facets within the span
    span_equalities: usize,
    dim: usize,
}

/// A face, identified by the set of generators it annihilates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub active_facets: BTreeSet<usize>,
    pub generator_indices: BTreeSet<usize>,
    pub ray_indices: BTreeSet<usize>,
    pub dim: usize,
}

/// All faces (including `{0}` and the cone itself) plus the covering
/// relations of inclusion. Faces are sorted by (dim, generator set).
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    pub hasse_edges: Vec<(usize, usize)>,
}

impl FaceLattice {
    /// Index of the unique top face (the cone itself).
    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    /// Index of the unique 0-dimensional face `{0}`.
    pub fn bottom(&self) -> usize {
        0
    }
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Extremal rays, primitive and sorted lexicographically.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// Full inequality description: span-equality pairs first, then the
    /// irredundant facets of the cone within its span.
    pub fn facet_normals(&self) -> &[IntVector] {
        &self.facet_normals
    }

    /// Facets of the cone within its linear span.
    pub fn relative_facets(&self) -> &[IntVector] {
        &self.facet_normals[2 * self.span_equalities..]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

fn linear_combination(a: &Int, x: &[Int], b: &Int, y: &[Int]) -> IntVector {
    // a*x - b*y
    x.iter().zip(y).map(|(xi, yi)| a * xi - b * yi).collect()
}

fn rank_of(vectors: &[IntVector], len: usize) -> usize {
    IntMatrix::from_rows(len, vectors).rank()
}

/// Rays `r1`, `r2` of the current cone are adjacent iff the constraints
/// active on both have rank `pointed_dim - 2`.
fn adjacent(r1: &[Int], r2: &[Int], processed: &[IntVector], pointed_dim: usize) -> bool {
    if pointed_dim < 2 {
        return false;
    }
    let common: Vec<IntVector> = processed
        .iter()
        .filter(|h| dot(h, r1).is_zero() && dot(h, r2).is_zero())
        .cloned()
        .collect();
    rank_of(&common, r1.len()) == pointed_dim - 2
}

/// Double description: extremal rays of `{y in Q^d : c . y >= 0 for all c}`.
/// The constraints must make the cone pointed. Insertion order is
/// lexicographic so the run is deterministic.
fn pointed_dual_rays(d: usize, constraints: &[IntVector]) -> Vec<IntVector> {
    let mut cons: Vec<IntVector> = constraints
        .iter()
        .map(|c| primitive_part(c))
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .collect();
    cons.sort();
    cons.dedup();

    let mut lineality = IntMatrix::identity(d).row_vectors();
    let mut rays: Vec<IntVector> = Vec::new();
    let mut processed: Vec<IntVector> = Vec::new();
    for h in cons {
        if let Some(idx) = lineality.iter().position(|l| !dot(&h, l).is_zero()) {
            // The constraint cuts the lineality space: one lineality vector
            // becomes a ray, the rest (and all rays) are projected onto the
            // hyperplane h = 0 along it.
            let mut l0 = lineality.remove(idx);
            if dot(&h, &l0).is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
            }
            let a0 = dot(&h, &l0);
            for l in lineality.iter_mut() {
                let hl = dot(&h, l);
                *l = primitive_part(&linear_combination(&a0, l, &hl, &l0));
            }
            for r in rays.iter_mut() {
                let hr = dot(&h, r);
                *r = primitive_part(&linear_combination(&a0, r, &hr, &l0));
            }
            rays.push(primitive_part(&l0));
            rays.sort();
            rays.dedup();
            processed.push(h);
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(&h, r)).collect();
        if !vals.iter().any(Signed::is_negative) {
            processed.push(h);
            continue;
        }
        let pointed_dim = d - lineality.len();
        let mut next: Vec<IntVector> = rays
            .iter()
            .zip(&vals)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r.clone())
            .collect();
        for (i, vi) in vals.iter().enumerate() {
            if !vi.is_positive() {
                continue;
            }
            for (j, vj) in vals.iter().enumerate() {
                if !vj.is_negative() {
                    continue;
                }
                if !adjacent(&rays[i], &rays[j], &processed, pointed_dim) {
                    continue;
                }
                next.push(primitive_part(&linear_combination(vi, &rays[j], vj, &rays[i])));
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(h);
    }
    debug_assert!(lineality.is_empty(), "dual cone has lineality");
    rays.sort();
    rays
}

/// Builds the double description of the cone generated by `generators`
/// inside the nonnegative orthant of dimension `ambient_dim`.
pub fn cone_from_generators(ambient_dim: usize, generators: &[IntVector]) -> Result<Cone> {
    for g in generators {
        if g.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: g.len(),
            });
        }
        if g.iter().any(Signed::is_negative) {
            return Err(Error::NegativeGenerator);
        }
    }
    let gen_matrix = IntMatrix::from_rows(ambient_dim, generators);

    // Lattice basis of the span, from the Hermite form of the generators.
    let (h, _) = hnf(&gen_matrix);
    let span_basis: Vec<IntVector> = (0..h.rows())
        .filter(|&i| !h.is_zero_row(i))
        .map(|i| h.row_vec(i))
        .collect();
    let dim = span_basis.len();

    // Defining equalities of the span: integer vectors orthogonal to every
    // generator.
    let span_normals = kernel_basis(&gen_matrix);

    // Facets within the span, computed as the extremal rays of the dual cone
    // in span coordinates.
    let reduced: Vec<IntVector> = generators
        .iter()
        .map(|g| span_basis.iter().map(|b| dot(b, g)).collect())
        .collect();
    let dual_rays = pointed_dual_rays(dim, &reduced);
    let mut relative_facets: Vec<IntVector> = dual_rays
        .iter()
        .map(|y| {
            let mut f = vec![Int::zero(); ambient_dim];
            for (coef, b) in y.iter().zip(&span_basis) {
                for (fi, bi) in f.iter_mut().zip(b) {
                    *fi += coef * bi;
                }
            }
            primitive_part(&f)
        })
        .collect();
    relative_facets.sort();

    // A generator is extremal iff its active facets cut a 1-dimensional face.
    let mut rays: Vec<IntVector> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.iter().all(Zero::is_zero) {
            continue;
        }
        let active: Vec<IntVector> = dual_rays
            .iter()
            .filter(|y| dot(y, &reduced[i]).is_zero())
            .cloned()
            .collect();
        if dim == 1 || rank_of(&active, dim) == dim - 1 {
            rays.push(primitive_part(g));
        }
    }
    rays.sort();
    rays.dedup();

    let mut facet_normals = Vec::new();
    for e in span_normals.basis() {
        facet_normals.push(e.clone());
        facet_normals.push(e.iter().map(|x| -x).collect());
    }
    let span_equalities = span_normals.rank();
    facet_normals.extend(relative_facets);

    Ok(Cone {
        ambient_dim,
        generators: generators.to_vec(),
        rays,
        facet_normals,
        span_equalities,
        dim,
    })
}

/// True iff the number of extremal rays equals the cone dimension.
pub fn is_simplicial(c: &Cone) -> bool {
    c.rays.len() == c.dim
}

/// Enumerates every face exactly once by closing the facet-activation sets:
/// starting from the whole cone, each facet maps a face's generator set to
/// the subset it annihilates, and distinct generator sets are distinct faces.
pub fn enumerate_faces(c: &Cone) -> FaceLattice {
    let p = c.generators.len();
    let rel = c.relative_facets();
    let top: BTreeSet<usize> = (0..p).collect();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue = vec![top.clone()];
    seen.insert(top);
    while let Some(j) = queue.pop() {
        for f in rel {
            let j2: BTreeSet<usize> = j
                .iter()
                .copied()
                .filter(|&i| dot(f, &c.generators[i]).is_zero())
                .collect();
            if seen.insert(j2.clone()) {
                queue.push(j2);
            }
        }
    }

    let mut faces: Vec<Face> = seen
        .into_iter()
        .map(|j| {
            let active_facets: BTreeSet<usize> = c
                .facet_normals
                .iter()
                .enumerate()
                .filter(|(_, f)| j.iter().all(|&i| dot(f, &c.generators[i]).is_zero()))
                .map(|(k, _)| k)
                .collect();
            let ray_indices: BTreeSet<usize> = c
                .rays
                .iter()
                .enumerate()
                .filter(|(_, r)| {
                    active_facets
                        .iter()
                        .all(|&k| dot(&c.facet_normals[k], r).is_zero())
                })
                .map(|(k, _)| k)
                .collect();
            let members: Vec<IntVector> = j.iter().map(|&i| c.generators[i].clone()).collect();
            let dim = rank_of(&members, c.ambient_dim);
            Face {
                active_facets,
                generator_indices: j,
                ray_indices,
                dim,
            }
        })
        .collect();
    faces.sort_by(|a, b| {
        (a.dim, &a.generator_indices).cmp(&(b.dim, &b.generator_indices))
    });

    let mut hasse_edges = Vec::new();
    for (i, fi) in faces.iter().enumerate() {
        for (j, fj) in faces.iter().enumerate() {
            if i == j || !fi.generator_indices.is_subset(&fj.generator_indices) {
                continue;
            }
            if fi.generator_indices == fj.generator_indices {
                continue;
            }
            let skipped = faces.iter().enumerate().any(|(k, fk)| {
                k != i
                    && k != j
                    && fi.generator_indices.is_subset(&fk.generator_indices)
                    && fi.generator_indices != fk.generator_indices
                    && fk.generator_indices.is_subset(&fj.generator_indices)
                    && fk.generator_indices != fj.generator_indices
            });
            if !skipped {
                hasse_edges.push((i, j));
            }
        }
    }
    hasse_edges.sort();

    FaceLattice { faces, hasse_edges }
}

/// Smallest face containing the given generators, as a generator index set.
pub fn smallest_face_with_generators(c: &Cone, members: &BTreeSet<usize>) -> BTreeSet<usize> {
    let active: Vec<&IntVector> = c
        .facet_normals
        .iter()
        .filter(|f| members.iter().all(|&i| dot(f, &c.generators[i]).is_zero()))
        .collect();
    (0..c.generators.len())
        .filter(|&i| active.iter().all(|f| dot(f, &c.generators[i]).is_zero()))
        .collect()
}
