//! Divisor-closed submonoid lattices for affine semigroups and presented
//! reduced monoids, factorizations, Delta sets, and the set of minimal
//! distances.
//!
//! The affine route identifies divisor-closed submonoids with the faces of
//! the cone spanned by the generators: the submonoid attached to a face is
//! generated by exactly the generators lying on it. The presentation route
//! normalizes the defining equations into a nonnegative matrix `A`, reads
//! off an affine model `H` from the columns of `A` together with the
//! reduction map onto the original monoid, and keeps the faces whose
//! projection stays divisor-closed. The projection check is decided on the
//! Hilbert basis of a homogeneous system: a pair `(x, y)` with `y` supported
//! on the face solves the system iff `x` and `y` represent elements with the
//! same image, so the projection fails to be divisor-closed exactly when a
//! solution puts positive weight outside the face, and it suffices to
//! inspect the minimal solutions.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cone::{
    cone_from_generators, enumerate_faces, smallest_face_with_generators, Cone, FaceLattice,
};
use crate::diophantine::{exists_solution_with_support_outside, DiophantineSystem};
use crate::error::{Error, Result};
use crate::lattice::{
    generators_to_equations, is_reduced, lattice_intersect_coords, positive_orthogonal_witness,
    EquationSystem, LatticeBasis,
};
use crate::matrix::{dot, Int, IntMatrix, IntVector};

/// Finitely generated submonoid of N^n, given by an ordered generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSemigroup {
    ambient_dim: usize,
    generators: Vec<IntVector>,
}

impl AffineSemigroup {
    pub fn new(ambient_dim: usize, generators: Vec<IntVector>) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: g.len(),
                });
            }
            if g.iter().any(Signed::is_negative) {
                return Err(Error::NegativeGenerator);
            }
            if g.iter().all(Zero::is_zero) {
                return Err(Error::ZeroGenerator);
            }
        }
        Ok(AffineSemigroup {
            ambient_dim,
            generators,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        AffineSemigroup::new(
            n,
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn cone(&self) -> Cone {
        cone_from_generators(self.ambient_dim, &self.generators)
            .expect("generators validated at construction")
    }

    /// The relation lattice of the generator list: the integer kernel of the
    /// matrix whose columns are the generators.
    pub fn defining_lattice(&self) -> LatticeBasis {
        let cols = IntMatrix::from_rows(self.ambient_dim, &self.generators).transpose();
        crate::lattice::kernel_basis(&cols)
    }
}

/// A monoid `N^p / ~_M` given by the subgroup `M <= Z^p`, either as a basis
/// or as defining equations.
#[derive(Debug, Clone)]
pub struct MonoidPresentation {
    p: usize,
    lattice: LatticeBasis,
    equations: EquationSystem,
}

impl MonoidPresentation {
    pub fn from_group_generators(p: usize, generators: &[IntVector]) -> Result<Self> {
        let lattice = LatticeBasis::from_generators(p, generators)?;
        let equations = generators_to_equations(&lattice);
        Ok(MonoidPresentation {
            p,
            lattice,
            equations,
        })
    }

    pub fn from_lattice(lattice: LatticeBasis) -> Self {
        let equations = generators_to_equations(&lattice);
        MonoidPresentation {
            p: lattice.ambient_dim(),
            lattice,
            equations,
        }
    }

    pub fn from_equations(sys: EquationSystem) -> Self {
        let lattice = crate::lattice::equations_to_generators(&sys);
        // re-derived canonical equations keep the whole pipeline deterministic
        let equations = generators_to_equations(&lattice);
        MonoidPresentation {
            p: sys.ambient_dim(),
            lattice,
            equations,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }

    pub fn equations(&self) -> &EquationSystem {
        &self.equations
    }

    pub fn is_reduced(&self) -> bool {
        is_reduced(&self.lattice)
    }
}

/// The nonnegative normalization of the defining equations, the affine
/// semigroup generated by its columns, and the data of the reduction map
/// back onto the presented monoid.
#[derive(Debug, Clone)]
pub struct AffineModel {
    a_matrix: IntMatrix,
    moduli: Vec<Int>,
    free_rows: usize,
    semigroup: AffineSemigroup,
    witness_b: IntVector,
    lattice: LatticeBasis,
}

impl AffineModel {
    pub fn a_matrix(&self) -> &IntMatrix {
        &self.a_matrix
    }

    /// Moduli of the congruence rows, in row order.
    pub fn moduli(&self) -> &[Int] {
        &self.moduli
    }

    /// Number of free (non-modular) coordinates.
    pub fn free_coords(&self) -> usize {
        self.free_rows
    }

    /// The affine semigroup generated by the columns of the matrix.
    pub fn semigroup(&self) -> &AffineSemigroup {
        &self.semigroup
    }

    pub fn witness(&self) -> &IntVector {
        &self.witness_b
    }

    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }
}

/// Normalizes the defining equations of a reduced presentation into a
/// nonnegative matrix and packages the column semigroup.
///
/// Congruence rows are already reduced into `{0..d-1}`. Each linear row gets
/// the smallest multiple of a strictly positive vector orthogonal to M added
/// that clears its negative entries; orthogonality keeps the solution set,
/// and a rank check guards against the degenerate multiples that would drop
/// a row (bumping any single multiplier restores independence).
pub fn build_affine_model(pres: &MonoidPresentation) -> Result<AffineModel> {
    if !pres.is_reduced() {
        return Err(Error::NotReduced);
    }
    let m = pres.lattice();
    let p = pres.p();
    let witness = positive_orthogonal_witness(m).ok_or_else(|| {
        Error::Internal("no positive orthogonal vector for a reduced presentation".into())
    })?;
    let sys = pres.equations();
    let linear = sys.linear_equations();
    let k = linear.len();

    let base: Vec<Int> = linear
        .iter()
        .map(|row| {
            row.iter()
                .zip(&witness)
                .map(|(a, b)| {
                    if a.is_negative() {
                        (-a).div_ceil(b)
                    } else {
                        Int::zero()
                    }
                })
                .max()
                .unwrap_or_else(Int::zero)
        })
        .collect();
    let normalized_rows = |mult: &[Int]| -> Vec<IntVector> {
        linear
            .iter()
            .zip(mult)
            .map(|(row, lambda)| {
                row.iter()
                    .zip(&witness)
                    .map(|(a, b)| a + lambda * b)
                    .collect()
            })
            .collect()
    };
    let full_rank = |rows: &[IntVector]| IntMatrix::from_rows(p, rows).rank() == k;

    let mut candidates: Vec<Vec<Int>> = vec![base.clone()];
    for i in 0..k {
        for bump in 1..=2 {
            let mut c = base.clone();
            c[i] += bump;
            candidates.push(c);
        }
    }
    let normalized = candidates
        .into_iter()
        .map(|mult| normalized_rows(&mult))
        .find(|rows| full_rank(rows))
        .ok_or_else(|| Error::Internal("row normalization lost rank".into()))?;

    let mut rows: Vec<IntVector> = Vec::new();
    let mut moduli = Vec::new();
    for c in sys.congruences() {
        rows.push(c.coeffs.clone());
        moduli.push(c.modulus.clone());
    }
    rows.extend(normalized);
    let a_matrix = IntMatrix::from_rows(p, &rows);
    let columns: Vec<IntVector> = (0..p).map(|j| a_matrix.col_vec(j)).collect();
    let semigroup = AffineSemigroup::new(rows.len(), columns)
        .map_err(|e| Error::Internal(format!("degenerate model column: {e}")))?;

    Ok(AffineModel {
        a_matrix,
        moduli,
        free_rows: k,
        semigroup,
        witness_b: witness,
        lattice: m.clone(),
    })
}

/// One divisor-closed submonoid, as the set of generator indices lying on
/// the associated face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCSubmonoid {
    pub generator_indices: BTreeSet<usize>,
    pub face_ref: Option<usize>,
}

/// The finite lattice of divisor-closed submonoids, with covering edges.
#[derive(Debug, Clone)]
pub struct DCLattice {
    pub nodes: Vec<DCSubmonoid>,
    pub hasse_edges: Vec<(usize, usize)>,
}

fn covering_edges(sets: &[&BTreeSet<usize>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i == j || !a.is_subset(b) || a == b {
                continue;
            }
            let skipped = sets.iter().enumerate().any(|(k, c)| {
                k != i && k != j && a.is_subset(c) && *a != *c && c.is_subset(b) && *c != *b
            });
            if !skipped {
                edges.push((i, j));
            }
        }
    }
    edges.sort();
    edges
}

/// Lattice of divisor-closed submonoids of an affine semigroup: one node per
/// face, holding the generators on that face.
pub fn dc_lattice_affine(h: &AffineSemigroup) -> DCLattice {
    let face_lattice = enumerate_faces(&h.cone());
    dc_lattice_from_faces(&face_lattice)
}

fn dc_lattice_from_faces(face_lattice: &FaceLattice) -> DCLattice {
    let mut nodes: Vec<DCSubmonoid> = Vec::new();
    for (idx, face) in face_lattice.faces.iter().enumerate() {
        // distinct faces carry distinct generator sets; merge if not
        if nodes
            .iter()
            .any(|n| n.generator_indices == face.generator_indices)
        {
            continue;
        }
        nodes.push(DCSubmonoid {
            generator_indices: face.generator_indices.clone(),
            face_ref: Some(idx),
        });
    }
    let sets: Vec<&BTreeSet<usize>> = nodes.iter().map(|n| &n.generator_indices).collect();
    let hasse_edges = covering_edges(&sets);
    DCLattice { nodes, hasse_edges }
}

/// True iff a sum of two semigroup elements can only land in the submonoid
/// generated by `members` when both addends are already inside.
fn monoid_contains(generators: &[IntVector], target: &IntVector) -> bool {
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    let fits = |x: &IntVector| x.iter().zip(target).all(|(a, b)| a <= b);
    let mut reached: BTreeSet<IntVector> = BTreeSet::new();
    let zero: IntVector = vec![Int::zero(); target.len()];
    let mut queue = vec![zero.clone()];
    reached.insert(zero);
    while let Some(x) = queue.pop() {
        for g in generators {
            let next: IntVector = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if !fits(&next) {
                continue;
            }
            if next == *target {
                return true;
            }
            if reached.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    false
}

/// Decides divisor-closedness of the submonoid generated by the indexed
/// generators: it must coincide, as a submonoid, with the full generator set
/// of the smallest face containing it.
pub fn is_divisor_closed_affine(h: &AffineSemigroup, j: &BTreeSet<usize>) -> Result<bool> {
    let p = h.generators.len();
    for &i in j {
        if i >= p {
            return Err(Error::IndexOutOfRange(i + 1, p));
        }
    }
    let cone = h.cone();
    let face_set = smallest_face_with_generators(&cone, j);
    if face_set == *j {
        return Ok(true);
    }
    let chosen: Vec<IntVector> = j.iter().map(|&i| h.generators[i].clone()).collect();
    Ok(face_set
        .iter()
        .filter(|i| !j.contains(i))
        .all(|&i| monoid_contains(&chosen, &h.generators[i])))
}

/// Expands `j` to the generator set of its face, failing when the indexed
/// submonoid is not divisor-closed.
fn face_generator_set(h: &AffineSemigroup, j: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    if !is_divisor_closed_affine(h, j)? {
        return Err(Error::NotDivisorClosed);
    }
    Ok(smallest_face_with_generators(&h.cone(), j))
}

/// Decides whether the projection of the face submonoid `S` stays
/// divisor-closed in the presented monoid (see the module notes for why the
/// homogeneous system below captures the fiber condition).
pub fn check_dc_projection(model: &AffineModel, j: &BTreeSet<usize>) -> Result<bool> {
    let face_set = face_generator_set(&model.semigroup, j)?;
    Ok(check_dc_projection_on_face(model, &face_set))
}

fn check_dc_projection_on_face(model: &AffineModel, face_set: &BTreeSet<usize>) -> bool {
    let p = model.a_matrix.cols();
    let r = model.moduli.len();
    let members: Vec<usize> = face_set.iter().copied().collect();
    let mut sys = DiophantineSystem::new(p + members.len());
    for i in 0..model.a_matrix.rows() {
        let mut coeffs: IntVector = model.a_matrix.row_vec(i);
        coeffs.extend(members.iter().map(|&jj| -model.a_matrix.at(i, jj)));
        if i < r {
            sys.add_congruence(coeffs, model.moduli[i].clone())
                .expect("modulus validated at model construction");
        } else {
            sys.add_equality(coeffs).expect("matching length");
        }
    }
    let designated: Vec<usize> = (0..p).collect();
    !exists_solution_with_support_outside(&sys, &designated, face_set)
}

/// Lattice of divisor-closed submonoids of the presented monoid: faces of
/// the model whose projection passes the fiber check, indexed by the
/// original generators.
pub fn dc_lattice_model(model: &AffineModel) -> DCLattice {
    let affine = dc_lattice_affine(&model.semigroup);
    let nodes: Vec<DCSubmonoid> = affine
        .nodes
        .into_iter()
        .filter(|n| check_dc_projection_on_face(model, &n.generator_indices))
        .collect();
    let sets: Vec<&BTreeSet<usize>> = nodes.iter().map(|n| &n.generator_indices).collect();
    let hasse_edges = covering_edges(&sets);
    DCLattice { nodes, hasse_edges }
}

pub fn dc_lattice_presentation(pres: &MonoidPresentation) -> Result<DCLattice> {
    let model = build_affine_model(pres)?;
    Ok(dc_lattice_model(&model))
}

/// All factorizations of the element represented by `x0`: the vectors of
/// `N^p` congruent to `x0` modulo M. A strictly positive vector orthogonal
/// to M bounds the search region exactly (its pairing is constant on the
/// whole congruence class), so the enumeration is complete.
pub fn enumerate_factorizations(
    pres: &MonoidPresentation,
    x0: &IntVector,
) -> Result<BTreeSet<IntVector>> {
    let p = pres.p();
    if x0.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            got: x0.len(),
        });
    }
    if x0.iter().any(Signed::is_negative) {
        return Err(Error::NegativeGenerator);
    }
    let m = pres.lattice();
    let witness = positive_orthogonal_witness(m).ok_or(Error::NotReduced)?;
    let budget = dot(&witness, x0);

    let mut out: BTreeSet<IntVector> = BTreeSet::new();
    let mut current: IntVector = Vec::with_capacity(p);
    fn search(
        witness: &[Int],
        budget: Int,
        current: &mut IntVector,
        m: &LatticeBasis,
        x0: &IntVector,
        out: &mut BTreeSet<IntVector>,
    ) {
        let i = current.len();
        if i + 1 == witness.len() {
            let (q, rem) = budget.div_rem(&witness[i]);
            if rem.is_zero() && !q.is_negative() {
                current.push(q);
                let diff: IntVector = current.iter().zip(x0).map(|(a, b)| a - b).collect();
                if m.contains(&diff) {
                    out.insert(current.clone());
                }
                current.pop();
            }
            return;
        }
        let mut t = Int::zero();
        loop {
            let used = &t * &witness[i];
            if used > budget {
                break;
            }
            current.push(t.clone());
            search(witness, &budget - used, current, m, x0, out);
            current.pop();
            t += 1;
        }
    }
    if p > 0 {
        search(&witness, budget, &mut current, m, x0, &mut out);
    } else {
        out.insert(Vec::new());
    }
    Ok(out)
}

/// Gaps between consecutive factorization lengths of the element
/// represented by `x0`.
pub fn delta_set_of_element(pres: &MonoidPresentation, x0: &IntVector) -> Result<BTreeSet<Int>> {
    let lengths: BTreeSet<Int> = enumerate_factorizations(pres, x0)?
        .iter()
        .map(|x| x.iter().sum())
        .collect();
    let sorted: Vec<&Int> = lengths.iter().collect();
    Ok(sorted.windows(2).map(|w| w[1] - w[0]).collect())
}

/// `min Delta` of the submonoid on the generator subset `j`, by the gcd of
/// the coordinate sums of a basis of `M` intersected with the subset's
/// coordinate subspace. `None` encodes an empty Delta set.
fn min_delta_from_lattice(m: &LatticeBasis, j: &BTreeSet<usize>) -> Result<Option<Int>> {
    let group = lattice_intersect_coords(m, j)?;
    let mut g = Int::zero();
    for row in group.basis() {
        let total: Int = row.iter().sum();
        g = g.gcd(&total);
    }
    Ok((!g.is_zero()).then_some(g))
}

/// Report pairing each divisor-closed submonoid with its minimal distance.
#[derive(Debug, Clone)]
pub struct DeltaStarReport {
    pub per_submonoid: Vec<(DCSubmonoid, Option<Int>)>,
    pub delta_star: BTreeSet<Int>,
}

fn report_from(m: &LatticeBasis, dc: DCLattice) -> Result<DeltaStarReport> {
    let mut per_submonoid = Vec::new();
    let mut delta_star = BTreeSet::new();
    for node in dc.nodes {
        let d = min_delta_from_lattice(m, &node.generator_indices)?;
        if let Some(v) = &d {
            delta_star.insert(v.clone());
        }
        per_submonoid.push((node, d));
    }
    // the minimum over all submonoids is attained by the whole monoid, whose
    // relation group contains every restricted one
    debug_assert!({
        let full = per_submonoid
            .iter()
            .max_by_key(|(n, _)| n.generator_indices.len())
            .and_then(|(_, d)| d.clone());
        match (&full, delta_star.iter().next()) {
            (Some(f), Some(min)) => f == min,
            (None, None) => true,
            _ => false,
        }
    });
    Ok(DeltaStarReport {
        per_submonoid,
        delta_star,
    })
}

pub fn min_delta_submonoid_affine(
    h: &AffineSemigroup,
    j: &BTreeSet<usize>,
) -> Result<Option<Int>> {
    if !is_divisor_closed_affine(h, j)? {
        return Err(Error::NotDivisorClosed);
    }
    min_delta_from_lattice(&h.defining_lattice(), j)
}

pub fn min_delta_submonoid(pres: &MonoidPresentation, j: &BTreeSet<usize>) -> Result<Option<Int>> {
    let model = build_affine_model(pres)?;
    if !is_divisor_closed_affine(model.semigroup(), j)? {
        return Err(Error::NotDivisorClosed);
    }
    min_delta_from_lattice(pres.lattice(), j)
}

/// Set of minimal distances of an affine semigroup.
pub fn delta_star_affine(h: &AffineSemigroup) -> Result<DeltaStarReport> {
    report_from(&h.defining_lattice(), dc_lattice_affine(h))
}

/// Set of minimal distances of a presented reduced monoid.
pub fn delta_star_presentation(pres: &MonoidPresentation) -> Result<DeltaStarReport> {
    let model = build_affine_model(pres)?;
    report_from(pres.lattice(), dc_lattice_model(&model))
}
