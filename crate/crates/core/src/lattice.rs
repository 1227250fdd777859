//! Subgroups of Z^p: canonical bases, integer kernels, and the two-way
//! conversion between generators and defining equations.
//!
//! A subgroup (lattice) is kept in a canonical form, the row-style Hermite
//! normal form of any generating set with zero rows dropped, which makes
//! equality decidable. Defining equations are a mix of congruences
//! `a.x = 0 mod d` (coefficients reduced into `{0..d-1}`, `d >= 2`) and
//! homogeneous linear equations; the representation is not unique, so
//! equality of systems is always solution-set equality.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::diophantine::{hilbert_basis, DiophantineSystem};
use crate::error::{Error, Result};
use crate::matrix::{dot, hnf, snf, Int, IntMatrix, IntVector};

/// Row basis of a subgroup `M <= Z^p`, canonicalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient_dim: usize,
    basis: Vec<IntVector>,
}

impl LatticeBasis {
    /// Canonicalizes an arbitrary generating set (rows may be dependent).
    pub fn from_generators(ambient_dim: usize, generators: &[IntVector]) -> Result<Self> {
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: g.len(),
                });
            }
        }
        let (h, _) = hnf(&IntMatrix::from_rows(ambient_dim, generators));
        let basis = (0..h.rows())
            .filter(|&i| !h.is_zero_row(i))
            .map(|i| h.row_vec(i))
            .collect();
        Ok(LatticeBasis { ambient_dim, basis })
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        LatticeBasis {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// The full lattice Z^p.
    pub fn full(ambient_dim: usize) -> Self {
        LatticeBasis {
            ambient_dim,
            basis: IntMatrix::identity(ambient_dim).row_vectors(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical (HNF) basis rows.
    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.ambient_dim, &self.basis)
    }

    /// Exact membership test by back-substitution against the HNF basis.
    pub fn contains(&self, x: &[Int]) -> bool {
        if x.len() != self.ambient_dim {
            return false;
        }
        let mut rem = x.to_vec();
        let mut row = 0;
        for col in 0..self.ambient_dim {
            let pivot_here = row < self.basis.len() && {
                let r = &self.basis[row];
                !r[col].is_zero() && r[..col].iter().all(Zero::is_zero)
            };
            if pivot_here {
                let (q, r) = rem[col].div_rem(&self.basis[row][col]);
                if !r.is_zero() {
                    return false;
                }
                if !q.is_zero() {
                    for (r, b) in rem[col..].iter_mut().zip(&self.basis[row][col..]) {
                        *r -= &q * b;
                    }
                }
                row += 1;
            } else if !rem[col].is_zero() {
                return false;
            }
        }
        rem.iter().all(Zero::is_zero)
    }

    /// True iff both bases generate the same subgroup.
    pub fn same_lattice(&self, other: &LatticeBasis) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        Ok(self.basis == other.basis)
    }
}

/// Congruence `coeffs . x = 0 (mod modulus)` with coefficients reduced into
/// `{0..modulus-1}` and `modulus >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub coeffs: IntVector,
    pub modulus: Int,
}

/// Mixed defining equations of a subgroup of Z^p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    ambient_dim: usize,
    congruences: Vec<Congruence>,
    linear_equations: Vec<IntVector>,
}

impl EquationSystem {
    /// Normalizing constructor: congruence coefficients are reduced modulo
    /// their modulus; a modulus of 1 imposes no constraint and is dropped;
    /// a modulus below 1 is rejected.
    pub fn new(
        ambient_dim: usize,
        congruences: Vec<(IntVector, Int)>,
        linear_equations: Vec<IntVector>,
    ) -> Result<Self> {
        let mut normalized = Vec::new();
        for (coeffs, modulus) in congruences {
            if coeffs.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: coeffs.len(),
                });
            }
            if modulus < Int::from(1) {
                return Err(Error::InvalidModulus(modulus.to_string()));
            }
            if modulus == Int::from(1) {
                continue;
            }
            let coeffs = coeffs.iter().map(|c| c.mod_floor(&modulus)).collect();
            normalized.push(Congruence { coeffs, modulus });
        }
        for eq in &linear_equations {
            if eq.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: eq.len(),
                });
            }
        }
        Ok(EquationSystem {
            ambient_dim,
            congruences: normalized,
            linear_equations,
        })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        EquationSystem {
            ambient_dim,
            congruences: Vec::new(),
            linear_equations: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn linear_equations(&self) -> &[IntVector] {
        &self.linear_equations
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty() && self.linear_equations.is_empty()
    }

    /// Exact satisfaction test for an integer vector.
    pub fn satisfied_by(&self, x: &[Int]) -> bool {
        x.len() == self.ambient_dim
            && self
                .congruences
                .iter()
                .all(|c| dot(&c.coeffs, x).mod_floor(&c.modulus).is_zero())
            && self.linear_equations.iter().all(|a| dot(a, x).is_zero())
    }
}

/// Integer kernel `{x in Z^cols : a x = 0}` of a matrix, as a canonical
/// lattice basis.
///
/// Computed from the Hermite form of the transpose: the transformation rows
/// that map to zero rows are exactly a basis of the kernel.
pub fn kernel_basis(a: &IntMatrix) -> LatticeBasis {
    let t = a.transpose();
    let (h, u) = hnf(&t);
    let rows: Vec<IntVector> = (0..h.rows())
        .filter(|&i| h.is_zero_row(i))
        .map(|i| u.row_vec(i))
        .collect();
    LatticeBasis::from_generators(a.cols(), &rows).expect("kernel rows have ambient length")
}

/// Defining equations of the subgroup generated by `m`, via the Smith normal
/// form: with `u B v = s`, an element `x` lies in M iff `x . v_i = 0 mod d_i`
/// for every nonzero invariant factor and `x . v_i = 0` for the rest.
/// Invariant factors equal to 1 impose nothing and produce no congruence.
/// The linear block is replaced by its canonical HNF basis (it spans exactly
/// the integer functionals vanishing on M).
pub fn generators_to_equations(m: &LatticeBasis) -> EquationSystem {
    let b = m.basis_matrix();
    let p = m.ambient_dim();
    let (s, _, v) = snf(&b);
    let mut congruences = Vec::new();
    for i in 0..p {
        let d = if i < b.rows().min(p) {
            s.at(i, i).clone()
        } else {
            Int::zero()
        };
        if d >= Int::from(2) {
            congruences.push((v.col_vec(i), d));
        }
    }
    let linear = kernel_basis(&b);
    EquationSystem::new(p, congruences, linear.basis().to_vec())
        .expect("normalized system is well formed")
}

/// The subgroup of Z^p solving `sys`. Congruences are internalized with one
/// integer slack each and the slack block is projected away.
pub fn equations_to_generators(sys: &EquationSystem) -> LatticeBasis {
    let p = sys.ambient_dim();
    let r = sys.congruences().len();
    let mut rows: Vec<IntVector> = Vec::new();
    for (k, c) in sys.congruences().iter().enumerate() {
        let mut row = c.coeffs.clone();
        row.resize(p + r, Int::zero());
        row[p + k] = -c.modulus.clone();
        rows.push(row);
    }
    for eq in sys.linear_equations() {
        let mut row = eq.clone();
        row.resize(p + r, Int::zero());
        rows.push(row);
    }
    let kernel = kernel_basis(&IntMatrix::from_rows(p + r, &rows));
    let projected: Vec<IntVector> = kernel
        .basis()
        .iter()
        .map(|x| x[..p].to_vec())
        .collect();
    LatticeBasis::from_generators(p, &projected).expect("projection keeps ambient length")
}

/// Intersection of M with the coordinate subspace `{x : x_i = 0 for i not in
/// keep}`, still embedded in Z^p. Indices are 0-based.
pub fn lattice_intersect_coords(
    m: &LatticeBasis,
    keep: &std::collections::BTreeSet<usize>,
) -> Result<LatticeBasis> {
    let p = m.ambient_dim();
    for &i in keep {
        if i >= p {
            return Err(Error::IndexOutOfRange(i + 1, p));
        }
    }
    let dropped: Vec<usize> = (0..p).filter(|i| !keep.contains(i)).collect();
    let b = m.basis_matrix();
    // Combinations y of basis rows whose dropped coordinates vanish:
    // the kernel of the dropped-column block, transposed so combinations are
    // column vectors.
    let block_rows: Vec<IntVector> = dropped
        .iter()
        .map(|&j| b.col_vec(j))
        .collect();
    let block = IntMatrix::from_rows(b.rows(), &block_rows);
    let combos = kernel_basis(&block);
    let rows: Vec<IntVector> = combos
        .basis()
        .iter()
        .map(|y| {
            let mut acc = vec![Int::zero(); p];
            for (coef, row) in y.iter().zip(m.basis()) {
                for (a, x) in acc.iter_mut().zip(row) {
                    *a += coef * x;
                }
            }
            acc
        })
        .collect();
    LatticeBasis::from_generators(p, &rows)
}

/// True iff `M` meets `N^p` only in the origin, decided by asking for a
/// nonzero nonnegative solution of M's defining equations.
pub fn is_reduced(m: &LatticeBasis) -> bool {
    let eqs = generators_to_equations(m);
    let mut sys = DiophantineSystem::new(m.ambient_dim());
    for c in eqs.congruences() {
        sys.add_congruence(c.coeffs.clone(), c.modulus.clone())
            .expect("normalized congruence");
    }
    for eq in eqs.linear_equations() {
        sys.add_equality(eq.clone()).expect("matching length");
    }
    hilbert_basis(&sys).is_empty()
}

/// A strictly positive vector orthogonal to every element of M, when one
/// exists; such a vector exists iff M is reduced. Computed as the sum of the
/// Hilbert basis of `{b in N^p : b . m = 0 for all basis m}`.
pub fn positive_orthogonal_witness(m: &LatticeBasis) -> Option<IntVector> {
    let p = m.ambient_dim();
    let mut sys = DiophantineSystem::new(p);
    for row in m.basis() {
        sys.add_equality(row.clone()).expect("matching length");
    }
    let basis = hilbert_basis(&sys);
    let mut sum = vec![Int::zero(); p];
    for e in basis.elements() {
        for (s, x) in sum.iter_mut().zip(e) {
            *s += x;
        }
    }
    sum.iter().all(Signed::is_positive).then_some(sum)
}
