//! Minimal nonnegative solutions of homogeneous linear Diophantine systems.
//!
//! The solver is a completion search in the style of Contejean and Devie:
//! starting from the unit vectors, a partial solution `x` is extended by
//! `e_i` only when the step moves the constraint value `A*x` towards the
//! origin, i.e. `(A*x) . (A*e_i) < 0`, and extensions dominating an already
//! found solution are pruned. The search is exact and complete; callers are
//! expected to keep the number of unknowns at desk scale (n <~ 20).
//!
//! Inequalities `a.x <= 0` are turned into equalities with one nonnegative
//! slack each. A congruence `a.x = 0 mod d` gets a slack `t` split into a
//! nonnegative difference pair, `a.x - d*t+ + d*t- = 0`. Slack coordinates
//! are projected away afterwards and the projection is re-minimized.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{dot, Int, IntMatrix, IntVector};

/// Homogeneous system over unknowns `x in N^n`. The zero vector is always a
/// solution.
#[derive(Debug, Clone)]
pub struct DiophantineSystem {
    unknowns: usize,
    equalities: Vec<IntVector>,
    inequalities: Vec<IntVector>,
    congruences: Vec<(IntVector, Int)>,
}

impl DiophantineSystem {
    pub fn new(unknowns: usize) -> Self {
        DiophantineSystem {
            unknowns,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            congruences: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Adds `coeffs . x = 0`.
    pub fn add_equality(&mut self, coeffs: IntVector) -> Result<()> {
        self.check_len(coeffs.len())?;
        self.equalities.push(coeffs);
        Ok(())
    }

    /// Adds `coeffs . x <= 0`.
    pub fn add_inequality(&mut self, coeffs: IntVector) -> Result<()> {
        self.check_len(coeffs.len())?;
        self.inequalities.push(coeffs);
        Ok(())
    }

    /// Adds `coeffs . x = 0 (mod modulus)` with `modulus >= 2`.
    pub fn add_congruence(&mut self, coeffs: IntVector, modulus: Int) -> Result<()> {
        self.check_len(coeffs.len())?;
        if modulus < Int::from(2) {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        self.congruences.push((coeffs, modulus));
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.unknowns {
            return Err(Error::DimensionMismatch {
                expected: self.unknowns,
                got: len,
            });
        }
        Ok(())
    }

    /// Exact satisfaction test for a nonnegative vector.
    pub fn is_solution(&self, x: &[Int]) -> bool {
        if x.len() != self.unknowns || x.iter().any(Signed::is_negative) {
            return false;
        }
        self.equalities.iter().all(|a| dot(a, x).is_zero())
            && self.inequalities.iter().all(|a| !dot(a, x).is_positive())
            && self
                .congruences
                .iter()
                .all(|(a, d)| num_integer::Integer::mod_floor(&dot(a, x), d).is_zero())
    }
}

/// The finite set of componentwise-minimal nonzero solutions. Every solution
/// of the originating system is an N-linear combination of the elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    elements: Vec<IntVector>,
}

impl HilbertBasis {
    pub fn elements(&self) -> &[IntVector] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }
}

fn dominates(x: &[Int], y: &[Int]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

/// Minimal nonzero solutions of `A x = 0`, `x in N^n`, rows of `a` as
/// constraints. Output sorted lexicographically.
fn minimal_equality_solutions(a: &[IntVector], n: usize) -> Vec<IntVector> {
    let column: Vec<IntVector> = (0..n)
        .map(|i| a.iter().map(|row| row[i].clone()).collect())
        .collect();
    let mut basis: Vec<IntVector> = Vec::new();
    // Frontier keyed by the partial solution, value = A*x; BFS by level keeps
    // same-sum duplicates merged and makes the domination prune sound.
    let mut frontier: BTreeMap<IntVector, IntVector> = BTreeMap::new();
    for i in 0..n {
        let mut e = vec![Int::zero(); n];
        e[i] = Int::one();
        frontier.insert(e, column[i].clone());
    }
    while !frontier.is_empty() {
        for (x, v) in &frontier {
            if v.iter().all(Zero::is_zero) {
                basis.push(x.clone());
            }
        }
        let mut next: BTreeMap<IntVector, IntVector> = BTreeMap::new();
        for (x, v) in &frontier {
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            for i in 0..n {
                if !dot(v, &column[i]).is_negative() {
                    continue;
                }
                let mut x2 = x.clone();
                x2[i] += 1;
                if basis.iter().any(|b| dominates(&x2, b)) {
                    continue;
                }
                if next.contains_key(&x2) {
                    continue;
                }
                let v2 = v.iter().zip(&column[i]).map(|(a, b)| a + b).collect();
                next.insert(x2, v2);
            }
        }
        frontier = next;
    }
    basis.sort();
    basis
}

fn minimalize(mut elems: Vec<IntVector>) -> Vec<IntVector> {
    elems.sort();
    elems.dedup();
    let keep: Vec<bool> = elems
        .iter()
        .enumerate()
        .map(|(i, x)| {
            !elems
                .iter()
                .enumerate()
                .any(|(j, y)| j != i && dominates(x, y) && x != y)
        })
        .collect();
    elems
        .into_iter()
        .zip(keep)
        .filter_map(|(x, k)| k.then_some(x))
        .collect()
}

/// Computes the Hilbert basis of `sys`: the minimal generating set of the
/// solution monoid.
///
/// Minimality is taken over the unknowns together with the inequality
/// slacks. The slacks are determined by the unknowns (`s = -a.x`), and on
/// that block the solution monoid is closed under dominated differences, so
/// the componentwise-minimal elements are exactly the irreducible ones; the
/// congruence slack pairs carry no information and are projected away first.
/// For systems without inequalities this is plain componentwise minimality.
pub fn hilbert_basis(sys: &DiophantineSystem) -> HilbertBasis {
    let n = sys.unknowns;
    let keep = n + sys.inequalities.len();
    let n_ext = keep + 2 * sys.congruences.len();
    let mut rows: Vec<IntVector> = Vec::new();
    for eq in &sys.equalities {
        let mut row = eq.clone();
        row.resize(n_ext, Int::zero());
        rows.push(row);
    }
    for (k, ineq) in sys.inequalities.iter().enumerate() {
        let mut row = ineq.clone();
        row.resize(n_ext, Int::zero());
        row[n + k] = Int::one();
        rows.push(row);
    }
    for (k, (coeffs, d)) in sys.congruences.iter().enumerate() {
        let mut row = coeffs.clone();
        row.resize(n_ext, Int::zero());
        row[keep + 2 * k] = -d.clone();
        row[keep + 2 * k + 1] = d.clone();
        rows.push(row);
    }
    let extended = minimal_equality_solutions(&rows, n_ext);
    let projected: Vec<IntVector> = extended
        .into_iter()
        .map(|x| x[..keep].to_vec())
        .filter(|x| x.iter().any(|c| !c.is_zero()))
        .collect();
    let mut elements: Vec<IntVector> = minimalize(projected)
        .into_iter()
        .map(|x| x[..n].to_vec())
        .collect();
    elements.sort();
    debug_assert!(elements.iter().all(|e| sys.is_solution(e)));
    HilbertBasis { elements }
}

/// Minimal generating set of the monoid `{x in N^n : a x <= 0}` (rows of `a`
/// as inequalities).
pub fn cone_lattice_generators(a: &IntMatrix) -> HilbertBasis {
    let mut sys = DiophantineSystem::new(a.cols());
    for i in 0..a.rows() {
        sys.add_inequality(a.row_vec(i)).expect("row length matches");
    }
    hilbert_basis(&sys)
}

/// Decides whether some solution has `x_j > 0` for a designated unknown `j`
/// outside `inside`. Since every solution is an N-sum of Hilbert basis
/// elements, this holds iff some basis element has such support.
pub fn exists_solution_with_support_outside(
    sys: &DiophantineSystem,
    designated: &[usize],
    inside: &BTreeSet<usize>,
) -> bool {
    let forbidden: Vec<usize> = designated
        .iter()
        .copied()
        .filter(|j| !inside.contains(j))
        .collect();
    if forbidden.is_empty() {
        return false;
    }
    let basis = hilbert_basis(sys);
    basis
        .elements()
        .iter()
        .any(|e| forbidden.iter().any(|&j| e[j].is_positive()))
}
