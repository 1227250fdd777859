//! Arbitrary-precision integer vectors and matrices, plus the two unimodular
//! normal forms (Hermite and Smith) everything else is built on.
//!
//! All arithmetic is exact; there is no fixed-width fast path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact integer scalar used throughout the crate.
pub type Int = BigInt;

/// Dense integer vector.
pub type IntVector = Vec<Int>;

/// Dense row-major integer matrix. Zero rows and zero columns are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::from(1));
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    /// `cols` disambiguates the row length when `rows` is empty.
    pub fn from_rows(cols: usize, rows: &[IntVector]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row in matrix constructor");
            entries.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let converted: Vec<IntVector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect();
        IntMatrix::from_rows(cols, &converted)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> IntVector {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * x` with `x` a column vector.
    pub fn mul_vec(&self, x: &[Int]) -> IntVector {
        assert_eq!(self.cols, x.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// Row operation `row[dst] += k * row[src]`.
    pub fn add_scaled_row(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(dst, c) + k * self.at(src, c);
            self.set(dst, c, v);
        }
    }

    /// Column operation `col[dst] += k * col[src]`.
    pub fn add_scaled_col(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, dst) + k * self.at(r, src);
            self.set(r, dst, v);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c);
            self.set(i, c, v);
        }
    }

    /// Rank over the rationals, computed from the Hermite form.
    pub fn rank(&self) -> usize {
        let (h, _) = hnf(self);
        (0..h.rows()).filter(|&i| !h.is_zero_row(i)).count()
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dimension mismatch in dot product");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides a nonzero vector by the gcd of its entries. The zero vector is
/// returned unchanged; the sign is kept.
pub fn primitive_part(v: &[Int]) -> IntVector {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular, `u * m = h`, pivots positive, the
/// entries above each pivot reduced into `[0, pivot)`, and zero rows last.
/// The rows of `h` generate the same row lattice as the rows of `m`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let (mut r, mut c) = (0, 0);
    while r < h.rows() && c < h.cols() {
        let pivot = (r..h.rows())
            .filter(|&i| !h.at(i, c).is_zero())
            .min_by_key(|&i| (h.at(i, c).abs(), i));
        let Some(pivot) = pivot else {
            c += 1;
            continue;
        };
        h.swap_rows(r, pivot);
        u.swap_rows(r, pivot);
        for i in r + 1..h.rows() {
            if h.at(i, c).is_zero() {
                continue;
            }
            let q = -h.at(i, c).div_floor(h.at(r, c));
            h.add_scaled_row(i, r, &q);
            u.add_scaled_row(i, r, &q);
        }
        // Flooring leaves remainders in [0, |pivot|); repeat on the same
        // column until everything below the pivot is zero.
        if (r + 1..h.rows()).any(|i| !h.at(i, c).is_zero()) {
            continue;
        }
        if h.at(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.at(i, c).div_floor(h.at(r, c));
            h.add_scaled_row(i, r, &q);
            u.add_scaled_row(i, r, &q);
        }
        r += 1;
        c += 1;
    }
    (h, u)
}

/// Smith normal form.
///
/// Returns `(s, u, v)` with `u`, `v` unimodular, `u * m * v = s`, and `s`
/// diagonal with nonnegative invariant factors `d1 | d2 | ...`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());
    let mut t = 0;
    'outer: while t < n {
        // Bring a minimal-magnitude nonzero entry of the trailing block to (t, t).
        let pivot = (t..s.rows())
            .flat_map(|i| (t..s.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| !s.at(i, j).is_zero())
            .min_by_key(|&(i, j)| (s.at(i, j).abs(), i, j));
        let Some((pi, pj)) = pivot else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            for i in t + 1..s.rows() {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let q = -s.at(i, t).div_floor(s.at(t, t));
                s.add_scaled_row(i, t, &q);
                u.add_scaled_row(i, t, &q);
            }
            if let Some(i) = (t + 1..s.rows())
                .filter(|&i| !s.at(i, t).is_zero())
                .min_by_key(|&i| (s.at(i, t).abs(), i))
            {
                s.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            for j in t + 1..s.cols() {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let q = -s.at(t, j).div_floor(s.at(t, t));
                s.add_scaled_col(j, t, &q);
                v.add_scaled_col(j, t, &q);
            }
            if let Some(j) = (t + 1..s.cols())
                .filter(|&j| !s.at(t, j).is_zero())
                .min_by_key(|&j| (s.at(t, j).abs(), j))
            {
                s.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            break;
        }
        // The pivot must divide every entry of the trailing block; if not,
        // mix the offending row in and reduce again.
        for i in t + 1..s.rows() {
            for j in t + 1..s.cols() {
                if !s.at(i, j).mod_floor(s.at(t, t)).is_zero() {
                    let one = Int::from(1);
                    s.add_scaled_row(t, i, &one);
                    u.add_scaled_row(t, i, &one);
                    continue 'outer;
                }
            }
        }
        if s.at(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    (s, u, v)
}
