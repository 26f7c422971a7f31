//! Dense complex linear algebra for the tiny matrices this crate needs.
//!
//! Everything is built around cyclic complex Jacobi rotations: a 4×4
//! Hermitian eigensolver, a PSD square root, and singular values obtained
//! from the Hermitian Jordan–Wielandt embedding. A dynamically sized
//! [`CMatrix`] shares the same Jacobi core and is used for the 8×8 embedding
//! and for Löwdin orthonormalisation.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Four-component ket in the `{uu, uv, vu, vv}` product basis.
pub type Ket4 = [C64; 4];

const JACOBI_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;
const HERMITIAN_TOL: f64 = 1e-10;
const PSD_CLAMP: f64 = 1e-10;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Row-major 4×4 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex4x4(pub [[C64; 4]; 4]);

impl Default for Complex4x4 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Complex4x4 {
    pub fn zeros() -> Self {
        Self([[C64::new(0.0, 0.0); 4]; 4])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { re(1.0) } else { re(0.0) })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn diag(d: [f64; 4]) -> Self {
        Self::from_fn(|i, j| if i == j { re(d[i]) } else { re(0.0) })
    }

    /// `|ψ⟩⟨ψ|` without normalisation.
    pub fn outer(psi: &Ket4) -> Self {
        Self::from_fn(|i, j| psi[i] * psi[j].conj())
    }

    /// Kronecker product of two 2×2 matrices, first factor on the left qubit.
    pub fn kron(a: &[[C64; 2]; 2], b: &[[C64; 2]; 2]) -> Self {
        Self::from_fn(|i, j| a[i / 2][j / 2] * b[i % 2][j % 2])
    }

    /// `σ_y ⊗ σ_y`, which is real: antidiagonal `(-1, 1, 1, -1)`.
    pub fn sigma_yy() -> Self {
        let sy = [[re(0.0), c(0.0, -1.0)], [c(0.0, 1.0), re(0.0)]];
        Self::kron(&sy, &sy)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn conjugate(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// `max |H - H†|` elementwise.
    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn determinant(&self) -> C64 {
        // Gaussian elimination with partial pivoting.
        let mut a = self.0;
        let mut det = re(1.0);
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap();
            if a[pivot][col].norm() == 0.0 {
                return re(0.0);
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..4 {
                let f = a[row][col] / a[col][col];
                for k in col..4 {
                    let v = a[col][k];
                    a[row][k] -= f * v;
                }
            }
        }
        det
    }

    pub fn to_dynamic(self) -> CMatrix {
        CMatrix::from_fn(4, |i, j| self.0[i][j])
    }

    fn from_dynamic(m: &CMatrix) -> Self {
        debug_assert_eq!(m.n, 4);
        Self::from_fn(|i, j| m[(i, j)])
    }
}

impl Index<(usize, usize)> for Complex4x4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Complex4x4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Mul for Complex4x4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.matmul(&rhs)
    }
}

impl Add for Complex4x4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl Sub for Complex4x4 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

/// Square complex matrix of arbitrary order, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![re(0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { re(1.0) } else { re(0.0) })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        Self::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigendecomposition of a 4×4 Hermitian matrix. Eigenvalues are in
/// descending order and column `k` of `vectors` belongs to `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub values: [f64; 4],
    pub vectors: Complex4x4,
    pub sweeps: usize,
}

/// Same as [`EigenResult`] for any order.
#[derive(Debug, Clone, PartialEq)]
pub struct DynEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
    pub sweeps: usize,
    /// Off-diagonal Frobenius norm before the first sweep and after each one.
    pub off_norms: Vec<f64>,
}

/// Cyclic-by-rows complex Jacobi eigensolver for Hermitian input of any order.
pub fn eig_hermitian_dyn(h: &CMatrix) -> Result<DynEigen> {
    let n = h.n;
    let herm_err = h.max_abs_diff(&h.adjoint());
    if !herm_err.is_finite() || herm_err >= HERMITIAN_TOL {
        return Err(Error::NotHermitian(herm_err));
    }
    // Symmetrise so rounding in the input cannot drive the rotations.
    let mut a = CMatrix::from_fn(n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    for i in 0..n {
        a[(i, i)] = re(a[(i, i)].re);
    }
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm();
    let threshold = JACOBI_TOL * scale;

    let mut off_norms = vec![a.off_diagonal_norm()];
    let mut sweeps = 0;
    while *off_norms.last().unwrap() > threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: *off_norms.last().unwrap(),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        off_norms.push(a.off_diagonal_norm());
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = CMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(DynEigen {
        values,
        vectors,
        sweeps,
        off_norms,
    })
}

// Annihilates a[p][q] with the unitary U = diag(1, e^{-iφ}) · R(c, s).
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * g);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;
    let n = a.n;

    // A <- A U, V <- V U
    for m in [&mut *a, &mut *v] {
        for k in 0..n {
            let xp = m[(k, p)];
            let xq = m[(k, q)];
            m[(k, p)] = xp * cs - xq * phase.conj() * sn;
            m[(k, q)] = xp * sn + xq * phase.conj() * cs;
        }
    }
    // A <- U† A
    for k in 0..n {
        let xp = a[(p, k)];
        let xq = a[(q, k)];
        a[(p, k)] = xp * cs - xq * phase * sn;
        a[(q, k)] = xp * sn + xq * phase * cs;
    }
    a[(p, q)] = re(0.0);
    a[(q, p)] = re(0.0);
    a[(p, p)] = re(a[(p, p)].re);
    a[(q, q)] = re(a[(q, q)].re);
}

/// Eigendecomposition of a 4×4 Hermitian matrix, eigenvalues descending.
pub fn eig_hermitian(h: &Complex4x4) -> Result<EigenResult> {
    if !h.is_finite() {
        return Err(Error::NotHermitian(f64::NAN));
    }
    let d = eig_hermitian_dyn(&h.to_dynamic())?;
    Ok(EigenResult {
        values: [d.values[0], d.values[1], d.values[2], d.values[3]],
        vectors: Complex4x4::from_dynamic(&d.vectors),
        sweeps: d.sweeps,
    })
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues down to
/// `-1e-10` are treated as rounding noise and clamped to zero.
pub fn sqrt_psd(rho: &Complex4x4) -> Result<Complex4x4> {
    let eig = eig_hermitian(rho)?;
    let min = eig.values[3];
    if min < -PSD_CLAMP {
        return Err(Error::NotPositive(min));
    }
    let roots = eig.values.map(|l| l.max(0.0).sqrt());
    let v = eig.vectors;
    Ok(v * Complex4x4::diag(roots) * v.adjoint())
}

/// Singular values of a 4×4 complex matrix, descending.
///
/// Uses the eigenvalues of `[[0, M], [M†, 0]]`, which are `±σ_i`; this keeps
/// the absolute error at `ε‖M‖` instead of the `√ε` that `sqrt(eig(M M†))`
/// would give for tiny singular values.
pub fn singular_values(m: &Complex4x4) -> Result<[f64; 4]> {
    let w = CMatrix::from_fn(8, |i, j| match (i < 4, j < 4) {
        (true, false) => m.0[i][j - 4],
        (false, true) => m.0[j][i - 4].conj(),
        _ => re(0.0),
    });
    let eig = eig_hermitian_dyn(&w)?;
    let mut sv = [
        eig.values[0].abs(),
        eig.values[1].abs(),
        eig.values[2].abs(),
        eig.values[3].abs(),
    ];
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}
