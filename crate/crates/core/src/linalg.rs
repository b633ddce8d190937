//! Dense complex linear algebra: tensor products, Hermitian
//! eigendecompositions, and unitaries generated by Hermitian matrices.
//!
//! Every matrix in this crate is small (no larger than the full Hilbert
//! space of four qubits or two qutrits), so everything is dense and direct.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Hermiticity tolerance used when validating inputs.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Unitarity tolerance guaranteed by [`matrix_exp_i_hermitian`].
pub const UNITARITY_TOL: f64 = 1e-10;

/// Kronecker product with the first factor most significant.
pub fn tensor_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Largest absolute deviation from Hermiticity, `max |m - m†|`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    if m.nrows() != m.ncols() {
        return f64::INFINITY;
    }
    let mut worst = 0.0_f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    hermiticity_defect(m) <= tol
}

fn require_hermitian(m: &CMatrix, tol: f64) -> Result<()> {
    let defect = hermiticity_defect(m);
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigvals_hermitian(m: &CMatrix) -> Result<Vec<f64>> {
    require_hermitian(m, HERMITICITY_TOL)?;
    let mut vals: Vec<f64> = hermitian_part(m).symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(vals)
}

/// Full Hermitian eigendecomposition: eigenvalues ascending with matching
/// eigenvector columns.
pub fn eigh(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    require_hermitian(m, HERMITICITY_TOL)?;
    let eig = hermitian_part(m).symmetric_eigen();
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vecs = CMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        vecs.set_column(col, &eig.eigenvectors.column(k));
    }
    Ok((vals, vecs))
}

// Symmetrize before decomposing so roundoff in callers cannot leak
// imaginary parts into the eigenvalues.
fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * C64::new(0.5, 0.0)
}

/// `exp(i h)` for Hermitian `h`, computed by eigendecomposition so the
/// result is unitary up to roundoff.
pub fn matrix_exp_i_hermitian(h: &CMatrix) -> Result<CMatrix> {
    let (vals, vecs) = eigh(h)?;
    let phases = CVector::from_iterator(
        vals.len(),
        vals.iter().map(|&t| C64::new(t.cos(), t.sin())),
    );
    let mut scaled = vecs.clone();
    for (col, phase) in phases.iter().enumerate() {
        let mut c = scaled.column_mut(col);
        c *= *phase;
    }
    Ok(&scaled * vecs.adjoint())
}

/// Largest entry of `u†u - I`.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let n = u.ncols();
    let g = u.adjoint() * u;
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            let d = (g[(i, j)] - target).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

pub fn is_unitary(u: &CMatrix, tol: f64) -> bool {
    u.nrows() == u.ncols() && unitarity_defect(u) <= tol
}

/// Identity matrix of size `d`.
pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}
