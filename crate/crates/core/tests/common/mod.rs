//! Independent spectrum oracle for small matrices: characteristic
//! polynomial by Faddeev–LeVerrier, roots by recursive real-root
//! isolation. Shares nothing with the Jacobi solver beyond the Matrix
//! type, so it can stand witness for it.

use bridge_spectra::matrix::Matrix;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.dim();
    let mut c = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += a.get(i, k) * b.get(k, j);
            }
            c.set(i, j, s);
        }
    }
    c
}

/// Coefficients of det(xI - A) as [c_0, c_1, ..., c_n] with c_n = 1.
pub fn char_poly(a: &Matrix) -> Vec<f64> {
    let n = a.dim();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        m = mat_mul(a, &m);
        let c = -m.trace() / k as f64;
        coeffs[n - k] = c;
        for i in 0..n {
            m.add_to(i, i, c);
        }
    }
    coeffs
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| i as f64 * c)
        .collect()
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let flo = eval(coeffs, lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = eval(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All real roots of a real-rooted polynomial in [lo, hi], found by
/// interleaving with the derivative's roots (with multiplicity collapsed
/// to the sign-change count, which suffices for comparing sorted lists
/// against a solver that reports every eigenvalue).
fn real_roots(coeffs: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return vec![];
    }
    if degree == 1 {
        return vec![-coeffs[0] / coeffs[1]];
    }
    let critical = real_roots(&derivative(coeffs), lo, hi);
    let mut cuts = vec![lo];
    cuts.extend(critical);
    cuts.push(hi);
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(coeffs, a), eval(coeffs, b));
        if fa == 0.0 {
            roots.push(a);
        } else if fa * fb < 0.0 {
            roots.push(bisect(coeffs, a, b));
        }
    }
    if eval(coeffs, hi) == 0.0 {
        roots.push(hi);
    }
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-10);
    roots
}

/// Eigenvalues of a symmetric matrix via the characteristic polynomial.
/// Returns sorted distinct eigenvalues; multiplicities are not resolved,
/// so compare with `assert_spectrum_matches` below.
pub fn eigenvalues_by_char_poly(a: &Matrix) -> Vec<f64> {
    let n = a.dim();
    // Gershgorin bound on the spectrum
    let mut radius = 0.0f64;
    for i in 0..n {
        let r: f64 = (0..n).map(|j| a.get(i, j).abs()).sum();
        radius = radius.max(r);
    }
    let mut roots = real_roots(&char_poly(a), -radius - 1.0, radius + 1.0);
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// Every eigenvalue the solver reports must be a root of the
/// characteristic polynomial, and every distinct oracle root must
/// appear among the solver's values.
pub fn assert_spectrum_matches(a: &Matrix, solver_eigenvalues: &[f64], tol: f64) {
    let oracle = eigenvalues_by_char_poly(a);
    for ev in solver_eigenvalues {
        assert!(
            oracle.iter().any(|r| (r - ev).abs() <= tol),
            "solver eigenvalue {ev} is not a characteristic-polynomial root (oracle: {oracle:?})"
        );
    }
    for r in &oracle {
        assert!(
            solver_eigenvalues.iter().any(|ev| (r - ev).abs() <= tol),
            "oracle root {r} missing from solver output {solver_eigenvalues:?}"
        );
    }
}
