//! Dense linear-algebra helpers shared by the braid and polaron modules.
//!
//! Complex Hermitian problems are solved through the standard real
//! embedding `A + iB -> [[A, -B], [B, A]]`, which keeps everything on
//! nalgebra's real symmetric path. Eigenvalues of small real
//! nonsymmetric matrices use an in-house Hessenberg QR with an explicit
//! iteration cap, so a pathological input fails loudly instead of
//! spinning.

use crate::error::CoreError;
use crate::Result;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;
pub type RMat = DMatrix<f64>;

/// Frobenius norm of `a - b`.
pub fn frobenius_distance(a: &CMat, b: &CMat) -> f64 {
    (a - b).norm()
}

/// Frobenius residual of unitarity, `|| U U^dag - I ||`.
pub fn unitarity_residual(u: &CMat) -> f64 {
    let n = u.nrows();
    frobenius_distance(&(u * u.adjoint()), &CMat::identity(n, n))
}

/// Eigendecomposition of a complex Hermitian matrix.
///
/// Returns eigenvalues in ascending order with matching orthonormal
/// eigenvectors as the columns of the second output.
pub fn hermitian_eigen(h: &CMat) -> Result<(Vec<f64>, CMat)> {
    let n = h.nrows();
    if n != h.ncols() {
        return Err(CoreError::invalid("hermitian_eigen of non-square matrix"));
    }
    if n == 0 {
        return Ok((vec![], CMat::zeros(0, 0)));
    }
    // Real embedding: each eigenpair of h appears twice in m.
    let mut m = RMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            m[(i, j)] = z.re;
            m[(i + n, j + n)] = z.re;
            m[(i, j + n)] = -z.im;
            m[(i + n, j)] = z.im;
        }
    }
    let se = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].total_cmp(&se.eigenvalues[b]));

    let mut vals = Vec::with_capacity(n);
    let mut vecs = CMat::zeros(n, n);
    let mut taken = 0usize;
    for &k in &order {
        if taken == n {
            break;
        }
        let col = se.eigenvectors.column(k);
        let mut v = CVec::from_fn(n, |i, _| Complex64::new(col[i], col[i + n]));
        // Remove projections onto vectors already taken for the same
        // eigenvalue; duplicates from the doubled spectrum drop out here.
        for t in 0..taken {
            if (vals[t] - se.eigenvalues[k]).abs() > 1e-6 * (1.0 + se.eigenvalues[k].abs()) {
                continue;
            }
            let w = vecs.column(t);
            let ip: Complex64 = w.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            let w_owned: CVec = w.into_owned();
            v -= w_owned * ip;
        }
        let norm = v.norm();
        if norm > 0.3 {
            v /= Complex64::new(norm, 0.0);
            vecs.set_column(taken, &v);
            vals.push(se.eigenvalues[k]);
            taken += 1;
        }
    }
    if taken != n {
        return Err(CoreError::NoConvergence(format!(
            "hermitian_eigen recovered {taken} of {n} eigenvectors"
        )));
    }
    Ok((vals, vecs))
}

/// Eigenphases of a unitary matrix, in units of pi, each normalized to
/// `(-1, 1]`, together with the eigenvectors.
///
/// Diagonalizes the Hermitian part first, then resolves each
/// cos-degenerate cluster with the anti-Hermitian part; valid because a
/// unitary matrix is normal.
pub fn unitary_eigenphases(u: &CMat, tol: f64) -> Result<(Vec<f64>, CMat)> {
    let n = u.nrows();
    if n != u.ncols() {
        return Err(CoreError::invalid("unitary_eigenphases of non-square matrix"));
    }
    let res = unitarity_residual(u);
    if res > tol.max(1e-8) {
        return Err(CoreError::invalid(format!(
            "matrix is not unitary: residual {res:.3e}"
        )));
    }
    let ud = u.adjoint();
    let k = (u + &ud).map(|z| z * 0.5);
    let m = (u - &ud).map(|z| z * Complex64::new(0.0, -0.5));

    let (kvals, kvecs) = hermitian_eigen(&k)?;
    let mut phases = vec![0.0f64; n];
    let mut vectors = CMat::zeros(n, n);

    let cluster_tol = 1e-7;
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && (kvals[end] - kvals[start]).abs() < cluster_tol {
            end += 1;
        }
        let width = end - start;
        let block = kvecs.columns(start, width).into_owned();
        if width == 1 {
            let v = block.column(0);
            let mv: Complex64 = {
                let mvv = &m * &block;
                v.iter().zip(mvv.column(0).iter()).map(|(a, b)| a.conj() * b).sum()
            };
            phases[start] = mv.re.atan2(kvals[start]) / std::f64::consts::PI;
            vectors.set_column(start, &v.into_owned());
        } else {
            // cos-degenerate cluster: diagonalize sin within the block
            let sub = block.adjoint() * &m * &block;
            let (svals, svecs) = hermitian_eigen(&sub)?;
            let rotated = &block * &svecs;
            for (j, &s) in svals.iter().enumerate() {
                phases[start + j] = s.atan2(kvals[start + j]) / std::f64::consts::PI;
                vectors.set_column(start + j, &rotated.column(j).into_owned());
            }
        }
        start = end;
    }

    // Map -1 to +1 to keep phases in (-1, 1].
    for p in phases.iter_mut() {
        if *p <= -1.0 + 1e-14 {
            *p = 1.0;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| phases[a].total_cmp(&phases[b]));
    let sorted_phases: Vec<f64> = order.iter().map(|&i| phases[i]).collect();
    let mut sorted_vecs = CMat::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        sorted_vecs.set_column(c, &vectors.column(i).into_owned());
    }
    Ok((sorted_phases, sorted_vecs))
}

/// Unitary polar factor of a real square matrix, `Q = U V^T` from the SVD.
pub fn polar_factor_real(b: &RMat) -> Result<RMat> {
    let svd = b.clone().svd(true, true);
    let u = svd
        .u
        .ok_or_else(|| CoreError::NoConvergence("svd did not produce U".into()))?;
    let vt = svd
        .v_t
        .ok_or_else(|| CoreError::NoConvergence("svd did not produce V^T".into()))?;
    Ok(u * vt)
}

/// Eigenvalues of a small real matrix by Hessenberg reduction followed by
/// Francis double-shift QR, with a hard iteration cap.
pub fn small_real_eigenvalues(a: &RMat, max_sweeps: usize) -> Result<Vec<Complex64>> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(CoreError::invalid("eigenvalues of non-square matrix"));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![Complex64::new(a[(0, 0)], 0.0)]);
    }
    let mut h = hessenberg(a);
    let mut eigs: Vec<Complex64> = Vec::with_capacity(n);
    let mut hi = n; // active block is 0..hi
    let mut sweeps = 0usize;
    let scale = a.iter().map(|x| x.abs()).fold(0.0, f64::max).max(1.0);
    let eps = 1e-14 * scale;

    while hi > 0 {
        sweeps += 1;
        if sweeps > max_sweeps {
            return Err(CoreError::NoConvergence(format!(
                "QR iteration exceeded {max_sweeps} sweeps on a {n}x{n} block"
            )));
        }
        // deflate tiny subdiagonals
        for i in 1..hi {
            if h[(i, i - 1)].abs() <= eps + 1e-13 * (h[(i, i)].abs() + h[(i - 1, i - 1)].abs()) {
                h[(i, i - 1)] = 0.0;
            }
        }
        // find the trailing irreducible block [lo, hi)
        let mut lo = hi - 1;
        while lo > 0 && h[(lo, lo - 1)] != 0.0 {
            lo -= 1;
        }
        if hi - lo == 1 {
            eigs.push(Complex64::new(h[(hi - 1, hi - 1)], 0.0));
            hi -= 1;
            continue;
        }
        if hi - lo == 2 {
            let (e1, e2) = eig2(h[(lo, lo)], h[(lo, lo + 1)], h[(lo + 1, lo)], h[(lo + 1, lo + 1)]);
            eigs.push(e1);
            eigs.push(e2);
            hi -= 2;
            continue;
        }
        francis_step(&mut h, lo, hi, sweeps);
    }
    eigs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(eigs)
}

fn hessenberg(a: &RMat) -> RMat {
    let n = a.nrows();
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        // Householder on column k below the subdiagonal
        let mut x = DVector::zeros(n - k - 1);
        for i in 0..n - k - 1 {
            x[i] = h[(k + 1 + i, k)];
        }
        let alpha = -x[0].signum() * x.norm();
        if alpha == 0.0 {
            continue;
        }
        let mut v = x.clone();
        v[0] -= alpha;
        let vn = v.norm();
        if vn < 1e-300 {
            continue;
        }
        v /= vn;
        // H = I - 2 v v^T applied from both sides
        for j in 0..n {
            let mut dot = 0.0;
            for i in 0..v.len() {
                dot += v[i] * h[(k + 1 + i, j)];
            }
            for i in 0..v.len() {
                h[(k + 1 + i, j)] -= 2.0 * v[i] * dot;
            }
        }
        for i in 0..n {
            let mut dot = 0.0;
            for j in 0..v.len() {
                dot += h[(i, k + 1 + j)] * v[j];
            }
            for j in 0..v.len() {
                h[(i, k + 1 + j)] -= 2.0 * dot * v[j];
            }
        }
    }
    h
}

fn eig2(a: f64, b: f64, c: f64, d: f64) -> (Complex64, Complex64) {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = tr * tr / 4.0 - det;
    if disc >= 0.0 {
        let s = disc.sqrt();
        (Complex64::new(tr / 2.0 + s, 0.0), Complex64::new(tr / 2.0 - s, 0.0))
    } else {
        let s = (-disc).sqrt();
        (Complex64::new(tr / 2.0, s), Complex64::new(tr / 2.0, -s))
    }
}

/// One implicit double-shift sweep on the active block `[lo, hi)`.
fn francis_step(h: &mut RMat, lo: usize, hi: usize, sweep: usize) {
    let n = h.nrows();
    let m = hi - 1;
    // Wilkinson-style double shift from the trailing 2x2; occasionally an
    // exceptional shift to break symmetric cycling.
    let (mut s, mut t);
    if sweep % 17 == 0 {
        let w = h[(m, m - 1)].abs() + h[(m - 1, m - 2.min(m - 1))].abs();
        s = 1.5 * w;
        t = w * w;
    } else {
        s = h[(m - 1, m - 1)] + h[(m, m)];
        t = h[(m - 1, m - 1)] * h[(m, m)] - h[(m - 1, m)] * h[(m, m - 1)];
    }
    if !s.is_finite() || !t.is_finite() {
        s = 0.0;
        t = 0.0;
    }
    // first column of (H - s1)(H - s2)
    let mut x = h[(lo, lo)] * h[(lo, lo)] + h[(lo, lo + 1)] * h[(lo + 1, lo)] - s * h[(lo, lo)] + t;
    let mut y = h[(lo + 1, lo)] * (h[(lo, lo)] + h[(lo + 1, lo + 1)] - s);
    let mut z = if lo + 2 < hi { h[(lo + 2, lo + 1)] * h[(lo + 1, lo)] } else { 0.0 };

    for k in lo..hi - 2 {
        // Householder annihilating (y, z) against x
        let nv = (x * x + y * y + z * z).sqrt();
        if nv == 0.0 {
            break;
        }
        let alpha = -x.signum() * nv;
        let mut v = [x - alpha, y, z];
        let vn = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if vn > 1e-300 {
            v[0] /= vn;
            v[1] /= vn;
            v[2] /= vn;
            let rows = if k + 2 < hi { 3 } else { 2 };
            // left application on rows k..k+rows
            for j in k.saturating_sub(1)..n {
                let mut dot = 0.0;
                for (i, vi) in v.iter().enumerate().take(rows) {
                    dot += vi * h[(k + i, j)];
                }
                for (i, vi) in v.iter().enumerate().take(rows) {
                    h[(k + i, j)] -= 2.0 * vi * dot;
                }
            }
            // right application on columns k..k+rows
            let row_end = (k + 4).min(hi);
            for i in 0..row_end {
                let mut dot = 0.0;
                for (j, vj) in v.iter().enumerate().take(rows) {
                    dot += h[(i, k + j)] * vj;
                }
                for (j, vj) in v.iter().enumerate().take(rows) {
                    h[(i, k + j)] -= 2.0 * dot * vj;
                }
            }
        }
        if k + 1 < hi - 1 {
            x = h[(k + 1, k)];
            y = h[(k + 2, k)];
            z = if k + 3 < hi { h[(k + 3, k)] } else { 0.0 };
        }
    }
    // final 2x2 rotation to clean the trailing bulge
    let k = hi - 2;
    let (x, y) = (h[(k, k - 1.min(k))], h[(k + 1, k - 1.min(k))]);
    if k > lo {
        let nv = (x * x + y * y).sqrt();
        if nv > 0.0 {
            let (c, sn) = (x / nv, y / nv);
            for j in k - 1..n {
                let (a, b) = (h[(k, j)], h[(k + 1, j)]);
                h[(k, j)] = c * a + sn * b;
                h[(k + 1, j)] = -sn * a + c * b;
            }
            for i in 0..hi {
                let (a, b) = (h[(i, k)], h[(i, k + 1)]);
                h[(i, k)] = c * a + sn * b;
                h[(i, k + 1)] = -sn * a + c * b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn random_complex_matrix(n: usize, seed: u64) -> CMat {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        CMat::from_fn(n, n, |_, _| {
            Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        })
    }

    fn random_unitary(n: usize, seed: u64) -> CMat {
        // Gram-Schmidt on a random complex matrix
        let a = random_complex_matrix(n, seed);
        let mut q = CMat::zeros(n, n);
        for j in 0..n {
            let mut v: CVec = a.column(j).into_owned();
            for i in 0..j {
                let w = q.column(i);
                let ip: Complex64 = w.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                let w_owned: CVec = w.into_owned();
                v -= w_owned * ip;
            }
            let nv = v.norm();
            v /= Complex64::new(nv, 0.0);
            q.set_column(j, &v);
        }
        q
    }

    #[test]
    fn hermitian_eigen_reconstructs() {
        for n in [1usize, 2, 5, 12, 30] {
            let a = random_complex_matrix(n, 100 + n as u64);
            let h = (&a + a.adjoint()).map(|z| z * 0.5);
            let (vals, vecs) = hermitian_eigen(&h).unwrap();
            let d = CMat::from_fn(n, n, |i, j| {
                if i == j { Complex64::new(vals[i], 0.0) } else { Complex64::new(0.0, 0.0) }
            });
            let recon = &vecs * d * vecs.adjoint();
            assert!(frobenius_distance(&h, &recon) < 1e-10 * (1.0 + h.norm()), "n={n}");
            assert!(unitarity_residual(&vecs) < 1e-10);
            for w in vals.windows(2) {
                assert!(w[0] <= w[1] + 1e-12);
            }
        }
    }

    #[test]
    fn hermitian_eigen_degenerate() {
        // 2x identity block plus a distinct eigenvalue
        let mut h = CMat::identity(3, 3);
        h[(2, 2)] = Complex64::new(4.0, 0.0);
        let (vals, vecs) = hermitian_eigen(&h).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        assert!((vals[2] - 4.0).abs() < 1e-12);
        assert!(unitarity_residual(&vecs) < 1e-10);
    }

    #[test]
    fn eigenphases_of_diagonal_unitary() {
        let d = CMat::from_fn(2, 2, |i, j| {
            if i != j {
                Complex64::new(0.0, 0.0)
            } else if i == 0 {
                Complex64::from_polar(1.0, std::f64::consts::PI / 2.0)
            } else {
                Complex64::from_polar(1.0, -std::f64::consts::PI / 2.0)
            }
        });
        let (ph, _) = unitary_eigenphases(&d, 1e-10).unwrap();
        assert!((ph[0] + 0.5).abs() < 1e-12);
        assert!((ph[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn eigenphases_identity_and_random() {
        let (ph, _) = unitary_eigenphases(&CMat::identity(4, 4), 1e-10).unwrap();
        for p in ph {
            assert!(p.abs() < 1e-12);
        }
        for n in [2usize, 3, 7, 16] {
            let u = random_unitary(n, 17 + n as u64);
            let (ph, vecs) = unitary_eigenphases(&u, 1e-9).unwrap();
            // residual check per pair
            for j in 0..n {
                let v = vecs.column(j).into_owned();
                let uv = &u * &v;
                let lam = Complex64::from_polar(1.0, std::f64::consts::PI * ph[j]);
                let resid = (&uv - &v * lam).norm();
                assert!(resid < 1e-8, "n={n} j={j} resid={resid:.2e}");
            }
        }
    }

    #[test]
    fn eigenphases_with_conjugate_pair_degenerate_cos() {
        // phases +th and -th share cos; the cluster split must resolve them
        let th = 0.77;
        let base = CMat::from_fn(2, 2, |i, j| {
            if i != j {
                Complex64::new(0.0, 0.0)
            } else if i == 0 {
                Complex64::from_polar(1.0, th)
            } else {
                Complex64::from_polar(1.0, -th)
            }
        });
        let q = random_unitary(2, 5);
        let u = &q * base * q.adjoint();
        let (ph, _) = unitary_eigenphases(&u, 1e-10).unwrap();
        assert!((ph[0] + th / std::f64::consts::PI).abs() < 1e-10);
        assert!((ph[1] - th / std::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn polar_factor_orthogonal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for n in [2usize, 5, 13] {
            let b = RMat::from_fn(n, n, |_, _| rng.random::<f64>() - 0.5)
                + RMat::identity(n, n) * 2.0;
            let q = polar_factor_real(&b).unwrap();
            let err = (&q * q.transpose() - RMat::identity(n, n)).norm();
            assert!(err < 1e-12);
            // polar factor satisfies Q = B (B^T B)^{-1/2}; check Q^T B is SPD-symmetric
            let p = q.transpose() * &b;
            assert!((&p - p.transpose()).norm() < 1e-10);
        }
    }

    #[test]
    fn small_eigenvalues_diagonal_and_pairs() {
        let d = RMat::from_fn(4, 4, |i, j| if i == j { (i + 1) as f64 } else { 0.0 });
        let e = small_real_eigenvalues(&d, 200).unwrap();
        for (k, ev) in e.iter().enumerate() {
            assert!((ev.re - (k + 1) as f64).abs() < 1e-10);
            assert!(ev.im.abs() < 1e-12);
        }
        // rotation block: eigenvalues cos t +- i sin t
        let t: f64 = 0.6;
        let r = RMat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) | (1, 1) => t.cos(),
            (0, 1) => -t.sin(),
            _ => t.sin(),
        });
        let e = small_real_eigenvalues(&r, 200).unwrap();
        assert!((e[0].re - t.cos()).abs() < 1e-12);
        assert!((e[0].im.abs() - t.sin()).abs() < 1e-12);
    }

    #[test]
    fn small_eigenvalues_match_trace_and_det() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for n in [3usize, 6, 10, 16] {
            let a = RMat::from_fn(n, n, |_, _| rng.random::<f64>() - 0.5);
            let e = small_real_eigenvalues(&a, 600).unwrap();
            assert_eq!(e.len(), n);
            let tr: f64 = (0..n).map(|i| a[(i, i)]).sum();
            let etr: Complex64 = e.iter().sum();
            assert!((etr.re - tr).abs() < 1e-8 * (1.0 + tr.abs()), "n={n}");
            assert!(etr.im.abs() < 1e-8);
            let det = a.determinant();
            let edet: Complex64 = e.iter().product();
            assert!((edet.re - det).abs() < 1e-7 * (1.0 + det.abs()), "n={n}");
        }
    }

    #[test]
    fn small_eigenvalues_structured_does_not_hang() {
        // the pattern that stalls naive QR implementations: near-degenerate
        // structured entries
        let n = 24;
        let a = RMat::from_fn(n, n, |i, j| {
            (((i * 7 + j * 13) % 101) as f64 / 101.0) + if i == j { 3.0 } else { 0.0 }
        });
        let e = small_real_eigenvalues(&a, 2000).unwrap();
        assert_eq!(e.len(), n);
        let tr: f64 = (0..n).map(|i| a[(i, i)]).sum();
        let etr: Complex64 = e.iter().sum();
        assert!((etr.re - tr).abs() < 1e-7 * tr.abs());
    }
}
