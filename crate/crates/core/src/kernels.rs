//! Dense matrix kernels used by the graph forward and backward passes.
//!
//! Loop order keeps the innermost accesses contiguous so the compiler can
//! vectorize; each output element is produced by a single sequential
//! accumulation, which keeps results bit-reproducible run to run.

use crate::scalar::Scalar;

/// c[m,n] = a[m,k] @ b[k,n]
pub fn mm_nn<S: Scalar>(a: &[S], b: &[S], m: usize, k: usize, n: usize) -> Vec<S> {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    let mut c = vec![S::zero(); m * n];
    for i in 0..m {
        let a_row = &a[i * k..(i + 1) * k];
        let c_row = &mut c[i * n..(i + 1) * n];
        for (p, &aip) in a_row.iter().enumerate() {
            let b_row = &b[p * n..(p + 1) * n];
            for (cv, &bv) in c_row.iter_mut().zip(b_row) {
                *cv = *cv + aip * bv;
            }
        }
    }
    c
}

/// c[m,k] = a[m,n] @ b[k,n]^T  (rows of `b` are dotted against rows of `a`)
pub fn mm_nt<S: Scalar>(a: &[S], b: &[S], m: usize, n: usize, k: usize) -> Vec<S> {
    debug_assert_eq!(a.len(), m * n);
    debug_assert_eq!(b.len(), k * n);
    let mut c = vec![S::zero(); m * k];
    for i in 0..m {
        let a_row = &a[i * n..(i + 1) * n];
        let c_row = &mut c[i * k..(i + 1) * k];
        for (p, cv) in c_row.iter_mut().enumerate() {
            let b_row = &b[p * n..(p + 1) * n];
            let mut s = S::zero();
            for (&av, &bv) in a_row.iter().zip(b_row) {
                s = s + av * bv;
            }
            *cv = s;
        }
    }
    c
}

/// c[k,n] += a[m,k]^T @ b[m,n], accumulated into an existing buffer.
pub fn mm_tn_acc<S: Scalar>(a: &[S], b: &[S], m: usize, k: usize, n: usize, c: &mut [S]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), m * n);
    debug_assert_eq!(c.len(), k * n);
    for i in 0..m {
        let a_row = &a[i * k..(i + 1) * k];
        let b_row = &b[i * n..(i + 1) * n];
        for (p, &aip) in a_row.iter().enumerate() {
            let c_row = &mut c[p * n..(p + 1) * n];
            for (cv, &bv) in c_row.iter_mut().zip(b_row) {
                *cv = *cv + aip * bv;
            }
        }
    }
}

/// out[j] += sum_i a[i,j]
pub fn col_sum_acc<S: Scalar>(a: &[S], m: usize, n: usize, out: &mut [S]) {
    debug_assert_eq!(a.len(), m * n);
    debug_assert_eq!(out.len(), n);
    for i in 0..m {
        let a_row = &a[i * n..(i + 1) * n];
        for (o, &av) in out.iter_mut().zip(a_row) {
            *o = *o + av;
        }
    }
}

/// y += x, elementwise.
pub fn add_assign<S: Scalar>(y: &mut [S], x: &[S]) {
    debug_assert_eq!(y.len(), x.len());
    for (yv, &xv) in y.iter_mut().zip(x) {
        *yv = *yv + xv;
    }
}

#[inline(always)]
pub fn sigmoid<S: Scalar>(x: S) -> S {
    S::one() / (S::one() + (-x).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mm_nn_small() {
        // [1 2; 3 4] @ [5 6; 7 8] = [19 22; 43 50]
        let a = vec![1.0, 2.0, 3.0, 4.0];
        let b = vec![5.0, 6.0, 7.0, 8.0];
        assert_eq!(mm_nn(&a, &b, 2, 2, 2), vec![19.0, 22.0, 43.0, 50.0]);
    }

    fn transpose(x: &[f64], rows: usize, cols: usize) -> Vec<f64> {
        let mut t = vec![0.0; x.len()];
        for i in 0..rows {
            for j in 0..cols {
                t[j * rows + i] = x[i * cols + j];
            }
        }
        t
    }

    #[test]
    fn mm_nt_matches_explicit_transpose() {
        let (m, n, k) = (3, 4, 5);
        let a: Vec<f64> = (0..m * n).map(|i| (i as f64) * 0.7 - 3.0).collect();
        let b: Vec<f64> = (0..k * n).map(|i| (i as f64) * 0.3 + 1.0).collect();
        // a [m,n] @ b^T [n,k] via mm_nn on the materialized transpose.
        let expected = mm_nn(&a, &transpose(&b, k, n), m, n, k);
        assert_eq!(mm_nt(&a, &b, m, n, k), expected);
    }

    #[test]
    fn mm_tn_matches_explicit_transpose() {
        let (m, k, n) = (4, 3, 5);
        let a: Vec<f64> = (0..m * k).map(|i| (i as f64) * 0.5 - 2.0).collect();
        let b: Vec<f64> = (0..m * n).map(|i| (i as f64) * 0.2 - 1.0).collect();
        let expected = mm_nn(&transpose(&a, m, k), &b, k, m, n);
        let mut acc = vec![0.0; k * n];
        mm_tn_acc(&a, &b, m, k, n, &mut acc);
        assert_eq!(acc, expected);
    }

    #[test]
    fn col_sum() {
        let a = vec![1.0, 2.0, 3.0, 4.0];
        let mut out = vec![0.0; 2];
        col_sum_acc(&a, 2, 2, &mut out);
        assert_eq!(out, vec![4.0, 6.0]);
    }
}
