//! Dimension counts checked against independent closed forms.

use leibhom_core::complexes::weight_graded_li;
use leibhom_core::leibniz::free_leibniz;
use leibhom_core::tensor::lie_basis;
use leibhom_core::Caps;

/// `(1+t^k)^l` for odd `k`, `(1−t^k)^{−l}` for even `k`, truncated at `t^len`.
fn factor(k: usize, l: i128, len: usize) -> Vec<i128> {
    let mut out = vec![0i128; len + 1];
    let mut coeff = 1i128;
    let mut j = 0;
    while k * j <= len {
        out[k * j] = coeff;
        // next binomial: C(l, j+1) or C(l+j, j+1)
        coeff = if k % 2 == 1 {
            coeff * (l - j as i128) / (j as i128 + 1)
        } else {
            coeff * (l + j as i128) / (j as i128 + 1)
        };
        j += 1;
    }
    out
}

fn times(a: &[i128], b: &[i128]) -> Vec<i128> {
    let len = a.len();
    let mut out = vec![0i128; len];
    for i in 0..len {
        for j in 0..len - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// Solves `1/(1 − d t) = Π_{n odd}(1+t^n)^{l_n} Π_{n even}(1−t^n)^{−l_n}`
/// for `l_1..l_len` by matching coefficients degree by degree.
fn super_witt(d: i128, len: usize) -> Vec<i128> {
    let mut product = vec![0i128; len + 1];
    product[0] = 1;
    let mut dims = Vec::new();
    for n in 1..=len {
        let l = d.pow(n as u32) - product[n];
        dims.push(l);
        product = times(&product, &factor(n, l, len));
    }
    dims
}

#[test]
fn oracle_reproduces_known_series() {
    assert_eq!(super_witt(1, 5), [1, 1, 0, 0, 0]);
    assert_eq!(super_witt(2, 4), [2, 3, 2, 3]);
    assert_eq!(super_witt(4, 2), [4, 10]);
}

#[test]
fn lie_dimensions_match_super_witt() {
    let caps = Caps::default();
    for d in 1..=3usize {
        let expected = super_witt(d as i128, 6);
        for n in 1..=6 {
            let got = lie_basis(d, n, &caps).unwrap().dim();
            assert_eq!(got as i128, expected[n - 1], "d = {d}, n = {n}");
        }
    }
}

fn mobius(n: u64) -> i64 {
    // direct definition via prime factorization by trial division
    let mut m = n;
    let mut primes = 0;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

fn witt(g: i64, w: u64) -> i64 {
    let s: i64 = (1..=w)
        .filter(|e| w % e == 0)
        .map(|e| mobius(e) * g.pow((w / e) as u32))
        .sum();
    s / w as i64
}

#[test]
fn witt_function_agrees_with_oracle() {
    for g in 1..=3u64 {
        for w in 1..=8u64 {
            assert_eq!(
                leibhom_core::witt::witt_number(g, w).unwrap() as i64,
                witt(g as i64, w),
                "g = {g}, w = {w}"
            );
        }
    }
}

#[test]
fn liezation_of_free_is_free_lie() {
    for (g, top) in [(1usize, 4usize), (2, 4), (3, 3)] {
        let free = free_leibniz(g, top, &Caps::default()).unwrap();
        let lie = free.liezation().unwrap().algebra;
        let weights = lie.weights().unwrap();
        for w in 1..=top {
            let dim = weights.iter().filter(|&&x| x as usize == w).count();
            assert_eq!(dim as i64, witt(g as i64, w as u64), "g = {g}, w = {w}");
        }
    }
}

#[test]
fn weight_graded_li_one_is_witt() {
    let caps = Caps::default();
    for g in 1..=2usize {
        let free = free_leibniz(g, 4, &caps).unwrap();
        for w in 1..=4 {
            let report = weight_graded_li(&free, 1, w, &caps).unwrap();
            assert_eq!(report.rows[0].homology_dim as i64, witt(g as i64, w as u64));
        }
    }
}

#[test]
fn free_algebras_satisfy_leibniz() {
    for g in 1..=2 {
        for top in 1..=5 {
            let a = free_leibniz(g, top, &Caps::default()).unwrap();
            assert!(a.validate().is_empty(), "g = {g}, W = {top}");
            let w = a.weights().unwrap();
            for ((i, j), v) in a.nonzero_brackets() {
                assert!(v.keys().all(|&k| w[k] == w[i] + w[j]));
            }
        }
    }
}

#[test]
fn weight_graded_li_ignores_truncation() {
    let caps = Caps::default();
    for w in 1..=3 {
        let reference = weight_graded_li(&free_leibniz(2, w, &caps).unwrap(), 3, w, &caps).unwrap();
        for top in w + 1..=4 {
            let a = free_leibniz(2, top, &caps).unwrap();
            assert_eq!(weight_graded_li(&a, 3, w, &caps).unwrap(), reference, "w = {w}, W = {top}");
        }
    }
}
