//! Dense integer matrices with Smith and Hermite normal forms.
//!
//! All transforms are unimodular and tracked exactly, so kernels, quotient
//! structures and congruence systems computed here are certified by
//! re-multiplication.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        IntMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self[(i, a)].clone();
            self[(i, a)] = v;
        }
    }

    /// row[a] += c * row[b]
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let d = c * &self[(b, j)];
            self[(a, j)] += d;
        }
    }

    /// col[a] += c * col[b]
    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let d = c * &self[(i, b)];
            self[(i, a)] += d;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `d = u * m * w` with `u`, `w` unimodular and
/// `d` diagonal with `d_1 | d_2 | ...`, all diagonal entries non-negative.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMat,
    pub d: IntMat,
    pub w: IntMat,
    pub rank: usize,
}

pub fn snf(m: &IntMat) -> Snf {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.nrows());
    let mut w = IntMat::identity(m.ncols());
    let n = m.nrows().min(m.ncols());
    let mut t = 0;
    while t < n {
        // find a pivot of minimal absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..d.nrows() {
            for j in t..d.ncols() {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if d[(i, j)].abs() < d[(pi, pj)].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        w.swap_cols(t, pj);

        // clear row and column t
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..d.nrows() {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(i, t)], &d[(t, t)]);
                let negq = -q;
                d.add_row(i, t, &negq);
                u.add_row(i, t, &negq);
                if !d[(i, t)].is_zero() {
                    // remainder smaller than pivot: swap up and restart
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..d.ncols() {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(t, j)], &d[(t, t)]);
                let negq = -q;
                d.add_col(j, t, &negq);
                w.add_col(j, t, &negq);
                if !d[(t, j)].is_zero() {
                    d.swap_cols(t, j);
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // enforce divisibility of the remaining block by the pivot
        let mut offender = None;
        'scan: for i in t + 1..d.nrows() {
            for j in t + 1..d.ncols() {
                if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            let one = BigInt::one();
            d.add_row(t, i, &one);
            u.add_row(t, i, &one);
            continue; // re-run elimination at the same t
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let rank = (0..n).take_while(|&i| !d[(i, i)].is_zero()).count();
    Snf { u, d, w, rank }
}

/// Rounded division: quotient minimizing |a - q*b|.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Row-style Hermite normal form `h = u * m`, `u` unimodular.
/// Pivots are positive, entries above a pivot are reduced into `[0, pivot)`,
/// zero rows are moved to the bottom.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMat,
    pub u: IntMat,
    pub rank: usize,
    /// pivot column of each of the first `rank` rows
    pub pivots: Vec<usize>,
}

pub fn hnf(m: &IntMat) -> Hnf {
    let mut h = m.clone();
    let mut u = IntMat::identity(m.nrows());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..h.ncols() {
        if r == h.nrows() {
            break;
        }
        // gcd-reduce column c below row r
        loop {
            let mut best: Option<usize> = None;
            for i in r..h.nrows() {
                if h[(i, c)].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        if h[(i, c)].abs() < h[(b, c)].abs() {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            u.swap_rows(r, b);
            let mut any = false;
            for i in r + 1..h.nrows() {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = div_round(&h[(i, c)], &h[(r, c)]);
                let negq = -q;
                h.add_row(i, r, &negq);
                u.add_row(i, r, &negq);
                if !h[(i, c)].is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        // reduce entries above the pivot
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            let negq = -q;
            h.add_row(i, r, &negq);
            u.add_row(i, r, &negq);
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h, u, rank: r, pivots }
}

/// Basis of the right kernel `{x : m x = 0}` as columns collected into rows.
pub fn right_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    let s = snf(m);
    // m = u^-1 d w^-1, kernel basis: columns of w past the rank
    (s.rank..m.ncols())
        .map(|j| (0..m.ncols()).map(|i| s.w[(i, j)].clone()).collect())
        .collect()
}

/// One solution of `m x = b`, if any.
pub fn solve(m: &IntMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.nrows());
    let s = snf(m);
    let ub: Vec<BigInt> = (0..m.nrows())
        .map(|i| (0..m.nrows()).map(|k| &s.u[(i, k)] * &b[k]).sum())
        .collect();
    let mut y = vec![BigInt::zero(); m.ncols()];
    for i in 0..m.nrows() {
        if i < s.rank {
            let (q, r) = ub[i].div_rem(&s.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    let x = (0..m.ncols())
        .map(|i| (0..m.ncols()).map(|k| &s.w[(i, k)] * &y[k]).sum())
        .collect();
    Some(x)
}

/// One solution of `m x = b (mod modulus)`, entries reduced into `[0, modulus)`.
pub fn solve_mod(m: &IntMat, b: &[BigInt], modulus: &BigInt) -> Option<Vec<BigInt>> {
    // append modulus * identity columns as slack variables
    let rows = m.nrows();
    let cols = m.ncols();
    let mut big = IntMat::zero(rows, cols + rows);
    for i in 0..rows {
        for j in 0..cols {
            big[(i, j)] = m[(i, j)].clone();
        }
        big[(i, cols + i)] = modulus.clone();
    }
    solve(&big, b).map(|x| x[..cols].iter().map(|v| v.mod_floor(modulus)).collect())
}

/// Saturation of the row space: a basis of `{z in Z^n : z in Q-rowspan(m)}`.
pub fn row_saturation(m: &IntMat) -> Vec<Vec<BigInt>> {
    let s = snf(m);
    // rows of w^-1 … we avoid inversion: Q-rowspan(m) = Q-rowspan(d w^-1),
    // and the saturation is spanned by the first `rank` rows of w^-1.
    // w^-1 = adjugate-free: invert the unimodular w by solving w x = e_i.
    let winv = invert_unimodular(&s.w);
    (0..s.rank).map(|i| winv.row(i).to_vec()).collect()
}

pub fn invert_unimodular(m: &IntMat) -> IntMat {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let h = hnf(m);
    // HNF of a unimodular matrix is the identity, so u is the inverse.
    assert!(h.h == IntMat::identity(n), "matrix is not unimodular");
    h.u
}

#[cfg(test)]
mod tests {
    use super::*;

    /// gcd-of-minors oracle for elementary divisors
    fn minors_gcd(m: &IntMat, k: usize) -> BigInt {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if k > n {
                return vec![];
            }
            let mut out = Vec::new();
            for last in k - 1..n {
                for mut c in combos(last, k - 1) {
                    c.push(last);
                    out.push(c);
                }
            }
            out
        }
        fn det(m: &IntMat, rows: &[usize], cols: &[usize]) -> BigInt {
            if rows.is_empty() {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for (idx, &c) in cols.iter().enumerate() {
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = &m[(rows[0], c)] * det(m, &rows[1..], &sub_cols);
                if idx % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let mut g = BigInt::zero();
        for rs in combos(m.nrows(), k) {
            for cs in combos(m.ncols(), k) {
                g = g.gcd(&det(m, &rs, &cs));
            }
        }
        g
    }

    #[test]
    fn snf_2468() {
        let m = IntMat::from_i64(&[vec![2, 4], vec![6, 8]]);
        let s = snf(&m);
        assert_eq!(s.d, IntMat::from_i64(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(s.u.mul(&m).mul(&s.w), s.d);
        // gcd-of-minors oracle
        let d1 = minors_gcd(&m, 1);
        let d2 = minors_gcd(&m, 2);
        assert_eq!(s.d[(0, 0)], d1);
        assert_eq!(&s.d[(0, 0)] * &s.d[(1, 1)], d2);
    }

    #[test]
    fn snf_identity_and_zero() {
        let s = snf(&IntMat::identity(3));
        assert_eq!(s.d, IntMat::identity(3));
        let z = IntMat::from_i64(&[vec![0]]);
        let s = snf(&z);
        assert_eq!(s.d, z);
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn snf_divisibility_chain_and_product() {
        let cases = vec![
            vec![vec![4, 6, 2], vec![2, 8, 10], vec![0, 12, 6]],
            vec![vec![1, 2], vec![3, 4], vec![5, 6]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![6, 10, 15]],
        ];
        for c in cases {
            let m = IntMat::from_i64(&c);
            let s = snf(&m);
            assert_eq!(s.u.mul(&m).mul(&s.w), s.d, "transform check for {:?}", c);
            for i in 0..s.rank.saturating_sub(1) {
                assert!((&s.d[(i + 1, i + 1)] % &s.d[(i, i)]).is_zero(), "divisibility for {:?}", c);
            }
            for k in 1..=s.rank {
                let g = minors_gcd(&m, k);
                let prod: BigInt = (0..k).map(|i| s.d[(i, i)].clone()).product();
                assert_eq!(prod, g, "minors oracle k={} for {:?}", k, c);
            }
        }
    }

    #[test]
    fn hnf_canonical() {
        let m = IntMat::from_i64(&[vec![2, 3, 6], vec![4, 8, 10], vec![6, 11, 16]]);
        let h = hnf(&m);
        assert_eq!(h.u.mul(&m), h.h);
        for (r, &c) in h.pivots.iter().enumerate() {
            assert!(h.h[(r, c)].is_positive());
            for i in 0..r {
                assert!(!h.h[(i, c)].is_negative() && h.h[(i, c)] < h.h[(r, c)]);
            }
        }
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMat::from_i64(&[vec![1, 2]]);
        let k = right_kernel(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let lin: BigInt = &v[0] + 2 * &v[1];
        assert!(lin.is_zero());
        assert!(!v[0].is_zero() || !v[1].is_zero());

        let b = vec![BigInt::from(7)];
        let x = solve(&m, &b).unwrap();
        let s7: BigInt = &x[0] + 2 * &x[1];
        assert_eq!(s7, BigInt::from(7));
        let none = solve(&IntMat::from_i64(&[vec![2]]), &[BigInt::from(3)]);
        assert!(none.is_none());
    }

    #[test]
    fn solve_mod_works() {
        let m = IntMat::from_i64(&[vec![2, 0], vec![0, 3]]);
        let b = vec![BigInt::from(4), BigInt::from(1)];
        let x = solve_mod(&m, &b, &BigInt::from(6)).unwrap();
        let r0: BigInt = 2 * &x[0] - 4;
        assert_eq!(r0.mod_floor(&BigInt::from(6)), BigInt::zero());
        let r1: BigInt = 3 * &x[1] - 1;
        assert_eq!(r1.mod_floor(&BigInt::from(6)), BigInt::zero());
    }

    #[test]
    fn saturation() {
        // rowspan Q of [2 4] is spanned by (1,2); saturation must contain it
        let m = IntMat::from_i64(&[vec![2, 4]]);
        let sat = row_saturation(&m);
        assert_eq!(sat.len(), 1);
        let v = &sat[0];
        assert_eq!(&v[1], &(2 * &v[0]));
        assert_eq!(v[0].abs(), BigInt::one());
    }
}
