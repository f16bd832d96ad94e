//! Exact rank and kernel of rational matrices.
//!
//! Ground truth is fraction-free (Bareiss) elimination over the integers
//! after clearing row denominators. [`rank_kernel`] first runs Gaussian
//! elimination modulo word-size primes; a modular answer is only returned
//! once it has been certified exactly:
//!
//! * a minor that is nonzero mod `p` is nonzero over the integers, so the
//!   modular rank is a lower bound;
//! * `cols - rank` kernel vectors with an identity block on the free
//!   columns, each checked by exact multiplication, give the upper bound.
//!
//! Anything that fails certification falls back to Bareiss.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::Rational;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rows scaled to primitive integer vectors; preserves rank and kernel.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                let ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
                let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                if g.is_zero() || g.is_one() {
                    ints
                } else {
                    ints.into_iter().map(|x| x / &g).collect()
                }
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rank and a kernel basis. Kernel vectors are normalized to have a single
/// `1` among the free (non-pivot) columns and zeros elsewhere there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Which route produced a certified answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Modular,
    Bareiss,
}

/// Fraction-free elimination to row echelon form; returns the rank,
/// pivot columns and kernel basis.
pub fn bareiss_rank_kernel(m: &ExactMatrix) -> RankKernel {
    let mut a = m.integer_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, below) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in below.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = piv * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let kernel = kernel_from_echelon(&a[..r], &pivots, cols);
    RankKernel { rank: r, pivots, kernel }
}

/// Back substitution on an integer row echelon form with the given pivots.
fn kernel_from_echelon(ech: &[Vec<BigInt>], pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let row = &ech[k];
            let mut s = Rational::zero();
            for j in pc + 1..cols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s += Rational::from_integer(row[j].clone()) * &v[j];
                }
            }
            v[pc] = -s / Rational::from_integer(row[pc].clone());
        }
        kernel.push(v);
    }
    kernel
}

/// The three largest primes below 2^62.
const PRIMES: [u64; 3] = [4611686018427387847, 4611686018427387817, 4611686018427387787];

fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let r = (x % BigInt::from(p)).to_i128().unwrap();
    if r < 0 {
        (r + p as i128) as u64
    } else {
        r as u64
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Gaussian elimination mod `p`; returns `(pivot rows, pivot columns)` in
/// original indices. The submatrix they select is nonsingular mod `p`.
pub fn modular_pivots(rows: &[Vec<BigInt>], cols: usize, p: u64) -> (Vec<usize>, Vec<usize>) {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce_mod(x, p)).collect()).collect();
    let mut order: Vec<usize> = (0..rows.len()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(pi) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pi);
        order.swap(r, pi);
        let inv = pow_mod(a[r][c], p - 2, p);
        let (top, below) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in below.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, prow[j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (order[..r].to_vec(), pivots)
}

/// Exact rank and kernel, using the certified modular fast path when it
/// succeeds.
pub fn rank_kernel(m: &ExactMatrix) -> RankKernel {
    rank_kernel_with_route(m).0
}

pub fn rank_kernel_with_route(m: &ExactMatrix) -> (RankKernel, Route) {
    if m.rows == 0 || m.cols == 0 {
        return (bareiss_rank_kernel(m), Route::Bareiss);
    }
    let ints = m.integer_rows();
    // the largest modular rank is the best lower bound
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for &p in &PRIMES {
        let (prow, pcol) = modular_pivots(&ints, m.cols, p);
        if best.as_ref().is_none_or(|(_, c)| pcol.len() > c.len()) {
            best = Some((prow, pcol));
        }
    }
    let (prow, pcol) = best.unwrap();
    let rank = pcol.len();
    if rank == m.cols {
        let rk = RankKernel { rank, pivots: pcol, kernel: Vec::new() };
        return (rk, Route::Modular);
    }
    // kernel of the certified-independent rows, then check against all rows
    let sub = ExactMatrix::from_fn(rank, m.cols, |i, j| m[(prow[i], j)].clone());
    let sub_rk = bareiss_rank_kernel(&sub);
    if sub_rk.rank == rank && certify_kernel(m, &sub_rk.kernel) {
        let rk = RankKernel { rank, pivots: sub_rk.pivots, kernel: sub_rk.kernel };
        return (rk, Route::Modular);
    }
    (bareiss_rank_kernel(m), Route::Bareiss)
}

/// `M v = 0` exactly for every `v`.
pub fn certify_kernel(m: &ExactMatrix, kernel: &[Vec<Rational>]) -> bool {
    kernel.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero))
}

/// Exact determinant by Bareiss elimination.
pub fn determinant(m: &ExactMatrix) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut den = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            den *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    let det = if sign < 0 { -det } else { det };
    Rational::new(det, den)
}
