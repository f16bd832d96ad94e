//! Rational generating functions `Z(T) = P(T) / Q(T)` for the evaluation
//! sequence of closed surfaces, and the skein data derived from them.

use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Dense polynomial over the rationals, ascending coefficients, no trailing
/// zeros. The zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    /// Euclidean division `self = q * d + r`.
    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.lead().expect("division by zero polynomial").clone();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap() / &dl;
            for (i, di) in d.0.iter().enumerate() {
                r[shift + i] -= &c * di;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.lead().cloned() {
            Some(l) => a.scale(&(Rational::one() / l)),
            None => a,
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `Z(T) = P/Q` with `Q(0) = 1` and `gcd(P, Q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    num: Poly,
    den: Poly,
}

impl RationalSeries {
    /// Normalizes raw coefficient lists: scales so `Q(0) = 1`, cancels the
    /// common factor, trims zeros.
    pub fn normalize(num: Vec<Rational>, den: Vec<Rational>) -> Result<Self> {
        let den = Poly::new(den);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::UndefinedAtZero);
        }
        let inv = Rational::one() / d0;
        let num = Poly::new(num).scale(&inv);
        let den = den.scale(&inv);
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        // g(0) != 0 because Q(0) != 0, so rescale once more
        let inv = Rational::one() / den.coeff(0);
        Ok(RationalSeries { num: num.scale(&inv), den: den.scale(&inv) })
    }

    /// The constant sequence `(t, t, t, ..)`, i.e. `t / (1 - T)`.
    pub fn deligne(t: Rational) -> Self {
        RationalSeries::normalize(vec![t], vec![Rational::one(), -Rational::one()])
            .expect("1 - T is a valid denominator")
    }

    pub fn from_integers(num: &[i64], den: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        RationalSeries::normalize(conv(num), conv(den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// `deg P`, `None` when `P = 0`.
    pub fn num_degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn den_degree(&self) -> usize {
        self.den.degree().expect("denominator is nonzero")
    }

    /// `α_0 .. α_max` by power-series long division.
    pub fn coefficients(&self, max_genus: usize) -> Vec<Rational> {
        let mut alpha: Vec<Rational> = Vec::with_capacity(max_genus + 1);
        for g in 0..=max_genus {
            alpha.push(self.next_coefficient(&alpha, g));
        }
        alpha
    }

    fn next_coefficient(&self, alpha: &[Rational], g: usize) -> Rational {
        let mut v = self.num.coeff(g);
        for i in 1..=self.den_degree().min(g) {
            v -= self.den.coeff(i) * &alpha[g - i];
        }
        v
    }

    pub fn skein_data(&self) -> SkeinData {
        let m = self.den_degree();
        let n_plus_1 = self.num.degree().map_or(0, |d| d + 1);
        let k = n_plus_1.max(m).max(1);
        let e: Vec<Rational> = (1..=m)
            .map(|i| if i % 2 == 0 { self.den.coeff(i) } else { -self.den.coeff(i) })
            .collect();
        let data = SkeinData { k: k as u32, e };

        let alpha = self.coefficients(k + 2 * m);
        for g in k..=k + 2 * m {
            assert_eq!(
                data.recur(|j| alpha[j].clone(), g),
                alpha[g],
                "skein recurrence disagrees with the series at genus {g}"
            );
        }
        data
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

/// `K = max(deg P + 1, deg Q)` and `e_1 .. e_M` with
/// `Q(T) = 1 - e_1 T + e_2 T^2 - .. + (-1)^M e_M T^M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinData {
    pub k: u32,
    pub e: Vec<Rational>,
}

impl SkeinData {
    pub fn m(&self) -> usize {
        self.e.len()
    }

    /// Signed recurrence weights `c_i = (-1)^(i+1) e_i`, so that
    /// `x^g = Σ c_i x^(g-i)` for `g >= K`.
    pub fn weights(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.e.iter().enumerate().map(|(j, e)| {
            let i = j + 1;
            (i, if i % 2 == 1 { e.clone() } else { -e.clone() })
        })
    }

    fn recur(&self, lower: impl Fn(usize) -> Rational, g: usize) -> Rational {
        self.weights().fold(Rational::zero(), |acc, (i, c)| acc + c * lower(g - i))
    }
}

/// Memoized `g -> α_g` backed by a series. Safe to share between threads.
#[derive(Debug)]
pub struct EvaluationSequence {
    series: RationalSeries,
    table: RwLock<Vec<Rational>>,
}

impl EvaluationSequence {
    pub fn new(series: RationalSeries) -> Self {
        EvaluationSequence { series, table: RwLock::new(Vec::new()) }
    }

    pub fn series(&self) -> &RationalSeries {
        &self.series
    }

    pub fn alpha(&self, genus: u32) -> Rational {
        let g = genus as usize;
        if let Some(v) = self.table.read().unwrap().get(g) {
            return v.clone();
        }
        let mut table = self.table.write().unwrap();
        while table.len() <= g {
            let next = self.series.next_coefficient(&table, table.len());
            table.push(next);
        }
        table[g].clone()
    }
}

impl Clone for EvaluationSequence {
    fn clone(&self) -> Self {
        EvaluationSequence {
            series: self.series.clone(),
            table: RwLock::new(self.table.read().unwrap().clone()),
        }
    }
}
