//! State spaces from the gluing pairing.
//!
//! Surfaces bounding `n` circles are spanned, modulo the skein relation, by
//! the weighted partitions `D^n_0(<K)`. The Gram matrix of the gluing
//! pairing on that spanning set has rank `dim A(n)`, and bending identifies
//! `Hom(n, m)` in the negligible quotient with `A(n + m)`.

use rayon::prelude::*;

use num_traits::Zero;

use crate::diagram::{Morphism, SurfaceDiagram};
use crate::error::{Error, Result};
use crate::linalg::{rank_kernel, ExactMatrix};
use crate::partition::{enumerate_weighted_partitions, SizeLimit, WeightedPartition};
use crate::skein::{evaluate_closed, evaluate_scalar, Theory};
use crate::Rational;

/// Pairing of two basis surfaces `0 -> n`: glue along the common boundary
/// and evaluate the closed result.
pub fn pair_diagrams(s1: &SurfaceDiagram, s2: &SurfaceDiagram, theory: &Theory) -> Result<Rational> {
    if s1.n() != 0 || s2.n() != 0 || s1.m() != s2.m() {
        return Err(Error::Arity { left: s1.m(), right: s2.m() });
    }
    let closed = s2.compose(&s1.mirror())?;
    Ok(evaluate_closed(closed.closed(), theory.sequence()))
}

/// Bilinear extension of [`pair_diagrams`].
pub fn pairing(s1: &Morphism, s2: &Morphism, theory: &Theory) -> Result<Rational> {
    if s1.n() != 0 || s2.n() != 0 || s1.m() != s2.m() {
        return Err(Error::Arity { left: s1.m(), right: s2.m() });
    }
    let mut total = Rational::zero();
    for (d1, c1) in s1.terms() {
        for (d2, c2) in s2.terms() {
            total += c1 * c2 * pair_diagrams(d1, d2, theory)?;
        }
    }
    Ok(total)
}

/// Gram matrix of the pairing on a list of surfaces `0 -> n`. Rows are
/// computed in parallel; the result does not depend on scheduling.
pub fn gram_of(basis: &[SurfaceDiagram], theory: &Theory) -> Result<ExactMatrix> {
    let rows: Vec<Vec<Rational>> = basis
        .par_iter()
        .map(|bi| basis.iter().map(|bj| pair_diagrams(bi, bj, theory)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if basis.is_empty() {
        return Ok(ExactMatrix::zeros(0, 0));
    }
    Ok(ExactMatrix::from_rows(rows))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramResult {
    pub basis: Vec<WeightedPartition>,
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub kernel: Vec<Vec<Rational>>,
}

impl GramResult {
    pub fn basis_diagrams(&self) -> Vec<SurfaceDiagram> {
        self.basis.iter().cloned().map(SurfaceDiagram::from_parts).collect()
    }
}

pub fn gram_matrix(n: usize, theory: &Theory, limit: SizeLimit) -> Result<GramResult> {
    let basis = enumerate_weighted_partitions(0, n, theory.k(), limit)?;
    let diagrams: Vec<SurfaceDiagram> = basis.iter().cloned().map(SurfaceDiagram::from_parts).collect();
    let matrix = gram_of(&diagrams, theory)?;
    let rk = rank_kernel(&matrix);
    Ok(GramResult { basis, matrix, rank: rk.rank, kernel: rk.kernel })
}

/// `dim A(n)`.
pub fn statespace_dim(n: usize, theory: &Theory, limit: SizeLimit) -> Result<usize> {
    Ok(gram_matrix(n, theory, limit)?.rank)
}

/// Dimension of `Hom(n, m)` modulo negligible morphisms: the basis of
/// `Hom(n, m)` bent into `Hom(0, n + m)` and paired.
pub fn quotient_hom_dim(n: usize, m: usize, theory: &Theory, limit: SizeLimit) -> Result<usize> {
    let basis = enumerate_weighted_partitions(n, m, theory.k(), limit)?;
    let bent: Vec<SurfaceDiagram> =
        basis.into_iter().map(|w| SurfaceDiagram::from_parts(w).bend()).collect();
    let matrix = gram_of(&bent, theory)?;
    Ok(rank_kernel(&matrix).rank)
}

/// Hankel matrix `(α_{i+j})` for `0 <= i, j < K`, the one-circle Gram
/// matrix computed without any gluing.
pub fn hankel_matrix(theory: &Theory) -> ExactMatrix {
    let k = theory.k() as usize;
    ExactMatrix::from_fn(k, k, |i, j| theory.alpha((i + j) as u32))
}

/// Closes `x` up and evaluates.
pub fn trace_morphism(x: &Morphism, theory: &Theory) -> Result<Rational> {
    evaluate_scalar(&x.close_trace()?, theory.sequence())
}

/// A capping surface that pairs nontrivially with the bent morphism, or
/// `None` if the morphism is negligible.
pub fn negligibility_witness(
    x: &Morphism,
    theory: &Theory,
    limit: SizeLimit,
) -> Result<Option<(SurfaceDiagram, Rational)>> {
    let bent = x.bend();
    let basis = enumerate_weighted_partitions(0, x.n() + x.m(), theory.k(), limit)?;
    for w in basis {
        let cap = SurfaceDiagram::from_parts(w);
        let v = pairing(&bent, &Morphism::from_diagram(cap.clone()), theory)?;
        if !v.is_zero() {
            return Ok(Some((cap, v)));
        }
    }
    Ok(None)
}

pub fn is_negligible(x: &Morphism, theory: &Theory, limit: SizeLimit) -> Result<bool> {
    Ok(negligibility_witness(x, theory, limit)?.is_none())
}

/// Equality in the quotient by negligible morphisms.
pub fn equal_in_quotient(x: &Morphism, y: &Morphism, theory: &Theory, limit: SizeLimit) -> Result<bool> {
    if (x.n(), x.m()) != (y.n(), y.m()) {
        return Err(Error::Arity { left: x.n() + x.m(), right: y.n() + y.m() });
    }
    is_negligible(&(x - y), theory, limit)
}
