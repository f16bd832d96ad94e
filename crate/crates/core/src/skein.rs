//! Evaluation of closed components, reduction to skein normal form, the
//! genus-forgetting functor to the partition category, and arithmetic in
//! the partition category itself.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Pow, Zero};

use crate::diagram::{ClosedComponents, Morphism, SurfaceDiagram};
use crate::error::{Error, Result};
use crate::partition::{stack_partitions, SetPartition, UnionFind, WeightedPartition};
use crate::ratfun::{EvaluationSequence, RationalSeries, SkeinData};
use crate::Rational;

/// Everything derived from one rational generating function: the series,
/// its memoized coefficients and its skein data.
#[derive(Debug, Clone)]
pub struct Theory {
    alpha: EvaluationSequence,
    skein: SkeinData,
}

impl Theory {
    pub fn new(series: RationalSeries) -> Self {
        let skein = series.skein_data();
        Theory { alpha: EvaluationSequence::new(series), skein }
    }

    /// The constant sequence `α = (t, t, ..)`.
    pub fn deligne(t: Rational) -> Self {
        Theory::new(RationalSeries::deligne(t))
    }

    pub fn series(&self) -> &RationalSeries {
        self.alpha.series()
    }

    pub fn alpha(&self, genus: u32) -> Rational {
        self.alpha.alpha(genus)
    }

    pub fn sequence(&self) -> &EvaluationSequence {
        &self.alpha
    }

    pub fn skein(&self) -> &SkeinData {
        &self.skein
    }

    pub fn k(&self) -> u32 {
        self.skein.k
    }

    /// Coordinates of a genus-`g` piece in the reduced basis of genera
    /// `0..K`, obtained by applying the skein recurrence.
    pub fn reduce_genus(&self, g: u32) -> Vec<(u32, Rational)> {
        let k = self.skein.k;
        if g < k {
            return vec![(g, Rational::one())];
        }
        // rows[j] = coordinates of x^j for j in 0..=g
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(g as usize + 1);
        for j in 0..=g {
            let row = if j < k {
                let mut r = vec![Rational::zero(); k as usize];
                r[j as usize] = Rational::one();
                r
            } else {
                let mut r = vec![Rational::zero(); k as usize];
                for (i, c) in self.skein.weights() {
                    for (a, v) in r.iter_mut().zip(&rows[j as usize - i]) {
                        *a += &c * v;
                    }
                }
                r
            };
            rows.push(row);
        }
        rows.pop()
            .unwrap()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as u32, c))
            .collect()
    }
}

/// `∏ α_g^(c_g)`; the empty multiset evaluates to 1.
pub fn evaluate_closed(closed: &ClosedComponents, alpha: &EvaluationSequence) -> Rational {
    closed
        .iter()
        .fold(Rational::one(), |acc, (&g, &c)| acc * Pow::pow(alpha.alpha(g), c))
}

/// Replaces every closed component by its value.
pub fn evaluate_morphism(x: &Morphism, alpha: &EvaluationSequence) -> Morphism {
    let mut out = Morphism::zero(x.n(), x.m());
    for (d, c) in x.terms() {
        let v = evaluate_closed(d.closed(), alpha);
        if v.is_zero() {
            continue;
        }
        out.add_term(SurfaceDiagram::from_parts(d.parts().clone()), c * v);
    }
    out
}

/// Value of a `0 -> 0` morphism.
pub fn evaluate_scalar(x: &Morphism, alpha: &EvaluationSequence) -> Result<Rational> {
    if x.n() != 0 || x.m() != 0 {
        return Err(Error::Arity { left: x.n(), right: x.m() });
    }
    Ok(x.terms()
        .iter()
        .map(|(d, c)| c * evaluate_closed(d.closed(), alpha))
        .fold(Rational::zero(), |a, b| a + b))
}

/// Skein normal form: closed components evaluated, every genus below `K`.
pub fn skein_reduce(x: &Morphism, theory: &Theory) -> Morphism {
    let mut cache: HashMap<u32, Vec<(u32, Rational)>> = HashMap::new();
    let mut out = Morphism::zero(x.n(), x.m());
    for (d, c) in x.terms() {
        let scalar = c * evaluate_closed(d.closed(), theory.sequence());
        if scalar.is_zero() {
            continue;
        }
        let parts = d.parts();
        let expansions: Vec<Vec<(u32, Rational)>> = parts
            .genus()
            .iter()
            .map(|&g| cache.entry(g).or_insert_with(|| theory.reduce_genus(g)).clone())
            .collect();
        expand_product(&expansions, |genus, coeff| {
            let wp = WeightedPartition::new(parts.base().clone(), genus.to_vec()).unwrap();
            out.add_term(SurfaceDiagram::from_parts(wp), &scalar * coeff);
        });
    }
    out
}

fn expand_product(factors: &[Vec<(u32, Rational)>], mut emit: impl FnMut(&[u32], &Rational)) {
    let mut genus = vec![0u32; factors.len()];
    fn go(
        i: usize,
        factors: &[Vec<(u32, Rational)>],
        genus: &mut [u32],
        acc: Rational,
        emit: &mut dyn FnMut(&[u32], &Rational),
    ) {
        if i == factors.len() {
            emit(genus, &acc);
            return;
        }
        for (g, c) in &factors[i] {
            genus[i] = *g;
            go(i + 1, factors, genus, &acc * c, emit);
        }
    }
    go(0, factors, &mut genus, Rational::one(), &mut emit);
}

/// Choice of the next rewrite in [`skein_rewrite`]: given the offending
/// terms, each listed with the indices of its parts of genus `>= K`, return
/// a term index and a position in that term's list.
pub type RewriteChooser<'a> = dyn FnMut(&[(&SurfaceDiagram, Vec<usize>)]) -> (usize, usize) + 'a;

/// Default strategy: highest-genus part of the first offending term.
pub fn first_term_highest_part(offending: &[(&SurfaceDiagram, Vec<usize>)]) -> (usize, usize) {
    let (d, parts) = &offending[0];
    let genus = d.parts().genus();
    let best = (0..parts.len())
        .max_by_key(|&i| (genus[parts[i]], std::cmp::Reverse(i)))
        .unwrap();
    (0, best)
}

/// Reduces by single applications of the skein relation, one part at a
/// time, in the order picked by `choose`. The result is the same normal
/// form as [`skein_reduce`] for every strategy.
pub fn skein_rewrite(x: &Morphism, theory: &Theory, choose: &mut RewriteChooser<'_>) -> Morphism {
    let k = theory.k();
    let mut current = evaluate_morphism(x, theory.sequence());
    loop {
        let offending: Vec<(&SurfaceDiagram, Vec<usize>)> = current
            .terms()
            .keys()
            .filter_map(|d| {
                let high: Vec<usize> =
                    d.parts().genus().iter().enumerate().filter(|(_, &g)| g >= k).map(|(i, _)| i).collect();
                (!high.is_empty()).then_some((d, high))
            })
            .collect();
        if offending.is_empty() {
            return current;
        }
        let (ti, pi) = choose(&offending);
        let target = offending[ti].0.clone();
        let part = offending[ti].1[pi];
        let coeff = current.coeff(&target);
        current.add_term(target.clone(), -coeff.clone());
        let g = target.parts().genus()[part];
        for (i, w) in theory.skein().weights() {
            let mut wp = target.parts().clone();
            wp.genus_mut()[part] = g - i as u32;
            current.add_term(SurfaceDiagram::from_parts(wp), &coeff * w);
        }
    }
}

/// Linear combination of set partitions `n -> m` (a morphism of the
/// partition category).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMorphism {
    n: usize,
    m: usize,
    terms: BTreeMap<SetPartition, Rational>,
}

impl PartitionMorphism {
    pub fn zero(n: usize, m: usize) -> Self {
        PartitionMorphism { n, m, terms: BTreeMap::new() }
    }

    pub fn from_partition(p: SetPartition) -> Self {
        let mut x = PartitionMorphism::zero(p.n(), p.m());
        x.add_term(p, Rational::one());
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &SetPartition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: SetPartition, c: Rational) {
        debug_assert_eq!((p.n(), p.m()), (self.n, self.m));
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Embeds as genus-zero diagrams without closed components.
    pub fn to_morphism(&self) -> Morphism {
        let mut out = Morphism::zero(self.n, self.m);
        for (p, c) in &self.terms {
            out.add_term(SurfaceDiagram::from_parts(WeightedPartition::genus_zero(p.clone())), c.clone());
        }
        out
    }
}

impl fmt::Display for PartitionMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{p}]")?;
        }
        Ok(())
    }
}

/// Forgets genera and sends each closed component to `t`.
pub fn functor_f(x: &Morphism, t: &Rational) -> PartitionMorphism {
    let mut out = PartitionMorphism::zero(x.n(), x.m());
    for (d, c) in x.terms() {
        out.add_term(d.parts().base().clone(), c * Pow::pow(t, d.closed_count()));
    }
    out
}

/// Composition in the partition category: middle-only components become
/// factors of `t`.
pub fn partition_compose(
    lower: &PartitionMorphism,
    upper: &PartitionMorphism,
    t: &Rational,
) -> Result<PartitionMorphism> {
    if lower.m != upper.n {
        return Err(Error::Arity { left: lower.m, right: upper.n });
    }
    let mut out = PartitionMorphism::zero(lower.n, upper.m);
    for (p, c1) in &lower.terms {
        for (q, c2) in &upper.terms {
            let (composite, report) = stack_partitions(p, q)?;
            let r = report.middle_only_count() as u32;
            out.add_term(composite, c1 * c2 * Pow::pow(t, r));
        }
    }
    Ok(out)
}

/// `Σ c · t^r`, `r` the number of components after identifying `i` with `i'`.
pub fn trace_partition(x: &PartitionMorphism, t: &Rational) -> Result<Rational> {
    if x.n != x.m {
        return Err(Error::Arity { left: x.n, right: x.m });
    }
    let n = x.n;
    let mut total = Rational::zero();
    for (p, c) in &x.terms {
        let ids = p.block_ids();
        let mut uf = UnionFind::new(p.num_blocks());
        for i in 0..n {
            uf.union(ids[i], ids[n + i]);
        }
        let r = (0..p.num_blocks()).filter(|&b| uf.find(b) == b).count() as u32;
        total += c * Pow::pow(t, r);
    }
    Ok(total)
}
