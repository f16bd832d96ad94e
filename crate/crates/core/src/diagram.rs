//! Surface diagrams and the free linear category they span.
//!
//! A basis cobordism `n -> m` is determined up to diffeomorphism rel
//! boundary by which boundary circles share a component, the genus of each
//! such component, and the genera of its closed components. Composition
//! tracks genus through Euler characteristics: gluing along circles adds
//! the Euler characteristics of the pieces.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{
    stack_partitions, BoundaryLabel, MergeReport, SetPartition, Side, UnionFind, WeightedPartition,
};
use crate::Rational;

/// Multiset of closed components, genus -> multiplicity. Entries are never
/// zero.
pub type ClosedComponents = BTreeMap<u32, u32>;

/// Genus of the connected surface obtained by gluing pieces of genus `g_i`
/// with `b_i` boundary circles along `glued` circle pairs, leaving
/// `surviving` boundary circles.
pub fn component_genus(members: &[(u32, usize)], glued: usize, surviving: usize) -> Result<u32> {
    let chi: i64 = members
        .iter()
        .map(|&(g, b)| 2 - 2 * i64::from(g) - b as i64)
        .sum();
    let total_boundary: usize = members.iter().map(|&(_, b)| b).sum();
    debug_assert_eq!(total_boundary, 2 * glued + surviving);
    let twice = 2 - chi - surviving as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::GenusParity(twice));
    }
    Ok((twice / 2) as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceDiagram {
    parts: WeightedPartition,
    closed: ClosedComponents,
}

impl SurfaceDiagram {
    pub fn new(parts: WeightedPartition, closed: ClosedComponents) -> Self {
        let closed = closed.into_iter().filter(|&(_, c)| c > 0).collect();
        SurfaceDiagram { parts, closed }
    }

    pub fn from_parts(parts: WeightedPartition) -> Self {
        SurfaceDiagram { parts, closed: ClosedComponents::new() }
    }

    /// A `0 -> 0` diagram made of closed components only.
    pub fn closed_only(closed: ClosedComponents) -> Self {
        let empty = WeightedPartition::genus_zero(SetPartition::identity(0));
        SurfaceDiagram::new(empty, closed)
    }

    pub fn n(&self) -> usize {
        self.parts.n()
    }

    pub fn m(&self) -> usize {
        self.parts.m()
    }

    pub fn parts(&self) -> &WeightedPartition {
        &self.parts
    }

    pub fn closed(&self) -> &ClosedComponents {
        &self.closed
    }

    pub fn closed_count(&self) -> u32 {
        self.closed.values().sum()
    }

    pub fn identity(n: usize) -> Self {
        SurfaceDiagram::from_parts(WeightedPartition::genus_zero(SetPartition::identity(n)))
    }

    pub fn compose(&self, upper: &SurfaceDiagram) -> Result<SurfaceDiagram> {
        let lower = self;
        let (composite, report) = stack_partitions(lower.parts.base(), upper.parts.base())?;
        let mut closed = lower.closed.clone();
        add_closed(&mut closed, &upper.closed);
        let mut genus = Vec::with_capacity(report.num_surviving);
        for (idx, class) in report.classes.iter().enumerate() {
            let g = class_genus(&report, idx, &lower.parts, &upper.parts)?;
            if class.is_middle_only() {
                *closed.entry(g).or_insert(0) += 1;
            } else {
                genus.push(g);
            }
        }
        let parts = WeightedPartition::new(composite, genus)?;
        Ok(SurfaceDiagram { parts, closed })
    }

    pub fn tensor(&self, other: &SurfaceDiagram) -> SurfaceDiagram {
        let (n1, m1) = (self.n(), self.m());
        let (n, m) = (n1 + other.n(), m1 + other.m());
        let shift = |l: BoundaryLabel| match l.side {
            Side::Bottom => BoundaryLabel::bottom(l.index + n1),
            Side::Top => BoundaryLabel::top(l.index + m1),
        };
        let mut blocks: Vec<(Vec<BoundaryLabel>, u32)> =
            self.parts.parts().map(|(b, g)| (b.to_vec(), g)).collect();
        blocks.extend(other.parts.parts().map(|(b, g)| (b.iter().map(|&l| shift(l)).collect(), g)));
        let parts = WeightedPartition::from_parts(n, m, blocks).expect("disjoint union is a partition");
        let mut closed = self.closed.clone();
        add_closed(&mut closed, &other.closed);
        SurfaceDiagram { parts, closed }
    }

    /// Bends the bottom circles up: bottom `i` becomes top `m + i`.
    pub fn bend(&self) -> SurfaceDiagram {
        let (n, m) = (self.n(), self.m());
        let parts = self.parts.relabeled(0, n + m, |l| match l.side {
            Side::Bottom => BoundaryLabel::top(m + l.index),
            Side::Top => l,
        });
        SurfaceDiagram { parts, closed: self.closed.clone() }
    }

    /// Swaps source and target.
    pub fn mirror(&self) -> SurfaceDiagram {
        let parts = self
            .parts
            .relabeled(self.m(), self.n(), |l| BoundaryLabel { side: l.side.flip(), index: l.index });
        SurfaceDiagram { parts, closed: self.closed.clone() }
    }

    /// Glues top circle `i` to bottom circle `i` for every `i`.
    pub fn close_trace(&self) -> Result<SurfaceDiagram> {
        let n = self.n();
        if n != self.m() {
            return Err(Error::Arity { left: n, right: self.m() });
        }
        let base = self.parts.base();
        let ids = base.block_ids();
        let mut uf = UnionFind::new(base.num_blocks());
        for i in 0..n {
            uf.union(ids[i], ids[n + i]);
        }
        let mut members: BTreeMap<usize, Vec<(u32, usize)>> = BTreeMap::new();
        for (b, (block, g)) in self.parts.parts().enumerate() {
            members.entry(uf.find(b)).or_default().push((g, block.len()));
        }
        let mut closed = self.closed.clone();
        for pieces in members.values() {
            let boundary: usize = pieces.iter().map(|&(_, b)| b).sum();
            let g = component_genus(pieces, boundary / 2, 0)?;
            *closed.entry(g).or_insert(0) += 1;
        }
        Ok(SurfaceDiagram::closed_only(closed))
    }
}

fn class_genus(
    report: &MergeReport,
    idx: usize,
    lower: &WeightedPartition,
    upper: &WeightedPartition,
) -> Result<u32> {
    let class = &report.classes[idx];
    let piece = |w: &WeightedPartition, b: usize| (w.genus()[b], w.base().blocks()[b].len());
    let members: Vec<(u32, usize)> = class
        .lower_blocks
        .iter()
        .map(|&b| piece(lower, b))
        .chain(class.upper_blocks.iter().map(|&b| piece(upper, b)))
        .collect();
    component_genus(&members, class.glued, class.surviving.len())
}

pub(crate) fn add_closed(into: &mut ClosedComponents, from: &ClosedComponents) {
    for (&g, &c) in from {
        *into.entry(g).or_insert(0) += c;
    }
}

impl fmt::Display for SurfaceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)?;
        if !self.closed.is_empty() {
            let cl: Vec<String> = self.closed.iter().map(|(g, c)| format!("{g}:{c}")).collect();
            write!(f, " closed{{{}}}", cl.join(","))?;
        }
        Ok(())
    }
}

/// A finite linear combination of diagrams `n -> m` with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    n: usize,
    m: usize,
    terms: BTreeMap<SurfaceDiagram, Rational>,
}

impl Morphism {
    pub fn zero(n: usize, m: usize) -> Self {
        Morphism { n, m, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: SurfaceDiagram) -> Self {
        Morphism::term(Rational::one(), d)
    }

    pub fn term(coeff: Rational, d: SurfaceDiagram) -> Self {
        let mut x = Morphism::zero(d.n(), d.m());
        x.add_term(d, coeff);
        x
    }

    pub fn from_terms(
        n: usize,
        m: usize,
        terms: impl IntoIterator<Item = (SurfaceDiagram, Rational)>,
    ) -> Result<Self> {
        let mut x = Morphism::zero(n, m);
        for (d, c) in terms {
            if d.n() != n || d.m() != m {
                return Err(Error::Arity { left: n, right: d.n() });
            }
            x.add_term(d, c);
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<SurfaceDiagram, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &SurfaceDiagram) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `coeff * d`; `d` must have this morphism's arity.
    pub fn add_term(&mut self, d: SurfaceDiagram, coeff: Rational) {
        debug_assert_eq!((d.n(), d.m()), (self.n, self.m));
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Morphism {
        let mut out = Morphism::zero(self.n, self.m);
        if !c.is_zero() {
            for (d, x) in &self.terms {
                out.terms.insert(d.clone(), x * c);
            }
        }
        out
    }

    /// Applies a linear map given on basis diagrams.
    pub(crate) fn map_diagrams(
        &self,
        n: usize,
        m: usize,
        f: impl Fn(&SurfaceDiagram) -> Result<SurfaceDiagram>,
    ) -> Result<Morphism> {
        let mut out = Morphism::zero(n, m);
        for (d, c) in &self.terms {
            out.add_term(f(d)?, c.clone());
        }
        Ok(out)
    }

    /// `self` followed by `upper`.
    pub fn compose(&self, upper: &Morphism) -> Result<Morphism> {
        if self.m != upper.n {
            return Err(Error::Arity { left: self.m, right: upper.n });
        }
        let mut out = Morphism::zero(self.n, upper.m);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &upper.terms {
                out.add_term(d1.compose(d2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Morphism) -> Morphism {
        let mut out = Morphism::zero(self.n + other.n, self.m + other.m);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                out.add_term(d1.tensor(d2), c1 * c2);
            }
        }
        out
    }

    pub fn bend(&self) -> Morphism {
        self.map_diagrams(0, self.n + self.m, |d| Ok(d.bend())).expect("bend is total")
    }

    pub fn mirror(&self) -> Morphism {
        self.map_diagrams(self.m, self.n, |d| Ok(d.mirror())).expect("mirror is total")
    }

    pub fn close_trace(&self) -> Result<Morphism> {
        if self.n != self.m {
            return Err(Error::Arity { left: self.n, right: self.m });
        }
        self.map_diagrams(0, 0, SurfaceDiagram::close_trace)
    }

    pub fn identity(n: usize) -> Self {
        Morphism::from_diagram(SurfaceDiagram::identity(n))
    }

    /// Pair of pants `2 -> 1`.
    pub fn merge() -> Self {
        Morphism::from_diagram(genus_zero_block(2, 1, &[b(1), b(2), t(1)]))
    }

    /// Pair of pants `1 -> 2`.
    pub fn split() -> Self {
        Morphism::from_diagram(genus_zero_block(1, 2, &[b(1), t(1), t(2)]))
    }

    /// Disk `0 -> 1`.
    pub fn cup() -> Self {
        Morphism::from_diagram(genus_zero_block(0, 1, &[t(1)]))
    }

    /// Disk `1 -> 0`.
    pub fn cap() -> Self {
        Morphism::from_diagram(genus_zero_block(1, 0, &[b(1)]))
    }

    /// Transposition of two circles.
    pub fn crossing() -> Self {
        let p = SetPartition::new(2, 2, vec![vec![b(1), t(2)], vec![b(2), t(1)]]).unwrap();
        Morphism::from_diagram(SurfaceDiagram::from_parts(WeightedPartition::genus_zero(p)))
    }

    /// Cylinder with one handle `1 -> 1`.
    pub fn handle() -> Self {
        let p = SetPartition::identity(1);
        Morphism::from_diagram(SurfaceDiagram::from_parts(WeightedPartition::new(p, vec![1]).unwrap()))
    }

    /// Permutation diagram `{i, σ(i)'}`; `perm` is 0-based.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let blocks = perm.iter().enumerate().map(|(i, &j)| vec![b(i + 1), t(j + 1)]).collect();
        let p = SetPartition::new(n, n, blocks)?;
        Ok(Morphism::from_diagram(SurfaceDiagram::from_parts(WeightedPartition::genus_zero(p))))
    }
}

fn b(i: usize) -> BoundaryLabel {
    BoundaryLabel::bottom(i)
}

fn t(i: usize) -> BoundaryLabel {
    BoundaryLabel::top(i)
}

fn genus_zero_block(n: usize, m: usize, block: &[BoundaryLabel]) -> SurfaceDiagram {
    let p = SetPartition::new(n, m, vec![block.to_vec()]).unwrap();
    SurfaceDiagram::from_parts(WeightedPartition::genus_zero(p))
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{d}]")?;
        }
        Ok(())
    }
}

impl Add for &Morphism {
    type Output = Morphism;

    fn add(self, rhs: &Morphism) -> Morphism {
        assert_eq!((self.n, self.m), (rhs.n, rhs.m), "adding morphisms of different arity");
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Morphism {
    type Output = Morphism;

    fn neg(self) -> Morphism {
        self.scale(&-Rational::one())
    }
}

impl Sub for &Morphism {
    type Output = Morphism;

    fn sub(self, rhs: &Morphism) -> Morphism {
        self + &(-rhs)
    }
}

impl Mul<&Morphism> for &Rational {
    type Output = Morphism;

    fn mul(self, rhs: &Morphism) -> Morphism {
        rhs.scale(self)
    }
}
