//! Random generators and independent oracles shared by the integration
//! suites. Nothing here calls into the code paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cobcat::{
    BoundaryLabel, ClosedComponents, Morphism, Rational, SetPartition, SurfaceDiagram, WeightedPartition,
};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn labels(n: usize, m: usize) -> Vec<BoundaryLabel> {
    (1..=n).map(BoundaryLabel::bottom).chain((1..=m).map(BoundaryLabel::top)).collect()
}

pub fn random_partition(rng: &mut TestRng, n: usize, m: usize) -> SetPartition {
    let mut ids = Vec::with_capacity(n + m);
    let mut next = 0;
    for _ in 0..n + m {
        let id = rng.gen_range(0..=next);
        if id == next {
            next += 1;
        }
        ids.push(id);
    }
    SetPartition::from_block_ids(n, m, &ids)
}

pub fn random_weighted(rng: &mut TestRng, n: usize, m: usize, max_genus: u32) -> WeightedPartition {
    let base = random_partition(rng, n, m);
    let genus = (0..base.num_blocks()).map(|_| rng.gen_range(0..=max_genus)).collect();
    WeightedPartition::new(base, genus).unwrap()
}

pub fn random_closed(rng: &mut TestRng, max_genus: u32, max_count: u32) -> ClosedComponents {
    let mut c = ClosedComponents::new();
    for _ in 0..rng.gen_range(0..=max_count) {
        *c.entry(rng.gen_range(0..=max_genus)).or_insert(0) += 1;
    }
    c
}

pub fn random_diagram(rng: &mut TestRng, n: usize, m: usize, max_genus: u32) -> SurfaceDiagram {
    let parts = random_weighted(rng, n, m, max_genus);
    SurfaceDiagram::new(parts, random_closed(rng, max_genus, 2))
}

pub fn random_coeff(rng: &mut TestRng) -> Rational {
    let num = rng.gen_range(-5i64..=5);
    let den = rng.gen_range(1i64..=3);
    let v = q(num, den);
    if v.is_zero() {
        Rational::one()
    } else {
        v
    }
}

pub fn random_morphism(rng: &mut TestRng, n: usize, m: usize, max_genus: u32, max_terms: usize) -> Morphism {
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| (random_diagram(rng, n, m, max_genus), random_coeff(rng)))
        .collect();
    Morphism::from_terms(n, m, terms).unwrap()
}

/// Bell numbers from the Bell triangle.
pub fn bell(k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..k {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Stirling numbers of the second kind by the standard recurrence.
pub fn stirling2(k: usize, j: usize) -> u64 {
    let mut s = vec![vec![0u64; k + 1]; k + 1];
    s[0][0] = 1;
    for a in 1..=k {
        for b in 1..=a {
            s[a][b] = b as u64 * s[a - 1][b] + s[a - 1][b - 1];
        }
    }
    if j > k {
        0
    } else {
        s[k][j]
    }
}

/// Number of set partitions of a `k`-set with at most `t` blocks.
pub fn partitions_at_most(k: usize, t: usize) -> u64 {
    (0..=t.min(k)).map(|j| stirling2(k, j)).sum()
}

/// All set partitions of `0..k` by inserting elements one at a time.
pub fn brute_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for x in 0..k {
        let mut next = Vec::new();
        for p in &acc {
            for i in 0..p.len() {
                let mut p2 = p.clone();
                p2[i].push(x);
                next.push(p2);
            }
            let mut p2 = p.clone();
            p2.push(vec![x]);
            next.push(p2);
        }
        acc = next;
    }
    acc
}

/// Power series coefficients of `P/Q` through a separately computed `1/Q`.
pub fn long_division(num: &[Rational], den: &[Rational], order: usize) -> Vec<Rational> {
    let coeff = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
    let mut inv = vec![Rational::one() / &den[0]];
    for g in 1..=order {
        let mut s = Rational::zero();
        for i in 1..=g {
            s += coeff(den, i) * &inv[g - i];
        }
        inv.push(-s / &den[0]);
    }
    (0..=order)
        .map(|g| (0..=g).fold(Rational::zero(), |acc, i| acc + coeff(num, i) * &inv[g - i]))
        .collect()
}

/// Genus of every component produced by gluing two surfaces bounding the
/// same circles, via the cycle rank of the block/circle incidence graph.
pub fn glued_genera(a: &WeightedPartition, b: &WeightedPartition) -> Vec<u32> {
    let n = a.m();
    assert_eq!(n, b.m());
    let a_blocks: Vec<(Vec<usize>, u32)> =
        a.parts().map(|(bl, g)| (bl.iter().map(|l| l.index - 1).collect(), g)).collect();
    let b_blocks: Vec<(Vec<usize>, u32)> =
        b.parts().map(|(bl, g)| (bl.iter().map(|l| l.index - 1).collect(), g)).collect();
    // component label per circle by flood fill
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(c) = stack.pop() {
            for (bl, _) in a_blocks.iter().chain(b_blocks.iter()) {
                if bl.contains(&c) {
                    for &d in bl {
                        if comp[d] == usize::MAX {
                            comp[d] = next;
                            stack.push(d);
                        }
                    }
                }
            }
        }
        next += 1;
    }
    let mut stats: BTreeMap<usize, (i64, i64, i64)> = BTreeMap::new(); // (vertices, edges, handles)
    for (bl, g) in a_blocks.iter().chain(b_blocks.iter()) {
        let e = stats.entry(comp[bl[0]]).or_default();
        e.0 += 1;
        e.2 += i64::from(*g);
    }
    for c in &comp {
        stats.get_mut(c).unwrap().1 += 1;
    }
    stats.values().map(|&(v, e, h)| (h + e - v + 1) as u32).collect()
}

/// Random small-integer `P/Q` with `Q(0) != 0`.
pub fn random_series(rng: &mut TestRng) -> cobcat::RationalSeries {
    loop {
        let num: Vec<i64> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(-3..=3)).collect();
        let mut den: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-3..=3)).collect();
        den.insert(0, [1, -1, 2][rng.gen_range(0..3)]);
        if let Ok(s) = cobcat::RationalSeries::from_integers(&num, &den) {
            return s;
        }
    }
}

/// A valid document for a random morphism, written in a scrambled but
/// equivalent form: parts and circles out of order, unreduced coefficients,
/// terms repeated.
pub fn scrambled_document(r: &mut TestRng) -> (Morphism, String) {
    let (n, m) = (r.gen_range(0..=4), r.gen_range(0..=4));
    let x = random_morphism(r, n, m, 4, 4);
    let mut doc = cobcat::io::morphism_document(&x);
    for term in &mut doc.terms {
        term.parts.shuffle(r);
        for p in &mut term.parts {
            p.bottom.shuffle(r);
            p.top.shuffle(r);
        }
        let k = r.gen_range(1..=3);
        let c = cobcat::io::parse_rational(&term.coeff).unwrap();
        term.coeff = format!("{}/{}", c.numer() * k, c.denom() * k);
    }
    doc.terms.shuffle(r);
    if let Some(first) = doc.terms.first().cloned() {
        if r.gen_bool(0.3) {
            // a repeated diagram contributing nothing
            let mut extra = first.clone();
            extra.coeff = "0".into();
            doc.terms.push(extra);
        }
    }
    let text = if r.gen_bool(0.5) { serde_json::to_string_pretty(&doc) } else { serde_json::to_string(&doc) };
    (x, text.unwrap())
}
