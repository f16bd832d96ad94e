mod common;

use cobcat::linalg::{bareiss_rank_kernel, certify_kernel, rank_kernel_with_route, Route};
use cobcat::statespace::pair_diagrams;
use cobcat::{
    enumerate_weighted_partitions, gram_matrix, pairing, quotient_hom_dim, skein_reduce, statespace_dim,
    trace_morphism, ExactMatrix, Morphism, Rational, RationalSeries, SizeLimit, SurfaceDiagram, Theory,
};
use common::*;
use num_traits::{One, Zero};
use rand::Rng;

const LIM: SizeLimit = SizeLimit(12);

/// Rank by plain Gauss-Jordan over the rationals.
fn oracle_rank(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn pairing_matches_glued_genus_oracle() {
    let mut r = rng(31);
    let th = Theory::new(RationalSeries::from_integers(&[2, 1], &[1, -1, -1]).unwrap());
    for _ in 0..1000 {
        let n = r.gen_range(0..=5);
        let a = random_weighted(&mut r, 0, n, 3);
        let b = random_weighted(&mut r, 0, n, 3);
        let expected = glued_genera(&a, &b)
            .into_iter()
            .fold(Rational::one(), |acc, g| acc * th.alpha(g));
        let got = pair_diagrams(&SurfaceDiagram::from_parts(a), &SurfaceDiagram::from_parts(b), &th).unwrap();
        assert_eq!(got, expected);
    }
}

#[test]
fn gram_is_symmetric_and_kernel_certified() {
    let mut r = rng(32);
    let mut theories = vec![Theory::deligne(q(1, 1)), Theory::deligne(q(2, 1)), Theory::deligne(q(7, 2))];
    theories.push(Theory::new(RationalSeries::from_integers(&[1], &[1, -1, -1]).unwrap()));
    theories.extend((0..4).map(|_| Theory::new(random_series(&mut r))));
    for th in &theories {
        let max_n = if th.k() <= 2 { 3 } else { 2 };
        for n in 0..=max_n {
            let g = gram_matrix(n, th, LIM).unwrap();
            assert!(g.matrix.is_symmetric());
            assert_eq!(g.rank + g.kernel.len(), g.basis.len());
            assert!(certify_kernel(&g.matrix, &g.kernel));
            assert_eq!(g.rank, oracle_rank(&g.matrix));
            assert!(g.rank <= g.basis.len());
            // kernel vectors pair to zero with each basis surface
            let diagrams = g.basis_diagrams();
            for v in &g.kernel {
                let mut combo = Morphism::zero(0, n);
                for (d, c) in diagrams.iter().zip(v) {
                    combo.add_term(d.clone(), c.clone());
                }
                for d in &diagrams {
                    assert!(pairing(&combo, &Morphism::from_diagram(d.clone()), th).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn deligne_dimension_law() {
    for t in 0..=4usize {
        let th = Theory::deligne(q(t as i64, 1));
        for k in 0..=5 {
            assert_eq!(statespace_dim(k, &th, LIM).unwrap() as u64, partitions_at_most(k, t), "t={t}, k={k}");
        }
    }
    for t in [q(7, 2), q(-1, 2), q(5, 3)] {
        let th = Theory::deligne(t);
        for k in 0..=5 {
            assert_eq!(statespace_dim(k, &th, LIM).unwrap() as u64, bell(k));
        }
    }
}

#[test]
fn dimension_bounded_by_basis() {
    let mut r = rng(33);
    for _ in 0..10 {
        let th = Theory::new(random_series(&mut r));
        for n in 0..=2 {
            let size = enumerate_weighted_partitions(0, n, th.k(), LIM).unwrap().len();
            assert!(statespace_dim(n, &th, LIM).unwrap() <= size);
        }
    }
}

#[test]
fn hom_dims_for_integer_t() {
    // Hom(n, m) bends to Hom(0, n + m)
    let th = Theory::deligne(q(2, 1));
    for (n, m) in [(1, 1), (2, 1), (1, 3), (2, 2)] {
        assert_eq!(quotient_hom_dim(n, m, &th, LIM).unwrap() as u64, partitions_at_most(n + m, 2));
    }
}

#[test]
fn trace_is_cyclic() {
    let mut r = rng(34);
    let theories = [
        Theory::new(RationalSeries::from_integers(&[1], &[1, -1, -1]).unwrap()),
        Theory::deligne(q(7, 2)),
        Theory::new(random_series(&mut r)),
    ];
    for i in 0..600 {
        let th = &theories[i % theories.len()];
        let (n, m) = (r.gen_range(0..=3), r.gen_range(0..=3));
        let x = random_morphism(&mut r, n, m, 2, 3);
        let y = random_morphism(&mut r, m, n, 2, 3);
        let xy = trace_morphism(&x.compose(&y).unwrap(), th).unwrap();
        let yx = trace_morphism(&y.compose(&x).unwrap(), th).unwrap();
        assert_eq!(xy, yx);
    }
}

#[test]
fn pairing_survives_reduction() {
    let mut r = rng(35);
    let theories = [
        Theory::new(RationalSeries::from_integers(&[1], &[1, -1, -1]).unwrap()),
        Theory::new(RationalSeries::from_integers(&[1, 1], &[1, -1]).unwrap()),
        Theory::new(random_series(&mut r)),
        Theory::new(random_series(&mut r)),
    ];
    for i in 0..600 {
        let th = &theories[i % theories.len()];
        let n = r.gen_range(0..=3);
        let s1 = random_morphism(&mut r, 0, n, 5, 3);
        let s2 = random_morphism(&mut r, 0, n, 5, 3);
        let before = pairing(&s1, &s2, th).unwrap();
        let after = pairing(&skein_reduce(&s1, th), &skein_reduce(&s2, th), th).unwrap();
        assert_eq!(before, after);
    }
}

fn random_low_rank(r: &mut TestRng, rows: usize, cols: usize, rank: usize, big: bool) -> ExactMatrix {
    let entry = |r: &mut TestRng| {
        if big {
            q(r.gen_range(-1_000_000_000_000i64..=1_000_000_000_000), r.gen_range(1..=50))
        } else {
            q(r.gen_range(-3..=3), r.gen_range(1..=2))
        }
    };
    let left: Vec<Vec<Rational>> = (0..rows).map(|_| (0..rank).map(|_| entry(r)).collect()).collect();
    let right: Vec<Vec<Rational>> = (0..rank).map(|_| (0..cols).map(|_| entry(r)).collect()).collect();
    ExactMatrix::from_fn(rows, cols, |i, j| {
        (0..rank).fold(Rational::zero(), |acc, k| acc + &left[i][k] * &right[k][j])
    })
}

#[test]
fn modular_route_agrees_with_elimination() {
    let mut r = rng(36);
    let mut modular = 0;
    for _ in 0..400 {
        let rows = r.gen_range(1..=9);
        let cols = r.gen_range(1..=9);
        let rank = r.gen_range(0..=rows.min(cols));
        let big = r.gen_bool(0.3);
        let m = random_low_rank(&mut r, rows, cols, rank, big);
        let (fast, route) = rank_kernel_with_route(&m);
        let slow = bareiss_rank_kernel(&m);
        assert_eq!(fast, slow);
        assert_eq!(slow.rank, oracle_rank(&m));
        assert!(certify_kernel(&m, &slow.kernel));
        if route == Route::Modular {
            modular += 1;
        }
    }
    assert!(modular > 300);
}
