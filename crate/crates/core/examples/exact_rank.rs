//! Exact rank and kernel computations over the rationals.
//!
//! ```bash
//! cargo run -p cobcat --example exact_rank
//! ```

use cobcat::linalg::{certify_kernel, determinant, rank_kernel_with_route};
use cobcat::{ExactMatrix, Rational};

fn main() {
    let r = |p: i64, q: i64| Rational::new(p.into(), q.into());
    let t = r(7, 2);
    let m = ExactMatrix::from_rows(vec![vec![t.clone(), t.clone()], vec![t.clone(), &t * &t]]);
    println!("{m}det = {}", determinant(&m));

    // rank 2 product of a 4x2 and a 2x5 matrix
    let a = [[1, 2], [3, 4], [5, 6], [7, 9]];
    let b = [[1, 0, 2, -1, 3], [0, 1, 1, 1, 5]];
    let m = ExactMatrix::from_fn(4, 5, |i, j| r(a[i][0] * b[0][j] + a[i][1] * b[1][j], 3));
    print!("{m}");
    let (rk, route) = rank_kernel_with_route(&m);
    println!("rank {} via {route:?}, pivots {:?}", rk.rank, rk.pivots);
    for v in &rk.kernel {
        println!("  kernel vector ({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    }
    println!("kernel certified: {}", certify_kernel(&m, &rk.kernel));
}

