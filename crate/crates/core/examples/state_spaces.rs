//! Gram matrices of the gluing pairing and the dimensions of the state
//! spaces they define.
//!
//! ```bash
//! cargo run -p cobcat --example state_spaces
//! ```

use cobcat::statespace::hankel_matrix;
use cobcat::{gram_matrix, statespace_dim, Rational, RationalSeries, SizeLimit, Theory};

fn main() -> cobcat::Result<()> {
    let limit = SizeLimit::default();

    println!("constant sequences t/(1-T):");
    for (p, q) in [(0, 1), (1, 1), (2, 1), (3, 1), (7, 2)] {
        let t = Rational::new(p.into(), q.into());
        let theory = Theory::deligne(t.clone());
        let dims: Vec<String> =
            (0..=5).map(|n| statespace_dim(n, &theory, limit).map(|d| d.to_string())).collect::<Result<_, _>>()?;
        println!("  t = {t:>3}: {}", dims.join(" "));
    }

    let t1 = Theory::deligne(Rational::from_integer(1.into()));
    let g = gram_matrix(2, &t1, limit)?;
    println!("\ntwo circles at t = 1:");
    for (i, w) in g.basis.iter().enumerate() {
        println!("  {i}: {w}");
    }
    print!("{}", g.matrix);
    println!("rank {}, kernel {:?}", g.rank, g.kernel.iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());

    let fib = Theory::new(RationalSeries::from_integers(&[1], &[1, -1, -1])?);
    println!("\nFibonacci, one circle:");
    print!("{}", gram_matrix(1, &fib, limit)?.matrix);
    println!("Hankel matrix of alpha:");
    print!("{}", hankel_matrix(&fib));
    let dims: Vec<String> =
        (0..=4).map(|n| statespace_dim(n, &fib, limit).map(|d| d.to_string())).collect::<Result<_, _>>()?;
    println!("dims: {}", dims.join(" "));
    Ok(())
}
