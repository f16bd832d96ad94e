//! Negligible morphisms and hom spaces of the quotient category.
//!
//! ```bash
//! cargo run -p cobcat --example negligible_morphisms
//! ```

use cobcat::statespace::negligibility_witness;
use cobcat::{equal_in_quotient, quotient_hom_dim, Morphism, Rational, RationalSeries, SizeLimit, Theory};

fn main() -> cobcat::Result<()> {
    let limit = SizeLimit::default();
    let t = Rational::new(3.into(), 1.into());
    let theory = Theory::deligne(t.clone());

    let id = Morphism::identity(1);
    let handle = Morphism::handle();
    println!("handle == id modulo negligibles at t = {t}: {}", equal_in_quotient(&id, &handle, &theory, limit)?);

    // a sphere is worth t
    let sphere = Morphism::cup().compose(&Morphism::cap())?;
    let t_times_id = Morphism::identity(0).scale(&t);
    println!("sphere == t: {}", equal_in_quotient(&sphere, &t_times_id, &theory, limit)?);

    match negligibility_witness(&handle, &theory, limit)? {
        Some((cap, value)) => println!("handle is not negligible: pairs to {value} with {cap}"),
        None => println!("handle is negligible"),
    }

    println!("\ndim Hom(n, m) in the quotient, t = 3:");
    for n in 0..=2 {
        let row: Vec<String> =
            (0..=2).map(|m| quotient_hom_dim(n, m, &theory, limit).map(|d| d.to_string())).collect::<Result<_, _>>()?;
        println!("  n = {n}: {}", row.join(" "));
    }

    let fib = Theory::new(RationalSeries::from_integers(&[1], &[1, -1, -1])?);
    let fib_handle_squared = handle.compose(&handle)?;
    let rhs = &handle + &id;
    println!("\nFibonacci: x^2 == x + 1 in the quotient: {}", equal_in_quotient(&fib_handle_squared, &rhs, &fib, limit)?);
    Ok(())
}
