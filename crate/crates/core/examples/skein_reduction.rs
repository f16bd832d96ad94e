//! Evaluating closed surfaces and reducing to the skein normal form for
//! the Fibonacci generating function `1 / (1 - T - T^2)`.
//!
//! ```bash
//! cargo run -p cobcat --example skein_reduction
//! ```

use cobcat::skein::{first_term_highest_part, skein_rewrite};
use cobcat::{
    evaluate_scalar, skein_reduce, ClosedComponents, Morphism, RationalSeries, SetPartition, SurfaceDiagram,
    Theory, WeightedPartition,
};

fn main() -> cobcat::Result<()> {
    let series = RationalSeries::from_integers(&[1], &[1, -1, -1])?;
    let theory = Theory::new(series);
    println!("Z(T) = {}", theory.series());
    let weights: Vec<String> = theory.skein().weights().map(|(i, w)| format!("{w}*alpha(g-{i})")).collect();
    println!("K = {}, alpha(g) = {} for g >= K", theory.k(), weights.join(" + "));
    let alphas: Vec<String> = (0..12).map(|g| theory.alpha(g).to_string()).collect();
    println!("alpha = {}", alphas.join(", "));

    for g in 2..=5 {
        let terms: Vec<String> =
            theory.reduce_genus(g).iter().map(|(h, c)| format!("{c}*x^{h}")).collect();
        println!("x^{g} = {}", terms.join(" + "));
    }

    let tube = |g| SurfaceDiagram::from_parts(WeightedPartition::new(SetPartition::identity(1), vec![g]).unwrap());
    let mut closed = ClosedComponents::new();
    closed.insert(4, 1);
    closed.insert(0, 2);
    let x = Morphism::from_diagram(SurfaceDiagram::new(tube(4).parts().clone(), closed));
    println!("x = {x}");
    let normal = skein_reduce(&x, &theory);
    println!("normal form = {normal}");

    // single rewrites, smallest genus first
    let mut lowest = |offending: &[(&SurfaceDiagram, Vec<usize>)]| (offending.len() - 1, 0);
    assert_eq!(skein_rewrite(&x, &theory, &mut lowest), normal);
    assert_eq!(skein_rewrite(&x, &theory, &mut first_term_highest_part), normal);

    let closed_genus_7 = Morphism::from_diagram(SurfaceDiagram::closed_only([(7, 1)].into_iter().collect()));
    println!(
        "alpha(genus 7) = {} = {}",
        evaluate_scalar(&closed_genus_7, theory.sequence())?,
        evaluate_scalar(&skein_reduce(&closed_genus_7, &theory), theory.sequence())?
    );
    Ok(())
}
