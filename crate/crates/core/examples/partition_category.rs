//! The genus-forgetting functor to the partition category and composition
//! there, where each component lost in the middle costs a factor `t`.
//!
//! ```bash
//! cargo run -p cobcat --example partition_category
//! ```

use cobcat::{
    functor_f, partition_compose, stack_partitions, trace_partition, BoundaryLabel, Morphism, PartitionMorphism,
    Rational, SetPartition,
};

fn labels(spec: &str) -> Vec<BoundaryLabel> {
    spec.split_whitespace()
        .map(|s| match s.strip_suffix('\'') {
            Some(i) => BoundaryLabel::top(i.parse().unwrap()),
            None => BoundaryLabel::bottom(s.parse().unwrap()),
        })
        .collect()
}

fn partition(n: usize, m: usize, blocks: &[&str]) -> SetPartition {
    SetPartition::new(n, m, blocks.iter().map(|b| labels(b)).collect()).unwrap()
}

fn main() -> cobcat::Result<()> {
    let a = partition(4, 6, &["1 3 1'", "2 4 6'", "2' 4'", "3'", "5'"]);
    let b = partition(6, 5, &["1 2'", "2 3", "6 4' 5'", "1' 3'", "4", "5"]);
    println!("a = {a}");
    println!("b = {b}");

    let (c, report) = stack_partitions(&a, &b)?;
    println!("stacked: {c}, {} components lost in the middle", report.middle_only_count());

    let t = Rational::new(7.into(), 2.into());
    let ba = partition_compose(&PartitionMorphism::from_partition(a), &PartitionMorphism::from_partition(b), &t)?;
    println!("at t = {t}: b . a = {ba}");

    // genus and closed components disappear, closed ones as powers of t
    let handle_sphere = Morphism::handle().tensor(&Morphism::cup().compose(&Morphism::cap())?);
    println!("F({handle_sphere}) = {}", functor_f(&handle_sphere, &t));

    println!("tr(crossing) = {}", trace_partition(&functor_f(&Morphism::crossing(), &t), &t)?);
    println!("tr(id_3) = {}", trace_partition(&functor_f(&Morphism::identity(3), &t), &t)?);
    Ok(())
}
