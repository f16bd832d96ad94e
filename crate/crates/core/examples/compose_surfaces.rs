//! Building cobordisms from generators and gluing them together.
//!
//! ```bash
//! cargo run -p cobcat --example compose_surfaces
//! ```

use cobcat::Morphism;

fn main() -> cobcat::Result<()> {
    let merge = Morphism::merge();
    let split = Morphism::split();
    println!("merge  = {merge}");
    println!("split  = {split}");

    // a tube that splits and merges again picks up a handle
    let tube = split.compose(&merge)?;
    println!("split then merge = {tube}");
    assert_eq!(tube, Morphism::handle());

    let twice = Morphism::handle().compose(&Morphism::handle())?;
    println!("handle twice = {twice}");

    // closed components are kept, not evaluated
    let sphere = Morphism::cup().compose(&Morphism::cap())?;
    println!("cup then cap = {sphere}");

    let pair = Morphism::identity(1).tensor(&Morphism::cup());
    println!("id (x) cup = {pair}");

    let swap = Morphism::crossing();
    println!("closing the crossing: {}", swap.close_trace()?);
    println!("closing id_3: {}", Morphism::identity(3).close_trace()?);

    println!("bend(handle) = {}", Morphism::handle().bend());
    println!("mirror(merge) == split: {}", merge.mirror() == split);

    let perm = Morphism::permutation(&[1, 2, 0])?;
    println!("cycle = {perm}");
    println!("cycle^3 == id: {}", perm.compose(&perm)?.compose(&perm)? == Morphism::identity(3));
    Ok(())
}
