//! Reading and writing morphism documents.
//!
//! ```bash
//! cargo run -p cobcat --example json_documents
//! ```

use cobcat::io::{morphism_document, parse_morphism, serialize_morphism};

const SURFACE: &str = r#"{
  "n": 3, "m": 4,
  "terms": [{
    "coeff": "6/4",
    "parts": [
      {"bottom": [2], "top": [3], "genus": 0},
      {"top": [4, 2], "genus": 1},
      {"bottom": [3, 1], "top": [1], "genus": 2}
    ],
    "closed": {"3": 1, "0": 2}
  }]
}"#;

fn main() -> cobcat::Result<()> {
    let x = parse_morphism(SURFACE)?;
    println!("parsed: {x}");
    let canonical = serialize_morphism(&x);
    println!("canonical: {canonical}");
    assert_eq!(serialize_morphism(&parse_morphism(&canonical)?), canonical);

    let doc = morphism_document(&x.compose(&x.mirror())?);
    for term in &doc.terms {
        println!("x . mirror(x): coeff {}, {} parts, closed {:?}", term.coeff, term.parts.len(), term.closed);
    }

    let broken = r#"{"n":1,"m":1,"terms":[{"coeff":"1","parts":[{"bottom":[1],"top":[1,2]}]}]}"#;
    match parse_morphism(broken) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
