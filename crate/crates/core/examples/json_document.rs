//! Parse a problem document, build it, and print its condensation.

use focal::condensation::condense;
use focal::document::{Problem, ProblemDocument};

const DOC: &str = r#"{
    "field": "Q(zeta_3)",
    "algebra": {"preset": "poly_quotient", "coefficients": ["-1", "0", "0", "1"]},
    "atoms": [
        {"name": "k", "basis": [["1", "0", "0"]]},
        {"name": "zeta_t", "basis": [["0", ["0", "1"], "0"]]},
        {"name": "zeta2_t2", "basis": [["0", "0", ["-1", "-1"]]]}
    ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = ProblemDocument::parse_str(DOC)?;
    let Problem::System(sys) = doc.build()? else {
        unreachable!("the document lists atoms")
    };
    let table = sys.verify()?;
    let r = condense(&table)?;
    println!("|Q| = {}, exponent {:?}", r.monoid.size(), r.monoid.exponent());
    println!("canonical form:\n{}", doc.to_json_string());
    match ProblemDocument::parse_str(r#"{"atoms": [{"basis": "oops"}], "algebra": {"preset": "matrix", "n": 2}}"#) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
