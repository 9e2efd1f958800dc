//! Exact rationals and cyclotomic numbers.

use focal::field::{FieldDescriptor, FieldElement, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: Rational = "1/2".parse()?;
    let b: Rational = "1/3".parse()?;
    println!("1/2 + 1/3 = {}", a.clone() + b.clone());
    println!("1/2 * 1/3 = {}", a * b);

    let q3 = FieldDescriptor::cyclotomic(3)?;
    let w = q3.zeta_pow(1);
    println!("in {q3}: w = {w}, w^2 = {}, w^3 = {}", &w * &w, &(&w * &w) * &w);
    let one_plus_w = &FieldElement::from(1) + &w;
    let inv = one_plus_w.inv()?;
    println!("(1 + w)^-1 = {inv}, check: {}", &one_plus_w * &inv);
    println!("power-basis coordinates of w^2: {:?}", q3.coords(&(&w * &w))?);

    let q4 = FieldDescriptor::cyclotomic(4)?;
    let i = q4.zeta_pow(1);
    println!("in {q4}: i^2 = {}", &i * &i);
    Ok(())
}
