//! Exact Laurent polynomial arithmetic with half-integer exponents.
use std::collections::HashMap;

use num_rational::BigRational;
use ribbonforge::poly::{LaurentPoly, VarTable};

fn main() {
    let vars = VarTable::with_idempotent(&["x", "y", "w"], &["w"]).unwrap();
    let p = LaurentPoly::parse(&vars, "x^2 + 3*x*y^-1 + w").unwrap();
    let q = LaurentPoly::parse(&vars, "x - y^(1/2)").unwrap();
    println!("p       = {p}");
    println!("q       = {q}");
    println!("p * q   = {}", &p * &q);
    println!("w * w   = {}", LaurentPoly::var(&vars, "w").unwrap().pow(2));
    let point = HashMap::from([
        ("x".to_string(), BigRational::from_integer(2.into())),
        ("y".to_string(), BigRational::from_integer(4.into())),
        ("w".to_string(), BigRational::from_integer(1.into())),
    ]);
    println!("p(2, 4, 1) = {}", p.eval(&point).unwrap());
    println!("q(2, 4, 1) = {}", q.eval(&point).unwrap());
}

#[test]
fn runs() {
    main();
}
