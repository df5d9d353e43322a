//! Bouquets as signed chord diagrams and their canonical forms.
use ribbonforge::br::{bouquet_eval, canonical_diagram, canonical_form, product_formula};
use ribbonforge::ribbon::ChordDiagram;

fn main() {
    for (word, negative) in [("aa", ""), ("abab", ""), ("abab", "a"), ("abab", "ab"), ("abcabc", ""), ("abcacb", "")] {
        let d = ChordDiagram::parse(word, negative).unwrap();
        let f = canonical_form(&d);
        let c = canonical_diagram(f);
        println!(
            "{word:>7} negative {negative:<3} -> ({}, {}, {})  R = {}  R(canonical) = {}",
            f.i,
            f.j,
            f.k,
            bouquet_eval(&d),
            product_formula(f)
        );
        assert_eq!(bouquet_eval(&c), product_formula(f));
    }
}

#[test]
fn runs() {
    main();
}
