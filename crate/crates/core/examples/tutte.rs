//! The classical Tutte polynomial of the underlying graph.
use ribbonforge::br::classical_tutte;
use ribbonforge::ribbon::RibbonGraph;

fn main() {
    let c3 = RibbonGraph::build(
        &[("u", &["a1", "c2"]), ("v", &["b1", "a2"]), ("w", &["c1", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1), ("c", "c1", "c2", 1)],
    )
    .unwrap();
    println!("T(C3) = {}", classical_tutte(&c3));
    let twisted = c3.vertex_flip("u").unwrap();
    println!("T after a vertex flip = {}", classical_tutte(&twisted));
}

#[test]
fn runs() {
    main();
}
