//! Medial and dual graphs.
use ribbonforge::io::{graph_to_json, medial_to_json};
use ribbonforge::ribbon::{RibbonGraph, medial_contract_holds};

fn main() {
    let digon = RibbonGraph::build(
        &[("u", &["a1", "b1"]), ("v", &["a2", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
    )
    .unwrap();
    let m = digon.medial();
    println!("medial: {} vertices, {} free loops", m.num_vertices(), m.free_loops);
    println!("{}", medial_to_json(&m));
    let d = digon.dual();
    println!("dual: {} vertices, euler genus {}", d.num_vertices(), d.euler_genus());
    println!("{}", graph_to_json(&d));
    println!("medial contract holds: {}", medial_contract_holds(&digon));
}

#[test]
fn runs() {
    main();
}
