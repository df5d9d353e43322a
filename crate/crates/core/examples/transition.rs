//! Transition polynomial of the medial graph and its identities.
use ribbonforge::ribbon::RibbonGraph;
use ribbonforge::transition::{circuit_partition, medial_q, verify_duality, verify_martin, verify_transpoly};

fn main() {
    let c3 = RibbonGraph::build(
        &[("u", &["a1", "c2"]), ("v", &["b1", "a2"]), ("w", &["c1", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1), ("c", "c1", "c2", 1)],
    )
    .unwrap();
    println!("Q(medial) = {}", medial_q(&c3));
    println!("circuit partition = {}", circuit_partition(&c3, "x").unwrap());
    println!("transpoly identity holds: {}", verify_transpoly(&c3).holds());
    println!("duality holds: {}", verify_duality(&c3).holds());
    println!("circuit partition identity holds: {}", verify_martin(&c3).unwrap().holds());
}

#[test]
fn runs() {
    main();
}
