//! Building a ribbon graph and reading off its topology.
use ribbonforge::ribbon::{EdgeSubset, RibbonGraph};

fn main() {
    // a theta graph with one twisted edge
    let g = RibbonGraph::build(
        &[("u", &["a1", "b1", "c1"]), ("v", &["a2", "c2", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1), ("c", "c1", "c2", -1)],
    )
    .unwrap();
    let s = g.full_stats();
    println!("vertices {} edges {}", g.num_vertices(), g.num_edges());
    println!("components {} boundary components {} orientable {}", s.k, s.bc, g.is_orientable());
    println!("euler genus {}", g.euler_genus());
    for bits in 0..(1u64 << g.num_edges()) {
        let a = EdgeSubset::from_bits(&g, bits);
        let s = g.stats(&a);
        println!("  subset {bits:03b}: k={} r={} n={} bc={} t={}", s.k, s.r, s.n, s.bc, s.t);
    }
    let flipped = g.vertex_flip("u").unwrap();
    println!("after flipping u: bc {} orientable {}", flipped.full_stats().bc, flipped.is_orientable());
    let contracted = g.contract_edge("a").unwrap();
    println!("contracting a leaves a bouquet: {}", contracted.is_bouquet());
    println!("deleting c: euler genus {}", g.delete_edge("c").unwrap().euler_genus());
}

#[test]
fn runs() {
    main();
}
