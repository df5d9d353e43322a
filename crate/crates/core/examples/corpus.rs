//! Exhaustive and random graph corpora.
use ribbonforge::corpus::{colorable_universe_graphs, exhaustive, exhaustive_plane, random_corpus};

fn main() {
    for m in 0..=3 {
        println!(
            "at most {m} edges: {} graphs, {} plane",
            exhaustive(m).unwrap().len(),
            exhaustive_plane(m).unwrap().len()
        );
    }
    for v in 1..=3 {
        println!("{v} crossings: {} colorable universes", colorable_universe_graphs(v).unwrap().len());
    }
    let random = random_corpus(42, 5, 6);
    for g in &random {
        println!("random: {} vertices {} edges genus {}", g.num_vertices(), g.num_edges(), g.euler_genus());
    }
}

#[test]
fn runs() {
    main();
}
