//! R(G; x, y, z, w) by state sum and by deletion-contraction.
use ribbonforge::br::{r_delcon, r_state_sum};
use ribbonforge::ribbon::RibbonGraph;

fn main() {
    let digon = RibbonGraph::build(
        &[("u", &["a1", "b1"]), ("v", &["a2", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
    )
    .unwrap();
    let torus = RibbonGraph::build(&[("o", &["a1", "b1", "a2", "b2"])], &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1)]).unwrap();
    for (name, g) in [("digon", &digon), ("torus bouquet", &torus)] {
        let s = r_state_sum(g);
        let d = r_delcon(g);
        assert_eq!(s, d);
        println!("{name}: R = {s}");
    }
}

#[test]
fn runs() {
    main();
}
