//! Kauffman bracket of a link universe and its signed green-face graph.
use ribbonforge::io::parse_universe;
use ribbonforge::links::{bracket, checkerboard_color, green_face_graph, signed_r, verify_chmutov_pak};

const HOPF: &str = include_str!("../data/hopf.json");

fn main() {
    let u = parse_universe(HOPF).unwrap();
    println!("bracket = {}", bracket(&u));
    let coloring = checkerboard_color(&u).unwrap();
    for c in [coloring.clone(), coloring.swapped()] {
        let sg = green_face_graph(&u, &c).unwrap();
        println!("green faces {} signed R = {}", sg.graph.num_vertices(), signed_r(&sg));
    }
    let all = verify_chmutov_pak(&u, true).unwrap().iter().all(|r| r.holds());
    println!("bracket from the signed polynomial agrees: {all}");
}

#[test]
fn runs() {
    main();
}
