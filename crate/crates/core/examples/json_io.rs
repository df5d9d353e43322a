//! Reading and writing graphs as JSON.
use ribbonforge::br::r_delcon;
use ribbonforge::io::{graph_to_json, parse_graph};

const DIGON: &str = include_str!("../data/digon.json");

fn main() {
    let g = parse_graph(DIGON).unwrap();
    println!("R = {}", r_delcon(&g));
    let text = graph_to_json(&g);
    println!("{text}");
    assert_eq!(graph_to_json(&parse_graph(&text).unwrap()), text);
    match parse_graph(include_str!("../data/orphan.json")) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
}

#[test]
fn runs() {
    main();
}
