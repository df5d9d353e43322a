//! Rotation and twist moves on chord diagrams and the mu relation.
use ribbonforge::br::{MoveSplit, bouquet_eval, mu, mu_identity_holds, rotate_move, twist_move};
use ribbonforge::ribbon::ChordDiagram;

fn main() {
    let d = ChordDiagram::parse("abcacb", "c").unwrap();
    let split = MoveSplit { b: 1, d: 1 };
    let rotated = rotate_move(&d, "a", split).unwrap();
    let twisted = twist_move(&d, "c", split).unwrap();
    println!("D          = {d}  R = {}", bouquet_eval(&d));
    println!("rotated    = {rotated}  R = {}", bouquet_eval(&rotated));
    println!("twisted    = {twisted}  R = {}", bouquet_eval(&twisted));
    for chord in ["a", "c"] {
        println!("mu({chord})      = {}", mu(&d, chord, split).unwrap());
        println!("mu identity about {chord} holds: {}", mu_identity_holds(&d, chord, split).unwrap());
    }
}

#[test]
fn runs() {
    main();
}
