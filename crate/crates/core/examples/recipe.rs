//! Evaluating a deletion-contraction recipe.
use ribbonforge::br::{RecipeSpec, r_state_sum, recipe_evaluate};
use ribbonforge::ribbon::RibbonGraph;

fn main() {
    let torus = RibbonGraph::build(&[("o", &["a1", "b1", "a2", "b2"])], &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1)]).unwrap();
    let identity = recipe_evaluate(&torus, &RecipeSpec::identity()).unwrap();
    assert_eq!(identity, r_state_sum(&torus));
    println!("identity recipe: {identity}");
    println!("half-z recipe:   {}", recipe_evaluate(&torus, &RecipeSpec::half_z()).unwrap());
}

#[test]
fn runs() {
    main();
}
