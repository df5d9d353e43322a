//! Evaluating maps that satisfy deletion-contraction, multiplicativity and
//! the chord-move relations, through `R`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::poly::{LaurentPoly, PolyError};
use crate::ribbon::RibbonGraph;

use super::r_state_sum;

/// Values of the map on the three small bouquets plus the parameters
/// `alpha`, `x`, `u`, `v`. All entries share one variable table.
#[derive(Debug, Clone)]
pub struct RecipeSpec {
    pub alpha: LaurentPoly,
    pub x: LaurentPoly,
    /// Value on one positive loop.
    pub q: LaurentPoly,
    /// Value on one negative loop.
    pub r: LaurentPoly,
    /// Value on two interlaced positive loops.
    pub s: LaurentPoly,
    pub u: LaurentPoly,
    pub v: LaurentPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `(q - alpha)^2 u^2 = alpha (s - 2q + alpha)`
    InterlacedPair,
    /// `(q - alpha) u v = r - alpha`
    NegativeLoop,
    /// `v = v^2`
    Idempotent,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::InterlacedPair => "(q - alpha)^2 u^2 = alpha (s - 2q + alpha)",
            Relation::NegativeLoop => "(q - alpha) u v = r - alpha",
            Relation::Idempotent => "v = v^2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error("relation violated: {0}")]
    RelationViolated(Relation),
    #[error("alpha = {0} is not an invertible monomial")]
    NonInvertibleAlpha(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl RecipeSpec {
    /// The spec that reproduces `R(G; x, y, z, w)` itself.
    pub fn identity() -> Self {
        let vars = super::r_vars();
        let p = |t: &str| LaurentPoly::parse(&vars, t).expect("literal");
        RecipeSpec {
            alpha: p("1"),
            x: p("x"),
            q: p("1 + y"),
            r: p("1 + y*z*w"),
            s: p("y^2*z^2 + 2*y + 1"),
            u: p("z"),
            v: p("w"),
        }
    }

    /// `u = z^(1/2)`: on orientable graphs this gives the three-variable
    /// oriented polynomial in which `z` counts genus.
    pub fn half_z() -> Self {
        let vars = super::r_vars();
        let p = |t: &str| LaurentPoly::parse(&vars, t).expect("literal");
        RecipeSpec {
            alpha: p("1"),
            x: p("x"),
            q: p("1 + y"),
            r: p("1 + y*z^(1/2)*w"),
            s: p("y^2*z + 2*y + 1"),
            u: p("z^(1/2)"),
            v: p("w"),
        }
    }

    fn parts(&self) -> [&LaurentPoly; 7] {
        [&self.alpha, &self.x, &self.q, &self.r, &self.s, &self.u, &self.v]
    }

    /// The first relation that fails, checked in the order listed in
    /// [`Relation`].
    pub fn check(&self) -> Result<(), RecipeError> {
        let vars = self.alpha.vars().clone();
        for p in self.parts() {
            if p.vars() != &vars {
                return Err(PolyError::IncompatibleTables.into());
            }
        }
        let two = LaurentPoly::integer(&vars, 2);
        let q_minus_alpha = &self.q - &self.alpha;
        let lhs = &q_minus_alpha.pow(2) * &self.u.pow(2);
        let rhs = &self.alpha * &(&(&self.s - &(&two * &self.q)) + &self.alpha);
        if lhs != rhs {
            return Err(RecipeError::RelationViolated(Relation::InterlacedPair));
        }
        if &(&q_minus_alpha * &self.u) * &self.v != &self.r - &self.alpha {
            return Err(RecipeError::RelationViolated(Relation::NegativeLoop));
        }
        if self.v != self.v.pow(2) {
            return Err(RecipeError::RelationViolated(Relation::Idempotent));
        }
        Ok(())
    }
}

/// `alpha^k(G) R(G; x, q/alpha - 1, u, v)` after checking the relations.
pub fn recipe_evaluate(g: &RibbonGraph, spec: &RecipeSpec) -> Result<LaurentPoly, RecipeError> {
    spec.check()?;
    let inv_alpha = spec
        .alpha
        .inverse_monomial()
        .map_err(|_| RecipeError::NonInvertibleAlpha(spec.alpha.to_string()))?;
    let vars = spec.alpha.vars().clone();
    let y = &(&inv_alpha * &spec.q) - &LaurentPoly::one(&vars);
    let bindings = HashMap::from([
        ("x".to_string(), spec.x.clone()),
        ("y".to_string(), y),
        ("z".to_string(), spec.u.clone()),
        ("w".to_string(), spec.v.clone()),
    ]);
    let r = r_state_sum(g).substitute(&bindings, &vars)?;
    Ok(&spec.alpha.pow(g.num_components() as u32) * &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarTable;

    fn digon() -> RibbonGraph {
        RibbonGraph::build(
            &[("u", &["a1", "b1"]), ("v", &["a2", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
        )
        .unwrap()
    }

    #[test]
    fn identity_spec_reproduces_r() {
        let spec = RecipeSpec::identity();
        assert_eq!(recipe_evaluate(&digon(), &spec).unwrap(), r_state_sum(&digon()));
    }

    #[test]
    fn half_z_spec_counts_genus() {
        // torus bouquet abab: states {}, {a}, {b}, {a,b} with genus 0,0,0,1
        let g = RibbonGraph::build(
            &[("o", &["a1", "b1", "a2", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1)],
        )
        .unwrap();
        let f = recipe_evaluate(&g, &RecipeSpec::half_z()).unwrap();
        assert_eq!(f, LaurentPoly::parse(&crate::br::r_vars(), "y^2*z + 2*y + 1").unwrap());
        assert!(RecipeSpec::half_z().check().is_ok());
    }

    #[test]
    fn idempotence_is_checked() {
        let mut spec = RecipeSpec::identity();
        spec.v = LaurentPoly::integer(spec.v.vars(), 2);
        spec.r = &spec.alpha + &(&(&spec.q - &spec.alpha) * &(&spec.u * &spec.v));
        assert_eq!(
            recipe_evaluate(&digon(), &spec),
            Err(RecipeError::RelationViolated(Relation::Idempotent))
        );
        let mut spec = RecipeSpec::identity();
        spec.r = LaurentPoly::integer(spec.r.vars(), 3);
        assert_eq!(spec.check(), Err(RecipeError::RelationViolated(Relation::NegativeLoop)));
    }

    #[test]
    fn alpha_must_be_a_monomial() {
        let vars = VarTable::with_idempotent(&["x", "y", "z", "w", "a"], &["w"]).unwrap();
        let p = |t: &str| LaurentPoly::parse(&vars, t).unwrap();
        // alpha = 1 + a with q = alpha(1 + y) and consistent r, s
        let spec = RecipeSpec {
            alpha: p("1 + a"),
            x: p("x"),
            q: p("1 + a") * p("1 + y"),
            r: p("1 + a") * p("1 + y*z*w"),
            s: p("1 + a") * p("y^2*z^2 + 2*y + 1"),
            u: p("z"),
            v: p("w"),
        };
        assert!(matches!(recipe_evaluate(&digon(), &spec), Err(RecipeError::NonInvertibleAlpha(_))));
    }

    #[test]
    fn scaled_spec() {
        // alpha = a: F = a^k R(G; x, y, z, w) with q = a(1+y).
        let vars = VarTable::with_idempotent(&["x", "y", "z", "w", "a"], &["w"]).unwrap();
        let p = |t: &str| LaurentPoly::parse(&vars, t).unwrap();
        let spec = RecipeSpec {
            alpha: p("a"),
            x: p("x"),
            q: p("a + a*y"),
            r: p("a + a*y*z*w"),
            s: p("a*y^2*z^2 + 2*a*y + a"),
            u: p("z"),
            v: p("w"),
        };
        let f = recipe_evaluate(&digon(), &spec).unwrap();
        assert_eq!(f, p("a*x + a + a*y*z*w"));
    }
}
