use crate::poly::LaurentPoly;
use crate::ribbon::{ChordDiagram, Sign};

use super::r_vars;

/// Canonical diagram `D_ijk`: `i` chords in all, `j` interlaced positive
/// pairs, `k` isolated negative chords and `i - 2j - k` isolated positive ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl CanonicalForm {
    pub fn new(i: usize, j: usize, k: usize) -> Option<Self> {
        (k <= 2 && 2 * j + k <= i).then_some(CanonicalForm { i, j, k })
    }

    pub fn isolated_positive(&self) -> usize {
        self.i - 2 * self.j - self.k
    }
}

/// Classifies a diagram by chord count, boundary count and orientability.
/// With `g = 1 - bc + n`: orientable diagrams get `(g/2, 0)`, others
/// `k = 1` for odd `g` and `k = 2` for even `g`, with `j = (g - k)/2`.
pub fn canonical_form(d: &ChordDiagram) -> CanonicalForm {
    let s = d.to_ribbon_graph().full_stats();
    let g = s.eg;
    let (j, k) = if s.t == 0 {
        (g / 2, 0)
    } else {
        let k = if g % 2 == 1 { 1 } else { 2 };
        ((g - k) / 2, k)
    };
    CanonicalForm { i: s.n, j, k }
}

/// The diagram `D_ijk`: interlaced pairs first, then negative loops, then
/// positive loops. Chords are named `c0, c1, ..`.
pub fn canonical_diagram(f: CanonicalForm) -> ChordDiagram {
    let mut word = Vec::with_capacity(2 * f.i);
    let mut signs = Vec::with_capacity(f.i);
    let mut next = 0;
    for _ in 0..f.j {
        word.extend([next, next + 1, next, next + 1]);
        signs.extend([Sign::Positive, Sign::Positive]);
        next += 2;
    }
    for _ in 0..f.k {
        word.extend([next, next]);
        signs.push(Sign::Negative);
        next += 1;
    }
    for _ in 0..f.isolated_positive() {
        word.extend([next, next]);
        signs.push(Sign::Positive);
        next += 1;
    }
    let labels = (0..f.i).map(|c| format!("c{c}")).collect();
    ChordDiagram::from_parts(labels, word, signs)
}

/// `(1+y)^(i-2j-k) (y^2 z^2 + 2y + 1)^j (1 + y z w)^k`.
pub fn product_formula(f: CanonicalForm) -> LaurentPoly {
    let vars = r_vars();
    let q = LaurentPoly::parse(&vars, "1 + y").expect("literal");
    let s = LaurentPoly::parse(&vars, "y^2*z^2 + 2*y + 1").expect("literal");
    let r = LaurentPoly::parse(&vars, "1 + y*z*w").expect("literal");
    &(&q.pow(f.isolated_positive() as u32) * &s.pow(f.j as u32)) * &r.pow(f.k as u32)
}
