//! Single-step rotation and twist moves about a chord.
//!
//! Cut the circle at both ends of chord `e` so the word reads `e X e Y`, and
//! split `X = B C`, `Y = D A`. A rotation (positive `e`) produces
//! `e C B e A D`. A twist (negative `e`) produces `e A C' e D' B`, where `'`
//! reverses a segment, and toggles the sign of every chord with one end in
//! `A B` and the other in `C D`. Both moves are involutions for the matching
//! split.
//!
//! Neither move preserves `R` by itself. What holds is
//! `R(D1) - mu R(D1 - e) = R(D2) - mu R(D2 - e)`, with `mu = 1` when some chord
//! joins `A B` to `C D` and `mu = x` otherwise.

use thiserror::Error;

use crate::poly::LaurentPoly;
use crate::ribbon::{ChordDiagram, ChordError, Sign};

use super::{bouquet_eval, r_vars};

/// Lengths of the segments `B` (start of `X`) and `D` (start of `Y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MoveSplit {
    pub b: usize,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Chord(#[from] ChordError),
    #[error("a {move_name} needs a {expected} chord, `{chord}` is not")]
    WrongSign {
        move_name: &'static str,
        chord: String,
        expected: &'static str,
    },
    #[error("split ({b}, {d}) does not fit segments of length ({x}, {y})")]
    SplitOutOfRange { b: usize, d: usize, x: usize, y: usize },
}

struct Segments {
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
    d: Vec<usize>,
}

impl Segments {
    fn cut(diagram: &ChordDiagram, chord: usize, split: MoveSplit) -> Result<Self, MoveError> {
        let word = diagram.word();
        let first = word.iter().position(|&c| c == chord).expect("chord occurs");
        let w: Vec<usize> = word[first..].iter().chain(&word[..first]).copied().collect();
        let second = 1 + w[1..].iter().position(|&c| c == chord).expect("chord occurs twice");
        let x = &w[1..second];
        let y = &w[second + 1..];
        if split.b > x.len() || split.d > y.len() {
            return Err(MoveError::SplitOutOfRange {
                b: split.b,
                d: split.d,
                x: x.len(),
                y: y.len(),
            });
        }
        Ok(Segments {
            b: x[..split.b].to_vec(),
            c: x[split.b..].to_vec(),
            d: y[..split.d].to_vec(),
            a: y[split.d..].to_vec(),
        })
    }

    /// Whether some chord has one end in `A B` and the other in `C D`.
    fn crossing_chords(&self, n: usize) -> Vec<bool> {
        let mut left = vec![false; n];
        let mut right = vec![false; n];
        for &c in self.a.iter().chain(&self.b) {
            left[c] = true;
        }
        for &c in self.c.iter().chain(&self.d) {
            right[c] = true;
        }
        (0..n).map(|c| left[c] && right[c]).collect()
    }
}

fn rebuild(d: &ChordDiagram, word: Vec<usize>, signs: Vec<Sign>) -> ChordDiagram {
    ChordDiagram::from_parts(d.labels().to_vec(), word, signs)
}

fn require_sign(d: &ChordDiagram, e: usize, want: Sign, move_name: &'static str) -> Result<(), MoveError> {
    if d.signs()[e] != want {
        return Err(MoveError::WrongSign {
            move_name,
            chord: d.labels()[e].clone(),
            expected: if want == Sign::Positive { "positive" } else { "negative" },
        });
    }
    Ok(())
}

/// `e B C e D A -> e C B e A D` about a positive chord.
pub fn rotate_move(d: &ChordDiagram, chord: &str, split: MoveSplit) -> Result<ChordDiagram, MoveError> {
    let e = d.chord_index(chord)?;
    require_sign(d, e, Sign::Positive, "rotation")?;
    let s = Segments::cut(d, e, split)?;
    let mut word = vec![e];
    word.extend(&s.c);
    word.extend(&s.b);
    word.push(e);
    word.extend(&s.a);
    word.extend(&s.d);
    Ok(rebuild(d, word, d.signs().to_vec()))
}

/// `e B C e D A -> e A C' e D' B` about a negative chord.
pub fn twist_move(d: &ChordDiagram, chord: &str, split: MoveSplit) -> Result<ChordDiagram, MoveError> {
    let e = d.chord_index(chord)?;
    require_sign(d, e, Sign::Negative, "twist")?;
    let s = Segments::cut(d, e, split)?;
    let mut word = vec![e];
    word.extend(&s.a);
    word.extend(s.c.iter().rev());
    word.push(e);
    word.extend(s.d.iter().rev());
    word.extend(&s.b);
    let crossing = s.crossing_chords(d.num_chords());
    let signs = d
        .signs()
        .iter()
        .enumerate()
        .map(|(c, &sg)| if crossing[c] { sg.flipped() } else { sg })
        .collect();
    Ok(rebuild(d, word, signs))
}

/// `1` if a chord joins `A B` to `C D`, else `x`.
pub fn mu(d: &ChordDiagram, chord: &str, split: MoveSplit) -> Result<LaurentPoly, MoveError> {
    let e = d.chord_index(chord)?;
    let s = Segments::cut(d, e, split)?;
    let vars = r_vars();
    Ok(if s.crossing_chords(d.num_chords()).iter().any(|&c| c) {
        LaurentPoly::one(&vars)
    } else {
        LaurentPoly::var(&vars, "x").expect("x")
    })
}

/// Applies the move matching the sign of `chord` and checks
/// `R(D1) - mu R(D1 - e) = R(D2) - mu R(D2 - e)`.
pub fn mu_identity_holds(d: &ChordDiagram, chord: &str, split: MoveSplit) -> Result<bool, MoveError> {
    let e = d.chord_index(chord)?;
    let d2 = if d.signs()[e] == Sign::Positive {
        rotate_move(d, chord, split)?
    } else {
        twist_move(d, chord, split)?
    };
    let m = mu(d, chord, split)?;
    let lhs = &bouquet_eval(d) - &(&m * &bouquet_eval(&d.without(e)));
    let rhs = &bouquet_eval(&d2) - &(&m * &bouquet_eval(&d2.without(e)));
    Ok(lhs == rhs)
}

impl ChordDiagram {
    /// The same diagram with its word read from the first end of `chord`.
    pub fn starting_at(&self, chord: &str) -> Result<ChordDiagram, ChordError> {
        let e = self.chord_index(chord)?;
        let first = self.word().iter().position(|&c| c == e).expect("chord occurs");
        let word = self.word()[first..].iter().chain(&self.word()[..first]).copied().collect();
        Ok(ChordDiagram::from_parts(self.labels().to_vec(), word, self.signs().to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(w: &str, n: &str) -> ChordDiagram {
        ChordDiagram::parse(w, n).unwrap()
    }

    #[test]
    fn rotation_rearranges_segments() {
        // e B C e D A with B = x, C = y, D = x, A = y
        let d = diagram("exyexy", "");
        let r = rotate_move(&d, "e", MoveSplit { b: 1, d: 1 }).unwrap();
        // e = 0, x = 1, y = 2
        assert_eq!(r.word(), &[0, 2, 1, 0, 2, 1]);
    }

    #[test]
    fn moves_undo_with_the_matching_split() {
        let d = diagram("eabcedbfdfac", "ec");
        let split = MoveSplit { b: 2, d: 1 };
        let t = twist_move(&d, "e", split).unwrap();
        // e A C' e D' B: |A| = 6, |D| = 1
        let back = twist_move(&t, "e", MoveSplit { b: 6, d: 1 }).unwrap();
        assert_eq!(back, d.starting_at("e").unwrap());
        let p = diagram("eabcedbfdfac", "c");
        let r = rotate_move(&p, "e", split).unwrap();
        // e C B e A D: |C| = 1, |A| = 6
        let back = rotate_move(&r, "e", MoveSplit { b: 1, d: 6 }).unwrap();
        assert_eq!(back, p.starting_at("e").unwrap());
    }

    #[test]
    fn sign_and_range_errors() {
        let d = diagram("abab", "b");
        assert!(matches!(twist_move(&d, "a", MoveSplit::default()), Err(MoveError::WrongSign { .. })));
        assert!(matches!(rotate_move(&d, "b", MoveSplit::default()), Err(MoveError::WrongSign { .. })));
        assert!(matches!(
            rotate_move(&d, "a", MoveSplit { b: 2, d: 0 }),
            Err(MoveError::SplitOutOfRange { .. })
        ));
        assert!(matches!(rotate_move(&d, "q", MoveSplit::default()), Err(MoveError::Chord(_))));
    }

    #[test]
    fn mu_identity_on_small_diagrams() {
        for (w, n) in [("exyexy", ""), ("exeyxy", "e"), ("eabeab", "eb"), ("eaebcbca", "c")] {
            let d = diagram(w, n);
            let second = d.word()[1..].iter().position(|&c| c == 0).unwrap();
            let y_len = d.word().len() - second - 2;
            for b in 0..=second {
                for dd in 0..=y_len {
                    let split = MoveSplit { b, d: dd };
                    assert!(mu_identity_holds(&d, "e", split).unwrap(), "{w} {n} {split:?}");
                }
            }
        }
    }

    #[test]
    fn rotation_alone_can_change_r() {
        let d = diagram("exyexy", "");
        let r = rotate_move(&d, "e", MoveSplit { b: 1, d: 0 }).unwrap();
        assert_ne!(bouquet_eval(&d), bouquet_eval(&r));
    }
}
