use std::fmt;

use super::{Edge, GraphError, RibbonGraph, Sign, Vertex};

/// A signed chord diagram: a cyclic word in which every chord occurs twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    labels: Vec<String>,
    word: Vec<usize>,
    signs: Vec<Sign>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChordError {
    #[error("chord `{0}` must occur exactly twice")]
    BadMultiplicity(String),
    #[error("unknown chord `{0}`")]
    UnknownChord(String),
}

impl ChordDiagram {
    pub fn empty() -> Self {
        ChordDiagram {
            labels: Vec::new(),
            word: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// Chords are numbered by first occurrence; chords named in `negative`
    /// are twisted.
    pub fn from_labels<S: AsRef<str>>(word: &[S], negative: &[&str]) -> Result<Self, ChordError> {
        let mut labels: Vec<String> = Vec::new();
        let mut idx = Vec::with_capacity(word.len());
        let mut count: Vec<usize> = Vec::new();
        for w in word {
            let w = w.as_ref();
            let i = match labels.iter().position(|l| l == w) {
                Some(i) => i,
                None => {
                    labels.push(w.to_string());
                    count.push(0);
                    labels.len() - 1
                }
            };
            count[i] += 1;
            idx.push(i);
        }
        if let Some(i) = count.iter().position(|&c| c != 2) {
            return Err(ChordError::BadMultiplicity(labels[i].clone()));
        }
        let mut signs = vec![Sign::Positive; labels.len()];
        for n in negative {
            let i = labels
                .iter()
                .position(|l| l == n)
                .ok_or_else(|| ChordError::UnknownChord(n.to_string()))?;
            signs[i] = Sign::Negative;
        }
        Ok(ChordDiagram {
            labels,
            word: idx,
            signs,
        })
    }

    /// Single-character chord names, e.g. `("abab", "b")`.
    pub fn parse(word: &str, negative: &str) -> Result<Self, ChordError> {
        let w: Vec<String> = word.chars().map(String::from).collect();
        let n: Vec<String> = negative.chars().map(String::from).collect();
        let n: Vec<&str> = n.iter().map(String::as_str).collect();
        Self::from_labels(&w, &n)
    }

    pub(crate) fn from_parts(labels: Vec<String>, word: Vec<usize>, signs: Vec<Sign>) -> Self {
        debug_assert_eq!(word.len(), 2 * labels.len());
        ChordDiagram { labels, word, signs }
    }

    pub fn num_chords(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn chord_index(&self, label: &str) -> Result<usize, ChordError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ChordError::UnknownChord(label.to_string()))
    }

    pub fn is_orientable(&self) -> bool {
        self.signs.iter().all(|s| *s == Sign::Positive)
    }

    /// The embedded bouquet: vertex `o`, loop per chord, half-edges named
    /// `label.0` and `label.1` in order of occurrence.
    pub fn to_ribbon_graph(&self) -> RibbonGraph {
        let mut seen = vec![0usize; self.labels.len()];
        let mut rotation = Vec::with_capacity(self.word.len());
        for &c in &self.word {
            rotation.push(format!("{}.{}", self.labels[c], seen[c]));
            seen[c] += 1;
        }
        let edges = self
            .labels
            .iter()
            .zip(&self.signs)
            .map(|(l, s)| Edge {
                id: l.clone(),
                halves: [format!("{l}.0"), format!("{l}.1")],
                sign: *s,
            })
            .collect();
        RibbonGraph::new(
            vec![Vertex {
                id: "o".to_string(),
                rotation,
            }],
            edges,
        )
        .expect("bouquet of a chord diagram is valid")
    }

    /// Subdiagram on the chords whose bit is set in `keep`.
    pub fn restrict(&self, keep: &[bool]) -> ChordDiagram {
        let mut remap = vec![usize::MAX; self.labels.len()];
        let mut labels = Vec::new();
        let mut signs = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = labels.len();
                labels.push(self.labels[i].clone());
                signs.push(self.signs[i]);
            }
        }
        let word = self.word.iter().filter(|&&c| keep[c]).map(|&c| remap[c]).collect();
        ChordDiagram { labels, word, signs }
    }

    pub fn without(&self, chord: usize) -> ChordDiagram {
        let keep: Vec<bool> = (0..self.labels.len()).map(|i| i != chord).collect();
        self.restrict(&keep)
    }
}

impl RibbonGraph {
    /// The signed chord diagram of a bouquet, read from its rotation.
    pub fn to_chord_diagram(&self) -> Result<ChordDiagram, GraphError> {
        if self.num_vertices() != 1 {
            return Err(GraphError::NotABouquet);
        }
        let labels: Vec<String> = self.edges().iter().map(|e| e.id.clone()).collect();
        let word = self.rotation_darts(0).iter().map(|d| d / 2).collect();
        let signs = self.edges().iter().map(|e| e.sign).collect();
        Ok(ChordDiagram::from_parts(labels, word, signs))
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<&str> = self.word.iter().map(|&c| self.labels[c].as_str()).collect();
        write!(f, "[{}]", word.join(" "))?;
        let neg: Vec<&str> = self
            .labels
            .iter()
            .zip(&self.signs)
            .filter(|(_, s)| s.is_negative())
            .map(|(l, _)| l.as_str())
            .collect();
        if !neg.is_empty() {
            write!(f, " negative {{{}}}", neg.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bouquet_round_trip() {
        let g = RibbonGraph::build(
            &[("v", &["a1", "b1", "a2", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
        )
        .unwrap();
        let d = g.to_chord_diagram().unwrap();
        assert_eq!(d, ChordDiagram::parse("abab", "b").unwrap());
        assert_eq!(d.to_string(), "[a b a b] negative {b}");
    }

    #[test]
    fn edge_free_bouquet() {
        let d = RibbonGraph::edgeless(1).to_chord_diagram().unwrap();
        assert_eq!(d.num_chords(), 0);
        assert_eq!(RibbonGraph::edgeless(2).to_chord_diagram(), Err(GraphError::NotABouquet));
    }

    #[test]
    fn malformed_words() {
        assert_eq!(
            ChordDiagram::parse("aba", ""),
            Err(ChordError::BadMultiplicity("b".into()))
        );
        assert_eq!(
            ChordDiagram::parse("aa", "b"),
            Err(ChordError::UnknownChord("b".into()))
        );
    }
}
