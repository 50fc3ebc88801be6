use std::collections::HashMap;
use std::ops::Range;

use crate::HopfError;

/// Per-grading ordered basis labels of a connected graded vector space.
///
/// Grading 0 holds the single element `"1"`; within each grading the labels
/// are distinct and sorted lexicographically. Elements carry a global index
/// running through gradings in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    labels: Vec<Vec<String>>,
    offsets: Vec<usize>,
    grading_of: Vec<usize>,
    index: HashMap<String, usize>,
}

impl GradedBasis {
    /// Builds a basis from per-grading labels, sorting each grading.
    pub fn new(mut labels: Vec<Vec<String>>) -> Result<Self, HopfError> {
        if labels.first().map(|g| g.as_slice()) != Some(&["1".to_string()][..]) {
            return Err(HopfError::Malformed("grading 0 must be exactly [\"1\"]".into()));
        }
        let mut offsets = Vec::with_capacity(labels.len() + 1);
        let mut grading_of = Vec::new();
        let mut index = HashMap::new();
        for (g, ls) in labels.iter_mut().enumerate() {
            ls.sort();
            offsets.push(grading_of.len());
            for l in ls.iter() {
                if index.insert(l.clone(), grading_of.len()).is_some() {
                    return Err(HopfError::Malformed(format!("duplicate label `{l}`")));
                }
                grading_of.push(g);
            }
        }
        offsets.push(grading_of.len());
        Ok(GradedBasis { labels, offsets, grading_of, index })
    }

    pub fn max_grading(&self) -> usize {
        self.labels.len() - 1
    }

    /// Total number of basis elements.
    pub fn len(&self) -> usize {
        self.grading_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grading_of.is_empty()
    }

    pub fn dim(&self, g: usize) -> usize {
        self.labels.get(g).map_or(0, Vec::len)
    }

    pub fn labels(&self, g: usize) -> &[String] {
        self.labels.get(g).map_or(&[], Vec::as_slice)
    }

    pub fn all_labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    /// Global indices of the basis of grading `g`.
    pub fn ids(&self, g: usize) -> Range<usize> {
        if g > self.max_grading() {
            let n = self.len();
            return n..n;
        }
        self.offsets[g]..self.offsets[g + 1]
    }

    pub fn grading(&self, id: usize) -> usize {
        self.grading_of[id]
    }

    pub fn label(&self, id: usize) -> &str {
        let g = self.grading_of[id];
        &self.labels[g][id - self.offsets[g]]
    }

    pub fn id(&self, label: &str) -> Result<usize, HopfError> {
        self.index.get(label).copied().ok_or_else(|| HopfError::UnknownLabel(label.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter().map(|g| g.iter().map(|x| x.to_string()).collect()).collect()
    }

    #[test]
    fn sorts_and_indexes() {
        let b = GradedBasis::new(s(&[&["1"], &["b", "a"]])).unwrap();
        assert_eq!(b.labels(1), &["a", "b"]);
        assert_eq!(b.id("b").unwrap(), 2);
        assert_eq!(b.grading(2), 1);
        assert_eq!(b.ids(1), 1..3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GradedBasis::new(s(&[&["x"]])).is_err());
        assert!(GradedBasis::new(s(&[&["1"], &["a", "a"]])).is_err());
    }
}
