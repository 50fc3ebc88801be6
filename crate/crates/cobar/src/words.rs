use gradedhopf::HopfAlgebraTable;

/// Enumerates cobar words `[a1|…|as]` over the positive-grading basis
/// elements ("letters") of a coalgebra.
///
/// Words of grading `g` and length `s` are ranked lexicographically by
/// letter index, where letter `l` is the basis element with global index
/// `l + 1`.
#[derive(Clone, Debug)]
pub struct WordIndexer {
    grading: Vec<usize>,
    labels: Vec<String>,
    gmax: usize,
    cnt: Vec<Vec<u64>>,
}

impl WordIndexer {
    pub fn new(h: &HopfAlgebraTable, gmax: usize) -> Self {
        let grading: Vec<usize> = (1..h.len()).map(|i| h.grading(i)).collect();
        let labels: Vec<String> = (1..h.len()).map(|i| h.label(i).to_string()).collect();
        let mut cnt = vec![vec![0u64; gmax + 2]; gmax + 1];
        cnt[0][0] = 1;
        for g in 1..=gmax {
            for s in 1..=g {
                cnt[g][s] = grading.iter().filter(|&&lg| lg <= g).map(|&lg| cnt[g - lg][s - 1]).sum();
            }
        }
        WordIndexer { grading, labels, gmax, cnt }
    }

    pub fn gmax(&self) -> usize {
        self.gmax
    }

    pub fn letters(&self) -> usize {
        self.grading.len()
    }

    pub fn letter_grading(&self, l: usize) -> usize {
        self.grading[l]
    }

    pub fn letter_label(&self, l: usize) -> &str {
        &self.labels[l]
    }

    /// Number of words of grading `g` and length `s`.
    pub fn count(&self, g: usize, s: usize) -> usize {
        if g > self.gmax || s > g + 1 {
            return 0;
        }
        self.cnt[g][s] as usize
    }

    /// Total number of words of grading `g`.
    pub fn total(&self, g: usize) -> usize {
        (0..=g).map(|s| self.count(g, s)).sum()
    }

    pub fn rank(&self, w: &[usize]) -> u32 {
        let mut g: usize = w.iter().map(|&l| self.grading[l]).sum();
        let mut s = w.len();
        let mut r = 0u64;
        for &x in w {
            for l in 0..x {
                let lg = self.grading[l];
                if lg <= g {
                    r += self.cnt[g - lg][s - 1];
                }
            }
            g -= self.grading[x];
            s -= 1;
        }
        r as u32
    }

    pub fn unrank_into(&self, mut r: u64, mut g: usize, mut s: usize, out: &mut Vec<usize>) {
        out.clear();
        while s > 0 {
            let mut found = false;
            for l in 0..self.grading.len() {
                let lg = self.grading[l];
                if lg > g {
                    continue;
                }
                let c = self.cnt[g - lg][s - 1];
                if r < c {
                    out.push(l);
                    g -= lg;
                    s -= 1;
                    found = true;
                    break;
                }
                r -= c;
            }
            assert!(found, "word rank out of range");
        }
    }

    pub fn unrank(&self, r: u32, g: usize, s: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(s);
        self.unrank_into(r as u64, g, s, &mut w);
        w
    }

    /// `[a1|…|as]` with letter labels; the empty word is `[]`.
    pub fn format(&self, w: &[usize]) -> String {
        let parts: Vec<&str> = w.iter().map(|&l| self.labels[l].as_str()).collect();
        format!("[{}]", parts.join("|"))
    }

    /// Parses `[a|b|c]` or `[]` into letters.
    pub fn parse(&self, s: &str) -> Option<Vec<usize>> {
        let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
        if inner.trim().is_empty() {
            return Some(Vec::new());
        }
        inner.split('|').map(|t| self.labels.iter().position(|l| l == t.trim())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradedhopf::build_a1_star;
    use proptest::prelude::*;

    #[test]
    fn counts_small() {
        let w = WordIndexer::new(&build_a1_star(), 6);
        assert_eq!(w.count(0, 0), 1);
        assert_eq!(w.count(3, 1), 2);
        assert_eq!(w.count(2, 2), 1);
        assert_eq!(w.count(3, 2), 2);
        assert_eq!(w.format(&w.unrank(0, 3, 1)), "[xi1^3]");
        assert_eq!(w.format(&w.unrank(1, 3, 1)), "[xi2]");
    }

    proptest! {
        #[test]
        fn rank_unrank_roundtrip(g in 1usize..12, s in 1usize..8, seed in any::<u64>()) {
            let w = WordIndexer::new(&build_a1_star(), 12);
            let n = w.count(g, s);
            prop_assume!(n > 0);
            let r = (seed % n as u64) as u32;
            let word = w.unrank(r, g, s);
            prop_assert_eq!(word.len(), s);
            prop_assert_eq!(word.iter().map(|&l| w.letter_grading(l)).sum::<usize>(), g);
            prop_assert_eq!(w.rank(&word), r);
            if r > 0 {
                prop_assert!(w.unrank(r - 1, g, s) < word);
            }
        }
    }
}
