use num_rational::Ratio;
use winfty::{normal_atoms, slope, Generator, WMonomial};

use crate::tri::{sigma, TriMonomial};

/// An interval of slopes with open or closed ends, written `[0,2/3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeInterval {
    pub lo: Ratio<u64>,
    pub lo_closed: bool,
    pub hi: Ratio<u64>,
    pub hi_closed: bool,
}

impl SlopeInterval {
    pub fn contains(&self, x: Ratio<u64>) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }

    /// Parses `[a,b]`, `[a,b)`, `(a,b]` or `(a,b)` with fractions `p/q`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let lo_closed = match s.chars().next()? {
            '[' => true,
            '(' => false,
            _ => return None,
        };
        let hi_closed = match s.chars().last()? {
            ']' => true,
            ')' => false,
            _ => return None,
        };
        let (a, b) = s.get(1..s.len() - 1)?.split_once(',')?;
        let frac = |t: &str| -> Option<Ratio<u64>> {
            match t.trim().split_once('/') {
                Some((p, q)) => {
                    let (p, q): (u64, u64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
                    (q != 0).then(|| Ratio::new(p, q))
                }
                None => Some(Ratio::from_integer(t.trim().parse().ok()?)),
            }
        };
        Some(SlopeInterval { lo: frac(a)?, lo_closed, hi: frac(b)?, hi_closed })
    }
}

/// The factors `Q_I(x)` other than `σ` and `Q_1(σ)` with grading at most
/// `g_max`, homological degree at most `d_max` and slope in `interval`.
pub fn slope_filter(gens: &[Generator], g_max: u32, d_max: u32, interval: SlopeInterval) -> Vec<TriMonomial> {
    let s = sigma();
    normal_atoms(gens, g_max, d_max)
        .into_iter()
        .filter(|f| !(f.gen == s && (f.seq.is_empty() || f.seq == [1])))
        .map(|f| WMonomial::from_factors(vec![f]))
        .filter(|m| interval.contains(slope(m)))
        .map(TriMonomial::new)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        let i = SlopeInterval::parse("(2/3, 3/4]").unwrap();
        assert!(!i.contains(Ratio::new(2, 3)));
        assert!(i.contains(Ratio::new(3, 4)));
        assert!(SlopeInterval::parse("[0,1").is_none());
        assert!(SlopeInterval::parse("[0,1/0]").is_none());
        assert!(!SlopeInterval::parse("[0,0)").unwrap().contains(Ratio::from_integer(0)));
    }
}
