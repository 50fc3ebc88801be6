use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::monomial::{Factor, Generator, WMonomial, WPolynomial};
use crate::WError;

/// `binom(n, k) mod 2` for any integer `n`, with
/// `binom(n, k) = (−1)^k binom(k − n − 1, k)` for negative `n` and zero for
/// negative `k`.
pub fn binomial_mod2(n: i64, k: i64) -> bool {
    if k < 0 {
        return false;
    }
    if n < 0 {
        return binomial_mod2(k - n - 1, k);
    }
    k <= n && (k & !n) == 0
}

/// Lower indices `s'_i = s_i − Σ_{j>i} s_j − d(x)` of an upper sequence.
pub fn lower_indices(seq: &[u32], x: &Generator) -> Vec<i64> {
    let mut tail = i64::from(x.d);
    let mut out = vec![0; seq.len()];
    for i in (0..seq.len()).rev() {
        out[i] = i64::from(seq[i]) - tail;
        tail += i64::from(seq[i]);
    }
    out
}

/// Upper indices from lower ones: `Q_t(y) = Q^{t + |y|}(y)`, applied from the
/// innermost (last) index outwards.
pub fn upper_from_lower(lower: &[u32], x: &Generator) -> Vec<u32> {
    let mut deg = x.d;
    let mut out = vec![0; lower.len()];
    for i in (0..lower.len()).rev() {
        out[i] = lower[i] + deg;
        deg += out[i];
    }
    out
}

/// Whether `Q^I(x)` is a basis factor: `I` empty, or its lower indices
/// satisfy `0 < s'_1 ≤ … ≤ s'_r`.
pub fn is_normal(seq: &[u32], x: &Generator) -> bool {
    let l = lower_indices(seq, x);
    match l.first() {
        None => true,
        Some(&first) => first > 0 && l.windows(2).all(|w| w[0] <= w[1]),
    }
}

/// The Adem relation for an inadmissible composite `Q^r Q^s` (`r > 2s`):
/// the pairs `(a, b)` with `Q^r Q^s = Σ Q^a Q^b`, namely
/// `b = i`, `a = r + s − i` for every `i` with `binom(i − s − 1, 2i − r)` odd.
pub fn adem_rule(r: u32, s: u32) -> Vec<(u32, u32)> {
    assert!(r > 2 * s, "Q^{r}Q^{s} is admissible");
    let (r, s) = (i64::from(r), i64::from(s));
    ((r + 1) / 2..=r - s - 1)
        .filter(|&i| binomial_mod2(i - s - 1, 2 * i - r))
        .map(|i| ((r + s - i) as u32, i as u32))
        .collect()
}

/// The Nishida relation `Sq^r_* Q^s = Σ Q^{s−r+i} Sq^i_*`: the indices `i`
/// with `binom(s − r, r − 2i)` odd, paired with `s − r + i`. Terms with a
/// negative operation index are dropped.
pub fn nishida_rule(r: u32, s: u32) -> Vec<(u32, u32)> {
    let (r, s) = (i64::from(r), i64::from(s));
    (0..=r / 2)
        .filter(|&i| s - r + i >= 0 && binomial_mod2(s - r, r - 2 * i))
        .map(|i| ((s - r + i) as u32, i as u32))
        .collect()
}

fn square(f: &Factor) -> WPolynomial {
    WPolynomial::from_monomial(WMonomial::from_factors(vec![f.clone(), f.clone()]))
}

fn apply_q_factor(s: u32, f: &Factor) -> WPolynomial {
    let deg = f.d();
    if s < deg {
        return WPolynomial::zero();
    }
    if s == deg {
        return square(f);
    }
    match f.seq.first() {
        Some(&s1) if s > 2 * s1 => {
            let inner = f.inner();
            let mut out = WPolynomial::zero();
            for (a, b) in adem_rule(s, s1) {
                let q = apply_q_factor(b, &inner);
                out.add_assign(&apply_q(a, &q));
            }
            out
        }
        _ => {
            let mut seq = vec![s];
            seq.extend_from_slice(&f.seq);
            WPolynomial::from_factor(Factor { gen: f.gen.clone(), seq })
        }
    }
}

fn apply_q_factors(s: u32, factors: &[Factor]) -> WPolynomial {
    match factors {
        [] => {
            if s == 0 {
                WPolynomial::one()
            } else {
                WPolynomial::zero()
            }
        }
        [f] => apply_q_factor(s, f),
        [a, rest @ ..] => {
            let da = a.d();
            let drest: u32 = rest.iter().map(Factor::d).sum();
            let mut out = WPolynomial::zero();
            if s < da + drest {
                return out;
            }
            for i in da..=s - drest {
                let x = apply_q_factor(i, a);
                if x.is_zero() {
                    continue;
                }
                let y = apply_q_factors(s - i, rest);
                out.add_assign(&x.mul(&y));
            }
            out
        }
    }
}

/// `Q^s(p)` in normal form.
pub fn apply_q(s: u32, p: &WPolynomial) -> WPolynomial {
    let mut out = WPolynomial::zero();
    for m in p.terms() {
        out.add_assign(&apply_q_factors(s, m.factors()));
    }
    out
}

/// `Q^{s1} ∘ … ∘ Q^{sr}` applied to `p`, innermost (last) first.
pub fn apply_q_sequence(seq: &[u32], p: &WPolynomial) -> WPolynomial {
    seq.iter().rev().fold(p.clone(), |acc, &s| apply_q(s, &acc))
}

/// `Q_t(p) = Q^{t + |p|}(p)` for a homogeneous `p`.
pub fn apply_lower_q(t: u32, p: &WPolynomial) -> Result<WPolynomial, WError> {
    if p.is_zero() {
        return Ok(WPolynomial::zero());
    }
    let (_, d) = p.bidegree().ok_or(WError::Inhomogeneous)?;
    Ok(apply_q(t + d, p))
}

/// Values of `Sq^r_*` on generators for `r > 0`; unregistered values are
/// zero.
#[derive(Clone, Debug, Default)]
pub struct SteenrodValues {
    values: BTreeMap<(Generator, u32), WPolynomial>,
}

impl SteenrodValues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, x: &Generator, r: u32, value: WPolynomial) {
        self.values.insert((x.clone(), r), value);
    }

    fn on_generator(&self, x: &Generator, r: u32) -> WPolynomial {
        if r == 0 {
            return WPolynomial::generator(x);
        }
        if r > x.d {
            return WPolynomial::zero();
        }
        self.values.get(&(x.clone(), r)).cloned().unwrap_or_default()
    }

    fn on_factor(&self, r: u32, f: &Factor) -> WPolynomial {
        if r == 0 {
            return WPolynomial::from_factor(f.clone());
        }
        if r > f.d() {
            return WPolynomial::zero();
        }
        let Some(&s) = f.seq.first() else {
            return self.on_generator(&f.gen, r);
        };
        let inner = WPolynomial::from_factor(f.inner());
        let mut out = WPolynomial::zero();
        for (a, i) in nishida_rule(r, s) {
            let y = self.apply(i, &inner);
            out.add_assign(&apply_q(a, &y));
        }
        out
    }

    fn on_factors(&self, r: u32, factors: &[Factor]) -> WPolynomial {
        match factors {
            [] => {
                if r == 0 {
                    WPolynomial::one()
                } else {
                    WPolynomial::zero()
                }
            }
            [f] => self.on_factor(r, f),
            [a, rest @ ..] => {
                let mut out = WPolynomial::zero();
                for i in 0..=r.min(a.d()) {
                    let x = self.on_factor(i, a);
                    if x.is_zero() {
                        continue;
                    }
                    out.add_assign(&x.mul(&self.on_factors(r - i, rest)));
                }
                out
            }
        }
    }

    /// `Sq^r_*(p)` through the Cartan formula and the Nishida relations.
    pub fn apply(&self, r: u32, p: &WPolynomial) -> WPolynomial {
        let mut out = WPolynomial::zero();
        for m in p.terms() {
            out.add_assign(&self.on_factors(r, m.factors()));
        }
        out
    }
}

/// `Sq^r_*(p)` with every generator annihilated in positive degree.
pub fn dual_steenrod(r: u32, p: &WPolynomial) -> WPolynomial {
    SteenrodValues::new().apply(r, p)
}

/// The bar operation: decomposables and the unit go to zero and
/// `Q_{s_1}⋯Q_{s_r}(x) ↦ Q_{s_1−1}⋯Q_{s_r−1}(x̄)` with `Q_{−1} = 0`.
pub fn bar_class(p: &WPolynomial) -> WPolynomial {
    let mut out = WPolynomial::zero();
    for m in p.terms() {
        let [f] = m.factors() else { continue };
        let xbar = f.gen.bar();
        let lower = lower_indices(&f.seq, &f.gen);
        let mut acc = WPolynomial::generator(&xbar);
        for &t in lower.iter().rev() {
            if t == 0 || acc.is_zero() {
                acc = WPolynomial::zero();
                break;
            }
            acc = apply_lower_q((t - 1) as u32, &acc).expect("towers on one generator are homogeneous");
        }
        out.add_assign(&acc);
    }
    out
}

/// The ratio `d/g` of a monomial of positive grading.
pub fn slope(m: &WMonomial) -> Ratio<u64> {
    let (g, d) = m.bidegree();
    assert!(g > 0, "slope needs positive grading");
    Ratio::new(u64::from(d), u64::from(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Generator {
        Generator::new("s", 1, 0)
    }

    fn q(seq: &[u32]) -> WPolynomial {
        WPolynomial::from_factor(Factor::new(&sigma(), seq))
    }

    #[test]
    fn binomials() {
        assert!(binomial_mod2(3, 1));
        assert!(!binomial_mod2(2, 1));
        assert!(!binomial_mod2(1, 2));
        assert!(binomial_mod2(-1, 5));
        assert!(!binomial_mod2(-2, 1));
        assert!(binomial_mod2(0, 0));
    }

    #[test]
    fn normality() {
        let s = sigma();
        assert!(is_normal(&[2, 1], &s));
        assert!(!is_normal(&[3, 1], &s));
        assert!(is_normal(&[], &s));
        assert!(!is_normal(&[0], &s));
        assert!(is_normal(&[1], &s));
        assert!(!is_normal(&[1, 1], &s));
        assert_eq!(lower_indices(&[2, 1], &s), vec![1, 1]);
        assert_eq!(upper_from_lower(&[1, 1], &s), vec![2, 1]);
    }

    #[test]
    fn adem_table() {
        assert!(adem_rule(3, 1).is_empty());
        assert!(adem_rule(5, 2).is_empty());
        assert_eq!(adem_rule(6, 2), vec![(5, 3)]);
        assert_eq!(adem_rule(5, 1), vec![(3, 3)]);
    }

    #[test]
    fn nishida_table() {
        assert!(nishida_rule(1, 1).is_empty());
        assert_eq!(nishida_rule(1, 2), vec![(1, 0)]);
        assert_eq!(nishida_rule(2, 4), vec![(2, 0), (3, 1)]);
        assert_eq!(nishida_rule(2, 3), vec![(2, 1)]);
        assert!(nishida_rule(1, 3).is_empty());
    }

    #[test]
    fn operations_on_sigma() {
        let s = WPolynomial::generator(&sigma());
        assert_eq!(apply_q(0, &s), s.mul(&s));
        assert_eq!(apply_q(3, &q(&[1])), WPolynomial::zero());
        assert_eq!(apply_q(1, &q(&[1])), q(&[1]).pow(2));
        assert_eq!(apply_q(2, &q(&[1])), q(&[2, 1]));
        assert_eq!(apply_q(4, &WPolynomial::one()), WPolynomial::zero());
        assert_eq!(apply_q(0, &WPolynomial::one()), WPolynomial::one());
    }

    #[test]
    fn bar_rules() {
        let s = WPolynomial::generator(&sigma());
        let sb = WPolynomial::generator(&sigma().bar());
        assert!(bar_class(&s.mul(&q(&[1]))).is_zero());
        assert_eq!(bar_class(&q(&[1])), sb.pow(2));
        assert_eq!(bar_class(&q(&[2, 1])), sb.pow(4));
        assert_eq!(bar_class(&s), sb);
        assert!(bar_class(&WPolynomial::one()).is_zero());
    }

    #[test]
    fn slopes() {
        assert_eq!(slope(&q(&[2, 1]).terms().next().unwrap().clone()), Ratio::new(3, 4));
        let beta = WMonomial::from_factors(vec![Factor::generator(&Generator::new("b", 3, 2))]);
        assert_eq!(slope(&beta), Ratio::new(2, 3));
        for r in 1..6u32 {
            let lower = vec![1; r as usize];
            let m = WMonomial::from_factors(vec![Factor::new(&sigma(), &upper_from_lower(&lower, &sigma()))]);
            assert_eq!(slope(&m), Ratio::new((1 << r) - 1, 1 << r));
        }
    }
}
