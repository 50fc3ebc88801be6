use std::collections::VecDeque;

use crate::PermGroup;

/// `dim_F2 (G^ab ⊗ F2)`, from the order of the subgroup generated by all
/// squares and commutators.
pub fn abelianization_rank(g: &PermGroup) -> usize {
    let n = g.order();
    let mut gens = Vec::new();
    for a in 0..n {
        gens.push(g.mul(a, a));
        let ai = g.inverse(a);
        for b in 0..n {
            let c = g.mul(g.mul(a, b), g.mul(ai, g.inverse(b)));
            gens.push(c);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let mut inside = vec![false; n];
    inside[g.identity()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    let mut size = 1;
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(s, x);
            if !inside[y] {
                inside[y] = true;
                size += 1;
                queue.push_back(y);
            }
        }
    }
    let quotient = n / size;
    assert!(quotient.is_power_of_two(), "G/G²[G,G] is an elementary abelian 2-group");
    quotient.trailing_zeros() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn small_groups() {
        let cases = [("1", 0), ("C2", 1), ("C3", 0), ("C2xC2", 2), ("S3", 1), ("D8", 2), ("A4", 0), ("GL(3,2)", 0)];
        for (name, want) in cases {
            assert_eq!(abelianization_rank(&builtin(name).unwrap()), want, "{name}");
        }
    }
}
