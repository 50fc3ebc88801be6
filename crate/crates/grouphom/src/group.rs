use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::GroupError;

/// A permutation of `0..degree`, stored as its image list.
pub type Perm = Vec<u32>;

/// Largest group order accepted.
pub const MAX_ORDER: usize = 1000;

/// `(a∘b)(x) = a(b(x))`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

/// A finite permutation group with its elements enumerated.
///
/// Elements are sorted lexicographically by image list, so the identity
/// comes first. The multiplication table is indexed by element position:
/// `mul(a, b)` is the index of `a∘b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    table: Vec<u32>,
    /// For each element, a generator index and an element index with
    /// `element = generator ∘ rest`; the identity has none.
    words: Vec<Option<(u32, u32)>>,
}

impl PermGroup {
    /// The group generated by `generators`, which must all have length
    /// `degree`.
    pub fn new(name: &str, degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        for g in &generators {
            let set: BTreeSet<u32> = g.iter().copied().collect();
            if g.len() != degree || set.len() != degree || set.iter().any(|&x| x as usize >= degree) {
                return Err(GroupError::Input(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        let id: Perm = (0..degree as u32).collect();
        let mut seen: HashMap<Perm, Option<(u32, Perm)>> = HashMap::new();
        seen.insert(id.clone(), None);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for (k, s) in generators.iter().enumerate() {
                let y = compose(s, &x);
                if !seen.contains_key(&y) {
                    if seen.len() >= MAX_ORDER {
                        return Err(GroupError::TooLarge { order: seen.len() + 1, limit: MAX_ORDER });
                    }
                    seen.insert(y.clone(), Some((k as u32, x.clone())));
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.keys().cloned().collect();
        elements.sort();
        let index: HashMap<&Perm, u32> = elements.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&compose(a, b)];
            }
        }
        let words = elements.iter().map(|e| seen[e].as_ref().map(|(k, rest)| (*k, index[rest]))).collect();
        Ok(PermGroup { name: name.to_string(), degree, generators, elements, table, words })
    }

    /// Parses one generator per line in 1-based cycle notation, for example
    /// `(1 2 3)(4 5)`. The degree is the largest point mentioned.
    pub fn from_cycles(name: &str, text: &str) -> Result<Self, GroupError> {
        let mut cycles_per_gen = Vec::new();
        let mut degree = 0;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut cycles = Vec::new();
            for part in line.split('(').skip(1) {
                let body = part
                    .split_once(')')
                    .map(|(b, _)| b)
                    .ok_or_else(|| GroupError::Input(format!("unclosed cycle in `{line}`")))?;
                let pts = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| match t.parse::<usize>() {
                        Ok(p) if p >= 1 => Ok(p),
                        _ => Err(GroupError::Input(format!("bad point `{t}`"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                degree = degree.max(pts.iter().copied().max().unwrap_or(0));
                cycles.push(pts);
            }
            if cycles.is_empty() && line != "()" {
                return Err(GroupError::Input(format!("no cycles in `{line}`")));
            }
            cycles_per_gen.push(cycles);
        }
        let degree = degree.max(1);
        let mut gens = Vec::new();
        for cycles in cycles_per_gen {
            let mut p: Perm = (0..degree as u32).collect();
            let mut used = BTreeSet::new();
            for c in cycles {
                for (k, &x) in c.iter().enumerate() {
                    if !used.insert(x) {
                        return Err(GroupError::Input(format!("point {x} repeats in a generator")));
                    }
                    p[x - 1] = (c[(k + 1) % c.len()] - 1) as u32;
                }
            }
            gens.push(p);
        }
        Self::new(name, degree, gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_slice().cmp(p)).ok()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the product of elements `a` and `b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).expect("groups have inverses")
    }

    /// Index of generator `k` as an element.
    pub fn generator_index(&self, k: usize) -> usize {
        self.index_of(&self.generators[k]).expect("generators are elements")
    }

    /// The element as a word `g_{k1}∘g_{k2}∘…` in the generators.
    pub fn word(&self, mut a: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((k, rest)) = self.words[a] {
            w.push(k as usize);
            a = rest as usize;
        }
        w
    }
}

/// A group homomorphism given by the images of the source generators and
/// tabulated on every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    /// Extends `images[k]` (an element of `target`) for generator `k` of
    /// `source`, and checks that the result is multiplicative.
    pub fn from_generator_images(source: &PermGroup, target: &PermGroup, images: &[Perm]) -> Result<Self, GroupError> {
        if images.len() != source.generators().len() {
            return Err(GroupError::Input(format!(
                "{} generator images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        let img: Vec<usize> = images
            .iter()
            .map(|p| target.index_of(p).ok_or_else(|| GroupError::Input(format!("{p:?} is not in {}", target.name()))))
            .collect::<Result<_, _>>()?;
        let map: Vec<usize> = (0..source.order())
            .map(|a| source.word(a).iter().rev().fold(target.identity(), |acc, &k| target.mul(img[k], acc)))
            .collect();
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(Homomorphism { map })
    }

    pub fn identity(g: &PermGroup) -> Self {
        Homomorphism { map: (0..g.order()).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_three() {
        let g = PermGroup::from_cycles("S3", "(1 2)\n(1 2 3)").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element(0), &vec![0, 1, 2]);
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
            let w = g.word(a);
            let back = w.iter().rev().fold(0, |acc, &k| g.mul(g.generator_index(k), acc));
            assert_eq!(back, a);
        }
    }

    #[test]
    fn bad_input() {
        assert!(PermGroup::from_cycles("x", "(1 2").is_err());
        assert!(PermGroup::from_cycles("x", "(1 1)").is_err());
        assert!(PermGroup::from_cycles("x", "(0 1)").is_err());
        assert!(PermGroup::new("x", 2, vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn too_large() {
        let s7 = PermGroup::from_cycles("S7", "(1 2)\n(1 2 3 4 5 6 7)");
        assert!(matches!(s7, Err(GroupError::TooLarge { .. })));
    }

    #[test]
    fn non_homomorphism_is_rejected() {
        let c2 = PermGroup::from_cycles("C2", "(1 2)").unwrap();
        let c3 = PermGroup::from_cycles("C3", "(1 2 3)").unwrap();
        assert!(Homomorphism::from_generator_images(&c2, &c3, &[vec![1, 2, 0]]).is_err());
    }
}
