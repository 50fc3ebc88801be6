//! Minimal free resolutions over a finite graded algebra, Ext groups, and
//! Yoneda products by chain-map lifting.
//!
//! For a connected graded Hopf algebra `A_*`, `Ext_A(F2, F2)` with
//! `A = dual(A_*)` agrees with Cotor of `A_*`: the class in `Ext^{s,t}` sits
//! at the cobar bidegree `(g, d) = (t, t − s)`. Resolutions reach far higher
//! internal degrees than the cobar complex because only generators, not all
//! words, are stored.

use std::collections::HashMap;
use std::sync::Arc;

use f2core::{BitVec, F2Matrix, Subspace};
use gradedhopf::{normalize, HopfAlgebraTable};

use crate::CobarError;

/// A finite-dimensional connected graded algebra with its product table.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    table: HopfAlgebraTable,
    by_degree: Vec<Vec<usize>>,
    position: Vec<usize>,
}

impl FdAlgebra {
    /// Uses the product of `table`, which must be complete (not truncated).
    pub fn new(table: HopfAlgebraTable) -> Result<Self, CobarError> {
        if table.truncation().is_some() {
            return Err(CobarError::Invariant("resolutions need a complete algebra".into()));
        }
        let top = table.max_grading();
        let mut by_degree = vec![Vec::new(); top + 1];
        let mut position = vec![0; table.len()];
        for id in 0..table.len() {
            let g = table.grading(id);
            position[id] = by_degree[g].len();
            by_degree[g].push(id);
        }
        Ok(FdAlgebra { table, by_degree, position })
    }

    pub fn table(&self) -> &HopfAlgebraTable {
        &self.table
    }

    pub fn dim(&self, t: usize) -> usize {
        self.by_degree.get(t).map_or(0, Vec::len)
    }

    pub fn basis(&self, t: usize) -> &[usize] {
        self.by_degree.get(t).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.table.grading(a)
    }

    pub fn multiply(&self, a: usize, b: usize) -> Vec<usize> {
        self.table.multiply(a, b).expect("complete algebra")
    }
}

/// A finite graded left module: basis elements with degrees and the action
/// of every algebra basis element.
#[derive(Clone, Debug)]
pub struct FdModule {
    degrees: Vec<usize>,
    labels: Vec<String>,
    action: HashMap<(usize, usize), Vec<usize>>,
}

impl FdModule {
    /// `F2` concentrated in degree `t`.
    pub fn trivial(t: usize) -> Self {
        FdModule { degrees: vec![t], labels: vec!["x0".into()], action: HashMap::new() }
    }

    /// A module with basis `(label, degree)` and nonzero actions
    /// `a · m = Σ targets`, given on algebra basis elements; unlisted
    /// actions of positive-degree elements vanish.
    pub fn new(basis: &[(&str, usize)], actions: &[(usize, usize, Vec<usize>)]) -> Self {
        let mut action = HashMap::new();
        for (a, m, img) in actions {
            action.insert((*a, *m), normalize(img.clone()));
        }
        FdModule {
            degrees: basis.iter().map(|b| b.1).collect(),
            labels: basis.iter().map(|b| b.0.to_string()).collect(),
            action,
        }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }

    pub fn degree(&self, m: usize) -> usize {
        self.degrees[m]
    }

    pub fn basis(&self, t: usize) -> Vec<usize> {
        (0..self.len()).filter(|&m| self.degrees[m] == t).collect()
    }

    pub fn act(&self, a: usize, m: usize) -> Vec<usize> {
        if a == 0 {
            return vec![m];
        }
        self.action.get(&(a, m)).cloned().unwrap_or_default()
    }

    /// Checks degrees of the action and `(ab)m = a(bm)`.
    pub fn check(&self, alg: &FdAlgebra) -> Result<(), CobarError> {
        let n = alg.table.len();
        for a in 0..n {
            for m in 0..self.len() {
                if let Some(&x) = self.act(a, m).iter().find(|&&x| self.degrees[x] != alg.degree(a) + self.degrees[m]) {
                    return Err(CobarError::Invariant(format!("action lands in the wrong degree at {}", self.labels[x])));
                }
                for b in 0..n {
                    let lhs: Vec<usize> =
                        normalize(alg.multiply(a, b).into_iter().flat_map(|c| self.act(c, m)).collect());
                    let rhs: Vec<usize> = normalize(self.act(b, m).into_iter().flat_map(|y| self.act(a, y)).collect());
                    if lhs != rhs {
                        return Err(CobarError::Invariant(format!(
                            "module action is not associative at ({}, {}, {})",
                            alg.table.label(a),
                            alg.table.label(b),
                            self.labels[m]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// An element of a free module: sorted `(generator, algebra basis element)`
/// pairs.
pub type FreeElement = Vec<(usize, usize)>;

#[derive(Clone, Debug)]
struct Generator {
    degree: usize,
    /// `d(e)`: for `s = 0` a module element as `(m, 0)` pairs, else an
    /// element of the previous free module.
    image: FreeElement,
}

/// A minimal free resolution `… → P_1 → P_0 → M` through internal degree
/// `t_max` and homological degree `s_max`.
#[derive(Clone, Debug)]
pub struct Resolution {
    alg: Arc<FdAlgebra>,
    module: FdModule,
    s_max: usize,
    t_max: usize,
    gens: Vec<Vec<Generator>>,
}

/// A class in `Ext^{s,t}` in coordinates of the generators of `P_s` in
/// degree `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    pub s: usize,
    pub t: usize,
    pub coords: BitVec,
}

impl ExtElement {
    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// Cobar bidegree `(g, d) = (t, t − s)`.
    pub fn gd(&self) -> (usize, usize) {
        (self.t, self.t - self.s)
    }
}

impl Resolution {
    pub fn new(alg: Arc<FdAlgebra>, module: FdModule, s_max: usize, t_max: usize) -> Result<Self, CobarError> {
        module.check(&alg)?;
        let mut r = Resolution { alg, module, s_max, t_max, gens: vec![Vec::new(); s_max + 1] };
        for t in 0..=t_max {
            for s in 0..=s_max {
                r.step(s, t);
            }
        }
        Ok(r)
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra> {
        &self.alg
    }

    pub fn module(&self) -> &FdModule {
        &self.module
    }

    pub fn s_max(&self) -> usize {
        self.s_max
    }

    pub fn t_max(&self) -> usize {
        self.t_max
    }

    /// Generator blocks of `P_s` in degree `t`: `(generator, offset)` and
    /// the total dimension.
    fn layout(&self, s: usize, t: usize) -> (Vec<(usize, usize)>, usize) {
        let mut blocks = Vec::new();
        let mut off = 0;
        for (k, e) in self.gens[s].iter().enumerate() {
            if e.degree <= t {
                let n = self.alg.dim(t - e.degree);
                if n > 0 {
                    blocks.push((k, off));
                    off += n;
                }
            }
        }
        (blocks, off)
    }

    fn target_dim(&self, s: usize, t: usize) -> usize {
        if s == 0 {
            self.module.basis(t).len()
        } else {
            self.layout(s - 1, t).1
        }
    }

    /// Vector of a free element of `P_s` in degree `t`.
    fn free_to_vec(&self, s: usize, t: usize, x: &[(usize, usize)]) -> BitVec {
        let (blocks, n) = self.layout(s, t);
        let offsets: HashMap<usize, usize> = blocks.into_iter().collect();
        let mut v = BitVec::zeros(n);
        for &(k, a) in x {
            v.flip(offsets[&k] + self.alg.position[a]);
        }
        v
    }

    fn vec_to_free(&self, s: usize, t: usize, v: &BitVec) -> FreeElement {
        let (blocks, _) = self.layout(s, t);
        let mut out = Vec::new();
        for i in v.iter_ones() {
            let b = blocks.partition_point(|&(_, off)| off <= i) - 1;
            let (k, off) = blocks[b];
            let deg = t - self.gens[s][k].degree;
            out.push((k, self.alg.basis(deg)[i - off]));
        }
        normalize(out)
    }

    fn module_to_vec(&self, t: usize, x: &[(usize, usize)]) -> BitVec {
        let basis = self.module.basis(t);
        let mut v = BitVec::zeros(basis.len());
        for &(m, _) in x {
            v.flip(basis.iter().position(|&b| b == m).expect("module element in degree"));
        }
        v
    }

    fn vec_to_module(&self, t: usize, v: &BitVec) -> FreeElement {
        let basis = self.module.basis(t);
        v.iter_ones().map(|i| (basis[i], 0)).collect()
    }

    /// `a · x` for `x` in `P_s` (or in `M` when `module` is set).
    fn act(&self, a: usize, x: &[(usize, usize)], module: bool) -> FreeElement {
        let mut out = Vec::new();
        for &(k, b) in x {
            if module {
                out.extend(self.module.act(a, k).into_iter().map(|m| (m, 0)));
            } else {
                out.extend(self.alg.multiply(a, b).into_iter().map(|c| (k, c)));
            }
        }
        normalize(out)
    }

    /// `d` applied to an element of `P_s`, landing in `P_{s−1}` or `M`.
    pub fn differential(&self, s: usize, x: &[(usize, usize)]) -> FreeElement {
        let mut out = Vec::new();
        for &(k, a) in x {
            out.extend(self.act(a, &self.gens[s][k].image, s == 0));
        }
        normalize(out)
    }

    /// Matrix of `d: P_s(t) → P_{s−1}(t)` (or `M_t` for `s = 0`).
    fn d_matrix(&self, s: usize, t: usize) -> F2Matrix {
        let (blocks, n) = self.layout(s, t);
        let rows = self.target_dim(s, t);
        let mut cols = Vec::with_capacity(n);
        for (k, _) in blocks {
            let deg = t - self.gens[s][k].degree;
            for &a in self.alg.basis(deg) {
                let img = self.differential(s, &[(k, a)]);
                cols.push(if s == 0 { self.module_to_vec(t, &img) } else { self.free_to_vec(s - 1, t, &img) });
            }
        }
        F2Matrix::from_columns(rows, &cols)
    }

    fn step(&mut self, s: usize, t: usize) {
        let kernel = if s == 0 {
            Subspace::full(self.module.basis(t).len())
        } else {
            self.d_matrix(s - 1, t).kernel()
        };
        if kernel.dim() == 0 {
            return;
        }
        let image = self.d_matrix(s, t).image();
        let mut span = image;
        for v in kernel.basis_vectors() {
            if span.insert(v.clone()) {
                let img = if s == 0 { self.vec_to_module(t, &v) } else { self.vec_to_free(s - 1, t, &v) };
                self.gens[s].push(Generator { degree: t, image: img });
            }
        }
    }

    /// Indices (into the generators of `P_s`) of the generators of degree `t`.
    pub fn generators(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.gens[s].len()).filter(|&k| self.gens[s][k].degree == t).collect()
    }

    pub fn ext_dim(&self, s: usize, t: usize) -> usize {
        if s > self.s_max || t > self.t_max {
            return 0;
        }
        self.gens[s].iter().filter(|e| e.degree == t).count()
    }

    fn check(&self, s: usize, t: usize) -> Result<(), CobarError> {
        if s > self.s_max || t > self.t_max {
            return Err(CobarError::OutOfWindow { g: t, s, window: crate::Window { g_max: self.t_max, s_max: self.s_max } });
        }
        Ok(())
    }

    /// The unique nonzero class in `Ext^{s,t}` when it is one-dimensional.
    pub fn generator_class(&self, s: usize, t: usize) -> Result<ExtElement, CobarError> {
        self.check(s, t)?;
        let n = self.ext_dim(s, t);
        if n != 1 {
            return Err(CobarError::NotOneDimensional { g: t, d: t.saturating_sub(s), dim: n });
        }
        Ok(ExtElement { s, t, coords: BitVec::unit(1, 0) })
    }

    pub fn zero(&self, s: usize, t: usize) -> ExtElement {
        ExtElement { s, t, coords: BitVec::zeros(self.ext_dim(s, t)) }
    }

    /// Lifts a cocycle `c: P_{s0} → F2` of degree `t0` to a chain map
    /// `f_k: P_{s0+k} → Q_k` for `k ≤ k_max`, on generators of degree at most
    /// `t0 + q.t_max`. `q` must resolve `F2` in degree 0.
    fn lift_class(&self, c: &ExtElement, q: &Resolution, k_max: usize) -> Result<ChainLift, CobarError> {
        let gens = self.generators(c.s, c.t);
        let chosen: Vec<usize> = c.coords.iter_ones().map(|i| gens[i]).collect();
        self.lift(q, c.s, c.t, k_max, |k, _| if chosen.contains(&k) { vec![(0, 0)] } else { Vec::new() })
    }

    /// Builds `f_k: P_{s0+k} → Q_k` with `ε_Q f_0 = base` (a map from the
    /// generators of `P_{s0}` into the module of `q`, lowering degree by
    /// `shift`) and `d f_k = f_{k−1} d`.
    fn lift(
        &self,
        q: &Resolution,
        s0: usize,
        shift: usize,
        k_max: usize,
        base: impl Fn(usize, usize) -> FreeElement,
    ) -> Result<ChainLift, CobarError> {
        let mut maps: Vec<Vec<Option<FreeElement>>> = Vec::new();
        for k in 0..=k_max {
            let s = s0 + k;
            if s > self.s_max || k > q.s_max {
                return Err(CobarError::OutOfWindow {
                    g: self.t_max,
                    s,
                    window: crate::Window { g_max: self.t_max, s_max: self.s_max },
                });
            }
            let mut level = Vec::with_capacity(self.gens[s].len());
            for (gi, e) in self.gens[s].iter().enumerate() {
                if e.degree < shift {
                    level.push(Some(Vec::new()));
                    continue;
                }
                if e.degree - shift > q.t_max {
                    level.push(None);
                    continue;
                }
                let tq = e.degree - shift;
                let rhs: FreeElement = if k == 0 {
                    base(gi, tq)
                } else {
                    let prev = &maps[k - 1];
                    let mut acc = Vec::new();
                    for &(j, a) in &e.image {
                        let fj = prev[j].as_ref().expect("lower generator lifted");
                        acc.extend(q.act(a, fj, false));
                    }
                    normalize(acc)
                };
                let rhs_vec = if k == 0 { q.module_to_vec(tq, &rhs) } else { q.free_to_vec(k - 1, tq, &rhs) };
                let x = q
                    .d_matrix(k, tq)
                    .solve(&rhs_vec)
                    .ok_or_else(|| CobarError::Invariant(format!("chain lift failed at s={s}, t={}", e.degree)))?;
                level.push(Some(q.vec_to_free(k, tq, &x)));
            }
            maps.push(level);
        }
        Ok(ChainLift { maps })
    }

    /// Yoneda product `x · c` of `x ∈ Ext(F2, F2)` (from the resolution `q`
    /// of `F2`) with `c ∈ Ext(M, F2)`.
    pub fn yoneda_product(&self, q: &Resolution, x: &ExtElement, c: &ExtElement) -> Result<ExtElement, CobarError> {
        let (s, t) = (c.s + x.s, c.t + x.t);
        self.check(s, t)?;
        let lift = self.lift_class(c, q, x.s)?;
        let xg: Vec<usize> = {
            let g = q.generators(x.s, x.t);
            x.coords.iter_ones().map(|i| g[i]).collect()
        };
        let targets = self.generators(s, t);
        let mut coords = BitVec::zeros(targets.len());
        for (i, &e) in targets.iter().enumerate() {
            let img = lift.maps[x.s][e].as_ref().expect("lifted in range");
            let hits = img.iter().filter(|&&(k, a)| a == 0 && xg.contains(&k)).count();
            if hits % 2 == 1 {
                coords.set(i, true);
            }
        }
        Ok(ExtElement { s, t, coords })
    }

    /// Applies a sequence of Yoneda products, left to right.
    pub fn yoneda_product_all(&self, q: &Resolution, xs: &[&ExtElement], c: &ExtElement) -> Result<ExtElement, CobarError> {
        let mut acc = c.clone();
        for x in xs {
            acc = self.yoneda_product(q, x, &acc)?;
        }
        Ok(acc)
    }

    /// Pulls a class of `Ext(N, F2)` back along a module map `φ: M → N`
    /// given on basis elements of `M`; `q` resolves `N`.
    pub fn pullback(
        &self,
        q: &Resolution,
        phi: &dyn Fn(usize) -> Vec<usize>,
        c: &ExtElement,
    ) -> Result<ExtElement, CobarError> {
        self.check(c.s, c.t)?;
        let lift = self.lift(q, 0, 0, c.s, |gi, _| {
            let img = self.gens[0][gi].image.iter().flat_map(|&(m, _)| phi(m)).collect();
            normalize(img).into_iter().map(|n| (n, 0)).collect()
        })?;
        let cg: Vec<usize> = {
            let g = q.generators(c.s, c.t);
            c.coords.iter_ones().map(|i| g[i]).collect()
        };
        let targets = self.generators(c.s, c.t);
        let mut coords = BitVec::zeros(targets.len());
        for (i, &e) in targets.iter().enumerate() {
            let img = lift.maps[c.s][e].as_ref().expect("lifted in range");
            if img.iter().filter(|&&(k, a)| a == 0 && cg.contains(&k)).count() % 2 == 1 {
                coords.set(i, true);
            }
        }
        Ok(ExtElement { s: c.s, t: c.t, coords })
    }
}

struct ChainLift {
    maps: Vec<Vec<Option<FreeElement>>>,
}

/// The module `F2{x0, x1}` with `x1` in degree 1 and the degree-one algebra
/// element acting by `x0 ↦ x1`; over `A(1)` this is the cofibre of `h10`.
pub fn h10_cofibre_module(alg: &FdAlgebra) -> FdModule {
    let sq1 = alg.basis(1)[0];
    FdModule::new(&[("x0", 0), ("x1", 1)], &[(sq1, 0, vec![1])])
}

/// The Ext groups of `A(1)` needed for the `(12, 8)`-periodic families:
/// resolutions of `F2`, of `F2` shifted to degree 1, and of the cofibre of
/// `h10`.
#[derive(Debug)]
pub struct A1Ext {
    pub sphere: Resolution,
    pub shifted_sphere: Resolution,
    pub cofibre: Resolution,
}

impl A1Ext {
    pub fn new(s_max: usize, t_max: usize) -> Result<Self, CobarError> {
        let alg = Arc::new(FdAlgebra::new(gradedhopf::dualize(&gradedhopf::build_a1_star()))?);
        let sphere = Resolution::new(alg.clone(), FdModule::trivial(0), s_max, t_max)?;
        let shifted_sphere = Resolution::new(alg.clone(), FdModule::trivial(1), s_max, t_max)?;
        let cofibre = Resolution::new(alg.clone(), h10_cofibre_module(&alg), s_max, t_max)?;
        Ok(A1Ext { sphere, shifted_sphere, cofibre })
    }

    /// Class of `Ext(F2)` at cobar bidegree `(g, d)`.
    pub fn sphere_class(&self, g: usize, d: usize) -> Result<ExtElement, CobarError> {
        self.sphere.generator_class(g - d, g)
    }

    /// Class of the cofibre at cobar bidegree `(g, d)`.
    pub fn cofibre_class(&self, g: usize, d: usize) -> Result<ExtElement, CobarError> {
        self.cofibre.generator_class(g - d, g)
    }

    /// `x · m` for `x ∈ Ext(F2)` and `m` a cofibre class.
    pub fn act(&self, x: &ExtElement, m: &ExtElement) -> Result<ExtElement, CobarError> {
        self.cofibre.yoneda_product(&self.sphere, x, m)
    }

    /// The map `q: Ext(F2) → Ext(cofibre)` induced by `x0 ↦ 1`.
    pub fn include(&self, x: &ExtElement) -> Result<ExtElement, CobarError> {
        self.cofibre.pullback(&self.sphere, &|m| if m == 0 { vec![0] } else { Vec::new() }, &ExtElement {
            s: x.s,
            t: x.t,
            coords: x.coords.clone(),
        })
    }

    /// The boundary `∂: Ext(cofibre)` at `(g, d)` → `Ext(F2)` at
    /// `(g−1, d−1)`, restriction along `F2{x1} ⊂ M`.
    pub fn boundary(&self, m: &ExtElement) -> Result<ExtElement, CobarError> {
        let pulled = self.shifted_sphere.pullback(&self.cofibre, &|_| vec![1], m)?;
        // The shifted sphere's Ext^{s,t} is Ext(F2)^{s,t−1}.
        let dim = self.sphere.ext_dim(pulled.s, pulled.t - 1);
        if dim != pulled.coords.len() {
            return Err(CobarError::Invariant("shifted resolution disagrees with the sphere".into()));
        }
        Ok(ExtElement { s: pulled.s, t: pulled.t - 1, coords: pulled.coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_ext_of_a1() {
        let e = A1Ext::new(6, 14).unwrap();
        // h10, h11, h10^2, no class at (3,1), y74 at (7,4), y128 at (12,8).
        assert_eq!(e.sphere.ext_dim(1, 1), 1);
        assert_eq!(e.sphere.ext_dim(1, 2), 1);
        assert_eq!(e.sphere.ext_dim(2, 3), 0);
        assert_eq!(e.sphere.ext_dim(3, 7), 1);
        assert_eq!(e.sphere.ext_dim(4, 12), 1);
        let h10 = e.sphere_class(1, 0).unwrap();
        let h11 = e.sphere_class(2, 1).unwrap();
        assert!(e.sphere.yoneda_product(&e.sphere, &h10, &h11).unwrap().is_zero());
        let h11sq = e.sphere.yoneda_product(&e.sphere, &h11, &h11).unwrap();
        assert!(!h11sq.is_zero());
        assert!(e.sphere.yoneda_product(&e.sphere, &h11, &h11sq).unwrap().is_zero());
    }

    #[test]
    fn flash_in_low_degrees() {
        let e = A1Ext::new(6, 8).unwrap();
        let flash = [(0, 0), (2, 1), (4, 2), (3, 2), (5, 3), (7, 4)];
        for g in 0..=7 {
            for d in 0..=g.min(4) {
                let want = usize::from(flash.contains(&(g, d)));
                assert_eq!(e.cofibre.ext_dim(g - d, g), want, "at ({g},{d})");
            }
        }
        let z00 = e.cofibre_class(0, 0).unwrap();
        let z32 = e.cofibre_class(3, 2).unwrap();
        let h10 = e.sphere_class(1, 0).unwrap();
        let h11 = e.sphere_class(2, 1).unwrap();
        let a = e.act(&h10, &z32).unwrap();
        let b = e.cofibre.yoneda_product_all(&e.sphere, &[&h11, &h11], &z00).unwrap();
        assert!(!a.is_zero());
        assert_eq!(a, b);
        assert_eq!(e.boundary(&z32).unwrap(), h11);
        assert_eq!(e.include(&e.sphere.generator_class(0, 0).unwrap()).unwrap(), z00);
    }
}
