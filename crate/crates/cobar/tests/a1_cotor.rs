use std::sync::OnceLock;

use cobar::{a1_class_name, induced_map, CobarComplex, CotorElement, Window};
use f2core::F2Matrix;
use gradedhopf::{build_a1_star, build_delta_cgl, dualize, CoalgebraMap};

fn a1() -> &'static CobarComplex {
    static C: OnceLock<CobarComplex> = OnceLock::new();
    C.get_or_init(|| CobarComplex::new(build_a1_star(), Window::default()).unwrap())
}

fn gen(g: usize, d: usize) -> CotorElement {
    a1().generator(g, d).unwrap()
}

#[test]
fn chart_matches_ring_through_17() {
    let c = a1();
    for g in 0..=17 {
        for d in 0..=g.min(10) {
            let want = usize::from(a1_class_name(g, d).is_some());
            assert_eq!(c.cotor_dim(g, d).unwrap(), want, "dim at ({g},{d})");
        }
    }
}

#[test]
fn ring_relations() {
    let c = a1();
    let (h10, h11, y74, y128) = (gen(1, 0), gen(2, 1), gen(7, 4), gen(12, 8));
    assert!(c.cotor_product(&h10, &h11).unwrap().is_zero());
    assert!(c.cotor_product(&h11, &h10).unwrap().is_zero());
    assert!(c.cotor_product_all(&[&h11, &h11, &h11]).unwrap().is_zero());
    assert!(!c.cotor_product(&h11, &h11).unwrap().is_zero());
    assert!(c.cotor_product(&h11, &y74).unwrap().is_zero());
    let sq = c.cotor_product(&y74, &y74).unwrap();
    let other = c.cotor_product_all(&[&h10, &h10, &y128]).unwrap();
    assert!(!sq.is_zero());
    assert_eq!(sq, other);
}

#[test]
fn y128_periodicity() {
    let c = a1();
    let y = gen(12, 8);
    for g in 0..=5 {
        for d in 0..=g {
            let src = c.cotor_basis(g, d).unwrap();
            let n = c.cotor_dim(g + 12, d + 8).unwrap();
            assert_eq!(src.len(), n, "dims at ({g},{d})");
            let cols: Vec<_> =
                src.iter().map(|b| c.cotor_product(&c.element(b), &y).unwrap().coords).collect();
            let m = F2Matrix::from_columns(n, &cols);
            assert_eq!(m.rank(), n, "multiplication by y128 at ({g},{d})");
        }
    }
}

#[test]
fn representatives_are_cocycles_and_unit_acts_trivially() {
    let c = a1();
    for (g, d) in [(1, 0), (2, 1), (7, 4), (12, 8), (14, 9)] {
        let e = gen(g, d);
        let r = c.representative(&e).unwrap();
        assert!(c.differential(&r).is_zero());
        assert_eq!(c.cotor_product(&c.unit(), &e).unwrap(), e);
    }
}

#[test]
fn d_squared_vanishes_through_12() {
    for g in 0..=12 {
        a1().verify_d_squared(g).unwrap();
    }
}

#[test]
fn induced_map_of_phi_dual() {
    let source = build_delta_cgl();
    let target = build_a1_star();
    let f = CoalgebraMap::from_generators(
        source.clone(),
        target.clone(),
        &[("sbar", "xi1"), ("delta", "xi2 + xi1^3"), ("rho", "0")],
    )
    .unwrap();
    let window = Window { g_max: 5, s_max: 5 };
    let cs = CobarComplex::new(source, window).unwrap();
    let ct = CobarComplex::new(target, window).unwrap();
    let m = induced_map(&f, &cs, &ct, window).unwrap();
    let sbar = cs.class_of(&cs.parse_cochain(&["[sbar]"]).unwrap()).unwrap();
    assert!(!sbar.is_zero());
    let img = cobar_image(&m.matrices[&(1, 0)], &sbar);
    assert_eq!(img, ct.generator(1, 0).unwrap().coords);
    let sbar2 = cs.class_of(&cs.parse_cochain(&["[sbar^2]"]).unwrap()).unwrap();
    let img = cobar_image(&m.matrices[&(2, 1)], &sbar2);
    assert_eq!(img, ct.generator(2, 1).unwrap().coords);
}

fn cobar_image(m: &F2Matrix, e: &CotorElement) -> f2core::BitVec {
    m.mul_vec(&e.coords)
}

#[test]
fn identity_induces_identity() {
    let h = build_a1_star();
    let labels: Vec<(String, String)> = (1..h.len()).map(|i| (h.label(i).to_string(), h.label(i).to_string())).collect();
    let pairs: Vec<(&str, &str)> = labels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let f = CoalgebraMap::from_generators(h.clone(), h.clone(), &pairs).unwrap();
    let window = Window { g_max: 8, s_max: 8 };
    let c = CobarComplex::new(h, window).unwrap();
    let m = induced_map(&f, &c, &c, window).unwrap();
    for ((g, d), mat) in &m.matrices {
        let n = c.cotor_dim(*g, *d).unwrap();
        assert_eq!(*mat, F2Matrix::identity(n), "at ({g},{d})");
    }
}

#[test]
fn dual_coalgebra_of_dual_algebra_has_same_cotor() {
    let h = dualize(&dualize(&build_a1_star()));
    let c = CobarComplex::new(h, Window { g_max: 10, s_max: 10 }).unwrap();
    for g in 0..=10 {
        for d in 0..=g {
            assert_eq!(c.cotor_dim(g, d).unwrap(), a1().cotor_dim(g, d).unwrap());
        }
    }
}
