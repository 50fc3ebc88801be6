use std::sync::OnceLock;

use cobar::{CobarComplex, ConeComplex, CotorElement, Window};
use f2core::F2Matrix;
use gradedhopf::build_a1_star;

const FLASH: [(usize, usize); 6] = [(0, 0), (2, 1), (4, 2), (3, 2), (5, 3), (7, 4)];

fn base() -> &'static CobarComplex {
    static C: OnceLock<CobarComplex> = OnceLock::new();
    C.get_or_init(|| CobarComplex::new(build_a1_star(), Window { g_max: 20, s_max: 20 }).unwrap())
}

fn cone() -> &'static ConeComplex<'static> {
    static K: OnceLock<ConeComplex<'static>> = OnceLock::new();
    K.get_or_init(|| {
        let z = base().parse_cochain(&["[xi1]"]).unwrap();
        ConeComplex::new(base(), z).unwrap()
    })
}

fn gen(g: usize, d: usize) -> CotorElement {
    base().generator(g, d).unwrap()
}

fn flash_dim(g: usize, d: usize) -> usize {
    let mut n = usize::from(FLASH.contains(&(g, d)));
    if g >= 12 && d >= 8 {
        n += flash_dim(g - 12, d - 8);
    }
    n
}

#[test]
fn lightning_flash() {
    for g in 0..=7 {
        for d in 0..=g.min(4) {
            assert_eq!(cone().dim(g, d).unwrap(), flash_dim(g, d), "at ({g},{d})");
        }
    }
}

#[test]
fn shifted_flash() {
    for g in 12..=19 {
        for d in 0..=g {
            assert_eq!(cone().dim(g, d).unwrap(), flash_dim(g, d), "at ({g},{d})");
        }
    }
}

#[test]
fn hidden_extension() {
    let k = cone();
    let (h10, h11) = (gen(1, 0), gen(2, 1));
    let z00 = k.generator(0, 0).unwrap();
    let z32 = k.generator(3, 2).unwrap();
    let lhs = k.module_action(&h10, &z32).unwrap();
    let rhs = k.module_action_all(&[&h11, &h11], &z00).unwrap();
    assert!(!lhs.is_zero());
    assert_eq!(lhs, rhs);
    assert!(k.module_action_all(&[&h11, &h11, &h11], &z00).unwrap().is_zero());
    assert_eq!(k.module_action(&base().unit(), &z00).unwrap(), z00);
}

#[test]
fn shifted_hidden_extension() {
    let k = cone();
    let (h10, h11, y) = (gen(1, 0), gen(2, 1), gen(12, 8));
    let yz00 = k.module_action(&y, &k.generator(0, 0).unwrap()).unwrap();
    let yz32 = k.module_action(&y, &k.generator(3, 2).unwrap()).unwrap();
    assert!(!yz00.is_zero() && !yz32.is_zero());
    let lhs = k.module_action(&h10, &yz32).unwrap();
    assert!(!lhs.is_zero());
    assert_eq!(lhs, k.module_action_all(&[&h11, &h11], &yz00).unwrap());
}

#[test]
fn flash_generators() {
    let k = cone();
    let z32 = k.generator(3, 2).unwrap();
    let rep = k.representative(&z32).unwrap();
    assert_eq!(k.format_chain(&rep), "([xi1^3] + [xi2], [xi1^2])");
    assert_eq!(k.boundary(&z32).unwrap(), gen(2, 1));
    assert_eq!(k.include(&base().unit()).unwrap(), k.generator(0, 0).unwrap());
    let y74 = k.include(&gen(7, 4)).unwrap();
    let h11 = gen(2, 1);
    assert_eq!(y74, k.module_action_all(&[&h11, &h11], &z32).unwrap());
    assert_eq!(k.dim(1, 0).unwrap(), 0);
}

fn h10_matrix(g: usize, d: usize) -> F2Matrix {
    let b = base();
    let h10 = gen(1, 0);
    let n = b.cotor_dim(g + 1, d).unwrap();
    let cols: Vec<_> =
        b.cotor_basis(g, d).unwrap().iter().map(|c| b.cotor_product(&h10, &b.element(c)).unwrap().coords).collect();
    F2Matrix::from_columns(n, &cols)
}

/// `dim cone(g,d) = dim coker(h10: (g−1,d) → (g,d)) + dim ker(h10: (g−1,d−1) → (g,d−1))`.
#[test]
fn long_exact_sequence_bookkeeping() {
    let b = base();
    for g in 1..=12 {
        for d in 0..=g {
            let into = if d < g { h10_matrix(g - 1, d).rank() } else { 0 };
            let coker = b.cotor_dim(g, d).unwrap() - into;
            let ker = if d >= 1 {
                let m = h10_matrix(g - 1, d - 1);
                m.cols() - m.rank()
            } else {
                0
            };
            assert_eq!(cone().dim(g, d).unwrap(), coker + ker, "at ({g},{d})");
        }
    }
}

#[test]
fn cone_d_squared() {
    for g in 0..=10 {
        cone().verify_d_squared(g).unwrap();
    }
}
