use f2core::F2Matrix;
use grouphom::{
    abelianization_rank, builtin, homology_dims, induced_map, permutation_matrices, stabilization,
    unitriangular_inclusion, ChainLift, Greedy, Homomorphism, PermGroup, Resolution, BUILTIN_NAMES,
};
use std::sync::OnceLock;

fn gl3() -> &'static Resolution {
    static R: OnceLock<Resolution> = OnceLock::new();
    R.get_or_init(|| Resolution::new(&builtin("GL(3,2)").unwrap(), 5).unwrap())
}

fn gl2() -> &'static Resolution {
    static R: OnceLock<Resolution> = OnceLock::new();
    R.get_or_init(|| Resolution::new(&builtin("GL(2,2)").unwrap(), 7).unwrap())
}

/// Poincaré coefficients of `F2[a,b,c]/(ac)` with `|a| = |c| = 1`, `|b| = 2`,
/// by counting monomials `a^i b^j c^k` with `i·k = 0`.
fn ut3_oracle(d: usize) -> usize {
    let mut count = 0;
    for j in 0..=d / 2 {
        for i in 0..=d - 2 * j {
            let k = d - 2 * j - i;
            if i * k == 0 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn gl2_dims() {
    gl2().verify().unwrap();
    assert_eq!(homology_dims(gl2()), vec![1; 7]);
}

#[test]
fn gl3_dims() {
    gl3().verify().unwrap();
    assert_eq!(homology_dims(gl3()), vec![1, 0, 1, 2, 1]);
}

#[test]
fn ut3_dims_match_monomial_count() {
    let r = Resolution::new(&builtin("UT(3,2)").unwrap(), 6).unwrap();
    r.verify().unwrap();
    let want: Vec<usize> = (0..6).map(ut3_oracle).collect();
    assert_eq!(want, vec![1, 2, 3, 4, 5, 6]);
    assert_eq!(homology_dims(&r), want);
}

#[test]
fn two_realizations_of_gl2_agree() {
    let s3 = Resolution::new(&builtin("S3").unwrap(), 7).unwrap();
    assert_eq!(homology_dims(&s3), homology_dims(gl2()));
}

#[test]
fn dims_do_not_depend_on_greedy_choices() {
    for name in ["S3", "D8", "A4", "UT(3,2)", "S4"] {
        let g = builtin(name).unwrap();
        let a = Resolution::with_rule(&g, 5, Greedy::First).unwrap();
        let b = Resolution::with_rule(&g, 5, Greedy::Last).unwrap();
        b.verify().unwrap();
        assert_eq!(homology_dims(&a), homology_dims(&b), "{name}");
    }
}

#[test]
fn first_homology_matches_abelianization() {
    for name in BUILTIN_NAMES {
        let g = builtin(name).unwrap();
        let r = Resolution::new(&g, 2).unwrap();
        let dims = homology_dims(&r);
        assert_eq!(dims[0], 1, "{name}");
        assert_eq!(dims[1], abelianization_rank(&g), "{name}");
    }
}

fn rank(m: &F2Matrix) -> usize {
    m.rank()
}

#[test]
fn stabilization_is_iso_in_even_and_zero_in_odd_degrees() {
    let (src, tgt, f) = stabilization(2).unwrap();
    assert_eq!(src.order(), 6);
    assert_eq!(tgt.order(), 168);
    ChainLift::new(&f, gl2(), gl3(), 4).unwrap().verify(&f, gl2(), gl3()).unwrap();
    for d in 0..=4 {
        let m = induced_map(&f, gl2(), gl3(), d).unwrap();
        if d % 2 == 0 {
            assert_eq!((m.rows(), m.cols(), rank(&m)), (1, 1, 1), "degree {d}");
        } else {
            assert!(m.is_zero(), "degree {d}");
        }
    }
}

#[test]
fn permutation_matrices_give_isomorphisms() {
    let (src, _, f) = permutation_matrices(2).unwrap();
    let rs = Resolution::new(&src, 5).unwrap();
    for d in 0..=4 {
        let m = induced_map(&f, &rs, gl2(), d).unwrap();
        assert_eq!(m, F2Matrix::identity(1), "degree {d}");
    }
}

#[test]
fn identity_induces_identity() {
    for name in ["S3", "D8", "UT(3,2)"] {
        let g = builtin(name).unwrap();
        let r = Resolution::new(&g, 5).unwrap();
        let id = Homomorphism::identity(&g);
        for d in 0..=4 {
            let m = induced_map(&id, &r, &r, d).unwrap();
            assert_eq!(m, F2Matrix::identity(m.rows()), "{name} degree {d}");
        }
    }
}

#[test]
fn identity_between_different_resolutions_is_invertible() {
    let g = builtin("D8").unwrap();
    let a = Resolution::with_rule(&g, 5, Greedy::First).unwrap();
    let b = Resolution::with_rule(&g, 5, Greedy::Last).unwrap();
    let id = Homomorphism::identity(&g);
    for d in 0..=4 {
        let m = induced_map(&id, &a, &b, d).unwrap();
        assert_eq!(rank(&m), m.rows(), "degree {d}");
        assert_eq!(m.rows(), m.cols());
    }
}

#[test]
fn unitriangular_inclusion_is_injective_on_h1_image() {
    let (src, _, f) = unitriangular_inclusion(3).unwrap();
    let rs = Resolution::new(&src, 4).unwrap();
    // H_1(GL_3) = 0, so the map vanishes there; H_0 maps isomorphically.
    assert_eq!(induced_map(&f, &rs, gl3(), 0).unwrap(), F2Matrix::identity(1));
    assert!(induced_map(&f, &rs, gl3(), 1).unwrap().is_zero());
    // Restriction to a Sylow 2-subgroup is injective in cohomology, so the
    // map on homology is onto.
    for d in 2..=3 {
        let m = induced_map(&f, &rs, gl3(), d).unwrap();
        assert_eq!(rank(&m), m.rows(), "degree {d}");
    }
}

#[test]
fn cycle_notation_input() {
    let g = PermGroup::from_cycles("Q", "(1 2 3 4)(5 6 7 8)\n(1 5 3 7)(2 8 4 6)").unwrap();
    assert_eq!(g.order(), 8);
    let r = Resolution::new(&g, 5).unwrap();
    r.verify().unwrap();
    // Quaternion group: periodic of period 4.
    assert_eq!(homology_dims(&r), vec![1, 2, 2, 1, 1]);
}
