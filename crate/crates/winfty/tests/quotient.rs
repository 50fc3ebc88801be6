use winfty::{brute_force_basis, free_basis, ideal_quotient_dims, parse, Context, Generator, WPolynomial};

fn p(s: &str) -> WPolynomial {
    parse(s, &Context::standard()).unwrap()
}

fn gens() -> Vec<Generator> {
    let ctx = Context::standard();
    ["s", "n1", "n2"].iter().map(|n| ctx.get(n).unwrap().clone()).collect()
}

fn relations() -> Vec<WPolynomial> {
    ["s*Q[1](s)", "s*Q[3](s)", "s^2*Q[2](s)", "s*n1", "s*n2"].iter().map(|r| p(r)).collect()
}

/// Dots of the dimension figure, rows `d = 0..=3`, columns `g = 1..=6`.
const FIGURE: [[usize; 6]; 4] = [[1, 1, 1, 1, 1, 1], [0, 1, 0, 0, 0, 0], [0, 1, 1, 1, 0, 0], [0, 1, 2, 2, 1, 1]];

#[test]
fn quotient_matches_dimension_figure() {
    let t = ideal_quotient_dims(&gens(), &relations(), 6, 3).unwrap();
    for d in 0..=3u32 {
        for g in 1..=6u32 {
            assert_eq!(t.dim(g, d), FIGURE[d as usize][g as usize - 1], "dim at ({g},{d})");
        }
    }
    assert_eq!(t.dim(4, 3), 2);
    assert_eq!(t.dim(6, 3), 1);
    assert_eq!(t.dim(5, 1), 0);
}

#[test]
fn surviving_basis_in_low_degrees() {
    let t = ideal_quotient_dims(&gens(), &relations(), 6, 3).unwrap();
    assert_eq!(t.free_dim(3, 3), 3);
    assert_eq!(t.ideal_dim(3, 3), 1);
    assert_eq!(t.free_dim(6, 3), 6);
    assert_eq!(t.ideal_dim(6, 3), 5);
}

#[test]
fn free_basis_matches_brute_force() {
    let s = [Generator::new("s", 1, 0)];
    for g in 1..=8 {
        for d in 0..=8 {
            assert_eq!(free_basis(&s, g, d), brute_force_basis(&s, g, d), "({g},{d})");
        }
    }
}

#[test]
fn free_basis_with_several_generators() {
    let g = gens();
    for gg in 1..=7 {
        for d in 0..=6 {
            assert_eq!(free_basis(&g, gg, d), brute_force_basis(&g, gg, d), "({gg},{d})");
        }
    }
}
