use winfty::{apply_q, dual_steenrod, parse, Context, WPolynomial};

fn p(s: &str) -> WPolynomial {
    parse(s, &Context::standard()).unwrap()
}

#[test]
fn operation_pins() {
    assert_eq!(apply_q(2, &p("s*Q[1](s)")), p("Q[1](s)^3 + s^2*Q[2,1](s)"));
    assert_eq!(p("Q[3,1](s)"), p("0"));
    assert_eq!(apply_q(3, &p("Q[1](s)")), p("0"));
    for s in 1..6 {
        assert!(apply_q(s, &p("1")).is_zero());
    }
    assert_eq!(apply_q(1, &p("Q[1](s)")), p("Q[1](s)^2"));
    assert_eq!(apply_q(0, &p("s")), p("s^2"));
}

#[test]
fn q3_on_sigma_q1() {
    assert_eq!(apply_q(3, &p("s*Q[1](s)")), p("Q[1](s)*Q[2,1](s) + Q[1](s)^2*Q[2](s)"));
}

#[test]
fn nishida_pins() {
    assert_eq!(dual_steenrod(1, &p("Q[2,1](s)")), p("Q[1](s)^2"));
    assert_eq!(dual_steenrod(1, &p("Q[1](s)*Q[2](s)")), p("Q[1](s)^2"));
    assert_eq!(dual_steenrod(2, &p("Q[2](s)^2")), p("Q[1](s)^2"));
    assert_eq!(dual_steenrod(2, &p("s^2*Q[4](s)")), p("s^2*Q[2](s)"));
    assert_eq!(dual_steenrod(2, &p("Q[1](s)*Q[3](s)")), p("0"));
    assert_eq!(dual_steenrod(1, &p("s")), p("0"));
    assert_eq!(dual_steenrod(1, &p("Q[1](s)")), p("0"));
    assert_eq!(dual_steenrod(1, &p("Q[2](s)")), p("Q[1](s)"));
    assert_eq!(dual_steenrod(2, &p("Q[4](s)")), p("Q[2](s)"));
    assert_eq!(dual_steenrod(1, &p("Q[1](s)*Q[2,1](s)")), p("Q[1](s)^3"));
}

#[test]
fn cli_example_prints_canonically() {
    assert_eq!(p("Q[2](s*Q[1](s))").to_string(), "Q[1](s)^3 + s^2*Q[2,1](s)");
}
