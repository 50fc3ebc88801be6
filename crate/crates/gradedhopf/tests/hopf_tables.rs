use gradedhopf::{build_a1_star, build_delta_cgl, dualize, normalize, HopfAlgebraTable};
use proptest::prelude::*;

fn tables() -> Vec<HopfAlgebraTable> {
    let a = build_a1_star();
    let d = build_delta_cgl();
    vec![dualize(&a), dualize(&d), a, d]
}

#[test]
fn builtins_satisfy_axioms() {
    for h in tables() {
        let r = h.check_axioms();
        assert!(r.all_pass(), "{:?}", r.failures());
    }
}

#[test]
fn json_round_trip_is_byte_stable() {
    for h in tables() {
        let s = h.to_json();
        let back = HopfAlgebraTable::from_json(&s).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.to_json(), s);
    }
}

#[test]
fn json_rejects_out_of_range_indices() {
    let mut j = build_a1_star().to_json_struct();
    j.mult.push([0, 0, 99]);
    let s = serde_json::to_string(&j).unwrap();
    assert!(HopfAlgebraTable::from_json(&s).is_err());
}

#[test]
fn delta_cgl_coproducts() {
    let h = build_delta_cgl();
    let sd = h.id("sbar*delta").unwrap();
    let mut got: Vec<String> =
        h.reduced_coproduct(sd).iter().map(|&(a, b)| format!("{}⊗{}", h.label(a), h.label(b))).collect();
    got.sort();
    assert_eq!(got, vec!["delta⊗sbar", "sbar^2⊗sbar^2", "sbar⊗delta", "sbar⊗sbar^3"]);
}

#[test]
fn antipode_is_convolution_inverse() {
    for h in tables() {
        for x in 0..h.len() {
            // Σ S(x')x'' must equal ε(x)·1.
            let mut acc = Vec::new();
            for &(a, b) in h.coproduct(x) {
                acc.extend(h.multiply_comb(&h.antipode(a).unwrap(), &[b]).unwrap());
            }
            let want = if x == 0 { vec![0] } else { Vec::new() };
            assert_eq!(normalize(acc), want, "at {}", h.label(x));
        }
    }
}

fn comb(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n, 0..6).prop_map(normalize)
}

proptest! {
    #[test]
    fn coproduct_is_multiplicative_on_a1_star(x in comb(8), y in comb(8)) {
        let h = build_a1_star();
        let xy = h.multiply_comb(&x, &y).unwrap();
        let lhs = h.coproduct_comb(&xy);
        let rhs = h.tensor_multiply(&h.coproduct_comb(&x), &h.coproduct_comb(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_is_involutive_on_a1_star(x in 0usize..8) {
        let h = build_a1_star();
        let s = h.antipode(x).unwrap();
        let mut ss = Vec::new();
        for y in s {
            ss.extend(h.antipode(y).unwrap());
        }
        prop_assert_eq!(normalize(ss), vec![x]);
    }
}
