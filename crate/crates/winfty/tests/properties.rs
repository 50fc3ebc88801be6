use proptest::prelude::*;
use winfty::{apply_q, dual_steenrod, free_basis, parse, Context, Generator, WPolynomial};

fn sigma() -> Generator {
    Generator::new("s", 1, 0)
}

/// A random homogeneous polynomial over `σ` at some bidegree with `g ≤ 4`,
/// `d ≤ 4`.
fn poly() -> impl Strategy<Value = WPolynomial> {
    (1u32..=4, 0u32..=4, any::<u64>()).prop_map(|(g, d, mask)| {
        free_basis(&[sigma()], g, d)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, m)| m)
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartan(a in poly(), b in poly(), s in 0u32..=8) {
        let lhs = apply_q(s, &a.mul(&b));
        let mut rhs = WPolynomial::zero();
        for i in 0..=s {
            rhs.add_assign(&apply_q(i, &a).mul(&apply_q(s - i, &b)));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_round_trips(a in poly(), s in 0u32..=6) {
        let x = apply_q(s, &a);
        let ctx = Context::new(vec![sigma()]);
        prop_assert_eq!(parse(&x.to_string(), &ctx).unwrap(), x.clone());
        for m in x.terms() {
            for f in m.factors() {
                prop_assert!(winfty::is_normal(&f.seq, &f.gen));
            }
        }
    }

    #[test]
    fn squares_commute_with_dual_steenrod(a in poly(), r in 0u32..=4) {
        let lhs = dual_steenrod(2 * r, &a.mul(&a));
        let half = dual_steenrod(r, &a);
        prop_assert_eq!(lhs, half.mul(&half));
        prop_assert!(dual_steenrod(2 * r + 1, &a.mul(&a)).is_zero());
    }

    #[test]
    fn dual_adem_relations(a in poly()) {
        let sq = |r: u32, p: &WPolynomial| dual_steenrod(r, p);
        prop_assert!(sq(1, &sq(1, &a)).is_zero());
        prop_assert_eq!(sq(3, &a), sq(2, &sq(1, &a)));
        prop_assert_eq!(sq(2, &sq(2, &a)), sq(1, &sq(3, &a)));
    }

    #[test]
    fn operations_commute_with_dual_steenrod_on_top(a in poly()) {
        let (_, d) = a.bidegree().unwrap_or((0, 0));
        let sq = dual_steenrod(1, &a);
        prop_assert_eq!(dual_steenrod(2, &apply_q(d, &a)), sq.mul(&sq));
    }
}
