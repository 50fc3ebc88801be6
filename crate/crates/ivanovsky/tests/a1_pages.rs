use std::sync::OnceLock;

use cobar::{ConeComplex, Window};
use gradedhopf::build_a1_star;
use ivanovsky::{einfty_report, FilteredCobar, FilteredCone, SSPage};

const G: usize = 14;
const D: usize = 10;

fn fc() -> &'static FilteredCobar {
    static F: OnceLock<FilteredCobar> = OnceLock::new();
    F.get_or_init(|| FilteredCobar::new(build_a1_star(), Window { g_max: 17, s_max: 17 }).unwrap())
}

fn pages() -> &'static Vec<SSPage> {
    static P: OnceLock<Vec<SSPage>> = OnceLock::new();
    P.get_or_init(|| (1..=9).map(|r| fc().page(r, G, D).unwrap()).collect())
}

fn page(r: usize) -> &'static SSPage {
    &pages()[r - 1]
}

/// Monomials `h10^a h11^b h20^c` at `(g, d, f)` with
/// `|h10| = (1,0,−1)`, `|h11| = (2,1,−2)`, `|h20| = (3,2,−1)`.
fn polynomial_dim(g: usize, d: usize, f: i64) -> usize {
    let mut n = 0;
    for c in 0..=g / 3 {
        for b in 0..=g / 2 {
            if 3 * c + 2 * b > g {
                continue;
            }
            let a = g - 3 * c - 2 * b;
            if b + 2 * c == d && -(a as i64) - 2 * b as i64 - c as i64 == f {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn word_filtrations() {
    let b = fc().base();
    let w = |s: &str| b.words().parse(s).unwrap();
    assert_eq!(fc().word_filtration(&w("[xi2]")), -1);
    assert_eq!(fc().word_filtration(&w("[xi1^2|xi1]")), -3);
    assert_eq!(fc().word_filtration(&w("[xi1|xi1|xi1]")), -3);
    assert_eq!(fc().word_filtration(&[]), 0);
}

#[test]
fn e1_is_polynomial() {
    let p = page(1);
    for g in 0..=G {
        for d in 0..=g.min(D) {
            for f in -(2 * g as i64)..=0 {
                assert_eq!(p.dim(g, d, f), polynomial_dim(g, d, f), "E1 at ({g},{d},{f})");
            }
        }
    }
    assert_eq!(p.entries.keys().filter(|k| k.2 < -(2 * k.0 as i64)).count(), 0);
}

#[test]
fn odd_differentials_vanish() {
    for r in [1, 3, 5, 7, 9] {
        assert!(page(r).differentials.is_empty(), "d^{r} is nonzero");
    }
}

#[test]
fn d2_and_d4() {
    let d2 = page(2).differential(3, 2, -1);
    assert_eq!((d2.rows(), d2.cols()), (1, 1));
    assert!(d2.get(0, 0));
    assert_eq!(page(4).dim(6, 4, -2), 1);
    let d4 = page(4).differential(6, 4, -2);
    assert_eq!((d4.rows(), d4.cols()), (1, 1));
    assert!(d4.get(0, 0));
}

#[test]
fn pages_are_homology_of_previous() {
    for r in 1..9 {
        let (p, q) = (page(r), page(r + 1));
        for (&(g, d, f), e) in &p.entries {
            let out = p.differential(g, d, f).rank();
            let into = p
                .differentials
                .get(&(g, d + 1, f + r as i64))
                .map_or(0, |m| m.rank());
            assert_eq!(q.dim(g, d, f), e.dim - out - into, "E{} at ({g},{d},{f})", r + 1);
        }
    }
}

#[test]
fn collapse_at_e5() {
    assert_eq!(page(5).entries.keys().collect::<Vec<_>>(), page(9).entries.keys().collect::<Vec<_>>());
    for (k, e) in &page(5).entries {
        assert_eq!(e.dim, page(9).entries[k].dim);
    }
    let big5 = fc().page(5, 17, D).unwrap();
    let big9 = fc().page(9, 17, D).unwrap();
    for (k, e) in &big5.entries {
        assert_eq!(e.dim, big9.dim(k.0, k.1, k.2), "E5 vs E9 at {k:?}");
    }
}

#[test]
fn einfty_converges_to_cotor() {
    let rows = einfty_report(fc(), G, D).unwrap();
    for r in &rows {
        assert_eq!(r.total(), r.cotor_dim, "({}, {})", r.g, r.d);
        assert!(r.stable_page <= 5, "({}, {}) stabilizes at {}", r.g, r.d, r.stable_page);
        assert_eq!(r.total(), page(5).total_dim(r.g, r.d));
    }
    let at = |g, d| rows.iter().find(|r| (r.g, r.d) == (g, d)).unwrap().by_filtration.clone();
    assert_eq!(at(7, 4), vec![(-3, 1)]);
    assert_eq!(at(12, 8), vec![(-4, 1)]);
    assert_eq!(at(0, 0), vec![(0, 1)]);
}

#[test]
fn cone_d4_pattern() {
    let base = fc().base();
    let z = base.parse_cochain(&["[xi1]"]).unwrap();
    let cone = ConeComplex::new(base, z).unwrap();
    let fcone = FilteredCone::new(fc(), &cone).unwrap();
    let p2 = fcone.page(2, 7, 5).unwrap();
    assert!(p2.differential(3, 2, -1).is_zero());
    let p4 = fcone.page(4, 7, 5).unwrap();
    assert_eq!(p4.dim(6, 4, -2), 1);
    assert_eq!(p4.dim(6, 3, -6), 1);
    assert!(p4.differential(6, 4, -2).get(0, 0));
}
