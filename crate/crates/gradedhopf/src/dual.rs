use crate::{GradedBasis, HopfAlgebraTable};

/// Label of the dual basis element: `x` becomes `(x)^v`; the unit stays `1`.
pub fn dual_label(label: &str) -> String {
    if label == "1" {
        "1".into()
    } else {
        format!("({label})^v")
    }
}

/// The graded dual. The product of the dual is the transpose of the
/// coproduct and vice versa:
/// `a^v·b^v = Σ { c^v : a⊗b occurs in ψ(c) }` and
/// `ψ(c^v) = Σ { a^v⊗b^v : c occurs in a·b }`.
pub fn dualize(h: &HopfAlgebraTable) -> HopfAlgebraTable {
    let b = h.basis();
    let labels: Vec<Vec<String>> =
        b.all_labels().iter().map(|g| g.iter().map(|l| dual_label(l)).collect()).collect();
    let basis = GradedBasis::new(labels).expect("dual labels are distinct");
    let n = h.len();
    let to_new: Vec<usize> = (0..n).map(|i| basis.id(&dual_label(h.label(i))).expect("dual label present")).collect();
    let mut mult_table = vec![vec![Vec::new(); n]; n];
    for c in 0..n {
        for &(a, bb) in h.coproduct(c) {
            mult_table[to_new[a]][to_new[bb]].push(to_new[c]);
        }
    }
    let mut comult = vec![Vec::new(); n];
    let bound = h.known_through();
    for a in 0..n {
        for bb in 0..n {
            if h.grading(a) + h.grading(bb) > bound.min(h.max_grading()) {
                continue;
            }
            if let Ok(p) = h.multiply(a, bb) {
                for c in p {
                    comult[to_new[c]].push((to_new[a], to_new[bb]));
                }
            }
        }
    }
    HopfAlgebraTable::new(basis, h.truncation(), |i, j| mult_table[i][j].clone(), comult)
        .expect("dual of a well-formed table is well formed")
}
