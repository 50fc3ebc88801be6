//! The `(12, 8)`-periodic families in the homology of `GL_n(F2)` and their
//! detecting classes in the Cotor of `A(1)_*` and of its cofibre by `h10`.
//!
//! Each relative class `α_ij`, `γ_ij` is detected by `y128^i·h11^j·z` with
//! `z = z00` or `z32`. The absolute classes are boundaries: `u_ij = ∂γ_ij`
//! and `s_{i+1} = ∂α_{i+1,0}`. For `u_i0, u_i1` the boundary of the
//! detecting class is `y128^i·h11^{j+1} ≠ 0`. For `u_i2` and `s_{i+1}` the
//! detecting class is `q` of an `h10`-torsion-free class, which rules out
//! a vanishing boundary.

use serde::Serialize;

use crate::minres::{A1Ext, ExtElement};
use crate::{a1_class_name, CobarError};

/// Number of `h10` multiplications checked when certifying that a class is
/// `h10`-torsion free.
pub const TORSION_DEPTH: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// A class of the cofibre by `σ`.
    Relative,
    /// A class in `H_d(GL_g(F2); F2)`.
    Absolute,
}

/// One row of the families table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub name: String,
    pub kind: FamilyKind,
    pub g: usize,
    pub d: usize,
    /// The detecting class in the cofibre, as a product `y128^i·h11^j·z`.
    pub detecting_class: String,
    pub detector_bidegree: (usize, usize),
    /// What certifies the row: the boundary image or the `q`-preimage.
    pub evidence: String,
    pub note: Option<String>,
    pub verified: bool,
}

fn monomial(i: usize, j: usize, z: &str) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("y128".to_string()),
        _ => parts.push(format!("y128^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("h11".to_string()),
        _ => parts.push(format!("h11^{j}")),
    }
    parts.push(z.to_string());
    parts.join("*")
}

/// Resolution bounds sufficient for [`families`] with the given `max_i`.
pub fn required_bounds(max_i: usize) -> (usize, usize) {
    (4 * max_i + 4 + TORSION_DEPTH, 12 * max_i + 12 + TORSION_DEPTH)
}

struct Classes<'a> {
    ext: &'a A1Ext,
    h10: ExtElement,
    h11: ExtElement,
    y: ExtElement,
}

impl Classes<'_> {
    fn power(&self, x: &ExtElement, k: usize, m: &ExtElement) -> Result<ExtElement, CobarError> {
        let mut acc = m.clone();
        for _ in 0..k {
            acc = self.ext.act(x, &acc)?;
        }
        Ok(acc)
    }

    fn sphere_power(&self, x: &ExtElement, k: usize, m: &ExtElement) -> Result<ExtElement, CobarError> {
        let mut acc = m.clone();
        for _ in 0..k {
            acc = self.ext.sphere.yoneda_product(&self.ext.sphere, x, &acc)?;
        }
        Ok(acc)
    }

    /// `y128^i·h11^j·z` in the cofibre.
    fn detector(&self, i: usize, j: usize, z: &ExtElement) -> Result<ExtElement, CobarError> {
        let m = self.power(&self.h11, j, z)?;
        self.power(&self.y, i, &m)
    }

    /// Checks `q(pre) = target` and `h10^k·pre ≠ 0` for `k ≤ TORSION_DEPTH`.
    fn preimage_torsion_free(&self, pre: &ExtElement, target: &ExtElement) -> Result<bool, CobarError> {
        if self.ext.include(pre)? != *target {
            return Ok(false);
        }
        for k in 1..=TORSION_DEPTH {
            if self.sphere_power(&self.h10, k, pre)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The families table for `i ≤ max_i`. `ext` must satisfy
/// [`required_bounds`].
pub fn families(ext: &A1Ext, max_i: usize) -> Result<Vec<FamilyRow>, CobarError> {
    let c = Classes {
        ext,
        h10: ext.sphere_class(1, 0)?,
        h11: ext.sphere_class(2, 1)?,
        y: ext.sphere_class(12, 8)?,
    };
    let z00 = ext.cofibre_class(0, 0)?;
    let z32 = ext.cofibre_class(3, 2)?;
    let y74 = ext.sphere_class(7, 4)?;
    let one = ext.sphere_class(0, 0)?;
    let mut rows = Vec::new();
    for i in 0..=max_i {
        for (z, zname, g0, d0, fam) in [(&z00, "z00", 0, 0, "alpha"), (&z32, "z32", 3, 2, "gamma")] {
            for j in 0..3 {
                let det = c.detector(i, j, z)?;
                let (g, d) = (12 * i + 2 * j + g0, 8 * i + j + d0);
                rows.push(FamilyRow {
                    name: format!("{fam}_{i}{j}"),
                    kind: FamilyKind::Relative,
                    g,
                    d,
                    detecting_class: monomial(i, j, zname),
                    detector_bidegree: det.gd(),
                    evidence: "nonzero in the cofibre".into(),
                    note: None,
                    verified: !det.is_zero() && det.gd() == (g, d),
                });
            }
        }
        for j in 0..3 {
            let det = c.detector(i, j, &z32)?;
            let (g, d) = (det.t - 1, det.gd().1 - 1);
            let bd = ext.boundary(&det)?;
            let (evidence, verified) = if j < 2 {
                let name = a1_class_name(g, d).unwrap_or_else(|| "?".into());
                (format!("boundary {name}"), !det.is_zero() && !bd.is_zero())
            } else {
                let pre = c.sphere_power(&c.y, i, &y74)?;
                let ok = !det.is_zero() && bd.is_zero() && c.preimage_torsion_free(&pre, &det)?;
                (format!("q-preimage {} is h10-torsion free", a1_class_name(pre.t, pre.gd().1).unwrap_or_default()), ok)
            };
            rows.push(FamilyRow {
                name: format!("u_{i}{j}"),
                kind: FamilyKind::Absolute,
                g,
                d,
                detecting_class: monomial(i, j, "z32"),
                detector_bidegree: det.gd(),
                evidence,
                note: (i == 0 && j == 0).then(|| "represented by the matrix (0 1;1 0)".to_string()),
                verified: verified && (g, d) == (12 * i + 2 * j + 2, 8 * i + j + 1),
            });
        }
        let det = c.detector(i + 1, 0, &z00)?;
        let (g, d) = (det.t - 1, det.gd().1 - 1);
        let pre = c.sphere_power(&c.y, i + 1, &one)?;
        let ok = !det.is_zero() && ext.boundary(&det)?.is_zero() && c.preimage_torsion_free(&pre, &det)?;
        rows.push(FamilyRow {
            name: format!("s_{}", i + 1),
            kind: FamilyKind::Absolute,
            g,
            d,
            detecting_class: monomial(i + 1, 0, "z00"),
            detector_bidegree: det.gd(),
            evidence: format!(
                "q-preimage {} is h10-torsion free",
                a1_class_name(pre.t, pre.gd().1).unwrap_or_default()
            ),
            note: None,
            verified: ok && (g, d) == (12 * i + 11, 8 * i + 7),
        });
    }
    Ok(rows)
}

/// Tab-separated table with header
/// `name\tkind\tg\td\tdetecting_class\tevidence\tverified\tnote`.
pub fn families_tsv(rows: &[FamilyRow]) -> String {
    let mut s = String::from("name\tkind\tg\td\tdetecting_class\tevidence\tverified\tnote\n");
    for r in rows {
        let kind = match r.kind {
            FamilyKind::Relative => "relative",
            FamilyKind::Absolute => "absolute",
        };
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.name,
            kind,
            r.g,
            r.d,
            r.detecting_class,
            r.evidence,
            r.verified,
            r.note.as_deref().unwrap_or("")
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_period() {
        let (s, t) = required_bounds(0);
        let ext = A1Ext::new(s, t).unwrap();
        let rows = families(&ext, 0).unwrap();
        assert!(rows.iter().all(|r| r.verified), "{rows:#?}");
        let u00 = rows.iter().find(|r| r.name == "u_00").unwrap();
        assert_eq!((u00.g, u00.d), (2, 1));
        assert_eq!(u00.evidence, "boundary h11");
        let s1 = rows.iter().find(|r| r.name == "s_1").unwrap();
        assert_eq!((s1.g, s1.d), (11, 7));
        assert_eq!(s1.detecting_class, "y128*z00");
    }
}
