use crate::{normalize, Comb, HopfAlgebraTable, HopfError};

/// A grading-preserving linear map between two tables, given by the image
/// of every source basis element.
#[derive(Clone, Debug)]
pub struct CoalgebraMap {
    pub source: HopfAlgebraTable,
    pub target: HopfAlgebraTable,
    images: Vec<Comb>,
}

/// Per-axiom result of [`check_hopf_map`]; failures name the first
/// offending basis element or pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMapReport {
    pub unit: Result<(), String>,
    pub counit: Result<(), String>,
    pub multiplicativity: Result<(), (String, String)>,
    pub comultiplicativity: Result<(), String>,
}

impl HopfMapReport {
    pub fn all_pass(&self) -> bool {
        self.unit.is_ok() && self.counit.is_ok() && self.multiplicativity.is_ok() && self.comultiplicativity.is_ok()
    }
}

impl CoalgebraMap {
    /// A map with explicit images for every source basis element.
    pub fn new(source: HopfAlgebraTable, target: HopfAlgebraTable, images: Vec<Comb>) -> Result<Self, HopfError> {
        if images.len() != source.len() {
            return Err(HopfError::Malformed(format!("{} images for {} basis elements", images.len(), source.len())));
        }
        let images: Vec<Comb> = images.into_iter().map(normalize).collect();
        for (x, img) in images.iter().enumerate() {
            if let Some(&y) = img.iter().find(|&&y| target.grading(y) != source.grading(x)) {
                return Err(HopfError::GradingMismatch {
                    label: source.label(x).to_string(),
                    source_grading: source.grading(x),
                    image_grading: target.grading(y),
                });
            }
        }
        Ok(CoalgebraMap { source, target, images })
    }

    /// Builds a map from images of some basis elements (as label
    /// combinations such as `"xi2 + xi1^3"`), extending to every other basis
    /// element through its first factorization `x = a·b` into lower basis
    /// elements.
    pub fn from_generators(
        source: HopfAlgebraTable,
        target: HopfAlgebraTable,
        assignments: &[(&str, &str)],
    ) -> Result<Self, HopfError> {
        let n = source.len();
        let mut images: Vec<Option<Comb>> = vec![None; n];
        images[0] = Some(vec![0]);
        for &(x, img) in assignments {
            let id = source.id(x)?;
            images[id] = Some(target.parse_comb(img)?);
        }
        for x in 1..n {
            if images[x].is_some() {
                continue;
            }
            let factor = (1..x)
                .flat_map(|a| (1..x).map(move |b| (a, b)))
                .find(|&(a, b)| source.multiply(a, b).ok().as_deref() == Some(&[x][..]));
            let Some((a, b)) = factor else {
                return Err(HopfError::MissingImage(source.label(x).to_string()));
            };
            let (fa, fb) = (images[a].clone().expect("lower image"), images[b].clone().expect("lower image"));
            images[x] = Some(target.multiply_comb(&fa, &fb)?);
        }
        Self::new(source, target, images.into_iter().map(|i| i.expect("all images set")).collect())
    }

    pub fn image(&self, x: usize) -> &Comb {
        &self.images[x]
    }

    pub fn apply(&self, c: &[usize]) -> Comb {
        normalize(c.iter().flat_map(|&x| self.images[x].iter().copied()).collect())
    }
}

/// Checks that `f` is a map of Hopf algebras in every grading known on both
/// sides.
pub fn check_hopf_map(f: &CoalgebraMap) -> HopfMapReport {
    let (s, t) = (&f.source, &f.target);
    let bound = s.known_through().min(t.known_through());
    let unit = if f.images[0] == [0] { Ok(()) } else { Err("1 is not sent to 1".to_string()) };
    let counit = match (1..s.len()).find(|&x| f.images[x].contains(&0)) {
        Some(x) => Err(format!("{} has a unit term in its image", s.label(x))),
        None => Ok(()),
    };
    let mut multiplicativity = Ok(());
    'outer: for a in 0..s.len() {
        for b in 0..s.len() {
            if s.grading(a) + s.grading(b) > bound {
                continue;
            }
            let lhs = s.multiply(a, b).map(|p| f.apply(&p));
            let rhs = t.multiply_comb(&f.images[a], &f.images[b]);
            if lhs != rhs {
                multiplicativity = Err((s.label(a).to_string(), s.label(b).to_string()));
                break 'outer;
            }
        }
    }
    let mut comultiplicativity = Ok(());
    for x in 0..s.len() {
        if s.grading(x) > bound {
            continue;
        }
        let lhs = normalize(
            s.coproduct(x)
                .iter()
                .flat_map(|&(a, b)| {
                    let fb = &f.images[b];
                    f.images[a].iter().flat_map(move |&p| fb.iter().map(move |&q| (p, q)))
                })
                .collect(),
        );
        let rhs = t.coproduct_comb(&f.images[x]);
        if lhs != rhs {
            comultiplicativity = Err(s.label(x).to_string());
            break;
        }
    }
    HopfMapReport { unit, counit, multiplicativity, comultiplicativity }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_a1_star, build_delta_cgl};

    #[test]
    fn phi_dual_is_a_hopf_map() {
        let f = CoalgebraMap::from_generators(
            build_delta_cgl(),
            build_a1_star(),
            &[("sbar", "xi1"), ("delta", "xi2 + xi1^3"), ("rho", "0")],
        )
        .unwrap();
        let r = check_hopf_map(&f);
        assert!(r.all_pass(), "{r:?}");
        let sd = f.source.id("sbar*delta").unwrap();
        assert_eq!(f.target.format_comb(f.image(sd)), "xi1*xi2");
    }

    #[test]
    fn wrong_delta_fails_at_delta() {
        let f = CoalgebraMap::from_generators(
            build_delta_cgl(),
            build_a1_star(),
            &[("sbar", "xi1"), ("delta", "xi2"), ("rho", "0")],
        )
        .unwrap();
        let r = check_hopf_map(&f);
        assert_eq!(r.comultiplicativity, Err("delta".to_string()));
        assert!(r.multiplicativity.is_ok());
    }

    #[test]
    fn identity_passes() {
        let h = build_a1_star();
        let f = CoalgebraMap::new(h.clone(), h.clone(), (0..h.len()).map(|i| vec![i]).collect()).unwrap();
        assert!(check_hopf_map(&f).all_pass());
    }

    #[test]
    fn grading_mismatch_is_rejected() {
        let e = CoalgebraMap::from_generators(build_delta_cgl(), build_a1_star(), &[("sbar", "xi1^2"), ("delta", "xi2"), ("rho", "0")]);
        assert!(matches!(e, Err(HopfError::GradingMismatch { .. })));
    }
}
