use num_rational::Ratio;

use crate::StabError;

/// How a map of connected graded Hopf algebras fails to be an isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferKind {
    /// Surjective with kernel in gradings `≥ N`.
    Surjective,
    /// Injective with cokernel in gradings `≥ N`.
    Injective,
}

impl std::str::FromStr for TransferKind {
    type Err = StabError;

    fn from_str(s: &str) -> Result<Self, StabError> {
        match s {
            "surjective" => Ok(TransferKind::Surjective),
            "injective" => Ok(TransferKind::Injective),
            other => Err(StabError::Transfer(format!("unknown kind `{other}`"))),
        }
    }
}

/// The slope `θ` below which vanishing lines transfer along the induced map
/// of cobar constructions: `(N−1)/N` for surjections and `(N−2)/N` for
/// injections.
pub fn slope_transfer(kind: TransferKind, n: u64) -> Result<Ratio<u64>, StabError> {
    let (min, drop) = match kind {
        TransferKind::Surjective => (2, 1),
        TransferKind::Injective => (3, 2),
    };
    if n < min {
        return Err(StabError::Transfer(format!("{kind:?} needs N ≥ {min}, got {n}")));
    }
    Ok(Ratio::new(n - drop, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(slope_transfer(TransferKind::Surjective, 3).unwrap(), Ratio::new(2, 3));
        assert_eq!(slope_transfer(TransferKind::Injective, 6).unwrap(), Ratio::new(2, 3));
        assert_eq!(slope_transfer(TransferKind::Surjective, 2).unwrap(), Ratio::new(1, 2));
        assert!(slope_transfer(TransferKind::Surjective, 1).is_err());
        assert!(slope_transfer(TransferKind::Injective, 2).is_err());
        assert_eq!("injective".parse::<TransferKind>().unwrap(), TransferKind::Injective);
    }
}
