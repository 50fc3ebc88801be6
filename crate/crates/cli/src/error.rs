use cobar::CobarError;
use grouphom::GroupError;
use ivanovsky::IvanovskyError;
use stabhopf::StabError;

/// A failed run, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<CobarError> for CliError {
    fn from(e: CobarError) -> Self {
        let msg = e.to_string();
        match e {
            CobarError::BudgetExceeded { .. } => CliError::Budget(msg),
            CobarError::Invariant(_) => CliError::Invariant(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<IvanovskyError> for CliError {
    fn from(e: IvanovskyError) -> Self {
        match e {
            IvanovskyError::Cobar(c) => c.into(),
            IvanovskyError::NotFiltered { .. } => CliError::Invariant(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let msg = e.to_string();
        match e {
            GroupError::TooLarge { .. } | GroupError::DegreeTooLarge { .. } => CliError::Budget(msg),
            GroupError::LiftFailed { .. } | GroupError::Invariant(_) => CliError::Invariant(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<StabError> for CliError {
    fn from(e: StabError) -> Self {
        let msg = e.to_string();
        match e {
            StabError::Invariant(_) => CliError::Invariant(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<gradedhopf::HopfError> for CliError {
    fn from(e: gradedhopf::HopfError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<winfty::WError> for CliError {
    fn from(e: winfty::WError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<cellss::CellssError> for CliError {
    fn from(e: cellss::CellssError) -> Self {
        CliError::Input(e.to_string())
    }
}
