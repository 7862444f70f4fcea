use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("inconsistent walk at position {position}: symbol {symbol} is not incident to the current vertex")]
    InconsistentWalk { position: usize, symbol: usize },

    #[error("pattern length {length} exceeds the enumeration limit {max} (raise it with an explicit override)")]
    LengthLimit { length: usize, max: usize },

    #[error("{param} = {value} is out of domain: {reason}")]
    Domain {
        param: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("weight moments are only known up to order {available}, order {requested} requested")]
    MissingMoment { requested: usize, available: usize },

    #[error("N*d must be even for a d-regular graph (N = {n}, d = {d})")]
    Parity { n: usize, d: usize },

    #[error("degree d = {d} must be smaller than N = {n}")]
    DegreeTooLarge { n: usize, d: usize },

    #[error("no simple pairing found after {attempts} attempts (N = {n}, d = {d}); expected acceptance rate ~ exp(-(d^2-1)/4)")]
    RetryLimit { attempts: usize, n: usize, d: usize },

    #[error("graph is not a simple {d}-regular graph: {reason}")]
    NotRegular { d: usize, reason: String },

    #[error("cycle length cap exceeded: {max_len} > {cap}")]
    CycleCap { max_len: usize, cap: usize },

    #[error("work budget exceeded: N * K = {work} > {budget}")]
    Budget { work: usize, budget: usize },

    #[error("eigensolver did not converge within {max_iterations} iterations")]
    EigenNonConvergence { max_iterations: usize },

    #[error("eigenpair residual {residual:e} exceeds tol * |A| = {bound:e}")]
    EigenResidual { residual: f64, bound: f64 },

    #[error("quadrature did not converge: error estimate {estimate:e} > {target:e}")]
    Quadrature { estimate: f64, target: f64 },

    #[error("empty sample")]
    EmptySample,

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        let mut input = input.to_owned();
        if input.len() > 64 {
            let mut cut = 64;
            while !input.is_char_boundary(cut) {
                cut -= 1;
            }
            input.truncate(cut);
            input.push_str("...");
        }
        Error::Parse {
            what,
            input,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(param: &'static str, value: impl ToString, reason: &'static str) -> Self {
        Error::Domain {
            param,
            value: value.to_string(),
            reason,
        }
    }
}
