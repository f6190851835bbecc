use crate::lambda::Stick;
use crate::triple::Triple;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("triple colors must satisfy 1 <= i < j < k, got ({0}, {1}, {2})")]
    InvalidTriple(u8, u8, u8),

    #[error("color {color} out of range 1..={n}")]
    ColorOutOfRange { color: u8, n: u8 },

    #[error("n = {n} exceeds the configured cap {cap}")]
    NOverCap { n: u8, cap: u8 },

    #[error("rank {rank} out of range for n = {n} (size {size})")]
    RankOutOfRange { rank: usize, n: u8, size: usize },

    #[error("operands use different color counts: {0} vs {1}")]
    MixedN(u8, u8),

    #[error("color subset must contain at least 3 colors, got {0}")]
    SubsetTooSmall(usize),

    #[error("color subset is not a set of distinct colors in 1..={0}")]
    InvalidSubset(u8),

    #[error("interval [{a}..{b}] does not lie in [1..{n}]")]
    IntervalOutOfRange { a: u8, b: u8, n: u8 },

    #[error("not a tiling: stick {0} intersection is neither a 1-prefix nor a 1-suffix")]
    NotATiling(Stick),

    #[error("triple {0} is not a raising flip here")]
    NotAFlip(Triple),

    #[error("sequence is not a permutation of 1..={0}")]
    NotAPermutation(u8),

    #[error("sequence is not a permutation of the triple set for n = {0}")]
    NotALambdaPermutation(u8),

    #[error("exhaustive order enumeration is capped at n <= {cap}, got n = {n}")]
    SigmaCapExceeded { n: u8, cap: u8 },

    #[error("profile is empty")]
    EmptyProfile,

    #[error("simple majority needs an odd number of voters, got {0}")]
    EvenVoters(usize),

    #[error("profile has {profile} voters but the majority system expects {system}")]
    VoterCountMismatch { profile: usize, system: usize },

    #[error("majority systems support at most {max} voters, got {0}", max = crate::aggregation::MAX_VOTERS)]
    TooManyVoters(usize),

    #[error("majority system violates {axiom}: witness coalition {witness}")]
    InvalidMajoritySystem { axiom: &'static str, witness: String },

    #[error("stick orientations induce a precedence cycle: {}", format_cycle(.0))]
    CyclicOrientations(Vec<Triple>),

    #[error("orientation list has {got} entries but n = {n} has {want} sticks")]
    OrientationCountMismatch { n: u8, got: usize, want: usize },

    #[error("sequence is not admissible: stick {0} is ordered neither way")]
    Inadmissible(Stick),

    #[error("sequence is not a permutation of 2..={0}")]
    NotASplitSequence(u8),

    #[error("split point {j} does not lie strictly inside ({p}, {q})")]
    BadSplitPoint { j: u8, p: u8, q: u8 },

    #[error("parts do not partition the triple set: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn format_cycle(cycle: &[Triple]) -> String {
    cycle
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
