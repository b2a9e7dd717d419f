use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("set element {element} exceeds the supported bound {bound}")]
    SubsetBound { element: u32, bound: u32 },

    #[error("subset {subset} is not contained in [{ambient_max}]")]
    NotASubset { subset: String, ambient_max: i64 },

    #[error("shuffle selector has {got} elements, expected {expected}")]
    SelectorSize { got: usize, expected: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes at (q, t) = ({q}, {t})")]
    VanishingDenominator { q: String, t: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },

    #[error("invalid group parameter: {0}")]
    InvalidGroup(String),

    #[error("class functions live on different groups: {0}")]
    SpecMismatch(String),

    #[error("index sets do not partition the target: {0}")]
    NotAPartition(String),

    #[error("function is not a pure tensor across the requested split")]
    NotFactorizable,

    #[error("function is not constant on superclasses")]
    NotSuperclassConstant,

    #[error("coproduct index k = {k} out of range for degree {n}")]
    CoproductIndex { k: u32, n: u32 },

    #[error("unknown basis tag `{0}`")]
    UnknownBasis(String),

    #[error("basis {0} requires a parameter nu >= 2")]
    MissingNu(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
