use thiserror::Error;

/// Quandle axiom labels, matching the usual numbering (i) idempotence,
/// (ii) right-invertibility, (iii) self-distributivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Idempotence,
    RightInvertibility,
    SelfDistributivity,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("quandle axiom {axiom:?} fails at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<u8> },
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    BadTable { row: usize, len: usize, expected: usize },
    #[error("entry {value} out of range [0,{size}) at {at:?}")]
    EntryOutOfRange { value: usize, size: usize, at: Vec<usize> },
    #[error("rho is not an involution: rho(rho({x})) = {y}")]
    NotInvolution { x: u8, y: u8 },
    #[error("rho is not good: fails at pair ({x},{y})")]
    NotGood { x: u8, y: u8 },
    #[error("x-set action by {x} is not a bijection on Y")]
    NotBijective { x: u8 },
    #[error("x-set relation fails at (y={y}, a={a}, b={b})")]
    RelationViolation { y: u8, a: u8, b: u8 },
    #[error("x-set rho-compatibility fails at (y={y}, x={x})")]
    RhoViolation { y: u8, x: u8 },
    #[error("operands belong to different coefficient groups")]
    GroupMismatch,
    #[error("cocycle dimensions do not match the quandle/x-set")]
    IncompatibleCocycle,
    #[error("parse error: {0}")]
    Parse(String),
}
