//! Parameters evaluated straight from their own definitions, with no
//! reference to alliances. These are the ground truth the alliance
//! characterisations are tested against.

mod fraction;
mod propagation;
mod signed;

pub use fraction::{
    check_alpha, check_monopoly, check_threshold_set, AlphaMode, MonopolyScope, Rational,
    ThresholdMode,
};
pub use propagation::{
    is_dmaj_set, maj_step, maj_step_with, propagate, propagate_with_rule, MajorityRule,
    Propagation, Rounds, ThresholdMap,
};
pub use signed::{check_signed, partition_of, SignedFunction, SignedVariant};
