//! Group families with known cluster behaviour, and the arithmetic they need.

mod arith;
mod families;

pub use arith::{arith, euler_checks, factorize, gcd, phi, valuation, ArithProfile, EulerChecks};
pub use families::{
    alternating, alternating_with, cyclic, cyclic_with, klein, metacyclic, metacyclic_with, symmetric, symmetric_with,
    tuple_action, tuple_action_with, tuples, unit_generators, wreathlike, wreathlike_with,
};
