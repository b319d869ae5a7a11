#![allow(dead_code)]

use lingtruth_core::{AlgebraConfig, Formula, LinguisticValue};
use proptest::prelude::*;

pub fn atom_name() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => prop::sample::select(vec!["P", "Q", "R", "S"]).prop_map(String::from),
        1 => "[A-Za-z_][A-Za-z0-9_]{0,6}",
    ]
}

/// Formulas of operator depth at most `depth`.
pub fn formula(depth: u32) -> impl Strategy<Value = Formula> {
    atom_name().prop_map(Formula::Atom).prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::implies(l, r)),
        ]
    })
}

/// LIA for n in 0..=8 and every admissible QLIA for n in 2..=8.
pub fn all_configs() -> Vec<AlgebraConfig> {
    AlgebraConfig::all_up_to(8)
}

pub fn config() -> impl Strategy<Value = AlgebraConfig> {
    prop::sample::select(all_configs())
}

pub fn value_in(config: &AlgebraConfig) -> impl Strategy<Value = LinguisticValue> {
    prop::sample::select(config.values())
}

pub fn config_and_pair() -> impl Strategy<Value = (AlgebraConfig, LinguisticValue, LinguisticValue)> {
    config().prop_flat_map(|c| {
        let (a, b) = (value_in(&c), value_in(&c));
        (Just(c), a, b)
    })
}
