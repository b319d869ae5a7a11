//! Exhaustive checks of the implication axioms I1..I7, the bounded-lattice
//! laws and the involution, with counterexample reporting.
//!
//! Every check walks the carrier in [`AlgebraConfig::values`] order, pairs
//! and triples lexicographically, so reports are reproducible.

use std::fmt;

use serde::Serialize;

use crate::lattice::{AlgebraConfig, LinguisticValue};

pub const DEFAULT_WITNESS_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AxiomId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
}

impl AxiomId {
    pub const ALL: [AxiomId; 7] = [Self::I1, Self::I2, Self::I3, Self::I4, Self::I5, Self::I6, Self::I7];

    pub fn statement(self) -> &'static str {
        match self {
            Self::I1 => "x -> (y -> z) = y -> (x -> z)",
            Self::I2 => "x -> x = I",
            Self::I3 => "x -> y = y' -> x'",
            Self::I4 => "x -> y = y -> x = I implies x = y",
            Self::I5 => "(x -> y) -> y = (y -> x) -> x",
            Self::I6 => "(x v y) -> z = (x -> z) ^ (y -> z)",
            Self::I7 => "(x ^ y) -> z = (x -> z) v (y -> z)",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One violating instance. `z` is absent for two-variable properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: LinguisticValue,
    pub y: Option<LinguisticValue>,
    pub z: Option<LinguisticValue>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    pub holds: bool,
    pub total_violations: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeLaw {
    JoinIdempotent,
    MeetIdempotent,
    JoinCommutative,
    MeetCommutative,
    JoinAssociative,
    MeetAssociative,
    Absorption,
    Bounded,
    InvolutionSelfInverse,
    InvolutionOrderReversing,
}

impl fmt::Display for LatticeLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeLaw::JoinIdempotent => "join idempotent",
            LatticeLaw::MeetIdempotent => "meet idempotent",
            LatticeLaw::JoinCommutative => "join commutative",
            LatticeLaw::MeetCommutative => "meet commutative",
            LatticeLaw::JoinAssociative => "join associative",
            LatticeLaw::MeetAssociative => "meet associative",
            LatticeLaw::Absorption => "absorption",
            LatticeLaw::Bounded => "bounded",
            LatticeLaw::InvolutionSelfInverse => "involution self-inverse",
            LatticeLaw::InvolutionOrderReversing => "involution order-reversing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: LatticeLaw,
    pub holds: bool,
    pub total_violations: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    #[serde(rename = "LIA")]
    Lia,
    #[serde(rename = "QLIA")]
    Qlia,
    #[serde(rename = "NotQLIA")]
    NotQlia,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lia => "LIA",
            Self::Qlia => "QLIA",
            Self::NotQlia => "NotQLIA",
        })
    }
}

/// Counts violations and keeps the first `limit` of them.
struct Collector {
    limit: usize,
    total: usize,
    witnesses: Vec<Witness>,
}

impl Collector {
    fn new(limit: usize) -> Self {
        Self { limit, total: 0, witnesses: Vec::new() }
    }

    fn record(&mut self, w: impl FnOnce() -> Witness) {
        self.total += 1;
        if self.witnesses.len() < self.limit {
            self.witnesses.push(w());
        }
    }

    fn expect_eq(
        &mut self,
        lhs: LinguisticValue,
        rhs: LinguisticValue,
        x: LinguisticValue,
        y: Option<LinguisticValue>,
        z: Option<LinguisticValue>,
    ) {
        if lhs != rhs {
            self.record(|| Witness { x, y, z, lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    fn into_law(self, law: LatticeLaw) -> LawResult {
        LawResult { law, holds: self.total == 0, total_violations: self.total, witnesses: self.witnesses }
    }
}

/// Both sides of an equational axiom at `(x, y, z)`. For I4 the sides are
/// `x -> y` and `y -> x`.
pub fn axiom_sides(
    c: &AlgebraConfig,
    axiom: AxiomId,
    x: LinguisticValue,
    y: LinguisticValue,
    z: LinguisticValue,
) -> (LinguisticValue, LinguisticValue) {
    let imp = |a, b| c.implies(a, b);
    match axiom {
        AxiomId::I1 => (imp(x, imp(y, z)), imp(y, imp(x, z))),
        AxiomId::I2 => (imp(x, x), c.top()),
        AxiomId::I3 => (imp(x, y), imp(c.not(y), c.not(x))),
        AxiomId::I4 => (imp(x, y), imp(y, x)),
        AxiomId::I5 => (imp(imp(x, y), y), imp(imp(y, x), x)),
        AxiomId::I6 => (imp(c.join(x, y), z), c.meet(imp(x, z), imp(y, z))),
        AxiomId::I7 => (imp(c.meet(x, y), z), c.join(imp(x, z), imp(y, z))),
    }
}

fn arity(axiom: AxiomId) -> usize {
    match axiom {
        AxiomId::I2 => 1,
        AxiomId::I3 | AxiomId::I4 | AxiomId::I5 => 2,
        AxiomId::I1 | AxiomId::I6 | AxiomId::I7 => 3,
    }
}

pub fn check_axiom(config: &AlgebraConfig, axiom: AxiomId) -> AxiomResult {
    check_axiom_with_limit(config, axiom, DEFAULT_WITNESS_LIMIT)
}

pub fn check_axiom_with_limit(config: &AlgebraConfig, axiom: AxiomId, limit: usize) -> AxiomResult {
    let values = config.values();
    let mut col = Collector::new(limit);
    let top = config.top();
    match arity(axiom) {
        1 => {
            for &x in &values {
                let (lhs, rhs) = axiom_sides(config, axiom, x, x, x);
                col.expect_eq(lhs, rhs, x, None, None);
            }
        }
        2 => {
            for &x in &values {
                for &y in &values {
                    let (lhs, rhs) = axiom_sides(config, axiom, x, y, y);
                    if axiom == AxiomId::I4 {
                        // conditional: both implications at top forces x = y
                        if x != y && lhs == top && rhs == top {
                            col.record(|| Witness {
                                x,
                                y: Some(y),
                                z: None,
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            });
                        }
                    } else {
                        col.expect_eq(lhs, rhs, x, Some(y), None);
                    }
                }
            }
        }
        _ => {
            for &x in &values {
                for &y in &values {
                    for &z in &values {
                        let (lhs, rhs) = axiom_sides(config, axiom, x, y, z);
                        col.expect_eq(lhs, rhs, x, Some(y), Some(z));
                    }
                }
            }
        }
    }
    AxiomResult {
        axiom,
        holds: col.total == 0,
        total_violations: col.total,
        witnesses: col.witnesses,
    }
}

pub fn check_all_axioms(config: &AlgebraConfig) -> Vec<AxiomResult> {
    AxiomId::ALL.iter().map(|&a| check_axiom(config, a)).collect()
}

/// Idempotence, commutativity, associativity, absorption and boundedness.
pub fn check_lattice_laws(config: &AlgebraConfig) -> Vec<LawResult> {
    check_lattice_laws_with_limit(config, DEFAULT_WITNESS_LIMIT)
}

pub fn check_lattice_laws_with_limit(config: &AlgebraConfig, limit: usize) -> Vec<LawResult> {
    let c = config;
    let values = c.values();
    let mut join_idem = Collector::new(limit);
    let mut meet_idem = Collector::new(limit);
    let mut join_comm = Collector::new(limit);
    let mut meet_comm = Collector::new(limit);
    let mut join_assoc = Collector::new(limit);
    let mut meet_assoc = Collector::new(limit);
    let mut absorption = Collector::new(limit);
    let mut bounded = Collector::new(limit);

    for &x in &values {
        join_idem.expect_eq(c.join(x, x), x, x, None, None);
        meet_idem.expect_eq(c.meet(x, x), x, x, None, None);
        bounded.expect_eq(c.join(x, c.bottom()), x, x, None, None);
        bounded.expect_eq(c.meet(x, c.top()), x, x, None, None);
        for &y in &values {
            join_comm.expect_eq(c.join(x, y), c.join(y, x), x, Some(y), None);
            meet_comm.expect_eq(c.meet(x, y), c.meet(y, x), x, Some(y), None);
            absorption.expect_eq(c.meet(x, c.join(x, y)), x, x, Some(y), None);
            absorption.expect_eq(c.join(x, c.meet(x, y)), x, x, Some(y), None);
            for &z in &values {
                join_assoc.expect_eq(c.join(x, c.join(y, z)), c.join(c.join(x, y), z), x, Some(y), Some(z));
                meet_assoc.expect_eq(c.meet(x, c.meet(y, z)), c.meet(c.meet(x, y), z), x, Some(y), Some(z));
            }
        }
    }

    vec![
        join_idem.into_law(LatticeLaw::JoinIdempotent),
        meet_idem.into_law(LatticeLaw::MeetIdempotent),
        join_comm.into_law(LatticeLaw::JoinCommutative),
        meet_comm.into_law(LatticeLaw::MeetCommutative),
        join_assoc.into_law(LatticeLaw::JoinAssociative),
        meet_assoc.into_law(LatticeLaw::MeetAssociative),
        absorption.into_law(LatticeLaw::Absorption),
        bounded.into_law(LatticeLaw::Bounded),
    ]
}

/// `(x')' = x` for all `x`, and `x <= y` implies `y' <= x'`.
pub fn check_involution(config: &AlgebraConfig) -> Vec<LawResult> {
    check_involution_with_limit(config, DEFAULT_WITNESS_LIMIT)
}

pub fn check_involution_with_limit(config: &AlgebraConfig, limit: usize) -> Vec<LawResult> {
    let c = config;
    let values = c.values();
    let mut self_inverse = Collector::new(limit);
    let mut reversing = Collector::new(limit);
    for &x in &values {
        self_inverse.expect_eq(c.not(c.not(x)), x, x, None, None);
        for &y in &values {
            if c.leq(x, y) && !c.leq(c.not(y), c.not(x)) {
                reversing.record(|| Witness {
                    x,
                    y: Some(y),
                    z: None,
                    lhs: c.not(y).to_string(),
                    rhs: c.not(x).to_string(),
                });
            }
        }
    }
    vec![
        self_inverse.into_law(LatticeLaw::InvolutionSelfInverse),
        reversing.into_law(LatticeLaw::InvolutionOrderReversing),
    ]
}

/// LIA iff I1..I7 hold; QLIA iff I1..I5 hold and I6 or I7 fails.
pub fn classify(config: &AlgebraConfig) -> Classification {
    classify_results(&check_all_axioms(config))
}

pub fn classify_results(results: &[AxiomResult]) -> Classification {
    let holds = |id| results.iter().any(|r| r.axiom == id && r.holds);
    let core = AxiomId::ALL[..5].iter().all(|&a| holds(a));
    match (core, holds(AxiomId::I6) && holds(AxiomId::I7)) {
        (true, true) => Classification::Lia,
        (true, false) => Classification::Qlia,
        (false, _) => Classification::NotQlia,
    }
}
