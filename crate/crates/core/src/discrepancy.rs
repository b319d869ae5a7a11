//! Places where the printed theorem statements disagree with what the
//! algebra actually computes.
//!
//! Two kinds of report live here:
//!
//! * [`literal_join`] / [`literal_meet`] read the printed join and meet
//!   tables word for word; [`crate::oracle::cross_check_ops`] compares them
//!   with the Hasse oracle pair by pair.
//! * [`catalog`] lists the statement-level problems in the inference tables
//!   (unbound symbols, garbled conditions, boundary errors, claims that fail)
//!   and attaches the first concrete witness found by exhaustive search.

// conditions are kept in the same shape as the case labels
#![allow(clippy::int_plus_one)]

use serde::Serialize;

use crate::axioms::{check_involution, LatticeLaw};
use crate::inference::{mp_direct, mt_direct};
use crate::lattice::{AlgebraConfig, LinguisticValue, Polarity};
use crate::oracle::{cross_check_ops, DiscrepancyReport};

use LinguisticValue as V;

/// Join read literally from the printed tables. Returns the item label and
/// its value; the value is `None` when the item names an unbound index.
///
/// The `i <= j` ordering attached to the tables only matters for the
/// same-polarity items; mixed pairs are taken in `(true, false)` order.
pub fn literal_join(config: &AlgebraConfig, a: LinguisticValue, b: LinguisticValue) -> (&'static str, Option<LinguisticValue>) {
    use Polarity::*;
    let n = config.n();
    match (a.polarity, b.polarity) {
        (True, True) => (item(config, 1), Some(V::t(a.grade.max(b.grade)))),
        (False, False) => (item(config, 2), Some(V::f(a.grade.min(b.grade)))),
        (True, False) => mixed_join(config, n, a.grade, b.grade),
        (False, True) => mixed_join(config, n, b.grade, a.grade),
    }
}

fn mixed_join(config: &AlgebraConfig, n: u32, k: u32, l: u32) -> (&'static str, Option<LinguisticValue>) {
    match config.noncomp() {
        None if n <= k + l => ("2.2/3", Some(V::t(k))),
        None => ("2.2/4", Some(V::t(n - l))),
        Some(i) if n <= k + l && k == n - i => ("2.4/3", Some(V::t(n - i + 1))),
        Some(_) if n <= k + l => ("2.4/3", Some(V::t(k))),
        Some(i) if l == i => ("2.4/4", Some(V::t(n - i + 1))),
        Some(_) => ("2.4/4", Some(V::t(n - l))),
    }
}

/// Meet read literally from the printed tables; see [`literal_join`].
pub fn literal_meet(config: &AlgebraConfig, a: LinguisticValue, b: LinguisticValue) -> (&'static str, Option<LinguisticValue>) {
    use Polarity::*;
    let n = config.n();
    match (a.polarity, b.polarity, config.noncomp()) {
        (True, True, None) => ("2.2/5", Some(V::t(a.grade.min(b.grade)))),
        (False, False, None) => ("2.2/6", Some(V::f(a.grade.max(b.grade)))),
        // printed as v_{i1}, with i the non-comparable index
        (True, True, Some(i)) => ("2.4/5", Some(V::t(i))),
        // printed as v_{j0}; no j is in scope
        (False, False, Some(_)) => ("2.4/6", None),
        (True, False, _) => mixed_meet(config, n, a.grade, b.grade),
        (False, True, _) => mixed_meet(config, n, b.grade, a.grade),
    }
}

fn mixed_meet(config: &AlgebraConfig, n: u32, k: u32, l: u32) -> (&'static str, Option<LinguisticValue>) {
    match config.noncomp() {
        None if n <= k + l => ("2.2/7", Some(V::f(l))),
        None => ("2.2/8", Some(V::f(n - k))),
        Some(i) if n <= k + l && k == n - i && l == i => ("2.4/7", Some(V::f(i + 1))),
        Some(_) if n <= k + l => ("2.4/7", Some(V::f(l))),
        Some(i) if k == n - i => ("2.4/8", Some(V::f(i + 1))),
        Some(_) => ("2.4/8", Some(V::f(n - k))),
    }
}

fn item(config: &AlgebraConfig, k: u8) -> &'static str {
    const LIA: [&str; 2] = ["2.2/1", "2.2/2"];
    const QLIA: [&str; 2] = ["2.4/1", "2.4/2"];
    if config.is_quasi() { QLIA[k as usize - 1] } else { LIA[k as usize - 1] }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscrepancyKind {
    /// a symbol in the printed value is wrong or not in scope
    StatementTypo,
    /// a printed case applies to more pairs than it should
    BranchScope,
    /// a printed value indexes past the top of the chain
    IndexOverflow,
    /// a printed condition does not match the case split behind the values
    ConditionText,
    /// two printed cases meet at a boundary where the printed one is wrong
    BoundaryError,
    /// a worked example states an intermediate value that does not follow
    ExampleText,
    /// a stated property fails
    ClaimFailure,
}

/// What the printed text yields for a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Printed {
    Value(i64, Polarity),
    Unbound(&'static str),
    NoCase,
}

impl Printed {
    fn t(g: i64) -> Self {
        Printed::Value(g, Polarity::True)
    }

    fn render(&self, config: &AlgebraConfig) -> String {
        match *self {
            Printed::Value(g, pol) if (0..=config.n() as i64).contains(&g) => V::new(g as u32, pol).to_string(),
            Printed::Value(g, pol) => format!("v{g}{} (outside the carrier)", if pol == Polarity::True { 'T' } else { 'F' }),
            Printed::Unbound(sym) => format!("unbound symbol {sym}"),
            Printed::NoCase => "no case applies".to_string(),
        }
    }

    fn is(&self, v: LinguisticValue) -> bool {
        *self == Printed::Value(v.grade as i64, v.polarity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyWitness {
    pub config: String,
    pub inputs: Vec<LinguisticValue>,
    pub printed: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub id: &'static str,
    pub location: &'static str,
    pub kind: DiscrepancyKind,
    pub printed: &'static str,
    pub resolution: &'static str,
    pub witness: Option<DiscrepancyWitness>,
}

/// Largest chain searched for witnesses.
pub const WITNESS_SEARCH_MAX_N: u32 = 8;

type Probe = fn(&AlgebraConfig, LinguisticValue, LinguisticValue) -> Option<(Printed, String)>;

/// First pair, over every configuration up to [`WITNESS_SEARCH_MAX_N`] in
/// enumeration order, where the probe reports a difference.
fn search(quasi: bool, probe: Probe) -> Option<DiscrepancyWitness> {
    for config in AlgebraConfig::all_up_to(WITNESS_SEARCH_MAX_N) {
        if config.is_quasi() != quasi {
            continue;
        }
        let values = config.values();
        for &p in &values {
            for &q in &values {
                if let Some((printed, actual)) = probe(&config, p, q) {
                    return Some(DiscrepancyWitness {
                        config: config.to_string(),
                        inputs: vec![p, q],
                        printed: printed.render(&config),
                        actual,
                    });
                }
            }
        }
    }
    None
}

/// Report only where the printed outcome differs from `actual`.
fn differs(printed: Printed, actual: LinguisticValue) -> Option<(Printed, String)> {
    (!printed.is(actual)).then(|| (printed, actual.to_string()))
}

struct Grades {
    n: i64,
    p: i64,
    q: i64,
    i: i64,
}

fn grades(config: &AlgebraConfig, p: LinguisticValue, q: LinguisticValue) -> Grades {
    Grades {
        n: config.n() as i64,
        p: p.grade as i64,
        q: q.grade as i64,
        i: config.noncomp().map_or(-1, |i| i as i64),
    }
}

fn polarities(p: LinguisticValue, q: LinguisticValue, want: (Polarity, Polarity)) -> bool {
    (p.polarity, q.polarity) == want
}

const TT: (Polarity, Polarity) = (Polarity::True, Polarity::True);
const FF: (Polarity, Polarity) = (Polarity::False, Polarity::False);
const TF: (Polarity, Polarity) = (Polarity::True, Polarity::False);
const FT: (Polarity, Polarity) = (Polarity::False, Polarity::True);

fn probe_32_vl1(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: i, q: j, .. } = grades(c, p, q);
    (polarities(p, q, FF) && i < j && 2 * j > n + i).then(|| (Printed::Unbound("l"), mt_direct(c, p, q).to_string()))
}

fn probe_31_j0(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { p: i, q: j, .. } = grades(c, p, q);
    // i <= j, j <= i <= 2j and i > 2j > j all fail
    (polarities(p, q, TT) && j == 0 && i > 0).then(|| (Printed::NoCase, mt_direct(c, p, q).to_string()))
}

fn probe_24_item3(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    if !polarities(p, q, TF) || n > k + l || k != n - i || l == i {
        return None;
    }
    differs(Printed::t(n - i + 1), c.join(p, q))
}

fn probe_24_item5(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { p: k, q: l, i, .. } = grades(c, p, q);
    if !polarities(p, q, TT) || k > l {
        return None;
    }
    differs(Printed::t(i), c.meet(p, q))
}

fn probe_24_item6(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    polarities(p, q, FF).then(|| (Printed::Unbound("j"), c.meet(p, q).to_string()))
}

fn probe_41_overflow(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    (polarities(p, q, TT) && l == 0 && k == i).then(|| (Printed::t(n + 1), mt_direct(c, p, q).to_string()))
}

fn probe_42_overflow(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    (polarities(p, q, FF) && k == 0 && l == i).then(|| (Printed::t(n + 1), mp_direct(c, p, q).to_string()))
}

fn probe_43_mt_region(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    // items 4-5 require (k+l) <= n, items 6-8 need l = n-i, item 9 needs n >= l + k/2
    (polarities(p, q, TF) && k + l > n && l != n - i && 2 * n < 2 * l + k)
        .then(|| (Printed::NoCase, mt_direct(c, p, q).to_string()))
}

fn probe_44_mp_boundary(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    if !polarities(p, q, FT) || k + l >= n || k + l != n - i || n != 2 * k + l {
        return None;
    }
    differs(Printed::t(k + l), mp_direct(c, p, q))
}

fn probe_44_mp_item6(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    // item 5 stops at k <= 1 and item 6 is printed with (k+l) != (n-i)
    (polarities(p, q, FT) && k + l < n && k + l == n - i && n > 2 * k + l && k > 1)
        .then(|| (Printed::NoCase, mp_direct(c, p, q).to_string()))
}

/// Modus Tollens for `(v_{k0}, v_{l1})` in the quasi shape, read as printed.
fn printed_44_mt(n: i64, k: i64, l: i64, i: i64) -> Printed {
    let h = n - i;
    if k + l >= n {
        Printed::t(n)
    } else if l != h && n <= 2 * l + k {
        Printed::t(k + l)
    } else if l != h && n >= 2 * l + k {
        Printed::t(n - l)
    } else if l == h && n <= 2 * l + k - 1 {
        Printed::t(k + l)
    } else if l == h && l <= 1 {
        Printed::t(n)
    } else if l == h && 2 * l <= n - k + 1 {
        Printed::t(n - l + 1)
    } else {
        Printed::NoCase
    }
}

fn probe_44_mt_condition(c: &AlgebraConfig, p: V, q: V) -> Option<(Printed, String)> {
    let Grades { n, p: k, q: l, i } = grades(c, p, q);
    if !polarities(p, q, FT) {
        return None;
    }
    differs(printed_44_mt(n, k, l, i), mt_direct(c, p, q))
}

fn example_31_implication() -> DiscrepancyWitness {
    let config = AlgebraConfig::lia(4);
    let (p, q) = (V::t(3), V::t(2));
    DiscrepancyWitness {
        config: config.to_string(),
        inputs: vec![p, q],
        printed: "Somewhat True".to_string(),
        actual: config.implies(p, q).to_string(),
    }
}

fn involution_witness() -> Option<DiscrepancyWitness> {
    AlgebraConfig::all_up_to(WITNESS_SEARCH_MAX_N).into_iter().find_map(|config| {
        let law = check_involution(&config).into_iter().find(|r| r.law == LatticeLaw::InvolutionOrderReversing)?;
        let w = law.witnesses.first()?;
        let (a, b) = (w.x, w.y?);
        Some(DiscrepancyWitness {
            config: config.to_string(),
            inputs: vec![a, b],
            printed: format!("{a} <= {b} implies {}' <= {}'", b, a),
            actual: format!("{} is not below {}", config.not(b), config.not(a)),
        })
    })
}

fn order_characterization_witness() -> Option<DiscrepancyWitness> {
    AlgebraConfig::all_up_to(WITNESS_SEARCH_MAX_N).into_iter().find_map(|config| {
        let values = config.values();
        values.iter().flat_map(|&a| values.iter().map(move |&b| (a, b))).find_map(|(a, b)| {
            (config.implies(a, b) == config.top() && !config.leq(a, b)).then(|| DiscrepancyWitness {
                config: config.to_string(),
                inputs: vec![a, b],
                printed: format!("{a} -> {b} = {} so {a} <= {b}", config.top()),
                actual: format!("{a} and {b} are not comparable"),
            })
        })
    })
}

/// Every known statement-level discrepancy, each with a witness where one
/// can be exhibited.
pub fn catalog() -> Vec<Discrepancy> {
    use DiscrepancyKind::*;
    vec![
        Discrepancy {
            id: "thm3.2-mt-vl1",
            location: "Theorem 3.2 item 2",
            kind: StatementTypo,
            printed: "v_{l1} if i <= j and 2j >= n+i",
            resolution: "v_{j1}",
            witness: search(false, probe_32_vl1),
        },
        Discrepancy {
            id: "thm3.1-mt-j0",
            location: "Theorem 3.1 item 2",
            kind: ConditionText,
            printed: "v_{(n-j)1} if i > 2j > j",
            resolution: "condition i > 2j, which also covers j = 0",
            witness: search(false, probe_31_j0),
        },
        Discrepancy {
            id: "thm2.4-join-item3-scope",
            location: "Theorem 2.4 item 3",
            kind: BranchScope,
            printed: "v_{(n-(i-1))1} if k = n-i and n <= k+l",
            resolution: "special value only for l = i; for l > i the join is v_{k1}",
            witness: search(true, probe_24_item3),
        },
        Discrepancy {
            id: "thm2.4-meet-item5-vi1",
            location: "Theorem 2.4 item 5",
            kind: StatementTypo,
            printed: "v_{k1} ^ v_{l1} = v_{i1}",
            resolution: "v_{k1}",
            witness: search(true, probe_24_item5),
        },
        Discrepancy {
            id: "thm2.4-meet-item6-vj0",
            location: "Theorem 2.4 item 6",
            kind: StatementTypo,
            printed: "v_{k0} ^ v_{l0} = v_{j0}",
            resolution: "v_{l0}",
            witness: search(true, probe_24_item6),
        },
        Discrepancy {
            id: "thm4.1-mt-overflow",
            location: "Theorem 4.1 item 2",
            kind: IndexOverflow,
            printed: "v_{(n-l+1)1} if k > l, 2l <= k+1, k-l = i",
            resolution: "saturates at v_{n1} when l = 0",
            witness: search(true, probe_41_overflow),
        },
        Discrepancy {
            id: "thm4.2-mp-overflow",
            location: "Theorem 4.2 item 1",
            kind: IndexOverflow,
            printed: "v_{(n-k+1)1} if k < l, 2k <= l+1, l-k = i",
            resolution: "saturates at v_{n1} when k = 0",
            witness: search(true, probe_42_overflow),
        },
        Discrepancy {
            id: "thm4.3-mp-item1-polarity",
            location: "Theorem 4.3 item 1",
            kind: StatementTypo,
            printed: "v_{n-l+i+1}",
            resolution: "v_{(n-l+i+1)1}",
            witness: None,
        },
        Discrepancy {
            id: "thm4.3-mt-region",
            location: "Theorem 4.3 item 2",
            kind: ConditionText,
            printed: "v_{l1} and v_{(2n-k-l)1} listed under (k+l) <= n, l != n-i",
            resolution: "both cases belong to (k+l) > n, l != n-i",
            witness: search(true, probe_43_mt_region),
        },
        Discrepancy {
            id: "thm4.4-mp-boundary",
            location: "Theorem 4.4 item 1",
            kind: BoundaryError,
            printed: "v_{(k+l)1} if (k+l) = n-i and n <= 2k+l",
            resolution: "strict n < 2k+l; at n = 2k+l the value is v_{(n-k+1)1} (v_{n1} for k <= 1)",
            witness: search(true, probe_44_mp_boundary),
        },
        Discrepancy {
            id: "thm4.4-mp-item6-condition",
            location: "Theorem 4.4 item 1",
            kind: ConditionText,
            printed: "v_{(n-k+1)1} if (k+l) != n-i and n >= 2k+l",
            resolution: "condition (k+l) = n-i and k > 1",
            witness: search(true, probe_44_mp_item6),
        },
        Discrepancy {
            id: "thm4.4-mt-condition",
            location: "Theorem 4.4 item 2",
            kind: ConditionText,
            printed: "cases split on l = n-i",
            resolution: "split on (k+l) = n-i",
            witness: search(true, probe_44_mt_condition),
        },
        Discrepancy {
            id: "ex3.1-implication",
            location: "Example 3.1",
            kind: ExampleText,
            printed: "e(P -> Q) = Somewhat True",
            resolution: "v_{31}; the stated MP and MT values already follow from v_{31}",
            witness: Some(example_31_implication()),
        },
        Discrepancy {
            id: "thm2.5-involution",
            location: "Theorem 2.5 proof",
            kind: ClaimFailure,
            printed: "' is an order reversing involution",
            resolution: "self-inverse always; order reversing only when 2i = n",
            witness: involution_witness(),
        },
        Discrepancy {
            id: "order-via-implication",
            location: "Definition 2.2",
            kind: ClaimFailure,
            printed: "a <= b iff a -> b = I",
            resolution: "fails for the non-comparable pair v_{i0}, v_{(n-i)1}",
            witness: order_characterization_witness(),
        },
    ]
}

/// Everything in one machine-readable document: the statement catalog and
/// the literal operation-table cross-check for each configuration.
#[derive(Debug, Clone, Serialize)]
pub struct Ledger {
    pub statements: Vec<Discrepancy>,
    pub operations: Vec<DiscrepancyReport>,
}

pub fn ledger(configs: &[AlgebraConfig]) -> Ledger {
    Ledger { statements: catalog(), operations: configs.iter().map(cross_check_ops).collect() }
}
