//! Ground truth for the carrier order, built from the Hasse diagram alone.
//!
//! The covers are the two chains plus the rungs `v_{k0} -> v_{(n-k)1}`
//! (all of them for the LIA shape, all but `k = noncomp` for the quasi
//! shape). The order is the reflexive-transitive closure of those edges and
//! joins/meets are found by brute force over all common bounds. Nothing here
//! calls the closed-form operations of [`crate::lattice`].

use serde::Serialize;

use crate::lattice::{AlgebraConfig, LinguisticValue};

#[derive(Debug, Clone)]
pub struct CoverGraph {
    config: AlgebraConfig,
    elements: Vec<LinguisticValue>,
    /// `(lower, upper)` positions into `elements`.
    covers: Vec<(usize, usize)>,
    /// `reach[a][b]` iff `elements[a] <= elements[b]`.
    reach: Vec<Vec<bool>>,
}

impl CoverGraph {
    pub fn build(config: &AlgebraConfig) -> Self {
        let n = config.n();
        let elements = config.values();
        let pos = |v: LinguisticValue| {
            elements.iter().position(|&e| e == v).expect("element of the carrier")
        };
        let mut covers = Vec::new();
        for g in (1..=n).rev() {
            covers.push((pos(LinguisticValue::f(g)), pos(LinguisticValue::f(g - 1))));
        }
        for g in 1..=n {
            covers.push((pos(LinguisticValue::t(g - 1)), pos(LinguisticValue::t(g))));
        }
        for k in 0..=n {
            if Some(k) == config.noncomp() {
                continue;
            }
            covers.push((pos(LinguisticValue::f(k)), pos(LinguisticValue::t(n - k))));
        }

        let size = elements.len();
        let mut succ = vec![Vec::new(); size];
        for &(lo, hi) in &covers {
            succ[lo].push(hi);
        }
        let reach = (0..size)
            .map(|start| {
                let mut seen = vec![false; size];
                let mut stack = vec![start];
                while let Some(v) = stack.pop() {
                    if !std::mem::replace(&mut seen[v], true) {
                        stack.extend(&succ[v]);
                    }
                }
                seen
            })
            .collect();

        Self { config: config.clone(), elements, covers, reach }
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.config
    }

    pub fn elements(&self) -> &[LinguisticValue] {
        &self.elements
    }

    pub fn covers(&self) -> impl Iterator<Item = (LinguisticValue, LinguisticValue)> + '_ {
        self.covers.iter().map(|&(a, b)| (self.elements[a], self.elements[b]))
    }

    fn index(&self, v: LinguisticValue) -> usize {
        self.elements
            .iter()
            .position(|&e| e == v)
            .unwrap_or_else(|| panic!("{v} is not in the carrier of {}", self.config))
    }

    pub fn leq(&self, a: LinguisticValue, b: LinguisticValue) -> bool {
        self.reach[self.index(a)][self.index(b)]
    }

    /// Least upper bound, or `None` when the minimal common upper bound is
    /// missing or not unique.
    pub fn lub(&self, a: LinguisticValue, b: LinguisticValue) -> Option<LinguisticValue> {
        let (a, b) = (self.index(a), self.index(b));
        let upper: Vec<usize> = (0..self.elements.len())
            .filter(|&u| self.reach[a][u] && self.reach[b][u])
            .collect();
        self.extreme(&upper, |x, y| self.reach[x][y])
    }

    pub fn glb(&self, a: LinguisticValue, b: LinguisticValue) -> Option<LinguisticValue> {
        let (a, b) = (self.index(a), self.index(b));
        let lower: Vec<usize> = (0..self.elements.len())
            .filter(|&l| self.reach[l][a] && self.reach[l][b])
            .collect();
        self.extreme(&lower, |x, y| self.reach[y][x])
    }

    /// The element of `set` that is `below` every other member, if any.
    fn extreme(&self, set: &[usize], below: impl Fn(usize, usize) -> bool) -> Option<LinguisticValue> {
        let mut found = set.iter().filter(|&&c| set.iter().all(|&o| below(c, o)));
        match (found.next(), found.next()) {
            (Some(&c), None) => Some(self.elements[c]),
            _ => None,
        }
    }

    /// Reflexive, antisymmetric and transitive closure check.
    pub fn is_partial_order(&self) -> bool {
        let size = self.elements.len();
        (0..size).all(|a| {
            self.reach[a][a]
                && (0..size).all(|b| {
                    (a == b || !(self.reach[a][b] && self.reach[b][a]))
                        && (0..size).all(|c| !(self.reach[a][b] && self.reach[b][c]) || self.reach[a][c])
                })
        })
    }

    /// Graphviz digraph with edges directed lower -> upper.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n    rankdir=BT;\n");
        for v in &self.elements {
            match self.config.label(*v) {
                Some(label) => out.push_str(&format!("    \"{v}\" [tooltip=\"{label}\"];\n")),
                None => out.push_str(&format!("    \"{v}\";\n")),
            }
        }
        for (lo, hi) in self.covers() {
            out.push_str(&format!("    \"{lo}\" -> \"{hi}\";\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> HasseJson {
        HasseJson {
            config: self.config.to_string(),
            nodes: self.elements.clone(),
            edges: self.covers().collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HasseJson {
    pub config: String,
    pub nodes: Vec<LinguisticValue>,
    pub edges: Vec<(LinguisticValue, LinguisticValue)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Join,
    Meet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeDefect {
    pub a: LinguisticValue,
    pub b: LinguisticValue,
    pub missing: BoundKind,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub config: String,
    pub partial_order: bool,
    pub defects: Vec<LatticeDefect>,
}

impl LatticeReport {
    pub fn is_lattice(&self) -> bool {
        self.partial_order && self.defects.is_empty()
    }
}

/// Every pair lacking a unique join or meet in the Hasse order of `config`.
pub fn verify_lattice(config: &AlgebraConfig) -> LatticeReport {
    let g = CoverGraph::build(config);
    let mut defects = Vec::new();
    for &a in g.elements() {
        for &b in g.elements() {
            if g.lub(a, b).is_none() {
                defects.push(LatticeDefect { a, b, missing: BoundKind::Join });
            }
            if g.glb(a, b).is_none() {
                defects.push(LatticeDefect { a, b, missing: BoundKind::Meet });
            }
        }
    }
    LatticeReport { config: config.to_string(), partial_order: g.is_partial_order(), defects }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderOp {
    Join,
    Meet,
    Leq,
}

/// A pair where a closed-form operation disagrees with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpMismatch {
    pub op: OrderOp,
    pub a: LinguisticValue,
    pub b: LinguisticValue,
    pub closed_form: String,
    pub oracle: String,
}

/// A pair where a rule read literally from the printed operation tables
/// disagrees with the oracle. `literal` is `None` when the printed rule
/// names an index that is not bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiteralMismatch {
    pub op: OrderOp,
    pub rule: &'static str,
    pub a: LinguisticValue,
    pub b: LinguisticValue,
    pub literal: Option<LinguisticValue>,
    pub oracle: LinguisticValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyReport {
    pub config: String,
    pub implemented: Vec<OpMismatch>,
    pub literal: Vec<LiteralMismatch>,
}

/// Compares the closed-form join/meet/order and the literal printed rules
/// against the oracle on every ordered pair.
pub fn cross_check_ops(config: &AlgebraConfig) -> DiscrepancyReport {
    let g = CoverGraph::build(config);
    let show = |v: Option<LinguisticValue>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
    let mut implemented = Vec::new();
    let mut literal = Vec::new();
    for &a in g.elements() {
        for &b in g.elements() {
            let (lub, glb) = (g.lub(a, b), g.glb(a, b));
            let join = config.join(a, b);
            if Some(join) != lub {
                implemented.push(OpMismatch {
                    op: OrderOp::Join,
                    a,
                    b,
                    closed_form: join.to_string(),
                    oracle: show(lub),
                });
            }
            let meet = config.meet(a, b);
            if Some(meet) != glb {
                implemented.push(OpMismatch {
                    op: OrderOp::Meet,
                    a,
                    b,
                    closed_form: meet.to_string(),
                    oracle: show(glb),
                });
            }
            if config.leq(a, b) != g.leq(a, b) {
                implemented.push(OpMismatch {
                    op: OrderOp::Leq,
                    a,
                    b,
                    closed_form: config.leq(a, b).to_string(),
                    oracle: g.leq(a, b).to_string(),
                });
            }

            let (rule, value) = crate::discrepancy::literal_join(config, a, b);
            if let Some(oracle) = lub.filter(|&o| value != Some(o)) {
                literal.push(LiteralMismatch { op: OrderOp::Join, rule, a, b, literal: value, oracle });
            }
            let (rule, value) = crate::discrepancy::literal_meet(config, a, b);
            if let Some(oracle) = glb.filter(|&o| value != Some(o)) {
                literal.push(LiteralMismatch { op: OrderOp::Meet, rule, a, b, literal: value, oracle });
            }
        }
    }
    DiscrepancyReport { config: config.to_string(), implemented, literal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use LinguisticValue as V;

    fn edges(g: &CoverGraph) -> Vec<(V, V)> {
        g.covers().collect()
    }

    #[test]
    fn covers_two_element_chain() {
        let g = CoverGraph::build(&AlgebraConfig::lia(0));
        assert_eq!(g.elements().len(), 2);
        assert_eq!(edges(&g), vec![(V::f(0), V::t(0))]);
    }

    #[test]
    fn covers_n1() {
        let e = edges(&CoverGraph::build(&AlgebraConfig::lia(1)));
        for edge in [(V::f(1), V::f(0)), (V::t(0), V::t(1)), (V::f(0), V::t(1)), (V::f(1), V::t(0))] {
            assert!(e.contains(&edge), "{edge:?}");
        }
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn quasi_drops_one_rung() {
        let e = edges(&CoverGraph::build(&AlgebraConfig::qlia(4, 2).unwrap()));
        assert!(!e.contains(&(V::f(2), V::t(2))));
        for k in [0, 1, 3, 4] {
            assert!(e.contains(&(V::f(k), V::t(4 - k))));
        }
    }

    #[test]
    fn reachability() {
        let g = CoverGraph::build(&AlgebraConfig::lia(4));
        assert!(g.leq(V::f(4), V::t(4)));
        assert!(!g.leq(V::t(0), V::f(0)));
        let q = CoverGraph::build(&AlgebraConfig::qlia(4, 2).unwrap());
        assert!(!q.leq(V::f(2), V::t(2)));
        assert!(!q.leq(V::t(2), V::f(2)));
    }

    #[test]
    fn brute_force_bounds() {
        let g = CoverGraph::build(&AlgebraConfig::lia(4));
        assert_eq!(g.lub(V::t(0), V::f(0)), Some(V::t(4)));
        assert_eq!(g.glb(V::t(0), V::f(0)), Some(V::f(4)));
        let q = CoverGraph::build(&AlgebraConfig::qlia(4, 2).unwrap());
        assert_eq!(q.lub(V::t(2), V::f(2)), Some(V::t(3)));
        assert_eq!(q.glb(V::t(2), V::f(2)), Some(V::f(3)));
        for &v in g.elements() {
            assert_eq!(g.lub(v, v), Some(v));
            assert_eq!(g.glb(v, V::t(4)), Some(v));
        }
    }

    #[test]
    fn non_lattice_is_detected() {
        // two incomparable maxima: no join
        let g = CoverGraph {
            config: AlgebraConfig::lia(0),
            elements: vec![V::f(0), V::t(0)],
            covers: vec![],
            reach: vec![vec![true, false], vec![false, true]],
        };
        assert_eq!(g.lub(V::f(0), V::t(0)), None);
        assert_eq!(g.glb(V::f(0), V::t(0)), None);
    }

    #[test]
    fn oracle_order_shape() {
        for config in AlgebraConfig::all_up_to(8) {
            let g = CoverGraph::build(&config);
            assert!(g.is_partial_order(), "{config}");
            let n = config.n();
            for k in 0..=n {
                for j in 0..=n {
                    let expect = j + k >= n && !(config.noncomp() == Some(k) && j == n - k);
                    assert_eq!(g.leq(V::f(k), V::t(j)), expect, "{config} k={k} j={j}");
                    assert!(!g.leq(V::t(j), V::f(k)));
                }
            }
        }
    }

    #[test]
    fn every_config_is_a_lattice() {
        for config in AlgebraConfig::all_up_to(8) {
            let report = verify_lattice(&config);
            assert!(report.is_lattice(), "{config}: {:?}", report.defects);
        }
    }

    #[test]
    fn oracle_bounds_obey_lattice_laws() {
        for config in [AlgebraConfig::lia(3), AlgebraConfig::qlia(5, 2).unwrap()] {
            let g = CoverGraph::build(&config);
            let join = |a, b| g.lub(a, b).unwrap();
            let meet = |a, b| g.glb(a, b).unwrap();
            for &a in g.elements() {
                for &b in g.elements() {
                    assert_eq!(join(a, b), join(b, a));
                    assert_eq!(meet(a, b), meet(b, a));
                    assert_eq!(join(a, meet(a, b)), a);
                    assert_eq!(meet(a, join(a, b)), a);
                    assert!(g.leq(a, join(a, b)) && g.leq(meet(a, b), a));
                    for &c in g.elements() {
                        if g.leq(a, b) {
                            assert!(g.leq(join(a, c), join(b, c)));
                            assert!(g.leq(meet(a, c), meet(b, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cross_check_examples() {
        assert!(cross_check_ops(&AlgebraConfig::lia(4)).implemented.is_empty());
        assert!(cross_check_ops(&AlgebraConfig::lia(4)).literal.is_empty());
        assert!(cross_check_ops(&AlgebraConfig::qlia(4, 2).unwrap()).implemented.is_empty());
        let r = cross_check_ops(&AlgebraConfig::qlia(5, 2).unwrap());
        assert!(r.implemented.is_empty());
        let entry = r
            .literal
            .iter()
            .find(|m| m.op == OrderOp::Join && m.a == V::t(3) && m.b == V::f(4))
            .expect("literal item-3 entry");
        assert_eq!(entry.literal, Some(V::t(4)));
        assert_eq!(entry.oracle, V::t(3));
    }

    #[test]
    fn dot_and_json_export() {
        let q = CoverGraph::build(&AlgebraConfig::qlia(4, 2).unwrap());
        let dot = q.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(!dot.contains("\"v2F\" -> \"v2T\""));
        assert!(dot.contains("\"v1F\" -> \"v3T\""));
        let json = CoverGraph::build(&AlgebraConfig::lia(0)).to_json();
        assert_eq!((json.nodes.len(), json.edges.len()), (2, 1));
    }

    #[test]
    fn polarity_chains_are_total() {
        let g = CoverGraph::build(&AlgebraConfig::lia(3));
        for a in 0..=3 {
            for b in 0..=3 {
                assert_eq!(g.leq(V::t(a), V::t(b)), a <= b);
                assert_eq!(g.leq(V::f(a), V::f(b)), a >= b);
            }
        }
    }
}
