//! The carrier `V = H x {F, T}` of linguistic truth values and its
//! closed-form operations.
//!
//! Ordering: the true values form the chain `v_{01} < v_{11} < ... < v_{n1}`,
//! the false values the chain `v_{n0} < ... < v_{10} < v_{00}`, and every
//! `v_{k0} <= v_{(n-k)1}`. In the quasi variant the single rung
//! `v_{i0} <= v_{(n-i)1}` is dropped, making that pair non-comparable.
//!
//! `v_{n0}` is the bottom (absolutely false) and `v_{n1}` the top
//! (absolutely true).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hedge::{residuum, HedgeChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Polarity {
    False,
    True,
}

impl Polarity {
    pub fn flip(self) -> Self {
        match self {
            Polarity::False => Polarity::True,
            Polarity::True => Polarity::False,
        }
    }

    fn letter(self) -> char {
        match self {
            Polarity::False => 'F',
            Polarity::True => 'T',
        }
    }

    fn word(self) -> &'static str {
        match self {
            Polarity::False => "False",
            Polarity::True => "True",
        }
    }
}

/// A linguistic truth value `v_{ij}`: hedge grade `i` with polarity `j`.
///
/// Equality is structural. Rendered canonically as `v<grade><T|F>`,
/// e.g. `v3T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinguisticValue {
    pub grade: u32,
    pub polarity: Polarity,
}

impl LinguisticValue {
    pub const fn new(grade: u32, polarity: Polarity) -> Self {
        Self { grade, polarity }
    }

    /// `v_{g1}`
    pub const fn t(grade: u32) -> Self {
        Self::new(grade, Polarity::True)
    }

    /// `v_{g0}`
    pub const fn f(grade: u32) -> Self {
        Self::new(grade, Polarity::False)
    }

    pub fn is_true(self) -> bool {
        self.polarity == Polarity::True
    }
}

impl fmt::Display for LinguisticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}{}", self.grade, self.polarity.letter())
    }
}

impl FromStr for LinguisticValue {
    type Err = Error;

    /// Parses the canonical form only; see [`AlgebraConfig::parse_value`] for
    /// labels and range checks.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidValue(s.to_string());
        let rest = s.strip_prefix('v').ok_or_else(bad)?;
        let (digits, pol) = rest.split_at(rest.len().checked_sub(1).ok_or_else(bad)?);
        let polarity = match pol {
            "T" => Polarity::True,
            "F" => Polarity::False,
            _ => return Err(bad()),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let grade = digits.parse().map_err(|_| bad())?;
        Ok(Self::new(grade, polarity))
    }
}

impl Serialize for LinguisticValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LinguisticValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum AlgebraKind {
    /// Every rung `v_{k0} <= v_{(n-k)1}` present.
    Lia,
    /// `v_{noncomp,0}` and `v_{(n-noncomp)1}` are non-comparable.
    Qlia { noncomp: u32 },
}

pub const DEFAULT_LABELS_N4: [&str; 5] = ["slightly", "somewhat", "rather", "quite", "absolutely"];

/// Hedge count, algebra kind and optional hedge labels. Immutable once
/// validated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraConfig {
    n: u32,
    kind: AlgebraKind,
    labels: Option<Vec<String>>,
}

impl AlgebraConfig {
    pub fn new(n: u32, kind: AlgebraKind) -> Result<Self> {
        if let AlgebraKind::Qlia { noncomp } = kind {
            if n < 2 {
                return Err(Error::InvalidConfig(format!(
                    "quasi algebra needs n >= 2, got n = {n}"
                )));
            }
            if noncomp == 0 || noncomp >= n {
                return Err(Error::InvalidConfig(format!(
                    "non-comparable index {noncomp} outside 1..={}",
                    n - 1
                )));
            }
        }
        Ok(Self { n, kind, labels: None })
    }

    pub fn lia(n: u32) -> Self {
        Self { n, kind: AlgebraKind::Lia, labels: None }
    }

    pub fn qlia(n: u32, noncomp: u32) -> Result<Self> {
        Self::new(n, AlgebraKind::Qlia { noncomp })
    }

    /// Attach `n + 1` distinct hedge names, weakest first.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(|s| s.into().trim().to_string()).collect();
        if labels.len() != self.chain().len() {
            return Err(Error::InvalidConfig(format!(
                "expected {} hedge labels, got {}",
                self.chain().len(),
                labels.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidConfig("empty hedge label".into()));
            }
            if labels[..i].iter().any(|b| b.eq_ignore_ascii_case(a)) {
                return Err(Error::InvalidConfig(format!("duplicate hedge label `{a}`")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Every admissible configuration with `n <= max_n`: LIA for `0..=max_n`,
    /// then QLIA for every `n >= 2` and non-comparable index.
    pub fn all_up_to(max_n: u32) -> Vec<Self> {
        let mut out: Vec<Self> = (0..=max_n).map(Self::lia).collect();
        for n in 2..=max_n {
            for i in 1..n {
                out.push(Self::qlia(n, i).expect("admissible"));
            }
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn chain(&self) -> HedgeChain {
        HedgeChain::new(self.n)
    }

    pub fn noncomp(&self) -> Option<u32> {
        match self.kind {
            AlgebraKind::Lia => None,
            AlgebraKind::Qlia { noncomp } => Some(noncomp),
        }
    }

    pub fn is_quasi(&self) -> bool {
        self.noncomp().is_some()
    }

    /// Explicit labels, or the default five names when `n = 4`.
    pub fn labels(&self) -> Option<Vec<&str>> {
        match &self.labels {
            Some(l) => Some(l.iter().map(String::as_str).collect()),
            None if self.n == 4 => Some(DEFAULT_LABELS_N4.to_vec()),
            None => None,
        }
    }

    pub fn top(&self) -> LinguisticValue {
        LinguisticValue::t(self.n)
    }

    pub fn bottom(&self) -> LinguisticValue {
        LinguisticValue::f(self.n)
    }

    pub fn len(&self) -> usize {
        2 * self.chain().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// False chain by descending grade, then true chain by ascending grade.
    pub fn values(&self) -> Vec<LinguisticValue> {
        let falses = (0..=self.n).rev().map(LinguisticValue::f);
        let trues = (0..=self.n).map(LinguisticValue::t);
        falses.chain(trues).collect()
    }

    /// Position of `v` in [`values`](Self::values).
    pub fn position(&self, v: LinguisticValue) -> usize {
        match v.polarity {
            Polarity::False => (self.n - v.grade) as usize,
            Polarity::True => (self.n + 1 + v.grade) as usize,
        }
    }

    pub fn contains(&self, v: LinguisticValue) -> bool {
        v.grade <= self.n
    }

    pub fn value(&self, grade: u32, polarity: Polarity) -> Result<LinguisticValue> {
        self.chain().index(grade)?;
        Ok(LinguisticValue::new(grade, polarity))
    }

    pub fn check(&self, v: LinguisticValue) -> Result<LinguisticValue> {
        self.value(v.grade, v.polarity)
    }

    /// `v_{ij}' = v_{i(1-j)}`
    pub fn not(&self, a: LinguisticValue) -> LinguisticValue {
        LinguisticValue::new(a.grade, a.polarity.flip())
    }

    pub fn join(&self, a: LinguisticValue, b: LinguisticValue) -> LinguisticValue {
        use Polarity::*;
        match (a.polarity, b.polarity) {
            (True, True) => LinguisticValue::t(a.grade.max(b.grade)),
            (False, False) => LinguisticValue::f(a.grade.min(b.grade)),
            (True, False) => self.mixed_join(a.grade, b.grade),
            (False, True) => self.mixed_join(b.grade, a.grade),
        }
    }

    pub fn meet(&self, a: LinguisticValue, b: LinguisticValue) -> LinguisticValue {
        use Polarity::*;
        match (a.polarity, b.polarity) {
            (True, True) => LinguisticValue::t(a.grade.min(b.grade)),
            (False, False) => LinguisticValue::f(a.grade.max(b.grade)),
            (True, False) => self.mixed_meet(a.grade, b.grade),
            (False, True) => self.mixed_meet(b.grade, a.grade),
        }
    }

    /// `v_{i1} v v_{j0}`
    fn mixed_join(&self, i: u32, j: u32) -> LinguisticValue {
        let n = self.n;
        match self.noncomp() {
            // v_{nc,0} is not below v_{(n-nc)1}, so every true value up to
            // that grade is lifted one step past it.
            Some(nc) if j == nc && i + j <= n => LinguisticValue::t(n - nc + 1),
            _ if n <= i + j => LinguisticValue::t(i),
            _ => LinguisticValue::t(n - j),
        }
    }

    /// `v_{i1} ^ v_{j0}`
    fn mixed_meet(&self, i: u32, j: u32) -> LinguisticValue {
        let n = self.n;
        match self.noncomp() {
            Some(nc) if i == n - nc && j <= nc => LinguisticValue::f(nc + 1),
            _ if n <= i + j => LinguisticValue::f(j),
            _ => LinguisticValue::f(n - i),
        }
    }

    pub fn implies(&self, a: LinguisticValue, b: LinguisticValue) -> LinguisticValue {
        use Polarity::*;
        let n = self.n;
        let (i, j) = (a.grade, b.grade);
        match (a.polarity, b.polarity) {
            (True, False) => LinguisticValue::f((i + j).saturating_sub(n)),
            (False, True) => LinguisticValue::t((i + j).min(n)),
            (True, True) => LinguisticValue::t(residuum(n, i, j)),
            (False, False) => LinguisticValue::t(residuum(n, j, i)),
        }
    }

    pub fn leq(&self, a: LinguisticValue, b: LinguisticValue) -> bool {
        use Polarity::*;
        match (a.polarity, b.polarity) {
            (True, True) => a.grade <= b.grade,
            (False, False) => a.grade >= b.grade,
            (True, False) => false,
            (False, True) => {
                let rung = self.n <= a.grade + b.grade;
                match self.noncomp() {
                    Some(nc) if a.grade == nc && b.grade == self.n - nc => false,
                    _ => rung,
                }
            }
        }
    }

    /// `<label> <True|False>` when labels are known.
    pub fn label(&self, v: LinguisticValue) -> Option<String> {
        let labels = self.labels()?;
        let hedge = labels.get(v.grade as usize)?;
        Some(format!("{hedge} {}", v.polarity.word()))
    }

    /// Canonical form, followed by the labeled form in parentheses when
    /// labels are known.
    pub fn describe(&self, v: LinguisticValue) -> String {
        match self.label(v) {
            Some(l) => format!("{v} ({l})"),
            None => v.to_string(),
        }
    }

    /// Accepts `v3T` or `quite true` (label form is case-insensitive).
    pub fn parse_value(&self, s: &str) -> Result<LinguisticValue> {
        let s = s.trim();
        if let Ok(v) = s.parse::<LinguisticValue>() {
            return self.check(v).map_err(|_| Error::InvalidValue(s.to_string()));
        }
        let bad = || Error::InvalidValue(s.to_string());
        let (hedge, pol) = s.rsplit_once(char::is_whitespace).ok_or_else(bad)?;
        let polarity = if pol.eq_ignore_ascii_case("true") {
            Polarity::True
        } else if pol.eq_ignore_ascii_case("false") {
            Polarity::False
        } else {
            return Err(bad());
        };
        let labels = self.labels().ok_or_else(bad)?;
        let grade = labels
            .iter()
            .position(|l| l.eq_ignore_ascii_case(hedge.trim()))
            .ok_or_else(bad)?;
        Ok(LinguisticValue::new(grade as u32, polarity))
    }
}

impl fmt::Display for AlgebraConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::Lia => write!(f, "LIA n={}", self.n),
            AlgebraKind::Qlia { noncomp } => write!(f, "QLIA n={} i={}", self.n, noncomp),
        }
    }
}
