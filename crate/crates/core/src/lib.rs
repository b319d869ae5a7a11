//! Linguistic truth-valued propositional logic.
//!
//! Truth values are pairs `v_{ij} = (h_i, c_j)` of a linguistic hedge
//! `h_i` drawn from a finite chain `h_0 < h_1 < ... < h_n` and a basic truth
//! value `c_j` in `{F, T}`. The carrier of `2(n + 1)` values forms either a
//! lattice implication algebra (every `v_{k0} <= v_{(n-k)1}`) or a quasi
//! lattice implication algebra (one such pair left non-comparable).
//!
//! The crate provides:
//!
//! * [`hedge`]: the hedge chain with its Łukasiewicz-style implication,
//! * [`lattice`]: closed-form join, meet, involution and implication on the
//!   carrier,
//! * [`oracle`]: an independent Hasse-diagram oracle (reachability, brute-force
//!   bounds) used to certify the closed forms,
//! * [`axioms`]: exhaustive checks of the implication axioms I1..I7 and the
//!   bounded-lattice laws,
//! * [`formula`]: a propositional formula parser, renderer and evaluator,
//! * [`inference`]: graded Modus Ponens / Modus Tollens, both evaluated
//!   directly and through the case tables,
//! * [`discrepancy`]: the machine-readable list of places where the printed
//!   case tables had to be corrected.
//!
//! ```
//! use lingtruth_core::{AlgebraConfig, Formula, LinguisticValue as V, Valuation};
//! use lingtruth_core::inference::{mp_closed, mp_direct};
//!
//! let c = AlgebraConfig::lia(4);
//! let f = Formula::parse("(P & (P -> Q)) -> Q")?;
//! let val = Valuation::new(c.clone()).with("P", V::t(3))?.with("Q", V::t(2))?;
//! assert_eq!(f.evaluate(&val)?, V::t(3));
//!
//! let (value, branch) = mp_closed(&c, V::t(3), V::t(2));
//! assert_eq!(value, mp_direct(&c, V::t(3), V::t(2)));
//! assert_eq!(branch.to_string(), "3.1:i>=j,2i<=n+j");
//! # Ok::<(), lingtruth_core::Error>(())
//! ```

pub mod axioms;
pub mod discrepancy;
pub mod error;
pub mod formula;
pub mod hedge;
pub mod inference;
pub mod lattice;
pub mod oracle;

pub use axioms::{AxiomId, AxiomResult, Classification, LatticeLaw, LawResult, Witness};
pub use error::{Error, Result};
pub use formula::{Formula, Valuation};
pub use hedge::{HedgeChain, HedgeIndex};
pub use inference::{BranchLabel, InferenceRow, RuleId, TableId};
pub use lattice::{AlgebraConfig, AlgebraKind, LinguisticValue, Polarity};
pub use oracle::CoverGraph;
