use serde::Serialize;

use super::{
    differential_exact, differential_of_r, domination_number, enclaveless_number,
    independence_number, mu_from_result, roman_domination_number, vertex_cover_number, RMode,
    SearchOptions,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roper::build_r;

/// A computed value, or the reason it was not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Field<T> {
    Value(T),
    Skipped { skipped: String },
}

impl<T> Field<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Field::Value(v) => Some(v),
            Field::Skipped { .. } => None,
        }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Field::Skipped {
            skipped: reason.into(),
        }
    }

    /// Budget and size limits become skips; other errors propagate.
    fn from_result(r: Result<T>) -> Result<Self> {
        match r {
            Ok(v) => Ok(Field::Value(v)),
            Err(e @ (Error::BudgetExceeded(_) | Error::TooLarge { .. } | Error::CapacityExceeded(_))) => {
                Ok(Field::skipped(e.to_string()))
            }
            Err(e) => Err(e),
        }
    }

    pub fn is_budget_skip(&self) -> bool {
        matches!(self, Field::Skipped { skipped } if skipped.starts_with(BUDGET_PREFIX))
    }
}

const BUDGET_PREFIX: &str = "search budget";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub m: usize,
    pub diff: Field<i64>,
    pub diff_r: Field<i64>,
    pub gamma: Field<usize>,
    pub tau: Field<usize>,
    pub alpha: Field<usize>,
    pub roman: Field<usize>,
    pub psi: Field<usize>,
    pub lambda: Field<i64>,
    pub mu: Field<usize>,
    pub delta_min: Option<usize>,
    pub delta_max: Option<usize>,
}

impl InvariantRecord {
    pub fn has_budget_skip(&self) -> bool {
        self.diff.is_budget_skip()
            || self.diff_r.is_budget_skip()
            || self.gamma.is_budget_skip()
            || self.tau.is_budget_skip()
            || self.alpha.is_budget_skip()
            || self.roman.is_budget_skip()
            || self.psi.is_budget_skip()
            || self.lambda.is_budget_skip()
            || self.mu.is_budget_skip()
    }
}

/// Every invariant of `g`. Quantities of `R(G)` need `G` connected with at
/// least three vertices and are skipped otherwise.
pub fn full_record(g: &Graph, opts: &SearchOptions) -> Result<InvariantRecord> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let plain = SearchOptions {
        enumerate: false,
        ..*opts
    };
    let diff = Field::from_result(differential_exact(g, None, &plain).map(|r| r.value))?;
    let gamma = Field::from_result(domination_number(g, false, &plain).map(|d| d.gamma))?;
    let tau = Field::from_result(vertex_cover_number(g, &plain).map(|c| c.tau))?;
    let alpha = Field::from_result(independence_number(g, &plain).map(|i| i.alpha))?;
    let roman = Field::from_result(roman_domination_number(g, &plain).map(|r| r.gamma_r))?;
    let psi = Field::from_result(enclaveless_number(g, &plain).map(|p| p.psi))?;
    let lambda = match &alpha {
        Field::Value(a) => Field::Value(g.size() as i64 - g.order() as i64 + 2 * *a as i64),
        Field::Skipped { skipped } => Field::skipped(skipped.clone()),
    };
    let (diff_r, mu) = if g.order() >= 3 && g.is_connected() {
        match build_r(g) {
            Ok(rg) => {
                match differential_of_r(&rg, RMode::VRestricted, &plain.enumerating()) {
                    Ok(res) => {
                        let mu = mu_from_result(&res).map(|(m, _)| m).expect("enumerated");
                        (Field::Value(res.value), Field::Value(mu))
                    }
                    Err(e) => {
                        let diff_r = Field::from_result(Err(e))?;
                        let mu = match &diff_r {
                            Field::Skipped { skipped } => Field::skipped(skipped.clone()),
                            Field::Value(_) => unreachable!(),
                        };
                        (diff_r, mu)
                    }
                }
            }
            Err(e) => {
                let reason = e.to_string();
                (Field::skipped(reason.clone()), Field::skipped(reason))
            }
        }
    } else {
        let reason = "requires a connected graph with at least 3 vertices";
        (Field::skipped(reason), Field::skipped(reason))
    };
    let stats = g.degree_stats();
    Ok(InvariantRecord {
        n: g.order(),
        m: g.size(),
        diff,
        diff_r,
        gamma,
        tau,
        alpha,
        roman,
        psi,
        lambda,
        mu,
        delta_min: stats.min,
        delta_max: stats.max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn rec(spec: FamilySpec) -> InvariantRecord {
        full_record(&generate(&spec).unwrap(), &SearchOptions::default()).unwrap()
    }

    #[test]
    fn k4_record() {
        let r = rec(FamilySpec::Complete(4));
        assert_eq!((r.n, r.m), (4, 6));
        assert_eq!(r.diff, Field::Value(2));
        assert_eq!(r.diff_r, Field::Value(5));
        assert_eq!(r.gamma, Field::Value(1));
        assert_eq!(r.tau, Field::Value(3));
        assert_eq!(r.alpha, Field::Value(1));
        assert_eq!(r.roman, Field::Value(2));
        assert_eq!(r.lambda, Field::Value(4));
        assert_eq!(r.mu, Field::Value(2));
        assert_eq!((r.delta_min, r.delta_max), (Some(3), Some(3)));
    }

    #[test]
    fn p7_record() {
        let r = rec(FamilySpec::Path(7));
        assert_eq!(r.diff, Field::Value(2));
        assert_eq!(r.roman, Field::Value(5));
        assert_eq!(r.lambda, Field::Value(7));
        assert!(!r.has_budget_skip());
    }

    #[test]
    fn disconnected_skips_r_fields() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = full_record(&g, &SearchOptions::default()).unwrap();
        assert!(r.diff_r.value().is_none() && r.mu.value().is_none());
        assert_eq!(r.gamma, Field::Value(2));
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["diff_r"]["skipped"].is_string());
        assert_eq!(json["gamma"], 2);
    }

    #[test]
    fn large_order_skips_roman() {
        let r = rec(FamilySpec::Path(13));
        assert!(r.roman.value().is_none());
        assert!(!r.has_budget_skip());
    }

    #[test]
    fn budget_skip_is_flagged() {
        let g = generate(&FamilySpec::Path(8)).unwrap();
        let r = full_record(&g, &SearchOptions::default().with_budget(50)).unwrap();
        assert!(r.has_budget_skip());
    }
}
