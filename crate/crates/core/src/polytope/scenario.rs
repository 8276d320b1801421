use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of dichotomic observables together with the product terms
/// ("monomials") whose expectations span the correlation polytope.
///
/// Each monomial is a strictly increasing tuple of observable indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    observables: usize,
    monomials: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Scenario {
    pub fn new(observables: usize, monomials: Vec<Vec<usize>>) -> Result<Self> {
        let scenario = Self {
            observables,
            monomials,
            labels: None,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.observables {
            return Err(Error::InvalidScenario(format!(
                "{} labels for {} observables",
                labels.len(),
                self.observables
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Three observables X, Y, Z with the pairwise products XY, XZ, YZ.
    pub fn suppes_zanotti() -> Self {
        Self::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]])
            .and_then(|s| s.with_labels(["X", "Y", "Z"]))
            .expect("built-in scenario is valid")
    }

    /// Observables W, X on one side and Y, Z on the other; products WY, WZ, XY, XZ.
    pub fn chsh() -> Self {
        Self::new(4, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
            .and_then(|s| s.with_labels(["W", "X", "Y", "Z"]))
            .expect("built-in scenario is valid")
    }

    /// Resolves the built-in aliases `sz` and `chsh`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "sz" => Some(Self::suppes_zanotti()),
            "chsh" => Some(Self::chsh()),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let scenario: Self =
            serde_json::from_str(text).map_err(|e| Error::InvalidScenario(e.to_string()))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn observables(&self) -> usize {
        self.observables
    }

    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a monomial, e.g. `XY` or `x0*x2`.
    pub fn monomial_name(&self, k: usize) -> String {
        let m = &self.monomials[k];
        match &self.labels {
            Some(labels) => m.iter().map(|&i| labels[i].as_str()).collect(),
            None => m
                .iter()
                .map(|i| format!("x{i}"))
                .collect::<Vec<_>>()
                .join("*"),
        }
    }

    /// The monomial as an observable pair, if it is one.
    pub fn pair(&self, k: usize) -> Result<(usize, usize)> {
        match self.monomials[k].as_slice() {
            &[i, j] => Ok((i, j)),
            other => Err(Error::UnsupportedMonomialOrder(other.to_vec())),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.observables == 0 {
            return Err(Error::InvalidScenario("no observables".into()));
        }
        if self.monomials.is_empty() {
            return Err(Error::InvalidScenario("no monomials".into()));
        }
        for (k, m) in self.monomials.iter().enumerate() {
            if m.is_empty() {
                return Err(Error::InvalidScenario(format!("monomial {k} is empty")));
            }
            if m.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidScenario(format!(
                    "monomial {m:?} is not strictly increasing"
                )));
            }
            if let Some(&i) = m.iter().find(|&&i| i >= self.observables) {
                return Err(Error::InvalidScenario(format!(
                    "observable index {i} out of range for {} observables",
                    self.observables
                )));
            }
            if self.monomials[..k].contains(m) {
                return Err(Error::InvalidScenario(format!("duplicate monomial {m:?}")));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.observables {
                return Err(Error::InvalidScenario("label count mismatch".into()));
            }
        }
        Ok(())
    }
}
