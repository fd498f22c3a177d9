use std::sync::Arc;

use crate::config::CurveConfig;
use crate::error::{Error, Result};
use crate::memo::MemoStore;

/// Switches that change how the engines search, never what they return.
#[derive(Clone, Debug, Default)]
pub struct EngineOptions {
    /// Return 0 early for irreducible configurations with
    /// `g > (d - 1)(d - 2) / 2`. Off by default.
    pub genus_prune: bool,
    /// Perturbs every `binom(beta^i, gamma^i)` factor by one. Only exists so
    /// the reference-table harness can be shown to catch a broken coefficient.
    #[doc(hidden)]
    pub inject_binomial_fault: bool,
}

/// Entry point for both counting recursions, sharing one memo store.
///
/// `Engine` is `Sync`; top-level queries may run concurrently against the
/// same store.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    pub(crate) memo: Arc<MemoStore>,
    pub(crate) options: EngineOptions,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_memo(memo: Arc<MemoStore>) -> Self {
        Engine {
            memo,
            options: EngineOptions::default(),
        }
    }

    pub fn with_options(mut self, options: EngineOptions) -> Self {
        self.options = options;
        self
    }

    pub fn memo(&self) -> &Arc<MemoStore> {
        &self.memo
    }

    pub fn options(&self) -> &EngineOptions {
        &self.options
    }
}

/// Recursive calls must decrease `(d, |beta|)` lexicographically.
pub(crate) fn check_measure(parent: &CurveConfig, child: &CurveConfig) -> Result<()> {
    let p = (parent.d, parent.beta.size());
    let c = (child.d, child.beta.size());
    if c < p {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "recursion measure did not decrease: ({parent}) -> ({child})"
        )))
    }
}
