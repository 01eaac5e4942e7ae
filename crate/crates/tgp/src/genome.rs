//! Fixed-length real-valued individuals and the two genetic operators.
//!
//! A genome is the whole individual: a vector of gene values in the
//! canonical interval `[0, 1]`, one per decision variable. No expression
//! tree is kept — crossover combines the parents' stored values directly.

use crate::rng::RandomSource;
use crate::symbols::FunctionSymbol;
use crate::TgpError;

/// A TGP individual: `m` gene values, each in `[0, 1]`.
///
/// The length is fixed at creation and preserved by every operator; the
/// bounded function set keeps all genes inside the interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Genome {
    genes: Vec<f64>,
}

impl Genome {
    /// Wraps raw gene values, rejecting empty vectors and out-of-interval
    /// (or non-finite) genes.
    pub fn new(genes: Vec<f64>) -> Result<Self, TgpError> {
        if genes.is_empty() {
            return Err(TgpError::Empty { what: "genome" });
        }
        for (index, &value) in genes.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(TgpError::OutOfDomain {
                    index,
                    value,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(Self { genes })
    }

    /// Insertion operator: a fresh individual of `m` independent uniform
    /// draws from `[0, 1]`.
    pub fn random(m: usize, rng: &mut RandomSource) -> Result<Self, TgpError> {
        if m == 0 {
            return Err(TgpError::Empty { what: "genome" });
        }
        Ok(Self {
            genes: (0..m).map(|_| rng.next_unit()).collect(),
        })
    }

    /// Crossover: applies `symbol` elementwise across the parents.
    ///
    /// Gene `k` of the offspring is `symbol.bounded_eval(p1[k], .., pa[k])`.
    /// The parent count must equal the symbol arity and all parents must
    /// share one length.
    pub fn crossover(parents: &[&Genome], symbol: FunctionSymbol) -> Result<Self, TgpError> {
        if parents.len() != symbol.arity() {
            return Err(TgpError::ArityMismatch {
                expected: symbol.arity(),
                found: parents.len(),
            });
        }
        let m = parents[0].len();
        for p in &parents[1..] {
            if p.len() != m {
                return Err(TgpError::LengthMismatch {
                    expected: m,
                    found: p.len(),
                });
            }
        }
        let mut genes = Vec::with_capacity(m);
        let mut args = [0.0; 2];
        for k in 0..m {
            for (slot, p) in args.iter_mut().zip(parents) {
                *slot = p.genes[k];
            }
            genes.push(symbol.bounded_eval(&args[..parents.len()])?);
        }
        Ok(Self { genes })
    }

    pub fn genes(&self) -> &[f64] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }
}

impl AsRef<[f64]> for Genome {
    fn as_ref(&self) -> &[f64] {
        &self.genes
    }
}

/// Uniform symbol choice from a function set.
pub fn pick_symbol(
    rng: &mut RandomSource,
    set: &[FunctionSymbol],
) -> Result<FunctionSymbol, TgpError> {
    if set.is_empty() {
        return Err(TgpError::Empty {
            what: "function set",
        });
    }
    Ok(set[rng.next_index(set.len())])
}
