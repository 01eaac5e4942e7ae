//! Function symbols and their two evaluation modes.
//!
//! Crossover applies one symbol elementwise across the parents' genes. In
//! multiobjective mode every gene lives in `[0, 1]`, so each symbol carries a
//! domain-closed redefinition that maps `[0,1]^arity` back into `[0,1]`:
//!
//! | symbol | bounded form       |
//! |--------|--------------------|
//! | `+`    | `(x + y) / 2`      |
//! | `-`    | `|x - y|`          |
//! | `*`    | `x * y` (already closed) |
//! | `sin`  | `sin(x) / sin(1)`  |
//! | `exp`  | `exp(x) / exp(1)`  |
//!
//! Classic symbolic regression works on unbounded outputs and uses the raw
//! forms instead, with division protected against near-zero denominators.

use crate::TgpError;

/// Denominators smaller than this make protected division return the
/// numerator unchanged.
pub const DIV_EPSILON: f64 = 1e-9;

/// An arity-tagged elementwise operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionSymbol {
    Add,
    Sub,
    Mul,
    Div,
    Sin,
    Exp,
}

impl FunctionSymbol {
    /// Number of parents the symbol consumes.
    pub fn arity(self) -> usize {
        match self {
            Self::Add | Self::Sub | Self::Mul | Self::Div => 2,
            Self::Sin | Self::Exp => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Add => "add",
            Self::Sub => "sub",
            Self::Mul => "mul",
            Self::Div => "div",
            Self::Sin => "sin",
            Self::Exp => "exp",
        }
    }

    /// Domain-closed evaluation: inputs in `[0,1]` produce an output in
    /// `[0,1]`.
    ///
    /// Division has no published closed form and is not part of the bounded
    /// set; it falls back to the protected quotient clamped to `[0,1]`.
    pub fn bounded_eval(self, args: &[f64]) -> Result<f64, TgpError> {
        self.check_arity(args.len())?;
        Ok(match self {
            Self::Add => (args[0] + args[1]) / 2.0,
            Self::Sub => (args[0] - args[1]).abs(),
            Self::Mul => args[0] * args[1],
            Self::Div => protected_div(args[0], args[1]).clamp(0.0, 1.0),
            Self::Sin => args[0].sin() / 1.0_f64.sin(),
            Self::Exp => args[0].exp() / 1.0_f64.exp(),
        })
    }

    /// Unbounded evaluation used by classic mode. Division is protected:
    /// a denominator within [`DIV_EPSILON`] of zero returns the numerator.
    pub fn raw_eval(self, args: &[f64]) -> Result<f64, TgpError> {
        self.check_arity(args.len())?;
        Ok(match self {
            Self::Add => args[0] + args[1],
            Self::Sub => args[0] - args[1],
            Self::Mul => args[0] * args[1],
            Self::Div => protected_div(args[0], args[1]),
            Self::Sin => args[0].sin(),
            Self::Exp => args[0].exp(),
        })
    }

    fn check_arity(self, found: usize) -> Result<(), TgpError> {
        let expected = self.arity();
        if expected == found {
            Ok(())
        } else {
            Err(TgpError::ArityMismatch { expected, found })
        }
    }
}

fn protected_div(num: f64, den: f64) -> f64 {
    if den.abs() < DIV_EPSILON {
        num
    } else {
        num / den
    }
}

/// The multiobjective function set: `{+, -, *, sin, exp}`.
pub fn mo_function_set() -> Vec<FunctionSymbol> {
    vec![
        FunctionSymbol::Add,
        FunctionSymbol::Sub,
        FunctionSymbol::Mul,
        FunctionSymbol::Sin,
        FunctionSymbol::Exp,
    ]
}

/// The classic symbolic-regression set: `{+, -, *, /, sin}`.
pub fn classic_function_set() -> Vec<FunctionSymbol> {
    vec![
        FunctionSymbol::Add,
        FunctionSymbol::Sub,
        FunctionSymbol::Mul,
        FunctionSymbol::Div,
        FunctionSymbol::Sin,
    ]
}
