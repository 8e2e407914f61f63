use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::coeff::Field;
use crate::poly::monomial::MonomialOrder;

/// Caps on Gröbner computations. Exceeding a cap aborts with
/// [`Error::ResourceCap`] so that no checker reports on a truncated result.
#[derive(Debug, Clone)]
pub struct Limits {
    pub max_basis: usize,
    pub max_degree: u64,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 20_000, max_degree: 400, cancel: None }
    }
}

impl Limits {
    pub fn check_cancel(&self) -> Result<()> {
        match &self.cancel {
            Some(flag) if flag.load(Ordering::Relaxed) => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

/// Polynomial ring `k[x_1..x_n]` with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct Ring {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

pub type RingRef = Arc<Ring>;

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(field: Field, vars: &[&str], order: MonomialOrder) -> Result<RingRef> {
        Ring::from_names(field, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn from_names(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{v}`")));
            }
            if !valid_identifier(v) {
                return Err(Error::InvalidArgument(format!("invalid variable name `{v}`")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "elimination block {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Ring { field, vars, order, limits: Limits::default() }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn with_limits(&self, limits: Limits) -> RingRef {
        Arc::new(Ring { limits, ..self.clone() })
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { order, ..self.clone() })
    }

    /// A ring with fresh variables placed in front of the existing ones.
    /// Fresh names start with an underscore so they never collide with parsed names.
    pub fn with_leading_vars(&self, fresh: &[&str], order: MonomialOrder) -> RingRef {
        let mut vars: Vec<String> = fresh.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring { field: self.field, vars, order, limits: self.limits.clone() })
    }

    /// Ring with extra variables appended after the existing ones.
    pub fn with_trailing_vars(&self, extra: &[String], order: MonomialOrder) -> Result<RingRef> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        let ring = Ring::from_names(self.field, vars, order)?;
        Ok(ring.with_limits(self.limits.clone()))
    }

    pub fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

pub(crate) fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.vars.join(","), self.order.name())
    }
}
