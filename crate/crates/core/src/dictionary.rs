//! Arcs of an infinity-gon as indecomposable objects of the type A cluster
//! category over the same linear order.
//!
//! The arc `{a, b}` with `a < b` in the canonical cut corresponds to the
//! interval object `X_{a+1, b-1}`; rotation of arcs corresponds to the shift
//! `τ`. Only dimensions of morphism and extension spaces are modelled.

use alloc::format;
use core::fmt;

use crate::arc::Arc;
use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};

/// The interval object `X_{lo, hi}` with `lo <= hi` in the canonical cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecObject {
    lo: Point,
    hi: Point,
}

impl IndecObject {
    pub fn new(order: &CyclicOrder, lo: Point, hi: Point) -> Result<Self> {
        require_threads(order)?;
        order.validate(lo)?;
        order.validate(hi)?;
        if lo > hi {
            return Err(Error::Domain(format!("X_{{{lo}, {hi}}} needs {lo} <= {hi}")));
        }
        Ok(IndecObject { lo, hi })
    }

    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }
}

impl fmt::Display for IndecObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{{{}, {}}}", self.lo, self.hi)
    }
}

fn require_threads(order: &CyclicOrder) -> Result<()> {
    match order {
        CyclicOrder::ThreadGon(k) if *k > 0 => Ok(()),
        _ => Err(Error::Domain("the dictionary needs an infinity-gon".into())),
    }
}

/// `Φ({a, b}) = X_{a+1, b-1}`.
pub fn phi(order: &CyclicOrder, p: &Arc) -> Result<IndecObject> {
    require_threads(order)?;
    Arc::new(order, p.lo(), p.hi())?;
    IndecObject::new(order, order.successor(p.lo())?, order.predecessor(p.hi())?)
}

/// `Φ⁻¹(X_{a, b}) = {a-1, b+1}`.
pub fn phi_inv(order: &CyclicOrder, x: &IndecObject) -> Result<Arc> {
    require_threads(order)?;
    Arc::new(order, order.predecessor(x.lo)?, order.successor(x.hi)?)
}

/// `τ^steps X_{a, b} = X_{a-steps, b-steps}`.
pub fn tau(order: &CyclicOrder, x: &IndecObject, steps: i64) -> Result<IndecObject> {
    let back = steps.checked_neg().ok_or(Error::Overflow)?;
    IndecObject::new(order, order.shift(x.lo, back)?, order.shift(x.hi, back)?)
}

/// Dimension of `Hom(X_{a,b}, X_{c,d})` among representations: 1 iff
/// `a <= c <= b <= d`.
pub fn hom_dim_repc(x: &IndecObject, y: &IndecObject) -> u32 {
    (x.lo <= y.lo && y.lo <= x.hi && x.hi <= y.hi) as u32
}

/// Dimension of `Ext¹(X_{a,b}, X_{c,d})` among representations: 1 iff
/// `c+1 <= a <= d+1 <= b`.
pub fn ext_dim_repc(order: &CyclicOrder, x: &IndecObject, y: &IndecObject) -> Result<u32> {
    let c1 = order.successor(y.lo)?;
    let d1 = order.successor(y.hi)?;
    Ok((c1 <= x.lo && x.lo <= d1 && d1 <= x.hi) as u32)
}

/// `dim Hom(X, Y)` in the cluster category: `Hom(X, Y) ⊕ Ext¹(X, τ⁻¹Y)`.
pub fn hom_dim_cluster(order: &CyclicOrder, x: &IndecObject, y: &IndecObject) -> Result<u32> {
    Ok(hom_dim_repc(x, y) + ext_dim_repc(order, x, &tau(order, y, -1)?)?)
}

/// `dim Ext¹(X, Y)` in the cluster category: `Ext¹(X, Y) ⊕ Ext¹(Y, X)*`.
pub fn ext_dim_cluster(order: &CyclicOrder, x: &IndecObject, y: &IndecObject) -> Result<u32> {
    Ok(ext_dim_repc(order, x, y)? + ext_dim_repc(order, y, x)?)
}
