//! Exact Hom and Ext dimensions between indecomposables, syzygy orbits,
//! and the trapezoidal Hom/Ext regions in the strip lattice.
//!
//! All dimensions are combinatorial counts; uniserial modules make them
//! independent of the base field, so no field appears in the API.

use crate::algebra::{NakayamaAlgebra, Shape};
use crate::modcat::{Indec, ModuleError, Selfinjective};

/// Dimension of `Hom(M, N)`.
///
/// A nonzero map `M -> N` of rank `t` sends the length-`t` top quotient of
/// `M` onto the length-`t` bottom submodule of `N`; it exists iff
/// `top(M) = top(N) + len(N) - t` (mod n for cyclic shape). Distinct ranks
/// give linearly independent maps, so the dimension counts admissible `t`.
pub fn hom_dim(alg: &NakayamaAlgebra, m: Indec, n: Indec) -> usize {
    debug_assert!(alg.contains(m) && alg.contains(n));
    let bound = m.len.min(n.len) as i64;
    let t_star = n.top as i64 + n.len as i64 - m.top as i64;
    match alg.shape() {
        Shape::Linear => usize::from(1 <= t_star && t_star <= bound),
        Shape::Cyclic => {
            let nn = alg.n() as i64;
            let r = t_star.rem_euclid(nn);
            let first = if r == 0 { nn } else { r };
            if first <= bound {
                ((bound - first) / nn + 1) as usize
            } else {
                0
            }
        }
    }
}

/// Dimension of `Ext^1(M, N)`, from `0 -> ΩM -> P(M) -> M -> 0`:
/// `hom(ΩM, N) - hom(P(M), N) + hom(M, N)`; zero when `M` is projective.
pub fn ext1_dim(alg: &NakayamaAlgebra, m: Indec, n: Indec) -> usize {
    let Some(om) = alg.syzygy(m) else {
        return 0;
    };
    let p = Indec::new(m.top, alg.projective_len(m.top));
    let d = hom_dim(alg, om, n) as i64 - hom_dim(alg, p, n) as i64 + hom_dim(alg, m, n) as i64;
    debug_assert!(d >= 0, "negative ext dimension for ({m}, {n})");
    d as usize
}

/// Dimension of `Ext^r(M, N)` for `r >= 1`, via `Ext^r(M, N) = Ext^1(Ω^(r-1) M, N)`.
pub fn ext_dim(alg: &NakayamaAlgebra, m: Indec, n: Indec, r: usize) -> usize {
    assert!(r >= 1, "ext_dim requires r >= 1");
    let mut cur = m;
    for _ in 1..r {
        match alg.syzygy(cur) {
            Some(next) => cur = next,
            None => return 0,
        }
    }
    ext1_dim(alg, cur, n)
}

/// How a syzygy orbit terminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitTerminal {
    /// Some `Ω^j M` is projective, the next syzygy is zero.
    ReachesZero,
    /// The syzygy of the last chain entry equals `chain[cycle_start]`.
    EntersCycle { cycle_start: usize },
}

/// The chain `M, ΩM, Ω²M, ...` up to the first zero or repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaOrbit {
    pub chain: Vec<Indec>,
    pub terminal: OrbitTerminal,
}

impl OmegaOrbit {
    /// Period of a periodic module (`cycle_start == 0`), if any.
    pub fn period(&self) -> Option<usize> {
        match self.terminal {
            OrbitTerminal::EntersCycle { cycle_start: 0 } => Some(self.chain.len()),
            _ => None,
        }
    }
}

/// Iterate the syzygy until it vanishes or revisits an earlier chain entry.
/// The chain has pairwise distinct entries and is bounded by the number of
/// indecomposables, so this terminates structurally.
pub fn omega_orbit(alg: &NakayamaAlgebra, m: Indec) -> OmegaOrbit {
    debug_assert!(alg.contains(m));
    let mut chain = vec![m];
    let mut cur = m;
    loop {
        match alg.syzygy(cur) {
            None => return OmegaOrbit { chain, terminal: OrbitTerminal::ReachesZero },
            Some(next) => {
                if let Some(pos) = chain.iter().position(|&x| x == next) {
                    return OmegaOrbit {
                        chain,
                        terminal: OrbitTerminal::EntersCycle { cycle_start: pos },
                    };
                }
                chain.push(next);
                cur = next;
            }
        }
    }
}

/// `M` is periodic when `Ω^j M = M` for some `j >= 1`.
pub fn is_periodic(alg: &NakayamaAlgebra, m: Indec) -> bool {
    matches!(omega_orbit(alg, m).terminal, OrbitTerminal::EntersCycle { cycle_start: 0 })
}

/// Is there an integer `x = residue (mod n)` with `lo <= x <= hi`?
/// Intervals here are shorter than `n`, so at most one candidate exists.
fn residue_in_interval(lo: i64, hi: i64, residue: i64, n: i64) -> bool {
    if lo > hi {
        return false;
    }
    let x = lo + (residue - lo).rem_euclid(n);
    x <= hi
}

impl Selfinjective<'_> {
    fn require_k_at_most_n(&self) -> Result<(), ModuleError> {
        if self.k() > self.n() {
            Err(ModuleError::KExceedsN { k: self.k(), n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Is `Γ(X)` in the Hom-support trapezoid of `M`?
    ///
    /// With `Γ(M) = (a, b)`, the region is `a <= x <= a+b`, `x + y >= a+b`,
    /// `0 <= y <= k-1`, searched over universal-cover representatives
    /// `x = Γ(X)_1 (mod n)`. Equivalent to `hom_dim(M, X) > 0`; requires `k <= n`.
    pub fn hom_region_contains(&self, m: Indec, x: Indec) -> Result<bool, ModuleError> {
        self.require_k_at_most_n()?;
        let pm = self.gamma(m);
        let px = self.gamma(x);
        let (a, b) = (pm.a, pm.b as i64);
        let y = px.b as i64;
        // x + y >= a+b and x >= a collapse to one interval for x
        Ok(residue_in_interval((a + b - y).max(a), a + b, px.a, self.n() as i64))
    }

    /// Is `Γ(X)` in the Ext¹-support trapezoid of `M`?
    ///
    /// With `Γ(M) = (a, b)`, the region is the parallelogram
    /// `a+b-k+1 <= x <= a-1`, `a-1 <= x + y <= a+b-1` (which forces
    /// `0 <= y <= k-2`), searched over representatives `x = Γ(X)_1 (mod n)`.
    /// The left edge is where the syzygy of `M` runs out of length: without
    /// it the region would claim extensions whose connecting map factors
    /// through the projective cover. For projective `M` the parallelogram is
    /// empty. Equivalent to `ext1_dim(M, X) > 0`; requires `k <= n`.
    pub fn ext_region_contains(&self, m: Indec, x: Indec) -> Result<bool, ModuleError> {
        self.require_k_at_most_n()?;
        let pm = self.gamma(m);
        let px = self.gamma(x);
        let (a, b) = (pm.a, pm.b as i64);
        let k = self.k() as i64;
        let y = px.b as i64;
        let lo = (a + b - k + 1).max(a - 1 - y);
        let hi = (a - 1).min(a + b - 1 - y);
        Ok(residue_in_interval(lo, hi, px.a, self.n() as i64))
    }
}
