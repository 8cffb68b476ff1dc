//! Indecomposable uniserial modules and the strip-lattice picture of the
//! AR quiver for selfinjective algebras.
//!
//! A module is keyed by `(top, len)`; its composition series reads
//! `top, top+1, ..., top+len-1` from top to socle (cyclically for cyclic
//! algebras). The zero module is never an `Indec`; operations that can
//! produce it return `Option<Indec>`.

use crate::algebra::NakayamaAlgebra;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// An indecomposable uniserial module, keyed by top vertex and length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Indec {
    pub top: usize,
    pub len: usize,
}

impl Indec {
    pub fn new(top: usize, len: usize) -> Self {
        Indec { top, len }
    }

    /// Parse the CLI literal `top,len`, e.g. `2,4`.
    pub fn parse_literal(text: &str) -> Result<Self, ModuleError> {
        let (t, l) = text
            .split_once(',')
            .ok_or_else(|| ModuleError::Literal(text.to_string()))?;
        let top = t.trim().parse().map_err(|_| ModuleError::Literal(text.to_string()))?;
        let len = l.trim().parse().map_err(|_| ModuleError::Literal(text.to_string()))?;
        Ok(Indec { top, len })
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.top, self.len)
    }
}

/// A point of the universal-cover lattice: `a` is unbounded, `0 <= b <= k-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub a: i64,
    pub b: usize,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("module {0} does not exist over {1}")]
    Nonexistent(Indec, String),
    #[error("operation requires a selfinjective algebra, got {0}")]
    NotSelfinjective(String),
    #[error("lattice height b = {b} out of range 0..={max}")]
    LatticeHeight { b: usize, max: usize },
    #[error("region predicates require k <= n, got k = {k}, n = {n}")]
    KExceedsN { k: usize, n: usize },
    #[error("`{0}` is not a module literal `top,len`")]
    Literal(String),
}

/// Structural description of a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleInfo {
    pub top: usize,
    pub socle: usize,
    /// `None` encodes the zero module (when `len == 1`).
    pub radical: Option<Indec>,
    /// Defined only over selfinjective algebras.
    pub injective_envelope: Option<Indec>,
    pub is_projective: bool,
}

impl NakayamaAlgebra {
    fn require(&self, m: Indec) -> Result<(), ModuleError> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(ModuleError::Nonexistent(m, self.render_spec()))
        }
    }

    /// Index of the socle: `top + len - 1`, wrapped for cyclic shape.
    pub fn socle(&self, m: Indec) -> usize {
        self.wrap(m.top as i64 + m.len as i64 - 1)
    }

    pub fn is_projective(&self, m: Indec) -> bool {
        m.len == self.projective_len(m.top)
    }

    /// Top, socle, radical, injective envelope (selfinjective only), projectivity.
    pub fn describe(&self, m: Indec) -> Result<ModuleInfo, ModuleError> {
        self.require(m)?;
        let radical = if m.len >= 2 {
            Some(Indec::new(self.wrap(m.top as i64 + 1), m.len - 1))
        } else {
            None
        };
        let injective_envelope = self.selfinjective_k().map(|k| {
            let socle = self.socle(m) as i64;
            Indec::new(self.wrap(socle - k as i64 + 1), k)
        });
        Ok(ModuleInfo {
            top: m.top,
            socle: self.socle(m),
            radical,
            injective_envelope,
            is_projective: self.is_projective(m),
        })
    }

    /// Kernel of the projective cover `P_top ->> M`: the bottom segment
    /// `(top + len, c_top - len)` of `P_top`, or `None` when `M` is projective.
    pub fn syzygy(&self, m: Indec) -> Option<Indec> {
        debug_assert!(self.contains(m), "syzygy of nonexistent module {m}");
        let c = self.projective_len(m.top);
        if m.len == c {
            return None;
        }
        Some(Indec::new(self.wrap(m.top as i64 + m.len as i64), c - m.len))
    }

    /// View this algebra as selfinjective, enabling the lattice maps.
    pub fn as_selfinjective(&self) -> Option<Selfinjective<'_>> {
        self.selfinjective_k().map(|k| Selfinjective { alg: self, k })
    }

    /// Like [`NakayamaAlgebra::as_selfinjective`] but with a descriptive error.
    pub fn try_selfinjective(&self) -> Result<Selfinjective<'_>, ModuleError> {
        self.as_selfinjective()
            .ok_or_else(|| ModuleError::NotSelfinjective(self.render_spec()))
    }
}

/// A selfinjective algebra `Λ^k_n`; carrier of the lattice maps.
#[derive(Debug, Clone, Copy)]
pub struct Selfinjective<'a> {
    alg: &'a NakayamaAlgebra,
    k: usize,
}

impl<'a> Selfinjective<'a> {
    pub fn algebra(&self) -> &'a NakayamaAlgebra {
        self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Lattice coordinates `(n - isoc(M), len(M) - 1)` in the fundamental domain.
    pub fn gamma(&self, m: Indec) -> LatticePoint {
        let socle = self.alg.socle(m);
        LatticePoint { a: (self.n() - socle) as i64, b: m.len - 1 }
    }

    /// Module of length `b+1` whose socle index is `n - (a mod n)`
    /// (socle `n` when `a` is a multiple of `n`).
    pub fn gamma_inv(&self, a: i64, b: usize) -> Result<Indec, ModuleError> {
        if b > self.k - 1 {
            return Err(ModuleError::LatticeHeight { b, max: self.k - 1 });
        }
        let n = self.n() as i64;
        let socle = n - a.rem_euclid(n);
        Ok(Indec::new(self.alg.wrap(socle - b as i64), b + 1))
    }

    /// Translation by one horizontal lattice unit: the socle index drops by
    /// one (mod n) and the length is preserved.
    pub fn sigma(&self, m: Indec) -> Indec {
        let p = self.gamma(m);
        self.gamma_inv(p.a + 1, p.b).expect("b stays in range under sigma")
    }

    /// `sigma` applied `j` times.
    pub fn sigma_pow(&self, m: Indec, j: usize) -> Indec {
        let p = self.gamma(m);
        self.gamma_inv(p.a + j as i64, p.b).expect("b stays in range under sigma")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> NakayamaAlgebra {
        NakayamaAlgebra::parse(s).unwrap()
    }

    #[test]
    fn describe_projective_over_l44() {
        let a = alg("selfinjective:n=4,k=4");
        let info = a.describe(Indec::new(2, 4)).unwrap();
        assert_eq!(info.socle, 1);
        assert_eq!(info.radical, Some(Indec::new(3, 3)));
        assert!(info.is_projective);
        assert_eq!(info.injective_envelope, Some(Indec::new(2, 4)));
    }

    #[test]
    fn describe_simple_over_l24() {
        let a = alg("selfinjective:n=4,k=2");
        let info = a.describe(Indec::new(1, 1)).unwrap();
        assert_eq!(info.socle, 1);
        assert_eq!(info.radical, None);
        assert_eq!(info.injective_envelope, Some(Indec::new(4, 2)));
        assert!(!info.is_projective);
    }

    #[test]
    fn describe_socle_wraps() {
        let a = alg("cyclic:3,3,2");
        let info = a.describe(Indec::new(3, 2)).unwrap();
        assert_eq!(info.socle, 1);
        assert!(info.is_projective);
        assert_eq!(info.injective_envelope, None);
    }

    #[test]
    fn describe_rejects_nonexistent() {
        let a = alg("cyclic:3,3,2");
        assert!(matches!(a.describe(Indec::new(3, 3)), Err(ModuleError::Nonexistent(..))));
        assert!(matches!(a.describe(Indec::new(4, 1)), Err(ModuleError::Nonexistent(..))));
    }

    #[test]
    fn syzygy_of_simple() {
        let a = alg("selfinjective:n=4,k=2");
        assert_eq!(a.syzygy(Indec::new(1, 1)), Some(Indec::new(2, 1)));
        let b = alg("cyclic:3,3,2");
        assert_eq!(b.syzygy(Indec::new(1, 1)), Some(Indec::new(2, 2)));
    }

    #[test]
    fn syzygy_of_projective_is_zero() {
        for s in ["selfinjective:n=4,k=2", "cyclic:3,3,2", "hereditary-a:3"] {
            let a = alg(s);
            for m in a.indecomposables() {
                if a.is_projective(m) {
                    assert_eq!(a.syzygy(m), None);
                } else {
                    let om = a.syzygy(m).unwrap();
                    assert!(a.contains(om), "syzygy {om} missing over {s}");
                    assert_eq!(om.len, a.projective_len(m.top) - m.len);
                }
            }
        }
    }

    #[test]
    fn syzygy_bijection_on_nonprojectives_selfinjective() {
        let a = alg("selfinjective:n=5,k=3");
        let nonproj: Vec<Indec> =
            a.indecomposables().into_iter().filter(|&m| !a.is_projective(m)).collect();
        let mut images: Vec<Indec> = nonproj.iter().map(|&m| a.syzygy(m).unwrap()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), nonproj.len());
        assert!(images.iter().all(|m| !a.is_projective(*m)));
    }

    #[test]
    fn gamma_of_socle_simple_is_origin() {
        let a = alg("selfinjective:n=4,k=2");
        let si = a.as_selfinjective().unwrap();
        assert_eq!(si.gamma(Indec::new(4, 1)), LatticePoint { a: 0, b: 0 });
    }

    #[test]
    fn gamma_of_first_projective_over_lnn() {
        let a = alg("selfinjective:n=4,k=4");
        let si = a.as_selfinjective().unwrap();
        // P_1 has socle n and length n
        assert_eq!(si.gamma(Indec::new(1, 4)), LatticePoint { a: 0, b: 3 });
    }

    #[test]
    fn gamma_inv_reduces_mod_n() {
        let a = alg("selfinjective:n=4,k=2");
        let si = a.as_selfinjective().unwrap();
        assert_eq!(si.gamma_inv(4, 0).unwrap(), Indec::new(4, 1));
        assert_eq!(si.gamma_inv(-1, 1).unwrap(), si.gamma_inv(3, 1).unwrap());
    }

    #[test]
    fn gamma_inv_rejects_tall_points() {
        let a = alg("selfinjective:n=4,k=2");
        let si = a.as_selfinjective().unwrap();
        assert!(matches!(si.gamma_inv(0, 2), Err(ModuleError::LatticeHeight { b: 2, max: 1 })));
    }

    #[test]
    fn gamma_round_trip() {
        let a = alg("selfinjective:n=5,k=3");
        let si = a.as_selfinjective().unwrap();
        for m in a.indecomposables() {
            let p = si.gamma(m);
            assert!((0..a.n() as i64).contains(&p.a));
            assert_eq!(si.gamma_inv(p.a, p.b).unwrap(), m);
        }
    }

    #[test]
    fn sigma_shifts_socle_down() {
        let a = alg("selfinjective:n=4,k=2");
        let si = a.as_selfinjective().unwrap();
        assert_eq!(si.sigma(Indec::new(2, 1)), Indec::new(1, 1));
        // socle of sigma(M) is socle(M) - 1 for every module
        for m in a.indecomposables() {
            let s = si.sigma(m);
            assert_eq!(a.socle(s), a.wrap(a.socle(m) as i64 - 1));
            assert_eq!(s.len, m.len);
        }
    }

    #[test]
    fn sigma_permutes_projectives_transitively() {
        let a = alg("selfinjective:n=4,k=4");
        let si = a.as_selfinjective().unwrap();
        let mut seen = vec![Indec::new(1, 4)];
        let mut cur = seen[0];
        for _ in 1..4 {
            cur = si.sigma(cur);
            assert!(a.is_projective(cur));
            seen.push(cur);
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn sigma_has_order_n() {
        let a = alg("selfinjective:n=5,k=3");
        let si = a.as_selfinjective().unwrap();
        for m in a.indecomposables() {
            let mut cur = m;
            for step in 1..=5 {
                cur = si.sigma(cur);
                if step < 5 {
                    assert_ne!(cur, m);
                }
            }
            assert_eq!(cur, m);
            assert_eq!(si.sigma_pow(m, 5), m);
        }
    }

    #[test]
    fn radical_is_one_step_below_gamma() {
        let a = alg("selfinjective:n=4,k=3");
        let si = a.as_selfinjective().unwrap();
        for i in 1..=4 {
            let p = Indec::new(i, 3);
            let rad = a.describe(p).unwrap().radical.unwrap();
            let gp = si.gamma(p);
            assert_eq!(si.gamma_inv(gp.a, gp.b - 1).unwrap(), rad);
        }
    }

    #[test]
    fn module_literal_round_trip() {
        let m = Indec::parse_literal("2,4").unwrap();
        assert_eq!(m, Indec::new(2, 4));
        assert_eq!(m.to_string(), "2,4");
        assert!(Indec::parse_literal("2;4").is_err());
        assert!(Indec::parse_literal("x,4").is_err());
    }
}
