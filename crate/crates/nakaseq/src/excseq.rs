//! Weak and standard exceptional modules, pairs, sequences, and the
//! exhaustive enumerator for maximum size and exact counts.
//!
//! Pair conditions are directional: in a sequence `(M_1, ..., M_s)` every
//! later module `M_j` must satisfy `Hom(M_j, M_i) = 0` and the mode's Ext
//! vanishing against every earlier `M_i`.

use crate::algebra::NakayamaAlgebra;
use crate::homology::{ext1_dim, hom_dim, omega_orbit};
use crate::modcat::Indec;
use fixedbitset::FixedBitSet;
use num::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use thiserror::Error;

/// Which vanishing conditions a sequence must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `End(M) = k`, `Ext^1` vanishing only; higher Ext unrestricted.
    Weak,
    /// `End(M) = k` and `Ext^r` vanishing for every `r >= 1`.
    Standard,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Weak => write!(f, "weak"),
            Mode::Standard => write!(f, "standard"),
        }
    }
}

/// An ordered exceptional sequence together with its mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcSequence {
    pub mode: Mode,
    pub modules: Vec<Indec>,
}

/// `End(M)` one-dimensional and `Ext^1(M, M) = 0`.
pub fn is_weak_exceptional(alg: &NakayamaAlgebra, m: Indec) -> bool {
    hom_dim(alg, m, m) == 1 && ext1_dim(alg, m, m) == 0
}

/// Weak pair `(M, N)` with `M` earlier: both weak exceptional,
/// `Hom(N, M) = 0` and `Ext^1(N, M) = 0`.
pub fn is_weak_pair(alg: &NakayamaAlgebra, m: Indec, n: Indec) -> bool {
    is_weak_exceptional(alg, m)
        && is_weak_exceptional(alg, n)
        && hom_dim(alg, n, m) == 0
        && ext1_dim(alg, n, m) == 0
}

/// Does `Ext^r(M, N)` vanish for every `r >= 1`?
///
/// `Ext^r(M, N) = Ext^1(Ω^(r-1) M, N)` and the syzygy chain of `M` is finite
/// (it reaches zero or cycles), so checking each chain entry covers all `r`.
fn all_ext_vanish(alg: &NakayamaAlgebra, m: Indec, n: Indec) -> bool {
    omega_orbit(alg, m).chain.iter().all(|&x| ext1_dim(alg, x, n) == 0)
}

/// First `r >= 1` with `Ext^r(M, N) != 0`, if any.
fn first_nonvanishing_ext(alg: &NakayamaAlgebra, m: Indec, n: Indec) -> Option<usize> {
    omega_orbit(alg, m)
        .chain
        .iter()
        .position(|&x| ext1_dim(alg, x, n) != 0)
        .map(|t| t + 1)
}

/// `End(M)` one-dimensional and `Ext^r(M, M) = 0` for all `r >= 1`.
pub fn is_standard_exceptional(alg: &NakayamaAlgebra, m: Indec) -> bool {
    hom_dim(alg, m, m) == 1 && all_ext_vanish(alg, m, m)
}

/// Standard pair `(M, N)` with `M` earlier: both standard exceptional,
/// `Hom(N, M) = 0` and `Ext^r(N, M) = 0` for all `r >= 1`.
pub fn is_standard_pair(alg: &NakayamaAlgebra, m: Indec, n: Indec) -> bool {
    is_standard_exceptional(alg, m)
        && is_standard_exceptional(alg, n)
        && hom_dim(alg, n, m) == 0
        && all_ext_vanish(alg, n, m)
}

/// `Hom(M_i, M_j) = 0` for all `i != j`.
pub fn is_orthogonal(alg: &NakayamaAlgebra, modules: &[Indec]) -> bool {
    for (i, &a) in modules.iter().enumerate() {
        for (j, &b) in modules.iter().enumerate() {
            if i != j && hom_dim(alg, a, b) != 0 {
                return false;
            }
        }
    }
    true
}

/// Why a sequence fails validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// The module at position `j` fails the single-module predicate (`i == j`).
    NotExceptional,
    /// `Hom(M_j, M_i) != 0`.
    HomNonzero,
    /// `Ext^r(M_j, M_i) != 0`.
    ExtNonzero { r: usize },
}

/// First violation found, at 0-based positions `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::NotExceptional => {
                write!(f, "module at position {} is not exceptional", self.j + 1)
            }
            ViolationKind::HomNonzero => write!(
                f,
                "Hom from position {} to position {} is nonzero",
                self.j + 1,
                self.i + 1
            ),
            ViolationKind::ExtNonzero { r } => write!(
                f,
                "Ext^{} from position {} to position {} is nonzero",
                r,
                self.j + 1,
                self.i + 1
            ),
        }
    }
}

/// Check every module and every ordered pair `i < j` under the mode's pair
/// predicate. Scans single modules first (position order), then pairs in
/// lexicographic order, and reports the first violation found.
pub fn validate_sequence(
    alg: &NakayamaAlgebra,
    mode: Mode,
    modules: &[Indec],
) -> Result<(), Violation> {
    let exceptional: fn(&NakayamaAlgebra, Indec) -> bool = match mode {
        Mode::Weak => is_weak_exceptional,
        Mode::Standard => is_standard_exceptional,
    };
    for (t, &m) in modules.iter().enumerate() {
        if !exceptional(alg, m) {
            return Err(Violation { i: t, j: t, kind: ViolationKind::NotExceptional });
        }
    }
    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            let (earlier, later) = (modules[i], modules[j]);
            if hom_dim(alg, later, earlier) != 0 {
                return Err(Violation { i, j, kind: ViolationKind::HomNonzero });
            }
            let bad_r = match mode {
                Mode::Weak => (ext1_dim(alg, later, earlier) != 0).then_some(1),
                Mode::Standard => first_nonvanishing_ext(alg, later, earlier),
            };
            if let Some(r) = bad_r {
                return Err(Violation { i, j, kind: ViolationKind::ExtNonzero { r } });
            }
        }
    }
    Ok(())
}

/// Options for [`enumerate`].
#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Collect witness sequences (of the counted size).
    pub materialize: bool,
    /// Count sequences of exactly this size instead of the maximum size.
    pub fixed_size: Option<usize>,
    /// Keep at most this many witnesses (in lexicographic order).
    pub witness_cap: Option<usize>,
    /// Worker count; the search splits by first module across workers.
    pub threads: usize,
    /// Abort after visiting this many search nodes.
    pub node_budget: Option<u64>,
    /// Count only sequences starting in a socle-`n` representative and scale
    /// by the rotation order `n` (selfinjective algebras, counting only).
    /// Totals are identical to the full search.
    pub sigma_symmetry: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            materialize: false,
            fixed_size: None,
            witness_cap: None,
            threads: 1,
            node_budget: None,
            sigma_symmetry: false,
        }
    }
}

/// Exact enumeration outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumResult {
    /// Maximum size of a sequence, proved by exhaustion.
    pub max_size: usize,
    /// Number of ordered sequences of the counted size.
    pub count: BigUint,
    /// Witnesses in lexicographic order by module keys, when materialized.
    pub sequences: Option<Vec<ExcSequence>>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("search node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
}

struct SearchTables {
    universe: Vec<Indec>,
    /// `allowed_after[i]` holds `j` iff `universe[j]` may appear anywhere
    /// after `universe[i]`. The diagonal is always empty (`Hom(M, M) != 0`),
    /// which is what forces distinctness.
    allowed_after: Vec<FixedBitSet>,
}

fn build_tables(alg: &NakayamaAlgebra, mode: Mode) -> SearchTables {
    let universe: Vec<Indec> = alg
        .indecomposables()
        .into_iter()
        .filter(|&m| match mode {
            Mode::Weak => is_weak_exceptional(alg, m),
            Mode::Standard => is_standard_exceptional(alg, m),
        })
        .collect();
    let size = universe.len();
    // For standard mode, each later module's whole syzygy chain must be
    // Ext^1-orthogonal to the earlier one; precompute the chains once.
    let chains: Vec<Vec<Indec>> = match mode {
        Mode::Weak => Vec::new(),
        Mode::Standard => universe.iter().map(|&m| omega_orbit(alg, m).chain).collect(),
    };
    let mut allowed_after = Vec::with_capacity(size);
    for (i, &earlier) in universe.iter().enumerate() {
        let mut row = FixedBitSet::with_capacity(size);
        for (j, &later) in universe.iter().enumerate() {
            if hom_dim(alg, later, earlier) != 0 {
                continue;
            }
            let ext_ok = match mode {
                Mode::Weak => ext1_dim(alg, later, earlier) == 0,
                Mode::Standard => chains[j].iter().all(|&x| ext1_dim(alg, x, earlier) == 0),
            };
            if ext_ok {
                row.insert(j);
            }
        }
        debug_assert!(!row.contains(i), "self-pair must be excluded");
        allowed_after.push(row);
    }
    SearchTables { universe, allowed_after }
}

struct SearchCtl {
    visited: AtomicU64,
    budget: Option<u64>,
    aborted: AtomicBool,
}

impl SearchCtl {
    fn new(budget: Option<u64>) -> Self {
        SearchCtl { visited: AtomicU64::new(0), budget, aborted: AtomicBool::new(false) }
    }

    fn tick(&self) -> Result<(), EnumError> {
        if let Some(budget) = self.budget {
            if self.aborted.load(Ordering::Relaxed) {
                return Err(EnumError::BudgetExceeded { budget });
            }
            if self.visited.fetch_add(1, Ordering::Relaxed) + 1 > budget {
                self.aborted.store(true, Ordering::Relaxed);
                return Err(EnumError::BudgetExceeded { budget });
            }
        }
        Ok(())
    }
}

fn dfs_max(
    tables: &SearchTables,
    depth: usize,
    cand: &FixedBitSet,
    best: &AtomicUsize,
    ctl: &SearchCtl,
) -> Result<(), EnumError> {
    ctl.tick()?;
    best.fetch_max(depth, Ordering::Relaxed);
    if depth + cand.count_ones(..) <= best.load(Ordering::Relaxed) {
        return Ok(());
    }
    for j in cand.ones() {
        let mut next = cand.clone();
        next.intersect_with(&tables.allowed_after[j]);
        dfs_max(tables, depth + 1, &next, best, ctl)?;
    }
    Ok(())
}

#[derive(Default)]
struct FirstOutcome {
    count: u64,
    witnesses: Vec<Vec<u32>>,
}

#[allow(clippy::too_many_arguments)]
fn dfs_count(
    tables: &SearchTables,
    prefix: &mut Vec<u32>,
    cand: &FixedBitSet,
    target: usize,
    materialize: bool,
    cap: usize,
    out: &mut FirstOutcome,
    ctl: &SearchCtl,
) -> Result<(), EnumError> {
    ctl.tick()?;
    if prefix.len() == target {
        out.count = out.count.checked_add(1).expect("per-branch sequence count overflow");
        if materialize && out.witnesses.len() < cap {
            out.witnesses.push(prefix.clone());
        }
        return Ok(());
    }
    if prefix.len() + cand.count_ones(..) < target {
        return Ok(());
    }
    for j in cand.ones() {
        prefix.push(j as u32);
        let mut next = cand.clone();
        next.intersect_with(&tables.allowed_after[j]);
        dfs_count(tables, prefix, &next, target, materialize, cap, out, ctl)?;
        prefix.pop();
    }
    Ok(())
}

/// Run a per-first-module job over `firsts` on `threads` workers and return
/// the outcomes in `firsts` order, independent of scheduling.
fn run_split<T: Send>(
    firsts: &[usize],
    threads: usize,
    job: impl Fn(usize) -> Result<T, EnumError> + Sync,
) -> Result<Vec<T>, EnumError> {
    let workers = threads.max(1).min(firsts.len().max(1));
    if workers <= 1 {
        return firsts.iter().map(|&i| job(i)).collect();
    }
    let job = &job;
    let buckets: Vec<Vec<(usize, Result<T, EnumError>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    firsts
                        .iter()
                        .enumerate()
                        .filter(|(pos, _)| pos % workers == w)
                        .map(|(pos, &first)| (pos, job(first)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    // merge by position so the outcome order is schedule-independent
    let mut slots: Vec<Option<Result<T, EnumError>>> = Vec::new();
    slots.resize_with(firsts.len(), || None);
    for bucket in buckets {
        for (pos, res) in bucket {
            slots[pos] = Some(res);
        }
    }
    slots.into_iter().map(|s| s.expect("every first index is assigned")).collect()
}

/// Exhaustively enumerate exceptional sequences over `alg`.
///
/// A depth-first search extends prefixes by modules compatible with every
/// chosen earlier module. `max_size` is established first with
/// branch-and-bound, then sequences of the target size (`fixed_size` or the
/// maximum) are counted, optionally materializing witnesses.
pub fn enumerate(
    alg: &NakayamaAlgebra,
    mode: Mode,
    options: &EnumOptions,
) -> Result<EnumResult, EnumError> {
    let tables = build_tables(alg, mode);
    let size = tables.universe.len();
    let ctl = SearchCtl::new(options.node_budget);

    let symmetric = options.sigma_symmetry && !options.materialize && alg.is_selfinjective();
    let firsts: Vec<usize> = if symmetric {
        // one representative per sigma-orbit: socle at vertex n
        (0..size).filter(|&i| alg.socle(tables.universe[i]) == alg.n()).collect()
    } else {
        (0..size).collect()
    };
    let scale = if symmetric { alg.n() as u64 } else { 1 };

    // Pass 1: maximum size by branch and bound.
    let best = AtomicUsize::new(0);
    if size > 0 {
        let outcomes = run_split(&firsts, options.threads, |i| {
            dfs_max(&tables, 1, &tables.allowed_after[i], &best, &ctl)
        })?;
        drop(outcomes);
    }
    let max_size = if size == 0 { 0 } else { best.load(Ordering::Relaxed) };

    // Pass 2: count (and optionally collect) sequences of the target size.
    let target = options.fixed_size.unwrap_or(max_size);
    let cap = options.witness_cap.unwrap_or(usize::MAX);
    let mut count = BigUint::from(0u32);
    let mut witnesses: Vec<ExcSequence> = Vec::new();
    if target == 0 {
        // the empty sequence
        count += 1u32;
        if options.materialize && cap > 0 {
            witnesses.push(ExcSequence { mode, modules: Vec::new() });
        }
    } else {
        let outcomes = run_split(&firsts, options.threads, |i| {
            let mut out = FirstOutcome::default();
            let mut prefix = vec![i as u32];
            dfs_count(
                &tables,
                &mut prefix,
                &tables.allowed_after[i],
                target,
                options.materialize,
                cap,
                &mut out,
                &ctl,
            )?;
            Ok(out)
        })?;
        for out in outcomes {
            count += BigUint::from(out.count) * scale;
            for w in out.witnesses {
                if witnesses.len() >= cap {
                    break;
                }
                witnesses.push(ExcSequence {
                    mode,
                    modules: w.iter().map(|&j| tables.universe[j as usize]).collect(),
                });
            }
        }
    }

    Ok(EnumResult {
        max_size,
        count,
        sequences: options.materialize.then_some(witnesses),
    })
}

/// The exceptional modules of the given mode, sorted by `(top, len)`.
pub fn exceptional_modules(alg: &NakayamaAlgebra, mode: Mode) -> Vec<Indec> {
    build_tables(alg, mode).universe
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> NakayamaAlgebra {
        NakayamaAlgebra::parse(s).unwrap()
    }

    fn seq(pairs: &[(usize, usize)]) -> Vec<Indec> {
        pairs.iter().map(|&(t, l)| Indec::new(t, l)).collect()
    }

    #[test]
    fn weak_exceptional_examples() {
        let l23 = alg("selfinjective:n=3,k=2");
        assert!(is_weak_exceptional(&l23, Indec::new(3, 1)));
        let c = alg("cyclic:3,3,2");
        for i in 1..=3 {
            let p = Indec::new(i, c.projective_len(i));
            assert!(is_weak_exceptional(&c, p));
        }
        assert!(is_weak_exceptional(&c, Indec::new(1, 1)));
        assert!(!is_standard_exceptional(&c, Indec::new(1, 1)));
    }

    #[test]
    fn weak_pair_examples() {
        let c = alg("cyclic:3,3,2");
        assert!(is_weak_pair(&c, Indec::new(2, 1), Indec::new(1, 2)));
        let lnn = alg("selfinjective:n=4,k=4");
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    assert!(!is_weak_pair(&lnn, Indec::new(i, 4), Indec::new(j, 4)));
                }
            }
        }
        assert!(!is_weak_pair(&c, Indec::new(2, 1), Indec::new(2, 1)));
    }

    #[test]
    fn standard_set_over_cyclic_332() {
        let c = alg("cyclic:3,3,2");
        let expected_out = [Indec::new(1, 1), Indec::new(2, 2)];
        for m in c.indecomposables() {
            let standard = is_standard_exceptional(&c, m);
            assert_eq!(standard, !expected_out.contains(&m), "module {m}");
        }
    }

    #[test]
    fn selfinjective_nonprojectives_are_never_standard() {
        let a = alg("selfinjective:n=4,k=3");
        for m in a.indecomposables() {
            if !a.is_projective(m) {
                assert!(!is_standard_exceptional(&a, m), "module {m}");
            }
        }
    }

    #[test]
    fn validate_weak_sequences() {
        let l23 = alg("selfinjective:n=3,k=2");
        let good = seq(&[(3, 1), (2, 2), (1, 2), (1, 1)]);
        assert!(validate_sequence(&l23, Mode::Weak, &good).is_ok());

        let l24 = alg("selfinjective:n=4,k=2");
        let bad = seq(&[(4, 1), (3, 2), (2, 2), (2, 1), (1, 1)]);
        let violation = validate_sequence(&l24, Mode::Weak, &bad).unwrap_err();
        assert_eq!((violation.i, violation.j), (3, 4));
        assert_eq!(violation.kind, ViolationKind::ExtNonzero { r: 1 });

        let singleton = seq(&[(3, 1)]);
        assert!(validate_sequence(&l23, Mode::Weak, &singleton).is_ok());
    }

    #[test]
    fn validate_reports_non_exceptional_member() {
        let c = alg("cyclic:3,3,2");
        let v = validate_sequence(&c, Mode::Standard, &seq(&[(2, 1), (1, 1)])).unwrap_err();
        assert_eq!((v.i, v.j), (1, 1));
        assert_eq!(v.kind, ViolationKind::NotExceptional);
    }

    #[test]
    fn orthogonality_examples() {
        let l23 = alg("selfinjective:n=3,k=2");
        assert!(!is_orthogonal(&l23, &seq(&[(3, 1), (2, 2), (1, 2), (1, 1)])));
        let lin = alg("linear:2,2,1");
        assert!(is_orthogonal(&lin, &seq(&[(1, 1), (2, 1), (3, 1)])));
        assert!(is_orthogonal(&lin, &seq(&[(1, 2)])));
    }

    #[test]
    fn enumerate_smallest_selfinjective() {
        let a = alg("selfinjective:n=2,k=2");
        let opts = EnumOptions { materialize: true, ..Default::default() };
        let res = enumerate(&a, Mode::Weak, &opts).unwrap();
        assert_eq!(res.max_size, 2);
        assert_eq!(res.count, BigUint::from(4u32));
        let got = res.sequences.unwrap();
        let expect = vec![
            seq(&[(1, 1), (2, 2)]),
            seq(&[(1, 2), (1, 1)]),
            seq(&[(2, 1), (1, 2)]),
            seq(&[(2, 2), (2, 1)]),
        ];
        let got_mods: Vec<Vec<Indec>> = got.into_iter().map(|s| s.modules).collect();
        assert_eq!(got_mods, expect);
    }

    #[test]
    fn enumerate_standard_over_smallest_rad_square_zero() {
        let a = alg("linear:2,1");
        let res = enumerate(&a, Mode::Standard, &EnumOptions::default()).unwrap();
        assert_eq!(res.max_size, 2);
        assert_eq!(res.count, BigUint::from(3u32));
    }

    #[test]
    fn enumerate_witnesses_validate() {
        for (spec, mode) in [
            ("selfinjective:n=3,k=3", Mode::Weak),
            ("cyclic:3,3,2", Mode::Standard),
            ("hereditary-a:3", Mode::Standard),
        ] {
            let a = alg(spec);
            let opts = EnumOptions { materialize: true, ..Default::default() };
            let res = enumerate(&a, mode, &opts).unwrap();
            let witnesses = res.sequences.unwrap();
            assert_eq!(BigUint::from(witnesses.len()), res.count);
            for w in &witnesses {
                assert!(validate_sequence(&a, mode, &w.modules).is_ok());
                // prefix closure
                assert!(validate_sequence(&a, mode, &w.modules[..w.modules.len() - 1]).is_ok());
                let mut dedup = w.modules.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), w.modules.len(), "repeated module in witness");
            }
        }
    }

    #[test]
    fn enumerate_beyond_max_finds_nothing() {
        let a = alg("selfinjective:n=3,k=3");
        let base = enumerate(&a, Mode::Weak, &EnumOptions::default()).unwrap();
        let opts = EnumOptions { fixed_size: Some(base.max_size + 1), ..Default::default() };
        let res = enumerate(&a, Mode::Weak, &opts).unwrap();
        assert_eq!(res.count, BigUint::from(0u32));
        assert_eq!(res.max_size, base.max_size);
    }

    #[test]
    fn enumerate_fixed_size_counts_prefixes_too() {
        let a = alg("selfinjective:n=2,k=2");
        let opts = EnumOptions { fixed_size: Some(1), ..Default::default() };
        let res = enumerate(&a, Mode::Weak, &opts).unwrap();
        // every module is weak exceptional here
        assert_eq!(res.count, BigUint::from(4u32));
    }

    #[test]
    fn sigma_symmetry_reproduces_totals() {
        for spec in ["selfinjective:n=4,k=2", "selfinjective:n=3,k=3"] {
            let a = alg(spec);
            let full = enumerate(&a, Mode::Weak, &EnumOptions::default()).unwrap();
            let opts = EnumOptions { sigma_symmetry: true, ..Default::default() };
            let sym = enumerate(&a, Mode::Weak, &opts).unwrap();
            assert_eq!(full.max_size, sym.max_size, "{spec}");
            assert_eq!(full.count, sym.count, "{spec}");
        }
    }

    #[test]
    fn node_budget_is_reported() {
        let a = alg("selfinjective:n=4,k=4");
        let opts = EnumOptions { node_budget: Some(10), ..Default::default() };
        let err = enumerate(&a, Mode::Weak, &opts).unwrap_err();
        assert_eq!(err, EnumError::BudgetExceeded { budget: 10 });
    }

    #[test]
    fn witness_cap_truncates_in_order() {
        let a = alg("selfinjective:n=2,k=2");
        let opts =
            EnumOptions { materialize: true, witness_cap: Some(2), ..Default::default() };
        let res = enumerate(&a, Mode::Weak, &opts).unwrap();
        assert_eq!(res.count, BigUint::from(4u32));
        let got = res.sequences.unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].modules, seq(&[(1, 1), (2, 2)]));
        assert_eq!(got[1].modules, seq(&[(1, 2), (1, 1)]));
    }
}
