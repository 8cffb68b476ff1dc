//! Nakayama algebras presented by their Kupisch series.
//!
//! An algebra is either `cyclic` (quiver is an oriented cycle `1 -> 2 -> ... -> n -> 1`)
//! or `linear` (oriented line `1 -> 2 -> ... -> n`). The Kupisch series
//! `c_1, ..., c_n` lists the lengths of the indecomposable projectives
//! `P_1, ..., P_n`. Vertices are 1-based everywhere.

use crate::modcat::Indec;
use thiserror::Error;

/// Quiver shape of a Nakayama algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Cyclic,
    Linear,
}

/// Errors from parsing or validating an algebra description.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("syntax error: {0}; expected `selfinjective:n=<int>,k=<int>`, `cyclic:<c1>,<c2>,...`, `linear:<c1>,...`, or `hereditary-a:<m>`")]
    Syntax(String),
    #[error("invalid Kupisch series: {0}")]
    Admissibility(String),
    #[error("invalid parameter: {0}")]
    Param(String),
}

/// A connected Nakayama algebra, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NakayamaAlgebra {
    shape: Shape,
    kupisch: Vec<usize>,
}

impl NakayamaAlgebra {
    /// Cyclic Nakayama algebra with the given Kupisch series.
    pub fn cyclic(kupisch: Vec<usize>) -> Result<Self, AlgebraError> {
        let alg = NakayamaAlgebra { shape: Shape::Cyclic, kupisch };
        alg.validate()?;
        Ok(alg)
    }

    /// Linear Nakayama algebra with the given Kupisch series.
    pub fn linear(kupisch: Vec<usize>) -> Result<Self, AlgebraError> {
        let alg = NakayamaAlgebra { shape: Shape::Linear, kupisch };
        alg.validate()?;
        Ok(alg)
    }

    /// Selfinjective cyclic algebra on `n` vertices, all projectives of length `k`.
    pub fn selfinjective(n: usize, k: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::Param(format!("selfinjective requires n >= 2, got n = {n}")));
        }
        if k < 2 {
            return Err(AlgebraError::Param(format!("selfinjective requires k >= 2, got k = {k}")));
        }
        Self::cyclic(vec![k; n])
    }

    /// Path algebra of the linearly oriented A_m quiver: Kupisch series `m, m-1, ..., 1`.
    pub fn hereditary_a(m: usize) -> Result<Self, AlgebraError> {
        if m < 1 {
            return Err(AlgebraError::Param("hereditary-a requires m >= 1".into()));
        }
        Self::linear((0..m).map(|i| m - i).collect())
    }

    /// Parse the textual algebra format used by the CLI and JSON fields.
    ///
    /// Grammar: `selfinjective:n=<int>,k=<int>` | `cyclic:<c1>,<c2>,...`
    /// | `linear:<c1>,...` | `hereditary-a:<m>`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let text = text.trim();
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| AlgebraError::Syntax(format!("missing `:` in `{text}`")))?;
        match head {
            "selfinjective" => {
                let mut n: Option<usize> = None;
                let mut k: Option<usize> = None;
                for part in rest.split(',') {
                    let (key, val) = part
                        .split_once('=')
                        .ok_or_else(|| AlgebraError::Syntax(format!("expected `n=<int>,k=<int>`, got `{rest}`")))?;
                    let val: usize = val
                        .trim()
                        .parse()
                        .map_err(|_| AlgebraError::Syntax(format!("`{val}` is not a positive integer")))?;
                    match key.trim() {
                        "n" => n = Some(val),
                        "k" => k = Some(val),
                        other => return Err(AlgebraError::Syntax(format!("unknown parameter `{other}`"))),
                    }
                }
                match (n, k) {
                    (Some(n), Some(k)) => Self::selfinjective(n, k),
                    _ => Err(AlgebraError::Syntax(format!("selfinjective needs both n and k, got `{rest}`"))),
                }
            }
            "cyclic" => Self::cyclic(parse_series(rest)?),
            "linear" => Self::linear(parse_series(rest)?),
            "hereditary-a" => {
                let m: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| AlgebraError::Syntax(format!("`{rest}` is not a positive integer")))?;
                Self::hereditary_a(m)
            }
            other => Err(AlgebraError::Syntax(format!("unknown algebra kind `{other}`"))),
        }
    }

    /// Canonical textual form; `parse(render_spec())` reproduces the algebra.
    pub fn render_spec(&self) -> String {
        let series: Vec<String> = self.kupisch.iter().map(|c| c.to_string()).collect();
        match self.shape {
            Shape::Cyclic => format!("cyclic:{}", series.join(",")),
            Shape::Linear => format!("linear:{}", series.join(",")),
        }
    }

    /// Admissibility rules. Scans indices in order and reports the first failure.
    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.kupisch.len();
        if n == 0 {
            return Err(AlgebraError::Admissibility("empty series".into()));
        }
        let c = &self.kupisch;
        for i in 0..n {
            match self.shape {
                Shape::Cyclic => {
                    if c[i] < 2 {
                        return Err(AlgebraError::Admissibility(format!("c_{} = {} < 2", i + 1, c[i])));
                    }
                }
                Shape::Linear => {
                    if i + 1 == n {
                        if c[i] != 1 {
                            return Err(AlgebraError::Admissibility(format!("c_{} = {} != 1", n, c[i])));
                        }
                    } else if c[i] < 2 {
                        return Err(AlgebraError::Admissibility(format!("c_{} = {} < 2", i + 1, c[i])));
                    }
                    if c[i] > n - i {
                        return Err(AlgebraError::Admissibility(format!(
                            "c_{} = {} > n - i + 1 = {}",
                            i + 1,
                            c[i],
                            n - i
                        )));
                    }
                }
            }
            // drop rule: successive lengths fall by at most one
            if i > 0 && c[i] + 1 < c[i - 1] {
                return Err(AlgebraError::Admissibility(format!(
                    "c_{} = {} < c_{} - 1 = {}",
                    i + 1,
                    c[i],
                    i,
                    c[i - 1] - 1
                )));
            }
        }
        if self.shape == Shape::Cyclic && c[0] + 1 < c[n - 1] {
            return Err(AlgebraError::Admissibility(format!(
                "c_1 = {} < c_{} - 1 = {}",
                c[0],
                n,
                c[n - 1] - 1
            )));
        }
        Ok(())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.kupisch.len()
    }

    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    /// Length of the projective at `vertex` (1-based).
    pub fn projective_len(&self, vertex: usize) -> usize {
        self.kupisch[vertex - 1]
    }

    /// True for cyclic algebras with constant Kupisch series of length >= 2.
    pub fn is_selfinjective(&self) -> bool {
        self.shape == Shape::Cyclic && self.kupisch.iter().all(|&c| c == self.kupisch[0])
    }

    /// The constant projective length for selfinjective algebras.
    pub fn selfinjective_k(&self) -> Option<usize> {
        if self.is_selfinjective() {
            Some(self.kupisch[0])
        } else {
            None
        }
    }

    /// Reduce an integer vertex index into `1..=n` (cyclically).
    pub fn wrap(&self, v: i64) -> usize {
        let n = self.n() as i64;
        let r = ((v - 1).rem_euclid(n)) + 1;
        r as usize
    }

    /// Does the uniserial module `(top, len)` exist over this algebra?
    pub fn contains(&self, m: Indec) -> bool {
        if m.top < 1 || m.top > self.n() || m.len < 1 {
            return false;
        }
        // For linear shape, len <= c_top already forces the interval to fit.
        m.len <= self.projective_len(m.top)
    }

    /// Total number of indecomposables, `sum of c_i`.
    pub fn module_count(&self) -> usize {
        self.kupisch.iter().sum()
    }

    /// All indecomposables `(top, len)`, sorted by `(top, len)`.
    pub fn indecomposables(&self) -> Vec<Indec> {
        let mut out = Vec::with_capacity(self.module_count());
        for top in 1..=self.n() {
            for len in 1..=self.projective_len(top) {
                out.push(Indec { top, len });
            }
        }
        out
    }
}

fn parse_series(text: &str) -> Result<Vec<usize>, AlgebraError> {
    if text.trim().is_empty() {
        return Err(AlgebraError::Syntax("empty Kupisch series".into()));
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| AlgebraError::Syntax(format!("`{p}` is not a positive integer")))
        })
        .collect()
}
