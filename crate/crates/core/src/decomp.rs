//! Interval generators `T_[i,j]`, decompositions of dominant group
//! elements with their statistics, the coefficient polynomials C and C',
//! and truncated generating series.
//!
//! A dominant element factors over the column generators `T_[k]` with
//! multiplicities `m_k = lambda_k - lambda_{k+1}`; a decomposition into
//! interval generators is any multiset of intervals whose column coverage
//! reproduces that profile. Enumeration backtracks over columns left to
//! right, deciding at each column how many open intervals close and how
//! many new ones open, so the cost is bounded by the number of
//! decompositions rather than by brute-force subsets.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{rat, ParamPoly};
use crate::graph::{Configuration, Graph, GraphError};
use crate::group::DominantElement;
use crate::tableaux::partitions_of;

/// Variable set of the C and C' polynomials.
pub const ZQ_VARS: &[&str] = &["z1", "z2", "z3", "q"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("enumeration would exceed the configured cap of {0}")]
    CapExceeded(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The generator `T_[i,j] = T_[i] T_[i+1] ... T_[j-1]`, `1 <= i < j <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntervalGenerator {
    pub i: usize,
    pub j: usize,
}

impl IntervalGenerator {
    pub fn new(i: usize, j: usize) -> Option<IntervalGenerator> {
        if i >= 1 && i < j {
            Some(IntervalGenerator { i, j })
        } else {
            None
        }
    }

    /// Columns covered: `i..=j-1`.
    pub fn columns(&self) -> impl Iterator<Item = usize> {
        self.i..self.j
    }
}

impl std::fmt::Display for IntervalGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T[{},{}]", self.i, self.j)
    }
}

/// A multiset of interval generators with positive multiplicities,
/// stored sorted by interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    factors: Vec<(IntervalGenerator, u64)>,
}

impl Decomposition {
    pub fn new(mut factors: Vec<(IntervalGenerator, u64)>) -> Decomposition {
        factors.retain(|&(_, a)| a > 0);
        factors.sort();
        Decomposition { factors }
    }

    pub fn empty() -> Decomposition {
        Decomposition {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[(IntervalGenerator, u64)] {
        &self.factors
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a == 1)
    }

    /// Column coverage profile over columns `1..n-1`.
    pub fn column_profile(&self, num_columns: usize) -> Vec<u64> {
        let mut m = vec![0u64; num_columns];
        for &(iv, a) in &self.factors {
            for c in iv.columns() {
                m[c - 1] += a;
            }
        }
        m
    }

    /// Apply all factors (each `T_[i,j]` expanded into elementary
    /// topplings) to a configuration.
    pub fn apply(&self, g: &Graph, c: &Configuration) -> Result<Configuration, GraphError> {
        // T_[k] = T_1 T_2 ... T_k, so T_[i,j] fires vertex v once for
        // every covered column k >= v.
        let n = g.n();
        let mut exps = vec![0i64; n];
        for &(iv, a) in &self.factors {
            for k in iv.columns() {
                for item in exps.iter_mut().take(k) {
                    *item += a as i64;
                }
            }
        }
        g.apply_exponents(c, &exps)
    }

    pub fn display_string(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(iv, a)| {
                if a == 1 {
                    iv.to_string()
                } else {
                    format!("{iv}^{a}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Decomposition statistics: lengths over the three generator families
/// and the number of distinct interval factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompStats {
    pub l1: u64,
    pub l2: u64,
    pub l3: u64,
    pub d: u64,
}

fn binom2(x: u64) -> u64 {
    x * (x - 1) / 2
}

/// Statistics of a decomposition: `l1` and `l2` from the displayed
/// binomial formulas, `l3` the number of factors with multiplicity,
/// `d` the number of distinct factors.
pub fn stats(dec: &Decomposition) -> DecompStats {
    let mut s = DecompStats {
        l1: 0,
        l2: 0,
        l3: 0,
        d: 0,
    };
    for &(iv, a) in dec.factors() {
        s.l1 += a * (binom2(iv.j as u64) - binom2(iv.i as u64));
        s.l2 += a * (iv.j - iv.i) as u64;
        s.l3 += a;
        s.d += 1;
    }
    s
}

/// Multiplicity of each column generator `T_[k]` in the unique column
/// factorization: `m_k = lambda_k - lambda_{k+1}`, which counts the
/// occurrences of `k` among the conjugate parts.
pub fn column_multiplicities(lambda: &DominantElement) -> Vec<u64> {
    let l = lambda.lambda();
    (0..l.len().saturating_sub(1))
        .map(|k| l[k] - l[k + 1])
        .collect()
}

/// One minimal-length decomposition, produced by greedily grouping
/// maximal runs of consecutive columns.
pub fn reduced_interval_decomposition(lambda: &DominantElement) -> Decomposition {
    let mut m = column_multiplicities(lambda);
    let mut factors = Vec::new();
    loop {
        let start = match m.iter().position(|&x| x > 0) {
            Some(s) => s,
            None => break,
        };
        let mut end = start;
        while end + 1 < m.len() && m[end + 1] > 0 {
            end += 1;
        }
        let mult = m[start..=end].iter().copied().min().unwrap();
        for item in m[start..=end].iter_mut() {
            *item -= mult;
        }
        // columns start+1..=end+1 covered => generator [start+1, end+2)
        factors.push((
            IntervalGenerator::new(start + 1, end + 2).unwrap(),
            mult,
        ));
    }
    Decomposition::new(factors)
}

struct Enumerator {
    num_columns: usize,
    square_free_only: bool,
    cap: Option<u64>,
    out: Vec<Decomposition>,
    count: u128,
    collect: bool,
}

impl Enumerator {
    /// Backtrack over columns: at column `col` (one-based), `open[s]`
    /// counts interval instances opened at column `s+1` and not yet
    /// closed. Each distinct multiset of intervals is produced exactly
    /// once because an interval `[i,j)` is determined by the column where
    /// its instances open and the column boundary where they close.
    fn run(
        &mut self,
        m: &[u64],
        col: usize,
        open: &mut Vec<u64>,
        factors: &mut Vec<(IntervalGenerator, u64)>,
    ) -> Result<(), DecompError> {
        if col > self.num_columns {
            // close every remaining instance at j = n
            let mut fs = factors.clone();
            for (s, &cnt) in open.iter().enumerate() {
                if cnt > 0 {
                    if self.square_free_only && cnt > 1 {
                        return Ok(());
                    }
                    fs.push((
                        IntervalGenerator::new(s + 1, self.num_columns + 1).unwrap(),
                        cnt,
                    ));
                }
            }
            self.count += 1;
            if self.collect {
                if let Some(cap) = self.cap {
                    if self.out.len() as u64 >= cap {
                        return Err(DecompError::CapExceeded(cap));
                    }
                }
                self.out.push(Decomposition::new(fs));
            }
            return Ok(());
        }
        let need = m[col - 1];
        self.close_choices(m, col, 0, open, factors, need)
    }

    /// Recursively choose, for each open start `s`, how many of its
    /// instances close just before `col` (becoming factors `[s+1, col)`).
    fn close_choices(
        &mut self,
        m: &[u64],
        col: usize,
        s: usize,
        open: &mut Vec<u64>,
        factors: &mut Vec<(IntervalGenerator, u64)>,
        need: u64,
    ) -> Result<(), DecompError> {
        if s == open.len() {
            let remaining: u64 = open.iter().sum();
            if remaining > need {
                return Ok(());
            }
            let new = need - remaining;
            open.push(new); // instances opening at this column
            self.run(m, col + 1, open, factors)?;
            open.pop();
            return Ok(());
        }
        let avail = open[s];
        let max_close = if self.square_free_only {
            avail.min(1)
        } else {
            avail
        };
        for c in 0..=max_close {
            if c > 0 {
                factors.push((IntervalGenerator::new(s + 1, col).unwrap(), c));
                open[s] = avail - c;
            }
            self.close_choices(m, col, s + 1, open, factors, need)?;
            if c > 0 {
                factors.pop();
                open[s] = avail;
            }
        }
        Ok(())
    }
}

fn enumerate_impl(
    lambda: &DominantElement,
    square_free_only: bool,
    cap: Option<u64>,
    collect: bool,
) -> Result<(Vec<Decomposition>, u128), DecompError> {
    let m = column_multiplicities(lambda);
    let mut e = Enumerator {
        num_columns: m.len(),
        square_free_only,
        cap,
        out: Vec::new(),
        count: 0,
        collect,
    };
    e.run(&m, 1, &mut Vec::new(), &mut Vec::new())?;
    let mut out = e.out;
    out.sort();
    Ok((out, e.count))
}

/// All decompositions of `T^lambda` into interval generators, each
/// exactly once, sorted lexicographically on the factor list.
pub fn enumerate_decompositions(
    lambda: &DominantElement,
    cap: u64,
) -> Result<Vec<Decomposition>, DecompError> {
    Ok(enumerate_impl(lambda, false, Some(cap), true)?.0)
}

/// Only the square-free decompositions (all multiplicities one).
pub fn enumerate_square_free(
    lambda: &DominantElement,
    cap: u64,
) -> Result<Vec<Decomposition>, DecompError> {
    Ok(enumerate_impl(lambda, true, Some(cap), true)?.0)
}

/// Total number of decompositions `C(lambda)` without materializing them.
pub fn count_decompositions(lambda: &DominantElement) -> u128 {
    enumerate_impl(lambda, false, None, false)
        .expect("counting cannot exceed a cap")
        .1
}

/// The coefficient polynomial `C(z1,z2,z3,q)`: one monomial
/// `z1^l1 z2^l2 z3^l3 q^d` per decomposition. Evaluates to `C(lambda)`
/// at all-ones.
pub fn c_polynomial(lambda: &DominantElement, cap: u64) -> Result<ParamPoly, DecompError> {
    let mut poly = ParamPoly::zero(ZQ_VARS);
    for dec in enumerate_decompositions(lambda, cap)? {
        let s = stats(&dec);
        let term = ParamPoly::monomial(
            ZQ_VARS,
            &[s.l1 as u32, s.l2 as u32, s.l3 as u32, s.d as u32],
            rat(1),
        );
        poly = poly.add(&term).expect("same variable set");
    }
    Ok(poly)
}

/// The inverse-series coefficient polynomial `C'(z1,z2,z3,q)`: the sum
/// of `z1^l1 z2^l2 z3^l3 (1-q)^(l3-d) (-q)^d` over all decompositions.
///
/// Computed by this direct sum, never by the rational substitution
/// `q -> q/(q-1)`; polynomiality is manifest since `l3 >= d`.
pub fn c_prime_polynomial(lambda: &DominantElement, cap: u64) -> Result<ParamPoly, DecompError> {
    let one = ParamPoly::one(ZQ_VARS);
    let q = ParamPoly::var(ZQ_VARS, "q").expect("q is declared");
    let one_minus_q = one.sub(&q).expect("same variable set");
    let neg_q = q.neg();
    let mut poly = ParamPoly::zero(ZQ_VARS);
    for dec in enumerate_decompositions(lambda, cap)? {
        let s = stats(&dec);
        let base = ParamPoly::monomial(
            ZQ_VARS,
            &[s.l1 as u32, s.l2 as u32, s.l3 as u32, 0],
            rat(1),
        );
        let term = base
            .mul(&one_minus_q.pow((s.l3 - s.d) as u32))
            .and_then(|p| p.mul(&neg_q.pow(s.d as u32)))
            .expect("same variable set");
        poly = poly.add(&term).expect("same variable set");
    }
    Ok(poly)
}

/// Signed square-free generating polynomial in `t`: the sum of
/// `(-t)^l3` over square-free decompositions. This is `C'` specialized
/// at `(1,1,t,1)`.
pub fn square_free_signed_t_poly(lambda: &DominantElement, cap: u64) -> Result<ParamPoly, DecompError> {
    let mut poly = ParamPoly::zero(&["t"]);
    for dec in enumerate_square_free(lambda, cap)? {
        let s = stats(&dec);
        let sign = if s.l3 % 2 == 0 { 1 } else { -1 };
        let term = ParamPoly::monomial(&["t"], &[s.l3 as u32], rat(sign));
        poly = poly.add(&term).expect("same variable set");
    }
    Ok(poly)
}

/// One entry of the truncated parametrized series.
#[derive(Debug, Clone)]
pub struct SeriesEntry {
    pub lambda: DominantElement,
    pub beta: Configuration,
    pub coefficient: ParamPoly,
}

/// The truncated series: every `beta = T^lambda(alpha)` with
/// `|lambda| <= max_l1`, mapped to its coefficient polynomial. Entries
/// are ordered by `(|lambda|, lambda)`.
pub fn hat_h_truncated(
    g: &Graph,
    alpha: &Configuration,
    max_l1: u64,
    cap: u64,
) -> Result<Vec<SeriesEntry>, DecompError> {
    g.check_config(alpha)?;
    let n = g.n();
    let mut out = Vec::new();
    for size in 0..=max_l1 {
        for p in partitions_of(size, n.saturating_sub(1)) {
            let lambda = DominantElement::from_parts(p.parts(), n)
                .expect("at most n-1 parts");
            let beta = lambda.apply(g, alpha)?;
            let coefficient = c_polynomial(&lambda, cap)?;
            out.push(SeriesEntry {
                lambda,
                beta,
                coefficient,
            });
        }
    }
    Ok(out)
}

/// The monomial pairs `(X_i, Y_i)` of the closed-form series: `Y_i/X_i`
/// is the monomial by which `T_[i]` multiplies `x^alpha`.
pub fn closed_form_series(g: &Graph) -> Vec<(crate::algebra::LaurentMonomial, crate::algebra::LaurentMonomial)> {
    use crate::algebra::LaurentMonomial;
    let n = g.n();
    let mut out = Vec::new();
    for i in 1..n {
        let mut x = vec![0i64; n];
        let mut y = vec![0i64; n];
        for k in 1..=i {
            x[k - 1] = g.degree(k) as i64;
            for j in g.neighbors(k) {
                y[j - 1] += 1;
            }
        }
        out.push((LaurentMonomial::new(x), LaurentMonomial::new(y)));
    }
    out
}

/// Group decompositions of a truncated series by configuration, merging
/// coefficients (useful to cross-check uniqueness of `lambda` per `beta`).
pub fn series_by_configuration(entries: &[SeriesEntry]) -> BTreeMap<Configuration, ParamPoly> {
    let mut map: BTreeMap<Configuration, ParamPoly> = BTreeMap::new();
    for e in entries {
        map.entry(e.beta.clone())
            .and_modify(|p| *p = p.add(&e.coefficient).expect("same variable set"))
            .or_insert_with(|| e.coefficient.clone());
    }
    map
}
