//! Schur straightening, Hall-Littlewood expansion via square-free
//! decompositions on the path graph, and Kostka numbers via the signed
//! toppling formula.
//!
//! The expansion route works entirely through the toppling group of the
//! path, where `T_[i,j]` acts as the lowering operator
//! `alpha -> alpha - e_i + e_j`; the oracle route symmetrizes
//! `x^alpha prod (x_i - t x_j)/(x_i - x_j)` over all permutations with
//! exact polynomial division. The two routes are kept fully independent
//! and compared coefficient by coefficient in the acceptance suite.

use std::collections::BTreeMap;

use crate::algebra::{rat, AlgebraError, ParamPoly};
use crate::decomp::{count_decompositions, square_free_signed_t_poly, DecompError};
use crate::group::DominantElement;
use crate::tableaux::Partition;

/// Variable set of expansion coefficients.
pub const T_VARS: &[&str] = &["t"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HlError {
    #[error("negative entry {0}; map to zero before straightening")]
    NegativeEntry(i64),
    #[error("partition has {0} parts but only {1} variables")]
    TooManyParts(usize, usize),
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(u64, u64),
    #[error("n = {0} exceeds the factorial budget {1}")]
    FactorialBudget(usize, usize),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Result of straightening a monomial exponent under the Jacobi-Trudi
/// row-swap relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StraightenResult {
    Zero,
    NonZero { sign: i8, partition: Partition },
}

/// The staircase `delta = (n-1, n-2, ..., 0)`.
pub fn staircase(n: usize) -> Vec<i64> {
    (0..n).map(|i| (n - 1 - i) as i64).collect()
}

/// Straighten `s_alpha` for `alpha` in `N^n`: zero iff `alpha + delta`
/// has a repeated entry, otherwise the sorted partition together with
/// the sign of the sorting permutation. Iterating the row-swap relation
/// `s_beta = -s_alpha` with `beta = (..., a_{i+1}-1, a_i+1, ...)` is
/// exactly sorting `alpha + delta`.
pub fn straighten(alpha: &[i64]) -> Result<StraightenResult, HlError> {
    if let Some(&neg) = alpha.iter().find(|&&a| a < 0) {
        return Err(HlError::NegativeEntry(neg));
    }
    let n = alpha.len();
    let delta = staircase(n);
    let v: Vec<i64> = alpha.iter().zip(&delta).map(|(a, d)| a + d).collect();
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(StraightenResult::Zero);
    }
    // parity of the sorting permutation = number of ascents among pairs
    let mut inversions = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    let parts: Vec<u64> = sorted
        .iter()
        .zip(&delta)
        .map(|(s, d)| (s - d) as u64)
        .collect();
    let partition = Partition::from_padded(&parts).expect("sorted staircase yields a partition");
    Ok(StraightenResult::NonZero {
        sign: if inversions % 2 == 0 { 1 } else { -1 },
        partition,
    })
}

/// A finite Schur expansion: partition -> exact polynomial in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, ParamPoly>,
}

impl SchurExpansion {
    pub fn terms(&self) -> &BTreeMap<Partition, ParamPoly> {
        &self.terms
    }

    fn add_term(&mut self, p: Partition, poly: &ParamPoly) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(poly.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(poly).expect("same variable set");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// Straighten the alternant index `gamma` in `N^n` directly: the
/// Schur term is zero iff `gamma` has a repeated entry, otherwise the
/// sign of the sorting permutation together with the partition
/// `sort(gamma) - staircase` (automatically weakly decreasing and
/// nonnegative for distinct nonnegative entries).
fn straighten_shifted(gamma: &[i64]) -> StraightenResult {
    let n = gamma.len();
    let mut sorted = gamma.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return StraightenResult::Zero;
    }
    let mut inversions = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            if gamma[i] < gamma[j] {
                inversions += 1;
            }
        }
    }
    let delta = staircase(n);
    let parts: Vec<u64> = sorted
        .iter()
        .zip(&delta)
        .map(|(s, d)| (s - d) as u64)
        .collect();
    let partition = Partition::from_padded(&parts).expect("distinct staircase yields a partition");
    StraightenResult::NonZero {
        sign: if inversions % 2 == 0 { 1 } else { -1 },
        partition,
    }
}

/// Hall-Littlewood expansion of `R_alpha(x_1..x_n; t)` over Schur
/// polynomials, driven by square-free interval decompositions on the
/// path graph.
///
/// Multiplying the symmetrization definition of `R_alpha` by the
/// Vandermonde determinant gives the alternating sum over permutations
/// of `x^alpha prod (x_i - t x_j)`; expanding each binomial factor is
/// exactly a sum over subsets of interval generators acting on the
/// staircase-shifted exponent `alpha + delta`. Grouping subsets by the
/// dominant element they multiply to yields
/// `R_alpha = sum over dominant lambda of
///  (signed square-free t-sum of lambda) * s(T^lambda(alpha + delta))`,
/// with the Schur term read off the alternant index directly. Acting on
/// `alpha + delta` (rather than on `alpha` with a later shift) is what
/// keeps the degenerate cases with repeated or zero parts exact.
pub fn hall_littlewood_r(alpha: &Partition, n: usize, cap: u64) -> Result<SchurExpansion, HlError> {
    if alpha.num_parts() > n {
        return Err(HlError::TooManyParts(alpha.num_parts(), n));
    }
    let delta = staircase(n);
    let mut shifted = delta.clone();
    for (i, &p) in alpha.parts().iter().enumerate() {
        shifted[i] += p as i64;
    }
    let mut expansion = SchurExpansion {
        terms: BTreeMap::new(),
    };
    // enumerate column multiplicity vectors m with all entries of
    // gamma = T^lambda(alpha + delta) nonnegative
    let mut m = vec![0u64; n.saturating_sub(1)];
    collect_terms(&shifted, n, &mut m, 0, cap, &mut expansion)?;
    Ok(expansion)
}

fn collect_terms(
    shifted: &[i64],
    n: usize,
    m: &mut Vec<u64>,
    k: usize,
    cap: u64,
    expansion: &mut SchurExpansion,
) -> Result<(), HlError> {
    if k == m.len() {
        // lambda_k = sum of m_k over columns >= k
        let mut lambda = vec![0u64; n];
        for i in (0..m.len()).rev() {
            lambda[i] = m[i] + if i + 1 < n - 1 { lambda[i + 1] } else { 0 };
        }
        let dominant = DominantElement::new(lambda).expect("suffix sums are weakly decreasing");
        let sf = square_free_signed_t_poly(&dominant, cap)?;
        if sf.is_zero() {
            return Ok(());
        }
        let mut gamma = vec![0i64; n];
        for i in 0..n {
            let lost = if i < m.len() { m[i] as i64 } else { 0 };
            let gained = if i > 0 { m[i - 1] as i64 } else { 0 };
            gamma[i] = shifted[i] - lost + gained;
        }
        match straighten_shifted(&gamma) {
            StraightenResult::Zero => {}
            StraightenResult::NonZero { sign, partition } => {
                let signed = if sign < 0 { sf.neg() } else { sf };
                expansion.add_term(partition, &signed);
            }
        }
        return Ok(());
    }
    let carry = if k > 0 { m[k - 1] as i64 } else { 0 };
    let max = shifted[k] + carry; // gamma_k >= 0
    for v in 0..=max.max(0) {
        m[k] = v as u64;
        collect_terms(shifted, n, m, k + 1, cap, expansion)?;
    }
    m[k] = 0;
    Ok(())
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(perm: &mut Vec<usize>, k: usize, sign: i8, out: &mut Vec<(Vec<usize>, i8)>) {
        if k == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(perm, k + 1, s, out);
            perm.swap(k, i);
        }
    }
    rec(&mut perm, 0, 1, &mut out);
    out
}

fn x_var_names(n: usize) -> Vec<String> {
    let mut v = vec!["t".to_string()];
    for i in 1..=n {
        v.push(format!("x{i}"));
    }
    v
}

fn as_strs(v: &[String]) -> Vec<&str> {
    v.iter().map(|s| s.as_str()).collect()
}

/// Permute the `x` exponents of a polynomial over `t, x1..xn`:
/// variable `x_i` is sent to `x_{perm[i]}` (zero-based positions).
fn permute_x(p: &ParamPoly, perm: &[usize]) -> ParamPoly {
    let names = p.vars().to_vec();
    let vars = as_strs(&names);
    let mut out = ParamPoly::zero(&vars);
    for (e, c) in p.terms() {
        let mut exps = vec![0u32; e.len()];
        exps[0] = e[0]; // t untouched
        for (i, &img) in perm.iter().enumerate() {
            exps[img + 1] = e[i + 1];
        }
        out = out
            .add(&ParamPoly::monomial(&vars, &exps, c.clone()))
            .expect("same variable set");
    }
    out
}

/// Direct symmetrization oracle:
/// `R_alpha = sum_w w(x^alpha prod (x_i - t x_j)) * sign(w) / Vandermonde`,
/// computed with exact polynomial division. Divisibility is asserted;
/// failure is a bug signal, not a tolerance issue.
pub fn hall_littlewood_oracle(
    alpha: &Partition,
    n: usize,
    factorial_budget: usize,
) -> Result<ParamPoly, HlError> {
    if alpha.num_parts() > n {
        return Err(HlError::TooManyParts(alpha.num_parts(), n));
    }
    if n > factorial_budget {
        return Err(HlError::FactorialBudget(n, factorial_budget));
    }
    let names = x_var_names(n);
    let vars = as_strs(&names);
    // F = x^alpha * prod_{i<j} (x_i - t*x_j)
    let mut exps = vec![0u32; n + 1];
    for (i, &p) in alpha.parts().iter().enumerate() {
        exps[i + 1] = p as u32;
    }
    let mut f = ParamPoly::monomial(&vars, &exps, rat(1));
    for i in 1..=n {
        for j in (i + 1)..=n {
            let xi = ParamPoly::var(&vars, &format!("x{i}"))?;
            let xj = ParamPoly::var(&vars, &format!("x{j}"))?;
            let t = ParamPoly::var(&vars, "t")?;
            f = f.mul(&xi.sub(&t.mul(&xj)?)?)?;
        }
    }
    // P = sum_w sign(w) * w(F)
    let mut p = ParamPoly::zero(&vars);
    for (perm, sign) in signed_permutations(n) {
        let image = permute_x(&f, &perm);
        p = if sign > 0 {
            p.add(&image)?
        } else {
            p.sub(&image)?
        };
    }
    // divide by the Vandermonde, factor by factor
    for i in 1..=n {
        for j in (i + 1)..=n {
            let xi = ParamPoly::var(&vars, &format!("x{i}"))?;
            let xj = ParamPoly::var(&vars, &format!("x{j}"))?;
            p = p.div_exact(&xi.sub(&xj)?)?;
        }
    }
    Ok(p)
}

/// Complete homogeneous symmetric polynomial `h_k(x_1..x_n)` over the
/// `t, x1..xn` variable set (constant in `t`).
pub fn complete_homogeneous(k: u64, n: usize) -> ParamPoly {
    let names = x_var_names(n);
    let vars = as_strs(&names);
    let mut out = ParamPoly::zero(&vars);
    // multisets of size k over n variables
    fn rec(exps: &mut Vec<u32>, var: usize, left: u64, n: usize, out: &mut Vec<Vec<u32>>) {
        if var == n {
            if left == 0 {
                out.push(exps.clone());
            }
            return;
        }
        for take in 0..=left {
            exps[var + 1] = take as u32;
            rec(exps, var + 1, left - take, n, out);
        }
        exps[var + 1] = 0;
    }
    let mut monos = Vec::new();
    rec(&mut vec![0u32; n + 1], 0, k, n, &mut monos);
    for e in monos {
        out = out
            .add(&ParamPoly::monomial(&vars, &e, rat(1)))
            .expect("same variable set");
    }
    out
}

/// Schur polynomial `s_beta(x_1..x_n)` by the Jacobi-Trudi determinant
/// `det(h_{beta_i + j - i})`, expanded over permutations.
pub fn schur_polynomial(beta: &Partition, n: usize) -> Result<ParamPoly, HlError> {
    if beta.num_parts() > n {
        return Err(HlError::TooManyParts(beta.num_parts(), n));
    }
    let names = x_var_names(n);
    let vars = as_strs(&names);
    let mut padded = vec![0i64; n];
    for (i, &p) in beta.parts().iter().enumerate() {
        padded[i] = p as i64;
    }
    // cache h_k
    let mut h: BTreeMap<i64, ParamPoly> = BTreeMap::new();
    let entry = |k: i64, h: &mut BTreeMap<i64, ParamPoly>| -> ParamPoly {
        if k < 0 {
            return ParamPoly::zero(&as_strs(&x_var_names(n)));
        }
        h.entry(k)
            .or_insert_with(|| complete_homogeneous(k as u64, n))
            .clone()
    };
    let mut det = ParamPoly::zero(&vars);
    for (perm, sign) in signed_permutations(n) {
        let mut prod = ParamPoly::one(&vars);
        let mut zero = false;
        for (i, &j) in perm.iter().enumerate() {
            let k = padded[i] + j as i64 - i as i64;
            if k < 0 {
                zero = true;
                break;
            }
            prod = prod.mul(&entry(k, &mut h))?;
        }
        if zero {
            continue;
        }
        det = if sign > 0 {
            det.add(&prod)?
        } else {
            det.sub(&prod)?
        };
    }
    Ok(det)
}

/// Expand a Schur expansion into an explicit polynomial in
/// `t, x1..xn` via Jacobi-Trudi. This is the bridge used to compare the
/// decomposition route with the symmetrization oracle.
pub fn expand_schur_expansion(exp: &SchurExpansion, n: usize) -> Result<ParamPoly, HlError> {
    let names = x_var_names(n);
    let vars = as_strs(&names);
    let mut out = ParamPoly::zero(&vars);
    for (part, coeff) in exp.terms() {
        let s = schur_polynomial(part, n)?;
        let c = coeff.extend_vars(&vars)?;
        out = out.add(&c.mul(&s)?)?;
    }
    Ok(out)
}

/// Kostka number by the signed toppling formula: a sum over the
/// symmetric group of signed decomposition counts on the path graph.
pub fn kostka_via_toppling(lambda: &Partition, mu: &Partition, n: usize) -> Result<i128, HlError> {
    if lambda.num_parts() > n {
        return Err(HlError::TooManyParts(lambda.num_parts(), n));
    }
    if mu.num_parts() > n {
        return Err(HlError::TooManyParts(mu.num_parts(), n));
    }
    if lambda.size() != mu.size() {
        return Err(HlError::SizeMismatch(lambda.size(), mu.size()));
    }
    let delta = staircase(n);
    let mut lp = vec![0i64; n];
    for (i, &p) in lambda.parts().iter().enumerate() {
        lp[i] = p as i64;
    }
    let mut mp = vec![0i64; n];
    for (i, &p) in mu.parts().iter().enumerate() {
        mp[i] = p as i64;
    }
    let mut acc: i128 = 0;
    for (perm, sign) in signed_permutations(n) {
        // gamma = w(lambda) + w(delta) - delta
        let mut gamma = vec![0i64; n];
        for (i, &src) in perm.iter().enumerate() {
            // position i receives the entry permuted from position src
            gamma[i] = lp[src] + delta[src] - delta[i];
        }
        // dominance gamma -> mu on the path: prefix sums must be >= 0
        let mut prefix = 0i64;
        let mut m = Vec::with_capacity(n - 1);
        let mut ok = true;
        for k in 0..n - 1 {
            prefix += gamma[k] - mp[k];
            if prefix < 0 {
                ok = false;
                break;
            }
            m.push(prefix as u64);
        }
        if !ok {
            continue;
        }
        // lambda exponents from column multiplicities
        let mut nu = vec![0u64; n];
        for i in (0..m.len()).rev() {
            nu[i] = m[i] + if i + 1 < n - 1 { nu[i + 1] } else { 0 };
        }
        let dominant = DominantElement::new(nu).expect("suffix sums are weakly decreasing");
        let count = count_decompositions(&dominant) as i128;
        acc += sign as i128 * count;
    }
    Ok(acc)
}

/// Classical oracle: number of semistandard Young tableaux of shape
/// `lambda` and content `mu`, by backtracking over cells.
pub fn kostka_oracle(lambda: &Partition, mu: &Partition) -> u128 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let content: Vec<u64> = mu.parts().to_vec();
    let rows = shape.len();
    if rows == 0 {
        return 1;
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![0u64; content.len()];
    fn rec(
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<u64>,
        content: &[u64],
        shape: &[usize],
        r: usize,
        c: usize,
        count: &mut u128,
    ) {
        if r == shape.len() {
            *count += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let min_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_col = if r > 0 && c < shape[r - 1] {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let lo = min_row.max(min_col);
        for v in lo..=content.len() {
            if used[v - 1] < content[v - 1] {
                used[v - 1] += 1;
                grid[r][c] = v;
                rec(grid, used, content, shape, nr, nc, count);
                used[v - 1] -= 1;
            }
        }
        grid[r][c] = 0;
    }
    let mut count = 0u128;
    rec(&mut grid, &mut used, &content, &shape, 0, 0, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, BigRational};
    use num_traits::Zero;

    const CAP: u64 = 1_000_000;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[0, 1]).unwrap(), StraightenResult::Zero);
        assert_eq!(
            straighten(&[3, 1, 0]).unwrap(),
            StraightenResult::NonZero {
                sign: 1,
                partition: part(&[3, 1])
            }
        );
        assert_eq!(
            straighten(&[1, 3, 0]).unwrap(),
            StraightenResult::NonZero {
                sign: -1,
                partition: part(&[2, 2])
            }
        );
        assert!(matches!(
            straighten(&[1, -1]),
            Err(HlError::NegativeEntry(-1))
        ));
    }

    /// Numeric determinant of the Jacobi-Trudi matrix with the h's
    /// evaluated at fixed rational sample values.
    fn jt_det_at(alpha: &[i64], h: &[BigRational]) -> BigRational {
        let n = alpha.len();
        let value = |k: i64| -> BigRational {
            if k < 0 {
                rat(0)
            } else if k == 0 {
                rat(1)
            } else {
                h[(k - 1) as usize].clone()
            }
        };
        let mut det = BigRational::zero();
        for (perm, sign) in signed_permutations(n) {
            let mut prod = rat(1);
            for (i, &j) in perm.iter().enumerate() {
                prod *= value(alpha[i] + j as i64 - i as i64);
            }
            det += rat(sign as i64) * prod;
        }
        det
    }

    #[test]
    fn straighten_matches_determinant() {
        // sample values for h_1..h_8
        let h: Vec<BigRational> = vec![
            ratio(3, 2),
            ratio(-1, 3),
            ratio(5, 7),
            ratio(2, 1),
            ratio(-4, 5),
            ratio(9, 4),
            ratio(1, 6),
            ratio(-7, 2),
        ];
        for n in 1..=3usize {
            let mut alpha = vec![0i64; n];
            loop {
                let det = jt_det_at(&alpha, &h);
                match straighten(&alpha).unwrap() {
                    StraightenResult::Zero => assert_eq!(det, rat(0), "alpha {alpha:?}"),
                    StraightenResult::NonZero { sign, partition } => {
                        let mut sorted = vec![0i64; n];
                        for (i, &p) in partition.parts().iter().enumerate() {
                            sorted[i] = p as i64;
                        }
                        let expected = rat(sign as i64) * jt_det_at(&sorted, &h);
                        assert_eq!(det, expected, "alpha {alpha:?}");
                    }
                }
                // next tuple with entries <= 4
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    alpha[i] += 1;
                    if alpha[i] <= 4 {
                        break;
                    }
                    alpha[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn hl_r_examples() {
        // alpha=(1,0), n=2: the -t candidate collides in the alternant
        let exp = hall_littlewood_r(&part(&[1]), 2, CAP).unwrap();
        assert_eq!(exp.terms().len(), 1);
        assert_eq!(exp.terms()[&part(&[1])], ParamPoly::one(T_VARS));

        // empty alpha: a pure t-polynomial coefficient on the empty
        // partition; for n=2 it is 1 + t
        let exp = hall_littlewood_r(&Partition::empty(), 2, CAP).unwrap();
        let expected = ParamPoly::one(T_VARS)
            .add(&ParamPoly::var(T_VARS, "t").unwrap())
            .unwrap();
        assert_eq!(exp.terms()[&Partition::empty()], expected);

        // t -> 0 degenerates to the singleton expansion
        for alpha in [part(&[2, 1]), part(&[3]), part(&[2, 2, 1])] {
            let exp = hall_littlewood_r(&alpha, 4, CAP).unwrap();
            let zero_t = ParamPoly::zero(T_VARS);
            for (p, poly) in exp.terms() {
                let at0 = poly.substitute("t", &zero_t).unwrap();
                if p == &alpha {
                    assert_eq!(at0, ParamPoly::one(T_VARS));
                } else {
                    assert!(at0.is_zero(), "alpha {alpha} p {p}");
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        // alpha=(1,0), n=2 -> x1 + x2
        let names = x_var_names(2);
        let vars = as_strs(&names);
        let r = hall_littlewood_oracle(&part(&[1]), 2, 8).unwrap();
        let expected = ParamPoly::var(&vars, "x1")
            .unwrap()
            .add(&ParamPoly::var(&vars, "x2").unwrap())
            .unwrap();
        assert_eq!(r, expected);

        // empty alpha, n=2 -> 1 + t
        let r = hall_littlewood_oracle(&Partition::empty(), 2, 8).unwrap();
        let expected = ParamPoly::one(&vars)
            .add(&ParamPoly::var(&vars, "t").unwrap())
            .unwrap();
        assert_eq!(r, expected);

        // t=0 gives the Schur polynomial
        for (alpha, n) in [(part(&[2, 1]), 3usize), (part(&[2]), 2), (part(&[1, 1]), 3)] {
            let names = x_var_names(n);
            let vars = as_strs(&names);
            let r = hall_littlewood_oracle(&alpha, n, 8).unwrap();
            let at0 = r.substitute("t", &ParamPoly::zero(&vars)).unwrap();
            assert_eq!(at0, schur_polynomial(&alpha, n).unwrap());
        }

        assert!(matches!(
            hall_littlewood_oracle(&part(&[1]), 9, 8),
            Err(HlError::FactorialBudget(9, 8))
        ));
    }

    #[test]
    fn expansion_matches_oracle_spot_checks() {
        for (alpha, n) in [
            (part(&[1]), 2usize),
            (part(&[2]), 2),
            (part(&[1, 1]), 2),
            (part(&[2, 1]), 3),
            (part(&[1, 1]), 3),
            (Partition::empty(), 3),
            (part(&[3, 1]), 3),
        ] {
            let via_decomp =
                expand_schur_expansion(&hall_littlewood_r(&alpha, n, CAP).unwrap(), n).unwrap();
            let via_oracle = hall_littlewood_oracle(&alpha, n, 8).unwrap();
            assert_eq!(via_decomp, via_oracle, "alpha {alpha} n {n}");
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_oracle(&part(&[3]), &part(&[3])), 1);
        assert_eq!(kostka_oracle(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        assert_eq!(kostka_oracle(&part(&[2]), &part(&[1, 1])), 1);
        assert_eq!(kostka_oracle(&part(&[1, 1]), &part(&[2])), 0);

        assert_eq!(
            kostka_via_toppling(&part(&[2, 1]), &part(&[2, 1]), 3).unwrap(),
            1
        );
        assert_eq!(
            kostka_via_toppling(&part(&[2, 1]), &part(&[1, 1, 1]), 3).unwrap(),
            2
        );
        assert_eq!(kostka_via_toppling(&part(&[2]), &part(&[1, 1]), 2).unwrap(), 1);
        assert!(matches!(
            kostka_via_toppling(&part(&[2]), &part(&[1]), 2),
            Err(HlError::SizeMismatch(2, 1))
        ));
    }

    #[test]
    fn schur_polynomial_basics() {
        // s_(1) over 3 variables
        let names = x_var_names(3);
        let vars = as_strs(&names);
        let s = schur_polynomial(&part(&[1]), 3).unwrap();
        let mut expected = ParamPoly::zero(&vars);
        for v in ["x1", "x2", "x3"] {
            expected = expected.add(&ParamPoly::var(&vars, v).unwrap()).unwrap();
        }
        assert_eq!(s, expected);
        // s_(1,1) = e_2
        let s = schur_polynomial(&part(&[1, 1]), 2).unwrap();
        let names = x_var_names(2);
        let vars = as_strs(&names);
        let expected = ParamPoly::var(&vars, "x1")
            .unwrap()
            .mul(&ParamPoly::var(&vars, "x2").unwrap())
            .unwrap();
        assert_eq!(s, expected);
    }
}
