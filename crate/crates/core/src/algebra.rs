//! Exact arbitrary-precision arithmetic: rationals and sparse multivariate
//! polynomials over a fixed, ordered variable set.
//!
//! Every computation in this crate is exact; there is no floating point
//! anywhere. Polynomials are stored as sparse maps from dense exponent
//! vectors to [`BigRational`] coefficients, with zero coefficients never
//! stored. The variable order is fixed per value at construction time and
//! the canonical order used throughout the crate is
//! `z1 < z2 < z3 < q < t < x1 < x2 < ...`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

/// Errors raised by polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("no value assigned to variable `{0}`")]
    MissingVar(String),
    #[error("exact division failed: remainder is nonzero")]
    InexactDivision,
}

/// Convenience constructor for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator; reduced automatically.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A monomial with integer (possibly negative) exponents over `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    pub exponents: Vec<i64>,
}

impl LaurentMonomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        LaurentMonomial { exponents }
    }

    /// Componentwise quotient: exponents of `self / other`.
    pub fn quotient(&self, other: &LaurentMonomial) -> LaurentMonomial {
        assert_eq!(self.exponents.len(), other.exponents.len());
        LaurentMonomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Sparse exact polynomial over a declared, ordered variable set.
///
/// Invariants: no stored zero coefficients; all exponents nonnegative;
/// the variable list is fixed for the lifetime of the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ParamPoly {
    pub fn zero(vars: &[&str]) -> Self {
        ParamPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The named variable as a degree-one polynomial.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.terms.insert(exps, BigRational::one());
        Ok(p)
    }

    /// Single term `c * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &[&str], exps: &[u32], c: BigRational) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVar(name.to_string()))
    }

    fn check_vars(&self, other: &ParamPoly) -> Result<(), AlgebraError> {
        if self.vars != other.vars {
            return Err(AlgebraError::VarMismatch(
                self.vars.clone(),
                other.vars.clone(),
            ));
        }
        Ok(())
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        ParamPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.clone() * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_vars(other)?;
        let mut out = ParamPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> ParamPoly {
        let mut out = Self::one(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for _ in 0..k {
            out = out.mul(self).expect("same variable set");
        }
        out
    }

    /// Replace `var` by `replacement` (a polynomial over the same variables).
    pub fn substitute(&self, var: &str, replacement: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_vars(replacement)?;
        let idx = self.var_index(var)?;
        let mut out = ParamPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut rest = e.clone();
            rest[idx] = 0;
            let base = ParamPoly::monomial(
                &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                &rest,
                c.clone(),
            );
            let term = base.mul(&replacement.pow(k))?;
            for (te, tc) in term.terms {
                out.insert_term(te, tc);
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a full assignment of the variables.
    pub fn eval(&self, assignment: &BTreeMap<String, BigRational>) -> Result<BigRational, AlgebraError> {
        for v in &self.vars {
            if !assignment.contains_key(v) {
                return Err(AlgebraError::MissingVar(v.clone()));
            }
        }
        let values: Vec<&BigRational> = self.vars.iter().map(|v| &assignment[v]).collect();
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= values[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Re-express this polynomial over a superset of its variables.
    pub fn extend_vars(&self, vars: &[&str]) -> Result<ParamPoly, AlgebraError> {
        let mapping: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| AlgebraError::UnknownVar(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = ParamPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                exps[mapping[i]] = k;
            }
            out.insert_term(exps, c.clone());
        }
        Ok(out)
    }

    /// Exact division, asserting a zero remainder.
    ///
    /// Standard multivariate division by a single divisor under the lex
    /// order induced by the variable list; errors if the remainder is
    /// nonzero, which callers treat as a bug signal.
    pub fn div_exact(&self, divisor: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_vars(divisor)?;
        let (lead_e, lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .ok_or(AlgebraError::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = ParamPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if !e.iter().zip(lead_e).all(|(a, b)| a >= b) {
                return Err(AlgebraError::InexactDivision);
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c / lead_c;
            let qterm = ParamPoly::monomial(
                &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                &qe,
                qc,
            );
            rem = rem.sub(&qterm.mul(divisor)?)?;
            for (te, tc) in qterm.terms {
                quot.insert_term(te, tc);
            }
        }
        Ok(quot)
    }
}

/// Canonical textual form: terms sorted lexicographically by exponent
/// vector, coefficients rendered as `num/den` (`num` when the denominator
/// is one).
impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rat(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `num/den` string form, `num` when the denominator is one.
pub fn format_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a rational from `num` or `num/den` text.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZQ: &[&str] = &["z1", "z2", "z3", "q"];

    fn q() -> ParamPoly {
        ParamPoly::var(ZQ, "q").unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let one = ParamPoly::one(ZQ);
        let a = one.add(&q()).unwrap();
        let b = one.sub(&q()).unwrap();
        let prod = a.mul(&b).unwrap();
        let expected = one.sub(&q().mul(&q()).unwrap()).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn mul_identity() {
        let p = ParamPoly::var(ZQ, "z3").unwrap().add(&q()).unwrap();
        assert_eq!(p.mul(&ParamPoly::one(ZQ)).unwrap(), p);
    }

    #[test]
    fn monomial_product() {
        let z3q = ParamPoly::monomial(ZQ, &[0, 0, 1, 1], rat(1));
        let sq = z3q.mul(&z3q).unwrap();
        assert_eq!(sq, ParamPoly::monomial(ZQ, &[0, 0, 2, 2], rat(1)));
    }

    #[test]
    fn substitute_examples() {
        // z3 -> (1-q) z3 in z3*q
        let z3q = ParamPoly::monomial(ZQ, &[0, 0, 1, 1], rat(1));
        let repl = ParamPoly::monomial(ZQ, &[0, 0, 1, 0], rat(1))
            .sub(&ParamPoly::monomial(ZQ, &[0, 0, 1, 1], rat(1)))
            .unwrap();
        let got = z3q.substitute("z3", &repl).unwrap();
        let expected = ParamPoly::monomial(ZQ, &[0, 0, 1, 1], rat(1))
            .sub(&ParamPoly::monomial(ZQ, &[0, 0, 1, 2], rat(1)))
            .unwrap();
        assert_eq!(got, expected);

        // q -> 0 in 1+q+q^2
        let p = ParamPoly::one(ZQ)
            .add(&q())
            .unwrap()
            .add(&q().pow(2))
            .unwrap();
        assert_eq!(p.substitute("q", &ParamPoly::zero(ZQ)).unwrap(), ParamPoly::one(ZQ));

        // t -> 1 in 1-t
        let t = ParamPoly::var(&["t"], "t").unwrap();
        let p = ParamPoly::one(&["t"]).sub(&t).unwrap();
        assert!(p.substitute("t", &ParamPoly::one(&["t"])).unwrap().is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = ParamPoly::one(ZQ).add(&q()).unwrap().add(&q().pow(2)).unwrap();
        let mut sigma = BTreeMap::new();
        for v in ZQ {
            sigma.insert(v.to_string(), rat(1));
        }
        assert_eq!(p.eval(&sigma).unwrap(), rat(3));

        let m = ParamPoly::monomial(ZQ, &[1, 1, 1, 1], rat(1));
        assert_eq!(m.eval(&sigma).unwrap(), rat(1));

        let t = ParamPoly::var(&["t"], "t").unwrap();
        let p = ParamPoly::one(&["t"]).sub(&t).unwrap();
        let mut sigma = BTreeMap::new();
        sigma.insert("t".to_string(), rat(1));
        assert_eq!(p.eval(&sigma).unwrap(), rat(0));
    }

    #[test]
    fn rational_canonical_form() {
        let r = ratio(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(format_rat(&r), "-2/3");
        assert_eq!(parse_rat("-2/3"), Some(r));
        assert_eq!(parse_rat("7"), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
    }

    #[test]
    fn var_mismatch_is_error() {
        let a = ParamPoly::one(ZQ);
        let b = ParamPoly::one(&["t"]);
        assert!(matches!(a.mul(&b), Err(AlgebraError::VarMismatch(_, _))));
    }

    #[test]
    fn div_exact_roundtrip() {
        let vars: &[&str] = &["t", "x1", "x2"];
        let x1 = ParamPoly::var(vars, "x1").unwrap();
        let x2 = ParamPoly::var(vars, "x2").unwrap();
        let d = x1.sub(&x2).unwrap();
        let p = x1.pow(3).sub(&x2.pow(3)).unwrap();
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q.mul(&d).unwrap(), p);
        assert!(x1.pow(2).add(&x2).unwrap().div_exact(&d).is_err());
    }

    #[test]
    fn display_canonical() {
        let p = ParamPoly::monomial(ZQ, &[0, 0, 1, 1], ratio(-1, 2))
            .add(&ParamPoly::one(ZQ))
            .unwrap();
        assert_eq!(p.to_string(), "1 - 1/2*z3*q");
    }
}
