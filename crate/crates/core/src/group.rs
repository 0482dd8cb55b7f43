//! The abelian toppling group: normal forms, equality criterion and
//! dominance-order solving.
//!
//! Every group element has a unique reduced exponent vector with minimum
//! entry zero; dominant elements are the weakly decreasing ones (with the
//! last entry pinned to zero) and index the order ideal below a
//! configuration.

use serde::{Deserialize, Serialize};

use crate::graph::{Configuration, Graph, GraphError, SolveError};

/// A group element in normal form: a nonnegative exponent vector with
/// minimum entry zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    exponents: Vec<u64>,
}

impl GroupElement {
    /// Normal form of an arbitrary integer exponent vector: subtract the
    /// minimum entry from every component. Represents the same group
    /// element because firing every vertex once is the identity.
    pub fn normalize(a: &[i64]) -> GroupElement {
        assert!(!a.is_empty(), "exponent vector must be nonempty");
        let min = *a.iter().min().unwrap();
        GroupElement {
            exponents: a.iter().map(|&x| (x - min) as u64).collect(),
        }
    }

    pub fn identity(n: usize) -> GroupElement {
        GroupElement {
            exponents: vec![0; n],
        }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&x| x == 0)
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement, GraphError> {
        if self.n() != other.n() {
            return Err(GraphError::DimensionMismatch(other.n(), self.n()));
        }
        let sum: Vec<i64> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| (a + b) as i64)
            .collect();
        Ok(GroupElement::normalize(&sum))
    }

    pub fn inverse(&self) -> GroupElement {
        let max = *self.exponents.iter().max().unwrap();
        let inv: Vec<i64> = self.exponents.iter().map(|&x| (max - x) as i64).collect();
        GroupElement::normalize(&inv)
    }

    /// Apply `T^a` to a configuration.
    pub fn apply(&self, g: &Graph, c: &Configuration) -> Result<Configuration, GraphError> {
        let a: Vec<i64> = self.exponents.iter().map(|&x| x as i64).collect();
        g.apply_exponents(c, &a)
    }
}

/// A dominant exponent vector: weakly decreasing with last entry zero.
/// Ignoring trailing zeros these are exactly the integer partitions with
/// fewer than `n` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantElement {
    lambda: Vec<u64>,
}

impl DominantElement {
    pub fn new(lambda: Vec<u64>) -> Option<DominantElement> {
        if lambda.is_empty() {
            return None;
        }
        if *lambda.last().unwrap() != 0 {
            return None;
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(DominantElement { lambda })
    }

    /// Build from partition parts, padded with zeros to length `n`.
    pub fn from_parts(parts: &[u64], n: usize) -> Option<DominantElement> {
        if parts.len() >= n {
            return None;
        }
        let mut lambda = parts.to_vec();
        lambda.resize(n, 0);
        Self::new(lambda)
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// Total number of elementary topplings: the size of the partition.
    pub fn size(&self) -> u64 {
        self.lambda.iter().sum()
    }

    /// The nonzero parts, as a partition.
    pub fn parts(&self) -> Vec<u64> {
        self.lambda.iter().copied().take_while(|&x| x > 0).collect()
    }

    pub fn as_group_element(&self) -> GroupElement {
        GroupElement {
            exponents: self.lambda.clone(),
        }
    }

    pub fn apply(&self, g: &Graph, c: &Configuration) -> Result<Configuration, GraphError> {
        self.as_group_element().apply(g, c)
    }
}

/// Why a dominance query `beta <= alpha` failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DominanceFailure {
    /// Sizes differ; no toppling sequence relates the configurations.
    SizeMismatch { from_size: i64, to_size: i64 },
    /// Equal size but the Laplacian solution is not integral: the
    /// configurations are not toppling-equivalent.
    NotEquivalent,
    /// Toppling-equivalent, but the exponent vector is not weakly
    /// decreasing: beta is reachable yet not dominated.
    NotDominated { exponents: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DominanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Solve `beta = T^lambda(alpha)` for the unique dominant `lambda`.
///
/// Returns structured diagnostics on failure so callers can distinguish
/// "not equivalent" from "equivalent but not dominated".
pub fn solve_dominance(
    g: &Graph,
    alpha: &Configuration,
    beta: &Configuration,
) -> Result<Result<DominantElement, DominanceFailure>, DominanceError> {
    g.check_config(alpha)?;
    g.check_config(beta)?;
    let target = beta.diff(alpha);
    let lambda = match g.reduced_laplacian_solve(&target) {
        Ok(Some(lambda)) => lambda,
        Ok(None) => return Ok(Err(DominanceFailure::NotEquivalent)),
        Err(SolveError::NonzeroSum(_)) => {
            return Ok(Err(DominanceFailure::SizeMismatch {
                from_size: alpha.size(),
                to_size: beta.size(),
            }))
        }
        Err(SolveError::Graph(e)) => return Err(e.into()),
    };
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Ok(Err(DominanceFailure::NotDominated { exponents: lambda }));
    }
    // Weakly decreasing with last entry 0 implies all entries nonnegative.
    let lambda: Vec<u64> = lambda.into_iter().map(|x| x as u64).collect();
    Ok(Ok(DominantElement { lambda }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        let g = GroupElement::normalize(&[-3, -1, 0, 2, 0, 0, 4, 0]);
        assert_eq!(g.exponents(), &[0, 2, 3, 5, 3, 3, 7, 3]);

        let g = GroupElement::normalize(&[7, 7, 7]);
        assert!(g.is_identity());

        let g = GroupElement::normalize(&[0, 2, 1]);
        assert_eq!(g.exponents(), &[0, 2, 1]);
        assert_eq!(GroupElement::normalize(&[0, 2, 1]), g);
    }

    #[test]
    fn multiply_examples() {
        let id = GroupElement::identity(3);
        let g = GroupElement::normalize(&[2, 1, 0]);
        assert_eq!(g.multiply(&id).unwrap(), g);

        let a = GroupElement::normalize(&[1, 0]);
        let b = GroupElement::normalize(&[0, 1]);
        assert!(a.multiply(&b).unwrap().is_identity());

        let h = GroupElement::normalize(&[1, 0, 0]);
        assert_eq!(g.multiply(&h).unwrap().exponents(), &[3, 1, 0]);

        assert!(g.multiply(&a).is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = GroupElement::identity(4);
        assert_eq!(id.inverse(), id);

        let g = GroupElement::normalize(&[3, 1, 0, 0, 0]);
        assert_eq!(g.inverse().exponents(), &[0, 2, 3, 3, 3]);
        assert!(g.multiply(&g.inverse()).unwrap().is_identity());
        assert_eq!(g.inverse().inverse(), g);
    }

    #[test]
    fn dominant_element_validation() {
        assert!(DominantElement::new(vec![3, 1, 0]).is_some());
        assert!(DominantElement::new(vec![3, 1, 1]).is_none());
        assert!(DominantElement::new(vec![1, 3, 0]).is_none());
        assert!(DominantElement::from_parts(&[4, 3, 1], 4).is_some());
        assert!(DominantElement::from_parts(&[4, 3, 1], 3).is_none());
    }

    #[test]
    fn solve_dominance_paper_example() {
        let k5 = Graph::complete(5).unwrap();
        let alpha = Configuration::new(vec![5, -3, 0, 1, -4]);
        let beta = Configuration::new(vec![-6, -4, 4, 5, 0]);
        let lam = solve_dominance(&k5, &alpha, &beta).unwrap().unwrap();
        assert_eq!(lam.lambda(), &[3, 1, 0, 0, 0]);
        assert_eq!(lam.apply(&k5, &alpha).unwrap(), beta);
    }

    #[test]
    fn solve_dominance_reflexive() {
        let g = Graph::cycle(4).unwrap();
        let alpha = Configuration::new(vec![2, -1, 0, 3]);
        let lam = solve_dominance(&g, &alpha, &alpha).unwrap().unwrap();
        assert!(lam.as_group_element().is_identity());
    }

    #[test]
    fn solve_dominance_not_dominated() {
        // On the path with two vertices, (1,0) dominates (0,1) but not
        // the other way round. Brute force over all lambda in P_2 with
        // |lambda| <= 2 confirms no dominant solution exists.
        let l2 = Graph::path(2).unwrap();
        let alpha = Configuration::new(vec![0, 1]);
        let beta = Configuration::new(vec![1, 0]);
        for l1 in 0..=2u64 {
            let lam = DominantElement::new(vec![l1, 0]).unwrap();
            assert_ne!(lam.apply(&l2, &alpha).unwrap(), beta);
        }
        let res = solve_dominance(&l2, &alpha, &beta).unwrap();
        assert_eq!(
            res,
            Err(DominanceFailure::NotDominated {
                exponents: vec![-1, 0]
            })
        );
    }

    #[test]
    fn solve_dominance_size_mismatch() {
        let l2 = Graph::path(2).unwrap();
        let res = solve_dominance(
            &l2,
            &Configuration::new(vec![1, 0]),
            &Configuration::new(vec![1, 1]),
        )
        .unwrap();
        assert!(matches!(res, Err(DominanceFailure::SizeMismatch { .. })));
    }

    #[test]
    fn solve_dominance_not_equivalent() {
        let k3 = Graph::complete(3).unwrap();
        let res = solve_dominance(
            &k3,
            &Configuration::new(vec![1, 0, 0]),
            &Configuration::new(vec![0, 1, 0]),
        )
        .unwrap();
        assert_eq!(res, Err(DominanceFailure::NotEquivalent));
    }
}
