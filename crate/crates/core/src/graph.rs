//! Connected simple graphs, integer configurations and elementary
//! toppling moves.
//!
//! Vertices are indexed `1..n` in all external I/O; internally the crate
//! uses zero-based indices. A toppling of vertex `i` sends one unit of
//! weight along each incident edge: the weight of `i` drops by its degree
//! and every neighbor gains one.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown graph family `{0}` (expected path:n, complete:n or cycle:n)")]
    UnknownFamily(String),
    #[error("configuration length {0} does not match vertex count {1}")]
    DimensionMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("target has nonzero sum {0}; topplings preserve size")]
    NonzeroSum(i64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Serialized graph form: `{"n": int, "edges": [[i,j], ...]}` with
/// one-based vertex indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// A connected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>, // one-based, i < j, sorted
    adj: Vec<Vec<usize>>,       // zero-based adjacency, sorted
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == 0 || a > n {
                return Err(GraphError::IndexOutOfRange(a, n));
            }
            if b == 0 || b > n {
                return Err(GraphError::IndexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a - 1].push(b - 1);
            adj[b - 1].push(a - 1);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges: norm, adj };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::UnknownFamily(format!("cycle:{n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Self::from_edges(n, &edges)
    }

    /// Parse a family shorthand: `path:5`, `complete:5` or `cycle:6`.
    pub fn from_shorthand(s: &str) -> Result<Self, GraphError> {
        let err = || GraphError::UnknownFamily(s.to_string());
        let (family, count) = s.split_once(':').ok_or_else(err)?;
        let n: usize = count.trim().parse().map_err(|_| err())?;
        match family.trim() {
            "path" => Self::path(n),
            "complete" => Self::complete(n),
            "cycle" => Self::cycle(n),
            _ => Err(err()),
        }
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self, GraphError> {
        Self::from_edges(spec.n, &spec.edges)
    }

    pub fn spec(&self) -> GraphSpec {
        GraphSpec {
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of vertex `i` (one-based).
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i - 1].len()
    }

    /// One-based neighbor list of vertex `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i - 1].iter().map(|&v| v + 1)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    fn check_index(&self, i: usize) -> Result<(), GraphError> {
        if i == 0 || i > self.n {
            Err(GraphError::IndexOutOfRange(i, self.n))
        } else {
            Ok(())
        }
    }

    /// The offset `Delta_i` added by toppling vertex `i`: `+1` at each
    /// neighbor, `-deg(i)` at `i` itself. Entries sum to zero.
    pub fn toppling_offset(&self, i: usize) -> Result<Configuration, GraphError> {
        self.check_index(i)?;
        let mut w = vec![0i64; self.n];
        w[i - 1] = -(self.adj[i - 1].len() as i64);
        for &v in &self.adj[i - 1] {
            w[v] = 1;
        }
        Ok(Configuration::new(w))
    }

    /// Left-fold of toppling moves over a word of vertex indices.
    pub fn apply_word(&self, c: &Configuration, word: &[usize]) -> Result<Configuration, GraphError> {
        self.check_config(c)?;
        let mut w = c.weights.clone();
        for &i in word {
            self.check_index(i)?;
            w[i - 1] -= self.adj[i - 1].len() as i64;
            for &v in &self.adj[i - 1] {
                w[v] += 1;
            }
        }
        Ok(Configuration::new(w))
    }

    /// Apply `T^a` for an arbitrary integer exponent vector.
    pub fn apply_exponents(&self, c: &Configuration, a: &[i64]) -> Result<Configuration, GraphError> {
        self.check_config(c)?;
        if a.len() != self.n {
            return Err(GraphError::DimensionMismatch(a.len(), self.n));
        }
        let mut w = c.weights.clone();
        for (idx, &k) in a.iter().enumerate() {
            w[idx] -= k * self.adj[idx].len() as i64;
            for &v in &self.adj[idx] {
                w[v] += k;
            }
        }
        Ok(Configuration::new(w))
    }

    pub fn check_config(&self, c: &Configuration) -> Result<(), GraphError> {
        if c.len() != self.n {
            Err(GraphError::DimensionMismatch(c.len(), self.n))
        } else {
            Ok(())
        }
    }

    /// Solve `sum_i lambda_i Delta_i = target` with the pin `lambda_n = 0`.
    ///
    /// The target must have zero sum. The system is the graph Laplacian
    /// one; connectedness makes the reduced `(n-1) x (n-1)` system
    /// uniquely solvable over the rationals, and the unique solution is
    /// returned only when it is integral. The result is verified by
    /// re-applying the offsets.
    pub fn reduced_laplacian_solve(&self, target: &Configuration) -> Result<Option<Vec<i64>>, SolveError> {
        self.check_config(target).map_err(SolveError::Graph)?;
        let total: i64 = target.weights.iter().sum();
        if total != 0 {
            return Err(SolveError::NonzeroSum(total));
        }
        let m = self.n - 1;
        if m == 0 {
            return Ok(Some(vec![0]));
        }
        // Row j of the reduced system: sum_i lambda_i * Delta_i[j] = target_j,
        // i, j ranging over the first n-1 vertices.
        let mut mat: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m + 1]; m];
        for j in 0..m {
            for i in 0..m {
                let v = if i == j {
                    -(self.adj[i].len() as i64)
                } else if self.adj[i].binary_search(&j).is_ok() {
                    1
                } else {
                    0
                };
                mat[j][i] = BigRational::from_integer(BigInt::from(v));
            }
            mat[j][m] = BigRational::from_integer(BigInt::from(target.weights[j]));
        }
        let sol = match solve_square(&mut mat) {
            Some(s) => s,
            None => return Ok(None), // cannot happen on a connected graph
        };
        let mut lambda = Vec::with_capacity(self.n);
        for v in &sol {
            if !v.denom().is_one() {
                return Ok(None);
            }
            let numer = v.numer();
            let as_i64: i64 = match numer.try_into() {
                Ok(x) => x,
                Err(_) => return Ok(None),
            };
            lambda.push(as_i64);
        }
        lambda.push(0);
        // Verification: T^lambda applied to anything shifts by exactly target.
        let zero = Configuration::new(vec![0; self.n]);
        let check = self.apply_exponents(&zero, &lambda).expect("dims match");
        debug_assert_eq!(check.weights, target.weights);
        Ok(Some(lambda))
    }
}

/// Exact Gaussian elimination on an augmented `m x (m+1)` matrix.
fn solve_square(mat: &mut [Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let m = mat.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, pivot);
        let p = mat[col][col].clone();
        for entry in mat[col].iter_mut() {
            *entry /= &p;
        }
        for r in 0..m {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..=m {
                    let delta = &f * &mat[col][c];
                    mat[r][c] -= delta;
                }
            }
        }
    }
    Some((0..m).map(|r| mat[r][m].clone()).collect())
}

/// An integer weight vector on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    weights: Vec<i64>,
}

impl Configuration {
    pub fn new(weights: Vec<i64>) -> Self {
        Configuration { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The size of the configuration: the sum of its weights.
    pub fn size(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// Componentwise difference `self - other`.
    pub fn diff(&self, other: &Configuration) -> Configuration {
        assert_eq!(self.len(), other.len());
        Configuration::new(
            self.weights
                .iter()
                .zip(&other.weights)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Parse a comma-separated integer list.
    pub fn parse(s: &str) -> Option<Configuration> {
        let weights: Option<Vec<i64>> = s.split(',').map(|p| p.trim().parse().ok()).collect();
        weights.map(Configuration::new)
    }
}

impl std::fmt::Display for Configuration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
