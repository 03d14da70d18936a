use thiserror::Error;

use super::{SymMatrix, Tolerance};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CholeskyError {
    #[error("matrix dimension {matrix} does not match pattern size {pattern}")]
    Dimension { matrix: usize, pattern: usize },
    #[error("elimination order is not a permutation of 1..={0}")]
    BadOrder(usize),
    #[error("entry ({0}, {1}) is nonzero but not an edge of the pattern")]
    OffPattern(usize, usize),
    #[error("eliminating node {pivot} fills entry ({row}, {col}) outside the pattern")]
    Fill {
        pivot: usize,
        row: usize,
        col: usize,
    },
    #[error("pivot {value:e} at node {node} shows the matrix is not positive semidefinite")]
    NotPsd { node: usize, value: f64 },
}

/// Columns of a Cholesky factor produced in a given elimination order.
///
/// `columns[k]` belongs to pivot node `order[k]` and is a full-length vector
/// indexed by `node - 1`; it vanishes on nodes eliminated before `order[k]`.
/// The factor reproduces the input as `Σ_k columns[k] columns[k]ᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CholeskyFactor {
    pub order: Vec<usize>,
    pub columns: Vec<Vec<f64>>,
}

impl CholeskyFactor {
    /// Columns whose pivot was numerically zero and skipped.
    pub fn zero_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().all(|&x| x == 0.0))
            .map(|(k, _)| self.order[k])
    }

    pub fn rank(&self) -> usize {
        self.columns.len() - self.zero_columns().count()
    }

    /// Nodes where column `k` is nonzero, sorted.
    pub fn support(&self, k: usize) -> Vec<usize> {
        self.columns[k]
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0.0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Factor with rows and columns both listed in elimination order; lower
    /// triangular.
    pub fn permuted_lower(&self) -> Vec<Vec<f64>> {
        self.order
            .iter()
            .map(|&row| self.columns.iter().map(|c| c[row - 1]).collect())
            .collect()
    }

    /// `Σ_k columns[k] columns[k]ᵀ`.
    pub fn reconstruct(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.order.len());
        for c in &self.columns {
            m.add_outer(c);
        }
        m
    }
}

/// Cholesky factorization in the elimination order `order` (node labels)
/// that refuses to create entries outside `pattern`.
///
/// Entries with magnitude at most `tol.threshold(max |m_ij|)` count as zero.
/// A pivot whose whole remaining column is zero is skipped, so singular
/// positive semidefinite matrices factor too. On a chordal pattern with a
/// perfect elimination order, positive semidefinite inputs never fill.
pub fn cholesky_no_fill(
    m: &SymMatrix,
    order: &[usize],
    pattern: &Graph,
    tol: &Tolerance,
) -> Result<CholeskyFactor, CholeskyError> {
    let n = m.dim();
    if pattern.node_count() != n {
        return Err(CholeskyError::Dimension {
            matrix: n,
            pattern: pattern.node_count(),
        });
    }
    let mut eliminated = vec![false; n];
    if order.len() != n {
        return Err(CholeskyError::BadOrder(n));
    }
    for &v in order {
        if v == 0 || v > n || eliminated[v - 1] {
            return Err(CholeskyError::BadOrder(n));
        }
        eliminated[v - 1] = true;
    }
    for i in 0..n {
        for j in 0..i {
            if m.get(i, j) != 0.0 && !pattern.has_edge(i + 1, j + 1) {
                return Err(CholeskyError::OffPattern(j + 1, i + 1));
            }
        }
    }

    let threshold = tol.threshold(m.max_abs());
    let mut work = m.clone();
    let mut done = vec![false; n];
    let mut columns = Vec::with_capacity(n);

    for &node in order {
        let p = node - 1;
        done[p] = true;
        let pivot = work.get(p, p);
        let support: Vec<usize> = (0..n)
            .filter(|&r| !done[r] && work.get(r, p).abs() > threshold)
            .collect();

        let mut col = vec![0.0; n];
        if pivot < -threshold {
            return Err(CholeskyError::NotPsd { node, value: pivot });
        }
        if support.is_empty() && pivot <= threshold {
            columns.push(col);
            continue;
        }
        if pivot <= 0.0 {
            return Err(CholeskyError::NotPsd { node, value: pivot });
        }
        for (k, &r) in support.iter().enumerate() {
            for &s in &support[k + 1..] {
                if !pattern.has_edge(r + 1, s + 1) {
                    return Err(CholeskyError::Fill {
                        pivot: node,
                        row: r.min(s) + 1,
                        col: r.max(s) + 1,
                    });
                }
            }
        }
        let root = pivot.sqrt();
        col[p] = root;
        for &r in &support {
            col[r] = work.get(r, p) / root;
        }
        for (k, &r) in support.iter().enumerate() {
            for &s in &support[k..] {
                let updated = work.get(r, s) - col[r] * col[s];
                work.set(r, s, updated);
            }
        }
        columns.push(col);
    }

    Ok(CholeskyFactor {
        order: order.to_vec(),
        columns,
    })
}
