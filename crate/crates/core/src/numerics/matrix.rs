use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest asymmetry `|a_ij - a_ji|` accepted when reading a full matrix.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("row {row} has length {len}, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("declared dimension {declared} but {rows} rows given")]
    DimensionMismatch { declared: usize, rows: usize },
    #[error("entry ({0}, {1}) is not finite")]
    NonFinite(usize, usize),
    #[error("entries ({i}, {j}) and ({j}, {i}) differ by {diff:e}")]
    Asymmetric { i: usize, j: usize, diff: f64 },
}

/// Dense real symmetric matrix with finite entries.
///
/// Indices are 0-based. Storage is a full row-major array kept symmetric by
/// every mutator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    entries: Vec<Vec<f64>>,
}

impl TryFrom<MatrixRepr> for SymMatrix {
    type Error = MatrixError;

    fn try_from(r: MatrixRepr) -> Result<Self, Self::Error> {
        if r.entries.len() != r.n {
            return Err(MatrixError::DimensionMismatch {
                declared: r.n,
                rows: r.entries.len(),
            });
        }
        SymMatrix::from_rows(&r.entries)
    }
}

impl From<SymMatrix> for MatrixRepr {
    fn from(m: SymMatrix) -> Self {
        MatrixRepr {
            n: m.n,
            entries: m.rows(),
        }
    }
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds from a full square array. Asymmetry up to
    /// [`SYMMETRY_TOLERANCE`] is tolerated and resolved in favor of the lower
    /// triangle.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(MatrixError::NotSquare {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
            if let Some(j) = row.iter().position(|x| !x.is_finite()) {
                return Err(MatrixError::NonFinite(i, j));
            }
        }
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let lower = rows[i].as_ref()[j];
                let diff = (lower - rows[j].as_ref()[i]).abs();
                if diff > SYMMETRY_TOLERANCE {
                    return Err(MatrixError::Asymmetric { i, j, diff });
                }
                m.set(i, j, lower);
            }
        }
        Ok(m)
    }

    /// Builds from a function evaluated on the lower triangle `i >= j`.
    pub fn from_lower_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    ///
    /// Panics on a non-finite value.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(value.is_finite(), "non-finite matrix entry");
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub(crate) fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        SymMatrix::from_lower_fn(idx.len(), |a, b| self.get(idx[a], idx[b]))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `trace(self * other)`.
    pub fn frobenius_dot(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    /// Largest entrywise difference.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// `self + alpha * I`.
    pub fn shifted(&self, alpha: f64) -> SymMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let d = m.get(i, i) + alpha;
            m.set(i, i, d);
        }
        m
    }

    /// `self + v vᵀ`.
    pub fn add_outer(&mut self, v: &[f64]) {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        for i in 0..self.n {
            if v[i] == 0.0 {
                continue;
            }
            for j in 0..self.n {
                self.data[i * self.n + j] += v[i] * v[j];
            }
        }
    }

    /// Determinant by LU factorization with partial pivoting.
    pub fn determinant(&self) -> f64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].abs().total_cmp(&a[y * n + k].abs()))
                .expect("non-empty pivot range");
            if a[p * n + k] == 0.0 {
                return 0.0;
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                if f == 0.0 {
                    continue;
                }
                for j in k + 1..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
        det
    }

    /// Product of the Euclidean norms of the rows; bounds `|det|` from above.
    pub fn hadamard_bound(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .map(|x| x * x)
                    .sum::<f64>()
                    .sqrt()
            })
            .product()
    }
}
