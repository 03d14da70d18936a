use serde::{Deserialize, Serialize};

use super::{SymMatrix, Tolerance};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues in ascending order, by cyclic Jacobi rotations.
///
/// Sweeps continue until the off-diagonal mass is below machine precision
/// relative to the whole matrix.
pub fn sym_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut a = m.as_slice().to_vec();
    let total: f64 = a.iter().map(|x| x * x).sum();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        if off == 0.0 || off <= (f64::EPSILON * 1e-2).powi(2) * total {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    PsdSingular,
    Indefinite,
}

impl Definiteness {
    pub fn is_psd(self) -> bool {
        !matches!(self, Definiteness::Indefinite)
    }
}

/// Definiteness verdict together with the numbers behind it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumCheck {
    pub definiteness: Definiteness,
    pub min_eigenvalue: f64,
    /// The zero threshold that was applied.
    pub threshold: f64,
}

/// Classifies sorted eigenvalues against `tol`, scaling by the largest
/// absolute eigenvalue in relative mode.
pub(crate) fn classify(eigenvalues: &[f64], tol: &Tolerance) -> SpectrumCheck {
    let (Some(&min), Some(&max)) = (eigenvalues.first(), eigenvalues.last()) else {
        return SpectrumCheck {
            definiteness: Definiteness::PositiveDefinite,
            min_eigenvalue: f64::INFINITY,
            threshold: 0.0,
        };
    };
    let threshold = tol.threshold(min.abs().max(max.abs()));
    let definiteness = if min > threshold {
        Definiteness::PositiveDefinite
    } else if min < -threshold {
        Definiteness::Indefinite
    } else {
        Definiteness::PsdSingular
    };
    SpectrumCheck {
        definiteness,
        min_eigenvalue: min,
        threshold,
    }
}

pub fn spectrum_check(m: &SymMatrix, tol: &Tolerance) -> SpectrumCheck {
    classify(&sym_eigenvalues(m), tol)
}

/// `PositiveDefinite` when the smallest eigenvalue clears the threshold,
/// `Indefinite` when it is below minus the threshold, `PsdSingular` between.
pub fn definiteness(m: &SymMatrix, tol: &Tolerance) -> Definiteness {
    spectrum_check(m, tol).definiteness
}
