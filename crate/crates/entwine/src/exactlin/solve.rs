use super::{FieldSpec, Matrix};

/// Flattens a list of residual matrices into one tall column vector
/// (row-major within each matrix, matrices in order).
pub fn flatten_residuals(field: FieldSpec, residuals: &[Matrix]) -> Matrix {
    let total: usize = residuals.iter().map(|m| m.rows * m.cols).sum();
    let mut out = Matrix::zeros(field, total, 1);
    let mut k = 0;
    for m in residuals {
        for r in 0..m.rows {
            for c in 0..m.cols {
                out.set(k, 0, m.at(r, c).clone());
                k += 1;
            }
        }
    }
    out
}

/// Basis of the solution space of a homogeneous linear condition, found by
/// probing: `residuals(k)` must evaluate the condition on the `k`-th unit
/// assignment of the unknown vector. Returns a matrix whose columns span all
/// solutions.
pub fn solution_space(
    field: FieldSpec,
    unknowns: usize,
    residuals: impl Fn(usize) -> Vec<Matrix>,
) -> Matrix {
    let mut constraint: Option<Matrix> = None;
    for k in 0..unknowns {
        let col = flatten_residuals(field, &residuals(k));
        constraint = Some(match constraint {
            None => col,
            Some(m) => m.hstack(&col),
        });
    }
    match constraint {
        None => Matrix::zeros(field, 0, 0),
        Some(m) => m.kernel_basis(),
    }
}

/// Solves an affine condition `residuals(x) = 0` where `residuals` is affine
/// in the unknown vector `x` (an `unknowns x 1` matrix). Returns a particular
/// solution and the homogeneous kernel, or `None` when inconsistent.
pub fn affine_space(
    field: FieldSpec,
    unknowns: usize,
    residuals: impl Fn(&Matrix) -> Vec<Matrix>,
) -> Option<(Matrix, Matrix)> {
    let zero = Matrix::zeros(field, unknowns, 1);
    let at_zero = flatten_residuals(field, &residuals(&zero));
    let rhs = at_zero.scale(&field.neg(&field.one()));
    let mut cols = Vec::with_capacity(unknowns);
    for k in 0..unknowns {
        let unit = Matrix::basis_column(field, unknowns, k);
        let col = flatten_residuals(field, &residuals(&unit)).sub(&at_zero);
        cols.push(col);
    }
    let mut a = Matrix::zeros(field, rhs.rows, unknowns);
    for (k, col) in cols.iter().enumerate() {
        for r in 0..rhs.rows {
            a.set(r, k, col.at(r, 0).clone());
        }
    }
    a.solve_affine(&rhs)
        .expect("shapes agree by construction")
        .map(|s| (s.particular, s.kernel))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_recovers_kernel() {
        // condition: x0 + x1 = 0 and x1 - x2 = 0, expressed as a residual
        let f = FieldSpec::Rationals;
        let a = Matrix::from_i64(f, 2, 3, &[1, 1, 0, 0, 1, -1]);
        let basis = solution_space(f, 3, |k| {
            vec![a.mul(&Matrix::basis_column(f, 3, k))]
        });
        assert_eq!(basis.cols, 1);
        assert!(a.mul(&basis).is_zero());
    }

    #[test]
    fn affine_probe() {
        let f = FieldSpec::Rationals;
        let a = Matrix::from_i64(f, 1, 2, &[1, 1]);
        let b = Matrix::from_i64(f, 1, 1, &[2]);
        let (x, k) = affine_space(f, 2, |v| vec![a.mul(v).sub(&b)]).unwrap();
        assert_eq!(a.mul(&x), b);
        assert_eq!(k.cols, 1);
        assert!(affine_space(f, 1, |v| {
            let zero_map = Matrix::zeros(f, 1, 1);
            vec![zero_map.mul(v).sub(&Matrix::from_i64(f, 1, 1, &[1]))]
        })
        .is_none());
    }
}
