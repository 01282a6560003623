//! Finite-dimensional coalgebras, comodules, dual (convolution) algebras,
//! bialgebras and Hopf algebras, all given by structure constants over an
//! exact field.
//!
//! A coalgebra of dimension `d` is stored as its comultiplication matrix
//! (`d^2 x d`, column `j` = coordinates of the coproduct of the `j`-th basis
//! vector in the row-major tensor basis) and its counit row. All laws are
//! decidable matrix identities and [`verify_coalgebra`] & friends check them
//! exactly.

use crate::exactlin::{swap_legs, FieldSpec, Matrix};
use crate::verdict::Verdict;

/// A coalgebra `(C, delta, counit)` over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Coalgebra {
    pub field: FieldSpec,
    pub dim: usize,
    /// `dim^2 x dim`; column `j` holds the coproduct of basis vector `j`.
    pub delta: Matrix,
    /// `1 x dim`.
    pub counit: Matrix,
    /// Basis labels, for diagnostics and serialization.
    pub basis: Vec<String>,
}

/// A right comodule over a coalgebra: `rho : M -> M (x) C`.
#[derive(Debug, Clone, PartialEq)]
pub struct Comodule {
    pub dim: usize,
    /// `(dim * c.dim) x dim`.
    pub rho: Matrix,
}

/// The coordinate dual basis of a coalgebra together with its convolution
/// product. The product table is the transpose of the comultiplication, so
/// `(c* . d*)(x) = c*(x_1) d*(x_2)` holds by construction; associativity and
/// unitality mirror the coalgebra laws.
#[derive(Debug, Clone)]
pub struct DualBasisData {
    /// `dim x dim^2`: multiplication `C* (x) C* -> C*` in dual coordinates.
    pub convolution: Matrix,
    /// `dim x 1`: the counit viewed as the unit element of the dual algebra.
    pub unit: Matrix,
}

/// A Hopf algebra: bialgebra structure plus antipode.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAlgebra {
    pub coalgebra: Coalgebra,
    /// `dim x dim^2`.
    pub mult: Matrix,
    /// `dim x 1`.
    pub unit: Matrix,
    /// `dim x dim`.
    pub antipode: Matrix,
}

impl Coalgebra {
    pub fn new(field: FieldSpec, dim: usize, delta: Matrix, counit: Matrix, basis: Vec<String>) -> Self {
        assert_eq!(delta.rows, dim * dim, "delta rows");
        assert_eq!(delta.cols, dim, "delta cols");
        assert_eq!((counit.rows, counit.cols), (1, dim), "counit shape");
        let basis = if basis.is_empty() {
            (0..dim).map(|i| format!("c{i}")).collect()
        } else {
            basis
        };
        assert_eq!(basis.len(), dim);
        Coalgebra { field, dim, delta, counit, basis }
    }

    /// The one-dimensional coalgebra with a single group-like element.
    pub fn trivial(field: FieldSpec) -> Self {
        Coalgebra::new(
            field,
            1,
            Matrix::identity(field, 1),
            Matrix::identity(field, 1),
            vec!["e".into()],
        )
    }

    /// The group-like coalgebra on `n` basis vectors: every basis vector is
    /// group-like.
    pub fn group_like(field: FieldSpec, n: usize) -> Self {
        let mut delta = Matrix::zeros(field, n * n, n);
        let mut counit = Matrix::zeros(field, 1, n);
        for j in 0..n {
            delta.set(j * n + j, j, field.one());
            counit.set(0, j, field.one());
        }
        Coalgebra::new(field, n, delta, counit, (0..n).map(|i| format!("g{i}")).collect())
    }

    /// The regular comodule: `C` coacting on itself by comultiplication.
    pub fn regular_comodule(&self) -> Comodule {
        Comodule { dim: self.dim, rho: self.delta.clone() }
    }

    /// Dual-basis data: the convolution algebra on coordinate duals.
    pub fn dual_basis(&self) -> DualBasisData {
        DualBasisData { convolution: self.delta.transpose(), unit: self.counit.transpose() }
    }

    /// The right coaction of `C` on its own dual,
    /// `c* -> sum_i (d_i* . c*) (x) d_i`, expressed in dual coordinates.
    pub fn dual_comodule_structure(&self) -> Comodule {
        let f = self.field;
        let d = self.dim;
        let conv = self.dual_basis().convolution;
        let mut rho = Matrix::zeros(f, d * d, d);
        // column j: coaction of d_j*; entry at (a, i) receives the a-th
        // coordinate of d_i* . d_j*
        for j in 0..d {
            for i in 0..d {
                for a in 0..d {
                    rho.set(a * d + i, j, conv.at(a, i * d + j).clone());
                }
            }
        }
        Comodule { dim: d, rho }
    }
}

/// Checks coassociativity and both counit laws; reports the first violated
/// identity and a witness basis vector.
pub fn verify_coalgebra(c: &Coalgebra) -> Verdict {
    let f = c.field;
    let d = c.dim;
    let id = Matrix::identity(f, d);
    let mut verdict = Verdict::default();

    let lhs = c.delta.kron(&id).mul(&c.delta);
    let rhs = id.kron(&c.delta).mul(&c.delta);
    report_column_mismatch(&mut verdict, "coassociativity", &lhs, &rhs, &c.basis);

    let left = c.counit.kron(&id).mul(&c.delta);
    report_column_mismatch(&mut verdict, "left counit law", &left, &id, &c.basis);
    let right = id.kron(&c.counit).mul(&c.delta);
    report_column_mismatch(&mut verdict, "right counit law", &right, &id, &c.basis);
    verdict
}

/// Checks the comodule laws of `rho` over `base`.
pub fn verify_comodule(base: &Coalgebra, v: &Comodule) -> Verdict {
    let f = base.field;
    let d = v.dim;
    let id = Matrix::identity(f, d);
    let idc = Matrix::identity(f, base.dim);
    let mut verdict = Verdict::default();
    if v.rho.rows != d * base.dim || v.rho.cols != d {
        verdict.push("coaction shape", format!("{}x{}", v.rho.rows, v.rho.cols));
        return verdict;
    }
    let labels: Vec<String> = (0..d).map(|i| format!("m{i}")).collect();
    let lhs = v.rho.kron(&idc).mul(&v.rho);
    let rhs = id.kron(&base.delta).mul(&v.rho);
    report_column_mismatch(&mut verdict, "coaction coassociativity", &lhs, &rhs, &labels);
    let counital = id.kron(&base.counit).mul(&v.rho);
    report_column_mismatch(&mut verdict, "coaction counit law", &counital, &id, &labels);
    verdict
}

/// Convolution product of two dual vectors (coordinates w.r.t. the dual
/// basis): `(f . g)(x) = f(x_1) g(x_2)`.
pub fn convolution_mult(c: &Coalgebra, f_coords: &Matrix, g_coords: &Matrix) -> Matrix {
    assert_eq!((f_coords.rows, f_coords.cols), (c.dim, 1));
    assert_eq!((g_coords.rows, g_coords.cols), (c.dim, 1));
    c.dual_basis().convolution.mul(&f_coords.kron(g_coords))
}

impl HopfAlgebra {
    /// The group algebra of the cyclic group of order `n`: basis indexed by
    /// group elements, multiplication by index addition mod `n`.
    pub fn cyclic_group_algebra(field: FieldSpec, n: usize) -> Self {
        let coalgebra = Coalgebra::group_like(field, n);
        let mut mult = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                mult.set((i + j) % n, i * n + j, field.one());
            }
        }
        let unit = Matrix::basis_column(field, n, 0);
        let mut antipode = Matrix::zeros(field, n, n);
        for i in 0..n {
            antipode.set((n - i) % n, i, field.one());
        }
        HopfAlgebra { coalgebra, mult, unit, antipode }
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.coalgebra.field
    }
}

/// Checks all bialgebra and antipode identities.
pub fn verify_hopf(h: &HopfAlgebra) -> Verdict {
    let f = h.field();
    let d = h.dim();
    let id = Matrix::identity(f, d);
    let c = &h.coalgebra;
    let mut verdict = verify_coalgebra(c);
    let labels = &c.basis;

    // algebra laws
    let assoc_l = h.mult.mul(&h.mult.kron(&id));
    let assoc_r = h.mult.mul(&id.kron(&h.mult));
    if assoc_l != assoc_r {
        verdict.push("multiplication associativity", "basis triple");
    }
    let unit_l = h.mult.mul(&h.unit.kron(&id));
    report_column_mismatch(&mut verdict, "left unit law", &unit_l, &id, labels);
    let unit_r = h.mult.mul(&id.kron(&h.unit));
    report_column_mismatch(&mut verdict, "right unit law", &unit_r, &id, labels);

    // delta and counit are algebra maps
    let mid_swap = id.kron(&swap_legs(f, d, d)).kron(&id);
    let delta_mult = c.delta.mul(&h.mult);
    let mult_sq = h.mult.kron(&h.mult).mul(&mid_swap).mul(&c.delta.kron(&c.delta));
    if delta_mult != mult_sq {
        verdict.push("comultiplication is an algebra map", "basis pair");
    }
    if c.delta.mul(&h.unit) != h.unit.kron(&h.unit) {
        verdict.push("comultiplication preserves the unit", "unit");
    }
    if c.counit.mul(&h.mult) != c.counit.kron(&c.counit) {
        verdict.push("counit is an algebra map", "basis pair");
    }
    if c.counit.mul(&h.unit) != Matrix::identity(f, 1) {
        verdict.push("counit preserves the unit", "unit");
    }

    // antipode laws
    let target = h.unit.mul(&c.counit);
    let s_left = h.mult.mul(&h.antipode.kron(&id)).mul(&c.delta);
    report_column_mismatch(&mut verdict, "antipode law (left)", &s_left, &target, labels);
    let s_right = h.mult.mul(&id.kron(&h.antipode)).mul(&c.delta);
    report_column_mismatch(&mut verdict, "antipode law (right)", &s_right, &target, labels);
    verdict
}

fn report_column_mismatch(verdict: &mut Verdict, law: &str, lhs: &Matrix, rhs: &Matrix, labels: &[String]) {
    if lhs == rhs {
        return;
    }
    for j in 0..lhs.cols {
        if lhs.column(j) != rhs.column(j) {
            verdict.push(law, labels.get(j).cloned().unwrap_or_else(|| format!("column {j}")));
            return;
        }
    }
    verdict.push(law, "shape");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn trivial_coalgebra_verifies() {
        assert!(verify_coalgebra(&Coalgebra::trivial(q())).ok());
    }

    #[test]
    fn group_like_coalgebra_verifies() {
        assert!(verify_coalgebra(&Coalgebra::group_like(q(), 2)).ok());
    }

    #[test]
    fn broken_counit_is_reported_with_witness() {
        let mut c = Coalgebra::group_like(q(), 2);
        // killing the counit on g0 makes (counit (x) id) delta (g0) = 0 != g0
        c.counit.set(0, 0, q().zero());
        let v = verify_coalgebra(&c);
        assert!(!v.ok());
        let first = v.first().unwrap();
        assert!(first.law.contains("counit"));
        assert_eq!(first.witness, "g0");
    }

    #[test]
    fn regular_comodule_verifies() {
        let c = Coalgebra::group_like(q(), 2);
        assert!(verify_comodule(&c, &c.regular_comodule()).ok());
        let c1 = Coalgebra::trivial(q());
        assert!(verify_comodule(&c1, &c1.regular_comodule()).ok());
    }

    #[test]
    fn scaled_coaction_fails_counit() {
        let c = Coalgebra::group_like(q(), 2);
        let mut m = c.regular_comodule();
        m.rho = m.rho.scale(&q().from_i64(2));
        let v = verify_comodule(&c, &m);
        assert!(!v.ok());
        assert!(v.failures.iter().any(|x| x.law.contains("counit")));
    }

    #[test]
    fn convolution_unit_and_orthogonality() {
        let c = Coalgebra::group_like(q(), 2);
        // counit is the unit of convolution
        let eps = c.counit.transpose();
        let f = Matrix::from_i64(q(), 2, 1, &[3, -5]);
        assert_eq!(convolution_mult(&c, &eps, &f), f);
        assert_eq!(convolution_mult(&c, &f, &eps), f);
        // duals of distinct group-likes are orthogonal idempotents
        let g0 = Matrix::basis_column(q(), 2, 0);
        let g1 = Matrix::basis_column(q(), 2, 1);
        assert_eq!(convolution_mult(&c, &g0, &g0), g0);
        assert!(convolution_mult(&c, &g0, &g1).is_zero());
    }

    #[test]
    fn convolution_is_associative_on_bases() {
        for c in [Coalgebra::group_like(q(), 3), comatrix_coalgebra(2)] {
            let d = c.dim;
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let ei = Matrix::basis_column(q(), d, i);
                        let ej = Matrix::basis_column(q(), d, j);
                        let ek = Matrix::basis_column(q(), d, k);
                        let l = convolution_mult(&c, &convolution_mult(&c, &ei, &ej), &ek);
                        let r = convolution_mult(&c, &ei, &convolution_mult(&c, &ej, &ek));
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    /// Comatrix coalgebra on n x n matrix units: delta(e_ij) = sum_k e_ik (x) e_kj.
    fn comatrix_coalgebra(n: usize) -> Coalgebra {
        let d = n * n;
        let f = q();
        let mut delta = Matrix::zeros(f, d * d, d);
        let mut counit = Matrix::zeros(f, 1, d);
        let e = |i: usize, j: usize| i * n + j;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    delta.set(e(i, k) * d + e(k, j), e(i, j), f.one());
                }
                if i == j {
                    counit.set(0, e(i, j), f.one());
                }
            }
        }
        Coalgebra::new(f, d, delta, counit, (0..d).map(|x| format!("e{}{}", x / n, x % n)).collect())
    }

    #[test]
    fn dual_comodule_on_trivial_and_group_like() {
        let c1 = Coalgebra::trivial(q());
        let m = c1.dual_comodule_structure();
        assert_eq!(m.rho, Matrix::identity(q(), 1));

        // over the group-like coalgebra, rho(g_i*) = g_i* (x) g_i
        let c = Coalgebra::group_like(q(), 2);
        let m = c.dual_comodule_structure();
        assert!(verify_comodule(&c, &m).ok());
        for i in 0..2 {
            let col = m.rho.column(i);
            for a in 0..2 {
                for b in 0..2 {
                    let expect = if a == i && b == i { q().one() } else { q().zero() };
                    assert_eq!(col.at(a * 2 + b, 0), &expect);
                }
            }
        }
    }

    #[test]
    fn dual_comodule_on_comatrix_coalgebra() {
        let c = comatrix_coalgebra(2);
        assert!(verify_coalgebra(&c).ok());
        assert!(verify_comodule(&c, &c.dual_comodule_structure()).ok());
    }

    #[test]
    fn dual_basis_identity_holds() {
        // sum_{i,j} (d_i* . d_j*) (x) d_i (x) d_j = sum_j d_j* (x) delta(d_j)
        // as vectors in C* (x) C (x) C, checked coordinatewise.
        for c in [Coalgebra::group_like(q(), 2), comatrix_coalgebra(2)] {
            let d = c.dim;
            let conv = c.dual_basis().convolution;
            for a in 0..d {
                for x in 0..d {
                    for y in 0..d {
                        // lhs coefficient of d_a* (x) d_x (x) d_y
                        let lhs = conv.at(a, x * d + y).clone();
                        // rhs: [a-th dual] (x) delta(d_a) coefficient at (x, y)
                        let rhs = c.delta.at(x * d + y, a).clone();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn z2_group_algebra_is_hopf() {
        let h = HopfAlgebra::cyclic_group_algebra(q(), 2);
        assert!(verify_hopf(&h).ok());
        // antipode fixes g since g is its own inverse
        assert_eq!(h.antipode, Matrix::identity(q(), 2));
    }

    #[test]
    fn zero_antipode_fails() {
        let mut h = HopfAlgebra::cyclic_group_algebra(q(), 2);
        h.antipode = Matrix::zeros(q(), 2, 2);
        let v = verify_hopf(&h);
        assert!(!v.ok());
        assert!(v.failures.iter().any(|x| x.law.contains("antipode")));
    }

    #[test]
    fn z2_group_algebra_mod3() {
        let f = FieldSpec::prime_field(3).unwrap();
        let h = HopfAlgebra::cyclic_group_algebra(f, 2);
        assert!(verify_hopf(&h).ok());
        assert!(matches!(h.mult.at(0, 3), Scalar::Mod(1)));
    }
}
