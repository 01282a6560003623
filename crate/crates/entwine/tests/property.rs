//! Property tests for the exact linear algebra core: the invariants hold
//! for arbitrary small matrices over the rationals and a prime field.

use entwine::exactlin::{quotient_projection, FieldSpec, Matrix};
use proptest::prelude::*;

#[derive(Debug, Clone, Copy)]
enum Ground {
    Q,
    F5,
}

impl Ground {
    fn spec(self) -> FieldSpec {
        match self {
            Ground::Q => FieldSpec::Rationals,
            Ground::F5 => FieldSpec::prime_field(5).unwrap(),
        }
    }
}

fn ground() -> impl Strategy<Value = Ground> {
    prop_oneof![Just(Ground::Q), Just(Ground::F5)]
}

fn matrix(ground: Ground, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |entries| Matrix::from_i64(ground.spec(), rows, cols, &entries))
}

fn sized_matrix(g: Ground) -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| matrix(g, r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_rank_stable(g in ground(), m in ground().prop_flat_map(sized_matrix)) {
        let _ = g;
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(&pivots, &pivots2);
        prop_assert_eq!(pivots.len(), m.rank());
    }

    #[test]
    fn kernel_columns_are_independent_solutions(m in ground().prop_flat_map(sized_matrix)) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.cols, m.cols - m.rank());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols);
    }

    #[test]
    fn affine_solutions_solve(g in ground(), dims in (1usize..=4, 1usize..=4)) {
        let (rows, cols) = dims;
        let strategy = (matrix(g, rows, cols), matrix(g, rows, 1));
        proptest!(|((a, b) in strategy)| {
            if let Some(sol) = a.solve_affine(&b).unwrap() {
                prop_assert_eq!(a.mul(&sol.particular), b);
                prop_assert!(a.mul(&sol.kernel).is_zero());
            } else {
                // inconsistent: the rhs enlarges the column span
                prop_assert!(a.rank() < a.hstack(&b).rank());
            }
        });
    }

    #[test]
    fn kron_respects_composition(g in ground(), dims in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=2, 1usize..=2, 1usize..=2)) {
        let (m, k, n, p, q, r) = dims;
        let strategy = (matrix(g, m, k), matrix(g, p, q), matrix(g, k, n), matrix(g, q, r));
        proptest!(|((a, b, c, d) in strategy)| {
            let lhs = a.kron(&b).mul(&c.kron(&d));
            let rhs = a.mul(&c).kron(&b.mul(&d));
            prop_assert_eq!(lhs, rhs);
        });
    }

    #[test]
    fn quotient_sections_split(g in ground(), dims in (1usize..=5, 0usize..=5)) {
        let (ambient, rel_cols) = dims;
        let strategy = matrix(g, ambient, rel_cols);
        proptest!(|(relations in strategy)| {
            let q = quotient_projection(ambient, &relations);
            prop_assert_eq!(q.dim, ambient - relations.rank());
            prop_assert_eq!(
                q.projection.mul(&q.section),
                Matrix::identity(relations.field, q.dim)
            );
            prop_assert!(q.projection.mul(&relations).is_zero());
        });
    }
}
