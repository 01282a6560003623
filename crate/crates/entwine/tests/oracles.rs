//! Exhaustive brute-force oracles over GF(2).
//!
//! The solvers compute the dimensions of the theta space, the eta space and
//! the natural-transformation space by linear algebra. These tests recount
//! them independently: enumerate every assignment of the unknown vector over
//! GF(2) and check membership with the naive element-wise evaluators from
//! the shared oracle module, then compare log2(#solutions) with the solver's
//! basis size.

mod common;

use common::*;
use entwine::frobsep::{nat_space, solve_v1, solve_w1, NatDirection};

#[test]
fn theta_space_dimensions_match_enumeration() {
    for (name, e) in gf2_instances() {
        let k = Consts { e: &e };
        let dc2 = k.dc() * k.dc();
        let mut offsets = Vec::new();
        let mut total = 0;
        for x in 0..k.n() {
            offsets.push(total);
            total += k.hom(x, x) * dc2;
        }
        assert!(total <= 20, "{name}: {total} unknowns");
        let brute = count_dim(total, |bits| theta_is_member(&k, bits, &offsets));
        let solver = solve_v1(&e).len();
        assert_eq!(brute, solver, "{name}");
    }
}

#[test]
fn eta_space_dimensions_match_enumeration() {
    for (name, e) in gf2_instances() {
        let k = Consts { e: &e };
        let mut offsets = Vec::new();
        let mut total = 0;
        for x in 0..k.n() {
            offsets.push(total);
            total += k.hom(x, x) * k.dc();
        }
        assert!(total <= 20, "{name}: {total} unknowns");
        let brute = count_dim(total, |bits| eta_is_member(&k, bits, &offsets));
        let solver = solve_w1(&e).len();
        assert_eq!(brute, solver, "{name}");
    }
}

#[test]
fn nat_space_dimensions_match_enumeration() {
    for (name, e) in gf2_instances() {
        let k = Consts { e: &e };
        let dc = k.dc();
        let n = k.n();
        let mut offsets = vec![vec![0usize; n]; n];
        let mut total = 0;
        for x in 0..n {
            for y in 0..n {
                offsets[x][y] = total;
                let hc = k.hom(x, y) * dc;
                total += hc * hc;
            }
        }
        if total > 20 {
            continue; // enumeration bound
        }
        let brute = count_dim(total, |bits| nat_is_member(&k, bits, &offsets));
        let solver = nat_space(&e, NatDirection::FromDualTensorH).unwrap().len();
        assert_eq!(brute, solver, "{name}");
    }
}
