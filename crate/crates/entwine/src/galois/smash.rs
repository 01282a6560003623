//! Smash products: a category with a compatible Hopf-algebra action on its
//! hom spaces gives a new category with hom spaces tensored by the Hopf
//! algebra, twisted composition, and a canonical comodule structure that
//! makes it a Galois extension of the original category.

use crate::algebra::{verify_hopf, HopfAlgebra};
use crate::exactlin::{permute_legs, Matrix};
use crate::lincat::{verify_category, LinCategory};
use crate::verdict::Verdict;

use super::GaloisData;

/// A category together with a left module structure of a Hopf algebra on
/// every hom space, compatible with composition and identities.
#[derive(Debug, Clone)]
pub struct SmashInput {
    pub cat: LinCategory,
    pub hopf: HopfAlgebra,
    /// `actions[x][y] : H (x) Hom(x,y) -> Hom(x,y)`.
    pub actions: Vec<Vec<Matrix>>,
}

fn verify_module_category(input: &SmashInput) -> Verdict {
    let c = &input.cat;
    let h = &input.hopf;
    let f = c.field;
    let dh = h.dim();
    let idh = Matrix::identity(f, dh);
    let n = c.n_objects();
    let mut verdict = verify_category(c);
    verdict.merge(verify_hopf(h));
    for x in 0..n {
        for y in 0..n {
            let hom = c.hom(x, y);
            let act = &input.actions[x][y];
            if (act.rows, act.cols) != (hom, dh * hom) {
                verdict.push(
                    "action shape",
                    format!("objects ({},{})", c.objects[x], c.objects[y]),
                );
                continue;
            }
            let idhom = Matrix::identity(f, hom);
            if act.mul(&h.mult.kron(&idhom)) != act.mul(&idh.kron(act)) {
                verdict.push(
                    "action associativity",
                    format!("objects ({},{})", c.objects[x], c.objects[y]),
                );
            }
            if act.mul(&h.unit.kron(&idhom)) != idhom {
                verdict.push(
                    "action unit law",
                    format!("objects ({},{})", c.objects[x], c.objects[y]),
                );
            }
        }
    }
    // k . (g f) = (k_1 . g)(k_2 . f)
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (hyz, hxy) = (c.hom(y, z), c.hom(x, y));
                if hyz * hxy == 0 {
                    continue;
                }
                let lhs = input.actions[x][z].mul(&idh.kron(&c.compose[x][y][z]));
                let reorder = permute_legs(f, &[dh, dh, hyz, hxy], &[0, 2, 1, 3]);
                let rhs = c.compose[x][y][z]
                    .mul(&input.actions[y][z].kron(&input.actions[x][y]))
                    .mul(&reorder)
                    .mul(&h.coalgebra.delta.kron(&Matrix::identity(f, hyz * hxy)));
                if lhs != rhs {
                    verdict.push(
                        "action respects composition",
                        format!("objects ({},{},{})", c.objects[x], c.objects[y], c.objects[z]),
                    );
                }
            }
        }
    }
    // k . id = counit(k) id
    for x in 0..n {
        let lhs = input.actions[x][x].mul(&idh.kron(&c.identities[x]));
        let rhs = c.identities[x].mul(&h.coalgebra.counit);
        if lhs != rhs {
            verdict.push("action fixes identities", format!("object {}", c.objects[x]));
        }
    }
    verdict
}

/// Builds the smash product category: hom spaces `Hom(x,y) (x) H` with
/// twisted composition, hom coactions by the comultiplication of the second
/// leg. Returns the result as Galois data over the underlying coalgebra of
/// the Hopf algebra.
pub fn smash_product(input: &SmashInput) -> Result<GaloisData, Verdict> {
    let laws = verify_module_category(input);
    if !laws.ok() {
        return Err(laws);
    }
    let c = &input.cat;
    let h = &input.hopf;
    let f = c.field;
    let dh = h.dim();
    let n = c.n_objects();
    let hom_dims: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| c.hom(x, y) * dh).collect()).collect();
    let mut compose = vec![vec![vec![Matrix::zeros(f, 0, 0); n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (hyz, hxy) = (c.hom(y, z), c.hom(x, y));
                // (g # k)(f # h) = g (k_1 . f) # k_2 h
                let split = Matrix::identity(f, hyz)
                    .kron(&h.coalgebra.delta)
                    .kron(&Matrix::identity(f, hxy * dh));
                let reorder = permute_legs(f, &[hyz, dh, dh, hxy, dh], &[0, 1, 3, 2, 4]);
                let act_middle = Matrix::identity(f, hyz)
                    .kron(&input.actions[x][y])
                    .kron(&Matrix::identity(f, dh * dh));
                let fold = c.compose[x][y][z].kron(&h.mult);
                compose[x][y][z] = fold.mul(&act_middle).mul(&reorder).mul(&split);
            }
        }
    }
    let identities: Vec<Matrix> =
        (0..n).map(|x| c.identities[x].kron(&h.unit)).collect();
    let hom_basis: Vec<Vec<Vec<String>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let mut labels = Vec::new();
                    for i in 0..c.hom(x, y) {
                        for a in 0..dh {
                            labels.push(format!(
                                "{}#{}",
                                c.label(x, y, i),
                                h.coalgebra.basis[a]
                            ));
                        }
                    }
                    labels
                })
                .collect()
        })
        .collect();
    let smash = LinCategory {
        field: f,
        objects: c.objects.clone(),
        hom_dims,
        compose,
        identities,
        hom_basis,
    };
    let cat_check = verify_category(&smash);
    if !cat_check.ok() {
        return Err(cat_check);
    }
    let coactions: Vec<Vec<Matrix>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| Matrix::identity(f, c.hom(x, y)).kron(&h.coalgebra.delta))
                .collect()
        })
        .collect();
    Ok(GaloisData { cat: smash, coalg: h.coalgebra.clone(), coactions })
}

/// The antipode-based inverse of the canonical map on a smash product:
/// `(g # k) (x) k' -> (g # k)(id # S(k'_1)) (x) (id # k'_2)`, written into
/// the quotient coordinates of the tensor presentation.
pub fn smash_can_inverse(
    smash: &GaloisData,
    input: &SmashInput,
    cm: &super::CanonicalMap,
    x: usize,
    y: usize,
) -> Matrix {
    let f = smash.field();
    let d = &smash.cat;
    let h = &input.hopf;
    let dh = h.dim();
    let hom = d.hom(x, y);
    let idh = Matrix::identity(f, hom);
    let tensor = &cm.tensors[x][y];
    // k' -> id_x # S(k'_1)  and  k' -> id_x # k'_2
    let endx_c = input.cat.identities[x].clone();
    let to_antipode = endx_c.kron(&h.antipode);
    let to_plain = endx_c.kron(&Matrix::identity(f, dh));
    let spread = idh.kron(
        &to_antipode
            .kron(&to_plain)
            .mul(&h.coalgebra.delta),
    );
    // compose the first two legs, land in the block at x
    let fold = d.compose[x][x][y].kron(&Matrix::identity(f, d.hom(x, x)));
    tensor
        .space
        .projection
        .mul(&tensor.embed_block(f, x))
        .mul(&fold)
        .mul(&spread)
}
