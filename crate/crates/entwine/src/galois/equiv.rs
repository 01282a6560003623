//! The equivalence between modules over the coinvariants and entwined
//! modules of a Galois extension, checked on concrete test modules.
//!
//! One direction tensors a module over the coinvariants with the hom
//! bimodule; the other takes coinvariants of an entwined module against the
//! group-like collection carried by the coaction of identities. Both
//! composites are materialized and checked to be isomorphisms, fiber by
//! fiber, together with the monomorphism embedding a module into its tensor.

use crate::entwine::{verify_entwined_module, EntwinedModule, Entwining};
use crate::exactlin::Matrix;
use crate::lincat::{
    direct_sum, distribute_left, representable_left_idx, tensor_over_sub, LinCategory, RightModule,
    Subcategory, TensorOverSub,
};
use crate::verdict::Verdict;

use super::{CanonicalMap, GaloisData, TranslationMap};

/// Outcome of the roundtrip checks, with dimension bookkeeping per test
/// module and object.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub verdict: Verdict,
    /// Lines like `module 0 at x: 1 -> 2 -> 1`.
    pub bookkeeping: Vec<String>,
}

/// Tensors a module over the coinvariants with the hom bimodule, producing
/// an entwined module over the full category together with the quotient
/// presentations of its fibers.
pub fn module_tensor_h(
    g: &GaloisData,
    sub: &Subcategory,
    e_cat: &LinCategory,
    m: &RightModule,
) -> (EntwinedModule, Vec<TensorOverSub>) {
    let f = g.field();
    let d = &g.cat;
    let dc = g.coalg.dim;
    let n = d.n_objects();
    let tensors: Vec<TensorOverSub> = (0..n)
        .map(|y| {
            let left = sub.restrict_left(d, &representable_left_idx(d, y));
            tensor_over_sub(e_cat, m, &left)
        })
        .collect();
    let dims: Vec<usize> = tensors.iter().map(|t| t.dim()).collect();
    let mut actions = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            let hom = d.hom(x, y);
            let src = &tensors[y];
            let dst = &tensors[x];
            let mut amb = Matrix::zeros(f, dst.ambient_dim, src.ambient_dim * hom);
            for z in 0..n {
                let (mz, homyz) = src.block_dims[z];
                if mz * homyz == 0 {
                    continue;
                }
                let block = Matrix::identity(f, mz).kron(&d.compose[x][y][z]);
                let mut slice = Matrix::zeros(f, mz * homyz * hom, src.ambient_dim * hom);
                for a in 0..mz * homyz {
                    for i in 0..hom {
                        slice.set(a * hom + i, (src.offsets[z] + a) * hom + i, f.one());
                    }
                }
                amb = amb.add(&dst.embed_block(f, z).mul(&block).mul(&slice));
            }
            actions[x][y] = dst
                .space
                .projection
                .mul(&amb)
                .mul(&src.space.section.kron(&Matrix::identity(f, hom)));
        }
    }
    let coactions = (0..n)
        .map(|y| {
            let t = &tensors[y];
            let mut amb = Matrix::zeros(f, t.ambient_dim * dc, t.ambient_dim);
            for z in 0..n {
                let (mz, _) = t.block_dims[z];
                let block = Matrix::identity(f, mz).kron(&g.coactions[y][z]);
                let embed = t.embed_block(f, z);
                amb = amb.add(
                    &embed
                        .kron(&Matrix::identity(f, dc))
                        .mul(&block)
                        .mul(&embed.transpose()),
                );
            }
            let rho = t
                .space
                .projection
                .kron(&Matrix::identity(f, dc))
                .mul(&amb)
                .mul(&t.space.section);
            crate::algebra::Comodule { dim: t.dim(), rho }
        })
        .collect();
    (
        EntwinedModule { module: RightModule { dims, actions }, coactions },
        tensors,
    )
}

/// The kernel of `rho - (action against the group-like element)` at one
/// fiber: coordinates of the coinvariants.
fn coinvariant_kernel(
    g: &GaloisData,
    actions: &[Vec<Matrix>],
    dims: &[usize],
    rho_x: &Matrix,
    x: usize,
) -> Matrix {
    let f = g.field();
    let dc = g.coalg.dim;
    let endx = g.cat.hom(x, x);
    let svec = g.coactions[x][x].mul(&g.cat.identities[x]);
    let mut action_side = Matrix::zeros(f, dims[x] * dc, dims[x]);
    for i in 0..endx {
        let mi = actions[x][x]
            .mul(&Matrix::identity(f, dims[x]).kron(&Matrix::basis_column(f, endx, i)));
        for a in 0..dc {
            let coeff = svec.at(i * dc + a, 0);
            if coeff.is_zero() {
                continue;
            }
            let term = mi.kron(&Matrix::basis_column(f, dc, a)).scale(coeff);
            action_side = action_side.add(&term);
        }
    }
    rho_x.sub(&action_side).kernel_basis()
}

/// Checks both composites of the equivalence on the supplied test modules.
///
/// For each module over the coinvariants: the embedding `m -> m (x) id` is a
/// monomorphism whose image is exactly the coinvariants of the tensor, and
/// the embedding is linear over the coinvariants. For each entwined module:
/// the coinvariants form a module over the coinvariant subcategory and the
/// corestricted coaction is an isomorphism onto their tensor, with explicit
/// two-sided inverse given by evaluation.
pub fn equivalence_roundtrip(
    g: &GaloisData,
    sub: &Subcategory,
    cm: &CanonicalMap,
    taus: &TranslationMap,
    e: &Entwining,
    test_e_modules: &[RightModule],
    test_entwined: &[EntwinedModule],
) -> EquivalenceReport {
    let f = g.field();
    let d = &g.cat;
    
    let n = d.n_objects();
    let e_cat = sub.to_category(d);
    let mut verdict = Verdict::default();
    let mut bookkeeping = Vec::new();

    for (mi, m) in test_e_modules.iter().enumerate() {
        let (tensor_module, tensors) = module_tensor_h(g, sub, &e_cat, m);
        let laws = verify_entwined_module(e, &tensor_module);
        if !laws.ok() {
            verdict.push(
                "tensor of a coinvariant module is entwined",
                format!("test module {mi}"),
            );
        }
        for x in 0..n {
            let t = &tensors[x];
            // the monomorphism m -> m (x) id
            let embed = t
                .space
                .projection
                .mul(&t.embed_block(f, x))
                .mul(&Matrix::identity(f, m.dims[x]).kron(&d.identities[x]));
            if embed.rank() != m.dims[x] {
                verdict.push(
                    "embedding into the tensor is injective",
                    format!("test module {mi} at {}", d.objects[x]),
                );
            }
            // its image is exactly the coinvariants
            let coinv = coinvariant_kernel(
                g,
                &tensor_module.module.actions,
                &tensor_module.module.dims,
                &tensor_module.coactions[x].rho,
                x,
            );
            let same_dim = coinv.cols == m.dims[x];
            let mutual = same_dim && coinv.spans(&embed) && embed.spans(&coinv);
            if !mutual {
                verdict.push(
                    "coinvariants of the tensor recover the module",
                    format!("test module {mi} at {}", d.objects[x]),
                );
            }
            bookkeeping.push(format!(
                "module {mi} at {}: {} -> {} -> {}",
                d.objects[x],
                m.dims[x],
                tensor_module.module.dims[x],
                coinv.cols
            ));
        }
        // linearity of the embedding over the coinvariants
        for w in 0..n {
            for x in 0..n {
                let edim = sub.dim(w, x);
                if edim == 0 || m.dims[x] == 0 {
                    continue;
                }
                for k in 0..edim {
                    let t_w = &tensors[w];
                    let embed_w = t_w
                        .space
                        .projection
                        .mul(&t_w.embed_block(f, w))
                        .mul(&Matrix::identity(f, m.dims[w]).kron(&d.identities[w]));
                    let t_x = &tensors[x];
                    let embed_x = t_x
                        .space
                        .projection
                        .mul(&t_x.embed_block(f, x))
                        .mul(&Matrix::identity(f, m.dims[x]).kron(&d.identities[x]));
                    let via_module = embed_w.mul(
                        &m.actions[w][x]
                            .mul(&Matrix::identity(f, m.dims[x]).kron(&Matrix::basis_column(f, edim, k))),
                    );
                    let via_tensor = tensor_module.module.actions[w][x]
                        .mul(&embed_x.kron(&sub.spans[w][x].column(k)));
                    if via_module != via_tensor {
                        verdict.push(
                            "embedding is linear over the coinvariants",
                            format!("test module {mi}, span column {k} at ({},{})", d.objects[w], d.objects[x]),
                        );
                    }
                }
            }
        }
    }

    for (ni, nm) in test_entwined.iter().enumerate() {
        // coinvariants of the entwined module, fiber by fiber
        let coinv: Vec<Matrix> = (0..n)
            .map(|x| {
                coinvariant_kernel(g, &nm.module.actions, &nm.module.dims, &nm.coactions[x].rho, x)
            })
            .collect();
        // module structure over the coinvariant subcategory
        let mut co_actions = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
        let mut closed = true;
        for w in 0..n {
            for x in 0..n {
                let edim = sub.dim(w, x);
                let restricted =
                    nm.module.actions[w][x].mul(&coinv[x].kron(&sub.spans[w][x]));
                if coinv[w].cols == 0 {
                    if !restricted.is_zero() {
                        closed = false;
                    }
                    co_actions[w][x] = Matrix::zeros(f, 0, coinv[x].cols * edim);
                    continue;
                }
                match coinv[w].solve_exact(&restricted) {
                    Some(coords) => co_actions[w][x] = coords,
                    None => closed = false,
                }
            }
        }
        if !closed {
            verdict.push(
                "coinvariants closed under the coinvariant subcategory",
                format!("test entwined module {ni}"),
            );
            continue;
        }
        let co_module =
            RightModule { dims: coinv.iter().map(|c| c.cols).collect(), actions: co_actions };
        let (_, co_tensors) = module_tensor_h(g, sub, &e_cat, &co_module);
        for x in 0..n {
            // corestriction of the coaction through the translation maps
            let amb_xx = &cm.tensors[x][x];
            let spread = Matrix::identity(f, nm.module.dims[x])
                .kron(&amb_xx.space.section.mul(&taus.taus[x]));
            let block_dims: Vec<usize> =
                amb_xx.block_dims.iter().map(|(a, b)| a * b).collect();
            let dist = distribute_left(f, nm.module.dims[x], &block_dims);
            // per-block evaluation: N(x) (x) Hom(z,x) (x) Hom(x,z) -> N(z) (x) Hom(x,z)
            let per_block: Vec<Matrix> = (0..n)
                .map(|z| {
                    let (_, homxz) = amb_xx.block_dims[z];
                    nm.module.actions[z][x].kron(&Matrix::identity(f, homxz))
                })
                .collect();
            let eval = direct_sum(f, &per_block);
            let amb_rho = eval.mul(&dist).mul(&spread).mul(&nm.coactions[x].rho);
            // factor through the coinvariants blockwise
            let j = direct_sum(
                f,
                &(0..n)
                    .map(|z| coinv[z].kron(&Matrix::identity(f, d.hom(x, z))))
                    .collect::<Vec<_>>(),
            );
            let Some(factored) = j.solve_exact(&amb_rho) else {
                verdict.push(
                    "corestricted coaction factors through the coinvariants",
                    format!("test entwined module {ni} at {}", d.objects[x]),
                );
                continue;
            };
            let rho_prime = co_tensors[x].space.projection.mul(&factored);
            // evaluation inverse
            let mut fold = Matrix::zeros(f, nm.module.dims[x], co_tensors[x].ambient_dim);
            for z in 0..n {
                let block = nm.module.actions[x][z]
                    .mul(&coinv[z].kron(&Matrix::identity(f, d.hom(x, z))));
                fold = fold.add(&block.mul(&co_tensors[x].embed_block(f, z).transpose()));
            }
            let zeta = fold.mul(&co_tensors[x].space.section);
            if zeta.mul(&rho_prime) != Matrix::identity(f, nm.module.dims[x]) {
                verdict.push(
                    "evaluation after corestriction is the identity",
                    format!("test entwined module {ni} at {}", d.objects[x]),
                );
            }
            if rho_prime.mul(&zeta) != Matrix::identity(f, co_tensors[x].dim()) {
                verdict.push(
                    "corestriction after evaluation is the identity",
                    format!("test entwined module {ni} at {}", d.objects[x]),
                );
            }
            bookkeeping.push(format!(
                "entwined {ni} at {}: {} -> {} -> {}",
                d.objects[x],
                nm.module.dims[x],
                coinv[x].cols,
                co_tensors[x].dim()
            ));
        }
    }
    EquivalenceReport { verdict, bookkeeping }
}
