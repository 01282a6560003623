//! Corings over a small linear category: coalgebra objects in bimodules.
//!
//! A coring is a bimodule carrier with a comultiplication into its tensor
//! square over the category and a counit into the hom bimodule. Both
//! instances used here are built explicitly: `h (x) C` from an entwining and
//! `h (x)_E h` from a Galois extension; [`verify_coring`] checks the
//! bimodule laws, comorphism properties and coassociativity (through an
//! explicit triple-tensor quotient) as exact matrix identities. Group-like
//! collections then carve coinvariants out of coring comodules.

use crate::algebra::Coalgebra;
use crate::entwine::{EntwinedModule, Entwining};
use crate::exactlin::{quotient_projection, swap_legs, Matrix};
use crate::lincat::{
    tensor_over_sub, verify_left_module, verify_right_module, LeftModule, LinCategory, RightModule,
    Subcategory, TensorOverSub,
};
use crate::verdict::Verdict;

use super::{CanonicalMap, GaloisData};

/// A coring: a `D`-`D` bimodule with comultiplication and counit.
#[derive(Debug, Clone)]
pub struct Coring {
    pub dims: Vec<Vec<usize>>,
    /// `lact[x][y][yp] : M(x,y) (x) Hom(y,yp) -> M(x,yp)` (covariant leg).
    pub lact: Vec<Vec<Vec<Matrix>>>,
    /// `ract[x][y][xp] : M(x,y) (x) Hom(xp,x) -> M(xp,y)` (contravariant leg).
    pub ract: Vec<Vec<Vec<Matrix>>>,
    /// Pairwise tensor-square presentations `(M (x)_D M)(x,y)`.
    pub square: Vec<Vec<TensorOverSub>>,
    /// `delta[x][y] : M(x,y) ->` square quotient coordinates.
    pub delta: Vec<Vec<Matrix>>,
    /// `counit[x][y] : M(x,y) -> Hom(x,y)`.
    pub counit: Vec<Vec<Matrix>>,
}

/// A collection of diagonal coring elements, one per object.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupLikeCollection {
    /// `elements[x]` : coordinates in the carrier at `(x,x)`.
    pub elements: Vec<Matrix>,
}

/// A right comodule over a coring: a right module with a coaction into its
/// tensor against the carrier, given in the quotient coordinates of
/// `tensors`.
#[derive(Debug, Clone)]
pub struct CoringComodule {
    pub module: RightModule,
    /// `(N (x)_D M)(x,-)` presentations, one per object.
    pub tensors: Vec<TensorOverSub>,
    /// `rho[x] : N(x) ->` quotient coordinates of `tensors[x]`.
    pub rho: Vec<Matrix>,
}

impl Coring {
    /// The carrier as a right module in its contravariant slot.
    pub fn carrier_right(&self, cat: &LinCategory, y: usize) -> RightModule {
        let n = cat.n_objects();
        RightModule {
            dims: (0..n).map(|z| self.dims[z][y]).collect(),
            actions: (0..n)
                .map(|w| (0..n).map(|z| self.ract[z][y][w].clone()).collect())
                .collect(),
        }
    }

    /// The carrier as a left module in its covariant slot.
    pub fn carrier_left(&self, cat: &LinCategory, x: usize) -> LeftModule {
        let n = cat.n_objects();
        LeftModule {
            dims: (0..n).map(|z| self.dims[x][z]).collect(),
            actions: (0..n)
                .map(|z| (0..n).map(|w| self.lact[x][z][w].clone()).collect())
                .collect(),
        }
    }

    /// Right action of the category on the tensor square, in quotient
    /// coordinates.
    pub fn square_right_action(&self, cat: &LinCategory, x: usize, y: usize, xp: usize) -> Matrix {
        let f = cat.field;
        let n = cat.n_objects();
        let hom = cat.hom(xp, x);
        let src = &self.square[x][y];
        let dst = &self.square[xp][y];
        let mut amb = Matrix::zeros(f, dst.ambient_dim, src.ambient_dim * hom);
        for z in 0..n {
            let mzy = self.dims[z][y];
            let mxz = self.dims[x][z];
            if mzy * mxz == 0 {
                continue;
            }
            let block = Matrix::identity(f, mzy).kron(&self.ract[x][z][xp]);
            let mut slice = Matrix::zeros(f, mzy * mxz * hom, src.ambient_dim * hom);
            for a in 0..mzy * mxz {
                for i in 0..hom {
                    slice.set(a * hom + i, (src.offsets[z] + a) * hom + i, f.one());
                }
            }
            amb = amb.add(&dst.embed_block(f, z).mul(&block).mul(&slice));
        }
        dst.space
            .projection
            .mul(&amb)
            .mul(&src.space.section.kron(&Matrix::identity(f, hom)))
    }

    /// Left action of the category on the tensor square.
    pub fn square_left_action(&self, cat: &LinCategory, x: usize, y: usize, yp: usize) -> Matrix {
        let f = cat.field;
        let n = cat.n_objects();
        let hom = cat.hom(y, yp);
        let src = &self.square[x][y];
        let dst = &self.square[x][yp];
        let mut amb = Matrix::zeros(f, dst.ambient_dim, src.ambient_dim * hom);
        for z in 0..n {
            let mzy = self.dims[z][y];
            let mxz = self.dims[x][z];
            if mzy * mxz == 0 {
                continue;
            }
            // act on the first factor: (m (x) p) (x) g -> (g . m) (x) p
            let reorder = crate::exactlin::permute_legs(f, &[mzy, mxz, hom], &[0, 2, 1]);
            let block = self.lact[z][y][yp].kron(&Matrix::identity(f, mxz)).mul(&reorder);
            let mut slice = Matrix::zeros(f, mzy * mxz * hom, src.ambient_dim * hom);
            for a in 0..mzy * mxz {
                for i in 0..hom {
                    slice.set(a * hom + i, (src.offsets[z] + a) * hom + i, f.one());
                }
            }
            amb = amb.add(&dst.embed_block(f, z).mul(&block).mul(&slice));
        }
        dst.space
            .projection
            .mul(&amb)
            .mul(&src.space.section.kron(&Matrix::identity(f, hom)))
    }
}

/// Builds the tensor-square presentations for a carrier with the given
/// actions.
fn build_squares(
    cat: &LinCategory,
    dims: &[Vec<usize>],
    lact: &[Vec<Vec<Matrix>>],
    ract: &[Vec<Vec<Matrix>>],
) -> Vec<Vec<TensorOverSub>> {
    let n = cat.n_objects();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let right = RightModule {
                        dims: (0..n).map(|z| dims[z][y]).collect(),
                        actions: (0..n)
                            .map(|w| (0..n).map(|z| ract[z][y][w].clone()).collect())
                            .collect(),
                    };
                    let left = LeftModule {
                        dims: (0..n).map(|z| dims[x][z]).collect(),
                        actions: (0..n)
                            .map(|z| (0..n).map(|w| lact[x][z][w].clone()).collect())
                            .collect(),
                    };
                    tensor_over_sub(cat, &right, &left)
                })
                .collect()
        })
        .collect()
}

/// The coring `h (x) C` of an entwining: counit strips the coalgebra leg,
/// comultiplication applies the coproduct to it.
pub fn coring_h_c(e: &Entwining) -> Coring {
    let f = e.field();
    let d = &e.cat;
    let dc = e.coalg.dim;
    let idc = Matrix::identity(f, dc);
    let n = d.n_objects();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| d.hom(x, y) * dc).collect()).collect();
    let mut lact = vec![vec![vec![Matrix::zeros(f, 0, 0); n]; n]; n];
    let mut ract = vec![vec![vec![Matrix::zeros(f, 0, 0); n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            for w in 0..n {
                // (f (x) c) . g = f g_psi (x) c^psi for g : w -> x
                ract[x][y][w] = d.compose[w][x][y]
                    .kron(&idc)
                    .mul(&Matrix::identity(f, d.hom(x, y)).kron(&e.psi[w][x]));
                // g . (f (x) c) = g f (x) c for g : y -> w
                let legs = [d.hom(x, y), dc, d.hom(y, w)];
                let reorder = crate::exactlin::permute_legs(f, &legs, &[2, 0, 1]);
                lact[x][y][w] = d.compose[x][y][w].kron(&idc).mul(&reorder);
            }
        }
    }
    let square = build_squares(d, &dims, &lact, &ract);
    let mut delta = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
    let mut counit = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            let hom = d.hom(x, y);
            let idh = Matrix::identity(f, hom);
            // f (x) c -> (f (x) c_1) (x) (id_x (x) c_2), in the block at x
            let insert = d.identities[x].kron(&idc);
            let spread = Matrix::identity(f, hom * dc)
                .kron(&insert)
                .mul(&idh.kron(&e.coalg.delta));
            let tensor = &square[x][y];
            delta[x][y] = tensor.space.projection.mul(&tensor.embed_block(f, x)).mul(&spread);
            counit[x][y] = idh.kron(&e.coalg.counit);
        }
    }
    Coring { dims, lact, ract, square, delta, counit }
}

/// The coring `h (x)_E h` of a Galois candidate: comultiplication splits at
/// an identity, counit composes the two legs.
pub fn coring_h_e_h(g: &GaloisData, cm: &CanonicalMap) -> Result<Coring, Verdict> {
    let f = g.field();
    let d = &g.cat;
    let n = d.n_objects();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| cm.tensors[x][y].dim()).collect()).collect();
    let mut lact = vec![vec![vec![Matrix::zeros(f, 0, 0); n]; n]; n];
    let mut ract = vec![vec![vec![Matrix::zeros(f, 0, 0); n]; n]; n];
    let mut verdict = Verdict::default();
    for x in 0..n {
        for y in 0..n {
            let src = &cm.tensors[x][y];
            for w in 0..n {
                // right: (u (x) v) . g = u (x) (v g) for g : w -> x
                let homwx = d.hom(w, x);
                let dst = &cm.tensors[w][y];
                let mut amb = Matrix::zeros(f, dst.ambient_dim, src.ambient_dim * homwx);
                for z in 0..n {
                    let (mzy, mxz) = src.block_dims[z];
                    if mzy * mxz == 0 {
                        continue;
                    }
                    let block = Matrix::identity(f, mzy).kron(&d.compose[w][x][z]);
                    let mut slice = Matrix::zeros(f, mzy * mxz * homwx, src.ambient_dim * homwx);
                    for a in 0..mzy * mxz {
                        for i in 0..homwx {
                            slice.set(a * homwx + i, (src.offsets[z] + a) * homwx + i, f.one());
                        }
                    }
                    amb = amb.add(&dst.embed_block(f, z).mul(&block).mul(&slice));
                }
                ract[x][y][w] = dst
                    .space
                    .projection
                    .mul(&amb)
                    .mul(&src.space.section.kron(&Matrix::identity(f, homwx)));
                // left: g . (u (x) v) = (g u) (x) v for g : y -> w
                let homyw = d.hom(y, w);
                let dstl = &cm.tensors[x][w];
                let mut ambl = Matrix::zeros(f, dstl.ambient_dim, src.ambient_dim * homyw);
                for z in 0..n {
                    let (mzy, mxz) = src.block_dims[z];
                    if mzy * mxz == 0 {
                        continue;
                    }
                    let reorder = crate::exactlin::permute_legs(f, &[mzy, mxz, homyw], &[2, 0, 1]);
                    let block = d.compose[z][y][w]
                        .kron(&Matrix::identity(f, mxz))
                        .mul(&reorder);
                    let mut slice = Matrix::zeros(f, mzy * mxz * homyw, src.ambient_dim * homyw);
                    for a in 0..mzy * mxz {
                        for i in 0..homyw {
                            slice.set(a * homyw + i, (src.offsets[z] + a) * homyw + i, f.one());
                        }
                    }
                    ambl = ambl.add(&dstl.embed_block(f, z).mul(&block).mul(&slice));
                }
                lact[x][y][w] = dstl
                    .space
                    .projection
                    .mul(&ambl)
                    .mul(&src.space.section.kron(&Matrix::identity(f, homyw)));
            }
        }
    }
    let square = build_squares(d, &dims, &lact, &ract);
    let mut delta = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
    let mut counit = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            let tensor = &cm.tensors[x][y];
            let sq = &square[x][y];
            // ambient Delta: block Z: u (x) v -> (class of u (x) id_Z) (x) (class of id_Z (x) v)
            let mut amb = Matrix::zeros(f, sq.ambient_dim, tensor.ambient_dim);
            for z in 0..n {
                let homzy = d.hom(z, y);
                let homxz = d.hom(x, z);
                if homzy * homxz == 0 {
                    continue;
                }
                let q1 = cm.tensors[z][y]
                    .space
                    .projection
                    .mul(&cm.tensors[z][y].embed_block(f, z))
                    .mul(&Matrix::identity(f, homzy).kron(&d.identities[z]));
                let q2 = cm.tensors[x][z]
                    .space
                    .projection
                    .mul(&cm.tensors[x][z].embed_block(f, z))
                    .mul(&d.identities[z].kron(&Matrix::identity(f, homxz)));
                amb = amb
                    .add(&sq.embed_block(f, z).mul(&q1.kron(&q2)).mul(&tensor.embed_block(f, z).transpose()));
            }
            // well-definedness: the relation span must die in the square
            let relations = tensor.space.projection.kernel_basis();
            if !sq.space.projection.mul(&amb).mul(&relations).is_zero() {
                verdict.push(
                    "comultiplication well-definedness",
                    format!("objects ({},{})", d.objects[x], d.objects[y]),
                );
                return Err(verdict);
            }
            delta[x][y] = sq.space.projection.mul(&amb).mul(&tensor.space.section);
            // counit: compose the two legs
            let mut eps = Matrix::zeros(f, d.hom(x, y), tensor.ambient_dim);
            for z in 0..n {
                eps = eps.add(&d.compose[x][z][y].mul(&tensor.embed_block(f, z).transpose()));
            }
            counit[x][y] = eps.mul(&tensor.space.section);
        }
    }
    Ok(Coring { dims, lact, ract, square, delta, counit })
}

/// Triple-tensor presentation `(M (x)_D M (x)_D M)(x,y)` used to state
/// coassociativity; the blocks are indexed by pairs of middle objects.
struct TripleTensor {
    offsets: Vec<Vec<usize>>,
    ambient_dim: usize,
    space: crate::exactlin::QuotientSpace,
}

fn build_triple(cat: &LinCategory, coring: &Coring, x: usize, y: usize) -> TripleTensor {
    let f = cat.field;
    let n = cat.n_objects();
    let mut offsets = vec![vec![0usize; n]; n];
    let mut total = 0;
    for z1 in 0..n {
        for z2 in 0..n {
            offsets[z1][z2] = total;
            total += coring.dims[z1][y] * coring.dims[z2][z1] * coring.dims[x][z2];
        }
    }
    let mut relations: Vec<Matrix> = Vec::new();
    let mut push_rel = |rel: Matrix| relations.push(rel);
    // relations between the first and second legs
    for w in 0..n {
        for z1 in 0..n {
            let hom = cat.hom(w, z1);
            if hom == 0 {
                continue;
            }
            for z2 in 0..n {
                let (m1, m2, m3) = (coring.dims[z1][y], coring.dims[z2][w], coring.dims[x][z2]);
                if m1 * m2 * m3 == 0 {
                    continue;
                }
                for ecol in 0..hom {
                    let e = Matrix::basis_column(f, hom, ecol);
                    let act1 = coring.ract[z1][y][w]
                        .mul(&Matrix::identity(f, m1).kron(&e));
                    let act2 = coring.lact[z2][w][z1]
                        .mul(&Matrix::identity(f, m2).kron(&e));
                    for i in 0..m1 {
                        for j in 0..m2 {
                            for k in 0..m3 {
                                let mut rel = Matrix::zeros(f, total, 1);
                                for r in 0..coring.dims[w][y] {
                                    let coeff = act1.at(r, i).clone();
                                    if !coeff.is_zero() {
                                        let idx = offsets[w][z2]
                                            + (r * m2 + j) * m3
                                            + k;
                                        rel.set(idx, 0, coeff);
                                    }
                                }
                                for s in 0..coring.dims[z2][z1] {
                                    let coeff = f.neg(act2.at(s, j));
                                    if !coeff.is_zero() {
                                        let idx = offsets[z1][z2]
                                            + (i * coring.dims[z2][z1] + s) * m3
                                            + k;
                                        let v = f.add(rel.at(idx, 0), &coeff);
                                        rel.set(idx, 0, v);
                                    }
                                }
                                push_rel(rel);
                            }
                        }
                    }
                }
            }
        }
    }
    // relations between the second and third legs
    for w in 0..n {
        for z2 in 0..n {
            let hom = cat.hom(w, z2);
            if hom == 0 {
                continue;
            }
            for z1 in 0..n {
                let (m1, m2, m3) = (coring.dims[z1][y], coring.dims[z2][z1], coring.dims[x][w]);
                if m1 * m2 * m3 == 0 {
                    continue;
                }
                for ecol in 0..hom {
                    let e = Matrix::basis_column(f, hom, ecol);
                    let act2 = coring.ract[z2][z1][w]
                        .mul(&Matrix::identity(f, m2).kron(&e));
                    let act3 = coring.lact[x][w][z2]
                        .mul(&Matrix::identity(f, m3).kron(&e));
                    for i in 0..m1 {
                        for j in 0..m2 {
                            for k in 0..m3 {
                                let mut rel = Matrix::zeros(f, total, 1);
                                for r in 0..coring.dims[w][z1] {
                                    let coeff = act2.at(r, j).clone();
                                    if !coeff.is_zero() {
                                        let idx = offsets[z1][w]
                                            + (i * coring.dims[w][z1] + r) * m3
                                            + k;
                                        rel.set(idx, 0, coeff);
                                    }
                                }
                                for s in 0..coring.dims[x][z2] {
                                    let coeff = f.neg(act3.at(s, k));
                                    if !coeff.is_zero() {
                                        let idx = offsets[z1][z2]
                                            + (i * m2 + j) * coring.dims[x][z2]
                                            + s;
                                        let v = f.add(rel.at(idx, 0), &coeff);
                                        rel.set(idx, 0, v);
                                    }
                                }
                                push_rel(rel);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rel_matrix = Matrix::zeros(f, total, relations.len());
    for (c, rel) in relations.iter().enumerate() {
        for r in 0..total {
            rel_matrix.set(r, c, rel.at(r, 0).clone());
        }
    }
    TripleTensor { offsets, ambient_dim: total, space: quotient_projection(total, &rel_matrix) }
}

/// Checks all coring laws: bimodule structure of the carrier, comorphism
/// properties of comultiplication and counit, the counit identities and
/// coassociativity (in the triple-tensor quotient).
pub fn verify_coring(cat: &LinCategory, coring: &Coring) -> Verdict {
    let f = cat.field;
    let n = cat.n_objects();
    let mut verdict = Verdict::default();
    for y in 0..n {
        if !verify_right_module(cat, &coring.carrier_right(cat, y)).ok() {
            verdict.push("carrier contravariant functor laws", format!("slot {}", cat.objects[y]));
        }
    }
    for x in 0..n {
        if !verify_left_module(cat, &coring.carrier_left(cat, x)).ok() {
            verdict.push("carrier covariant functor laws", format!("slot {}", cat.objects[x]));
        }
    }
    // the two actions commute
    for x in 0..n {
        for y in 0..n {
            for xp in 0..n {
                for yp in 0..n {
                    let homr = cat.hom(xp, x);
                    let homl = cat.hom(y, yp);
                    if homr * homl == 0 || coring.dims[x][y] == 0 {
                        continue;
                    }
                    let right_first = coring.lact[xp][y][yp]
                        .mul(&coring.ract[x][y][xp].kron(&Matrix::identity(f, homl)));
                    let reorder = Matrix::identity(f, coring.dims[x][y])
                        .kron(&swap_legs(f, homr, homl));
                    let left_first = coring.ract[x][yp][xp]
                        .mul(&coring.lact[x][y][yp].kron(&Matrix::identity(f, homr)))
                        .mul(&reorder);
                    if right_first != left_first {
                        verdict.push(
                            "bimodule actions commute",
                            format!(
                                "carrier ({},{}) against ({}->{}, {}->{})",
                                cat.objects[x], cat.objects[y], cat.objects[xp], cat.objects[x],
                                cat.objects[y], cat.objects[yp]
                            ),
                        );
                    }
                }
            }
        }
    }
    // comultiplication and counit are bimodule morphisms
    for x in 0..n {
        for y in 0..n {
            for xp in 0..n {
                let hom = cat.hom(xp, x);
                if hom == 0 || coring.dims[x][y] == 0 {
                    continue;
                }
                let idh = Matrix::identity(f, hom);
                let lhs = coring.delta[xp][y].mul(&coring.ract[x][y][xp]);
                let rhs = coring
                    .square_right_action(cat, x, y, xp)
                    .mul(&coring.delta[x][y].kron(&idh));
                if lhs != rhs {
                    verdict.push(
                        "comultiplication respects the right action",
                        format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
                let eps_lhs = coring.counit[xp][y].mul(&coring.ract[x][y][xp]);
                let eps_rhs = cat.compose[xp][x][y].mul(&coring.counit[x][y].kron(&idh));
                if eps_lhs != eps_rhs {
                    verdict.push(
                        "counit respects the right action",
                        format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
            }
            for yp in 0..n {
                let hom = cat.hom(y, yp);
                if hom == 0 || coring.dims[x][y] == 0 {
                    continue;
                }
                let idh = Matrix::identity(f, hom);
                let lhs = coring.delta[x][yp].mul(&coring.lact[x][y][yp]);
                let rhs = coring
                    .square_left_action(cat, x, y, yp)
                    .mul(&coring.delta[x][y].kron(&idh));
                if lhs != rhs {
                    verdict.push(
                        "comultiplication respects the left action",
                        format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
                let eps_lhs = coring.counit[x][yp].mul(&coring.lact[x][y][yp]);
                let eps_rhs = cat.compose[x][y][yp]
                    .mul(&swap_legs(f, cat.hom(x, y), hom))
                    .mul(&coring.counit[x][y].kron(&idh));
                if eps_lhs != eps_rhs {
                    verdict.push(
                        "counit respects the left action",
                        format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
            }
        }
    }
    // counit axioms
    for x in 0..n {
        for y in 0..n {
            if coring.dims[x][y] == 0 {
                continue;
            }
            let sq = &coring.square[x][y];
            let id_m = Matrix::identity(f, coring.dims[x][y]);
            let mut left_fold = Matrix::zeros(f, coring.dims[x][y], sq.ambient_dim);
            let mut right_fold = Matrix::zeros(f, coring.dims[x][y], sq.ambient_dim);
            for z in 0..n {
                let (mzy, mxz) = (coring.dims[z][y], coring.dims[x][z]);
                if mzy * mxz == 0 {
                    continue;
                }
                // counit on the first leg, then the left action
                let strip_first = coring.lact[x][z][y]
                    .mul(&swap_legs(f, cat.hom(z, y), mxz))
                    .mul(&coring.counit[z][y].kron(&Matrix::identity(f, mxz)));
                left_fold = left_fold.add(&strip_first.mul(&sq.embed_block(f, z).transpose()));
                // counit on the second leg, then the right action
                let strip_second = coring.ract[z][y][x]
                    .mul(&Matrix::identity(f, mzy).kron(&coring.counit[x][z]));
                right_fold = right_fold.add(&strip_second.mul(&sq.embed_block(f, z).transpose()));
            }
            let left_unit = left_fold.mul(&sq.space.section).mul(&coring.delta[x][y]);
            if left_unit != id_m {
                verdict.push(
                    "counit axiom (first leg)",
                    format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                );
            }
            let right_unit = right_fold.mul(&sq.space.section).mul(&coring.delta[x][y]);
            if right_unit != id_m {
                verdict.push(
                    "counit axiom (second leg)",
                    format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                );
            }
        }
    }
    // coassociativity through the triple tensor
    for x in 0..n {
        for y in 0..n {
            if coring.dims[x][y] == 0 {
                continue;
            }
            let triple = build_triple(cat, coring, x, y);
            let sq = &coring.square[x][y];
            // expand the first leg
            let mut first = Matrix::zeros(f, triple.ambient_dim, sq.ambient_dim);
            for z2 in 0..n {
                let (mz2y, mxz2) = (coring.dims[z2][y], coring.dims[x][z2]);
                if mz2y * mxz2 == 0 {
                    continue;
                }
                let inner = coring.square[z2][y].space.section.mul(&coring.delta[z2][y]);
                // lands in sum over z1 of M(z1,y) (x) M(z2,z1); tensor the third leg
                let spread = inner.kron(&Matrix::identity(f, mxz2));
                // route each inner block into the right triple block
                let mut route = Matrix::zeros(
                    f,
                    triple.ambient_dim,
                    coring.square[z2][y].ambient_dim * mxz2,
                );
                for z1 in 0..n {
                    let b = coring.dims[z1][y] * coring.dims[z2][z1];
                    for a in 0..b {
                        for k in 0..mxz2 {
                            route.set(
                                triple.offsets[z1][z2] + a * mxz2 + k,
                                (coring.square[z2][y].offsets[z1] + a) * mxz2 + k,
                                f.one(),
                            );
                        }
                    }
                }
                first = first.add(&route.mul(&spread).mul(&sq.embed_block(f, z2).transpose()));
            }
            // expand the second leg
            let mut second = Matrix::zeros(f, triple.ambient_dim, sq.ambient_dim);
            for z1 in 0..n {
                let (mz1y, mxz1) = (coring.dims[z1][y], coring.dims[x][z1]);
                if mz1y * mxz1 == 0 {
                    continue;
                }
                let inner = coring.square[x][z1].space.section.mul(&coring.delta[x][z1]);
                let spread = Matrix::identity(f, mz1y).kron(&inner);
                let mut route =
                    Matrix::zeros(f, triple.ambient_dim, mz1y * coring.square[x][z1].ambient_dim);
                for z2 in 0..n {
                    let b = coring.dims[z2][z1] * coring.dims[x][z2];
                    for i in 0..mz1y {
                        for a in 0..b {
                            route.set(
                                triple.offsets[z1][z2] + i * b + a,
                                i * coring.square[x][z1].ambient_dim
                                    + coring.square[x][z1].offsets[z2]
                                    + a,
                                f.one(),
                            );
                        }
                    }
                }
                second = second.add(&route.mul(&spread).mul(&sq.embed_block(f, z1).transpose()));
            }
            let lhs = triple
                .space
                .projection
                .mul(&first)
                .mul(&sq.space.section)
                .mul(&coring.delta[x][y]);
            let rhs = triple
                .space
                .projection
                .mul(&second)
                .mul(&sq.space.section)
                .mul(&coring.delta[x][y]);
            if lhs != rhs {
                verdict.push(
                    "coassociativity",
                    format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                );
            }
        }
    }
    verdict
}

/// Checks the group-like laws of a diagonal collection with respect to a
/// subcategory: comultiplicativity, counit to identities, and centrality
/// over a basis of each coinvariant hom space.
pub fn verify_group_like(
    cat: &LinCategory,
    coring: &Coring,
    sub: &Subcategory,
    s: &GroupLikeCollection,
) -> Verdict {
    let f = cat.field;
    let n = cat.n_objects();
    let mut verdict = Verdict::default();
    for x in 0..n {
        let sq = &coring.square[x][x];
        let lhs = coring.delta[x][x].mul(&s.elements[x]);
        let rhs = sq
            .space
            .projection
            .mul(&sq.embed_block(f, x))
            .mul(&s.elements[x].kron(&s.elements[x]));
        if lhs != rhs {
            verdict.push("group-like comultiplicativity", format!("object {}", cat.objects[x]));
        }
        if coring.counit[x][x].mul(&s.elements[x]) != cat.identities[x] {
            verdict.push("group-like counit", format!("object {}", cat.objects[x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for k in 0..sub.dim(x, y) {
                let e = sub.spans[x][y].column(k);
                let lhs = coring.lact[x][x][y].mul(&s.elements[x].kron(&e));
                let rhs = coring.ract[y][y][x].mul(&s.elements[y].kron(&e));
                if lhs != rhs {
                    verdict.push(
                        "group-like centrality",
                        format!("span column {k} at ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
            }
        }
    }
    verdict
}

/// The collection `id (x) id` inside `h (x)_E h`.
pub fn group_like_of_identity_tensor(g: &GaloisData, cm: &CanonicalMap) -> GroupLikeCollection {
    let f = g.field();
    let elements = (0..g.cat.n_objects())
        .map(|x| {
            let tensor = &cm.tensors[x][x];
            tensor
                .space
                .projection
                .mul(&tensor.embed_block(f, x))
                .mul(&g.cat.identities[x].kron(&g.cat.identities[x]))
        })
        .collect();
    GroupLikeCollection { elements }
}

/// The collection `rho(id)` inside `h (x) C`.
pub fn group_like_of_can(g: &GaloisData) -> GroupLikeCollection {
    let elements = (0..g.cat.n_objects())
        .map(|x| g.coactions[x][x].mul(&g.cat.identities[x]))
        .collect();
    GroupLikeCollection { elements }
}

/// The canonical maps assemble into an isomorphism of corings
/// `h (x)_E h -> h (x) C`: bimodule morphism, compatible with both
/// comultiplications and counits.
pub fn can_as_coring_iso(
    g: &GaloisData,
    cm: &CanonicalMap,
    source: &Coring,
    target: &Coring,
) -> Verdict {
    let cat = &g.cat;
    let f = cat.field;
    let n = cat.n_objects();
    let mut verdict = Verdict::default();
    for x in 0..n {
        for y in 0..n {
            for xp in 0..n {
                let hom = cat.hom(xp, x);
                if hom == 0 {
                    continue;
                }
                let idh = Matrix::identity(f, hom);
                let lhs = cm.maps[xp][y].mul(&source.ract[x][y][xp]);
                let rhs = target.ract[x][y][xp].mul(&cm.maps[x][y].kron(&idh));
                if lhs != rhs {
                    verdict.push(
                        "canonical map respects the right action",
                        format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
            }
            for yp in 0..n {
                let hom = cat.hom(y, yp);
                if hom == 0 {
                    continue;
                }
                let idh = Matrix::identity(f, hom);
                let lhs = cm.maps[x][yp].mul(&source.lact[x][y][yp]);
                let rhs = target.lact[x][y][yp].mul(&cm.maps[x][y].kron(&idh));
                if lhs != rhs {
                    verdict.push(
                        "canonical map respects the left action",
                        format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                    );
                }
            }
        }
    }
    // compatibility with comultiplications: apply can on both legs
    for x in 0..n {
        for y in 0..n {
            let sq_src = &source.square[x][y];
            let sq_dst = &target.square[x][y];
            let mut pairwise = Matrix::zeros(f, sq_dst.ambient_dim, sq_src.ambient_dim);
            for z in 0..n {
                let blk = cm.maps[z][y].kron(&cm.maps[x][z]);
                pairwise = pairwise.add(
                    &sq_dst.embed_block(f, z).mul(&blk).mul(&sq_src.embed_block(f, z).transpose()),
                );
            }
            let can_sq = sq_dst
                .space
                .projection
                .mul(&pairwise)
                .mul(&sq_src.space.section);
            let lhs = target.delta[x][y].mul(&cm.maps[x][y]);
            let rhs = can_sq.mul(&source.delta[x][y]);
            if lhs != rhs {
                verdict.push(
                    "canonical map respects comultiplication",
                    format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                );
            }
            let eps_lhs = target.counit[x][y].mul(&cm.maps[x][y]);
            if eps_lhs != source.counit[x][y] {
                verdict.push(
                    "canonical map respects the counit",
                    format!("carrier ({},{})", cat.objects[x], cat.objects[y]),
                );
            }
        }
    }
    verdict
}

/// Tensor of a right module against the covariant slot of a coring carrier:
/// `(N (x)_D M)(x,-)`.
pub fn module_coring_tensor(
    cat: &LinCategory,
    n: &RightModule,
    coring: &Coring,
    x: usize,
) -> TensorOverSub {
    tensor_over_sub(cat, n, &coring.carrier_left(cat, x))
}

/// Packages an entwined module as a comodule over the coring `h (x) C`:
/// the coaction inserts the identity into the hom leg.
pub fn coring_comodule_of_entwined(
    cat: &LinCategory,
    coalg: &Coalgebra,
    coring: &Coring,
    m: &EntwinedModule,
) -> CoringComodule {
    let f = cat.field;
    let dc = coalg.dim;
    let n = cat.n_objects();
    let tensors: Vec<TensorOverSub> =
        (0..n).map(|x| module_coring_tensor(cat, &m.module, coring, x)).collect();
    let rho = (0..n)
        .map(|x| {
            let insert = cat.identities[x].kron(&Matrix::identity(f, dc));
            tensors[x]
                .space
                .projection
                .mul(&tensors[x].embed_block(f, x))
                .mul(&Matrix::identity(f, m.module.dims[x]).kron(&insert))
                .mul(&m.coactions[x].rho)
        })
        .collect();
    CoringComodule { module: m.module.clone(), tensors, rho }
}

/// Coinvariants of a coring comodule with respect to a group-like
/// collection, as a module over the subcategory, together with the fiber
/// inclusions. The induced action is asserted to stay inside the
/// coinvariants.
pub struct CoinvariantModule {
    /// Module over `sub.to_category(cat)`.
    pub module: RightModule,
    /// `inclusions[x] : coinvariants(x) -> N(x)`.
    pub inclusions: Vec<Matrix>,
}

pub fn coring_coinvariants(
    cat: &LinCategory,
    coring: &Coring,
    sub: &Subcategory,
    s: &GroupLikeCollection,
    n: &CoringComodule,
) -> Result<CoinvariantModule, Verdict> {
    let f = cat.field;
    let k = cat.n_objects();
    let pre = verify_group_like(cat, coring, sub, s);
    if !pre.ok() {
        return Err(pre);
    }
    let mut verdict = Verdict::default();
    let inclusions: Vec<Matrix> = (0..k)
        .map(|x| {
            let tensor = &n.tensors[x];
            // v -> class of v (x) s_x
            let insert = tensor
                .space
                .projection
                .mul(&tensor.embed_block(f, x))
                .mul(&Matrix::identity(f, n.module.dims[x]).kron(&s.elements[x]));
            n.rho[x].sub(&insert).kernel_basis()
        })
        .collect();
    let mut actions = vec![vec![Matrix::zeros(f, 0, 0); k]; k];
    for w in 0..k {
        for x in 0..k {
            let edim = sub.dim(w, x);
            let restricted = n.module.actions[w][x]
                .mul(&inclusions[x].kron(&sub.spans[w][x]));
            if inclusions[w].cols == 0 {
                if !restricted.is_zero() {
                    verdict.push(
                        "coinvariants closed under the action",
                        format!("pair ({},{})", cat.objects[w], cat.objects[x]),
                    );
                }
                actions[w][x] = Matrix::zeros(f, 0, inclusions[x].cols * edim);
                continue;
            }
            match inclusions[w].solve_exact(&restricted) {
                Some(coords) => actions[w][x] = coords,
                None => {
                    verdict.push(
                        "coinvariants closed under the action",
                        format!("pair ({},{})", cat.objects[w], cat.objects[x]),
                    );
                    actions[w][x] = Matrix::zeros(f, inclusions[w].cols, inclusions[x].cols * edim);
                }
            }
        }
    }
    if !verdict.ok() {
        return Err(verdict);
    }
    let module = RightModule { dims: inclusions.iter().map(|i| i.cols).collect(), actions };
    Ok(CoinvariantModule { module, inclusions })
}
