//! Entwining structures over a small linear category and their modules.
//!
//! An entwining is a family of linear maps `psi_{XY} : C (x) Hom(X,Y) ->
//! Hom(X,Y) (x) C` compatible with composition, counit, comultiplication and
//! identities; [`verify_entwining`] checks the four axioms as exact matrix
//! identities and names the first one violated. The module side provides
//! entwined modules (right modules with objectwise coactions tied together
//! through `psi`), the tensor constructions `M (x) C` and `N (x) h_X`, the
//! `psi`-induced morphism `C (x) h_Y -> h_Y (x) C`, generator morphisms from
//! coaction closures, and kernels/cokernels with induced coactions.

use crate::algebra::{verify_comodule, verify_hopf, Coalgebra, Comodule, HopfAlgebra};
use crate::exactlin::{swap_legs, FieldSpec, Matrix};
use crate::lincat::{
    canonical_basis, kernel_cokernel, representable_right_idx, verify_category, verify_module_morphism,
    LinCategory, ModuleMorphism, RightModule,
};
use crate::verdict::Verdict;

/// An entwining structure: category, coalgebra, and the entwining maps.
#[derive(Debug, Clone, PartialEq)]
pub struct Entwining {
    pub cat: LinCategory,
    pub coalg: Coalgebra,
    /// `psi[x][y] : C (x) Hom(x,y) -> Hom(x,y) (x) C`; stored for every
    /// ordered pair, zero-dimensional ones included.
    pub psi: Vec<Vec<Matrix>>,
}

/// A right module together with one comodule structure per object,
/// compatible through the entwining.
#[derive(Debug, Clone, PartialEq)]
pub struct EntwinedModule {
    pub module: RightModule,
    pub coactions: Vec<Comodule>,
}

/// A category whose hom spaces carry compatible coactions of a Hopf algebra:
/// composition is a comodule map and identities are coinvariant.
#[derive(Debug, Clone)]
pub struct CoHCategory {
    pub cat: LinCategory,
    pub hopf: HopfAlgebra,
    /// `hom_coactions[x][y] : Hom(x,y) -> Hom(x,y) (x) H`.
    pub hom_coactions: Vec<Vec<Matrix>>,
}

/// Functor data plus a coalgebra map, for checking a morphism of entwining
/// structures.
#[derive(Debug, Clone)]
pub struct EntwiningMorphism {
    /// Image of each source object.
    pub obj_map: Vec<usize>,
    /// `hom_maps[x][y] : Hom'(x,y) -> Hom(Fx,Fy)`.
    pub hom_maps: Vec<Vec<Matrix>>,
    /// Counital coalgebra map `C' -> C`.
    pub sigma: Matrix,
}

impl Entwining {
    /// The swap entwining `c (x) f -> f (x) c`, valid for any verified pair.
    pub fn swap(cat: LinCategory, coalg: Coalgebra) -> Self {
        let f = cat.field;
        let dc = coalg.dim;
        let n = cat.n_objects();
        let psi = (0..n)
            .map(|x| (0..n).map(|y| swap_legs(f, dc, cat.hom(x, y))).collect())
            .collect();
        Entwining { cat, coalg, psi }
    }

    pub fn field(&self) -> FieldSpec {
        self.cat.field
    }

    /// `h_Y (x) C` as an entwined module.
    pub fn representable_tensor_c(&self, y: usize) -> EntwinedModule {
        module_tensor_c(self, &representable_right_idx(&self.cat, y))
    }

    /// `C (x) h_Y` as an entwined module (the regular comodule tensored with
    /// a representable).
    pub fn c_tensor_representable(&self, y: usize) -> EntwinedModule {
        comodule_tensor_hx(self, &self.coalg.regular_comodule(), y)
    }
}

/// Checks the four entwining axioms over all object tuples. Reports, per
/// failure, which axiom broke and at which objects.
pub fn verify_entwining(e: &Entwining) -> Verdict {
    let f = e.field();
    let d = &e.cat;
    let c = &e.coalg;
    let dc = c.dim;
    let n = d.n_objects();
    let idc = Matrix::identity(f, dc);
    let mut verdict = Verdict::default();

    for x in 0..n {
        for y in 0..n {
            let hom = d.hom(x, y);
            let p = &e.psi[x][y];
            if (p.rows, p.cols) != (hom * dc, dc * hom) {
                verdict.push(
                    "entwining map shape",
                    format!("missing or misshapen entry at ({},{})", d.objects[x], d.objects[y]),
                );
            }
        }
    }
    if !verdict.ok() {
        return verdict;
    }

    // compatibility with composition
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if d.hom(y, z) * d.hom(x, y) == 0 {
                    continue;
                }
                let idyz = Matrix::identity(f, d.hom(y, z));
                let idxy = Matrix::identity(f, d.hom(x, y));
                let lhs = e.psi[x][z].mul(&idc.kron(&d.compose[x][y][z]));
                let rhs = d.compose[x][y][z]
                    .kron(&idc)
                    .mul(&idyz.kron(&e.psi[x][y]))
                    .mul(&e.psi[y][z].kron(&idxy));
                if lhs != rhs {
                    verdict.push(
                        "composition law",
                        format!("objects ({},{},{})", d.objects[x], d.objects[y], d.objects[z]),
                    );
                }
            }
        }
    }
    // compatibility with the counit
    for x in 0..n {
        for y in 0..n {
            let hom = d.hom(x, y);
            if hom == 0 {
                continue;
            }
            let idh = Matrix::identity(f, hom);
            let lhs = idh.kron(&c.counit).mul(&e.psi[x][y]);
            let rhs = c.counit.kron(&idh);
            if lhs != rhs {
                verdict.push("counit law", format!("objects ({},{})", d.objects[x], d.objects[y]));
            }
        }
    }
    // compatibility with the comultiplication
    for x in 0..n {
        for y in 0..n {
            let hom = d.hom(x, y);
            if hom == 0 {
                continue;
            }
            let idh = Matrix::identity(f, hom);
            let lhs = idh.kron(&c.delta).mul(&e.psi[x][y]);
            let rhs = e.psi[x][y]
                .kron(&idc)
                .mul(&idc.kron(&e.psi[x][y]))
                .mul(&c.delta.kron(&idh));
            if lhs != rhs {
                verdict.push(
                    "comultiplication law",
                    format!("objects ({},{})", d.objects[x], d.objects[y]),
                );
            }
        }
    }
    // identities entwine trivially
    for x in 0..n {
        let lhs = e.psi[x][x].mul(&idc.kron(&d.identities[x]));
        let rhs = d.identities[x].kron(&idc);
        if lhs != rhs {
            verdict.push("identity law", format!("object {}", d.objects[x]));
        }
    }
    verdict
}

/// Checks the hom-coaction laws of a co-H-category: each coaction is a
/// comodule, composition is a comodule map for the diagonal coaction, and
/// identities are coinvariant.
pub fn verify_co_h_category(d: &CoHCategory) -> Verdict {
    let f = d.cat.field;
    let n = d.cat.n_objects();
    let h = &d.hopf;
    let dh = h.dim();
    let mut verdict = verify_category(&d.cat);
    verdict.merge(verify_hopf(h));
    for x in 0..n {
        for y in 0..n {
            let hom = d.cat.hom(x, y);
            let como = Comodule { dim: hom, rho: d.hom_coactions[x][y].clone() };
            let sub = verify_comodule(&h.coalgebra, &como);
            if !sub.ok() {
                verdict.push(
                    "hom coaction comodule laws",
                    format!("objects ({},{})", d.cat.objects[x], d.cat.objects[y]),
                );
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if d.cat.hom(y, z) * d.cat.hom(x, y) == 0 {
                    continue;
                }
                // rho(g f) = g_0 f_0 (x) g_1 f_1
                let lhs = d.hom_coactions[x][z].mul(&d.cat.compose[x][y][z]);
                let mid = Matrix::identity(f, d.cat.hom(y, z))
                    .kron(&swap_legs(f, dh, d.cat.hom(x, y)))
                    .kron(&Matrix::identity(f, dh));
                let rhs = d.cat.compose[x][y][z]
                    .kron(&h.mult)
                    .mul(&mid)
                    .mul(&d.hom_coactions[y][z].kron(&d.hom_coactions[x][y]));
                if lhs != rhs {
                    verdict.push(
                        "composition is a comodule map",
                        format!("objects ({},{},{})", d.cat.objects[x], d.cat.objects[y], d.cat.objects[z]),
                    );
                }
            }
        }
    }
    for x in 0..n {
        let lhs = d.hom_coactions[x][x].mul(&d.cat.identities[x]);
        let rhs = d.cat.identities[x].kron(&h.unit);
        if lhs != rhs {
            verdict.push("identities are coinvariant", format!("object {}", d.cat.objects[x]));
        }
    }
    verdict
}

/// Checks that `action : C (x) H -> C` makes the coalgebra a right module
/// coalgebra over the Hopf algebra: module laws, and both the
/// comultiplication and counit are module maps.
pub fn verify_module_coalgebra(c: &Coalgebra, h: &HopfAlgebra, action: &Matrix) -> Verdict {
    let f = c.field;
    let dc = c.dim;
    let dh = h.dim();
    let idc = Matrix::identity(f, dc);
    let idh = Matrix::identity(f, dh);
    let mut verdict = Verdict::default();
    if (action.rows, action.cols) != (dc, dc * dh) {
        verdict.push("action shape", format!("{}x{}", action.rows, action.cols));
        return verdict;
    }
    if action.mul(&action.kron(&idh)) != action.mul(&idc.kron(&h.mult)) {
        verdict.push("module associativity", "basis triple");
    }
    if action.mul(&idc.kron(&h.unit)) != idc {
        verdict.push("module unit law", "basis");
    }
    // delta(c . h) = c_1 . h_1 (x) c_2 . h_2
    let lhs = c.delta.mul(action);
    let mid = idc.kron(&swap_legs(f, dc, dh)).kron(&idh);
    let rhs = action.kron(action).mul(&mid).mul(&c.delta.kron(&h.coalgebra.delta));
    if lhs != rhs {
        verdict.push("comultiplication is a module map", "basis pair");
    }
    if c.counit.mul(action) != c.counit.kron(&h.coalgebra.counit) {
        verdict.push("counit is a module map", "basis pair");
    }
    verdict
}

/// The entwining induced by a co-H-category and a right H-module coalgebra:
/// `psi(c (x) f) = f_0 (x) c . f_1`. The module-coalgebra laws are checked;
/// the output always passes [`verify_entwining`], which is still asserted.
pub fn doi_hopf_entwining(
    d: &CoHCategory,
    c: &Coalgebra,
    action: &Matrix,
) -> Result<Entwining, Verdict> {
    let mut pre = verify_co_h_category(d);
    pre.merge(verify_module_coalgebra(c, &d.hopf, action));
    if !pre.ok() {
        return Err(pre);
    }
    let f = d.cat.field;
    let dc = c.dim;
    let dh = d.hopf.dim();
    let n = d.cat.n_objects();
    let idc = Matrix::identity(f, dc);
    let psi = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let hom = d.cat.hom(x, y);
                    let idhom = Matrix::identity(f, hom);
                    // c (x) f -> c (x) f_0 (x) f_1 -> f_0 (x) c (x) f_1 -> f_0 (x) c . f_1
                    idhom
                        .kron(action)
                        .mul(&swap_legs(f, dc, hom).kron(&Matrix::identity(f, dh)))
                        .mul(&idc.kron(&d.hom_coactions[x][y]))
                })
                .collect()
        })
        .collect();
    let e = Entwining { cat: d.cat.clone(), coalg: c.clone(), psi };
    let v = verify_entwining(&e);
    if v.ok() {
        Ok(e)
    } else {
        Err(v)
    }
}

/// Checks that every coaction is a valid comodule and that the action and
/// coactions commute through `psi`.
pub fn verify_entwined_module(e: &Entwining, m: &EntwinedModule) -> Verdict {
    let f = e.field();
    let d = &e.cat;
    let n = d.n_objects();
    let idc = Matrix::identity(f, e.coalg.dim);
    let mut verdict = Verdict::default();
    for x in 0..n {
        if m.coactions[x].dim != m.module.dims[x] {
            verdict.push("coaction dimension", format!("object {}", d.objects[x]));
            continue;
        }
        let sub = verify_comodule(&e.coalg, &m.coactions[x]);
        if !sub.ok() {
            verdict.push("objectwise comodule laws", format!("object {}", d.objects[x]));
        }
    }
    if !verdict.ok() {
        return verdict;
    }
    for y in 0..n {
        for x in 0..n {
            // f : y -> x acts M(x) -> M(y); compatibility of coactions
            let hom = d.hom(y, x);
            if hom == 0 || m.module.dims[x] == 0 {
                continue;
            }
            let idh = Matrix::identity(f, hom);
            let idmx = Matrix::identity(f, m.module.dims[x]);
            let lhs = m.coactions[y].rho.mul(&m.module.actions[y][x]);
            let rhs = m.module.actions[y][x]
                .kron(&idc)
                .mul(&idmx.kron(&e.psi[y][x]))
                .mul(&m.coactions[x].rho.kron(&idh));
            if lhs != rhs {
                verdict.push(
                    "action/coaction compatibility",
                    format!("objects ({},{})", d.objects[y], d.objects[x]),
                );
            }
        }
    }
    verdict
}

/// `N (x) C` for a plain right module `N`: action through `psi`, coaction by
/// comultiplication on the second leg. Functorial in `N`.
pub fn module_tensor_c(e: &Entwining, n: &RightModule) -> EntwinedModule {
    let f = e.field();
    let d = &e.cat;
    let k = d.n_objects();
    let idc = Matrix::identity(f, e.coalg.dim);
    let dims: Vec<usize> = (0..k).map(|x| n.dims[x] * e.coalg.dim).collect();
    let mut actions = vec![vec![Matrix::zeros(f, 0, 0); k]; k];
    for y in 0..k {
        for x in 0..k {
            let idnx = Matrix::identity(f, n.dims[x]);
            actions[y][x] = n.actions[y][x].kron(&idc).mul(&idnx.kron(&e.psi[y][x]));
        }
    }
    let coactions = (0..k)
        .map(|x| Comodule {
            dim: dims[x],
            rho: Matrix::identity(f, n.dims[x]).kron(&e.coalg.delta),
        })
        .collect();
    EntwinedModule { module: RightModule { dims, actions }, coactions }
}

/// Lifts a module morphism `N -> N'` to `N (x) C -> N' (x) C`.
pub fn morphism_tensor_c(e: &Entwining, eta: &ModuleMorphism) -> ModuleMorphism {
    let idc = Matrix::identity(e.field(), e.coalg.dim);
    ModuleMorphism { components: eta.components.iter().map(|c| c.kron(&idc)).collect() }
}

/// `N (x) h_X` for a comodule `N`: precomposition action, coaction braided
/// through `psi`.
pub fn comodule_tensor_hx(e: &Entwining, n: &Comodule, x0: usize) -> EntwinedModule {
    let f = e.field();
    let d = &e.cat;
    let k = d.n_objects();
    let idn = Matrix::identity(f, n.dim);
    let dims: Vec<usize> = (0..k).map(|y| n.dim * d.hom(y, x0)).collect();
    let mut actions = vec![vec![Matrix::zeros(f, 0, 0); k]; k];
    for z in 0..k {
        for y in 0..k {
            actions[z][y] = idn.kron(&d.compose[z][y][x0]);
        }
    }
    let coactions = (0..k)
        .map(|y| {
            let idh = Matrix::identity(f, d.hom(y, x0));
            Comodule {
                dim: dims[y],
                rho: idn.kron(&e.psi[y][x0]).mul(&n.rho.kron(&idh)),
            }
        })
        .collect();
    EntwinedModule { module: RightModule { dims, actions }, coactions }
}

/// Is `eta : M -> N` a morphism of entwined modules (natural and objectwise
/// colinear)?
pub fn verify_entwined_morphism(
    e: &Entwining,
    m: &EntwinedModule,
    n: &EntwinedModule,
    eta: &ModuleMorphism,
) -> Verdict {
    let f = e.field();
    let idc = Matrix::identity(f, e.coalg.dim);
    let mut verdict = verify_module_morphism(&e.cat, &m.module, &n.module, eta);
    for x in 0..e.cat.n_objects() {
        let lhs = n.coactions[x].rho.mul(&eta.components[x]);
        let rhs = eta.components[x].kron(&idc).mul(&m.coactions[x].rho);
        if lhs != rhs {
            verdict.push("colinearity", format!("object {}", e.cat.objects[x]));
        }
    }
    verdict
}

/// The entwining maps assembled into a morphism `C (x) h_Y -> h_Y (x) C` of
/// entwined modules. Its linearity and colinearity are consequences of the
/// axioms, but are still checked.
pub fn psi_morphism(e: &Entwining, y: usize) -> Result<ModuleMorphism, Verdict> {
    let source = e.c_tensor_representable(y);
    let target = e.representable_tensor_c(y);
    let eta = ModuleMorphism {
        components: (0..e.cat.n_objects()).map(|x| e.psi[x][y].clone()).collect(),
    };
    let v = verify_entwined_morphism(e, &source, &target, &eta);
    if v.ok() {
        Ok(eta)
    } else {
        Err(v)
    }
}

/// The coaction closure of an element inside one fiber of an entwined
/// module, with the classifying morphism out of `V (x) h_X`.
#[derive(Debug, Clone)]
pub struct GeneratorMorphism {
    /// Inclusion `V -> M(x0)` of the smallest subcomodule containing the
    /// element.
    pub inclusion: Matrix,
    /// Coaction of the subcomodule in its own coordinates.
    pub subcomodule: Comodule,
    /// The classifying source `V (x) h_{x0}`.
    pub source: EntwinedModule,
    /// `eta(y)(v (x) f) = M(f)(v)`.
    pub morphism: ModuleMorphism,
}

/// Smallest subcomodule of `m` at object `x0` containing `elem`, together
/// with the morphism `V (x) h_{x0} -> m` hitting `elem` at `elem (x) id`.
///
/// The closure iterates `span := span + coefficients of rho(span)` and
/// terminates because dimensions are finite and strictly increase until a
/// fixed point.
pub fn generator_morphism(
    e: &Entwining,
    m: &EntwinedModule,
    x0: usize,
    elem: &Matrix,
) -> GeneratorMorphism {
    let f = e.field();
    let dc = e.coalg.dim;
    let mdim = m.module.dims[x0];
    assert_eq!((elem.rows, elem.cols), (mdim, 1), "element lives in the fiber at x0");
    let rho = &m.coactions[x0].rho;
    let mut span = canonical_basis(elem);
    loop {
        let mut enlarged = span.clone();
        for j in 0..span.cols {
            let image = rho.mul(&span.column(j));
            // coefficient space: slice M (x) C into C-indexed columns
            for a in 0..dc {
                let mut comp = Matrix::zeros(f, mdim, 1);
                for r in 0..mdim {
                    comp.set(r, 0, image.at(r * dc + a, 0).clone());
                }
                enlarged = enlarged.hstack(&comp);
            }
        }
        let next = canonical_basis(&enlarged);
        if next.cols == span.cols {
            span = next;
            break;
        }
        span = next;
    }
    let inclusion = span;
    let sub_rho = if inclusion.cols == 0 {
        Matrix::zeros(f, 0, 0)
    } else {
        inclusion
            .kron(&Matrix::identity(f, dc))
            .solve_exact(&rho.mul(&inclusion))
            .expect("closure is a subcomodule")
    };
    let subcomodule = Comodule { dim: inclusion.cols, rho: sub_rho };
    let source = comodule_tensor_hx(e, &subcomodule, x0);
    let k = e.cat.n_objects();
    let components = (0..k)
        .map(|y| {
            let idh = Matrix::identity(f, e.cat.hom(y, x0));
            m.module.actions[y][x0].mul(&inclusion.kron(&idh))
        })
        .collect();
    GeneratorMorphism { inclusion, subcomodule, source, morphism: ModuleMorphism { components } }
}

/// Kernel and cokernel of an entwined-module morphism, with the induced
/// coactions; both results again satisfy the entwined-module laws.
pub fn kernel_cokernel_entwined(
    e: &Entwining,
    m: &EntwinedModule,
    n: &EntwinedModule,
    eta: &ModuleMorphism,
) -> Result<(EntwinedModule, EntwinedModule), Verdict> {
    let colinear = verify_entwined_morphism(e, m, n, eta);
    if !colinear.ok() {
        return Err(colinear);
    }
    let f = e.field();
    let idc = Matrix::identity(f, e.coalg.dim);
    let kc = kernel_cokernel(&e.cat, &m.module, &n.module, eta).expect("verified natural");
    let k = e.cat.n_objects();
    let mut ker_coactions = Vec::with_capacity(k);
    let mut coker_coactions = Vec::with_capacity(k);
    for x in 0..k {
        let inc = &kc.inclusions[x];
        let rho_k = if inc.cols == 0 {
            Matrix::zeros(f, 0, 0)
        } else {
            inc.kron(&idc)
                .solve_exact(&m.coactions[x].rho.mul(inc))
                .expect("kernel closed under the coaction")
        };
        ker_coactions.push(Comodule { dim: inc.cols, rho: rho_k });
        let rho_q = kc.projections[x]
            .kron(&idc)
            .mul(&n.coactions[x].rho)
            .mul(&kc.sections[x]);
        coker_coactions.push(Comodule { dim: kc.cokernel.dims[x], rho: rho_q });
    }
    Ok((
        EntwinedModule { module: kc.kernel, coactions: ker_coactions },
        EntwinedModule { module: kc.cokernel, coactions: coker_coactions },
    ))
}

/// Verification predicate for a morphism of entwining structures: functor
/// laws, counital coalgebra map, and the exchange identity tying the two
/// entwinings together.
pub fn verify_entwining_morphism_structures(
    source: &Entwining,
    target: &Entwining,
    mor: &EntwiningMorphism,
) -> Verdict {
    let n = source.cat.n_objects();
    let mut verdict = Verdict::default();
    for x in 0..n {
        let fx = mor.obj_map[x];
        let lhs = mor.hom_maps[x][x].mul(&source.cat.identities[x]);
        if lhs != target.cat.identities[fx] {
            verdict.push("functor preserves identities", format!("object {}", source.cat.objects[x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if source.cat.hom(y, z) * source.cat.hom(x, y) == 0 {
                    continue;
                }
                let (fx, fy, fz) = (mor.obj_map[x], mor.obj_map[y], mor.obj_map[z]);
                let lhs = mor.hom_maps[x][z].mul(&source.cat.compose[x][y][z]);
                let rhs = target.cat.compose[fx][fy][fz]
                    .mul(&mor.hom_maps[y][z].kron(&mor.hom_maps[x][y]));
                if lhs != rhs {
                    verdict.push(
                        "functor preserves composition",
                        format!(
                            "objects ({},{},{})",
                            source.cat.objects[x], source.cat.objects[y], source.cat.objects[z]
                        ),
                    );
                }
            }
        }
    }
    if target.coalg.delta.mul(&mor.sigma) != mor.sigma.kron(&mor.sigma).mul(&source.coalg.delta) {
        verdict.push("coalgebra map compatibility", "comultiplication");
    }
    if target.coalg.counit.mul(&mor.sigma) != source.coalg.counit {
        verdict.push("coalgebra map compatibility", "counit");
    }
    for x in 0..n {
        for y in 0..n {
            if source.cat.hom(x, y) == 0 {
                continue;
            }
            let (fx, fy) = (mor.obj_map[x], mor.obj_map[y]);
            let lhs = mor.hom_maps[x][y].kron(&mor.sigma).mul(&source.psi[x][y]);
            let rhs = target.psi[fx][fy].mul(&mor.sigma.kron(&mor.hom_maps[x][y]));
            if lhs != rhs {
                verdict.push(
                    "entwining exchange law",
                    format!("objects ({},{})", source.cat.objects[x], source.cat.objects[y]),
                );
            }
        }
    }
    verdict
}

/// Ready-made instances used across tests, examples and the binary.
pub mod fixtures {
    use super::*;

    /// One-object category with endomorphisms the group algebra of Z/2, hom
    /// coaction the comultiplication, and the same Hopf algebra as the
    /// module coalgebra acting on itself by multiplication.
    pub fn dh2(field: FieldSpec) -> (CoHCategory, Coalgebra, Matrix) {
        let h = HopfAlgebra::cyclic_group_algebra(field, 2);
        let cat = LinCategory::one_object(
            field,
            h.mult.clone(),
            h.unit.clone(),
            vec!["one".into(), "g".into()],
        );
        let coh = CoHCategory {
            cat,
            hopf: h.clone(),
            hom_coactions: vec![vec![h.coalgebra.delta.clone()]],
        };
        let c = h.coalgebra.clone();
        let action = h.mult.clone();
        (coh, c, action)
    }
}
