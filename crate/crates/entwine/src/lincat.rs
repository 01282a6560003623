//! Small K-linear categories with finite-dimensional hom spaces, their right
//! and left modules, hom-space solving, subcategories and tensor products
//! over a subcategory.
//!
//! A category is a finite object list (kept in lexicographic order so all
//! derived data is deterministic), one dimension per ordered object pair,
//! a composition tensor per object triple and an identity coordinate vector
//! per object. Zero-dimensional hom spaces are first class: their matrices
//! are `0 x n`, never omitted.

use crate::exactlin::{quotient_projection, solution_space, swap_legs, FieldSpec, Matrix, QuotientSpace};
use crate::verdict::Verdict;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LincatError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("module morphism is not natural at {0}")]
    NotNatural(String),
    #[error("base category mismatch")]
    BaseMismatch,
}

/// A small K-linear category presented by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct LinCategory {
    pub field: FieldSpec,
    /// Object names, sorted lexicographically.
    pub objects: Vec<String>,
    /// `hom_dims[x][y]` = dim Hom(x, y).
    pub hom_dims: Vec<Vec<usize>>,
    /// `compose[x][y][z] : Hom(y,z) (x) Hom(x,y) -> Hom(x,z)`.
    pub compose: Vec<Vec<Vec<Matrix>>>,
    /// `identities[x]` : coordinates of `id_x` in Hom(x,x), as a column.
    pub identities: Vec<Matrix>,
    /// Basis labels per hom space, for diagnostics and serialization.
    pub hom_basis: Vec<Vec<Vec<String>>>,
}

/// A right module: a contravariant linear functor to vector spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct RightModule {
    pub dims: Vec<usize>,
    /// `actions[x][y] : M(y) (x) Hom(x,y) -> M(x)`.
    pub actions: Vec<Vec<Matrix>>,
}

/// A left module: a covariant linear functor to vector spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct LeftModule {
    pub dims: Vec<usize>,
    /// `actions[x][y] : M(x) (x) Hom(x,y) -> M(y)`.
    pub actions: Vec<Vec<Matrix>>,
}

/// A morphism of right modules: one linear component per object.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleMorphism {
    /// `components[x] : M(x) -> N(x)`.
    pub components: Vec<Matrix>,
}

/// A subcategory on the same objects, given by a subspace of every hom
/// space. Span matrices are canonicalized so equal subspaces produce equal
/// data.
#[derive(Debug, Clone, PartialEq)]
pub struct Subcategory {
    /// `spans[x][y]`: columns form a basis of the subspace of Hom(x,y).
    pub spans: Vec<Vec<Matrix>>,
}

/// The tensor product `M (x)_E N` of a right and a left module over the same
/// category: the quotient of the direct sum of the pointwise tensor products
/// by the bilinearity relations `M(e)m (x) n - m (x) N(e)n`.
#[derive(Debug, Clone)]
pub struct TensorOverSub {
    /// Per object: (right factor dim, left factor dim).
    pub block_dims: Vec<(usize, usize)>,
    /// Offset of each object block inside the ambient sum.
    pub offsets: Vec<usize>,
    pub ambient_dim: usize,
    pub space: QuotientSpace,
}

/// Kernel and cokernel of a module morphism, with the mediating maps.
#[derive(Debug, Clone)]
pub struct KernelCokernel {
    pub kernel: RightModule,
    /// `inclusions[x] : K(x) -> M(x)`, full column rank.
    pub inclusions: Vec<Matrix>,
    pub cokernel: RightModule,
    /// `projections[x] : N(x) -> Q(x)`, surjective.
    pub projections: Vec<Matrix>,
    /// `sections[x] : Q(x) -> N(x)` with `projections[x] * sections[x] = id`.
    pub sections: Vec<Matrix>,
}

impl LinCategory {
    /// Builds a category, sorting objects lexicographically and reordering
    /// the supplied tables accordingly. `homs[x][y]` are dims in the order
    /// of `objects` as given.
    pub fn new(
        field: FieldSpec,
        objects: Vec<String>,
        hom_dims: Vec<Vec<usize>>,
        compose: Vec<Vec<Vec<Matrix>>>,
        identities: Vec<Matrix>,
        hom_basis: Vec<Vec<Vec<String>>>,
    ) -> Self {
        let n = objects.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| objects[a].cmp(&objects[b]));
        let pick = |v: &Vec<usize>, i: usize| v[order[i]];
        let objects_sorted: Vec<String> = order.iter().map(|&i| objects[i].clone()).collect();
        let hom_dims_sorted: Vec<Vec<usize>> =
            (0..n).map(|x| (0..n).map(|y| pick(&hom_dims[order[x]], y)).collect()).collect();
        let compose_sorted: Vec<Vec<Vec<Matrix>>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (0..n).map(|z| compose[order[x]][order[y]][order[z]].clone()).collect())
                    .collect()
            })
            .collect();
        let identities_sorted: Vec<Matrix> = order.iter().map(|&i| identities[i].clone()).collect();
        let hom_basis_sorted: Vec<Vec<Vec<String>>> = (0..n)
            .map(|x| (0..n).map(|y| hom_basis[order[x]][order[y]].clone()).collect())
            .collect();
        LinCategory {
            field,
            objects: objects_sorted,
            hom_dims: hom_dims_sorted,
            compose: compose_sorted,
            identities: identities_sorted,
            hom_basis: hom_basis_sorted,
        }
    }

    /// One object `*` with endomorphism algebra K.
    pub fn point(field: FieldSpec) -> Self {
        LinCategory {
            field,
            objects: vec!["*".into()],
            hom_dims: vec![vec![1]],
            compose: vec![vec![vec![Matrix::identity(field, 1)]]],
            identities: vec![Matrix::identity(field, 1)],
            hom_basis: vec![vec![vec!["id".into()]]],
        }
    }

    /// One object with a given unital associative endomorphism algebra
    /// (`mult : End (x) End -> End`, `unit` column).
    pub fn one_object(field: FieldSpec, mult: Matrix, unit: Matrix, basis: Vec<String>) -> Self {
        let d = unit.rows;
        assert_eq!((mult.rows, mult.cols), (d, d * d));
        LinCategory {
            field,
            objects: vec!["*".into()],
            hom_dims: vec![vec![d]],
            compose: vec![vec![vec![mult]]],
            identities: vec![unit],
            hom_basis: vec![vec![basis]],
        }
    }

    /// The path category of the quiver `x -> y`: one-dimensional hom spaces
    /// Hom(x,x), Hom(y,y), Hom(x,y); Hom(y,x) = 0.
    pub fn arrow(field: FieldSpec) -> Self {
        let n = 2;
        let dims = vec![vec![1, 1], vec![0, 1]];
        let mut compose = vec![vec![vec![Matrix::zeros(field, 0, 0); n]; n]; n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let rows = dims[x][z];
                    let cols = dims[y][z] * dims[x][y];
                    compose[x][y][z] = if rows == 1 && cols == 1 {
                        Matrix::identity(field, 1)
                    } else {
                        Matrix::zeros(field, rows, cols)
                    };
                }
            }
        }
        let identities = vec![Matrix::identity(field, 1), Matrix::identity(field, 1)];
        let hom_basis = vec![
            vec![vec!["idx".into()], vec!["a".into()]],
            vec![vec![], vec!["idy".into()]],
        ];
        LinCategory { field, objects: vec!["x".into(), "y".into()], hom_dims: dims, compose, identities, hom_basis }
    }

    pub fn object_index(&self, name: &str) -> Result<usize, LincatError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| LincatError::UnknownObject(name.into()))
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn hom(&self, x: usize, y: usize) -> usize {
        self.hom_dims[x][y]
    }

    /// Total hom dimension; useful for sizing probes and reports.
    pub fn total_hom_dim(&self) -> usize {
        self.hom_dims.iter().map(|r| r.iter().sum::<usize>()).sum()
    }

    /// Composition of two explicit morphisms `g : y -> z`, `f : x -> y`.
    pub fn compose_vecs(&self, x: usize, y: usize, z: usize, g: &Matrix, f: &Matrix) -> Matrix {
        self.compose[x][y][z].mul(&g.kron(f))
    }

    pub fn label(&self, x: usize, y: usize, i: usize) -> String {
        self.hom_basis[x][y]
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("{}->{}#{}", self.objects[x], self.objects[y], i))
    }
}

/// Checks bilinear associativity and the two-sided unit laws.
pub fn verify_category(d: &LinCategory) -> Verdict {
    let f = d.field;
    let n = d.n_objects();
    let mut verdict = Verdict::default();
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let dims = [d.hom(y, z), d.hom(x, y), d.hom(w, x)];
                    if dims.iter().any(|&k| k == 0) {
                        continue;
                    }
                    let inner_first = d.compose[w][y][z]
                        .mul(&Matrix::identity(f, dims[0]).kron(&d.compose[w][x][y]));
                    let outer_first = d.compose[w][x][z]
                        .mul(&d.compose[x][y][z].kron(&Matrix::identity(f, dims[2])));
                    if inner_first != outer_first {
                        verdict.push(
                            "composition associativity",
                            format!(
                                "objects ({},{},{},{})",
                                d.objects[w], d.objects[x], d.objects[y], d.objects[z]
                            ),
                        );
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let hom = d.hom(x, y);
            if hom == 0 {
                continue;
            }
            let id_h = Matrix::identity(f, hom);
            let right_unit = d.compose[x][x][y].mul(&id_h.kron(&d.identities[x]));
            if right_unit != id_h {
                verdict.push("right unit law", format!("objects ({},{})", d.objects[x], d.objects[y]));
            }
            let left_unit = d.compose[x][y][y].mul(&d.identities[y].kron(&id_h));
            if left_unit != id_h {
                verdict.push("left unit law", format!("objects ({},{})", d.objects[x], d.objects[y]));
            }
        }
    }
    verdict
}

/// The representable right module `h_Y = Hom(-, Y)` with precomposition
/// action.
pub fn representable_right(d: &LinCategory, y: &str) -> Result<RightModule, LincatError> {
    let yi = d.object_index(y)?;
    Ok(representable_right_idx(d, yi))
}

pub fn representable_right_idx(d: &LinCategory, yi: usize) -> RightModule {
    let n = d.n_objects();
    let dims: Vec<usize> = (0..n).map(|x| d.hom(x, yi)).collect();
    let actions: Vec<Vec<Matrix>> =
        (0..n).map(|x| (0..n).map(|z| d.compose[x][z][yi].clone()).collect()).collect();
    RightModule { dims, actions }
}

/// The representable left module `Hom(X, -)` with postcomposition action.
pub fn representable_left(d: &LinCategory, x: &str) -> Result<LeftModule, LincatError> {
    let xi = d.object_index(x)?;
    Ok(representable_left_idx(d, xi))
}

pub fn representable_left_idx(d: &LinCategory, xi: usize) -> LeftModule {
    let f = d.field;
    let n = d.n_objects();
    let dims: Vec<usize> = (0..n).map(|y| d.hom(xi, y)).collect();
    let mut actions = vec![vec![Matrix::zeros(f, 0, 0); n]; n];
    for y in 0..n {
        for z in 0..n {
            // M(y) (x) Hom(y,z) -> M(z): g (x) e -> e . g
            let sw = swap_legs(f, d.hom(xi, y), d.hom(y, z));
            actions[y][z] = d.compose[xi][y][z].mul(&sw);
        }
    }
    LeftModule { dims, actions }
}

/// Contravariant functor laws for a right module.
pub fn verify_right_module(d: &LinCategory, m: &RightModule) -> Verdict {
    let f = d.field;
    let n = d.n_objects();
    let mut verdict = Verdict::default();
    for x in 0..n {
        let idm = Matrix::identity(f, m.dims[x]);
        let unital = m.actions[x][x].mul(&idm.kron(&d.identities[x]));
        if unital != idm {
            verdict.push("module identity law", format!("object {}", d.objects[x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m.dims[z] == 0 || d.hom(y, z) == 0 || d.hom(x, y) == 0 {
                    continue;
                }
                // M(gf) = M(f) M(g) on M(z) (x) Hom(y,z) (x) Hom(x,y)
                let via_compose = m.actions[x][z]
                    .mul(&Matrix::identity(f, m.dims[z]).kron(&d.compose[x][y][z]));
                let stepwise = m.actions[x][y]
                    .mul(&m.actions[y][z].kron(&Matrix::identity(f, d.hom(x, y))));
                if via_compose != stepwise {
                    verdict.push(
                        "module composition law",
                        format!("objects ({},{},{})", d.objects[x], d.objects[y], d.objects[z]),
                    );
                }
            }
        }
    }
    verdict
}

/// Covariant functor laws for a left module.
pub fn verify_left_module(d: &LinCategory, m: &LeftModule) -> Verdict {
    let f = d.field;
    let n = d.n_objects();
    let mut verdict = Verdict::default();
    for x in 0..n {
        let idm = Matrix::identity(f, m.dims[x]);
        let unital = m.actions[x][x].mul(&idm.kron(&d.identities[x]));
        if unital != idm {
            verdict.push("module identity law", format!("object {}", d.objects[x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m.dims[x] == 0 || d.hom(x, y) == 0 || d.hom(y, z) == 0 {
                    continue;
                }
                // M(gf) = M(g) M(f) on M(x) (x) Hom(y,z) (x) Hom(x,y)
                let via_compose = m.actions[x][z].mul(
                    &Matrix::identity(f, m.dims[x]).kron(&d.compose[x][y][z]),
                );
                let reorder = Matrix::identity(f, m.dims[x])
                    .kron(&swap_legs(f, d.hom(y, z), d.hom(x, y)));
                let stepwise = m.actions[y][z]
                    .mul(&m.actions[x][y].kron(&Matrix::identity(f, d.hom(y, z))))
                    .mul(&reorder);
                if via_compose != stepwise {
                    verdict.push(
                        "module composition law",
                        format!("objects ({},{},{})", d.objects[x], d.objects[y], d.objects[z]),
                    );
                }
            }
        }
    }
    verdict
}

/// Is `eta : M -> N` a natural transformation of right modules?
pub fn verify_module_morphism(d: &LinCategory, m: &RightModule, n: &RightModule, eta: &ModuleMorphism) -> Verdict {
    let f = d.field;
    let k = d.n_objects();
    let mut verdict = Verdict::default();
    for x in 0..k {
        for y in 0..k {
            if m.dims[y] == 0 || d.hom(x, y) == 0 {
                continue;
            }
            let lhs = eta.components[x].mul(&m.actions[x][y]);
            let rhs = n.actions[x][y]
                .mul(&eta.components[y].kron(&Matrix::identity(f, d.hom(x, y))));
            if lhs != rhs {
                verdict.push("naturality", format!("objects ({},{})", d.objects[x], d.objects[y]));
            }
        }
    }
    verdict
}

/// Basis of `Hom_{Mod-D}(M, N)`: all objectwise-linear collections commuting
/// with every action map, computed as the kernel of the stacked naturality
/// system.
pub fn module_hom_space(d: &LinCategory, m: &RightModule, n: &RightModule) -> Vec<ModuleMorphism> {
    let f = d.field;
    let k = d.n_objects();
    let sizes: Vec<usize> = (0..k).map(|x| n.dims[x] * m.dims[x]).collect();
    let total: usize = sizes.iter().sum();
    let unpack = |v: &Matrix| -> ModuleMorphism {
        let mut components = Vec::with_capacity(k);
        let mut off = 0;
        for x in 0..k {
            let mut comp = Matrix::zeros(f, n.dims[x], m.dims[x]);
            for r in 0..n.dims[x] {
                for c in 0..m.dims[x] {
                    comp.set(r, c, v.at(off + r * m.dims[x] + c, 0).clone());
                }
            }
            off += sizes[x];
            components.push(comp);
        }
        ModuleMorphism { components }
    };
    let basis = solution_space(f, total, |idx| {
        let eta = unpack(&Matrix::basis_column(f, total, idx));
        let mut residuals = Vec::new();
        for x in 0..k {
            for y in 0..k {
                if m.dims[y] == 0 || d.hom(x, y) == 0 {
                    continue;
                }
                let lhs = eta.components[x].mul(&m.actions[x][y]);
                let rhs = n.actions[x][y]
                    .mul(&eta.components[y].kron(&Matrix::identity(f, d.hom(x, y))));
                residuals.push(lhs.sub(&rhs));
            }
        }
        residuals
    });
    (0..basis.cols).map(|j| unpack(&basis.column(j))).collect()
}

impl Subcategory {
    /// Canonicalizes the spanning columns of each subspace (reduced row
    /// echelon basis) so structurally equal subcategories compare equal.
    pub fn new(d: &LinCategory, spans: Vec<Vec<Matrix>>) -> Self {
        let n = d.n_objects();
        let mut canon = vec![vec![Matrix::zeros(d.field, 0, 0); n]; n];
        for x in 0..n {
            for y in 0..n {
                canon[x][y] = canonical_basis(&spans[x][y]);
                assert_eq!(canon[x][y].rows, d.hom(x, y), "span rows at ({x},{y})");
            }
        }
        Subcategory { spans: canon }
    }

    /// The full subcategory: every hom space in full.
    pub fn full(d: &LinCategory) -> Self {
        let n = d.n_objects();
        let spans = (0..n)
            .map(|x| (0..n).map(|y| Matrix::identity(d.field, d.hom(x, y))).collect())
            .collect();
        Subcategory { spans }
    }

    /// The subcategory generated by identities alone: scalars on the
    /// diagonal, zero off it.
    pub fn identities_only(d: &LinCategory) -> Self {
        let n = d.n_objects();
        let spans = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        if x == y {
                            d.identities[x].clone()
                        } else {
                            Matrix::zeros(d.field, d.hom(x, y), 0)
                        }
                    })
                    .collect()
            })
            .collect();
        Subcategory::new(d, spans)
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.spans[x][y].cols
    }

    /// Checks that identities lie in the subspaces and that the spans are
    /// closed under composition.
    pub fn verify(&self, d: &LinCategory) -> Verdict {
        let n = d.n_objects();
        let mut verdict = Verdict::default();
        for x in 0..n {
            if !self.spans[x][x].spans(&d.identities[x]) {
                verdict.push("identity containment", format!("object {}", d.objects[x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.dim(y, z) == 0 || self.dim(x, y) == 0 {
                        continue;
                    }
                    let products = d.compose[x][y][z].mul(&self.spans[y][z].kron(&self.spans[x][y]));
                    if !self.spans[x][z].spans(&products) {
                        verdict.push(
                            "composition closure",
                            format!("objects ({},{},{})", d.objects[x], d.objects[y], d.objects[z]),
                        );
                    }
                }
            }
        }
        verdict
    }

    /// Materializes the subcategory as its own category, with hom bases the
    /// canonical span columns. Panics if the spans are not closed (verify
    /// first).
    pub fn to_category(&self, d: &LinCategory) -> LinCategory {
        let f = d.field;
        let n = d.n_objects();
        let hom_dims: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| self.dim(x, y)).collect()).collect();
        let mut compose = vec![vec![vec![Matrix::zeros(f, 0, 0); n]; n]; n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let rows = hom_dims[x][z];
                    let cols = hom_dims[y][z] * hom_dims[x][y];
                    if cols == 0 || rows == 0 {
                        compose[x][y][z] = Matrix::zeros(f, rows, cols);
                        continue;
                    }
                    let products = d.compose[x][y][z].mul(&self.spans[y][z].kron(&self.spans[x][y]));
                    let coords = self.spans[x][z]
                        .solve_exact(&products)
                        .expect("subcategory closed under composition");
                    compose[x][y][z] = coords;
                }
            }
        }
        let identities: Vec<Matrix> = (0..n)
            .map(|x| {
                self.spans[x][x]
                    .solve_exact(&d.identities[x])
                    .expect("identity lies in the subcategory")
            })
            .collect();
        let hom_basis: Vec<Vec<Vec<String>>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (0..self.dim(x, y)).map(|i| format!("e{i}")).collect())
                    .collect()
            })
            .collect();
        LinCategory { field: f, objects: d.objects.clone(), hom_dims, compose, identities, hom_basis }
    }

    /// Restricts a right D-module to a module over `self.to_category(d)`.
    pub fn restrict_right(&self, d: &LinCategory, m: &RightModule) -> RightModule {
        let f = d.field;
        let n = d.n_objects();
        let actions = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| m.actions[x][y].mul(&Matrix::identity(f, m.dims[y]).kron(&self.spans[x][y])))
                    .collect()
            })
            .collect();
        RightModule { dims: m.dims.clone(), actions }
    }

    /// Restricts a left D-module likewise.
    pub fn restrict_left(&self, d: &LinCategory, m: &LeftModule) -> LeftModule {
        let f = d.field;
        let n = d.n_objects();
        let actions = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| m.actions[x][y].mul(&Matrix::identity(f, m.dims[x]).kron(&self.spans[x][y])))
                    .collect()
            })
            .collect();
        LeftModule { dims: m.dims.clone(), actions }
    }
}

/// Deterministic basis of a column span: reduced row echelon of the
/// transpose, nonzero rows back as columns.
pub fn canonical_basis(span: &Matrix) -> Matrix {
    let (r, pivots) = span.transpose().rref();
    let mut out = Matrix::zeros(span.field, span.rows, pivots.len());
    for (k, _) in pivots.iter().enumerate() {
        for c in 0..span.rows {
            out.set(c, k, r.at(k, c).clone());
        }
    }
    out
}

/// Tensor product of a right and a left module over the category `e`
/// (typically a materialized subcategory): the coequalizer of the two
/// bilinearity actions.
pub fn tensor_over_sub(e: &LinCategory, m: &RightModule, n: &LeftModule) -> TensorOverSub {
    let f = e.field;
    let k = e.n_objects();
    let block_dims: Vec<(usize, usize)> = (0..k).map(|z| (m.dims[z], n.dims[z])).collect();
    let mut offsets = Vec::with_capacity(k);
    let mut ambient_dim = 0;
    for z in 0..k {
        offsets.push(ambient_dim);
        ambient_dim += block_dims[z].0 * block_dims[z].1;
    }
    let mut relations = Vec::new();
    for w in 0..k {
        for z in 0..k {
            let edim = e.hom(w, z);
            if edim == 0 {
                continue;
            }
            for ecol in 0..edim {
                let e_unit = Matrix::basis_column(f, edim, ecol);
                // M(e) : M(z) -> M(w) and N(e) : N(w) -> N(z)
                let act_m = m.actions[w][z].mul(&Matrix::identity(f, m.dims[z]).kron(&e_unit));
                let act_n = n.actions[w][z].mul(&Matrix::identity(f, n.dims[w]).kron(&e_unit));
                for i in 0..m.dims[z] {
                    for j in 0..n.dims[w] {
                        let mut rel = Matrix::zeros(f, ambient_dim, 1);
                        // block w: M(e)(m_i) (x) n_j
                        for r in 0..m.dims[w] {
                            let coeff = act_m.at(r, i).clone();
                            if !coeff.is_zero() {
                                rel.set(offsets[w] + r * n.dims[w] + j, 0, coeff);
                            }
                        }
                        // block z: minus m_i (x) N(e)(n_j)
                        for s in 0..n.dims[z] {
                            let coeff = f.neg(act_n.at(s, j));
                            if !coeff.is_zero() {
                                let idx = offsets[z] + i * n.dims[z] + s;
                                let v = f.add(rel.at(idx, 0), &coeff);
                                rel.set(idx, 0, v);
                            }
                        }
                        relations.push(rel);
                    }
                }
            }
        }
    }
    let mut rel_matrix = Matrix::zeros(f, ambient_dim, relations.len());
    for (c, rel) in relations.iter().enumerate() {
        for r in 0..ambient_dim {
            rel_matrix.set(r, c, rel.at(r, 0).clone());
        }
    }
    let space = quotient_projection(ambient_dim, &rel_matrix);
    TensorOverSub { block_dims, offsets, ambient_dim, space }
}

impl TensorOverSub {
    pub fn dim(&self) -> usize {
        self.space.dim
    }

    /// Embedding of one block's raw tensor coordinates into the ambient sum.
    pub fn embed_block(&self, field: FieldSpec, z: usize) -> Matrix {
        let (md, nd) = self.block_dims[z];
        let mut m = Matrix::zeros(field, self.ambient_dim, md * nd);
        for i in 0..md * nd {
            m.set(self.offsets[z] + i, i, field.one());
        }
        m
    }

    /// Class of a simple tensor `u (x) v` from block `z`, in quotient
    /// coordinates.
    pub fn class_of(&self, field: FieldSpec, z: usize, u: &Matrix, v: &Matrix) -> Matrix {
        self.space.projection.mul(&self.embed_block(field, z)).mul(&u.kron(v))
    }
}

/// Objectwise kernel and cokernel of a natural transformation, with induced
/// actions.
pub fn kernel_cokernel(
    d: &LinCategory,
    m: &RightModule,
    n: &RightModule,
    eta: &ModuleMorphism,
) -> Result<KernelCokernel, LincatError> {
    let naturality = verify_module_morphism(d, m, n, eta);
    if !naturality.ok() {
        return Err(LincatError::NotNatural(naturality.first().unwrap().witness.clone()));
    }
    let f = d.field;
    let k = d.n_objects();
    let inclusions: Vec<Matrix> = (0..k).map(|x| eta.components[x].kernel_basis()).collect();
    let quotients: Vec<_> = (0..k).map(|x| quotient_projection(n.dims[x], &eta.components[x])).collect();
    let mut kernel_actions = vec![vec![Matrix::zeros(f, 0, 0); k]; k];
    let mut coker_actions = vec![vec![Matrix::zeros(f, 0, 0); k]; k];
    for x in 0..k {
        for y in 0..k {
            let hom = d.hom(x, y);
            // restrict: the action maps kernel into kernel by naturality
            let restricted = m.actions[x][y].mul(&inclusions[y].kron(&Matrix::identity(f, hom)));
            kernel_actions[x][y] = if inclusions[x].cols == 0 {
                Matrix::zeros(f, 0, restricted.cols)
            } else {
                inclusions[x]
                    .solve_exact(&restricted)
                    .expect("kernel closed under the module action")
            };
            // descend: the action kills the image, so it factors through the quotient
            coker_actions[x][y] = quotients[x].projection.mul(
                &n.actions[x][y].mul(&quotients[y].section.kron(&Matrix::identity(f, hom))),
            );
        }
    }
    let kernel = RightModule { dims: inclusions.iter().map(|i| i.cols).collect(), actions: kernel_actions };
    let cokernel = RightModule { dims: quotients.iter().map(|q| q.dim).collect(), actions: coker_actions };
    Ok(KernelCokernel {
        kernel,
        inclusions,
        cokernel,
        projections: quotients.iter().map(|q| q.projection.clone()).collect(),
        sections: quotients.iter().map(|q| q.section.clone()).collect(),
    })
}

/// Direct sum of matrices along the diagonal.
pub fn direct_sum(field: FieldSpec, mats: &[Matrix]) -> Matrix {
    let rows: usize = mats.iter().map(|m| m.rows).sum();
    let cols: usize = mats.iter().map(|m| m.cols).sum();
    let mut out = Matrix::zeros(field, rows, cols);
    let (mut ro, mut co) = (0, 0);
    for m in mats {
        for r in 0..m.rows {
            for c in 0..m.cols {
                out.set(ro + r, co + c, m.at(r, c).clone());
            }
        }
        ro += m.rows;
        co += m.cols;
    }
    out
}

/// Rearranges `V (x) (sum_z A_z)` into `sum_z (V (x) A_z)`.
pub fn distribute_left(field: FieldSpec, v_dim: usize, block_dims: &[usize]) -> Matrix {
    let total: usize = block_dims.iter().sum();
    let mut out = Matrix::zeros(field, v_dim * total, v_dim * total);
    let mut offset = 0;
    let mut out_offset = 0;
    for &b in block_dims {
        for i in 0..v_dim {
            for a in 0..b {
                out.set(out_offset + i * b + a, i * total + offset + a, field.one());
            }
        }
        offset += b;
        out_offset += v_dim * b;
    }
    out
}

/// Rearranges `(sum_z A_z) (x) V` into `sum_z (A_z (x) V)`. This is the
/// identity permutation under row-major ordering, returned for symmetry.
pub fn distribute_right(field: FieldSpec, block_dims: &[usize], v_dim: usize) -> Matrix {
    let total: usize = block_dims.iter().sum();
    Matrix::identity(field, total * v_dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn point_and_arrow_verify() {
        assert!(verify_category(&LinCategory::point(q())).ok());
        assert!(verify_category(&LinCategory::arrow(q())).ok());
    }

    #[test]
    fn zero_composition_breaks_units() {
        let mut d = LinCategory::point(q());
        d.compose[0][0][0] = Matrix::zeros(q(), 1, 1);
        let v = verify_category(&d);
        assert!(!v.ok());
        assert!(v.failures.iter().any(|x| x.law.contains("unit")));
    }

    #[test]
    fn representables_on_point_and_arrow() {
        let p = LinCategory::point(q());
        let h = representable_right(&p, "*").unwrap();
        assert_eq!(h.dims, vec![1]);
        assert!(verify_right_module(&p, &h).ok());

        let a = LinCategory::arrow(q());
        let hy = representable_right(&a, "y").unwrap();
        assert_eq!(hy.dims, vec![1, 1]);
        assert!(verify_right_module(&a, &hy).ok());
        let hx = representable_right(&a, "x").unwrap();
        assert_eq!(hx.dims, vec![1, 0]);
        assert!(verify_right_module(&a, &hx).ok());

        let lx = representable_left(&a, "x").unwrap();
        assert_eq!(lx.dims, vec![1, 1]);
        assert!(verify_left_module(&a, &lx).ok());
        let ly = representable_left(&a, "y").unwrap();
        assert_eq!(ly.dims, vec![0, 1]);
        assert!(verify_left_module(&a, &ly).ok());

        assert!(representable_right(&a, "zz").is_err());
    }

    #[test]
    fn hom_spaces_match_yoneda() {
        let p = LinCategory::point(q());
        let h = representable_right(&p, "*").unwrap();
        assert_eq!(module_hom_space(&p, &h, &h).len(), 1);

        let a = LinCategory::arrow(q());
        let hx = representable_right(&a, "x").unwrap();
        let hy = representable_right(&a, "y").unwrap();
        assert_eq!(module_hom_space(&a, &hx, &hy).len(), 1);
        assert_eq!(module_hom_space(&a, &hy, &hx).len(), 0);
        assert_eq!(module_hom_space(&a, &hx, &hx).len(), 1);
    }

    #[test]
    fn yoneda_dimensions_across_fixture_categories() {
        for d in [LinCategory::point(q()), LinCategory::arrow(q())] {
            assert!(verify_category(&d).ok());
            for x in 0..d.n_objects() {
                for y in 0..d.n_objects() {
                    let hx = representable_right_idx(&d, x);
                    let hy = representable_right_idx(&d, y);
                    assert_eq!(module_hom_space(&d, &hx, &hy).len(), d.hom(x, y));
                }
            }
        }
    }

    #[test]
    fn subcategory_trivial_and_full_verify() {
        let a = LinCategory::arrow(q());
        assert!(Subcategory::identities_only(&a).verify(&a).ok());
        assert!(Subcategory::full(&a).verify(&a).ok());
        let e = Subcategory::full(&a).to_category(&a);
        assert!(verify_category(&e).ok());
    }

    #[test]
    fn tensor_over_trivial_sub_is_plain_sum() {
        let a = LinCategory::arrow(q());
        let triv = Subcategory::identities_only(&a);
        let e = triv.to_category(&a);
        let m = triv.restrict_right(&a, &representable_right(&a, "y").unwrap());
        let n = triv.restrict_left(&a, &representable_left(&a, "x").unwrap());
        let t = tensor_over_sub(&e, &m, &n);
        // no relations beyond identities: quotient = ambient
        assert_eq!(t.dim(), t.ambient_dim);
    }

    #[test]
    fn tensor_over_full_base_collapses_to_hom() {
        // h_Y (x)_D Hom(X,-) has the dimension of Hom(X,Y), for all pairs
        let group_algebra_object = crate::entwine::fixtures::dh2(q()).0.cat;
        for d in [LinCategory::point(q()), LinCategory::arrow(q()), group_algebra_object] {
            let full = Subcategory::full(&d);
            let e = full.to_category(&d);
            for x in 0..d.n_objects() {
                for y in 0..d.n_objects() {
                    let m = full.restrict_right(&d, &representable_right_idx(&d, y));
                    let n = full.restrict_left(&d, &representable_left_idx(&d, x));
                    let t = tensor_over_sub(&e, &m, &n);
                    assert_eq!(t.dim(), d.hom(x, y), "pair ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn kernel_cokernel_identity_and_zero() {
        let p = LinCategory::point(q());
        let h = representable_right(&p, "*").unwrap();
        let id = ModuleMorphism { components: vec![Matrix::identity(q(), 1)] };
        let kc = kernel_cokernel(&p, &h, &h, &id).unwrap();
        assert_eq!(kc.kernel.dims, vec![0]);
        assert_eq!(kc.cokernel.dims, vec![0]);

        let zero = ModuleMorphism { components: vec![Matrix::zeros(q(), 1, 1)] };
        let kc = kernel_cokernel(&p, &h, &h, &zero).unwrap();
        assert_eq!(kc.kernel.dims, vec![1]);
        assert_eq!(kc.cokernel.dims, vec![1]);
        assert!(verify_right_module(&p, &kc.kernel).ok());
        assert!(verify_right_module(&p, &kc.cokernel).ok());
    }

    #[test]
    fn kernel_cokernel_of_yoneda_arrow() {
        // the generator-induced map h_x -> h_y over the arrow category has
        // zero kernel and cokernel concentrated at y
        let a = LinCategory::arrow(q());
        let hx = representable_right(&a, "x").unwrap();
        let hy = representable_right(&a, "y").unwrap();
        let basis = module_hom_space(&a, &hx, &hy);
        assert_eq!(basis.len(), 1);
        let kc = kernel_cokernel(&a, &hx, &hy, &basis[0]).unwrap();
        assert_eq!(kc.kernel.dims, vec![0, 0]);
        assert_eq!(kc.cokernel.dims, vec![0, 1]);
        // exactness objectwise: rank of inclusion + rank of eta = dim M
        for x in 0..2 {
            assert_eq!(
                kc.inclusions[x].rank() + basis[0].components[x].rank(),
                hx.dims[x]
            );
        }
    }

    #[test]
    fn non_natural_morphism_rejected() {
        let a = LinCategory::arrow(q());
        let hy = representable_right(&a, "y").unwrap();
        // nonzero at x, zero at y: fails naturality against the arrow
        let eta = ModuleMorphism {
            components: vec![Matrix::identity(q(), 1), Matrix::zeros(q(), 1, 1)],
        };
        assert!(!verify_module_morphism(&a, &hy, &hy, &eta).ok());
        assert!(kernel_cokernel(&a, &hy, &hy, &eta).is_err());
    }

    #[test]
    fn canonical_basis_is_stable() {
        let m1 = Matrix::from_i64(q(), 3, 2, &[1, 1, 0, 2, 1, 3]);
        let m2 = Matrix::from_i64(q(), 3, 2, &[2, 1, 2, 0, 4, 1]); // same span, different generators
        assert_eq!(canonical_basis(&m1), canonical_basis(&m2));
    }
}
