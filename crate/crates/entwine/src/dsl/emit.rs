//! Canonical serializer for `.ent` documents: fixed block order, sorted
//! entries, lowest-terms scalars. Serialization is idempotent byte for byte
//! and parses back to a structurally equal document.

use crate::exactlin::{FieldSpec, Matrix};

use super::{BlockData, Document};

fn combo(field: FieldSpec, column: &Matrix, col: usize, tables: &[&[String]]) -> String {
    let mut terms = Vec::new();
    let total: usize = tables.iter().map(|t| t.len()).product();
    for idx in 0..total {
        let coeff = column.at(idx, col);
        if coeff.is_zero() {
            continue;
        }
        let mut rem = idx;
        let mut names = Vec::with_capacity(tables.len());
        for t in tables.iter().rev() {
            names.push(t[rem % t.len()].clone());
            rem /= t.len();
        }
        names.reverse();
        let product = names.join("*");
        if coeff == &field.one() {
            terms.push(product);
        } else {
            terms.push(format!("{} {}", coeff.display(), product));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn serialize(doc: &Document) -> String {
    let f = doc.field;
    let mut out = String::new();
    out.push_str(&format!("field {f};\n"));
    for block in &doc.items {
        out.push('\n');
        match &block.data {
            BlockData::Coalgebra(c) => {
                out.push_str(&format!("coalgebra {} dim {} {{\n", block.name, c.dim));
                out.push_str(&format!("  basis {};\n", c.basis.join(" ")));
                for j in 0..c.dim {
                    out.push_str(&format!(
                        "  delta: {} -> {};\n",
                        c.basis[j],
                        combo(f, &c.delta, j, &[&c.basis, &c.basis])
                    ));
                }
                for j in 0..c.dim {
                    out.push_str(&format!(
                        "  counit: {} -> {};\n",
                        c.basis[j],
                        c.counit.at(0, j).display()
                    ));
                }
                out.push_str("}\n");
            }
            BlockData::Hopf(h) => {
                let c = &h.coalgebra;
                out.push_str(&format!("hopf {} dim {} {{\n", block.name, c.dim));
                out.push_str(&format!("  basis {};\n", c.basis.join(" ")));
                for j in 0..c.dim {
                    out.push_str(&format!(
                        "  delta: {} -> {};\n",
                        c.basis[j],
                        combo(f, &c.delta, j, &[&c.basis, &c.basis])
                    ));
                }
                for j in 0..c.dim {
                    out.push_str(&format!(
                        "  counit: {} -> {};\n",
                        c.basis[j],
                        c.counit.at(0, j).display()
                    ));
                }
                for i in 0..c.dim {
                    for j in 0..c.dim {
                        out.push_str(&format!(
                            "  mult: {}*{} -> {};\n",
                            c.basis[i],
                            c.basis[j],
                            combo(f, &h.mult, i * c.dim + j, &[&c.basis])
                        ));
                    }
                }
                out.push_str(&format!("  unit: {};\n", combo(f, &h.unit, 0, &[&c.basis])));
                for j in 0..c.dim {
                    out.push_str(&format!(
                        "  antipode: {} -> {};\n",
                        c.basis[j],
                        combo(f, &h.antipode, j, &[&c.basis])
                    ));
                }
                out.push_str("}\n");
            }
            BlockData::Category(d) => {
                let n = d.n_objects();
                out.push_str(&format!("category {} {{\n", block.name));
                out.push_str(&format!("  objects {};\n", d.objects.join(" ")));
                for x in 0..n {
                    for y in 0..n {
                        if d.hom(x, y) == 0 {
                            continue;
                        }
                        out.push_str(&format!(
                            "  hom {} {} dim {} basis {};\n",
                            d.objects[x],
                            d.objects[y],
                            d.hom(x, y),
                            d.hom_basis[x][y].join(" ")
                        ));
                    }
                }
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if d.hom(y, z) * d.hom(x, y) == 0 || d.hom(x, z) == 0 {
                                continue;
                            }
                            for gi in 0..d.hom(y, z) {
                                for fi in 0..d.hom(x, y) {
                                    let table: &[String] = &d.hom_basis[x][z];
                                    out.push_str(&format!(
                                        "  compose {} {} {}: {}*{} -> {};\n",
                                        d.objects[x],
                                        d.objects[y],
                                        d.objects[z],
                                        d.hom_basis[y][z][gi],
                                        d.hom_basis[x][y][fi],
                                        combo(f, &d.compose[x][y][z], gi * d.hom(x, y) + fi, &[table])
                                    ));
                                }
                            }
                        }
                    }
                }
                for x in 0..n {
                    let table: &[String] = &d.hom_basis[x][x];
                    out.push_str(&format!(
                        "  identity {}: {};\n",
                        d.objects[x],
                        combo(f, &d.identities[x], 0, &[table])
                    ));
                }
                out.push_str("}\n");
            }
            BlockData::Coactions(b) => {
                let d = &b.data.cat;
                let n = d.n_objects();
                out.push_str(&format!("coactions {} {{\n", block.name));
                out.push_str(&format!("  category {};\n", b.category));
                out.push_str(&format!("  coalgebra {};\n", b.coalgebra));
                for x in 0..n {
                    for y in 0..n {
                        for fi in 0..d.hom(x, y) {
                            let tables: [&[String]; 2] = [&d.hom_basis[x][y], &b.data.coalg.basis];
                            out.push_str(&format!(
                                "  rho {} {}: {} -> {};\n",
                                d.objects[x],
                                d.objects[y],
                                d.hom_basis[x][y][fi],
                                combo(f, &b.data.coactions[x][y], fi, &tables)
                            ));
                        }
                    }
                }
                out.push_str("}\n");
            }
            BlockData::Entwining(b) => {
                let d = &b.entwining.cat;
                let co = &b.entwining.coalg;
                let n = d.n_objects();
                out.push_str(&format!("entwining {} {{\n", block.name));
                out.push_str(&format!("  category {};\n", b.category));
                out.push_str(&format!("  coalgebra {};\n", b.coalgebra));
                for x in 0..n {
                    for y in 0..n {
                        for ci in 0..co.dim {
                            for fi in 0..d.hom(x, y) {
                                let tables: [&[String]; 2] = [&d.hom_basis[x][y], &co.basis];
                                out.push_str(&format!(
                                    "  psi {} {}: {}*{} -> {};\n",
                                    d.objects[x],
                                    d.objects[y],
                                    co.basis[ci],
                                    d.hom_basis[x][y][fi],
                                    combo(
                                        f,
                                        &b.entwining.psi[x][y],
                                        ci * d.hom(x, y) + fi,
                                        &tables
                                    )
                                ));
                            }
                        }
                    }
                }
                out.push_str("}\n");
            }
            BlockData::Module(b) => {
                let m = &b.module;
                out.push_str(&format!("module {} {{\n", block.name));
                out.push_str(&format!("  entwining {};\n", b.entwining));
                let doc_ent = doc.items.iter().find_map(|blk| match &blk.data {
                    BlockData::Entwining(e) if blk.name == b.entwining => Some(&e.entwining),
                    _ => None,
                });
                let Some(ent) = doc_ent else { continue };
                let d = &ent.cat;
                let n = d.n_objects();
                for x in 0..n {
                    if m.module.dims[x] > 0 {
                        out.push_str(&format!(
                            "  dim {} {};\n  basis {} {};\n",
                            d.objects[x],
                            m.module.dims[x],
                            d.objects[x],
                            b.basis[x].join(" ")
                        ));
                    }
                }
                for x in 0..n {
                    for y in 0..n {
                        if m.module.dims[x] == 0 {
                            continue;
                        }
                        for mi in 0..m.module.dims[y] {
                            for fi in 0..d.hom(x, y) {
                                let table: &[String] = &b.basis[x];
                                out.push_str(&format!(
                                    "  action {} {}: {}*{} -> {};\n",
                                    d.objects[x],
                                    d.objects[y],
                                    b.basis[y][mi],
                                    d.hom_basis[x][y][fi],
                                    combo(
                                        f,
                                        &m.module.actions[x][y],
                                        mi * d.hom(x, y) + fi,
                                        &[table]
                                    )
                                ));
                            }
                        }
                    }
                }
                for x in 0..n {
                    for mi in 0..m.module.dims[x] {
                        let tables: [&[String]; 2] = [&b.basis[x], &ent.coalg.basis];
                        out.push_str(&format!(
                            "  coaction {}: {} -> {};\n",
                            d.objects[x],
                            b.basis[x][mi],
                            combo(f, &m.coactions[x].rho, mi, &tables)
                        ));
                    }
                }
                out.push_str("}\n");
            }
            BlockData::Phi(b) => {
                out.push_str(&format!("phi {} {{\n", block.name));
                out.push_str(&format!("  coactions {};\n", b.coactions));
                let doc_g = doc.items.iter().find_map(|blk| match &blk.data {
                    BlockData::Coactions(g) if blk.name == b.coactions => Some(&g.data),
                    _ => None,
                });
                let Some(g) = doc_g else { continue };
                let d = &g.cat;
                let n = d.n_objects();
                for x in 0..n {
                    for y in 0..n {
                        if d.hom(x, y) == 0 {
                            continue;
                        }
                        for ci in 0..g.coalg.dim {
                            let table: &[String] = &d.hom_basis[x][y];
                            out.push_str(&format!(
                                "  map {} {}: {} -> {};\n",
                                d.objects[x],
                                d.objects[y],
                                g.coalg.basis[ci],
                                combo(f, &b.family.maps[x][y], ci, &[table])
                            ));
                        }
                    }
                }
                out.push_str("}\n");
            }
        }
    }
    out
}
