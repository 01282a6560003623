//! Parser, validator and canonical serializer for the `.ent` text format.
//!
//! An `.ent` file declares one ground field and a sequence of named blocks:
//! coalgebras, Hopf algebras, categories, hom coactions, entwinings,
//! entwined modules and convolution families, with cross-references by
//! name (references must precede use). Scalars are exact: integers or
//! `a/b` over the rationals, integers reduced modulo the characteristic
//! over a prime field. Parsing produces fully validated in-memory
//! structures; every diagnostic carries a source span.

mod emit;
mod lex;
mod parse;

pub use emit::serialize;
pub use lex::SourceSpan;
pub use parse::parse;

use crate::algebra::{verify_coalgebra, verify_hopf, Coalgebra, HopfAlgebra};
use crate::entwine::{verify_entwined_module, verify_entwining, EntwinedModule, Entwining};
use crate::exactlin::FieldSpec;
use crate::galois::{verify_phi_colinear, GaloisData, PhiFamily};
use crate::lincat::{verify_category, LinCategory};
use crate::verdict::Verdict;

/// A parse-time problem, attached to the text location it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub span: SourceSpan,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.span.line, self.span.col, self.message)
    }
}

/// A parsed document: the ground field plus named blocks in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub field: FieldSpec,
    pub items: Vec<NamedBlock>,
}

#[derive(Debug, Clone)]
pub struct NamedBlock {
    pub name: String,
    pub span: SourceSpan,
    pub data: BlockData,
}

impl PartialEq for NamedBlock {
    /// Structural equality: spans are layout, not content.
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.data == other.data
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoactionsBlock {
    pub category: String,
    pub coalgebra: String,
    pub data: GaloisData,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntwiningBlock {
    pub category: String,
    pub coalgebra: String,
    pub entwining: Entwining,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleBlock {
    pub entwining: String,
    pub basis: Vec<Vec<String>>,
    pub module: EntwinedModule,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhiBlock {
    pub coactions: String,
    pub family: PhiFamily,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BlockData {
    Coalgebra(Coalgebra),
    Hopf(HopfAlgebra),
    Category(LinCategory),
    Coactions(CoactionsBlock),
    Entwining(EntwiningBlock),
    Module(ModuleBlock),
    Phi(PhiBlock),
}

impl BlockData {
    fn kind_rank(&self) -> usize {
        match self {
            BlockData::Coalgebra(_) => 0,
            BlockData::Hopf(_) => 1,
            BlockData::Category(_) => 2,
            BlockData::Coactions(_) => 3,
            BlockData::Entwining(_) => 4,
            BlockData::Module(_) => 5,
            BlockData::Phi(_) => 6,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            BlockData::Coalgebra(_) => "coalgebra",
            BlockData::Hopf(_) => "hopf",
            BlockData::Category(_) => "category",
            BlockData::Coactions(_) => "coactions",
            BlockData::Entwining(_) => "entwining",
            BlockData::Module(_) => "module",
            BlockData::Phi(_) => "phi",
        }
    }
}

impl Document {
    /// Puts blocks into the canonical order used by the serializer: grouped
    /// by kind, sorted by name within a kind.
    pub fn canonicalize(&mut self) {
        self.items.sort_by(|a, b| {
            (a.data.kind_rank(), a.name.as_str()).cmp(&(b.data.kind_rank(), b.name.as_str()))
        });
    }

    pub fn find_entwining(&self, name: &str) -> Option<&Entwining> {
        self.items.iter().find_map(|b| match &b.data {
            BlockData::Entwining(e) if b.name == name => Some(&e.entwining),
            _ => None,
        })
    }

    pub fn find_coactions(&self, name: &str) -> Option<&GaloisData> {
        self.items.iter().find_map(|b| match &b.data {
            BlockData::Coactions(g) if b.name == name => Some(&g.data),
            _ => None,
        })
    }

    /// The first block of each kind, in canonical order; convenient for
    /// single-instance files driven from the command line.
    pub fn first_entwining(&self) -> Option<(&str, &Entwining)> {
        self.items.iter().find_map(|b| match &b.data {
            BlockData::Entwining(e) => Some((b.name.as_str(), &e.entwining)),
            _ => None,
        })
    }

    pub fn first_coactions(&self) -> Option<(&str, &GaloisData)> {
        self.items.iter().find_map(|b| match &b.data {
            BlockData::Coactions(g) => Some((b.name.as_str(), &g.data)),
            _ => None,
        })
    }

    pub fn first_phi(&self) -> Option<(&str, &PhiFamily)> {
        self.items.iter().find_map(|b| match &b.data {
            BlockData::Phi(p) => Some((b.name.as_str(), &p.family)),
            _ => None,
        })
    }
}

/// Structural verification of every block, dispatched per kind. Each entry
/// pairs the block's name and kind with the verdict and its source span.
pub fn validate(doc: &Document) -> Vec<(String, SourceSpan, Verdict)> {
    let mut out = Vec::new();
    for block in &doc.items {
        let verdict = match &block.data {
            BlockData::Coalgebra(c) => verify_coalgebra(c),
            BlockData::Hopf(h) => verify_hopf(h),
            BlockData::Category(d) => verify_category(d),
            BlockData::Coactions(b) => b.data.verify(),
            BlockData::Entwining(b) => {
                let mut v = verify_category(&b.entwining.cat);
                v.merge(verify_coalgebra(&b.entwining.coalg));
                if v.ok() {
                    verify_entwining(&b.entwining)
                } else {
                    v
                }
            }
            BlockData::Module(b) => match doc.find_entwining(&b.entwining) {
                Some(e) => verify_entwined_module(e, &b.module),
                None => {
                    let mut v = Verdict::default();
                    v.push("unresolved entwining reference", b.entwining.clone());
                    v
                }
            },
            BlockData::Phi(b) => match doc.find_coactions(&b.coactions) {
                Some(g) => verify_phi_colinear(g, &b.family),
                None => {
                    let mut v = Verdict::default();
                    v.push("unresolved coactions reference", b.coactions.clone());
                    v
                }
            },
        };
        out.push((format!("{} {}", block.data.kind_name(), block.name), block.span, verdict));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CG2_SWAP: &str = "\
field rationals;
coalgebra C dim 2 {
  basis g0 g1;
  delta: g0 -> g0*g0;
  delta: g1 -> g1*g1;
  counit: g0 -> 1;
  counit: g1 -> 1;
}
category D {
  objects s;
  hom s s dim 1 basis id;
  compose s s s: id*id -> id;
  identity s: id;
}
entwining E {
  category D;
  coalgebra C;
  psi s s: g0*id -> id*g0;
  psi s s: g1*id -> id*g1;
}
";

    #[test]
    fn parses_trivial_coalgebra() {
        let doc = parse("field rationals;\ncoalgebra C dim 1 { basis e; delta: e -> e*e; counit: e -> 1; }")
            .unwrap();
        assert_eq!(doc.items.len(), 1);
        let BlockData::Coalgebra(c) = &doc.items[0].data else { panic!() };
        assert!(verify_coalgebra(c).ok());
    }

    #[test]
    fn parses_swap_entwining_document() {
        let doc = parse(CG2_SWAP).unwrap();
        let (_, e) = doc.first_entwining().unwrap();
        assert!(verify_entwining(e).ok());
        for (_, _, verdict) in validate(&doc) {
            assert!(verdict.ok());
        }
    }

    #[test]
    fn roundtrip_is_stable() {
        let doc = parse(CG2_SWAP).unwrap();
        let text = serialize(&doc);
        let doc2 = parse(&text).unwrap();
        assert_eq!(doc, doc2);
        assert_eq!(serialize(&doc2), text);
    }

    #[test]
    fn negative_dimension_is_flagged_at_span() {
        let err = parse("field rationals;\ncoalgebra C dim -1 { }").unwrap_err();
        assert!(err[0].message.contains("dimension"));
        assert_eq!(err[0].span.line, 2);
        assert_eq!(err[0].span.col, 17);
    }

    #[test]
    fn missing_entwining_entry_is_flagged() {
        let text = CG2_SWAP.replace("  psi s s: g1*id -> id*g1;\n", "");
        let err = parse(&text).unwrap_err();
        assert!(err.iter().any(|d| d.message.contains("missing entwining entry")));
    }

    #[test]
    fn broken_counit_fails_validation_not_parsing() {
        let text = CG2_SWAP.replace("counit: g0 -> 1;", "counit: g0 -> 0;");
        let doc = parse(&text).unwrap();
        let reports = validate(&doc);
        let coalg_report = reports.iter().find(|(n, _, _)| n == "coalgebra C").unwrap();
        assert!(!coalg_report.2.ok());
    }

    #[test]
    fn recovery_reports_multiple_errors() {
        let text = "field rationals;\ncoalgebra C dim 1 {\n  basis e;\n  delta: zz -> e*e;\n  counit: ww -> 1;\n  delta: e -> e*e;\n  counit: e -> 1;\n}";
        let err = parse(text).unwrap_err();
        assert!(err.len() >= 2);
        assert!(err[0].message.contains("zz"));
        assert!(err[1].message.contains("ww"));
    }

    #[test]
    fn non_prime_modulus_is_rejected() {
        let err = parse("field gf 6;").unwrap_err();
        assert!(err[0].message.contains("not prime"));
    }

    #[test]
    fn gf_scalars_reduce() {
        let doc = parse(
            "field gf 3;\ncoalgebra C dim 1 { basis e; delta: e -> 4 e*e; counit: e -> 7; }",
        )
        .unwrap();
        let BlockData::Coalgebra(c) = &doc.items[0].data else { panic!() };
        assert_eq!(c.delta.at(0, 0), &crate::exactlin::Scalar::Mod(1));
        assert_eq!(c.counit.at(0, 0), &crate::exactlin::Scalar::Mod(1));
        assert!(verify_coalgebra(c).ok());
    }
}
