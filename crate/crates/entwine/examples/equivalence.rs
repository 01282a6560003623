//! The module-category equivalence of a Galois extension, checked on
//! concrete test modules with exact dimension bookkeeping: a module over the
//! coinvariants embeds as the coinvariants of its tensor, and an entwined
//! module is rebuilt from its coinvariants by the corestricted coaction.

use entwine::algebra::Comodule;
use entwine::dsl;
use entwine::entwine::EntwinedModule;
use entwine::galois::{
    canonical_map, coinvariant_subcategory, equivalence_roundtrip, induced_entwining,
    translation_maps,
};
use entwine::lincat::representable_right_idx;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/dh2.ent");
    let text = std::fs::read_to_string(path).unwrap();
    let doc = dsl::parse(&text).unwrap();
    let (_, g) = doc.first_coactions().unwrap();

    let sub = coinvariant_subcategory(g);
    let cm = canonical_map(g, &sub).unwrap();
    let taus = translation_maps(g, &cm).unwrap();
    let e = induced_entwining(g, &cm, &taus).unwrap();

    let e_cat = sub.to_category(&g.cat);
    let over_coinvariants = representable_right_idx(&e_cat, 0);
    let entwined = EntwinedModule {
        module: representable_right_idx(&g.cat, 0),
        coactions: vec![Comodule { dim: g.cat.hom(0, 0), rho: g.coactions[0][0].clone() }],
    };

    let report = equivalence_roundtrip(g, &sub, &cm, &taus, &e, &[over_coinvariants], &[entwined]);
    println!("roundtrip verdict: {}", report.verdict);
    for line in &report.bookkeeping {
        println!("  {line}");
    }
}
