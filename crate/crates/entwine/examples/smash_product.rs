//! Smash products: twist a category by a Hopf-algebra action on its hom
//! spaces, recover the original category as the coinvariants, and compare
//! the antipode-based inverse of the canonical map with the computed one.

use entwine::algebra::HopfAlgebra;
use entwine::exactlin::{FieldSpec, Matrix};
use entwine::galois::{canonical_map, coinvariant_subcategory, smash_can_inverse, smash_product, SmashInput};
use entwine::lincat::LinCategory;

fn main() {
    let q = FieldSpec::Rationals;
    let h = HopfAlgebra::cyclic_group_algebra(q, 2);
    let cat = LinCategory::arrow(q);
    // trivial action: every group element acts through the counit
    let actions = (0..2)
        .map(|x| {
            (0..2)
                .map(|y| h.coalgebra.counit.kron(&Matrix::identity(q, cat.hom(x, y))))
                .collect()
        })
        .collect();
    let input = SmashInput { cat, hopf: h, actions };
    let smash = smash_product(&input).unwrap();
    println!("smash hom dimensions:");
    for x in 0..2 {
        for y in 0..2 {
            println!(
                "  ({},{}): {}",
                smash.cat.objects[x],
                smash.cat.objects[y],
                smash.cat.hom(x, y)
            );
        }
    }

    let sub = coinvariant_subcategory(&smash);
    println!(
        "coinvariants recover the original dimensions: {:?}",
        (0..2).map(|x| (0..2).map(|y| sub.dim(x, y)).collect::<Vec<_>>()).collect::<Vec<_>>()
    );

    let cm = canonical_map(&smash, &sub).unwrap();
    println!("smash extension is galois: {}", cm.is_galois);

    let formula = smash_can_inverse(&smash, &input, &cm, 0, 0);
    let computed = cm.maps[0][0].inverse().unwrap();
    println!("antipode inverse formula agrees with the computed inverse: {}", formula == computed);
}
