//! Verifying entwining axioms: load an instance file, check the four
//! defining identities exactly, then perturb one structure constant and
//! watch the checker name the axiom that breaks.

use entwine::dsl;
use entwine::entwine::verify_entwining;
use entwine::exactlin::FieldSpec;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/dh2.ent");
    let text = std::fs::read_to_string(path).unwrap();
    let doc = dsl::parse(&text).unwrap();

    for (name, _, verdict) in dsl::validate(&doc) {
        println!("{name}: {verdict}");
    }

    let (name, e) = doc.first_entwining().unwrap();
    let verdict = verify_entwining(e);
    println!("\nentwining {name} passes all four axioms: {}", verdict.ok());

    // perturb a single entry of the entwining map
    let f = FieldSpec::Rationals;
    let mut broken = e.clone();
    let bumped = f.add(broken.psi[0][0].at(0, 3), &f.one());
    broken.psi[0][0].set(0, 3, bumped);
    let verdict = verify_entwining(&broken);
    println!("after perturbing one entry:");
    for failure in &verdict.failures {
        println!("  violated: {failure}");
    }
}
