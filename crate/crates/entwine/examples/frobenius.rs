//! Deciding the Frobenius property: search the space of natural maps
//! between the dual tensor and the coalgebra tensor for an everywhere
//! invertible element. A hit comes back as an exact witness pair satisfying
//! both normalizations; a miss carries a deterministic or probabilistic
//! certificate.

use entwine::dsl;
use entwine::frobsep::{check_frobenius, check_frobenius_conditions, AbsenceCertificate, FrobeniusOutcome};

fn show(path: &str) {
    let text = std::fs::read_to_string(path).unwrap();
    let doc = dsl::parse(&text).unwrap();
    let (name, e) = doc.first_entwining().unwrap();
    println!("instance {name} from {path}");
    match check_frobenius(e, 0x5eed, 64).unwrap() {
        FrobeniusOutcome::Frobenius(w) => {
            println!("  frobenius pair: yes");
            println!(
                "  normalizations re-verified: {}",
                check_frobenius_conditions(e, &w.theta, &w.eta).ok()
            );
            println!("  theta at first object:\n{:?}", w.theta.thetas[0]);
            println!("  splitting element at first object:\n{:?}", w.eta.es[0]);
        }
        FrobeniusOutcome::NotFrobenius(cert) => {
            let kind = match cert {
                AbsenceCertificate::ZeroNatSpace => "zero natural-transformation space".into(),
                AbsenceCertificate::IdenticallyZeroDeterminant { points_checked } => {
                    format!("determinant zero on a full grid of {points_checked} points")
                }
                AbsenceCertificate::ProbablyNone { trials, bound_log2, .. } => {
                    format!("{trials} seeded trials failed, bound 2^-{bound_log2}")
                }
            };
            println!("  frobenius pair: no ({kind})");
        }
    }
    println!();
}

fn main() {
    let base = env!("CARGO_MANIFEST_DIR");
    show(&format!("{base}/fixtures/dpt_cg2_swap.ent"));
    show(&format!("{base}/fixtures/dh2.ent"));
    show(&format!("{base}/fixtures/gf2_kronecker.ent"));
}
