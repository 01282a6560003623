//! The `.ent` format: parse an instance, validate every block, emit the
//! canonical serialization, and show a spanned diagnostic on broken input.

use entwine::dsl;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/dpt_cg2_swap.ent");
    let text = std::fs::read_to_string(path).unwrap();
    let doc = dsl::parse(&text).unwrap();

    println!("blocks:");
    for (name, _, verdict) in dsl::validate(&doc) {
        println!("  {name}: {verdict}");
    }

    let canonical = dsl::serialize(&doc);
    println!("\ncanonical form:\n{canonical}");
    let reparsed = dsl::parse(&canonical).unwrap();
    println!("roundtrip structural equality: {}", reparsed == doc);
    println!("serialization idempotent: {}", dsl::serialize(&reparsed) == canonical);

    let broken = "field rationals;\ncoalgebra C dim 1 { basis e; delta: zz -> e*e; counit: e -> 1; }";
    match dsl::parse(broken) {
        Ok(_) => unreachable!("input is broken"),
        Err(diags) => {
            println!("\ndiagnostics for broken input:");
            for d in diags {
                println!("  line {}, column {}: {}", d.span.line, d.span.col, d.message);
            }
        }
    }
}
