use polynacci::genfunc::{build_ogf, expansion_matches_recurrence, verify_inversion_link};
use polynacci::sequences::Kind;
use polynacci::Order;

fn main() -> polynacci::Result<()> {
    for m in [2, 3, 6] {
        let m = Order::new(m)?;
        for kind in Kind::ALL {
            let g = build_ogf(m, kind).function;
            let head: Vec<String> = g.expand(8)?.iter().map(ToString::to_string).collect();
            println!("m={m} {kind:>9}: {g}  ->  {} ...", head.join(", "));
            assert!(expansion_matches_recurrence(m, kind, 120)?.passed());
        }
        let link = verify_inversion_link(m)?;
        println!(
            "m={m} (1/x)G(1/x) matches inverted form: {}, numerator is derivative: {}",
            link.transform_matches, link.numerator_is_derivative
        );
    }
    Ok(())
}
