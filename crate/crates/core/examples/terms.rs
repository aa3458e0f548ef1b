// Terms of the three sequence families, including negative indices.

use polynacci::sequences::{term_by_trace, Kind, SequenceFamily};
use polynacci::Order;

fn main() -> polynacci::Result<()> {
    let m = Order::new(4)?;
    for kind in Kind::ALL {
        let family = SequenceFamily::new(m, kind);
        let terms: Vec<String> = family.terms(-4, 12).iter().map(ToString::to_string).collect();
        println!("{kind:>9} n=-4..7: {}", terms.join(" "));
    }

    // the recurrence and the matrix trace agree everywhere
    let standard = SequenceFamily::standard(m);
    for n in [-6, 0, 9, 40] {
        assert_eq!(standard.term(n), term_by_trace(m, n));
    }
    println!("U_200 (m=4) = {}", standard.term(200));
    Ok(())
}
