use polynacci::cayley::{ch_coefficients, principal_minor_sums, verify_ch_identities};
use polynacci::polymatrix::Polymatrix;
use polynacci::Order;

fn main() -> polynacci::Result<()> {
    let m = Order::new(4)?;
    for n in 0..=6 {
        let ch = ch_coefficients(m, n);
        let c: Vec<String> = ch.c.iter().map(ToString::to_string).collect();
        let report = verify_ch_identities(m, n);
        println!("n={n}: c = [{}]  identities hold: {}", c.join(", "), report.passed());
    }

    // brute force over all principal minors
    let a = Polymatrix::new(m).pow(3);
    assert_eq!(principal_minor_sums(&a), ch_coefficients(m, 3).c);
    println!("principal minor sums of A_4^3 agree");
    Ok(())
}
