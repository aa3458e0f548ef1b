use polynacci::roots::{dominant_root, find_roots};
use polynacci::sequences::{homogeneous_sum, homogeneous_sum_bruteforce, SequenceFamily};
use polynacci::Order;

fn main() -> polynacci::Result<()> {
    let m = Order::new(3)?;
    let rs = find_roots(m, 1e-12)?;
    for r in rs.roots() {
        println!("root {:.12} {:+.12}i", r.re, r.im);
    }
    println!("residual {:e}", rs.residual());

    let u = SequenceFamily::standard(m);
    let r = SequenceFamily::reflected(m);
    for n in [5u32, 12, 20] {
        let b = rs.binet(n, 1e-6)?;
        let rb = rs.reciprocal_binet(n, 1e-6)?;
        println!("n={n}: U={} binet={:.6}  reflected={} reciprocal sum={:.6}", u.term(n as i64), b.value, r.term(n as i64), rb.value);
    }

    for n in [4u32, 8] {
        let exact = homogeneous_sum(m, n as u64);
        let numeric = homogeneous_sum_bruteforce(m, n, 1e-10)?;
        println!("h_{n}: newton-girard {exact}, over compositions {numeric:.6}");
    }

    for m in 2..=8 {
        println!("dominant root m={m}: {:.12}", dominant_root(Order::new(m)?, 1e-13)?);
    }
    Ok(())
}
