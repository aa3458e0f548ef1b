use polynacci::polymatrix::{corner_scalar, InversePolymatrix, Polymatrix};
use polynacci::Order;

fn main() -> polynacci::Result<()> {
    let m = Order::new(5)?;
    let a = Polymatrix::new(m);
    let b = InversePolymatrix::new(m);
    println!("A_5 =\n{}", a.matrix());
    println!("B_5 =\n{}", b.matrix());
    println!("A_5 B_5 is identity: {}", a.matrix().mul(b.matrix())?.is_identity());
    println!("det A_5 = {}", a.matrix().det());
    println!("charpoly = {}", Polymatrix::characteristic_polynomial(m));

    let a7 = a.pow(7);
    println!("A_5^7 =\n{a7}");
    println!("trace = {}", a7.trace());
    let corners: Vec<String> = (1..=6).map(|i| corner_scalar(m, i).to_string()).collect();
    println!("corner entries of A_5^1..6: {}", corners.join(" "));

    let p = a.partition();
    println!("block-form corner of A_5: {}", p.corner);
    Ok(())
}
