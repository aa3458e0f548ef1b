use polynacci::selftest::{run, Bounds};

fn main() -> polynacci::Result<()> {
    let report = run(Bounds { max_m: 6, max_n: 20, tol: 1e-9 })?;
    for check in &report.checks {
        println!("{:<28} {:>6} cases  {}", check.name, check.cases, if check.passed() { "ok" } else { "FAIL" });
    }
    for note in &report.notes {
        println!("note: {note}");
    }
    if let Some((name, cx)) = report.first_failure() {
        println!("first failure in {name}: {cx}");
    }
    Ok(())
}
