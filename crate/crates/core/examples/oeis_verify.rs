// Checks each cited family against its b-file. Point POLYNACCI_FIXTURES at
// a directory of downloaded bNNNNNN.txt files to use real OEIS data.

use polynacci::oeis::{self, BFile, Offset, CITED};

fn main() -> polynacci::Result<()> {
    for c in CITED {
        let bfile = oeis::load_fixture(&c.anumber.parse()?)?;
        let report = oeis::verify_against(&c.family(), &bfile, Offset::Auto)?;
        println!(
            "{} m={} {:>9}: {} terms, shift {}, {}",
            c.anumber,
            c.order,
            c.kind,
            report.compared,
            report.shift,
            if report.passed() { "ok" } else { "MISMATCH" }
        );
    }

    // a b-file that starts two indices late still aligns
    let family = oeis::citation(&"A001644".parse()?).expect("cited").family();
    let late: String = (0..20).map(|i| format!("{} {}\n", i, family.term(i + 2))).collect();
    let shifted = BFile::parse(&late)?;
    println!("shifted file aligns at shift {}", oeis::verify_against(&family, &shifted, Offset::Auto)?.shift);
    Ok(())
}
