//! OEIS b-file parsing and sequence verification.
//!
//! A b-file is plain ASCII: optional `#` comment lines and data lines of the
//! form `<index> <value>`, with consecutive indices.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genfunc::Mismatch;
use crate::order::Order;
use crate::sequences::{Kind, SequenceFamily};

/// Environment variable naming a directory of `bNNNNNN.txt` files that
/// take precedence over the bundled fixtures.
pub const FIXTURES_ENV: &str = "POLYNACCI_FIXTURES";

/// Shifts tried by auto-alignment, nearest first.
pub const AUTO_SHIFTS: [i64; 9] = [0, -1, 1, -2, 2, -3, 3, -4, 4];

const ALIGNMENT_WINDOW: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ANumber(String);

impl ANumber {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `bNNNNNN.txt`
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.0[1..])
    }
}

impl FromStr for ANumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ok = s.len() == 7
            && s.starts_with('A')
            && s[1..].bytes().all(|b| b.is_ascii_digit());
        if ok {
            Ok(ANumber(s.to_string()))
        } else {
            Err(Error::InvalidInput(format!("{s:?} is not an A-number (A + 6 digits)")))
        }
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub anumber: Option<ANumber>,
    pub comments: Vec<String>,
    entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Parses b-file text. The A-number is taken from the first comment
    /// whose first word is one.
    pub fn parse(text: &str) -> Result<Self> {
        let mut comments = Vec::new();
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (ix, raw) in text.lines().enumerate() {
            let line_no = ix + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with('#') {
                comments.push(line.to_string());
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"<index> <value>\", got {line:?}"),
                });
            };
            let index: i64 = i.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad index {i:?}"),
            })?;
            let value = parse_decimal(v).ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("bad value {v:?}"),
            })?;
            if let Some(&(prev, _)) = entries.last() {
                if index != prev + 1 {
                    return Err(Error::Structure(format!(
                        "line {line_no}: index {index} does not follow {prev}"
                    )));
                }
            }
            entries.push((index, value));
        }
        if entries.is_empty() {
            return Err(Error::Structure("no data lines".into()));
        }
        let anumber = comments.iter().find_map(|c| {
            let word = c.trim_start_matches('#').split_whitespace().next()?;
            word.trim_end_matches(':').parse().ok()
        });
        Ok(BFile {
            anumber,
            comments,
            entries,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn first_index(&self) -> i64 {
        self.entries[0].0
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Comments first, then one `index value` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str(c);
            out.push('\n');
        }
        for (i, v) in &self.entries {
            out.push_str(&format!("{i} {v}\n"));
        }
        out
    }
}

/// Optional sign followed by ASCII digits only.
fn parse_decimal(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Offset {
    Auto,
    Fixed(i64),
}

impl FromStr for Offset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(Offset::Auto);
        }
        s.parse()
            .map(Offset::Fixed)
            .map_err(|_| Error::InvalidInput(format!("offset must be \"auto\" or an integer, got {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub anumber: Option<ANumber>,
    pub order: usize,
    pub kind: Kind,
    /// b-file index `k` was compared against family term `k + shift`.
    pub shift: i64,
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none() && self.compared > 0
    }
}

fn first_mismatch<'a>(
    family: &SequenceFamily,
    entries: impl IntoIterator<Item = &'a (i64, BigInt)>,
    shift: i64,
) -> Option<Mismatch> {
    entries.into_iter().find_map(|(k, expected)| {
        let actual = family.term(k + shift);
        (&actual != expected).then(|| Mismatch {
            index: *k,
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    })
}

/// Compares `family.term(k + shift)` with every b-file entry `(k, value)`.
///
/// With [`Offset::Auto`] the shift is the first of [`AUTO_SHIFTS`] under
/// which the leading `min(8, len)` entries all match.
pub fn verify_against(family: &SequenceFamily, bfile: &BFile, offset: Offset) -> Result<VerificationReport> {
    let shift = match offset {
        Offset::Fixed(s) => s,
        Offset::Auto => {
            let window = &bfile.entries[..bfile.len().min(ALIGNMENT_WINDOW)];
            AUTO_SHIFTS
                .into_iter()
                .find(|&s| first_mismatch(family, window, s).is_none())
                .ok_or(Error::Alignment {
                    tried: AUTO_SHIFTS.to_vec(),
                })?
        }
    };
    Ok(VerificationReport {
        anumber: bfile.anumber.clone(),
        order: family.order().get(),
        kind: family.kind(),
        shift,
        compared: bfile.len(),
        first_mismatch: first_mismatch(family, &bfile.entries, shift),
    })
}

/// An A-number together with the family it is identified with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Citation {
    pub anumber: &'static str,
    pub order: usize,
    pub kind: Kind,
}

impl Citation {
    pub fn family(&self) -> SequenceFamily {
        SequenceFamily::new(Order::new(self.order).expect("cited orders are >= 2"), self.kind)
    }
}

pub const CITED: [Citation; 8] = [
    Citation { anumber: "A001644", order: 3, kind: Kind::Standard },
    Citation { anumber: "A073817", order: 4, kind: Kind::Standard },
    Citation { anumber: "A074048", order: 5, kind: Kind::Standard },
    Citation { anumber: "A074584", order: 6, kind: Kind::Standard },
    Citation { anumber: "A073145", order: 3, kind: Kind::Reflected },
    Citation { anumber: "A074058", order: 4, kind: Kind::Reflected },
    Citation { anumber: "A074062", order: 5, kind: Kind::Reflected },
    Citation { anumber: "A075298", order: 3, kind: Kind::Inverted },
];

pub fn citation(anumber: &ANumber) -> Option<Citation> {
    CITED.into_iter().find(|c| c.anumber == anumber.as_str())
}

/// Fixture text compiled into the library.
pub fn bundled_fixture(anumber: &ANumber) -> Option<&'static str> {
    Some(match anumber.as_str() {
        "A001644" => include_str!("../fixtures/b001644.txt"),
        "A073817" => include_str!("../fixtures/b073817.txt"),
        "A074048" => include_str!("../fixtures/b074048.txt"),
        "A074584" => include_str!("../fixtures/b074584.txt"),
        "A073145" => include_str!("../fixtures/b073145.txt"),
        "A074058" => include_str!("../fixtures/b074058.txt"),
        "A074062" => include_str!("../fixtures/b074062.txt"),
        "A075298" => include_str!("../fixtures/b075298.txt"),
        _ => return None,
    })
}

/// Directory named by [`FIXTURES_ENV`], if set.
pub fn fixtures_override() -> Option<PathBuf> {
    std::env::var_os(FIXTURES_ENV).map(PathBuf::from)
}

/// Loads `bNNNNNN.txt` from `dir` when given and present, otherwise the
/// bundled copy.
pub fn load_fixture_from(anumber: &ANumber, dir: Option<&Path>) -> Result<BFile> {
    if let Some(dir) = dir {
        let path = dir.join(anumber.bfile_name());
        if path.is_file() {
            let mut b = BFile::read(&path)?;
            b.anumber.get_or_insert_with(|| anumber.clone());
            return Ok(b);
        }
    }
    let text = bundled_fixture(anumber)
        .ok_or_else(|| Error::InvalidInput(format!("no fixture for {anumber}")))?;
    let mut b = BFile::parse(text)?;
    b.anumber.get_or_insert_with(|| anumber.clone());
    Ok(b)
}

pub fn load_fixture(anumber: &ANumber) -> Result<BFile> {
    load_fixture_from(anumber, fixtures_override().as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ord(m: usize) -> Order {
        Order::new(m).unwrap()
    }

    fn a(s: &str) -> ANumber {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = BFile::parse("0 3\n1 1\n2 3\n3 7").unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.first_index(), 0);
        assert_eq!(b.entries()[3].1, BigInt::from(7));

        let b = BFile::parse("# comment\n5 10").unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.first_index(), 5);
        assert_eq!(b.anumber, None);

        assert!(matches!(BFile::parse("0 1\n2 5"), Err(Error::Structure(_))));
    }

    #[test]
    fn parse_tolerates_whitespace_and_blank_lines() {
        let b = BFile::parse("  # A001644: x\n\n  0\t3  \r\n1 1\n\n").unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.anumber, Some(a("A001644")));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match BFile::parse("0 1\n1 1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(BFile::parse("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BFile::parse("x 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BFile::parse("0 1.5"), Err(Error::Parse { .. })));
        assert!(matches!(BFile::parse("0 +1"), Err(Error::Parse { .. })));
        assert!(matches!(BFile::parse("0"), Err(Error::Parse { .. })));
        assert!(matches!(BFile::parse("# only\n"), Err(Error::Structure(_))));
        assert!(matches!(BFile::parse("3 1\n2 1"), Err(Error::Structure(_))));
    }

    #[test]
    fn signed_indices_and_big_values() {
        let b = BFile::parse("-2 5\n-1 -3\n0 123456789012345678901234567890").unwrap();
        assert_eq!(b.first_index(), -2);
        assert_eq!(b.entries()[2].1.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn anumber_validation() {
        assert!("A001644".parse::<ANumber>().is_ok());
        assert!("A1644".parse::<ANumber>().is_err());
        assert!("B001644".parse::<ANumber>().is_err());
        assert_eq!(a("A001644").bfile_name(), "b001644.txt");
    }

    #[test]
    fn offset_parses() {
        assert_eq!("auto".parse::<Offset>().unwrap(), Offset::Auto);
        assert_eq!("-2".parse::<Offset>().unwrap(), Offset::Fixed(-2));
        assert!("left".parse::<Offset>().is_err());
    }

    #[test]
    fn verify_examples() {
        let tri = load_fixture_from(&a("A001644"), None).unwrap();
        let r = verify_against(&SequenceFamily::standard(ord(3)), &tri, Offset::Auto).unwrap();
        assert!(r.passed());
        assert_eq!(r.shift, 0);

        let tet = load_fixture_from(&a("A074058"), None).unwrap();
        let r = verify_against(&SequenceFamily::reflected(ord(4)), &tet, Offset::Auto).unwrap();
        assert!(r.passed());
        assert_eq!(r.shift, 0);

        let e = verify_against(&SequenceFamily::standard(ord(4)), &tri, Offset::Auto);
        match e {
            Err(Error::Alignment { tried }) => assert_eq!(tried, AUTO_SHIFTS.to_vec()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn auto_alignment_finds_shifted_listing() {
        // A001644 listed from index 2 as if it started at 0
        let text: String = (0..20)
            .map(|k| format!("{k} {}\n", SequenceFamily::standard(ord(3)).term(k + 2)))
            .collect();
        let b = BFile::parse(&text).unwrap();
        let r = verify_against(&SequenceFamily::standard(ord(3)), &b, Offset::Auto).unwrap();
        assert_eq!(r.shift, 2);
        assert!(r.passed());
    }

    #[test]
    fn fixed_offset_reports_mismatch() {
        let tri = load_fixture_from(&a("A001644"), None).unwrap();
        let r = verify_against(&SequenceFamily::standard(ord(3)), &tri, Offset::Fixed(1)).unwrap();
        assert!(!r.passed());
        let mm = r.first_mismatch.unwrap();
        assert_eq!((mm.index, mm.expected.as_str(), mm.actual.as_str()), (0, "3", "1"));
    }

    #[test]
    fn every_cited_fixture_verifies() {
        for c in CITED {
            let b = load_fixture_from(&a(c.anumber), None).unwrap();
            assert!(b.len() >= 50, "{}", c.anumber);
            assert_eq!(b.anumber.as_ref().map(ANumber::as_str), Some(c.anumber));
            let r = verify_against(&c.family(), &b, Offset::Auto).unwrap();
            assert!(r.passed() && r.compared >= 40, "{}: {r:?}", c.anumber);
        }
    }

    #[test]
    fn fixtures_round_trip() {
        for c in CITED {
            let text = bundled_fixture(&a(c.anumber)).unwrap();
            assert_eq!(BFile::parse(text).unwrap().to_text(), text, "{}", c.anumber);
        }
    }

    #[test]
    fn directory_override_takes_precedence() {
        let dir = std::env::temp_dir().join(format!("polynacci-fixtures-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("b001644.txt"), "0 3\n1 1\n2 3\n").unwrap();
        let b = load_fixture_from(&a("A001644"), Some(&dir)).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.anumber, Some(a("A001644")));
        let fallback = load_fixture_from(&a("A073145"), Some(&dir)).unwrap();
        assert!(fallback.len() >= 50);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    proptest! {
        #[test]
        fn serialize_then_parse_is_identity(start in -50i64..50, vals in prop::collection::vec(any::<i64>(), 1..40)) {
            let text: String = vals.iter().enumerate().map(|(k, v)| format!("{} {v}\n", start + k as i64)).collect();
            let b = BFile::parse(&text).unwrap();
            prop_assert_eq!(b.to_text(), text);
        }
    }
}
