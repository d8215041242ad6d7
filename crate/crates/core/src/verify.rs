//! Reference tables embedded as constant data and the machinery to recompute
//! and diff them.
//!
//! A table whose recomputation disagrees with the reference can still pass
//! as a documented discrepancy, but only if the set of differing cells is
//! exactly the checked-in manifest for that table. Any drift in either
//! direction is a failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classical::{descent_partials, excedance_partials, hag, hag_e, ine, res};
use crate::distributions::Engine;
use crate::error::{Error, Result};
use crate::fisher_yates::{ska, stat};
use crate::group::orbit;
use crate::pattern::VincularPattern;
use crate::permutation::{Permutation, Special};
use crate::registry::lookup;

/// Columns of [`TABLE1`], in order.
pub const TABLE1_COLUMNS: [&str; 7] = ["stat", "inv", "maj", "den", "mad", "mak", "hag"];

/// Statistic values on S_4.
pub const TABLE1: [(&str, [i64; 7]); 24] = [
    ("1234", [0, 0, 0, 0, 0, 0, 0]),
    ("1243", [1, 1, 3, 3, 1, 3, 3]),
    ("1324", [1, 1, 2, 2, 1, 2, 2]),
    ("1342", [3, 2, 3, 5, 1, 4, 5]),
    ("1423", [2, 2, 2, 2, 2, 2, 3]),
    ("1432", [2, 3, 5, 3, 2, 5, 2]),
    ("2134", [1, 1, 1, 1, 1, 1, 1]),
    ("2143", [2, 2, 4, 4, 2, 4, 4]),
    ("2314", [3, 2, 2, 3, 1, 3, 3]),
    ("2341", [6, 3, 3, 6, 1, 5, 6]),
    ("2413", [4, 3, 2, 3, 2, 3, 4]),
    ("2431", [4, 4, 5, 4, 2, 6, 3]),
    ("3124", [2, 2, 1, 1, 2, 1, 2]),
    ("3142", [4, 3, 4, 4, 3, 5, 5]),
    ("3214", [2, 3, 3, 2, 2, 3, 1]),
    ("3241", [5, 4, 4, 5, 2, 6, 4]),
    ("3412", [4, 4, 2, 3, 2, 3, 4]),
    ("3421", [5, 5, 5, 4, 2, 6, 3]),
    ("4123", [3, 3, 1, 1, 3, 1, 3]),
    ("4132", [3, 4, 4, 2, 4, 4, 2]),
    ("4213", [3, 4, 3, 2, 3, 3, 2]),
    ("4231", [3, 5, 4, 3, 3, 5, 1]),
    ("4312", [5, 5, 3, 4, 3, 3, 5]),
    ("4321", [4, 6, 6, 5, 3, 6, 4]),
];

/// Which registry statistics each reference column is compared against.
const TABLE1_EVALUATORS: [(&str, &[&str]); 7] = [
    ("stat", &["stat"]),
    ("inv", &["inv"]),
    ("maj", &["maj"]),
    ("den", &["den"]),
    ("mad", &["mad_idx", "mad_val"]),
    ("mak", &["mak_idx"]),
    ("hag", &["hag"]),
];

pub type Matrix5 = [[u64; 11]; 5];

/// `(Eulerian, Mahonian, counts)` over S_5.
pub const JOINT5: [(&str, &str, Matrix5); 4] = [
    (
        "exc",
        "stat",
        [
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 4, 6, 8, 8, 0, 0, 0, 0, 0, 0],
            [0, 0, 3, 7, 10, 22, 15, 9, 0, 0, 0],
            [0, 0, 0, 0, 2, 0, 5, 6, 9, 4, 0],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        ],
    ),
    (
        "exc",
        "stati",
        [
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 4, 3, 5, 3, 3, 3, 2, 1, 1, 1],
            [0, 0, 6, 6, 13, 12, 9, 9, 8, 3, 0],
            [0, 0, 0, 4, 3, 7, 8, 4, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        ],
    ),
    (
        "des",
        "stat",
        [
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 4, 3, 5, 5, 2, 3, 2, 1, 0, 1],
            [0, 0, 6, 8, 12, 14, 11, 7, 5, 3, 0],
            [0, 0, 0, 2, 3, 6, 5, 6, 3, 1, 0],
            [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        ],
    ),
    (
        "des",
        "stati",
        [
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 4, 3, 5, 5, 2, 2, 3, 1, 0, 1],
            [0, 0, 6, 8, 12, 15, 11, 6, 5, 3, 0],
            [0, 0, 0, 2, 3, 5, 6, 6, 3, 1, 0],
            [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        ],
    ),
];

pub const TABLE2_COLUMNS: [&str; 7] = ["ebot", "edif", "dbot", "ddif", "res", "ine", "hag_e"];
pub const TABLE2_FAMILIES: [Special; 3] = [Special::Pi0, Special::Pi1, Special::Pi1Inv];
pub const TABLE2_SIZES: std::ops::RangeInclusive<usize> = 4..=12;
pub const CLAIMS_SIZES: std::ops::RangeInclusive<usize> = 2..=12;

const TABLE1_MANIFEST: &str = include_str!("../data/table1_expected_diffs.tsv");
const CLAIMS_MANIFEST: &str = include_str!("../data/claims_expected_diffs.tsv");

/// Closed forms for the partial statistics on the special permutations
/// (value-based descent bottoms).
pub fn table2_expected(family: Special, column: &str, n: usize) -> i64 {
    let n = n as i64;
    let t = n / 2;
    match (family, column) {
        (Special::Pi0, "ebot") => t * (t + 1) / 2,
        (Special::Pi0, "edif") => n * n / 4,
        (Special::Pi0, "dbot") => n * (n - 1) / 2,
        (Special::Pi0, "ddif") => n - 1,
        (Special::Pi0, "res") => 0,
        (Special::Pi0, "ine") => (n - 1) * (n - 1) / 4,
        (Special::Pi0, "hag_e") => 0,
        (Special::Pi1, "ebot") => n * (n - 1) / 2,
        (Special::Pi1, "edif") => n - 1,
        (Special::Pi1, "dbot") => 1,
        (Special::Pi1, "ddif") => n - 1,
        (Special::Pi1, "res") => n - 2,
        (Special::Pi1, "ine") => 0,
        (Special::Pi1, "hag_e") => (n - 1) * (n - 2) / 2,
        (Special::Pi1Inv, "ebot") => 1,
        (Special::Pi1Inv, "edif") => n - 1,
        (Special::Pi1Inv, "dbot") => 1,
        (Special::Pi1Inv, "ddif") => n - 1,
        (Special::Pi1Inv, "res" | "ine" | "hag_e") => 0,
        _ => panic!("no closed form for {family:?}/{column}"),
    }
}

fn table2_computed(p: &Permutation, column: &str) -> i64 {
    let d = descent_partials(p);
    let e = excedance_partials(p);
    (match column {
        "ebot" => e.ebot,
        "edif" => e.edif(),
        "dbot" => d.dbot_val,
        "ddif" => d.ddif_val(),
        "res" => res(p),
        "ine" => ine(p),
        "hag_e" => hag_e(p),
        _ => panic!("unknown column {column}"),
    }) as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    Table1,
    Table2,
    Joint5,
    Claims,
}

impl TableId {
    pub const ALL: [TableId; 4] = [
        TableId::Table1,
        TableId::Table2,
        TableId::Joint5,
        TableId::Claims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Table1 => "table1",
            TableId::Table2 => "table2",
            TableId::Joint5 => "joint5",
            TableId::Claims => "claims",
        }
    }

    fn manifest(self) -> &'static str {
        match self {
            TableId::Table1 => TABLE1_MANIFEST,
            TableId::Claims => CLAIMS_MANIFEST,
            TableId::Table2 | TableId::Joint5 => "",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CellDiff {
    pub row: String,
    pub column: String,
    pub variant: String,
    pub expected: i64,
    pub computed: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    DocumentedDiscrepancy,
    Failure,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::DocumentedDiscrepancy => "documented-discrepancy",
            Status::Failure => "failure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub table: TableId,
    pub status: Status,
    /// Number of cells compared.
    pub checked: usize,
    pub diffs: Vec<CellDiff>,
}

impl VerificationReport {
    fn build(table: TableId, checked: usize, diffs: Vec<CellDiff>) -> Self {
        let status = if diffs.is_empty() {
            Status::Match
        } else if diffs.iter().cloned().collect::<BTreeSet<_>>() == parse_manifest(table.manifest())
        {
            Status::DocumentedDiscrepancy
        } else {
            Status::Failure
        };
        VerificationReport {
            table,
            status,
            checked,
            diffs,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status != Status::Failure
    }
}

/// Parses a tab-separated manifest: `row, column, variant, expected, computed`.
pub fn parse_manifest(text: &str) -> BTreeSet<CellDiff> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 5, "bad manifest line {l:?}");
            CellDiff {
                row: f[0].to_string(),
                column: f[1].to_string(),
                variant: f[2].to_string(),
                expected: f[3].parse().expect("manifest expected value"),
                computed: f[4].parse().expect("manifest computed value"),
            }
        })
        .collect()
}

pub fn expected_diffs(table: TableId) -> BTreeSet<CellDiff> {
    parse_manifest(table.manifest())
}

pub fn verify(table: TableId, engine: &Engine) -> Result<VerificationReport> {
    match table {
        TableId::Table1 => Ok(verify_table1()),
        TableId::Table2 => Ok(verify_table2()),
        TableId::Joint5 => verify_joint5(engine),
        TableId::Claims => Ok(verify_claims()),
    }
}

fn verify_table1() -> VerificationReport {
    let mut diffs = Vec::new();
    let mut checked = 0;
    for (word, values) in TABLE1 {
        let p = Permutation::parse(word).expect("embedded permutation");
        for (col, (name, evaluators)) in TABLE1_EVALUATORS.iter().enumerate() {
            debug_assert_eq!(TABLE1_COLUMNS[col], *name);
            for &ev in *evaluators {
                checked += 1;
                let computed = lookup(ev).expect("registered").eval(&p);
                if computed != values[col] {
                    diffs.push(CellDiff {
                        row: word.to_string(),
                        column: name.to_string(),
                        variant: ev.to_string(),
                        expected: values[col],
                        computed,
                    });
                }
            }
        }
    }
    diffs.sort_by(|a, b| (&a.variant, &a.row).cmp(&(&b.variant, &b.row)));
    VerificationReport::build(TableId::Table1, checked, diffs)
}

fn verify_table2() -> VerificationReport {
    let mut diffs = Vec::new();
    let mut checked = 0;
    for n in TABLE2_SIZES {
        for family in TABLE2_FAMILIES {
            let p = Permutation::special(family, n).expect("n >= 2");
            for col in TABLE2_COLUMNS {
                checked += 1;
                let expected = table2_expected(family, col, n);
                let computed = table2_computed(&p, col);
                if expected != computed {
                    diffs.push(CellDiff {
                        row: format!("{} n={n}", family.name()),
                        column: col.to_string(),
                        variant: "value".to_string(),
                        expected,
                        computed,
                    });
                }
            }
        }
    }
    VerificationReport::build(TableId::Table2, checked, diffs)
}

fn verify_joint5(engine: &Engine) -> Result<VerificationReport> {
    let mut diffs = Vec::new();
    let mut checked = 0;
    for (e, m, matrix) in &JOINT5 {
        let joint = engine.joint(e, m, 5)?;
        for (r, row) in matrix.iter().enumerate() {
            for (c, &expected) in row.iter().enumerate() {
                checked += 1;
                let computed = joint.get(r as i64, c as i64);
                if computed != expected {
                    diffs.push(CellDiff {
                        row: format!("{e}={r}"),
                        column: format!("{m}={c}"),
                        variant: "standard".to_string(),
                        expected: expected as i64,
                        computed: computed as i64,
                    });
                }
            }
        }
        // nothing may fall outside the reference grid
        if joint.total() != matrix.iter().flatten().sum::<u64>() {
            diffs.push(CellDiff {
                row: format!("{e}:{m}"),
                column: "total".to_string(),
                variant: "standard".to_string(),
                expected: matrix.iter().flatten().sum::<u64>() as i64,
                computed: joint.total() as i64,
            });
        }
    }
    Ok(VerificationReport::build(TableId::Joint5, checked, diffs))
}

fn special(kind: Special, n: usize) -> Permutation {
    Permutation::special(kind, n).expect("n >= 2")
}

/// Closed-form claims about the special permutations, one row per n.
fn claims_for(n: usize) -> Vec<(&'static str, &'static str, i64, i64)> {
    let ni = n as i64;
    let id = Permutation::identity(n);
    let pi0 = special(Special::Pi0, n);
    let pi1 = special(Special::Pi1, n);
    let pi1inv = special(Special::Pi1Inv, n);
    let pi2 = special(Special::Pi2, n);
    let s = |p: &Permutation| stat(p) as i64;
    let k = |p: &Permutation| ska(p) as i64;
    let exc = |p: &Permutation| excedance_partials(p).exc as i64;
    let pi2_orbit: BTreeSet<_> = [pi2.clone(), pi2.reverse()].into();
    let odd_gap = if n % 2 == 1 { (ni - 1) / 2 } else { 0 };
    let mut rows = vec![
        ("stat(identity)", "closed-form", 0, s(&id)),
        ("stat(pi0)", "closed-form", ni * ni / 4, s(&pi0)),
        ("stat(pi1)", "closed-form", ni * (ni - 1) / 2, s(&pi1)),
        ("stat(pi1inv)", "closed-form", ni - 1, s(&pi1inv)),
        ("stat(pi2)", "closed-form", ni - 1, s(&pi2)),
        ("hag(pi2)", "closed-form", 1, hag(&pi2) as i64),
        (
            "hag(pi0)",
            "closed-form",
            ni * ni / 4 - odd_gap,
            hag(&pi0) as i64,
        ),
        ("ska(identity)", "closed-form", 0, k(&id)),
        ("ska(pi0)", "closed-form", ni / 2, k(&pi0)),
        ("ska(pi1)", "closed-form", ni - 1, k(&pi1)),
        ("ska(pi0)-exc(pi0)", "closed-form", 0, k(&pi0) - exc(&pi0)),
        ("ska(pi1)-exc(pi1)", "closed-form", 0, k(&pi1) - exc(&pi1)),
        (
            "orbit(pi2)={pi2,reverse(pi2)}",
            "closed-form",
            1,
            i64::from(orbit(&pi2) == pi2_orbit),
        ),
        (
            "stat(reverse(pi2))",
            "floor",
            (ni - 2) * (ni - 2) / 4,
            s(&pi2.reverse()),
        ),
        (
            "stat(reverse(pi2))",
            "ceil",
            ((ni - 2) * (ni - 2) + 3) / 4,
            s(&pi2.reverse()),
        ),
    ];
    if n >= 3 {
        let tri = (ni - 1) * (ni - 2) / 2;
        for (pat, expected) in [
            ("ba", ni - 1),
            ("cba", ni - 2),
            ("cb-a", tri),
            ("c-ba", tri),
        ] {
            let pattern = VincularPattern::parse(pat).expect("valid pattern");
            let column = match pat {
                "ba" => "count(pi0,ba)",
                "cba" => "count(pi0,cba)",
                "cb-a" => "count(pi0,cb-a)",
                _ => "count(pi0,c-ba)",
            };
            rows.push((column, "closed-form", expected, pattern.count(&pi0) as i64));
        }
    }
    rows
}

fn verify_claims() -> VerificationReport {
    let mut diffs = Vec::new();
    let mut checked = 0;
    for n in CLAIMS_SIZES {
        for (column, variant, expected, computed) in claims_for(n) {
            checked += 1;
            if expected != computed {
                diffs.push(CellDiff {
                    row: format!("n={n}"),
                    column: column.to_string(),
                    variant: variant.to_string(),
                    expected,
                    computed,
                });
            }
        }
    }
    VerificationReport::build(TableId::Claims, checked, diffs)
}
