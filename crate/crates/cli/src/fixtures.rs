//! Golden reports for a fixed set of invocations.

use std::fs;
use std::path::{Path, PathBuf};

use rookery::Result;

/// Directory name for the current golden set; bump it when the report shape changes.
pub const FIXTURE_VERSION: &str = "v1";

/// `(file stem, arguments)`.
pub const CASES: &[(&str, &[&str])] = &[
    ("tableaux_2_1_n3_standard", &["tableaux", "--shape", "2,1", "--n", "3", "--kind", "standard_distinct"]),
    ("tableaux_3_2_1_n3", &["tableaux", "--shape", "3,2/1", "--n", "3"]),
    ("dims_is_n3_2_1", &["dims", "--kind", "is", "--n", "3", "--lambda", "2,1"]),
    ("dims_pt_n4_3_2_over_1", &["dims", "--kind", "pt", "--n", "4", "--lambda", "3,2", "--mu", "1"]),
    ("monoid_is_3", &["monoid", "--kind", "is", "--n", "3"]),
    ("monoid_t_2_list", &["monoid", "--kind", "t", "--n", "2", "--list"]),
    ("module_is_n2_1_upper", &["module", "--kind", "is", "--n", "2", "--lambda", "1"]),
    ("module_t_n3_2_1_upper", &["module", "--kind", "t", "--n", "3", "--lambda", "2,1"]),
    ("branch1_2_1_n4", &["branch1", "--lambda", "2,1", "--n", "4"]),
    ("branch2_pt_2_1_n4_s2", &["branch2", "--kind", "pt", "--lambda", "2,1", "--n", "4", "--s", "2"]),
    ("branch3_is_2_1_n3", &["branch3", "--kind", "is", "--lambda", "2,1", "--n", "3", "--structural"]),
    ("distinct_is_3", &["distinct", "--kind", "is", "--n", "3"]),
    ("irreducible_is_n3_2_1", &["irreducible", "--kind", "is", "--n", "3", "--lambda", "2,1"]),
    ("cauchy_none_m2_n2_r2", &["cauchy", "--kind", "none", "--m", "2", "--n", "2", "--r", "2"]),
    ("cauchy_is_m2_n2_r2", &["cauchy", "--kind", "is", "--m", "2", "--n", "2", "--r", "2"]),
    ("cauchy_pt_m2_n3_r2", &["cauchy", "--kind", "pt", "--m", "2", "--n", "3", "--r", "2"]),
    ("skew_cauchy_is_m2_n2_r2", &["skew-cauchy", "--kind", "is", "--m", "2", "--n", "2", "--r", "2", "--samples", "5"]),
    ("skew_cauchy_t_m2_n2_r2", &["skew-cauchy", "--kind", "t", "--m", "2", "--n", "2", "--r", "2", "--samples", "5"]),
    ("harmonics_t_n2", &["harmonics", "--kind", "t", "--n", "2"]),
    ("harmonics_is_n3", &["harmonics", "--kind", "is", "--n", "3"]),
];

/// Writes every case to `<root>/<version>/<stem>.json`.
pub fn write_fixtures(root: &Path) -> Result<Vec<PathBuf>> {
    let dir = root.join(FIXTURE_VERSION);
    fs::create_dir_all(&dir)?;
    let mut out = Vec::new();
    for (stem, args) in CASES {
        let report = crate::report_for(args)?;
        let path = dir.join(format!("{stem}.json"));
        fs::write(&path, report.to_json()? + "\n")?;
        out.push(path);
    }
    Ok(out)
}
