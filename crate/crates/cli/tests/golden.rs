use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

use rookery::report::{Report, SCHEMA_VERSION};
use rookery_cli::fixtures::{write_fixtures, CASES, FIXTURE_VERSION};
use rookery_cli::report_for;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(FIXTURE_VERSION)
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn read(path: &Path) -> Value {
    let text = fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap()
}

/// Envelope checks taken from the schema document itself.
fn check_envelope(schema: &Value, v: &Value, what: &str) {
    let obj = v.as_object().unwrap_or_else(|| panic!("{what}: not an object"));
    let required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    for k in &required {
        assert!(obj.contains_key(*k), "{what}: missing {k}");
    }
    for k in obj.keys() {
        assert!(required.contains(&k.as_str()), "{what}: unexpected key {k}");
    }
    assert_eq!(schema["properties"]["schema_version"]["const"], v["schema_version"], "{what}");
    assert_eq!(v["schema_version"], SCHEMA_VERSION, "{what}");
    let statuses = schema["properties"]["status"]["enum"].as_array().unwrap();
    assert!(statuses.contains(&v["status"]), "{what}: status {}", v["status"]);
    assert!(v["parameters"].is_object() && v["data"].is_object(), "{what}");
}

#[test]
fn reports_match_goldens() {
    for (stem, args) in CASES {
        let fresh = serde_json::to_value(report_for(args).unwrap()).unwrap();
        let golden = read(&golden_dir().join(format!("{stem}.json")));
        assert_eq!(fresh, golden, "{stem} drifted from its golden file");
    }
}

#[test]
fn goldens_parse_and_fit_the_schema() {
    let schema = schema();
    let mut seen = 0;
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        check_envelope(&schema, &serde_json::from_str(&text).unwrap(), &path.display().to_string());
        Report::from_json(&text).unwrap();
        seen += 1;
    }
    assert_eq!(seen, CASES.len(), "stray or missing golden files");
}

#[test]
fn generator_reproduces_goldens() {
    let tmp = tempfile::tempdir().unwrap();
    let written = write_fixtures(tmp.path()).unwrap();
    assert_eq!(written.len(), CASES.len());
    for path in written {
        assert!(path.starts_with(tmp.path().join(FIXTURE_VERSION)));
        let name = path.file_name().unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), fs::read_to_string(golden_dir().join(name)).unwrap());
    }
}
