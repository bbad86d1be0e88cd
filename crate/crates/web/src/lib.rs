//! wasm bindings for the browser demo. Every export takes plain strings and
//! numbers and returns a report as JSON text; errors come back as strings.

use serde_json::json;
use wasm_bindgen::prelude::*;

use rookery::combinatorics::{count_standard, enumerate_tableaux, SkewShape, TableauKind};
use rookery::functor::{build_r_module, Variant};
use rookery::harmonics::{check_gr_equals_j, default_dmax};
use rookery::monoid::MonoidKind;
use rookery::rational::binomial;
use rookery::report::{Report, Status};

// Kept small so a page never hangs.
const MAX_N: usize = 5;
const MAX_HARMONICS_N: usize = 3;
const MAX_TABLEAUX: usize = 500;

type Out = Result<String, String>;

fn kind(s: &str) -> Result<MonoidKind, String> {
    match s.parse()? {
        MonoidKind::Sym => Err("pick one of is, pt, t".into()),
        k => Ok(k),
    }
}

fn shape(s: &str) -> Result<SkewShape, String> {
    s.trim().parse().map_err(|e: rookery::combinatorics::ShapeError| e.to_string())
}

fn bounded(n: usize, max: usize) -> Result<(), String> {
    if n == 0 || n > max {
        return Err(format!("n must be between 1 and {max} here"));
    }
    Ok(())
}

fn finish(r: rookery::Result<Report>) -> Out {
    r.and_then(|r| r.to_json()).map_err(|e| e.to_string())
}

pub fn dims_json(kind_s: &str, n: usize, shape_s: &str) -> Out {
    bounded(n, MAX_N)?;
    let (k, sh) = (kind(kind_s)?, shape(shape_s)?);
    let upper = build_r_module(k, n, &sh, Variant::Upper).map_err(|e| e.to_string())?.dim();
    let lower = build_r_module(k, n, &sh, Variant::Lower).map_err(|e| e.to_string())?.dim();
    let f = count_standard(&sh);
    let closed = binomial(n as u64, sh.size() as u64) * f;
    let ok = closed == upper.into() && closed == lower.into();
    let data = json!({"shape": sh.to_string(), "n": n, "r": sh.size(), "upper_dim": upper, "lower_dim": lower,
        "f": f, "closed_form": closed.to_string()});
    finish(Report::new("dims", json!({"kind": k, "n": n, "shape": shape_s}), Status::from_bool(ok), &data))
}

pub fn harmonics_json(kind_s: &str, n: usize) -> Out {
    bounded(n, MAX_HARMONICS_N)?;
    let k = kind(kind_s)?;
    let r = check_gr_equals_j(k, n, default_dmax(n), false);
    finish(r.and_then(|r| Report::new("harmonics", json!({"kind": k, "n": n}), Status::from_bool(r.holds()), &r)))
}

pub fn tableaux_json(shape_s: &str, n: usize, kind_s: &str) -> Out {
    bounded(n, 9)?;
    let sh = shape(shape_s)?;
    let tk: TableauKind = kind_s.parse()?;
    let list = enumerate_tableaux(&sh, n, tk);
    let shown: Vec<_> = list.iter().take(MAX_TABLEAUX).map(|t| t.to_json_rows()).collect();
    let data = json!({"shape": sh.to_string(), "n": n, "count": list.len(), "tableaux": shown});
    finish(Report::info("tableaux", json!({"shape": shape_s, "n": n, "kind": kind_s}), &data))
}

#[wasm_bindgen]
pub fn dims(kind: &str, n: usize, shape: &str) -> Result<String, JsValue> {
    dims_json(kind, n, shape).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn harmonics(kind: &str, n: usize) -> Result<String, JsValue> {
    harmonics_json(kind, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn tableaux(shape: &str, n: usize, kind: &str) -> Result<String, JsValue> {
    tableaux_json(shape, n, kind).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: Out) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn dims_of_a_hook() {
        let v = parse(dims_json("is", 3, "2,1"));
        assert_eq!(v["status"], "pass");
        assert_eq!(v["data"]["upper_dim"], 2);
    }

    #[test]
    fn hilbert_function() {
        let v = parse(harmonics_json("t", 2));
        assert_eq!(v["data"]["hilbert"], json!([1, 2, 1]));
    }

    #[test]
    fn tableaux_listing() {
        let v = parse(tableaux_json("2,1", 3, "standard_distinct"));
        assert_eq!(v["data"]["count"], 2);
    }

    #[test]
    fn bad_input() {
        assert!(dims_json("sym", 2, "1").is_err());
        assert!(dims_json("is", 9, "1").is_err());
        assert!(dims_json("is", 2, "1,2").is_err());
        assert!(harmonics_json("pt", 4).is_err());
    }
}
