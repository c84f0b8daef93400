//! Browser bindings. Each export takes plain numbers or h-vector text and
//! returns a JSON string, or throws with the error message.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use acm_core::{gmax, link, ordinary_h, union_ordinary, HVector, LinkageFrame};

fn to_json(v: Value) -> String {
    v.to_string()
}

fn gmax_impl(d: u32, s: u32) -> Result<String, String> {
    if s == 0 {
        return Err("s must be at least 1".into());
    }
    let g = gmax(u64::from(d), s);
    Ok(to_json(json!({
        "genus": g.genus,
        "feasible": g.feasible,
        "witness": g.witness,
    })))
}

fn union_impl(s: u32, a: u32, b: u32, restricted: bool) -> Result<String, String> {
    let u = union_ordinary(s, a, b, restricted).map_err(|e| e.to_string())?;
    let h1 = ordinary_h(s, a).map_err(|e| e.to_string())?;
    let h2 = ordinary_h(s, b).map_err(|e| e.to_string())?;
    Ok(to_json(json!({
        "h1": h1,
        "h2": h2,
        "h3": u.h3,
        "case": u.case_tag,
        "omitted": u.omitted_value,
        "genus": u.h3.genus(),
        "intersection": u.h3.genus() - h1.genus() - h2.genus() + 1,
    })))
}

fn link_impl(h: &str, m: u32, n: u32) -> Result<String, String> {
    let h: HVector = h.parse().map_err(|e: acm_core::Error| e.to_string())?;
    let frame = LinkageFrame::new(m, n).map_err(|e| e.to_string())?;
    let residual = link(&h, m, n).map_err(|e| e.to_string())?;
    Ok(to_json(json!({
        "h": h,
        "ci": frame.h_ci,
        "residual": residual,
    })))
}

/// `{genus, feasible, witness}` for `G_CM(d, s)`.
#[wasm_bindgen(js_name = gmax)]
pub fn gmax_js(d: u32, s: u32) -> Result<String, JsError> {
    gmax_impl(d, s).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = unionOrdinary)]
pub fn union_ordinary_js(s: u32, a: u32, b: u32, restricted: bool) -> Result<String, JsError> {
    union_impl(s, a, b, restricted).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = link)]
pub fn link_js(h: &str, m: u32, n: u32) -> Result<String, JsError> {
    link_impl(h, m, n).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn gmax_payload() {
        let v = parse(gmax_impl(11, 2).unwrap());
        assert_eq!(v["genus"], 20);
        assert_eq!(v["witness"], json!([1, 2, 2, 2, 2, 2]));
        assert_eq!(parse(gmax_impl(7, 4).unwrap())["feasible"], false);
        assert!(gmax_impl(3, 0).is_err());
    }

    #[test]
    fn union_payload() {
        let v = parse(union_impl(1, 1, 1, true).unwrap());
        assert_eq!(v["h3"], json!([1, 2, 1]));
        assert_eq!(v["intersection"], 2);
        assert_eq!(v["case"], "iii");
        assert!(union_impl(2, 3, 0, false).is_err());
    }

    #[test]
    fn link_payload() {
        let v = parse(link_impl("1,2,3,4,4", 4, 5).unwrap());
        assert_eq!(v["residual"], json!([1, 2, 3]));
        assert!(link_impl("1,2,2,2,2", 2, 3).is_err());
        assert!(link_impl("1,,2", 2, 3).is_err());
    }
}
