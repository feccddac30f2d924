//! JSON outputs validate against the schemas shipped in docs/schemas/.
//! A small structural checker covers the schema subset those files use:
//! type, required, properties, additionalProperties, items, oneOf, enum.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn mdl(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_mdl"))
        .args(args)
        .output()
        .expect("binary runs");
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file exists"))
        .expect("schema is JSON")
}

fn validate(schema: &Value, value: &Value, at: &str) -> Result<(), String> {
    if let Some(variants) = schema.get("oneOf").and_then(Value::as_array) {
        let ok = variants.iter().any(|v| validate(v, value, at).is_ok());
        return if ok {
            Ok(())
        } else {
            Err(format!("{at}: no oneOf variant matched"))
        };
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{at}: {value} not in enum"));
        }
    }
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "integer" => value.is_u64() || value.is_i64(),
            "null" => value.is_null(),
            other => return Err(format!("{at}: unsupported schema type {other}")),
        };
        if !ok {
            return Err(format!("{at}: expected {ty}, got {value}"));
        }
    }
    if let Some(obj) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().unwrap();
                if !obj.contains_key(key) {
                    return Err(format!("{at}: missing required key {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, val) in obj {
            if let Some(prop_schema) = props.and_then(|p| p.get(key)) {
                validate(prop_schema, val, &format!("{at}.{key}"))?;
            } else {
                match schema.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{at}: unexpected key {key}"));
                    }
                    Some(extra) if extra.is_object() => {
                        validate(extra, val, &format!("{at}.{key}"))?;
                    }
                    _ => {}
                }
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for (i, item) in arr.iter().enumerate() {
            validate(items, item, &format!("{at}[{i}]"))?;
        }
    }
    Ok(())
}

fn rational_strings_ok(value: &Value) {
    // the schemas constrain density fields to "p/q" or integer strings
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if k == "density" || k == "cap" {
                    if let Some(s) = v.as_str() {
                        let ok = match s.split_once('/') {
                            Some((p, q)) => {
                                p.parse::<i64>().is_ok() && q.parse::<i64>().is_ok_and(|q| q > 0)
                            }
                            None => s.parse::<i64>().is_ok(),
                        };
                        assert!(ok, "bad rational string `{s}` under key {k}");
                    }
                }
                rational_strings_ok(v);
            }
        }
        Value::Array(items) => items.iter().for_each(rational_strings_ok),
        _ => {}
    }
}

#[test]
fn verification_reports_validate() {
    let schema = schema("verification-report.schema.json");
    for args in [
        vec!["verify", "blocks", "--format", "json"],
        vec!["verify", "low-spectrum", "--max-n", "5", "--format", "json"],
        vec!["verify", "rank4", "--max-n", "6", "--format", "json"],
        vec!["verify", "multi", "--format", "json"],
        vec![
            "verify",
            "low-spectrum",
            "--max-n",
            "5",
            "--drop-density",
            "5/4",
            "--format",
            "json",
        ],
    ] {
        let report = mdl(&args);
        validate(&schema, &report, "$").unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn minimality_output_validates() {
    let schema = schema("minimality.schema.json");
    for named in ["friendship:4", "cycle:4", "path:1", "complete:4"] {
        let v = mdl(&["check-minimal", "--named", named, "--format", "json"]);
        validate(&schema, &v, "$").unwrap_or_else(|e| panic!("{named}: {e}"));
        rational_strings_ok(&v);
    }
}

#[test]
fn spectrum_output_validates() {
    let schema = schema("spectrum.schema.json");
    for args in [
        vec![
            "spectrum", "--max-n", "5", "--cap", "3/2", "--format", "json",
        ],
        vec!["spectrum", "--max-n", "4", "--format", "json"],
    ] {
        let v = mdl(&args);
        validate(&schema, &v, "$").unwrap_or_else(|e| panic!("{args:?}: {e}"));
        rational_strings_ok(&v);
    }
}
