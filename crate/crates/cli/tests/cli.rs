use std::process::{Command, Output};

use ore_core::syntax::{
    parse_additive, parse_descriptor, parse_element, parse_ordinary, parse_ppolynomial, parse_skew,
};
use serde_json::Value;

fn ore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ore")).args(args).env_remove("ORE_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.push("--json");
    let o = ore(&a);
    let v: Value = serde_json::from_str(&stdout(&o)).expect("valid json");
    (v, o.status.code().unwrap())
}

const DEMOS: &[&[&str]] = &[
    &["skew", "divmod", "--field", "fq:2^2:mod=a^2+a+1", "--side", "left", "f^2", "f+a"],
    &["skew", "divmod", "--field", "fq:3^2", "--side", "right", "f^3 + a*f + 1", "a*f + 2"],
    &["skew", "divmod", "--side", "right", "--field", "ratfn:2", "t*f", "f"],
    &["skew", "mul", "--field", "fq:2^2", "f", "a"],
    &["skew", "gcrd", "--field", "fq:2^2", "f^2 + f", "f + 1"],
    &["skew", "lclm", "--field", "fq:2^2", "f + a", "f + 1"],
    &["skew", "ore", "--field", "ratfn:2", "--bound", "2", "t"],
    &["skew", "demo", "--field", "fq:2^3", "--seed", "5"],
    &["addpoly", "classify", "--field", "fp:2", "X^4 + X"],
    &["addpoly", "classify", "--field", "fp:2", "X^3 + X^2"],
    &["addpoly", "check", "--field", "fp:2", "--over", "fq:2^2", "X^3 + X^2"],
    &["addpoly", "solve", "--field", "fq:2^2", "X^2 + X + 1"],
    &["addpoly", "solve", "--field", "fp:3", "--over", "fq:3^7", "X^3 - X"],
    &["addpoly", "linearize", "--field", "fq:2^2", "X^2 + X"],
    &["addpoly", "subgroup", "--field", "fq:2^2", "0", "1"],
    &["addpoly", "annihilator", "--field", "fq:2^2", "--subfield-degree", "1", "a"],
    &["as", "irred", "--field", "fp:2", "1"],
    &["as", "solve", "--field", "fq:2^2", "1"],
    &["as", "root", "--field", "fq:2^2", "--factor", "X + a", "X^2 + X + 1"],
    &["as", "trace", "--field", "fq:2^2", "a"],
    &["as", "hilbert90", "--field", "fq:2^3", "a + a^2"],
    &["as", "hilbert90", "--field", "fq:2^2", "a"],
    &["as", "reduce", "--field", "fq:2^2", "a+1"],
    &["as", "counterexample", "--field", "fp:3"],
    &["ff", "decompose", "--field", "ratfn:2", "(t^2+1)/(t^3+t)"],
    &["ff", "decompose", "--field", "ratfn:3", "t^4 + 1/(t^2+1)^3"],
    &["ff", "kphi", "--field", "ratfn:2", "t^2 + t + 1/t^4"],
    &["ff", "places", "--field", "ratfn:3", "--degree", "2"],
    &["val", "hensel", "--field", "laurent:3:prec=20", "t"],
    &["val", "asroot", "--field", "laurent:2", "--e", "2", "t^-3"],
    &["val", "image", "--field", "laurent:2:prec=60", "--k", "1", "t^-2"],
    &["val", "extremal", "--field", "laurent:2", "X^2 - X - t^-1"],
    &["val", "extremal", "--field", "laurent:2", "--mode", "greedy", "X0^2 - X0 + t*X1^2 - t^-3"],
];

#[test]
fn documented_examples() {
    let o = ore(&["skew", "divmod", "--field", "fq:2^2:mod=a^2+a+1", "--side", "left", "f^2", "f+a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q = f + (a+1), r = 1\n");

    let o = ore(&["as", "irred", "--field", "fp:2", "1"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "irreducible: true\n"));

    let o = ore(&["skew", "divmod", "--side", "right", "--field", "ratfn:2", "t*f", "f"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "obstruction: t has no p-th root\n"));

    let o = ore(&["val", "image", "--field", "laurent:2:prec=60", "--k", "1", "t^-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X0: t^-1\nX1: t^-1\nY: 0\n");
}

#[test]
fn exit_codes() {
    let usage: &[&[&str]] = &[
        &["skew", "divmod", "--side", "sideways", "--field", "fp:2", "f", "f"],
        &["skew", "frobnicate"],
        &["skew", "mul", "--field", "fp:4", "f", "f"],
        &["skew", "mul", "--field", "fp:2", "f", "f +"],
        &["addpoly", "classify", "--field", "fp:2"],
    ];
    for args in usage {
        let o = ore(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let o = ore(&["skew", "mul", "--field", "fp:2", "f", "f +"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 3"));

    let domain: &[&[&str]] = &[
        &["as", "hilbert90", "--field", "fq:2^2", "a"],
        &["skew", "divmod", "--field", "fp:2", "f", "0"],
        &["val", "hensel", "--field", "laurent:2", "1"],
        &["as", "root", "--field", "fp:2", "--factor", "X^4 + X + 1", "X^4 + X + 1"],
    ];
    for args in domain {
        assert_eq!(ore(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn seed_is_deterministic_and_env_overrides() {
    let a = ore(&["skew", "demo", "--field", "fq:3^2", "--seed", "11"]);
    let b = ore(&["skew", "demo", "--field", "fq:3^2", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_ore"))
        .args(["skew", "demo", "--field", "fq:3^2", "--seed", "2"])
        .env("ORE_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

fn reparse(field: &str, key: &str, value: &str) {
    let f = parse_descriptor(field).unwrap();
    let ok = match key {
        "q" | "r" | "product" | "gcrd" | "lclm" | "u" | "v" | "a" | "b" => parse_skew(value, &f).is_ok(),
        "polynomial" => {
            parse_ppolynomial(value, &f).is_ok()
                || parse_additive(value, &f).is_ok()
                || parse_ordinary(value, &f).is_ok()
        }
        "roots"
        | "root"
        | "trace"
        | "theta"
        | "representative"
        | "x"
        | "residual"
        | "Y"
        | "obstruction"
        | "coefficients"
        | "sigma_theta_minus_theta"
        | "shift"
        | "basis" => parse_element(value, &f).is_ok(),
        k if k.starts_with('X') => parse_element(value, &f).is_ok(),
        "witness" => matches!(value, "disjoint" | "common") || parse_element(value, &f).is_ok(),
        _ => true,
    };
    assert!(ok, "{key} = {value} does not re-parse over {field}");
}

fn leaves(key: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| leaves(k, v, out)),
        Value::Array(items) => items.iter().for_each(|x| leaves(key, x, out)),
        Value::String(s) => out.push((key.to_string(), s.clone())),
        other => out.push((key.to_string(), other.to_string())),
    }
}

#[test]
fn json_round_trips_and_agrees_with_text() {
    for args in DEMOS {
        let (doc, code) = json(args);
        assert_eq!(doc["schema"], 1, "{args:?}");
        assert_eq!(doc["command"], format!("{} {}", args[0], args[1]));
        let status = doc["status"].as_str().unwrap();
        assert_eq!(code, if status == "ok" { 0 } else { 1 }, "{args:?}");
        let field = doc["field"].as_str().unwrap();
        assert_eq!(parse_descriptor(field).unwrap().to_string(), field);

        let body = if status == "error" { &doc["error"] } else { &doc["result"] };
        let mut pairs = Vec::new();
        leaves("", body, &mut pairs);
        let reprinted: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(reprinted, doc);

        let text = ore(args);
        assert_eq!(text.status.code(), Some(code));
        let text = stdout(&text);
        assert!(text.ends_with('\n') && !text.contains('\r'));
        for (key, value) in &pairs {
            if status != "error" {
                reparse(field, key, value);
            }
            assert!(text.contains(value.as_str()), "{args:?}: text lacks {key} = {value}:\n{text}");
        }
    }
}
