//! Golden tests for the command-line surface: byte-exact output for fixed
//! invocations, and the documented exit codes.

use qcover_cli::run;

fn invoke(args: &[&str]) -> qcover_cli::Outcome {
    let mut argv = vec!["qcover"];
    argv.extend_from_slice(args);
    run(argv)
}

#[test]
fn cb_idempotent_golden() {
    let out = invoke(&["cb", "--a", "0", "--b", "0", "--k", "5", "--format", "text"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1_{5}\n");
}

#[test]
fn cb_natural_shapes() {
    let out = invoke(&["cb", "--a", "1", "--b", "1", "--k", "-4"]);
    assert_eq!(out.stdout, "E 1_{-6} F\n");
    let out = invoke(&["cb", "--a", "1", "--b", "1", "--k", "4"]);
    assert_eq!(out.stdout, "(p) * F 1_{6} E\n");
    let out = invoke(&["cb", "--a", "1", "--b", "0", "--k", "4", "--format", "json"]);
    assert_eq!(
        out.stdout,
        "{\"idx\":[1,0,4],\"natural\":\"1_{6} E\",\"normal_form\":\"E 1_{4}\",\"schema\":\"qcover/1\"}\n"
    );
}

#[test]
fn normal_form_rewrites_words() {
    let out = invoke(&["normal-form", "E0 K0"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "(q^-2) * K0 E0\n");
    // identical invocations are byte-identical
    let again = invoke(&["normal-form", "E0 K0"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn mul_defining_relation() {
    let out = invoke(&["mul", "E1", "F1"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "((-1*p*q^3 + -1*q)/(q^4 + -1)) * K1^-1 + ((q^3 + p*q)/(q^4 + -1)) * K1 + (p) * F1 E1\n"
    );
}

#[test]
fn morphism_and_coproduct() {
    let out = invoke(&["morphism", "omega", "E0"]);
    assert_eq!(out.stdout, "F0\n");
    let out = invoke(&["morphism", "rho", "E0"]);
    assert_eq!(out.stdout, "(q^-1) * F0 K0\n");
    let out = invoke(&["morphism", "frobenius", "E0"]);
    assert_eq!(out.code, 2, "unknown morphism is a usage error");
    let out = invoke(&["coproduct", "K0"]);
    assert_eq!(out.stdout, "K0 (x) K0 + K1 (x) K1\n");
}

#[test]
fn struct_const_table_and_empty_table() {
    let out = invoke(&["struct-const", "--i1", "1,0,0", "--i2", "0,1,2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "CB(0,0,2): p*q + q^-1\nCB(1,1,2): 1\n");
    // mismatched inner weights: empty table, exit 0
    let out = invoke(&["struct-const", "--i1", "1,0,2", "--i2", "0,1,1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "\n");
    let out = invoke(&["struct-const", "--i1", "1,0", "--i2", "0,1,1"]);
    assert_eq!(out.code, 2, "malformed index is a usage error");
}

#[test]
fn tensor_cb_json_schema() {
    let out = invoke(&["tensor-cb", "--s", "2", "--t", "1", "--format", "json"]);
    assert_eq!(out.code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(parsed["schema"], "qcover/1");
    assert_eq!(parsed["s"], 2);
    let cb = parsed["cb"].as_array().unwrap();
    assert_eq!(cb.len(), 6);
    // the (1,1) entry carries the q^-2 correction at (0,0)
    let entry = cb.iter().find(|e| e["a"] == 1 && e["b"] == 1).unwrap();
    let coeffs = entry["coeffs"].as_array().unwrap();
    assert!(coeffs
        .iter()
        .any(|c| c["m"] == 0 && c["n"] == 0 && c["scalar"] == "q^-2"));
}

#[test]
fn cb_expand_golden() {
    let out = invoke(&["cb-expand", "E 1_{-1} F"]);
    assert_eq!(out.stdout, "CB(0,0,1) + CB(1,1,1)\n");
    let out = invoke(&["cb-expand", "1_{0}", "--format", "json"]);
    assert_eq!(
        out.stdout,
        "{\"schema\":\"qcover/1\",\"terms\":[{\"idx\":[0,0,0],\"scalar\":\"1\"}]}\n"
    );
}

#[test]
fn form_and_specialize() {
    let out = invoke(&["form", "1_{2}", "1_{2}"]);
    assert_eq!(out.stdout, "1\n");
    let out = invoke(&["form", "1_{2}", "1_{4}"]);
    assert_eq!(out.stdout, "0\n");
    let out = invoke(&["specialize", "--pi", "+1", "CB(0,0,3)"]);
    assert_eq!(out.stdout, "1_{3}\n");
    let out = invoke(&["specialize", "--pi", "0", "CB(0,0,3)"]);
    assert_eq!(out.code, 2);
}

#[test]
fn decompose_worked_example() {
    let out = invoke(&["decompose", "--tensor", "1,2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "[(3,1), (1,1)]\n");
    let out = invoke(&["decompose", "--tensor", "2,2", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(parsed["components"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_theta_golden_line() {
    let out = invoke(&["verify", "theta", "--max-n", "10", "--modules", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "OK: b_n = 0 for 1 \u{2264} n \u{2264} 10; intertwining verified on L(s)\u{2297}L(t), s,t \u{2264} 2\n"
    );
}

#[test]
fn verify_small_suites() {
    let out = invoke(&["verify", "relations", "--max-rs", "2"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.starts_with("OK: commutation identities"));
    let out = invoke(&["verify", "nonsense"]);
    assert_eq!(out.code, 2);
}

#[test]
fn parse_errors_exit_2() {
    let out = invoke(&["normal-form", "E2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("error:"));
    let out = invoke(&["mul", "E0", "junk here"]);
    assert_eq!(out.code, 2);
    let out = invoke(&["no-such-command"]);
    assert_eq!(out.code, 2);
}
