//! Parser, serialization and end-to-end checks for the command front end.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use startrans::{deserialize, eval_expr, render, serialize, CliError, Workspace};
use startrans_core::MonomialIdeal;

fn ws3() -> Workspace {
    Workspace::with_default_vars(3).unwrap()
}

#[test]
fn parses_ideal_literals() {
    let ws = ws3();
    assert_eq!(
        eval_expr(&ws, "(x^2, y, z)").unwrap(),
        ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]])
    );
    let m3 = eval_expr(&ws, "m^3").unwrap();
    assert_eq!(m3, MonomialIdeal::maximal_power(3, 3).unwrap());
    assert_eq!(m3.mu(), 10);
    // whitespace-insensitive, exponent zero allowed and ignored
    assert_eq!(
        eval_expr(&ws, " ( x^2 , y ^ 1, z*y^0 ) ").unwrap(),
        ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]])
    );
}

#[test]
fn parses_sum_of_block_and_list() {
    let ws = ws3();
    let parsed = eval_expr(
        &ws,
        "(y,z)^3 + (x^5, x^3*y, x^3*z, x^2*y^2, x*y*z, x^2*z^2)",
    )
    .unwrap();
    let expected = ideal(
        3,
        &[
            &[5, 0, 0],
            &[3, 1, 0],
            &[3, 0, 1],
            &[2, 2, 0],
            &[1, 1, 1],
            &[2, 0, 2],
            &[0, 3, 0],
            &[0, 2, 1],
            &[0, 1, 2],
            &[0, 0, 3],
        ],
    );
    assert_eq!(parsed, expected);
}

#[test]
fn parse_operators_and_grouping() {
    let ws = ws3();
    let via_ops = eval_expr(&ws, "(x) * ((y) + (z))").unwrap();
    assert_eq!(via_ops, ideal(3, &[&[1, 1, 0], &[1, 0, 1]]));
    let colon = eval_expr(&ws, "(x^2*y, y^2) colon (y)").unwrap();
    assert_eq!(colon, ideal(3, &[&[2, 0, 0], &[0, 1, 0]]));
    let cap = eval_expr(&ws, "(x^2) cap (y^3)").unwrap();
    assert_eq!(cap, ideal(3, &[&[2, 3, 0]]));
    let star = eval_expr(&ws, "(x^2, y^2) star 1").unwrap();
    assert_eq!(star, ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]));
    let closure = eval_expr(&ws, "closure((x^2, y^2))").unwrap();
    assert_eq!(closure, star);
}

#[test]
fn parse_errors_carry_positions() {
    let ws = ws3();
    match eval_expr(&ws, "(x^2, q)") {
        Err(CliError::Parse { pos, msg }) => {
            assert_eq!(pos, 6);
            assert!(msg.contains("unknown variable"), "{msg}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    match eval_expr(&ws, "(x^999999999999)") {
        Err(CliError::Parse { msg, .. }) => assert!(msg.contains("overflow"), "{msg}"),
        other => panic!("expected overflow, got {other:?}"),
    }
    assert!(eval_expr(&ws, "(x,,y)").is_err());
    assert!(eval_expr(&ws, "").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_is_identity(raw in prop::collection::vec(prop::collection::vec(0u32..=6, 3), 1..6)) {
        prop_assume!(raw.iter().any(|g| g.iter().any(|&e| e > 0)));
        let i = MonomialIdeal::from_exponents(3, raw).unwrap();
        let ws = ws3();
        let text = render::ideal(&i, ws.vars());
        let back = eval_expr(&ws, &text).unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn parse_then_print_fixes_canonical_forms(raw in prop::collection::vec(prop::collection::vec(0u32..=6, 3), 1..6)) {
        prop_assume!(raw.iter().any(|g| g.iter().any(|&e| e > 0)));
        let i = MonomialIdeal::from_exponents(3, raw).unwrap();
        let ws = ws3();
        let text = render::ideal(&i, ws.vars());
        let reparsed = eval_expr(&ws, &text).unwrap();
        prop_assert_eq!(render::ideal(&reparsed, ws.vars()), text);
    }
}

#[test]
fn serialization_round_trip_on_random_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ws2 = Workspace::with_default_vars(2).unwrap();
    let m2 = MonomialIdeal::maximal(2).unwrap();
    assert_eq!(
        serialize(&m2, ws2.vars()),
        r#"{"dim":2,"vars":["x","y"],"gens":[[1,0],[0,1]]}"#
    );
    for _ in 0..1000 {
        let d = rng.gen_range(2..=4);
        let gens: Vec<Vec<u32>> = (0..rng.gen_range(1..=6))
            .map(|_| (0..d).map(|_| rng.gen_range(0..=9)).collect())
            .collect();
        let Ok(i) = MonomialIdeal::from_exponents(d, gens) else {
            continue;
        };
        let vars: Vec<String> = (0..d).map(|k| format!("v{k}")).collect();
        let text = serialize(&i, &vars);
        assert_eq!(deserialize(&text).unwrap(), i);
    }
}

#[test]
fn serialization_of_depth_four_chain() {
    let k = special_p_21();
    let ws = ws3();
    let text = serialize(&k, ws.vars());
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["gens"].as_array().unwrap().len(), 21);
    assert_eq!(deserialize(&text).unwrap(), k);
}

fn special_p_21() -> MonomialIdeal {
    startrans_core::special_p(&seq(3, &[0, 1, 1, 2])).unwrap()
}

#[test]
fn deserialization_rejects_malformed_documents() {
    assert!(matches!(deserialize("{"), Err(CliError::Doc(_))));
    assert!(matches!(
        deserialize(r#"{"dim":3,"vars":["x","y"],"gens":[[1,0,0]]}"#),
        Err(CliError::Doc(_))
    ));
    assert!(matches!(
        deserialize(r#"{"dim":2,"vars":["x","y"],"gens":[[1,0,0]]}"#),
        Err(CliError::Doc(_))
    ));
}

#[test]
fn command_outputs_match_spec_examples() {
    let mut ws = ws3();
    let out = ws
        .run_command("pointbasis (x^3, y^3, z^3, x*y, x*z, y*z)")
        .unwrap();
    assert_eq!(out.text, "root:2 x:1 y:1 z:1");

    let out = ws
        .run_command("cit (x^2, x*y, x*z, y*z, y^3, z^3) x")
        .unwrap();
    assert_eq!(
        out.text,
        "(x^5, x^3*y, x^3*z, x^2*y^2, x^2*z^2, x*y*z, y^3, y^2*z, y*z^2, z^3)"
    );

    let out = ws.run_command("pairtree 3").unwrap();
    assert!(out.text.contains("depth 3: (5, 3) (5, 2) (4, 3) (4, 1)"));

    let out = ws
        .run_command("factor (x^3, y^3, z^3, x*y, x*z, y*z)")
        .unwrap();
    assert_eq!(out.text, "root:-1 x:1 y:1 z:1");

    let out = ws.run_command("special? (x^2, y, z)").unwrap();
    assert_eq!(out.text, "true x");
}

#[test]
fn commands_are_pure_functions_of_inputs() {
    let mut ws = ws3();
    let a = ws.run_command("rees (x^12, y^7*z^5) + m^13").unwrap();
    let b = ws.run_command("rees (x^12, y^7*z^5) + m^13").unwrap();
    assert_eq!(a.text, b.text);
    assert_eq!(a.record, b.record);
    assert_eq!(a.text, "(65, 60, 72) (91, 96, 84)");
}

#[test]
fn bindings_persist_and_reserved_names_are_rejected() {
    let mut ws = ws3();
    ws.run_command("let K = (x^2, y, z)").unwrap();
    let out = ws.run_command("index K").unwrap();
    assert_eq!(out.text, "2");
    assert!(ws.run_command("let m = (x)").is_err());
    assert!(ws.run_command("let x = (y)").is_err());
}

#[test]
fn library_errors_surface_with_operation_and_input() {
    let mut ws = ws3();
    let err = ws.run_command("cit (x^2, y^2, z) x").unwrap_err();
    let text = err.to_string();
    assert!(text.contains("cit"), "{text}");
    assert!(text.contains("integrally closed"), "{text}");
    assert!(text.contains("(x^2, y^2, z)"), "{text}");
    let record = err.record();
    assert_eq!(record["error"]["op"], "cit");
}

#[test]
fn verify_flag_checks_inverse_transform_routes() {
    let mut ws = ws3();
    ws.verify = true;
    let out = ws.run_command("cit (x, y^2, y*z, z^2) x").unwrap();
    assert_eq!(out.text, "(x^3, x^2*y, x^2*z, y^2, y*z, z^2)");
    let out = ws.run_command("closure (x^3, y^3, z^3)").unwrap();
    assert!(out.text.contains("x*y*z"));
}

fn run_binary(args: &[&str], script: &str) -> (String, String, bool) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_startrans"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(script.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.success(),
    )
}

#[test]
fn binary_runs_scripts_line_by_line() {
    let script = "# a small session\n\
                  let I = (x^3, y^3, z^3, x*y, x*z, y*z)\n\
                  order I\n\
                  pointbasis I\n";
    let (stdout, stderr, ok) = run_binary(&[], script);
    assert!(ok, "stderr: {stderr}");
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[1], "2");
    assert_eq!(lines[2], "root:2 x:1 y:1 z:1");
}

#[test]
fn binary_emits_json_records() {
    let (stdout, _, ok) = run_binary(&["--json"], "mu m^2\n");
    assert!(ok);
    let record: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(record["command"], "mu");
    assert_eq!(record["result"], 6);
}

#[test]
fn binary_reports_errors_and_nonzero_exit() {
    let (_, stderr, ok) = run_binary(&[], "order (q)\n");
    assert!(!ok);
    assert!(stderr.contains("unknown variable"), "{stderr}");

    let (stdout, _, ok) = run_binary(&["--json"], "order (q)\n");
    assert!(!ok);
    let record: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(record["error"]["kind"], "syntax");
}

#[test]
fn binary_honors_dim_and_vars_flags() {
    let (stdout, _, ok) = run_binary(
        &["--dim", "4", "--vars", "a,b,c,d"],
        "special a,b\nweights a,b,a 3\n",
    );
    assert!(ok);
    let lines: Vec<&str> = stdout.lines().collect();
    assert!(lines[0].contains("a^3"));
    assert_eq!(lines[1], "(3, 5, 7, 7)");
}
