//! End-to-end tests of the binary: JSON schemas, exit codes, determinism,
//! and the round trip between the conversion commands.

use std::path::PathBuf;
use std::process::{Command, Output};

use deltastar_core::{Int, IntVector, LatticeBasis};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltastar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stderr_error_code(out: &Output) -> i64 {
    let v: serde_json::Value =
        serde_json::from_slice(&out.stderr).expect("machine-readable error on stderr");
    v["error"]["code"].as_i64().expect("error code")
}

#[test]
fn delta_star_of_kernel_example() {
    let v = run_json(&["delta-star", "--input", &data("kernel_example.json")]);
    assert_eq!(v["delta_report"]["delta_star"], serde_json::json!(["4", "8"]));
    let per = v["delta_report"]["per_submonoid"].as_array().unwrap();
    assert_eq!(per.len(), 10);
    for node in per {
        let gens = node["generators"].as_array().unwrap();
        match gens.len() {
            3 => assert_eq!(node["min_delta"], "8"),
            5 => assert_eq!(node["min_delta"], "4"),
            _ => assert_eq!(node["min_delta"], serde_json::Value::Null),
        }
    }
}

#[test]
fn dc_lattice_of_wide_example() {
    let v = run_json(&["dc", "--input", &data("ex_wide.json")]);
    let nodes = v["dc_lattice"]["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 10);
    let subsets: Vec<Vec<u64>> = nodes
        .iter()
        .map(|n| {
            n["generators"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect();
    let expected: Vec<Vec<u64>> = vec![
        vec![],
        vec![1],
        vec![2],
        vec![5],
        vec![8],
        vec![1, 2],
        vec![1, 5, 7, 9],
        vec![2, 8],
        vec![5, 8],
        vec![1, 2, 3, 4, 5, 6, 7, 8, 9],
    ];
    assert_eq!(subsets, expected);
}

#[test]
fn rays_of_wide_example() {
    let v = run_json(&["rays", "--input", &data("ex_wide.json")]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["simplicial"], false);
    assert_eq!(
        v["rays"],
        serde_json::json!([
            ["1", "1", "3"],
            ["1", "7", "1"],
            ["5", "6", "1"],
            ["10", "1", "3"]
        ])
    );
    assert_eq!(v["facets"].as_array().unwrap().len(), 4);
}

#[test]
fn faces_reference_rays() {
    let v = run_json(&["faces", "--input", &data("ex_wide.json")]);
    let faces = v["faces"]["faces"].as_array().unwrap();
    assert_eq!(faces.len(), 10);
    assert_eq!(faces[0]["dim"], 0);
    assert_eq!(faces[0]["generator_indices"], serde_json::json!([]));
    let top = faces.last().unwrap();
    assert_eq!(top["dim"], 3);
    assert_eq!(top["ray_indices"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn projection_example_model_and_checks() {
    let v = run_json(&["rays", "--input", &data("projection_example.json")]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["simplicial"], true);

    for idx in ["1", "4"] {
        let v = run_json(&[
            "check-dc",
            "--input",
            &data("projection_example.json"),
            "--submonoid",
            idx,
        ]);
        assert_eq!(v["divisor_closed"], false);
    }

    let v = run_json(&["dc", "--input", &data("projection_example.json")]);
    let nodes = v["dc_lattice"]["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 2);
    assert_eq!(nodes[0]["generators"], serde_json::json!([]));
    assert_eq!(nodes[1]["generators"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn simplicial_example_checks_and_delta_star() {
    for (idx, expected) in [("1,3", true), ("2,4", true), ("2", false), ("4", false)] {
        let v = run_json(&[
            "check-dc",
            "--input",
            &data("simplicial_example.json"),
            "--submonoid",
            idx,
        ]);
        assert_eq!(v["divisor_closed"], serde_json::json!(expected), "J = {idx}");
    }
    let v = run_json(&["delta-star", "--input", &data("simplicial_example.json")]);
    assert_eq!(v["delta_report"]["delta_star"], serde_json::json!(["2"]));

    // the same presentation via congruences and equations
    let v = run_json(&["delta-star", "--input", &data("simplicial_example_eqs.json")]);
    assert_eq!(v["delta_report"]["delta_star"], serde_json::json!(["2"]));
}

#[test]
fn min_delta_selects_submonoids() {
    let v = run_json(&[
        "min-delta",
        "--input",
        &data("kernel_example.json"),
        "--submonoid",
        "1,2,3",
    ]);
    assert_eq!(v["min_delta"], "8");
    let v = run_json(&["min-delta", "--input", &data("kernel_example.json")]);
    assert_eq!(v["min_delta"], "4");
    let v = run_json(&[
        "min-delta",
        "--input",
        &data("kernel_example.json"),
        "--submonoid",
        "1",
    ]);
    assert_eq!(v["min_delta"], serde_json::Value::Null);
}

#[test]
fn factorizations_of_35() {
    let v = run_json(&[
        "factorizations",
        "--input",
        &data("numerical_5_7.json"),
        "--element",
        "7,0",
    ]);
    assert_eq!(
        v["factorizations"]["factorizations"],
        serde_json::json!([["0", "5"], ["7", "0"]])
    );
    assert_eq!(v["factorizations"]["lengths"], serde_json::json!(["5", "7"]));
    assert_eq!(v["factorizations"]["delta"], serde_json::json!(["2"]));
}

#[test]
fn conversion_round_trip_is_lattice_equal() {
    let v = run_json(&["gens2eqs", "--input", &data("projection_example.json")]);
    let sys = &v["equation_system"];
    assert_eq!(
        sys["congruences"],
        serde_json::json!([{"coeffs": ["8", "5", "1", "0"], "modulus": "10"}])
    );
    assert_eq!(sys["equations"], serde_json::json!([["1", "1", "1", "1"]]));

    // feed the emitted system back through eqs2gens
    let next_input = serde_json::json!({
        "kind": "presentation",
        "p": sys["p"],
        "congruences": sys["congruences"],
        "equations": sys["equations"],
    });
    let tmp = std::env::temp_dir().join("deltastar_roundtrip.json");
    std::fs::write(&tmp, serde_json::to_string(&next_input).unwrap()).unwrap();
    let v = run_json(&["eqs2gens", "--input", tmp.to_str().unwrap()]);
    let rows: Vec<IntVector> = v["group_generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap().parse::<Int>().unwrap())
                .collect()
        })
        .collect();
    let got = LatticeBasis::from_generators(4, &rows).unwrap();
    let original = LatticeBasis::from_generators(
        4,
        &[
            vec![
                Int::from(-5),
                Int::from(-7),
                Int::from(5),
                Int::from(7),
            ],
            vec![
                Int::from(12),
                Int::from(1),
                Int::from(-1),
                Int::from(-12),
            ],
            vec![Int::from(-5), Int::from(0), Int::from(0), Int::from(5)],
        ],
    )
    .unwrap();
    assert!(got.same_lattice(&original).unwrap());
}

#[test]
fn trivial_group_has_empty_equations() {
    let v = run_json(&["gens2eqs", "--input", &data("m_trivial.json")]);
    assert_eq!(v["equation_system"]["congruences"], serde_json::json!([]));
    assert_eq!(v["equation_system"]["equations"], serde_json::json!([]));
}

#[test]
fn identical_inputs_produce_identical_bytes() {
    let a = run(&["delta-star", "--input", &data("kernel_example.json")]);
    let b = run(&["delta-star", "--input", &data("kernel_example.json")]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dot_rendering_of_lattices() {
    let out = run(&[
        "dc",
        "--input",
        &data("simplicial_example.json"),
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches("label=").count(), 4);
    assert_eq!(dot.matches("->").count(), 4);

    // dot is not defined for scalar reports
    let out = run(&[
        "min-delta",
        "--input",
        &data("kernel_example.json"),
        "--format",
        "dot",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn exit_codes_and_error_stream() {
    // malformed JSON
    let tmp = std::env::temp_dir().join("deltastar_malformed.json");
    std::fs::write(&tmp, "{not json").unwrap();
    let out = run(&["rays", "--input", tmp.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert_eq!(stderr_error_code(&out), 2);

    // negative generator coordinate
    let tmp = std::env::temp_dir().join("deltastar_negative.json");
    std::fs::write(&tmp, r#"{"kind":"affine","generators":[["1","-2"]]}"#).unwrap();
    let out = run(&["rays", "--input", tmp.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    // modulus below 2
    let tmp = std::env::temp_dir().join("deltastar_modulus.json");
    std::fs::write(
        &tmp,
        r#"{"kind":"presentation","p":2,"congruences":[{"coeffs":["1","0"],"modulus":"1"}]}"#,
    )
    .unwrap();
    let out = run(&["eqs2gens", "--input", tmp.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    // both relation forms at once
    let tmp = std::env::temp_dir().join("deltastar_both.json");
    std::fs::write(
        &tmp,
        r#"{"kind":"presentation","p":2,"group_generators":[["1","0"]],"equations":[["1","1"]]}"#,
    )
    .unwrap();
    let out = run(&["eqs2gens", "--input", tmp.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    // non-reduced presentation on a length-based command
    let out = run(&["delta-star", "--input", &data("non_reduced.json")]);
    assert_eq!(exit_code(&out), 3);
    assert_eq!(stderr_error_code(&out), 3);

    // submonoid index out of range
    let out = run(&[
        "check-dc",
        "--input",
        &data("numerical_5_7.json"),
        "--submonoid",
        "3",
    ]);
    assert_eq!(exit_code(&out), 2);

    // a subset that is not divisor-closed is a precondition failure for
    // min-delta
    let out = run(&[
        "min-delta",
        "--input",
        &data("numerical_5_7.json"),
        "--submonoid",
        "2",
    ]);
    assert_eq!(exit_code(&out), 3);

    // missing required flag
    let out = run(&["factorizations", "--input", &data("numerical_5_7.json")]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn stdin_input_works() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_deltastar"))
        .args(["rays", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(br#"{"kind":"affine","generators":[[1,0],[1,2],[1,3],[1,7]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rays"], serde_json::json!([["1", "0"], ["1", "7"]]));
}
