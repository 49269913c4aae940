use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_arrcoh"));
    c.current_dir(env!("CARGO_MANIFEST_DIR"));
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn documented_invocations() {
    let (code, out, _) = run(&["propagate", "data/concurrent3.arr", "--prime", "5", "--exhaustive", "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["violations"], serde_json::json!([]));

    let (code, out, _) = run(&["poincare", "data/boolean2.arr"]);
    assert_eq!((code, out.as_str()), (0, "1 + 2t + t^2\n"));

    let (code, out, _) = run(&["orbit", "--g", "2", "--k", "0", "--n", "3", "--gamma", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("euler -24"));
    assert!(out.contains("duality yes\tabelian duality no\tdimension 4"));
}

#[test]
fn sampled_output_is_byte_identical() {
    let args = ["generic-vanish", "data/braid_essential3.arr", "--prime", "7", "--samples", "200", "--seed", "11", "--output", "json"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let other = run(&["generic-vanish", "data/braid_essential3.arr", "--prime", "7", "--samples", "200", "--seed", "12", "--output", "json"]).1;
    assert_ne!(a, other);
}

#[test]
fn every_command_runs() {
    for cmd in ["flats", "poincare", "nested", "gamma", "betti", "charvar", "propagate", "generic-vanish"] {
        for output in ["json", "table"] {
            let (code, out, err) = run(&[cmd, "data/generic3.arr", "--output", output]);
            assert_eq!(code, 0, "{cmd}: {err}");
            assert!(!out.is_empty());
            if output == "json" {
                let v: serde_json::Value = serde_json::from_str(&out).unwrap();
                assert_eq!(v["schema"], 1);
            }
        }
    }
    let (code, out, _) = run(&["toric", "data/three_subtori.tor", "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["polynomial"], "1 + 5t + 6t^2");
    assert_eq!(v["result"]["duality"]["euler"], 2);
}

#[test]
fn single_character_betti() {
    let (code, out, _) = run(&["betti", "data/concurrent3.arr", "--prime", "7", "--character", "2,4,1", "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"][0]["betti"], serde_json::json!([0, 1, 1]));
}

#[test]
fn errors_use_exit_code_one() {
    let (code, _, err) = run(&["flats", "data/missing.arr"]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"));
    assert_eq!(run(&["propagate", "data/generic3.arr", "--prime", "9"]).0, 1);
    assert_eq!(run(&["propagate", "data/generic3.arr", "--exhaustive", "--samples", "4", "--seed", "1"]).0, 1);
    assert_eq!(run(&["toric", "data/generic3.arr"]).0, 1);
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn data_files_round_trip() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        match path.extension().and_then(|e| e.to_str()) {
            Some("arr") => {
                let a = arrcoh::arrangement::parse_arrangement(&text).unwrap();
                assert_eq!(arrcoh::arrangement::parse_arrangement(&arrcoh::arrangement::to_text(&a)).unwrap(), a);
            }
            Some("tor") => {
                let t = arrcoh::toric::parse_toric(&text).unwrap();
                assert_eq!(arrcoh::toric::parse_toric(&arrcoh::toric::toric_to_text(&t)).unwrap(), t);
            }
            _ => {}
        }
    }
}
