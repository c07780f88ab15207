//! Parsing a spec file and producing the JSON report the binary prints.

use lclab::cli::{parse_spec_str, run_to_string};

const SPEC: &str = r#"{
  "deg0_vars": ["Y1", "Y2"],
  "deg1_vars": ["X1"],
  "generators": ["Y1*Y2", "Y1*X1"]
}"#;

fn main() {
    let (_, ideal) = parse_spec_str(SPEC).unwrap();
    println!("parsed {ideal}");

    let path = std::env::temp_dir().join("lclab-spec-example.json");
    std::fs::write(&path, SPEC).unwrap();
    let path = path.to_string_lossy().into_owned();
    let (code, out, _) = run_to_string(["lclab", "pattern", &path, "--json"]);
    println!("exit {code}\n{out}");
    let (code, _, err) = run_to_string(["lclab", "dim", &path, "-i", "1", "-n", "0"]);
    println!("exit {code}: {err}");
}
