use std::process::{Command, Output};

use serde_json::Value;

fn bsymbols(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsymbols")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = bsymbols(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn irr_lists_five_characters_of_b2() {
    let doc = json(&["irr", "--n", "2", "--r", "1", "--format", "json"]);
    let mut b: Vec<u64> = doc["characters"].as_array().unwrap().iter().map(|c| c["b"].as_u64().unwrap()).collect();
    b.sort_unstable();
    assert_eq!(b, vec![0, 1, 2, 2, 4]);

    let text = stdout(&bsymbols(&["irr", "--n", "2", "--r", "1"]));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 5);
}

#[test]
fn nonintegral_ratio_gives_singletons() {
    let doc = json(&["constructible", "--n", "3", "--r", "nonintegral", "--format", "json"]);
    let chars = doc["characters"].as_array().unwrap();
    assert_eq!(chars.len(), 10);
    assert!(chars.iter().all(|c| c["constituents"].as_array().unwrap().len() == 1 && c["family"].is_null()));
    assert_eq!(doc["r"], "nonintegral");
}

#[test]
fn constructible_b2_has_four_characters() {
    let doc = json(&["constructible", "--n", "2", "--r", "1", "--format", "json"]);
    let sizes: Vec<usize> =
        doc["characters"].as_array().unwrap().iter().map(|c| c["constituents"].as_array().unwrap().len()).collect();
    assert_eq!(sizes.len(), 4);
    assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 2);
}

#[test]
fn families_b2_minimal_members() {
    let doc = json(&["families", "--n", "2", "--r", "1", "--format", "json"]);
    let mut b: Vec<u64> = doc["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            let at = f["members"].as_array().unwrap().iter().position(|m| m == &f["minimal"]).unwrap();
            f["b"][at].as_u64().unwrap()
        })
        .collect();
    b.sort_unstable();
    assert_eq!(b, vec![0, 1, 4]);
}

/// Text rendering of a JSON bipartition, e.g. `((1,1),())`.
fn render(bip: &Value) -> String {
    let row = |v: &Value| v.as_array().unwrap().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    format!("(({}),({}))", row(&bip["first"]), row(&bip["second"]))
}

#[test]
fn text_and_json_carry_the_same_rows() {
    let n_r = ["--n", "4", "--r", "2"];
    let with = |cmd: &str, extra: &[&str]| -> Vec<String> {
        std::iter::once(cmd.to_string()).chain(n_r.iter().chain(extra).map(|s| s.to_string())).collect()
    };
    let run_json = |cmd: &str| {
        let args = with(cmd, &["--format", "json"]);
        json(&args.iter().map(String::as_str).collect::<Vec<_>>())
    };
    let run_text = |cmd: &str| {
        let args = with(cmd, &[]);
        let text = stdout(&bsymbols(&args.iter().map(String::as_str).collect::<Vec<_>>()));
        text.lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect::<Vec<_>>()
    };

    let doc = run_json("irr");
    let lines = run_text("irr");
    let chars = doc["characters"].as_array().unwrap();
    assert_eq!(lines.len(), chars.len());
    for (c, line) in chars.iter().zip(&lines) {
        assert!(line.starts_with(&render(&c["bipartition"])), "{line}");
        assert!(line.ends_with(&format!("b={}", c["b"])), "{line}");
    }

    let doc = run_json("constructible");
    let lines = run_text("constructible");
    let chars = doc["characters"].as_array().unwrap();
    assert_eq!(lines.len(), chars.len());
    for (c, line) in chars.iter().zip(&lines) {
        let list: Vec<String> = c["constituents"].as_array().unwrap().iter().map(render).collect();
        assert!(line.starts_with(&format!("{}\t", list.join(" + "))), "{line}");
        assert!(line.contains(&format!("minimal={}", render(&c["minimal"]))), "{line}");
    }

    let doc = run_json("families");
    let lines = run_text("families");
    let families = doc["families"].as_array().unwrap();
    assert_eq!(lines.len(), families.len());
    for (f, line) in families.iter().zip(&lines) {
        assert!(line.contains(&format!("minimal={}", render(&f["minimal"]))), "{line}");
        for (m, b) in f["members"].as_array().unwrap().iter().zip(f["b"].as_array().unwrap()) {
            assert!(line.contains(&format!("{}:{b}", render(m))), "{line}");
        }
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("bsymbols-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("families.json");
    let out = bsymbols(&["families", "--n", "3", "--r", "2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    let direct = bsymbols(&["families", "--n", "3", "--r", "2", "--format", "json"]).stdout;
    assert_eq!(written, direct);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_small_bounds_passes() {
    let out = bsymbols(&["verify", "--n-max", "3", "--r-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    let doc = json(&["verify", "--n-max", "3", "--r-max", "2", "--format", "json"]);
    assert_eq!(doc["passed"], true);
}

#[test]
fn counterexample_search() {
    let doc = json(&["counterexample", "--n", "3", "--r-max", "4", "--format", "json"]);
    assert!(!doc["witness"].is_null());
    let doc = json(&["counterexample", "--n", "2", "--r-max", "1", "--format", "json"]);
    assert!(doc["witness"].is_null());
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["irr"],
        &["irr", "--n", "2", "--r", "0"],
        &["irr", "--n", "2", "--r", "half"],
        &["irr", "--n", "2", "--format", "xml"],
        &["verify", "--n-max", "0"],
        &["frobnicate"],
        &["irr", "--n", "20"],
    ];
    for args in cases {
        let out = bsymbols(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_is_deterministic() {
    let a = bsymbols(&["constructible", "--n", "4", "--r", "3", "--format", "json"]).stdout;
    let b = bsymbols(&["constructible", "--n", "4", "--r", "3", "--format", "json"]).stdout;
    assert_eq!(a, b);
}
