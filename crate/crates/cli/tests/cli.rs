use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn cubica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubica")).args(args).current_dir(root()).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

/// Whitespace splitting with single-quoted words.
fn words(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut any = false;
    for c in line.chars() {
        match c {
            '\'' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        out.push(cur);
    }
    out
}

struct Example {
    args: Vec<String>,
    exit: i32,
    expect: Vec<String>,
}

fn readme_examples() -> Vec<Example> {
    let text = std::fs::read_to_string(root().join("README.md")).expect("README");
    let mut out = Vec::new();
    let mut in_block = false;
    let mut cur: Option<Example> = None;
    for line in text.lines() {
        if line.starts_with("```") {
            in_block = line == "```console";
            out.extend(cur.take());
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ cubica ") {
            out.extend(cur.take());
            cur = Some(Example { args: words(cmd), exit: 0, expect: Vec::new() });
        } else if let Some(code) = line.strip_prefix("# exit ") {
            cur.as_mut().expect("exit after a command").exit = code.parse().expect("exit code");
        } else if !line.trim().is_empty() {
            cur.as_mut().expect("output after a command").expect.push(line.trim().to_string());
        }
    }
    out
}

#[test]
fn readme_examples_run() {
    let examples = readme_examples();
    assert!(examples.len() >= 10);
    for ex in examples {
        let args: Vec<&str> = ex.args.iter().map(String::as_str).collect();
        let o = cubica(&args);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(ex.exit), "cubica {args:?}\n{out}{}", String::from_utf8_lossy(&o.stderr));
        for e in &ex.expect {
            assert!(out.contains(e.as_str()), "cubica {args:?}: missing {e:?} in\n{out}");
        }
    }
}

#[test]
fn klein_certificate_json() {
    let o = cubica(&["klein-certify", "--primes", "101,32003"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"]["status"], "certified");
    assert_eq!(v["consistent_across_primes"], true);
    for pc in v["primes"].as_array().unwrap() {
        assert_eq!(pc["hessian_degree"], 5);
        assert_eq!(pc["b_singular_points"]["distinct"], 60);
    }
}

#[test]
fn lines_through_the_klein_point() {
    let o = cubica(&["lines-through", "--cubic", "fixtures/klein.json", "--point", "1,0,0,0,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mults: Vec<u64> = v["fiber"].as_array().unwrap().iter().map(|f| f["mult"].as_u64().unwrap()).collect();
    assert_eq!(mults.iter().sum::<u64>(), 6);
    assert_eq!(v["on_hessian"], true);
}

#[test]
fn skew_witness_is_reported() {
    let args = ["special-position", "--lines", "fixtures/three_skew.json", "--trials", "64", "--seed", "7"];
    let o = cubica(&args);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "NotSpecial");
    assert_eq!(v["sampler"]["trials"], 64);
    assert_eq!(v["sampler"]["witness"]["basis"].as_array().unwrap().len(), 3);
    let mut strict = args.to_vec();
    strict.push("--expect-special");
    assert_eq!(cubica(&strict).status.code(), Some(1));
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["special-position", "--lines", "fixtures/three_skew.json", "--seed", "11"][..],
        &["fiber", "--cubic", "builtin:klein", "--line", "1,0,0,0,0;0,0,1,0,0", "--trials", "3", "--seed", "5"][..],
        &["transversals", "--lines", "fixtures/skew_p3.json", "--seed", "2"][..],
    ] {
        let a = cubica(args);
        let b = cubica(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn input_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("cubica-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"lines\": [").unwrap();
    let bad = bad.to_str().unwrap();
    for args in [
        &["no-such-command"][..],
        &["cb-rank", "--lines", bad][..],
        &["hessian"][..],
        &["hessian", "--cubic", "builtin:cayley"][..],
        &["hessian", "--cubic", "x0^2"][..],
        &["hessian", "--cubic", "builtin:klein", "--field", "fp:91"][..],
        &["lines-through", "--cubic", "builtin:klein", "--point", "1,0,0,0,0", "--field", "qq"][..],
        &["lines-through", "--cubic", "builtin:klein", "--point", "1,1,0,0,0"][..],
        &["classify-line", "--cubic", "builtin:klein", "--line", "1,0,0,0,0;0,1,0,0,0"][..],
        &["klein-certify", "--primes", "101"][..],
        &["special-position", "--lines", "1,0,0,0,0;0,1,0,0,0"][..],
    ] {
        assert_eq!(cubica(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn pair_cap_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_cubica"))
        .args(["smooth-check", "--cubic", "builtin:klein"])
        .env("CUBICA_PAIR_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn fermat_is_not_applicable() {
    let o = cubica(&["klein-certify", "--cubic", "builtin:fermat", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NOT APPLICABLE"));
}

#[test]
fn quoted_words() {
    assert_eq!(words("a 'b c' d"), vec!["a", "b c", "d"]);
}
