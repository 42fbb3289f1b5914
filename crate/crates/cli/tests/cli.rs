use std::process::Command;

fn qthook(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qthook")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn passing_runs_exit_zero() {
    let (code, out, _) = qthook(&["verify", "gansner", "--shape", "1", "--deg", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"));
    let (code, _, _) = qthook(&["verify", "main_b", "--shifted", "2,1", "--deg", "5"]);
    assert_eq!(code, 0);
    let (code, _, _) = qthook(&["verify", "conjecture", "--tree", "(a(b)(c))", "--qt", "1/3,-2/5", "--deg", "4"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "nonsense"][..],
        &["verify", "main_a", "--shifted", "2,1"],
        &["verify", "main_a", "--shape", "2,3"],
        &["verify", "main_b", "--shifted", "2,1", "--qt", "1,1/2"],
        &["verify", "main_b", "--shifted", "2,1", "--trials", "0"],
        &["verify", "gansner", "--shape", "2", "--dk1", "3"],
        &["verify", "conjecture", "--poset", "/nonexistent/poset.json"],
        &["frobnicate"],
    ] {
        let (code, _, err) = qthook(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn json_reports_are_reproducible() {
    let dir = std::env::temp_dir().join(format!("qthook-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let paths = [dir.join("a.json"), dir.join("b.json")];
    for p in &paths {
        let (code, _, _) = qthook(&[
            "verify", "refined", "--shifted", "3,1", "--deg", "5", "--seed", "9", "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let a = std::fs::read_to_string(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read_to_string(&paths[1]).unwrap());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(v.get("first_mismatch").is_none());
    assert_eq!(v["trials"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn poset_files_are_accepted() {
    let dir = std::env::temp_dir().join(format!("qthook-poset-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("diamond.json");
    std::fs::write(
        &path,
        r#"{"elements": ["b", "x", "y", "t"], "covers": [["b", "x"], ["b", "y"], ["x", "t"], ["y", "t"]]}"#,
    )
    .unwrap();
    let (code, out, err) = qthook(&["verify", "conjecture", "--poset", path.to_str().unwrap(), "--deg", "5"]);
    assert_eq!(code, 0, "{out}{err}");
    std::fs::write(&path, r#"{"elements": ["a"], "covers": [["a", "q"]]}"#).unwrap();
    let (code, _, err) = qthook(&["verify", "conjecture", "--poset", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("covers[0]"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}
