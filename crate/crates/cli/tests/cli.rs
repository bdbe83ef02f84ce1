use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

struct Run {
    code: i32,
    stdout: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_valquiver"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
    }
}

fn ok(sub: &str, file: &str, rest: &[&str]) -> String {
    let path = data(file);
    let mut args = vec![sub, path.to_str().unwrap()];
    args.extend_from_slice(rest);
    let r = run(&args);
    assert_eq!(r.code, 0, "{sub} {file} {rest:?}: {}", r.stdout);
    r.stdout
}

fn fails(sub: &str, file: &str, rest: &[&str]) -> (i32, String) {
    let path = data(file);
    let mut args = vec![sub, path.to_str().unwrap()];
    args.extend_from_slice(rest);
    let r = run(&args);
    (r.code, r.stdout)
}

#[test]
fn validate_and_cartan() {
    assert_eq!(
        ok("validate", "b2.quiver", &[]),
        "ok=true\nsymmetrizer=1 2\nfinite_type=true\n"
    );
    assert_eq!(
        ok("validate", "kronecker.quiver", &[]),
        "ok=true\nsymmetrizer=1 1\nfinite_type=false\n"
    );
    assert_eq!(ok("cartan", "g2.quiver", &[]), "2 -3\n-1 2\n");
}

#[test]
fn words() {
    assert_eq!(
        ok("word-reduced", "b2.quiver", &["1", "2", "1", "2"]),
        "reduced=true\n"
    );
    assert_eq!(
        ok("word-reduced", "b2.quiver", &["1", "2", "1", "2", "1"]),
        "reduced=false\n"
    );
    assert_eq!(
        ok("word-reduced", "a2.quiver", &["1", "1"]),
        "reduced=false\n"
    );
    assert_eq!(
        ok(
            "word-length",
            "g2.quiver",
            &["1", "2", "1", "2", "1", "2", "1"]
        ),
        "length=5\n"
    );
    assert_eq!(ok("word-length", "kronecker.quiver", &[]), "length=0\n");
}

#[test]
fn sequences() {
    assert_eq!(
        ok("seq-validate", "kronecker.quiver", &["2", "1", "2"]),
        "admissible=true\nmultiplicity=1 2\n"
    );
    assert_eq!(
        ok("seq-canon", "kronecker.quiver", &["2", "1", "2"]),
        "2 1 | 2\n"
    );
    assert_eq!(ok("seq-canon", "a3_source.quiver", &["3", "1"]), "1 3\n");
    assert_eq!(
        ok(
            "seq-equiv",
            "a3_source.quiver",
            &["--left", "1", "3", "--right", "3", "1"]
        ),
        "equivalent=true\nsubsequence=true\n"
    );
    assert_eq!(
        ok(
            "seq-equiv",
            "kronecker.quiver",
            &["--left", "2", "--right", "2", "1"]
        ),
        "equivalent=false\nsubsequence=true\n"
    );
    assert_eq!(
        ok(
            "seq-meet",
            "a3_source.quiver",
            &["--left", "1", "--right", "3"]
        ),
        "\n"
    );
    assert_eq!(
        ok(
            "seq-join",
            "a3_source.quiver",
            &["--left", "1", "--right", "3"]
        ),
        "1 3\n"
    );
    assert_eq!(
        ok("seq-principal", "kronecker.quiver", &["2", "2"]),
        "2 1 2\n"
    );
    assert_eq!(
        ok("seq-principal", "kronecker.quiver", &["1", "1"]),
        "2 1\n"
    );
    assert_eq!(
        ok("seq-realizable", "kronecker.quiver", &["2", "1", "2"]),
        "realizable=true\n"
    );
    assert_eq!(
        ok("seq-realizable", "a2.quiver", &["2", "1", "2", "1"]),
        "realizable=false\n"
    );
}

#[test]
fn preprojectives() {
    assert_eq!(
        ok("preproj-dim", "kronecker.quiver", &["2", "1", "2"]),
        "2 : 0 1\n1 : 2 1\n2 : 2 3\ndim=2 3\n"
    );
    assert!(ok("preproj-dim", "a2.quiver", &["2", "1", "2", "1"]).ends_with("zero_at=1\n"));
    assert_eq!(
        ok("preproj-enum", "kronecker.quiver", &["--max-r", "2"]),
        "1 2 : dim 0 1\n1 1 : dim 1 2\n2 2 : dim 2 3\n2 1 : dim 3 4\n"
    );
    assert_eq!(
        ok("preproj-enum", "a3_linear.quiver", &["--max-r", "3"])
            .lines()
            .count(),
        6
    );
}

#[test]
fn coxeter_powers() {
    assert_eq!(
        ok("coxeter-powers", "kronecker.quiver", &["--perm", "2", "1", "--max-m", "3"]),
        "m=1 len=2 expected=2\nm=2 len=4 expected=4\nm=3 len=6 expected=6\nweyl_infinite_consistent=true\n"
    );
    let a2 = ok(
        "coxeter-powers",
        "a2.quiver",
        &["--perm", "1", "2", "--max-m", "3"],
    );
    assert!(a2.contains("m=2 len=2 expected=4\n"));
    assert!(a2.ends_with("weyl_infinite_consistent=true\n"));
}

#[test]
fn oracle_is_available_but_hidden() {
    assert_eq!(
        ok("oracle", "g2.quiver", &[]),
        "closure=finite order=12\nmax_length=6\n"
    );
    let help = run(&["--help"]);
    assert!(!help.stdout.contains("oracle"));
}

#[test]
fn module_errors_exit_one_with_their_code() {
    let cases: &[(&str, &str, &[&str], &str)] = &[
        ("seq-validate", "kronecker.quiver", &["1"], "NotASink"),
        (
            "seq-validate",
            "kronecker.quiver",
            &["5"],
            "VertexOutOfRange",
        ),
        ("seq-canon", "kronecker.quiver", &[], "EmptySequence"),
        ("preproj-dim", "kronecker.quiver", &[], "EmptySequence"),
        (
            "seq-principal",
            "unoriented.quiver",
            &["1", "1"],
            "UnorientedEdge",
        ),
        ("validate", "no_symmetrizer.quiver", &[], "NoSymmetrizer"),
        ("validate", "disconnected.quiver", &[], "Disconnected"),
        ("validate", "garbage.quiver", &[], "Syntax"),
        ("validate", "missing.quiver", &[], "Io"),
        (
            "coxeter-powers",
            "a2.quiver",
            &["--perm", "1", "1", "--max-m", "2"],
            "NotPermutation",
        ),
    ];
    for (sub, file, rest, code) in cases {
        let (exit, stdout) = fails(sub, file, rest);
        assert_eq!(exit, 1, "{sub} {file}");
        assert_eq!(stdout, format!("error={code}\n"), "{sub} {file}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["validate"]).code, 2);
    assert_eq!(fails("word-reduced", "a2.quiver", &["one"]).0, 2);
    assert_eq!(fails("preproj-enum", "a2.quiver", &[]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let a = ok("preproj-enum", "a3_source.quiver", &["--max-r", "4"]);
    let b = ok("preproj-enum", "a3_source.quiver", &["--max-r", "4"]);
    assert_eq!(a, b);
}
