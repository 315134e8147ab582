use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-exact")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn corpus_list() {
    let o = cli(&["corpus", "list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["kC2", "dual-kS3", "H4", "T5", "T2-F5", "dual-D-H4"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
    let o = cli(&["corpus", "list", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let h4 = v.as_array().unwrap().iter().find(|e| e["name"] == "H4").unwrap();
    assert_eq!(h4["expected"]["N"], 2);
    assert_eq!(h4["expected"]["L"], 2);
}

#[test]
fn verify_passes_and_reports_invariants() {
    let o = cli(&["verify", "corpus:T3", "--checks", "filtration,idempotents,annihilation,qexp", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let inv = &v[0]["invariants"];
    assert_eq!((inv["N"].as_u64(), inv["L"].as_u64(), inv["qexp"].as_u64()), (Some(3), Some(3), Some(3)));
}

#[test]
fn annihilation_refuses_without_dual_chevalley() {
    let o = cli(&["verify", "corpus:dual-D-H4", "--checks", "annihilation", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v[0]["checks"].as_array().unwrap();
    let ann = checks.iter().find(|c| c["name"] == "annihilation").unwrap();
    assert!(ann.to_string().contains("hypothesis: dual Chevalley"), "{ann}");
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let o = cli(&["verify", "corpus:H4", "corpus:dual-kS3", "--checks", "all", "--json"]);
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn failing_checks_set_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.hopf");
    let c2 = "hopf-format 1\nfield rational\ndim 2\nbasis 1 g\nunit 1 0\ncounit 1 1\n\
              mult 0 0 0 1\nmult 0 1 1 1\nmult 1 0 1 1\nmult 1 1 0 1\n\
              comult 0 0 0 1\ncomult 1 1 1 1\nantipode 0 0 1\nantipode 1 1 1\n";
    std::fs::write(&path, c2).unwrap();
    let o = cli(&["verify", path.to_str().unwrap(), "--checks", "axioms"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // g·g = g
    std::fs::write(&path, c2.replace("mult 1 1 0 1", "mult 1 1 1 1")).unwrap();
    let o = cli(&["verify", path.to_str().unwrap(), "--checks", "axioms"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("antipode"));
}

#[test]
fn constructions_write_parseable_files() {
    let dir = tempfile::tempdir().unwrap();
    for (cmd, target, dim) in [("dual", "corpus:H4", 4), ("double", "corpus:kC2", 4), ("smash", "corpus:H4", 8)] {
        let path = dir.path().join(format!("{cmd}.hopf"));
        let o = cli(&[cmd, target, "-o", path.to_str().unwrap()]);
        assert!(o.status.success(), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
        let h = hopf_exact::format::read_algebra(&path).unwrap();
        assert_eq!(h.dim, dim);
        let o = cli(&["verify", path.to_str().unwrap(), "--checks", "axioms"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
    }
}

#[test]
fn field_override() {
    let o = cli(&["dual", "corpus:kC2", "--field-override", "cyclotomic:4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("field cyclotomic 4"));
    let o = cli(&["dual", "corpus:kC2", "--field-override", "quaternions"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("noantipode.hopf");
    std::fs::write(&path, "hopf-format 1\nfield rational\ndim 1\nbasis 1\nunit 1\ncounit 1\nmult 0 0 0 1\ncomult 0 0 0 1\n")
        .unwrap();
    let o = cli(&["dual", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("antipode required"));

    let o = cli(&["verify", "corpus:T3", "--checks", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cli(&["verify", "corpus:nope"]);
    assert_eq!(o.status.code(), Some(2));
}
