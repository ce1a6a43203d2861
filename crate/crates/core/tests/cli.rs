use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cspcrit")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn critical_d8() {
    let (code, out) = run(&["critical", "D8"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().starts_with("verdict Critical"));
}

#[test]
fn family_three_seven() {
    assert_eq!(run(&["family", "3", "7"]), (0, "true\n".to_string()));
    assert_eq!(run(&["family", "3", "5"]), (0, "false\n".to_string()));
    assert_eq!(run(&["family", "1", "3", "7"]).1, "true\n");
    assert_eq!(run(&["family", "2", "5", "8", "4"]).1, "true\n");
    assert_eq!(run(&["family", "3"]).0, 1);
    assert_eq!(run(&["family", "4", "7"]).0, 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"]).0, 1);
    assert_eq!(run(&["critical", "NoSuchGroup"]).0, 1);
    assert_eq!(run(&["decompose", "SL25", "--bound", "60"]).0, 3);

    let dir = std::env::temp_dir().join(format!("cspcrit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.grp");
    std::fs::write(&bad, "group X degree 3\ngen 2 2 1\nend\n").unwrap();
    assert_eq!(run(&["critical", &format!("{}#X", bad.display())]).0, 2);
    assert_eq!(run(&["scan", "--file", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn decompose_from_file_and_spec_agree() {
    let dir = std::env::temp_dir().join(format!("cspcrit-dec-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("d8.grp");
    // D8 on the square's vertices
    std::fs::write(&f, "group D8 degree 4\ngen 2 3 4 1\ngen 4 3 2 1\nend\n").unwrap();
    let (code, from_file) = run(&["decompose", "--format", "tsv", &format!("{}#D8", f.display())]);
    assert_eq!(code, 0);
    let (_, from_spec) = run(&["decompose", "--format", "tsv", "D8"]);
    let strip = |s: &str| s.lines().map(|l| l.split_once('\t').unwrap().1.to_string()).collect::<Vec<_>>();
    assert_eq!(strip(&from_file), strip(&from_spec));
    let (_, text) = run(&["decompose", "dihedral(8)"]);
    assert!(text.contains("4 x Q\n"));
    assert!(text.contains("1 x M2(Q)  [M1( cyclic(Q(zeta_4)/Q, a=1) )]"));
}

#[test]
fn scan_is_stable_across_jobs() {
    let dir = std::env::temp_dir().join(format!("cspcrit-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("small.grp");
    let text = "group D6 degree 3\ngen 2 3 1\ngen 1 3 2\nend\n\
                group C6 degree 5\ngen 2 3 1 5 4\nend\n\
                group D8 degree 4\ngen 2 3 4 1\ngen 4 3 2 1\nend\n";
    std::fs::write(&f, text).unwrap();
    let (c1, one) = run(&["scan", "--file", f.to_str().unwrap(), "--jobs", "1"]);
    let (c4, four) = run(&["scan", "--file", f.to_str().unwrap(), "--jobs", "4"]);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
    assert!(one.starts_with("L=2 R=2\n"));
}

#[test]
fn catalog_lists_named_groups() {
    let (code, out) = run(&["catalog", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("SL29\t720\t")));
}

#[test]
fn ssp_listing() {
    let (code, out) = run(&["ssp", "C5semiC8"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with(" pass")).count(), 6);
}
