use std::process::{Command, Output};

fn polynacci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polynacci"))
        .args(args)
        .env_remove("POLYNACCI_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_string).collect()
}

#[test]
fn terms_examples() {
    let o = polynacci(&["terms", "--m", "4", "--kind", "standard", "--from", "0", "--count", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o), ["4", "1", "3", "7"]);

    let o = polynacci(&["terms", "--m", "4", "--kind", "standard", "--from", "-3", "--count", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o), ["-1", "-1", "-1"]);
}

#[test]
fn terms_default_count() {
    assert_eq!(lines(&polynacci(&["terms", "--m", "3"])).len(), 20);
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        &["terms", "--m", "1", "--count", "3"][..],
        &["terms", "--m", "65"],
        &["terms", "--m", "3", "--count", "0"],
        &["terms", "--m", "3", "--format", "yaml"],
        &["roots", "--m", "3", "--tol", "-1"],
        &["verify-oeis", "--anumber", "B001644"],
        &["verify-oeis", "--bfile", "/nonexistent/b000000.txt", "--m", "3", "--kind", "standard"],
        &["selftest", "--max-m", "1"],
        &["nope"],
    ] {
        let o = polynacci(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn matrix_examples() {
    let o = polynacci(&["matrix", "--m", "3", "--power", "1"]);
    assert_eq!(lines(&o), ["[1, 1, 0]", "[1, 0, 1]", "[1, 0, 0]"]);
    let o = polynacci(&["matrix", "--m", "3", "--power", "0"]);
    assert_eq!(lines(&o), ["[1, 0, 0]", "[0, 1, 0]", "[0, 0, 1]"]);
    let o = polynacci(&["matrix", "--m", "2", "--inverse", "--power", "1"]);
    assert_eq!(lines(&o), ["[0, 1]", "[1, -1]"]);
    let o = polynacci(&["matrix", "--m", "2", "--inverse", "--power", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "0,1\n1,-1\n");
}

#[test]
fn selftest_examples() {
    let o = polynacci(&["selftest", "--max-m", "8", "--max-n", "30"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = polynacci(&["selftest", "--max-m", "2", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("m=2: c_1 and c_{m-1} are the same coefficient"), "{text}");
    assert!(text.contains("V-relation m=2"), "{text}");
}

#[test]
fn every_command_honors_format() {
    let commands: [&[&str]; 7] = [
        &["terms", "--m", "3", "--count", "5"],
        &["matrix", "--m", "3", "--power", "4"],
        &["ogf", "--m", "3", "--kind", "reflected"],
        &["chcoeffs", "--m", "4", "--n", "3"],
        &["roots", "--m", "4"],
        &["verify-oeis", "--anumber", "A073145"],
        &["selftest", "--max-m", "3", "--max-n", "6"],
    ];
    for args in commands {
        let text = polynacci(args);
        assert_eq!(text.status.code(), Some(0), "{args:?}");

        let json_args: Vec<&str> = args.iter().copied().chain(["--format", "json"]).collect();
        let a = polynacci(&json_args);
        let b = polynacci(&json_args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "json not deterministic for {args:?}");
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["command"], args[0]);
        assert!(v["parameters"].is_object() && !v["payload"].is_null());

        let csv_args: Vec<&str> = args.iter().copied().chain(["--format", "csv"]).collect();
        let c = polynacci(&csv_args);
        assert_eq!(c.status.code(), Some(0), "{args:?}");
        assert_ne!(c.stdout, text.stdout, "{args:?}");
    }
}

#[test]
fn terms_csv_and_json_shapes() {
    let o = polynacci(&["terms", "--m", "3", "--kind", "reflected", "--from", "-1", "--count", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "index,value\n-1,1\n0,3\n1,-1\n");

    let o = polynacci(&["terms", "--m", "3", "--from", "100", "--count", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["payload"]["terms"][0]["index"], 100);
    // beyond 2^64: carried as a string
    let value = v["payload"]["terms"][0]["value"].as_str().unwrap();
    assert!(value.len() > 20 && value.chars().all(|c| c.is_ascii_digit()));
}

#[test]
fn verify_oeis_with_bfile_and_env() {
    let dir = std::env::temp_dir().join(format!("polynacci-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b001644.txt");
    std::fs::write(&path, "# A001644 edited\n0 3\n1 1\n2 3\n3 7\n4 12\n").unwrap();

    let p = path.to_str().unwrap();
    let o = polynacci(&["verify-oeis", "--bfile", p, "--offset", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch at index 4"), "{}", stdout(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_polynacci"))
        .args(["verify-oeis", "--anumber", "A001644"])
        .env("POLYNACCI_FIXTURES", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));

    std::fs::write(&path, "# A001644\n0 3\n1 1\n2 3\n3 7\n4 11\n").unwrap();
    let o = polynacci(&["verify-oeis", "--bfile", p]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn chcoeffs_text() {
    let o = polynacci(&["chcoeffs", "--m", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let l = lines(&o);
    assert_eq!(&l[..3], ["c_1 = 3", "c_2 = -1", "c_3 = 1"]);
}
