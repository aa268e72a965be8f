use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use rc2::{generate_family, parse_edge_list, Family};

fn rc2(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rc2"));
    cmd.args(args)
        .env_remove("RC2_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn gen(family: &str, params: &str) -> String {
    let o = rc2(&["gen", "--family", family, "--params", params], "", &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    stdout(&o)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn theta_pipes_into_color() {
    let o = rc2(&["color"], &gen("theta", "2,2,2"), &[]);
    assert_eq!(stdout(&o), "colors=4 strategy=ear_induction\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cycle_uses_n_colors() {
    let o = rc2(&["color"], &gen("cycle", "5"), &[]);
    assert_eq!(stdout(&o), "colors=5 strategy=cycle\n");
}

#[test]
fn not_two_connected_exits_2() {
    let path = scratch("not_2conn.edges");
    std::fs::write(&path, "0 1\n1 2\n2 0\n2 3\n").unwrap();
    let o = rc2(&["color", "--input", path.to_str().unwrap()], "", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotTwoConnected"), "{}", stderr(&o));
}

#[test]
fn malformed_input_exits_2() {
    let o = rc2(&["color"], "0 1\n1\n", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = rc2(&["gen", "--family", "petersen"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_round_trips() {
    for (family, params, fam) in [
        ("theta", "2,3,4", Family::Theta(2, 3, 4)),
        ("wheel", "7", Family::Wheel(7)),
        ("complete_bipartite", "3,4", Family::CompleteBipartite(3, 4)),
    ] {
        let text = gen(family, params);
        let path = scratch(&format!("{family}.edges"));
        std::fs::write(&path, &text).unwrap();
        let back = parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back, generate_family(&fam, 0).unwrap());
    }
    let seeded = |seed: &str| {
        rc2(
            &[
                "gen", "--family", "random", "--params", "10,3", "--seed", seed,
            ],
            "",
            &[],
        )
        .stdout
    };
    assert_eq!(seeded("5"), seeded("5"));
}

#[test]
fn color_then_verify_passes() {
    for (family, params) in [
        ("theta", "3,3,4"),
        ("wheel", "8"),
        ("complete", "5"),
        ("random", "11,4"),
        ("cycle", "6"),
    ] {
        let edges = scratch(&format!("v-{family}.edges"));
        let json = scratch(&format!("v-{family}.json"));
        std::fs::write(&edges, gen(family, params)).unwrap();
        let o = rc2(
            &[
                "color",
                "--input",
                edges.to_str().unwrap(),
                "--out",
                json.to_str().unwrap(),
            ],
            "",
            &[],
        );
        assert!(o.status.success());
        let o = rc2(
            &[
                "verify",
                "--input",
                edges.to_str().unwrap(),
                "--coloring",
                json.to_str().unwrap(),
            ],
            "",
            &[],
        );
        assert_eq!(o.status.code(), Some(0), "{family}: {}", stderr(&o));
        assert!(stdout(&o).contains("\"passed\":true"));
    }
}

#[test]
fn flattened_coloring_fails_verification() {
    let edges = scratch("flat.edges");
    let json = scratch("flat.json");
    std::fs::write(&edges, gen("theta", "2,2,3")).unwrap();
    rc2(
        &[
            "color",
            "--input",
            edges.to_str().unwrap(),
            "--out",
            json.to_str().unwrap(),
        ],
        "",
        &[],
    );
    let text = std::fs::read_to_string(&json).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    for e in doc["edges"].as_array_mut().unwrap() {
        e["color"] = 0.into();
    }
    std::fs::write(&json, doc.to_string()).unwrap();
    let o = rc2(
        &[
            "verify",
            "--input",
            edges.to_str().unwrap(),
            "--coloring",
            json.to_str().unwrap(),
        ],
        "",
        &[],
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn trace_output_is_deterministic() {
    let input = gen("random", "12,4");
    let run = |name: &str| {
        let json = scratch(name);
        let dot = scratch(&format!("{name}.dot"));
        let o = rc2(
            &[
                "color",
                "--out",
                json.to_str().unwrap(),
                "--dot",
                dot.to_str().unwrap(),
                "--trace",
            ],
            &input,
            &[],
        );
        assert!(o.status.success(), "{}", stderr(&o));
        (std::fs::read(json).unwrap(), std::fs::read(dot).unwrap())
    };
    let (a, da) = run("det-a.json");
    let (b, db) = run("det-b.json");
    assert_eq!(a, b);
    assert_eq!(da, db);
    let doc: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert!(doc.get("trace").is_some() || doc["strategy"] != "ear_induction");
    assert!(String::from_utf8(da).unwrap().contains("label=\"0\""));
}

#[test]
fn minimalize_and_decompose() {
    let o = rc2(&["minimalize"], &gen("complete", "4"), &[]);
    assert_eq!(stdout(&o), "0 2\n0 3\n1 2\n1 3\n");
    let o = rc2(&["decompose"], &gen("theta", "2,2,2"), &[]);
    assert_eq!(stdout(&o), "{\"base\":[0,2,1,3],\"ears\":[[0,4,1]]}\n");
    let o = rc2(&["decompose"], &gen("complete", "4"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotMinimal"));
}

#[test]
fn oracle_and_budget() {
    let c4 = gen("cycle", "4");
    assert!(stdout(&rc2(&["oracle"], &c4, &[])).starts_with("rc2=4 "));
    assert!(stdout(&rc2(&["oracle", "--max-colors", "3"], &c4, &[])).starts_with("rc2>3 "));
    let o = rc2(&["oracle"], &c4, &[("RC2_BUDGET", "3")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("BudgetExceeded"));
    let o = rc2(&["oracle", "--budget", "100"], &c4, &[("RC2_BUDGET", "3")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn census_csv() {
    let o = rc2(&["census", "--n", "3"], "", &[]);
    assert_eq!(
        stdout(&o),
        "graph_id,n,m,edges,rc2_exact,rc2_constructive,is_cycle\n7,3,3,0-1;0-2;1-2,3,3,true\n"
    );
    let o = rc2(&["census", "--n", "4"], "", &[]);
    assert_eq!(stdout(&o).lines().count(), 11);
    assert!(stdout(&o).contains(",0-1;0-2;0-3;1-2;1-3;2-3,2,3,false"));
}
