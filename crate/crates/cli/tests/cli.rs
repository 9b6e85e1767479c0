use tubings::catalog;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tubings").chain(args.iter().copied());
    let code = tubings_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn fvector_of_the_pentagon() {
    assert_eq!(run(&["fvector", "path:3"]), (0, "5 5 1\n".into(), String::new()));
    assert_eq!(run(&["fvector", "complete:4"]).1, "24 36 14 1\n");
    assert_eq!(run(&["fvector", "A3"]).1, "5 5 1\n");
}

#[test]
fn euler_characteristics() {
    assert_eq!(run(&["euler", "A3"]).1, "-6\n");
    assert_eq!(run(&["euler", "B3"]).1, "-12\n");
}

#[test]
fn tubes_of_the_triangle() {
    let (code, out, _) = run(&["tubes", "complete:3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn output_is_deterministic() {
    for args in [&["tubings", "cycle:4"][..], &["poset", "star:3", "--json"], &["tile", "A3", "--json"], &["realize", "path:4"]] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn check_passes_on_small_graphs() {
    let dir = std::env::temp_dir().join(format!("tubings-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for n in 1..=5 {
        for (i, g) in catalog::connected_graphs(n).into_iter().enumerate() {
            let path = dir.join(format!("g{n}_{i}.txt"));
            std::fs::write(&path, g.to_text()).unwrap();
            let (code, out, err) = run(&["check", path.to_str().unwrap()]);
            assert_eq!(code, 0, "{}\n{out}{err}", g.to_text());
        }
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["fvector", "no-such-graph"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["euler", "affineA:2"]).0, 2);
    assert_eq!(run(&["divisors", "A4"]).0, 2);
    assert_eq!(run(&["fvector", "cycle:2"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, out, _) = run(&["tubings", "--allow-disconnected", "/dev/null"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn minimal_building_report() {
    let (code, out, _) = run(&["minA", "4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "0 4 5 10 5 10 -");
    assert_eq!(lines[2], "1 3 10 10 10 20 DISCREPANCY");
}

#[test]
fn coxeter_graph_round_trips() {
    let (_, out, _) = run(&["coxgraph", "affineA:2"]);
    assert_eq!(tubings::Graph::parse_text(&out).unwrap(), catalog::cycle(3).unwrap());
}

#[test]
fn realization_formats() {
    let (code, out, _) = run(&["realize", "path:3", "--off", "--digits", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("OFF\n5 1 5\n"));
    let (_, json, _) = run(&["realize", "path:3", "--json"]);
    assert!(json.contains("ambient_sum"));
    assert_eq!(run(&["realize", "path:5"]).0, 2);
}
