use cheeger::geometry::Body;
use cheeger::json::{OracleJson, ResultJson};
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn cheeger(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cheeger"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_disk() {
    let o = cheeger(&["solve", "--catalog", "disk"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r: ResultJson = serde_json::from_str(stdout(&o)).unwrap();
    assert!((r.h - 2.0).abs() < 1e-11);
    assert_eq!(r.h * r.s, 1.0);
    assert!(r
        .contacts
        .iter()
        .all(|c| c.kind == cheeger::solver::ContactKind::Boundary));
}

#[test]
fn solve_square_from_polygon_params() {
    let o = cheeger(&[
        "solve",
        "--catalog",
        "regular_polygon",
        "--param",
        "n=4",
        "--param",
        "circumradius=0.7071067811865476",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r: ResultJson = serde_json::from_str(stdout(&o)).unwrap();
    assert!((r.h - (2.0 + std::f64::consts::PI.sqrt())).abs() < 1e-9);
    let chain = r.cheeger_chain().unwrap();
    assert!((chain.area() - r.cheeger.area).abs() < 1e-12);
}

#[test]
fn reflex_vertex_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"kind":"polygon","vertices":[[0,0],[2,0],[1,0.5],[2,2],[0,2]]}"#,
    )
    .unwrap();
    let o = cheeger(&["solve", "--input", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("reflex vertex 2"), "{err}");
    assert_eq!(err.lines().count(), 1);
    assert!(stdout(&o).is_empty());
}

#[test]
fn unreadable_input_exits_1() {
    let o = cheeger(&["solve", "--input", "/nonexistent/body.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cheeger(&["solve", "--catalog", "disk", "--param", "side=2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn symmetry_reuleaux_pentagon() {
    let o = cheeger(&[
        "symmetry",
        "--catalog",
        "reuleaux_polygon",
        "--param",
        "k=5",
        "--k",
        "5",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o)).unwrap();
    assert_eq!(v["cheeger_regular"], Value::Bool(true));
    assert_eq!(v["dots"].as_array().unwrap().len(), 5);
    let contacts = v["edge_contacts"].as_array().unwrap();
    assert_eq!(contacts.len(), 5);
    assert!(contacts.iter().all(|c| c["touched"] == Value::Bool(true)));
}

#[test]
fn symmetry_rectangle_dots_at_far_corners() {
    let o = cheeger(&[
        "symmetry",
        "--catalog",
        "rectangle",
        "--param",
        "w=2",
        "--param",
        "h=1",
        "--k",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o)).unwrap();
    assert_eq!(v["cheeger_regular"], Value::Bool(true));
    let dots: Vec<(f64, f64)> = v["dots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| (d[0].as_f64().unwrap(), d[1].as_f64().unwrap()))
        .collect();
    assert_eq!(dots.len(), 2);
    assert!((dots[0].0 + dots[1].0).abs() < 1e-12 && (dots[0].1 + dots[1].1).abs() < 1e-12);
    for (x, y) in dots {
        assert!((x.abs() - 1.0).abs() < 1e-12 && (y.abs() - 0.5).abs() < 1e-12);
    }
}

#[test]
fn square_has_no_threefold_symmetry() {
    let o = cheeger(&[
        "symmetry",
        "--catalog",
        "regular_polygon",
        "--param",
        "n=4",
        "--k",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("residual"));
}

#[test]
fn symmetry_needs_k() {
    let o = cheeger(&["symmetry", "--catalog", "disk"]);
    assert_eq!(o.status.code(), Some(1));
}

fn oracle(shape: &str, n: usize) -> (Option<i32>, OracleJson) {
    let grid = n.to_string();
    let o = cheeger(&["oracle", "--catalog", shape, "--grid", &grid]);
    (o.status.code(), serde_json::from_str(stdout(&o)).unwrap())
}

#[test]
fn oracle_square_agrees_at_1024() {
    let (code, r) = oracle("rectangle", 1024);
    assert_eq!(code, Some(0));
    assert!(r.rel_err <= 0.02);
    assert_eq!(r.n, 1024);
}

#[test]
fn oracle_disk_at_512() {
    let (code, r) = oracle("disk", 512);
    assert!(r.rel_err <= 0.02);
    assert_eq!(code, Some(2));
}

#[test]
fn oracle_coarse_grid_is_nonzero_exit() {
    let (code, _) = oracle("rectangle", 64);
    assert_ne!(code, Some(0));
}

#[test]
fn oracle_pgm_dump() {
    let dir = tempfile::tempdir().unwrap();
    let pgm = dir.path().join("disk.pgm");
    let o = cheeger(&[
        "oracle",
        "--catalog",
        "disk",
        "--grid",
        "1024",
        "--pgm",
        path_str(&pgm),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let bytes = std::fs::read(&pgm).unwrap();
    assert!(bytes.starts_with(b"P5\n"));
    assert!(bytes.contains(&255));
}

#[test]
fn render_writes_layered_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("rect.svg");
    let o = cheeger(&[
        "render",
        "--catalog",
        "rectangle",
        "--param",
        "w=2",
        "--k",
        "2",
        "--svg",
        path_str(&svg),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    for id in [
        "id=\"body\"",
        "id=\"cheeger\"",
        "id=\"inner\"",
        "class=\"dot\"",
        "class=\"witness\"",
    ] {
        assert!(text.contains(id), "missing {id}");
    }
    assert!(text.contains(" A "));
}

#[test]
fn render_needs_svg_and_writable_path() {
    let o = cheeger(&["render", "--catalog", "disk"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cheeger(&[
        "render",
        "--catalog",
        "disk",
        "--svg",
        "/nonexistent/dir/x.svg",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn catalog_round_trip() {
    let list = cheeger(&["catalog"]);
    assert!(list.status.success());
    let dir = tempfile::tempdir().unwrap();
    for line in stdout(&list).lines() {
        let name = line.split_whitespace().next().unwrap();
        let o = cheeger(&["catalog", "--catalog", name]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
        let body = Body::from_json(stdout(&o)).unwrap();
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, stdout(&o)).unwrap();

        let direct = cheeger(&["solve", "--catalog", name]);
        let via_file = cheeger(&["solve", "--input", path_str(&path)]);
        let a: ResultJson = serde_json::from_str(stdout(&direct)).unwrap();
        let b: ResultJson = serde_json::from_str(stdout(&via_file)).unwrap();
        assert!((a.h - b.h).abs() <= 1e-12 * a.h, "{name}");
        assert!((body.chain.area() - a.area_omega).abs() < 1e-12, "{name}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["solve", "--catalog", "reuleaux_polygon", "--param", "k=7"][..],
        &["symmetry", "--catalog", "cut_corner_triangle", "--k", "3"][..],
        &["oracle", "--catalog", "capped_rectangle", "--grid", "1024"][..],
    ] {
        let a = cheeger(args);
        let b = cheeger(args);
        assert!(a.status.success(), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = cheeger(&["solve", "--catalog", "disk", "--json", path_str(&out)]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let r: ResultJson = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!((r.h - 2.0).abs() < 1e-11);
}
