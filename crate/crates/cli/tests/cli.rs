//! End-to-end tests of the binary: exit codes, output determinism, the
//! resource guard, and the ideal-table cache.

use std::process::Command;

fn weylpi(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_weylpi"))
        .args(args)
        .env_remove("WEYLPI_CACHE_DIR")
        .output()
        .expect("binary runs")
}

#[test]
fn verify_a2_exits_zero() {
    let out = weylpi(&["verify", "A", "2", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("bijections"));
    assert!(text.contains("Pass"));
    assert!(!text.contains("Fail"));
}

#[test]
fn verify_json_schema_fields() {
    let out = weylpi(&["verify", "A", "2", "--suite", "labelling", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = &v.as_array().unwrap()[0];
    assert_eq!(r["check"], "labelling");
    assert_eq!(r["type"], "A");
    assert_eq!(r["rank"], 2);
    assert_eq!(r["status"], "pass");
    assert!(r.get("elapsed_ms").is_some());
}

#[test]
fn lattice_dot_is_deterministic_and_sized() {
    let a = weylpi(&["lattice", "A", "2", "--labels", "layer", "--format", "dot"]);
    let b = weylpi(&["lattice", "A", "2", "--labels", "layer", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    assert_eq!(text.matches("label=").count(), 6 + 6); // 6 nodes + 6 arrows
    assert_eq!(text.matches(" -> ").count(), 6);
}

#[test]
fn lattice_a1_json_is_a_chain() {
    let out = weylpi(&["lattice", "A", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);
    assert_eq!(v["covers"].as_array().unwrap().len(), 1);
}

#[test]
fn lattice_a3_arrow_count() {
    let out = weylpi(&["lattice", "A", "3", "--labels", "jirr", "--format", "dot"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches(" -> ").count(), 36);
    // 24 nodes
    assert_eq!(text.matches(";\n").count(), 24 + 36 + 1);
}

#[test]
fn sfpoly_export_works() {
    let out = weylpi(&["lattice", "A", "2", "--quiver", "sfpoly"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    // the hexagon contributes two opposite pairs
    assert_eq!(text.matches(" -> ").count(), 4);
}

#[test]
fn forcing_a3_has_eleven_vertices() {
    let out = weylpi(&["forcing", "A", "3"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("label=").count(), 11);
    assert_eq!(text.matches(" -> ").count(), 16);
    let json = weylpi(&["forcing", "A", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 11);
}

#[test]
fn arrays_d4_lists_all_44() {
    let out = weylpi(&["arrays", "D", "4", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("# J(").count(), 44);
    // text boxes carry the fused fork cells
    let out = weylpi(&["arrays", "D", "4", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("3 2 1/-1 -2 -3"));
    assert!(text.contains("closure AlphaBeta10"));
}

#[test]
fn usage_and_resource_exit_codes() {
    // bad rank: usage error (exit 2)
    let out = weylpi(&["lattice", "D", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // E is recognized but unsupported: usage error
    let out = weylpi(&["arrays", "E", "6"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown check name
    let out = weylpi(&["verify", "A", "2", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // beyond desk scale: resource guard (exit 3)
    let out = weylpi(&["lattice", "A", "9"]);
    assert_eq!(out.status.code(), Some(3));
    let out = weylpi(&["verify", "D", "7"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn threads_flag_gives_identical_report() {
    let one = weylpi(&["verify", "A", "2", "--threads", "1", "--format", "json"]);
    let four = weylpi(&["verify", "A", "2", "--threads", "4", "--format", "json"]);
    // elapsed times differ; compare check/status sequences
    let strip = |bytes: &[u8]| -> Vec<(String, String)> {
        let v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        v.as_array()
            .unwrap()
            .iter()
            .map(|r| {
                (
                    r["check"].as_str().unwrap().to_string(),
                    r["status"].as_str().unwrap().to_string(),
                )
            })
            .collect()
    };
    assert_eq!(strip(&one.stdout), strip(&four.stdout));
}

#[test]
fn ideal_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("weylpi-cache-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |_: &str| {
        Command::new(env!("CARGO_BIN_EXE_weylpi"))
            .args(["module", "A", "2", "--which", "layers"])
            .env("WEYLPI_CACHE_DIR", &dir)
            .output()
            .expect("binary runs")
    };
    let first = run("cold");
    assert_eq!(first.status.code(), Some(0));
    assert!(dir.join("ideals-A2-v1.json").exists());
    let second = run("warm");
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn module_dump_round_trips() {
    let out = weylpi(&["module", "A", "2", "--which", "jirr"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 4);
    for item in items {
        assert!(item["module"]["dims"].is_array());
    }
}
