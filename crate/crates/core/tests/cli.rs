use std::process::Command;

use slodowy::catalog::catalog_names;
use slodowy::cli::{run, CliOutput};
use slodowy::dump::{from_json, round_trip};

fn cli(args: &[&str]) -> CliOutput {
    run(std::iter::once("slodowy").chain(args.iter().copied()))
}

#[test]
fn series_t_in_o_all_methods() {
    let out = cli(&["series", "pair:T<O", "--order", "19", "--method", "all"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let want = "1+t^6+t^8+2t^12+t^14+t^16+2t^18";
    let lines: Vec<&str> = out.stdout.lines().filter(|l| l.ends_with(want)).collect();
    assert_eq!(lines.len(), 3, "{}", out.stdout);
    assert!(out.stdout.contains("closed_form: (1+t^12)/((1-t^6)(1-t^8))"));
}

#[test]
fn series_single_method_and_label() {
    let out = cli(&["series", "group:I", "--order", "21", "--method", "molien"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("molien: 1+t^12+t^20"), "{}", out.stdout);
    let out = cli(&["series", "C2<D2", "--label", "res1", "--order", "4", "--method", "det"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("label: res1"));
    let bad = cli(&["series", "C2<D2", "--label", "nope"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn verify_tcheb_passes() {
    let out = cli(&["verify", "tcheb"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn quiver_dot_for_g2_side() {
    let out = cli(&["quiver", "pair:D2<T", "--side", "rest", "--format", "dot"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("digraph"));
    assert_eq!(out.stdout.matches("[label=").count(), 3);
    assert_eq!(out.stdout.matches("\"res1\" -> \"res2\" [dir=forward]").count(), 3, "{}", out.stdout);
    let json = cli(&["quiver", "pair:D2<T", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn listings_and_char_table() {
    let groups = cli(&["list-groups"]);
    assert_eq!(groups.code, 0);
    assert!(groups.stdout.contains("I"));
    let pairs = cli(&["list-pairs"]);
    assert!(pairs.stdout.contains("T<O"));
    let table = cli(&["char-table", "T"]);
    assert_eq!(table.code, 0);
    assert_eq!(table.stdout, cli(&["char-table", "group:T"]).stdout);
}

#[test]
fn exit_codes() {
    let unknown = cli(&["series", "group:Z9"]);
    assert_eq!(unknown.code, 2);
    assert!(unknown.stderr.contains("T<O"), "catalog should be listed: {}", unknown.stderr);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["verify", "nonsense"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["series", "C3[1,1,1]", "--method", "closed"]).code, 2);
}

#[test]
fn binary_matches_library_and_is_deterministic() {
    let args = ["series", "pair:D2<T", "--order", "30"];
    let a = Command::new(env!("CARGO_BIN_EXE_slodowy")).args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_slodowy")).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8(a.stdout).unwrap(), cli(&args).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_slodowy")).args(["dump", "pair:X<Y"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn dump_round_trips_for_whole_catalog() {
    for name in catalog_names() {
        let out = cli(&["dump", &name, "--format", "json"]);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        assert!(round_trip(&out.stdout).unwrap(), "{name}");
        assert_eq!(out.stdout, cli(&["dump", &name, "--format", "json"]).stdout, "{name}");
        let d = from_json(&out.stdout).unwrap();
        assert_eq!(d.target.to_string(), name);
    }
}
