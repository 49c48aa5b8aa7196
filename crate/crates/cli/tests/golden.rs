//! Golden transcripts for both binaries: stdout is byte-matched and exit
//! codes are pinned, including the error paths.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fr"))
        .args(args)
        .output()
        .expect("spawn fr")
}

fn nest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nest"))
        .args(args)
        .output()
        .expect("spawn nest")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn assert_golden(out: &Output, code: i32, stdout: &str) {
    assert_eq!(out.status.code(), Some(code), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), stdout);
}

#[test]
fn fr_normalize_keeps_canonical_terms() {
    let out = fr(&["normalize", "3 + 2*eps(1/2) - eps(1)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":\"3 + 2*eps(1/2) - eps(1)\",\"witness\":null,\"detail\":\"canonical form\"}\n",
    );
}

#[test]
fn fr_normalize_drops_little_oh() {
    let out = fr(&["normalize", "3 + eps(6/5)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":\"3\",\"witness\":null,\"detail\":\"canonical form\"}\n",
    );
}

#[test]
fn fr_cmp_infinitesimals() {
    assert_golden(&fr(&["cmp", "eps(1/2)", "eps(1/3)"]), 0, "LT\n");
    assert_golden(&fr(&["cmp", "3 + eps(1)", "3"]), 0, "GT\n");
    assert_golden(&fr(&["cmp", "1 + eps(6/5)", "1"]), 0, "EQ\n");
}

#[test]
fn fr_sort_orders_ascending() {
    let out = fr(&["sort", "1", "eps(1/2)", "0", "1 - eps(1)"]);
    assert_golden(&out, 0, "0\neps(1/2)\n1 - eps(1)\n1\n");
}

#[test]
fn fr_st_reads_standard_part() {
    let out = fr(&["st", "5 + 3*eps(1/2)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":\"5\",\"witness\":null,\"detail\":\"standard part\"}\n",
    );
}

#[test]
fn fr_monad_membership() {
    let out = fr(&["monad", "5", "5 + 3*eps(1/2)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":true,\"witness\":\"5\",\"detail\":\"standard part of '5 + 3*eps(1/2)' against 5\"}\n",
    );
    let out = fr(&["monad", "1", "eps(1/2)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":false,\"witness\":\"0\",\"detail\":\"standard part of 'eps(1/2)' against 1\"}\n",
    );
}

#[test]
fn fr_oracle_cmp_default_grid() {
    let out = fr(&["oracle-cmp", "eps(1/2)", "eps(1/3)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":\"LT\",\"witness\":[\"t=1/1000000000000: LT\",\"t=1/100000000000: LT\",\"t=1/10000000000: LT\"],\"detail\":\"numeric sign of (eps(1/3)) - (eps(1/2))\"}\n",
    );
}

#[test]
fn fr_oracle_cmp_grid_override() {
    let out = fr(&["oracle-cmp", "--grid", "4,8", "--probes", "2", "0", "eps(1)"]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":\"LT\",\"witness\":[\"t=1/100000000: LT\",\"t=1/10000: LT\"],\"detail\":\"numeric sign of (eps(1)) - (0)\"}\n",
    );
}

#[test]
fn fr_converge_cases() {
    let out = fr(&["converge", &fixture("converge_true.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":true,\"witness\":\"1\",\"detail\":\"eventually-constant tail against limit 1\"}\n",
    );
    let out = fr(&["converge", &fixture("converge_false.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":false,\"witness\":\"1 + eps(1)\",\"detail\":\"eventually-constant tail against limit 1\"}\n",
    );
}

#[test]
fn fr_syntax_error_exits_one() {
    let out = fr(&["normalize", "3 + * 2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "error: syntax error at byte 4: unexpected character '*'\n"
    );
}

#[test]
fn fr_semantic_error_exits_one() {
    let out = fr(&["normalize", "eps(0)"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "error: semantic error: eps exponent must be positive, got 0\n"
    );
}

#[test]
fn fr_missing_file_exits_one() {
    let out = fr(&["converge", "/nonexistent/seq.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nest_check_chain() {
    let out = nest(&["check", &fixture("chain.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":{\"is_nest\":true,\"t0\":true,\"t1\":false,\"interlocking\":true,\"order\":[\"a\",\"b\",\"c\"]},\"witness\":null,\"detail\":\"family report\"}\n",
    );
}

#[test]
fn nest_thm21_two_singletons() {
    let out = nest(&["thm21", &fixture("pair.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":{\"union_t1\":true,\"t0_left\":true,\"t0_right\":true,\"orders_mirror\":true,\"right_side\":true,\"agree\":true,\"counterexample\":null},\"witness\":null,\"detail\":\"two-nest T1 equivalence\"}\n",
    );
}

#[test]
fn nest_thm22_ground_member() {
    let out = nest(&["thm22", &fixture("ground_member.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":{\"interlocking\":false,\"endpoint_condition\":false,\"agree\":true,\"counterexample_member\":[\"a\",\"b\"]},\"witness\":null,\"detail\":\"interlocking vs complement endpoints\"}\n",
    );
}

#[test]
fn nest_vdw_three_chain_lots() {
    let out = nest(&["vdw", &fixture("lots3.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":{\"nest_left\":true,\"nest_right\":true,\"members_open\":true,\"not_open\":[],\"union_t1\":true,\"subbasis_generates\":true,\"order_opens_in_topology\":true,\"interlocking_left\":true,\"interlocking_right\":true,\"go_space\":true,\"lots\":true},\"witness\":null,\"detail\":\"van Dalen-Wattel verdict\"}\n",
    );
}

#[test]
fn nest_search_discrete_two_points() {
    let out = nest(&["search", &fixture("discrete2.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":true,\"witness\":[[[],[\"a\"],[\"a\",\"b\"]],[[],[\"b\"],[\"a\",\"b\"]]],\"detail\":\"two-nest decomposition\"}\n",
    );
}

#[test]
fn nest_neight_discrete_two_points() {
    let out = nest(&["neight", &fixture("discrete2.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":2,\"witness\":[[[],[\"a\"],[\"a\",\"b\"]],[[],[\"b\"],[\"a\",\"b\"]]],\"detail\":\"minimal nest decomposition\"}\n",
    );
}

#[test]
fn nest_neight_indiscrete_is_absent() {
    let out = nest(&["neight", &fixture("indiscrete2.json")]);
    assert_golden(
        &out,
        0,
        "{\"verdict\":null,\"witness\":[],\"detail\":\"no nest decomposition exists\"}\n",
    );
}

#[test]
fn nest_neight_refuses_above_bound() {
    // discrete topology on 6 points, generated on the fly
    let labels = ["a", "b", "c", "d", "e", "f"];
    let opens: Vec<Vec<&str>> = (0u32..64)
        .map(|m| {
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, &l)| l)
                .collect()
        })
        .collect();
    let inst = serde_json::json!({ "ground": labels, "topology": opens });
    let dir = std::env::temp_dir().join("nestlab-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("discrete6.json");
    std::fs::write(&path, serde_json::to_string(&inst).unwrap()).unwrap();

    let out = nest(&["neight", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "refused: ground size 6 exceeds search bound 5\n"
    );
    // raising the bound lifts the refusal
    let out = nest(&["neight", "--bound", "6", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn nest_invalid_topology_exits_one() {
    let out = nest(&["vdw", &fixture("not_closed.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed under intersection"));
}

#[test]
fn nest_missing_field_exits_one() {
    // thm21 needs family2; pair.json without it
    let out = nest(&["thm21", &fixture("chain.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "error: precondition violated: missing \"family2\"\n"
    );
}

#[test]
fn nest_bad_json_exits_one() {
    let dir = std::env::temp_dir().join("nestlab-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("garbage.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = nest(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cli_output_is_byte_stable() {
    let a = fr(&["normalize", "1/2 + eps(3/4)"]);
    let b = fr(&["normalize", "1/2 + eps(3/4)"]);
    assert_eq!(a.stdout, b.stdout);
    let a = nest(&["vdw", &fixture("lots3.json")]);
    let b = nest(&["vdw", &fixture("lots3.json")]);
    assert_eq!(a.stdout, b.stdout);
}
