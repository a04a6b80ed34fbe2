//! Checks the generated header and, when a C compiler is available, builds
//! and runs a small C program against the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn header_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(header_dir().join("wreath_specht.h")).unwrap();
    for name in [
        "typedef struct WsMultiplicityMap WsMultiplicityMap;",
        "WS_STATUS_OK = 0",
        "ws_last_error_message(void)",
        "ws_string_free(",
        "ws_specht_dimension(",
        "ws_lr_coefficient(",
        "ws_lr_multi(",
        "ws_wreath_dimension(",
        "ws_branch_first(",
        "ws_branch_second(",
        "ws_map_len(",
        "ws_map_multiplicity(",
        "ws_map_key_json(",
        "ws_map_get(",
        "ws_map_to_json(",
        "ws_map_free(",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "wreath_specht.h"

int main(void) {
    WsMultiplicityMap *map = NULL;
    if (ws_branch_first(3, "[[2],[1,1],[1,1]]", &map) != WS_STATUS_OK) return 1;
    uint64_t mult = 0;
    if (ws_map_get(map, "[[3],[2,1]]", &mult) != WS_STATUS_OK || mult != 1) return 2;
    char *json = NULL;
    if (ws_map_to_json(map, &json) != WS_STATUS_OK) return 3;
    printf("%zu %s\n", ws_map_len(map), json);
    ws_string_free(json);
    ws_map_free(map);
    if (ws_specht_dimension("[1,2]", &mult) != WS_STATUS_INVALID_INPUT) return 4;
    char *msg = ws_last_error_message();
    if (msg == NULL || strstr(msg, "invalid_partition") == NULL) return 5;
    ws_string_free(msg);
    return 0;
}
"#;

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().filter(|o| o.status.success()).map(|_| cc)
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libwreath_specht_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let work = Path::new(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let bin = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();

    let status = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(header_dir())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C program failed to build");

    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("9 {\"m\":3"), "{text}");
    assert!(text.contains(r#"{"nu":[[3],[2,1]],"mult":1}"#), "{text}");
}
