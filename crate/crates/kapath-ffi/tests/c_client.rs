//! Compiles and runs a small C program against the generated header and the
//! static library, exercising parse, phi/psi and a verification report from
//! the C side.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "kapath.h"

int main(void) {
    KapathPath *path = NULL;
    assert(kapath_path_parse("UHD", 1, 2, &path) == KapathStatus_Ok);
    assert(kapath_path_order(path) == 4);
    assert(kapath_path_hump_count(path) == 1);
    assert(kapath_path_peak_count(path) == 0);
    assert(kapath_path_is_closed(path));

    KapathPath *image = NULL;
    uint32_t kase = 0;
    assert(kapath_phi(path, 0, 2, &image, &kase) == KapathStatus_Ok);
    assert(kase == 2);
    char *word = kapath_path_word(image);
    assert(strcmp(word, "HDU") == 0);
    kapath_string_free(word);

    KapathPath *back = NULL;
    uint64_t hump = 99;
    uint32_t color = 0;
    assert(kapath_psi(image, &back, &hump, &color, &kase) == KapathStatus_Ok);
    assert(hump == 0 && color == 2 && kase == 2);
    word = kapath_path_word(back);
    assert(strcmp(word, "UHD") == 0);
    kapath_string_free(word);

    char *count = NULL;
    assert(kapath_count_super(3, 1, 1, &count) == KapathStatus_Ok);
    assert(strcmp(count, "7") == 0);
    kapath_string_free(count);

    char *report = NULL;
    assert(kapath_verify_claim(KapathClaim_Eq4, 3, 1, 1, 0, 0, &report) == KapathStatus_Ok);
    assert(strstr(report, "\"verified\":true") != NULL);
    kapath_string_free(report);

    kapath_path_free(path);
    kapath_path_free(image);
    kapath_path_free(back);

    KapathPath *bad = NULL;
    assert(kapath_path_parse("UXD", 1, 1, &bad) == KapathStatus_IllegalCharacter);
    assert(kapath_path_parse("UD", 1, 1, NULL) == KapathStatus_NullPointer);

    puts("c client ok");
    return 0;
}
"#;

/// The static library built alongside this test: prefer the unhashed copy,
/// fall back to the newest hashed artifact in deps/.
fn static_lib() -> PathBuf {
    let mut dir = std::env::current_exe().expect("test binary path");
    dir.pop(); // test binary name
    let deps = dir.clone();
    dir.pop(); // deps/
    let plain = dir.join("libkapath_ffi.a");
    if plain.exists() {
        return plain;
    }
    let mut candidates: Vec<PathBuf> = std::fs::read_dir(&deps)
        .expect("deps dir")
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with("libkapath_ffi") && n.ends_with(".a"))
        })
        .collect();
    candidates.sort_by_key(|p| std::fs::metadata(p).and_then(|m| m.modified()).ok());
    candidates.pop().expect("libkapath_ffi.a built")
}

#[test]
fn c_client_compiles_and_runs() {
    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include_dir.join("kapath.h").exists(), "header generated");

    let work = std::env::temp_dir().join(format!("kapath-c-client-{}", std::process::id()));
    std::fs::create_dir_all(&work).expect("temp dir");
    let source = work.join("client.c");
    let binary = work.join("client");
    std::fs::write(&source, C_SOURCE).expect("write source");

    let lib = static_lib();
    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("client runs");
    assert!(
        run.status.success(),
        "client failed:\n{}\n{}",
        String::from_utf8_lossy(&run.stdout),
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c client ok");

    let _ = std::fs::remove_dir_all(&work);
}
