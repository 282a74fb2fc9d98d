//! Compiles and runs a C consumer against the generated header and the
//! static library, proving the ABI end to end. Skipped when no C compiler
//! is on the path.

use std::path::PathBuf;
use std::process::Command;

fn find_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|cc| {
        Command::new(cc)
            .arg("--version")
            .output()
            .map(|o| o.status.success())
            .unwrap_or(false)
    })
}

#[test]
fn c_consumer_builds_and_runs() {
    let Some(cc) = find_cc() else {
        eprintln!("skipping: no C compiler available");
        return;
    };

    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    let source = manifest.join("tests/c/smoke.c");
    // The static library lands next to this test's own artifacts.
    let mut lib_dir = std::env::current_exe().unwrap();
    lib_dir.pop(); // executable name
    lib_dir.pop(); // deps/
    let static_lib = lib_dir.join("libhermite_zeros_ffi.a");
    assert!(
        static_lib.exists(),
        "static library not found at {}",
        static_lib.display()
    );

    let binary = lib_dir.join("hermite_zeros_c_smoke");
    let compile = Command::new(cc)
        .arg(&source)
        .arg("-I")
        .arg(&include)
        .arg(&static_lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&binary)
        .output()
        .expect("compiler invocation");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "smoke binary failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("c smoke test passed"));
}
