use std::process::Command;

use sturmian::FreeWord;

fn sturmian(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sturmian")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = sturmian(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

/// (arguments, exit code, exact stdout)
const GOLDEN: &[(&[&str], i32, &str)] = &[
    (&["christoffel", "5", "2"], 0, "aaabaab\n"),
    (&["christoffel", "5", "-2"], 0, "aaaBaaB\n"),
    (&["christoffel", "-5", "-2"], 0, "BAABAAA\n"),
    (&["christoffel", "3", "2", "--upper"], 0, "babaa\n"),
    (&["christoffel", "1", "1", "--path"], 0, "ab\n0 0\n1 0\n1 1\n"),
    (&["basis-test", "abaab", "aba"], 0, "BASIS\n"),
    (&["basis-test", "a", "B", "--trace"], 0, "step transform T\nstep chain 0\nBASIS\n"),
    (&["basis-test", "ab", "ba", "--oracle"], 1, "NOT-BASIS\noracle NOT-BASIS\n"),
    (
        &["basis-test", "abA", "abbA", "--trace"],
        1,
        "step conjugate a\nstep transform id\nstep chain infinite\nNOT-BASIS\n",
    ),
    (&["chain", "aab", "ab"], 0, "aba ab\nbaa ba\naab ab\naba ba\n"),
    (&["chain", "ab", "abab"], 0, "INFINITE\n"),
    (&["palindromize", "abaab", "aba"], 0, "ababa aba\n"),
    (&["conjugates", "a", "b"], 0, "a b\n"),
    (&["normal-form", "abaab", "aba"], 0, "aabab aab\n"),
    (&["primitive", "aabab"], 0, "PRIMITIVE\n"),
    (&["primitive", "abAB"], 1, "NOT-PRIMITIVE\n"),
    (&["braid-apply", "1 2 3"], 0, "a -> B\nb -> a\n"),
    (&["braid-apply", "4"], 0, "a -> aB\nb -> b\n"),
    (&["braid-apply", "1", "--word", "bb"], 0, "abab\n"),
    (&["braid-apply", "", "--omega"], 0, "a -> b\nb -> a\n"),
    (&["braid-eq", "1 2 1", "2 1 2"], 0, "EQUAL\n"),
    (&["braid-eq", "1 2", "2 1"], 1, "NOT-EQUAL\n"),
    (&["braid-eq", "1 2 3 1 2 3 1 2 3 1 2 3", "", "--mod-center"], 0, "EQUAL\n"),
    (&["braid-eq", "1 2 3 1 2 3 1 2 3 1 2 3", ""], 1, "NOT-EQUAL\n"),
    (&["decompose", "ababa", "aba"], 0, "left-end abaab aba\nstandard G D G E\noffset 3\nconjugator aba\n"),
    (&["decompose", "a", "b"], 0, "left-end a b\nstandard 1\noffset 0\nconjugator 1\n"),
];

#[test]
fn golden_outputs() {
    for &(args, code, expected) in GOLDEN {
        let (got_code, out, err) = sturmian(args);
        assert_eq!((got_code, out.as_str()), (code, expected), "{args:?} stderr: {err}");
        assert!(err.is_empty(), "{args:?}: {err}");
    }
}

#[test]
fn bad_input_exits_2_with_one_line() {
    for args in [
        &["christoffel", "4", "2"][..],
        &["christoffel", "x", "2"],
        &["christoffel", "-1", "2", "--upper"],
        &["basis-test", "abc", "a"],
        &["basis-test", "a"],
        &["chain", "aB", "a"],
        &["palindromize", "ab", "b"],
        &["palindromize", "abA", "b"],
        &["palindromize", "a", "bab"],
        &["conjugates", "abA", "b"],
        &["normal-form", "a", "a"],
        &["braid-apply", "5"],
        &["braid-apply", "0"],
        &["braid-eq", "1 x", "1"],
        &["decompose", "a", "bab"],
        &["relations-check", "nope"],
        &["frobnicate"],
        &[],
    ] {
        let (code, out, err) = sturmian(args);
        assert_eq!(code, 2, "{args:?}: {out}");
        assert!(out.is_empty(), "{args:?}: {out}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn printed_words_reparse() {
    for args in [&["conjugates", "abaab", "aba"][..], &["chain", "abaab", "aba"], &["conjugates", "aBB", "aB"]] {
        for token in stdout(args).split_whitespace() {
            let w: FreeWord = token.parse().unwrap();
            assert_eq!(w.to_string(), token);
        }
    }
}

#[test]
fn relation_report() {
    let out = stdout(&["relations-check", "st0-braid-lift", "--kmax", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[..8].iter().all(|l| l.starts_with("PASS ")));
    assert_eq!(lines[8], "st0-braid-lift: 8/8 passed");
    let all = stdout(&["relations-check", "all"]);
    assert!(all.trim_end().ends_with("passed") && !all.contains("FAIL"));
}

#[test]
fn svg_output() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("path.svg");
    let out = stdout(&["christoffel", "5", "2", "--svg", file.to_str().unwrap()]);
    assert_eq!(out, "aaabaab\n");
    let svg = std::fs::read_to_string(&file).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.contains("polyline") && svg.contains("<line"));
}

#[test]
fn help_succeeds() {
    let (code, out, _) = sturmian(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("relations-check"));
}
