use std::fs;
use std::path::PathBuf;

use borcherds_core::borcherds::parse_congruence_doc;
use borcherds_core::classpoly::parse_cache_doc;

fn seeds(target: &str, prefix: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_string_lossy().starts_with(prefix))
        .map(|p| {
            let s = fs::read_to_string(&p).unwrap();
            (p, s)
        })
        .collect();
    out.sort();
    out
}

#[test]
fn document_seeds_parse() {
    assert!(!seeds("cache_doc", "seed_").is_empty());
    for (p, s) in seeds("cache_doc", "seed_") {
        parse_cache_doc(&s).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, s) in seeds("congruence_doc", "seed_") {
        parse_congruence_doc(&s).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
}

#[test]
fn regression_inputs_are_rejected() {
    let bad = seeds("cache_doc", "reject_");
    assert!(!bad.is_empty());
    for (p, s) in bad {
        assert!(parse_cache_doc(&s).is_err(), "{}", p.display());
    }
}
