//! Case studies and the Nielsen path construction.

use commgraph::autfree::NielsenLabel;
use commgraph::catalog::{catalog, NielsenPaths, PathMethod};

#[test]
fn every_case_passes() {
    for case in catalog().into_iter().filter(|c| !c.is_stub()) {
        let run = case.run().unwrap();
        assert!(run.ok(), "{}: {:?}", case.name, run.failures());
    }
}

#[test]
fn small_ranks_run_without_expectations() {
    for name in ["autfree2", "autfree3", "autfree4", "sl2", "sl3", "sl4", "thompson4"] {
        let run = name.parse::<commgraph::catalog::CaseStudy>().unwrap().run().unwrap();
        assert!(run.ok(), "{name}: {:?}", run.failures());
    }
}

#[test]
fn explicit_paths_are_short_and_valid() {
    let paths = NielsenPaths::new(5).unwrap();
    let labels = NielsenLabel::all(5);
    let mut explicit = 0;
    for e1 in &labels {
        for e2 in &labels {
            let p = paths.path(*e1, *e2).unwrap();
            assert_eq!(p.vertices.first().unwrap(), &e1.to_string());
            assert_eq!(p.vertices.last().unwrap(), &e2.to_string());
            assert_eq!(p.fallback, p.method == PathMethod::BfsFallback);
            if p.method == PathMethod::Explicit {
                assert!(p.vertices.len() <= 4);
                explicit += 1;
            }
        }
    }
    assert!(explicit >= 100);
}

#[test]
fn paths_at_rank_six() {
    let paths = NielsenPaths::new(6).unwrap();
    let p = paths.path("E(x2^-1,x5)".parse().unwrap(), "E(x2^-1,x1^-1)".parse().unwrap()).unwrap();
    assert_eq!(p.method, PathMethod::Explicit);
    assert_eq!(p.vertices, ["E(x2^-1,x5)", "E(x3,x1^-1)", "E(x5,x4)", "E(x2^-1,x1^-1)"]);
}
