//! Properties checked across the whole small-graph corpus.

use perfdiv::conjectures::{
    corpus_up_to, enumerate, lookup, minimal_imperfect_cutset_violation, Predicate,
};
use perfdiv::decomposition::{find_clique_cutset, find_simplicial};
use perfdiv::divisibility::{find_good_partition, is_mnpd, is_perfectly_divisible};
use perfdiv::invariants::{chi, omega};
use perfdiv::perfection::is_perfect;
use perfdiv::{catalog, parse_graph6, write_graph6, Limits};

#[test]
fn corpus_is_isomorph_free_and_round_trips() {
    let corpus = corpus_up_to(7).unwrap();
    assert_eq!(corpus.len(), 1253);
    let mut codes: Vec<(usize, u64)> = corpus
        .iter()
        .map(|g| (g.n(), enumerate::canonical_code(g)))
        .collect();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), 1253);
    for g in &corpus {
        assert_eq!(parse_graph6(&write_graph6(g)).unwrap(), *g);
    }
}

#[test]
fn perfect_graphs_have_trivial_good_partitions() {
    let lim = Limits::default();
    for g in corpus_up_to(6).unwrap().iter().filter(|g| g.n() > 0) {
        let perfect = is_perfect(g, &lim).unwrap().perfect;
        if perfect {
            assert_eq!(chi(g, &lim).unwrap(), omega(g));
            let gp = find_good_partition(g, &lim).unwrap().unwrap();
            assert!(gp.b.is_empty());
        }
    }
}

#[test]
fn no_small_graph_is_mnpd() {
    // the smallest non-PD graphs are larger than seven vertices
    let lim = Limits::default();
    for g in corpus_up_to(7).unwrap() {
        assert!(
            is_perfectly_divisible(&g, &lim).unwrap().holds,
            "{}",
            write_graph6(&g)
        );
        assert!(!is_mnpd(&g, &lim).unwrap());
    }
}

#[test]
fn grotzsch_is_mnpd_with_no_cutset_or_simplicial_vertex() {
    let lim = Limits::default();
    let g = catalog::grotzsch();
    assert!(is_mnpd(&g, &lim).unwrap());
    assert!(find_clique_cutset(&g).is_none());
    assert!(find_simplicial(&g).is_empty());
    assert!(
        Predicate::EveryVertexInMaxClique
            .evaluate(&g, &lim)
            .unwrap()
            .value
    );
    for id in ["T1.4", "T1.5", "L2.1", "L2.2", "C1.2", "C4.5"] {
        assert!(
            lookup(id).unwrap().check(&g, &lim).unwrap().is_none(),
            "{id}"
        );
    }
}

#[test]
fn minimal_imperfect_graphs_have_no_clique_cutset() {
    let corpus = corpus_up_to(7).unwrap();
    assert!(minimal_imperfect_cutset_violation(&corpus).is_none());
}
