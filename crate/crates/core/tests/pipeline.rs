mod common;

use rc2::{
    brute_force_rc2, check_induction_invariants, color_rc2, generate_family,
    is_rainbow_two_connected, Color, Edge, Error, Family, Property, Rc2Bound, Strategy,
    DEFAULT_BUDGET,
};

fn fam(f: Family) -> rc2::Graph {
    generate_family(&f, 0).unwrap()
}

#[test]
fn k23_end_to_end() {
    let g = fam(Family::Theta(2, 2, 2));
    let r = color_rc2(&g).unwrap();
    assert_eq!((r.color_count(), r.strategy), (4, Strategy::EarInduction));
    assert!(is_rainbow_two_connected(&g, &r.coloring).passed);
    assert!(check_induction_invariants(&r, &g).unwrap().passed());
}

#[test]
fn dispatcher_strategies() {
    assert_eq!(
        color_rc2(&fam(Family::Cycle(7))).unwrap().strategy,
        Strategy::Cycle
    );
    assert_eq!(
        color_rc2(&fam(Family::Complete(4))).unwrap().strategy,
        Strategy::HamiltonianChord
    );
    assert_eq!(
        color_rc2(&fam(Family::CompleteBipartite(3, 4)))
            .unwrap()
            .strategy,
        Strategy::EarInduction
    );
}

#[test]
fn corrupted_step_coloring_is_caught() {
    let g = fam(Family::Theta(3, 3, 3));
    let mut r = color_rc2(&g).unwrap();
    let trace = r.trace.as_mut().unwrap();
    let last = trace.last_mut().unwrap();
    let edges: Vec<Edge> = last.coloring.iter().map(|(e, _)| e).collect();
    for e in edges {
        last.coloring.insert(e, Color(0));
    }
    let rep = check_induction_invariants(&r, &g).unwrap();
    assert!(!rep.passed());
    assert!(rep.failures().any(|(_, f)| f.property == Property::A1));
}

#[test]
fn wrong_recycled_color_is_caught() {
    let g = fam(Family::CompleteBipartite(2, 4));
    let mut r = color_rc2(&g).unwrap();
    let step = &mut r.trace.as_mut().unwrap()[1];
    let ext = step.extension.as_mut().unwrap();
    ext.recycled = Color(ext.recycled.0 + 100);
    let rep = check_induction_invariants(&r, &g).unwrap();
    assert!(rep
        .failures()
        .any(|(i, f)| *i == 2 && f.property == Property::B2));
}

#[test]
fn broken_map_is_caught() {
    let g = fam(Family::Theta(2, 3, 4));
    let mut r = color_rc2(&g).unwrap();
    let step = &mut r.trace.as_mut().unwrap()[0];
    let colors: Vec<Color> = step.map.iter().map(|(_, c)| c).collect();
    let first = step.map.iter().next().unwrap().0;
    // map a second vertex to an already used color
    let other = step.map.iter().nth(1).unwrap().0;
    step.map.insert(other, colors[0]);
    assert_ne!(first, other);
    let rep = check_induction_invariants(&r, &g).unwrap();
    assert!(rep
        .failures()
        .any(|(_, f)| f.property == Property::A5 && !f.violations.is_empty()));
}

#[test]
fn missing_trace() {
    let g = fam(Family::Complete(4));
    let r = color_rc2(&g).unwrap();
    assert_eq!(check_induction_invariants(&r, &g), Err(Error::TraceMissing));
}

#[test]
fn constructive_never_beats_the_oracle() {
    for f in [
        Family::Theta(2, 2, 2),
        Family::Theta(2, 2, 3),
        Family::Wheel(5),
        Family::Complete(4),
        Family::CompleteBipartite(2, 3),
    ] {
        let g = fam(f);
        let constructive = color_rc2(&g).unwrap().color_count();
        match brute_force_rc2(&g, constructive, DEFAULT_BUDGET).unwrap() {
            Rc2Bound::Exact { k, witness, .. } => {
                assert!(k <= constructive, "{f}");
                assert!(is_rainbow_two_connected(&g, &witness).passed, "{f}");
            }
            Rc2Bound::Unbounded { .. } => panic!("{f}: no coloring within the constructive count"),
        }
    }
}

#[test]
fn corpus_colorings_reject_a_flattened_copy() {
    for case in common::corpus().iter().take(40) {
        let r = color_rc2(&case.graph).unwrap();
        let flat = r.coloring.iter().map(|(e, _)| (e, Color(0))).collect();
        assert!(
            !is_rainbow_two_connected(&case.graph, &flat).passed,
            "{}",
            case.name
        );
    }
}
