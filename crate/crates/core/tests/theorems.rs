//! The structural theorems relating the four properties, checked on every
//! noncrossing set of small polygons and on the classical examples.

mod support;

use std::collections::BTreeSet;

use cyclotri::constructions::builtin_example;
use cyclotri::flip::{exchangeable, flip};
use cyclotri::{Arc, CyclicOrder, Point, SymbolicArcSet};
use support::oracle::{to_set, Brute, Pair};

/// Every set of pairwise noncrossing arcs of the `n`-gon.
fn noncrossing_sets(n: usize) -> Vec<BTreeSet<Pair>> {
    let base = Brute::polygon(n, []);
    let all = base.all_arcs();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn grow(base: &Brute, all: &[Pair], from: usize, current: &mut Vec<Pair>, out: &mut Vec<BTreeSet<Pair>>) {
        out.push(current.iter().copied().collect());
        for i in from..all.len() {
            if current.iter().all(|&q| !base.crosses(all[i], q)) {
                current.push(all[i]);
                grow(base, all, i + 1, current, out);
                current.pop();
            }
        }
    }
    grow(&base, &all, 0, &mut current, &mut out);
    out
}

struct Verdicts {
    connected: bool,
    maximal: bool,
    triangulation: bool,
    locally_finite: bool,
}

fn verdicts(set: &SymbolicArcSet) -> Verdicts {
    Verdicts {
        connected: set.is_connected().unwrap(),
        maximal: set.is_maximal().unwrap(),
        triangulation: set.is_triangulation().unwrap(),
        locally_finite: set.is_locally_finite().unwrap(),
    }
}

fn check_theorems(set: &SymbolicArcSet, points: &[Point]) {
    let v = verdicts(set);
    let name = set.describe();
    if v.connected && v.triangulation {
        assert!(v.maximal, "connected triangulation that is not maximal: {name}");
    }
    if v.locally_finite {
        assert_eq!(v.triangulation, v.maximal, "locally finite: {name}");
    }
    if v.maximal || v.triangulation {
        let order = set.order();
        for &a in points {
            if !set.is_incident(a).unwrap() {
                let forced = Arc::new(&order, order.predecessor(a).unwrap(), order.successor(a).unwrap()).unwrap();
                assert!(
                    set.contains(&forced).unwrap(),
                    "{name}: {a} is isolated but {forced} is missing"
                );
            }
        }
    }
    if v.connected && v.maximal && set.is_explicit() {
        let all = set.explicit().iter().all(|p| exchangeable(set, p).unwrap().is_some());
        assert_eq!(all, v.triangulation, "{name}");
    }
}

#[test]
fn dissection_counts() {
    let counts: Vec<usize> = (4..=8).map(|n| noncrossing_sets(n).len()).collect();
    assert_eq!(counts, [3, 11, 45, 197, 903]);
}

#[test]
fn theorems_on_small_polygons() {
    for n in 4..=8usize {
        let points: Vec<Point> = (0..n as i64).map(Point::finite).collect();
        for arcs in noncrossing_sets(n) {
            check_theorems(&to_set(n as u32, &arcs), &points);
        }
    }
}

#[test]
fn theorems_on_the_examples() {
    for i in 1..=11 {
        let set = builtin_example(i).unwrap();
        let points: Vec<Point> = (0..set.order().threads())
            .flat_map(|t| (-5..=5).map(move |e| Point::threaded(t, e)))
            .collect();
        check_theorems(&set, &points);
    }
}

#[test]
fn flips_preserve_the_properties() {
    for n in 4..=8usize {
        for arcs in noncrossing_sets(n) {
            let set = to_set(n as u32, &arcs);
            let before = verdicts(&set);
            if !before.maximal {
                continue;
            }
            for p in set.explicit() {
                let Some(step) = exchangeable(&set, p).unwrap() else {
                    continue;
                };
                let t = flip(&set, p).unwrap();
                let after = verdicts(&t);
                assert!(after.maximal);
                assert!(!before.triangulation || after.triangulation);
                assert!(!before.connected || after.connected);
                let removed: Vec<&Arc> = set.explicit().difference(t.explicit()).collect();
                let added: Vec<&Arc> = t.explicit().difference(set.explicit()).collect();
                assert_eq!((removed, added), (vec![p], vec![&step.added]));
                assert!(flip(&t, &step.added).unwrap().same_arcs(&set).unwrap());
            }
        }
    }
}

#[test]
fn flips_on_the_examples() {
    for i in [4, 5, 6, 10, 11] {
        let set = builtin_example(i).unwrap();
        let before = verdicts(&set);
        let order = set.order();
        let k = order.threads();
        let probes: Vec<Arc> = (0..k)
            .flat_map(|t| (0..k).map(move |u| (t, u)))
            .flat_map(|(t, u)| (-3..=3i64).flat_map(move |e| (-3..=3i64).map(move |f| (t, e, u, f))))
            .filter_map(|(t, e, u, f)| Arc::new(&order, Point::threaded(t, e), Point::threaded(u, f)).ok())
            .filter(|p| set.contains(p).unwrap())
            .collect();
        assert!(!probes.is_empty());
        for p in probes {
            let step = exchangeable(&set, &p).unwrap().unwrap_or_else(|| panic!("S{i}: {p}"));
            let t = flip(&set, &p).unwrap();
            let after = verdicts(&t);
            assert!(after.maximal, "S{i}: {p}");
            assert_eq!(after.triangulation, before.triangulation, "S{i}: {p}");
            assert_eq!(after.connected, before.connected, "S{i}: {p}");
            assert!(!t.contains(&p).unwrap() && t.contains(&step.added).unwrap());
            assert!(flip(&t, &step.added).unwrap().same_arcs(&set).unwrap(), "S{i}: {p}");
        }
    }
}

#[test]
fn incidence_on_a_fan() {
    let o = CyclicOrder::ThreadGon(1);
    let set = cyclotri::constructions::fan(o, Point::threaded(0, 0)).unwrap();
    assert!(set.is_incident(Point::threaded(0, 7)).unwrap());
    assert!(set.is_incident(Point::threaded(0, 0)).unwrap());
}
