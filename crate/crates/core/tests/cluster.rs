//! Seeds, exchange relations and exchange graphs on small polygons.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use cyclotri::cluster::{enumerate_triangulations, exchange_graph, render, ClusterVariable, Seed};
use cyclotri::constructions::fan;
use cyclotri::flip::reach;
use cyclotri::{Arc, CrossingArcs, CyclicOrder, Point, SymbolicArcSet};

fn arc(n: u32, a: i64, b: i64) -> Arc {
    Arc::new(&CyclicOrder::FiniteGon(n), Point::finite(a), Point::finite(b)).unwrap()
}

/// The arcs through 0; for the square this is a single diagonal.
fn fan_seed(n: u32) -> Seed {
    let set = SymbolicArcSet::from_arcs(CyclicOrder::FiniteGon(n), (2..n as i64 - 1).map(|b| arc(n, 0, b))).unwrap();
    if n >= 5 {
        assert!(set
            .same_arcs(&fan(CyclicOrder::FiniteGon(n), Point::finite(0)).unwrap())
            .unwrap());
    }
    Seed::new(set).unwrap()
}

/// Every seed reachable from the fan, keyed by its arcs, with the value of
/// each arc checked against all earlier sightings.
fn explore(n: u32) -> (usize, BTreeMap<Arc, ClusterVariable>) {
    let start = fan_seed(n);
    let mut values: BTreeMap<Arc, ClusterVariable> = start.assignment().unwrap();
    let mut seen = BTreeSet::from([start.triangulation().explicit().clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(seed) = queue.pop_front() {
        for p in seed.triangulation().explicit().clone() {
            let next = seed.mutate(&p).expect("exact exchange");
            for (q, v) in next.assignment().unwrap() {
                assert!(v.has_positive_coefficients(), "{}", render(&next.order(), &v));
                let known = values.entry(q).or_insert_with(|| v.clone());
                assert_eq!(*known, v, "value of {q} depends on the route");
            }
            if seen.insert(next.triangulation().explicit().clone()) {
                queue.push_back(next);
            }
        }
    }
    (seen.len(), values)
}

#[test]
fn pentagon_period() {
    let s = fan_seed(5);
    let o = s.order();
    let route = [arc(5, 0, 2), arc(5, 0, 3), arc(5, 1, 3), arc(5, 1, 4), arc(5, 2, 4)];
    let mut seed = s.clone();
    let mut seen = BTreeSet::new();
    for (i, p) in route.iter().enumerate() {
        for q in seed.triangulation().explicit() {
            seen.insert(render(&o, &seed.value(q).unwrap()));
        }
        seed = seed.mutate(p).unwrap();
        assert_eq!(seed.triangulation().explicit() == s.triangulation().explicit(), i == 4);
    }
    assert_eq!(seed.assignment().unwrap(), s.assignment().unwrap());
    let expected: BTreeSet<String> = [
        "x_0_2",
        "x_0_3",
        "(1 + x_0_3) / x_0_2",
        "(1 + x_0_2 + x_0_3) / (x_0_2*x_0_3)",
        "(1 + x_0_2) / x_0_3",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    assert_eq!(seen, expected);
}

#[test]
fn laurent_positive_and_route_independent() {
    for n in 4..=8u32 {
        let (count, values) = explore(n);
        assert_eq!(count, enumerate_triangulations(n).unwrap().len());
        let diagonals = (n * (n - 3) / 2) as usize;
        assert_eq!(values.len(), diagonals);
        let s = fan_seed(n);
        for (p, v) in &values {
            assert_eq!(&s.cluster_variable(p).unwrap(), v, "greedy route to {p}");
        }
    }
}

#[test]
fn hexagon_two_routes() {
    let s = fan_seed(6);
    let p = arc(6, 2, 5);
    let greedy = s.cluster_variable(&p).unwrap();
    let other = s.mutate_along(&[arc(6, 0, 4), arc(6, 0, 3)]).unwrap();
    assert!(other.triangulation().contains(&p).unwrap());
    assert_eq!(other.value(&p).unwrap(), greedy);
}

#[test]
fn reach_length_is_crossing_count() {
    for n in 4..=8u32 {
        for t in enumerate_triangulations(n).unwrap() {
            for a in 0..n as i64 {
                for b in a + 2..n as i64 {
                    let Ok(p) = Arc::new(&t.order(), Point::finite(a), Point::finite(b)) else {
                        continue;
                    };
                    let CrossingArcs::Finite(crossing) = t.crossing_arcs(&p).unwrap() else {
                        unreachable!()
                    };
                    assert_eq!(reach(&t, &p).unwrap().steps.len(), crossing.len());
                }
            }
        }
    }
}

#[test]
fn catalan_and_exchange_graphs() {
    let catalan = [2usize, 5, 14, 42, 132, 429, 1430];
    for (n, &c) in (4..=10u32).zip(&catalan) {
        assert_eq!(enumerate_triangulations(n).unwrap().len(), c);
    }
    for n in 4..=8u32 {
        let g = exchange_graph(n).unwrap();
        assert!(g.is_connected());
        assert!((0..g.vertices.len()).all(|v| g.degree(v) == n as usize - 3));
        for &(i, j) in &g.edges {
            let (u, v) = (g.vertices[i].explicit(), g.vertices[j].explicit());
            assert_eq!((u.difference(v).count(), v.difference(u).count()), (1, 1));
        }
    }
}
