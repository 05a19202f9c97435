//! The greedy locally finite triangulation on finite polygons and on
//! prefixes of infinity-gons.

mod support;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use cyclotri::constructions::{fan, Enumeration, GreedyTriangulation};
use cyclotri::{Arc, CyclicOrder, Point, SymbolicArcSet};
use support::oracle::{to_pair, Brute};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Checks the creation lemma at every step: the two points cyclically next
/// to the newest one among those enumerated so far are already joined.
fn check_creation(g: &mut GreedyTriangulation, steps: u64) {
    let order = g.order();
    for n in 3..=steps {
        let mut points: Vec<Point> = (0..=n).map(|i| g.enumeration().point(i).unwrap()).collect();
        let newest = points[n as usize];
        points.sort();
        let at = points.iter().position(|&p| p == newest).unwrap();
        let len = points.len();
        let (before, after) = (points[(at + len - 1) % len], points[(at + 1) % len]);
        g.materialize(n - 1).unwrap();
        if let Ok(p) = Arc::new(&order, before, after) {
            assert!(g.arcs().contains(&p), "step {n}: {p} missing");
        }
    }
}

fn check_finite(n: u32, order_of_points: &[usize]) {
    let order = CyclicOrder::FiniteGon(n);
    let enumeration = Enumeration::Prefix(order_of_points.iter().map(|&i| Point::finite(i as i64)).collect());
    let mut g = GreedyTriangulation::new(order, enumeration).unwrap();
    check_creation(&mut g, n as u64 - 1);
    g.materialize(n as u64).unwrap();
    let set = SymbolicArcSet::from_arcs(order, g.arcs().iter().copied()).unwrap();
    assert!(set.is_maximal().unwrap() && set.is_connected().unwrap() && set.is_triangulation().unwrap());
    let brute = Brute::polygon(n as usize, g.arcs().iter().map(to_pair));
    assert!(brute.maximal() && brute.connected() && brute.triangulation());
}

#[test]
fn identity_gives_the_fan() {
    let order = CyclicOrder::FiniteGon(6);
    let mut g = GreedyTriangulation::new(order, Enumeration::Identity(6)).unwrap();
    g.materialize(10).unwrap();
    let set = SymbolicArcSet::from_arcs(order, g.arcs().iter().copied()).unwrap();
    assert!(set.same_arcs(&fan(order, Point::finite(0)).unwrap()).unwrap());
}

#[test]
fn every_enumeration_of_small_polygons() {
    for n in 4..=6u32 {
        for perm in permutations(n as usize) {
            check_finite(n, &perm);
        }
    }
}

#[test]
fn random_enumerations() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 7..=9u32 {
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..n as usize).collect();
            perm.shuffle(&mut rng);
            check_finite(n, &perm);
        }
    }
}

#[test]
fn stabilization_on_two_threads() {
    let order = CyclicOrder::ThreadGon(2);
    let mut g = GreedyTriangulation::new(order, Enumeration::Diagonal(2)).unwrap();
    check_creation(&mut g, 40);
    let prefix: Vec<Point> = (0..10).map(|i| g.enumeration().point(i).unwrap()).collect();
    for p in prefix {
        let bound = g.stabilization_bound(p).unwrap();
        assert!(bound <= 40);
        let early = g.incident_arcs_up_to(p, bound).unwrap();
        let late = g.incident_arcs_up_to(p, 40).unwrap();
        assert_eq!(early, late, "{p}");
    }
    let arcs: Vec<Arc> = g.arcs().iter().copied().collect();
    assert!(arcs
        .iter()
        .enumerate()
        .all(|(i, p)| arcs[i + 1..].iter().all(|q| !p.crosses(q))));
}

#[test]
fn prefixes_on_more_threads() {
    for k in 1..=4u32 {
        let order = CyclicOrder::ThreadGon(k);
        let mut g = GreedyTriangulation::new(order, Enumeration::Diagonal(k)).unwrap();
        g.materialize(8 * k as u64 + 20).unwrap();
        let finished: Vec<Point> = (0..2 * k as u64).map(|i| g.enumeration().point(i).unwrap()).collect();
        let window = SymbolicArcSet::from_arcs(order, g.arcs().iter().copied()).unwrap();
        assert!(window.is_pairwise_noncrossing().unwrap());
        assert!(window.is_connected().unwrap());
        let depth = g.materialized();
        for p in finished {
            assert_eq!(g.incident_arcs(p).unwrap(), g.incident_arcs_up_to(p, depth).unwrap());
        }
    }
}
