use proptest::prelude::*;

use cyclotri::octagon::{solve, FeasibilitySystem, Interval, Solutions};

const N: usize = 0;
const M: usize = 1;

type Atom = (Vec<(usize, i8)>, i64);

fn atom() -> impl Strategy<Value = Atom> {
    let coeff = prop_oneof![Just(-1i8), Just(1i8)];
    let one = (0usize..3, coeff.clone()).prop_map(|(v, a)| vec![(v, a)]);
    let two = (0usize..3, 0usize..3, coeff.clone(), coeff)
        .prop_filter("distinct variables", |(v, w, _, _)| v != w)
        .prop_map(|(v, w, a, b)| vec![(v, a), (w, b)]);
    (prop_oneof![one, two], -15i64..=15)
}

fn holds(atoms: &[Atom], n: i64, m: i64) -> bool {
    (-80..=80).any(|l| {
        atoms.iter().all(|(terms, bound)| {
            let value: i64 = terms.iter().map(|&(v, a)| a as i64 * [n, m, l][v]).sum();
            value <= *bound
        })
    })
}

fn system(atoms: &[Atom]) -> FeasibilitySystem {
    let mut sys = FeasibilitySystem::new();
    for (terms, bound) in atoms {
        sys.add_le(terms, *bound).unwrap();
    }
    sys
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn bounded_boxes_match_enumeration(atoms in prop::collection::vec(atom(), 0..6)) {
        let sys = system(&atoms);
        let box_ = Interval::closed(-20, 20);
        let expected: Vec<(i64, i64)> = (-20..=20)
            .flat_map(|n| (-20..=20).map(move |m| (n, m)))
            .filter(|&(n, m)| holds(&atoms, n, m))
            .collect();
        match solve(&sys, N, M, box_, box_) {
            Solutions::Empty => prop_assert!(expected.is_empty()),
            Solutions::Finite(v) => prop_assert_eq!(v, expected),
            Solutions::Infinite(_) => prop_assert!(false, "a box has finitely many points"),
        }
        prop_assert_eq!(sys.is_feasible(), (-80..=80).any(|n| (-80..=80).any(|m| holds(&atoms, n, m))));
    }

    #[test]
    fn unbounded_classification(atoms in prop::collection::vec(atom(), 0..5)) {
        let sys = system(&atoms);
        let in_box: Vec<(i64, i64)> = (-40..=40)
            .flat_map(|n| (-40..=40).map(move |m| (n, m)))
            .filter(|&(n, m)| holds(&atoms, n, m))
            .collect();
        match solve(&sys, N, M, Interval::ALL, Interval::ALL) {
            Solutions::Empty => prop_assert!(in_box.is_empty()),
            Solutions::Finite(v) => prop_assert_eq!(v, in_box),
            Solutions::Infinite(ray) => {
                prop_assert!(ray.n_slope != 0 || ray.m_slope != 0);
                for t in 0..30 {
                    let (n, m) = ray.at(t);
                    prop_assert!(holds(&atoms, n, m), "ray point ({n}, {m}) fails");
                }
            }
        }
    }
}
