use proptest::prelude::*;

use cyclotri::arc::rotate;
use cyclotri::constructions::builtin_example;
use cyclotri::dictionary::{ext_dim_cluster, hom_dim_cluster, phi, phi_inv, tau};
use cyclotri::{Arc, CyclicOrder, Point};

fn order_and_arcs() -> impl Strategy<Value = (CyclicOrder, Arc, Arc)> {
    (1u32..=3).prop_flat_map(|k| {
        let point = (0..k, -8i64..=8).prop_map(|(t, e)| Point::threaded(t, e));
        let o = CyclicOrder::ThreadGon(k);
        let arc = (point.clone(), point).prop_filter_map("not an arc", move |(a, b)| Arc::new(&o, a, b).ok());
        (Just(o), arc.clone(), arc)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn correspondences((o, p, q) in order_and_arcs()) {
        let (x, y) = (phi(&o, &p).unwrap(), phi(&o, &q).unwrap());
        prop_assert_eq!(phi_inv(&o, &x).unwrap(), p);
        let ext = ext_dim_cluster(&o, &x, &y).unwrap();
        prop_assert_eq!(ext, ext_dim_cluster(&o, &y, &x).unwrap());
        prop_assert_eq!(p.crosses(&q), ext != 0);
        let rq = rotate(&o, &q, 1).unwrap();
        prop_assert_eq!(tau(&o, &y, 1).unwrap(), phi(&o, &rq).unwrap());
        let (hom_yx, hom_xy) = (hom_dim_cluster(&o, &y, &x).unwrap(), hom_dim_cluster(&o, &x, &y).unwrap());
        if p != q {
            prop_assert_eq!(hom_yx != 0, p.crosses(&rq));
            prop_assert!(hom_xy <= 1 && hom_yx <= 1 && ext <= 1);
            if !p.crosses(&q) {
                prop_assert_eq!(p.shares_endpoint(&q), hom_xy != 0 || hom_yx != 0);
            }
        } else {
            prop_assert_eq!(ext, 0);
            prop_assert_eq!(hom_xy, 1);
        }
    }
}

/// Hom-partners of `Φ(p)` inside `Φ(S)`, counted over members with offsets
/// in `[-w, w]`.
fn hom_partners(set: &cyclotri::SymbolicArcSet, p: &Arc, w: i64) -> usize {
    let o = set.order();
    let x = phi(&o, p).unwrap();
    set.arcs_in_window(w)
        .unwrap()
        .iter()
        .filter(|q| *q != p)
        .filter(|q| {
            let y = phi(&o, q).unwrap();
            hom_dim_cluster(&o, &x, &y).unwrap() + hom_dim_cluster(&o, &y, &x).unwrap() > 0
        })
        .count()
}

#[test]
fn local_finiteness_is_local_boundedness() {
    for i in 1..=11 {
        let set = builtin_example(i).unwrap();
        let lf = set.is_locally_finite().unwrap();
        let probes = set.arcs_in_window(3).unwrap();
        let unbounded = probes
            .iter()
            .any(|p| hom_partners(&set, p, 24) > hom_partners(&set, p, 12));
        assert_eq!(lf, !unbounded, "S{i}");
    }
}
