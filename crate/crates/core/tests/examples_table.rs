use std::time::Instant;

use cyclotri::constructions::builtin_example;

// connected, maximal, triangulation, locally finite
const TABLE: [[bool; 4]; 11] = [
    [false, false, false, false],
    [false, false, false, true],
    [false, false, true, false],
    [false, true, false, false],
    [false, true, true, false],
    [false, true, true, true],
    [true, false, false, false],
    [true, false, false, true],
    [true, true, false, false],
    [true, true, true, false],
    [true, true, true, true],
];

#[test]
fn builtins_reproduce_the_property_table() {
    for (i, row) in TABLE.iter().enumerate() {
        let s = builtin_example(i as u32 + 1).unwrap();
        let start = Instant::now();
        assert!(s.is_pairwise_noncrossing().unwrap(), "S{} crosses", i + 1);
        let got = [
            s.is_connected().unwrap(),
            s.is_maximal().unwrap(),
            s.is_triangulation().unwrap(),
            s.is_locally_finite().unwrap(),
        ];
        eprintln!("S{}: {:?} in {:?}", i + 1, got, start.elapsed());
        assert_eq!(&got, row, "S{}", i + 1);
    }
}
