use std::path::PathBuf;
use std::time::Instant;

use pickylab::chartab::{dixon_schneider, verify_table, CharacterTable};
use pickylab::permgroup::gens_file::load_gens;
use pickylab::permgroup::named::{alternating, dihedral, psl2, symmetric};
use pickylab::permgroup::PermGroup;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn table(g: &PermGroup) -> CharacterTable {
    let start = Instant::now();
    let t = dixon_schneider(g).unwrap();
    let v = verify_table(&t);
    assert!(v.passed, "{:?}", v.failures);
    eprintln!(
        "order {} classes {} in {:?}",
        g.order(),
        t.num_classes(),
        start.elapsed()
    );
    t
}

fn sorted_degrees(t: &CharacterTable) -> Vec<u128> {
    let mut d = t.degrees();
    d.sort();
    d
}

#[test]
fn symmetric_and_alternating() {
    let counts = [3usize, 5, 7, 11, 15, 22];
    for (n, &k) in (3..=8).zip(&counts) {
        assert_eq!(table(&symmetric(n)).num_classes(), k);
    }
    for (n, k) in [(4usize, 4usize), (5, 5), (6, 7), (7, 9), (8, 14)] {
        assert_eq!(table(&alternating(n)).num_classes(), k);
    }
    assert_eq!(
        sorted_degrees(&table(&dihedral(8).unwrap())),
        vec![1, 1, 1, 1, 2]
    );
}

#[test]
fn alternating_nine() {
    let t = table(&alternating(9));
    assert_eq!(t.num_classes(), 18);
}

#[test]
fn projective_special_linear_two() {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let t = table(&psl2(q).unwrap());
        let expected = if q % 2 == 0 { q + 1 } else { (q + 5) / 2 };
        assert_eq!(t.num_classes() as u64, expected, "q = {q}");
    }
    assert_eq!(
        sorted_degrees(&table(&psl2(7).unwrap())),
        vec![1, 3, 3, 6, 7, 8]
    );
}

#[test]
fn shipped_generators() {
    let sz = table(&load_gens(&data("sz8.gens")).unwrap());
    assert_eq!(sz.num_classes(), 11);
    assert_eq!(sz.degrees().iter().filter(|&&d| d == 14).count(), 2);
    assert_eq!(
        table(&load_gens(&data("psu3_3.gens")).unwrap()).num_classes(),
        14
    );
    assert_eq!(
        sorted_degrees(&table(&load_gens(&data("m11.gens")).unwrap())),
        vec![1, 10, 10, 10, 11, 16, 16, 44, 45, 55]
    );
    assert_eq!(
        table(&load_gens(&data("psl3_4.gens")).unwrap()).num_classes(),
        10
    );
}
