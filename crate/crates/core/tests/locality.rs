use pickylab::chartab::dixon_schneider;
use pickylab::locality::{
    casolo_verify, fusion_control_verify, lambda_count, sub_fusion, subnormalizer,
};
use pickylab::permgroup::named::{alternating, psl2};
use pickylab::permgroup::Perm;

fn p(deg: usize, s: &str) -> Perm {
    Perm::parse_cycles(deg, s, 1).unwrap()
}

#[test]
fn a9_two_element_does_not_split() {
    let g = alternating(9);
    let x = p(9, "(1,2,3,4)(5,6)");
    assert_eq!(x.order(), 4);
    let f = sub_fusion(&g, &x).unwrap();
    eprintln!(
        "(1,2,3,4)(5,6): {f:?} lambda {}",
        lambda_count(&g, 2, &x).unwrap()
    );
    assert_eq!(f.sub_classes, 1);
}

#[test]
fn a9_mixed_order_candidates() {
    let g = alternating(9);
    for s in [
        "(1,2,3,4)(5,6)(7,8,9)",
        "(1,2,3)(4,5)(6,7)",
        "(1,2,3,4,5,6)(7,8)",
        "(1,2,3,4,5)(6,7)(8,9)",
        "(1,2,3,4,5)(6,7,8)",
    ] {
        let x = p(9, s);
        let f = sub_fusion(&g, &x).unwrap();
        eprintln!("{s}: order {} {f:?}", x.order());
        assert!(f.within_prime_parts);
        if s == "(1,2,3)(4,5)(6,7)" {
            assert_eq!((f.sub_order, f.sub_classes), (2160, 2));
        }
    }
    assert!(sub_fusion(&g, &p(9, "(1,2)")).is_err());
}

#[test]
fn psl2_7_checks() {
    let t = dixon_schneider(&psl2(7).unwrap()).unwrap();
    assert!(casolo_verify(&t, 7).unwrap().passed());
    assert!(fusion_control_verify(&t, 7).unwrap().passed());
    let x = t.classes[t.p_element_classes(7)[0]]
        .representative
        .clone()
        .unwrap();
    let (_, sub) = subnormalizer(t.group().unwrap(), &x, Some(7)).unwrap();
    assert_eq!(sub.order(), 21);
}
