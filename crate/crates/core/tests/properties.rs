use proptest::prelude::*;

use two_rig_lab::linalg::Matrix;
use two_rig_lab::partitions::{partitions_up_to, Partition};
use two_rig_lab::rig::{direct_sum, tensor, RigMorphism, RigObject, TwoIdeal};
use two_rig_lab::schur_eval::phi_n_object;
use two_rig_lab::verify::{run_all, VerifyConfig};

fn small_partition(max: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn small_object(max_degree: usize) -> impl Strategy<Value = RigObject> {
    prop::collection::vec((small_partition(max_degree), 1u64..3), 0..3)
        .prop_map(RigObject::from_multiplicities)
}

fn contains_diagram(big: &Partition, small: &Partition) -> bool {
    small.rows() <= big.rows() && (0..small.rows()).all(|i| small.part(i) <= big.part(i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_is_commutative_and_associative(
        a in small_object(2),
        b in small_object(2),
        c in small_object(2),
    ) {
        let ab = tensor(&a, &b, 6).unwrap().value;
        prop_assert_eq!(&ab, &tensor(&b, &a, 6).unwrap().value);
        let left = tensor(&ab, &c, 6).unwrap().value;
        let right = tensor(&a, &tensor(&b, &c, 6).unwrap().value, 6).unwrap().value;
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_distributes_over_sums(a in small_object(3), b in small_object(3), c in small_object(3)) {
        let lhs = tensor(&a, &direct_sum(&b, &c), 6).unwrap().value;
        let rhs = direct_sum(&tensor(&a, &b, 6).unwrap().value, &tensor(&a, &c, 6).unwrap().value);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_respects_tensor(a in small_object(3), b in small_object(3), n in 1usize..4) {
        let t = tensor(&a, &b, 6).unwrap().value;
        prop_assert_eq!(phi_n_object(&t, n), phi_n_object(&a, n) * phi_n_object(&b, n));
    }

    #[test]
    fn principal_ideals_are_diagram_upsets(gens in prop::collection::vec(small_partition(4), 0..3)) {
        let g = RigObject::from_multiplicities(gens.iter().map(|p| (p.clone(), 1)));
        let ideal = TwoIdeal::generated_by(&g, 7).unwrap();
        for l in partitions_up_to(7) {
            let expect = gens.iter().any(|m| contains_diagram(&l, m));
            prop_assert_eq!(ideal.contains(&l).unwrap(), expect, "{}", l);
        }
    }

    #[test]
    fn composition_is_associative(entries in prop::collection::vec(-3i64..4, 27)) {
        let a = RigObject::from_multiplicities([
            (Partition::row(2), 2),
            (Partition::column(2), 1),
        ]);
        let mk = |off: usize| {
            let e = &entries[off..off + 5];
            RigMorphism::new(
                a.clone(),
                a.clone(),
                [
                    (Partition::row(2), Matrix::from_i64(&[vec![e[0], e[1]], vec![e[2], e[3]]])),
                    (Partition::column(2), Matrix::from_i64(&[vec![e[4]]])),
                ],
            )
            .unwrap()
        };
        let (f, g, h) = (mk(0), mk(5), mk(10));
        prop_assert_eq!(
            f.compose(&g).unwrap().compose(&h).unwrap(),
            f.compose(&g.compose(&h).unwrap()).unwrap()
        );
        let lhs = f.compose(&g.add(&h).unwrap()).unwrap();
        let rhs = f.compose(&g).unwrap().add(&f.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn acceptance_reports_are_deterministic() {
    let config = VerifyConfig { seed: 3, ..VerifyConfig::default() };
    let first = serde_json::to_string(&run_all(&config).unwrap()).unwrap();
    let second = serde_json::to_string(&run_all(&config).unwrap()).unwrap();
    assert_eq!(first, second);
    let reports = run_all(&config).unwrap();
    let names: Vec<_> = reports.iter().map(|r| r.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
}
