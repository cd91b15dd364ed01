mod common;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use affectix::classify::{cross_validate, ClassifierKind, LabeledDataset};

#[test]
fn shuffled_labels_sit_at_chance() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut total = 0.0;
    for seed in 0..50u64 {
        let rows = common::cohort(&mut rng, 20);
        let mut labels: Vec<u8> = rows.iter().map(|r| r.1).collect();
        labels.shuffle(&mut rng);
        let rows = rows
            .into_iter()
            .zip(labels)
            .map(|((x, _), l)| (x, l))
            .collect();
        let ds = LabeledDataset::from_rows(rows).unwrap();
        total += cross_validate(ClassifierKind::LogReg, &ds, 10, seed)
            .unwrap()
            .accuracy
            .mean;
    }
    let mean = total / 50.0;
    assert!((mean - 0.5).abs() <= 0.15, "mean accuracy {mean}");
}

#[test]
fn reports_are_bit_identical_and_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ds = LabeledDataset::from_rows(common::cohort(&mut rng, 20)).unwrap();
    for kind in ClassifierKind::ALL {
        let a = cross_validate(kind, &ds, 10, 42).unwrap();
        let b = cross_validate(kind, &ds, 10, 42).unwrap();
        assert_eq!(a, b, "{kind}");
        assert_eq!(a.per_fold.len(), 10);
        for f in &a.per_fold {
            assert!((0.0..=1.0).contains(&f.accuracy));
            assert!((0.0..=1.0).contains(&f.f1));
            assert!(f.roc_auc.is_none_or(|v| (0.0..=1.0).contains(&v)));
        }
        // 2+2 test folds always hold both classes
        assert_eq!(a.auc_excluded_folds, 0);
    }
}

#[test]
fn cohort_mean_and_std_features() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let rows: Vec<(Vec<f64>, u8)> = common::cohort(&mut rng, 20)
        .into_iter()
        .map(|(x, l)| (vec![x[0], 0.02 + 0.1 * x[0]], l))
        .collect();
    let ds = LabeledDataset::from_rows(rows).unwrap();
    for kind in ClassifierKind::ALL {
        let r = cross_validate(kind, &ds, 10, 1).unwrap();
        assert!(r.accuracy.mean > 0.4, "{kind}: {}", r.accuracy.mean);
    }
}
