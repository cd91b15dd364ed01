//! Cross-validate every classifier on one synthetic cohort of 20 controls
//! and 20 cases and print the comparison table.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use affectix::classify::{cross_validate, write_table1, ClassifierKind, LabeledDataset};

fn main() -> affectix::Result<()> {
    let seed = 42;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let control = Normal::new(0.1168, 0.0277).unwrap();
    let case = Normal::new(0.1380, 0.0193).unwrap();
    let mut rows: Vec<(Vec<f64>, u8)> = (0..20)
        .map(|_| (vec![control.sample(&mut rng)], 0))
        .collect();
    rows.extend((0..20).map(|_| (vec![case.sample(&mut rng)], 1)));
    let ds = LabeledDataset::from_rows(rows)?;

    let reports = ClassifierKind::ALL
        .iter()
        .map(|&kind| cross_validate(kind, &ds, 10, seed))
        .collect::<affectix::Result<Vec<_>>>()?;
    write_table1(&reports, std::io::stdout())?;

    for id in ["svc", "random_forest"] {
        match id.parse::<ClassifierKind>() {
            Ok(k) => println!("{k}"),
            Err(e) => println!("{id}: {e}"),
        }
    }
    Ok(())
}
