//! Eigenvalues of multiplication by each statistic, checked exactly.

use permrep::spectra;
use permrep::{fmt_ratio, StatKind, SymmetricGroup};

fn main() -> permrep::Result<()> {
    let g = SymmetricGroup::new(5)?;
    for kind in StatKind::SKEW {
        let r = spectra::verify_spectrum(&g, kind)?;
        println!("{kind} n=5 passed={}", r.passed);
        for e in &r.eigenvalues {
            println!(
                "  {:<9} {:>6}  x{}",
                e.subspace,
                fmt_ratio(&e.value),
                e.verified_multiplicity
            );
        }
        println!("  kernel dimension {}", r.kernel_dim);
    }
    let fix = spectra::fix_identity(&g)?;
    println!(
        "mean of stat * (fix - 1): {}",
        fix.iter().map(fmt_ratio).collect::<Vec<_>>().join(", ")
    );
    let cpd = spectra::cpd_check(&g, StatKind::Inv, 200, 1)?;
    println!(
        "inv form on sum-zero vectors: max {} (eigenbasis), {} (random)",
        fmt_ratio(&cpd.eigenbasis_max),
        fmt_ratio(&cpd.random_max)
    );
    Ok(())
}
