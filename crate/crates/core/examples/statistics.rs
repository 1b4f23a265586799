//! Statistic values on S_4, their sums and generating polynomials.

use permrep::perm::{self, StatKind};

fn main() -> permrep::Result<()> {
    let n = 4;
    println!(
        "{:<12} {:>3} {:>3} {:>3} {:>3} {:>3}",
        "sigma", "maj", "des", "inv", "exc", "fix"
    );
    for p in perm::all_permutations(n)? {
        println!(
            "{:<12} {:>3} {:>3} {:>3} {:>3} {:>3}",
            p.to_string(),
            p.stat(StatKind::Maj),
            p.stat(StatKind::Des),
            p.stat(StatKind::Inv),
            p.stat(StatKind::Exc),
            p.stat(StatKind::Fix)
        );
    }
    for kind in StatKind::ALL {
        println!(
            "{kind}: sum {}, polynomial {:?}",
            perm::stat_sum(kind, n)?,
            perm::generating_polynomial(kind, n)?
        );
    }
    Ok(())
}
