//! Products of centered statistics in the group algebra.

use permrep::spectra;
use permrep::SymmetricGroup;

fn main() -> permrep::Result<()> {
    for n in 3..=5 {
        let g = SymmetricGroup::new(n)?;
        for r in spectra::convolution_identities(&g)? {
            println!(
                "n={n} {:<40} {}",
                r.name,
                if r.passed { "holds" } else { "fails" }
            );
        }
    }
    Ok(())
}
