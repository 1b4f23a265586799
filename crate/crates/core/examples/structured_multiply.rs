//! Multiplying by a statistic through the matrix model instead of convolving.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use permrep::spectra;
use permrep::{fmt_ratio, StatKind, SymmetricGroup};

fn main() -> permrep::Result<()> {
    let n = 6;
    let g = SymmetricGroup::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f = spectra::random_ideal_element(&g, &mut rng);
    for kind in StatKind::SKEW {
        let fast = spectra::structured_multiply(&g, &f, kind)?;
        let naive = g.convolve(&f, &g.from_stat(kind, true))?;
        assert_eq!(fast, naive);
        let r = spectra::benchmark(&g, kind, 3, 11)?;
        println!(
            "{kind} n={n}: naive {} us, structured {} us, operation ratio {}",
            r.naive_ns / 1000,
            r.structured_ns / 1000,
            fmt_ratio(&r.op_ratio)
        );
    }
    Ok(())
}
