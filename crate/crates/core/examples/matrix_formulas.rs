//! Statistics read off a skew-symmetric matrix model.

use permrep::skewrep;
use permrep::{fmt_ratio, Permutation, StatKind, SymmetricGroup};

fn main() -> permrep::Result<()> {
    let n = 5;
    let g = SymmetricGroup::new(n)?;
    for kind in StatKind::SKEW {
        let w = skewrep::w(&g, &g.from_stat(kind, true))?;
        println!("W(centered {kind}) =\n{w}");
    }
    let sigma = Permutation::new(&[3, 5, 1, 4, 2])?;
    for kind in StatKind::SKEW {
        let v = skewrep::stat_via_matrix(g.convention(), kind, &sigma)?;
        println!(
            "{kind}({sigma}) = {} via the matrix, {} directly",
            fmt_ratio(&v),
            sigma.stat(kind)
        );
    }
    println!(
        "p1(h_inv) =\n{}",
        skewrep::p1(&skewrep::h_matrix(StatKind::Inv, n)?)
    );
    println!(
        "p2(h_inv) =\n{}",
        skewrep::p2(&skewrep::h_matrix(StatKind::Inv, n)?)
    );
    Ok(())
}
