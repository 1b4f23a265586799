//! des and maj in the descent algebra; inv outside it.

use permrep::solomon::SolomonBasis;
use permrep::{fmt_ratio, StatKind, SymmetricGroup};

fn main() -> permrep::Result<()> {
    let n = 4;
    let g = SymmetricGroup::new(n)?;
    let basis = SolomonBasis::new(&g)?;
    for kind in [StatKind::Des, StatKind::Maj, StatKind::Inv] {
        match basis.membership(&g.from_stat(kind, false))?.support() {
            Some(terms) => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|t| format!("{} B{}", fmt_ratio(&t.coefficient), t.parts))
                    .collect();
                println!("{kind} = {}", parts.join(" + "));
            }
            None => println!("{kind} is not in the descent algebra"),
        }
    }
    let closure = permrep::solomon::closure_check(&g)?;
    println!(
        "closed under products: {} ({} pairs)",
        closure.passed, closure.pairs_checked
    );
    Ok(())
}
