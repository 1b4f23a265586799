//! Dimensions of the one-sided ideals generated by maj, des, inv and exc.

use permrep::{StatKind, SymmetricGroup};

fn main() -> permrep::Result<()> {
    for n in 3..=5 {
        let g = SymmetricGroup::new(n)?;
        let side = g.ideal_side();
        let dims: Vec<String> = [StatKind::Maj, StatKind::Des, StatKind::Inv, StatKind::Exc]
            .iter()
            .map(|&k| {
                Ok(format!(
                    "{k} {}",
                    g.ideal_dimension(&g.from_stat(k, false), side)?
                ))
            })
            .collect::<permrep::Result<_>>()?;
        println!("n={n} (order {}): {}", g.order(), dims.join(", "));
        println!(
            "  expected n(n-1)/2+1 = {}, (n-1)^2+1 = {}",
            n * (n - 1) / 2 + 1,
            (n - 1) * (n - 1) + 1
        );
    }
    Ok(())
}
