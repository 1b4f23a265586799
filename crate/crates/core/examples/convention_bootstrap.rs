//! Which composition convention makes the statistics generate a small
//! one-sided ideal with the expected convolution identities.

fn main() -> permrep::Result<()> {
    let outcome = permrep::convention::bootstrap(3)?;
    for c in &outcome.candidates {
        println!(
            "{} translates on the {} side: span {}, statistics inside {}, identities {}",
            c.convention, c.side, c.translate_span_dim, c.centered_in_span, c.identities_hold
        );
    }
    println!(
        "pinned: {} ({}), ideal side {}",
        outcome.convention,
        outcome.convention.describe(),
        outcome.ideal_side
    );
    Ok(())
}
