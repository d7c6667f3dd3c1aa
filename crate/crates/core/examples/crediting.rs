//! Author credit under every counting scheme for a few byline lengths.
//!
//!     cargo run --example crediting

use dscmetrics::{allocate_credits, CountingScheme};

fn main() -> dscmetrics::Result<()> {
    for n in [1, 2, 3, 5, 10] {
        println!("{n} authors");
        for scheme in CountingScheme::ALL {
            let credits = allocate_credits(scheme, n)?;
            let shown: Vec<String> = credits
                .as_slice()
                .iter()
                .map(|c| format!("{c:.3}"))
                .collect();
            println!(
                "  {:<13} [{}]  total {:.3}",
                scheme.as_str(),
                shown.join(", "),
                credits.total()
            );
        }
    }
    Ok(())
}
