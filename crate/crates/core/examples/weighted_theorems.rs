//! Checks every weighted form of Euler's theorem by enumeration.
//!
//! ```text
//! cargo run --release --example weighted_theorems -- 30
//! ```

use euler_partitions::weighted::verify_theorem;
use euler_partitions::IdentityId;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(25);
    for id in IdentityId::ALL {
        let report = verify_theorem(id, n_max)?;
        let last = report.lhs_values.last().expect("n_max >= 1");
        println!(
            "{:<6} {:<5} value at n={n_max}: {last:<12} {}",
            id.name(),
            if report.passed() { "ok" } else { "FAIL" },
            id.description()
        );
    }
    Ok(())
}
