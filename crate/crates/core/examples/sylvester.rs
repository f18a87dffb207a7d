//! Sylvester's bijection between odd-part and distinct-part partitions,
//! read off the hooks of the 2-modular diagram.
//!
//! ```text
//! cargo run --example sylvester -- 7,7,5,5,3,1
//! ```

use euler_partitions::bijections::{sylvester, sylvester_inv, two_modular_hooks, two_modular_rows};
use euler_partitions::cli::two_modular_diagram;
use euler_partitions::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "7,7,5,5,3,1".to_string());
    let lam: Partition = input.parse()?;

    let rows = two_modular_rows(&lam)?;
    print!("{}", two_modular_diagram(&rows, None));
    for (j, hook) in two_modular_hooks(&lam)?.hooks.iter().enumerate() {
        println!("hook {}: {} cells, {} labeled 2", j + 1, hook.cells, hook.twos);
    }

    let mu = sylvester(&lam)?;
    println!("{lam} -> {mu}");
    assert_eq!(sylvester_inv(&mu)?, lam);
    println!("{mu} -> {lam} (inverse)");
    Ok(())
}
