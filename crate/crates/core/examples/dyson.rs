//! Dyson's map and its iteration, which gives a second bijection from
//! odd-part to distinct-part partitions.
//!
//! ```text
//! cargo run --example dyson
//! ```

use euler_partitions::bijections::{dyson, dyson_inv, iterated_dyson_inv, iterated_dyson_trace};
use euler_partitions::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lam: Partition = "5,4,3,3,2,1".parse()?;
    let mu = dyson(&lam, 1)?;
    println!("psi_1({lam}) = {mu}   rank {} -> {}", lam.rank(), mu.rank());
    assert_eq!(dyson_inv(&mu, 1)?, lam);

    let odd: Partition = "5,5,3,3,1".parse()?;
    let trace = iterated_dyson_trace(&odd)?;
    for (r, nu) in &trace.steps {
        println!("  after psi_{r}: {nu}");
    }
    let result = trace.result();
    println!("{odd} -> {result}");
    assert_eq!(iterated_dyson_inv(&result)?, odd);
    Ok(())
}
