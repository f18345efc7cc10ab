//! Rings and polynomials from text, and a reproducible JSON report.

use dmkit::report::{emit_report, Format, SessionConfig};
use dmkit::repro::{run, Command};
use dmkit::{dsl, PrimeField, Precision};

fn main() -> dmkit::Result<()> {
    let text = "\
# polynomials live in the most recently declared ring
ring R = semigroup(3,4);
g = s^7 + s^6*t + s^8*t^2;
f = (s^6 - s^8*t)^2;
ring A = quotient(R, ord>=16);
h = (s^6 - s^8*t)^2;
";
    let session = dsl::parse_input(text, PrimeField::new(101)?, Precision::Auto { margin: 0 })?;
    println!("{}", session.program.normalized());
    let (r, f) = session.semigroup_poly("f")?;
    println!("f expands to {}", f.display(r));
    let (a, h) = session.algebra_poly("h")?;
    println!("in A = R/(order >= 16) it becomes {}", h.display(a));

    match dsl::parse_input("ring R = semigroup(3,4);\ng = s^5;", PrimeField::new(101)?, Precision::Auto { margin: 0 }) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("rejected: {e}"),
    }

    let report = run(&Command::Analyze { text: text.into() }, &SessionConfig::default())?;
    print!("{}", String::from_utf8_lossy(&emit_report(&report, Format::Json)));
    Ok(())
}
