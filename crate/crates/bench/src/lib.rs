//! Fixtures shared by the benchmarks.

use homyb::{catalog_get, HomStructure, Matrix, SolutionOperator, SystemTriple, Twisted, Validated};

/// The thm2.4 operator of the 4-dimensional catalog algebra, with its twist.
pub fn h4_operator() -> (SolutionOperator, Matrix) {
    let e = catalog_get("ex2.5").expect("catalog entry");
    let op = e.build().expect("builds");
    let alpha = e.embedded().expect("embeds").alpha().clone();
    (op, alpha)
}

/// The thm5.2 triple of the same algebra.
pub fn h4_system() -> (SystemTriple, Matrix) {
    let e = catalog_get("ex2.5").expect("catalog entry");
    let HomStructure::Algebra(a) = e.embedded().expect("embeds") else {
        unreachable!("ex2.5 is an algebra")
    };
    let alpha = a.alpha().clone();
    let t = homyb::constructions::system_algebra(&Validated::assume_valid(a), &e.lambda(), &e.nu()).expect("builds");
    (t, alpha)
}
