//! A workbench for exhaustively checking algebraic structures that carry
//! two orders at once: an order of logical strength and an order of
//! information.
//!
//! The same handful of constructions keeps appearing wherever programs must
//! reason with partial, possibly contradictory data: pairs `(for, against)`
//! of evidence drawn from a lattice. This crate builds those structures over
//! small finite carriers and verifies their advertised laws by brute force:
//!
//! * [`order`]: finite lattices with explicit order tables, plus
//!   isomorphism search for small structures.
//! * [`bilattice`]: twist products carrying both orders, interlacing,
//!   residuation, and the representation of a bilattice as a twist.
//! * [`chu`]: the linear-logic model of pairs over a Heyting algebra whose
//!   components do not overlap, and the translation between its connectives
//!   and the twist connectives.
//! * [`dframe`]: d-frames and nd-frames, their axioms, a validity checker
//!   for the negation-and-implication logic they carry, and the passage to
//!   and from partial frames.
//! * [`blame`]: a cast calculus over finite base carriers with four
//!   subtyping relations, their decomposition laws, and blame safety.
//! * [`lvar`]: join-semilattice variables with threshold reads, simulated
//!   under every interleaving to observe determinism.
//! * [`structure_file`]: the line-based text format the command-line tool
//!   reads fixtures from.
//!
//! Suites report through [`report::Report`], a deterministic list of named
//! pass/fail entries with counterexample witnesses.

pub mod bilattice;
pub mod blame;
pub mod chu;
pub mod dframe;
pub mod lvar;
pub mod order;
pub mod report;
pub mod structure_file;

pub use report::Report;

/// Compiles and runs every code block in the guide, so the book cannot
/// drift from the library it describes.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $path))]
            mod $name {}
        };
    }

    chapter!(introduction, "introduction.md");
    chapter!(lattices, "lattices.md");
    chapter!(twist_products, "twist-products.md");
    chapter!(linear_model, "linear-model.md");
    chapter!(d_frames, "d-frames.md");
    chapter!(casts_and_blame, "casts-and-blame.md");
    chapter!(lattice_variables, "lattice-variables.md");
    chapter!(command_line, "command-line.md");
}
