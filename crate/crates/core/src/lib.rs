//! Set-theoretic Yang-Baxter homology of finite biracks and biquandles.
//!
//! * [`algebra`]: finite Yang-Baxter operators and their axioms.
//! * [`complex`]: face maps, boundary matrices, degenerate and normalized complexes.
//! * [`smith`]: exact Smith normal forms, homology groups and class coordinates.
//! * [`knots`]: oriented diagrams, biquandle colorings and the homological state sum.
//! * [`cli`]: the `ybh` command line front end.

pub mod algebra;
pub mod smith;
pub mod complex;
pub mod knots;
pub mod cli;
