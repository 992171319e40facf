//! Exact-arithmetic toolkit for symmetric ribbon categories of finite-
//! dimensional representations: categorical and partial traces, ambidextrous
//! objects, traces on tensor ideals and modified dimensions, plus the
//! Lie-superalgebra weight combinatorics (atypicality, hook Schur products,
//! constant-atypicality chains) that govern modified dimensions for gl(m|n).
//!
//! Layering, bottom up:
//! - [`field`], [`matrix`]: exact scalars (GF(pᵉ), ℚ) and dense linear algebra;
//! - [`rep`]: representations of three flavors (group / Lie / super-Lie),
//!   morphisms, tensor/dual/braiding structure, intertwiner bases, partial and
//!   categorical traces;
//! - [`decomp`]: indecomposable decompositions, retracts, tensor-ideal
//!   membership;
//! - [`ambimod`]: ambidexterity verdicts, traces on ideals, modified
//!   dimensions, the canonical-epimorphism splitting criterion;
//! - [`zoo`]: the concrete example categories (cyclic groups, the Klein four
//!   group, restricted sl₂, gl(1|1));
//! - [`superk`]: gl(m|n) weight/partition combinatorics;
//! - [`suite`], [`cli`]: the reproduction battery and the command-line tool.

pub mod ambimod;
pub mod cli;
pub mod decomp;
pub mod field;
pub mod matrix;
pub mod rep;
pub mod suite;
pub mod superk;
pub mod zoo;
