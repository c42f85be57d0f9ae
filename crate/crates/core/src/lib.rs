//! Index and reflective index of irreducible Riemannian symmetric spaces.

pub mod catalog;
pub mod cli;
pub mod elimination;
pub mod expr;
pub mod hermitian;
pub mod index_core;
pub mod lie;
pub mod rootsys;
