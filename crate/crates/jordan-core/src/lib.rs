//! Exact noncommutative algebra for the Jordanian quantum groups GL_{h,g}(2) and SL_h(2):
//! rewriting-based normal forms, Hopf structure, bicovariant first-order calculi,
//! exterior algebras, quantum Lie algebras, the h-adic enveloping algebra U_h(sl2)
//! and its small representations.
#![cfg_attr(not(any(test, doctest)), no_std)]

extern crate alloc;

pub mod exactalg;
pub mod ncpoly;
pub mod hopf;
pub mod focalc;
pub mod exterior;
pub mod qlie;
pub mod uhsl2;
pub mod jrep;
