//! Exact computer algebra for quantization no-go computations on the
//! two-sphere: surd arithmetic, the Poisson algebra of spin polynomials,
//! spherical harmonics, Clebsch–Gordan machinery, spin representations,
//! normal ordering in the enveloping algebra of su(2) and the proof drivers
//! that replay the no-go arguments step by step.

pub mod clebsch;
pub mod exactnum;
pub mod exec;
pub mod harmonics;
pub mod matrix;
pub mod nogo;
pub mod pbw;
pub mod poly;
pub mod selftest;
pub mod sphere_poly;
pub mod spinrep;
