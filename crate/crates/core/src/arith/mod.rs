pub mod int;
pub mod polymod;
pub mod lattice;
