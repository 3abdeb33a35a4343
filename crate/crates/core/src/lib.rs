pub mod boltje_maisch;
pub mod combinatorics;
pub mod hecke;
pub mod linalg;
pub mod qschur;
pub mod resolutions;
pub mod ring;
