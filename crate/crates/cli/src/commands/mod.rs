pub mod eval;
pub mod figure;
pub mod solve;
pub mod verify;
