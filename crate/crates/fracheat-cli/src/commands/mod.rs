pub mod fode;
pub mod mlf;
pub mod solve;
pub mod sweep;
pub mod verify;
