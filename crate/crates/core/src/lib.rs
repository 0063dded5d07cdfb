pub mod cli;
pub mod error;
pub mod gkm;
pub mod hallhopf;
pub mod repcat;
pub mod scalars;
pub mod svext;
pub mod verify;
