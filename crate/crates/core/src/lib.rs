pub mod arith;
pub mod certificate;
pub mod cli;
pub mod construct;
pub mod dispatch;
pub mod oracle;
pub mod params;
pub mod structure;
