pub mod commands;
pub mod file;
pub mod report;
