//! Catalog files, verification runs and reports for `shephard-core`.

pub mod catalog_file;
pub mod checks;
pub mod export;
pub mod report;
