pub mod chartab;
pub mod classes;
pub mod group;
pub mod theorems;
pub mod workbench;
