pub mod cli;
pub mod exactlin;
pub mod monocech;
pub mod verify;
pub mod weylact;
