pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod cover;
pub mod geom;
pub mod hexagon;
pub mod oracle;
pub mod pentagon;
pub mod search;
