pub mod poly;
pub mod ribbon;
pub mod br;
pub mod transition;
pub mod links;
pub mod corpus;
pub mod io;
pub mod verify;
