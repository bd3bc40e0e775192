pub mod alphabet;
pub mod automata;
pub mod cli;
pub mod ideals;
pub mod regex;
pub mod verify;
pub mod witnesses;
