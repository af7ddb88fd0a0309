pub mod barriers;
pub mod bipartite;
pub mod bounds;
pub mod cli;
pub mod decomposition;
pub mod graph;
pub mod minors;
pub mod pipeline;
pub mod separator;
pub mod slimness;
