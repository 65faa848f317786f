//! Fixture arcs shared by the benchmarks.

use arclab_core::ArcFile;

pub const Q11_SEVEN: &str = include_str!("../../../arcs/q11_seven.arc");
pub const Q13_SIX: &str = include_str!("../../../arcs/q13_six.arc");
pub const Q81_ELEVEN: &str = include_str!("../../../arcs/q81_eleven.arc");

pub fn load(text: &str) -> ArcFile {
    ArcFile::parse(text).expect("fixture arcs parse")
}
