//! Instance generators, text file formats and SVG rendering.

pub mod generate;
pub mod instance;
pub mod result;
pub mod svg;

pub use generate::{
    gen_clustered, gen_depth_reduction, gen_positioning_tradeoff, gen_random, gen_spirograph,
};
pub use instance::{instance_hash, parse_instance, serialize_instance};
pub use result::{parse_result, serialize_result, ResultFile};
pub use svg::{render_svg, SvgOptions};

/// Version written to, and required from, every file this crate reads.
pub const SCHEMA_VERSION: u32 = 1;

/// Shortest exact form: 17 significant digits round-trip every double.
pub(crate) fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
