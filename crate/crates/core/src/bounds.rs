//! Size guardrails for the exhaustive kernels.
//!
//! Everything in this crate is exact and brute-force friendly, which means
//! runtime and memory grow quickly with the input. The guardrails below keep
//! accidental huge inputs from hanging a session; they are configuration, not
//! hard limits, and every bounded entry point has a `*_bounded` variant that
//! accepts an explicit figure.

/// Default cap on the order of a constructed finite field.
pub const DEFAULT_MAX_FIELD_ORDER: u64 = 1 << 16;

/// Default cap on the number of points of a constructed design.
pub const DEFAULT_MAX_DESIGN_POINTS: usize = 4096;

/// Default cap on the number of projective classes enumerated over a ring.
pub const DEFAULT_MAX_CLASSES: usize = 100_000;

/// Default cap on the vertex count for whole-graph pair counting.
pub const DEFAULT_MAX_VERTICES: usize = 2000;

/// Default cap on the vertex count for isomorphism search.
pub const DEFAULT_MAX_ISO_VERTICES: usize = 500;

/// Bundle of guardrails used by the descriptor builder and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_field_order: u64,
    pub max_design_points: usize,
    pub max_classes: usize,
    pub max_vertices: usize,
    pub max_iso_vertices: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_field_order: DEFAULT_MAX_FIELD_ORDER,
            max_design_points: DEFAULT_MAX_DESIGN_POINTS,
            max_classes: DEFAULT_MAX_CLASSES,
            max_vertices: DEFAULT_MAX_VERTICES,
            max_iso_vertices: DEFAULT_MAX_ISO_VERTICES,
        }
    }
}

impl Bounds {
    /// Uniform guardrail: every cap set to `n`. Used by the CLI `--bound` flag.
    pub fn uniform(n: usize) -> Self {
        Bounds {
            max_field_order: n as u64,
            max_design_points: n,
            max_classes: n,
            max_vertices: n,
            max_iso_vertices: n,
        }
    }
}
