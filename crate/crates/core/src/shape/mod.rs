//! Shape classification: thinness, paths, blocks, ladders, stairs, k-convexity and zig-zag walks.

mod convexity;
mod path;
mod zigzag;

pub use convexity::{convexity_degree, hq_complement, is_k_convex, is_thin, HqComplement};
pub use path::{
    classify_path, closed_path_features, stair_analysis, ClosedPathFeatures, PathDecomposition, PathKind, Stair,
    StairReport,
};
pub use zigzag::{find_zigzag_walk, find_zigzag_walks, validate_walk, WalkStep, ZigZagWalk, DEFAULT_ZIGZAG_BUDGET};
