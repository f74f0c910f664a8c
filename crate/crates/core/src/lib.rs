//! Transit fare arbitrage: two riders whose paths overlap can swap tickets
//! mid-ride so the fare system records a different pair of trips. This crate
//! models tree-shaped transit networks and their fare tables, computes the
//! gain of such swaps, enumerates every beneficial pair, and inspects
//! fare-versus-stops profiles for the concave and convex stretches that make
//! swapping pay.
//!
//! Enumeration runs on rayon when the default `parallel` feature is enabled
//! and falls back to a sequential loop otherwise; both produce identical,
//! canonically ordered output.

pub mod analysis;
pub mod engine;
pub mod error;
pub mod fares;
pub mod money;
pub mod network;
pub mod oracle;
pub mod report;

pub use analysis::{
    classify_segments, route_fare_profile, second_differences, Curvature, CurvatureSegment,
    FareProfile, DEFAULT_TOLERANCE_CENTS,
};
pub use engine::{
    check_arbitrage_free, enumerate_arbitrage, summarize, swap_gain, ArbitrageEngine,
    ArbitrageRecord, ArbitrageSummary, Execution, PairSwap, Ride, SwapOutcome,
};
pub use error::{Error, Result};
pub use fares::{
    curve_shape, generate_fare_table, parse_fare_table, CurveShape, FareCurveModel, FareTable,
    SyntheticTripGeometry, Zone,
};
pub use money::{Money, Percent};
pub use network::{
    build_network, load_network, path_overlap, swap_partition, tree_path, OverlapSegment, RouteDef,
    Sides, StationId, TransitNetwork, TreePath, TripKey,
};
pub use oracle::brute_force_oracle;
