use thiserror::Error;

use crate::network::StationId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid station id {0:?}: expected a non-empty [a-z0-9-]+ slug")]
    InvalidStationId(String),

    #[error("duplicate station {0}")]
    DuplicateStation(StationId),

    #[error("route {route:?} references unknown station {station}")]
    UnknownStationInRoute { route: String, station: StationId },

    #[error("route {route:?} is invalid: {reason}")]
    InvalidRoute { route: String, reason: String },

    #[error("network is not a tree: {0}")]
    GraphNotTree(String),

    #[error("unknown station {0}")]
    UnknownStation(String),

    #[error("trip endpoints must differ, got {0} twice")]
    DegenerateTrip(StationId),

    #[error("malformed money value {0:?}")]
    MalformedMoney(String),

    #[error("fare table has no fare for {a} <-> {b}")]
    MissingPair { a: StationId, b: StationId },

    #[error("asymmetric fare for {a} <-> {b}: {forward} vs {backward}")]
    AsymmetricFare {
        a: StationId,
        b: StationId,
        forward: String,
        backward: String,
    },

    #[error("fare table lists station {0} more than once")]
    DuplicateFareStation(StationId),

    #[error("zone surcharges need a network made of a single line route")]
    ZoneOnNonLineNetwork,

    #[error("invalid fare model: {0}")]
    InvalidModel(String),

    #[error("unknown route {0:?}")]
    UnknownRoute(String),

    #[error("station {origin} is not on route {route:?}")]
    OriginNotOnRoute { origin: StationId, route: String },

    #[error("profile needs at least 3 points, got {0}")]
    ProfileTooShort(usize),

    #[error("brute-force oracle supports at most {max} stations, got {got}")]
    InstanceTooLarge { max: usize, got: usize },

    #[error("malformed csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Csv(err.to_string())
    }
}
