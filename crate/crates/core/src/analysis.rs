//! Fare-versus-stops profiles along a route and their curvature segments.

use crate::error::{Error, Result};
use crate::fares::FareTable;
use crate::money::Money;
use crate::network::{StationId, TransitNetwork, TripKey};

pub const DEFAULT_TOLERANCE_CENTS: u64 = 5;

/// Fares from `origin` to each following station of `route`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareProfile {
    pub origin: StationId,
    pub route: String,
    /// `(stops from origin, station, fare)`, stops starting at 1.
    pub points: Vec<(usize, StationId, Money)>,
}

impl FareProfile {
    pub fn fares(&self) -> impl Iterator<Item = Money> + '_ {
        self.points.iter().map(|(_, _, m)| *m)
    }

    /// `stops,fare_dollars` CSV for external plotting.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("stops,fare_dollars\n");
        for (stops, _, fare) in &self.points {
            out.push_str(&format!("{stops},{fare}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Curvature {
    Concave,
    Convex,
    Linear,
}

impl Curvature {
    pub fn as_str(&self) -> &'static str {
        match self {
            Curvature::Concave => "concave",
            Curvature::Convex => "convex",
            Curvature::Linear => "linear",
        }
    }
}

/// Maximal run of interior profile points with one curvature class.
/// `start` and `end` are inclusive stop indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureSegment {
    pub start: usize,
    pub end: usize,
    pub class: Curvature,
    pub max_abs_second_difference: u64,
}

pub fn route_fare_profile(
    net: &TransitNetwork,
    fares: &FareTable,
    origin: &StationId,
    route: &str,
) -> Result<FareProfile> {
    let def = net
        .route(route)
        .ok_or_else(|| Error::UnknownRoute(route.to_string()))?;
    let position = def
        .position(origin)
        .ok_or_else(|| Error::OriginNotOnRoute {
            origin: origin.clone(),
            route: route.to_string(),
        })?;
    // a far terminus reads the route backwards
    let downstream: Vec<&StationId> = if position + 1 == def.stations.len() {
        def.stations[..position].iter().rev().collect()
    } else {
        def.stations[position + 1..].iter().collect()
    };
    let points = downstream
        .into_iter()
        .enumerate()
        .map(|(i, station)| {
            let trip = TripKey::new(origin.clone(), station.clone())?;
            let fare = fares.fare(&trip).ok_or_else(|| Error::MissingPair {
                a: trip.a().clone(),
                b: trip.b().clone(),
            })?;
            Ok((i + 1, station.clone(), fare))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FareProfile {
        origin: origin.clone(),
        route: route.to_string(),
        points,
    })
}

/// `fare(i+1) − 2·fare(i) + fare(i−1)` for each interior point, in order.
pub fn second_differences(profile: &FareProfile) -> Result<Vec<i64>> {
    if profile.points.len() < 3 {
        return Err(Error::ProfileTooShort(profile.points.len()));
    }
    let fares: Vec<i64> = profile.fares().map(|m| m.cents() as i64).collect();
    Ok(fares.windows(3).map(|w| w[2] - 2 * w[1] + w[0]).collect())
}

pub fn classify_segments(profile: &FareProfile, tolerance: u64) -> Result<Vec<CurvatureSegment>> {
    let d2 = second_differences(profile)?;
    let tol = tolerance as i64;
    let mut segments: Vec<CurvatureSegment> = Vec::new();
    for (offset, &d) in d2.iter().enumerate() {
        let stop = profile.points[offset + 1].0;
        let class = if d < -tol {
            Curvature::Concave
        } else if d > tol {
            Curvature::Convex
        } else {
            Curvature::Linear
        };
        match segments.last_mut() {
            Some(seg) if seg.class == class => {
                seg.end = stop;
                seg.max_abs_second_difference = seg.max_abs_second_difference.max(d.unsigned_abs());
            }
            _ => segments.push(CurvatureSegment {
                start: stop,
                end: stop,
                class,
                max_abs_second_difference: d.unsigned_abs(),
            }),
        }
    }
    Ok(segments)
}
