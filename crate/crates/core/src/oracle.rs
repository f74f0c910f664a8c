//! Literal reference enumeration for small networks.
//!
//! Every trip's path is materialized as an explicit station list found by
//! depth-first search, and shared segments are found by trying every
//! contiguous window of one path against the other. Nothing here uses the
//! engine's index tables, so the two can check each other.

use crate::engine::{sort_records, ArbitrageRecord, Ride};
use crate::error::{Error, Result};
use crate::fares::FareTable;
use crate::money::Money;
use crate::network::{StationId, TransitNetwork, TripKey};

pub const ORACLE_MAX_STATIONS: usize = 12;

fn dfs_path(net: &TransitNetwork, from: usize, to: usize) -> Vec<usize> {
    fn walk(net: &TransitNetwork, at: usize, to: usize, path: &mut Vec<usize>) -> bool {
        path.push(at);
        if at == to {
            return true;
        }
        for &next in net.neighbors(at) {
            if !path.contains(&next) && walk(net, next, to, path) {
                return true;
            }
        }
        path.pop();
        false
    }
    let mut path = Vec::new();
    walk(net, from, to, &mut path);
    path
}

/// Longest run of consecutive stations of `p1` that also appears
/// consecutively (either direction) in `p2`, if it has at least two stations.
fn longest_shared_window<'p>(p1: &'p [StationId], p2: &[StationId]) -> Option<&'p [StationId]> {
    let reversed: Vec<StationId> = p2.iter().rev().cloned().collect();
    let appears_in =
        |window: &[StationId], hay: &[StationId]| hay.windows(window.len()).any(|w| w == window);
    let mut best: Option<&[StationId]> = None;
    for start in 0..p1.len() {
        for end in start + 2..=p1.len() {
            let window = &p1[start..end];
            if (appears_in(window, p2) || appears_in(window, &reversed))
                && best.is_none_or(|b| window.len() > b.len())
            {
                best = Some(window);
            }
        }
    }
    best
}

fn fare(fares: &FareTable, x: &StationId, y: &StationId) -> Result<u64> {
    let trip = TripKey::new(x.clone(), y.clone())?;
    fares
        .fare(&trip)
        .map(Money::cents)
        .ok_or_else(|| Error::MissingPair {
            a: trip.a().clone(),
            b: trip.b().clone(),
        })
}

/// Same contract as the engine's enumeration, computed the slow way.
pub fn brute_force_oracle(
    net: &TransitNetwork,
    fares: &FareTable,
    min_gain: Money,
) -> Result<Vec<ArbitrageRecord>> {
    let n = net.station_count();
    if n > ORACLE_MAX_STATIONS {
        return Err(Error::InstanceTooLarge {
            max: ORACLE_MAX_STATIONS,
            got: n,
        });
    }
    let floor = min_gain.cents().max(1) as i64;

    let mut paths: Vec<Vec<StationId>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            paths.push(
                dfs_path(net, i, j)
                    .into_iter()
                    .map(|k| net.station(k).clone())
                    .collect(),
            );
        }
    }

    let mut records = Vec::new();
    for (x, p1) in paths.iter().enumerate() {
        for p2 in &paths[x + 1..] {
            let Some(window) = longest_shared_window(p1, p2) else {
                continue;
            };
            let (e1, e2) = (&window[0], &window[window.len() - 1]);
            // endpoint of `path` lying beyond `near` when walking away from `far`
            let side = |path: &[StationId], near: &StationId, far: &StationId| {
                let pn = path.iter().position(|s| s == near).unwrap();
                let pf = path.iter().position(|s| s == far).unwrap();
                if pn < pf {
                    path[0].clone()
                } else {
                    path[path.len() - 1].clone()
                }
            };
            let (a1, b1) = (side(p1, e1, e2), side(p1, e2, e1));
            let (a2, b2) = (side(p2, e1, e2), side(p2, e2, e1));

            let before = fare(fares, &a1, &b1)? + fare(fares, &a2, &b2)?;
            if a1 == a2 || b1 == b2 {
                continue;
            }
            let after = fare(fares, &a1, &b2)? + fare(fares, &a2, &b1)?;
            let gain = before as i64 - after as i64;
            if gain < floor {
                continue;
            }

            let (from, _) = net.travel_direction(e1, e2);
            let (mut r1, mut r2) = if from == e1 {
                (Ride::new(a1, b1), Ride::new(a2, b2))
            } else {
                (Ride::new(b1, a1), Ride::new(b2, a2))
            };
            let boarding_distance = |ride: &Ride| {
                let origin = net.index_of(&ride.origin).unwrap();
                dfs_path(net, origin, net.index_of(from).unwrap()).len() - 1
            };
            let (d1, d2) = (boarding_distance(&r1), boarding_distance(&r2));
            if d2 > d1 || (d2 == d1 && r2.origin < r1.origin) {
                std::mem::swap(&mut r1, &mut r2);
            }
            let original_total = Money::from_cents(
                fare(fares, &r1.origin, &r1.destination)?
                    + fare(fares, &r2.origin, &r2.destination)?,
            );
            records.push(ArbitrageRecord {
                swapped1: Ride::new(r1.origin.clone(), r2.destination.clone()),
                swapped2: Ride::new(r2.origin.clone(), r1.destination.clone()),
                trip1: r1,
                trip2: r2,
                gain: Money::from_cents(gain as u64),
                original_total,
            });
        }
    }
    sort_records(&mut records);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_network, RouteDef};

    fn line(n: usize) -> TransitNetwork {
        let ids: Vec<StationId> = (0..n)
            .map(|i| StationId::new(format!("s{i:02}")).unwrap())
            .collect();
        build_network(
            ids.iter().map(|s| (s.clone(), s.to_string())).collect(),
            vec![RouteDef::new("line", ids)],
        )
        .unwrap()
    }

    #[test]
    fn two_stations_have_no_pairs() {
        let net = line(2);
        let fares = FareTable::from_fn(&net, |_| Money::from_cents(300));
        assert!(brute_force_oracle(&net, &fares, Money::ZERO)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn refuses_large_networks() {
        let net = line(13);
        let fares = FareTable::from_fn(&net, |_| Money::from_cents(300));
        assert_eq!(
            brute_force_oracle(&net, &fares, Money::ZERO),
            Err(Error::InstanceTooLarge { max: 12, got: 13 })
        );
    }

    #[test]
    fn shared_window_search() {
        let ids = |v: &[&str]| -> Vec<StationId> {
            v.iter().map(|s| StationId::new(*s).unwrap()).collect()
        };
        let p1 = ids(&["a", "b", "c", "d"]);
        let p2 = ids(&["e", "c", "b", "f"]);
        assert_eq!(
            longest_shared_window(&p1, &p2).unwrap(),
            &ids(&["b", "c"])[..]
        );
        let p3 = ids(&["d", "e"]);
        assert!(longest_shared_window(&p1, &p3).is_none());
    }
}
