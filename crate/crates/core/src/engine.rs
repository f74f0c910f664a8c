//! Swap gains and exhaustive enumeration of arbitrage pairs.
//!
//! The engine flattens the network and fare table into dense index tables
//! (pairwise distances, lowest common ancestors, fares, travel direction) so
//! each trip pair is evaluated in constant time. The intersection of the
//! paths `a..b` and `c..d` of a tree is the path between the projections of
//! `c` and `d` onto `a..b`; it carries a shared edge exactly when those two
//! projections differ.

use std::cmp::Reverse;
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fares::FareTable;
use crate::money::{Money, Percent};
use crate::network::{StationId, TransitNetwork, TripKey};

/// A trip with a travel direction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ride {
    pub origin: StationId,
    pub destination: StationId,
}

impl Ride {
    pub fn new(origin: StationId, destination: StationId) -> Self {
        Ride {
            origin,
            destination,
        }
    }

    pub fn key(&self) -> TripKey {
        TripKey::new(self.origin.clone(), self.destination.clone())
            .expect("rides have distinct endpoints")
    }
}

impl fmt::Display for Ride {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.origin, self.destination)
    }
}

/// One beneficial ticket swap. `trip1` and `trip2` are the rides actually
/// taken, oriented along the shared segment with `trip1` boarding first;
/// `swapped1` is `trip1.origin -> trip2.destination` and `swapped2` is
/// `trip2.origin -> trip1.destination`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArbitrageRecord {
    pub trip1: Ride,
    pub trip2: Ride,
    pub swapped1: Ride,
    pub swapped2: Ride,
    pub gain: Money,
    /// Fare of `trip1` plus fare of `trip2`.
    pub original_total: Money,
}

impl ArbitrageRecord {
    pub fn percent(&self) -> Percent {
        Percent::of(self.gain.cents(), self.original_total.cents())
    }

    pub fn swapped_total(&self) -> Money {
        self.original_total - self.gain
    }

    fn sort_key(&self) -> (Reverse<Money>, &Ride, &Ride) {
        (Reverse(self.gain), &self.trip1, &self.trip2)
    }
}

/// Canonical report order: gain descending, then trip1, then trip2.
pub fn sort_records(records: &mut [ArbitrageRecord]) {
    records.sort_unstable_by(|x, y| x.sort_key().cmp(&y.sort_key()));
}

/// Result of swapping tickets on one specific trip pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapOutcome {
    /// Original fares minus swapped fares; negative when swapping costs more.
    pub gain: i64,
    pub swapped: (TripKey, TripKey),
    pub original_total: Money,
}

/// A trip pair as the rider describes it, with the swap worked out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSwap {
    pub trip1: Ride,
    pub trip2: Ride,
    pub swapped1: Ride,
    pub swapped2: Ride,
    /// Fares of trip1, trip2, swapped1, swapped2.
    pub fares: [Money; 4],
    /// Shared segment in travel direction.
    pub shared: Ride,
    pub shared_hops: usize,
    pub gain: i64,
}

impl PairSwap {
    pub fn original_total(&self) -> Money {
        self.fares[0] + self.fares[1]
    }

    pub fn swapped_total(&self) -> Money {
        self.fares[2] + self.fares[3]
    }

    pub fn percent(&self) -> Percent {
        Percent::of(self.gain.unsigned_abs(), self.original_total().cents())
    }
}

/// Counts of beneficial swaps over the whole network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArbitrageSummary {
    pub station_count: usize,
    pub trip_count: u64,
    pub pair_count: u64,
    /// Pairs whose paths share at least one edge.
    pub overlapping_pairs: u64,
    /// Number of pairs with gain at least the threshold, per threshold.
    pub pairs_ge_threshold: Vec<(Money, u64)>,
}

impl ArbitrageSummary {
    pub fn fraction(&self, count: u64) -> Percent {
        Percent::of(count, self.pair_count)
    }
}

/// How enumeration spreads work. `Parallel` falls back to sequential when the
/// crate is built without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy)]
struct Swap {
    /// Shared segment endpoints, `u < v`.
    u: usize,
    v: usize,
    /// Trip endpoints on the u and v sides.
    u1: usize,
    v1: usize,
    u2: usize,
    v2: usize,
    gain: i64,
}

/// Precomputed tables for a network and its fare table.
#[derive(Debug, Clone)]
pub struct ArbitrageEngine<'a> {
    net: &'a TransitNetwork,
    n: usize,
    fares: Vec<u64>,
    dist: Vec<u32>,
    lca: Vec<u32>,
    forward: Vec<bool>,
    trips: Vec<(u32, u32)>,
}

impl<'a> ArbitrageEngine<'a> {
    pub fn new(net: &'a TransitNetwork, table: &FareTable) -> Result<Self> {
        let n = net.station_count();
        let mut fares = vec![0u64; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (net.station(i), net.station(j));
                let trip = TripKey::new(a.clone(), b.clone())?;
                let fare = table.fare(&trip).ok_or_else(|| Error::MissingPair {
                    a: a.clone(),
                    b: b.clone(),
                })?;
                fares[i * n + j] = fare.cents();
                fares[j * n + i] = fare.cents();
            }
        }

        let mut lca = vec![0u32; n * n];
        let mut dist = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let (mut x, mut y) = (i, j);
                while net.depth(x) > net.depth(y) {
                    x = net.parent(x).expect("non-root");
                }
                while net.depth(y) > net.depth(x) {
                    y = net.parent(y).expect("non-root");
                }
                while x != y {
                    x = net.parent(x).expect("non-root");
                    y = net.parent(y).expect("non-root");
                }
                let d = (net.depth(i) + net.depth(j) - 2 * net.depth(x)) as u32;
                lca[i * n + j] = x as u32;
                lca[j * n + i] = x as u32;
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }

        let mut direction: Vec<Option<bool>> = vec![None; n * n];
        for route in net.routes() {
            let idx: Vec<usize> = route
                .stations
                .iter()
                .map(|s| net.index_of(s).expect("validated route"))
                .collect();
            for p in 0..idx.len() {
                for q in p + 1..idx.len() {
                    let (x, y) = (idx[p], idx[q]);
                    if direction[x * n + y].is_none() {
                        direction[x * n + y] = Some(true);
                        direction[y * n + x] = Some(false);
                    }
                }
            }
        }
        let forward = direction
            .iter()
            .enumerate()
            .map(|(k, d)| d.unwrap_or(k / n <= k % n))
            .collect();

        let trips = (0..n as u32)
            .flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)))
            .collect();

        Ok(ArbitrageEngine {
            net,
            n,
            fares,
            dist,
            lca,
            forward,
            trips,
        })
    }

    pub fn network(&self) -> &TransitNetwork {
        self.net
    }

    #[inline]
    fn fare(&self, x: usize, y: usize) -> u64 {
        self.fares[x * self.n + y]
    }

    #[inline]
    fn dist(&self, x: usize, y: usize) -> u32 {
        self.dist[x * self.n + y]
    }

    #[inline]
    fn lca(&self, x: usize, y: usize) -> usize {
        self.lca[x * self.n + y] as usize
    }

    /// Node where the path from `z` first meets the path `x..y`.
    #[inline]
    fn projection(&self, x: usize, y: usize, z: usize) -> usize {
        let candidates = [self.lca(x, y), self.lca(x, z), self.lca(y, z)];
        candidates
            .into_iter()
            .max_by_key(|&c| self.net.depth(c))
            .expect("three candidates")
    }

    #[inline]
    fn evaluate(&self, (a, b): (usize, usize), (c, d): (usize, usize)) -> Option<Swap> {
        let pc = self.projection(a, b, c);
        let pd = self.projection(a, b, d);
        if pc == pd {
            return None;
        }
        let (u, v) = (pc.min(pd), pc.max(pd));
        let sides = |x: usize, y: usize| {
            if self.dist(x, u) < self.dist(x, v) {
                (x, y)
            } else {
                (y, x)
            }
        };
        let (u1, v1) = sides(a, b);
        let (u2, v2) = sides(c, d);
        let before = self.fare(a, b) + self.fare(c, d);
        let after = self.fare(u1, v2) + self.fare(u2, v1);
        Some(Swap {
            u,
            v,
            u1,
            v1,
            u2,
            v2,
            gain: before as i64 - after as i64,
        })
    }

    fn lookup(&self, trip: &TripKey) -> Result<(usize, usize)> {
        let find = |s: &StationId| {
            self.net
                .index_of(s)
                .ok_or_else(|| Error::UnknownStation(s.to_string()))
        };
        Ok((find(trip.a())?, find(trip.b())?))
    }

    /// Gain from swapping tickets between two trips, or `None` when their
    /// paths share no edge.
    pub fn swap_gain(&self, t1: &TripKey, t2: &TripKey) -> Result<Option<SwapOutcome>> {
        let (p, q) = (self.lookup(t1)?, self.lookup(t2)?);
        Ok(self.evaluate(p, q).map(|s| {
            let key = |x: usize, y: usize| {
                TripKey::new(self.net.station(x).clone(), self.net.station(y).clone())
                    .expect("swapped trips have distinct endpoints")
            };
            SwapOutcome {
                gain: s.gain,
                swapped: (key(s.u1, s.v2), key(s.u2, s.v1)),
                original_total: Money::from_cents(self.fare(p.0, p.1) + self.fare(q.0, q.1)),
            }
        }))
    }

    /// Works out the swap for two rides, keeping the caller's trip order.
    pub fn pair(&self, t1: &TripKey, t2: &TripKey) -> Result<Option<PairSwap>> {
        let (p, q) = (self.lookup(t1)?, self.lookup(t2)?);
        let Some(s) = self.evaluate(p, q) else {
            return Ok(None);
        };
        let (from, to) = if self.forward[s.u * self.n + s.v] {
            (s.u, s.v)
        } else {
            (s.v, s.u)
        };
        let (o1, d1, o2, d2) = if from == s.u {
            (s.u1, s.v1, s.u2, s.v2)
        } else {
            (s.v1, s.u1, s.v2, s.u2)
        };
        let ride = |x: usize, y: usize| {
            Ride::new(self.net.station(x).clone(), self.net.station(y).clone())
        };
        let fare = |x: usize, y: usize| Money::from_cents(self.fare(x, y));
        Ok(Some(PairSwap {
            trip1: ride(o1, d1),
            trip2: ride(o2, d2),
            swapped1: ride(o1, d2),
            swapped2: ride(o2, d1),
            fares: [fare(o1, d1), fare(o2, d2), fare(o1, d2), fare(o2, d1)],
            shared: ride(from, to),
            shared_hops: self.dist(s.u, s.v) as usize,
            gain: s.gain,
        }))
    }

    fn record(&self, s: &Swap) -> ArbitrageRecord {
        let (from, forward) = if self.forward[s.u * self.n + s.v] {
            (s.u, true)
        } else {
            (s.v, false)
        };
        let (mut o1, mut d1, mut o2, mut d2) = if forward {
            (s.u1, s.v1, s.u2, s.v2)
        } else {
            (s.v1, s.u1, s.v2, s.u2)
        };
        // whoever boards further upstream of the shared segment goes first
        let lead1 = (Reverse(self.dist(o1, from)), o1);
        let lead2 = (Reverse(self.dist(o2, from)), o2);
        if lead2 < lead1 {
            std::mem::swap(&mut o1, &mut o2);
            std::mem::swap(&mut d1, &mut d2);
        }
        let ride = |x: usize, y: usize| {
            Ride::new(self.net.station(x).clone(), self.net.station(y).clone())
        };
        ArbitrageRecord {
            trip1: ride(o1, d1),
            trip2: ride(o2, d2),
            swapped1: ride(o1, d2),
            swapped2: ride(o2, d1),
            gain: Money::from_cents(s.gain as u64),
            original_total: Money::from_cents(self.fare(o1, d1) + self.fare(o2, d2)),
        }
    }

    fn row_records(&self, i: usize, floor: i64) -> Vec<ArbitrageRecord> {
        let (a, b) = self.trips[i];
        let first = (a as usize, b as usize);
        self.trips[i + 1..]
            .iter()
            .filter_map(|&(c, d)| self.evaluate(first, (c as usize, d as usize)))
            .filter(|s| s.gain >= floor)
            .map(|s| self.record(&s))
            .collect()
    }

    /// Positive gains of one row, plus the number of overlapping pairs.
    fn row_gains(&self, i: usize) -> (Vec<u64>, u64) {
        let (a, b) = self.trips[i];
        let first = (a as usize, b as usize);
        let mut overlapping = 0;
        let mut gains = Vec::new();
        for &(c, d) in &self.trips[i + 1..] {
            if let Some(s) = self.evaluate(first, (c as usize, d as usize)) {
                overlapping += 1;
                if s.gain > 0 {
                    gains.push(s.gain as u64);
                }
            }
        }
        (gains, overlapping)
    }

    /// Every trip pair whose swap saves at least `min_gain` (and at least one
    /// cent), in canonical report order.
    pub fn enumerate(&self, min_gain: Money, execution: Execution) -> Vec<ArbitrageRecord> {
        let floor = min_gain.cents().max(1) as i64;
        let rows = 0..self.trips.len();
        let mut records: Vec<ArbitrageRecord> = match execution {
            #[cfg(feature = "parallel")]
            Execution::Parallel => rows
                .into_par_iter()
                .flat_map_iter(|i| self.row_records(i, floor))
                .collect(),
            _ => rows.flat_map(|i| self.row_records(i, floor)).collect(),
        };
        sort_records(&mut records);
        records
    }

    pub fn summarize(&self, thresholds: &[Money], execution: Execution) -> ArbitrageSummary {
        let rows = 0..self.trips.len();
        let per_row: Vec<(Vec<u64>, u64)> = match execution {
            #[cfg(feature = "parallel")]
            Execution::Parallel => rows.into_par_iter().map(|i| self.row_gains(i)).collect(),
            _ => rows.map(|i| self.row_gains(i)).collect(),
        };
        let overlapping_pairs = per_row.iter().map(|(_, o)| o).sum();
        let pairs_ge_threshold = thresholds
            .iter()
            .map(|&t| {
                let count = per_row
                    .iter()
                    .flat_map(|(g, _)| g)
                    .filter(|&&g| g >= t.cents())
                    .count() as u64;
                (t, count)
            })
            .collect();
        let trip_count = self.trips.len() as u64;
        ArbitrageSummary {
            station_count: self.n,
            trip_count,
            pair_count: trip_count * trip_count.saturating_sub(1) / 2,
            overlapping_pairs,
            pairs_ge_threshold,
        }
    }

    /// The largest-gain arbitrage pair, or `None` if the table admits no
    /// beneficial swap at all.
    pub fn first_counterexample(&self, execution: Execution) -> Option<ArbitrageRecord> {
        self.enumerate(Money::from_cents(1), execution)
            .into_iter()
            .next()
    }
}

pub fn swap_gain(
    net: &TransitNetwork,
    fares: &FareTable,
    t1: &TripKey,
    t2: &TripKey,
) -> Result<Option<SwapOutcome>> {
    ArbitrageEngine::new(net, fares)?.swap_gain(t1, t2)
}

pub fn enumerate_arbitrage(
    net: &TransitNetwork,
    fares: &FareTable,
    min_gain: Money,
) -> Result<Vec<ArbitrageRecord>> {
    Ok(ArbitrageEngine::new(net, fares)?.enumerate(min_gain, Execution::default()))
}

pub fn summarize(
    net: &TransitNetwork,
    fares: &FareTable,
    thresholds: &[Money],
) -> Result<ArbitrageSummary> {
    Ok(ArbitrageEngine::new(net, fares)?.summarize(thresholds, Execution::default()))
}

/// `Ok(None)` when no swap saves money, otherwise the maximal-gain record.
pub fn check_arbitrage_free(
    net: &TransitNetwork,
    fares: &FareTable,
) -> Result<Option<ArbitrageRecord>> {
    Ok(ArbitrageEngine::new(net, fares)?.first_counterexample(Execution::default()))
}
