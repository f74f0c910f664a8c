//! Fare tables: parsing real fare charts and generating synthetic ones from
//! parametric fare-versus-distance curves.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::money::Money;
use crate::network::{StationId, TransitNetwork, TripKey};

/// Symmetric station-pair fares plus optional same-station excursion fares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareTable {
    stations: Vec<StationId>,
    fares: BTreeMap<TripKey, Money>,
    excursion: BTreeMap<StationId, Money>,
}

impl FareTable {
    pub fn new(stations: Vec<StationId>) -> Self {
        FareTable {
            stations,
            fares: BTreeMap::new(),
            excursion: BTreeMap::new(),
        }
    }

    /// Table over all of `net`'s station pairs, priced by `price`.
    pub fn from_fn(net: &TransitNetwork, mut price: impl FnMut(&TripKey) -> Money) -> Self {
        let mut table = FareTable::new(net.stations().to_vec());
        for trip in net.trips() {
            let fare = price(&trip);
            table.fares.insert(trip, fare);
        }
        table
    }

    pub fn insert(&mut self, trip: TripKey, fare: Money) {
        self.fares.insert(trip, fare);
    }

    pub fn set_excursion(&mut self, station: StationId, fare: Money) {
        self.excursion.insert(station, fare);
    }

    pub fn stations(&self) -> &[StationId] {
        &self.stations
    }

    pub fn fare(&self, trip: &TripKey) -> Option<Money> {
        self.fares.get(trip).copied()
    }

    pub fn excursion(&self, station: &StationId) -> Option<Money> {
        self.excursion.get(station).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TripKey, Money)> + '_ {
        self.fares.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.fares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fares.is_empty()
    }

    /// Checks that every station pair of `net` has a fare.
    pub fn check_complete(&self, net: &TransitNetwork) -> Result<()> {
        for trip in net.trips() {
            if !self.fares.contains_key(&trip) {
                return Err(Error::MissingPair {
                    a: trip.a().clone(),
                    b: trip.b().clone(),
                });
            }
        }
        Ok(())
    }

    /// Writes the matrix form read by [`parse_fare_table`].
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = csv::WriterBuilder::new().from_writer(out);
        let mut header = vec![String::new()];
        header.extend(self.stations.iter().map(|s| s.to_string()));
        wtr.write_record(&header)?;
        for row in &self.stations {
            let mut record = vec![row.to_string()];
            for col in &self.stations {
                let cell = if row == col {
                    self.excursion(row)
                } else {
                    TripKey::new(row.clone(), col.clone())
                        .ok()
                        .and_then(|t| self.fare(&t))
                };
                record.push(cell.map(|m| m.to_string()).unwrap_or_default());
            }
            wtr.write_record(&record)?;
        }
        wtr.flush().map_err(|e| Error::Csv(e.to_string()))
    }
}

/// Reads a square fare matrix (`,a,b,...` header, one row per station,
/// decimal-dollar cells, optional diagonal) and validates it against `net`.
///
/// A pair may be given in one or both mirror cells; when both are filled they
/// must agree.
pub fn parse_fare_table<R: Read>(reader: R, net: &TransitNetwork) -> Result<FareTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut records = rdr.records();
    let header = match records.next() {
        Some(h) => h?,
        None => return Err(Error::Csv("empty fare table".into())),
    };
    if header.get(0).is_some_and(|c| !c.is_empty()) {
        return Err(Error::Csv(
            "first header cell of a fare table must be empty".into(),
        ));
    }

    let mut columns = Vec::new();
    let mut seen = HashSet::new();
    for token in header.iter().skip(1) {
        let station = net.resolve(token)?;
        if !seen.insert(station.clone()) {
            return Err(Error::DuplicateFareStation(station));
        }
        columns.push(station);
    }
    if let Some(missing) = net.stations().iter().find(|s| !seen.contains(*s)) {
        let other = net
            .stations()
            .iter()
            .find(|s| *s != missing)
            .unwrap_or(missing);
        return Err(Error::MissingPair {
            a: missing.clone(),
            b: other.clone(),
        });
    }

    // (row, col) -> raw cell text and value
    let mut cells: HashMap<(StationId, StationId), (String, Money)> = HashMap::new();
    let mut rows_seen = HashSet::new();
    for record in records {
        let record = record?;
        let row = net.resolve(record.get(0).unwrap_or_default())?;
        if !rows_seen.insert(row.clone()) {
            return Err(Error::DuplicateFareStation(row));
        }
        for (col, cell) in columns.iter().zip(record.iter().skip(1)) {
            if cell.is_empty() {
                continue;
            }
            let money = Money::parse_dollars(cell)?;
            cells.insert((row.clone(), col.clone()), (cell.to_string(), money));
        }
    }

    let mut table = FareTable::new(columns.clone());
    for (i, x) in columns.iter().enumerate() {
        if let Some((_, m)) = cells.get(&(x.clone(), x.clone())) {
            table.set_excursion(x.clone(), *m);
        }
        for y in &columns[i + 1..] {
            let forward = cells.get(&(x.clone(), y.clone()));
            let backward = cells.get(&(y.clone(), x.clone()));
            let fare = match (forward, backward) {
                (Some((fs, f)), Some((bs, b))) => {
                    if f != b {
                        return Err(Error::AsymmetricFare {
                            a: x.clone(),
                            b: y.clone(),
                            forward: fs.clone(),
                            backward: bs.clone(),
                        });
                    }
                    *f
                }
                (Some((_, f)), None) | (None, Some((_, f))) => *f,
                (None, None) => {
                    return Err(Error::MissingPair {
                        a: x.clone(),
                        b: y.clone(),
                    })
                }
            };
            table.insert(TripKey::new(x.clone(), y.clone())?, fare);
        }
    }
    Ok(table)
}

/// Surcharge for entering a dense stretch of a line, given as 1-based
/// inclusive station positions along the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zone {
    pub first: usize,
    pub last: usize,
    pub surcharge: Money,
}

impl Zone {
    /// Charged when a trip between line positions `i < j` touches the zone
    /// without lying entirely inside it.
    fn charges(&self, i: usize, j: usize) -> bool {
        let touches = j >= self.first && i <= self.last;
        let inside = self.first <= i && j <= self.last;
        touches && !inside
    }
}

/// Synthetic fare as a function of distance in hops.
#[derive(Debug, Clone, PartialEq)]
pub enum FareCurveModel {
    Flat {
        c: Money,
    },
    /// `c + k·hops`
    Affine {
        c: Money,
        k: Money,
    },
    /// `a·hops^p`, rounded half-up to the cent.
    Power {
        a: Money,
        p: f64,
    },
    /// `c0 + k·hops` plus each zone's surcharge once per zone entered.
    DensityZone {
        c0: Money,
        k: Money,
        zones: Vec<Zone>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveShape {
    Concave,
    Convex,
    Linear,
    Mixed,
}

impl FareCurveModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            FareCurveModel::Power { p, .. } if !(p.is_finite() && *p > 0.0) => Err(
                Error::InvalidModel(format!("exponent must be positive, got {p}")),
            ),
            FareCurveModel::DensityZone { zones, .. } => {
                for z in zones {
                    if z.first == 0 || z.first > z.last {
                        return Err(Error::InvalidModel(format!(
                            "zone {}:{} is not a valid 1-based interval",
                            z.first, z.last
                        )));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Fare for a trip of `hops` hops. Density-zone models are evaluated
    /// for a trip starting at the first station of the line.
    pub fn fare_for_hops(&self, hops: usize) -> Money {
        let h = hops as u64;
        match self {
            FareCurveModel::Flat { c } => *c,
            FareCurveModel::Affine { c, k } => Money::from_cents(c.cents() + k.cents() * h),
            FareCurveModel::Power { a, p } => power_fare(*a, *p, hops),
            FareCurveModel::DensityZone { .. } if hops == 0 => self.zone_fare(1, 1),
            FareCurveModel::DensityZone { .. } => self.zone_fare(1, 1 + hops),
        }
    }

    fn zone_fare(&self, i: usize, j: usize) -> Money {
        match self {
            FareCurveModel::DensityZone { c0, k, zones } => {
                let hops = (j - i) as u64;
                let surcharge: u64 = zones
                    .iter()
                    .filter(|z| i != j && z.charges(i, j))
                    .map(|z| z.surcharge.cents())
                    .sum();
                Money::from_cents(c0.cents() + k.cents() * hops + surcharge)
            }
            other => other.fare_for_hops(j - i),
        }
    }
}

fn power_fare(a: Money, p: f64, hops: usize) -> Money {
    let value = a.cents() as f64 * (hops as f64).powf(p);
    Money::from_cents((value + 0.5).floor() as u64)
}

/// Prices every station pair of `net` with `model`.
pub fn generate_fare_table(model: &FareCurveModel, net: &TransitNetwork) -> Result<FareTable> {
    model.validate()?;
    if let FareCurveModel::DensityZone { zones, .. } = model {
        let line = single_line(net).ok_or(Error::ZoneOnNonLineNetwork)?;
        if let Some(z) = zones.iter().find(|z| z.last > line.len()) {
            return Err(Error::InvalidModel(format!(
                "zone {}:{} exceeds the {}-station line",
                z.first,
                z.last,
                line.len()
            )));
        }
        let position: HashMap<&StationId, usize> =
            line.iter().enumerate().map(|(i, s)| (s, i + 1)).collect();
        return Ok(FareTable::from_fn(net, |trip| {
            let (x, y) = (position[trip.a()], position[trip.b()]);
            model.zone_fare(x.min(y), x.max(y))
        }));
    }
    Ok(FareTable::from_fn(net, |trip| {
        let from = net.index_of(trip.a()).expect("trip from network");
        let to = net.index_of(trip.b()).expect("trip from network");
        model.fare_for_hops(net.path_indices(from, to).len() - 1)
    }))
}

/// The station order of a network made of exactly one route covering every
/// station.
fn single_line(net: &TransitNetwork) -> Option<&[StationId]> {
    match net.routes() {
        [route] if route.stations.len() == net.station_count() => Some(&route.stations),
        _ => None,
    }
}

/// Shape of the model's fare curve from the signs of its exact second
/// differences over `0..=max_hops`.
pub fn curve_shape(model: &FareCurveModel, max_hops: usize) -> CurveShape {
    let values: Vec<i64> = (0..=max_hops)
        .map(|h| model.fare_for_hops(h).cents() as i64)
        .collect();
    let (mut neg, mut pos) = (false, false);
    for w in values.windows(3) {
        let d2 = w[2] - 2 * w[1] + w[0];
        neg |= d2 < 0;
        pos |= d2 > 0;
    }
    match (neg, pos) {
        (false, false) => CurveShape::Linear,
        (true, false) => CurveShape::Concave,
        (false, true) => CurveShape::Convex,
        (true, true) => CurveShape::Mixed,
    }
}

/// Lengths of two overlapping trips on a line: the shorter `x`, the longer
/// `y` and the shared stretch `o`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyntheticTripGeometry {
    pub x: usize,
    pub y: usize,
    pub o: usize,
}

impl SyntheticTripGeometry {
    pub fn new(x: usize, y: usize, o: usize) -> Option<Self> {
        (1 <= o && o <= x && x <= y).then_some(SyntheticTripGeometry { x, y, o })
    }

    /// Lengths after swapping tickets; their sum equals `x + y`.
    pub fn swapped_lengths(&self) -> (usize, usize) {
        (self.x + self.y - self.o, self.o)
    }

    /// `f(x) + f(y) − f(x+y−o) − f(o)` in cents.
    pub fn gain(&self, model: &FareCurveModel) -> i64 {
        let f = |h: usize| model.fare_for_hops(h).cents() as i64;
        let (long, short) = self.swapped_lengths();
        f(self.x) + f(self.y) - f(long) - f(short)
    }
}
