//! Tree-shaped transit networks, unique tree paths, path overlaps and the
//! ticket-swap recombination of two overlapping trips.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Station slug, `[a-z0-9-]+`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StationId(String);

impl StationId {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        let valid = !token.is_empty()
            && token
                .bytes()
                .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-');
        if valid {
            Ok(StationId(token))
        } else {
            Err(Error::InvalidStationId(token))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for StationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StationId::new(s)
    }
}

impl AsRef<str> for StationId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Unordered origin/destination pair, stored with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripKey {
    a: StationId,
    b: StationId,
}

impl TripKey {
    pub fn new(x: StationId, y: StationId) -> Result<Self> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(TripKey { a: x, b: y }),
            std::cmp::Ordering::Greater => Ok(TripKey { a: y, b: x }),
            std::cmp::Ordering::Equal => Err(Error::DegenerateTrip(x)),
        }
    }

    /// Parses `a:b`.
    pub fn parse(token: &str) -> Result<Self> {
        let (x, y) = token
            .split_once(':')
            .ok_or_else(|| Error::UnknownStation(token.to_string()))?;
        TripKey::new(StationId::new(x)?, StationId::new(y)?)
    }

    pub fn a(&self) -> &StationId {
        &self.a
    }

    pub fn b(&self) -> &StationId {
        &self.b
    }

    pub fn contains(&self, station: &StationId) -> bool {
        &self.a == station || &self.b == station
    }
}

impl fmt::Display for TripKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteDef {
    pub name: String,
    pub stations: Vec<StationId>,
}

impl RouteDef {
    pub fn new(name: impl Into<String>, stations: Vec<StationId>) -> Self {
        RouteDef {
            name: name.into(),
            stations,
        }
    }

    pub fn position(&self, station: &StationId) -> Option<usize> {
        self.stations.iter().position(|s| s == station)
    }
}

/// Simple path between two stations, origin first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePath {
    pub stations: Vec<StationId>,
}

impl TreePath {
    pub fn hops(&self) -> usize {
        self.stations.len().saturating_sub(1)
    }

    pub fn origin(&self) -> &StationId {
        &self.stations[0]
    }

    pub fn destination(&self) -> &StationId {
        self.stations.last().expect("paths are never empty")
    }

    pub fn reversed(&self) -> TreePath {
        let mut stations = self.stations.clone();
        stations.reverse();
        TreePath { stations }
    }
}

/// Which endpoint of a trip sits on the `u` side of an overlap and which on
/// the `v` side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sides {
    pub u_side: StationId,
    pub v_side: StationId,
}

/// The contiguous stretch two trips ride together. `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapSegment {
    pub u: StationId,
    pub v: StationId,
    /// Stations from `u` to `v` inclusive.
    pub stations: Vec<StationId>,
    /// Side assignment for the first and second path passed to [`path_overlap`].
    pub sides: [Sides; 2],
}

impl OverlapSegment {
    pub fn shared_hops(&self) -> usize {
        self.stations.len() - 1
    }
}

/// Validated tree network. Station indices follow lexicographic id order.
#[derive(Debug, Clone)]
pub struct TransitNetwork {
    stations: Vec<StationId>,
    names: Vec<String>,
    index: HashMap<StationId, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    routes: Vec<RouteDef>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

/// Builds and validates a network from station rows and route definitions.
///
/// The edge set is the deduplicated union of consecutive route stations and
/// must form a single spanning tree.
pub fn build_network(
    stations: Vec<(StationId, String)>,
    routes: Vec<RouteDef>,
) -> Result<TransitNetwork> {
    let mut seen = HashSet::new();
    for (id, _) in &stations {
        if !seen.insert(id.clone()) {
            return Err(Error::DuplicateStation(id.clone()));
        }
    }
    let mut rows = stations;
    rows.sort_by(|x, y| x.0.cmp(&y.0));
    let (ids, names): (Vec<StationId>, Vec<String>) = rows.into_iter().unzip();
    let index: HashMap<StationId, usize> = ids
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();

    let mut edge_set = BTreeSet::new();
    for route in &routes {
        if route.stations.len() < 2 {
            return Err(Error::InvalidRoute {
                route: route.name.clone(),
                reason: "needs at least two stations".into(),
            });
        }
        let mut in_route = HashSet::new();
        for station in &route.stations {
            if !index.contains_key(station) {
                return Err(Error::UnknownStationInRoute {
                    route: route.name.clone(),
                    station: station.clone(),
                });
            }
            if !in_route.insert(station) {
                return Err(Error::InvalidRoute {
                    route: route.name.clone(),
                    reason: format!("station {station} repeats"),
                });
            }
        }
        for pair in route.stations.windows(2) {
            let (x, y) = (index[&pair[0]], index[&pair[1]]);
            edge_set.insert((x.min(y), x.max(y)));
        }
    }

    let n = ids.len();
    if n == 0 {
        return Err(Error::GraphNotTree("network has no stations".into()));
    }
    let edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
    let mut adjacency = vec![Vec::new(); n];
    for &(x, y) in &edges {
        adjacency[x].push(y);
        adjacency[y].push(x);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }

    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &y in &adjacency[x] {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    if let Some(lost) = depth.iter().position(|&d| d == usize::MAX) {
        return Err(Error::GraphNotTree(format!(
            "station {} is not connected to {}",
            ids[lost], ids[0]
        )));
    }
    if edges.len() != n - 1 {
        return Err(Error::GraphNotTree(format!(
            "{} edges over {} stations contain a cycle",
            edges.len(),
            n
        )));
    }

    Ok(TransitNetwork {
        stations: ids,
        names,
        index,
        adjacency,
        edges,
        routes,
        parent,
        depth,
    })
}

impl TransitNetwork {
    pub fn station_count(&self) -> usize {
        self.stations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Stations in lexicographic order.
    pub fn stations(&self) -> &[StationId] {
        &self.stations
    }

    pub fn station(&self, index: usize) -> &StationId {
        &self.stations[index]
    }

    pub fn display_name(&self, station: &StationId) -> Option<&str> {
        self.index.get(station).map(|&i| self.names[i].as_str())
    }

    pub fn index_of(&self, station: &StationId) -> Option<usize> {
        self.index.get(station).copied()
    }

    pub fn contains(&self, station: &StationId) -> bool {
        self.index.contains_key(station)
    }

    /// Resolves a raw token to a station of this network.
    pub fn resolve(&self, token: &str) -> Result<StationId> {
        StationId::new(token)
            .ok()
            .filter(|s| self.contains(s))
            .ok_or_else(|| Error::UnknownStation(token.to_string()))
    }

    pub fn edges(&self) -> impl Iterator<Item = (&StationId, &StationId)> + '_ {
        self.edges
            .iter()
            .map(|&(x, y)| (&self.stations[x], &self.stations[y]))
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub fn routes(&self) -> &[RouteDef] {
        &self.routes
    }

    pub fn route(&self, name: &str) -> Option<&RouteDef> {
        self.routes.iter().find(|r| r.name == name)
    }

    /// All unordered station pairs in lexicographic order.
    pub fn trips(&self) -> impl Iterator<Item = TripKey> + '_ {
        let n = self.stations.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).map(move |j| TripKey {
                a: self.stations[i].clone(),
                b: self.stations[j].clone(),
            })
        })
    }

    pub fn trip_count(&self) -> usize {
        let n = self.stations.len();
        n * n.saturating_sub(1) / 2
    }

    pub(crate) fn depth(&self, index: usize) -> usize {
        self.depth[index]
    }

    pub(crate) fn parent(&self, index: usize) -> Option<usize> {
        self.parent[index]
    }

    /// Station indices along the unique path from `from` to `to`.
    pub(crate) fn path_indices(&self, from: usize, to: usize) -> Vec<usize> {
        let (mut x, mut y) = (from, to);
        let mut head = vec![];
        let mut tail = vec![];
        while self.depth[x] > self.depth[y] {
            head.push(x);
            x = self.parent[x].expect("deeper node has a parent");
        }
        while self.depth[y] > self.depth[x] {
            tail.push(y);
            y = self.parent[y].expect("deeper node has a parent");
        }
        while x != y {
            head.push(x);
            tail.push(y);
            x = self.parent[x].expect("non-root has a parent");
            y = self.parent[y].expect("non-root has a parent");
        }
        head.push(x);
        head.extend(tail.into_iter().rev());
        head
    }

    /// The travel direction used when presenting a shared segment: the order
    /// in which the first route containing both stations visits them,
    /// falling back to lexicographic order.
    pub fn travel_direction<'a>(
        &self,
        x: &'a StationId,
        y: &'a StationId,
    ) -> (&'a StationId, &'a StationId) {
        for route in &self.routes {
            if let (Some(px), Some(py)) = (route.position(x), route.position(y)) {
                return if px < py { (x, y) } else { (y, x) };
            }
        }
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    }

    pub fn tree_path(&self, trip: &TripKey) -> Result<TreePath> {
        tree_path(self, trip)
    }

    /// Overlap of two trips' paths, if they share at least one edge.
    pub fn overlap(&self, t1: &TripKey, t2: &TripKey) -> Result<Option<OverlapSegment>> {
        Ok(path_overlap(&self.tree_path(t1)?, &self.tree_path(t2)?))
    }
}

/// The unique simple path of `trip`, ordered from `trip.a()` to `trip.b()`.
pub fn tree_path(net: &TransitNetwork, trip: &TripKey) -> Result<TreePath> {
    let lookup = |s: &StationId| {
        net.index_of(s)
            .ok_or_else(|| Error::UnknownStation(s.to_string()))
    };
    let from = lookup(&trip.a)?;
    let to = lookup(&trip.b)?;
    Ok(TreePath {
        stations: net
            .path_indices(from, to)
            .into_iter()
            .map(|i| net.stations[i].clone())
            .collect(),
    })
}

/// Shared segment of two paths of the same tree, or `None` when they share
/// fewer than two stations.
pub fn path_overlap(p1: &TreePath, p2: &TreePath) -> Option<OverlapSegment> {
    let in_p2: HashSet<&StationId> = p2.stations.iter().collect();
    let shared: Vec<&StationId> = p1.stations.iter().filter(|s| in_p2.contains(s)).collect();
    if shared.len() < 2 {
        return None;
    }
    let (first, last) = (shared[0], shared[shared.len() - 1]);
    let mut stations: Vec<StationId> = shared.into_iter().cloned().collect();
    if first > last {
        stations.reverse();
    }
    let u = stations[0].clone();
    let v = stations[stations.len() - 1].clone();
    let sides_of = |path: &TreePath| {
        let pu = path.stations.iter().position(|s| *s == u);
        let pv = path.stations.iter().position(|s| *s == v);
        if pu < pv {
            Sides {
                u_side: path.origin().clone(),
                v_side: path.destination().clone(),
            }
        } else {
            Sides {
                u_side: path.destination().clone(),
                v_side: path.origin().clone(),
            }
        }
    };
    let sides = [sides_of(p1), sides_of(p2)];
    Some(OverlapSegment {
        u,
        v,
        stations,
        sides,
    })
}

/// Recombines two overlapping trips the way a mid-ride ticket exchange does:
/// each trip's `u`-side endpoint is paired with the other's `v`-side endpoint.
///
/// Panics if `ov` was not computed from the paths of `t1` and `t2`.
pub fn swap_partition(t1: &TripKey, t2: &TripKey, ov: &OverlapSegment) -> (TripKey, TripKey) {
    let matches = |trip: &TripKey, sides: &Sides| {
        trip.contains(&sides.u_side) && trip.contains(&sides.v_side)
    };
    let (s1, s2) = if matches(t1, &ov.sides[0]) && matches(t2, &ov.sides[1]) {
        (&ov.sides[0], &ov.sides[1])
    } else if matches(t1, &ov.sides[1]) && matches(t2, &ov.sides[0]) {
        (&ov.sides[1], &ov.sides[0])
    } else {
        panic!("overlap segment does not belong to trips {t1} and {t2}");
    };
    let first = TripKey::new(s1.u_side.clone(), s2.v_side.clone())
        .expect("u-side and v-side branches are disjoint");
    let second = TripKey::new(s2.u_side.clone(), s1.v_side.clone())
        .expect("u-side and v-side branches are disjoint");
    (first, second)
}

pub fn parse_stations_csv<R: Read>(reader: R) -> Result<Vec<(StationId, String)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    expect_headers(rdr.headers()?, &["id", "name"])?;
    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let id = StationId::new(record.get(0).unwrap_or_default())?;
        let name = record.get(1).unwrap_or_default().to_string();
        rows.push((id, name));
    }
    Ok(rows)
}

pub fn parse_routes_csv<R: Read>(reader: R) -> Result<Vec<RouteDef>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    expect_headers(rdr.headers()?, &["name", "stations"])?;
    let mut routes = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let name = record.get(0).unwrap_or_default().to_string();
        let stations = record
            .get(1)
            .unwrap_or_default()
            .split('|')
            .map(|s| StationId::new(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        routes.push(RouteDef { name, stations });
    }
    Ok(routes)
}

fn expect_headers(headers: &csv::StringRecord, expected: &[&str]) -> Result<()> {
    let got: Vec<&str> = headers.iter().collect();
    if got != expected {
        return Err(Error::Csv(format!(
            "expected header {:?}, found {:?}",
            expected.join(","),
            got.join(",")
        )));
    }
    Ok(())
}

/// Parses `stations.csv` and `routes.csv` contents into a validated network.
pub fn load_network<R1: Read, R2: Read>(stations: R1, routes: R2) -> Result<TransitNetwork> {
    build_network(parse_stations_csv(stations)?, parse_routes_csv(routes)?)
}

pub fn write_stations_csv<W: Write>(net: &TransitNetwork, out: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(out);
    wtr.write_record(["id", "name"])?;
    for (id, name) in net.stations.iter().zip(&net.names) {
        wtr.write_record([id.as_str(), name.as_str()])?;
    }
    wtr.flush().map_err(|e| Error::Csv(e.to_string()))
}

pub fn write_routes_csv<W: Write>(net: &TransitNetwork, out: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(out);
    wtr.write_record(["name", "stations"])?;
    for route in &net.routes {
        let joined = route
            .stations
            .iter()
            .map(StationId::as_str)
            .collect::<Vec<_>>()
            .join("|");
        wtr.write_record([route.name.as_str(), joined.as_str()])?;
    }
    wtr.flush().map_err(|e| Error::Csv(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> StationId {
        StationId::new(s).unwrap()
    }

    fn trip(x: &str, y: &str) -> TripKey {
        TripKey::new(id(x), id(y)).unwrap()
    }

    fn net(stations: &[&str], routes: &[&[&str]]) -> Result<TransitNetwork> {
        build_network(
            stations.iter().map(|s| (id(s), s.to_uppercase())).collect(),
            routes
                .iter()
                .enumerate()
                .map(|(i, r)| RouteDef::new(format!("r{i}"), r.iter().map(|s| id(s)).collect()))
                .collect(),
        )
    }

    fn line() -> TransitNetwork {
        net(&["a", "b", "c", "d"], &[&["a", "b", "c", "d"]]).unwrap()
    }

    /// Edges a-b, b-c, c-d, b-e, c-f.
    fn star() -> TransitNetwork {
        net(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "b", "c", "d"], &["e", "b"], &["c", "f"]],
        )
        .unwrap()
    }

    fn path(net: &TransitNetwork, x: &str, y: &str) -> TreePath {
        let p = net.tree_path(&trip(x, y)).unwrap();
        if p.origin() == &id(x) {
            p
        } else {
            p.reversed()
        }
    }

    #[test]
    fn station_ids_are_slugs() {
        assert!(StationId::new("glen-park").is_ok());
        assert!(StationId::new("19th-st").is_ok());
        for bad in ["", "Glen", "a b", "a_b", "é"] {
            assert!(matches!(
                StationId::new(bad),
                Err(Error::InvalidStationId(_))
            ));
        }
    }

    #[test]
    fn trip_keys_are_canonical() {
        let t = trip("walnut-creek", "concord");
        assert_eq!(t.a().as_str(), "concord");
        assert_eq!(t.b().as_str(), "walnut-creek");
        assert_eq!(TripKey::parse("b:a").unwrap(), trip("a", "b"));
        assert!(matches!(
            TripKey::new(id("a"), id("a")),
            Err(Error::DegenerateTrip(_))
        ));
    }

    #[test]
    fn builds_a_line() {
        let n = line();
        assert_eq!(n.station_count(), 4);
        assert_eq!(n.edge_count(), 3);
        assert_eq!(n.trip_count(), 6);
    }

    #[test]
    fn shared_trunk_edges_are_deduplicated() {
        let n = net(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["b", "c", "d"]]).unwrap();
        assert_eq!(n.edge_count(), 3);
    }

    #[test]
    fn rejects_cycles_and_disconnected_graphs() {
        let cyc = net(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["c", "a"]]);
        assert!(matches!(cyc, Err(Error::GraphNotTree(_))));
        let split = net(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]);
        assert!(matches!(split, Err(Error::GraphNotTree(_))));
    }

    #[test]
    fn rejects_bad_station_lists() {
        assert!(matches!(
            net(&["a", "b", "a"], &[&["a", "b"]]),
            Err(Error::DuplicateStation(_))
        ));
        assert!(matches!(
            net(&["a", "b"], &[&["a", "z"]]),
            Err(Error::UnknownStationInRoute { .. })
        ));
        assert!(matches!(
            net(&["a", "b", "c"], &[&["a", "b", "a"]]),
            Err(Error::InvalidRoute { .. })
        ));
    }

    #[test]
    fn tree_paths() {
        let n = line();
        let p = n.tree_path(&trip("a", "c")).unwrap();
        assert_eq!(p.stations, vec![id("a"), id("b"), id("c")]);
        assert_eq!(p.hops(), 2);
        assert_eq!(n.tree_path(&trip("a", "b")).unwrap().hops(), 1);

        let s = star();
        let p = s.tree_path(&trip("e", "f")).unwrap();
        assert_eq!(p.stations, vec![id("e"), id("b"), id("c"), id("f")]);
        assert_eq!(p.hops(), 3);

        assert!(matches!(
            n.tree_path(&trip("a", "zz")),
            Err(Error::UnknownStation(_))
        ));
    }

    #[test]
    fn overlap_on_a_line() {
        let n = line();
        let ov = path_overlap(&path(&n, "a", "c"), &path(&n, "b", "d")).unwrap();
        assert_eq!((ov.u.as_str(), ov.v.as_str()), ("b", "c"));
        assert_eq!(ov.shared_hops(), 1);
        assert_eq!(
            ov.sides[0],
            Sides {
                u_side: id("a"),
                v_side: id("c")
            }
        );
        assert_eq!(
            ov.sides[1],
            Sides {
                u_side: id("b"),
                v_side: id("d")
            }
        );
    }

    #[test]
    fn overlap_on_a_star() {
        let s = star();
        let ov = path_overlap(&path(&s, "a", "d"), &path(&s, "e", "f")).unwrap();
        assert_eq!(ov.stations, vec![id("b"), id("c")]);
        assert_eq!(
            ov.sides[0],
            Sides {
                u_side: id("a"),
                v_side: id("d")
            }
        );
        assert_eq!(
            ov.sides[1],
            Sides {
                u_side: id("e"),
                v_side: id("f")
            }
        );
    }

    #[test]
    fn no_overlap_without_a_shared_edge() {
        let n = line();
        assert!(path_overlap(&path(&n, "a", "b"), &path(&n, "c", "d")).is_none());
        // one shared station is not enough
        assert!(path_overlap(&path(&n, "a", "b"), &path(&n, "b", "d")).is_none());
    }

    #[test]
    fn swap_partitions() {
        let n = line();
        let (t1, t2) = (trip("a", "c"), trip("b", "d"));
        let ov = n.overlap(&t1, &t2).unwrap().unwrap();
        assert_eq!(
            swap_partition(&t1, &t2, &ov),
            (trip("a", "d"), trip("b", "c"))
        );

        let short = net(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        let (t1, t2) = (trip("a", "c"), trip("b", "c"));
        let ov = short.overlap(&t1, &t2).unwrap().unwrap();
        assert_eq!(swap_partition(&t1, &t2, &ov), (t1.clone(), t2.clone()));

        let s = star();
        let (t1, t2) = (trip("a", "d"), trip("e", "f"));
        let ov = s.overlap(&t1, &t2).unwrap().unwrap();
        assert_eq!(
            swap_partition(&t1, &t2, &ov),
            (trip("a", "f"), trip("d", "e"))
        );
    }

    #[test]
    fn travel_direction_follows_first_route() {
        let s = star();
        assert_eq!(s.travel_direction(&id("c"), &id("b")), (&id("b"), &id("c")));
        assert_eq!(s.travel_direction(&id("b"), &id("e")), (&id("e"), &id("b")));
        // f and e share no route: lexicographic
        assert_eq!(s.travel_direction(&id("f"), &id("e")), (&id("e"), &id("f")));
    }

    #[test]
    fn csv_round_trip() {
        let stations = "id,name\nb,Bee\na,Ay\nc,See\n";
        let routes = "name,stations\nmain,a|b|c\n";
        let n = load_network(stations.as_bytes(), routes.as_bytes()).unwrap();
        assert_eq!(n.display_name(&id("b")), Some("Bee"));
        let mut s_out = Vec::new();
        let mut r_out = Vec::new();
        write_stations_csv(&n, &mut s_out).unwrap();
        write_routes_csv(&n, &mut r_out).unwrap();
        let again = load_network(s_out.as_slice(), r_out.as_slice()).unwrap();
        assert_eq!(again.stations(), n.stations());
        assert_eq!(again.routes(), n.routes());
    }

    #[test]
    fn csv_rejects_wrong_header() {
        let err = load_network(
            "station,name\na,A\n".as_bytes(),
            "name,stations\n".as_bytes(),
        );
        assert!(matches!(err, Err(Error::Csv(_))));
    }
}
