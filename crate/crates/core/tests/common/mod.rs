#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use transit_arbitrage::{build_network, FareTable, Money, RouteDef, StationId, TransitNetwork};

/// Tree whose node `k + 1` hangs off `parents[k]` (taken modulo `k + 1`).
/// Node labels come from `labels`; one route runs from the root to each
/// leaf, reversed where `flips` says so.
pub fn tree_from_parents(parents: &[usize], labels: &[usize], flips: &[bool]) -> TransitNetwork {
    let n = parents.len() + 1;
    let parent: Vec<Option<usize>> = std::iter::once(None)
        .chain(parents.iter().enumerate().map(|(k, &p)| Some(p % (k + 1))))
        .collect();
    let id = |node: usize| StationId::new(format!("n{:02}", labels[node])).unwrap();
    let has_child: Vec<bool> = (0..n).map(|x| parent.contains(&Some(x))).collect();
    let mut routes = Vec::new();
    for leaf in (0..n).filter(|&x| !has_child[x]) {
        let mut stations = vec![id(leaf)];
        let mut at = leaf;
        while let Some(p) = parent[at] {
            stations.push(id(p));
            at = p;
        }
        if stations.len() < 2 {
            continue;
        }
        if flips.get(routes.len()).copied().unwrap_or(false) {
            stations.reverse();
        }
        routes.push(RouteDef::new(format!("route-{}", routes.len()), stations));
    }
    build_network(
        (0..n).map(|x| (id(x), format!("Node {x}"))).collect(),
        routes,
    )
    .unwrap()
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> TransitNetwork {
    let parents: Vec<usize> = (1..n).map(|k| rng.gen_range(0..k)).collect();
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let flips: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    tree_from_parents(&parents, &labels, &flips)
}

pub fn random_fares<R: Rng>(rng: &mut R, net: &TransitNetwork, lo: u64, hi: u64) -> FareTable {
    FareTable::from_fn(net, |_| Money::from_cents(rng.gen_range(lo..=hi)))
}

pub fn line(n: usize) -> TransitNetwork {
    let ids: Vec<StationId> = (1..=n)
        .map(|i| StationId::new(format!("s{i:02}")).unwrap())
        .collect();
    build_network(
        ids.iter().map(|s| (s.clone(), s.to_string())).collect(),
        vec![RouteDef::new("line", ids)],
    )
    .unwrap()
}
