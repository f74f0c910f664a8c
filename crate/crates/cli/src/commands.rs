use std::fs::{self, File};
use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};
use transit_arbitrage::{
    build_network, classify_segments, generate_fare_table, load_network, parse_fare_table, report,
    route_fare_profile, ArbitrageEngine, ArbitrageRecord, ArbitrageSummary, Execution,
    FareCurveModel, FareTable, Money, Ride, RouteDef, StationId, TransitNetwork, Zone,
};

use crate::{
    DataArgs, EnumerateArgs, Failure, Format, ModelKind, PairArgs, ProfileArgs, SummaryArgs,
    SynthArgs,
};

type CmdResult = Result<(), Failure>;

fn open(path: &Path) -> Result<File, Failure> {
    File::open(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn load(args: &DataArgs) -> Result<(TransitNetwork, FareTable), Failure> {
    let net = load_network(open(&args.stations)?, open(&args.routes)?)?;
    let fares = parse_fare_table(open(&args.fares)?, &net)?;
    fares.check_complete(&net)?;
    Ok((net, fares))
}

fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    let written = match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| Failure::Data(format!("writing output: {e}")))
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn thresholds(cents: &[u64]) -> Vec<Money> {
    cents.iter().copied().map(Money::from_cents).collect()
}

fn percent_tenths(tenths: u64) -> String {
    format!("{}.{}", tenths / 10, tenths % 10)
}

pub fn validate(args: &DataArgs) -> CmdResult {
    let (net, fares) = load(args)?;
    emit(
        None,
        &format!(
            "{} stations, {} edges, {} fares\n",
            net.station_count(),
            net.edge_count(),
            fares.len()
        ),
    )
}

fn ride_json(ride: &Ride) -> Value {
    json!({ "origin": ride.origin.as_str(), "destination": ride.destination.as_str() })
}

fn record_json(r: &ArbitrageRecord) -> Value {
    json!({
        "trip1": ride_json(&r.trip1),
        "trip2": ride_json(&r.trip2),
        "swapped1": ride_json(&r.swapped1),
        "swapped2": ride_json(&r.swapped2),
        "gain": r.gain.cents(),
        "gain_dollars": r.gain.to_string(),
        "original_total": r.original_total.cents(),
        "swapped_total": r.swapped_total().cents(),
        "percent": r.percent().rounded(),
    })
}

fn summary_json(s: &ArbitrageSummary) -> Value {
    let rows: Vec<Value> = s
        .pairs_ge_threshold
        .iter()
        .map(|(t, count)| {
            json!({
                "min_gain": t.cents(),
                "min_gain_dollars": t.to_string(),
                "pairs": count,
                "percent_of_pairs": percent_tenths(s.fraction(*count).rounded_tenths()),
            })
        })
        .collect();
    json!({
        "station_count": s.station_count,
        "trip_count": s.trip_count,
        "pair_count": s.pair_count,
        "overlapping_pairs": s.overlapping_pairs,
        "thresholds": rows,
    })
}

fn summary_text(s: &ArbitrageSummary) -> String {
    let mut out = format!(
        "stations: {}\ntrips: {}\npairs: {}\noverlapping pairs: {}\n",
        s.station_count, s.trip_count, s.pair_count, s.overlapping_pairs
    );
    for (t, count) in &s.pairs_ge_threshold {
        out.push_str(&format!(
            "pairs>={t}: {count} ({}%)\n",
            percent_tenths(s.fraction(*count).rounded_tenths())
        ));
    }
    out
}

fn summary_csv(s: &ArbitrageSummary) -> String {
    let mut out = String::from("min_gain,pairs,pair_count,percent\n");
    for (t, count) in &s.pairs_ge_threshold {
        out.push_str(&format!(
            "{t},{count},{},{}\n",
            s.pair_count,
            percent_tenths(s.fraction(*count).rounded_tenths())
        ));
    }
    out
}

pub fn enumerate(args: &EnumerateArgs) -> CmdResult {
    let (net, fares) = load(&args.data)?;
    let engine = ArbitrageEngine::new(&net, &fares)?;
    let exec = execution(args.sequential);
    let records = engine.enumerate(Money::from_cents(args.min_gain_cents), exec);
    let text = match args.output.format {
        Format::Text => report::render_text(&records),
        Format::Csv => report::render_csv(&records),
        Format::Json => {
            let summary = engine.summarize(&thresholds(&args.thresholds), exec);
            let doc = json!({
                "summary": summary_json(&summary),
                "min_gain": args.min_gain_cents,
                "records": records.iter().map(record_json).collect::<Vec<_>>(),
            });
            to_json(&doc)
        }
    };
    emit(args.output.out.as_deref(), &text)
}

fn to_json(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("json values serialize");
    text.push('\n');
    text
}

pub fn summary(args: &SummaryArgs) -> CmdResult {
    let (net, fares) = load(&args.data)?;
    let engine = ArbitrageEngine::new(&net, &fares)?;
    let s = engine.summarize(&thresholds(&args.thresholds), execution(args.sequential));
    let text = match args.output.format {
        Format::Text => summary_text(&s),
        Format::Csv => summary_csv(&s),
        Format::Json => to_json(&summary_json(&s)),
    };
    emit(args.output.out.as_deref(), &text)
}

fn parse_ride(net: &TransitNetwork, token: &str) -> Result<Ride, Failure> {
    let (x, y) = token.split_once(':').ok_or_else(|| {
        Failure::Usage(format!("trip {token:?} must look like origin:destination"))
    })?;
    let ride = Ride::new(net.resolve(x)?, net.resolve(y)?);
    if ride.origin == ride.destination {
        return Err(Failure::Usage(format!(
            "trip {token:?} starts and ends at the same station"
        )));
    }
    Ok(ride)
}

fn reversed(r: &Ride) -> Ride {
    Ride::new(r.destination.clone(), r.origin.clone())
}

pub fn pair(args: &PairArgs) -> CmdResult {
    let (net, fares) = load(&args.data)?;
    let first = parse_ride(&net, &args.trip1)?;
    let second = parse_ride(&net, &args.trip2)?;
    let engine = ArbitrageEngine::new(&net, &fares)?;
    let Some(p) = engine.pair(&first.key(), &second.key())? else {
        return emit(
            args.out.as_deref(),
            &format!("{first}\t{second}\tno overlap\n"),
        );
    };
    // present everything in the direction the first rider travels
    let flip = p.trip1.origin != first.origin;
    let orient = |r: &Ride| if flip { reversed(r) } else { r.clone() };
    let sign = if p.gain < 0 { "-" } else { "" };
    let gain = Money::from_cents(p.gain.unsigned_abs());
    let text = format!(
        "trip1: {} {}\ntrip2: {} {}\nshared: {} ({} {})\nswapped1: {} {}\nswapped2: {} {}\ntotal: {} -> {}\ngain: {sign}{gain} ({sign}{}%)\n",
        orient(&p.trip1),
        p.fares[0],
        orient(&p.trip2),
        p.fares[1],
        orient(&p.shared),
        p.shared_hops,
        if p.shared_hops == 1 { "hop" } else { "hops" },
        orient(&p.swapped1),
        p.fares[2],
        orient(&p.swapped2),
        p.fares[3],
        p.original_total(),
        p.swapped_total(),
        p.percent().rounded(),
    );
    emit(args.out.as_deref(), &text)
}

pub fn profile(args: &ProfileArgs) -> CmdResult {
    let (net, fares) = load(&args.data)?;
    let origin = net.resolve(&args.origin)?;
    let profile = route_fare_profile(&net, &fares, &origin, &args.route)?;
    let segments = classify_segments(&profile, args.tolerance_cents)?;
    let mut text = profile.to_csv();
    text.push_str("\nstart,end,class,max_second_difference_cents\n");
    for s in &segments {
        text.push_str(&format!(
            "{},{},{},{}\n",
            s.start,
            s.end,
            s.class.as_str(),
            s.max_abs_second_difference
        ));
    }
    emit(args.out.as_deref(), &text)
}

fn dollars(flag: &str, value: &Option<String>) -> Result<Money, Failure> {
    let raw = value
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("--{flag} is required for this model")))?;
    Money::parse_dollars(raw).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn parse_zone(token: &str) -> Result<Zone, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "zone {token:?} must look like first:last:surcharge"
        ))
    };
    let mut parts = token.split(':');
    let (Some(first), Some(last), Some(amount), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err(bad());
    };
    Ok(Zone {
        first: first.parse().map_err(|_| bad())?,
        last: last.parse().map_err(|_| bad())?,
        surcharge: Money::parse_dollars(amount).map_err(|_| bad())?,
    })
}

fn synth_model(args: &SynthArgs) -> Result<FareCurveModel, Failure> {
    let model = match args.model {
        ModelKind::Flat => FareCurveModel::Flat {
            c: dollars("c", &args.c)?,
        },
        ModelKind::Affine => FareCurveModel::Affine {
            c: dollars("c", &args.c)?,
            k: dollars("k", &args.k)?,
        },
        ModelKind::Power => FareCurveModel::Power {
            a: dollars("a", &args.a)?,
            p: args
                .p
                .ok_or_else(|| Failure::Usage("--p is required for the power model".into()))?,
        },
        ModelKind::Density => FareCurveModel::DensityZone {
            c0: dollars("c0", &args.c0)?,
            k: dollars("k", &args.k)?,
            zones: args
                .zone
                .iter()
                .map(|z| parse_zone(z))
                .collect::<Result<_, _>>()?,
        },
    };
    Ok(model)
}

pub fn synth(args: &SynthArgs) -> CmdResult {
    if args.n < 2 {
        return Err(Failure::Usage("--n must be at least 2".into()));
    }
    let model = synth_model(args)?;
    model
        .validate()
        .map_err(|e| Failure::Usage(e.to_string()))?;

    let width = args.n.to_string().len().max(2);
    let ids: Vec<StationId> = (1..=args.n)
        .map(|i| StationId::new(format!("s{i:0width$}")).expect("generated slug"))
        .collect();
    let net = build_network(
        ids.iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), format!("Station {}", i + 1)))
            .collect(),
        vec![RouteDef::new("line", ids.clone())],
    )?;
    let fares = generate_fare_table(&model, &net).map_err(|e| Failure::Usage(e.to_string()))?;

    fs::create_dir_all(&args.out_dir)
        .map_err(|e| Failure::Data(format!("{}: {e}", args.out_dir.display())))?;
    let create = |name: &str| {
        let path = args.out_dir.join(name);
        File::create(&path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
    };
    transit_arbitrage::network::write_stations_csv(&net, create("stations.csv")?)?;
    transit_arbitrage::network::write_routes_csv(&net, create("routes.csv")?)?;
    fares.write_csv(create("fares.csv")?)?;
    emit(
        None,
        &format!(
            "wrote {} stations and {} fares to {}\n",
            net.station_count(),
            fares.len(),
            args.out_dir.display()
        ),
    )
}
