//! Plain-text and CSV renderings of arbitrage records.

use crate::engine::ArbitrageRecord;

/// One `trip1\ttrip2\tgain\tpercent` line per record.
pub fn render_text(records: &[ArbitrageRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            r.trip1,
            r.trip2,
            r.gain,
            r.percent().rounded()
        ));
    }
    out
}

pub const CSV_HEADER: &str =
    "trip1,trip2,swapped1,swapped2,gain,percent,gain_cents,original_total_cents,swapped_total_cents";

pub fn render_csv(records: &[ArbitrageRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.trip1,
            r.trip2,
            r.swapped1,
            r.swapped2,
            r.gain,
            r.percent().rounded(),
            r.gain.cents(),
            r.original_total.cents(),
            r.swapped_total().cents()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Ride;
    use crate::money::Money;
    use crate::network::StationId;

    fn ride(x: &str, y: &str) -> Ride {
        Ride::new(StationId::new(x).unwrap(), StationId::new(y).unwrap())
    }

    fn record() -> ArbitrageRecord {
        ArbitrageRecord {
            trip1: ride("orinda", "pittsburg"),
            trip2: ride("walnut-creek", "concord"),
            swapped1: ride("orinda", "concord"),
            swapped2: ride("walnut-creek", "pittsburg"),
            gain: Money::from_cents(205),
            original_total: Money::from_cents(570),
        }
    }

    #[test]
    fn text_line_format() {
        assert_eq!(
            render_text(&[record()]),
            "orinda->pittsburg\twalnut-creek->concord\t2.05\t36\n"
        );
    }

    #[test]
    fn csv_line_format() {
        let csv = render_csv(&[record()]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(
            lines[1],
            "orinda->pittsburg,walnut-creek->concord,orinda->concord,walnut-creek->pittsburg,2.05,36,205,570,365"
        );
    }
}
