use serde_json::{json, Value};

use super::label::{signature_label, InternalAxis, LabelOutcome, SpacetimeAxis};
use super::table::{ParticleKind, ParticlePath, TickSignature};

/// One structural deviation found in a table. `tick` is the expected tick of
/// the offending row, so reports stay stable even when the recorded tick is
/// itself the problem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Anomaly {
    pub constituent: String,
    pub tick: i64,
    pub description: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    pub anomalies: Vec<Anomaly>,
    pub pattern_summary: String,
}

impl ValidationReport {
    pub fn to_json(&self) -> Value {
        let anomalies: Vec<Value> = self
            .anomalies
            .iter()
            .map(|a| {
                json!({
                    "constituent": a.constituent,
                    "tick": a.tick,
                    "description": a.description,
                })
            })
            .collect();
        json!({
            "ok": self.ok,
            "anomalies": anomalies,
            "pattern_summary": self.pattern_summary,
        })
    }
}

/// Anomalies the builtin tables carry verbatim from their source: the
/// builtin proton's third B-Quark row records tick 2 where 3 is expected.
pub fn builtin_known_anomalies(kind: ParticleKind) -> &'static [(&'static str, i64)] {
    match kind {
        ParticleKind::Proton => &[("B-Quark", 3)],
        ParticleKind::Pion | ParticleKind::Graviton => &[],
    }
}

struct Checker {
    anomalies: Vec<Anomaly>,
}

impl Checker {
    fn flag(&mut self, constituent: &str, tick: i64, description: String) {
        self.anomalies.push(Anomaly {
            constituent: constituent.to_string(),
            tick,
            description,
        });
    }
}

fn status(count: usize) -> String {
    match count {
        0 => "OK".to_string(),
        1 => "1 anomaly".to_string(),
        n => format!("{n} anomalies"),
    }
}

/// Expected tick of a row: the constituent's first recorded tick plus the
/// row offset. Row positions, not recorded ticks, align the pattern checks.
fn expected_tick(path: &ParticlePath, row: usize) -> i64 {
    path.constituents()
        .first()
        .and_then(|c| c.entries.first())
        .map(|e| e.tick + row as i64)
        .unwrap_or(row as i64)
}

/// Check a particle table against the structural pattern of its kind.
///
/// Common to all kinds: within each constituent, recorded ticks must
/// increase by exactly 1 per row from the constituent's first tick. Kind
/// checks: the proton's three constituents must cover {R, G, B} on every row
/// and each advance by the color rotation per row; the pion's two
/// constituents must exchange signatures at a 4-tick lag in both directions;
/// the graviton's four constituents must each keep one constant signature
/// and jointly cover {T, X, Y, Z}.
pub fn validate(path: &ParticlePath) -> ValidationReport {
    let mut checker = Checker {
        anomalies: Vec::new(),
    };

    let mut tick_anomalies = 0;
    for constituent in path.constituents() {
        let Some(first) = constituent.entries.first() else {
            checker.flag(&constituent.name, 0, "constituent has no rows".to_string());
            tick_anomalies += 1;
            continue;
        };
        for (row, entry) in constituent.entries.iter().enumerate() {
            let expected = first.tick + row as i64;
            if entry.tick != expected {
                checker.flag(
                    &constituent.name,
                    expected,
                    format!("tick {} recorded where {} was expected", entry.tick, expected),
                );
                tick_anomalies += 1;
            }
        }
    }

    let row_counts: Vec<usize> = path.constituents().iter().map(|c| c.entries.len()).collect();
    let rows = row_counts.iter().copied().min().unwrap_or(0);
    if row_counts.iter().any(|&n| n != rows) {
        checker.flag(
            "table",
            0,
            format!("constituent row counts differ: {row_counts:?}"),
        );
    }

    let summary = match path.kind() {
        ParticleKind::Proton => {
            let (coverage, rotation) = check_proton(path, rows, &mut checker);
            format!(
                "3-link rotating propagator over {rows} rows: color coverage {}; rotation R->G->B {}; tick sequence {}",
                status(coverage),
                status(rotation),
                status(tick_anomalies)
            )
        }
        ParticleKind::Pion => {
            let (forward, backward) = check_pion(path, rows, &mut checker);
            format!(
                "2-link exchange propagator over {rows} rows: Quark(t+4)=AntiQuark(t) {}; AntiQuark(t+4)=Quark(t) {}; tick sequence {}",
                status(forward),
                status(backward),
                status(tick_anomalies)
            )
        }
        ParticleKind::Graviton => {
            let (constancy, coverage) = check_graviton(path, rows, &mut checker);
            format!(
                "4-link propagator over {rows} rows: constant signatures {}; coverage of T,X,Y,Z {}; tick sequence {}",
                status(constancy),
                status(coverage),
                status(tick_anomalies)
            )
        }
    };

    let ok = checker.anomalies.is_empty();
    ValidationReport {
        ok,
        anomalies: checker.anomalies,
        pattern_summary: summary,
    }
}

/// The internal color of a row entry, if it is a future color link.
fn row_color(path: &ParticlePath, constituent: usize, row: usize) -> Option<InternalAxis> {
    match path.constituents()[constituent].entries[row].signature {
        TickSignature::Rest => None,
        TickSignature::Step(signature) => {
            match signature_label(signature.as_future_pattern()) {
                LabelOutcome::Labeled {
                    internal,
                    negative: false,
                    ..
                } if internal != InternalAxis::E => Some(internal),
                _ => None,
            }
        }
    }
}

fn check_proton(path: &ParticlePath, rows: usize, checker: &mut Checker) -> (usize, usize) {
    let mut coverage_anomalies = 0;
    let mut rotation_anomalies = 0;
    if path.constituents().len() != 3 {
        checker.flag(
            "table",
            0,
            format!("expected 3 constituents, found {}", path.constituents().len()),
        );
        return (1, 0);
    }
    let mut previous: Option<[InternalAxis; 3]> = None;
    for row in 0..rows {
        let tick = expected_tick(path, row);
        let mut colors = [InternalAxis::E; 3];
        let mut all_colored = true;
        for (index, constituent) in path.constituents().iter().enumerate() {
            match row_color(path, index, row) {
                Some(color) => colors[index] = color,
                None => {
                    checker.flag(
                        &constituent.name,
                        tick,
                        "entry is not a future color signature".to_string(),
                    );
                    coverage_anomalies += 1;
                    all_colored = false;
                }
            }
        }
        if !all_colored {
            previous = None;
            continue;
        }
        let mut sorted = colors;
        sorted.sort();
        if sorted != [InternalAxis::R, InternalAxis::G, InternalAxis::B] {
            checker.flag(
                "table",
                tick,
                format!(
                    "row colors {:?} do not cover {{R, G, B}}",
                    colors.map(|c| c.to_string())
                ),
            );
            coverage_anomalies += 1;
        }
        if let Some(last) = previous {
            for (index, constituent) in path.constituents().iter().enumerate() {
                if colors[index] != last[index].rotated() {
                    checker.flag(
                        &constituent.name,
                        tick,
                        format!(
                            "color {} does not advance {} by R->G->B",
                            colors[index], last[index]
                        ),
                    );
                    rotation_anomalies += 1;
                }
            }
        }
        previous = Some(colors);
    }
    (coverage_anomalies, rotation_anomalies)
}

fn check_pion(path: &ParticlePath, rows: usize, checker: &mut Checker) -> (usize, usize) {
    if path.constituents().len() != 2 {
        checker.flag(
            "table",
            0,
            format!("expected 2 constituents, found {}", path.constituents().len()),
        );
        return (1, 0);
    }
    let quark = &path.constituents()[0];
    let antiquark = &path.constituents()[1];
    let mut forward_anomalies = 0;
    let mut backward_anomalies = 0;
    for row in 0..rows.saturating_sub(4) {
        let tick = expected_tick(path, row + 4);
        if quark.entries[row + 4].signature != antiquark.entries[row].signature {
            checker.flag(
                &quark.name,
                tick,
                format!(
                    "signature does not repeat {} from 4 ticks earlier",
                    antiquark.name
                ),
            );
            forward_anomalies += 1;
        }
        if antiquark.entries[row + 4].signature != quark.entries[row].signature {
            checker.flag(
                &antiquark.name,
                tick,
                format!(
                    "signature does not repeat {} from 4 ticks earlier",
                    quark.name
                ),
            );
            backward_anomalies += 1;
        }
    }
    (forward_anomalies, backward_anomalies)
}

fn check_graviton(path: &ParticlePath, rows: usize, checker: &mut Checker) -> (usize, usize) {
    if path.constituents().len() != 4 {
        checker.flag(
            "table",
            0,
            format!("expected 4 constituents, found {}", path.constituents().len()),
        );
        return (1, 0);
    }
    let mut constancy_anomalies = 0;
    let mut coverage_anomalies = 0;
    let mut axes: Vec<SpacetimeAxis> = Vec::new();
    for constituent in path.constituents() {
        let mut constant: Option<super::label::SpatialSignature> = None;
        for (row, entry) in constituent.entries.iter().take(rows).enumerate() {
            let TickSignature::Step(signature) = entry.signature else {
                continue;
            };
            match constant {
                None => constant = Some(signature),
                Some(first) if first != signature => {
                    checker.flag(
                        &constituent.name,
                        expected_tick(path, row),
                        format!("signature {signature} differs from constant {first}"),
                    );
                    constancy_anomalies += 1;
                }
                Some(_) => {}
            }
        }
        match constant.map(|s| signature_label(s.as_future_pattern())) {
            Some(LabelOutcome::Labeled {
                spacetime,
                negative: false,
                ..
            }) => axes.push(spacetime),
            _ => {
                checker.flag(
                    &constituent.name,
                    0,
                    "no constant future-link signature".to_string(),
                );
                coverage_anomalies += 1;
            }
        }
    }
    axes.sort();
    axes.dedup();
    if axes.len() != 4 {
        checker.flag(
            "table",
            0,
            "constant signatures do not cover T, X, Y, Z".to_string(),
        );
        coverage_anomalies += 1;
    }
    (constancy_anomalies, coverage_anomalies)
}

#[cfg(test)]
mod tests {
    use super::super::table::{builtin_table, PathEntry};
    use super::*;

    #[test]
    fn builtin_proton_reports_exactly_the_tick_misprint() {
        let report = validate(&builtin_table(ParticleKind::Proton));
        assert!(!report.ok);
        assert_eq!(report.anomalies.len(), 1);
        let anomaly = &report.anomalies[0];
        assert_eq!(anomaly.constituent, "B-Quark");
        assert_eq!(anomaly.tick, 3);
        assert_eq!(
            anomaly.description,
            "tick 2 recorded where 3 was expected"
        );
        assert_eq!(
            report.pattern_summary,
            "3-link rotating propagator over 7 rows: color coverage OK; rotation R->G->B OK; tick sequence 1 anomaly"
        );
    }

    #[test]
    fn builtin_pion_and_graviton_are_clean() {
        let pion = validate(&builtin_table(ParticleKind::Pion));
        assert!(pion.ok);
        assert!(pion.anomalies.is_empty());
        assert_eq!(
            pion.pattern_summary,
            "2-link exchange propagator over 17 rows: Quark(t+4)=AntiQuark(t) OK; AntiQuark(t+4)=Quark(t) OK; tick sequence OK"
        );

        let graviton = validate(&builtin_table(ParticleKind::Graviton));
        assert!(graviton.ok);
        assert!(graviton.anomalies.is_empty());
        assert_eq!(
            graviton.pattern_summary,
            "4-link propagator over 9 rows: constant signatures OK; coverage of T,X,Y,Z OK; tick sequence OK"
        );
    }

    #[test]
    fn correcting_the_proton_tick_clears_the_report() {
        let mut path = builtin_table(ParticleKind::Proton);
        let fixed: PathEntry = "3-i+j-k".parse().unwrap();
        let mut constituents = path.constituents().to_vec();
        constituents[2].entries[2] = fixed;
        path = ParticlePath::new(ParticleKind::Proton, constituents);
        let report = validate(&path);
        assert!(report.ok, "anomalies: {:?}", report.anomalies);
    }

    #[test]
    fn proton_rotation_violations_are_flagged() {
        let mut constituents = builtin_table(ParticleKind::Proton).constituents().to_vec();
        // Swap the R-Quark and G-Quark signatures in the second row: the
        // set {R, G, B} survives but both constituents break the rotation.
        let r_entry = constituents[0].entries[1];
        constituents[0].entries[1] = constituents[1].entries[1];
        constituents[1].entries[1] = r_entry;
        let report = validate(&ParticlePath::new(ParticleKind::Proton, constituents));
        assert!(!report.ok);
        assert!(report
            .anomalies
            .iter()
            .any(|a| a.description.contains("R->G->B")));
    }

    #[test]
    fn pion_exchange_violations_are_flagged_both_ways() {
        let mut constituents = builtin_table(ParticleKind::Pion).constituents().to_vec();
        // Corrupt Quark tick 9 (row 9): +i+j+k becomes +i-j-k.
        constituents[0].entries[9] = "9+i-j-k".parse().unwrap();
        let report = validate(&ParticlePath::new(ParticleKind::Pion, constituents));
        assert!(!report.ok);
        // Forward mismatch at row 9 (against AntiQuark row 5) and backward
        // mismatch at row 13 (AntiQuark against Quark row 9).
        assert_eq!(report.anomalies.len(), 2);
        assert_eq!(report.anomalies[0].constituent, "Quark");
        assert_eq!(report.anomalies[0].tick, 9);
        assert_eq!(report.anomalies[1].constituent, "AntiQuark");
        assert_eq!(report.anomalies[1].tick, 13);
    }

    #[test]
    fn graviton_constancy_violations_are_flagged() {
        let mut constituents = builtin_table(ParticleKind::Graviton)
            .constituents()
            .to_vec();
        constituents[3].entries[7] = "7+i+j+k".parse().unwrap();
        let report = validate(&ParticlePath::new(ParticleKind::Graviton, constituents));
        assert!(!report.ok);
        assert_eq!(report.anomalies.len(), 1);
        assert_eq!(report.anomalies[0].constituent, "Z");
        assert_eq!(report.anomalies[0].tick, 7);
    }

    #[test]
    fn ok_mirrors_anomaly_emptiness() {
        for kind in ParticleKind::ALL {
            let report = validate(&builtin_table(kind));
            assert_eq!(report.ok, report.anomalies.is_empty());
        }
    }

    #[test]
    fn known_anomaly_lists() {
        assert_eq!(
            builtin_known_anomalies(ParticleKind::Proton),
            &[("B-Quark", 3)]
        );
        assert!(builtin_known_anomalies(ParticleKind::Pion).is_empty());
        assert!(builtin_known_anomalies(ParticleKind::Graviton).is_empty());
    }

    #[test]
    fn report_json_shape() {
        let report = validate(&builtin_table(ParticleKind::Proton));
        let value = report.to_json();
        assert_eq!(value["ok"], false);
        assert_eq!(value["anomalies"][0]["constituent"], "B-Quark");
        assert_eq!(value["anomalies"][0]["tick"], 3);
    }
}
