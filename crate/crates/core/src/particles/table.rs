use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Error;

use super::label::SpatialSignature;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ParticleKind {
    Proton,
    Pion,
    Graviton,
}

impl ParticleKind {
    pub const ALL: [ParticleKind; 3] = [
        ParticleKind::Proton,
        ParticleKind::Pion,
        ParticleKind::Graviton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParticleKind::Proton => "proton",
            ParticleKind::Pion => "pion",
            ParticleKind::Graviton => "graviton",
        }
    }
}

impl fmt::Display for ParticleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParticleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "proton" => Ok(ParticleKind::Proton),
            "pion" => Ok(ParticleKind::Pion),
            "graviton" => Ok(ParticleKind::Graviton),
            _ => Err(Error::malformed("particle kind", s)),
        }
    }
}

/// The payload of one table cell beside its tick.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TickSignature {
    Rest,
    Step(SpatialSignature),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathEntry {
    pub tick: i64,
    pub signature: TickSignature,
}

impl fmt::Display for PathEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.signature {
            TickSignature::Rest => write!(f, "{}", self.tick),
            TickSignature::Step(signature) => write!(f, "{}{signature}", self.tick),
        }
    }
}

impl FromStr for PathEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .char_indices()
            .take_while(|&(index, c)| c.is_ascii_digit() || (index == 0 && c == '-'))
            .count();
        let (tick_text, rest) = s.split_at(digits);
        let tick: i64 = tick_text
            .parse()
            .map_err(|_| Error::malformed("table entry", s))?;
        let signature = if rest.is_empty() {
            TickSignature::Rest
        } else {
            TickSignature::Step(rest.parse()?)
        };
        Ok(PathEntry { tick, signature })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Constituent {
    pub name: String,
    pub entries: Vec<PathEntry>,
}

/// A particle's full table: one entry column per constituent, in table
/// order, rows aligned across constituents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParticlePath {
    kind: ParticleKind,
    constituents: Vec<Constituent>,
}

// Builtin tables, verbatim, in the canonical rendering. The builtin proton
// deliberately keeps its tick-2 misprint in the third B-Quark row; the
// validator flags it.
const PROTON_TABLE: &str = "\
R-Quark,G-Quark,B-Quark
1+i-j-k,1-i+j-k,1-i-j+k
2-i+j-k,2-i-j+k,2+i-j-k
3-i-j+k,3+i-j-k,2-i+j-k
4+i-j-k,4-i+j-k,4-i-j+k
5-i+j-k,5-i-j+k,5+i-j-k
6-i-j+k,6+i-j-k,6-i+j-k
7+i-j-k,7-i+j-k,7-i-j+k
";

const PION_TABLE: &str = "\
Quark,AntiQuark
0,0
1+i+j+k,1-i+j-k
2,2
3+i-j-k,3-i-j+k
4,4
5-i+j-k,5+i+j+k
6,6
7-i-j+k,7+i-j-k
8,8
9+i+j+k,9-i+j-k
10,10
11+i-j-k,11-i-j+k
12,12
13-i+j-k,13+i+j+k
14,14
15-i-j+k,15+i-j-k
16,16
";

const GRAVITON_TABLE: &str = "\
T,X,Y,Z
0,0,0,0
1+i+j+k,1+i-j-k,1-i+j-k,1-i-j+k
2,2,2,2
3+i+j+k,3+i-j-k,3-i+j-k,3-i-j+k
4,4,4,4
5+i+j+k,5+i-j-k,5-i+j-k,5-i-j+k
6,6,6,6
7+i+j+k,7+i-j-k,7-i+j-k,7-i-j+k
8,8,8,8
";

/// The builtin table for a particle kind, transcribed verbatim.
pub fn builtin_table(kind: ParticleKind) -> ParticlePath {
    let text = match kind {
        ParticleKind::Proton => PROTON_TABLE,
        ParticleKind::Pion => PION_TABLE,
        ParticleKind::Graviton => GRAVITON_TABLE,
    };
    ParticlePath::parse_table(kind, text).expect("builtin tables are well-formed")
}

impl ParticlePath {
    pub fn new(kind: ParticleKind, constituents: Vec<Constituent>) -> ParticlePath {
        ParticlePath { kind, constituents }
    }

    pub fn kind(&self) -> ParticleKind {
        self.kind
    }

    pub fn constituents(&self) -> &[Constituent] {
        &self.constituents
    }

    /// Parse the canonical rendering: a header row of constituent names,
    /// then one comma-separated row of entries per tick.
    pub fn parse_table(kind: ParticleKind, text: &str) -> Result<ParticlePath, Error> {
        let mut lines = text.lines().filter(|line| !line.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::malformed("particle table", "empty table"))?;
        let mut constituents: Vec<Constituent> = header
            .split(',')
            .map(|name| Constituent {
                name: name.trim().to_string(),
                entries: Vec::new(),
            })
            .collect();
        if constituents.iter().any(|c| c.name.is_empty()) {
            return Err(Error::malformed("particle table", header));
        }
        for line in lines {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() != constituents.len() {
                return Err(Error::malformed("particle table", line));
            }
            for (constituent, cell) in constituents.iter_mut().zip(cells) {
                constituent.entries.push(cell.parse()?);
            }
        }
        Ok(ParticlePath { kind, constituents })
    }

    /// Render back to the canonical comma-separated table, ending with a
    /// newline. `parse_table` of the result reproduces `self` exactly.
    pub fn canonical_table(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.constituents.iter().map(|c| c.name.as_str()).collect();
        out.push_str(&names.join(","));
        out.push('\n');
        let rows = self
            .constituents
            .iter()
            .map(|c| c.entries.len())
            .max()
            .unwrap_or(0);
        for row in 0..rows {
            let cells: Vec<String> = self
                .constituents
                .iter()
                .map(|c| {
                    c.entries
                        .get(row)
                        .map(|e| e.to_string())
                        .unwrap_or_default()
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut constituents = serde_json::Map::new();
        for constituent in &self.constituents {
            let entries: Vec<Value> = constituent
                .entries
                .iter()
                .map(|entry| {
                    let signature = match entry.signature {
                        TickSignature::Rest => "rest".to_string(),
                        TickSignature::Step(s) => s.to_string(),
                    };
                    json!({ "tick": entry.tick, "signature": signature })
                })
                .collect();
            constituents.insert(constituent.name.clone(), Value::Array(entries));
        }
        json!({ "kind": self.kind.name(), "constituents": Value::Object(constituents) })
    }

    pub fn from_json(value: &Value) -> Result<ParticlePath, Error> {
        let malformed = |what: &'static str| Error::malformed(what, value.to_string());
        let object = value.as_object().ok_or_else(|| malformed("particle json"))?;
        let kind: ParticleKind = object
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| malformed("particle kind"))?
            .parse()?;
        let constituent_map = object
            .get("constituents")
            .and_then(Value::as_object)
            .ok_or_else(|| malformed("particle constituents"))?;
        let mut constituents = Vec::new();
        for (name, entries_value) in constituent_map {
            let entry_list = entries_value
                .as_array()
                .ok_or_else(|| malformed("constituent entries"))?;
            let mut entries = Vec::new();
            for entry_value in entry_list {
                let entry_object = entry_value
                    .as_object()
                    .ok_or_else(|| malformed("table entry"))?;
                let tick = entry_object
                    .get("tick")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| malformed("entry tick"))?;
                let signature_text = entry_object
                    .get("signature")
                    .and_then(Value::as_str)
                    .ok_or_else(|| malformed("entry signature"))?;
                let signature = if signature_text == "rest" {
                    TickSignature::Rest
                } else {
                    TickSignature::Step(signature_text.parse()?)
                };
                entries.push(PathEntry { tick, signature });
            }
            constituents.push(Constituent {
                name: name.clone(),
                entries,
            });
        }
        Ok(ParticlePath { kind, constituents })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_render_back_to_their_source_bytes() {
        for (kind, source) in [
            (ParticleKind::Proton, PROTON_TABLE),
            (ParticleKind::Pion, PION_TABLE),
            (ParticleKind::Graviton, GRAVITON_TABLE),
        ] {
            let path = builtin_table(kind);
            assert_eq!(path.canonical_table(), source, "{kind}");
        }
    }

    #[test]
    fn builtin_shapes() {
        let proton = builtin_table(ParticleKind::Proton);
        assert_eq!(proton.constituents().len(), 3);
        assert!(proton.constituents().iter().all(|c| c.entries.len() == 7));
        assert_eq!(proton.constituents()[2].name, "B-Quark");
        // The misprinted row: tick 2 where 3 is expected.
        assert_eq!(proton.constituents()[2].entries[2].tick, 2);

        let pion = builtin_table(ParticleKind::Pion);
        assert_eq!(pion.constituents().len(), 2);
        assert!(pion.constituents().iter().all(|c| c.entries.len() == 17));

        let graviton = builtin_table(ParticleKind::Graviton);
        assert_eq!(graviton.constituents().len(), 4);
        assert!(graviton.constituents().iter().all(|c| c.entries.len() == 9));
    }

    #[test]
    fn first_rows_match_the_source_tables() {
        let row = |kind: ParticleKind, index: usize| -> Vec<String> {
            builtin_table(kind)
                .constituents()
                .iter()
                .map(|c| c.entries[index].to_string())
                .collect()
        };
        assert_eq!(
            row(ParticleKind::Proton, 0),
            ["1+i-j-k", "1-i+j-k", "1-i-j+k"]
        );
        assert_eq!(row(ParticleKind::Pion, 1), ["1+i+j+k", "1-i+j-k"]);
        assert_eq!(
            row(ParticleKind::Graviton, 1),
            ["1+i+j+k", "1+i-j-k", "1-i+j-k", "1-i-j+k"]
        );
    }

    #[test]
    fn json_round_trip_preserves_everything() {
        for kind in ParticleKind::ALL {
            let path = builtin_table(kind);
            let value = path.to_json();
            let reparsed = ParticlePath::from_json(&value).unwrap();
            assert_eq!(reparsed, path);
            // Byte-level stability of the serialized form.
            assert_eq!(
                serde_json::to_string(&reparsed.to_json()).unwrap(),
                serde_json::to_string(&value).unwrap()
            );
        }
    }

    #[test]
    fn json_shape_is_as_documented() {
        let pion = builtin_table(ParticleKind::Pion);
        let value = pion.to_json();
        assert_eq!(value["kind"], "pion");
        assert_eq!(value["constituents"]["Quark"][0]["tick"], 0);
        assert_eq!(value["constituents"]["Quark"][0]["signature"], "rest");
        assert_eq!(value["constituents"]["Quark"][1]["signature"], "+i+j+k");
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(ParticlePath::parse_table(ParticleKind::Pion, "").is_err());
        assert!(ParticlePath::parse_table(ParticleKind::Pion, "A,B\n1+i+j+k\n").is_err());
        assert!(ParticlePath::parse_table(ParticleKind::Pion, "A\n1+i+j\n").is_err());
        assert!("x+i+j+k".parse::<PathEntry>().is_err());
    }

    #[test]
    fn entry_parsing_handles_rest_and_steps() {
        let rest: PathEntry = "12".parse().unwrap();
        assert_eq!(rest.tick, 12);
        assert_eq!(rest.signature, TickSignature::Rest);
        let step: PathEntry = "7-i-j+k".parse().unwrap();
        assert_eq!(step.tick, 7);
        assert_eq!(step.to_string(), "7-i-j+k");
    }
}
