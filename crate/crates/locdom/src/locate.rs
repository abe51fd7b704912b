//! Sensor-network semantics: each codeword reports 2 for an
//! irregularity at its own location, 1 for one in its open
//! neighborhood, 0 otherwise. The decoder locates single faults from
//! a report vector and refuses to guess when the reports admit no
//! single-fault explanation.

use serde::{Deserialize, Serialize};

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SensorReport {
    Silent,
    NeighborFault,
    LocalFault,
}

impl SensorReport {
    pub fn level(self) -> u8 {
        match self {
            SensorReport::Silent => 0,
            SensorReport::NeighborFault => 1,
            SensorReport::LocalFault => 2,
        }
    }
}

impl Serialize for SensorReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.level())
    }
}

impl<'de> Deserialize<'de> for SensorReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(SensorReport::Silent),
            1 => Ok(SensorReport::NeighborFault),
            2 => Ok(SensorReport::LocalFault),
            other => Err(serde::de::Error::custom(format!(
                "sensor reports are 0, 1 or 2, got {other}"
            ))),
        }
    }
}

/// One report per codeword, aligned with the sorted codeword list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportVector {
    pub codewords: Vec<usize>,
    pub reports: Vec<SensorReport>,
}

impl ReportVector {
    fn check_against(&self, code: &Code) -> Result<()> {
        if self.codewords != code.members() {
            return Err(Error::ReportMismatch(format!(
                "report vector is for codewords {:?}",
                self.codewords
            )));
        }
        if self.reports.len() != self.codewords.len() {
            return Err(Error::ReportMismatch(format!(
                "{} reports for {} codewords",
                self.reports.len(),
                self.codewords.len()
            )));
        }
        Ok(())
    }
}

/// Simulates the 0/1/2 reports of the sensors in `code` for a set of
/// simultaneous faults.
pub fn sensor_reports(g: &Graph, code: &Code, faults: &[usize]) -> Result<ReportVector> {
    let _ = code.mask(g)?;
    let mut fault_mask = 0u64;
    for &f in faults {
        g.check_vertex(f)?;
        fault_mask |= 1 << f;
    }
    let reports = code
        .members()
        .iter()
        .map(|&c| {
            if fault_mask >> c & 1 == 1 {
                SensorReport::LocalFault
            } else if g.open(c) & fault_mask != 0 {
                SensorReport::NeighborFault
            } else {
                SensorReport::Silent
            }
        })
        .collect();
    Ok(ReportVector {
        codewords: code.members().to_vec(),
        reports,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocationOutcome {
    /// A single fault at this vertex explains the reports exactly.
    Located(usize),
    /// The reports cannot come from one fault; any codeword faults
    /// confirmed by their own sensors are listed.
    MultipleOrInconsistent { confirmed_faults: Vec<usize> },
    /// All sensors silent.
    Nothing,
}

/// Decodes a report vector.
///
/// A sensor reporting 2 pinpoints its own location, so codeword faults
/// are resolved first: a single 2-report whose single-fault simulation
/// reproduces the whole vector is located, several 2-reports are
/// returned as confirmed faults. Otherwise the 1-reports are
/// intersected: a fault at a non-codeword u makes exactly the sensors
/// in I(u) report 1, so u must lie in every reporting sensor's closed
/// neighborhood and outside the code. The candidate is accepted only
/// if re-simulating it reproduces the reports, which keeps the decoder
/// from ever naming a wrong vertex under a self-locating-dominating
/// code.
pub fn locate(g: &Graph, code: &Code, reports: &ReportVector) -> Result<LocationOutcome> {
    let code_mask = code.mask(g)?;
    reports.check_against(code)?;
    let level = |c: usize| {
        let idx = reports.codewords.binary_search(&c).expect("validated above");
        reports.reports[idx]
    };
    let twos: Vec<usize> = reports
        .codewords
        .iter()
        .copied()
        .filter(|&c| level(c) == SensorReport::LocalFault)
        .collect();
    match twos.as_slice() {
        [] => {}
        &[v] => {
            return Ok(if sensor_reports(g, code, &[v])? == *reports {
                LocationOutcome::Located(v)
            } else {
                LocationOutcome::MultipleOrInconsistent {
                    confirmed_faults: vec![v],
                }
            });
        }
        _ => {
            return Ok(LocationOutcome::MultipleOrInconsistent {
                confirmed_faults: twos,
            });
        }
    }
    let ones: Vec<usize> = reports
        .codewords
        .iter()
        .copied()
        .filter(|&c| level(c) == SensorReport::NeighborFault)
        .collect();
    if ones.is_empty() {
        return Ok(LocationOutcome::Nothing);
    }
    let candidates =
        ones.iter().fold(g.all_mask(), |acc, &c| acc & g.closed(c)) & !code_mask;
    if candidates.count_ones() == 1 {
        let u = candidates.trailing_zeros() as usize;
        if sensor_reports(g, code, &[u])? == *reports {
            return Ok(LocationOutcome::Located(u));
        }
    }
    Ok(LocationOutcome::MultipleOrInconsistent {
        confirmed_faults: Vec::new(),
    })
}

/// A scenario file: a graph, a code and a fault set, all JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Scenario {
    pub graph6: String,
    pub code: Vec<usize>,
    pub faults: Vec<usize>,
}

/// The batch verdict for a scenario.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioOutcome {
    pub graph6: String,
    pub code: Vec<usize>,
    pub faults: Vec<usize>,
    pub reports: ReportVector,
    pub outcome: LocationOutcome,
}

pub fn run_scenario(scenario: &Scenario) -> Result<ScenarioOutcome> {
    let g = parse_graph6(&scenario.graph6)?;
    let code = Code::new(scenario.code.iter().copied());
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let reports = sensor_reports(&g, &code, &scenario.faults)?;
    let outcome = locate(&g, &code, &reports)?;
    Ok(ScenarioOutcome {
        graph6: scenario.graph6.clone(),
        code: code.members().to_vec(),
        faults: scenario.faults.clone(),
        reports,
        outcome,
    })
}
