//! JSON file formats. Every document carries `"format": 1`; it may be
//! omitted on input.
//!
//! Quandle files: `{"format": 1, "n": 3, "rhd": [[0,2,1],[2,1,0],[1,0,2]], "labels": [...]}`
//! with zero-based entries `rhd[x][y] = x ▷ y`.
//!
//! Tuple files: `{"format": 1, "mode": "cover|braid|lefschetz", "base": "disk|sphere",
//! "d_or_strands": 2, "k": 1, "entries": [...]}` plus optional flags `simple`,
//! `connected`, `projective` and `achiral`. Entries are cycle notation strings
//! for covers, `{"conjugator": "s2", "generator": 1, "label": 1}` for braids,
//! and slope strings `"y/x"` or `{"slope": "y/x", "sign": "-"}` for Lefschetz
//! tuples.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::braid::{LCord, LCordSpec};
use crate::error::{Error, Result};
use crate::monodromy::{
    Base, BraidMonodromy, CoverMonodromy, LefschetzMonodromy, Mode, MonodromyTuple,
};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::torus::{SignedSlope, Slope};

pub const FORMAT: u32 = 1;

fn check_format(format: Option<u32>) -> Result<()> {
    match format {
        None | Some(FORMAT) => Ok(()),
        Some(f) => Err(Error::Parse(format!("unsupported format version {f}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuandleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub n: usize,
    pub rhd: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl QuandleFile {
    pub fn from_quandle(q: &FiniteQuandle) -> Self {
        QuandleFile {
            format: Some(FORMAT),
            n: q.len(),
            rhd: q.rhd_rows(),
            labels: q.labels().map(<[String]>::to_vec),
        }
    }

    /// Builds the quandle; `⊵` is derived and must exist.
    pub fn to_quandle(&self) -> Result<FiniteQuandle> {
        check_format(self.format)?;
        if self.rhd.len() != self.n {
            return Err(Error::MalformedTable(format!(
                "n = {} but the table has {} rows",
                self.n,
                self.rhd.len()
            )));
        }
        let q = FiniteQuandle::from_rhd(self.rhd.clone())?;
        match &self.labels {
            Some(l) => q.with_labels(l.clone()),
            None => Ok(q),
        }
    }
}

pub fn parse_quandle(text: &str) -> Result<FiniteQuandle> {
    let file: QuandleFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("quandle file: {e}")))?;
    file.to_quandle()
}

pub fn quandle_to_json(q: &FiniteQuandle) -> String {
    serde_json::to_string_pretty(&QuandleFile::from_quandle(q)).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Base>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_or_strands: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projective: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub achiral: Option<bool>,
    pub entries: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SlopeEntry {
    Plain(Slope),
    Signed { slope: Slope, #[serde(default)] sign: Option<String> },
}

fn entry_error(i: usize, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("entry {i}: {e}"))
}

fn require(value: Option<usize>, what: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Parse(format!("{what} tuples need \"d_or_strands\"")))
}

impl TupleFile {
    /// Builds the tuple; `mode` and `base` override the file when given.
    pub fn to_tuple(&self, mode: Option<Mode>, base: Option<Base>) -> Result<MonodromyTuple> {
        check_format(self.format)?;
        let mode = mode.unwrap_or(self.mode);
        let base = base.or(self.base).unwrap_or(Base::Disk);
        match mode {
            Mode::Cover => {
                let degree = require(self.d_or_strands, "cover")?;
                let entries = self
                    .entries
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let text = v.as_str().ok_or_else(|| entry_error(i, "expected cycle notation"))?;
                        Permutation::parse_cycles(text, degree).map_err(|e| entry_error(i, e))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(MonodromyTuple::Cover(CoverMonodromy {
                    degree,
                    simple: self.simple.unwrap_or(false),
                    base,
                    connected: self.connected.unwrap_or(false),
                    entries,
                }))
            }
            Mode::Braid => {
                let strands = require(self.d_or_strands, "braid")?;
                if base == Base::Sphere {
                    return Err(Error::InvalidParameter("braid monodromy lives over the disk".into()));
                }
                let entries = self
                    .entries
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let spec: LCordSpec =
                            serde_json::from_value(v.clone()).map_err(|e| entry_error(i, e))?;
                        LCord::from_spec(strands, &spec).map_err(|e| entry_error(i, e))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(MonodromyTuple::Braid(BraidMonodromy {
                    strands,
                    k: self.k.unwrap_or(1),
                    projective: self.projective.unwrap_or(false),
                    entries,
                }))
            }
            Mode::Lefschetz => {
                let entries = self
                    .entries
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let e: SlopeEntry = serde_json::from_value(v.clone()).map_err(|e| entry_error(i, e))?;
                        Ok(match e {
                            SlopeEntry::Plain(slope) => SignedSlope::positive(slope),
                            SlopeEntry::Signed { slope, sign } => {
                                let positive = match sign.as_deref() {
                                    None | Some("+") | Some("+1") => true,
                                    Some("-") | Some("-1") => false,
                                    Some(s) => return Err(entry_error(i, format!("bad sign {s:?}"))),
                                };
                                SignedSlope { slope, positive }
                            }
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(MonodromyTuple::Lefschetz(LefschetzMonodromy {
                    base,
                    achiral: self.achiral.unwrap_or(false),
                    entries,
                }))
            }
        }
    }

    pub fn from_tuple(t: &MonodromyTuple) -> Self {
        let mut file = TupleFile {
            format: Some(FORMAT),
            mode: t.mode(),
            base: Some(t.base()),
            d_or_strands: None,
            k: None,
            simple: None,
            connected: None,
            projective: None,
            achiral: None,
            entries: Vec::new(),
        };
        match t {
            MonodromyTuple::Cover(c) => {
                file.d_or_strands = Some(c.degree);
                file.simple = Some(c.simple);
                file.connected = c.connected.then_some(true);
                file.entries = c.entries.iter().map(|p| Value::String(p.to_string())).collect();
            }
            MonodromyTuple::Braid(b) => {
                file.d_or_strands = Some(b.strands);
                file.k = Some(b.k);
                file.projective = b.projective.then_some(true);
                file.entries = b
                    .entries
                    .iter()
                    .map(|e| serde_json::to_value(e.to_spec()).expect("serializable"))
                    .collect();
            }
            MonodromyTuple::Lefschetz(l) => {
                file.achiral = l.achiral.then_some(true);
                file.entries = l
                    .entries
                    .iter()
                    .map(|e| {
                        if e.positive {
                            Value::String(e.slope.to_string())
                        } else {
                            serde_json::json!({ "slope": e.slope.to_string(), "sign": "-" })
                        }
                    })
                    .collect();
            }
        }
        file
    }
}

pub fn parse_tuple(text: &str, mode: Option<Mode>, base: Option<Base>) -> Result<MonodromyTuple> {
    let file: TupleFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("tuple file: {e}")))?;
    file.to_tuple(mode, base)
}

pub fn tuple_to_json(t: &MonodromyTuple) -> String {
    serde_json::to_string_pretty(&TupleFile::from_tuple(t)).expect("serializable")
}
