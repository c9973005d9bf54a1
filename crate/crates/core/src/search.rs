//! Checkpointed searches over the census for graphs with a given ac profile.
//!
//! The checkpoint is line-delimited JSON: a header describing the task,
//! then one record per processed class. It is only ever appended to, so an
//! interrupted run resumes by skipping the codes already recorded.

use std::collections::HashSet;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arc::{ac_profile_fast, AcNumber};
use crate::canon::CanonicalCode;
use crate::enumerate::{Census, MAX_ENUM_EDGES};
use crate::error::{Error, Result};

pub const CHECKPOINT_FORMAT: &str = "arcconn-search/1";

/// Which ac profiles a search reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileExpr {
    /// `=k`: ac-number exactly k.
    Exactly(u8),
    /// `=k,!k+1`: k-ac and not (k+1)-ac.
    ExactlyNotNext(u8),
    /// `omega`.
    Omega,
}

impl ProfileExpr {
    pub fn matches(self, ac: AcNumber) -> bool {
        match self {
            ProfileExpr::Exactly(k) | ProfileExpr::ExactlyNotNext(k) => ac == AcNumber::Finite(k),
            ProfileExpr::Omega => ac == AcNumber::Omega,
        }
    }
}

impl FromStr for ProfileExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Profile(s.to_string());
        let t = s.trim();
        if t == "omega" {
            return Ok(ProfileExpr::Omega);
        }
        let rest = t.strip_prefix('=').ok_or_else(bad)?;
        let (k, not_next) = match rest.split_once(',') {
            None => (rest, None),
            Some((k, n)) => (k, Some(n.strip_prefix('!').ok_or_else(bad)?)),
        };
        let k: u8 = k.trim().parse().map_err(|_| bad())?;
        if !(2..=6).contains(&k) {
            return Err(bad());
        }
        match not_next {
            None => Ok(ProfileExpr::Exactly(k)),
            Some(n) if n.trim().parse::<u8>().ok() == Some(k + 1) => Ok(ProfileExpr::ExactlyNotNext(k)),
            Some(_) => Err(bad()),
        }
    }
}

impl fmt::Display for ProfileExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileExpr::Exactly(k) => write!(f, "={k}"),
            ProfileExpr::ExactlyNotNext(k) => write!(f, "={k},!{}", k + 1),
            ProfileExpr::Omega => f.write_str("omega"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub edges_min: usize,
    pub edges_max: usize,
    pub planar_only: bool,
    pub profile: ProfileExpr,
    pub checkpoint: Option<PathBuf>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    format: String,
    edges_min: usize,
    edges_max: usize,
    planar: bool,
    profile: String,
}

impl Header {
    fn of(task: &SearchTask) -> Self {
        Header {
            format: CHECKPOINT_FORMAT.into(),
            edges_min: task.edges_min,
            edges_max: task.edges_max,
            planar: task.planar_only,
            profile: task.profile.to_string(),
        }
    }
}

/// One processed class. Serialized field order is the checkpoint format.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchRecord {
    pub canon: CanonicalCode,
    pub edges: usize,
    pub planar: bool,
    pub ac: AcNumber,
    pub omega: bool,
}

impl SearchRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Records matching the profile, ordered by (edges, canon).
    pub matches: Vec<SearchRecord>,
    /// Classes in range after the planar filter.
    pub candidates: usize,
    /// Classes evaluated by this run.
    pub evaluated: usize,
    /// Classes skipped because the checkpoint already had them.
    pub resumed: usize,
}

fn checkpoint_err(path: &Path, msg: impl Into<String>) -> Error {
    Error::Checkpoint { path: path.display().to_string(), msg: msg.into() }
}

/// Reads an existing checkpoint. A malformed final line (a torn write) is
/// dropped and the file truncated to the last complete record.
fn load_checkpoint(path: &Path, header: &Header) -> Result<Vec<SearchRecord>> {
    let file = File::open(path)?;
    let mut lines = Vec::new();
    let mut reader = BufReader::new(&file);
    let mut buf = String::new();
    let mut offset = 0u64;
    loop {
        buf.clear();
        let read = reader.read_line(&mut buf)?;
        if read == 0 {
            break;
        }
        lines.push((offset, buf.clone()));
        offset += read as u64;
    }
    let Some((_, first)) = lines.first() else {
        return Err(checkpoint_err(path, "empty file"));
    };
    let found: Header =
        serde_json::from_str(first.trim_end()).map_err(|e| checkpoint_err(path, format!("header: {e}")))?;
    if &found != header {
        return Err(checkpoint_err(path, "written by a different task"));
    }
    let mut records = Vec::new();
    let last = lines.len() - 1;
    for (i, (start, line)) in lines.iter().enumerate().skip(1) {
        let parsed = line
            .ends_with('\n')
            .then(|| serde_json::from_str::<SearchRecord>(line.trim_end()).ok())
            .flatten();
        match parsed {
            Some(r) => records.push(r),
            None if i == last => {
                OpenOptions::new().write(true).open(path)?.set_len(*start)?;
            }
            None => return Err(checkpoint_err(path, format!("malformed record on line {}", i + 1))),
        }
    }
    if lines.len() == 1 && !first.ends_with('\n') {
        OpenOptions::new().append(true).open(path)?.write_all(b"\n")?;
    }
    Ok(records)
}

fn open_checkpoint(path: &Path, header: &Header) -> Result<(File, Vec<SearchRecord>)> {
    let existing = path.exists() && std::fs::metadata(path)?.len() > 0;
    let records = if existing { load_checkpoint(path, header)? } else { Vec::new() };
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    if !existing {
        let line = serde_json::to_string(header).expect("header serializes");
        writeln!(file, "{line}")?;
    }
    Ok((file, records))
}

pub fn run_search(task: &SearchTask) -> Result<SearchOutcome> {
    if task.edges_min == 0 || task.edges_min > task.edges_max {
        return Err(Error::EdgeBound { got: task.edges_min, limit: task.edges_max });
    }
    if task.edges_max > MAX_ENUM_EDGES {
        return Err(Error::EdgeBound { got: task.edges_max, limit: MAX_ENUM_EDGES });
    }
    match task.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Io(std::io::Error::other(e)))?
            .install(|| search_in_pool(task)),
        None => search_in_pool(task),
    }
}

fn search_in_pool(task: &SearchTask) -> Result<SearchOutcome> {
    let header = Header::of(task);
    let (sink, mut records) = match &task.checkpoint {
        Some(p) => {
            let (f, rs) = open_checkpoint(p, &header)?;
            (Some(Mutex::new(f)), rs)
        }
        None => (None, Vec::new()),
    };
    let done: HashSet<CanonicalCode> = records.iter().map(|r| r.canon.clone()).collect();
    let census = Census::new(task.edges_max)?;
    let mut todo = Vec::new();
    let mut candidates = 0;
    for k in task.edges_min..=task.edges_max {
        let planar = census.planar(k)?;
        for (r, &pl) in census.level(k).iter().zip(planar) {
            if task.planar_only && !pl {
                continue;
            }
            candidates += 1;
            if !done.contains(&r.code) {
                todo.push((k, r, pl));
            }
        }
    }
    let resumed = candidates - todo.len();
    let fresh: Vec<SearchRecord> = todo
        .par_iter()
        .map(|&(k, r, planar)| {
            let p = ac_profile_fast(&r.graph, 7)?;
            let rec = SearchRecord { canon: r.code.clone(), edges: k, planar, ac: p.ac, omega: p.is_omega() };
            if let Some(sink) = &sink {
                let mut f = sink.lock().expect("checkpoint lock");
                writeln!(f, "{}", rec.to_line())?;
                f.flush()?;
            }
            Ok(rec)
        })
        .collect::<Result<_>>()?;
    let evaluated = fresh.len();
    records.extend(fresh);
    let mut matches: Vec<SearchRecord> =
        records.into_iter().filter(|r| task.profile.matches(r.ac)).collect();
    matches.sort_by(|a, b| (a.edges, &a.canon).cmp(&(b.edges, &b.canon)));
    matches.dedup();
    Ok(SearchOutcome { matches, candidates, evaluated, resumed })
}
