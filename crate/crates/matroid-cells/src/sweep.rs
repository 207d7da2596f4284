//! Database sweep: stream a chirotope file, run the full pipeline on every
//! line, and aggregate complete-cell statistics.
//!
//! Lines are independent work items. They are processed in batches: each
//! batch is mapped over a worker pool, then merged strictly in line order,
//! so the aggregate is a pure function of the file bytes and the parameters
//! no matter how many workers run. Long runs write a checkpoint after every
//! batch and can be resumed; the resumed result is bit-identical to an
//! uninterrupted run.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chirotope::{chirotope_file_payload, Chirotope};
use crate::circuits::CircuitSet;
use crate::combinatorics::{cyclic_complete_cells, BoundParams};
use crate::error::{Error, Result};
use crate::subset::SubsetOrder;
use crate::topes::TopeSet;

/// Per-chirotope result of the pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    /// 1-based physical line number in the input (0 outside a sweep).
    pub line_index: u64,
    /// Complete cells counted as signed topes; halve for projective cells.
    pub complete_cell_topes: u64,
    pub tope_count: u64,
    /// Count equals the cyclic-arrangement value 2·C_{r−1}(n).
    pub attains_bound: bool,
    /// Count exceeds it — a counterexample to the conjectured maximum.
    pub exceeds_bound: bool,
}

/// A line that failed to parse or process; excluded from the totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineError {
    pub line: u64,
    pub message: String,
}

/// Aggregate of a whole sweep. Serialize with [`SweepSummary::to_json`] for
/// a stable byte representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub elements: u8,
    pub rank: u8,
    pub order: SubsetOrder,
    /// Lines successfully processed.
    pub total_classes: u64,
    /// complete-cell signed-tope count → number of classes.
    pub histogram: BTreeMap<u64, u64>,
    pub max_count: Option<u64>,
    pub max_count_projective: Option<u64>,
    /// Line numbers attaining `max_count`, ascending.
    pub argmax_lines: Vec<u64>,
    /// 2·C_{r−1}(n), the conjectured maximum as signed topes.
    pub bound: u64,
    pub bound_projective: u64,
    /// Lines whose count exceeds `bound`, ascending.
    pub violations: Vec<u64>,
    pub errors: Vec<LineError>,
}

impl SweepSummary {
    /// Canonical JSON rendering (pretty, trailing newline). Two sweeps agree
    /// iff these bytes agree.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}

/// Run the pipeline on one chirotope: circuits, topes, complete cells.
pub fn process_one(chi: &Chirotope) -> Result<ClassReport> {
    let (n, r) = (chi.n(), chi.r());
    if r < 2 || n < r + 1 {
        return Err(Error::Parameter(format!(
            "pipeline needs n >= r+1 and r >= 2, got n={n}, r={r}"
        )));
    }
    let bound = signed_bound(n, r)?;
    let circuits = CircuitSet::from_chirotope(chi);
    let topes = TopeSet::enumerate(&circuits);
    let complete = topes.complete_cell_count();
    Ok(ClassReport {
        line_index: 0,
        complete_cell_topes: complete,
        tope_count: topes.len() as u64,
        attains_bound: complete == bound,
        exceeds_bound: complete > bound,
    })
}

/// The conjectured maximum in signed topes, 2·C_{r−1}(n).
pub fn signed_bound(n: u8, r: u8) -> Result<u64> {
    let cells = cyclic_complete_cells(BoundParams::new(r as u32 - 1, n as u32)?)?;
    cells.checked_mul(2).ok_or(Error::Overflow)
}

/// Sweep configuration. `jobs = 0` uses all available cores; `jobs = 1`
/// runs strictly sequentially.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub elements: u8,
    pub rank: u8,
    pub order: SubsetOrder,
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    /// Data lines per batch between checkpoint flushes.
    pub checkpoint_interval: u64,
    pub per_class_tsv: Option<PathBuf>,
    /// Stop (with a checkpoint) after this many data lines; for smoke runs
    /// over huge inputs and for interruption tests.
    pub max_lines: Option<u64>,
}

impl SweepConfig {
    pub fn new(elements: u8, rank: u8) -> Self {
        Self {
            elements,
            rank,
            order: SubsetOrder::Lex,
            jobs: 0,
            checkpoint: None,
            checkpoint_interval: 10_000,
            per_class_tsv: None,
            max_lines: None,
        }
    }
}

/// Result of [`sweep_file`] / [`resume`]: `finished` is false when the run
/// stopped at `max_lines` before exhausting the input.
#[derive(Clone, Debug)]
pub struct SweepRun {
    pub summary: SweepSummary,
    pub finished: bool,
}

/// Persistent state of an interrupted sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Checkpoint {
    version: u32,
    input_path: String,
    input_digest: String,
    elements: u8,
    rank: u8,
    order: SubsetOrder,
    checkpoint_interval: u64,
    /// Physical input lines fully consumed.
    lines_consumed: u64,
    tsv_path: Option<String>,
    tsv_bytes: u64,
    completed: bool,
    state: Aggregate,
}

impl Checkpoint {
    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let cp: Checkpoint = serde_json::from_slice(bytes)?;
        if cp.version != 1 {
            return Err(Error::Checkpoint(format!(
                "unsupported checkpoint version {}",
                cp.version
            )));
        }
        Ok(cp)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("checkpoint serializes");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read(path)?)
    }

    pub fn input_path(&self) -> &str {
        &self.input_path
    }

    pub fn is_completed(&self) -> bool {
        self.completed
    }

    pub fn lines_consumed(&self) -> u64 {
        self.lines_consumed
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct Aggregate {
    total_classes: u64,
    histogram: BTreeMap<u64, u64>,
    max_count: Option<u64>,
    argmax_lines: Vec<u64>,
    violations: Vec<u64>,
    errors: Vec<LineError>,
}

impl Aggregate {
    fn absorb(&mut self, line: u64, outcome: std::result::Result<ClassReport, String>, bound: u64) {
        match outcome {
            Ok(report) => {
                self.total_classes += 1;
                *self.histogram.entry(report.complete_cell_topes).or_insert(0) += 1;
                match self.max_count {
                    Some(max) if report.complete_cell_topes < max => {}
                    Some(max) if report.complete_cell_topes == max => {
                        self.argmax_lines.push(line);
                    }
                    _ => {
                        self.max_count = Some(report.complete_cell_topes);
                        self.argmax_lines = vec![line];
                    }
                }
                if report.complete_cell_topes > bound {
                    self.violations.push(line);
                }
            }
            Err(message) => self.errors.push(LineError { line, message }),
        }
    }

    fn into_summary(self, elements: u8, rank: u8, order: SubsetOrder, bound: u64) -> SweepSummary {
        SweepSummary {
            elements,
            rank,
            order,
            total_classes: self.total_classes,
            histogram: self.histogram,
            max_count: self.max_count,
            max_count_projective: self.max_count.map(|m| m / 2),
            argmax_lines: self.argmax_lines,
            bound,
            bound_projective: bound / 2,
            violations: self.violations,
            errors: self.errors,
        }
    }
}

/// SHA-256 of a file, streamed.
pub fn digest_file(path: &Path) -> Result<String> {
    let mut file = File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let read = file.read(&mut buf)?;
        if read == 0 {
            break;
        }
        hasher.update(&buf[..read]);
    }
    let digest = hasher.finalize();
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

/// One batch item: physical line number plus its payload, or the reason the
/// raw line was unusable.
type WorkItem = (u64, std::result::Result<String, String>);

fn process_line(
    payload: &std::result::Result<String, String>,
    elements: u8,
    rank: u8,
    order: SubsetOrder,
) -> std::result::Result<ClassReport, String> {
    let payload = payload.as_ref().map_err(Clone::clone)?;
    Chirotope::parse(payload, elements, rank, order)
        .and_then(|chi| process_one(&chi))
        .map_err(|e| e.to_string())
}

fn run_batch(
    items: &[WorkItem],
    elements: u8,
    rank: u8,
    order: SubsetOrder,
    pool: Option<&rayon::ThreadPool>,
) -> Vec<(u64, std::result::Result<ClassReport, String>)> {
    let work = |items: &[WorkItem]| {
        use rayon::prelude::*;
        items
            .par_iter()
            .map(|(line, payload)| (*line, process_line(payload, elements, rank, order)))
            .collect()
    };
    match pool {
        Some(pool) => pool.install(|| work(items)),
        None => items
            .iter()
            .map(|(line, payload)| (*line, process_line(payload, elements, rank, order)))
            .collect(),
    }
}

fn tsv_header() -> &'static str {
    "line\tcomplete_cell_topes\tcomplete_cells_projective\ttope_count\tattains_bound\texceeds_bound\n"
}

fn tsv_row(line: u64, outcome: &std::result::Result<ClassReport, String>) -> String {
    match outcome {
        Ok(r) => format!(
            "{line}\t{}\t{}\t{}\t{}\t{}\n",
            r.complete_cell_topes,
            r.complete_cell_topes / 2,
            r.tope_count,
            r.attains_bound,
            r.exceeds_bound
        ),
        Err(message) => format!("{line}\terror\t{}\n", message.replace(['\t', '\n'], " ")),
    }
}

fn write_checkpoint(path: &Path, cp: &Checkpoint) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, cp.to_json())?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

struct SweepJob {
    cfg: SweepConfig,
    bound: u64,
    digest: String,
    input: PathBuf,
    aggregate: Aggregate,
    lines_consumed: u64,
    tsv: Option<File>,
    tsv_bytes: u64,
}

impl SweepJob {
    fn fresh(input: &Path, cfg: &SweepConfig, digest: String) -> Result<Self> {
        let tsv = match &cfg.per_class_tsv {
            Some(path) => {
                let mut file = File::create(path)?;
                file.write_all(tsv_header().as_bytes())?;
                Some(file)
            }
            None => None,
        };
        Ok(Self {
            cfg: cfg.clone(),
            bound: signed_bound(cfg.elements, cfg.rank)?,
            digest,
            input: input.to_path_buf(),
            aggregate: Aggregate::default(),
            lines_consumed: 0,
            tsv_bytes: if tsv.is_some() {
                tsv_header().len() as u64
            } else {
                0
            },
            tsv,
        })
    }

    fn from_checkpoint(input: &Path, cfg: &SweepConfig, cp: Checkpoint) -> Result<Self> {
        let tsv_cfg = cfg
            .per_class_tsv
            .as_ref()
            .map(|p| p.to_string_lossy().into_owned());
        if tsv_cfg != cp.tsv_path {
            return Err(Error::Checkpoint(format!(
                "per-class TSV path changed: checkpoint has {:?}, requested {:?}",
                cp.tsv_path, tsv_cfg
            )));
        }
        let tsv = match &cp.tsv_path {
            Some(path) => {
                let mut file = OpenOptions::new().write(true).open(path).map_err(|e| {
                    Error::Checkpoint(format!("cannot reopen per-class TSV {path}: {e}"))
                })?;
                if file.metadata()?.len() < cp.tsv_bytes {
                    return Err(Error::Checkpoint(format!(
                        "per-class TSV {path} is shorter than the checkpoint recorded"
                    )));
                }
                // rows past the last checkpoint were re-processed anyway
                file.set_len(cp.tsv_bytes)?;
                file.seek(SeekFrom::End(0))?;
                Some(file)
            }
            None => None,
        };
        Ok(Self {
            cfg: cfg.clone(),
            bound: signed_bound(cfg.elements, cfg.rank)?,
            digest: cp.input_digest,
            input: input.to_path_buf(),
            aggregate: cp.state,
            lines_consumed: cp.lines_consumed,
            tsv_bytes: cp.tsv_bytes,
            tsv,
        })
    }

    fn checkpoint(&self, completed: bool) -> Checkpoint {
        Checkpoint {
            version: 1,
            input_path: self.input.to_string_lossy().into_owned(),
            input_digest: self.digest.clone(),
            elements: self.cfg.elements,
            rank: self.cfg.rank,
            order: self.cfg.order,
            checkpoint_interval: self.cfg.checkpoint_interval,
            lines_consumed: self.lines_consumed,
            tsv_path: self
                .cfg
                .per_class_tsv
                .as_ref()
                .map(|p| p.to_string_lossy().into_owned()),
            tsv_bytes: self.tsv_bytes,
            completed,
            state: self.aggregate.clone(),
        }
    }

    fn flush(&mut self, completed: bool) -> Result<()> {
        if let Some(tsv) = &mut self.tsv {
            tsv.flush()?;
        }
        if let Some(path) = &self.cfg.checkpoint {
            write_checkpoint(path, &self.checkpoint(completed))?;
        }
        Ok(())
    }

    fn run(&mut self, reader: impl BufRead) -> Result<bool> {
        let pool = if self.cfg.jobs == 1 {
            None
        } else {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if self.cfg.jobs > 0 {
                builder = builder.num_threads(self.cfg.jobs);
            }
            Some(builder.build().map_err(|e| {
                Error::Parameter(format!("cannot build worker pool: {e}"))
            })?)
        };

        let batch_size = self.cfg.checkpoint_interval.max(1);
        let mut processed_now = 0u64;
        let mut batch: Vec<WorkItem> = Vec::new();
        let mut physical = self.lines_consumed;
        let mut raw = Vec::new();
        let mut reader = reader;
        let finished = loop {
            if let Some(cap) = self.cfg.max_lines {
                if processed_now >= cap {
                    break false;
                }
            }
            raw.clear();
            if reader.read_until(b'\n', &mut raw)? == 0 {
                break true;
            }
            physical += 1;
            if raw.last() == Some(&b'\n') {
                raw.pop();
                if raw.last() == Some(&b'\r') {
                    raw.pop();
                }
            }
            // a line that is not text is a bad line, not a fatal error:
            // multi-day sweeps must survive stray bytes
            match std::str::from_utf8(&raw) {
                Ok(text) => {
                    if let Some(payload) = chirotope_file_payload(text) {
                        batch.push((physical, Ok(payload.to_string())));
                        processed_now += 1;
                    }
                }
                Err(_) => {
                    batch.push((physical, Err("line is not valid UTF-8".into())));
                    processed_now += 1;
                }
            }
            let cap_reached = self
                .cfg
                .max_lines
                .is_some_and(|cap| processed_now >= cap);
            if batch.len() as u64 >= batch_size || cap_reached {
                self.finish_batch(&mut batch, physical, pool.as_ref())?;
            }
        };
        if !batch.is_empty() {
            self.finish_batch(&mut batch, physical, pool.as_ref())?;
        } else if finished {
            // consume trailing comment/blank lines
            self.lines_consumed = physical;
        }
        self.flush(finished)?;
        Ok(finished)
    }

    fn finish_batch(
        &mut self,
        batch: &mut Vec<WorkItem>,
        physical: u64,
        pool: Option<&rayon::ThreadPool>,
    ) -> Result<()> {
        let results = run_batch(batch, self.cfg.elements, self.cfg.rank, self.cfg.order, pool);
        for (line, outcome) in results {
            if let Some(tsv) = &mut self.tsv {
                let row = tsv_row(line, &outcome);
                tsv.write_all(row.as_bytes())?;
                self.tsv_bytes += row.len() as u64;
            }
            self.aggregate.absorb(line, outcome, self.bound);
        }
        batch.clear();
        self.lines_consumed = physical;
        self.flush(false)?;
        Ok(())
    }

    fn into_run(self, finished: bool) -> SweepRun {
        SweepRun {
            summary: self.aggregate.into_summary(
                self.cfg.elements,
                self.cfg.rank,
                self.cfg.order,
                self.bound,
            ),
            finished,
        }
    }
}

fn validate_params(elements: u8, rank: u8) -> Result<()> {
    if rank < 2 || elements < rank + 1 {
        return Err(Error::Parameter(format!(
            "sweep needs n >= r+1 and r >= 2, got n={elements}, r={rank}"
        )));
    }
    if elements > 24 {
        return Err(Error::Parameter(format!(
            "tope enumeration scans 2^(n-1) candidates; n={elements} is past the practical limit of 24"
        )));
    }
    Ok(())
}

fn open_skipping(path: &Path, skip_lines: u64) -> Result<BufReader<File>> {
    let mut reader = BufReader::new(File::open(path)?);
    let mut skipped = 0u64;
    let mut buf = Vec::new();
    while skipped < skip_lines {
        buf.clear();
        let read = reader.read_until(b'\n', &mut buf)?;
        if read == 0 {
            return Err(Error::Checkpoint(format!(
                "checkpoint claims {skip_lines} lines consumed but the input has {skipped}"
            )));
        }
        skipped += 1;
    }
    Ok(reader)
}

/// Sweep a chirotope file. If `cfg.checkpoint` names an existing checkpoint
/// the sweep resumes from it, after verifying that the input digest and the
/// parameters match.
pub fn sweep_file(input: &Path, cfg: &SweepConfig) -> Result<SweepRun> {
    validate_params(cfg.elements, cfg.rank)?;
    let digest = digest_file(input)?;
    let existing = match &cfg.checkpoint {
        Some(path) if path.exists() => Some(Checkpoint::load(path)?),
        _ => None,
    };
    match existing {
        Some(cp) => {
            verify_checkpoint(&cp, &digest, cfg)?;
            continue_from(input, cfg, cp)
        }
        None => {
            let mut job = SweepJob::fresh(input, cfg, digest)?;
            let reader = BufReader::new(File::open(input)?);
            let finished = job.run(reader)?;
            Ok(job.into_run(finished))
        }
    }
}

fn verify_checkpoint(cp: &Checkpoint, digest: &str, cfg: &SweepConfig) -> Result<()> {
    if cp.input_digest != digest {
        return Err(Error::Checkpoint(format!(
            "input digest mismatch: checkpoint was written for {}…, input hashes to {}…",
            &cp.input_digest[..12.min(cp.input_digest.len())],
            &digest[..12]
        )));
    }
    if (cp.elements, cp.rank, cp.order) != (cfg.elements, cfg.rank, cfg.order) {
        return Err(Error::Checkpoint(format!(
            "parameter mismatch: checkpoint has n={}, r={}, order={}, requested n={}, r={}, order={}",
            cp.elements, cp.rank, cp.order, cfg.elements, cfg.rank, cfg.order
        )));
    }
    Ok(())
}

fn continue_from(input: &Path, cfg: &SweepConfig, cp: Checkpoint) -> Result<SweepRun> {
    if cp.completed {
        let bound = signed_bound(cp.elements, cp.rank)?;
        return Ok(SweepRun {
            summary: cp
                .state
                .into_summary(cp.elements, cp.rank, cp.order, bound),
            finished: true,
        });
    }
    let skip = cp.lines_consumed;
    let mut job = SweepJob::from_checkpoint(input, cfg, cp)?;
    let reader = open_skipping(input, skip)?;
    let finished = job.run(reader)?;
    Ok(job.into_run(finished))
}

/// Resume an interrupted sweep from its checkpoint alone. The input path and
/// all parameters are taken from the checkpoint; only the worker count is
/// chosen anew.
pub fn resume(checkpoint_path: &Path, jobs: usize) -> Result<SweepRun> {
    let cp = Checkpoint::load(checkpoint_path)?;
    let input = PathBuf::from(&cp.input_path);
    let digest = digest_file(&input)?;
    let cfg = SweepConfig {
        elements: cp.elements,
        rank: cp.rank,
        order: cp.order,
        jobs,
        checkpoint: Some(checkpoint_path.to_path_buf()),
        checkpoint_interval: cp.checkpoint_interval,
        per_class_tsv: cp.tsv_path.as_ref().map(PathBuf::from),
        max_lines: None,
    };
    verify_checkpoint(&cp, &digest, &cfg)?;
    continue_from(&input, &cfg, cp)
}

/// One-shot sweep over any reader: no checkpointing, no TSV. Used for
/// in-memory inputs and by the fuzz harness.
pub fn sweep_reader(
    reader: impl BufRead,
    elements: u8,
    rank: u8,
    order: SubsetOrder,
    jobs: usize,
) -> Result<SweepSummary> {
    validate_params(elements, rank)?;
    let mut cfg = SweepConfig::new(elements, rank);
    cfg.order = order;
    cfg.jobs = jobs;
    let mut job = SweepJob {
        cfg,
        bound: signed_bound(elements, rank)?,
        digest: String::new(),
        input: PathBuf::new(),
        aggregate: Aggregate::default(),
        lines_consumed: 0,
        tsv: None,
        tsv_bytes: 0,
    };
    let finished = job.run(reader)?;
    debug_assert!(finished);
    Ok(job.into_run(finished).summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign_vector::ElementSet;
    use std::io::Cursor;

    fn alternating_line(n: u8, r: u8) -> String {
        Chirotope::alternating(n, r).unwrap().serialize()
    }

    #[test]
    fn process_one_alternating() {
        let report = process_one(&Chirotope::alternating(8, 5).unwrap()).unwrap();
        assert_eq!(report.complete_cell_topes, 62);
        assert_eq!(report.tope_count, 198);
        assert!(report.attains_bound);
        assert!(!report.exceeds_bound);

        let report = process_one(&Chirotope::alternating(9, 5).unwrap()).unwrap();
        assert_eq!(report.complete_cell_topes, 74);
        assert!(report.attains_bound);
    }

    #[test]
    fn process_one_reorientation_invariant() {
        let chi = Chirotope::alternating(8, 5).unwrap();
        let base = process_one(&chi).unwrap();
        let re = chi
            .reorient([3u8, 5].into_iter().collect::<ElementSet>())
            .unwrap();
        let report = process_one(&re).unwrap();
        assert_eq!(report.complete_cell_topes, base.complete_cell_topes);
        assert_eq!(report.tope_count, base.tope_count);
    }

    #[test]
    fn process_one_rejects_bad_params() {
        assert!(process_one(&Chirotope::alternating(4, 4).unwrap()).is_err());
        assert!(process_one(&Chirotope::alternating(3, 1).unwrap()).is_err());
    }

    #[test]
    fn sweep_single_alternating_line() {
        let input = format!("# alternating class\n\n{}\n", alternating_line(8, 5));
        let summary =
            sweep_reader(Cursor::new(input), 8, 5, SubsetOrder::Lex, 1).unwrap();
        assert_eq!(summary.total_classes, 1);
        assert_eq!(summary.histogram, BTreeMap::from([(62, 1)]));
        assert_eq!(summary.max_count, Some(62));
        assert_eq!(summary.max_count_projective, Some(31));
        assert_eq!(summary.argmax_lines, vec![3]);
        assert_eq!(summary.bound, 62);
        assert!(summary.violations.is_empty());
        assert!(summary.errors.is_empty());
    }

    #[test]
    fn sweep_empty_file() {
        let summary = sweep_reader(Cursor::new(""), 8, 5, SubsetOrder::Lex, 1).unwrap();
        assert_eq!(summary.total_classes, 0);
        assert!(summary.histogram.is_empty());
        assert_eq!(summary.max_count, None);
        assert!(summary.argmax_lines.is_empty());
    }

    #[test]
    fn sweep_records_bad_lines() {
        let input = format!(
            "{}\nnot-a-chirotope\n{}\n",
            alternating_line(6, 3),
            alternating_line(6, 3)
        );
        let summary = sweep_reader(Cursor::new(input), 6, 3, SubsetOrder::Lex, 1).unwrap();
        assert_eq!(summary.total_classes, 2);
        assert_eq!(summary.errors.len(), 1);
        assert_eq!(summary.errors[0].line, 2);
    }

    #[test]
    fn sweep_survives_non_utf8_lines() {
        let mut bytes = Vec::new();
        bytes.extend_from_slice(alternating_line(6, 3).as_bytes());
        bytes.push(b'\n');
        bytes.extend_from_slice(&[0xff, 0xfe, b'\n']);
        bytes.extend_from_slice(alternating_line(6, 3).as_bytes());
        let summary =
            sweep_reader(Cursor::new(bytes), 6, 3, SubsetOrder::Lex, 1).unwrap();
        assert_eq!(summary.total_classes, 2);
        assert_eq!(summary.errors.len(), 1);
        assert_eq!(summary.errors[0].line, 2);
    }

    #[test]
    fn sweep_rejects_bad_params() {
        assert!(sweep_reader(Cursor::new(""), 5, 5, SubsetOrder::Lex, 1).is_err());
        assert!(sweep_reader(Cursor::new(""), 30, 3, SubsetOrder::Lex, 1).is_err());
    }
}
