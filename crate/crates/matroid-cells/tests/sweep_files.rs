//! File-level sweep behavior: checkpointing, resumption, and determinism.

mod common;

use std::fs;
use std::path::{Path, PathBuf};

use matroid_cells::sweep::Checkpoint;
use matroid_cells::{resume, sweep_file, Error, SweepConfig, SweepSummary};
use rand::Rng;
use tempfile::TempDir;

fn write_fixture(dir: &Path, n: u8, r: u8, lines: usize, seed: u64) -> PathBuf {
    let path = dir.join(format!("fixture-r{r}n{n}.chi"));
    fs::write(&path, common::mixed_fixture(n, r, lines, seed)).unwrap();
    path
}

fn plain_sweep(input: &Path, n: u8, r: u8, jobs: usize) -> SweepSummary {
    let mut cfg = SweepConfig::new(n, r);
    cfg.jobs = jobs;
    let run = sweep_file(input, &cfg).unwrap();
    assert!(run.finished);
    run.summary
}

#[test]
fn summary_accounts_for_every_line() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 200, 9000);
    let summary = plain_sweep(&input, 6, 3, 1);
    assert_eq!(summary.total_classes, 200);
    assert_eq!(summary.histogram.values().sum::<u64>(), 200);
    assert!(summary.errors.is_empty());
    assert_eq!(summary.max_count, Some(summary.bound));
    assert!(summary.argmax_lines.contains(&2)); // the alternating line
    assert!(summary.violations.is_empty());
}

#[test]
fn interrupt_and_resume_reproduces_uninterrupted_run() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 150, 9100);
    let reference = plain_sweep(&input, 6, 3, 2);

    let mut rng = common::rng(77);
    for trial in 0..4 {
        let checkpoint = dir.path().join(format!("cp-{trial}.json"));
        let tsv = dir.path().join(format!("per-class-{trial}.tsv"));
        let mut cfg = SweepConfig::new(6, 3);
        cfg.jobs = 2;
        cfg.checkpoint = Some(checkpoint.clone());
        cfg.checkpoint_interval = 16;
        cfg.per_class_tsv = Some(tsv.clone());

        // interrupt one or more times at random points, then finish
        let mut remaining: u64 = 150;
        loop {
            let cut = rng.random_range(1..=60u64);
            if cut >= remaining {
                break;
            }
            cfg.max_lines = Some(cut);
            let partial = sweep_file(&input, &cfg).unwrap();
            assert!(!partial.finished);
            remaining -= cut;
        }
        cfg.max_lines = None;
        let finished = sweep_file(&input, &cfg).unwrap();
        assert!(finished.finished);
        assert_eq!(finished.summary.to_json(), reference.to_json());

        // uninterrupted TSV for comparison
        let tsv_once = dir.path().join(format!("oneshot-{trial}.tsv"));
        let mut cfg_once = SweepConfig::new(6, 3);
        cfg_once.jobs = 1;
        cfg_once.per_class_tsv = Some(tsv_once.clone());
        sweep_file(&input, &cfg_once).unwrap();
        assert_eq!(fs::read(&tsv).unwrap(), fs::read(&tsv_once).unwrap());
    }
}

#[test]
fn resume_from_checkpoint_path_alone() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 80, 9200);
    let reference = plain_sweep(&input, 6, 3, 1);

    let checkpoint = dir.path().join("cp.json");
    let mut cfg = SweepConfig::new(6, 3);
    cfg.checkpoint = Some(checkpoint.clone());
    cfg.checkpoint_interval = 10;
    cfg.max_lines = Some(25);
    assert!(!sweep_file(&input, &cfg).unwrap().finished);

    let run = resume(&checkpoint, 4).unwrap();
    assert!(run.finished);
    assert_eq!(run.summary.to_json(), reference.to_json());
}

#[test]
fn resume_of_completed_checkpoint_processes_nothing() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 40, 9300);
    let checkpoint = dir.path().join("cp.json");
    let mut cfg = SweepConfig::new(6, 3);
    cfg.checkpoint = Some(checkpoint.clone());
    let first = sweep_file(&input, &cfg).unwrap();
    assert!(first.finished);
    assert!(Checkpoint::load(&checkpoint).unwrap().is_completed());

    // a completed checkpoint's summary comes back verbatim; no line
    // processing happens (only the digest is re-verified)
    let run = resume(&checkpoint, 1).unwrap();
    assert_eq!(run.summary.to_json(), first.summary.to_json());

    // re-sweeping with the same checkpoint short-circuits as well
    let again = sweep_file(&input, &cfg).unwrap();
    assert_eq!(again.summary.to_json(), first.summary.to_json());
}

#[test]
fn modified_input_is_refused() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 60, 9400);
    let checkpoint = dir.path().join("cp.json");
    let mut cfg = SweepConfig::new(6, 3);
    cfg.checkpoint = Some(checkpoint.clone());
    cfg.max_lines = Some(10);
    assert!(!sweep_file(&input, &cfg).unwrap().finished);

    let mut content = fs::read_to_string(&input).unwrap();
    content.push_str("# an innocent-looking edit\n");
    fs::write(&input, content).unwrap();

    cfg.max_lines = None;
    match sweep_file(&input, &cfg) {
        Err(Error::Checkpoint(message)) => assert!(message.contains("digest")),
        other => panic!("expected a digest error, got {other:?}"),
    }
    match resume(&checkpoint, 1) {
        Err(Error::Checkpoint(message)) => assert!(message.contains("digest")),
        other => panic!("expected a digest error, got {other:?}"),
    }
}

#[test]
fn parameter_mismatch_is_refused() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 30, 9500);
    let checkpoint = dir.path().join("cp.json");
    let mut cfg = SweepConfig::new(6, 3);
    cfg.checkpoint = Some(checkpoint.clone());
    cfg.max_lines = Some(5);
    assert!(!sweep_file(&input, &cfg).unwrap().finished);

    let mut wrong = cfg.clone();
    wrong.order = matroid_cells::SubsetOrder::Colex;
    wrong.max_lines = None;
    assert!(matches!(
        sweep_file(&input, &wrong),
        Err(Error::Checkpoint(_))
    ));
}

#[test]
fn per_class_tsv_rows_match_line_numbers() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("tiny.chi");
    let alternating = matroid_cells::Chirotope::alternating(6, 3).unwrap();
    fs::write(
        &input,
        format!(
            "# header\n{}\nbroken-line\n\n{}\n",
            alternating.serialize(),
            alternating.serialize()
        ),
    )
    .unwrap();
    let tsv = dir.path().join("rows.tsv");
    let mut cfg = SweepConfig::new(6, 3);
    cfg.per_class_tsv = Some(tsv.clone());
    let run = sweep_file(&input, &cfg).unwrap();
    assert_eq!(run.summary.total_classes, 2);
    assert_eq!(run.summary.errors.len(), 1);
    assert_eq!(run.summary.errors[0].line, 3);

    let rows = fs::read_to_string(&tsv).unwrap();
    let lines: Vec<&str> = rows.lines().collect();
    assert_eq!(lines.len(), 4); // header + two classes + one error row
    assert!(lines[0].starts_with("line\t"));
    assert!(lines[1].starts_with("2\t"));
    assert!(lines[2].starts_with("3\terror\t"));
    assert!(lines[3].starts_with("5\t"));
}

#[test]
fn checkpoint_json_roundtrip() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), 6, 3, 20, 9600);
    let checkpoint = dir.path().join("cp.json");
    let mut cfg = SweepConfig::new(6, 3);
    cfg.checkpoint = Some(checkpoint.clone());
    cfg.max_lines = Some(7);
    sweep_file(&input, &cfg).unwrap();

    let bytes = fs::read(&checkpoint).unwrap();
    let cp = Checkpoint::from_json(&bytes).unwrap();
    assert!(!cp.is_completed());
    assert_eq!(cp.lines_consumed(), 8); // 7 data lines + the leading comment
    assert_eq!(cp.to_json().as_bytes(), bytes.as_slice());
    assert!(Checkpoint::from_json(b"{\"version\": 9}").is_err());
    assert!(Checkpoint::from_json(b"not json").is_err());
}
