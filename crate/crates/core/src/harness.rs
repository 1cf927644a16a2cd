//! Parallel verification sweeps and their record output.
//!
//! Every sweep is a map over `k`: each `k` produces an ordered slice of
//! records, slices are computed on a rayon pool and concatenated in
//! ascending `k`, so output is identical for any worker count.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    conjecture_check, gm_q_set, match_families, reduce_p, surgery_triple, FamilyMatch,
};
use crate::error::{Error, Result};
use crate::invariants::{gbar, is_genus_minimizing, GbarMode, Triple};
use crate::modmath::{gcd, md};
use crate::params::{derive_params, QType};
use crate::structure::structure_diagnostics;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    VerifyK2,
    VerifyTheorem,
    VerifyReduction,
    VerifyStructure,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::VerifyK2 => "verify-k2",
            Mode::VerifyTheorem => "verify-theorem",
            Mode::VerifyReduction => "verify-reduction",
            Mode::VerifyStructure => "verify-structure",
        })
    }
}

/// Which `p` to visit for each `k` in the `p > k²` sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PWindow {
    /// `k² < p <= 2k²`.
    SinglePeriod,
    /// A fixed list; values `<= k²` are ignored for each `k`.
    Explicit(Vec<i64>),
}

impl PWindow {
    fn values(&self, k: i64) -> Vec<i64> {
        let kk = k * k;
        match self {
            PWindow::SinglePeriod => (kk + 1..=2 * kk).collect(),
            PWindow::Explicit(ps) => ps.iter().copied().filter(|&p| p > kk).collect(),
        }
    }
}

impl FromStr for PWindow {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "period" || s == "single-period" {
            return Ok(PWindow::SinglePeriod);
        }
        let ps = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::usage(format!("bad p value {t:?} in window")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PWindow::Explicit(ps))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::usage(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub k_min: i64,
    pub k_max: i64,
    pub p_window: PWindow,
    pub workers: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl SweepConfig {
    pub fn new(k_min: i64, k_max: i64) -> Self {
        SweepConfig {
            k_min,
            k_max,
            p_window: PWindow::SinglePeriod,
            workers: 1,
            output: None,
            format: OutputFormat::Jsonl,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_min < 2 || self.k_min > self.k_max {
            return Err(Error::usage(format!(
                "need 2 <= kmin <= kmax, got kmin={} kmax={}",
                self.k_min, self.k_max
            )));
        }
        if self.k_max > 1 << 19 {
            return Err(Error::usage(format!("kmax = {} too large", self.k_max)));
        }
        if self.workers == 0 {
            return Err(Error::usage("workers must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub k: i64,
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub gbar: i64,
    pub gm: bool,
    pub families: Vec<FamilyMatch>,
    pub consistent: bool,
    /// Wall time for this record; not written, so output stays deterministic.
    #[serde(skip)]
    pub elapsed_ns: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub mode: Mode,
    pub k_min: i64,
    pub k_max: i64,
    pub triples_checked: usize,
    /// Inputs skipped because `gcd(p, k) != 1`.
    pub skipped: usize,
    pub mismatches: Vec<String>,
    /// Findings that do not count as failures (e.g. structural checks at small `k`).
    pub notes: Vec<String>,
    #[serde(skip)]
    pub records: Vec<VerificationRecord>,
}

impl Summary {
    pub fn all_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_consistent() {
            0
        } else {
            1
        }
    }
}

struct Slice {
    records: Vec<VerificationRecord>,
    skipped: usize,
    notes: Vec<String>,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let t0 = Instant::now();
    let out = f()?;
    Ok((out, t0.elapsed().as_nanos() as u64))
}

fn k2_slice(k: i64) -> Result<Slice> {
    let kk = k * k;
    let closed = gm_q_set(k)?;
    let mut records = Vec::new();
    for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
        let ((g, gm), elapsed_ns) = timed(|| {
            let t = Triple::new(kk, q, k)?;
            Ok((gbar(&t, GbarMode::Fast).gbar, is_genus_minimizing(&t)))
        })?;
        records.push(VerificationRecord {
            k,
            p: None,
            q: Some(q),
            gbar: g,
            gm,
            families: Vec::new(),
            consistent: gm == closed.contains(&q),
            elapsed_ns,
        });
    }
    Ok(Slice {
        records,
        skipped: 0,
        notes: Vec::new(),
    })
}

fn theorem_slice(k: i64, window: &PWindow) -> Result<Slice> {
    let mut records = Vec::new();
    let mut skipped = 0;
    for p in window.values(k) {
        if gcd(p, k) != 1 {
            skipped += 1;
            continue;
        }
        let (c, elapsed_ns) = timed(|| conjecture_check(p, md(k * k, p), k))?;
        records.push(VerificationRecord {
            k,
            p: Some(p),
            q: None,
            gbar: c.gbar,
            gm: c.gm,
            families: c.families,
            consistent: c.consistent,
            elapsed_ns,
        });
    }
    Ok(Slice {
        records,
        skipped,
        notes: Vec::new(),
    })
}

fn reduction_slice(k: i64, window: &PWindow) -> Result<Slice> {
    let mut records = Vec::new();
    let mut skipped = 0;
    for p in window.values(k) {
        if gcd(p, k) != 1 {
            skipped += 1;
            continue;
        }
        let ((g, gm, reduced_gm), elapsed_ns) = timed(|| {
            let st = surgery_triple(p, k)?;
            let red = reduce_p(p, k)?;
            Ok((
                gbar(&st, GbarMode::Fast).gbar,
                is_genus_minimizing(&st),
                is_genus_minimizing(&red.triple),
            ))
        })?;
        records.push(VerificationRecord {
            k,
            p: Some(p),
            q: None,
            gbar: g,
            gm,
            families: match_families(p, k)?.matches,
            consistent: gm == reduced_gm,
            elapsed_ns,
        });
    }
    Ok(Slice {
        records,
        skipped,
        notes: Vec::new(),
    })
}

fn structure_slice(k: i64) -> Result<Slice> {
    let mut records = Vec::new();
    let mut notes = Vec::new();
    if k <= 2 {
        return Ok(Slice {
            records,
            skipped: 0,
            notes,
        });
    }
    for q in gm_q_set(k)? {
        let ps = derive_params(k, q)?;
        if ps.q_type != QType::Positive {
            continue;
        }
        let (diag, elapsed_ns) = timed(|| structure_diagnostics(k, q))?;
        let failures = diag.checks.failures();
        if !failures.is_empty() && !diag.checks.gated {
            notes.push(format!("k={k} q={q}: {}", failures.join(", ")));
        }
        let t = Triple::new(k * k, q, k)?;
        records.push(VerificationRecord {
            k,
            p: None,
            q: Some(q),
            gbar: gbar(&t, GbarMode::Fast).gbar,
            gm: diag.checks.genus_minimizing,
            families: Vec::new(),
            consistent: failures.is_empty() || !diag.checks.gated,
            elapsed_ns,
        });
    }
    Ok(Slice {
        records,
        skipped: 0,
        notes,
    })
}

/// Runs one sweep and writes its records if an output path is configured.
pub fn run(mode: Mode, cfg: &SweepConfig) -> Result<Summary> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::internal(format!("cannot build worker pool: {e}")))?;
    let slices: Vec<Slice> = pool.install(|| {
        (cfg.k_min..=cfg.k_max)
            .into_par_iter()
            .map(|k| match mode {
                Mode::VerifyK2 => k2_slice(k),
                Mode::VerifyTheorem => theorem_slice(k, &cfg.p_window),
                Mode::VerifyReduction => reduction_slice(k, &cfg.p_window),
                Mode::VerifyStructure => structure_slice(k),
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let mut summary = Summary {
        mode,
        k_min: cfg.k_min,
        k_max: cfg.k_max,
        triples_checked: 0,
        skipped: 0,
        mismatches: Vec::new(),
        notes: Vec::new(),
        records: Vec::new(),
    };
    for s in slices {
        summary.skipped += s.skipped;
        summary.notes.extend(s.notes);
        summary.records.extend(s.records);
    }
    summary.triples_checked = summary.records.len();
    summary.mismatches = summary
        .records
        .iter()
        .filter(|r| !r.consistent)
        .map(describe)
        .collect();

    if let Some(path) = &cfg.output {
        write_records_to(path, cfg.format, &summary.records)?;
    }
    Ok(summary)
}

fn describe(r: &VerificationRecord) -> String {
    let mut s = format!("k={}", r.k);
    if let Some(p) = r.p {
        s += &format!(" p={p}");
    }
    if let Some(q) = r.q {
        s += &format!(" q={q}");
    }
    s + &format!(" gbar={} gm={} families={}", r.gbar, r.gm, r.families.len())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    k: i64,
    p: Option<i64>,
    q: Option<i64>,
    gbar: i64,
    gm: bool,
    families: &'a str,
    consistent: bool,
}

/// Writes records as JSON lines or CSV.
pub fn write_records<W: Write>(
    out: W,
    format: OutputFormat,
    records: &[VerificationRecord],
) -> std::io::Result<()> {
    match format {
        OutputFormat::Jsonl => {
            let mut out = std::io::BufWriter::new(out);
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                let fams = r
                    .families
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                w.serialize(CsvRow {
                    k: r.k,
                    p: r.p,
                    q: r.q,
                    gbar: r.gbar,
                    gm: r.gm,
                    families: &fams,
                    consistent: r.consistent,
                })?;
            }
            w.flush()
        }
    }
}

fn write_records_to(
    path: &PathBuf,
    format: OutputFormat,
    records: &[VerificationRecord],
) -> Result<()> {
    let io = |source| Error::Io {
        path: path.clone(),
        source,
    };
    if path.as_os_str() == "-" {
        return write_records(std::io::stdout().lock(), format, records).map_err(io);
    }
    let file = std::fs::File::create(path).map_err(io)?;
    write_records(file, format, records).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SweepConfig::new(5, 4).validate().is_err());
        assert!(SweepConfig::new(1, 4).validate().is_err());
        let mut cfg = SweepConfig::new(2, 4);
        cfg.workers = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn k2_at_five() {
        let s = run(Mode::VerifyK2, &SweepConfig::new(5, 5)).unwrap();
        assert_eq!(s.triples_checked, 20);
        assert!(s.all_consistent());
        assert_eq!(s.records.iter().filter(|r| r.gm).count(), 10);
    }

    #[test]
    fn theorem_at_seven() {
        let s = run(Mode::VerifyTheorem, &SweepConfig::new(7, 7)).unwrap();
        assert!(s.all_consistent());
        assert_eq!(s.skipped, 7);
        assert_eq!(s.triples_checked, 42);
    }

    #[test]
    fn window_parsing() {
        assert_eq!("period".parse::<PWindow>().unwrap(), PWindow::SinglePeriod);
        assert_eq!(
            "50, 79".parse::<PWindow>().unwrap(),
            PWindow::Explicit(vec![50, 79])
        );
        assert!("50,x".parse::<PWindow>().is_err());
    }

    #[test]
    fn record_schema() {
        let s = run(
            Mode::VerifyTheorem,
            &SweepConfig {
                p_window: PWindow::Explicit(vec![79]),
                ..SweepConfig::new(7, 7)
            },
        )
        .unwrap();
        let mut buf = Vec::new();
        write_records(&mut buf, OutputFormat::Jsonl, &s.records).unwrap();
        let line = String::from_utf8(buf).unwrap();
        assert!(
            line.starts_with(r#"{"k":7,"p":79,"q":null,"gbar":"#),
            "{line}"
        );
        assert!(
            line.contains(r#"{"family":"III","sign":1,"witness":2}"#),
            "{line}"
        );
        let mut buf = Vec::new();
        write_records(&mut buf, OutputFormat::Csv, &s.records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(
            text.starts_with("k,p,q,gbar,gm,families,consistent\n7,79,,"),
            "{text}"
        );
        assert!(text.contains("III:+1:2"), "{text}");
    }
}
