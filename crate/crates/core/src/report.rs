//! Aggregation of repeated runs into benchmark and ablation tables.

use std::collections::BTreeMap;
use std::io;

use crate::error::{Error, Result};
use crate::vns::CriteriaMask;

/// Outcome of one seeded run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub instance: String,
    pub variant: CriteriaMask,
    pub run: usize,
    pub seed: u64,
    pub k_star: u32,
    pub greedy_span: u32,
    pub time_to_best: f64,
    pub iterations_to_best: u64,
    pub iterations: u64,
}

/// One instance row of the benchmark table.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub runs: usize,
    pub best: u32,
    pub avg: f64,
    /// Mean time to each run's own best span, over all runs.
    pub time_all: f64,
    /// Mean time to best over the runs that hit the reference value.
    pub time_hit: Option<f64>,
    pub best_known: Option<u32>,
    /// Runs with span at most the reference value.
    pub hits: Option<usize>,
    pub diff: Option<i64>,
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

/// Summarizes the runs of one instance. Panics on an empty slice.
pub fn summarize(instance: &str, n: usize, m: usize, runs: &[RunRecord], best_known: Option<u32>) -> BenchRow {
    assert!(!runs.is_empty(), "no runs for {instance}");
    let best = runs.iter().map(|r| r.k_star).min().expect("nonempty");
    let avg = mean(runs.iter().map(|r| f64::from(r.k_star))).expect("nonempty");
    let time_all = mean(runs.iter().map(|r| r.time_to_best)).expect("nonempty");
    let hit = |r: &&RunRecord| best_known.is_some_and(|b| r.k_star <= b);
    BenchRow {
        instance: instance.to_owned(),
        n,
        m,
        runs: runs.len(),
        best,
        avg,
        time_all,
        time_hit: mean(runs.iter().filter(hit).map(|r| r.time_to_best)),
        best_known,
        hits: best_known.map(|_| runs.iter().filter(hit).count()),
        diff: best_known.map(|b| i64::from(best) - i64::from(b)),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_bench_csv<W: io::Write>(out: W, rows: &[BenchRow], timing: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["instance", "n", "m", "runs", "best", "avg"];
    if timing {
        header.extend(["time_all", "time_hit"]);
    }
    header.extend(["hits", "best_known", "diff"]);
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.instance.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.runs.to_string(),
            r.best.to_string(),
            format!("{:.4}", r.avg),
        ];
        if timing {
            rec.push(format!("{:.6}", r.time_all));
            rec.push(opt(r.time_hit.map(|t| format!("{t:.6}"))));
        }
        rec.push(opt(r.hits));
        rec.push(opt(r.best_known));
        rec.push(opt(r.diff));
        w.write_record(&rec)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Per-run log rows, from which every aggregate column can be recomputed.
pub fn write_runs_csv<W: io::Write>(out: W, runs: &[RunRecord], timing: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["instance", "variant", "run", "seed", "k_star", "greedy_span"];
    if timing {
        header.push("time_to_best");
    }
    header.extend(["iterations_to_best", "iterations"]);
    w.write_record(&header)?;
    for r in runs {
        let mut rec = vec![
            r.instance.clone(),
            r.variant.to_string(),
            r.run.to_string(),
            r.seed.to_string(),
            r.k_star.to_string(),
            r.greedy_span.to_string(),
        ];
        if timing {
            rec.push(format!("{:.6}", r.time_to_best));
        }
        rec.push(r.iterations_to_best.to_string());
        rec.push(r.iterations.to_string());
        w.write_record(&rec)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Best and mean span per instance and criteria variant.
#[derive(Debug, Clone, PartialEq)]
pub struct AblationRow {
    pub instance: String,
    pub variant: CriteriaMask,
    pub runs: usize,
    pub best: u32,
    pub avg: f64,
}

/// Groups runs by instance and variant. Rows come out sorted by instance,
/// then variant from `000` to `111`.
pub fn ablation_rows(runs: &[RunRecord]) -> Vec<AblationRow> {
    let mut groups: BTreeMap<(String, String), Vec<&RunRecord>> = BTreeMap::new();
    for r in runs {
        groups
            .entry((r.instance.clone(), r.variant.to_string()))
            .or_default()
            .push(r);
    }
    groups
        .into_values()
        .map(|rs| AblationRow {
            instance: rs[0].instance.clone(),
            variant: rs[0].variant,
            runs: rs.len(),
            best: rs.iter().map(|r| r.k_star).min().expect("nonempty group"),
            avg: mean(rs.iter().map(|r| f64::from(r.k_star))).expect("nonempty group"),
        })
        .collect()
}

pub fn write_ablation_csv<W: io::Write>(out: W, rows: &[AblationRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["instance", "variant", "runs", "best", "avg"])?;
    for r in rows {
        w.write_record([
            r.instance.clone(),
            r.variant.to_string(),
            r.runs.to_string(),
            r.best.to_string(),
            format!("{:.4}", r.avg),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Reads an `instance,best` table of reference spans.
pub fn read_best_known<R: io::Read>(input: R) -> Result<BTreeMap<String, u32>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let mut out = BTreeMap::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let line = i + 2;
        let (Some(name), Some(best)) = (rec.get(0), rec.get(1)) else {
            return Err(Error::Parse {
                line,
                message: "expected instance,best".into(),
            });
        };
        let best = best.parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid best value {best:?}"),
        })?;
        out.insert(name.to_owned(), best);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(k: u32, t: f64, run: usize) -> RunRecord {
        RunRecord {
            instance: "g".into(),
            variant: CriteriaMask::ALL,
            run,
            seed: run as u64,
            k_star: k,
            greedy_span: 30,
            time_to_best: t,
            iterations_to_best: 1,
            iterations: 2,
        }
    }

    #[test]
    fn summary_columns() {
        let runs = [rec(27, 1.0, 0), rec(28, 3.0, 1), rec(27, 2.0, 2)];
        let row = summarize("g", 30, 111, &runs, Some(27));
        assert_eq!(row.best, 27);
        assert!((row.avg - 82.0 / 3.0).abs() < 1e-12);
        assert_eq!(row.hits, Some(2));
        assert_eq!(row.time_hit, Some(1.5));
        assert_eq!(row.time_all, 2.0);
        assert_eq!(row.diff, Some(0));
        assert!(row.avg >= f64::from(row.best));

        let single = summarize("g", 1, 0, &runs[..1], None);
        assert_eq!(single.avg, f64::from(single.best));
        assert_eq!(single.hits, None);
        assert_eq!(single.diff, None);
    }

    #[test]
    fn bench_csv_layout() {
        let row = summarize("g", 30, 111, &[rec(26, 0.5, 0)], None);
        let mut buf = Vec::new();
        write_bench_csv(&mut buf, std::slice::from_ref(&row), false).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "instance,n,m,runs,best,avg,hits,best_known,diff\ng,30,111,1,26,26.0000,,,\n"
        );
        let mut buf = Vec::new();
        write_bench_csv(&mut buf, &[row], true).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains(",0.500000,,"));
    }

    #[test]
    fn ablation_grouping() {
        let mut runs = Vec::new();
        for variant in CriteriaMask::variants().into_iter().rev() {
            for run in 0..2 {
                runs.push(RunRecord {
                    variant,
                    ..rec(10 + run as u32, 0.0, run)
                });
            }
        }
        let rows = ablation_rows(&runs);
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0].variant.to_string(), "000");
        assert_eq!(rows[7].variant, CriteriaMask::ALL);
        assert_eq!((rows[3].best, rows[3].avg), (10, 10.5));
    }

    #[test]
    fn best_known_table() {
        let t = read_best_known("instance,best\nGEOM20, 20\nGEOM30b,26\n".as_bytes()).unwrap();
        assert_eq!(t["GEOM20"], 20);
        assert_eq!(t["GEOM30b"], 26);
        assert!(read_best_known("instance,best\nx,y\n".as_bytes()).is_err());
    }
}
