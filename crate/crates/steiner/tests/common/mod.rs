#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use steiner::format::{write_document, Document};
use steiner::report::Report;
use steiner_core::TripleSystem;

/// Runs the `steiner` binary; returns its output and wall time.
pub fn steiner(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_steiner")).args(args).output().expect("binary runs");
    (out, start.elapsed())
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// Runs with `--json --no-timing` and parses the report.
pub fn steiner_json(args: &[&str]) -> (Report, i32, Duration) {
    let mut all = vec!["--json", "--no-timing"];
    all.extend_from_slice(args);
    let (out, took) = steiner(&all);
    let report: Report = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    (report, out.status.code().expect("exit code"), took)
}

pub fn write(dir: &Path, name: &str, doc: &Document) -> PathBuf {
    let path = dir.join(name);
    write_document(&path, doc).expect("writable temp dir");
    path
}

/// A uniformly-ish random STS(`v`) by Stinson's hill-climbing.
///
/// Repeatedly picks a point `x` with an uncovered pair, two uncovered
/// partners `y, z`, and adds `{x, y, z}`, first removing the block that
/// already covers `{y, z}` if there is one.
pub fn random_sts(v: usize, rng: &mut impl Rng) -> TripleSystem {
    assert!(steiner_core::system::is_admissible_order(v));
    if v < 3 {
        return TripleSystem::new(v, Vec::new()).unwrap();
    }
    let target = v * (v - 1) / 6;
    // third[x][y] is the third point of the block through x and y.
    let mut third = vec![vec![usize::MAX; v]; v];
    let mut blocks = 0;
    while blocks < target {
        let live: Vec<usize> =
            (0..v).filter(|&x| (0..v).any(|y| y != x && third[x][y] == usize::MAX)).collect();
        let x = *live.choose(rng).unwrap();
        let free: Vec<usize> = (0..v).filter(|&y| y != x && third[x][y] == usize::MAX).collect();
        let mut pick = free.choose_multiple(rng, 2);
        let (y, z) = (*pick.next().unwrap(), *pick.next().unwrap());
        let w = third[y][z];
        if w == usize::MAX {
            blocks += 1;
        } else {
            for (a, b) in [(y, z), (y, w), (z, w)] {
                third[a][b] = usize::MAX;
                third[b][a] = usize::MAX;
            }
        }
        for (a, b, c) in [(x, y, z), (y, z, x), (x, z, y)] {
            third[a][b] = c;
            third[b][a] = c;
        }
    }
    let mut set = BTreeSet::new();
    for (x, row) in third.iter().enumerate() {
        for (y, &z) in row.iter().enumerate().skip(x + 1) {
            let mut b = [x, y, z];
            b.sort_unstable();
            set.insert(b);
        }
    }
    TripleSystem::new(v, set.into_iter().collect()).expect("hill-climbing yields a valid system")
}
