//! One pass over every polyhedron of the requested orders, shared by all
//! enumeration campaigns.
//!
//! Hamiltonian graphs are only counted. Non-hamiltonian ones get a full
//! [`PropertyRecord`]. With a cache directory, each order is kept in an
//! append-only `order-NN.jsonl` file:
//!
//! ```text
//! {"kind":"header","version":"0.1.0","n":11,"flags":[...]}
//! <record lines of batch m>
//! {"kind":"batch","m":m,"polyhedra":..,"four_connected":..}
//! ...
//! {"kind":"complete","polyhedra":..,"four_connected":..}
//! ```
//!
//! A complete file is reused as is. With `resume`, an incomplete file keeps
//! every batch up to its last marker and the run continues from there.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use polyhedra_core::enumerate::{PackedCode, MAX_ENUM_ORDER};
use polyhedra_core::hamilton::find_hamilton_cycle;
use polyhedra_core::structure::is_k_connected;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::generate::{generate, ParallelBuilder};
use crate::record::{PropertyRecord, MINOR_KEYS};
use crate::VERSION;

#[derive(Clone, Debug, Default)]
pub struct SurveyOptions {
    pub cache: Option<PathBuf>,
    pub resume: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderSurvey {
    pub n: usize,
    pub polyhedra: u64,
    pub four_connected: u64,
    /// Records of the non-hamiltonian classes, in emission order.
    pub non_hamiltonian: Vec<PropertyRecord>,
}

impl OrderSurvey {
    pub fn k26_free(&self) -> impl Iterator<Item = &PropertyRecord> {
        self.non_hamiltonian.iter().filter(|r| r.is_k26_free())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Marker {
    Header {
        version: String,
        n: usize,
        flags: Vec<String>,
    },
    Batch {
        m: usize,
        polyhedra: u64,
        four_connected: u64,
    },
    Complete {
        polyhedra: u64,
        four_connected: u64,
    },
}

fn flags() -> Vec<String> {
    let mut f: Vec<String> = ["hamiltonian", "connectivity", "family"]
        .map(String::from)
        .into();
    f.extend(MINOR_KEYS.map(String::from));
    f
}

/// What a cache file already holds.
struct Stored {
    survey: OrderSurvey,
    batches: Vec<usize>,
    complete: bool,
    /// Byte length of the file up to the last marker.
    good_len: u64,
}

fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("order-{n:02}.jsonl"))
}

fn read_cache(path: &Path, n: usize) -> Result<Option<Stored>> {
    let Ok(file) = File::open(path) else {
        return Ok(None);
    };
    let mut stored = Stored {
        survey: OrderSurvey {
            n,
            ..Default::default()
        },
        batches: Vec::new(),
        complete: false,
        good_len: 0,
    };
    let mut pending = Vec::new();
    let mut offset = 0u64;
    let mut header_ok = false;
    for line in BufReader::new(file).split(b'\n') {
        let line = line?;
        offset += line.len() as u64 + 1;
        let Ok(value) = serde_json::from_slice::<Value>(&line) else {
            break;
        };
        if value.get("kind").is_some() {
            let Ok(marker) = serde_json::from_value::<Marker>(value) else {
                break;
            };
            match marker {
                Marker::Header {
                    version,
                    n: hn,
                    flags: f,
                } => {
                    if version != VERSION || hn != n || f != flags() {
                        return Ok(None);
                    }
                    header_ok = true;
                }
                Marker::Batch {
                    m,
                    polyhedra,
                    four_connected,
                } if header_ok => {
                    stored.survey.polyhedra += polyhedra;
                    stored.survey.four_connected += four_connected;
                    stored.survey.non_hamiltonian.append(&mut pending);
                    stored.batches.push(m);
                }
                Marker::Complete {
                    polyhedra,
                    four_connected,
                } if header_ok => {
                    if polyhedra != stored.survey.polyhedra
                        || four_connected != stored.survey.four_connected
                    {
                        bail!("{}: totals do not match batch markers", path.display());
                    }
                    stored.complete = true;
                }
                _ => break,
            }
            stored.good_len = offset;
        } else if header_ok {
            match serde_json::from_value::<PropertyRecord>(value) {
                Ok(r) => pending.push(r),
                Err(_) => break,
            }
        } else {
            break;
        }
    }
    Ok(header_ok.then_some(stored))
}

struct CacheWriter {
    out: BufWriter<File>,
}

impl CacheWriter {
    /// Opens for appending after the kept prefix, or starts a new file.
    fn open(path: &Path, n: usize, keep: Option<u64>) -> Result<CacheWriter> {
        let mut out = match keep {
            Some(len) => {
                let f = OpenOptions::new().write(true).open(path)?;
                f.set_len(len)?;
                let mut w = BufWriter::new(f);
                std::io::Seek::seek(&mut w, std::io::SeekFrom::End(0))?;
                w
            }
            None => BufWriter::new(File::create(path)?),
        };
        if keep.is_none() {
            let header = Marker::Header {
                version: VERSION.into(),
                n,
                flags: flags(),
            };
            writeln!(out, "{}", serde_json::to_string(&header)?)?;
        }
        Ok(CacheWriter { out })
    }

    fn batch(
        &mut self,
        m: usize,
        records: &[PropertyRecord],
        polyhedra: u64,
        four_connected: u64,
    ) -> Result<()> {
        for r in records {
            writeln!(self.out, "{}", r.to_json())?;
        }
        writeln!(
            self.out,
            "{}",
            serde_json::to_string(&Marker::Batch {
                m,
                polyhedra,
                four_connected
            })?
        )?;
        self.out.flush()?;
        Ok(())
    }

    fn complete(mut self, s: &OrderSurvey) -> Result<()> {
        let done = Marker::Complete {
            polyhedra: s.polyhedra,
            four_connected: s.four_connected,
        };
        writeln!(self.out, "{}", serde_json::to_string(&done)?)?;
        self.out.flush()?;
        self.out.get_ref().sync_all()?;
        Ok(())
    }
}

/// Survey of one batch: counts plus records of non-hamiltonian classes.
pub fn survey_batch(codes: &[PackedCode]) -> (u64, Vec<PropertyRecord>) {
    let per_graph: Vec<(bool, Option<PropertyRecord>)> = codes
        .par_iter()
        .map(|c| {
            let g = c.to_graph();
            let four = g.min_degree() >= 4 && is_k_connected(&g, 4);
            let verdict = find_hamilton_cycle(&g).expect("polyhedra have at least four vertices");
            let record = (!verdict.is_hamiltonian())
                .then(|| PropertyRecord::with_verdict(&g, true, verdict));
            (four, record)
        })
        .collect();
    let four = per_graph.iter().filter(|(f, _)| *f).count() as u64;
    (four, per_graph.into_iter().filter_map(|(_, r)| r).collect())
}

/// Surveys every order in `orders`, using and filling the cache.
pub fn survey(
    orders: RangeInclusive<usize>,
    opts: &SurveyOptions,
) -> Result<BTreeMap<usize, OrderSurvey>> {
    let (lo, hi) = (*orders.start(), *orders.end());
    if lo < 4 || hi > MAX_ENUM_ORDER || lo > hi {
        bail!("orders must lie in 4..={MAX_ENUM_ORDER}");
    }
    let mut done = BTreeMap::new();
    let mut partial: BTreeMap<usize, Stored> = BTreeMap::new();
    if let Some(dir) = &opts.cache {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for n in lo..=hi {
            match read_cache(&cache_path(dir, n), n)? {
                Some(s) if s.complete => {
                    done.insert(n, s.survey);
                }
                Some(s) if opts.resume => {
                    partial.insert(n, s);
                }
                _ => {}
            }
        }
    }
    let Some(top) = (lo..=hi).rev().find(|n| !done.contains_key(n)) else {
        return Ok(done);
    };
    let checkpoint = opts.cache.as_ref().map(|d| d.join("checkpoint"));
    let builder = ParallelBuilder::new(checkpoint, opts.resume);
    let mut current: Option<(OrderSurvey, Option<CacheWriter>)> = None;
    // batches of the current order already read back from the cache
    let mut skip: Vec<usize> = Vec::new();
    generate(top, builder, |n, m, codes| {
        if n < lo || done.contains_key(&n) {
            return Ok(());
        }
        if current.as_ref().is_none_or(|(s, _)| s.n != n) {
            let stored = partial.remove(&n);
            let writer = match &opts.cache {
                Some(dir) => Some(CacheWriter::open(
                    &cache_path(dir, n),
                    n,
                    stored.as_ref().map(|s| s.good_len),
                )?),
                None => None,
            };
            let (survey, batches) = match stored {
                Some(s) => (s.survey, s.batches),
                None => (
                    OrderSurvey {
                        n,
                        ..Default::default()
                    },
                    Vec::new(),
                ),
            };
            current = Some((survey, writer));
            skip = batches;
        }
        let (survey, writer) = current.as_mut().expect("set above");
        if !skip.contains(&m) {
            let (four, records) = survey_batch(codes);
            if let Some(w) = writer {
                w.batch(m, &records, codes.len() as u64, four)?;
            }
            survey.polyhedra += codes.len() as u64;
            survey.four_connected += four;
            survey.non_hamiltonian.extend(records);
        }
        if m == *polyhedra_core::enumerate::size_range(n).end() {
            let (survey, writer) = current.take().expect("set above");
            if let Some(w) = writer {
                w.complete(&survey)?;
            }
            done.insert(n, survey);
        }
        Ok(())
    })?;
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_round_trip_and_resume() {
        let fresh = survey(4..=9, &SurveyOptions::default()).unwrap();
        assert_eq!(
            fresh.values().map(|s| s.polyhedra).collect::<Vec<_>>(),
            [1, 2, 7, 34, 257, 2606]
        );
        assert!(fresh.values().all(|s| s.non_hamiltonian.is_empty()));
        let dir = tempfile::tempdir().unwrap();
        let opts = SurveyOptions {
            cache: Some(dir.path().into()),
            resume: false,
        };
        assert_eq!(survey(4..=9, &opts).unwrap(), fresh);
        // a complete file is read back without regenerating
        let path = cache_path(dir.path(), 9);
        let stored = read_cache(&path, 9).unwrap().unwrap();
        assert!(stored.complete);
        assert_eq!(stored.survey, fresh[&9]);
        // cut after the second batch marker and resume
        let text = fs::read_to_string(&path).unwrap();
        let cut = text
            .match_indices("\"kind\":\"batch\"")
            .nth(1)
            .map(|(i, _)| i)
            .unwrap();
        let end = cut + text[cut..].find('\n').unwrap() + 1;
        fs::write(&path, format!("{}{{\"graph6\":", &text[..end])).unwrap();
        let partial = read_cache(&path, 9).unwrap().unwrap();
        assert!(!partial.complete);
        assert_eq!(partial.batches.len(), 2);
        let resumed = survey(
            9..=9,
            &SurveyOptions {
                resume: true,
                ..opts.clone()
            },
        )
        .unwrap();
        assert_eq!(resumed[&9], fresh[&9]);
        assert_eq!(fs::read_to_string(&path).unwrap(), text);
    }

    #[test]
    fn stale_headers_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = cache_path(dir.path(), 6);
        fs::write(
            &path,
            "{\"kind\":\"header\",\"version\":\"0.0.0\",\"n\":6,\"flags\":[]}\n",
        )
        .unwrap();
        assert!(read_cache(&path, 6).unwrap().is_none());
        let opts = SurveyOptions {
            cache: Some(dir.path().into()),
            resume: true,
        };
        assert_eq!(survey(6..=6, &opts).unwrap()[&6].polyhedra, 7);
    }

    #[test]
    fn order_guard() {
        assert!(survey(3..=5, &SurveyOptions::default()).is_err());
        assert!(survey(4..=15, &SurveyOptions::default()).is_err());
    }
}
