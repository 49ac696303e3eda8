//! Parallel batch builder with on-disk batch checkpoints.
//!
//! Parents of a batch are expanded on the rayon pool; each worker folds its
//! children into a local set and the sets are merged at the end of the
//! batch, so the result (sorted by `finish_batch`) does not depend on the
//! number of workers.

use std::collections::HashSet;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use polyhedra_core::enumerate::{finish_batch, for_each_child, BatchBuilder, Levels, PackedCode};
use rayon::prelude::*;

#[derive(Default)]
pub struct ParallelBuilder {
    /// Directory of finished batches. Batches found here are loaded rather
    /// than rebuilt when `reuse` is set; new batches are always written.
    pub checkpoint: Option<PathBuf>,
    pub reuse: bool,
    /// First write failure, if any; generation continues without saving.
    pub error: Option<io::Error>,
}

impl ParallelBuilder {
    pub fn new(checkpoint: Option<PathBuf>, reuse: bool) -> ParallelBuilder {
        ParallelBuilder {
            checkpoint,
            reuse,
            error: None,
        }
    }
}

impl BatchBuilder for ParallelBuilder {
    fn build(
        &mut self,
        order: usize,
        size: usize,
        wheel: Option<PackedCode>,
        split_parents: &[PackedCode],
        add_parents: &[PackedCode],
    ) -> Vec<PackedCode> {
        if let (Some(dir), true) = (&self.checkpoint, self.reuse) {
            if let Some(codes) = read_batch(dir, order, size) {
                return codes;
            }
        }
        let splits = split_parents.par_iter().map(|p| (p, true));
        let adds = add_parents.par_iter().map(|p| (p, false));
        let mut seen = splits
            .chain(adds)
            .fold(HashSet::new, |mut set, (p, split)| {
                let one = std::slice::from_ref(p);
                let (s, a): (&[PackedCode], &[PackedCode]) =
                    if split { (one, &[]) } else { (&[], one) };
                for_each_child(s, a, |c| {
                    set.insert(c);
                });
                set
            })
            .reduce(HashSet::new, |a, b| {
                let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                big.extend(small);
                big
            });
        seen.extend(wheel);
        let batch = finish_batch(seen.into_iter().collect());
        if let Some(dir) = &self.checkpoint {
            if let Err(e) = write_batch(dir, order, size, &batch) {
                self.error.get_or_insert(e);
            }
        }
        batch
    }
}

/// Bytes per stored code: `1 + n + 2m` nibbles, rounded up.
fn code_bytes(order: usize, size: usize) -> usize {
    (1 + order + 2 * size).div_ceil(2)
}

fn batch_path(dir: &Path, order: usize, size: usize) -> PathBuf {
    dir.join(format!("batch-{order:02}-{size:02}.bin"))
}

fn write_batch(dir: &Path, order: usize, size: usize, codes: &[PackedCode]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let len = code_bytes(order, size);
    let mut buf = Vec::with_capacity(codes.len() * len);
    for c in codes {
        let bytes: Vec<u8> = c.0.iter().flat_map(|w| w.to_be_bytes()).collect();
        buf.extend_from_slice(&bytes[..len]);
    }
    let path = batch_path(dir, order, size);
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&buf)?;
    f.sync_all()?;
    fs::rename(tmp, path)
}

fn read_batch(dir: &Path, order: usize, size: usize) -> Option<Vec<PackedCode>> {
    let bytes = fs::read(batch_path(dir, order, size)).ok()?;
    let len = code_bytes(order, size);
    if bytes.len() % len != 0 {
        return None;
    }
    let codes: Vec<PackedCode> = bytes
        .chunks(len)
        .map(|chunk| {
            let mut full = [0u8; 48];
            full[..len].copy_from_slice(chunk);
            let mut words = [0u64; 6];
            for (i, w) in words.iter_mut().enumerate() {
                *w = u64::from_be_bytes(full[8 * i..8 * i + 8].try_into().expect("eight bytes"));
            }
            PackedCode(words)
        })
        .collect();
    codes.iter().all(|c| c.order() == order).then_some(codes)
}

/// Runs the generator up to `max_order`, handing every batch to `sink`.
pub fn generate(
    max_order: usize,
    builder: ParallelBuilder,
    mut sink: impl FnMut(usize, usize, &[PackedCode]) -> anyhow::Result<()>,
) -> anyhow::Result<ParallelBuilder> {
    let mut levels = Levels::new(max_order, builder)?;
    while let Some((n, m, codes)) = levels.next_batch() {
        sink(n, m, codes)?;
    }
    let mut builder = std::mem::take(levels.builder_mut());
    if let Some(e) = builder.error.take() {
        return Err(anyhow::Error::new(e).context("writing checkpoint"));
    }
    Ok(builder)
}
