use alloc::vec;

use crate::bits::bit;
use crate::error::{arg_err, Result};
use crate::graph::Graph;

/// Minor test by trying every assignment of host vertices to pattern branch
/// sets or to "unused". Hosts are limited to 9 vertices.
pub fn brute_force_has_minor(host: &Graph, pattern: &Graph) -> Result<bool> {
    let (n, k) = (host.order(), pattern.order());
    if n > 9 {
        return arg_err("brute-force minor oracle is limited to hosts of order 9");
    }
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    let mut label = vec![0usize; n];
    loop {
        let mut sets = [0u64; 10];
        for (v, &l) in label.iter().enumerate() {
            sets[l] |= bit(v);
        }
        let ok = sets[..k]
            .iter()
            .all(|&s| s != 0 && host.is_connected_within(s))
            && pattern
                .edges()
                .all(|(p, q)| host.neighborhood_of(sets[p]) & sets[q] != 0);
        if ok {
            return Ok(true);
        }
        // next assignment in mixed radix k + 1
        let mut i = 0;
        loop {
            if i == n {
                return Ok(false);
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}
