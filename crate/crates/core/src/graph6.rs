//! The graph6 text format.
//!
//! An order byte `63 + n` (or `~` followed by three 6-bit groups for
//! `63 <= n <= 64`), then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte with the first
//! bit in the high position, zero padded, each group offset by 63.

use alloc::string::String;
use alloc::vec;

use crate::error::{format_err, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let row = g.neighbors(v);
        for u in 0..v {
            acc = acc << 1 | (row >> u & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    out
}

/// Parses one graph6 record. A trailing line terminator and the optional
/// `>>graph6<<` header are accepted; anything else out of place is an error
/// naming its byte offset.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return format_err(
            base + pos,
            "byte outside the printable graph6 range 63..=126",
        );
    }
    if bytes.is_empty() {
        return format_err(base, "missing order header");
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return format_err(base + bytes.len(), "truncated long order header");
        }
        if bytes[1] == 126 {
            return format_err(base + 1, "order exceeds 64");
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        if n > MAX_ORDER {
            return format_err(base + 1, "order exceeds 64");
        }
        if n < 63 {
            return format_err(base + 1, "long order header used for order below 63");
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expect = header_len + bits.div_ceil(6);
    if bytes.len() < expect {
        return format_err(base + bytes.len(), "record shorter than its order requires");
    }
    if bytes.len() > expect {
        return format_err(base + expect, "trailing garbage after record");
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[header_len + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = bytes[expect - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return format_err(base + expect - 1, "nonzero padding bits");
        }
    }
    Ok(Graph::from_rows(&rows).expect("rows built symmetric"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;
    use crate::Error;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn offset(r: Result<Graph>) -> usize {
        match r {
            Err(Error::Format { offset, .. }) => offset,
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn hand_encoded_records() {
        assert_eq!(to_graph6(&complete(3)), "Bw");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::new(1)), "@");
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        // path 0-1-2: x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 = 40 -> 'g'
        assert_eq!(to_graph6(&path(3)), "Bg");
        assert_eq!(parse_graph6("C~\n").unwrap(), complete(4));
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), complete(3));
    }

    #[test]
    fn malformed_records_name_offsets() {
        assert_eq!(offset(parse_graph6("")), 0);
        assert_eq!(offset(parse_graph6("C~~")), 2);
        assert_eq!(offset(parse_graph6("C")), 1);
        assert_eq!(offset(parse_graph6("B\x07")), 1);
        assert_eq!(offset(parse_graph6("Bx")), 1);
        assert_eq!(offset(parse_graph6("~?A@")), 1);
        assert_eq!(offset(parse_graph6("~~??????")), 1);
        let e = parse_graph6("C~ ").unwrap_err();
        assert!(e.to_string().contains("byte 2"));
    }

    #[test]
    fn long_header_orders() {
        for n in [62, 63, 64] {
            let g = cycle(n);
            let s = to_graph6(&g);
            assert_eq!(s.starts_with('~'), n >= 63);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(1, 64)) {
            let s = to_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
