//! graph6 reader/writer and sparse6 reader.
//!
//! Both formats are printable ASCII (63..=126) carrying 6 data bits per byte.
//! graph6 stores the upper adjacency triangle column by column:
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, most significant bit first, zero padded.

use std::io::BufRead;

use crate::error::CodecError;
use crate::graph::{Graph, GraphBuilder};

const BIAS: u8 = 63;
const MAX_ORDER: u64 = 68_719_476_735;
const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const SPARSE6_HEADER: &[u8] = b">>sparse6<<";

/// How strictly to treat padding bits after the last edge bit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Padding {
    #[default]
    Strict,
    Lenient,
}

/// What a stream reader does when a record fails to decode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ErrorPolicy {
    #[default]
    Abort,
    Skip,
}

fn strip_header<'a>(line: &'a [u8], header: &[u8]) -> &'a [u8] {
    line.strip_prefix(header).unwrap_or(line)
}

fn trim_eol(line: &[u8]) -> &[u8] {
    let mut end = line.len();
    while end > 0 && (line[end - 1] == b'\n' || line[end - 1] == b'\r') {
        end -= 1;
    }
    &line[..end]
}

fn check_printable(bytes: &[u8], offset: usize) -> Result<(), CodecError> {
    match bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        Some(i) => Err(CodecError::InvalidByte {
            byte: bytes[i],
            offset: offset + i,
        }),
        None => Ok(()),
    }
}

/// Parses the size field; returns `(n, bytes consumed)`.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize), CodecError> {
    let first = *bytes.first().ok_or(CodecError::Empty)?;
    check_printable(&bytes[..1], 0)?;
    if first != 126 {
        return Ok(((first - BIAS) as usize, 1));
    }
    let (start, len) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let field = bytes.get(start..start + len).ok_or(CodecError::TruncatedRecord {
        expected: start + len,
        found: bytes.len(),
    })?;
    check_printable(field, start)?;
    let n = field.iter().fold(0u64, |acc, &b| acc << 6 | (b - BIAS) as u64);
    let n = usize::try_from(n).map_err(|_| CodecError::Unsupported(format!("order {n}")))?;
    Ok((n, start + len))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let n = n as u64;
    assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// Number of body bytes of a graph6 record of order `n`.
pub fn graph6_body_len(n: usize) -> usize {
    let bits = n as u128 * n.saturating_sub(1) as u128 / 2;
    usize::try_from(bits.div_ceil(6)).unwrap_or(usize::MAX)
}

pub fn decode_graph6(line: &[u8]) -> Result<Graph, CodecError> {
    decode_graph6_with(line, Padding::Strict)
}

pub fn decode_graph6_with(line: &[u8], padding: Padding) -> Result<Graph, CodecError> {
    let line = strip_header(trim_eol(line), GRAPH6_HEADER);
    let (n, head) = decode_size(line)?;
    let body = &line[head..];
    let expected = graph6_body_len(n);
    if body.len() != expected {
        return Err(CodecError::TruncatedRecord {
            expected: head + expected,
            found: line.len(),
        });
    }
    check_printable(body, head)?;
    let mut b = GraphBuilder::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for &byte in body {
        let six = byte - BIAS;
        for bit in (0..6).rev() {
            if k < total {
                if six >> bit & 1 == 1 {
                    b.add_edge(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if six >> bit & 1 == 1 && padding == Padding::Strict {
                return Err(CodecError::InvalidPadding);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Canonical minimal-length graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + graph6_body_len(n));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

pub fn encode_graph6_string(g: &Graph) -> String {
    // Every byte is printable ASCII.
    String::from_utf8(encode_graph6(g)).expect("graph6 is ASCII")
}

/// Decodes a sparse6 record (the leading `:` is required; incremental `;`
/// records are not supported).
pub fn decode_sparse6(line: &[u8]) -> Result<Graph, CodecError> {
    let line = strip_header(trim_eol(line), SPARSE6_HEADER);
    let rest = match line.first() {
        Some(b':') => &line[1..],
        Some(b';') => return Err(CodecError::Unsupported("incremental sparse6".into())),
        Some(_) => return Err(CodecError::Unsupported("sparse6 records start with ':'".into())),
        None => return Err(CodecError::Empty),
    };
    let (n, head) = decode_size(rest)?;
    let body = &rest[head..];
    check_printable(body, head + 1)?;
    let mut k = 0;
    while k < usize::BITS as usize && (n.saturating_sub(1)) >> k != 0 {
        k += 1;
    }
    let mut b = GraphBuilder::new(n);
    let mut bits = body
        .iter()
        .flat_map(|&byte| (0..6).rev().map(move |s| (byte - BIAS) >> s & 1));
    let mut v = 0usize;
    'records: loop {
        let Some(flag) = bits.next() else { break };
        let mut x = 0usize;
        for _ in 0..k {
            match bits.next() {
                Some(bit) => x = x << 1 | bit as usize,
                None => break 'records,
            }
        }
        if flag == 1 {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            b.add_edge_or_loop(x, v);
        }
    }
    Ok(b.build())
}

impl GraphBuilder {
    fn add_edge_or_loop(&mut self, x: usize, v: usize) {
        // Simple graphs only: sparse6 may encode loops, which are dropped.
        if x != v {
            self.add_edge(x, v);
        }
    }
}

/// Decodes one record, choosing sparse6 when it starts with `:`.
pub fn decode_record(line: &[u8], padding: Padding) -> Result<Graph, CodecError> {
    let t = trim_eol(line);
    if t.starts_with(b":") || t.starts_with(SPARSE6_HEADER) {
        decode_sparse6(t)
    } else {
        decode_graph6_with(t, padding)
    }
}

/// Lazily decodes a line-oriented stream of graph6 (or sparse6) records.
///
/// Blank lines and a leading `>>graph6<<` header are skipped. Errors carry the
/// 1-based line number. Under [`ErrorPolicy::Skip`] bad lines are recorded in
/// [`Graph6Stream::diagnostics`] and the stream moves on; under
/// [`ErrorPolicy::Abort`] the first error is yielded and the stream ends.
pub struct Graph6Stream<R> {
    reader: R,
    line_no: usize,
    policy: ErrorPolicy,
    padding: Padding,
    diagnostics: Vec<CodecError>,
    done: bool,
    buf: Vec<u8>,
}

pub fn stream_graph6<R: BufRead>(reader: R) -> Graph6Stream<R> {
    Graph6Stream {
        reader,
        line_no: 0,
        policy: ErrorPolicy::Abort,
        padding: Padding::Strict,
        diagnostics: Vec::new(),
        done: false,
        buf: Vec::new(),
    }
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn policy(mut self, policy: ErrorPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn padding(mut self, padding: Padding) -> Self {
        self.padding = padding;
        self
    }

    pub fn diagnostics(&self) -> &[CodecError] {
        &self.diagnostics
    }

    /// Line number of the most recently read line.
    pub fn line_number(&self) -> usize {
        self.line_no
    }

    /// Next raw record with its line number, without decoding it.
    pub fn next_raw(&mut self) -> Option<Result<(usize, Vec<u8>), CodecError>> {
        loop {
            if self.done {
                return None;
            }
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => {
                    self.done = true;
                    return None;
                }
                Ok(_) => {}
                Err(e) => {
                    self.done = true;
                    return Some(Err(CodecError::Io(e.to_string())));
                }
            }
            self.line_no += 1;
            let mut t = trim_eol(&self.buf);
            if self.line_no == 1 {
                if t.starts_with(GRAPH6_HEADER) {
                    t = &t[GRAPH6_HEADER.len()..];
                }
            }
            if t.is_empty() {
                continue;
            }
            return Some(Ok((self.line_no, t.to_vec())));
        }
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph, CodecError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let (line, raw) = match self.next_raw()? {
                Ok(x) => x,
                Err(e) => return Some(Err(e)),
            };
            match decode_record(&raw, self.padding) {
                Ok(g) => return Some(Ok(g)),
                Err(e) => {
                    let e = e.at_line(line);
                    match self.policy {
                        ErrorPolicy::Skip => self.diagnostics.push(e),
                        ErrorPolicy::Abort => {
                            self.done = true;
                            return Some(Err(e));
                        }
                    }
                }
            }
        }
    }
}
