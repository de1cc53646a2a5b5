//! Line-oriented text interchange format for Hopf algebras and twist maps.
//!
//! ```text
//! hopfpar-format 1
//! begin hopf
//! field Q                      # or F_p
//! dim 2
//! labels 1 g                   # percent-encoded, whitespace separated
//! unit 1 0
//! counit 1 1
//! mult 2                       # number of nonzero entries
//! 0 0 0 1                      # i j k c  means  e_i e_j ∋ c e_k
//! 1 1 0 1
//! comult 2
//! 0 0 0 1                      # k i j c  means  Δ(e_k) ∋ c e_i ⊗ e_j
//! 1 1 1 1
//! antipode                     # dense, one row per line
//! 1 0
//! 0 1
//! end hopf
//! ```
//!
//! A twist document wraps two `hopf` blocks (tagged `h` and `u`) and the
//! dense matrix of `R : H ⊗ U → U ⊗ H` between `begin twist` and `end twist`.
//! Writing is canonical, so `write ∘ read ∘ write = write` byte for byte.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};
use crate::linalg::{Matrix, Vector};
use crate::smash::TwistMap;
use std::fmt::Write as _;

pub const FORMAT_HEADER: &str = "hopfpar-format 1";

/// A parsed interchange document.
#[derive(Clone, Debug)]
pub enum Document {
    Hopf(HopfData),
    Twist(TwistMap),
}

/// `Q`, `q`, `0`, `F_p`, `fp:p` or a bare prime.
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let bad = |m: String| Error::Parse {
        line: 1,
        column: 1,
        message: m,
    };
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::rationals());
    }
    let digits = t
        .strip_prefix("F_")
        .or_else(|| t.strip_prefix("fp:"))
        .or_else(|| t.strip_prefix("Fp:"))
        .unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(format!("invalid field {s:?}")));
    }
    let c: u64 = digits.parse().map_err(|_| bad(format!("field characteristic out of range in {s:?}")))?;
    FieldSpec::with_characteristic(c).map_err(|e| bad(e.to_string()))
}

fn encode_label(s: &str) -> String {
    if s.is_empty() {
        return "%".into();
    }
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '%' | '#' => write!(out, "%{:02X}", ch as u32).unwrap(),
            c if c.is_whitespace() || c.is_control() => {
                let mut buf = [0u8; 4];
                for b in c.encode_utf8(&mut buf).bytes() {
                    write!(out, "%{b:02X}").unwrap();
                }
            }
            c => out.push(c),
        }
    }
    out
}

fn decode_label(s: &str) -> Option<String> {
    if s == "%" {
        return Some(String::new());
    }
    let bytes = s.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = s.get(i + 1..i + 3)?;
            out.push(u8::from_str_radix(hex, 16).ok()?);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).ok()
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_hopf_block(out: &mut String, tag: Option<&str>, h: &HopfData) {
    let n = h.dim();
    match tag {
        Some(t) => writeln!(out, "begin hopf {t}").unwrap(),
        None => writeln!(out, "begin hopf").unwrap(),
    }
    writeln!(out, "field {}", h.field()).unwrap();
    writeln!(out, "dim {n}").unwrap();
    let labels: Vec<String> = h.labels().iter().map(|l| encode_label(l)).collect();
    if labels.is_empty() {
        writeln!(out, "labels").unwrap();
    } else {
        writeln!(out, "labels {}", labels.join(" ")).unwrap();
    }
    writeln!(out, "unit {}", join(h.one().as_slice())).unwrap();
    writeln!(out, "counit {}", join(h.coalgebra().counit())).unwrap();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.algebra().basis_product(i, j) {
                if !c.is_zero() {
                    entries.push(format!("{i} {j} {k} {c}"));
                }
            }
        }
    }
    writeln!(out, "mult {}", entries.len()).unwrap();
    for e in &entries {
        writeln!(out, "{e}").unwrap();
    }
    entries.clear();
    for k in 0..n {
        for (i, j, c) in h.coproduct_terms(k) {
            entries.push(format!("{k} {i} {j} {c}"));
        }
    }
    writeln!(out, "comult {}", entries.len()).unwrap();
    for e in &entries {
        writeln!(out, "{e}").unwrap();
    }
    writeln!(out, "antipode").unwrap();
    for i in 0..n {
        writeln!(out, "{}", join(h.antipode().row(i))).unwrap();
    }
    writeln!(out, "end hopf").unwrap();
}

/// Canonical text for a Hopf algebra.
pub fn write_hopf(h: &HopfData) -> String {
    let mut out = String::new();
    writeln!(out, "{FORMAT_HEADER}").unwrap();
    write_hopf_block(&mut out, None, h);
    out
}

/// Canonical text for a twist map and its two sides.
pub fn write_twist(r: &TwistMap) -> String {
    let mut out = String::new();
    writeln!(out, "{FORMAT_HEADER}").unwrap();
    writeln!(out, "begin twist").unwrap();
    write_hopf_block(&mut out, Some("h"), r.h_side());
    write_hopf_block(&mut out, Some("u"), r.u_side());
    let m = r.map();
    writeln!(out, "matrix {} {}", m.rows(), m.cols()).unwrap();
    for i in 0..m.rows() {
        writeln!(out, "{}", join(m.row(i))).unwrap();
    }
    writeln!(out, "end twist").unwrap();
    out
}

pub fn write_document(doc: &Document) -> String {
    match doc {
        Document::Hopf(h) => write_hopf(h),
        Document::Twist(r) => write_twist(r),
    }
}

#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Line<'a> {
    number: usize,
    toks: Vec<Tok<'a>>,
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

fn err_at(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut last_line = 1;
        for (idx, raw) in src.lines().enumerate() {
            last_line = idx + 1;
            let body = raw.split('#').next().unwrap_or("");
            let mut toks = Vec::new();
            let mut start = None;
            for (b, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(b),
                    (true, Some(s)) => {
                        toks.push(Tok {
                            text: &body[s..b],
                            line: idx + 1,
                            column: body[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            if !toks.is_empty() {
                lines.push(Line { number: idx + 1, toks });
            }
        }
        Parser { lines, pos: 0, last_line }
    }

    fn next_line(&mut self, what: &str) -> Result<&Line<'a>> {
        match self.lines.get(self.pos) {
            Some(_) => {
                self.pos += 1;
                Ok(&self.lines[self.pos - 1])
            }
            None => Err(err_at(self.last_line + 1, 1, format!("unexpected end of input, expected {what}"))),
        }
    }

    /// A line starting with `keyword`; returns the remaining tokens.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, Vec<Tok<'a>>)> {
        let line = self.next_line(keyword)?;
        let first = line.toks[0];
        if first.text != keyword {
            return Err(err_at(first.line, first.column, format!("expected {keyword:?}, found {:?}", first.text)));
        }
        Ok((line.number, line.toks[1..].to_vec()))
    }

    fn exact_line(&mut self, words: &[&str]) -> Result<()> {
        let (number, rest) = self.keyword(words[0])?;
        for (i, w) in words[1..].iter().enumerate() {
            match rest.get(i) {
                Some(t) if t.text == *w => {}
                Some(t) => return Err(err_at(t.line, t.column, format!("expected {w:?}, found {:?}", t.text))),
                None => return Err(err_at(number, 1, format!("expected {:?}", words.join(" ")))),
            }
        }
        if let Some(t) = rest.get(words.len() - 1) {
            return Err(err_at(t.line, t.column, format!("unexpected token {:?}", t.text)));
        }
        Ok(())
    }
}

fn exactly<'a>(number: usize, toks: &[Tok<'a>], n: usize, what: &str) -> Result<()> {
    if toks.len() > n {
        let t = toks[n];
        return Err(err_at(t.line, t.column, format!("unexpected token {:?} in {what}", t.text)));
    }
    if toks.len() < n {
        let column = toks.last().map_or(1, |t| t.column + t.text.chars().count());
        return Err(err_at(number, column, format!("{what} needs {n} entries, found {}", toks.len())));
    }
    Ok(())
}

/// Caps sizes so hostile input cannot request huge allocations.
const MAX_DIM: usize = 4096;

fn usize_tok(t: Tok<'_>, bound: usize) -> Result<usize> {
    let v: usize = t
        .text
        .parse()
        .map_err(|_| err_at(t.line, t.column, format!("expected an index, found {:?}", t.text)))?;
    if v >= bound {
        return Err(err_at(t.line, t.column, format!("index {v} out of range (< {bound})")));
    }
    Ok(v)
}

fn scalar_tok(field: FieldSpec, t: Tok<'_>) -> Result<Scalar> {
    field.parse_scalar(t.text).map_err(|_| err_at(t.line, t.column, format!("invalid scalar {:?}", t.text)))
}

fn scalars(field: FieldSpec, number: usize, toks: &[Tok<'_>], n: usize, what: &str) -> Result<Vector> {
    exactly(number, toks, n, what)?;
    toks.iter().map(|&t| scalar_tok(field, t)).collect()
}

fn parse_hopf_block(p: &mut Parser<'_>, tag: Option<&str>) -> Result<HopfData> {
    match tag {
        Some(t) => p.exact_line(&["begin", "hopf", t])?,
        None => p.exact_line(&["begin", "hopf"])?,
    }
    let (number, rest) = p.keyword("field")?;
    exactly(number, &rest, 1, "field")?;
    let field = parse_field(rest[0].text).map_err(|e| match e {
        Error::Parse { message, .. } => err_at(rest[0].line, rest[0].column, message),
        other => other,
    })?;
    let (number, rest) = p.keyword("dim")?;
    exactly(number, &rest, 1, "dim")?;
    let n = usize_tok(rest[0], MAX_DIM + 1)?;
    if n == 0 {
        return Err(err_at(rest[0].line, rest[0].column, "dimension must be positive"));
    }
    let (number, rest) = p.keyword("labels")?;
    exactly(number, &rest, n, "labels")?;
    let labels = rest
        .iter()
        .map(|t| decode_label(t.text).ok_or_else(|| err_at(t.line, t.column, format!("bad label encoding {:?}", t.text))))
        .collect::<Result<Vec<_>>>()?;
    let (number, rest) = p.keyword("unit")?;
    let unit = scalars(field, number, &rest, n, "unit")?;
    let (number, rest) = p.keyword("counit")?;
    let counit = scalars(field, number, &rest, n, "counit")?;

    let (number, rest) = p.keyword("mult")?;
    exactly(number, &rest, 1, "mult")?;
    let count = usize_tok(rest[0], n * n * n + 1)?;
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..count {
        let line = p.next_line("a multiplication entry")?;
        let (number, toks) = (line.number, line.toks.clone());
        exactly(number, &toks, 4, "multiplication entry")?;
        let (i, j, k) = (usize_tok(toks[0], n)?, usize_tok(toks[1], n)?, usize_tok(toks[2], n)?);
        if !seen.insert((i, j, k)) {
            return Err(err_at(toks[0].line, toks[0].column, format!("duplicate entry {i} {j} {k}")));
        }
        mult.set(k, i * n + j, scalar_tok(field, toks[3])?);
    }
    let (number, rest) = p.keyword("comult")?;
    exactly(number, &rest, 1, "comult")?;
    let count = usize_tok(rest[0], n * n * n + 1)?;
    let mut comult = Matrix::zeros(field, n * n, n);
    seen.clear();
    for _ in 0..count {
        let line = p.next_line("a comultiplication entry")?;
        let (number, toks) = (line.number, line.toks.clone());
        exactly(number, &toks, 4, "comultiplication entry")?;
        let (k, i, j) = (usize_tok(toks[0], n)?, usize_tok(toks[1], n)?, usize_tok(toks[2], n)?);
        if !seen.insert((k, i, j)) {
            return Err(err_at(toks[0].line, toks[0].column, format!("duplicate entry {k} {i} {j}")));
        }
        comult.set(i * n + j, k, scalar_tok(field, toks[3])?);
    }
    p.exact_line(&["antipode"])?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let line = p.next_line("an antipode row")?;
        let (number, toks) = (line.number, line.toks.clone());
        rows.push(scalars(field, number, &toks, n, "antipode row")?);
    }
    let antipode = Matrix::from_rows(field, rows, n);
    p.exact_line(&["end", "hopf"])?;
    let algebra = AlgebraData::new(field, n, &mult, unit)?;
    let coalgebra = CoalgebraData::new(field, n, comult, counit)?;
    HopfData::new(labels, algebra, coalgebra, antipode)
}

/// Parses a document. Axioms are not verified; call the verifiers.
pub fn parse_document(src: &str) -> Result<Document> {
    let mut p = Parser::new(src);
    let (number, rest) = p.keyword("hopfpar-format")?;
    exactly(number, &rest, 1, "header")?;
    if rest[0].text != "1" {
        return Err(err_at(rest[0].line, rest[0].column, format!("unsupported format version {:?}", rest[0].text)));
    }
    let kind = match p.lines.get(p.pos) {
        Some(line) if line.toks.len() >= 2 && line.toks[0].text == "begin" => line.toks[1],
        Some(line) => {
            let t = line.toks[0];
            return Err(err_at(t.line, t.column, format!("expected \"begin\", found {:?}", t.text)));
        }
        None => return Err(err_at(p.last_line + 1, 1, "unexpected end of input, expected a block")),
    };
    let doc = match kind.text {
        "hopf" => Document::Hopf(parse_hopf_block(&mut p, None)?),
        "twist" => {
            p.exact_line(&["begin", "twist"])?;
            let h = parse_hopf_block(&mut p, Some("h"))?;
            let u = parse_hopf_block(&mut p, Some("u"))?;
            if h.field() != u.field() {
                return Err(err_at(p.lines[p.pos - 1].number, 1, "twist sides over different fields"));
            }
            let (number, rest) = p.keyword("matrix")?;
            exactly(number, &rest, 2, "matrix")?;
            let size = h.dim() * u.dim();
            let rows = usize_tok(rest[0], size + 1)?;
            let cols = usize_tok(rest[1], size + 1)?;
            if rows != size || cols != size {
                return Err(err_at(number, rest[0].column, format!("twist matrix must be {size}x{size}")));
            }
            let field = h.field();
            let mut data = Vec::with_capacity(rows);
            for _ in 0..rows {
                let line = p.next_line("a matrix row")?;
                let (number, toks) = (line.number, line.toks.clone());
                data.push(scalars(field, number, &toks, cols, "matrix row")?);
            }
            p.exact_line(&["end", "twist"])?;
            Document::Twist(TwistMap::new(h, u, Matrix::from_rows(field, data, cols))?)
        }
        other => return Err(err_at(kind.line, kind.column, format!("unknown block {other:?}"))),
    };
    if let Some(line) = p.lines.get(p.pos) {
        let t = line.toks[0];
        return Err(err_at(t.line, t.column, format!("trailing content {:?}", t.text)));
    }
    Ok(doc)
}

/// Parses a document that must hold a Hopf algebra.
pub fn parse_hopf(src: &str) -> Result<HopfData> {
    match parse_document(src)? {
        Document::Hopf(h) => Ok(h),
        Document::Twist(_) => Err(err_at(2, 1, "expected a hopf block, found a twist")),
    }
}
