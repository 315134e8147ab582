//! The line-oriented text format for Hopf algebras.
//!
//! ```text
//! hopf-format 1
//! field rational | field cyclotomic <m> | field prime <p>
//! dim <d>
//! basis <name_0> ... <name_{d-1}>
//! unit <d scalars>
//! counit <d scalars>
//! mult <i> <j> <k> <c>        # e_i·e_j += c·e_k
//! comult <i> <j> <k> <c>      # Δ(e_i) += c·e_j⊗e_k
//! antipode <i> <j> <c>        # S(e_i) += c·e_j
//! coradical <d scalars>       # optional, repeated
//! simple <r>                  # optional, followed by r² lines
//! entry <d scalars>           # c_ij in row-major order
//! ```
//!
//! Duplicate structure-constant lines accumulate. `#` starts a comment.
//! Basis names escape `\` as `\\` and whitespace as `\s` / `\t`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, FieldDescriptor, FieldKind, Scalar};
use crate::hopfcore::{DeclaredMatrix, HopfAlgebraData, SparseMap};

pub const HEADER: &str = "hopf-format 1";

fn escape(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for ch in label.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            ' ' => out.push_str("\\s"),
            '\t' => out.push_str("\\t"),
            '#' => out.push_str("\\h"),
            c if c.is_whitespace() => out.push_str("\\s"),
            c => out.push(c),
        }
    }
    if out.is_empty() {
        out.push_str("\\e");
    }
    out
}

fn unescape(s: &str) -> Option<String> {
    let mut out = String::new();
    let mut it = s.chars();
    while let Some(c) = it.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match it.next()? {
            '\\' => out.push('\\'),
            's' => out.push(' '),
            't' => out.push('\t'),
            'h' => out.push('#'),
            'e' => {}
            _ => return None,
        }
    }
    Some(out)
}

pub fn serialize_algebra(h: &HopfAlgebraData) -> String {
    let f = &h.field;
    let d = h.dim;
    let vec = |v: &[Scalar]| v.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "field {f}").unwrap();
    writeln!(out, "dim {d}").unwrap();
    let labels: Vec<String> = h.basis_labels.iter().map(|l| escape(l)).collect();
    writeln!(out, "basis {}", labels.join(" ")).unwrap();
    writeln!(out, "unit {}", vec(&h.unit)).unwrap();
    writeln!(out, "counit {}", vec(&h.counit)).unwrap();
    for ij in 0..d * d {
        for (k, c) in h.mult.col(ij) {
            writeln!(out, "mult {} {} {k} {}", ij / d, ij % d, f.format(c)).unwrap();
        }
    }
    for i in 0..d {
        for (jk, c) in h.comult.col(i) {
            writeln!(out, "comult {i} {} {} {}", jk / d, jk % d, f.format(c)).unwrap();
        }
    }
    for i in 0..d {
        for j in 0..d {
            let c = h.antipode.get(j, i);
            if !f.is_zero(c) {
                writeln!(out, "antipode {i} {j} {}", f.format(c)).unwrap();
            }
        }
    }
    if let Some(vs) = &h.declared_coradical {
        for v in vs {
            writeln!(out, "coradical {}", vec(v)).unwrap();
        }
    }
    for m in &h.basic_matrices {
        writeln!(out, "simple {}", m.size).unwrap();
        for e in &m.entries {
            writeln!(out, "entry {}", vec(e)).unwrap();
        }
    }
    out
}

struct Parser {
    field: Option<FieldDescriptor>,
    dim: Option<usize>,
    labels: Option<Vec<String>>,
    unit: Option<Vec<Scalar>>,
    counit: Option<Vec<Scalar>>,
    mult: Vec<(usize, usize, Scalar)>,
    comult: Vec<(usize, usize, Scalar)>,
    antipode: Vec<(usize, usize, Scalar)>,
    saw_antipode: bool,
    coradical: Vec<Vec<Scalar>>,
    matrices: Vec<DeclaredMatrix>,
    pending: Option<(usize, Vec<Vec<Scalar>>, usize)>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl Parser {
    fn field(&self, line: usize) -> Result<&FieldDescriptor> {
        self.field.as_ref().ok_or_else(|| perr(line, "`field` must come first"))
    }

    fn dim(&self, line: usize) -> Result<usize> {
        self.dim.ok_or_else(|| perr(line, "`dim` must precede this line"))
    }

    fn index(&self, line: usize, s: &str, bound: usize) -> Result<usize> {
        let i: usize = s.parse().map_err(|_| perr(line, format!("bad index `{s}`")))?;
        if i >= bound {
            return Err(perr(line, format!("index {i} out of range (dim {bound})")));
        }
        Ok(i)
    }

    fn scalar(&self, line: usize, s: &str) -> Result<Scalar> {
        self.field(line)?
            .parse_literal(s)
            .map_err(|e| perr(line, e.to_string()))
    }

    fn vector(&self, line: usize, args: &[&str]) -> Result<Vec<Scalar>> {
        let d = self.dim(line)?;
        if args.len() != d {
            return Err(perr(line, format!("expected {d} scalars, found {}", args.len())));
        }
        args.iter().map(|s| self.scalar(line, s)).collect()
    }

    fn expect_args(line: usize, args: &[&str], n: usize, kw: &str) -> Result<()> {
        if args.len() != n {
            return Err(perr(line, format!("`{kw}` takes {n} arguments, found {}", args.len())));
        }
        Ok(())
    }

    fn close_simple(&mut self, line: usize) -> Result<()> {
        if let Some((r, entries, _)) = self.pending.take() {
            if entries.len() != r * r {
                return Err(perr(line, format!("`simple {r}` needs {} entry lines, found {}", r * r, entries.len())));
            }
            self.matrices.push(DeclaredMatrix { size: r, entries });
        }
        Ok(())
    }

    fn line(&mut self, no: usize, kw: &str, args: &[&str]) -> Result<()> {
        if kw != "entry" {
            self.close_simple(no)?;
        }
        match kw {
            "field" => {
                if self.field.is_some() {
                    return Err(perr(no, "duplicate `field`"));
                }
                let kind = match args {
                    ["rational"] => FieldKind::Rational,
                    ["cyclotomic", m] => FieldKind::Cyclotomic(m.parse().map_err(|_| perr(no, "bad cyclotomic order"))?),
                    ["prime", p] => FieldKind::Prime(p.parse().map_err(|_| perr(no, "bad prime"))?),
                    _ => return Err(perr(no, "expected `rational`, `cyclotomic <m>` or `prime <p>`")),
                };
                self.field = Some(FieldDescriptor::from_kind(&kind).map_err(|e| perr(no, e.to_string()))?);
            }
            "dim" => {
                Self::expect_args(no, args, 1, kw)?;
                self.field(no)?;
                let d: usize = args[0].parse().map_err(|_| perr(no, "bad dimension"))?;
                if d == 0 {
                    return Err(perr(no, "dimension must be positive"));
                }
                self.dim = Some(d);
            }
            "basis" => {
                let d = self.dim(no)?;
                if args.len() != d {
                    return Err(perr(no, format!("expected {d} basis names, found {}", args.len())));
                }
                let labels = args
                    .iter()
                    .map(|a| unescape(a).ok_or_else(|| perr(no, format!("bad escape in `{a}`"))))
                    .collect::<Result<_>>()?;
                self.labels = Some(labels);
            }
            "unit" => self.unit = Some(self.vector(no, args)?),
            "counit" => self.counit = Some(self.vector(no, args)?),
            "mult" | "comult" => {
                Self::expect_args(no, args, 4, kw)?;
                let d = self.dim(no)?;
                let i = self.index(no, args[0], d)?;
                let j = self.index(no, args[1], d)?;
                let k = self.index(no, args[2], d)?;
                let c = self.scalar(no, args[3])?;
                if kw == "mult" {
                    self.mult.push((i * d + j, k, c));
                } else {
                    self.comult.push((i, j * d + k, c));
                }
            }
            "antipode" => {
                Self::expect_args(no, args, 3, kw)?;
                let d = self.dim(no)?;
                let i = self.index(no, args[0], d)?;
                let j = self.index(no, args[1], d)?;
                let c = self.scalar(no, args[2])?;
                self.antipode.push((i, j, c));
                self.saw_antipode = true;
            }
            "coradical" => {
                let v = self.vector(no, args)?;
                self.coradical.push(v);
            }
            "simple" => {
                Self::expect_args(no, args, 1, kw)?;
                let r: usize = args[0].parse().map_err(|_| perr(no, "bad block size"))?;
                if r == 0 {
                    return Err(perr(no, "block size must be positive"));
                }
                self.pending = Some((r, Vec::new(), no));
            }
            "entry" => {
                let v = self.vector(no, args)?;
                match &mut self.pending {
                    Some((r, entries, _)) if entries.len() < *r * *r => entries.push(v),
                    Some(_) => return Err(perr(no, "too many `entry` lines for this block")),
                    None => return Err(perr(no, "`entry` outside a `simple` block")),
                }
            }
            _ => return Err(perr(no, format!("unknown keyword `{kw}`"))),
        }
        Ok(())
    }
}

pub fn parse_algebra(text: &str) -> Result<HopfAlgebraData> {
    let mut p = Parser {
        field: None,
        dim: None,
        labels: None,
        unit: None,
        counit: None,
        mult: Vec::new(),
        comult: Vec::new(),
        antipode: Vec::new(),
        saw_antipode: false,
        coradical: Vec::new(),
        matrices: Vec::new(),
        pending: None,
    };
    let mut header_seen = false;
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        last = no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !header_seen {
            if content != HEADER {
                return Err(perr(no, format!("expected `{HEADER}`")));
            }
            header_seen = true;
            continue;
        }
        let mut words = content.split_whitespace();
        let kw = words.next().unwrap();
        let args: Vec<&str> = words.collect();
        p.line(no, kw, &args)?;
    }
    if !header_seen {
        return Err(perr(1, format!("expected `{HEADER}`")));
    }
    p.close_simple(last)?;
    let end = last.max(1);
    let f = p.field.clone().ok_or_else(|| perr(end, "missing `field`"))?;
    let d = p.dim.ok_or_else(|| perr(end, "missing `dim`"))?;
    let labels = p.labels.unwrap_or_else(|| (0..d).map(|i| format!("e{i}")).collect());
    let unit = p.unit.ok_or_else(|| perr(end, "missing `unit`"))?;
    let counit = p.counit.ok_or_else(|| perr(end, "missing `counit`"))?;
    if !p.saw_antipode {
        return Err(Error::Format("antipode required".into()));
    }
    let mut s = ExactMatrix::zeros(&f, d, d);
    for (i, j, c) in &p.antipode {
        s.add_at(*j, *i, c);
    }
    let mut h = HopfAlgebraData::new(
        f.clone(),
        labels,
        SparseMap::from_triples(&f, d * d, d, p.mult),
        unit,
        SparseMap::from_triples(&f, d, d * d, p.comult),
        counit,
        s,
    )?;
    if !p.coradical.is_empty() {
        h.declared_coradical = Some(p.coradical);
    }
    h.basic_matrices = p.matrices;
    Ok(h)
}

pub fn read_algebra(path: &std::path::Path) -> Result<HopfAlgebraData> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const C2: &str = "hopf-format 1
# kC2
field rational
dim 2
basis 1 g
unit 1 0
counit 1 1
mult 0 0 0 1
mult 0 1 1 1
mult 1 0 1 1
mult 1 1 0 1
comult 0 0 0 1
comult 1 1 1 1
antipode 0 0 1
antipode 1 1 1
";

    #[test]
    fn parses_group_algebra() {
        let h = parse_algebra(C2).unwrap();
        assert_eq!(h, corpus::group_algebra_cyclic(&FieldDescriptor::rational(), 2));
    }

    #[test]
    fn duplicates_accumulate() {
        let text = C2.replace("mult 1 1 0 1\n", "mult 1 1 0 1/2\nmult 1 1 0 1/2\n");
        assert_eq!(parse_algebra(&text).unwrap(), parse_algebra(C2).unwrap());
    }

    #[test]
    fn antipode_required() {
        let text: String = C2.lines().filter(|l| !l.starts_with("antipode")).map(|l| format!("{l}\n")).collect();
        assert_eq!(parse_algebra(&text).unwrap_err().to_string(), "antipode required");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = C2.replace("mult 0 1 1 1", "mult 0 5 1 1");
        assert!(matches!(parse_algebra(&text), Err(Error::Parse { line: 9, .. })));
        let text = C2.replace("dim 2", "dim 2\nbogus 1");
        assert!(matches!(parse_algebra(&text), Err(Error::Parse { line: 5, .. })));
        assert!(matches!(parse_algebra("field rational\n"), Err(Error::Parse { line: 1, .. })));
        let text = C2.replace("counit 1 1", "counit 1 1 1");
        assert!(matches!(parse_algebra(&text), Err(Error::Parse { line: 7, .. })));
    }

    #[test]
    fn label_escapes() {
        for l in ["a b", "x\\y", "", "#", "g\tx"] {
            assert_eq!(unescape(&escape(l)).unwrap(), l);
            assert!(!escape(l).contains(char::is_whitespace));
        }
    }

    #[test]
    fn round_trips_small_corpus() {
        for name in ["kC3", "dual-kS3", "T3", "T2-F5", "smash-H4"] {
            let h = corpus::find(name).unwrap().build().unwrap();
            assert_eq!(parse_algebra(&serialize_algebra(&h)).unwrap(), h, "{name}");
        }
    }
}
