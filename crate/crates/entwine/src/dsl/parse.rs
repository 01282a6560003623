//! Recursive-descent parser for the `.ent` format with spanned diagnostics
//! and statement-level recovery: a malformed statement is reported and
//! skipped, so one pass surfaces several independent errors.

use std::collections::BTreeMap;

use crate::algebra::{Coalgebra, HopfAlgebra};
use crate::entwine::{EntwinedModule, Entwining};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::galois::{GaloisData, PhiFamily};
use crate::lincat::LinCategory;

use super::lex::{lex, SourceSpan, Token, TokenKind};
use super::{
    BlockData, CoactionsBlock, Diagnostic, Document, EntwiningBlock, ModuleBlock, NamedBlock,
    PhiBlock,
};

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl Cursor {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn next(&mut self) -> Token {
        let t = self.peek().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn at_eof(&self) -> bool {
        matches!(self.peek().kind, TokenKind::Eof)
    }

    fn error(&mut self, span: SourceSpan, message: impl Into<String>) {
        self.diags.push(Diagnostic { span, message: message.into() });
    }

    fn expect_ident(&mut self, what: &str) -> Option<(String, SourceSpan)> {
        let t = self.next();
        match t.kind {
            TokenKind::Ident(w) => Some((w, t.span)),
            _ => {
                self.error(t.span, format!("expected {what}"));
                None
            }
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Option<SourceSpan> {
        let t = self.next();
        if std::mem::discriminant(&t.kind) == std::mem::discriminant(&kind) {
            Some(t.span)
        } else {
            self.error(t.span, format!("expected {what}"));
            None
        }
    }

    /// Skips to just past the next `;`, or stops before `}`/EOF.
    fn recover_statement(&mut self) {
        loop {
            match &self.peek().kind {
                TokenKind::Semi => {
                    self.next();
                    return;
                }
                TokenKind::RBrace | TokenKind::Eof => return,
                _ => {
                    self.next();
                }
            }
        }
    }

    /// Skips a whole block body including the closing brace.
    fn recover_block(&mut self) {
        let mut depth = 0usize;
        loop {
            match &self.peek().kind {
                TokenKind::LBrace => {
                    depth += 1;
                    self.next();
                }
                TokenKind::RBrace => {
                    self.next();
                    if depth <= 1 {
                        return;
                    }
                    depth -= 1;
                }
                TokenKind::Eof => return,
                _ => {
                    self.next();
                }
            }
        }
    }

    fn expect_positive_dim(&mut self, field: FieldSpec) -> Option<usize> {
        let t = self.next();
        match &t.kind {
            TokenKind::Number(n) => match n.parse::<i64>() {
                Ok(v) if v >= 0 => Some(v as usize),
                _ => {
                    self.error(t.span, format!("dimension must be a nonnegative integer, got `{n}`"));
                    None
                }
            },
            _ => {
                let _ = field;
                self.error(t.span, "expected a dimension");
                None
            }
        }
    }
}

/// One additive term of a combination: signed coefficient and resolved
/// factor names.
struct Term {
    coeff: Scalar,
    factors: Vec<(String, SourceSpan)>,
    span: SourceSpan,
}

/// Parses `term (+|- term)*` where term is `number? ident (* ident)*` or a
/// bare number.
fn parse_combo(c: &mut Cursor, field: FieldSpec) -> Option<Vec<Term>> {
    let mut terms = Vec::new();
    let mut negate = false;
    loop {
        let t = c.peek().clone();
        let mut coeff = field.one();
        let mut factors = Vec::new();
        let span = t.span;
        match &t.kind {
            TokenKind::Number(n) => {
                c.next();
                match field.parse_scalar(n) {
                    Ok(s) => coeff = s,
                    Err(e) => {
                        c.error(t.span, format!("bad scalar literal: {e}"));
                        return None;
                    }
                }
                while matches!(c.peek().kind, TokenKind::Ident(_)) {
                    let (name, sp) = c.expect_ident("basis name")?;
                    factors.push((name, sp));
                    if matches!(c.peek().kind, TokenKind::Star) {
                        c.next();
                    } else {
                        break;
                    }
                }
            }
            TokenKind::Ident(_) => {
                loop {
                    let (name, sp) = c.expect_ident("basis name")?;
                    factors.push((name, sp));
                    if matches!(c.peek().kind, TokenKind::Star) {
                        c.next();
                    } else {
                        break;
                    }
                }
            }
            _ => {
                c.error(t.span, "expected a term");
                return None;
            }
        }
        if negate {
            coeff = field.neg(&coeff);
        }
        terms.push(Term { coeff, factors, span });
        match &c.peek().kind {
            TokenKind::Plus => {
                c.next();
                negate = false;
            }
            TokenKind::Minus => {
                c.next();
                negate = true;
            }
            _ => break,
        }
    }
    Some(terms)
}

/// Resolves a combination against an ordered list of basis tables and adds
/// it into the given column of a matrix whose rows are indexed row-major by
/// the tables.
fn add_combo_into(
    c: &mut Cursor,
    field: FieldSpec,
    terms: &[Term],
    tables: &[&[String]],
    matrix: &mut Matrix,
    col: usize,
) -> bool {
    let mut ok = true;
    for term in terms {
        if term.factors.is_empty() {
            if !term.coeff.is_zero() {
                c.error(term.span, "expected basis factors in this term");
                ok = false;
            }
            continue;
        }
        if term.factors.len() != tables.len() {
            c.error(
                term.span,
                format!("expected {} tensor factors, found {}", tables.len(), term.factors.len()),
            );
            ok = false;
            continue;
        }
        let mut index = 0usize;
        let mut resolved = true;
        for (k, (name, sp)) in term.factors.iter().enumerate() {
            match tables[k].iter().position(|b| b == name) {
                Some(i) => index = index * tables[k].len() + i,
                None => {
                    c.error(*sp, format!("unknown basis name `{name}`"));
                    resolved = false;
                    break;
                }
            }
        }
        if !resolved {
            ok = false;
            continue;
        }
        let v = field.add(matrix.at(index, col), &term.coeff);
        matrix.set(index, col, v);
    }
    ok
}

/// Resolves a pure-scalar combination (for counits).
fn scalar_combo(c: &mut Cursor, field: FieldSpec, terms: &[Term]) -> Option<Scalar> {
    let mut acc = field.zero();
    for term in terms {
        if !term.factors.is_empty() {
            c.error(term.span, "expected a scalar value");
            return None;
        }
        acc = field.add(&acc, &term.coeff);
    }
    Some(acc)
}

struct EntryTracker {
    seen: BTreeMap<(usize, usize, usize), SourceSpan>,
}

impl EntryTracker {
    fn new() -> Self {
        EntryTracker { seen: BTreeMap::new() }
    }

    fn record(&mut self, c: &mut Cursor, key: (usize, usize, usize), span: SourceSpan, what: &str) {
        if self.seen.insert(key, span).is_some() {
            c.error(span, format!("duplicate {what} entry"));
        }
    }

    fn contains(&self, key: &(usize, usize, usize)) -> bool {
        self.seen.contains_key(key)
    }
}

pub fn parse(text: &str) -> Result<Document, Vec<Diagnostic>> {
    let tokens = match lex(text) {
        Ok(t) => t,
        Err(e) => return Err(vec![Diagnostic { span: e.span, message: e.message }]),
    };
    let mut c = Cursor { tokens, pos: 0, diags: Vec::new() };

    // field declaration first
    let mut field: Option<FieldSpec> = None;
    let mut items: Vec<NamedBlock> = Vec::new();

    while !c.at_eof() {
        let t = c.peek().clone();
        let word = match &t.kind {
            TokenKind::Ident(w) => w.clone(),
            _ => {
                c.error(t.span, "expected a declaration");
                c.next();
                continue;
            }
        };
        match word.as_str() {
            "field" => {
                c.next();
                let spec = parse_field_decl(&mut c);
                if field.is_some() {
                    c.error(t.span, "more than one field declaration");
                } else {
                    field = spec;
                }
            }
            "coalgebra" | "hopf" | "category" | "coactions" | "entwining" | "module" | "phi" => {
                let Some(f) = field else {
                    c.error(t.span, "field declaration must come before any block");
                    c.next();
                    c.recover_block();
                    continue;
                };
                c.next();
                let Some((name, name_span)) = c.expect_ident("block name") else {
                    c.recover_block();
                    continue;
                };
                if items.iter().any(|b| b.name == name) {
                    c.error(name_span, format!("duplicate block name `{name}`"));
                }
                let parsed = match word.as_str() {
                    "coalgebra" => parse_coalgebra(&mut c, f).map(BlockData::Coalgebra),
                    "hopf" => parse_hopf(&mut c, f).map(BlockData::Hopf),
                    "category" => parse_category(&mut c, f).map(BlockData::Category),
                    "coactions" => parse_coactions(&mut c, f, &items).map(BlockData::Coactions),
                    "entwining" => parse_entwining(&mut c, f, &items).map(BlockData::Entwining),
                    "module" => parse_module(&mut c, f, &items).map(BlockData::Module),
                    _ => parse_phi(&mut c, f, &items).map(BlockData::Phi),
                };
                if let Some(data) = parsed {
                    items.push(NamedBlock { name, span: name_span, data });
                }
            }
            other => {
                c.error(t.span, format!("unknown declaration `{other}`"));
                c.next();
                c.recover_statement();
            }
        }
    }

    let Some(field) = field else {
        c.error(SourceSpan { line: 1, col: 1, offset: 0, len: 0 }, "missing field declaration");
        return Err(c.diags);
    };
    if !c.diags.is_empty() {
        return Err(c.diags);
    }
    let mut doc = Document { field, items };
    doc.canonicalize();
    Ok(doc)
}

fn parse_field_decl(c: &mut Cursor) -> Option<FieldSpec> {
    let (word, span) = c.expect_ident("field kind (`rationals` or `gf`)")?;
    let spec = match word.as_str() {
        "rationals" => Some(FieldSpec::Rationals),
        "gf" => {
            let t = c.next();
            match &t.kind {
                TokenKind::Number(n) => match n.parse::<u64>() {
                    Ok(p) => match FieldSpec::prime_field(p) {
                        Ok(f) => Some(f),
                        Err(_) => {
                            c.error(t.span, format!("`{p}` is not prime"));
                            None
                        }
                    },
                    Err(_) => {
                        c.error(t.span, "expected a prime modulus");
                        None
                    }
                },
                _ => {
                    c.error(t.span, "expected a prime modulus");
                    None
                }
            }
        }
        other => {
            c.error(span, format!("unknown field kind `{other}`"));
            None
        }
    };
    c.expect(TokenKind::Semi, "`;`")?;
    spec
}

fn block_open(c: &mut Cursor, dim_keyword: bool, field: FieldSpec) -> Option<(usize, SourceSpan)> {
    if dim_keyword {
        let (kw, sp) = c.expect_ident("`dim`")?;
        if kw != "dim" {
            c.error(sp, "expected `dim`");
            c.recover_block();
            return None;
        }
        let dim = match c.expect_positive_dim(field) {
            Some(d) => d,
            None => {
                c.recover_block();
                return None;
            }
        };
        let sp = c.expect(TokenKind::LBrace, "`{`")?;
        Some((dim, sp))
    } else {
        let sp = c.expect(TokenKind::LBrace, "`{`")?;
        Some((0, sp))
    }
}

fn statement_keyword(c: &mut Cursor) -> Option<(String, SourceSpan)> {
    match &c.peek().kind {
        TokenKind::RBrace => None,
        TokenKind::Eof => None,
        _ => {
            let t = c.next();
            match t.kind {
                TokenKind::Ident(w) => Some((w, t.span)),
                _ => {
                    c.error(t.span, "expected a statement keyword");
                    c.recover_statement();
                    statement_keyword(c)
                }
            }
        }
    }
}

fn close_block(c: &mut Cursor) {
    match &c.peek().kind {
        TokenKind::RBrace => {
            c.next();
        }
        _ => {
            let span = c.peek().span;
            c.error(span, "expected `}`");
            c.recover_block();
        }
    }
}

fn parse_coalgebra(c: &mut Cursor, field: FieldSpec) -> Option<Coalgebra> {
    let (dim, open_span) = block_open(c, true, field)?;
    if dim == 0 {
        c.error(open_span, "a coalgebra must have positive dimension");
    }
    let mut basis: Vec<String> = Vec::new();
    let mut delta = Matrix::zeros(field, dim * dim, dim);
    let mut counit = Matrix::zeros(field, 1, dim);
    let mut tracker = EntryTracker::new();
    let mut counit_tracker = EntryTracker::new();
    while let Some((kw, kw_span)) = statement_keyword(c) {
        match kw.as_str() {
            "basis" => {
                while let TokenKind::Ident(_) = c.peek().kind {
                    let (name, _) = c.expect_ident("basis name")?;
                    basis.push(name);
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
                if basis.len() != dim {
                    c.error(kw_span, format!("expected {dim} basis names, found {}", basis.len()));
                    basis.resize(dim, String::new());
                }
            }
            "delta" | "counit" => {
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((src, src_span)) = c.expect_ident("source basis name") else {
                    c.recover_statement();
                    continue;
                };
                let Some(j) = basis.iter().position(|b| *b == src) else {
                    c.error(src_span, format!("unknown basis name `{src}`"));
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                if kw == "delta" {
                    tracker.record(c, (j, 0, 0), src_span, "comultiplication");
                    add_combo_into(c, field, &terms, &[&basis, &basis], &mut delta, j);
                } else {
                    counit_tracker.record(c, (j, 0, 0), src_span, "counit");
                    if let Some(v) = scalar_combo(c, field, &terms) {
                        counit.set(0, j, v);
                    }
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            other => {
                c.error(kw_span, format!("unknown statement `{other}` in a coalgebra block"));
                c.recover_statement();
            }
        }
    }
    close_block(c);
    for j in 0..dim {
        if !tracker.contains(&(j, 0, 0)) {
            c.error(open_span, format!("missing comultiplication entry for `{}`", basis.get(j).cloned().unwrap_or_default()));
        }
        if !counit_tracker.contains(&(j, 0, 0)) {
            c.error(open_span, format!("missing counit entry for `{}`", basis.get(j).cloned().unwrap_or_default()));
        }
    }
    if dim == 0 {
        return None;
    }
    Some(Coalgebra::new(field, dim, delta, counit, basis))
}

fn parse_hopf(c: &mut Cursor, field: FieldSpec) -> Option<HopfAlgebra> {
    let (dim, open_span) = block_open(c, true, field)?;
    let mut basis: Vec<String> = Vec::new();
    let mut delta = Matrix::zeros(field, dim * dim, dim);
    let mut counit = Matrix::zeros(field, 1, dim);
    let mut mult = Matrix::zeros(field, dim, dim * dim);
    let mut unit = Matrix::zeros(field, dim, 1);
    let mut antipode = Matrix::zeros(field, dim, dim);
    let mut seen_unit = false;
    let mut delta_seen = EntryTracker::new();
    let mut counit_seen = EntryTracker::new();
    let mut mult_seen = EntryTracker::new();
    let mut antipode_seen = EntryTracker::new();
    while let Some((kw, kw_span)) = statement_keyword(c) {
        match kw.as_str() {
            "basis" => {
                while let TokenKind::Ident(_) = c.peek().kind {
                    let (name, _) = c.expect_ident("basis name")?;
                    basis.push(name);
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
                if basis.len() != dim {
                    c.error(kw_span, format!("expected {dim} basis names, found {}", basis.len()));
                    basis.resize(dim, String::new());
                }
            }
            "delta" | "counit" | "antipode" => {
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((src, src_span)) = c.expect_ident("source basis name") else {
                    c.recover_statement();
                    continue;
                };
                let Some(j) = basis.iter().position(|b| *b == src) else {
                    c.error(src_span, format!("unknown basis name `{src}`"));
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                match kw.as_str() {
                    "delta" => {
                        delta_seen.record(c, (j, 0, 0), src_span, "comultiplication");
                        add_combo_into(c, field, &terms, &[&basis, &basis], &mut delta, j);
                    }
                    "counit" => {
                        counit_seen.record(c, (j, 0, 0), src_span, "counit");
                        if let Some(v) = scalar_combo(c, field, &terms) {
                            counit.set(0, j, v);
                        }
                    }
                    _ => {
                        antipode_seen.record(c, (j, 0, 0), src_span, "antipode");
                        add_combo_into(c, field, &terms, &[&basis], &mut antipode, j);
                    }
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "mult" => {
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((a, a_span)) = c.expect_ident("left factor") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Star, "`*`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((b, b_span)) = c.expect_ident("right factor") else {
                    c.recover_statement();
                    continue;
                };
                let (Some(i), Some(j)) = (
                    basis.iter().position(|x| *x == a),
                    basis.iter().position(|x| *x == b),
                ) else {
                    c.error(a_span.join(b_span), "unknown basis name in product");
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                mult_seen.record(c, (i, j, 0), a_span, "multiplication");
                add_combo_into(c, field, &terms, &[&basis], &mut mult, i * dim + j);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "unit" => {
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                if seen_unit {
                    c.error(kw_span, "duplicate unit entry");
                }
                seen_unit = true;
                add_combo_into(c, field, &terms, &[&basis], &mut unit, 0);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            other => {
                c.error(kw_span, format!("unknown statement `{other}` in a hopf block"));
                c.recover_statement();
            }
        }
    }
    close_block(c);
    for j in 0..dim {
        for (tracker, what) in [
            (&delta_seen, "comultiplication"),
            (&counit_seen, "counit"),
            (&antipode_seen, "antipode"),
        ] {
            if !tracker.contains(&(j, 0, 0)) {
                c.error(open_span, format!("missing {what} entry for `{}`", basis[j]));
            }
        }
        for i in 0..dim {
            if !mult_seen.contains(&(j, i, 0)) {
                c.error(
                    open_span,
                    format!("missing multiplication entry for `{}*{}`", basis[j], basis[i]),
                );
            }
        }
    }
    if !seen_unit {
        c.error(open_span, "missing unit entry");
    }
    let coalgebra = Coalgebra::new(field, dim, delta, counit, basis);
    Some(HopfAlgebra { coalgebra, mult, unit, antipode })
}

fn parse_category(c: &mut Cursor, field: FieldSpec) -> Option<LinCategory> {
    c.expect(TokenKind::LBrace, "`{`")?;
    let mut objects: Vec<String> = Vec::new();
    let mut hom_dims: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut hom_basis: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    struct RawCompose {
        x: usize,
        y: usize,
        z: usize,
        g: String,
        f: String,
        span: SourceSpan,
        terms: Vec<Term>,
    }
    let mut compose_raw: Vec<RawCompose> = Vec::new();
    let mut identity_raw: Vec<(usize, Vec<Term>, SourceSpan)> = Vec::new();
    let mut open_span = None;
    while let Some((kw, kw_span)) = statement_keyword(c) {
        open_span.get_or_insert(kw_span);
        match kw.as_str() {
            "objects" => {
                while let TokenKind::Ident(_) = c.peek().kind {
                    let (name, sp) = c.expect_ident("object name")?;
                    if objects.contains(&name) {
                        c.error(sp, format!("duplicate object `{name}`"));
                    } else {
                        objects.push(name);
                    }
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "hom" => {
                let Some((x, y)) = parse_object_pair(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some((dk, dk_span)) = c.expect_ident("`dim`") else {
                    c.recover_statement();
                    continue;
                };
                if dk != "dim" {
                    c.error(dk_span, "expected `dim`");
                    c.recover_statement();
                    continue;
                }
                let Some(dim) = c.expect_positive_dim(field) else {
                    c.recover_statement();
                    continue;
                };
                let Some((bk, bk_span)) = c.expect_ident("`basis`") else {
                    c.recover_statement();
                    continue;
                };
                if bk != "basis" {
                    c.error(bk_span, "expected `basis`");
                    c.recover_statement();
                    continue;
                }
                let mut names = Vec::new();
                while let TokenKind::Ident(_) = c.peek().kind {
                    let (name, _) = c.expect_ident("basis name")?;
                    names.push(name);
                }
                if names.len() != dim {
                    c.error(bk_span, format!("expected {dim} basis names, found {}", names.len()));
                    names.resize(dim, String::new());
                }
                if hom_dims.insert((x, y), dim).is_some() {
                    c.error(kw_span, "duplicate hom declaration");
                }
                hom_basis.insert((x, y), names);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "compose" => {
                let Some((x, _)) = parse_object(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some((y, _)) = parse_object(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some((z, _)) = parse_object(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((gname, g_span)) = c.expect_ident("outer factor") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Star, "`*`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((fname, _)) = c.expect_ident("inner factor") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                compose_raw.push(RawCompose { x, y, z, g: gname, f: fname, span: g_span, terms });
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "identity" => {
                let Some((x, x_span)) = parse_object(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                identity_raw.push((x, terms, x_span));
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            other => {
                c.error(kw_span, format!("unknown statement `{other}` in a category block"));
                c.recover_statement();
            }
        }
    }
    close_block(c);
    let n = objects.len();
    if n == 0 {
        return None;
    }
    let empty: Vec<String> = Vec::new();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| *hom_dims.get(&(x, y)).unwrap_or(&0)).collect()).collect();
    let bases: Vec<Vec<Vec<String>>> = (0..n)
        .map(|x| (0..n).map(|y| hom_basis.get(&(x, y)).unwrap_or(&empty).clone()).collect())
        .collect();
    let mut compose =
        vec![vec![vec![Matrix::zeros(field, 0, 0); n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                compose[x][y][z] = Matrix::zeros(field, dims[x][z], dims[y][z] * dims[x][y]);
            }
        }
    }
    let mut compose_seen = EntryTracker::new();
    for raw in compose_raw {
        let (x, y, z) = (raw.x, raw.y, raw.z);
        let gi = bases[y][z].iter().position(|b| *b == raw.g);
        let fi = bases[x][y].iter().position(|b| *b == raw.f);
        let (Some(gi), Some(fi)) = (gi, fi) else {
            c.error(raw.span, "unknown hom basis name in composition");
            continue;
        };
        let col = gi * dims[x][y] + fi;
        compose_seen.record(c, (x * n * n + y * n + z, gi, fi), raw.span, "composition");
        let table: &[String] = &bases[x][z];
        add_combo_into(c, field, &raw.terms, &[table], &mut compose[x][y][z], col);
    }
    let mut identities = vec![Matrix::zeros(field, 0, 0); n];
    for x in 0..n {
        identities[x] = Matrix::zeros(field, dims[x][x], 1);
    }
    let mut id_seen = vec![false; n];
    for (x, terms, span) in identity_raw {
        if id_seen[x] {
            c.error(span, "duplicate identity entry");
        }
        id_seen[x] = true;
        let table: &[String] = &bases[x][x];
        add_combo_into(c, field, &terms, &[table], &mut identities[x], 0);
    }
    let fallback = SourceSpan { line: 1, col: 1, offset: 0, len: 0 };
    for x in 0..n {
        if !id_seen[x] {
            c.error(open_span.unwrap_or(fallback), format!("missing identity entry for object `{}`", objects[x]));
        }
        for y in 0..n {
            for z in 0..n {
                if dims[y][z] * dims[x][y] == 0 || dims[x][z] == 0 {
                    continue;
                }
                for gi in 0..dims[y][z] {
                    for fi in 0..dims[x][y] {
                        if !compose_seen.contains(&(x * n * n + y * n + z, gi, fi)) {
                            c.error(
                                open_span.unwrap_or(fallback),
                                format!(
                                    "missing composition entry `{}*{}` at ({},{},{})",
                                    bases[y][z][gi], bases[x][y][fi], objects[x], objects[y], objects[z]
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    Some(LinCategory::new(field, objects, dims, compose, identities, bases))
}

fn parse_object(c: &mut Cursor, objects: &[String]) -> Option<(usize, SourceSpan)> {
    let (name, span) = c.expect_ident("object name")?;
    match objects.iter().position(|o| *o == name) {
        Some(i) => Some((i, span)),
        None => {
            c.error(span, format!("unknown object `{name}`"));
            None
        }
    }
}

fn parse_object_pair(c: &mut Cursor, objects: &[String]) -> Option<(usize, usize)> {
    let (x, _) = parse_object(c, objects)?;
    let (y, _) = parse_object(c, objects)?;
    Some((x, y))
}

fn find_category<'a>(
    c: &mut Cursor,
    items: &'a [NamedBlock],
    name: &str,
    span: SourceSpan,
) -> Option<&'a LinCategory> {
    for b in items {
        if b.name == name {
            if let BlockData::Category(cat) = &b.data {
                return Some(cat);
            }
        }
    }
    c.error(span, format!("unresolved category reference `{name}`"));
    None
}

fn find_coalgebra<'a>(
    c: &mut Cursor,
    items: &'a [NamedBlock],
    name: &str,
    span: SourceSpan,
) -> Option<&'a Coalgebra> {
    for b in items {
        if b.name == name {
            match &b.data {
                BlockData::Coalgebra(co) => return Some(co),
                BlockData::Hopf(h) => return Some(&h.coalgebra),
                _ => {}
            }
        }
    }
    c.error(span, format!("unresolved coalgebra reference `{name}`"));
    None
}

/// Parses the shared `category D; coalgebra C;` preamble and the
/// `KEY X Y: lhs -> combo;` statements of coaction-like blocks.
struct PairMapBlock {
    category: String,
    coalgebra: String,
    cat: LinCategory,
    coalg: Coalgebra,
    /// raw statements: (x, y, lhs tokens resolved later, terms, span)
    rows: Vec<(usize, usize, Vec<(String, SourceSpan)>, Vec<Term>, SourceSpan)>,
}

fn parse_pair_map_block(
    c: &mut Cursor,
    field: FieldSpec,
    items: &[NamedBlock],
    key: &str,
    lhs_arity: usize,
) -> Option<PairMapBlock> {
    c.expect(TokenKind::LBrace, "`{`")?;
    let mut category: Option<(String, LinCategory)> = None;
    let mut coalgebra: Option<(String, Coalgebra)> = None;
    let mut rows = Vec::new();
    while let Some((kw, kw_span)) = statement_keyword(c) {
        match kw.as_str() {
            "category" => {
                let Some((name, span)) = c.expect_ident("category name") else {
                    c.recover_statement();
                    continue;
                };
                if let Some(cat) = find_category(c, items, &name, span) {
                    category = Some((name, cat.clone()));
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "coalgebra" => {
                let Some((name, span)) = c.expect_ident("coalgebra name") else {
                    c.recover_statement();
                    continue;
                };
                if let Some(co) = find_coalgebra(c, items, &name, span) {
                    coalgebra = Some((name, co.clone()));
                }
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            k if k == key => {
                let Some((cat_ref, _)) = &category else {
                    c.error(kw_span, "category reference must come first");
                    c.recover_statement();
                    continue;
                };
                let _ = cat_ref;
                let objects = &category.as_ref().unwrap().1.objects;
                let Some((x, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some((y, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let mut lhs = Vec::new();
                let mut bad = false;
                for k in 0..lhs_arity {
                    if k > 0 && c.expect(TokenKind::Star, "`*`").is_none() {
                        bad = true;
                        break;
                    }
                    match c.expect_ident("basis name") {
                        Some(pair) => lhs.push(pair),
                        None => {
                            bad = true;
                            break;
                        }
                    }
                }
                if bad {
                    c.recover_statement();
                    continue;
                }
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                rows.push((x, y, lhs, terms, kw_span));
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            other => {
                c.error(kw_span, format!("unknown statement `{other}` in a {key} block"));
                c.recover_statement();
            }
        }
    }
    close_block(c);
    let (category, cat) = category?;
    let (coalgebra, coalg) = coalgebra?;
    Some(PairMapBlock { category, coalgebra, cat, coalg, rows })
}

fn parse_coactions(c: &mut Cursor, field: FieldSpec, items: &[NamedBlock]) -> Option<CoactionsBlock> {
    let raw = parse_pair_map_block(c, field, items, "rho", 1)?;
    let cat = raw.cat;
    let coalg = raw.coalg;
    let n = cat.n_objects();
    let dc = coalg.dim;
    let mut coactions = vec![vec![Matrix::zeros(field, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            coactions[x][y] = Matrix::zeros(field, cat.hom(x, y) * dc, cat.hom(x, y));
        }
    }
    let mut seen = EntryTracker::new();
    for (x, y, lhs, terms, span) in raw.rows {
        let fname = &lhs[0].0;
        let Some(fi) = cat.hom_basis[x][y].iter().position(|b| b == fname) else {
            c.error(lhs[0].1, format!("unknown hom basis name `{fname}`"));
            continue;
        };
        seen.record(c, (x * n + y, fi, 0), span, "coaction");
        let hom_table: &[String] = &cat.hom_basis[x][y];
        let co_table: &[String] = &coalg.basis;
        add_combo_into(c, field, &terms, &[hom_table, co_table], &mut coactions[x][y], fi);
    }
    let fallback = SourceSpan { line: 1, col: 1, offset: 0, len: 0 };
    for x in 0..n {
        for y in 0..n {
            for fi in 0..cat.hom(x, y) {
                if !seen.contains(&(x * n + y, fi, 0)) {
                    c.error(
                        fallback,
                        format!(
                            "missing coaction entry for `{}` at ({},{})",
                            cat.hom_basis[x][y][fi], cat.objects[x], cat.objects[y]
                        ),
                    );
                }
            }
        }
    }
    Some(CoactionsBlock {
        category: raw.category,
        coalgebra: raw.coalgebra,
        data: GaloisData { cat, coalg, coactions },
    })
}

fn parse_entwining(c: &mut Cursor, field: FieldSpec, items: &[NamedBlock]) -> Option<EntwiningBlock> {
    let raw = parse_pair_map_block(c, field, items, "psi", 2)?;
    let cat = raw.cat;
    let coalg = raw.coalg;
    let n = cat.n_objects();
    let dc = coalg.dim;
    let mut psi = vec![vec![Matrix::zeros(field, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            psi[x][y] = Matrix::zeros(field, cat.hom(x, y) * dc, dc * cat.hom(x, y));
        }
    }
    let mut seen = EntryTracker::new();
    for (x, y, lhs, terms, span) in raw.rows {
        let cname = &lhs[0].0;
        let fname = &lhs[1].0;
        let Some(ci) = coalg.basis.iter().position(|b| b == cname) else {
            c.error(lhs[0].1, format!("unknown coalgebra basis name `{cname}`"));
            continue;
        };
        let Some(fi) = cat.hom_basis[x][y].iter().position(|b| b == fname) else {
            c.error(lhs[1].1, format!("unknown hom basis name `{fname}`"));
            continue;
        };
        seen.record(c, (x * n + y, ci, fi), span, "entwining");
        let hom_table: &[String] = &cat.hom_basis[x][y];
        let co_table: &[String] = &coalg.basis;
        add_combo_into(
            c,
            field,
            &terms,
            &[hom_table, co_table],
            &mut psi[x][y],
            ci * cat.hom(x, y) + fi,
        );
    }
    let fallback = SourceSpan { line: 1, col: 1, offset: 0, len: 0 };
    for x in 0..n {
        for y in 0..n {
            for ci in 0..dc {
                for fi in 0..cat.hom(x, y) {
                    if !seen.contains(&(x * n + y, ci, fi)) {
                        c.error(
                            fallback,
                            format!(
                                "missing entwining entry for `{}*{}` at ({},{})",
                                coalg.basis[ci], cat.hom_basis[x][y][fi], cat.objects[x], cat.objects[y]
                            ),
                        );
                    }
                }
            }
        }
    }
    Some(EntwiningBlock {
        category: raw.category,
        coalgebra: raw.coalgebra,
        entwining: Entwining { cat, coalg, psi },
    })
}

fn parse_module(c: &mut Cursor, field: FieldSpec, items: &[NamedBlock]) -> Option<ModuleBlock> {
    c.expect(TokenKind::LBrace, "`{`")?;
    let mut ent: Option<(String, Entwining)> = None;
    let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
    let mut bases: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut action_rows = Vec::new();
    let mut coaction_rows = Vec::new();
    while let Some((kw, kw_span)) = statement_keyword(c) {
        match kw.as_str() {
            "entwining" => {
                let Some((name, span)) = c.expect_ident("entwining name") else {
                    c.recover_statement();
                    continue;
                };
                let mut found = None;
                for b in items {
                    if b.name == name {
                        if let BlockData::Entwining(e) = &b.data {
                            found = Some((name.clone(), e.entwining.clone()));
                        }
                    }
                }
                if found.is_none() {
                    c.error(span, format!("unresolved entwining reference `{name}`"));
                }
                ent = found.or(ent);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "dim" => {
                let Some((e_ref, _)) = &ent else {
                    c.error(kw_span, "entwining reference must come first");
                    c.recover_statement();
                    continue;
                };
                let _ = e_ref;
                let objects = &ent.as_ref().unwrap().1.cat.objects.clone();
                let Some((x, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some(d) = c.expect_positive_dim(field) else {
                    c.recover_statement();
                    continue;
                };
                dims.insert(x, d);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "basis" => {
                let Some((e_ref, _)) = &ent else {
                    c.error(kw_span, "entwining reference must come first");
                    c.recover_statement();
                    continue;
                };
                let _ = e_ref;
                let objects = &ent.as_ref().unwrap().1.cat.objects.clone();
                let Some((x, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                let mut names = Vec::new();
                while let TokenKind::Ident(_) = c.peek().kind {
                    let (name, _) = c.expect_ident("basis name")?;
                    names.push(name);
                }
                bases.insert(x, names);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "action" => {
                let Some((e_ref, _)) = &ent else {
                    c.error(kw_span, "entwining reference must come first");
                    c.recover_statement();
                    continue;
                };
                let _ = e_ref;
                let objects = &ent.as_ref().unwrap().1.cat.objects.clone();
                let Some((x, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some((y, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((m, m_span)) = c.expect_ident("module basis name") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Star, "`*`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((fmor, f_span)) = c.expect_ident("hom basis name") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                action_rows.push((x, y, m, m_span, fmor, f_span, terms, kw_span));
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "coaction" => {
                let Some((e_ref, _)) = &ent else {
                    c.error(kw_span, "entwining reference must come first");
                    c.recover_statement();
                    continue;
                };
                let _ = e_ref;
                let objects = &ent.as_ref().unwrap().1.cat.objects.clone();
                let Some((x, _)) = parse_object(c, objects) else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((m, m_span)) = c.expect_ident("module basis name") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                coaction_rows.push((x, m, m_span, terms, kw_span));
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            other => {
                c.error(kw_span, format!("unknown statement `{other}` in a module block"));
                c.recover_statement();
            }
        }
    }
    close_block(c);
    let (ent_name, entwining) = ent?;
    let n = entwining.cat.n_objects();
    let dc = entwining.coalg.dim;
    let dims_vec: Vec<usize> = (0..n).map(|x| *dims.get(&x).unwrap_or(&0)).collect();
    let empty: Vec<String> = Vec::new();
    let basis_vec: Vec<Vec<String>> = (0..n)
        .map(|x| {
            let b = bases.get(&x).unwrap_or(&empty).clone();
            if b.len() != dims_vec[x] {
                (0..dims_vec[x]).map(|i| format!("m{i}")).collect()
            } else {
                b
            }
        })
        .collect();
    let mut actions = vec![vec![Matrix::zeros(field, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            actions[x][y] =
                Matrix::zeros(field, dims_vec[x], dims_vec[y] * entwining.cat.hom(x, y));
        }
    }
    let mut rho = (0..n)
        .map(|x| Matrix::zeros(field, dims_vec[x] * dc, dims_vec[x]))
        .collect::<Vec<_>>();
    for (x, y, m, m_span, fmor, f_span, terms, _) in action_rows {
        let Some(mi) = basis_vec[y].iter().position(|b| *b == m) else {
            c.error(m_span, format!("unknown module basis name `{m}`"));
            continue;
        };
        let Some(fi) = entwining.cat.hom_basis[x][y].iter().position(|b| *b == fmor) else {
            c.error(f_span, format!("unknown hom basis name `{fmor}`"));
            continue;
        };
        let table: &[String] = &basis_vec[x];
        add_combo_into(
            c,
            field,
            &terms,
            &[table],
            &mut actions[x][y],
            mi * entwining.cat.hom(x, y) + fi,
        );
    }
    for (x, m, m_span, terms, _) in coaction_rows {
        let Some(mi) = basis_vec[x].iter().position(|b| *b == m) else {
            c.error(m_span, format!("unknown module basis name `{m}`"));
            continue;
        };
        let m_table: &[String] = &basis_vec[x];
        let co_table: &[String] = &entwining.coalg.basis;
        add_combo_into(c, field, &terms, &[m_table, co_table], &mut rho[x], mi);
    }
    let coactions = (0..n)
        .map(|x| crate::algebra::Comodule { dim: dims_vec[x], rho: rho[x].clone() })
        .collect();
    Some(ModuleBlock {
        entwining: ent_name,
        basis: basis_vec,
        module: EntwinedModule {
            module: crate::lincat::RightModule { dims: dims_vec, actions },
            coactions,
        },
    })
}

fn parse_phi(c: &mut Cursor, field: FieldSpec, items: &[NamedBlock]) -> Option<PhiBlock> {
    c.expect(TokenKind::LBrace, "`{`")?;
    let mut coact: Option<(String, GaloisData)> = None;
    let mut rows = Vec::new();
    while let Some((kw, kw_span)) = statement_keyword(c) {
        match kw.as_str() {
            "coactions" => {
                let Some((name, span)) = c.expect_ident("coactions name") else {
                    c.recover_statement();
                    continue;
                };
                let mut found = None;
                for b in items {
                    if b.name == name {
                        if let BlockData::Coactions(g) = &b.data {
                            found = Some((name.clone(), g.data.clone()));
                        }
                    }
                }
                if found.is_none() {
                    c.error(span, format!("unresolved coactions reference `{name}`"));
                }
                coact = found.or(coact);
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            "map" => {
                let Some((g_ref, _)) = &coact else {
                    c.error(kw_span, "coactions reference must come first");
                    c.recover_statement();
                    continue;
                };
                let _ = g_ref;
                let objects = coact.as_ref().unwrap().1.cat.objects.clone();
                let Some((x, _)) = parse_object(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                let Some((y, _)) = parse_object(c, &objects) else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Colon, "`:`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some((cb, cb_span)) = c.expect_ident("coalgebra basis name") else {
                    c.recover_statement();
                    continue;
                };
                if c.expect(TokenKind::Arrow, "`->`").is_none() {
                    c.recover_statement();
                    continue;
                }
                let Some(terms) = parse_combo(c, field) else {
                    c.recover_statement();
                    continue;
                };
                rows.push((x, y, cb, cb_span, terms));
                if c.expect(TokenKind::Semi, "`;`").is_none() {
                    c.recover_statement();
                }
            }
            other => {
                c.error(kw_span, format!("unknown statement `{other}` in a phi block"));
                c.recover_statement();
            }
        }
    }
    close_block(c);
    let (name, g) = coact?;
    let n = g.cat.n_objects();
    let dc = g.coalg.dim;
    let mut maps = vec![vec![Matrix::zeros(field, 0, 0); n]; n];
    for x in 0..n {
        for y in 0..n {
            maps[x][y] = Matrix::zeros(field, g.cat.hom(x, y), dc);
        }
    }
    for (x, y, cb, cb_span, terms) in rows {
        let Some(ci) = g.coalg.basis.iter().position(|b| *b == cb) else {
            c.error(cb_span, format!("unknown coalgebra basis name `{cb}`"));
            continue;
        };
        let table: &[String] = &g.cat.hom_basis[x][y];
        add_combo_into(c, field, &terms, &[table], &mut maps[x][y], ci);
    }
    Some(PhiBlock { coactions: name, family: PhiFamily { maps } })
}
