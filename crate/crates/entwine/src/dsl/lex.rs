//! Lexer for the `.ent` format: identifiers, signed numeric literals,
//! punctuation, `->` arrows, `#` comments. Every token carries its span.

/// Byte/line/column location of a parsed node inside the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    /// 1-based line.
    pub line: usize,
    /// 1-based column.
    pub col: usize,
    /// byte offset of the first character
    pub offset: usize,
    /// byte length
    pub len: usize,
}

impl SourceSpan {
    pub fn join(self, other: SourceSpan) -> SourceSpan {
        let end = (other.offset + other.len).max(self.offset + self.len);
        SourceSpan { line: self.line, col: self.col, offset: self.offset, len: end - self.offset }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    /// Integer or `a/b` literal, kept as written (sign included).
    Number(String),
    Arrow,
    Colon,
    Semi,
    Star,
    Plus,
    Minus,
    LBrace,
    RBrace,
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub span: SourceSpan,
    pub message: String,
}

pub fn lex(text: &str) -> Result<Vec<Token>, LexError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    let span_at = |line: usize, col: usize, offset: usize, len: usize| SourceSpan { line, col, offset, len };
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                i += 1;
                col += 1;
            }
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '{' | '}' | ':' | ';' | '*' | '+' => {
                let kind = match c {
                    '{' => TokenKind::LBrace,
                    '}' => TokenKind::RBrace,
                    ':' => TokenKind::Colon,
                    ';' => TokenKind::Semi,
                    '*' => TokenKind::Star,
                    _ => TokenKind::Plus,
                };
                tokens.push(Token { kind, span: span_at(line, col, i, 1) });
                i += 1;
                col += 1;
            }
            '-' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    tokens.push(Token { kind: TokenKind::Arrow, span: span_at(line, col, i, 2) });
                    i += 2;
                    col += 2;
                } else if i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    let (tok, used) = lex_number(text, i, line, col);
                    tokens.push(tok);
                    i += used;
                    col += used;
                } else {
                    tokens.push(Token { kind: TokenKind::Minus, span: span_at(line, col, i, 1) });
                    i += 1;
                    col += 1;
                }
            }
            c if c.is_ascii_digit() => {
                let (tok, used) = lex_number(text, i, line, col);
                tokens.push(tok);
                i += used;
                col += used;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                tokens.push(Token {
                    kind: TokenKind::Ident(word.to_string()),
                    span: span_at(line, col, start, i - start),
                });
                col += i - start;
            }
            other => {
                return Err(LexError {
                    span: span_at(line, col, i, 1),
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, span: span_at(line, col, bytes.len(), 0) });
    Ok(tokens)
}

fn lex_number(text: &str, start: usize, line: usize, col: usize) -> (Token, usize) {
    let bytes = text.as_bytes();
    let mut i = start;
    if bytes[i] == b'-' {
        i += 1;
    }
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    // rational literal a/b
    if i < bytes.len() && bytes[i] == b'/' && i + 1 < bytes.len() && (bytes[i + 1].is_ascii_digit() || bytes[i + 1] == b'-') {
        i += 1;
        if bytes[i] == b'-' {
            i += 1;
        }
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
    }
    let used = i - start;
    (
        Token {
            kind: TokenKind::Number(text[start..i].to_string()),
            span: SourceSpan { line, col, offset: start, len: used },
        },
        used,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_statements_with_spans() {
        let toks = lex("delta: g0 -> 2 g0*g1; # trailing\n").unwrap();
        let kinds: Vec<&TokenKind> = toks.iter().map(|t| &t.kind).collect();
        assert!(matches!(kinds[0], TokenKind::Ident(w) if w == "delta"));
        assert!(matches!(kinds[1], TokenKind::Colon));
        assert!(matches!(kinds[3], TokenKind::Arrow));
        assert!(matches!(kinds[4], TokenKind::Number(n) if n == "2"));
        assert_eq!(toks[0].span.line, 1);
        assert_eq!(toks[0].span.col, 1);
        assert_eq!(toks[3].span.col, 11);
    }

    #[test]
    fn lexes_rationals_and_negatives() {
        let toks = lex("-3/7 5 -2").unwrap();
        assert!(matches!(&toks[0].kind, TokenKind::Number(n) if n == "-3/7"));
        assert!(matches!(&toks[1].kind, TokenKind::Number(n) if n == "5"));
        assert!(matches!(&toks[2].kind, TokenKind::Number(n) if n == "-2"));
    }

    #[test]
    fn rejects_garbage() {
        let err = lex("delta: @").unwrap_err();
        assert_eq!(err.span.col, 8);
    }
}
