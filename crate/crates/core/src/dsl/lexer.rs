use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    /// Optionally signed decimal integer, kept as text.
    Int(String),
    Colon,
    Star,
    Plus,
    Eq,
    Slash,
    Arrow,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("number `{s}`"),
            Tok::Colon => "`:`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Arrow => "`->`".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    /// 1-based character column.
    pub col: usize,
}

fn ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.'
}

/// Tokenizes one line, dropping a trailing `#` comment.
pub(crate) fn lex_line(line: &str, lineno: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, message: String| ParseError { kind: ParseErrorKind::Lexical, line: lineno, column: col, message };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let digit_at = |k: usize| chars.get(k).is_some_and(|d| d.is_ascii_digit());
        let tok = if ident_start(c) {
            let start = i;
            while i < chars.len()
                && (ident_char(chars[i])
                    || (chars[i] == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_alphanumeric())))
            {
                i += 1;
            }
            out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), col });
            continue;
        } else if c.is_ascii_digit() || (c == '-' && digit_at(i + 1)) {
            let start = i;
            i += 1;
            while digit_at(i) {
                i += 1;
            }
            if chars.get(i) == Some(&'.') || chars.get(i).is_some_and(|d| d.is_ascii_alphabetic()) {
                return Err(err(i + 1, format!("malformed number near `{}`", chars[start..=i].iter().collect::<String>())));
            }
            out.push(Spanned { tok: Tok::Int(chars[start..i].iter().collect()), col });
            continue;
        } else {
            match c {
                ':' => Tok::Colon,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '=' => Tok::Eq,
                '/' => Tok::Slash,
                '-' if chars.get(i + 1) == Some(&'>') => {
                    i += 1;
                    Tok::Arrow
                }
                _ => return Err(err(col, format!("unexpected character `{c}`"))),
            }
        };
        i += 1;
        out.push(Spanned { tok, col });
    }
    Ok(out)
}
