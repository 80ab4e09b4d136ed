use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(String),
    Sym(&'static str),
    Newline,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

const SYMBOLS: [&str; 17] = ["->", "=>", "=", "[", "]", "(", ")", "{", "}", ",", ";", ":", "+", "-", "*", "/", "^"];

/// Splits a document into tokens; `#` starts a comment running to the end of the line.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (byte, c) = chars[i];
            let column = line[..byte].chars().count() + 1;
            let at = |tok| Token { tok, line: ln + 1, column };
            if c.is_whitespace() {
                i += 1;
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'') {
                    i += 1;
                }
                out.push(at(Tok::Ident(chars[start..i].iter().map(|p| p.1).collect())));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                out.push(at(Tok::Int(chars[start..i].iter().map(|p| p.1).collect())));
            } else if let Some(s) = SYMBOLS.iter().find(|s| line[byte..].starts_with(**s)) {
                out.push(at(Tok::Sym(s)));
                i += s.chars().count();
            } else {
                return Err(Error::Syntax {
                    line: ln + 1,
                    column,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            line: ln + 1,
            column: line.chars().count() + 1,
        });
    }
    Ok(out)
}
