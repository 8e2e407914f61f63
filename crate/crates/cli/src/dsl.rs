//! The declaration language: one statement per `;`, `#` or `//` comments.
//!
//! ```text
//! ring R = poly(char=0, vars=[x, y], order=grevlex);
//! ring S = quotient(R, ["x*y"], domain=false);
//! ideal I over R = ["x^2", "y"];
//! module M over R = coker [["x", "y"]];
//! extension E = base S, adjoin [e], relations ["e^2 - e"];
//! sequence P over R = ["x", "y"];
//! complex C over R = koszul ["x", "y"];
//! check split(extension=E) expect "does-not-split";
//! ```

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::ast::{ComplexBody, Decl, Document, Matrix, ModuleBody};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    Str(String),
    Punct(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "string {s:?}"),
            Tok::Punct(c) => write!(f, "`{c}`"),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '\''
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.col = 1;
        } else {
            pos.col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
        } else if c == '#' || (c == '/' && src_peek2(&chars) == Some('/')) {
            while let Some(&d) = chars.peek() {
                if d == '\n' {
                    break;
                }
                chars.next();
                advance(d, &mut pos);
            }
        } else if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !is_ident_char(d) {
                    break;
                }
                s.push(d);
                chars.next();
                advance(d, &mut pos);
            }
            out.push((Tok::Ident(s), start));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                advance(d, &mut pos);
            }
            let n = s.parse().map_err(|_| SyntaxError { pos: start, message: format!("number {s} is too large") })?;
            out.push((Tok::Num(n), start));
        } else if c == '"' {
            chars.next();
            advance(c, &mut pos);
            let mut s = String::new();
            loop {
                match chars.next() {
                    None => return Err(SyntaxError { pos: start, message: "unterminated string".into() }),
                    Some('"') => {
                        advance('"', &mut pos);
                        break;
                    }
                    Some('\\') => {
                        advance('\\', &mut pos);
                        match chars.next() {
                            Some(e @ ('"' | '\\')) => {
                                advance(e, &mut pos);
                                s.push(e);
                            }
                            _ => return Err(SyntaxError { pos, message: "unknown escape in string".into() }),
                        }
                    }
                    Some(d) => {
                        advance(d, &mut pos);
                        s.push(d);
                    }
                }
            }
            out.push((Tok::Str(s), start));
        } else if "=;,[]()".contains(c) {
            chars.next();
            advance(c, &mut pos);
            out.push((Tok::Punct(c), start));
        } else {
            return Err(SyntaxError { pos: start, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

fn src_peek2(chars: &std::iter::Peekable<std::str::Chars<'_>>) -> Option<char> {
    let mut it = chars.clone();
    it.next();
    it.next()
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn fail<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(SyntaxError { pos: self.pos(), message: message.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.0.clone());
        self.at += 1;
        t
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".into(),
        }
    }

    fn punct(&mut self, c: char) -> PResult<()> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(format!("expected `{c}`, found {}", self.found()))
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => self.fail(format!("expected a name, found {}", self.found())),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.at += 1;
                Ok(())
            }
            _ => self.fail(format!("expected `{kw}`, found {}", self.found())),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) && {
            self.at += 1;
            true
        }
    }

    fn number(&mut self) -> PResult<u64> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.at += 1;
                Ok(n)
            }
            _ => self.fail(format!("expected a number, found {}", self.found())),
        }
    }

    fn string(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => self.fail(format!("expected a quoted polynomial, found {}", self.found())),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Parser) -> PResult<T>) -> PResult<Vec<T>> {
        self.punct('[')?;
        let mut out = Vec::new();
        if self.eat_punct(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_punct(']') {
                return Ok(out);
            }
            self.punct(',')?;
        }
    }

    fn strings(&mut self) -> PResult<Vec<String>> {
        self.list(Parser::string)
    }

    fn matrix(&mut self) -> PResult<Matrix> {
        self.list(Parser::strings)
    }

    fn boolean(&mut self) -> PResult<bool> {
        match self.ident()?.as_str() {
            "true" => Ok(true),
            "false" => Ok(false),
            other => self.fail(format!("expected `true` or `false`, found `{other}`")),
        }
    }

    fn usize(&mut self) -> PResult<usize> {
        let n = self.number()?;
        usize::try_from(n).or_else(|_| self.fail("number out of range"))
    }

    fn statement(&mut self) -> PResult<Decl> {
        let kw = self.ident()?;
        let decl = match kw.as_str() {
            "ring" => {
                let name = self.ident()?;
                self.punct('=')?;
                match self.ident()?.as_str() {
                    "poly" => self.poly_ring(name)?,
                    "quotient" => {
                        self.punct('(')?;
                        let parent = self.ident()?;
                        self.punct(',')?;
                        let relations = self.strings()?;
                        let mut domain = false;
                        if self.eat_punct(',') {
                            self.keyword("domain")?;
                            self.punct('=')?;
                            domain = self.boolean()?;
                        }
                        self.punct(')')?;
                        Decl::Quotient { name, parent, relations, domain }
                    }
                    other => return self.fail(format!("expected `poly` or `quotient`, found `{other}`")),
                }
            }
            "ideal" | "sequence" | "module" | "complex" => {
                let name = self.ident()?;
                self.keyword("over")?;
                let over = self.ident()?;
                self.punct('=')?;
                match kw.as_str() {
                    "ideal" => Decl::Ideal { name, over, gens: self.strings()? },
                    "sequence" => Decl::Sequence { name, over, elements: self.strings()? },
                    "module" => Decl::Module { name, over, body: self.module_body()? },
                    _ => Decl::Complex { name, over, body: self.complex_body()? },
                }
            }
            "extension" => {
                let name = self.ident()?;
                self.punct('=')?;
                self.keyword("base")?;
                let base = self.ident()?;
                self.punct(',')?;
                self.keyword("adjoin")?;
                let adjoin = self.list(Parser::ident)?;
                self.punct(',')?;
                self.keyword("relations")?;
                let relations = self.strings()?;
                Decl::Extension { name, base, adjoin, relations }
            }
            "check" => {
                let verb = self.ident()?;
                self.punct('(')?;
                let mut args = BTreeMap::new();
                if !self.eat_punct(')') {
                    loop {
                        let at = self.pos();
                        let key = self.ident()?;
                        self.punct('=')?;
                        let value = match self.next() {
                            Some(Tok::Ident(s)) | Some(Tok::Str(s)) => s,
                            Some(Tok::Num(n)) => n.to_string(),
                            _ => {
                                self.at -= 1;
                                return self.fail(format!("expected a value, found {}", self.found()));
                            }
                        };
                        if args.insert(key.clone(), value).is_some() {
                            return Err(SyntaxError { pos: at, message: format!("argument `{key}` given twice") });
                        }
                        if self.eat_punct(')') {
                            break;
                        }
                        self.punct(',')?;
                    }
                }
                let expect = if self.eat_keyword("expect") { Some(self.string()?) } else { None };
                Decl::Check { verb, args, expect }
            }
            other => {
                self.at -= 1;
                return self.fail(format!("unknown declaration `{other}`"));
            }
        };
        self.punct(';')?;
        Ok(decl)
    }

    fn poly_ring(&mut self, name: String) -> PResult<Decl> {
        self.punct('(')?;
        let (mut characteristic, mut vars, mut order) = (None, None, None);
        loop {
            let key = self.ident()?;
            self.punct('=')?;
            match key.as_str() {
                "char" if characteristic.is_none() => {
                    let n = self.number()?;
                    characteristic = Some(u32::try_from(n).or_else(|_| self.fail("characteristic out of range"))?);
                }
                "vars" if vars.is_none() => vars = Some(self.list(Parser::ident)?),
                "order" if order.is_none() => order = Some(self.ident()?),
                "char" | "vars" | "order" => return self.fail(format!("`{key}` given twice")),
                _ => return self.fail(format!("unknown ring option `{key}`")),
            }
            if self.eat_punct(')') {
                break;
            }
            self.punct(',')?;
        }
        let Some(vars) = vars else { return self.fail("ring needs `vars=[...]`") };
        Ok(Decl::Ring {
            name,
            characteristic: characteristic.unwrap_or(0),
            vars,
            order: order.unwrap_or_else(|| "grevlex".into()),
        })
    }

    fn module_body(&mut self) -> PResult<ModuleBody> {
        match self.ident()?.as_str() {
            "coker" => Ok(ModuleBody::Coker(self.matrix()?)),
            "free" => Ok(ModuleBody::Free(self.usize()?)),
            "cyclic" => Ok(ModuleBody::Cyclic(self.strings()?)),
            other => self.fail(format!("expected `coker`, `free` or `cyclic`, found `{other}`")),
        }
    }

    fn complex_body(&mut self) -> PResult<ComplexBody> {
        match self.ident()?.as_str() {
            "koszul" => Ok(ComplexBody::Koszul(self.strings()?)),
            "maps" => Ok(ComplexBody::Maps(self.list(Parser::matrix)?)),
            "resolution" => {
                let module = self.ident()?;
                let cap = if self.eat_keyword("cap") { Some(self.usize()?) } else { None };
                Ok(ComplexBody::Resolution { module, cap })
            }
            other => self.fail(format!("expected `koszul`, `maps` or `resolution`, found `{other}`")),
        }
    }
}

/// Parses a document, returning each declaration with the position of its first token.
pub fn parse_document(src: &str) -> Result<Vec<(Decl, Pos)>, SyntaxError> {
    let toks = lex(src)?;
    let end = {
        let lines = src.split('\n').count();
        let col = src.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 1;
        Pos { line: lines, col }
    };
    let mut p = Parser { toks, at: 0, end };
    let mut out = Vec::new();
    while p.peek().is_some() {
        let start = p.pos();
        out.push((p.statement()?, start));
    }
    Ok(out)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn strings(items: &[String]) -> String {
    format!("[{}]", items.iter().map(|s| quote(s)).collect::<Vec<_>>().join(", "))
}

fn matrix(m: &Matrix) -> String {
    format!("[{}]", m.iter().map(|r| strings(r)).collect::<Vec<_>>().join(", "))
}

fn is_bare(s: &str) -> bool {
    let mut cs = s.chars();
    match cs.next() {
        Some(c) if is_ident_start(c) => cs.all(is_ident_char),
        Some(c) if c.is_ascii_digit() => s.chars().all(|c| c.is_ascii_digit()) && s.parse::<u64>().is_ok(),
        _ => false,
    }
}

/// One statement in canonical layout.
pub fn print_decl(d: &Decl) -> String {
    match d {
        Decl::Ring { name, characteristic, vars, order } => {
            format!("ring {name} = poly(char={characteristic}, vars=[{}], order={order});", vars.join(", "))
        }
        Decl::Quotient { name, parent, relations, domain } => {
            format!("ring {name} = quotient({parent}, {}, domain={domain});", strings(relations))
        }
        Decl::Ideal { name, over, gens } => format!("ideal {name} over {over} = {};", strings(gens)),
        Decl::Sequence { name, over, elements } => format!("sequence {name} over {over} = {};", strings(elements)),
        Decl::Module { name, over, body } => {
            let body = match body {
                ModuleBody::Coker(m) => format!("coker {}", matrix(m)),
                ModuleBody::Free(n) => format!("free {n}"),
                ModuleBody::Cyclic(g) => format!("cyclic {}", strings(g)),
            };
            format!("module {name} over {over} = {body};")
        }
        Decl::Complex { name, over, body } => {
            let body = match body {
                ComplexBody::Koszul(s) => format!("koszul {}", strings(s)),
                ComplexBody::Maps(ms) => {
                    format!("maps [{}]", ms.iter().map(matrix).collect::<Vec<_>>().join(", "))
                }
                ComplexBody::Resolution { module, cap: None } => format!("resolution {module}"),
                ComplexBody::Resolution { module, cap: Some(c) } => format!("resolution {module} cap {c}"),
            };
            format!("complex {name} over {over} = {body};")
        }
        Decl::Extension { name, base, adjoin, relations } => {
            format!("extension {name} = base {base}, adjoin [{}], relations {};", adjoin.join(", "), strings(relations))
        }
        Decl::Check { verb, args, expect } => {
            let mut s = format!("check {verb}(");
            for (i, (k, v)) in args.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                let v = if is_bare(v) { v.clone() } else { quote(v) };
                let _ = write!(s, "{k}={v}");
            }
            s.push(')');
            if let Some(e) = expect {
                let _ = write!(s, " expect {}", quote(e));
            }
            s.push(';');
            s
        }
    }
}

pub fn print_document(doc: &Document) -> String {
    doc.declarations.iter().map(|d| print_decl(d) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decls(src: &str) -> Vec<Decl> {
        parse_document(src).unwrap().into_iter().map(|(d, _)| d).collect()
    }

    #[test]
    fn parses_each_statement_kind() {
        let src = r#"
            # comment
            ring R = poly(char=0, vars=[x, y], order=lex);
            ring S = quotient(R, ["x*y"], domain=false);  // trailing comment
            ideal I over R = [];
            module M over R = coker [["x", "y"]];
            module F over R = free 2;
            extension E = base S, adjoin [e], relations ["e^2 - e"];
            sequence P over R = ["x"];
            complex C over R = resolution M cap 2;
            check twisted-split(ideal=I, element="x + y", e-max=2) expect "none";
        "#;
        let ds = decls(src);
        assert_eq!(ds.len(), 9);
        assert_eq!(ds[0], Decl::Ring { name: "R".into(), characteristic: 0, vars: vec!["x".into(), "y".into()], order: "lex".into() });
        assert_eq!(ds[2], Decl::Ideal { name: "I".into(), over: "R".into(), gens: vec![] });
        match &ds[8] {
            Decl::Check { verb, args, expect } => {
                assert_eq!(verb, "twisted-split");
                assert_eq!(args["element"], "x + y");
                assert_eq!(args["e-max"], "2");
                assert_eq!(expect.as_deref(), Some("none"));
            }
            other => panic!("{other:?}"),
        }
        let printed: String = ds.iter().map(|d| print_decl(d) + "\n").collect();
        assert_eq!(decls(&printed), ds);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_document("ring R = poly(char=0, vars=[x]);\nideal I over R = [\"x\" \"y\"];").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 23 });
        assert!(err.message.contains("expected `,`"), "{}", err.message);
        let err = parse_document("ring R = poly(vars=[x])").unwrap_err();
        assert_eq!(err.pos.line, 1);
        assert!(err.message.contains("end of input"));
        let err = parse_document("widget W;").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 1 });
        assert!(parse_document("ideal I over R = [\"x]").unwrap_err().message.contains("unterminated"));
    }

    #[test]
    fn strings_escape() {
        let d = Decl::Check { verb: "gb".into(), args: [("ideal".to_string(), "a \"b\"".to_string())].into(), expect: None };
        let s = print_decl(&d);
        assert_eq!(decls(&s), vec![d]);
    }
}
