//! The XML reader.

use alloc::borrow::Cow;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{XmlAttr, XmlDocument, XmlElement, XmlError, XmlNode, XmlText};
use crate::diag::Pos;
use crate::id::{name_char, name_start_char};

/// Parse one document. The whole input must be one root element, optionally
/// preceded by an XML declaration and surrounded by comments, processing
/// instructions, and whitespace.
pub fn parse(bytes: &[u8]) -> Result<XmlDocument, XmlError> {
    let text = decode(bytes)?;
    let text = normalize_newlines(&text);
    let mut cur = Cursor::new(&text);

    cur.skip_bom();
    cur.parse_decl()?;
    cur.skip_misc()?;
    if !cur.at('<') {
        return Err(cur.error("expected root element"));
    }
    let root = cur.parse_element()?;
    cur.skip_misc()?;
    if cur.peek().is_some() {
        return Err(cur.error("content after root element"));
    }
    Ok(XmlDocument { root })
}

fn decode(bytes: &[u8]) -> Result<String, XmlError> {
    match core::str::from_utf8(bytes) {
        Ok(s) => Ok(s.to_string()),
        Err(e) => {
            let prefix = &bytes[..e.valid_up_to()];
            let mut line = 1u32;
            let mut col = 1u32;
            for &b in prefix {
                if b == b'\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
            }
            Err(XmlError {
                pos: Pos::new(line, col),
                message: format!("invalid UTF-8 at byte {}", e.valid_up_to()),
                encoding: true,
            })
        }
    }
}

fn normalize_newlines(s: &str) -> Cow<'_, str> {
    if !s.contains('\r') {
        return Cow::Borrowed(s);
    }
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '\r' {
            if chars.peek() == Some(&'\n') {
                chars.next();
            }
            out.push('\n');
        } else {
            out.push(c);
        }
    }
    Cow::Owned(out)
}

/// True for characters the XML grammar admits at all (the Char production,
/// after newline normalization).
pub(crate) fn xml_char(c: char) -> bool {
    matches!(c,
        '\t' | '\n' | '\r'
        | '\u{20}'..='\u{D7FF}'
        | '\u{E000}'..='\u{FFFD}'
        | '\u{10000}'..='\u{10FFFF}')
}

struct Cursor<'a> {
    s: &'a str,
    i: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            s,
            i: 0,
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos::new(self.line, self.col)
    }

    fn error(&self, message: impl Into<String>) -> XmlError {
        XmlError {
            pos: self.pos(),
            message: message.into(),
            encoding: false,
        }
    }

    fn rest(&self) -> &'a str {
        &self.s[self.i..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at(&self, c: char) -> bool {
        self.peek() == Some(c)
    }

    fn starts_with(&self, pat: &str) -> bool {
        self.rest().starts_with(pat)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Consume `pat` if present. `pat` must not contain newlines.
    fn eat(&mut self, pat: &str) -> bool {
        if self.starts_with(pat) {
            self.i += pat.len();
            self.col += pat.chars().count() as u32;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, pat: &str) -> Result<(), XmlError> {
        if self.eat(pat) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{pat}'")))
        }
    }

    fn skip_bom(&mut self) {
        if self.starts_with("\u{FEFF}") {
            self.i += '\u{FEFF}'.len_utf8();
        }
    }

    fn skip_ws(&mut self) -> bool {
        let mut any = false;
        while matches!(self.peek(), Some(' ' | '\t' | '\n')) {
            self.bump();
            any = true;
        }
        any
    }

    /// Scan past `end`, erroring at `start_pos` if the input runs out.
    fn skip_until(&mut self, end: &str, what: &str, start_pos: Pos) -> Result<(), XmlError> {
        loop {
            if self.eat(end) {
                return Ok(());
            }
            if self.bump().is_none() {
                return Err(XmlError {
                    pos: start_pos,
                    message: format!("unterminated {what}"),
                    encoding: false,
                });
            }
        }
    }

    fn parse_decl(&mut self) -> Result<(), XmlError> {
        if !self.starts_with("<?xml")
            || !matches!(
                self.rest().chars().nth(5),
                Some(' ' | '\t' | '\n' | '?')
            )
        {
            return Ok(());
        }
        self.eat("<?xml");
        loop {
            let had_ws = self.skip_ws();
            if self.eat("?>") {
                return Ok(());
            }
            if !had_ws {
                return Err(self.error("malformed XML declaration"));
            }
            let pos = self.pos();
            let name = self.read_name()?;
            self.skip_ws();
            self.expect("=")?;
            self.skip_ws();
            let value = self.read_quoted()?;
            match name.as_str() {
                "version" => {
                    if value != "1.0" {
                        return Err(XmlError {
                            pos,
                            message: format!("unsupported XML version '{value}'"),
                            encoding: false,
                        });
                    }
                }
                "encoding" => {
                    if !value.eq_ignore_ascii_case("utf-8") {
                        return Err(XmlError {
                            pos,
                            message: format!("unsupported encoding '{value}'; only UTF-8 is accepted"),
                            encoding: true,
                        });
                    }
                }
                "standalone" => {}
                other => {
                    return Err(XmlError {
                        pos,
                        message: format!("unexpected '{other}' in XML declaration"),
                        encoding: false,
                    });
                }
            }
        }
    }

    /// Skip whitespace, comments, and processing instructions between the
    /// declaration, root element, and end of input. DOCTYPE is rejected.
    fn skip_misc(&mut self) -> Result<(), XmlError> {
        loop {
            self.skip_ws();
            let pos = self.pos();
            if self.starts_with("<!--") {
                self.eat("<!--");
                self.skip_until("-->", "comment", pos)?;
            } else if self.starts_with("<!DOCTYPE") {
                return Err(XmlError {
                    pos,
                    message: "DOCTYPE declarations are not supported".to_string(),
                    encoding: false,
                });
            } else if self.starts_with("<?") {
                self.eat("<?");
                self.skip_until("?>", "processing instruction", pos)?;
            } else {
                return Ok(());
            }
        }
    }

    fn read_name(&mut self) -> Result<String, XmlError> {
        match self.peek() {
            Some(c) if name_start_char(c) => {}
            _ => return Err(self.error("expected a name")),
        }
        let start = self.i;
        while matches!(self.peek(), Some(c) if name_char(c)) {
            self.bump();
        }
        Ok(self.s[start..self.i].to_string())
    }

    fn read_quoted(&mut self) -> Result<String, XmlError> {
        let quote = match self.peek() {
            Some(q @ ('"' | '\'')) => q,
            _ => return Err(self.error("expected a quoted value")),
        };
        let start_pos = self.pos();
        self.bump();
        let mut out = String::new();
        loop {
            match self.peek() {
                None => {
                    return Err(XmlError {
                        pos: start_pos,
                        message: "unterminated attribute value".to_string(),
                        encoding: false,
                    })
                }
                Some(c) if c == quote => {
                    self.bump();
                    return Ok(out);
                }
                Some('<') => return Err(self.error("'<' not allowed in attribute value")),
                Some('&') => out.push(self.read_entity()?),
                // Attribute-value normalization: whitespace becomes space.
                Some('\t' | '\n') => {
                    self.bump();
                    out.push(' ');
                }
                Some(c) if xml_char(c) => {
                    self.bump();
                    out.push(c);
                }
                Some(c) => {
                    return Err(self.error(format!("invalid character U+{:04X}", c as u32)))
                }
            }
        }
    }

    fn read_entity(&mut self) -> Result<char, XmlError> {
        let pos = self.pos();
        self.bump(); // '&'
        if self.eat("#") {
            let hex = self.eat("x");
            let start = self.i;
            while matches!(self.peek(), Some(c) if c.is_ascii_hexdigit()) {
                self.bump();
            }
            let digits = &self.s[start..self.i];
            if !self.eat(";") || digits.is_empty() {
                return Err(XmlError {
                    pos,
                    message: "malformed character reference".to_string(),
                    encoding: false,
                });
            }
            let radix = if hex { 16 } else { 10 };
            let value = u32::from_str_radix(digits, radix).ok();
            match value.and_then(char::from_u32) {
                Some(c) if xml_char(c) => Ok(c),
                _ => Err(XmlError {
                    pos,
                    message: format!("character reference out of range: '&#{}{digits};'", if hex { "x" } else { "" }),
                    encoding: false,
                }),
            }
        } else {
            let start = self.i;
            while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                self.bump();
            }
            let name = &self.s[start..self.i];
            let c = match name {
                "amp" => '&',
                "lt" => '<',
                "gt" => '>',
                "apos" => '\'',
                "quot" => '"',
                _ => {
                    return Err(XmlError {
                        pos,
                        message: format!("unknown entity '&{name};'"),
                        encoding: false,
                    })
                }
            };
            if !self.eat(";") {
                return Err(XmlError {
                    pos,
                    message: "entity reference missing ';'".to_string(),
                    encoding: false,
                });
            }
            Ok(c)
        }
    }

    fn parse_element(&mut self) -> Result<XmlElement, XmlError> {
        let pos = self.pos();
        self.expect("<")?;
        let name = self.read_name()?;
        let mut attrs: Vec<XmlAttr> = Vec::new();

        loop {
            let had_ws = self.skip_ws();
            match self.peek() {
                Some('/') | Some('>') => break,
                Some(_) if had_ws => {
                    let attr_pos = self.pos();
                    let attr_name = self.read_name()?;
                    self.skip_ws();
                    self.expect("=")?;
                    self.skip_ws();
                    let value = self.read_quoted()?;
                    if attrs.iter().any(|a| a.name == attr_name) {
                        return Err(XmlError {
                            pos: attr_pos,
                            message: format!("duplicate attribute '{attr_name}'"),
                            encoding: false,
                        });
                    }
                    attrs.push(XmlAttr {
                        name: attr_name,
                        value,
                        pos: attr_pos,
                    });
                }
                Some(_) => return Err(self.error("expected whitespace before attribute")),
                None => {
                    return Err(XmlError {
                        pos,
                        message: format!("unterminated start tag '<{name}>'"),
                        encoding: false,
                    })
                }
            }
        }

        if self.eat("/>") {
            return Ok(XmlElement {
                name,
                attrs,
                children: Vec::new(),
                pos,
            });
        }
        self.expect(">")?;

        let mut children: Vec<XmlNode> = Vec::new();
        let mut text = String::new();
        let mut text_pos = self.pos();

        macro_rules! flush_text {
            () => {
                if !text.is_empty() {
                    children.push(XmlNode::Text(XmlText {
                        text: core::mem::take(&mut text),
                        pos: text_pos,
                    }));
                }
            };
        }

        loop {
            if self.starts_with("</") {
                flush_text!();
                self.eat("</");
                let end_pos = self.pos();
                let end_name = self.read_name()?;
                if end_name != name {
                    return Err(XmlError {
                        pos: end_pos,
                        message: format!("end tag '</{end_name}>' does not match '<{name}>'"),
                        encoding: false,
                    });
                }
                self.skip_ws();
                self.expect(">")?;
                return Ok(XmlElement {
                    name,
                    attrs,
                    children,
                    pos,
                });
            }
            if self.starts_with("<!--") {
                let pos = self.pos();
                self.eat("<!--");
                self.skip_until("-->", "comment", pos)?;
                continue;
            }
            if self.starts_with("<![CDATA[") {
                if text.is_empty() {
                    text_pos = self.pos();
                }
                let pos = self.pos();
                self.eat("<![CDATA[");
                loop {
                    if self.eat("]]>") {
                        break;
                    }
                    match self.peek() {
                        Some(c) if xml_char(c) => {
                            self.bump();
                            text.push(c);
                        }
                        Some(c) => {
                            return Err(self.error(format!("invalid character U+{:04X}", c as u32)))
                        }
                        None => {
                            return Err(XmlError {
                                pos,
                                message: "unterminated CDATA section".to_string(),
                                encoding: false,
                            })
                        }
                    }
                }
                continue;
            }
            if self.starts_with("<!") {
                return Err(self.error("markup declarations are not supported"));
            }
            if self.starts_with("<?") {
                let pos = self.pos();
                self.eat("<?");
                self.skip_until("?>", "processing instruction", pos)?;
                continue;
            }
            match self.peek() {
                Some('<') => {
                    flush_text!();
                    let child = self.parse_element()?;
                    children.push(XmlNode::Element(child));
                }
                Some('&') => {
                    if text.is_empty() {
                        text_pos = self.pos();
                    }
                    let c = self.read_entity()?;
                    text.push(c);
                }
                Some(c) if xml_char(c) => {
                    if text.is_empty() {
                        text_pos = self.pos();
                    }
                    self.bump();
                    text.push(c);
                }
                Some(c) => {
                    return Err(self.error(format!("invalid character U+{:04X}", c as u32)))
                }
                None => {
                    return Err(XmlError {
                        pos,
                        message: format!("missing end tag '</{name}>'"),
                        encoding: false,
                    })
                }
            }
        }
    }
}
