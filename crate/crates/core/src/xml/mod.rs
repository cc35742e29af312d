//! Minimal XML reader and writer.
//!
//! Supports exactly what the constrained serialization needs: UTF-8
//! documents, elements, attributes, character data, CDATA sections, the
//! five predefined entities plus numeric character references, comments,
//! processing instructions (skipped), and an optional XML declaration.
//! DOCTYPE declarations and non-UTF-8 encodings are rejected; namespace
//! prefixes are not interpreted (attribute/element names keep their
//! literal spelling, and the profile layer decides what is allowed).
//!
//! Every node records the 1-based line/column where it started so
//! diagnostics can point into the source. Line endings are normalized to
//! `\n` before parsing, as XML requires.

mod parse;
mod write;

pub use parse::parse;
pub(crate) use parse::xml_char;
pub use write::{escape_attr, escape_text, XmlWriter};

use alloc::string::String;
use alloc::vec::Vec;

use crate::diag::{Diagnostic, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlDocument {
    pub root: XmlElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlElement {
    pub name: String,
    pub attrs: Vec<XmlAttr>,
    pub children: Vec<XmlNode>,
    /// Position of the `<` opening this element.
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlAttr {
    pub name: String,
    pub value: String,
    /// Position of the attribute name.
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XmlNode {
    Element(XmlElement),
    Text(XmlText),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlText {
    pub text: String,
    pub pos: Pos,
}

impl XmlElement {
    pub fn attr(&self, name: &str) -> Option<&str> {
        self.attr_node(name).map(|a| a.value.as_str())
    }

    pub fn attr_node(&self, name: &str) -> Option<&XmlAttr> {
        self.attrs.iter().find(|a| a.name == name)
    }

    pub fn elements(&self) -> impl Iterator<Item = &XmlElement> {
        self.children.iter().filter_map(|n| match n {
            XmlNode::Element(e) => Some(e),
            XmlNode::Text(_) => None,
        })
    }

    /// Concatenation of the direct text children. Child elements contribute
    /// nothing; the profile layer rejects them where they are not allowed.
    pub fn text_content(&self) -> String {
        let mut out = String::new();
        for node in &self.children {
            if let XmlNode::Text(t) = node {
                out.push_str(&t.text);
            }
        }
        out
    }

    /// Position of the first text content, falling back to the element.
    pub fn text_pos(&self) -> Pos {
        for node in &self.children {
            if let XmlNode::Text(t) = node {
                return t.pos;
            }
        }
        self.pos
    }
}

/// Low-level XML failure. `encoding` distinguishes byte-level encoding
/// problems from structural malformedness; the two map to different
/// diagnostic codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlError {
    pub pos: Pos,
    pub message: String,
    pub encoding: bool,
}

impl XmlError {
    pub fn into_diagnostic(self) -> Diagnostic {
        let code = if self.encoding {
            "E-XML-ENCODING"
        } else {
            "E-XML-MALFORMED"
        };
        Diagnostic::new(code, self.message).at(self.pos)
    }
}
