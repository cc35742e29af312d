//! The canonical XML writer.
//!
//! Output shape is fixed: no XML declaration, two-space indentation, one
//! element per line, text-bearing leaves inline, `\n` line endings, and a
//! trailing newline. Attribute order is whatever the caller passes; the
//! serialization layer passes attributes in profile order.

use alloc::string::String;

/// Escape character data. `\r` must round-trip through a character
/// reference or the canonical form would not be newline-normalized.
pub fn escape_text(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '\r' => out.push_str("&#xD;"),
            c => out.push(c),
        }
    }
}

/// Escape an attribute value for double quotes. Whitespace other than the
/// space character must be referenced or it would not survive
/// attribute-value normalization on re-read.
pub fn escape_attr(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\t' => out.push_str("&#x9;"),
            '\n' => out.push_str("&#xA;"),
            '\r' => out.push_str("&#xD;"),
            c => out.push(c),
        }
    }
}

pub struct XmlWriter {
    out: String,
    depth: usize,
}

impl XmlWriter {
    pub fn new() -> Self {
        XmlWriter {
            out: String::new(),
            depth: 0,
        }
    }

    fn indent(&mut self) {
        for _ in 0..self.depth {
            self.out.push_str("  ");
        }
    }

    fn start_tag(&mut self, name: &str, attrs: &[(&str, &str)]) {
        self.out.push('<');
        self.out.push_str(name);
        for (k, v) in attrs {
            self.out.push(' ');
            self.out.push_str(k);
            self.out.push_str("=\"");
            escape_attr(v, &mut self.out);
            self.out.push('"');
        }
        self.out.push('>');
    }

    /// Open a container element; children follow on their own lines.
    pub fn open(&mut self, name: &str, attrs: &[(&str, &str)]) {
        self.indent();
        self.start_tag(name, attrs);
        self.out.push('\n');
        self.depth += 1;
    }

    pub fn close(&mut self, name: &str) {
        self.depth -= 1;
        self.indent();
        self.out.push_str("</");
        self.out.push_str(name);
        self.out.push_str(">\n");
    }

    /// Write a text-bearing element on one line.
    pub fn leaf(&mut self, name: &str, attrs: &[(&str, &str)], text: &str) {
        self.indent();
        self.start_tag(name, attrs);
        escape_text(text, &mut self.out);
        self.out.push_str("</");
        self.out.push_str(name);
        self.out.push_str(">\n");
    }

    pub fn finish(self) -> String {
        debug_assert_eq!(self.depth, 0, "unbalanced writer");
        self.out
    }
}

impl Default for XmlWriter {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_shape() {
        let mut w = XmlWriter::new();
        w.open("body", &[("xmlns", "urn:x"), ("xml:lang", "en")]);
        w.open("entry", &[]);
        w.leaf("orth", &[], "a < b & c");
        w.leaf("note", &[("type", "x\"y\n")], "");
        w.close("entry");
        w.close("body");
        assert_eq!(
            w.finish(),
            "<body xmlns=\"urn:x\" xml:lang=\"en\">\n  <entry>\n    <orth>a &lt; b &amp; c</orth>\n    <note type=\"x&quot;y&#xA;\"></note>\n  </entry>\n</body>\n"
        );
    }

    #[test]
    fn escapes_round_trip_through_the_reader() {
        let mut w = XmlWriter::new();
        w.leaf("t", &[("a", "tab\there & \r\nthere")], "text \r with & <cr>");
        let doc = crate::xml::parse(w.finish().as_bytes()).unwrap();
        assert_eq!(doc.root.attr("a"), Some("tab\there & \r\nthere"));
        assert_eq!(doc.root.text_content(), "text \r with & <cr>");
    }
}
