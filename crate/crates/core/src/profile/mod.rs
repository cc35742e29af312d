//! Serialization profiles.
//!
//! A profile closes the TEI vocabulary: it whitelists elements, their
//! attributes (with optional required flags and value sets), their allowed
//! children (with optional cardinality caps and ordering), and their text
//! policy. Parsing rejects anything outside the profile; serialization
//! refuses to emit anything outside it. Attribute declaration order doubles
//! as the canonical attribute order on output.
//!
//! Profiles load from a small line-oriented text format (see
//! `tei_lex.profile`, the embedded default).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Text of the embedded default profile.
pub const DEFAULT_PROFILE_TEXT: &str = include_str!("tei_lex.profile");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContentModel {
    /// Child elements only; whitespace between them is insignificant.
    Children,
    /// Character data preserved exactly as written.
    Verbatim,
    /// Character data trimmed and internally whitespace-collapsed.
    Normalized,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttrRule {
    pub name: String,
    pub required: bool,
    /// Closed value set, when the attribute is enumerated.
    pub values: Option<Vec<String>>,
}

impl AttrRule {
    pub fn allows(&self, value: &str) -> bool {
        match &self.values {
            None => true,
            Some(vs) => vs.iter().any(|v| v == value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChildRule {
    pub name: String,
    pub max: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementRule {
    pub name: String,
    pub content: ContentModel,
    /// When true, children must appear in declared `child` order.
    pub ordered: bool,
    pub attrs: Vec<AttrRule>,
    pub children: Vec<ChildRule>,
}

impl ElementRule {
    pub fn attr(&self, name: &str) -> Option<&AttrRule> {
        self.attrs.iter().find(|a| a.name == name)
    }

    pub fn child(&self, name: &str) -> Option<&ChildRule> {
        self.children.iter().find(|c| c.name == name)
    }

    pub fn child_index(&self, name: &str) -> Option<usize> {
        self.children.iter().position(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerializationProfile {
    pub namespace: String,
    elements: Vec<ElementRule>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileError {
    pub line: u32,
    pub message: String,
}

impl core::fmt::Display for ProfileError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "profile line {}: {}", self.line, self.message)
    }
}

impl SerializationProfile {
    /// The embedded default profile. Infallible: a broken embedded profile
    /// is a build defect, caught by unit tests.
    pub fn default_profile() -> Self {
        Self::load(DEFAULT_PROFILE_TEXT).expect("embedded profile must load")
    }

    pub fn element(&self, name: &str) -> Option<&ElementRule> {
        self.elements.iter().find(|e| e.name == name)
    }

    pub fn elements(&self) -> &[ElementRule] {
        &self.elements
    }

    pub fn load(text: &str) -> Result<Self, ProfileError> {
        let mut namespace: Option<String> = None;
        let mut elements: Vec<ElementRule> = Vec::new();

        let err = |line: u32, message: String| ProfileError { line, message };

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx as u32 + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap();
            match keyword {
                "namespace" => {
                    let uri = words
                        .next()
                        .ok_or_else(|| err(lineno, "namespace needs a URI".to_string()))?;
                    if namespace.replace(uri.to_string()).is_some() {
                        return Err(err(lineno, "namespace declared twice".to_string()));
                    }
                }
                "element" => {
                    let name = words
                        .next()
                        .ok_or_else(|| err(lineno, "element needs a name".to_string()))?;
                    if elements.iter().any(|e| e.name == name) {
                        return Err(err(lineno, format!("element '{name}' declared twice")));
                    }
                    let mut content = ContentModel::Children;
                    let mut ordered = false;
                    let rest: Vec<&str> = words.by_ref().collect();
                    let mut i = 0;
                    while i < rest.len() {
                        match rest[i] {
                            "ordered" => ordered = true,
                            "text" => {
                                content = match rest.get(i + 1) {
                                    Some(&"verbatim") => ContentModel::Verbatim,
                                    Some(&"normalized") => ContentModel::Normalized,
                                    _ => {
                                        return Err(err(
                                            lineno,
                                            "text needs 'verbatim' or 'normalized'".to_string(),
                                        ))
                                    }
                                };
                                i += 1;
                            }
                            other => {
                                return Err(err(lineno, format!("unknown token '{other}'")))
                            }
                        }
                        i += 1;
                    }
                    elements.push(ElementRule {
                        name: name.to_string(),
                        content,
                        ordered,
                        attrs: Vec::new(),
                        children: Vec::new(),
                    });
                }
                "attr" => {
                    let element = elements
                        .last_mut()
                        .ok_or_else(|| err(lineno, "attr before any element".to_string()))?;
                    let name = words
                        .next()
                        .ok_or_else(|| err(lineno, "attr needs a name".to_string()))?;
                    if element.attrs.iter().any(|a| a.name == name) {
                        return Err(err(lineno, format!("attr '{name}' declared twice")));
                    }
                    let mut required = false;
                    let mut values: Option<Vec<String>> = None;
                    for word in words.by_ref() {
                        match word {
                            "required" if values.is_none() => required = true,
                            "values" => values = Some(Vec::new()),
                            v => match &mut values {
                                Some(vs) => vs.push(v.to_string()),
                                None => {
                                    return Err(err(lineno, format!("unknown token '{v}'")))
                                }
                            },
                        }
                    }
                    if matches!(&values, Some(vs) if vs.is_empty()) {
                        return Err(err(lineno, "values needs at least one value".to_string()));
                    }
                    element.attrs.push(AttrRule {
                        name: name.to_string(),
                        required,
                        values,
                    });
                }
                "child" => {
                    let element = elements
                        .last_mut()
                        .ok_or_else(|| err(lineno, "child before any element".to_string()))?;
                    let name = words
                        .next()
                        .ok_or_else(|| err(lineno, "child needs a name".to_string()))?;
                    if element.children.iter().any(|c| c.name == name) {
                        return Err(err(lineno, format!("child '{name}' declared twice")));
                    }
                    let max = match words.next() {
                        None => None,
                        Some("max") => {
                            let n = words
                                .next()
                                .and_then(|n| n.parse::<u32>().ok())
                                .ok_or_else(|| err(lineno, "max needs a number".to_string()))?;
                            Some(n)
                        }
                        Some(other) => {
                            return Err(err(lineno, format!("unknown token '{other}'")))
                        }
                    };
                    if element.content != ContentModel::Children {
                        return Err(err(
                            lineno,
                            format!("text element '{}' cannot declare children", element.name),
                        ));
                    }
                    element.children.push(ChildRule {
                        name: name.to_string(),
                        max,
                    });
                }
                other => return Err(err(lineno, format!("unknown keyword '{other}'"))),
            }
            if words.next().is_some() {
                return Err(err(lineno, "trailing tokens".to_string()));
            }
        }

        let namespace =
            namespace.ok_or_else(|| err(0, "profile declares no namespace".to_string()))?;

        // Child references must name declared elements; a typo here would
        // otherwise silently forbid the intended child everywhere.
        for element in &elements {
            for child in &element.children {
                if !elements.iter().any(|e| e.name == child.name) {
                    return Err(err(
                        0,
                        format!(
                            "element '{}' lists undeclared child '{}'",
                            element.name, child.name
                        ),
                    ));
                }
            }
        }

        Ok(SerializationProfile {
            namespace,
            elements,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn default_profile_loads() {
        let p = SerializationProfile::default_profile();
        assert_eq!(p.namespace, "http://www.tei-c.org/ns/1.0");
        for name in [
            "body", "entry", "lang", "form", "orth", "pron", "usg", "gramGrp", "pos", "number",
            "gram", "seg", "sense", "def", "cit", "quote", "gloss", "date", "etym", "re", "bibl",
        ] {
            assert!(p.element(name).is_some(), "missing element {name}");
        }
    }

    #[test]
    fn default_profile_key_rules() {
        let p = SerializationProfile::default_profile();

        let entry = p.element("entry").unwrap();
        assert!(entry.ordered);
        assert_eq!(entry.content, ContentModel::Children);
        assert!(!entry.attr("xml:id").unwrap().required);
        assert!(entry.attr("type").unwrap().allows("etymon"));
        assert!(!entry.attr("type").unwrap().allows("example"));
        assert_eq!(entry.child("etym").unwrap().max, Some(1));
        assert_eq!(entry.child("form").unwrap().max, None);

        let form = p.element("form").unwrap();
        assert!(!form.ordered, "form child order is free");
        assert!(form.attr("type").unwrap().allows("lemma"));

        let orth = p.element("orth").unwrap();
        assert_eq!(orth.content, ContentModel::Verbatim);
        let gloss = p.element("gloss").unwrap();
        assert_eq!(gloss.content, ContentModel::Normalized);

        let seg = p.element("seg").unwrap();
        for attr in ["corresp", "n"] {
            assert!(seg.attr(attr).unwrap().required, "seg @{attr}");
        }
        assert!(seg.attr("type").is_none(), "seg carries only corresp and n");

        let bibl = p.element("bibl").unwrap();
        assert!(bibl.attr("xml:id").unwrap().required);

        assert!(p.element("teiHeader").is_none());
        assert!(entry.child("quote").is_none());
    }

    #[test]
    fn child_order_is_declaration_order() {
        let p = SerializationProfile::default_profile();
        let entry = p.element("entry").unwrap();
        let order: Vec<&str> = entry.children.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            order,
            vec!["lang", "form", "gloss", "sense", "etym", "re", "bibl"]
        );
    }

    #[test]
    fn load_errors() {
        let cases = [
            ("namespace a\nnamespace b", "declared twice"),
            ("element a\nelement a", "declared twice"),
            ("attr x", "attr before any element"),
            ("namespace u\nelement a text", "text needs"),
            ("namespace u\nelement a\nchild b", "undeclared child"),
            ("namespace u\nelement a text verbatim\nchild a", "cannot declare children"),
            ("namespace u\nelement a\nattr t values", "at least one value"),
            ("namespace u\nwhatever", "unknown keyword"),
            ("element a", "no namespace"),
            ("namespace u\nelement a\nchild a max x", "max needs a number"),
        ];
        for (text, needle) in cases {
            let e = SerializationProfile::load(text).expect_err(text);
            assert!(e.message.contains(needle), "{text}: {}", e.message);
        }
    }

    #[test]
    fn minimal_custom_profile() {
        let p = SerializationProfile::load(
            "namespace urn:x\nelement a ordered\nattr k required values v w\nchild b max 2\nelement b text verbatim\n",
        )
        .unwrap();
        let a = p.element("a").unwrap();
        assert!(a.ordered);
        assert_eq!(a.child("b").unwrap().max, Some(2));
        let k = a.attr("k").unwrap();
        assert!(k.required && k.allows("w") && !k.allows("z"));
    }
}
