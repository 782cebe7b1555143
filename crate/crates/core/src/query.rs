//! Wildcard phrase queries.
//!
//! A phrase is a whitespace-separated sequence of units. A standalone `*`
//! matches any single token; a `*` embedded in a unit matches zero to five
//! characters and must follow at least three alphabetic characters
//! (`colo*r` matches `color` and `colour`). Other units are literal tokens.

use std::fmt;

use crate::tokenize::{is_token_char, tokenize};

/// Largest number of characters an embedded `*` can stand for.
pub const MAX_SUBSTRING_GAP: usize = 5;

/// Fewest alphabetic characters that must precede an embedded `*`.
pub const MIN_WILDCARD_PREFIX: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TokenPattern {
    Literal(String),
    AnyWord,
    Substring { prefix: String, suffix: String },
}

impl TokenPattern {
    /// Tests a single corpus token against the pattern.
    pub fn matches(&self, token: &str) -> bool {
        match self {
            TokenPattern::Literal(lit) => lit == token,
            TokenPattern::AnyWord => true,
            TokenPattern::Substring { prefix, suffix } => {
                if token.len() < prefix.len() + suffix.len()
                    || !token.starts_with(prefix.as_str())
                    || !token.ends_with(suffix.as_str())
                {
                    return false;
                }
                let gap = &token[prefix.len()..token.len() - suffix.len()];
                gap.chars().count() <= MAX_SUBSTRING_GAP
            }
        }
    }

    pub fn is_any_word(&self) -> bool {
        matches!(self, TokenPattern::AnyWord)
    }
}

impl fmt::Display for TokenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenPattern::Literal(lit) => f.write_str(lit),
            TokenPattern::AnyWord => f.write_str("*"),
            TokenPattern::Substring { prefix, suffix } => write!(f, "{prefix}*{suffix}"),
        }
    }
}

/// Free-function form of [`TokenPattern::matches`].
pub fn match_token(pattern: &TokenPattern, token: &str) -> bool {
    pattern.matches(token)
}

/// Counts the alphabetic characters of `s`; used for the wildcard prefix rule.
pub fn alphabetic_len(s: &str) -> usize {
    s.chars().filter(|c| c.is_alphabetic()).count()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty phrase query")]
    Empty,
    #[error("whole-word wildcard cannot start a phrase: {0:?}")]
    LeadingWildcard(String),
    #[error("whole-word wildcard cannot end a phrase: {0:?}")]
    TrailingWildcard(String),
    #[error("wildcard in {unit:?} needs at least {MIN_WILDCARD_PREFIX} alphabetic characters before it")]
    ShortPrefix { unit: String },
    #[error("unit {unit:?} has more than one embedded wildcard")]
    MultipleWildcards { unit: String },
    #[error("unit {unit:?} mixes a wildcard with non-word characters")]
    InvalidWildcardUnit { unit: String },
}

/// A parsed phrase: a non-empty run of patterns whose ends are not `*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhraseQuery {
    patterns: Vec<TokenPattern>,
}

impl PhraseQuery {
    pub fn parse(q: &str) -> Result<Self, ParseError> {
        parse_phrase(q)
    }

    /// Builds a query from already-constructed patterns, checking the
    /// end-wildcard and prefix rules.
    pub fn from_patterns(patterns: Vec<TokenPattern>) -> Result<Self, ParseError> {
        let rendered = || {
            patterns
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        match (patterns.first(), patterns.last()) {
            (None, _) | (_, None) => return Err(ParseError::Empty),
            (Some(TokenPattern::AnyWord), _) => return Err(ParseError::LeadingWildcard(rendered())),
            (_, Some(TokenPattern::AnyWord)) => return Err(ParseError::TrailingWildcard(rendered())),
            _ => {}
        }
        for p in &patterns {
            if let TokenPattern::Substring { prefix, .. } = p {
                if alphabetic_len(prefix) < MIN_WILDCARD_PREFIX {
                    return Err(ParseError::ShortPrefix { unit: p.to_string() });
                }
            }
        }
        Ok(PhraseQuery { patterns })
    }

    pub fn patterns(&self) -> &[TokenPattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Tests the query against `tokens` starting at `start`.
    pub fn matches_at<S: AsRef<str>>(&self, tokens: &[S], start: usize) -> bool {
        start + self.patterns.len() <= tokens.len()
            && self
                .patterns
                .iter()
                .zip(&tokens[start..])
                .all(|(p, t)| p.matches(t.as_ref()))
    }
}

impl fmt::Display for PhraseQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses a phrase query string.
///
/// Literal units go through [`tokenize`], so `Dog's` contributes the two
/// literals `dog` and `s`, matching how the corpus itself was tokenized.
pub fn parse_phrase(q: &str) -> Result<PhraseQuery, ParseError> {
    let mut patterns = Vec::new();
    for unit in q.split_whitespace() {
        if unit == "*" {
            patterns.push(TokenPattern::AnyWord);
            continue;
        }
        match unit.matches('*').count() {
            0 => patterns.extend(tokenize(unit).into_iter().map(TokenPattern::Literal)),
            1 => patterns.push(parse_substring(unit)?),
            _ => {
                return Err(ParseError::MultipleWildcards {
                    unit: unit.to_string(),
                })
            }
        }
    }
    PhraseQuery::from_patterns(patterns)
}

fn parse_substring(unit: &str) -> Result<TokenPattern, ParseError> {
    let (prefix, suffix) = unit.split_once('*').expect("unit holds one '*'");
    if !prefix.chars().chain(suffix.chars()).all(is_token_char) {
        return Err(ParseError::InvalidWildcardUnit {
            unit: unit.to_string(),
        });
    }
    let prefix = prefix.to_lowercase();
    let suffix = suffix.to_lowercase();
    if alphabetic_len(&prefix) < MIN_WILDCARD_PREFIX {
        return Err(ParseError::ShortPrefix {
            unit: unit.to_string(),
        });
    }
    Ok(TokenPattern::Substring { prefix, suffix })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> TokenPattern {
        TokenPattern::Literal(s.to_string())
    }

    fn sub(p: &str, s: &str) -> TokenPattern {
        TokenPattern::Substring {
            prefix: p.to_string(),
            suffix: s.to_string(),
        }
    }

    #[test]
    fn embedded_wildcard_matches_spelling_variants() {
        let p = sub("colo", "r");
        assert!(match_token(&p, "color"));
        assert!(match_token(&p, "colour"));
        // "ant" after the final r is left unconsumed
        assert!(!match_token(&p, "colorant"));
    }

    #[test]
    fn gap_is_limited_to_five_characters() {
        let p = sub("restrai", "");
        assert!(p.matches("restrai"));
        assert!(p.matches("restrained"));
        assert!(p.matches("restraints"));
        assert!(p.matches("restraining"));
        assert!(!p.matches("restrainabilities"));
        assert!(!p.matches("restra"));
    }

    #[test]
    fn gap_counts_characters_not_bytes() {
        let p = sub("caf", "");
        assert!(p.matches("caféééé"));
        assert!(!p.matches("caféééééé"));
    }

    #[test]
    fn literal_and_any() {
        assert!(lit("cat").matches("cat"));
        assert!(!lit("cat").matches("cats"));
        assert!(TokenPattern::AnyWord.matches("anything"));
    }

    #[test]
    fn parses_whole_word_wildcard_phrase() {
        let q = parse_phrase("immaculate * very clean").unwrap();
        assert_eq!(
            q.patterns(),
            &[lit("immaculate"), TokenPattern::AnyWord, lit("very"), lit("clean")]
        );
    }

    #[test]
    fn parses_stemmed_phrase() {
        let q = parse_phrase("restrai* * very limit*").unwrap();
        assert_eq!(
            q.patterns(),
            &[sub("restrai", ""), TokenPattern::AnyWord, lit("very"), sub("limit", "")]
        );
        assert_eq!(q.to_string(), "restrai* * very limit*");
    }

    #[test]
    fn rejects_wildcard_at_either_end() {
        assert!(matches!(parse_phrase("* cat"), Err(ParseError::LeadingWildcard(_))));
        assert!(matches!(parse_phrase("cat *"), Err(ParseError::TrailingWildcard(_))));
        assert!(matches!(parse_phrase("*"), Err(ParseError::LeadingWildcard(_))));
    }

    #[test]
    fn rejects_short_prefix() {
        assert!(matches!(parse_phrase("co*r"), Err(ParseError::ShortPrefix { .. })));
        assert!(matches!(parse_phrase("a1b*"), Err(ParseError::ShortPrefix { .. })));
        assert!(parse_phrase("abc*").is_ok());
    }

    #[test]
    fn rejects_other_malformed_units() {
        assert!(matches!(parse_phrase(""), Err(ParseError::Empty)));
        assert!(matches!(parse_phrase(" .,; "), Err(ParseError::Empty)));
        assert!(matches!(
            parse_phrase("abc*d*e"),
            Err(ParseError::MultipleWildcards { .. })
        ));
        assert!(matches!(
            parse_phrase("abc*'s"),
            Err(ParseError::InvalidWildcardUnit { .. })
        ));
    }

    #[test]
    fn literal_units_are_tokenized() {
        let q = parse_phrase("Dog's bone").unwrap();
        assert_eq!(q.patterns(), &[lit("dog"), lit("s"), lit("bone")]);
    }

    #[test]
    fn matches_at_window() {
        let q = parse_phrase("the * sat").unwrap();
        let toks = ["the", "cat", "sat", "on"];
        assert!(q.matches_at(&toks, 0));
        assert!(!q.matches_at(&toks, 1));
        assert!(!q.matches_at(&toks, 2));
    }
}
