//! Corpus tokenization.
//!
//! A token is a maximal run of letters and digits, lowercased. Everything
//! else separates tokens, so `dog's` becomes `dog`, `s` and `six-hour`
//! becomes `six`, `hour`.

/// Returns true when `c` may appear inside a token.
#[inline]
pub fn is_token_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// Splits `text` into lowercase letter/digit tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        if !is_token_char(c) {
            flush(&mut current, &mut tokens);
            continue;
        }
        // Lowercasing can expand to marks that are not token characters
        // (e.g. U+0130); those act as separators so output is re-tokenizable.
        for lc in c.to_lowercase() {
            if is_token_char(lc) {
                current.push(lc);
            } else {
                flush(&mut current, &mut tokens);
            }
        }
    }
    flush(&mut current, &mut tokens);
    tokens
}

fn flush(current: &mut String, tokens: &mut Vec<String>) {
    if !current.is_empty() {
        tokens.push(std::mem::take(current));
    }
}

/// True when `token` is a well-formed token as produced by [`tokenize`].
pub fn is_valid_token(token: &str) -> bool {
    !token.is_empty()
        && token
            .chars()
            .all(|c| is_token_char(c) && c.to_lowercase().eq(std::iter::once(c)))
}
