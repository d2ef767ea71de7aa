//! Parsing of relator words like "a1^5" or "a1*a2^-1*a3".

use anyhow::{bail, Context, Result};
use sextic_core::fpgroup::Word;

pub fn parse_word(input: &str) -> Result<Word> {
    let mut letters: Vec<i32> = Vec::new();
    for token in input.split('*') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let rest = token
            .strip_prefix('a')
            .or_else(|| token.strip_prefix('A'))
            .with_context(|| format!("expected a generator like a1, got {:?}", token))?;
        let (gen_str, exp) = match rest.split_once('^') {
            Some((g, e)) => (
                g,
                e.parse::<i32>()
                    .with_context(|| format!("exponent in {:?}", token))?,
            ),
            None => (rest, 1),
        };
        let g: i32 = gen_str
            .parse()
            .with_context(|| format!("generator index in {:?}", token))?;
        if !(1..=3).contains(&g) {
            bail!("generator index {} out of range 1..=3", g);
        }
        let letter = if exp >= 0 { g } else { -g };
        for _ in 0..exp.unsigned_abs() {
            letters.push(letter);
        }
    }
    if letters.is_empty() {
        bail!("empty word {:?}", input);
    }
    Ok(Word::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_powers_and_products() {
        assert_eq!(parse_word("a1^5").unwrap(), Word::gen(1).pow(5));
        assert_eq!(parse_word("a1*a2^-1").unwrap(), Word::from_letters([1, -2]));
        assert!(parse_word("b2").is_err());
        assert!(parse_word("a4").is_err());
    }
}
