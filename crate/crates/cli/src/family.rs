//! Parsing of family specifications given as command-line tokens, e.g.
//! `cycle 12`, `complete-bipartite 2 3`, `corona --base cycle 5`.

use squarestable::{Family, FamilySpec};

pub const USAGE: &str = "path N | cycle N | complete N | star LEAVES | complete-bipartite N M | \
random-tree N SEED | random-connected N M SEED | corona [--base] FAMILY... | named NAME";

fn number(tokens: &[String], i: usize, what: &str) -> Result<u64, String> {
    let tok = tokens
        .get(i)
        .ok_or_else(|| format!("missing {what}; expected one of: {USAGE}"))?;
    tok.parse()
        .map_err(|_| format!("`{tok}` is not a valid {what}"))
}

fn size(tokens: &[String], i: usize, what: &str) -> Result<usize, String> {
    number(tokens, i, what).map(|v| v as usize)
}

/// Parse one family spec, returning it with the number of tokens consumed.
fn parse_prefix(tokens: &[String]) -> Result<(FamilySpec, usize), String> {
    let head = tokens
        .first()
        .ok_or_else(|| format!("missing family; expected one of: {USAGE}"))?;
    let simple = |family| Ok((FamilySpec::new(family, size(tokens, 1, "n")?), 2));
    match head.to_ascii_lowercase().replace('_', "-").as_str() {
        "path" => simple(Family::Path),
        "cycle" => simple(Family::Cycle),
        "complete" => simple(Family::Complete),
        "star" => simple(Family::Star),
        "complete-bipartite" => Ok((
            FamilySpec::complete_bipartite(size(tokens, 1, "n")?, size(tokens, 2, "m")?),
            3,
        )),
        "random-tree" => Ok((
            FamilySpec::random_tree(size(tokens, 1, "n")?, number(tokens, 2, "seed")?),
            3,
        )),
        "random-connected" => Ok((
            FamilySpec::random_connected(
                size(tokens, 1, "n")?,
                size(tokens, 2, "m")?,
                number(tokens, 3, "seed")?,
            ),
            4,
        )),
        "corona" | "corona-k1" => {
            let skip = if tokens.get(1).map(String::as_str) == Some("--base") {
                2
            } else {
                1
            };
            let (base, used) = parse_prefix(&tokens[skip.min(tokens.len())..])?;
            Ok((FamilySpec::corona(base), skip + used))
        }
        "named" => {
            let name = tokens
                .get(1)
                .ok_or_else(|| "missing fixture name".to_string())?;
            Ok((FamilySpec::named(name), 2))
        }
        other => Err(format!(
            "unknown family `{other}`; expected one of: {USAGE}"
        )),
    }
}

/// Parse a complete family spec; every token must be used.
pub fn parse(tokens: &[String]) -> Result<FamilySpec, String> {
    let (spec, used) = parse_prefix(tokens)?;
    match tokens.get(used) {
        None => Ok(spec),
        Some(extra) => Err(format!("unexpected argument `{extra}` after family spec")),
    }
}
