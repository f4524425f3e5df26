use super::{PseudoIdentity, TermArena};
use crate::error::{Error, Result};

/// Names accepted by [`builtin_identities`].
pub const BUILTIN_NAMES: &[&str] = &["DA", "K", "D", "Nil", "LI", "LZ", "RZ", "SL", "B", "R", "L", "BR'2", "BL'2"];

fn defining_text(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "DA" => &["(xy)^w x (xy)^w = (xy)^w"],
        "K" => &["x^w y = x^w"],
        "D" => &["y x^w = x^w"],
        // x^w y = y x^w = z^w, as two independent equations
        "Nil" => &["x^w y = z^w", "y x^w = z^w"],
        "LI" => &["x^w y x^w = x^w"],
        "LZ" => &["x y = x", "x x = x"],
        "RZ" => &["y x = x", "x x = x"],
        "SL" => &["x x = x", "x y = y x"],
        "B" => &["x x = x"],
        "R" => &["(xy)^w = (xy)^w x"],
        "L" => &["(yx)^w = x (yx)^w"],
        "BR'2" => &["x y z = x z y", "x x = x"],
        "BL'2" => &["x y z = y x z", "x x = x"],
        _ => return None,
    })
}

/// The defining pseudo-identities of a named pseudovariety, built in `arena`.
pub fn builtin_identities(arena: &mut TermArena, name: &str) -> Result<Vec<PseudoIdentity>> {
    let texts = defining_text(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    texts
        .iter()
        .map(|t| {
            let mut id = arena.parse_identity(t).expect("builtin identities parse");
            id.name = Some(name.to_string());
            Ok(id)
        })
        .collect()
}
