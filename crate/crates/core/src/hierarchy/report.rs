use super::{in_da, in_local, in_lm, in_rm, j_trivial_monoids, DaRoute};
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use serde::{Deserialize, Serialize};

/// Levels searched by [`classify`] unless told otherwise.
pub const DEFAULT_MAX_M: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LevelFlags {
    pub m: usize,
    pub r: bool,
    pub l: bool,
    /// `R_m ∩ L_m`.
    pub corner: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AuxFlags {
    pub j_trivial: bool,
    pub r_trivial: bool,
    pub l_trivial: bool,
    pub band: bool,
    pub commutative: bool,
    /// Every local monoid `eSe` is J-trivial, and `S ∈ DA`.
    pub lj_and_da: bool,
    /// R-trivial with J-trivial local monoids.
    pub r_and_lj: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HierarchyReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub order: usize,
    pub monoid: bool,
    pub generators: Option<usize>,
    #[serde(rename = "inDA")]
    pub in_da: bool,
    pub max_m: usize,
    pub min_r: Option<usize>,
    pub min_l: Option<usize>,
    pub levels: Vec<LevelFlags>,
    pub flags: AuxFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl HierarchyReport {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn in_r(&self, m: usize) -> Option<bool> {
        self.levels.iter().find(|l| l.m == m).map(|l| l.r)
    }

    pub fn in_l(&self, m: usize) -> Option<bool> {
        self.levels.iter().find(|l| l.m == m).map(|l| l.l)
    }

    /// Aligned text, one field per line.
    pub fn render_text(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |m| m.to_string());
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        if let Some(id) = &self.id {
            out += &format!("id          {id}\n");
        }
        out += &format!("order       {}\n", self.order);
        out += &format!("monoid      {}\n", yn(self.monoid));
        out += &format!("generators  {}\n", opt(self.generators));
        out += &format!("in DA       {}\n", yn(self.in_da));
        out += &format!("min R       {}\n", opt(self.min_r));
        out += &format!("min L       {}\n", opt(self.min_l));
        out += "levels      m  R    L    R∩L\n";
        for l in &self.levels {
            out += &format!("            {}  {:<4} {:<4} {}\n", l.m, yn(l.r), yn(l.l), yn(l.corner));
        }
        let f = &self.flags;
        out += &format!(
            "flags       J {}  R {}  L {}  band {}  comm {}  LJ∩DA {}  R∩LJ {}\n",
            yn(f.j_trivial),
            yn(f.r_trivial),
            yn(f.l_trivial),
            yn(f.band),
            yn(f.commutative),
            yn(f.lj_and_da),
            yn(f.r_and_lj)
        );
        if let Some(note) = &self.note {
            out += &format!("note        {note}\n");
        }
        out
    }
}

/// Classifies `s` by the quotient route for `m = 1..=max_m`.
pub fn classify(s: &FiniteSemigroup, max_m: usize) -> Result<HierarchyReport> {
    if max_m == 0 {
        return Err(Error::InvalidArgument("max_m must be at least 1".into()));
    }
    let in_da = in_da(s, DaRoute::Regular)?;
    let mut levels = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let (r, l) = if in_da { (in_rm(s, m)?, in_lm(s, m)?) } else { (false, false) };
        levels.push(LevelFlags { m, r, l, corner: r && l });
    }
    let min_r = levels.iter().find(|l| l.r).map(|l| l.m);
    let min_l = levels.iter().find(|l| l.l).map(|l| l.m);
    let generators = s.generators().map(<[_]>::len);
    let note = if in_da && (min_r.is_none() || min_l.is_none()) {
        Some(match generators {
            Some(g) => format!("no level up to {max_m}; {g} generators bound the level by {}", g + 1),
            None => format!("no level up to {max_m}"),
        })
    } else {
        None
    };
    let lj = in_local(s, &j_trivial_monoids())?;
    let flags = AuxFlags {
        j_trivial: s.is_j_trivial(),
        r_trivial: s.is_r_trivial(),
        l_trivial: s.is_l_trivial(),
        band: s.is_band(),
        commutative: s.is_commutative(),
        lj_and_da: lj && in_da,
        r_and_lj: lj && s.is_r_trivial(),
    };
    Ok(HierarchyReport {
        id: None,
        order: s.order(),
        monoid: s.is_monoid(),
        generators,
        in_da,
        max_m,
        min_r,
        min_l,
        levels,
        flags,
        note,
    })
}
