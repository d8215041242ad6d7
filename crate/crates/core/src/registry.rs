//! Named statistics. The names are the stable identifiers used by the CLI
//! and in JSON output.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::classical::{self, descent_partials, exc_split, excedance_partials, word_inversions};
use crate::error::{Error, Result};
use crate::fisher_yates;
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Mahonian,
    Eulerian,
    Partial,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Mahonian => "mahonian",
            Kind::Eulerian => "eulerian",
            Kind::Partial => "partial",
        })
    }
}

/// Which convention a statistic follows where more than one is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Standard,
    /// Descent bottoms taken as positions.
    Index,
    /// Descent bottoms taken as letters.
    Value,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::Index => "index",
            Variant::Value => "value",
        })
    }
}

pub type Evaluator = fn(&Permutation) -> i64;

#[derive(Clone, Copy)]
pub struct StatisticDescriptor {
    pub name: &'static str,
    pub kind: Kind,
    pub variant: Variant,
    pub summary: &'static str,
    eval: Evaluator,
}

impl StatisticDescriptor {
    pub fn eval(&self, p: &Permutation) -> i64 {
        (self.eval)(p)
    }
}

impl fmt::Debug for StatisticDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StatisticDescriptor")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("variant", &self.variant)
            .finish()
    }
}

#[derive(Debug)]
pub struct Registry {
    entries: Vec<StatisticDescriptor>,
}

impl Registry {
    pub fn lookup(&self, name: &str) -> Result<&StatisticDescriptor> {
        self.entries
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn entries(&self) -> &[StatisticDescriptor] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|d| d.name)
    }

    pub fn of_kind(&self, kind: Kind) -> impl Iterator<Item = &StatisticDescriptor> + '_ {
        self.entries.iter().filter(move |d| d.kind == kind)
    }

    pub fn eval(&self, name: &str, p: &Permutation) -> Result<i64> {
        Ok(self.lookup(name)?.eval(p))
    }
}

fn to_i(v: u64) -> i64 {
    v as i64
}

macro_rules! entry {
    ($name:literal, $kind:ident, $variant:ident, $summary:literal, $f:expr) => {
        StatisticDescriptor {
            name: $name,
            kind: Kind::$kind,
            variant: Variant::$variant,
            summary: $summary,
            eval: $f,
        }
    };
}

fn build() -> Registry {
    use classical as c;
    let entries = vec![
        entry!(
            "stat",
            Mahonian,
            Standard,
            "total rightward shuffle distance",
            |p| to_i(fisher_yates::stat(p))
        ),
        entry!(
            "stati",
            Mahonian,
            Standard,
            "stat of the inverse",
            |p| to_i(fisher_yates::stati(p))
        ),
        entry!("inv", Mahonian, Standard, "inversions", |p| to_i(c::inv(p))),
        entry!("maj", Mahonian, Standard, "major index", |p| to_i(c::maj(
            p
        ))),
        entry!("den", Mahonian, Standard, "Denert: ebot + ine", |p| to_i(
            c::den(p)
        )),
        entry!("mak_val", Mahonian, Value, "dbot_val + res", |p| to_i(
            c::mak_val(p)
        )),
        entry!("mad_val", Mahonian, Value, "ddif_val + res", |p| to_i(
            c::mad_val(p)
        )),
        entry!(
            "hag",
            Mahonian,
            Standard,
            "edif + inv_e - inv_n + hag_e",
            |p| to_i(c::hag(p))
        ),
        entry!(
            "mak_idx",
            Partial,
            Index,
            "dbot_idx + res (not Mahonian)",
            |p| to_i(c::mak_idx(p))
        ),
        entry!(
            "mad_idx",
            Partial,
            Index,
            "ddif_idx + res (not Mahonian)",
            c::mad_idx
        ),
        entry!("des", Eulerian, Standard, "descents", |p| to_i(c::des(p))),
        entry!("exc", Eulerian, Standard, "excedances", |p| to_i(c::exc(p))),
        entry!(
            "ska",
            Eulerian,
            Standard,
            "record count of the distance sequence",
            |p| to_i(fisher_yates::ska(p))
        ),
        entry!("dtop", Partial, Standard, "sum of descent tops", |p| to_i(
            descent_partials(p).dtop
        )),
        entry!(
            "dbot_idx",
            Partial,
            Index,
            "sum of descent positions",
            |p| to_i(descent_partials(p).dbot_idx)
        ),
        entry!(
            "dbot_val",
            Partial,
            Value,
            "sum of descent bottom letters",
            |p| to_i(descent_partials(p).dbot_val)
        ),
        entry!("ddif_idx", Partial, Index, "dtop - dbot_idx", |p| {
            descent_partials(p).ddif_idx()
        }),
        entry!("ddif_val", Partial, Value, "dtop - dbot_val", |p| to_i(
            descent_partials(p).ddif_val()
        )),
        entry!(
            "etop",
            Partial,
            Standard,
            "sum of excedance tops",
            |p| to_i(excedance_partials(p).etop)
        ),
        entry!("ebot", Partial, Standard, "sum of excedance bottoms", |p| {
            to_i(excedance_partials(p).ebot)
        }),
        entry!("edif", Partial, Standard, "etop - ebot", |p| to_i(
            excedance_partials(p).edif()
        )),
        entry!(
            "res",
            Partial,
            Standard,
            "sum of right embracing numbers",
            |p| to_i(c::res(p))
        ),
        entry!("ine", Partial, Standard, "inv_e + inv_n", |p| to_i(c::ine(
            p
        ))),
        entry!("hag_e", Partial, Standard, "excedance part of hag", |p| {
            to_i(c::hag_e(p))
        }),
        entry!(
            "inv_e",
            Partial,
            Standard,
            "inversions among excedance letters",
            |p| to_i(word_inversions(&exc_split(p).excedant))
        ),
        entry!(
            "inv_n",
            Partial,
            Standard,
            "inversions among non-excedance letters",
            |p| to_i(word_inversions(&exc_split(p).rest))
        ),
    ];
    Registry { entries }
}

pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn lookup(name: &str) -> Result<&'static StatisticDescriptor> {
    registry().lookup(name)
}
