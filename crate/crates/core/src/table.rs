//! Simple-element counts by several engines, and the two rows of the
//! counting table.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::congruence::Congruence;
use crate::coxeter::{group_order_formula, CoxeterDatum};
use crate::error::{Error, Result};
use crate::interval::{
    classical_count, classical_formula, enumerate_interval, ncp_count, ncp_formula, Structure,
};
use crate::presentation::{completed_dual_presentation, garside_word};
use crate::types::CoxeterType;

/// Largest group enumerated for the classical row; larger orders are
/// taken from the product of the degrees.
pub const GROUP_ENUMERATION_LIMIT: usize = 60_000;

/// Orders of the exceptional groups.
pub fn table_classical_value(ty: CoxeterType) -> u128 {
    match ty {
        CoxeterType::H3 => 120,
        CoxeterType::F4 => 1152,
        CoxeterType::H4 => 14400,
        CoxeterType::E6 => 51840,
        CoxeterType::E7 => 2903040,
        CoxeterType::E8 => 696729600,
        other => classical_count(other),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Interval,
    Rewriting,
    Formula,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Interval => "interval",
            Engine::Rewriting => "rewriting",
            Engine::Formula => "formula",
        }
    }
}

/// Dual count from the interval `[1, c]`.
pub fn dual_count_interval(ty: CoxeterType) -> Result<u128> {
    Ok(enumerate_interval(&CoxeterDatum::new(ty)?)?.len() as u128)
}

/// Dual count as the number of left divisors of `δ` in the completed
/// presentation.
pub fn dual_count_rewriting(ty: CoxeterType) -> Result<u128> {
    if !ty.has_presentation() {
        return Err(Error::Unsupported(format!("{ty} has no explicit presentation")));
    }
    let oracle = Congruence::new(&completed_dual_presentation(ty)?);
    Ok(oracle.count_simples(&garside_word(ty)?)? as u128)
}

/// `|W|` by enumeration.
pub fn classical_count_enumerated(ty: CoxeterType) -> Result<u128> {
    Ok(CoxeterDatum::new(ty)?.enumerate_group(GROUP_ENUMERATION_LIMIT)?.order() as u128)
}

fn run(ty: CoxeterType, structure: Structure, engine: Engine) -> Result<u128> {
    match (structure, engine) {
        (Structure::Dual, Engine::Interval) => dual_count_interval(ty),
        (Structure::Dual, Engine::Rewriting) => dual_count_rewriting(ty),
        (Structure::Dual, Engine::Formula) => Ok(ncp_count(ty)),
        (Structure::Classical, Engine::Interval) => classical_count_enumerated(ty),
        (Structure::Classical, Engine::Formula) => Ok(classical_count(ty)),
        (Structure::Classical, Engine::Rewriting) => Err(Error::Unsupported(
            "the rewriting engine counts dual simples only".into(),
        )),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplesCount {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub structure: Structure,
    pub engine: Engine,
    pub count: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_simples: Option<u128>,
    pub formula: Option<&'static str>,
    /// Every engine that ran, with its count.
    pub engines: BTreeMap<&'static str, u128>,
    pub agree: bool,
    pub elapsed_ms: u128,
}

/// Counts simples with `engine` and cross-checks against the other engines
/// that are cheap enough: the formula always, the interval model whenever
/// the rewriting engine was requested.
pub fn count_simples(ty: CoxeterType, structure: Structure, engine: Engine) -> Result<SimplesCount> {
    let start = Instant::now();
    let mut engines = BTreeMap::new();
    let count = run(ty, structure, engine)?;
    engines.insert(engine.name(), count);
    let mut others = vec![Engine::Formula];
    if engine == Engine::Rewriting {
        others.push(Engine::Interval);
    }
    for other in others {
        if other != engine {
            engines.insert(other.name(), run(ty, structure, other)?);
        }
    }
    let agree = engines.values().all(|&c| c == count);
    let (formula, dual_simples) = match structure {
        Structure::Dual => (ncp_formula(ty), Some(count)),
        Structure::Classical => (classical_formula(ty), None),
    };
    Ok(SimplesCount {
        ty: ty.family().to_string(),
        rank: ty.parameter(),
        structure,
        engine,
        count,
        dual_simples,
        formula,
        engines,
        agree,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[derive(Debug, Clone, Default)]
pub struct TableOptions {
    /// Largest rank for the series `A`, `B`, `D`.
    pub max_rank: Option<u32>,
    /// Type families to leave out (`A`, `E7`, `I2`, ...).
    pub skip: Vec<String>,
    /// Include `E7` and `E8`.
    pub full: bool,
}

/// The cells of the table: `A(1..7)`, `B(2..6)`, `D(3..6)`, the
/// exceptional types, `I2(3..12)`.
pub fn table_types(opts: &TableOptions) -> Vec<CoxeterType> {
    let cap = |n: u32| !matches!(opts.max_rank, Some(k) if n > k);
    let mut types: Vec<CoxeterType> = Vec::new();
    types.extend((1..=7).filter(|&n| cap(n)).map(CoxeterType::A));
    types.extend((2..=6).filter(|&n| cap(n)).map(CoxeterType::B));
    types.extend((3..=6).filter(|&n| cap(n)).map(CoxeterType::D));
    types.extend([CoxeterType::H3, CoxeterType::F4, CoxeterType::H4, CoxeterType::E6]);
    if opts.full {
        types.extend([CoxeterType::E7, CoxeterType::E8]);
    }
    types.extend((3..=12).map(CoxeterType::I2));
    types.retain(|ty| !opts.skip.iter().any(|s| s.trim().eq_ignore_ascii_case(ty.family())));
    types
}

#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub row: Structure,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub formula: Option<&'static str>,
    pub expected: u128,
    pub computed: Option<u128>,
    /// `interval`, `group` or `formula`.
    pub method: &'static str,
    pub elapsed_ms: u128,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub check: &'static str,
    pub cells: Vec<TableCell>,
    pub pass: bool,
}

fn cell(ty: CoxeterType, row: Structure) -> TableCell {
    let start = Instant::now();
    let (expected, formula) = match row {
        Structure::Dual => (ncp_count(ty), ncp_formula(ty)),
        Structure::Classical => (table_classical_value(ty), classical_formula(ty)),
    };
    let (method, computed) = match row {
        Structure::Dual => ("interval", dual_count_interval(ty)),
        Structure::Classical if group_order_formula(ty) <= GROUP_ENUMERATION_LIMIT as u128 => {
            ("group", classical_count_enumerated(ty))
        }
        Structure::Classical => ("formula", Ok(group_order_formula(ty))),
    };
    let (computed, error) = match computed {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    TableCell {
        row,
        ty: ty.family().to_string(),
        rank: ty.parameter(),
        formula,
        expected,
        computed,
        method,
        elapsed_ms: start.elapsed().as_millis(),
        error,
        pass: computed == Some(expected),
    }
}

/// Both rows of the table; classical cells first, each row in
/// [`table_types`] order.
pub fn table1(opts: &TableOptions) -> Table {
    let types = table_types(opts);
    let jobs: Vec<(CoxeterType, Structure)> = [Structure::Classical, Structure::Dual]
        .into_iter()
        .flat_map(|row| types.iter().map(move |&ty| (ty, row)))
        .collect();
    let cells: Vec<TableCell> = jobs.par_iter().map(|&(ty, row)| cell(ty, row)).collect();
    let pass = cells.iter().all(|c| c.pass);
    Table {
        check: "table1",
        cells,
        pass,
    }
}

impl Table {
    /// Plain-text rendering, one line per cell.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            let label = match c.ty.as_str() {
                "A" | "B" | "D" => format!("{}({})", c.ty, c.rank),
                "I2" => format!("I2({})", c.rank),
                other => other.to_string(),
            };
            let computed = c.computed.map_or_else(|| "-".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{:<9} {:<6} expected {:>10}  computed {:>10}  [{}] {:>7} ms  {}\n",
                format!("{:?}", c.row).to_lowercase(),
                label,
                c.expected,
                computed,
                c.method,
                c.elapsed_ms,
                if c.pass { "ok" } else { "FAIL" }
            ));
        }
        out
    }
}
