//! Exhaustive searches for solutions of Diophantine equations built from η,
//! s, σ_k, φ and π over finite domains.
//!
//! A search walks a [`SearchDomain`] (a list of arithmetic progressions,
//! one per unknown) in row-major order. Each tuple is first screened by the
//! [`Filter`]s; the tuples that pass are counted as analyzed and handed to
//! the equation's predicate. Function values are read from precomputed
//! tables held in a [`TableSet`].
//!
//! Reading a table outside its range is an error, never a silent skip, so
//! every equation that indexes a table with a growing argument carries a
//! `bound(...)` filter. When such a bound (or a `cap(...)` magnitude
//! filter) fails for an expression that cannot decrease along the
//! innermost variable, the rest of that innermost run is skipped. Those
//! tuples would all fail the same filter, so counts are unaffected.

mod auxiliary;
mod expr;
mod registry;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;

use crate::arithfun::{TableFn, ValueTable};
use crate::error::{Error, Result};
use crate::factorint::factor_u64;
use crate::primality::{tp_eta, TestVerdict};

pub use auxiliary::{erdos_straus, has_229_property, narcissistic, reverse_digits, ERDOS_STRAUS_CAP};
pub use expr::{Cap, Expr, Func};
pub use registry::{lookup, registry};

/// The tables a search reads, plus π derived from the η table.
#[derive(Clone, Debug, Default)]
pub struct TableSet {
    tables: [Option<ValueTable>; 6],
    /// π(n) for 0 ≤ n ≤ N of the η table.
    pi: Vec<u32>,
}

fn slot(f: TableFn) -> usize {
    TableFn::ALL.iter().position(|&g| g == f).expect("listed in ALL")
}

impl TableSet {
    /// An empty set.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds every listed table up to n.
    pub fn generate(funcs: &[TableFn], n: u64) -> Result<Self> {
        let mut set = TableSet::new();
        for &f in funcs {
            if !set.has(f) {
                set.insert(crate::arithfun::gen_table(f, n)?);
            }
        }
        Ok(set)
    }

    /// Adds or replaces a table. Inserting the η table also derives π.
    pub fn insert(&mut self, table: ValueTable) {
        if table.func() == TableFn::Eta {
            self.pi = pi_from_eta(&table);
        }
        let i = slot(table.func());
        self.tables[i] = Some(table);
    }

    /// Whether the table is loaded.
    pub fn has(&self, f: TableFn) -> bool {
        self.tables[slot(f)].is_some()
    }

    /// The loaded table, or a configuration error.
    pub fn table(&self, f: TableFn) -> Result<&ValueTable> {
        self.tables[slot(f)]
            .as_ref()
            .ok_or_else(|| Error::Config(format!("the {f} table is not loaded")))
    }

    /// Largest valid index for the function.
    pub fn len_of(&self, f: Func) -> Result<u64> {
        Ok(self.table(f.backing_table())?.len())
    }

    /// f(n), with a range error outside 1..=N.
    pub fn value(&self, f: Func, n: u64) -> Result<u64> {
        match f {
            Func::Table(t) => self.get(t, n),
            Func::Pi => self.pi(n),
        }
    }

    #[inline]
    fn get(&self, f: TableFn, n: u64) -> Result<u64> {
        let table = self.table(f)?;
        table.get(n).ok_or_else(|| beyond(f.name(), n, table.len()))
    }

    /// η(n) from the table.
    #[inline]
    pub fn eta(&self, n: u64) -> Result<u64> {
        self.get(TableFn::Eta, n)
    }

    /// s(n), the sum of the proper divisors.
    #[inline]
    pub fn s(&self, n: u64) -> Result<u64> {
        self.get(TableFn::S, n)
    }

    /// σ_k(n) for k ∈ {0, 1, 2}.
    #[inline]
    pub fn sigma(&self, k: i64, n: u64) -> Result<u64> {
        self.get(sigma_fn(k)?, n)
    }

    /// φ(n).
    #[inline]
    pub fn phi(&self, n: u64) -> Result<u64> {
        self.get(TableFn::Phi, n)
    }

    /// π(n), available for 1 ≤ n ≤ N of the η table.
    #[inline]
    pub fn pi(&self, n: u64) -> Result<u64> {
        if !self.has(TableFn::Eta) {
            return Err(Error::Config("pi needs the eta table".into()));
        }
        match self.pi.get(n as usize) {
            Some(&v) if n >= 1 => Ok(v as u64),
            _ => Err(beyond("pi", n, self.pi.len() as u64 - 1)),
        }
    }
}

fn beyond(name: &str, n: u64, len: u64) -> Error {
    Error::Range(format!(
        "index {n} is outside the {name} table (1..={len}); guard it with a bound filter"
    ))
}

/// The σ table for k ∈ {0, 1, 2}.
pub fn sigma_fn(k: i64) -> Result<TableFn> {
    match k {
        0 => Ok(TableFn::Sigma0),
        1 => Ok(TableFn::Sigma1),
        2 => Ok(TableFn::Sigma2),
        _ => Err(Error::Domain(format!("sigma tables exist for k = 0, 1, 2, not {k}"))),
    }
}

/// π from the η table: η(k) = k exactly for k = 1, 4 and the primes, so
/// π(n) counts those fixed points in 2..=n and drops 4.
fn pi_from_eta(eta: &ValueTable) -> Vec<u32> {
    let mut pi = Vec::with_capacity(eta.len() as usize + 1);
    pi.push(0u32);
    let mut fixed = 0u32;
    for (n, &e) in (1u64..).zip(eta.values()) {
        if n >= 2 && e == n {
            fixed += 1;
        }
        pi.push(if n >= 4 { fixed - 1 } else { fixed });
    }
    pi
}

/// Where a dimension starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Start {
    /// A fixed first value.
    Value(u64),
    /// The current value of an earlier dimension plus an offset, as in
    /// `y = x+1..1000` for searches over x < y.
    After { dim: usize, offset: u64 },
}

/// One unknown and the arithmetic progression it runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim {
    pub name: String,
    pub start: Start,
    pub step: u64,
    /// Inclusive upper bound; the last value is the largest start + k·step
    /// not exceeding it.
    pub stop: u64,
}

/// The cartesian search domain, outermost dimension first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchDomain {
    dims: Vec<Dim>,
}

impl SearchDomain {
    /// Validates and wraps the dimensions.
    pub fn new(dims: Vec<Dim>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Domain("a search domain needs at least one dimension".into()));
        }
        for (i, d) in dims.iter().enumerate() {
            if d.step == 0 {
                return Err(Error::Domain(format!("dimension {} has step 0", d.name)));
            }
            if dims[..i].iter().any(|e| e.name == d.name) {
                return Err(Error::Domain(format!("dimension {} is repeated", d.name)));
            }
            if let Start::After { dim, .. } = d.start {
                if dim >= i {
                    return Err(Error::Domain(format!(
                        "dimension {} can only start after an earlier dimension",
                        d.name
                    )));
                }
            }
        }
        Ok(SearchDomain { dims })
    }

    /// The dimensions, outermost first.
    pub fn dims(&self) -> &[Dim] {
        &self.dims
    }

    /// Variable names in order.
    pub fn names(&self) -> Vec<&str> {
        self.dims.iter().map(|d| d.name.as_str()).collect()
    }

    fn first(&self, i: usize, vals: &[u64]) -> u64 {
        match self.dims[i].start {
            Start::Value(a) => a,
            Start::After { dim, offset } => vals[dim].saturating_add(offset),
        }
    }

    fn count_from(&self, i: usize, vals: &mut Vec<u64>) -> u128 {
        if i == self.dims.len() {
            return 1;
        }
        let d = &self.dims[i];
        let a = self.first(i, vals);
        if a > d.stop {
            return 0;
        }
        let here = ((d.stop - a) / d.step + 1) as u128;
        let referenced = self.dims[i + 1..]
            .iter()
            .any(|e| matches!(e.start, Start::After { dim, .. } if dim == i));
        if !referenced {
            vals.push(a);
            let rest = self.count_from(i + 1, vals);
            vals.pop();
            return here * rest;
        }
        let mut total = 0;
        let mut v = a;
        loop {
            vals.push(v);
            total += self.count_from(i + 1, vals);
            vals.pop();
            match v.checked_add(d.step) {
                Some(next) if next <= d.stop => v = next,
                _ => break,
            }
        }
        total
    }

    /// Number of tuples the domain enumerates. For independent dimensions
    /// this is the product of ⌊(b − a)/r⌋ + 1 over the dimensions.
    pub fn possible(&self) -> u128 {
        self.count_from(0, &mut Vec::with_capacity(self.dims.len()))
    }

    /// Whether every value of dimension i is at least 1.
    fn ge1(&self, i: usize) -> bool {
        match self.dims[i].start {
            Start::Value(a) => a >= 1,
            Start::After { dim, offset } => offset >= 1 || self.ge1(dim),
        }
    }

    /// Replaces the bounds of the named dimensions, keeping the others.
    pub fn overridden(&self, with: &SearchDomain) -> Result<SearchDomain> {
        let mut dims = self.dims.clone();
        for d in &with.dims {
            let slot = dims
                .iter_mut()
                .find(|e| e.name == d.name)
                .ok_or_else(|| Error::Config(format!("unknown variable {}", d.name)))?;
            let start = match d.start {
                Start::Value(a) => Start::Value(a),
                Start::After { dim, offset } => {
                    let name = &with.dims[dim].name;
                    let dim = self
                        .dims
                        .iter()
                        .position(|e| &e.name == name)
                        .ok_or_else(|| Error::Config(format!("unknown variable {name}")))?;
                    Start::After { dim, offset }
                }
            };
            *slot = Dim { name: d.name.clone(), start, step: d.step, stop: d.stop };
        }
        SearchDomain::new(dims)
    }
}

impl FromStr for SearchDomain {
    type Err = Error;

    /// Parses `m=2..10;n=1..10;x=1..16:2`. A start may name an earlier
    /// variable, as in `y=x+1..1000`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |part: &str, why: &str| Error::Parse {
            line: 1,
            msg: format!("bad domain part `{part}`: {why}"),
        };
        let mut dims: Vec<Dim> = Vec::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, range) = part.split_once('=').ok_or_else(|| bad(part, "missing `=`"))?;
            let (range, step) = match range.split_once(':') {
                Some((r, s)) => (r, s.trim().parse().map_err(|_| bad(part, "bad step"))?),
                None => (range, 1),
            };
            let (lo, hi) = range.split_once("..").ok_or_else(|| bad(part, "missing `..`"))?;
            let stop = parse_u64(hi).ok_or_else(|| bad(part, "bad stop"))?;
            let lo = lo.trim();
            let start = if let Some(a) = parse_u64(lo) {
                Start::Value(a)
            } else {
                let (var, offset) = match lo.split_once('+') {
                    Some((v, o)) => (v.trim(), parse_u64(o).ok_or_else(|| bad(part, "bad offset"))?),
                    None => (lo, 0),
                };
                let dim = dims
                    .iter()
                    .position(|d| d.name == var)
                    .ok_or_else(|| bad(part, "start must be a number or an earlier variable"))?;
                Start::After { dim, offset }
            };
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(bad(part, "bad variable name"));
            }
            dims.push(Dim { name: name.to_string(), start, step, stop });
        }
        SearchDomain::new(dims)
    }
}

/// Integers written plainly or as `AeB`.
fn parse_u64(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.split_once('e') {
        Some((a, b)) => {
            let a: u64 = a.parse().ok()?;
            a.checked_mul(10u64.checked_pow(b.parse().ok()?)?)
        }
        None => s.parse().ok(),
    }
}

impl fmt::Display for SearchDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}=", d.name)?;
            match d.start {
                Start::Value(a) => write!(f, "{a}")?,
                Start::After { dim, offset: 0 } => write!(f, "{}", self.dims[dim].name)?,
                Start::After { dim, offset } => write!(f, "{}+{offset}", self.dims[dim].name)?,
            }
            write!(f, "..{}", d.stop)?;
            if d.step != 1 {
                write!(f, ":{}", d.step)?;
            }
        }
        Ok(())
    }
}

/// Upper limit of a `bound` filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    /// The last index of a function's table.
    Table(Func),
    Value(u64),
}

/// Screens candidate tuples before the equation is evaluated. Variables
/// are indices into the tuple.
#[derive(Clone, Debug, PartialEq)]
pub enum Filter {
    /// gcd of the two variables is 1.
    Coprime(usize, usize),
    /// gcd of the two variables exceeds 1.
    SharesFactor(usize, usize),
    /// The variable is not prime by the η test; 1 and 4 count as not prime.
    NonPrime(usize),
    Less(usize, usize),
    NotEqual(usize, usize),
    /// 1 ≤ expr ≤ limit, so the expression is a valid table index.
    TableBound { expr: Expr, limit: Limit },
    /// expr ≤ cap.
    Magnitude { expr: Expr, cap: Cap },
    /// expr ≤ cap, and the first value of the innermost variable where it
    /// fails ends that innermost run, whether or not later values would
    /// pass. This mirrors a scan that stops at the first overflow.
    Stop { expr: Expr, cap: Cap },
}

/// Outcome of one filter on one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Pass,
    Fail,
    /// Failed because a value was too large.
    TooLarge,
}

impl Filter {
    /// Parses one filter against the variable names. Forms:
    /// `coprime(a,b)`, `shares_factor(a,b)`, `nonprime(a)`, `less(a,b)` or
    /// `a<b`, `not_equal(a,b)` or `a!=b`, `bound(EXPR, LIMIT)` with LIMIT a
    /// number or a function name, `cap(EXPR, CAP)` with CAP such as
    /// `1e17`, and `stop(EXPR, CAP)`.
    pub fn parse(text: &str, names: &[&str]) -> Result<Filter> {
        let trimmed = text.trim();
        for head in ["cap(", "magnitude(", "stop("] {
            if let Some(inner) = trimmed.strip_prefix(head).and_then(|r| r.strip_suffix(')')) {
                // Caps such as 1e307 exceed any expression literal, so the
                // cap is split off and parsed exactly on its own.
                let (e, cap) = inner.rsplit_once(',').ok_or_else(|| Error::Parse {
                    line: 1,
                    msg: format!("bad filter `{text}`: expected cap(EXPR, CAP)"),
                })?;
                let (expr, cap) = (Expr::parse(e, names)?, Cap::parse(cap)?);
                return Ok(if head == "stop(" {
                    Filter::Stop { expr, cap }
                } else {
                    Filter::Magnitude { expr, cap }
                });
            }
        }
        let mut p = expr::Parser::new(text, names)?;
        let head = match p.peek() {
            Some(expr::Token::Ident(id)) => id.clone(),
            _ => return Err(Error::Parse { line: 1, msg: format!("bad filter `{text}`") }),
        };
        let pair = |p: &mut expr::Parser| -> Result<(usize, usize)> {
            p.expect("(")?;
            let a = p.var()?;
            p.expect(",")?;
            let b = p.var()?;
            p.expect(")")?;
            Ok((a, b))
        };
        let filter = match head.as_str() {
            "coprime" | "shares_factor" | "less" | "not_equal" => {
                p.next();
                let (a, b) = pair(&mut p)?;
                match head.as_str() {
                    "coprime" => Filter::Coprime(a, b),
                    "shares_factor" => Filter::SharesFactor(a, b),
                    "less" => Filter::Less(a, b),
                    _ => Filter::NotEqual(a, b),
                }
            }
            "nonprime" => {
                p.next();
                p.expect("(")?;
                let a = p.var()?;
                p.expect(")")?;
                Filter::NonPrime(a)
            }
            "bound" | "table_bound" => {
                p.next();
                p.expect("(")?;
                let e = p.expr()?;
                p.expect(",")?;
                let limit = match p.next() {
                    Some(expr::Token::Num(n)) => Limit::Value(n),
                    Some(expr::Token::Ident(id)) => {
                        Limit::Table(Func::parse(&id).ok_or_else(|| Error::Parse {
                            line: 1,
                            msg: format!("unknown table `{id}`"),
                        })?)
                    }
                    other => {
                        return Err(Error::Parse { line: 1, msg: format!("bad limit {other:?}") })
                    }
                };
                p.expect(")")?;
                Filter::TableBound { expr: e, limit }
            }
            _ => {
                let a = p.var()?;
                let f = if p.eat("<") {
                    Filter::Less(a, p.var()?)
                } else if p.eat("!=") {
                    Filter::NotEqual(a, p.var()?)
                } else {
                    return Err(Error::Parse { line: 1, msg: format!("bad filter `{text}`") });
                };
                f
            }
        };
        p.finish()?;
        Ok(filter)
    }

    /// Displays the filter in the syntax accepted by [`Filter::parse`].
    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        FilterDisplay { filter: self, names }
    }

    fn tables_needed(&self, out: &mut Vec<TableFn>) {
        let mut funcs = Vec::new();
        match self {
            Filter::NonPrime(_) => out.push(TableFn::Eta),
            Filter::TableBound { expr, limit } => {
                expr.funcs(&mut funcs);
                if let Limit::Table(f) = limit {
                    funcs.push(*f);
                }
            }
            Filter::Magnitude { expr, .. } | Filter::Stop { expr, .. } => expr.funcs(&mut funcs),
            _ => {}
        }
        out.extend(funcs.into_iter().map(Func::backing_table));
    }

    #[inline]
    fn check(&self, vals: &[u64], tables: &TableSet) -> Result<Check> {
        let pass = |b: bool| if b { Check::Pass } else { Check::Fail };
        Ok(match self {
            Filter::Coprime(a, b) => pass(vals[*a].gcd(&vals[*b]) == 1),
            Filter::SharesFactor(a, b) => pass(vals[*a].gcd(&vals[*b]) != 1),
            Filter::Less(a, b) => pass(vals[*a] < vals[*b]),
            Filter::NotEqual(a, b) => pass(vals[*a] != vals[*b]),
            Filter::NonPrime(a) => match tp_eta(vals[*a], tables.table(TableFn::Eta)?) {
                TestVerdict::Composite => Check::Pass,
                TestVerdict::Prime => Check::Fail,
                TestVerdict::Invalid => {
                    return Err(beyond("eta", vals[*a], tables.table(TableFn::Eta)?.len()))
                }
            },
            Filter::TableBound { expr, limit } => {
                let max = match limit {
                    Limit::Value(v) => *v,
                    Limit::Table(f) => tables.len_of(*f)?,
                };
                match expr.eval_u128(vals, tables)? {
                    Some(0) => Check::Fail,
                    Some(v) if v <= max as u128 => Check::Pass,
                    _ => Check::TooLarge,
                }
            }
            Filter::Magnitude { expr, cap } | Filter::Stop { expr, cap } => {
                if cap.admits(expr, vals, tables)? {
                    Check::Pass
                } else {
                    Check::TooLarge
                }
            }
        })
    }

    /// Whether a `TooLarge` outcome at one value of the innermost variable
    /// implies the same outcome at every later value.
    fn prunes(&self, innermost: usize, ge1: &[bool]) -> bool {
        match self {
            Filter::TableBound { expr, .. } | Filter::Magnitude { expr, .. } => {
                expr.depends_on(innermost) && expr.nondecreasing_in(innermost, ge1)
            }
            Filter::Stop { .. } => true,
            _ => false,
        }
    }
}

struct FilterDisplay<'a> {
    filter: &'a Filter,
    names: &'a [&'a str],
}

impl fmt::Display for FilterDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.names;
        match self.filter {
            Filter::Coprime(a, b) => write!(f, "coprime({},{})", n[*a], n[*b]),
            Filter::SharesFactor(a, b) => write!(f, "shares_factor({},{})", n[*a], n[*b]),
            Filter::NonPrime(a) => write!(f, "nonprime({})", n[*a]),
            Filter::Less(a, b) => write!(f, "{}<{}", n[*a], n[*b]),
            Filter::NotEqual(a, b) => write!(f, "{}!={}", n[*a], n[*b]),
            Filter::TableBound { expr, limit } => {
                write!(f, "bound({}, ", expr.display(n))?;
                match limit {
                    Limit::Value(v) => write!(f, "{v})"),
                    Limit::Table(t) => write!(f, "{})", t.name()),
                }
            }
            Filter::Magnitude { expr, cap } => write!(f, "cap({}, {cap})", expr.display(n)),
            Filter::Stop { expr, cap } => write!(f, "stop({}, {cap})", expr.display(n)),
        }
    }
}

/// Predicate of an equation: the tuple, the parameter values and the
/// tables. Returns whether the tuple solves the equation.
pub type Predicate = fn(&[u64], &[i64], &TableSet) -> Result<bool>;

/// A named parameter of an equation, such as the offset k in
/// η(x^y) − η(z^w) = k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub value: i64,
    /// False for values fixed by the registry id, such as the k of σ_k,
    /// which also selects the tables and filters.
    pub settable: bool,
}

/// One searchable equation.
#[derive(Clone, Debug)]
pub struct EquationSpec {
    /// Registry identifier, such as "2069" or "guy12".
    pub id: &'static str,
    /// The equation in plain notation.
    pub formula: &'static str,
    /// Unknowns, in tuple order.
    pub vars: Vec<&'static str>,
    /// Tables the predicate reads.
    pub tables: Vec<TableFn>,
    pub params: Vec<Param>,
    pub predicate: Predicate,
    pub default_domain: SearchDomain,
    pub default_filters: Vec<Filter>,
}

impl EquationSpec {
    /// Number of unknowns.
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Sets a parameter by name.
    pub fn set_param(&mut self, name: &str, value: i64) -> Result<()> {
        let p = self
            .params
            .iter_mut()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::Config(format!("equation {} has no parameter {name}", self.id)))?;
        if !p.settable {
            return Err(Error::Config(format!(
                "parameter {name} of equation {} is fixed; pick the variant by id",
                self.id
            )));
        }
        p.value = value;
        Ok(())
    }

    /// Every table a run with these filters reads.
    pub fn tables_needed(&self, filters: &[Filter]) -> Vec<TableFn> {
        let mut out = self.tables.clone();
        for f in filters {
            f.tables_needed(&mut out);
        }
        out.sort();
        out.dedup();
        out
    }

    /// Parses filters written with this equation's variable names.
    pub fn parse_filter(&self, text: &str) -> Result<Filter> {
        Filter::parse(text, &self.vars)
    }

    /// Evaluates the predicate on one tuple.
    pub fn holds(&self, tuple: &[u64], tables: &TableSet) -> Result<bool> {
        let params: Vec<i64> = self.params.iter().map(|p| p.value).collect();
        (self.predicate)(tuple, &params, tables)
    }
}

/// Outcome of a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub id: String,
    pub domain: SearchDomain,
    /// Solutions in lexicographic order.
    pub solutions: Vec<Vec<u64>>,
    /// Tuples that passed every filter.
    pub analyzed: u64,
    /// Tuples in the domain.
    pub possible: u128,
    pub elapsed: Duration,
}

impl SearchResult {
    /// Number of solutions.
    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

#[derive(Default)]
struct Partial {
    solutions: Vec<Vec<u64>>,
    analyzed: u64,
}

impl Partial {
    fn merge(mut self, mut other: Partial) -> Partial {
        self.solutions.append(&mut other.solutions);
        self.analyzed += other.analyzed;
        self
    }
}

struct Scan<'a> {
    eq: &'a EquationSpec,
    domain: &'a SearchDomain,
    /// Stop filters first, so a run ends at the first overflow even when
    /// another filter would reject the tuple.
    filters: Vec<&'a Filter>,
    prunes: Vec<bool>,
    params: Vec<i64>,
    tables: &'a TableSet,
}

impl Scan<'_> {
    fn level(&self, i: usize, vals: &mut [u64], out: &mut Partial) -> Result<()> {
        let d = &self.domain.dims[i];
        let mut v = self.domain.first(i, vals);
        let last = i + 1 == vals.len();
        while v <= d.stop {
            vals[i] = v;
            if !last {
                self.level(i + 1, vals, out)?;
            } else {
                match self.screen(vals)? {
                    Check::Pass => {
                        out.analyzed += 1;
                        if (self.eq.predicate)(vals, &self.params, self.tables)? {
                            out.solutions.push(vals.to_vec());
                        }
                    }
                    Check::Fail => {}
                    Check::TooLarge => break,
                }
            }
            v = match v.checked_add(d.step) {
                Some(n) => n,
                None => break,
            };
        }
        Ok(())
    }

    /// Runs the filters in order. `TooLarge` is returned only when the
    /// failing filter allows the rest of the innermost run to be skipped.
    #[inline]
    fn screen(&self, vals: &[u64]) -> Result<Check> {
        for (f, &prunes) in self.filters.iter().zip(&self.prunes) {
            match f.check(vals, self.tables)? {
                Check::Pass => {}
                Check::TooLarge if prunes => return Ok(Check::TooLarge),
                _ => return Ok(Check::Fail),
            }
        }
        Ok(Check::Pass)
    }
}

/// Exhaustive search of `domain` for solutions of `eq`.
///
/// The domain's variable names must equal the equation's. Values of the
/// outermost dimension are distributed over the rayon pool; each worker
/// collects privately and the merged solutions are sorted, so the result
/// does not depend on the number of workers.
pub fn run(
    eq: &EquationSpec,
    domain: &SearchDomain,
    filters: &[Filter],
    tables: &TableSet,
) -> Result<SearchResult> {
    let started = Instant::now();
    if domain.names() != eq.vars {
        return Err(Error::Config(format!(
            "equation {} has variables {}, the domain has {}",
            eq.id,
            eq.vars.join(","),
            domain.names().join(",")
        )));
    }
    for f in eq.tables_needed(filters) {
        tables.table(f)?;
    }
    let n = domain.dims.len();
    let ge1: Vec<bool> = (0..n).map(|i| domain.ge1(i)).collect();
    let (stops, others): (Vec<&Filter>, Vec<&Filter>) =
        filters.iter().partition(|f| matches!(f, Filter::Stop { .. }));
    let ordered: Vec<&Filter> = stops.into_iter().chain(others).collect();
    let scan = Scan {
        eq,
        domain,
        prunes: ordered.iter().map(|f| f.prunes(n - 1, &ge1)).collect(),
        filters: ordered,
        params: eq.params.iter().map(|p| p.value).collect(),
        tables,
    };
    let outer = &domain.dims[0];
    let first = domain.first(0, &[]);
    let outer_values: Vec<u64> = if n == 1 || first > outer.stop {
        Vec::new()
    } else {
        let count = (outer.stop - first) / outer.step + 1;
        (0..count).map(|k| first + k * outer.step).collect()
    };
    let merged = if n == 1 {
        // A single dimension is its own innermost run, so it is scanned in
        // order to keep stop and pruning semantics.
        let mut part = Partial::default();
        scan.level(0, &mut [0], &mut part)?;
        part
    } else {
        outer_values
            .into_par_iter()
            .map(|v| -> Result<Partial> {
                let mut vals = vec![0u64; n];
                vals[0] = v;
                let mut part = Partial::default();
                scan.level(1, &mut vals, &mut part)?;
                Ok(part)
            })
            .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?
    };
    let mut solutions = merged.solutions;
    solutions.sort_unstable();
    Ok(SearchResult {
        id: eq.id.to_string(),
        domain: domain.clone(),
        solutions,
        analyzed: merged.analyzed,
        possible: domain.possible(),
        elapsed: started.elapsed(),
    })
}

/// Runs an equation over its default domain and filters.
pub fn run_default(eq: &EquationSpec, tables: &TableSet) -> Result<SearchResult> {
    run(eq, &eq.default_domain, &eq.default_filters, tables)
}

/// a^b = c^d, decided exactly. Logarithms settle almost every case; when
/// they agree closely the prime exponents are compared.
pub fn pow_eq(a: u64, b: u64, c: u64, d: u64) -> bool {
    let trivial = |x: u64, e: u64| match (x, e) {
        (_, 0) | (1, _) => Some(1),
        (0, _) => Some(0),
        _ => None,
    };
    match (trivial(a, b), trivial(c, d)) {
        (Some(l), Some(r)) => l == r,
        (Some(_), None) | (None, Some(_)) => false,
        (None, None) => {
            if a == c {
                return b == d;
            }
            let l = b as f64 * (a as f64).ln();
            let r = d as f64 * (c as f64).ln();
            if (l - r).abs() > 1e-9 * l.max(r) {
                return false;
            }
            let (fa, fc) = (factor_u64(a), factor_u64(c));
            let (fa, fc) = (fa.factors(), fc.factors());
            fa.len() == fc.len()
                && fa.iter().zip(fc).all(|(&(p, e), &(q, f))| {
                    p == q && (e as u128) * (b as u128) == (f as u128) * (d as u128)
                })
        }
    }
}

/// a^b in u128, `None` on overflow.
pub fn pow_u128(a: u64, b: u64) -> Option<u128> {
    match (a, b) {
        (_, 0) => Some(1),
        (0 | 1, _) => Some(a as u128),
        _ => u32::try_from(b).ok().and_then(|b| (a as u128).checked_pow(b)),
    }
}

/// n! in u128, `None` on overflow.
pub fn factorial_u128(n: u64) -> Option<u128> {
    (2..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// Checked arithmetic for table indices; overflow means the index cannot
/// be in any table.
pub(crate) fn index(v: Option<u64>) -> Result<u64> {
    v.ok_or_else(|| Error::Range("table index overflows u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_tables() -> TableSet {
        TableSet::generate(&TableFn::ALL, 2000).unwrap()
    }

    #[test]
    fn domain_parse_count_display() {
        let d: SearchDomain = "m=2..10;n=1..10;x=1..16".parse().unwrap();
        assert_eq!(d.possible(), 1440);
        assert_eq!(d.to_string(), "m=2..10;n=1..10;x=1..16");
        let d: SearchDomain = "x=2..9999;y=x+1..10000".parse().unwrap();
        assert_eq!(d.possible(), 49985001);
        assert_eq!(d.to_string(), "x=2..9999;y=x+1..10000");
        let d: SearchDomain = "x=2..1e6:113;y=3..1e6:127".parse().unwrap();
        assert_eq!(d.possible(), 69684900);
        assert!("x=1..5:0".parse::<SearchDomain>().is_err());
        assert!("y=x..5".parse::<SearchDomain>().is_err());
        assert!("x=1..5;x=1..3".parse::<SearchDomain>().is_err());
        let empty: SearchDomain = "x=5..4".parse().unwrap();
        assert_eq!(empty.possible(), 0);
    }

    #[test]
    fn filters_round_trip() {
        let names = ["m", "n", "x"];
        for text in [
            "coprime(m,n)",
            "shares_factor(m,x)",
            "nonprime(x)",
            "m<n",
            "m!=x",
            "bound(m*x+n, eta)",
            "bound(x^n, 1000000)",
            "cap(eta(x)^m, 1e17)",
            "stop(eta(x)^x, 1e307)",
        ] {
            let f = Filter::parse(text, &names).unwrap();
            assert_eq!(f.display(&names).to_string(), text);
        }
        assert_eq!(Filter::parse("less(m,n)", &names).unwrap(), Filter::Less(0, 1));
        assert!(Filter::parse("coprime(m)", &names).is_err());
        assert!(Filter::parse("bound(q, eta)", &names).is_err());
    }

    #[test]
    fn pi_from_the_eta_table() {
        let t = small_tables();
        let got: Vec<u64> = (1..=12).map(|n| t.pi(n).unwrap()).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 4, 4, 4, 4, 5, 5]);
        assert_eq!(t.pi(1000).unwrap(), 168);
        assert!(t.pi(0).is_err());
        assert!(t.pi(2001).is_err());
    }

    #[test]
    fn powers_compare_exactly() {
        assert!(pow_eq(4, 3, 8, 2));
        assert!(pow_eq(2, 10, 32, 2));
        assert!(!pow_eq(2, 10, 31, 2));
        assert!(pow_eq(1, 5, 7, 0));
        assert!(pow_eq(0, 3, 0, 1));
        assert!(!pow_eq(0, 3, 1, 1));
        assert!(pow_eq(12, 6, 1728, 2));
        assert!(!pow_eq(1u64 << 40, 3, (1u64 << 40) + 1, 3));
    }

    #[test]
    fn unguarded_index_is_an_error() {
        let t = small_tables();
        let eq = lookup("2069").unwrap();
        let d: SearchDomain = "m=2..10;n=1..10;x=1..500".parse().unwrap();
        assert!(matches!(run(&eq, &d, &[], &t), Err(Error::Range(_))));
        let r = run(&eq, &d, &eq.default_filters, &t).unwrap();
        assert!(r.analyzed < r.possible as u64);
    }

    #[test]
    fn missing_table_is_a_config_error() {
        let t = TableSet::generate(&[TableFn::Eta], 100).unwrap();
        let eq = lookup("2124").unwrap();
        assert!(matches!(run_default(&eq, &t), Err(Error::Config(_))));
    }

    #[test]
    fn pruning_keeps_counts() {
        // The bound m·x + n ≤ N cuts every x run short; the counts must
        // match a scan that evaluates each tuple.
        let t = small_tables();
        let eq = lookup("2069").unwrap();
        let d: SearchDomain = "m=2..10;n=1..10;x=1..400".parse().unwrap();
        let r = run(&eq, &d, &eq.default_filters, &t).unwrap();
        let mut analyzed = 0;
        let mut sols = Vec::new();
        for m in 2..=10u64 {
            for n in 1..=10u64 {
                for x in 1..=400u64 {
                    if m * x + n <= 2000 {
                        analyzed += 1;
                        if crate::eta::eta_u64(m * x + n) == x {
                            sols.push(vec![m, n, x]);
                        }
                    }
                }
            }
        }
        assert_eq!(r.analyzed, analyzed);
        assert_eq!(r.solutions, sols);
    }

    #[test]
    fn stop_ends_the_run_at_the_first_failure() {
        // φ(y)^x is not monotone in y, so only the stop filter may end the
        // y run early; the oracle breaks on the first failing guard.
        let t = small_tables();
        let eq = lookup("2193").unwrap();
        let d: SearchDomain = "x=2..60;y=3..60".parse().unwrap();
        let filters = ["stop(eta(x)^y, 1e20)", "stop(phi(y)^x, 1e20)", "coprime(x,y)"]
            .iter()
            .map(|f| eq.parse_filter(f).unwrap())
            .collect::<Vec<_>>();
        let r = run(&eq, &d, &filters, &t).unwrap();
        let mut analyzed = 0;
        for x in 2..=60u64 {
            let e = crate::eta::eta_u64(x) as f64;
            for y in 3..=60u64 {
                let p = crate::arithfun::phi(y) as f64;
                if e.powf(y as f64) > 1e20 || p.powf(x as f64) > 1e20 {
                    break;
                }
                let (mut a, mut b) = (x, y);
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                if a == 1 {
                    analyzed += 1;
                }
            }
        }
        assert_eq!(r.analyzed, analyzed);
        assert!(r.solutions.is_empty());
    }
}
