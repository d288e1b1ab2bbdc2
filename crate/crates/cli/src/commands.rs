//! One handler per subcommand. Each returns the complete standard output.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use df_core::arithfun::{TableFn, ValueTable};
use df_core::congruence::{euler_gen, verify_euler_gen};
use df_core::counting::{bisect_is_prime, pi_bounds, pi_count};
use df_core::dioph_linear::{
    poly_roots, solve_linear2, solve_system, RationalMatrix, RootMode, SystemSolution,
};
use df_core::dioph_quad::{Branch, QuadSolver};
use df_core::eta::{eta_factored, eta_u64, pi_via_eta};
use df_core::factorint::{
    factor_trial, fermat_factor, is_prime_u64, pollard_p1, pollard_rho, pollard_strassen,
    Factorization, P1Gcd,
};
use df_core::primality::{csp, lucas_lehmer, miller_rabin, tp_eta, MR_ROUNDS};
use df_core::search::{self, SearchDomain, SearchResult, TableSet};
use df_core::sieves::{sieve, Algorithm, PrimeTable};
use df_core::tables::{read_table, write_table};
use df_core::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::cache::TableCache;
use crate::{
    AuxKind, BranchArg, Cli, Command, EtaArgs, FactorMethod, Global, PiMethod, PrimalityTest,
    SearchArgs, SolveKind, TablesAction,
};

/// Size of the tables searches read, matching the published runs.
pub const SEARCH_TABLE_SIZE: u64 = 1_000_000;

/// Text solutions printed by `search` without `--all`.
const SHOWN_SOLUTIONS: usize = 50;

pub fn run(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    match &cli.command {
        Command::Sieve { limit, algo, stats } => cmd_sieve(g, *limit, algo, *stats),
        Command::Pi { x, method } => cmd_pi(g, *x, *method),
        Command::Factor { n, method, bound } => cmd_factor(g, *n, *method, *bound),
        Command::Eta(args) => cmd_eta(g, args),
        Command::Tables { action } => cmd_tables(g, action),
        Command::Primality { n, test } => cmd_primality(g, *n, *test),
        Command::EulerGen { a, m, verify } => cmd_euler_gen(g, *a, *m, *verify),
        Command::Solve { kind } => cmd_solve(g, kind),
        Command::Search(args) => cmd_search(g, args),
        Command::Aux { kind } => cmd_aux(g, kind),
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn json_line(v: &impl Serialize) -> String {
    line(serde_json::to_string(v).expect("output serializes"))
}

fn cmd_sieve(g: &Global, limit: u64, algo: &str, stats: bool) -> Result<String> {
    let algo: Algorithm = algo.parse()?;
    let (table, st) = sieve(limit, algo)?;
    if g.json {
        let mut v = json!({ "limit": limit, "algo": algo.name(), "count": table.len(), "largest": table.last() });
        if stats {
            v["zero_assignments"] = json!(st.zero_assignments);
            v["memory_cells"] = json!(st.memory_cells);
            v["elapsed_ms"] = json!(st.elapsed.as_millis() as u64);
        }
        return Ok(json_line(&v));
    }
    if stats {
        return Ok(line(st.csv_line()));
    }
    let largest = table.last().map_or("none".to_string(), |p| p.to_string());
    Ok(line(format_args!("{} primes up to {limit}, largest {largest}", table.len())))
}

fn cmd_pi(g: &Global, x: u64, method: PiMethod) -> Result<String> {
    match method {
        PiMethod::Table => {
            let n = pi_count(x, &PrimeTable::new(x.max(2))?)?;
            Ok(if g.json { json_line(&json!({ "x": x, "pi": n })) } else { line(n) })
        }
        PiMethod::Eta => {
            let t = cache(g, None)?.get(TableFn::Eta, x)?;
            let n = pi_via_eta(x, &t)?;
            Ok(if g.json { json_line(&json!({ "x": x, "pi": n })) } else { line(n) })
        }
        PiMethod::Bounds => {
            let b = pi_bounds(x)?;
            Ok(if g.json {
                json_line(&json!({ "x": x, "lower": b.lower, "upper": b.upper }))
            } else {
                line(format_args!("{} < pi({x}) < {}", b.lower, b.upper))
            })
        }
    }
}

fn cache(g: &Global, dir: Option<&Path>) -> Result<TableCache> {
    TableCache::open(dir.unwrap_or(&g.tables_dir), g.regen)
}

/// Splits `n` into prime powers with the chosen method. A cofactor the
/// method cannot split is returned separately.
fn split_factor(
    n: u64,
    method: FactorMethod,
    bound: Option<u64>,
    seed: u64,
) -> Result<(Factorization, Vec<u64>)> {
    if method == FactorMethod::Trial {
        return Ok((factor_trial(n), Vec::new()));
    }
    let mut primes = Vec::new();
    let mut stuck = Vec::new();
    let mut work = Vec::new();
    let mut m = n;
    // Every method here assumes an odd input.
    while m % 2 == 0 && m > 0 {
        primes.push(2);
        m /= 2;
    }
    if m > 1 {
        work.push(m);
    }
    while let Some(m) = work.pop() {
        if is_prime_u64(m) {
            primes.push(m);
            continue;
        }
        let d = match method {
            FactorMethod::Trial => unreachable!(),
            FactorMethod::Fermat => Some(fermat_factor(m)?.0),
            FactorMethod::Rho => (1..=32).find_map(|c| pollard_rho(m, c, seed).ok().flatten()),
            FactorMethod::P1 => pollard_p1(m, bound.unwrap_or(10_000), P1Gcd::Standard)?,
            FactorMethod::Ps => pollard_strassen(m, bound.unwrap_or_else(|| m.isqrt() + 1))?,
        };
        match d {
            Some(d) if d > 1 && d < m => {
                work.push(d);
                work.push(m / d);
            }
            _ => stuck.push(m),
        }
    }
    stuck.sort_unstable();
    Ok((Factorization::from_pairs(primes.into_iter().map(|p| (p, 1)))?, stuck))
}

fn cmd_factor(g: &Global, n: u64, method: FactorMethod, bound: Option<u64>) -> Result<String> {
    if n == 0 {
        return Err(Error::Domain("0 has no factorization".into()));
    }
    let (f, stuck) = split_factor(n, method, bound, g.seed)?;
    if g.json {
        let pairs: Vec<[u64; 2]> = f.factors().iter().map(|&(p, a)| [p, a]).collect();
        return Ok(json_line(&json!({ "n": n, "factors": pairs, "unfactored": stuck })));
    }
    let mut out = if f.is_empty() && !stuck.is_empty() { String::new() } else { f.to_string() };
    for c in &stuck {
        if !out.is_empty() {
            out.push_str(" * ");
        }
        write!(out, "{c}").unwrap();
    }
    if !stuck.is_empty() {
        eprintln!("df: the method found no factor of {stuck:?}; they are composite");
    }
    Ok(line(out))
}

/// Parses "p^a,q^b,..." into a factorization; a bare p means p^1.
pub fn parse_factored(text: &str) -> Result<Factorization> {
    let mut pairs = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (p, a) = part.split_once('^').unwrap_or((part, "1"));
        let bad = || Error::Domain(format!("expected p^a, found `{part}`"));
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        if !is_prime_u64(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        pairs.push((p, a));
    }
    Factorization::from_pairs(pairs)
}

fn cmd_eta(g: &Global, args: &EtaArgs) -> Result<String> {
    if let Some(n) = args.value {
        if n == 0 {
            return Err(Error::Domain("eta is defined for n >= 1".into()));
        }
        let v = eta_u64(n);
        return Ok(if g.json { json_line(&json!({ "n": n, "eta": v })) } else { line(v) });
    }
    if let Some(text) = &args.factored {
        let v = eta_factored(&parse_factored(text)?)?;
        return Ok(if g.json {
            json_line(&json!({ "factored": text, "eta": v.to_string() }))
        } else {
            line(v)
        });
    }
    let n = args.table.expect("clap requires one of the eta modes");
    let out = args.out.as_ref().expect("clap requires --out with --table");
    let f = write_table(&df_core::eta::eta_table(n)?, out)?;
    Ok(if g.json {
        json_line(&json!({ "path": f.path, "count": f.count }))
    } else {
        line(format_args!("wrote {} values to {}", f.count, f.path.display()))
    })
}

fn cmd_tables(g: &Global, action: &TablesAction) -> Result<String> {
    match action {
        TablesAction::Gen { func, limit, out } => {
            let func: TableFn = func.parse()?;
            let f = write_table(&df_core::arithfun::gen_table(func, *limit)?, out)?;
            Ok(if g.json {
                json_line(&json!({ "fn": func.name(), "path": f.path, "count": f.count }))
            } else {
                line(format_args!("wrote {} values to {}", f.count, f.path.display()))
            })
        }
        TablesAction::Verify { file, func } => {
            let func: TableFn = func.parse()?;
            let t = read_table(file, func)?;
            let full = df_core::arithfun::gen_table(func, t.len())?;
            if let Some(k) = t.values().iter().zip(full.values()).position(|(a, b)| a != b) {
                return Err(Error::Corrupt(format!(
                    "{}({}) is {} in {}, expected {}",
                    func,
                    k + 1,
                    t.values()[k],
                    file.display(),
                    full.values()[k]
                )));
            }
            Ok(if g.json {
                json_line(&json!({ "fn": func.name(), "path": file, "count": t.len(), "ok": true }))
            } else {
                line(format_args!("ok: {} values of {func}", t.len()))
            })
        }
    }
}

fn cmd_primality(g: &Global, n: u64, test: PrimalityTest) -> Result<String> {
    let verdict = match test {
        PrimalityTest::Eta => {
            let t: ValueTable = cache(g, None)?.get(TableFn::Eta, n.max(1))?;
            tp_eta(n, &t).to_string()
        }
        PrimalityTest::Csp1 => csp(1, n).to_string(),
        PrimalityTest::Csp2 => csp(2, n).to_string(),
        PrimalityTest::Csp3 => csp(3, n).to_string(),
        PrimalityTest::Csp4 => csp(4, n).to_string(),
        PrimalityTest::Mr => miller_rabin(n, MR_ROUNDS, g.seed).to_string(),
        PrimalityTest::Ll => lucas_lehmer(n).1.to_string(),
        PrimalityTest::Bsearch => {
            let prime = bisect_is_prime(n, &PrimeTable::new(n.max(2))?)?;
            if prime { "prime" } else { "composite" }.to_string()
        }
    };
    Ok(if g.json { json_line(&json!({ "n": n, "verdict": verdict })) } else { line(verdict) })
}

fn cmd_euler_gen(g: &Global, a: u64, m: u64, verify: bool) -> Result<String> {
    if m == 0 {
        return Err(Error::Domain("the modulus must be positive".into()));
    }
    let p = euler_gen(a, m);
    let ok = verify.then(|| verify_euler_gen(a, m));
    if g.json {
        return Ok(json_line(&json!({ "a": a, "m": m, "s": p.s, "m_s": p.m_s, "verified": ok })));
    }
    let mut out = line(format_args!("s = {}, m_s = {}", p.s, p.m_s));
    if let Some(ok) = ok {
        out += &line(format_args!(
            "a^(phi(m_s)+s) = a^s (mod m): {}",
            if ok { "holds" } else { "FAILS" }
        ));
    }
    Ok(out)
}

fn parse_big(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Domain(format!("`{s}` is not an integer")))
}

fn parse_rational(s: &str, row: usize) -> Result<BigRational> {
    s.trim().parse().map_err(|_| Error::Parse {
        line: row,
        msg: format!("`{}` is not an integer or fraction", s.trim()),
    })
}

fn read_system(path: &Path) -> Result<(RationalMatrix, Vec<BigRational>)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_error(e, path))?;
    let mut rows = Vec::new();
    let mut b = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| csv_error(e, path))?;
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        let mut vals = rec.iter().map(|s| parse_rational(s, line)).collect::<Result<Vec<_>>>()?;
        let last = vals.pop().ok_or(Error::Parse { line, msg: "empty row".into() })?;
        rows.push(vals);
        b.push(last);
    }
    Ok((RationalMatrix::from_rows(rows)?, b))
}

fn csv_error(e: csv::Error, path: &Path) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(source) => Error::Io { path: path.to_path_buf(), source },
        kind => Error::Parse { line: 0, msg: format!("{kind:?}") },
    }
}

fn cmd_solve(g: &Global, kind: &SolveKind) -> Result<String> {
    match kind {
        SolveKind::Linear2 { a, b, c, terms } => {
            let (a, b, c) = (parse_big(a)?, parse_big(b)?, parse_big(c)?);
            let Some(s) = solve_linear2(&a, &b, &c)? else {
                return Ok(if g.json { json_line(&json!({ "solvable": false })) } else { line("no integer solutions") });
            };
            let nat = s.natural_terms(*terms);
            if g.json {
                let pairs: Vec<[String; 2]> = nat.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect();
                return Ok(json_line(&json!({
                    "solvable": true,
                    "x": [s.x_step.to_string(), s.x0.to_string()],
                    "y": [s.y_step.to_string(), s.y0.to_string()],
                    "k_min": s.k_min.to_string(),
                    "natural": pairs,
                })));
            }
            let mut out = line(format_args!(
                "x = {}*k + {}, y = {}*k + {}, natural for k >= {}",
                s.x_step, s.x0, s.y_step, s.y0, s.k_min
            ));
            for (x, y) in nat {
                out += &line(format_args!("{x} {y}"));
            }
            Ok(out)
        }
        SolveKind::Linsys { file } => {
            let (a, b) = read_system(file)?;
            let sol = solve_system(&a, &b)?;
            let show = |v: &[BigRational]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>();
            if g.json {
                return Ok(json_line(&match &sol {
                    SystemSolution::Unique(x) => json!({ "kind": "unique", "x": show(x) }),
                    SystemSolution::Parametric { particular, free, basis } => json!({
                        "kind": "parametric",
                        "particular": show(particular),
                        "free": free,
                        "basis": basis.iter().map(|v| show(v)).collect::<Vec<_>>(),
                    }),
                    SystemSolution::Inconsistent => json!({ "kind": "inconsistent" }),
                }));
            }
            Ok(match sol {
                SystemSolution::Unique(x) => {
                    x.iter().enumerate().map(|(i, q)| line(format_args!("x{} = {q}", i + 1))).collect()
                }
                SystemSolution::Parametric { particular, free, basis } => {
                    let mut out = String::new();
                    for (i, q) in particular.iter().enumerate() {
                        let mut s = q.to_string();
                        for (f, v) in free.iter().zip(&basis) {
                            if v[i] != BigRational::from_integer(0.into()) {
                                write!(s, " + ({})*t{}", v[i], f + 1).unwrap();
                            }
                        }
                        out += &line(format_args!("x{} = {s}", i + 1));
                    }
                    out
                }
                SystemSolution::Inconsistent => line("inconsistent: no solution"),
            })
        }
        SolveKind::Poly { coeffs, mode } => {
            let mode: RootMode = mode.parse()?;
            let cs = coeffs.split(',').map(parse_big).collect::<Result<Vec<_>>>()?;
            let roots = poly_roots(&cs, mode)?;
            let shown: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            Ok(if g.json { json_line(&json!({ "roots": shown })) } else { line(shown.join(" ")) })
        }
        SolveKind::Quad { a, b, c, terms, branch, bound } => {
            let q = QuadSolver::new(*a, *b, *c, *bound)?;
            let which = match branch {
                BranchArg::S0 => Branch::S0,
                BranchArg::S1 => Branch::S1,
            };
            let rows: Vec<(BigInt, BigInt)> = q.solutions(which).take(*terms as usize + 1).collect();
            let m = &q.matrix.0;
            if g.json {
                return Ok(json_line(&json!({
                    "matrix": m.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "solutions": rows.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect::<Vec<_>>(),
                })));
            }
            let mut out = line(format_args!("A = [[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]));
            for (n, (x, y)) in rows.iter().enumerate() {
                out += &line(format_args!("{n} {x} {y}"));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct SearchJson<'a> {
    id: &'a str,
    domain: String,
    possible: u128,
    analyzed: u64,
    count: usize,
    solutions: &'a [Vec<u64>],
    elapsed_ms: u64,
}

fn ms(d: Duration) -> u64 {
    d.as_millis() as u64
}

fn cmd_search(g: &Global, args: &SearchArgs) -> Result<String> {
    if args.list {
        let mut out = String::new();
        for eq in search::registry() {
            out += &line(format_args!("{:8} {:40} {}", eq.id, eq.formula, eq.default_domain));
        }
        return Ok(out);
    }
    let id = args.id.as_deref().expect("clap requires an id without --list");
    let mut eq = search::lookup(id)?;
    for p in &args.params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("expected name=value, found `{p}`")))?;
        let value = value
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("parameter value `{value}` is not an integer")))?;
        eq.set_param(name.trim(), value)?;
    }
    let domain = match &args.domain {
        Some(text) => eq.default_domain.overridden(&text.parse::<SearchDomain>()?)?,
        None => eq.default_domain.clone(),
    };
    let mut filters = if args.no_default_filters { Vec::new() } else { eq.default_filters.clone() };
    for f in &args.filters {
        filters.push(eq.parse_filter(f)?);
    }
    let mut cache = cache(g, args.tables.as_deref())?;
    let mut tables = TableSet::new();
    for f in eq.tables_needed(&filters) {
        tables.insert(cache.get(f, SEARCH_TABLE_SIZE)?);
    }
    let r = search::run(&eq, &domain, &filters, &tables)?;
    Ok(render_search(g, &eq.id, &r, args.all))
}

fn render_search(g: &Global, id: &str, r: &SearchResult, all: bool) -> String {
    if g.json {
        return json_line(&SearchJson {
            id,
            domain: r.domain.to_string(),
            possible: r.possible,
            analyzed: r.analyzed,
            count: r.count(),
            solutions: &r.solutions,
            elapsed_ms: ms(r.elapsed),
        });
    }
    let mut out = line(format_args!(
        "{id} domain {}: {} solutions, {} analyzed of {} possible, {} ms",
        r.domain,
        r.count(),
        r.analyzed,
        r.possible,
        ms(r.elapsed)
    ));
    let shown = if all { r.solutions.len() } else { SHOWN_SOLUTIONS.min(r.solutions.len()) };
    for s in &r.solutions[..shown] {
        let t: Vec<String> = s.iter().map(u64::to_string).collect();
        out += &line(t.join(" "));
    }
    if shown < r.solutions.len() {
        out += &line(format_args!("... {} more (use --all)", r.solutions.len() - shown));
    }
    out
}

fn cmd_aux(g: &Global, kind: &AuxKind) -> Result<String> {
    match kind {
        AuxKind::ErdosStraus { n, cap } => {
            if *n < 2 {
                return Err(Error::Domain("n must be at least 2".into()));
            }
            let t = search::erdos_straus(*n, *cap);
            Ok(if g.json {
                json_line(&json!({ "n": n, "cap": cap, "triples": t }))
            } else {
                t.iter().map(|(x, y, z)| line(format_args!("{x} {y} {z}"))).collect()
            })
        }
        AuxKind::R229 { limit } => {
            let primes = PrimeTable::new((*limit).max(2))?;
            let hits: Vec<u64> = primes
                .primes()
                .iter()
                .copied()
                .filter(|&p| p <= *limit && search::has_229_property(p))
                .collect();
            Ok(if g.json {
                json_line(&json!({ "limit": limit, "primes": hits }))
            } else {
                hits.iter().map(line).collect()
            })
        }
        AuxKind::Narcissistic { base, len } => {
            let v = search::narcissistic(*base, *len)?;
            Ok(if g.json {
                json_line(&json!({ "base": base, "len": len, "numbers": v.iter().map(u128::to_string).collect::<Vec<_>>() }))
            } else {
                v.iter().map(line).collect()
            })
        }
    }
}
