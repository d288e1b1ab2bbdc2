//! Small integer expressions over the search variables, used by the
//! `bound(...)` and `cap(...)` filters.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := power ('*' power)*
//! power   := postfix ('^' power)?        right associative
//! postfix := atom '!'*
//! atom    := number | var | func '(' expr ')' | '(' expr ')'
//! number  := digits ('e' digits)?        so 1e17 is 10^17
//! func    := eta | s | sigma0 | sigma1 | sigma | sigma2 | phi | pi
//! ```
//!
//! Values are naturals. Evaluation is exact in u128 when it fits; the
//! magnitude check falls back to logarithms and, only within a hair of the
//! cap, to exact big integers.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::arithfun::TableFn;
use crate::error::{Error, Result};

use super::TableSet;

/// A function that can appear in an expression: a tabulated arithmetic
/// function or the prime counting function π.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Table(TableFn),
    Pi,
}

impl Func {
    /// Name used in expressions.
    pub fn name(self) -> &'static str {
        match self {
            Func::Table(f) => f.name(),
            Func::Pi => "pi",
        }
    }

    /// Parses a function name; `sigma` is accepted for `sigma1`.
    pub fn parse(name: &str) -> Option<Func> {
        match name {
            "pi" => Some(Func::Pi),
            "sigma" => Some(Func::Table(TableFn::Sigma1)),
            _ => name.parse().ok().map(Func::Table),
        }
    }

    /// The table that must be loaded to evaluate this function. π is
    /// derived from the η table.
    pub fn backing_table(self) -> TableFn {
        match self {
            Func::Table(f) => f,
            Func::Pi => TableFn::Eta,
        }
    }

    /// True when every value at an index ≥ 1 is at least 1.
    fn positive(self) -> bool {
        !matches!(self, Func::Pi | Func::Table(TableFn::S))
    }
}

/// Expression tree. Variables are indices into the search tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(u64),
    Var(usize),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Fact(Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    /// Parses `text` with `names` giving the variable order.
    pub fn parse(text: &str, names: &[&str]) -> Result<Expr> {
        let mut p = Parser::new(text, names)?;
        let e = p.expr()?;
        p.finish()?;
        Ok(e)
    }

    /// Exact value, or `None` when it does not fit in u128.
    pub fn eval_u128(&self, vals: &[u64], tables: &TableSet) -> Result<Option<u128>> {
        Ok(match self {
            Expr::Num(n) => Some(*n as u128),
            Expr::Var(i) => Some(vals[*i] as u128),
            Expr::Add(a, b) => match (a.eval_u128(vals, tables)?, b.eval_u128(vals, tables)?) {
                (Some(x), Some(y)) => x.checked_add(y),
                _ => None,
            },
            Expr::Mul(a, b) => match (a.eval_u128(vals, tables)?, b.eval_u128(vals, tables)?) {
                (Some(0), _) | (_, Some(0)) => Some(0),
                (Some(x), Some(y)) => x.checked_mul(y),
                _ => None,
            },
            Expr::Pow(a, b) => match (a.eval_u128(vals, tables)?, b.eval_u128(vals, tables)?) {
                (_, Some(0)) => Some(1),
                (Some(x @ (0 | 1)), Some(_)) => Some(x),
                (Some(x), Some(y)) => u32::try_from(y).ok().and_then(|y| x.checked_pow(y)),
                _ => None,
            },
            Expr::Fact(a) => match a.eval_u128(vals, tables)? {
                Some(n) => (2..=n).try_fold(1u128, |acc, k| acc.checked_mul(k)),
                None => None,
            },
            Expr::Call(f, a) => Some(call(*f, a, vals, tables)? as u128),
        })
    }

    /// Natural logarithm of the value; −∞ for zero.
    pub fn eval_ln(&self, vals: &[u64], tables: &TableSet) -> Result<f64> {
        Ok(match self.approx(vals, tables)? {
            Approx::Exact(v) => ln_u128(v),
            Approx::Ln(l) => l,
        })
    }

    /// The exact value while it fits in u128, its logarithm beyond. One
    /// pass over the tree, so a cap check costs no more than an evaluation.
    fn approx(&self, vals: &[u64], tables: &TableSet) -> Result<Approx> {
        use Approx::{Exact, Ln};
        Ok(match self {
            Expr::Num(n) => Exact(*n as u128),
            Expr::Var(i) => Exact(vals[*i] as u128),
            Expr::Call(f, a) => Exact(call(*f, a, vals, tables)? as u128),
            Expr::Add(a, b) => match (a.approx(vals, tables)?, b.approx(vals, tables)?) {
                (Exact(x), Exact(y)) if x.checked_add(y).is_some() => Exact(x + y),
                (x, y) => {
                    let (x, y) = (x.ln(), y.ln());
                    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
                    Ln(hi + (lo - hi).exp().ln_1p())
                }
            },
            Expr::Mul(a, b) => match (a.approx(vals, tables)?, b.approx(vals, tables)?) {
                (Exact(0), _) | (_, Exact(0)) => Exact(0),
                (Exact(x), Exact(y)) if x.checked_mul(y).is_some() => Exact(x * y),
                (x, y) => Ln(x.ln() + y.ln()),
            },
            Expr::Pow(a, b) => match (a.approx(vals, tables)?, b.approx(vals, tables)?) {
                (_, Exact(0)) => Exact(1),
                (Exact(x @ (0 | 1)), _) => Exact(x),
                (Exact(x), Exact(y)) => match u32::try_from(y).ok().and_then(|y| x.checked_pow(y)) {
                    Some(v) => Exact(v),
                    None => Ln(y as f64 * ln_u128(x)),
                },
                (base, exp) => Ln(exp.value() * base.ln()),
            },
            Expr::Fact(a) => match a.approx(vals, tables)? {
                Exact(n) => match (2..=n).try_fold(1u128, |acc, k| acc.checked_mul(k)) {
                    Some(v) => Exact(v),
                    None => Ln(stirling(n as f64)),
                },
                Ln(l) => Ln(stirling(l.exp())),
            },
        })
    }

    /// Exact value as a big integer. Exponents and factorial arguments must
    /// fit in u32.
    pub fn eval_big(&self, vals: &[u64], tables: &TableSet) -> Result<BigUint> {
        let small = |e: &Expr| -> Result<u32> {
            e.eval_u128(vals, tables)?
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| Error::Capacity("exponent too large for exact evaluation".into()))
        };
        Ok(match self {
            Expr::Num(n) => BigUint::from(*n),
            Expr::Var(i) => BigUint::from(vals[*i]),
            Expr::Add(a, b) => a.eval_big(vals, tables)? + b.eval_big(vals, tables)?,
            Expr::Mul(a, b) => a.eval_big(vals, tables)? * b.eval_big(vals, tables)?,
            Expr::Pow(a, b) => a.eval_big(vals, tables)?.pow(small(b)?),
            Expr::Fact(a) => (2..=small(a)?).fold(BigUint::one(), |acc, k| acc * k),
            Expr::Call(f, a) => BigUint::from(call(*f, a, vals, tables)?),
        })
    }

    /// Whether the variable occurs anywhere in the expression.
    pub fn depends_on(&self, var: usize) -> bool {
        match self {
            Expr::Num(_) => false,
            Expr::Var(i) => *i == var,
            Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Pow(a, b) => {
                a.depends_on(var) || b.depends_on(var)
            }
            Expr::Fact(a) | Expr::Call(_, a) => a.depends_on(var),
        }
    }

    /// Conservative test that the value never decreases as `var` grows with
    /// the other variables fixed. `ge1[i]` says variable i is always ≥ 1.
    /// Table lookups are treated as arbitrary, so an expression that feeds
    /// `var` into a function is never considered monotone in it.
    pub fn nondecreasing_in(&self, var: usize, ge1: &[bool]) -> bool {
        match self {
            Expr::Num(_) | Expr::Var(_) => true,
            Expr::Add(a, b) | Expr::Mul(a, b) => {
                a.nondecreasing_in(var, ge1) && b.nondecreasing_in(var, ge1)
            }
            Expr::Pow(a, b) => {
                a.nondecreasing_in(var, ge1)
                    && b.nondecreasing_in(var, ge1)
                    && (!b.depends_on(var) || a.always_ge1(ge1))
            }
            Expr::Fact(a) => a.nondecreasing_in(var, ge1),
            Expr::Call(_, a) => !a.depends_on(var),
        }
    }

    fn always_ge1(&self, ge1: &[bool]) -> bool {
        match self {
            Expr::Num(n) => *n >= 1,
            Expr::Var(i) => ge1[*i],
            Expr::Add(a, b) => a.always_ge1(ge1) || b.always_ge1(ge1),
            Expr::Mul(a, b) => a.always_ge1(ge1) && b.always_ge1(ge1),
            Expr::Pow(a, _) => a.always_ge1(ge1),
            Expr::Fact(_) => true,
            Expr::Call(f, _) => f.positive(),
        }
    }

    /// Every function the expression calls.
    pub fn funcs(&self, out: &mut Vec<Func>) {
        match self {
            Expr::Num(_) | Expr::Var(_) => {}
            Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Pow(a, b) => {
                a.funcs(out);
                b.funcs(out);
            }
            Expr::Fact(a) => a.funcs(out),
            Expr::Call(f, a) => {
                out.push(*f);
                a.funcs(out);
            }
        }
    }

    /// Displays the expression with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        ExprDisplay { expr: self, names, prec: 0 }
    }
}

fn call(f: Func, arg: &Expr, vals: &[u64], tables: &TableSet) -> Result<u64> {
    let idx = arg
        .eval_u128(vals, tables)?
        .and_then(|v| u64::try_from(v).ok())
        .unwrap_or(u64::MAX);
    tables.value(f, idx)
}

#[derive(Clone, Copy)]
enum Approx {
    Exact(u128),
    Ln(f64),
}

impl Approx {
    fn ln(self) -> f64 {
        match self {
            Approx::Exact(v) => ln_u128(v),
            Approx::Ln(l) => l,
        }
    }

    fn value(self) -> f64 {
        match self {
            Approx::Exact(v) => v as f64,
            Approx::Ln(l) => l.exp(),
        }
    }
}

/// ln n! by Stirling's series, accurate far beyond the 1e-9 relative
/// slack of a cap check once n exceeds u128 factorial range (n ≥ 35).
fn stirling(n: f64) -> f64 {
    n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln() + 1.0 / (12.0 * n)
}

fn ln_u128(v: u128) -> f64 {
    if v == 0 {
        f64::NEG_INFINITY
    } else {
        (v as f64).ln()
    }
}

/// An upper limit for the `cap` filter.
#[derive(Clone, Debug, PartialEq)]
pub struct Cap {
    text: String,
    exact: BigUint,
    small: Option<u128>,
    ln: f64,
}

impl Cap {
    /// Accepts a plain integer, `AeB` (A·10^B) or `A^B`.
    pub fn parse(text: &str) -> Result<Cap> {
        let text = text.trim();
        let bad = || parse_err(format!("bad cap `{text}`"));
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
        let exact = if let Some((a, b)) = text.split_once('e') {
            BigUint::from(num(a)?) * BigUint::from(10u32).pow(num(b)?)
        } else if let Some((a, b)) = text.split_once('^') {
            BigUint::from(num(a)?).pow(num(b)?)
        } else {
            text.parse::<BigUint>().map_err(|_| bad())?
        };
        Ok(Cap::from_big(text.to_string(), exact))
    }

    fn from_big(text: String, exact: BigUint) -> Cap {
        let small = exact.to_u128();
        let ln = exact.to_f64().map_or(f64::INFINITY, f64::ln);
        let ln = if ln.is_finite() {
            ln
        } else {
            // Beyond f64 range: ln(2) times the bit length is close enough
            // for a cap that no tested expression approaches.
            exact.bits() as f64 * std::f64::consts::LN_2
        };
        Cap { text, exact, small, ln }
    }

    /// Whether the expression's value is at most the cap.
    pub fn admits(&self, expr: &Expr, vals: &[u64], tables: &TableSet) -> Result<bool> {
        let ln = match expr.approx(vals, tables)? {
            Approx::Exact(v) => return Ok(self.small.is_none_or(|c| v <= c)),
            Approx::Ln(l) => l,
        };
        let slack = 1e-9 * self.ln.abs().max(1.0);
        if ln < self.ln - slack {
            Ok(true)
        } else if ln > self.ln + slack {
            Ok(false)
        } else {
            Ok(expr.eval_big(vals, tables)? <= self.exact)
        }
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

struct ExprDisplay<'a> {
    expr: &'a Expr,
    names: &'a [&'a str],
    prec: u8,
}

impl<'a> fmt::Display for ExprDisplay<'a> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |expr: &'a Expr, prec: u8| ExprDisplay { expr, names: self.names, prec };
        // Precedence levels: 1 sum, 2 product, 3 power, 4 postfix and atoms.
        let (own, body): (u8, String) = match self.expr {
            Expr::Num(n) => (4, n.to_string()),
            Expr::Var(i) => (4, self.names[*i].to_string()),
            Expr::Add(a, b) => (1, format!("{}+{}", sub(a, 1), sub(b, 2))),
            Expr::Mul(a, b) => (2, format!("{}*{}", sub(a, 2), sub(b, 3))),
            Expr::Pow(a, b) => (3, format!("{}^{}", sub(a, 4), sub(b, 3))),
            Expr::Fact(a) => (4, format!("{}!", sub(a, 4))),
            Expr::Call(func, a) => (4, format!("{}({})", func.name(), sub(a, 0))),
        };
        if own < self.prec {
            write!(f, "({body})")
        } else {
            f.write_str(&body)
        }
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Token {
    Num(u64),
    Ident(String),
    Sym(&'static str),
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mantissa: String = chars[start..i].iter().collect();
            let mut value: u64 = mantissa
                .parse()
                .map_err(|_| parse_err(format!("number `{mantissa}` too large")))?;
            if i + 1 < chars.len() && chars[i] == 'e' && chars[i + 1].is_ascii_digit() {
                let es = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let e: u32 = chars[es..i].iter().collect::<String>().parse().unwrap_or(u32::MAX);
                value = 10u64
                    .checked_pow(e)
                    .and_then(|p| p.checked_mul(value))
                    .ok_or_else(|| parse_err("number too large for an expression"))?;
            }
            out.push(Token::Num(value));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else {
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let sym = match two.as_str() {
                "!=" => Some("!="),
                "<=" => Some("<="),
                _ => None,
            };
            if let Some(s) = sym {
                out.push(Token::Sym(s));
                i += 2;
                continue;
            }
            let s = match c {
                '+' => "+",
                '*' => "*",
                '^' => "^",
                '!' => "!",
                '(' => "(",
                ')' => ")",
                ',' => ",",
                '<' => "<",
                _ => return Err(parse_err(format!("unexpected character `{c}`"))),
            };
            out.push(Token::Sym(s));
            i += 1;
        }
    }
    Ok(out)
}

/// Recursive-descent parser shared with the filter syntax.
pub(crate) struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [&'a str],
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &str, names: &'a [&'a str]) -> Result<Self> {
        Ok(Parser { tokens: tokenize(text)?, pos: 0, names })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    pub(crate) fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub(crate) fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Token::Sym(s)) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, sym: &str) -> Result<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(parse_err(format!("expected `{sym}`")))
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(parse_err(format!("unexpected trailing {t:?}"))),
        }
    }

    pub(crate) fn var(&mut self) -> Result<usize> {
        match self.next() {
            Some(Token::Ident(name)) => self.var_index(&name),
            other => Err(parse_err(format!("expected a variable, found {other:?}"))),
        }
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| parse_err(format!("unknown variable `{name}`")))
    }

    pub(crate) fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        while self.eat("+") {
            e = Expr::Add(Box::new(e), Box::new(self.term()?));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.power()?;
        while self.eat("*") {
            e = Expr::Mul(Box::new(e), Box::new(self.power()?));
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.postfix()?;
        if self.eat("^") {
            Ok(Expr::Pow(Box::new(base), Box::new(self.power()?)))
        } else {
            Ok(base)
        }
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.eat("!") {
            e = Expr::Fact(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::Sym("(")) => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(Token::Ident(name)) => {
                if self.peek() == Some(&Token::Sym("(")) {
                    let f = Func::parse(&name)
                        .ok_or_else(|| parse_err(format!("unknown function `{name}`")))?;
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect(")")?;
                    Ok(Expr::Call(f, Box::new(arg)))
                } else {
                    Ok(Expr::Var(self.var_index(&name)?))
                }
            }
            other => Err(parse_err(format!("unexpected {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithfun::gen_table;

    fn tables() -> TableSet {
        let mut t = TableSet::new();
        t.insert(gen_table(TableFn::Eta, 100).unwrap());
        t.insert(gen_table(TableFn::S, 100).unwrap());
        t
    }

    #[test]
    fn parse_and_eval() {
        let names = ["m", "n", "x"];
        let t = tables();
        let e = Expr::parse("m*x+n", &names).unwrap();
        assert_eq!(e.eval_u128(&[3, 4, 5], &t).unwrap(), Some(19));
        let e = Expr::parse("2^3^2", &names).unwrap();
        assert_eq!(e.eval_u128(&[0, 0, 0], &t).unwrap(), Some(512));
        let e = Expr::parse("eta(x)^m + s(12)", &names).unwrap();
        assert_eq!(e.eval_u128(&[2, 0, 12], &t).unwrap(), Some(32));
        let e = Expr::parse("pi(x)", &names).unwrap();
        assert_eq!(e.eval_u128(&[0, 0, 100], &t).unwrap(), Some(25));
        let e = Expr::parse("(x+1)!", &names).unwrap();
        assert_eq!(e.eval_u128(&[0, 0, 4], &t).unwrap(), Some(120));
        assert_eq!(e.display(&names).to_string(), "(x+1)!");
        assert!(Expr::parse("y+1", &names).is_err());
        assert!(Expr::parse("m+", &names).is_err());
        assert!(Expr::parse("foo(m)", &names).is_err());
    }

    #[test]
    fn out_of_table_is_an_error() {
        let t = tables();
        let e = Expr::parse("eta(x*x)", &["x"]).unwrap();
        assert!(e.eval_u128(&[11], &t).is_err());
        assert_eq!(e.eval_u128(&[10], &t).unwrap(), Some(10));
    }

    #[test]
    fn caps_are_exact_at_the_boundary() {
        let t = tables();
        let names = ["a", "b"];
        let e = Expr::parse("a^b", &names).unwrap();
        let cap = Cap::parse("1e307").unwrap();
        assert!(cap.admits(&e, &[10, 307], &t).unwrap());
        assert!(!cap.admits(&e, &[10, 308], &t).unwrap());
        assert!(!cap.admits(&e, &[11, 300], &t).unwrap());
        let big = Expr::parse("a^b+1", &names).unwrap();
        assert!(!cap.admits(&big, &[10, 307], &t).unwrap());
        let cap = Cap::parse("1e17").unwrap();
        assert!(cap.admits(&e, &[10, 17], &t).unwrap());
        assert!(!cap.admits(&e, &[10, 18], &t).unwrap());
    }

    #[test]
    fn monotonicity() {
        let names = ["m", "x"];
        let ge1 = [true, true];
        let mono = |s: &str| Expr::parse(s, &names).unwrap().nondecreasing_in(1, &ge1);
        assert!(mono("m*x+1"));
        assert!(mono("x^m"));
        assert!(mono("eta(m)^x"));
        assert!(!mono("eta(x)"));
        assert!(!mono("s(m)^x"));
        assert!(mono("x!"));
    }
}
