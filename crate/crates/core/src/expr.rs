//! Small integer expressions, conditions and name templates used by the
//! catalog file.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Parameter bindings, e.g. `{p: 2, q: 13}`.
pub type Params = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character {0:?} in expression {1:?}")]
    UnexpectedChar(char, String),
    #[error("unexpected end of expression {0:?}")]
    UnexpectedEnd(String),
    #[error("trailing input in expression {0:?}")]
    Trailing(String),
    #[error("unbound variable {0}")]
    Unbound(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division {0} / {1}")]
    Inexact(i64, i64),
    #[error("unknown comparison in condition {0:?}")]
    BadCondition(String),
    #[error("unbalanced braces in template {0:?}")]
    BadTemplate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Num(i64),
    Var(String),
    Neg(Box<Node>),
    Bin(Op, Box<Node>, Box<Node>),
}

/// A parsed integer expression over named parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    src: String,
    root: Node,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        let mut p = Parser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let root = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(ExprError::Trailing(src.to_string()));
        }
        Ok(Expr {
            src: src.trim().to_string(),
            root,
        })
    }

    pub fn constant(v: i64) -> Expr {
        Expr {
            src: v.to_string(),
            root: Node::Num(v),
        }
    }

    pub fn eval(&self, params: &Params) -> Result<i64, ExprError> {
        eval(&self.root, params)
    }

    /// Variables mentioned by the expression, sorted and deduplicated.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        collect_vars(&self.root, &mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn source(&self) -> &str {
        &self.src
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.src)
    }
}

fn collect_vars(n: &Node, out: &mut Vec<String>) {
    match n {
        Node::Num(_) => {}
        Node::Var(v) => out.push(v.clone()),
        Node::Neg(a) => collect_vars(a, out),
        Node::Bin(_, a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

fn eval(n: &Node, params: &Params) -> Result<i64, ExprError> {
    Ok(match n {
        Node::Num(v) => *v,
        Node::Var(v) => *params.get(v).ok_or_else(|| ExprError::Unbound(v.clone()))?,
        Node::Neg(a) => -eval(a, params)?,
        Node::Bin(op, a, b) => {
            let (x, y) = (eval(a, params)?, eval(b, params)?);
            match op {
                Op::Add => x + y,
                Op::Sub => x - y,
                Op::Mul => x * y,
                Op::Div => {
                    if y == 0 {
                        return Err(ExprError::DivisionByZero);
                    }
                    if x % y != 0 {
                        return Err(ExprError::Inexact(x, y));
                    }
                    x / y
                }
                Op::Rem => {
                    if y == 0 {
                        return Err(ExprError::DivisionByZero);
                    }
                    x.rem_euclid(y)
                }
            }
        }
    })
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c) = self.peek() {
            let op = match c {
                '+' => Op::Add,
                '-' => Op::Sub,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.factor()?;
        while let Some(c) = self.peek() {
            let op = match c {
                '*' => Op::Mul,
                '/' => Op::Div,
                '%' => Op::Rem,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            None => Err(ExprError::UnexpectedEnd(self.src.to_string())),
            Some('-') => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(ExprError::UnexpectedEnd(self.src.to_string()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(Node::Num(s.parse().expect("digits")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                Ok(Node::Var(self.chars[start..self.pos].iter().collect()))
            }
            Some(c) => Err(ExprError::UnexpectedChar(c, self.src.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cmp {
    Ge,
    Le,
    Gt,
    Lt,
    Eq,
    Ne,
}

/// A single comparison `lhs OP rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    lhs: Expr,
    cmp: Cmp,
    rhs: Expr,
}

impl Condition {
    pub fn parse(src: &str) -> Result<Condition, ExprError> {
        for (tok, cmp) in [
            (">=", Cmp::Ge),
            ("<=", Cmp::Le),
            ("==", Cmp::Eq),
            ("!=", Cmp::Ne),
            (">", Cmp::Gt),
            ("<", Cmp::Lt),
        ] {
            if let Some(i) = src.find(tok) {
                return Ok(Condition {
                    lhs: Expr::parse(&src[..i])?,
                    cmp,
                    rhs: Expr::parse(&src[i + tok.len()..])?,
                });
            }
        }
        Err(ExprError::BadCondition(src.to_string()))
    }

    pub fn holds(&self, params: &Params) -> Result<bool, ExprError> {
        let (a, b) = (self.lhs.eval(params)?, self.rhs.eval(params)?);
        Ok(match self.cmp {
            Cmp::Ge => a >= b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Lt => a < b,
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
        })
    }
}

/// Comma-separated conjunction of conditions; `-` or empty means "always".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Conditions(Vec<Condition>);

impl Conditions {
    pub fn parse(src: &str) -> Result<Conditions, ExprError> {
        let src = src.trim();
        if src.is_empty() || src == "-" {
            return Ok(Conditions::default());
        }
        src.split(',')
            .map(|c| Condition::parse(c.trim()))
            .collect::<Result<Vec<_>, _>>()
            .map(Conditions)
    }

    pub fn holds(&self, params: &Params) -> Result<bool, ExprError> {
        for c in &self.0 {
            if !c.holds(params)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Seg {
    Lit(String),
    Hole(Expr),
}

/// A name with integer holes, e.g. `SU{p+q}/S(U{p}xU{q})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    src: String,
    segs: Vec<Seg>,
}

impl Template {
    pub fn parse(src: &str) -> Result<Template, ExprError> {
        let mut segs = Vec::new();
        let mut rest = src.trim();
        while !rest.is_empty() {
            match rest.find('{') {
                None => {
                    if rest.contains('}') {
                        return Err(ExprError::BadTemplate(src.to_string()));
                    }
                    segs.push(Seg::Lit(rest.to_string()));
                    rest = "";
                }
                Some(i) => {
                    if i > 0 {
                        segs.push(Seg::Lit(rest[..i].to_string()));
                    }
                    let close = rest[i..]
                        .find('}')
                        .ok_or_else(|| ExprError::BadTemplate(src.to_string()))?
                        + i;
                    segs.push(Seg::Hole(Expr::parse(&rest[i + 1..close])?));
                    rest = &rest[close + 1..];
                }
            }
        }
        if segs.windows(2).any(|w| matches!(w, [Seg::Hole(_), Seg::Hole(_)])) {
            return Err(ExprError::BadTemplate(src.to_string()));
        }
        Ok(Template {
            src: src.trim().to_string(),
            segs,
        })
    }

    pub fn source(&self) -> &str {
        &self.src
    }

    pub fn vars(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .segs
            .iter()
            .filter_map(|s| match s {
                Seg::Hole(e) => Some(e.vars()),
                Seg::Lit(_) => None,
            })
            .flatten()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn render(&self, params: &Params) -> Result<String, ExprError> {
        let mut out = String::new();
        for s in &self.segs {
            match s {
                Seg::Lit(l) => out.push_str(l),
                Seg::Hole(e) => out.push_str(&e.eval(params)?.to_string()),
            }
        }
        Ok(out)
    }

    /// Match `input` against the template after applying `norm` to both
    /// literal parts and input, and solve for the parameters.
    pub fn matches(&self, input: &str, norm: impl Fn(&str) -> String) -> Option<Params> {
        let input = norm(input);
        let mut rest = input.as_str();
        let mut pairs: Vec<(&Expr, i64)> = Vec::new();
        for s in &self.segs {
            match s {
                Seg::Lit(l) => rest = rest.strip_prefix(norm(l).as_str())?,
                Seg::Hole(e) => {
                    let n = rest.bytes().take_while(u8::is_ascii_digit).count();
                    if n == 0 {
                        return None;
                    }
                    pairs.push((e, rest[..n].parse().ok()?));
                    rest = &rest[n..];
                }
            }
        }
        if !rest.is_empty() {
            return None;
        }
        solve(&pairs)
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.src)
    }
}

/// Solve `expr_i(params) = value_i`, treating each equation as linear in
/// whichever single variable is still unknown.
fn solve(pairs: &[(&Expr, i64)]) -> Option<Params> {
    let mut bound = Params::new();
    let mut done = vec![false; pairs.len()];
    loop {
        let mut progress = false;
        for (i, (e, v)) in pairs.iter().enumerate() {
            if done[i] {
                continue;
            }
            let free: Vec<String> = e.vars().into_iter().filter(|x| !bound.contains_key(x)).collect();
            match free.len() {
                0 => {
                    if e.eval(&bound).ok()? != *v {
                        return None;
                    }
                    done[i] = true;
                    progress = true;
                }
                1 => {
                    let x = &free[0];
                    let at = |t: i64| {
                        let mut p = bound.clone();
                        p.insert(x.clone(), t);
                        e.eval(&p).ok()
                    };
                    let (f0, f1, f2) = (at(0)?, at(1)?, at(2)?);
                    let a = f1 - f0;
                    if f2 - f1 != a || a == 0 || (v - f0) % a != 0 {
                        return None;
                    }
                    bound.insert(x.clone(), (v - f0) / a);
                    done[i] = true;
                    progress = true;
                }
                _ => {}
            }
        }
        if done.iter().all(|d| *d) {
            return Some(bound);
        }
        if !progress {
            return None;
        }
    }
}
