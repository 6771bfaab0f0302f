//! Objective expressions: syntax tree, parser, normalization and shape classification.

mod normalize;
mod parse;

use std::fmt;

pub use normalize::{normalize, LeafRewrite, NormalizationCertificate};
pub use parse::parse_objective;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    Inf,
    Sup,
    LimInf,
    LimSup,
    Wmp,
}

impl Measure {
    /// Measure obtained when the weights are negated.
    pub fn dual(self) -> Measure {
        match self {
            Measure::Inf => Measure::Sup,
            Measure::Sup => Measure::Inf,
            Measure::LimInf => Measure::LimSup,
            Measure::LimSup => Measure::LimInf,
            Measure::Wmp => Measure::Wmp,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Measure::Inf => "Inf",
            Measure::Sup => "Sup",
            Measure::LimInf => "LimInf",
            Measure::LimSup => "LimSup",
            Measure::Wmp => "WMP",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Ge,
    Gt,
    Le,
    Lt,
}

impl Rel {
    pub fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Rel::Ge => lhs >= rhs,
            Rel::Gt => lhs > rhs,
            Rel::Le => lhs <= rhs,
            Rel::Lt => lhs < rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Ge => ">=",
            Rel::Gt => ">",
            Rel::Le => "<=",
            Rel::Lt => "<",
        }
    }
}

/// One measure constraint `f(rel num/den)` on a 0-based dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub measure: Measure,
    pub dim: usize,
    pub rel: Rel,
    pub num: i64,
    pub den: i64,
    pub window: Option<usize>,
}

impl Atom {
    /// Atom already in `>= 0` form.
    pub fn normalized(measure: Measure, dim: usize, window: Option<usize>) -> Atom {
        Atom { measure, dim, rel: Rel::Ge, num: 0, den: 1, window }
    }

    pub fn inf(dim: usize) -> Atom {
        Atom::normalized(Measure::Inf, dim, None)
    }

    pub fn sup(dim: usize) -> Atom {
        Atom::normalized(Measure::Sup, dim, None)
    }

    pub fn lim_inf(dim: usize) -> Atom {
        Atom::normalized(Measure::LimInf, dim, None)
    }

    pub fn lim_sup(dim: usize) -> Atom {
        Atom::normalized(Measure::LimSup, dim, None)
    }

    pub fn wmp(dim: usize, lambda: usize) -> Atom {
        Atom::normalized(Measure::Wmp, dim, Some(lambda))
    }

    pub fn is_normalized(&self) -> bool {
        self.rel == Rel::Ge && self.num == 0
    }

    pub fn lambda(&self) -> usize {
        self.window.unwrap_or(0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rat = if self.den == 1 {
            format!("{}", self.num)
        } else {
            format!("{}/{}", self.num, self.den)
        };
        match self.window {
            Some(l) => write!(f, "WMP({},{}{}@{})", l, self.rel.symbol(), rat, self.dim + 1),
            None => write!(f, "{}({}{}@{})", self.measure.name(), self.rel.symbol(), rat, self.dim + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Atom(Atom),
    And(Vec<Expr>),
    Or(Vec<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Atom,
    Intersection,
    Dnf,
    Cnf,
    General,
}

impl Expr {
    pub fn and(atoms: Vec<Atom>) -> Expr {
        if atoms.len() == 1 {
            return Expr::Atom(atoms.into_iter().next().unwrap());
        }
        Expr::And(atoms.into_iter().map(Expr::Atom).collect())
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Expr::Atom(a) => out.push(a),
            Expr::And(xs) | Expr::Or(xs) => xs.iter().for_each(|x| x.collect_atoms(out)),
        }
    }

    pub fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> Atom) -> Expr {
        match self {
            Expr::Atom(a) => Expr::Atom(f(a)),
            Expr::And(xs) => Expr::And(xs.iter().map(|x| x.map_atoms(f)).collect()),
            Expr::Or(xs) => Expr::Or(xs.iter().map(|x| x.map_atoms(f)).collect()),
        }
    }

    /// Flattens nested connectives of the same kind and drops singleton wrappers.
    pub fn flatten(&self) -> Expr {
        match self {
            Expr::Atom(a) => Expr::Atom(a.clone()),
            Expr::And(xs) | Expr::Or(xs) => {
                let is_and = matches!(self, Expr::And(_));
                let mut items = Vec::new();
                for x in xs {
                    match (x.flatten(), is_and) {
                        (Expr::And(ys), true) | (Expr::Or(ys), false) => items.extend(ys),
                        (y, _) => items.push(y),
                    }
                }
                if items.len() == 1 {
                    items.pop().unwrap()
                } else if is_and {
                    Expr::And(items)
                } else {
                    Expr::Or(items)
                }
            }
        }
    }

    /// Disjunctive normal form as a list of conjunctions (atoms may repeat).
    pub fn to_dnf(&self) -> Vec<Vec<Atom>> {
        match self {
            Expr::Atom(a) => vec![vec![a.clone()]],
            Expr::Or(xs) => xs.iter().flat_map(|x| x.to_dnf()).collect(),
            Expr::And(xs) => {
                let mut acc: Vec<Vec<Atom>> = vec![Vec::new()];
                for x in xs {
                    let d = x.to_dnf();
                    let mut next = Vec::with_capacity(acc.len() * d.len());
                    for a in &acc {
                        for b in &d {
                            let mut c = a.clone();
                            c.extend(b.iter().cloned());
                            next.push(c);
                        }
                    }
                    acc = next;
                }
                acc
            }
        }
    }

    /// Conjunctive normal form as a list of clauses.
    pub fn to_cnf(&self) -> Vec<Vec<Atom>> {
        match self {
            Expr::Atom(a) => vec![vec![a.clone()]],
            Expr::And(xs) => xs.iter().flat_map(|x| x.to_cnf()).collect(),
            Expr::Or(xs) => {
                let mut acc: Vec<Vec<Atom>> = vec![Vec::new()];
                for x in xs {
                    let c = x.to_cnf();
                    let mut next = Vec::with_capacity(acc.len() * c.len());
                    for a in &acc {
                        for b in &c {
                            let mut d = a.clone();
                            d.extend(b.iter().cloned());
                            next.push(d);
                        }
                    }
                    acc = next;
                }
                acc
            }
        }
    }
}

fn is_conj_of_atoms(e: &Expr) -> bool {
    match e {
        Expr::Atom(_) => true,
        Expr::And(xs) => xs.iter().all(|x| matches!(x, Expr::Atom(_))),
        Expr::Or(_) => false,
    }
}

fn is_disj_of_atoms(e: &Expr) -> bool {
    match e {
        Expr::Atom(_) => true,
        Expr::Or(xs) => xs.iter().all(|x| matches!(x, Expr::Atom(_))),
        Expr::And(_) => false,
    }
}

/// Routing shape of an expression, after flattening.
pub fn shape_of(expr: &Expr) -> Shape {
    match expr.flatten() {
        Expr::Atom(_) => Shape::Atom,
        Expr::And(xs) if xs.iter().all(|x| matches!(x, Expr::Atom(_))) => Shape::Intersection,
        Expr::Or(xs) if xs.iter().all(is_conj_of_atoms) => Shape::Dnf,
        Expr::And(xs) if xs.iter().all(is_disj_of_atoms) => Shape::Cnf,
        _ => Shape::General,
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::And(xs) | Expr::Or(xs) => {
                let sep = if matches!(self, Expr::And(_)) { " & " } else { " | " };
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    match x {
                        Expr::Atom(a) => write!(f, "{a}")?,
                        _ => write!(f, "({x})")?,
                    }
                }
                Ok(())
            }
        }
    }
}
