use super::{Atom, Expr, Measure, Rel};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

/// Parses an objective over a game of dimension `game_dim`. Dimensions are written 1-based.
pub fn parse_objective(text: &str, game_dim: usize) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, dim: game_dim };
    let e = p.expr()?;
    p.ws();
    if p.pos < p.src.len() {
        return Err(p.err("'|', '&' or end of input"));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn err(&self, expected: &str) -> Error {
        Error::SyntaxError { pos: self.pos, expected: expected.to_string() }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("'{tok}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut items = vec![self.term()?];
        while self.eat("|") {
            items.push(self.term()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Expr::Or(items) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut items = vec![self.factor()?];
        while self.eat("&") {
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Expr::And(items) })
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        self.atom().map(Expr::Atom)
    }

    fn atom(&mut self) -> Result<Atom> {
        self.ws();
        let measure = [
            ("LimInf", Measure::LimInf),
            ("LimSup", Measure::LimSup),
            ("Inf", Measure::Inf),
            ("Sup", Measure::Sup),
            ("WMP", Measure::Wmp),
        ]
        .into_iter()
        .find(|(name, _)| self.src[self.pos..].starts_with(name.as_bytes()));
        let Some((name, measure)) = measure else {
            return Err(self.err("Inf, Sup, LimInf, LimSup, WMP or '('"));
        };
        self.pos += name.len();
        self.expect("(")?;
        let window = if measure == Measure::Wmp {
            let l = self.int()?;
            if l <= 0 {
                return Err(Error::BadWindow(l));
            }
            self.expect(",")?;
            Some(l as usize)
        } else {
            None
        };
        let rel = self.rel()?;
        let num = self.int()?;
        let den = if self.eat("/") {
            let d = self.int()?;
            if d <= 0 {
                return Err(self.err("positive denominator"));
            }
            d
        } else {
            1
        };
        self.expect("@")?;
        let m = self.int()?;
        if m < 1 || m as usize > self.dim {
            return Err(Error::BadDimension(m.max(0) as usize));
        }
        self.expect(")")?;
        Ok(Atom { measure, dim: m as usize - 1, rel, num, den, window })
    }

    fn rel(&mut self) -> Result<Rel> {
        for (tok, r) in [(">=", Rel::Ge), ("<=", Rel::Le), (">", Rel::Gt), ("<", Rel::Lt)] {
            if self.eat(tok) {
                return Ok(r);
            }
        }
        Err(self.err("'>=', '>', '<=' or '<'"))
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.pos < self.src.len() && (self.src[self.pos] == b'-' || self.src[self.pos] == b'+') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.err("integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::SyntaxError { pos: start, expected: "integer in range".into() })
    }
}
