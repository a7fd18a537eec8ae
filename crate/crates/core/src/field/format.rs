//! Text grammar for exact scalars.
//!
//! Rationals are written `a` or `a/b`. Rational functions are written as a
//! polynomial in q (`q^2 - 1`, `2*q + 1/2`) or as `(<poly>)/(<poly>)`,
//! e.g. `(q^2 + 1)/(q)`. Parsing is exact and emission is canonical.

use super::poly::QPoly;
use super::ratfunc::RationalFunction;
use super::rational::Rational;

pub fn poly_string(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let deg = p.degree().unwrap();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = if neg { -&c } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if mag.is_one() && k > 0 { None } else { Some(mag.to_string()) };
        let q_part = match k {
            0 => None,
            1 => Some("q".to_string()),
            _ => Some(format!("q^{k}")),
        };
        match (coeff_part, q_part) {
            (Some(c), Some(q)) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&q);
            }
            (Some(c), None) => out.push_str(&c),
            (None, Some(q)) => out.push_str(&q),
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn ratfunc_string(f: &RationalFunction) -> String {
    if f.denominator().is_one() {
        poly_string(f.numerator())
    } else {
        format!("({})/({})", poly_string(f.numerator()), poly_string(f.denominator()))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Q,
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' => {
                it.next();
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(n));
            }
            'q' => {
                it.next();
                toks.push(Tok::Q);
            }
            '^' => {
                it.next();
                toks.push(Tok::Caret);
            }
            '*' => {
                it.next();
                toks.push(Tok::Star);
            }
            '/' => {
                it.next();
                toks.push(Tok::Slash);
            }
            '+' => {
                it.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                it.next();
                toks.push(Tok::Minus);
            }
            '(' => {
                it.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                it.next();
                toks.push(Tok::RParen);
            }
            other => return Err(format!("unexpected character {other:?} in scalar")),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), String> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(format!("expected {t:?}, found {got:?}")),
        }
    }

    fn integer(&mut self) -> Result<Rational, String> {
        match self.next() {
            Some(Tok::Int(n)) => Rational::parse(&n),
            got => Err(format!("expected integer, found {got:?}")),
        }
    }

    /// rational := int [ '/' int ]   (inside a polynomial, `/` always
    /// separates the two parts of a coefficient)
    fn rational(&mut self) -> Result<Rational, String> {
        let num = self.integer()?;
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err("zero denominator in coefficient".into());
            }
            return Ok(&num * &den.inv().unwrap());
        }
        Ok(num)
    }

    /// qpart := 'q' [ '^' uint ]
    fn q_power(&mut self) -> Result<usize, String> {
        self.expect(Tok::Q)?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(n)) => n
                    .parse::<usize>()
                    .map_err(|_| format!("exponent {n} out of range")),
                got => Err(format!("expected exponent, found {got:?}")),
            }
        } else {
            Ok(1)
        }
    }

    /// term := rational [ '*'? qpart ] | qpart
    fn term(&mut self) -> Result<QPoly, String> {
        if self.peek() == Some(&Tok::Q) {
            let k = self.q_power()?;
            return Ok(QPoly::monomial(Rational::one(), k));
        }
        let c = self.rational()?;
        if self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let k = self.q_power()?;
            return Ok(QPoly::monomial(c, k));
        }
        if self.peek() == Some(&Tok::Q) {
            let k = self.q_power()?;
            return Ok(QPoly::monomial(c, k));
        }
        Ok(QPoly::constant(c))
    }

    /// poly := [sign] term (('+'|'-') term)*
    fn poly(&mut self) -> Result<QPoly, String> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

pub fn parse_poly(s: &str) -> Result<QPoly, String> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    let poly = p.poly()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input in polynomial {s:?}"));
    }
    Ok(poly)
}

pub fn parse_ratfunc(s: &str) -> Result<RationalFunction, String> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    // "(<poly>)/(<poly>)" or a bare (possibly parenthesized) polynomial
    if p.peek() == Some(&Tok::LParen) {
        let start = p.pos;
        p.pos += 1;
        let num = p.poly()?;
        if p.expect(Tok::RParen).is_ok() {
            if p.pos == p.toks.len() {
                return Ok(RationalFunction::from_poly(num));
            }
            if p.peek() == Some(&Tok::Slash) {
                p.pos += 1;
                p.expect(Tok::LParen)?;
                let den = p.poly()?;
                p.expect(Tok::RParen)?;
                if p.pos != p.toks.len() {
                    return Err(format!("trailing input in scalar {s:?}"));
                }
                if den.is_zero() {
                    return Err("zero denominator".into());
                }
                return Ok(RationalFunction::new(num, den));
            }
        }
        // not of the quotient shape; reparse as a single polynomial
        p.pos = start;
    }
    let poly = p.poly()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input in scalar {s:?}"));
    }
    Ok(RationalFunction::from_poly(poly))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trips() {
        for s in ["q^2 - 1", "2*q^3 + 1/2*q - 3", "q", "-q^2 + q", "0", "5", "-1/2"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(poly_string(&p), s, "canonical emission of {s}");
        }
    }

    #[test]
    fn lenient_input_forms() {
        assert_eq!(parse_poly("q^2-1").unwrap(), parse_poly("q^2 - 1").unwrap());
        assert_eq!(parse_poly("3q").unwrap(), parse_poly("3*q").unwrap());
        assert_eq!(parse_poly("+q").unwrap(), parse_poly("q").unwrap());
    }

    #[test]
    fn ratfunc_forms() {
        let f = parse_ratfunc("(q^2 + 1)/(q)").unwrap();
        assert_eq!(ratfunc_string(&f), "(q^2 + 1)/(q)");
        // cancellation on parse
        let g = parse_ratfunc("(q^2 - 1)/(q + 1)").unwrap();
        assert_eq!(ratfunc_string(&g), "q - 1");
        let c = parse_ratfunc("3/2").unwrap();
        assert_eq!(ratfunc_string(&c), "3/2");
        assert!(parse_ratfunc("(q)/(0)").is_err());
        assert!(parse_ratfunc("q^-1").is_err());
    }
}
