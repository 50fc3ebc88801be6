use crate::monomial::{Generator, WPolynomial};
use crate::ops::{apply_lower_q, apply_q};
use crate::WError;

/// The generators an expression may mention.
#[derive(Clone, Debug, Default)]
pub struct Context {
    gens: Vec<Generator>,
}

impl Context {
    pub fn new(gens: Vec<Generator>) -> Self {
        Context { gens }
    }

    /// `s` at (1,0), `n1`, `n2` at (3,3), `b` at (3,2) and their barred
    /// versions `sbar`, `n1bar`, `n2bar`, `bbar`.
    pub fn standard() -> Self {
        let base =
            [Generator::new("s", 1, 0), Generator::new("n1", 3, 3), Generator::new("n2", 3, 3), Generator::new("b", 3, 2)];
        let mut gens = base.to_vec();
        gens.extend(base.iter().map(Generator::bar));
        Context { gens }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, name: &str) -> Result<&Generator, WError> {
        self.gens.iter().find(|g| g.name == name).ok_or_else(|| WError::UnknownGenerator(name.to_string()))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, WError> {
        Err(WError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), WError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected `{}`", c as char))
        }
    }

    fn number(&mut self) -> Result<u32, WError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn expr(&mut self) -> Result<WPolynomial, WError> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            acc.add_assign(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<WPolynomial, WError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<WPolynomial, WError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.number()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn operation(&mut self, lower: bool) -> Result<WPolynomial, WError> {
        self.expect(b'[')?;
        let mut seq = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            seq.push(self.number()?);
        }
        self.expect(b']')?;
        self.expect(b'(')?;
        let mut acc = self.expr()?;
        self.expect(b')')?;
        for &s in seq.iter().rev() {
            acc = if lower { apply_lower_q(s, &acc)? } else { apply_q(s, &acc) };
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<WPolynomial, WError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => match self.number()? {
                0 => Ok(WPolynomial::zero()),
                1 => Ok(WPolynomial::one()),
                _ => self.err("only the constants 0 and 1 are allowed"),
            },
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match name {
                    "Q" if self.peek() == Some(b'[') => self.operation(false),
                    "q" if self.peek() == Some(b'[') => self.operation(true),
                    _ => Ok(WPolynomial::generator(self.ctx.get(name)?)),
                }
            }
            _ => self.err("expected an expression"),
        }
    }
}

/// Parses and normalizes an expression such as `Q[2](s*Q[1](s))`,
/// `s^2*Q[4](s) + Q[1](s)^3` or `q[1,1](s)`.
pub fn parse(src: &str, ctx: &Context) -> Result<WPolynomial, WError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, ctx };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ctx = Context::standard();
        for s in ["Q[1](s)^3 + s^2*Q[2,1](s)", "s^2*Q[4](s)", "0", "1", "n2*s^3 + n1*Q[3](s)", "sbar^4"] {
            let p = parse(s, &ctx).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse(&p.to_string(), &ctx).unwrap(), p);
        }
    }

    #[test]
    fn composite_and_lower() {
        let ctx = Context::standard();
        assert_eq!(parse("Q[2](s*Q[1](s))", &ctx).unwrap().to_string(), "Q[1](s)^3 + s^2*Q[2,1](s)");
        assert_eq!(parse("q[1,1](s)", &ctx).unwrap(), parse("Q[2,1](s)", &ctx).unwrap());
        assert_eq!(parse("Q[3,1](s)", &ctx).unwrap().to_string(), "0");
        let x = parse("q[1](s)^2*q[1,1](s)^2 + b*q[3](b)", &ctx).unwrap();
        assert_eq!(parse(&x.format_lower(), &ctx).unwrap(), x);
        assert_eq!(parse("Q[2,1](s)", &ctx).unwrap().format_lower(), "q[1,1](s)");
    }

    #[test]
    fn errors() {
        let ctx = Context::standard();
        assert!(matches!(parse("x", &ctx), Err(WError::UnknownGenerator(_))));
        assert!(matches!(parse("Q[1](s", &ctx), Err(WError::Parse { .. })));
        assert!(matches!(parse("s s", &ctx), Err(WError::Parse { .. })));
        assert!(matches!(parse("q[1](s + Q[1](s))", &ctx), Err(WError::Inhomogeneous)));
    }
}
