//! Plain-text polynomial expressions for fixtures.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'sqrt5' | [a-z] | '(' expr ')'
//! ```

use super::{AlgebraError, Root5Number, SparsePolynomial};

type Poly = SparsePolynomial<Root5Number>;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Sqrt5,
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, AlgebraError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let n = digits.parse().map_err(|_| AlgebraError::Parse {
                    position: pos,
                    message: format!("integer literal too large: {digits}"),
                })?;
                out.push((pos, Token::Int(n)));
                continue;
            }
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let tok = match word.as_str() {
                    "sqrt5" => Token::Sqrt5,
                    w if w.len() == 1 => Token::Var(c),
                    w => {
                        return Err(AlgebraError::Parse {
                            position: pos,
                            message: format!("unknown identifier '{w}' (variables are single letters)"),
                        })
                    }
                };
                out.push((pos, tok));
                continue;
            }
            c => {
                return Err(AlgebraError::Parse {
                    position: pos,
                    message: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, AlgebraError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, AlgebraError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Token::Int(k)) if (0..=u32::MAX as i64).contains(&k) => {
                self.pos += 1;
                Ok(base.pow(k as u32))
            }
            _ => Err(self.error("expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        let tok = self.peek().cloned();
        match tok {
            Some(Token::Int(k)) => {
                self.pos += 1;
                Ok(Poly::from_int(k))
            }
            Some(Token::Sqrt5) => {
                self.pos += 1;
                Ok(Poly::constant(Root5Number::sqrt5()))
            }
            Some(Token::Var(c)) => {
                self.pos += 1;
                Ok(Poly::var(&c.to_string()))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a number, variable, or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses an expression such as `(6*sqrt5 - 10)*(a^2*b^2 + a^2) + 20*a*b*c*d`.
pub fn parse_polynomial(text: &str) -> Result<SparsePolynomial<Root5Number>, AlgebraError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        len: text.len(),
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(p("-a^2"), -Poly::var("a").pow(2));
        assert_eq!(p("2*a + 3*a"), p("5*a"));
        assert_eq!(p("2 - 3 - 4"), Poly::from_int(-5));
        assert_eq!(p("(a+b)^2"), p("a^2 + 2*a*b + b^2"));
    }

    #[test]
    fn whitespace_and_unicode_minus() {
        assert_eq!(p(" a −  b "), p("a-b"));
        assert_eq!(p("sqrt5 * sqrt5"), Poly::from_int(5));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_polynomial("a +"), Err(AlgebraError::Parse { position: 3, .. })));
        assert!(matches!(parse_polynomial("ab"), Err(AlgebraError::Parse { position: 0, .. })));
        assert!(matches!(parse_polynomial("(a"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_polynomial("a^b"), Err(AlgebraError::Parse { position: 2, .. })));
        assert!(matches!(parse_polynomial("a $ b"), Err(AlgebraError::Parse { position: 2, .. })));
        assert!(matches!(parse_polynomial("a b"), Err(AlgebraError::Parse { position: 2, .. })));
    }
}
