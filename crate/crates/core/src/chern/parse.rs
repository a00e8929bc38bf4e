//! ```text
//! expr  := base | func
//! base  := NAME ':' INT                      E:3
//! func  := 'wedge' '(' INT ',' expr ')'
//!        | 'sym'   '(' INT ',' expr ')'
//!        | 'schur' '(' '[' INT {',' INT} ']' ',' expr ')'
//!        | 'tensor' '(' expr ',' expr ')'
//!        | 'oplus'  '(' expr ',' expr ')'
//! ```

use super::bundle::BundleExpr;
use crate::combinat::Partition;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("'{}'", c as char))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("a bundle name or one of wedge, sym, schur, tensor, oplus");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("a nonnegative integer")
            }
        }
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident()?;
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b':') {
            self.pos += 1;
            let rank_at = self.pos;
            let rank = self.int()?;
            if rank == 0 {
                self.pos = rank_at;
                return self.err("a positive rank");
            }
            return Ok(BundleExpr::base(&name, rank));
        }
        match name.as_str() {
            "wedge" | "sym" => {
                self.eat(b'(')?;
                let k = self.int()?;
                self.eat(b',')?;
                let e = self.expr()?;
                self.eat(b')')?;
                Ok(if name == "wedge" {
                    BundleExpr::wedge(k, e)
                } else {
                    BundleExpr::sym(k, e)
                })
            }
            "schur" => {
                self.eat(b'(')?;
                self.eat(b'[')?;
                let lam_at = self.pos;
                let mut parts = Vec::new();
                self.skip_ws();
                if self.src.get(self.pos) != Some(&b']') {
                    parts.push(self.int()?);
                    loop {
                        self.skip_ws();
                        if self.src.get(self.pos) == Some(&b',') {
                            self.pos += 1;
                            parts.push(self.int()?);
                        } else {
                            break;
                        }
                    }
                }
                self.eat(b']')?;
                let lambda = match Partition::new(parts) {
                    Ok(l) => l,
                    Err(_) => {
                        self.pos = lam_at;
                        return self.err("weakly decreasing parts");
                    }
                };
                self.eat(b',')?;
                let e = self.expr()?;
                self.eat(b')')?;
                Ok(BundleExpr::schur(lambda, e))
            }
            "tensor" | "oplus" => {
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b',')?;
                let b = self.expr()?;
                self.eat(b')')?;
                Ok(if name == "tensor" {
                    BundleExpr::tensor(a, b)
                } else {
                    BundleExpr::oplus(a, b)
                })
            }
            _ => {
                self.pos = at;
                self.skip_ws();
                self.pos += name.len();
                self.err("':' after a bundle name")
            }
        }
    }
}

/// Parses the bundle DSL, e.g. `tensor(wedge(2, E:4), F:2)`.
pub fn parse_bundle(src: &str) -> Result<BundleExpr> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("end of input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in [
            "E:3",
            "wedge(2, E:4)",
            "sym(2, E:3)",
            "schur([2,1], E:3)",
            "tensor(wedge(2, E:4), F:2)",
            "oplus(E:2, sym(3, F:1))",
        ] {
            assert_eq!(parse_bundle(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_bundle("  wedge( 2 ,E:4 ) ").unwrap(), BundleExpr::wedge(2, BundleExpr::base("E", 4)));
    }

    #[test]
    fn error_positions() {
        let cases = [
            ("E3", 2, "':' after a bundle name"),
            ("E:0", 2, "a positive rank"),
            ("wedge(2 E:4)", 8, "','"),
            ("schur([1,2], E:3)", 7, "weakly decreasing parts"),
            ("tensor(E:1, F:1", 15, "')'"),
            ("E:2 junk", 4, "end of input"),
            ("(E:2)", 0, "a bundle name or one of wedge, sym, schur, tensor, oplus"),
        ];
        for (src, pos, expected) in cases {
            assert_eq!(
                parse_bundle(src).unwrap_err(),
                Error::Parse {
                    pos,
                    expected: expected.to_string()
                },
                "{src}"
            );
        }
    }
}
