//! Parser for ring elements in the CLI grammar:
//!
//! ```text
//! expr := ['-'] term (('+'|'-') term)*
//! term := atom ('*' atom)*
//! atom := INT | 'b' ['^' int] | 'v' ['^' uint] | 't' ['^' uint]
//!       | 'bb' ['^' uint] | 'L' uint | 's' uint | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. `L`k must satisfy 1 <= k <= n; `s`k expands
//! through the elementary symmetric basis. Which coefficient atoms are
//! accepted depends on the ring: `b` (and `v`, via v = b + b^-1) in kt, `v`
//! in kg, `bb` and `t` (= bb^2) in ht, `t` in hg, bare integers in ext.

use std::fmt;

use loopk_core::coefficients::LaurentElt;
use loopk_core::poly::RatPoly;
use loopk_core::quotient::{
    elementary_symmetric, CoeffRing, CohomVar, IntRing, LaurentRing, MultiElt, QPolyRing, RepGRing,
    RingDescriptor,
};
use loopk_core::RepGElt;

/// Ring tags accepted by `--ring`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RingTag {
    /// K_T((P^1)^n) over `Z[b, b^-1]`
    Kt,
    /// K_G((P^1)^n) over `Z[v]`
    Kg,
    /// H_T((P^1)^n; Q) over `Q[bb]`
    Ht,
    /// H_G((P^1)^n; Q) over `Q[t]`
    Hg,
    /// square-zero ring over Z
    Ext,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Kt => "kt",
            RingTag::Kg => "kg",
            RingTag::Ht => "ht",
            RingTag::Hg => "hg",
            RingTag::Ext => "ext",
        }
    }
}

/// A parsed element in one of the five ring families.
#[derive(Debug)]
pub enum ParsedElt {
    Kt(MultiElt<LaurentRing>),
    Kg(MultiElt<RepGRing>),
    Ht(MultiElt<QPolyRing>),
    Hg(MultiElt<QPolyRing>),
    Ext(MultiElt<IntRing>),
}

impl fmt::Display for ParsedElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedElt::Kt(e) => e.fmt(f),
            ParsedElt::Kg(e) => e.fmt(f),
            ParsedElt::Ht(e) => e.fmt(f),
            ParsedElt::Hg(e) => e.fmt(f),
            ParsedElt::Ext(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementError {
    Syntax {
        pos: usize,
        msg: String,
    },
    UnknownGenerator {
        pos: usize,
        name: String,
    },
    CoefficientNotInRing {
        pos: usize,
        atom: String,
        ring: &'static str,
    },
}

impl fmt::Display for ElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementError::Syntax { pos, msg } => write!(f, "parse error at {pos}: {msg}"),
            ElementError::UnknownGenerator { pos, name } => {
                write!(f, "unknown generator `{name}` at {pos}")
            }
            ElementError::CoefficientNotInRing { pos, atom, ring } => {
                write!(
                    f,
                    "`{atom}` at {pos} is not a coefficient of the {ring} ring"
                )
            }
        }
    }
}

impl std::error::Error for ElementError {}

/// Coefficient atoms of the grammar, before ring-specific injection.
enum CoeffAtom {
    Int(i64),
    B(i64),
    V(u32),
    T(u32),
    Bb(u32),
}

impl CoeffAtom {
    fn describe(&self) -> String {
        match self {
            CoeffAtom::Int(n) => n.to_string(),
            CoeffAtom::B(k) => format!("b^{k}"),
            CoeffAtom::V(k) => format!("v^{k}"),
            CoeffAtom::T(k) => format!("t^{k}"),
            CoeffAtom::Bb(k) => format!("bb^{k}"),
        }
    }
}

/// Ring-specific injection of coefficient atoms.
trait AtomRing: CoeffRing {
    const NAME: &'static str;
    fn inject(&self, atom: &CoeffAtom) -> Option<Self::Elt>;
}

impl AtomRing for LaurentRing {
    const NAME: &'static str = "kt";
    fn inject(&self, atom: &CoeffAtom) -> Option<LaurentElt> {
        match atom {
            CoeffAtom::Int(n) => Some(LaurentElt::from_int(*n)),
            CoeffAtom::B(k) => Some(LaurentElt::b(*k)),
            CoeffAtom::V(k) => Some(LaurentElt::v_restricted().pow(*k as usize)),
            _ => None,
        }
    }
}

impl AtomRing for RepGRing {
    const NAME: &'static str = "kg";
    fn inject(&self, atom: &CoeffAtom) -> Option<RepGElt> {
        match atom {
            CoeffAtom::Int(n) => Some(RepGElt::from_int(*n)),
            CoeffAtom::V(k) => Some(RepGElt::v().pow(*k as usize)),
            _ => None,
        }
    }
}

impl AtomRing for QPolyRing {
    const NAME: &'static str = "ht/hg";
    fn inject(&self, atom: &CoeffAtom) -> Option<RatPoly> {
        match (self.var, atom) {
            (_, CoeffAtom::Int(n)) => Some(RatPoly::from_int(*n)),
            (CohomVar::BBar, CoeffAtom::Bb(k)) => Some(RatPoly::variable().pow(*k as usize)),
            // t = bb^2 also lives in the T-case coefficient ring
            (CohomVar::BBar, CoeffAtom::T(k)) => Some(RatPoly::variable().pow(2 * *k as usize)),
            (CohomVar::TBar, CoeffAtom::T(k)) => Some(RatPoly::variable().pow(*k as usize)),
            _ => None,
        }
    }
}

impl AtomRing for IntRing {
    const NAME: &'static str = "ext";
    fn inject(&self, atom: &CoeffAtom) -> Option<Self::Elt> {
        match atom {
            CoeffAtom::Int(n) => Some(self.embed_int(*n)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ElementError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit = &text[start..i];
                let n = lit.parse::<i64>().map_err(|_| ElementError::Syntax {
                    pos: start,
                    msg: format!("integer literal `{lit}` out of range"),
                })?;
                out.push((start, Tok::Int(n)));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(ElementError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a, R: AtomRing> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a RingDescriptor<R>,
    end: usize,
}

impl<'a, R: AtomRing> Parser<'a, R> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_uint(&mut self, what: &str) -> Result<u32, ElementError> {
        match self.next() {
            Some((_, Tok::Int(n))) if n >= 0 && n <= u32::MAX as i64 => Ok(n as u32),
            Some((p, t)) => Err(ElementError::Syntax {
                pos: p,
                msg: format!("expected nonnegative exponent for {what}, found {t:?}"),
            }),
            None => Err(ElementError::Syntax {
                pos: self.end,
                msg: format!("expected exponent for {what}"),
            }),
        }
    }

    /// Optional `^ int`; `signed` allows a leading minus (only `b` does).
    fn exponent(&mut self, signed: bool, what: &str) -> Result<i64, ElementError> {
        if !matches!(self.peek(), Some((_, Tok::Caret))) {
            return Ok(1);
        }
        self.next();
        let neg = if signed && matches!(self.peek(), Some((_, Tok::Minus))) {
            self.next();
            true
        } else {
            false
        };
        let mag = self.expect_uint(what)? as i64;
        Ok(if neg { -mag } else { mag })
    }

    fn expr(&mut self) -> Result<MultiElt<R>, ElementError> {
        let mut negate = false;
        if matches!(self.peek(), Some((_, Tok::Minus))) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.try_add(&t).expect("same ring");
                }
                Some((_, Tok::Minus)) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.try_sub(&t).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiElt<R>, ElementError> {
        let mut acc = self.atom()?;
        while matches!(self.peek(), Some((_, Tok::Star))) {
            self.next();
            let a = self.atom()?;
            acc = acc.try_mul(&a).expect("same ring");
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MultiElt<R>, ElementError> {
        match self.next() {
            Some((_, Tok::Int(n))) => Ok(MultiElt::constant(
                self.ring,
                self.ring
                    .coeff
                    .inject(&CoeffAtom::Int(n))
                    .expect("integers embed in every coefficient ring"),
            )),
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((p, t)) => Err(ElementError::Syntax {
                        pos: p,
                        msg: format!("expected `)`, found {t:?}"),
                    }),
                    None => Err(ElementError::Syntax {
                        pos: self.end,
                        msg: "unclosed parenthesis".into(),
                    }),
                }
            }
            Some((p, Tok::Ident(name))) => self.ident_atom(p, &name),
            Some((p, t)) => Err(ElementError::Syntax {
                pos: p,
                msg: format!("expected an atom, found {t:?}"),
            }),
            None => Err(ElementError::Syntax {
                pos: self.end,
                msg: "expected an atom".into(),
            }),
        }
    }

    fn ident_atom(&mut self, pos: usize, name: &str) -> Result<MultiElt<R>, ElementError> {
        match name {
            "L" => {
                let k = self.expect_uint("L")? as usize;
                MultiElt::generator(self.ring, k).map_err(|_| ElementError::UnknownGenerator {
                    pos,
                    name: format!("L{k} (n = {})", self.ring.n),
                })
            }
            "s" => {
                let k = self.expect_uint("s")? as usize;
                elementary_symmetric(self.ring, k).map_err(|_| ElementError::UnknownGenerator {
                    pos,
                    name: format!("s{k} (n = {})", self.ring.n),
                })
            }
            "b" | "v" | "t" | "bb" => {
                let atom = match name {
                    "b" => CoeffAtom::B(self.exponent(true, "b")?),
                    "v" => CoeffAtom::V(self.exponent(false, "v")? as u32),
                    "t" => CoeffAtom::T(self.exponent(false, "t")? as u32),
                    _ => CoeffAtom::Bb(self.exponent(false, "bb")? as u32),
                };
                match self.ring.coeff.inject(&atom) {
                    Some(c) => Ok(MultiElt::constant(self.ring, c)),
                    None => Err(ElementError::CoefficientNotInRing {
                        pos,
                        atom: atom.describe(),
                        ring: R::NAME,
                    }),
                }
            }
            other => Err(ElementError::UnknownGenerator {
                pos,
                name: other.to_string(),
            }),
        }
    }
}

fn parse_in<R: AtomRing>(
    text: &str,
    ring: &RingDescriptor<R>,
) -> Result<MultiElt<R>, ElementError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        end: text.len(),
    };
    let out = p.expr()?;
    if let Some((pos, t)) = p.peek() {
        return Err(ElementError::Syntax {
            pos: *pos,
            msg: format!("trailing input {t:?}"),
        });
    }
    Ok(out)
}

/// Parses `text` as an element of the tagged ring on n generators.
pub fn parse_element(text: &str, tag: RingTag, n: usize) -> Result<ParsedElt, ElementError> {
    match tag {
        RingTag::Kt => parse_in(text, &loopk_core::quotient::kt(n)).map(ParsedElt::Kt),
        RingTag::Kg => parse_in(text, &loopk_core::quotient::kg(n)).map(ParsedElt::Kg),
        RingTag::Ht => parse_in(text, &loopk_core::quotient::ht(n)).map(ParsedElt::Ht),
        RingTag::Hg => parse_in(text, &loopk_core::quotient::hg(n)).map(ParsedElt::Hg),
        RingTag::Ext => parse_in(text, &loopk_core::quotient::ext(n)).map(ParsedElt::Ext),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopk_core::quotient::{kg, kt};

    fn parse_kg(text: &str, n: usize) -> MultiElt<RepGRing> {
        match parse_element(text, RingTag::Kg, n).unwrap() {
            ParsedElt::Kg(e) => e,
            _ => unreachable!(),
        }
    }

    #[test]
    fn quadratic_relation_through_parser() {
        // L1*L1 in K_G, n = 2 normalizes to v L1 - 1
        let e = parse_kg("L1*L1", 2);
        assert_eq!(e.to_string(), "v*L1 - 1");
    }

    #[test]
    fn kernel_element_through_parser() {
        let e = parse_kg("s1 - v*s0", 2);
        let ring = kg(2);
        let expect = loopk_core::tower::kernel_basis_k(1).k1.expand();
        assert_eq!(e, expect);
        let _ = ring;
    }

    #[test]
    fn coefficient_not_in_ring() {
        let err = parse_element("b*L1", RingTag::Kg, 2).unwrap_err();
        assert!(matches!(err, ElementError::CoefficientNotInRing { .. }));
        let err = parse_element("v*L1", RingTag::Hg, 2).unwrap_err();
        assert!(matches!(err, ElementError::CoefficientNotInRing { .. }));
    }

    #[test]
    fn unknown_generator_and_syntax_errors() {
        assert!(matches!(
            parse_element("L3", RingTag::Kg, 2),
            Err(ElementError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            parse_element("w + 1", RingTag::Kg, 2),
            Err(ElementError::UnknownGenerator { pos: 0, .. })
        ));
        match parse_element("1 + * 2", RingTag::Kg, 2) {
            Err(ElementError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!(
                "expected syntax error, got {:?}",
                other.map(|e| e.to_string())
            ),
        }
        assert!(matches!(
            parse_element("(1 + L1", RingTag::Kg, 2),
            Err(ElementError::Syntax { .. })
        ));
    }

    #[test]
    fn laurent_exponents() {
        match parse_element("3*b^-2 + b", RingTag::Kt, 1).unwrap() {
            ParsedElt::Kt(e) => {
                let c = e.coeff(0);
                assert_eq!(c.coeff(-2), 3.into());
                assert_eq!(c.coeff(1), 1.into());
            }
            _ => unreachable!(),
        }
        // t inside the ht ring means bb^2
        match parse_element("t*L1", RingTag::Ht, 1).unwrap() {
            ParsedElt::Ht(e) => {
                assert_eq!(e.coeff(1).coeff(2), loopk_core::series::rat_int(1));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn render_parse_round_trip_corpus() {
        // 100 grammar-valid strings obtained by rendering random elements
        // across the five rings; parsing the rendering must reproduce the
        // element, and re-rendering must be stable.
        use loopk_core::quotient::sample_elt;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);

        fn one_ring<R: AtomRing>(
            ring: &RingDescriptor<R>,
            count: usize,
            rng: &mut rand_chacha::ChaCha8Rng,
        ) {
            for _ in 0..count {
                let e = sample_elt(ring, 4, rng);
                let text = e.to_string();
                let parsed = parse_in(&text, ring)
                    .unwrap_or_else(|err| panic!("`{text}` failed to parse: {err}"));
                assert_eq!(parsed, e, "round trip through `{text}`");
                assert_eq!(parsed.to_string(), text, "stable rendering of `{text}`");
            }
        }

        one_ring(&loopk_core::quotient::kt(3), 20, &mut rng);
        one_ring(&loopk_core::quotient::kg(3), 20, &mut rng);
        one_ring(&loopk_core::quotient::ht(3), 20, &mut rng);
        one_ring(&loopk_core::quotient::hg(3), 20, &mut rng);
        one_ring(&loopk_core::quotient::ext(3), 20, &mut rng);
    }

    #[test]
    fn render_parse_round_trip_examples() {
        let ring = kt(3);
        for text in [
            "(v - 2)*L1*L3 + 1",
            "-L1 + 2*L2*L3",
            "b^2 + 3 + b^-2",
            "s2 - v*s1 + (b + b^-1)*s0",
        ] {
            let e = match parse_element(text, RingTag::Kt, 3).unwrap() {
                ParsedElt::Kt(e) => e,
                _ => unreachable!(),
            };
            let rendered = e.to_string();
            let again = match parse_element(&rendered, RingTag::Kt, 3).unwrap() {
                ParsedElt::Kt(e) => e,
                _ => unreachable!(),
            };
            assert_eq!(e, again, "round trip through `{rendered}`");
        }
        let _ = ring;
    }
}
