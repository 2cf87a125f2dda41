//! The bundle expression mini-language.
//!
//! Grammar (whitespace-insensitive, LL(1)):
//!
//! ```text
//! expr  := term {"+" term}
//! term  := primary {"*" | "(" twist ")" | "[" int "]"}
//! primary := "O" | "U" | "Q" | "K" | "Kperp" | "W" | func
//! func  := ("S^" int | "L^" int | "Sigma[" int {"," int} "]") "(" expr ")"
//! twist := int | int "G" [("+"|"-") int "Y"] | int "Y"
//! ```
//!
//! `U`/`K` name the tautological subbundle, `Q` the quotient W/U, `Kperp`
//! the perp bundle, `W` the trivial bundle on the ambient space; `*` is the
//! dual, `S^m`/`L^m` symmetric and exterior powers, `Sigma[λ]` a general
//! Schur functor, `(..)` a Picard twist and `[k]` a homological shift.

use std::fmt;

use bbw::bundles::{EquivariantObject, Space};
use bbw::schur::VirtualRep;
use bbw::weights::DominantWeight;
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    O,
    U,
    Q,
    K,
    Kperp,
    W,
}

impl Atom {
    fn name(&self) -> &'static str {
        match self {
            Atom::O => "O",
            Atom::U => "U",
            Atom::Q => "Q",
            Atom::K => "K",
            Atom::Kperp => "Kperp",
            Atom::W => "W",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Bare(i64),
    G(i64),
    GY(i64, i64),
    Y(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(Atom),
    Sym(u32, Box<Expr>),
    Wedge(u32, Box<Expr>),
    Schur(Vec<i64>, Box<Expr>),
    Dual(Box<Expr>),
    Twisted(Box<Expr>, Twist),
    Shifted(Box<Expr>, i64),
    Sum(Vec<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(a) => write!(f, "{}", a.name()),
            Expr::Sym(m, e) => write!(f, "S^{m}({e})"),
            Expr::Wedge(m, e) => write!(f, "L^{m}({e})"),
            Expr::Schur(w, e) => {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "Sigma[{}]({e})", parts.join(","))
            }
            Expr::Dual(e) => write!(f, "{e}*"),
            Expr::Twisted(e, t) => match t {
                Twist::Bare(a) => write!(f, "{e}({a})"),
                Twist::G(a) => write!(f, "{e}({a}G)"),
                Twist::GY(a, b) if *b >= 0 => write!(f, "{e}({a}G+{b}Y)"),
                Twist::GY(a, b) => write!(f, "{e}({a}G{b}Y)"),
                Twist::Y(b) => write!(f, "{e}({b}Y)"),
            },
            Expr::Shifted(e, k) => write!(f, "{e}[{k}]"),
            Expr::Sum(terms) => {
                let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// A parse or elaboration failure, carrying the 1-based byte offset and the
/// tokens that would have been acceptable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(msg) = &self.message {
            return write!(f, "at offset {}: {}", self.offset, msg);
        }
        write!(
            f,
            "at offset {}: found {}, expected one of {}",
            self.offset,
            self.found,
            self.expected.join(", ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Star,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Caret,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(v) => format!("integer {v}"),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBrack, i));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBrack, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                if c == '-' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(ParseError {
                            offset: start + 1,
                            expected: vec!["digit".into()],
                            found: "`-`".into(),
                            message: None,
                        });
                    }
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit = &text[start..i];
                let value: i64 = lit.parse().map_err(|_| ParseError {
                    offset: start + 1,
                    expected: vec!["integer".into()],
                    found: format!("`{lit}`"),
                    message: Some(format!("integer literal `{lit}` out of range")),
                })?;
                toks.push((Tok::Int(value), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError {
                    offset: i + 1,
                    expected: vec!["expression".into()],
                    found: format!("`{c}`"),
                    message: None,
                })
            }
        }
    }
    toks.push((Tok::Eof, bytes.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1 + 1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
            message: None,
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn int(&mut self, name: &str) -> Result<i64, ParseError> {
        match self.peek() {
            Tok::Int(v) => {
                let v = *v;
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(&[name])),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while *self.peek() == Tok::Plus {
            self.bump();
            terms.push(self.term()?);
        }
        if terms.len() == 1 {
            Ok(terms.pop().unwrap())
        } else {
            Ok(Expr::Sum(terms))
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.primary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    e = Expr::Dual(Box::new(e));
                }
                Tok::LParen => {
                    self.bump();
                    let t = self.twist()?;
                    self.expect(Tok::RParen, ")")?;
                    e = Expr::Twisted(Box::new(e), t);
                }
                Tok::LBrack => {
                    self.bump();
                    let k = self.int("integer")?;
                    self.expect(Tok::RBrack, "]")?;
                    e = Expr::Shifted(Box::new(e), k);
                }
                _ => break,
            }
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let Tok::Ident(name) = self.peek().clone() else {
            return Err(self.error(&["O", "U", "Q", "K", "Kperp", "W", "S^", "L^", "Sigma["]));
        };
        match name.as_str() {
            "O" => {
                self.bump();
                Ok(Expr::Atom(Atom::O))
            }
            "U" => {
                self.bump();
                Ok(Expr::Atom(Atom::U))
            }
            "Q" => {
                self.bump();
                Ok(Expr::Atom(Atom::Q))
            }
            "K" => {
                self.bump();
                Ok(Expr::Atom(Atom::K))
            }
            "Kperp" => {
                self.bump();
                Ok(Expr::Atom(Atom::Kperp))
            }
            "W" => {
                self.bump();
                Ok(Expr::Atom(Atom::W))
            }
            "S" | "L" => {
                self.bump();
                self.expect(Tok::Caret, "^")?;
                let m = self.int("nonnegative integer")?;
                if m < 0 {
                    return Err(ParseError {
                        offset: self.offset(),
                        expected: vec!["nonnegative integer".into()],
                        found: format!("integer {m}"),
                        message: None,
                    });
                }
                self.expect(Tok::LParen, "(")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(if name == "S" {
                    Expr::Sym(m as u32, Box::new(inner))
                } else {
                    Expr::Wedge(m as u32, Box::new(inner))
                })
            }
            "Sigma" => {
                self.bump();
                self.expect(Tok::LBrack, "[")?;
                let mut weight = vec![self.int("integer")?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    weight.push(self.int("integer")?);
                }
                self.expect(Tok::RBrack, "]")?;
                self.expect(Tok::LParen, "(")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(Expr::Schur(weight, Box::new(inner)))
            }
            _ => Err(self.error(&["O", "U", "Q", "K", "Kperp", "W", "S^", "L^", "Sigma["])),
        }
    }

    fn twist(&mut self) -> Result<Twist, ParseError> {
        let a = self.int("integer")?;
        match self.peek().clone() {
            Tok::Ident(g) if g == "G" => {
                self.bump();
                match self.peek().clone() {
                    Tok::Plus => {
                        self.bump();
                        let b = self.int("integer")?;
                        self.ident_y()?;
                        Ok(Twist::GY(a, b))
                    }
                    Tok::Int(b) => {
                        self.bump();
                        self.ident_y()?;
                        Ok(Twist::GY(a, b))
                    }
                    _ => Ok(Twist::G(a)),
                }
            }
            Tok::Ident(y) if y == "Y" => {
                self.bump();
                Ok(Twist::Y(a))
            }
            _ => Ok(Twist::Bare(a)),
        }
    }

    fn ident_y(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Ident(y) if y == "Y" => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error(&["Y"])),
        }
    }
}

/// Parses an expression to its syntax tree.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["+", "*", "(", "[", "end of input"]));
    }
    Ok(e)
}

/// An elaborated expression: the object plus any rank warnings (exterior
/// powers beyond the rank elaborate to the zero object, which is a warning,
/// not an error).
#[derive(Debug)]
pub struct Elaborated {
    pub ast: Expr,
    pub object: EquivariantObject,
    pub warnings: Vec<String>,
}

/// Parses and elaborates on a declared space.
pub fn parse_bundle(text: &str, space: Space) -> Result<Elaborated, ParseError> {
    let ast = parse(text)?;
    let mut warnings = Vec::new();
    let object = elaborate(&ast, space, &mut warnings)?;
    let object = fold_plucker_twists(object);
    Ok(Elaborated {
        ast,
        object,
        warnings,
    })
}

/// On any space, a pure H_G twist is a power of det U* and folds into the
/// β slot.
fn fold_plucker_twists(obj: EquivariantObject) -> EquivariantObject {
    let space = obj.space();
    let terms = obj
        .terms()
        .iter()
        .map(|t| {
            let mut t = t.clone();
            if t.twist_g != 0 {
                t.bundle.beta = t.bundle.beta.det_shift(t.twist_g);
                t.twist_g = 0;
            }
            t
        })
        .collect();
    EquivariantObject::from_terms(space, terms).expect("refolding keeps validity")
}

fn unsupported(message: String) -> ParseError {
    ParseError {
        offset: 1,
        expected: Vec::new(),
        found: String::new(),
        message: Some(message),
    }
}

fn elaborate(
    expr: &Expr,
    space: Space,
    warnings: &mut Vec<String>,
) -> Result<EquivariantObject, ParseError> {
    match expr {
        Expr::Atom(a) => Ok(match a {
            Atom::O => EquivariantObject::structure(space),
            Atom::U | Atom::K => EquivariantObject::tautological_sub(space),
            Atom::Q => EquivariantObject::quotient(space),
            Atom::Kperp => EquivariantObject::perp(space),
            Atom::W => standard_rep_bundle(space, 1, false),
        }),
        Expr::Sym(m, inner) => power(space, inner, *m as usize, false, warnings),
        Expr::Wedge(m, inner) => power(space, inner, *m as usize, true, warnings),
        Expr::Schur(w, inner) => schur_apply(space, inner, w),
        Expr::Dual(inner) => Ok(elaborate(inner, space, warnings)?.dual()),
        Expr::Twisted(inner, twist) => {
            let obj = elaborate(inner, space, warnings)?;
            let (g, y) = match twist {
                Twist::Bare(t) => {
                    if space.has_fiber_class() {
                        (0, *t)
                    } else {
                        (*t, 0)
                    }
                }
                Twist::G(a) => (*a, 0),
                Twist::GY(a, b) => (*a, *b),
                Twist::Y(b) => (0, *b),
            };
            obj.twisted(g, y)
                .map_err(|e| unsupported(format!("twist not available on {}: {e}", space)))
        }
        Expr::Shifted(inner, k) => Ok(elaborate(inner, space, warnings)?.shifted(*k)),
        Expr::Sum(terms) => {
            let mut acc = EquivariantObject::zero(space);
            for t in terms {
                let obj = elaborate(t, space, warnings)?;
                acc = acc
                    .plus(&obj)
                    .map_err(|e| unsupported(format!("cannot add terms: {e}")))?;
            }
            Ok(acc)
        }
    }
}

/// The trivial bundle with fiber S^m W or Λ^m W.
fn standard_rep_bundle(space: Space, m: usize, wedge: bool) -> EquivariantObject {
    let n = space.base().n;
    let mut entries = vec![0i64; n];
    if wedge {
        for e in entries.iter_mut().take(m) {
            *e = 1;
        }
    } else {
        entries[0] = m as i64;
    }
    let rep = VirtualRep::single(
        DominantWeight::new(entries).expect("dominant"),
        BigInt::from(1),
    );
    if wedge && m > n {
        return EquivariantObject::zero(space);
    }
    EquivariantObject::outer_rep(space, rep).expect("trivial bundle is well formed")
}

fn power(
    space: Space,
    inner: &Expr,
    m: usize,
    wedge: bool,
    warnings: &mut Vec<String>,
) -> Result<EquivariantObject, ParseError> {
    let op = if wedge { "L" } else { "S" };
    let (atom, dualized) = match inner {
        Expr::Atom(a) => (a, false),
        Expr::Dual(b) => match b.as_ref() {
            Expr::Atom(a) => (a, true),
            _ => {
                return Err(unsupported(format!(
                    "{op}^{m} of a composite expression is not supported"
                )))
            }
        },
        _ => {
            return Err(unsupported(format!(
                "{op}^{m} of a composite expression is not supported"
            )))
        }
    };
    let base = space.base();
    let rank = match atom {
        Atom::U | Atom::K => base.k,
        Atom::Q | Atom::Kperp => base.perp_rank(),
        Atom::W => base.n,
        Atom::O => 1,
    };
    if wedge && m > rank {
        warnings.push(format!(
            "{op}^{m} of a rank-{rank} bundle is the zero object"
        ));
        return Ok(EquivariantObject::zero(space));
    }
    let obj = match (atom, wedge) {
        (Atom::U | Atom::K, false) => EquivariantObject::sym_sub(space, m),
        (Atom::U | Atom::K, true) => EquivariantObject::wedge_sub(space, m),
        (Atom::Q, false) => EquivariantObject::sym_quotient(space, m),
        (Atom::Q, true) => EquivariantObject::wedge_quotient(space, m),
        (Atom::Kperp, false) => EquivariantObject::sym_perp(space, m),
        (Atom::Kperp, true) => EquivariantObject::wedge_perp(space, m),
        (Atom::W, _) => standard_rep_bundle(space, m, wedge),
        // powers of O reduce to O; L^m(O) with m > 1 was caught above
        (Atom::O, _) => EquivariantObject::structure(space),
    };
    Ok(if dualized { obj.dual() } else { obj })
}

fn schur_apply(
    space: Space,
    inner: &Expr,
    weight: &[i64],
) -> Result<EquivariantObject, ParseError> {
    let (atom, dualized) = match inner {
        Expr::Atom(a) => (a, false),
        Expr::Dual(b) => match b.as_ref() {
            Expr::Atom(a) => (a, true),
            _ => {
                return Err(unsupported(
                    "Sigma of a composite expression is not supported".into(),
                ))
            }
        },
        _ => {
            return Err(unsupported(
                "Sigma of a composite expression is not supported".into(),
            ))
        }
    };
    let base = space.base();
    let dw = DominantWeight::new(weight.to_vec())
        .map_err(|_| unsupported(format!("Sigma weight {weight:?} is not nonincreasing")))?;
    let expected = match atom {
        Atom::U | Atom::K => base.k,
        Atom::Q | Atom::Kperp => base.perp_rank(),
        Atom::W => base.n,
        Atom::O => {
            return Err(unsupported("Sigma of O is not supported".into()));
        }
    };
    if dw.rank() != expected {
        return Err(unsupported(format!(
            "Sigma weight length {} does not match the rank {} of {}",
            dw.rank(),
            expected,
            atom.name()
        )));
    }
    let obj = match atom {
        // the weight is the exponent on the atom itself
        Atom::U | Atom::K => {
            EquivariantObject::schur(space, dw.dual(), DominantWeight::zero(base.perp_rank()))
        }
        Atom::Q => EquivariantObject::schur(space, DominantWeight::zero(base.k), dw.dual()),
        Atom::Kperp => EquivariantObject::schur(space, DominantWeight::zero(base.k), dw),
        Atom::W => {
            return Ok(apply_dual_if(
                EquivariantObject::outer_rep(space, VirtualRep::single(dw, BigInt::from(1)))
                    .expect("well formed"),
                dualized,
            ));
        }
        Atom::O => unreachable!(),
    }
    .expect("ranks checked");
    Ok(apply_dual_if(obj, dualized))
}

fn apply_dual_if(obj: EquivariantObject, dualized: bool) -> EquivariantObject {
    if dualized {
        obj.dual()
    } else {
        obj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr26() -> Space {
        Space::grassmannian(2, 6).unwrap()
    }

    #[test]
    fn dual_of_tautological() {
        let e = parse_bundle("U*", gr26()).unwrap();
        let terms = e.object.terms();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].bundle.beta.entries(), &[1, 0]);
        assert_eq!(terms[0].bundle.gamma.entries(), &[0, 0, 0, 0]);
    }

    #[test]
    fn twist_folds_into_beta() {
        let e = parse_bundle("S^2(U)(1)", gr26()).unwrap();
        let terms = e.object.terms();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].bundle.beta.entries(), &[1, -1]);
        assert_eq!(terms[0].twist_g, 0);
    }

    #[test]
    fn error_carries_offset_and_expectation() {
        let err = parse_bundle("S^2(U", gr26()).unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(err.expected.contains(&")".to_string()), "{err:?}");
    }

    #[test]
    fn wedge_beyond_rank_warns() {
        let e = parse_bundle("L^3(U)", gr26()).unwrap();
        assert!(e.object.is_zero());
        assert_eq!(e.warnings.len(), 1);
    }

    #[test]
    fn complexes_parse() {
        // the two-term complex presentation of F_0 on the resolution
        let ty = Space::resolution(6).unwrap();
        let e = parse_bundle("O(1G-1Y)[-1] + L^2(Q)", ty).unwrap();
        assert_eq!(e.object.terms().len(), 2);
    }

    #[test]
    fn round_trip_display() {
        for text in [
            "U*",
            "S^2(U)(1)",
            "Sigma[2,1](U)[3]",
            "O(1G-1Y)[-1] + L^2(Q)",
            "W + S^3(W)*",
            "Kperp(2G+3Y)",
            "Q(-4)",
        ] {
            let ast = parse(text).unwrap();
            let printed = ast.to_string();
            let reparsed = parse(&printed).unwrap();
            assert_eq!(ast, reparsed, "{text} -> {printed}");
        }
    }
}
