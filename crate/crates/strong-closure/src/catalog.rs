//! Group constructors, the construction-expression language, and the
//! built-in catalog.
//!
//! Every catalog entry carries a construction expression that rebuilds it,
//! e.g. `direct_product(dihedral(8), cyclic(3))` or
//! `semidirect_product(cyclic(5), cyclic(4), [g1^2])`, so reports stay
//! reproducible from their own provenance strings. Semidirect actions list
//! the images of the normal part's generators (`g1`, `g2`, …) under each
//! generator of the acting group.

use std::sync::OnceLock;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::semidirect::{semidirect_product, CoprimeActionInstance};

const MAX_DEGREE: u64 = 8_192;

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

pub fn cyclic(n: u64) -> Result<Group> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::Construction(format!("cyclic({n}) out of range")));
    }
    if n == 1 {
        return Ok(Group::trivial(1));
    }
    let cycle: Vec<u32> = (1..=n as u32).collect();
    let g = Perm::from_cycles(n as usize, &[cycle])?;
    Group::from_generators(n as usize, vec![g])
}

/// Dihedral group of the given order 2n.
pub fn dihedral(order: u64) -> Result<Group> {
    if order < 2 || order % 2 != 0 || order > MAX_DEGREE {
        return Err(Error::Construction(format!("dihedral({order}) out of range")));
    }
    let n = order / 2;
    match n {
        1 => cyclic(2),
        2 => Group::from_generators(
            4,
            vec![Perm::parse(4, "(1 2)")?, Perm::parse(4, "(3 4)")?],
        ),
        _ => {
            let rotation = Perm::from_cycles(n as usize, &[(1..=n as u32).collect()])?;
            // reflection fixing point 1: i -> n + 2 - i
            let images: Vec<u32> = (1..=n as u32)
                .map(|i| if i == 1 { 1 } else { n as u32 + 2 - i })
                .collect();
            let reflection = Perm::from_images(&images)?;
            Group::from_generators(n as usize, vec![rotation, reflection])
        }
    }
}

/// Generalized quaternion group Q_{2^k} (order ≥ 8, a power of two) in its
/// right-regular representation: points are x^i y^j with x of order 2^(k-1),
/// y² = x^(2^(k-2)), and xʸ = x⁻¹.
pub fn generalized_quaternion(order: u64) -> Result<Group> {
    if order < 8 || !order.is_power_of_two() || order > MAX_DEGREE {
        return Err(Error::Construction(format!(
            "generalized_quaternion({order}) out of range"
        )));
    }
    let half = (order / 2) as u32; // order of x
    let quarter = half / 2; // y² = x^quarter
    let n = order as usize;
    let point = |i: u32, j: u32| -> u32 { i + half * j + 1 };
    let mut rx = vec![0u32; n];
    let mut ry = vec![0u32; n];
    for i in 0..half {
        for j in 0..2 {
            let from = (point(i, j) - 1) as usize;
            // right multiplication by x: x^i y^j · x
            rx[from] = if j == 0 {
                point((i + 1) % half, 0)
            } else {
                point((i + half - 1) % half, 1)
            };
            // right multiplication by y: x^i y^j · y
            ry[from] = if j == 0 {
                point(i, 1)
            } else {
                point((i + quarter) % half, 0)
            };
        }
    }
    Group::from_generators(n, vec![Perm::from_images(&rx)?, Perm::from_images(&ry)?])
}

pub fn symmetric(n: u64) -> Result<Group> {
    if n == 0 || n > 12 {
        return Err(Error::Construction(format!("symmetric({n}) out of range")));
    }
    match n {
        1 => Ok(Group::trivial(1)),
        2 => Group::from_generators(2, vec![Perm::parse(2, "(1 2)")?]),
        _ => {
            let cycle = Perm::from_cycles(n as usize, &[(1..=n as u32).collect()])?;
            let swap = Perm::parse(n as usize, "(1 2)")?;
            Group::from_generators(n as usize, vec![cycle, swap])
        }
    }
}

pub fn alternating(n: u64) -> Result<Group> {
    if n == 0 || n > 12 {
        return Err(Error::Construction(format!("alternating({n}) out of range")));
    }
    match n {
        1 | 2 => Ok(Group::trivial(n as usize)),
        3 => Group::from_generators(3, vec![Perm::parse(3, "(1 2 3)")?]),
        _ => {
            let three = Perm::parse(n as usize, "(1 2 3)")?;
            let cycle = if n % 2 == 1 {
                Perm::from_cycles(n as usize, &[(1..=n as u32).collect()])?
            } else {
                Perm::from_cycles(n as usize, &[(2..=n as u32).collect()])?
            };
            Group::from_generators(n as usize, vec![three, cycle])
        }
    }
}

fn mod_inv(a: u64, q: u64) -> u64 {
    // q is prime; Fermat
    let mut result = 1u64;
    let mut base = a % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    result
}

/// SL₂(q) acting on the q²−1 nonzero row vectors of F_q²; the vector (a, b)
/// is the point a·q + b. Generated by [[1,1],[0,1]] and [[0,1],[−1,0]].
pub fn special_linear_2(q: u64) -> Result<Group> {
    if !is_prime(q) || q > 31 {
        return Err(Error::Construction(format!(
            "special_linear_2({q}): q must be a prime at most 31"
        )));
    }
    let n = (q * q - 1) as usize;
    let matrix_perm = |m: [[u64; 2]; 2]| -> Result<Perm> {
        let mut images = vec![0u32; n];
        for a in 0..q {
            for b in 0..q {
                if a == 0 && b == 0 {
                    continue;
                }
                let a2 = (a * m[0][0] + b * m[1][0]) % q;
                let b2 = (a * m[0][1] + b * m[1][1]) % q;
                images[(a * q + b - 1) as usize] = (a2 * q + b2) as u32;
            }
        }
        Perm::from_images(&images)
    };
    let t = matrix_perm([[1, 1], [0, 1]])?;
    let s = matrix_perm([[0, 1], [q - 1, 0]])?;
    Group::from_generators(n, vec![t, s])
}

/// PSL₂(q) acting on the q+1 points of the projective line: [x:1] is the
/// point x+1 and [1:0] is the point q+1.
pub fn projective_special_linear_2(q: u64) -> Result<Group> {
    if !is_prime(q) || q > 31 {
        return Err(Error::Construction(format!(
            "projective_special_linear_2({q}): q must be a prime at most 31"
        )));
    }
    let n = (q + 1) as usize;
    let matrix_perm = |m: [[u64; 2]; 2]| -> Result<Perm> {
        let mut images = vec![0u32; n];
        let image_of = |a: u64, b: u64| -> u32 {
            let a2 = (a * m[0][0] + b * m[1][0]) % q;
            let b2 = (a * m[0][1] + b * m[1][1]) % q;
            if b2 == 0 {
                (q + 1) as u32
            } else {
                (a2 * mod_inv(b2, q) % q + 1) as u32
            }
        };
        for x in 0..q {
            images[x as usize] = image_of(x, 1);
        }
        images[q as usize] = image_of(1, 0);
        Perm::from_images(&images)
    };
    let t = matrix_perm([[1, 1], [0, 1]])?;
    let s = matrix_perm([[0, 1], [q - 1, 0]])?;
    Group::from_generators(n, vec![t, s])
}

/// A × B on the disjoint union of their points. Generators are A's followed
/// by B's, which fixes the `g1, g2, …` numbering used by action words.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let da = a.degree();
    let db = b.degree();
    let degree = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u32> = (1..=degree as u32).collect();
        for i in 0..da {
            images[i] = g.image_of(i as u32 + 1);
        }
        gens.push(Perm::from_images(&images)?);
    }
    for g in b.generators() {
        let mut images: Vec<u32> = (1..=degree as u32).collect();
        for i in 0..db {
            images[da + i] = g.image_of(i as u32 + 1) + da as u32;
        }
        gens.push(Perm::from_images(&images)?);
    }
    Group::from_generators(degree, gens)
}

// ---------------------------------------------------------------------------
// Construction expressions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Star,
    Caret,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '(' => {
                chars.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RParen);
            }
            '[' => {
                chars.next();
                toks.push(Tok::LBracket);
            }
            ']' => {
                chars.next();
                toks.push(Tok::RBracket);
            }
            ',' => {
                chars.next();
                toks.push(Tok::Comma);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(x) = d.to_digit(10) {
                        v = v * 10 + x as u64;
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(v));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            _ => {
                return Err(Error::Construction(format!(
                    "unexpected character {c:?} in construction expression"
                )))
            }
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

    fn next(&mut self) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Construction("unexpected end of expression".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        let got = self.next()?;
        if got != t {
            return Err(Error::Construction(format!("expected {t:?}, got {got:?}")));
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u64> {
        match self.next()? {
            Tok::Int(v) => Ok(v),
            other => Err(Error::Construction(format!("expected integer, got {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Group> {
        let name = match self.next()? {
            Tok::Ident(n) => n,
            other => Err(Error::Construction(format!(
                "expected constructor name, got {other:?}"
            )))?,
        };
        self.expect(Tok::LParen)?;
        let group = match name.as_str() {
            "cyclic" => cyclic(self.int()?)?,
            "dihedral" => dihedral(self.int()?)?,
            "generalized_quaternion" => generalized_quaternion(self.int()?)?,
            "symmetric" => symmetric(self.int()?)?,
            "alternating" => alternating(self.int()?)?,
            "special_linear_2" => special_linear_2(self.int()?)?,
            "projective_special_linear_2" => projective_special_linear_2(self.int()?)?,
            "direct_product" => {
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                direct_product(&a, &b)?
            }
            "semidirect_product" => {
                let p = self.expr()?;
                self.expect(Tok::Comma)?;
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let action = self.action(&p)?;
                semidirect_product(&p, &a, &action)?.group
            }
            other => {
                return Err(Error::Construction(format!("unknown constructor {other:?}")))
            }
        };
        self.expect(Tok::RParen)?;
        Ok(group)
    }

    /// `[w1, w2, …]` (one acting generator) or `[[…], […], …]`.
    fn action(&mut self, p: &Group) -> Result<Vec<Vec<Perm>>> {
        self.expect(Tok::LBracket)?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::LBracket) {
            loop {
                self.expect(Tok::LBracket)?;
                out.push(self.word_list(p)?);
                self.expect(Tok::RBracket)?;
                if self.peek() == Some(&Tok::Comma) {
                    self.next()?;
                } else {
                    break;
                }
            }
        } else {
            out.push(self.word_list(p)?);
        }
        self.expect(Tok::RBracket)?;
        Ok(out)
    }

    fn word_list(&mut self, p: &Group) -> Result<Vec<Perm>> {
        let mut words = vec![self.word(p)?];
        while self.peek() == Some(&Tok::Comma) {
            self.next()?;
            words.push(self.word(p)?);
        }
        Ok(words)
    }

    /// `1` or `gI(^E)?(*gJ(^E)?)*` evaluated against P's generators.
    fn word(&mut self, p: &Group) -> Result<Perm> {
        if self.peek() == Some(&Tok::Int(1)) {
            self.next()?;
            return Ok(p.identity());
        }
        let mut acc = p.identity();
        loop {
            let name = match self.next()? {
                Tok::Ident(n) => n,
                other => {
                    return Err(Error::Construction(format!(
                        "expected generator symbol, got {other:?}"
                    )))
                }
            };
            let idx: usize = name
                .strip_prefix('g')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| {
                    Error::Construction(format!("generator symbol must be gN, got {name:?}"))
                })?;
            let gen = p
                .generators()
                .get(idx.checked_sub(1).ok_or_else(|| {
                    Error::Construction("generator indices are 1-based".into())
                })?)
                .ok_or_else(|| {
                    Error::Construction(format!(
                        "generator g{idx} out of range (P has {} generators)",
                        p.generators().len()
                    ))
                })?
                .clone();
            let mut exp: i64 = 1;
            if self.peek() == Some(&Tok::Caret) {
                self.next()?;
                let negative = if self.peek() == Some(&Tok::Minus) {
                    self.next()?;
                    true
                } else {
                    false
                };
                let mag = self.int()? as i64;
                exp = if negative { -mag } else { mag };
            }
            let base = if exp < 0 { gen.inverse() } else { gen };
            for _ in 0..exp.unsigned_abs() {
                acc = acc.compose(&base);
            }
            if self.peek() == Some(&Tok::Star) {
                self.next()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

/// Builds a group from a construction expression.
pub fn construct(expr: &str) -> Result<Group> {
    let mut parser = Parser {
        toks: tokenize(expr)?,
        pos: 0,
    };
    let g = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(Error::Construction(format!(
            "trailing tokens after expression in {expr:?}"
        )));
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Built-in catalog
// ---------------------------------------------------------------------------

pub struct CatalogEntry {
    pub id: String,
    pub construction: String,
    group: OnceLock<Group>,
}

impl CatalogEntry {
    pub fn new(id: &str, construction: &str) -> Self {
        CatalogEntry {
            id: id.to_string(),
            construction: construction.to_string(),
            group: OnceLock::new(),
        }
    }

    pub fn from_group(id: &str, construction: &str, group: Group) -> Self {
        let entry = CatalogEntry::new(id, construction);
        let _ = entry.group.set(group);
        entry
    }

    pub fn group(&self) -> Result<&Group> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let g = construct(&self.construction)?;
        let _ = self.group.set(g);
        Ok(self.group.get().expect("just set"))
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.group()?.order())
    }
}

const BUILTIN: &[(&str, &str)] = &[
    // cyclic groups
    ("C1", "cyclic(1)"),
    ("C2", "cyclic(2)"),
    ("C3", "cyclic(3)"),
    ("C4", "cyclic(4)"),
    ("C5", "cyclic(5)"),
    ("C6", "cyclic(6)"),
    ("C7", "cyclic(7)"),
    ("C8", "cyclic(8)"),
    ("C9", "cyclic(9)"),
    ("C12", "cyclic(12)"),
    ("C16", "cyclic(16)"),
    ("C20", "cyclic(20)"),
    ("C24", "cyclic(24)"),
    ("C27", "cyclic(27)"),
    ("C30", "cyclic(30)"),
    ("C32", "cyclic(32)"),
    // dihedral groups (parameter is the order)
    ("D6", "dihedral(6)"),
    ("D8", "dihedral(8)"),
    ("D10", "dihedral(10)"),
    ("D12", "dihedral(12)"),
    ("D16", "dihedral(16)"),
    ("D18", "dihedral(18)"),
    ("D20", "dihedral(20)"),
    ("D24", "dihedral(24)"),
    ("D32", "dihedral(32)"),
    // generalized quaternion
    ("Q8", "generalized_quaternion(8)"),
    ("Q16", "generalized_quaternion(16)"),
    ("Q32", "generalized_quaternion(32)"),
    ("Q64", "generalized_quaternion(64)"),
    // symmetric and alternating
    ("S3", "symmetric(3)"),
    ("S4", "symmetric(4)"),
    ("S5", "symmetric(5)"),
    ("A4", "alternating(4)"),
    ("A5", "alternating(5)"),
    ("A6", "alternating(6)"),
    // linear groups
    ("SL2_3", "special_linear_2(3)"),
    ("SL2_5", "special_linear_2(5)"),
    ("SL2_7", "special_linear_2(7)"),
    ("PSL2_7", "projective_special_linear_2(7)"),
    // abelian products
    ("E4", "direct_product(cyclic(2), cyclic(2))"),
    ("E8", "direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))"),
    (
        "E16",
        "direct_product(direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(2)))",
    ),
    ("C4xC2", "direct_product(cyclic(4), cyclic(2))"),
    ("C4xC4", "direct_product(cyclic(4), cyclic(4))"),
    ("C3xC3", "direct_product(cyclic(3), cyclic(3))"),
    // mixed direct products
    ("D8xC3", "direct_product(dihedral(8), cyclic(3))"),
    ("Q8xC3", "direct_product(generalized_quaternion(8), cyclic(3))"),
    ("Q8xC9", "direct_product(generalized_quaternion(8), cyclic(9))"),
    ("D8xD8", "direct_product(dihedral(8), dihedral(8))"),
    ("C2xA4", "direct_product(cyclic(2), alternating(4))"),
    ("C3xS3", "direct_product(cyclic(3), symmetric(3))"),
    ("C5xD8", "direct_product(cyclic(5), dihedral(8))"),
    ("A4xC3", "direct_product(alternating(4), cyclic(3))"),
    ("S3xS3", "direct_product(symmetric(3), symmetric(3))"),
    ("D8xC15", "direct_product(dihedral(8), cyclic(15))"),
    // semidirect products
    ("V4sC3", "semidirect_product(direct_product(cyclic(2), cyclic(2)), cyclic(3), [g2, g1*g2])"),
    ("F20", "semidirect_product(cyclic(5), cyclic(4), [g1^2])"),
    ("F21", "semidirect_product(cyclic(7), cyclic(3), [g1^2])"),
    (
        "F56",
        "semidirect_product(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))), cyclic(7), [g2, g3, g1*g2])",
    ),
    ("C9sC3", "semidirect_product(cyclic(9), cyclic(3), [g1^4])"),
    (
        "GD18",
        "semidirect_product(direct_product(cyclic(3), cyclic(3)), cyclic(2), [g1^2, g2^2])",
    ),
    (
        "F36",
        "semidirect_product(direct_product(cyclic(3), cyclic(3)), cyclic(4), [g2, g1^2])",
    ),
    (
        "F80",
        "semidirect_product(direct_product(direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(2))), cyclic(5), [g2, g3, g4, g1*g2*g3*g4])",
    ),
    ("F52", "semidirect_product(cyclic(13), cyclic(4), [g1^5])"),
    (
        "E16sC3",
        "semidirect_product(direct_product(direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(2))), cyclic(3), [g2, g1*g2, g4, g3*g4])",
    ),
];

const DISTINGUISHED: &[(&str, &str)] = &[
    ("SL2_17", "special_linear_2(17)"),
    ("PSL2_17", "projective_special_linear_2(17)"),
];

/// The built-in catalog: family entries with order at most `max_order`, plus
/// (optionally) the distinguished large entries SL2_17 and PSL2_17.
pub fn builtin_catalog(max_order: u64, include_distinguished: bool) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (id, expr) in BUILTIN {
        let entry = CatalogEntry::new(id, expr);
        if entry.order()? <= max_order {
            out.push(entry);
        }
    }
    if include_distinguished {
        for (id, expr) in DISTINGUISHED {
            out.push(CatalogEntry::new(id, expr));
        }
    }
    Ok(out)
}

/// Looks up one built-in entry (catalog families, distinguished entries, or
/// a coprime-action instance id).
pub fn builtin(id: &str) -> Result<CatalogEntry> {
    for (eid, expr) in BUILTIN.iter().chain(DISTINGUISHED) {
        if *eid == id {
            return Ok(CatalogEntry::new(eid, expr));
        }
    }
    for spec in INSTANCES {
        if spec.id == id {
            let inst = build_instance(spec)?;
            return Ok(CatalogEntry::from_group(
                id,
                &spec.construction(),
                inst.group().clone(),
            ));
        }
    }
    Err(Error::UnknownId(id.to_string()))
}

// ---------------------------------------------------------------------------
// Coprime-action instances
// ---------------------------------------------------------------------------

pub struct InstanceSpec {
    pub id: &'static str,
    pub p_expr: &'static str,
    pub a_expr: &'static str,
    pub action: &'static str,
}

impl InstanceSpec {
    pub fn construction(&self) -> String {
        format!(
            "semidirect_product({}, {}, {})",
            self.p_expr, self.a_expr, self.action
        )
    }
}

const E8_EXPR: &str = "direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))";
const E16_EXPR: &str =
    "direct_product(direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(2)))";
const V4_EXPR: &str = "direct_product(cyclic(2), cyclic(2))";

/// Odd-on-2-group action instances for the coprime-action lemma checks.
/// CA_F56 is the Frobenius group of order 56 (C₇ irreducible on C₂³) and
/// CA_Q8_C3 cycles the three cyclic subgroups of order 4 in Q₈.
pub const INSTANCES: &[InstanceSpec] = &[
    InstanceSpec { id: "CA_F56", p_expr: E8_EXPR, a_expr: "cyclic(7)", action: "[g2, g3, g1*g2]" },
    InstanceSpec { id: "CA_F56B", p_expr: E8_EXPR, a_expr: "cyclic(7)", action: "[g2, g3, g1*g3]" },
    InstanceSpec { id: "CA_E8_C7_TRIV", p_expr: E8_EXPR, a_expr: "cyclic(7)", action: "[g1, g2, g3]" },
    InstanceSpec { id: "CA_E8_C21", p_expr: E8_EXPR, a_expr: "cyclic(21)", action: "[g2, g3, g1*g2]" },
    InstanceSpec { id: "CA_Q8_C3", p_expr: "generalized_quaternion(8)", a_expr: "cyclic(3)", action: "[g2, g1*g2]" },
    InstanceSpec { id: "CA_Q8_C3_REV", p_expr: "generalized_quaternion(8)", a_expr: "cyclic(3)", action: "[g1*g2, g1]" },
    InstanceSpec { id: "CA_Q8_C3_TRIV", p_expr: "generalized_quaternion(8)", a_expr: "cyclic(3)", action: "[g1, g2]" },
    InstanceSpec { id: "CA_Q8_C9", p_expr: "generalized_quaternion(8)", a_expr: "cyclic(9)", action: "[g2, g1*g2]" },
    InstanceSpec { id: "CA_V4_C3", p_expr: V4_EXPR, a_expr: "cyclic(3)", action: "[g2, g1*g2]" },
    InstanceSpec { id: "CA_V4_C3_TRIV", p_expr: V4_EXPR, a_expr: "cyclic(3)", action: "[g1, g2]" },
    InstanceSpec { id: "CA_V4_C9", p_expr: V4_EXPR, a_expr: "cyclic(9)", action: "[g2, g1*g2]" },
    InstanceSpec { id: "CA_V4_C15", p_expr: V4_EXPR, a_expr: "cyclic(15)", action: "[g2, g1*g2]" },
    InstanceSpec { id: "CA_C4_C3_TRIV", p_expr: "cyclic(4)", a_expr: "cyclic(3)", action: "[g1]" },
    InstanceSpec { id: "CA_C8_C7_TRIV", p_expr: "cyclic(8)", a_expr: "cyclic(7)", action: "[g1]" },
    InstanceSpec { id: "CA_C16_C5_TRIV", p_expr: "cyclic(16)", a_expr: "cyclic(5)", action: "[g1]" },
    InstanceSpec { id: "CA_E16_C5", p_expr: E16_EXPR, a_expr: "cyclic(5)", action: "[g2, g3, g4, g1*g2*g3*g4]" },
    InstanceSpec { id: "CA_E16_C5_TRIV", p_expr: E16_EXPR, a_expr: "cyclic(5)", action: "[g1, g2, g3, g4]" },
    InstanceSpec { id: "CA_E16_C3", p_expr: E16_EXPR, a_expr: "cyclic(3)", action: "[g2, g1*g2, g4, g3*g4]" },
    InstanceSpec { id: "CA_E16_C3_HALF", p_expr: E16_EXPR, a_expr: "cyclic(3)", action: "[g2, g1*g2, g3, g4]" },
    InstanceSpec { id: "CA_C4C4_C3", p_expr: "direct_product(cyclic(4), cyclic(4))", a_expr: "cyclic(3)", action: "[g2, g1^3*g2^3]" },
    InstanceSpec { id: "CA_Q16_C3_TRIV", p_expr: "generalized_quaternion(16)", a_expr: "cyclic(3)", action: "[g1, g2]" },
    InstanceSpec { id: "CA_D8_C3_TRIV", p_expr: "dihedral(8)", a_expr: "cyclic(3)", action: "[g1, g2]" },
    InstanceSpec { id: "CA_C2_C3_TRIV", p_expr: "cyclic(2)", a_expr: "cyclic(3)", action: "[g1]" },
];

pub fn build_instance(spec: &InstanceSpec) -> Result<CoprimeActionInstance> {
    let p = construct(spec.p_expr)?;
    let a = construct(spec.a_expr)?;
    // reuse the expression parser for the action words
    let mut parser = Parser {
        toks: tokenize(spec.action)?,
        pos: 0,
    };
    let action = parser.action(&p)?;
    CoprimeActionInstance::build(spec.id, &p, &a, &action)
}

pub fn instance(id: &str) -> Result<CoprimeActionInstance> {
    INSTANCES
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
        .and_then(build_instance)
}

pub fn all_instances() -> Result<Vec<CoprimeActionInstance>> {
    INSTANCES.iter().map(build_instance).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{shape, Shape};

    #[test]
    fn constructor_orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert_eq!(dihedral(2).unwrap().order(), 2);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(dihedral(16).unwrap().order(), 16);
        assert_eq!(generalized_quaternion(8).unwrap().order(), 8);
        assert_eq!(generalized_quaternion(32).unwrap().order(), 32);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(special_linear_2(3).unwrap().order(), 24);
        assert_eq!(special_linear_2(5).unwrap().order(), 120);
        assert_eq!(projective_special_linear_2(7).unwrap().order(), 168);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        for order in [8, 16, 32] {
            let q = generalized_quaternion(order).unwrap();
            let involutions = q
                .elements()
                .unwrap()
                .iter()
                .filter(|x| x.order() == 2)
                .count();
            assert_eq!(involutions, 1, "Q{order}");
            assert_eq!(shape(&q).unwrap(), Shape::GeneralizedQuaternion);
        }
    }

    #[test]
    fn sl2_17_has_order_4896_on_288_points() {
        let g = special_linear_2(17).unwrap();
        assert_eq!(g.degree(), 288);
        assert_eq!(g.order(), 4896);
    }

    #[test]
    fn psl2_17_has_order_2448_on_18_points() {
        let g = projective_special_linear_2(17).unwrap();
        assert_eq!(g.degree(), 18);
        assert_eq!(g.order(), 2448);
    }

    #[test]
    fn direct_product_multiplies_orders() {
        let g = construct("direct_product(dihedral(8), cyclic(3))").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.degree(), 7);
    }

    #[test]
    fn semidirect_expressions_parse() {
        let f20 = construct("semidirect_product(cyclic(5), cyclic(4), [g1^2])").unwrap();
        assert_eq!(f20.order(), 20);
        let f56 = construct(
            "semidirect_product(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))), cyclic(7), [g2, g3, g1*g2])",
        )
        .unwrap();
        assert_eq!(f56.order(), 56);
    }

    #[test]
    fn malformed_expressions_are_rejected() {
        assert!(construct("cyclic(0)").is_err());
        assert!(construct("unknown(3)").is_err());
        assert!(construct("cyclic(3) trailing").is_err());
        assert!(construct("special_linear_2(4)").is_err());
        assert!(construct("semidirect_product(cyclic(5), cyclic(4), [g2])").is_err());
    }

    #[test]
    fn catalog_orders_match_constructions() {
        let catalog = builtin_catalog(400, true).unwrap();
        assert!(catalog.iter().any(|e| e.id == "SL2_17"));
        for entry in &catalog {
            let order = entry.order().unwrap();
            if entry.id != "SL2_17" && entry.id != "PSL2_17" {
                assert!(order <= 400, "{} has order {order}", entry.id);
            }
        }
        let f21 = catalog.iter().find(|e| e.id == "F21").unwrap();
        assert_eq!(f21.order().unwrap(), 21);
        let f80 = catalog.iter().find(|e| e.id == "F80").unwrap();
        assert_eq!(f80.order().unwrap(), 80);
    }

    #[test]
    fn all_instances_build() {
        let instances = all_instances().unwrap();
        assert!(instances.len() >= 20);
        for inst in &instances {
            assert!(inst.acting_order % 2 == 1);
            let p_order = inst.normal_part().order();
            assert_eq!(
                inst.group().order(),
                p_order * inst.semidirect.action_image_order
            );
        }
    }

    #[test]
    fn frobenius_56_acts_without_fixed_involutions() {
        let inst = instance("CA_F56").unwrap();
        assert_eq!(inst.group().order(), 56);
        assert!(!inst.action_is_trivial());
        let p = inst.normal_part();
        for x in p.canonical_key().unwrap() {
            if x.order() == 2 {
                assert!(!inst.action_fixes(x));
            }
        }
    }
}
