//! Sparse multivariate Laurent polynomials with rational coefficients.
//!
//! Exponents are stored in half units (a stored `3` means `^(3/2)`), which lets
//! the signed ribbon-graph polynomial and square-root substitutions stay inside
//! the ring. Variables flagged idempotent satisfy `w^2 = w`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials live in different variable tables")]
    IncompatibleTables,
    #[error("cannot invert a non-monomial expression bound to `{0}`")]
    NonMonomialDenominator(String),
    #[error("`{0}` is idempotent and has no inverse")]
    NotInvertible(String),
    #[error("exponent of `{0}` does not fit in half units")]
    UnrepresentableExponent(String),
    #[error("coefficient {0} has no rational square root")]
    NonSquareCoefficient(String),
    #[error("zero assigned to `{0}`, which occurs with a negative exponent")]
    Pole(String),
    #[error("no value supplied for `{0}`")]
    UnboundVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Ordered variable names; some may be idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    idempotent: Vec<bool>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, PolyError> {
        Self::with_idempotent(names, &[] as &[&str])
    }

    pub fn with_idempotent<S: AsRef<str>, T: AsRef<str>>(
        names: &[S],
        idempotent: &[T],
    ) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        let mut flags = vec![false; names.len()];
        for w in idempotent {
            let i = names
                .iter()
                .position(|n| n == w.as_ref())
                .ok_or_else(|| PolyError::UnknownVariable(w.as_ref().to_string()))?;
            flags[i] = true;
        }
        Ok(Arc::new(VarTable {
            names,
            idempotent: flags,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.idempotent[i]
    }

    /// Same table with variables renamed positionally.
    pub fn renamed<S: AsRef<str>>(&self, names: &[S]) -> Result<Arc<Self>, PolyError> {
        if names.len() != self.names.len() {
            return Err(PolyError::IncompatibleTables);
        }
        let idem: Vec<&str> = names
            .iter()
            .zip(&self.idempotent)
            .filter(|(_, f)| **f)
            .map(|(n, _)| n.as_ref())
            .collect();
        Self::with_idempotent(names, &idem)
    }
}

/// Exponent vector in half units.
pub type Exponents = Vec<i32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Exponents, BigRational>,
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn integer(vars: &Arc<VarTable>, n: i64) -> Self {
        Self::constant(vars, rat(n))
    }

    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Self, PolyError> {
        Self::monomial(vars, BigRational::one(), &[(name, 2)])
    }

    /// `coeff * prod name^(halves/2)`.
    pub fn monomial(
        vars: &Arc<VarTable>,
        coeff: BigRational,
        factors: &[(&str, i32)],
    ) -> Result<Self, PolyError> {
        let mut exps = vec![0; vars.len()];
        for (name, halves) in factors {
            let i = vars
                .index(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            exps[i] += halves;
        }
        for (i, e) in exps.iter().enumerate() {
            if vars.is_idempotent(i) && *e < 0 {
                return Err(PolyError::NotInvertible(vars.names[i].clone()));
            }
        }
        let mut p = Self::zero(vars);
        p.add_term(exps, coeff);
        Ok(p)
    }

    /// Builds a polynomial from raw `(exponents, coefficient)` pairs.
    pub fn from_terms(
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Exponents, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single term, if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Minimum and maximum exponent (half units) of a variable over all terms.
    pub fn degree_range(&self, name: &str) -> Option<(i32, i32)> {
        let i = self.vars.index(name)?;
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    fn normalize_exps(&self, exps: &mut [i32]) {
        for (i, e) in exps.iter_mut().enumerate() {
            if self.vars.idempotent[i] && *e > 0 {
                *e = 2;
            }
        }
    }

    fn add_term(&mut self, mut exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        self.normalize_exps(&mut exps);
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(PolyError::IncompatibleTables)
        }
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(match op {
            ArithOp::Add => {
                let mut out = self.clone();
                for (e, c) in &other.terms {
                    out.add_term(e.clone(), c.clone());
                }
                out
            }
            ArithOp::Sub => {
                let mut out = self.clone();
                for (e, c) in &other.terms {
                    out.add_term(e.clone(), -c.clone());
                }
                out
            }
            ArithOp::Mul => {
                let mut out = Self::zero(&self.vars);
                for (ea, ca) in &self.terms {
                    for (eb, cb) in &other.terms {
                        let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                        out.add_term(e, ca * cb);
                    }
                }
                out
            }
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Raises a monomial to a power given in half units (`halves = 1` is a
    /// square root, `halves = -2` an inverse).
    pub fn monomial_pow(&self, halves: i32) -> Result<Self, PolyError> {
        let Some((exps, c)) = self.as_monomial() else {
            return Err(PolyError::NonMonomialDenominator(self.to_string()));
        };
        let mut out_exps = Vec::with_capacity(exps.len());
        for (i, e) in exps.iter().enumerate() {
            let prod = e * halves;
            if prod % 2 != 0 {
                return Err(PolyError::UnrepresentableExponent(self.vars.names[i].clone()));
            }
            let v = prod / 2;
            if self.vars.idempotent[i] && v < 0 {
                return Err(PolyError::NotInvertible(self.vars.names[i].clone()));
            }
            out_exps.push(v);
        }
        let mut coeff = if halves % 2 == 0 {
            BigRational::one()
        } else {
            rational_sqrt(c).ok_or_else(|| PolyError::NonSquareCoefficient(c.to_string()))?
        };
        let whole = halves.div_euclid(2);
        if whole != 0 {
            if c.is_zero() {
                return Err(PolyError::Pole(self.to_string()));
            }
            let p = num_traits::pow(c.clone(), whole.unsigned_abs() as usize);
            coeff *= if whole < 0 { p.recip() } else { p };
        }
        let mut out = Self::zero(&self.vars);
        out.add_term(out_exps, coeff);
        Ok(out)
    }

    pub fn inverse_monomial(&self) -> Result<Self, PolyError> {
        self.monomial_pow(-2)
    }

    pub fn sqrt_monomial(&self) -> Result<Self, PolyError> {
        self.monomial_pow(1)
    }

    /// Replaces variables by polynomials in `target`. Unbound variables map to
    /// the variable of the same name in `target`. A negative or fractional
    /// exponent requires the bound value to be a monomial.
    pub fn substitute(
        &self,
        bindings: &HashMap<String, LaurentPoly>,
        target: &Arc<VarTable>,
    ) -> Result<Self, PolyError> {
        let n = self.vars.len();
        let mut images: Vec<LaurentPoly> = Vec::with_capacity(n);
        for name in &self.vars.names {
            let img = match bindings.get(name) {
                Some(p) => {
                    if !same_table(&p.vars, target) {
                        return Err(PolyError::IncompatibleTables);
                    }
                    p.clone()
                }
                None => LaurentPoly::var(target, name)?,
            };
            images.push(img);
        }
        // Powers are cached per (variable, exponent).
        let mut cache: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (exps, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = match cache.get(&(i, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = if e > 0 && e % 2 == 0 {
                            images[i].pow((e / 2) as u32)
                        } else {
                            images[i].monomial_pow(e).map_err(|err| match err {
                                PolyError::NonMonomialDenominator(_) => {
                                    PolyError::NonMonomialDenominator(self.vars.names[i].clone())
                                }
                                other => other,
                            })?
                        };
                        cache.insert((i, e), f.clone());
                        f
                    }
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact evaluation. Every variable that occurs must be bound.
    pub fn eval(&self, point: &HashMap<String, BigRational>) -> Result<BigRational, PolyError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for name in &self.vars.names {
            values.push(point.get(name));
        }
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.vars.names[i];
                let v = values[i].ok_or_else(|| PolyError::UnboundVariable(name.clone()))?;
                if v.is_zero() {
                    if e < 0 {
                        return Err(PolyError::Pole(name.clone()));
                    }
                    term = BigRational::zero();
                    continue;
                }
                let base = if e % 2 != 0 {
                    rational_sqrt(v).ok_or_else(|| PolyError::NonSquareCoefficient(v.to_string()))?
                } else {
                    v.clone()
                };
                let k = if e % 2 != 0 { e } else { e / 2 };
                let p = num_traits::pow(base, k.unsigned_abs() as usize);
                term *= if k < 0 { p.recip() } else { p };
            }
            total += term;
        }
        Ok(total)
    }

    /// Convenience wrapper over [`LaurentPoly::eval`] with integer values.
    pub fn eval_ints(&self, point: &[(&str, i64)]) -> Result<BigRational, PolyError> {
        let map = point.iter().map(|(n, v)| (n.to_string(), rat(*v))).collect();
        self.eval(&map)
    }

    /// Moves this polynomial into a table that contains all of its variables.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Self, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for name in &self.vars.names {
            map.push(
                target
                    .index(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?,
            );
        }
        let mut out = Self::zero(target);
        for (exps, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in exps.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn with_table(&self, table: &Arc<VarTable>) -> Result<Self, PolyError> {
        if table.len() != self.vars.len() {
            return Err(PolyError::IncompatibleTables);
        }
        Ok(LaurentPoly::from_terms(table, self.terms.clone()))
    }

    /// Terms in canonical order: graded by total degree, then lexicographic by
    /// exponent vector, both descending.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| canonical_cmp(b, a));
        v
    }

    /// Parses the canonical text form (`2*x^2*y - 1/3*z^(1/2) + 1`).
    pub fn parse(vars: &Arc<VarTable>, text: &str) -> Result<Self, PolyError> {
        Parser::new(vars, text).parse()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mut exps = serde_json::Map::new();
                for (i, &x) in e.iter().enumerate() {
                    if x != 0 {
                        exps.insert(self.vars.names[i].clone(), exponent_json(x));
                    }
                }
                serde_json::json!({ "coefficient": c.to_string(), "exponents": exps })
            })
            .collect();
        serde_json::json!({
            "variables": self.vars.names,
            "text": self.to_string(),
            "terms": terms,
        })
    }
}

fn exponent_json(halves: i32) -> serde_json::Value {
    if halves % 2 == 0 {
        serde_json::Value::from(halves / 2)
    } else {
        serde_json::Value::from(format!("{halves}/2"))
    }
}

fn canonical_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

pub fn equal(p: &LaurentPoly, q: &LaurentPoly) -> bool {
    p == q
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.arith(rhs, $op).expect("operands share a variable table")
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigRational::one())
    }
}

fn fmt_exponent(halves: i32) -> String {
    if halves % 2 == 0 {
        let k = halves / 2;
        if k == 1 { String::new() } else { format!("^{k}") }
    } else {
        format!("^({halves}/2)")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (exps, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let factors: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(i, &e)| format!("{}{}", self.vars.names[i], fmt_exponent(e)))
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Parser<'a> {
    vars: &'a Arc<VarTable>,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a Arc<VarTable>, text: &'a str) -> Self {
        Parser {
            vars,
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
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

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn signed_small(&mut self) -> Result<i32, PolyError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.integer()?;
        let n: i32 = i32::try_from(&n).or_else(|_| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn exponent(&mut self) -> Result<i32, PolyError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let num = self.signed_small()?;
            let halves = if self.peek() == Some(b'/') {
                self.pos += 1;
                let den = self.integer()?;
                if den == BigInt::from(2) {
                    num
                } else if den == BigInt::one() {
                    num * 2
                } else {
                    return self.err("only half-integer exponents are supported");
                }
            } else {
                num * 2
            };
            if self.peek() != Some(b')') {
                return self.err("expected `)`");
            }
            self.pos += 1;
            Ok(halves)
        } else {
            Ok(self.signed_small()? * 2)
        }
    }

    fn factor(&mut self, coeff: &mut BigRational, exps: &mut [i32]) -> Result<(), PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    value /= BigRational::from_integer(d);
                }
                *coeff *= value;
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self
                    .vars
                    .index(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                let e = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    2
                };
                exps[i] += e;
                Ok(())
            }
            _ => self.err("expected a number or variable"),
        }
    }

    fn parse(mut self) -> Result<LaurentPoly, PolyError> {
        let mut out = LaurentPoly::zero(self.vars);
        let mut sign = BigRational::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let mut coeff = sign.clone();
            let mut exps = vec![0; self.vars.len()];
            self.factor(&mut coeff, &mut exps)?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                self.factor(&mut coeff, &mut exps)?;
            }
            for (i, e) in exps.iter().enumerate() {
                if self.vars.idempotent[i] && *e < 0 {
                    return Err(PolyError::NotInvertible(self.vars.names[i].clone()));
                }
            }
            out.add_term(exps, coeff);
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = BigRational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -BigRational::one();
                }
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
        }
        Ok(out)
    }
}
