//! Finite fields GF(p^e) with q = p^e <= 32.
//!
//! Elements are integer codes: the code `c = sum c_i * p^i` stands for the
//! polynomial `sum c_i * x^i` in the polynomial basis. In GF(4) with the
//! default modulus `x^2 + x + 1` the element `x` is code 2 and `x + 1` is
//! code 3.
//!
//! Every [`Field`] precomputes full addition and multiplication tables at
//! construction; afterwards it is immutable and cheap to clone.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 32;

/// Default moduli for the extension fields, constant term first.
const DEFAULT_MODULI: &[(u32, &[u8])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[1, 1, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
];

struct Tables {
    p: u8,
    e: u32,
    q: u8,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// A prime-power field GF(q), q <= 32.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if !(2..=MAX_ORDER).contains(&q) {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Remainder of `num` modulo the monic polynomial `den` over GF(p).
fn poly_rem(num: &[u8], den: &[u8], p: u8) -> Vec<u8> {
    let mut r = num.to_vec();
    let d = den.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - d;
            for (i, &c) in den.iter().enumerate() {
                let t = (lead as u32 * c as u32) % p as u32;
                r[shift + i] = ((r[shift + i] as u32 + p as u32 - t) % p as u32) as u8;
            }
        }
        r.pop();
    }
    r
}

/// Exhaustive irreducibility test: no monic factor of degree 1..=deg/2.
fn is_irreducible(modulus: &[u8], p: u8) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u32).pow(d as u32);
        for low in 0..count {
            let mut factor = Vec::with_capacity(d + 1);
            let mut c = low;
            for _ in 0..d {
                factor.push((c % p as u32) as u8);
                c /= p as u32;
            }
            factor.push(1);
            if poly_rem(modulus, &factor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(code: u32, p: u32, e: u32) -> Vec<u8> {
    let mut c = code;
    (0..e)
        .map(|_| {
            let d = (c % p) as u8;
            c /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u8], p: u32) -> u8 {
    ds.iter().rev().fold(0u32, |acc, &d| acc * p + d as u32) as u8
}

impl Field {
    /// GF(q) with the default modulus.
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::UnsupportedOrder(q))?;
        if e == 1 {
            return Self::build(p, 1, vec![0, 1]);
        }
        let modulus = DEFAULT_MODULI
            .iter()
            .find(|(order, _)| *order == q)
            .map(|(_, m)| m.to_vec())
            .ok_or(Error::UnsupportedOrder(q))?;
        Self::with_modulus(q, &modulus)
    }

    /// GF(q) with an explicit modulus (constant term first, monic of degree e).
    /// The modulus is ignored for prime q.
    pub fn with_modulus(q: u32, modulus: &[u8]) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::UnsupportedOrder(q))?;
        if e == 1 {
            return Self::build(p, 1, vec![0, 1]);
        }
        if modulus.len() != e as usize + 1
            || *modulus.last().unwrap() != 1
            || modulus.iter().any(|&c| c as u32 >= p)
        {
            return Err(Error::BadModulus { p, degree: e });
        }
        if !is_irreducible(modulus, p as u8) {
            return Err(Error::ReducibleModulus(modulus.to_vec()));
        }
        Self::build(p, e, modulus.to_vec())
    }

    fn build(p: u32, e: u32, modulus: Vec<u8>) -> Result<Self> {
        let q = p.pow(e);
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let ds: Vec<Vec<u8>> = (0..q).map(|c| digits(c, p, e)).collect();
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<u8> = ds[a]
                    .iter()
                    .zip(&ds[b])
                    .map(|(&x, &y)| ((x as u32 + y as u32) % p) as u8)
                    .collect();
                add[a * n + b] = undigits(&sum, p);

                let mut prod = vec![0u8; 2 * e as usize - 1];
                for (i, &x) in ds[a].iter().enumerate() {
                    for (j, &y) in ds[b].iter().enumerate() {
                        prod[i + j] = ((prod[i + j] as u32 + x as u32 * y as u32) % p) as u8;
                    }
                }
                let reduced = if e == 1 {
                    prod
                } else {
                    poly_rem(&prod, &modulus, p as u8)
                };
                mul[a * n + b] = undigits(&reduced, p);
            }
        }
        let neg = (0..n)
            .map(|a| (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; n];
        for a in 1..n {
            inv[a] = (1..n)
                .find(|&b| mul[a * n + b] == 1)
                .ok_or_else(|| Error::ReducibleModulus(modulus.clone()))?
                as u8;
        }
        Ok(Field(Arc::new(Tables {
            p: p as u8,
            e,
            q: q as u8,
            modulus,
            add,
            mul,
            neg,
            inv,
        })))
    }

    pub fn q(&self) -> u32 {
        self.0.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    /// Modulus coefficients, constant term first (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u8] {
        &self.0.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.0.inv[a as usize])
    }

    pub fn pow(&self, a: u8, exp: u32) -> u8 {
        (0..exp).fold(1, |acc, _| self.mul(acc, a))
    }

    /// All element codes `0..q`.
    pub fn codes(&self) -> std::ops::Range<u8> {
        0..self.0.q
    }

    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code >= self.q() {
            return Err(Error::ElementOutOfRange { code, q: self.q() });
        }
        Ok(Elem {
            field: self.clone(),
            code: code as u8,
        })
    }

    pub fn zero(&self) -> Elem {
        Elem {
            field: self.clone(),
            code: 0,
        }
    }

    pub fn one(&self) -> Elem {
        Elem {
            field: self.clone(),
            code: 1,
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "GF({})", self.0.q)
        } else {
            write!(f, "GF({}; modulus {:?})", self.0.q, self.0.modulus)
        }
    }
}

/// A field element that remembers its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct Elem {
    field: Field,
    code: u8,
}

impl Elem {
    pub fn code(&self) -> u8 {
        self.code
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &Elem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Elem) -> Result<Elem> {
        self.same_field(other)?;
        Ok(Elem {
            field: self.field.clone(),
            code: self.field.add(self.code, other.code),
        })
    }

    pub fn mul(&self, other: &Elem) -> Result<Elem> {
        self.same_field(other)?;
        Ok(Elem {
            field: self.field.clone(),
            code: self.field.mul(self.code, other.code),
        })
    }

    pub fn inv(&self) -> Result<Elem> {
        let code = self.field.inv(self.code).ok_or(Error::DivisionByZero)?;
        Ok(Elem {
            field: self.field.clone(),
            code,
        })
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

/// Every supported order q <= 32.
pub fn supported_orders() -> Vec<u32> {
    (2..=MAX_ORDER)
        .filter(|&q| prime_power(q).is_some())
        .collect()
}
