//! Arithmetic in GF(t) for prime powers t <= 64.
//!
//! Prime fields use modular arithmetic; extension fields use coefficient
//! vectors over a fixed irreducible polynomial per order, encoded base-p into
//! a single integer (lowest coefficient first). Full multiplication and
//! inverse tables are built once per field.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum 64")]
    Unsupported(u64),
}

/// Element of GF(t), canonically encoded as an integer in [0, t).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u64);

/// Fixed irreducible polynomials for the supported extension orders.
/// Coefficients are listed lowest-first including the leading 1.
const IRREDUCIBLE: &[(u64, u64, u32, &[u64])] = &[
    (4, 2, 2, &[1, 1, 1]),              // x^2 + x + 1
    (8, 2, 3, &[1, 1, 0, 1]),           // x^3 + x + 1
    (9, 3, 2, &[1, 0, 1]),              // x^2 + 1
    (16, 2, 4, &[1, 1, 0, 0, 1]),       // x^4 + x + 1
    (25, 5, 2, &[1, 1, 1]),             // x^2 + x + 1
    (27, 3, 3, &[1, 2, 0, 1]),          // x^3 + 2x + 1
    (32, 2, 5, &[1, 0, 1, 0, 0, 1]),    // x^5 + x^2 + 1
    (49, 7, 2, &[3, 1, 1]),             // x^2 + x + 3
    (64, 2, 6, &[1, 1, 0, 0, 0, 0, 1]), // x^6 + x + 1
];

fn is_prime(x: u64) -> bool {
    x >= 2
        && (2..)
            .take_while(|d| d * d <= x)
            .all(|d| !x.is_multiple_of(d))
}

/// Arithmetic tables for one finite field.
#[derive(Debug, Clone)]
pub struct GaloisField {
    order: u64,
    characteristic: u64,
    add: Vec<u64>,
    mul: Vec<u64>,
    neg: Vec<u64>,
    inv: Vec<u64>, // inv[0] unused
}

impl GaloisField {
    /// Builds GF(t) for a prime power t <= 64.
    pub fn new(t: u64) -> Result<GaloisField, FieldError> {
        if t > 64 {
            return Err(FieldError::Unsupported(t));
        }
        if is_prime(t) {
            return Ok(Self::from_tables(
                t,
                t,
                |a, b| (a + b) % t,
                |a, b| (a * b) % t,
            ));
        }
        let &(_, p, e, poly) = IRREDUCIBLE
            .iter()
            .find(|&&(order, ..)| order == t)
            .ok_or(FieldError::NotPrimePower(t))?;
        let to_vec = |mut a: u64| -> Vec<u64> {
            (0..e)
                .map(|_| {
                    let c = a % p;
                    a /= p;
                    c
                })
                .collect()
        };
        let to_int = |v: &[u64]| -> u64 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let add = move |a: u64, b: u64| {
            let (va, vb) = (to_vec(a), to_vec(b));
            let sum: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
            to_int(&sum)
        };
        let mul = move |a: u64, b: u64| {
            let (va, vb) = (to_vec(a), to_vec(b));
            let deg = e as usize;
            let mut prod = vec![0u64; 2 * deg - 1];
            for (i, &x) in va.iter().enumerate() {
                for (j, &y) in vb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for i in (deg..prod.len()).rev() {
                let c = prod[i];
                if c != 0 {
                    prod[i] = 0;
                    for (j, &pc) in poly.iter().take(deg).enumerate() {
                        // x^e = -(low part of poly); subtract c * pc
                        prod[i - deg + j] = (prod[i - deg + j] + p * p - (c * pc) % p) % p;
                    }
                }
            }
            to_int(&prod[..deg])
        };
        Ok(Self::from_tables(t, p, add, mul))
    }

    fn from_tables(
        order: u64,
        characteristic: u64,
        add_fn: impl Fn(u64, u64) -> u64,
        mul_fn: impl Fn(u64, u64) -> u64,
    ) -> GaloisField {
        let t = order as usize;
        let mut add = vec![0; t * t];
        let mut mul = vec![0; t * t];
        for a in 0..t as u64 {
            for b in 0..t as u64 {
                add[(a * order + b) as usize] = add_fn(a, b);
                mul[(a * order + b) as usize] = mul_fn(a, b);
            }
        }
        let mut neg = vec![0; t];
        for a in 0..t as u64 {
            neg[a as usize] = (0..order)
                .find(|&b| add[(a * order + b) as usize] == 0)
                .expect("additive inverse must exist");
        }
        let mut inv = vec![0; t];
        for a in 1..t as u64 {
            inv[a as usize] = (1..order)
                .find(|&b| mul[(a * order + b) as usize] == 1)
                .expect("multiplicative inverse must exist in a field");
        }
        GaloisField {
            order,
            characteristic,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(FieldElement)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[(a.0 * self.order + b.0) as usize])
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[(a.0 * self.order + b.0) as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| FieldElement(self.inv[a.0 as usize]))
    }
}
