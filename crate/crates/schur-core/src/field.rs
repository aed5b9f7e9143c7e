//! Coefficient fields: exact rationals and prime fields GF(p).
//!
//! The algebra is generic over the scalar type through [`CoeffField`].  The
//! trait differs from the usual numeric-trait shape in one way: every
//! constructor and operation takes a `Config` value, because a GF(p) scalar
//! only means something relative to a modulus chosen at runtime.  For the
//! rationals the config is `()` and the methods collapse to plain arithmetic.
//!
//! All structure constants are computed as arbitrary-precision integers first
//! and enter the field through [`CoeffField::from_bigint`], so prime
//! characteristic is exact, never a rounding of something rational.

use crate::SchurError;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub use num_rational::BigRational;

/// Scalar type of an exact coefficient field.
///
/// `Config` carries whatever data the field needs at runtime (nothing for
/// the rationals, the modulus for GF(p)); two scalars are only comparable
/// when produced under equal configs, which the algebra context enforces.
pub trait CoeffField: Clone + PartialEq + Eq + fmt::Debug {
    type Config: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(cfg: &Self::Config) -> Self;
    fn one(cfg: &Self::Config) -> Self;

    /// Ring homomorphism from the integers.
    fn from_bigint(cfg: &Self::Config, value: &BigInt) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self, cfg: &Self::Config) -> Self;
    fn neg(&self, cfg: &Self::Config) -> Self;
    fn mul(&self, other: &Self, cfg: &Self::Config) -> Self;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inverse(&self, cfg: &Self::Config) -> Option<Self>;

    fn sub(&self, other: &Self, cfg: &Self::Config) -> Self {
        self.add(&other.neg(cfg), cfg)
    }

    /// Canonical text form: `"a"` or `"a/b"` for rationals, the residue for
    /// GF(p).  Used by the expression formatter and the JSON schema.
    fn coeff_string(&self) -> String;

    /// Interprets a literal `numer/denom` from the expression grammar.
    fn from_fraction(
        cfg: &Self::Config,
        numer: &BigInt,
        denom: &BigUint,
    ) -> Result<Self, SchurError>;
}

impl CoeffField for BigRational {
    type Config = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }

    fn from_bigint(_: &(), value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self, _: &()) -> Self {
        self + other
    }

    fn neg(&self, _: &()) -> Self {
        -self
    }

    fn mul(&self, other: &Self, _: &()) -> Self {
        self * other
    }

    fn inverse(&self, _: &()) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn coeff_string(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn from_fraction(_: &(), numer: &BigInt, denom: &BigUint) -> Result<Self, SchurError> {
        if denom.is_zero() {
            return Err(SchurError::InvalidCoefficient(
                "zero denominator".to_string(),
            ));
        }
        Ok(BigRational::new(numer.clone(), BigInt::from(denom.clone())))
    }
}

/// A validated prime modulus for GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FpModulus(u64);

impl FpModulus {
    pub fn new(p: u64) -> Result<Self, SchurError> {
        if is_prime_u64(p) {
            Ok(FpModulus(p))
        } else {
            Err(SchurError::InvalidContext(format!("{p} is not prime")))
        }
    }

    pub fn prime(&self) -> u64 {
        self.0
    }
}

/// An element of GF(p), stored as the residue in `0..p-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    residue: u64,
}

impl Fp {
    pub fn residue(&self) -> u64 {
        self.residue
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin over the witness set that is exact for u64.
fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p == small {
            return true;
        }
        if p % small == 0 {
            return false;
        }
    }
    let mut d = p - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl CoeffField for Fp {
    type Config = FpModulus;

    fn zero(_: &FpModulus) -> Self {
        Fp { residue: 0 }
    }

    fn one(cfg: &FpModulus) -> Self {
        Fp {
            residue: 1 % cfg.0,
        }
    }

    fn from_bigint(cfg: &FpModulus, value: &BigInt) -> Self {
        let p = BigInt::from(cfg.0);
        let mut m = value % &p;
        if m.is_negative() {
            m += &p;
        }
        Fp {
            residue: m.to_u64().expect("residue fits in u64 after reduction"),
        }
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn add(&self, other: &Self, cfg: &FpModulus) -> Self {
        let p = cfg.0 as u128;
        Fp {
            residue: ((self.residue as u128 + other.residue as u128) % p) as u64,
        }
    }

    fn neg(&self, cfg: &FpModulus) -> Self {
        Fp {
            residue: if self.residue == 0 {
                0
            } else {
                cfg.0 - self.residue
            },
        }
    }

    fn mul(&self, other: &Self, cfg: &FpModulus) -> Self {
        Fp {
            residue: mul_mod(self.residue, other.residue, cfg.0),
        }
    }

    fn inverse(&self, cfg: &FpModulus) -> Option<Self> {
        if self.residue == 0 {
            None
        } else {
            // Fermat: a^(p-2) since p is prime.
            Some(Fp {
                residue: pow_mod(self.residue, cfg.0 - 2, cfg.0),
            })
        }
    }

    fn coeff_string(&self) -> String {
        self.residue.to_string()
    }

    fn from_fraction(cfg: &FpModulus, numer: &BigInt, denom: &BigUint) -> Result<Self, SchurError> {
        let n = Self::from_bigint(cfg, numer);
        let d = Self::from_bigint(cfg, &BigInt::from(denom.clone()));
        let inv = d.inverse(cfg).ok_or_else(|| {
            SchurError::InvalidCoefficient(format!(
                "denominator {denom} is zero modulo {}",
                cfg.0
            ))
        })?;
        Ok(n.mul(&inv, cfg))
    }
}

/// Runtime field tag, as written in CLI flags and the JSON schema.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldDescriptor {
    Rational,
    Gf(u64),
}

impl FieldDescriptor {
    /// Parses `"rational"` or `"gf:p"`.
    pub fn parse(text: &str) -> Result<Self, SchurError> {
        if text == "rational" {
            return Ok(FieldDescriptor::Rational);
        }
        if let Some(p) = text.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| SchurError::InvalidContext(format!("bad field \"{text}\"")))?;
            FpModulus::new(p)?;
            return Ok(FieldDescriptor::Gf(p));
        }
        Err(SchurError::InvalidContext(format!(
            "unknown field descriptor \"{text}\" (expected \"rational\" or \"gf:p\")"
        )))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Gf(p) => write!(f, "gf:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_axioms_on_samples() {
        let cfg = ();
        let a = BigRational::from_fraction(&cfg, &BigInt::from(3), &BigUint::from(4u32)).unwrap();
        let b = BigRational::from_fraction(&cfg, &BigInt::from(-2), &BigUint::from(3u32)).unwrap();
        assert_eq!(a.add(&b, &cfg), b.add(&a, &cfg));
        assert_eq!(a.mul(&a.inverse(&cfg).unwrap(), &cfg), CoeffField::one(&cfg));
        assert_eq!(a.coeff_string(), "3/4");
        assert_eq!(b.coeff_string(), "-2/3");
        assert_eq!(
            <BigRational as CoeffField>::from_bigint(&cfg, &BigInt::from(7)).coeff_string(),
            "7"
        );
    }

    #[test]
    fn gf_arithmetic_wraps_exactly() {
        let cfg = FpModulus::new(5).unwrap();
        let four = Fp::from_bigint(&cfg, &BigInt::from(-1));
        assert_eq!(four.residue(), 4);
        let two = Fp::from_bigint(&cfg, &BigInt::from(7));
        assert_eq!(two.residue(), 2);
        assert_eq!(four.add(&two, &cfg).residue(), 1);
        assert_eq!(four.mul(&two, &cfg).residue(), 3);
        // 2 * 3 = 6 = 1 mod 5.
        assert_eq!(two.inverse(&cfg).unwrap().residue(), 3);
        assert!(Fp::zero(&cfg).inverse(&cfg).is_none());
    }

    #[test]
    fn from_bigint_is_a_ring_homomorphism_mod_p() {
        let cfg = FpModulus::new(7).unwrap();
        for a in -20i64..20 {
            for b in -20i64..20 {
                let fa = Fp::from_bigint(&cfg, &BigInt::from(a));
                let fb = Fp::from_bigint(&cfg, &BigInt::from(b));
                assert_eq!(
                    fa.add(&fb, &cfg),
                    Fp::from_bigint(&cfg, &BigInt::from(a + b))
                );
                assert_eq!(
                    fa.mul(&fb, &cfg),
                    Fp::from_bigint(&cfg, &BigInt::from(a * b))
                );
            }
        }
    }

    #[test]
    fn primality_check() {
        assert!(FpModulus::new(2).is_ok());
        assert!(FpModulus::new(3).is_ok());
        assert!(FpModulus::new(97).is_ok());
        assert!(FpModulus::new(1).is_err());
        assert!(FpModulus::new(91).is_err()); // 7 * 13
        assert!(FpModulus::new(1_000_000_007).is_ok());
        assert!(FpModulus::new((1 << 32) - 1).is_err()); // 641 divides it
    }

    #[test]
    fn field_descriptor_round_trip() {
        assert_eq!(
            FieldDescriptor::parse("rational").unwrap(),
            FieldDescriptor::Rational
        );
        assert_eq!(
            FieldDescriptor::parse("gf:3").unwrap(),
            FieldDescriptor::Gf(3)
        );
        assert!(FieldDescriptor::parse("gf:4").is_err());
        assert!(FieldDescriptor::parse("real").is_err());
        assert_eq!(FieldDescriptor::Gf(5).to_string(), "gf:5");
    }
}
