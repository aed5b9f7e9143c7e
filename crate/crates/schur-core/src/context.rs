use crate::field::{BigRational, CoeffField, FieldDescriptor, Fp, FpModulus};
use crate::SchurError;

/// The ambient algebra: residue modulus `n`, tuple length `r`, and the
/// coefficient-field configuration.
///
/// Every symbol, element, and operation is relative to one of these; values
/// from different contexts never mix (checked, not assumed).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraContext<F: CoeffField> {
    n: i64,
    r: usize,
    field: F::Config,
}

impl<F: CoeffField> AlgebraContext<F> {
    pub fn new(n: i64, r: usize, field: F::Config) -> Result<Self, SchurError> {
        if n < 1 {
            return Err(SchurError::InvalidContext(format!("n must be ≥ 1, got {n}")));
        }
        if r < 1 {
            return Err(SchurError::InvalidContext(format!("r must be ≥ 1, got {r}")));
        }
        Ok(AlgebraContext { n, r, field })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> &F::Config {
        &self.field
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<(), SchurError> {
        if self != other {
            return Err(SchurError::ContextMismatch(format!(
                "({}, {}, {:?}) vs ({}, {}, {:?})",
                self.n, self.r, self.field, other.n, other.r, other.field
            )));
        }
        Ok(())
    }
}

impl AlgebraContext<BigRational> {
    /// Context over the rationals.
    pub fn rational(n: i64, r: usize) -> Result<Self, SchurError> {
        AlgebraContext::new(n, r, ())
    }
}

impl AlgebraContext<Fp> {
    /// Context over GF(p); `p` must be prime.
    pub fn gf(n: i64, r: usize, p: u64) -> Result<Self, SchurError> {
        AlgebraContext::new(n, r, FpModulus::new(p)?)
    }
}

impl<F: CoeffField> AlgebraContext<F> {
    /// The runtime field tag for serialization, derived from the config.
    pub fn descriptor(&self) -> FieldDescriptor
    where
        F::Config: DescribeField,
    {
        self.field.describe()
    }
}

/// Maps a field config back to its serializable descriptor.
pub trait DescribeField {
    fn describe(&self) -> FieldDescriptor;
}

impl DescribeField for () {
    fn describe(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }
}

impl DescribeField for FpModulus {
    fn describe(&self) -> FieldDescriptor {
        FieldDescriptor::Gf(self.prime())
    }
}
