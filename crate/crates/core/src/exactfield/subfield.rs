use super::{AlgNum, AmbientField, FieldError};
use crate::linalg::Echelon;
use std::fmt;
use std::sync::Arc;

/// A subfield of the ambient field, stored as a ℚ-subspace in echelon form.
#[derive(Clone)]
pub struct Subfield {
    field: Arc<AmbientField>,
    space: Echelon,
}

impl fmt::Debug for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subfield(dim {} of {})", self.dim(), self.field.degree())
    }
}

impl PartialEq for Subfield {
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.basis().iter().all(|b| other.contains(b))
    }
}

impl Subfield {
    pub fn rationals(field: &Arc<AmbientField>) -> Self {
        let mut space = Echelon::new(field.degree());
        space.insert(field.one().coords());
        Subfield { field: field.clone(), space }
    }

    pub fn whole(field: &Arc<AmbientField>) -> Self {
        span_close(&[field.gen()], &Self::rationals(field))
    }

    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn field(&self) -> &Arc<AmbientField> {
        &self.field
    }

    pub fn basis(&self) -> Vec<AlgNum> {
        self.space
            .rows()
            .iter()
            .map(|r| self.field.element(r.clone()).expect("echelon row has ambient width"))
            .collect()
    }

    pub fn contains(&self, a: &AlgNum) -> bool {
        self.space.contains(a.coords())
    }
}

/// Smallest subfield containing `base` and `gens`.
///
/// Products of basis vectors are added until the dimension stops growing; a finite-dimensional
/// ℚ-algebra without zero divisors is a field, so the result is closed under inversion too.
pub fn span_close(gens: &[AlgNum], base: &Subfield) -> Subfield {
    let mut space = base.space.clone();
    for g in gens {
        space.insert(g.coords());
    }
    let field = base.field.clone();
    loop {
        let basis: Vec<AlgNum> = space
            .rows()
            .iter()
            .map(|r| field.element(r.clone()).expect("echelon row has ambient width"))
            .collect();
        let before = space.rank();
        for i in 0..basis.len() {
            for j in i..basis.len() {
                space.insert(basis[i].mul(&basis[j]).coords());
            }
        }
        if space.rank() == before {
            break;
        }
    }
    Subfield { field, space }
}

/// [outer : inner] as a ratio of ℚ-dimensions.
pub fn rel_degree(inner: &Subfield, outer: &Subfield) -> Result<usize, FieldError> {
    if !inner.basis().iter().all(|b| outer.contains(b)) {
        return Err(FieldError::NotASubfield);
    }
    let (i, o) = (inner.dim(), outer.dim());
    if o % i != 0 {
        return Err(FieldError::NonIntegralDegree { inner: i, outer: o });
    }
    Ok(o / i)
}
