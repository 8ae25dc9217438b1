//! Exact character tables: Dixon-Schneider computation, verification,
//! fusion, induction and restriction, blocks, and the CTX text format.

mod blocks;
mod ctx;
mod dixon;
mod equiv;
mod fusion;
mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub use blocks::{p_blocks, Block, BlockPartition};
pub use ctx::{ctx_parse, ctx_write};
pub use dixon::{dixon_prime, dixon_schneider};
pub use equiv::{tables_equivalent, TableMatch};
pub use fusion::{class_fusion, induce, permutation_character, restrict, ClassFusion};
pub use verify::{verify_table, TableVerification};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::numtheory::valuation;
use crate::permgroup::{Perm, PermGroup};

/// A class function given by its values on the table's classes.
pub type ClassFunction = Vec<CycNum>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub order: u64,
    pub size: u128,
    /// Image class under the p-th power map, for primes p dividing the exponent.
    pub power_map: BTreeMap<u64, usize>,
    pub representative: Option<Perm>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub name: String,
    pub order: u128,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    /// Rows are irreducible characters, columns follow `classes`.
    pub irr: Vec<Vec<CycNum>>,
    /// The group the table was computed from; columns then follow its class order.
    pub group: Option<PermGroup>,
    /// False for partial tables (a subset of classes), which skip full verification.
    pub complete: bool,
    pub dixon_prime: Option<u64>,
}

impl PartialEq for CharacterTable {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name
            && self.order == o.order
            && self.exponent == o.exponent
            && self.classes == o.classes
            && self.irr == o.irr
            && self.complete == o.complete
    }
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_chars(&self) -> usize {
        self.irr.len()
    }

    pub fn group(&self) -> Result<&PermGroup> {
        self.group.as_ref().ok_or_else(|| {
            Error::Precondition(format!("table {} has no group attached", self.name))
        })
    }

    pub fn value(&self, chi: usize, class: usize) -> &CycNum {
        &self.irr[chi][class]
    }

    pub fn degree(&self, chi: usize) -> u128 {
        self.irr[chi][0]
            .as_integer()
            .and_then(|d| d.to_u128())
            .expect("degree is a positive integer")
    }

    pub fn degrees(&self) -> Vec<u128> {
        (0..self.num_chars()).map(|i| self.degree(i)).collect()
    }

    /// `chi(1)_p` as an exponent of `p`.
    pub fn degree_valuation(&self, chi: usize, p: u64) -> u32 {
        valuation(self.degree(chi), p)
    }

    pub fn centralizer_order(&self, class: usize) -> u128 {
        self.order / self.classes[class].size
    }

    /// Column of the element's class; requires an attached group.
    pub fn column_of(&self, g: &Perm) -> Result<usize> {
        self.group()?.class_of(g)
    }

    /// Class containing the inverses of the class `s`, by complex conjugation of the column.
    pub fn inverse_class(&self, s: usize) -> usize {
        if let Some(g) = &self.group {
            if let Ok(cs) = g.class_structure() {
                return cs.inverse[s];
            }
        }
        let conj: Vec<CycNum> = self.irr.iter().map(|row| row[s].conj()).collect();
        (0..self.num_classes())
            .find(|&t| {
                self.classes[t].order == self.classes[s].order
                    && self.irr.iter().zip(&conj).all(|(row, c)| row[t] == *c)
            })
            .unwrap_or(s)
    }

    pub fn is_trivial_character(&self, chi: usize) -> bool {
        self.irr[chi].iter().all(|v| v.is_one())
    }

    /// `<a, b> = (1/|G|) sum_s |K_s| a(s) conj(b(s))`; needs a complete table.
    pub fn inner_product(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero();
        for s in 0..self.num_classes() {
            if a[s].is_zero() || b[s].is_zero() {
                continue;
            }
            let t = &a[s] * &b[s].conj();
            acc = &acc
                + &t.scale(&BigRational::from_integer(BigInt::from(
                    self.classes[s].size,
                )));
        }
        acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(self.order)))
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, cf: &[CycNum]) -> Vec<CycNum> {
        self.irr
            .iter()
            .map(|chi| self.inner_product(cf, chi))
            .collect()
    }

    /// Integer multiplicities, failing if the class function is not a virtual character.
    pub fn decompose_integral(&self, cf: &[CycNum]) -> Result<Vec<i64>> {
        self.decompose(cf)
            .into_iter()
            .map(|m| m.as_i64().ok_or_else(|| Error::NotIntegral(0)))
            .collect()
    }

    /// Sum of `coeffs[i] * irr[i]`.
    pub fn combination(&self, coeffs: &[i64]) -> ClassFunction {
        let mut out = vec![CycNum::zero(); self.num_classes()];
        for (row, &c) in self.irr.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, v) in out.iter_mut().zip(row) {
                *o = &*o + &v.scale_int(c);
            }
        }
        out
    }

    pub fn trivial_character(&self) -> ClassFunction {
        vec![CycNum::one(); self.num_classes()]
    }

    /// Characters not vanishing on any of the given classes.
    pub fn nonvanishing(&self, classes: &[usize]) -> Vec<usize> {
        (0..self.num_chars())
            .filter(|&i| classes.iter().any(|&s| !self.irr[i][s].is_zero()))
            .collect()
    }

    /// Characters of degree prime to `p`.
    pub fn p_prime_degree(&self, p: u64) -> Vec<usize> {
        (0..self.num_chars())
            .filter(|&i| self.degree(i) % p as u128 != 0)
            .collect()
    }

    /// Classes of elements of order a power of `p` (excluding the identity).
    pub fn p_element_classes(&self, p: u64) -> Vec<usize> {
        (1..self.num_classes())
            .filter(|&s| {
                crate::numtheory::prime_power(self.classes[s].order).is_some_and(|(q, _)| q == p)
            })
            .collect()
    }

    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.num_classes())
            .filter(|&s| self.classes[s].order % p != 0)
            .collect()
    }

    pub fn class_by_name(&self, name: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.name.eq_ignore_ascii_case(name))
    }

    fn check_class_function(&self, cf: &[CycNum]) -> Result<()> {
        if cf.len() != self.num_classes() {
            return Err(Error::DimensionMismatch {
                expected: self.num_classes(),
                found: cf.len(),
            });
        }
        Ok(())
    }

    pub fn is_zero_function(cf: &[CycNum]) -> bool {
        cf.iter().all(|v| v.is_zero())
    }

    /// Orders the rows: trivial character first, then by degree and value tuple.
    pub(crate) fn sort_rows(&mut self) {
        let mut rows = std::mem::take(&mut self.irr);
        rows.sort_by(|a, b| {
            let ta = !a.iter().all(|v| v.is_one());
            let tb = !b.iter().all(|v| v.is_one());
            let da = a[0].as_integer().unwrap_or_else(BigInt::zero);
            let db = b[0].as_integer().unwrap_or_else(BigInt::zero);
            ta.cmp(&tb).then(da.cmp(&db)).then_with(|| a.cmp(b))
        });
        self.irr = rows;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::{alternating, dihedral, symmetric};

    #[test]
    fn small_tables_have_expected_degrees() {
        let t = dixon_schneider(&symmetric(3)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        let t = dixon_schneider(&symmetric(4)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        let t = dixon_schneider(&alternating(5)).unwrap();
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        let t = dixon_schneider(&dihedral(8).unwrap()).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        assert!(t.is_trivial_character(0));
    }

    #[test]
    fn inner_products_of_irreducibles() {
        let t = dixon_schneider(&alternating(4)).unwrap();
        for i in 0..t.num_chars() {
            for j in 0..t.num_chars() {
                let ip = t.inner_product(&t.irr[i], &t.irr[j]);
                assert_eq!(ip, CycNum::from_int((i == j) as i64));
            }
        }
        let sum = t.combination(&[1, 2, 0, 1]);
        assert_eq!(t.decompose_integral(&sum).unwrap(), vec![1, 2, 0, 1]);
    }
}
