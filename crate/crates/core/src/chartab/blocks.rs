//! p-blocks from central characters reduced modulo a prime above p.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::CharacterTable;
use crate::cyclotomic::{CycNum, ModPReduction};
use crate::error::{Error, Result};
use crate::finite_field::Elem;
use crate::numtheory::{is_prime, lcm, valuation};
use crate::permgroup::PermGroup;

#[derive(Clone, Debug, Serialize)]
pub struct Block {
    /// Character indices, increasing.
    pub characters: Vec<usize>,
    pub defect: u32,
    /// A p-regular class `K` with `lambda_B(K) != 0` whose centralizer has p-part `p^defect`.
    pub defect_class: Option<usize>,
    #[serde(skip)]
    pub defect_group: Option<PermGroup>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockPartition {
    pub p: u64,
    pub blocks: Vec<Block>,
    pub block_of: Vec<usize>,
    pub heights: Vec<u32>,
    /// The residue field and root-of-unity choice used for the reduction.
    pub reduction: String,
}

impl BlockPartition {
    pub fn principal(&self) -> &Block {
        &self.blocks[0]
    }

    /// Whether the block has a Sylow p-subgroup as defect group.
    pub fn is_full_defect(&self, b: usize, order: u128) -> bool {
        self.blocks[b].defect == valuation(order, self.p)
    }
}

/// Central character `omega_chi(K) = |K| chi(x_K) / chi(1)`.
fn central_character(t: &CharacterTable, chi: usize, s: usize) -> CycNum {
    let f = BigRational::new(BigInt::from(t.classes[s].size), BigInt::from(t.degree(chi)));
    t.irr[chi][s].scale(&f)
}

/// Partitions `Irr(G)` into p-blocks. `skip` picks a different irreducible polynomial for
/// the residue field; the partition does not depend on it. Defect groups are computed when
/// asked for and the table has a group attached.
pub fn p_blocks(
    t: &CharacterTable,
    p: u64,
    skip: usize,
    defect_groups: bool,
) -> Result<BlockPartition> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !t.complete {
        return Err(Error::Precondition("blocks need a complete table".into()));
    }
    let k = t.num_classes();
    let omegas: Vec<Vec<CycNum>> = (0..t.num_chars())
        .map(|i| (0..k).map(|s| central_character(t, i, s)).collect())
        .collect();
    let modulus = omegas
        .iter()
        .flatten()
        .fold(1u64, |acc, v| lcm(acc, v.conductor()));
    let red = ModPReduction::new(p, modulus, skip)?;
    let mut images: Vec<Vec<Elem>> = Vec::with_capacity(t.num_chars());
    for (i, row) in omegas.iter().enumerate() {
        let mut r = Vec::with_capacity(k);
        for (s, w) in row.iter().enumerate() {
            r.push(red.map(w).map_err(|_| {
                Error::Verification(format!(
                    "central character of {i} at class {s} is not {p}-integral"
                ))
            })?);
        }
        images.push(r);
    }
    let mut by_image: BTreeMap<&Vec<Elem>, usize> = BTreeMap::new();
    let mut block_of = vec![0usize; t.num_chars()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let b = *by_image.entry(img).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[b].push(i);
        block_of[i] = b;
    }
    let a = valuation(t.order, p);
    let mut heights = vec![0u32; t.num_chars()];
    let mut blocks = Vec::with_capacity(members.len());
    for m in members {
        let defect = m
            .iter()
            .map(|&i| a - t.degree_valuation(i, p))
            .max()
            .unwrap();
        for &i in &m {
            heights[i] = t.degree_valuation(i, p) - (a - defect);
        }
        let rep = m[0];
        let defect_class = t.p_regular_classes(p).into_iter().find(|&s| {
            !red.field().is_zero(&images[rep][s]) && valuation(t.centralizer_order(s), p) == defect
        });
        let defect_group = match (defect_groups, &t.group, defect_class) {
            (true, Some(g), Some(s)) => {
                let x = t.classes[s]
                    .representative
                    .as_ref()
                    .expect("class representative");
                Some(g.centralizer(x)?.sylow(p)?)
            }
            _ => None,
        };
        blocks.push(Block {
            characters: m,
            defect,
            defect_class,
            defect_group,
        });
    }
    Ok(BlockPartition {
        p,
        blocks,
        block_of,
        heights,
        reduction: red.describe(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::dixon_schneider;
    use crate::permgroup::named::symmetric;

    #[test]
    fn s4_blocks() {
        let t = dixon_schneider(&symmetric(4)).unwrap();
        let b3 = p_blocks(&t, 3, 0, true).unwrap();
        let parts: Vec<Vec<u128>> = b3
            .blocks
            .iter()
            .map(|b| b.characters.iter().map(|&i| t.degree(i)).collect())
            .collect();
        assert_eq!(parts, vec![vec![1, 1, 2], vec![3], vec![3]]);
        assert_eq!(
            b3.blocks.iter().map(|b| b.defect).collect::<Vec<_>>(),
            vec![1, 0, 0]
        );
        assert_eq!(b3.blocks[0].defect_group.as_ref().unwrap().order(), 3);
        assert_eq!(b3.blocks[1].defect_group.as_ref().unwrap().order(), 1);
        let b2 = p_blocks(&t, 2, 0, true).unwrap();
        assert_eq!(b2.blocks.len(), 1);
        assert_eq!(b2.blocks[0].defect, 3);
        assert_eq!(b2.blocks[0].defect_group.as_ref().unwrap().order(), 8);
        let again = p_blocks(&t, 2, 1, false).unwrap();
        assert_eq!(again.block_of, b2.block_of);
    }
}
