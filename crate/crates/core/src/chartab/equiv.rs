//! Equality of character tables up to permutations of rows and columns.

use serde::Serialize;

use super::CharacterTable;
use crate::cyclotomic::CycNum;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableMatch {
    /// `rows[i]` is the row of the second table equal to row `i` of the first.
    pub rows: Vec<usize>,
    /// `cols[s]` is the column of the second table matched with column `s` of the first.
    pub cols: Vec<usize>,
}

fn prefix_multiset(t: &CharacterTable, cols: &[usize]) -> Vec<Vec<CycNum>> {
    let mut v: Vec<Vec<CycNum>> = t
        .irr
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    v.sort();
    v
}

/// Finds row and column bijections under which the tables agree, respecting element
/// orders and class sizes. Returns None when the tables differ.
pub fn tables_equivalent(a: &CharacterTable, b: &CharacterTable) -> Option<TableMatch> {
    if a.order != b.order || a.num_classes() != b.num_classes() || a.num_chars() != b.num_chars() {
        return None;
    }
    let k = a.num_classes();
    let mut cols: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn search(
        a: &CharacterTable,
        b: &CharacterTable,
        cols: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let j = cols.len();
        if j == a.num_classes() {
            return true;
        }
        let target: Vec<usize> = (0..=j).collect();
        for c in 0..b.num_classes() {
            if used[c]
                || a.classes[j].order != b.classes[c].order
                || a.classes[j].size != b.classes[c].size
            {
                continue;
            }
            cols.push(c);
            if prefix_multiset(a, &target) == prefix_multiset(b, cols) {
                used[c] = true;
                if search(a, b, cols, used) {
                    return true;
                }
                used[c] = false;
            }
            cols.pop();
        }
        false
    }
    if !search(a, b, &mut cols, &mut used) {
        return None;
    }
    let mut taken = vec![false; b.num_chars()];
    let mut rows = Vec::with_capacity(a.num_chars());
    for row in &a.irr {
        let i = (0..b.num_chars())
            .find(|&i| !taken[i] && (0..k).all(|s| b.irr[i][cols[s]] == row[s]))?;
        taken[i] = true;
        rows.push(i);
    }
    Some(TableMatch { rows, cols })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::dixon_schneider;
    use crate::permgroup::named::{alternating, symmetric};

    #[test]
    fn permuted_table_is_equivalent() {
        let t = dixon_schneider(&alternating(5)).unwrap();
        let mut u = t.clone();
        u.irr.reverse();
        for row in u.irr.iter_mut() {
            row.swap(3, 4);
        }
        u.classes.swap(3, 4);
        let m = tables_equivalent(&t, &u).unwrap();
        assert_eq!(m.rows[0], 4);
        assert!(tables_equivalent(&t, &dixon_schneider(&symmetric(4)).unwrap()).is_none());
    }
}
