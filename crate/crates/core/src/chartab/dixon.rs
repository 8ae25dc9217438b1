//! Burnside-Dixon-Schneider over a prime field `F_l` with `l = 1 mod exp(G)`.
//!
//! Normalized character columns `u_s = chi(x_s)/chi(1)` are the common right
//! eigenvectors of the class matrices `M_j[r][s] = #{y in C_j : x_r y in C_s}`.
//! Eigenspaces are split class by class; values are lifted to cyclotomics
//! through eigenvalue multiplicities of `rho(x)`.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::numtheory::{integer_sqrt, is_prime, mod_pow, primitive_root};
use crate::permgroup::PermGroup;

use super::{verify_table, CharacterTable, ClassInfo};

fn mulm(a: u64, b: u64, l: u64) -> u64 {
    a * b % l
}

fn inv(a: u64, l: u64) -> u64 {
    mod_pow(a, l - 2, l)
}

/// The least prime `l = 1 mod e` with `l > 2 sqrt(order)`, after `skip` earlier candidates.
pub fn dixon_prime(order: u128, e: u64, skip: usize) -> u64 {
    let mut seen = 0;
    let mut l = e + 1;
    loop {
        if (l as u128) * (l as u128) > 4 * order && is_prime(l) {
            if seen == skip {
                return l;
            }
            seen += 1;
        }
        l += e;
    }
}

/// Row-reduces in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let iv = inv(rows[r][c], l);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, iv, l);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let sub = mulm(f, rows[r][j], l);
                    rows[i][j] = (rows[i][j] + l - sub) % l;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Null space basis of a square matrix.
fn null_space(mut a: Vec<Vec<u64>>, l: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let pivots = rref(&mut a, l);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = (l - a[ri][f]) % l;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial via reduction to Hessenberg form; coefficients lowest first, monic.
fn charpoly(mut a: Vec<Vec<u64>>, l: u64) -> Vec<u64> {
    let n = a.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| a[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            a.swap(i, m);
            for row in a.iter_mut() {
                row.swap(i, m);
            }
        }
        let iv = inv(a[m][m - 1], l);
        for i in m + 1..n {
            let u = mulm(a[i][m - 1], iv, l);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let sub = mulm(u, a[m][j], l);
                a[i][j] = (a[i][j] + l - sub) % l;
            }
            for row in a.iter_mut() {
                let add = mulm(u, row[i], l);
                row[m] = (row[m] + add) % l;
            }
        }
    }
    // p_k = charpoly of leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let mut pk = vec![0u64; k + 1];
        // (x - a[k-1][k-1]) p_{k-1}
        let prev = &polys[k - 1];
        for (i, &c) in prev.iter().enumerate() {
            pk[i + 1] = (pk[i + 1] + c) % l;
            pk[i] = (pk[i] + l - mulm(a[k - 1][k - 1], c, l)) % l;
        }
        let mut t = 1u64;
        for i in 1..k {
            t = mulm(t, a[k - i][k - i - 1], l);
            let h = mulm(t, a[k - i - 1][k - 1], l);
            for (j, &c) in polys[k - i - 1].iter().enumerate() {
                pk[j] = (pk[j] + l - mulm(h, c, l)) % l;
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn roots(poly: &[u64], l: u64) -> Vec<u64> {
    (0..l)
        .filter(|&x| {
            poly.iter()
                .rev()
                .fold(0u64, |acc, &c| (mulm(acc, x, l) + c) % l)
                == 0
        })
        .collect()
}

struct Kernel<'a> {
    group: &'a PermGroup,
    k: usize,
    matrices: BTreeMap<usize, Vec<Vec<u32>>>,
}

impl Kernel<'_> {
    fn class_matrix(&mut self, j: usize) -> Result<&Vec<Vec<u32>>> {
        if !self.matrices.contains_key(&j) {
            let cs = self.group.class_structure()?;
            let en = self.group.enumeration()?;
            let mut m = vec![vec![0u32; self.k]; self.k];
            for (r, row) in m.iter_mut().enumerate() {
                let x = &cs.classes[r].representative;
                for &y in &cs.members[j] {
                    let z = x.mul(&en.elements()[y as usize]);
                    let s = cs.class_of[en.index_of(&z).expect("product in group") as usize];
                    row[s as usize] += 1;
                }
            }
            self.matrices.insert(j, m);
        }
        Ok(&self.matrices[&j])
    }

    /// Common eigenvectors normalized to 1 at the identity class, or None if this prime fails.
    fn eigenvectors(&mut self, l: u64, order: &[usize]) -> Result<Option<Vec<Vec<u64>>>> {
        let k = self.k;
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
            .map(|i| {
                let mut v = vec![0u64; k];
                v[i] = 1;
                v
            })
            .collect()];
        for &j in order {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let m = self.class_matrix(j)?.clone();
            let mut next = Vec::new();
            for mut basis in spaces {
                if basis.len() == 1 {
                    next.push(basis);
                    continue;
                }
                let pivots = rref(&mut basis, l);
                let d = basis.len();
                // a[r][i] = coordinate r of M b_i
                let mut a = vec![vec![0u64; d]; d];
                for (i, b) in basis.iter().enumerate() {
                    for (ri, &pc) in pivots.iter().enumerate() {
                        let w: u64 = m[pc]
                            .iter()
                            .zip(b)
                            .fold(0u64, |acc, (&x, &y)| (acc + (x as u64 % l) * y) % l);
                        a[ri][i] = w;
                    }
                }
                let cp = charpoly(a.clone(), l);
                let rs = roots(&cp, l);
                if rs.len() == 1 {
                    next.push(basis);
                    continue;
                }
                let mut total = 0;
                for lam in rs {
                    let mut shifted = a.clone();
                    for (i, row) in shifted.iter_mut().enumerate() {
                        row[i] = (row[i] + l - lam) % l;
                    }
                    let ns = null_space(shifted, l);
                    total += ns.len();
                    let vecs: Vec<Vec<u64>> = ns
                        .iter()
                        .map(|c| {
                            let mut v = vec![0u64; k];
                            for (ci, b) in c.iter().zip(&basis) {
                                if *ci != 0 {
                                    for (vv, &bb) in v.iter_mut().zip(b) {
                                        *vv = (*vv + mulm(*ci, bb, l)) % l;
                                    }
                                }
                            }
                            v
                        })
                        .collect();
                    next.push(vecs);
                }
                if total != d {
                    return Ok(None);
                }
            }
            spaces = next;
        }
        if spaces.iter().any(|s| s.len() != 1) || spaces.len() != k {
            return Ok(None);
        }
        let mut out = Vec::with_capacity(k);
        for s in spaces {
            let v = &s[0];
            if v[0] == 0 {
                return Ok(None);
            }
            let iv = inv(v[0], l);
            out.push(v.iter().map(|&x| mulm(x, iv, l)).collect());
        }
        Ok(Some(out))
    }
}

/// Computes the full character table of an enumerable group.
pub fn dixon_schneider(group: &PermGroup) -> Result<CharacterTable> {
    let cs = group.class_structure()?;
    let k = cs.classes.len();
    let n = group.order();
    let e = cs.exponent;
    let mut kernel = Kernel {
        group,
        k,
        matrices: BTreeMap::new(),
    };
    let mut split_order: Vec<usize> = (1..k).collect();
    split_order.sort_by_key(|&j| (cs.classes[j].size, j));

    // class of x_s^i for 0 <= i < o(x_s)
    let en = group.enumeration()?;
    let powers: Vec<Vec<usize>> = cs
        .classes
        .iter()
        .map(|c| {
            (0..c.order)
                .map(|i| {
                    cs.class_of[en.index_of(&c.representative.pow(i as i64)).unwrap() as usize]
                        as usize
                })
                .collect()
        })
        .collect();

    for attempt in 0..8 {
        let l = dixon_prime(n, e, attempt);
        let Some(vecs) = kernel.eigenvectors(l, &split_order)? else {
            continue;
        };
        let w_e = mod_pow(primitive_root(l), (l - 1) / e, l);
        let mut rows = Vec::with_capacity(k);
        let mut ok = true;
        'chars: for u in &vecs {
            let mut sum = 0u64;
            for s in 0..k {
                let t = cs.inverse[s];
                sum =
                    (sum + mulm(
                        (cs.classes[s].size % l as u128) as u64,
                        mulm(u[s], u[t], l),
                        l,
                    )) % l;
            }
            if sum == 0 {
                ok = false;
                break;
            }
            let target = mulm((n % l as u128) as u64, inv(sum, l), l);
            let dmax = integer_sqrt(n) as u64;
            let Some(deg) = (1..=dmax).find(|&d| mulm(d, d, l) == target && n % d as u128 == 0)
            else {
                ok = false;
                break;
            };
            let vals: Vec<u64> = u.iter().map(|&x| mulm(x, deg, l)).collect();
            let mut row = Vec::with_capacity(k);
            for s in 0..k {
                let o = cs.classes[s].order;
                let w_o = mod_pow(w_e, e / o, l);
                let o_inv = inv(o % l, l);
                let mut mult = vec![0i64; o as usize];
                let mut total = 0u64;
                for (kk, m) in mult.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for (i, &pc) in powers[s].iter().enumerate() {
                        let exp = (o as usize - (i * kk) % o as usize) % o as usize;
                        acc = (acc + mulm(vals[pc], mod_pow(w_o, exp as u64, l), l)) % l;
                    }
                    let mk = mulm(acc, o_inv, l);
                    if mk > deg {
                        ok = false;
                        break 'chars;
                    }
                    *m = mk as i64;
                    total += mk;
                }
                if total != deg {
                    ok = false;
                    break 'chars;
                }
                row.push(CycNum::from_int_dense(o, &mult));
            }
            rows.push(row);
        }
        if !ok {
            continue;
        }
        let classes = cs
            .classes
            .iter()
            .map(|c| ClassInfo {
                name: c.name.clone(),
                order: c.order,
                size: c.size,
                power_map: c.power_map.clone(),
                representative: Some(c.representative.clone()),
            })
            .collect();
        let mut table = CharacterTable {
            name: String::new(),
            order: n,
            exponent: e,
            classes,
            irr: rows,
            group: Some(group.clone()),
            complete: true,
            dixon_prime: Some(l),
        };
        table.sort_rows();
        let report = verify_table(&table);
        if !report.passed {
            return Err(Error::TableFailure(report.failures.join("; ")));
        }
        return Ok(table);
    }
    Err(Error::TableFailure(
        "eigenspaces did not split for any tried prime".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_small_matrix() {
        let l = 101;
        // [[2,1],[1,2]] has charpoly x^2 - 4x + 3
        let cp = charpoly(vec![vec![2, 1], vec![1, 2]], l);
        assert_eq!(cp, vec![3, l - 4, 1]);
        let mut r = roots(&cp, l);
        r.sort();
        assert_eq!(r, vec![1, 3]);
        // companion-like 3x3
        let a = vec![vec![0, 0, 6], vec![1, 0, l - 11], vec![0, 1, 6]];
        assert_eq!(charpoly(a, l), vec![l - 6, 11, l - 6, 1]);
    }

    #[test]
    fn dixon_prime_choice() {
        // exponent 6, order 24: l^2 > 96 and l = 1 mod 6
        assert_eq!(dixon_prime(24, 6, 0), 13);
        assert_eq!(dixon_prime(24, 6, 1), 19);
    }
}
