//! Fibers of the inclusion of fixed points into their downward closure in a finite
//! meet-semilattice.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::SubgroupLattice;

/// A finite poset given by its order relation, with all binary meets.
#[derive(Clone, Debug)]
pub struct MeetSemilattice {
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
}

impl MeetSemilattice {
    /// Builds the semilattice from `leq[a][b] = (a <= b)`; fails if some pair has no meet.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<MeetSemilattice> {
        let n = leq.len();
        let mut meet = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                let greatest = lower
                    .iter()
                    .copied()
                    .find(|&c| lower.iter().all(|&d| leq[d][c]));
                meet[a][b] = greatest.ok_or_else(|| {
                    Error::Precondition(format!("elements {a} and {b} have no meet"))
                })?;
            }
        }
        Ok(MeetSemilattice { leq, meet })
    }

    pub fn power_set(n: usize) -> MeetSemilattice {
        let m = 1usize << n;
        let leq = (0..m)
            .map(|a| (0..m).map(|b| a & b == a).collect())
            .collect();
        MeetSemilattice::new(leq).unwrap()
    }

    pub fn chain(n: usize) -> MeetSemilattice {
        MeetSemilattice::new((0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect()).unwrap()
    }

    pub fn from_subgroups(lat: &SubgroupLattice) -> MeetSemilattice {
        let n = lat.len();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| lat.is_subset(a, b)).collect())
            .collect();
        MeetSemilattice::new(leq).unwrap()
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn is_automorphism(&self, g: &[usize]) -> bool {
        let n = self.len();
        if g.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &i in g {
            if i >= n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        (0..n).all(|a| (0..n).all(|b| self.leq[a][b] == self.leq[g[a]][g[b]]))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    /// Size of the fixed subposet above `x`.
    pub fixed_above: usize,
    /// Size of the downward closure of the fixed points, above `x`.
    pub closure_above: usize,
    /// Whether the fixed subposet above `x` is itself closed under meets.
    pub fixed_meet_closed: bool,
    /// Every fiber is nonempty, meet-closed, and has a least element.
    pub fibers_ok: bool,
    pub failures: Vec<String>,
}

/// Checks the fibers `{z in X^g_{>x} : z >= y}` for all `y` in the downward closure of
/// `X^g` strictly above `x`.
pub fn semilattice_fiber_verify(
    x_lat: &MeetSemilattice,
    g: &[usize],
    x: usize,
) -> Result<FiberReport> {
    if !x_lat.is_automorphism(g) {
        return Err(Error::Precondition(
            "map is not an order automorphism".into(),
        ));
    }
    let n = x_lat.len();
    let fixed: Vec<usize> = (0..n).filter(|&z| g[z] == z && x_lat.lt(x, z)).collect();
    let all_fixed: Vec<usize> = (0..n).filter(|&z| g[z] == z).collect();
    let closure: Vec<usize> = (0..n)
        .filter(|&y| x_lat.lt(x, y) && all_fixed.iter().any(|&z| x_lat.leq(y, z)))
        .collect();
    let fixed_meet_closed = fixed
        .iter()
        .all(|&a| fixed.iter().all(|&b| fixed.contains(&x_lat.meet(a, b))));
    let mut failures = Vec::new();
    for &y in &closure {
        let fiber: Vec<usize> = fixed.iter().copied().filter(|&z| x_lat.leq(y, z)).collect();
        if fiber.is_empty() {
            failures.push(format!("fiber over {y} is empty"));
            continue;
        }
        if !fiber
            .iter()
            .all(|&a| fiber.iter().all(|&b| fiber.contains(&x_lat.meet(a, b))))
        {
            failures.push(format!("fiber over {y} is not closed under meets"));
        }
        let least = fiber
            .iter()
            .copied()
            .find(|&a| fiber.iter().all(|&b| x_lat.leq(a, b)));
        if least.is_none() {
            failures.push(format!("fiber over {y} has no least element"));
        }
    }
    Ok(FiberReport {
        fixed_above: fixed.len(),
        closure_above: closure.len(),
        fixed_meet_closed,
        fibers_ok: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_set_of_two_points() {
        let x = MeetSemilattice::power_set(2);
        let id: Vec<usize> = (0..4).collect();
        let r = semilattice_fiber_verify(&x, &id, 0).unwrap();
        assert!(!r.fixed_meet_closed);
        assert!(r.fibers_ok);
        assert_eq!(r.fixed_above, 3);
    }

    #[test]
    fn chains_and_swaps() {
        let c = MeetSemilattice::chain(5);
        let id: Vec<usize> = (0..5).collect();
        assert!(semilattice_fiber_verify(&c, &id, 0).unwrap().fibers_ok);
        let x = MeetSemilattice::power_set(2);
        // swapping the two points
        let swap = vec![0, 2, 1, 3];
        let r = semilattice_fiber_verify(&x, &swap, 0).unwrap();
        assert_eq!(r.fixed_above, 1);
        assert!(r.fibers_ok);
        assert!(semilattice_fiber_verify(&x, &[1, 0, 2, 3], 0).is_err());
    }

    #[test]
    fn not_a_semilattice() {
        // two minimal elements below a top
        let leq = vec![
            vec![true, false, true],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(MeetSemilattice::new(leq).is_err());
    }
}
