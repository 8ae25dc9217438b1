//! Hopcroft–Karp maximum matching and the König violator.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// Maximum matching of a bipartite graph given by left adjacency lists.
/// Returns `mate_left[u]` (right vertex or `None`).
pub fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let left = adj.len();
    let mut ml = vec![NIL; left];
    let mut mr = vec![NIL; right];
    let mut dist = vec![0usize; left];
    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        let mut found = false;
        for u in 0..left {
            if ml[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mr[v];
                if w == NIL {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..left {
            if ml[u] == NIL {
                augment(u, adj, &mut ml, &mut mr, &mut dist);
            }
        }
    }
    ml.into_iter()
        .map(|v| if v == NIL { None } else { Some(v) })
        .collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    ml: &mut [usize],
    mr: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let w = mr[v];
        if w == NIL || (dist[w] == dist[u] + 1 && augment(w, adj, ml, mr, dist)) {
            ml[u] = v;
            mr[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Given a maximum matching that leaves some left vertex free, the left vertices reachable
/// from the first free one by alternating paths, and their neighbourhood, which is smaller.
pub fn koenig_violator(
    adj: &[Vec<usize>],
    right: usize,
    mate: &[Option<usize>],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let start = mate.iter().position(|m| m.is_none())?;
    let mut mr = vec![NIL; right];
    for (u, m) in mate.iter().enumerate() {
        if let Some(v) = m {
            mr[*v] = u;
        }
    }
    let mut seen_l = vec![false; adj.len()];
    let mut seen_r = vec![false; right];
    let mut queue = VecDeque::from([start]);
    seen_l[start] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if seen_r[v] {
                continue;
            }
            seen_r[v] = true;
            let w = mr[v];
            if w != NIL && !seen_l[w] {
                seen_l[w] = true;
                queue.push_back(w);
            }
        }
    }
    let s: Vec<usize> = (0..adj.len()).filter(|&u| seen_l[u]).collect();
    let n: Vec<usize> = (0..right).filter(|&v| seen_r[v]).collect();
    Some((s, n))
}
