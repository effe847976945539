//! Unpruned reference decision procedure. Shares nothing with the search
//! engine or the BFS rainbow checker: it enumerates all `k^m` colourings and
//! tests rainbow connectivity by walking every simple path.

use super::Parameter;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest number of colourings the oracle will enumerate.
pub const ORACLE_CAP: u64 = 10_000_000;

pub fn brute_force_oracle(g: &Graph, parameter: Parameter, k: usize) -> Result<bool> {
    let m = g.size();
    let total = (k as u64)
        .checked_pow(m as u32)
        .filter(|&t| t <= ORACLE_CAP);
    if total.is_none() {
        return Err(Error::OracleCap {
            k: k as u32,
            m,
            cap: ORACLE_CAP,
        });
    }
    if m == 0 {
        return Ok(parameter == Parameter::ChiPrime || g.order() <= 1);
    }
    if k == 0 {
        return Ok(false);
    }
    let mut colours = vec![1usize; m];
    loop {
        let proper_ok = parameter == Parameter::Rc || naive_proper(g, &colours);
        let rainbow_ok =
            parameter == Parameter::ChiPrime || (proper_ok && naive_rainbow(g, &colours));
        if proper_ok && rainbow_ok {
            return Ok(true);
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == m {
                return Ok(false);
            }
            colours[i] += 1;
            if colours[i] <= k {
                break;
            }
            colours[i] = 1;
            i += 1;
        }
    }
}

fn naive_proper(g: &Graph, colours: &[usize]) -> bool {
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let touch = a == c || a == d || b == c || b == d;
            if touch && colours[i] == colours[j] {
                return false;
            }
        }
    }
    true
}

fn naive_rainbow(g: &Graph, colours: &[usize]) -> bool {
    let n = g.order();
    let edges = g.edges();
    (0..n).all(|s| {
        (s + 1..n).all(|t| {
            let mut visited = vec![false; n];
            let mut used = Vec::new();
            visited[s] = true;
            simple_rainbow_walk(edges, colours, s, t, &mut visited, &mut used)
        })
    })
}

fn simple_rainbow_walk(
    edges: &[(usize, usize)],
    colours: &[usize],
    at: usize,
    target: usize,
    visited: &mut [bool],
    used: &mut Vec<usize>,
) -> bool {
    if at == target {
        return true;
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        let next = if a == at {
            b
        } else if b == at {
            a
        } else {
            continue;
        };
        if visited[next] || used.contains(&colours[i]) {
            continue;
        }
        visited[next] = true;
        used.push(colours[i]);
        let ok = simple_rainbow_walk(edges, colours, next, target, visited, used);
        used.pop();
        visited[next] = false;
        if ok {
            return true;
        }
    }
    false
}
