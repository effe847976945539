//! Misra–Gries edge colouring with at most `Δ + 1` colours.
//!
//! Used as the certified upper end of every chromatic-index bracket.

use crate::colouring::EdgeColouring;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct State<'g> {
    g: &'g Graph,
    colour: Vec<u32>,
    /// `at[v][c]`: neighbour joined to `v` by an edge of colour `c`.
    at: Vec<Vec<usize>>,
}

impl State<'_> {
    fn is_free(&self, v: usize, c: u32) -> bool {
        self.at[v][c as usize] == NONE
    }

    fn edge(&self, a: usize, b: usize) -> usize {
        self.g.edge_index(a, b).expect("edge")
    }

    fn uncolour(&mut self, a: usize, b: usize) {
        let e = self.edge(a, b);
        let c = self.colour[e] as usize;
        if c != 0 {
            self.at[a][c] = NONE;
            self.at[b][c] = NONE;
            self.colour[e] = 0;
        }
    }

    fn paint(&mut self, a: usize, b: usize, c: u32) {
        let e = self.edge(a, b);
        debug_assert_eq!(self.colour[e], 0);
        self.colour[e] = c;
        self.at[a][c as usize] = b;
        self.at[b][c as usize] = a;
    }
}

pub fn misra_gries(g: &Graph) -> EdgeColouring {
    let palette = g.max_degree() as u32 + 1;
    let mut st = State {
        g,
        colour: vec![0; g.size()],
        at: vec![vec![NONE; palette as usize + 1]; g.order()],
    };
    for e in 0..g.size() {
        let (u, v) = g.edge(e);
        let fan = maximal_fan(&st, u, v);
        let c = (1..=palette)
            .find(|&c| st.is_free(u, c))
            .expect("u has a free colour");
        let d = (1..=palette)
            .find(|&d| st.is_free(*fan.last().unwrap(), d))
            .expect("fan tip has a free colour");
        if c != d {
            invert_path(&mut st, u, c, d);
        }
        // Longest prefix of the fan that is still a fan after the inversion.
        let mut valid = 1;
        while valid < fan.len() {
            let ce = st.colour[st.edge(u, fan[valid])];
            if ce == 0 || !st.is_free(fan[valid - 1], ce) {
                break;
            }
            valid += 1;
        }
        let w = (0..valid)
            .find(|&i| st.is_free(fan[i], d))
            .expect("fan prefix with d free");
        for i in 0..w {
            let next = st.colour[st.edge(u, fan[i + 1])];
            st.uncolour(u, fan[i + 1]);
            st.paint(u, fan[i], next);
        }
        st.paint(u, fan[w], d);
    }
    EdgeColouring::new(st.colour, palette).expect("every edge coloured within Δ+1")
}

fn maximal_fan(st: &State<'_>, u: usize, v: usize) -> Vec<usize> {
    let mut fan = vec![v];
    let mut in_fan = vec![false; st.g.order()];
    in_fan[v] = true;
    loop {
        let last = *fan.last().unwrap();
        let next = st.g.incident(u).iter().find(|&&(x, ex)| {
            let cx = st.colour[ex];
            !in_fan[x] && cx != 0 && st.is_free(last, cx)
        });
        match next {
            Some(&(x, _)) => {
                fan.push(x);
                in_fan[x] = true;
            }
            None => return fan,
        }
    }
}

/// Swaps colours `c` and `d` along the maximal `d/c` alternating path from `u`.
fn invert_path(st: &mut State<'_>, u: usize, c: u32, d: u32) {
    let mut path = Vec::new();
    let (mut x, mut col) = (u, d);
    loop {
        let y = st.at[x][col as usize];
        if y == NONE {
            break;
        }
        path.push((x, y, col));
        x = y;
        col = if col == d { c } else { d };
    }
    for &(a, b, _) in &path {
        st.uncolour(a, b);
    }
    for &(a, b, old) in &path {
        st.paint(a, b, if old == c { d } else { c });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_proper;
    use crate::graph::{connected_catalogue, FamilySpec};

    #[test]
    fn proper_within_delta_plus_one_on_catalogue() {
        for n in 2..=7 {
            for g in connected_catalogue(n) {
                let c = misra_gries(&g);
                assert!(is_proper(&g, &c).unwrap().proper);
                assert!(c.palette() as usize <= g.max_degree() + 1);
            }
        }
    }

    #[test]
    fn named_graphs() {
        for s in [
            "petersen",
            "complete:9",
            "g_kt:3,3",
            "clique_product:3,4",
            "wheel:11",
        ] {
            let g = s.parse::<FamilySpec>().unwrap().generate().unwrap();
            let c = misra_gries(&g);
            assert!(is_proper(&g, &c).unwrap().proper, "{s}");
        }
    }
}
