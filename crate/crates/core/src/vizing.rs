//! Constructive edge coloring with `Delta + 1` colors via fan rotation
//! and chain inversion (the Misra-Gries variant of Vizing's procedure).

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// A total proper edge coloring of `g` with `k = Delta(g) + 1` colors.
///
/// Edges are processed in lexicographic order and ties are always broken
/// toward the lowest color or vertex index, so the output is a pure
/// function of the graph.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let k = g.max_degree() + 1;
    let mut coloring = EdgeColoring::new(g.n(), k);
    for (u, v) in g.edges() {
        // Each attempt either colors uv or hands back a recolored state;
        // the fan argument guarantees success, the cap is a hard stop for
        // a would-be bug.
        let mut attempts = 0;
        loop {
            match extend(g, coloring, u, v) {
                Ok(done) => {
                    coloring = done;
                    break;
                }
                Err(retry) => {
                    coloring = retry;
                    attempts += 1;
                    assert!(attempts < 64, "fan rotation failed to converge at ({u}, {v})");
                }
            }
        }
        debug_assert!(coloring.check_proper(g).is_ok());
    }
    coloring
}

fn smallest_missing(c: &EdgeColoring, v: usize) -> usize {
    (1..=c.k())
        .find(|&col| c.is_missing(v, col))
        .expect("k = Delta + 1 leaves a color missing at every vertex")
}

/// Maximal fan of `u` starting at `v`: neighbors `v = f0, f1, ...` where
/// the edge `u f_{i+1}` is colored with a color missing at `f_i`.
fn build_fan(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Vec<usize> {
    let mut fan = vec![v];
    loop {
        let last = *fan.last().unwrap();
        let next = g.neighbors(u).iter().copied().find(|&w| {
            !fan.contains(&w)
                && c.color_of(u, w)
                    .map(|col| c.is_missing(last, col))
                    .unwrap_or(false)
        });
        match next {
            Some(w) => fan.push(w),
            None => return fan,
        }
    }
}

/// Color the uncolored edge `uv`, possibly recoloring edges at `u`.
/// On the (theoretically impossible) failure to find a rotatable prefix,
/// returns the partially recolored state for another attempt.
fn extend(g: &Graph, c: EdgeColoring, u: usize, v: usize) -> Result<EdgeColoring, EdgeColoring> {
    let fan = build_fan(g, &c, u, v);
    let free_u = smallest_missing(&c, u);
    let free_last = smallest_missing(&c, *fan.last().unwrap());

    // Invert the (free_u, free_last) chain through u; afterwards free_last
    // is missing at u.
    let c = if free_u == free_last {
        c
    } else {
        c.kempe_swap(u, free_u, free_last)
            .expect("colors are distinct")
    };
    debug_assert!(c.is_missing(u, free_last));

    // Longest fan prefix that is still a fan after the inversion, cut at
    // the first vertex where free_last is missing.
    let mut w = None;
    for (i, &fi) in fan.iter().enumerate() {
        if i > 0 {
            let col = match c.color_of(u, fi) {
                Some(col) => col,
                None => break,
            };
            if !c.is_missing(fan[i - 1], col) {
                break;
            }
        }
        if c.is_missing(fi, free_last) {
            w = Some(i);
            break;
        }
    }
    let w = match w {
        Some(w) => w,
        None => return Err(c),
    };

    // Rotate the prefix: shift each fan edge's color one step toward v,
    // then finish the last edge with free_last.
    let mut c = c;
    for i in 0..w {
        let col = c.color_of(u, fan[i + 1]).unwrap();
        c = c.uncolor_edge(u, fan[i + 1]).unwrap();
        c = c.color_edge(u, fan[i], col).unwrap();
    }
    Ok(c.color_edge(u, fan[w], free_last).unwrap())
}
