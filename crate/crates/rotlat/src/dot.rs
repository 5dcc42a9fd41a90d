//! Graphviz export: Hasse diagrams of posets, lattices, rotational lattices
//! (elements colored by orbit) and congruence lattices.

use std::fmt::Write;

use crate::congruence::ConLattice;
use crate::lattice::FiniteLattice;
use crate::poset::Poset;
use crate::rotational::RotationalLattice;

const PALETTE: [&str; 10] = [
    "#a6cee3", "#fdbf6f", "#b2df8a", "#fb9a99", "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
    "#ff7f00", "#6a3d9a",
];

fn hasse(
    out: &mut String,
    n: usize,
    covers: &[(usize, usize)],
    heights: &[usize],
    label: impl Fn(usize) -> String,
    fill: impl Fn(usize) -> Option<usize>,
) {
    out.push_str("digraph hasse {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n");
    for v in 0..n {
        match fill(v) {
            Some(color_index) => {
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{}\", style=filled, fillcolor=\"{}\"];",
                    label(v),
                    PALETTE[color_index % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", label(v));
            }
        }
    }
    let max_height = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_height {
        let level: Vec<String> = (0..n)
            .filter(|&v| heights[v] == h)
            .map(|v| v.to_string())
            .collect();
        if level.len() > 1 {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", level.join("; "));
        }
    }
    for &(u, v) in covers {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
}

pub fn poset_dot(p: &Poset) -> String {
    let mut out = String::new();
    hasse(
        &mut out,
        p.size(),
        &p.covers(),
        &p.heights(),
        |v| v.to_string(),
        |_| None,
    );
    out
}

pub fn lattice_dot(l: &FiniteLattice) -> String {
    let mut out = String::new();
    hasse(
        &mut out,
        l.size(),
        &l.covers(),
        &l.heights(),
        |v| v.to_string(),
        |_| None,
    );
    out
}

/// Hasse diagram with elements colored by g-orbit.
pub fn algebra_dot(a: &RotationalLattice) -> String {
    let mut orbit_id = vec![usize::MAX; a.size()];
    let mut next = 0;
    for x in 0..a.size() {
        if orbit_id[x] == usize::MAX {
            for y in a.orbit(x) {
                orbit_id[y] = next;
            }
            next += 1;
        }
    }
    let mut out = String::new();
    hasse(
        &mut out,
        a.size(),
        &a.lattice().covers(),
        &a.lattice().heights(),
        |v| v.to_string(),
        |v| Some(orbit_id[v]),
    );
    out
}

/// Containment Hasse diagram of a congruence lattice; nodes are labeled by
/// their block partition.
pub fn con_dot(con: &ConLattice) -> String {
    let n = con.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in con.upper_covers(i) {
            covers.push((i, j));
        }
    }
    covers.sort_unstable();
    let mut heights = vec![0usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(con.get(i).num_blocks()));
    for &j in &order {
        for &i in &order {
            if i != j && con.leq(i, j) {
                heights[j] = heights[j].max(heights[i] + 1);
            }
        }
    }
    let label = |i: usize| {
        con.get(i)
            .blocks()
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("|")
    };
    let mut out = String::new();
    hasse(&mut out, n, &covers, &heights, label, |_| None);
    out
}
