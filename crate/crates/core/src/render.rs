//! Human-readable renderings: Graphviz DOT for diamonds and text Ferrers
//! graphs for overpartitions.

use crate::diamonds::Diamond;
use crate::types::Overpartition;

/// Renders the order structure of a diamond as a Graphviz digraph. Nodes are
/// the entries pi_1 .. pi_{t(2k+1)+1}; an edge a -> b asserts a >= b. Within
/// each building block the head dominates the first pair, each pair
/// dominates the next, and the last pair dominates the next block's head.
pub fn diamond_to_dot(d: &Diamond) -> String {
    let k = d.k();
    let block = 2 * k + 1;
    let t = d.t();
    let entries = d.entries();
    let mut out = String::new();
    out.push_str("digraph diamond {\n");
    out.push_str("  rankdir=LR;\n  node [shape=circle];\n");
    for (idx, &v) in entries.iter().enumerate() {
        out.push_str(&format!(
            "  p{} [label=\"{}\", xlabel=\"pi{}\"];\n",
            idx + 1,
            v,
            idx + 1
        ));
    }
    for b in 0..t {
        let base = b * block + 1; // 1-based index of the block head
        // groups of 1-based node indices along the chain
        let mut groups: Vec<Vec<usize>> = vec![vec![base]];
        for pair in 0..k {
            groups.push(vec![base + 1 + 2 * pair, base + 2 + 2 * pair]);
        }
        groups.push(vec![base + block]);
        for w in groups.windows(2) {
            for &a in &w[0] {
                for &bn in &w[1] {
                    out.push_str(&format!("  p{} -> p{};\n", a, bn));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Renders the Ferrers graph of an overpartition as text, one row per part.
/// Ordinary cells print as `o`; the final cell of an overlined part prints
/// as `*`.
pub fn overpartition_ferrers(p: &Overpartition) -> String {
    let mut out = String::new();
    for (i, &part) in p.parts().iter().enumerate() {
        let mut row = String::new();
        for c in 1..=part {
            if c < part {
                row.push_str("o ");
            } else if p.marks()[i] {
                row.push('*');
            } else {
                row.push('o');
            }
        }
        row.push('\n');
        out.push_str(&row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_contains_all_nodes_and_chain_edges() {
        let d = Diamond::new(vec![2, 1, 2, 1, 1, 0, 0], 1).unwrap();
        let dot = diamond_to_dot(&d);
        assert!(dot.starts_with("digraph diamond {"));
        for i in 1..=7 {
            assert!(dot.contains(&format!("p{} [", i)), "missing node {i}");
        }
        // head of block 1 dominates both members of its pair
        assert!(dot.contains("p1 -> p2;"));
        assert!(dot.contains("p1 -> p3;"));
        // the pair dominates the next head
        assert!(dot.contains("p2 -> p4;"));
        assert!(dot.contains("p3 -> p4;"));
        // block 2
        assert!(dot.contains("p4 -> p5;"));
        assert!(dot.contains("p4 -> p6;"));
        assert!(dot.contains("p5 -> p7;"));
        assert!(dot.contains("p6 -> p7;"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn ferrers_marks_final_cells() {
        let p = Overpartition::new(vec![3, 2, 2], vec![false, false, true]).unwrap();
        let got = overpartition_ferrers(&p);
        assert_eq!(got, "o o o\no o\no *\n");
    }
}
