use std::fmt::Write;

use conceptnav_core::fca::{ConceptLattice, FormalContext};
use conceptnav_core::{ResultSet, TreeNode};

/// Indented outline of the tree, then one line of node counts per level.
pub fn tree_text(rs: &ResultSet, root: &TreeNode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "query: {} ({} results, {})", rs.query, rs.len(), rs.source);
    root.walk(&mut |n| {
        let _ = write!(out, "{}{} ({})", "  ".repeat(n.path.len()), n.label, n.count);
        if !n.aliases.is_empty() {
            let _ = write!(out, " [also: {}]", n.aliases.join(", "));
        }
        out.push('\n');
    });
    for (depth, counts) in root.level_counts().iter().enumerate() {
        let counts: Vec<String> = counts.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "level {depth}: {}", counts.join(" "));
    }
    out
}

pub fn lattice_text(ctx: &FormalContext, lattice: &ConceptLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} objects, {} attributes, {} concepts, {} covering edges",
        ctx.object_count(),
        ctx.attribute_count(),
        lattice.len(),
        lattice.covers().len()
    );
    for (i, c) in lattice.concepts().iter().enumerate() {
        let extent: Vec<String> = c.extent.iter().map(|g| ctx.objects()[g].to_string()).collect();
        let intent: Vec<&str> = c.intent.iter().map(|m| ctx.attributes()[m].as_str()).collect();
        let _ = writeln!(out, "{i:>4}  {{{}}}  {{{}}}", extent.join(", "), intent.join(", "));
    }
    out
}
