//! Excursions of length `n` over `S` correspond to rooted plane trees with
//! `n + 1` nodes whose outdegrees lie in `{0} ∪ {b + 1 : b ∈ ups}`.
//!
//! Reading the outdegrees of a tree in preorder and subtracting one gives the
//! steps of the excursion followed by one extra down step, contributed by the
//! last leaf. That step is appended and dropped inside the conversions.
//!
//! Under this map a run of up steps is a chain of leftmost children, so a
//! maximal run of exactly `r` non-down steps is a node that is not a leftmost
//! child and whose leftmost chain down to a leaf has `r` edges.
//!
//! Text form: a node is `(` followed by its children and `)`, so a leaf is
//! `()` and the tree of `1,1,-1,-1` is `((()())())`.
//!
//! All traversals use explicit stacks.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{LatticePath, PathKind, Step};
use crate::stepset::StepSet;

/// A rooted plane tree stored as an arena in preorder. Node `0` is the root;
/// every child has a larger index than its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    /// The tree with a single node.
    pub fn leaf() -> PlaneTree {
        PlaneTree {
            children: vec![Vec::new()],
        }
    }

    /// Builds the tree whose preorder outdegree sequence is `degrees`.
    /// Returns `None` unless the sequence describes exactly one tree.
    pub fn from_preorder_degrees(degrees: &[usize]) -> Option<PlaneTree> {
        let (&root_deg, rest) = degrees.split_first()?;
        let mut children = vec![Vec::with_capacity(root_deg)];
        // (node, children still to attach)
        let mut open = vec![(0usize, root_deg)];
        for &d in rest {
            while let Some(&(_, 0)) = open.last() {
                open.pop();
            }
            let (parent, missing) = open.last_mut()?;
            *missing -= 1;
            let id = children.len();
            let parent = *parent;
            children[parent].push(id);
            children.push(Vec::with_capacity(d));
            open.push((id, d));
        }
        open.iter()
            .all(|&(_, missing)| missing == 0)
            .then_some(PlaneTree { children })
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn outdegree(&self, node: usize) -> usize {
        self.children[node].len()
    }

    /// Outdegrees in preorder.
    pub fn preorder_degrees(&self) -> Vec<usize> {
        self.children.iter().map(Vec::len).collect()
    }

    /// Length of the leftmost chain from every node down to a leaf.
    fn leftmost_depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.node_count()];
        for v in (0..self.node_count()).rev() {
            if let Some(&first) = self.children[v].first() {
                depth[v] = depth[first] + 1;
            }
        }
        depth
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // (node, index of the next child to print)
        let mut stack = vec![(0usize, 0usize)];
        f.write_str("(")?;
        while let Some((node, next)) = stack.last_mut() {
            match self.children[*node].get(*next) {
                Some(&child) => {
                    *next += 1;
                    f.write_str("(")?;
                    stack.push((child, 0));
                }
                None => {
                    f.write_str(")")?;
                    stack.pop();
                }
            }
        }
        Ok(())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(text: &str) -> Result<PlaneTree> {
        let bad = |detail: &str| Error::Syntax {
            what: "tree",
            detail: detail.to_string(),
        };
        let mut children: Vec<Vec<usize>> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        let mut closed_root = false;
        for ch in text.chars().filter(|c| !c.is_whitespace()) {
            if closed_root {
                return Err(bad("trailing input after the root"));
            }
            match ch {
                '(' => {
                    let id = children.len();
                    children.push(Vec::new());
                    if let Some(&parent) = open.last() {
                        children[parent].push(id);
                    }
                    open.push(id);
                }
                ')' => {
                    open.pop().ok_or_else(|| bad("unbalanced ')'"))?;
                    closed_root = open.is_empty();
                }
                other => return Err(bad(&format!("unexpected character {other:?}"))),
            }
        }
        if !closed_root {
            return Err(bad(if children.is_empty() {
                "empty input"
            } else {
                "unbalanced '('"
            }));
        }
        Ok(PlaneTree { children })
    }
}

/// The tree of an excursion over `s`.
pub fn path_to_tree(s: &StepSet, path: &LatticePath) -> Result<PlaneTree> {
    if path.kind != PathKind::Excursion || path.validate(s).is_err() {
        return Err(Error::NotAnExcursion);
    }
    let degrees: Vec<usize> = path
        .steps
        .iter()
        .map(|step| (step.height() + 1) as usize)
        .chain(std::iter::once(0))
        .collect();
    PlaneTree::from_preorder_degrees(&degrees).ok_or(Error::NotAnExcursion)
}

/// The excursion over `s` of a tree, inverse of [`path_to_tree`].
pub fn tree_to_path(s: &StepSet, tree: &PlaneTree) -> Result<LatticePath> {
    let degrees = tree.preorder_degrees();
    let mut steps = Vec::with_capacity(degrees.len() - 1);
    for &d in &degrees[..degrees.len() - 1] {
        steps.push(match d {
            0 => Step::Down,
            d if s.ups().contains(&((d - 1) as u32)) => Step::Up((d - 1) as u32),
            d => return Err(Error::IllegalOutdegree(d)),
        });
    }
    // In preorder the last node is always a leaf.
    debug_assert_eq!(degrees.last(), Some(&0));
    Ok(LatticePath {
        kind: PathKind::Excursion,
        steps,
    })
}

/// Number of nodes that are not a leftmost child and whose leftmost chain to
/// a leaf has exactly `r` edges; the root counts as not a leftmost child.
pub fn tree_ascent_count(tree: &PlaneTree, r: usize) -> Result<usize> {
    if r == 0 {
        return Err(Error::ZeroAscentLength);
    }
    let depth = tree.leftmost_depths();
    let mut leftmost = vec![false; tree.node_count()];
    for kids in &tree.children {
        if let Some(&first) = kids.first() {
            leftmost[first] = true;
        }
    }
    Ok((0..tree.node_count())
        .filter(|&v| !leftmost[v] && depth[v] == r)
        .count())
}
