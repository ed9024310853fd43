//! Decision trees and query algorithms.
//!
//! Large algorithms (like the naive query-everything tree) are represented as
//! *policies* instead of materialized node graphs: anything implementing
//! [`QueryAlgorithm`] can be run against an input, scored for instance
//! complexity, or played against an adversary.

use crate::error::{Error, Result};
use crate::table::TruthTable;

/// Explicit rooted binary query tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecisionTree {
    Leaf(bool),
    Query {
        var: usize,
        zero: Box<DecisionTree>,
        one: Box<DecisionTree>,
    },
}

impl DecisionTree {
    pub fn leaf(value: bool) -> DecisionTree {
        DecisionTree::Leaf(value)
    }

    pub fn query(var: usize, zero: DecisionTree, one: DecisionTree) -> DecisionTree {
        DecisionTree::Query {
            var,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }

    pub fn depth(&self) -> u32 {
        match self {
            DecisionTree::Leaf(_) => 0,
            DecisionTree::Query { zero, one, .. } => 1 + zero.depth().max(one.depth()),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            DecisionTree::Leaf(_) => 1,
            DecisionTree::Query { zero, one, .. } => 1 + zero.node_count() + one.node_count(),
        }
    }

    /// Check structure: all variables below `n`, no variable queried twice
    /// on any root-to-leaf path.
    pub fn validate(&self, n: usize) -> Result<()> {
        fn walk(t: &DecisionTree, n: usize, seen: &mut Vec<bool>) -> Result<()> {
            match t {
                DecisionTree::Leaf(_) => Ok(()),
                DecisionTree::Query { var, zero, one } => {
                    if *var >= n {
                        return Err(Error::MalformedTree(format!(
                            "variable {var} out of range for {n} variables"
                        )));
                    }
                    if seen[*var] {
                        return Err(Error::MalformedTree(format!(
                            "variable {var} queried twice on a path"
                        )));
                    }
                    seen[*var] = true;
                    walk(zero, n, seen)?;
                    walk(one, n, seen)?;
                    seen[*var] = false;
                    Ok(())
                }
            }
        }
        walk(self, n, &mut vec![false; n])
    }

    /// Number of queries made on an input (depth of the reached leaf).
    pub fn queries_on(&self, x: &[bool]) -> u32 {
        let mut node = self;
        let mut queries = 0;
        loop {
            match node {
                DecisionTree::Leaf(_) => return queries,
                DecisionTree::Query { var, zero, one } => {
                    queries += 1;
                    node = if x[*var] { one } else { zero };
                }
            }
        }
    }

    pub fn output_on(&self, x: &[bool]) -> bool {
        let mut node = self;
        loop {
            match node {
                DecisionTree::Leaf(v) => return *v,
                DecisionTree::Query { var, zero, one } => {
                    node = if x[*var] { one } else { zero };
                }
            }
        }
    }

    /// Exhaustive check that every leaf agrees with f.
    pub fn computes(&self, f: &TruthTable) -> bool {
        (0..f.len()).all(|idx| {
            let x = crate::table::point(f.n(), idx);
            self.output_on(&x) == f.value(idx)
        })
    }

    /// Nested text format: `(q <var> <0-subtree> <1-subtree>)` / `(leaf <bit>)`.
    pub fn to_text(&self) -> String {
        match self {
            DecisionTree::Leaf(v) => format!("(leaf {})", *v as u8),
            DecisionTree::Query { var, zero, one } => {
                format!("(q {} {} {})", var, zero.to_text(), one.to_text())
            }
        }
    }

    pub fn parse(text: &str) -> Result<DecisionTree> {
        let spaced = text.replace('(', " ( ").replace(')', " ) ");
        let tokens: Vec<String> = spaced.split_whitespace().map(str::to_owned).collect();
        let mut pos = 0;
        let tree = parse_node(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::ParseTree("trailing tokens".into()));
        }
        Ok(tree)
    }
}

fn parse_node(tokens: &[String], pos: &mut usize) -> Result<DecisionTree> {
    let err = |msg: &str| Error::ParseTree(msg.into());
    let next = |pos: &mut usize| -> Result<&str> {
        let t = tokens
            .get(*pos)
            .ok_or_else(|| Error::ParseTree("unexpected end".into()))?;
        *pos += 1;
        Ok(t.as_str())
    };
    if next(pos)? != "(" {
        return Err(err("expected `(`"));
    }
    let tree = match next(pos)? {
        "leaf" => {
            let bit = match next(pos)? {
                "0" => false,
                "1" => true,
                t => return Err(Error::ParseTree(format!("bad leaf value {t:?}"))),
            };
            DecisionTree::Leaf(bit)
        }
        "q" => {
            let var: usize = next(pos)?
                .parse()
                .map_err(|_| err("bad variable index"))?;
            let zero = parse_node(tokens, pos)?;
            let one = parse_node(tokens, pos)?;
            DecisionTree::query(var, zero, one)
        }
        t => return Err(Error::ParseTree(format!("unexpected token {t:?}"))),
    };
    if next(pos)? != ")" {
        return Err(err("expected `)`"));
    }
    Ok(tree)
}

/// Transcript of one run of a query algorithm.
pub struct AlgRun {
    /// Queried variables with the answers received, in order.
    pub queried: Vec<(usize, bool)>,
    pub output: bool,
}

impl AlgRun {
    pub fn queries(&self) -> u32 {
        self.queried.len() as u32
    }
}

/// A query algorithm: repeatedly picks a variable to query based on answers
/// seen so far, then outputs a bit.
pub trait QueryAlgorithm {
    fn var_count(&self) -> usize;

    /// Run against an answer source.
    fn run(&self, answer: &mut dyn FnMut(usize) -> bool) -> AlgRun;

    /// Run on a concrete input given by its table index.
    fn run_on_index(&self, index: usize) -> AlgRun {
        self.run(&mut |var| index >> var & 1 == 1)
    }
}

impl QueryAlgorithm for DecisionTree {
    fn var_count(&self) -> usize {
        fn max_var(t: &DecisionTree) -> usize {
            match t {
                DecisionTree::Leaf(_) => 0,
                DecisionTree::Query { var, zero, one } => {
                    (*var + 1).max(max_var(zero)).max(max_var(one))
                }
            }
        }
        max_var(self)
    }

    fn run(&self, answer: &mut dyn FnMut(usize) -> bool) -> AlgRun {
        let mut node = self;
        let mut queried = Vec::new();
        loop {
            match node {
                DecisionTree::Leaf(v) => {
                    return AlgRun {
                        queried,
                        output: *v,
                    }
                }
                DecisionTree::Query { var, zero, one } => {
                    let a = answer(*var);
                    queried.push((*var, a));
                    node = if a { one } else { zero };
                }
            }
        }
    }
}

/// The naive algorithm: query x_1..x_n in ascending order, then output f.
/// Represented lazily; materializing it would need ~2^n nodes.
pub struct NaivePolicy {
    f: TruthTable,
}

impl NaivePolicy {
    pub fn new(f: TruthTable) -> NaivePolicy {
        NaivePolicy { f }
    }
}

impl QueryAlgorithm for NaivePolicy {
    fn var_count(&self) -> usize {
        self.f.n()
    }

    fn run(&self, answer: &mut dyn FnMut(usize) -> bool) -> AlgRun {
        let mut queried = Vec::with_capacity(self.f.n());
        let mut index = 0usize;
        for var in 0..self.f.n() {
            let a = answer(var);
            queried.push((var, a));
            if a {
                index |= 1 << var;
            }
        }
        AlgRun {
            queried,
            output: self.f.value(index),
        }
    }
}
