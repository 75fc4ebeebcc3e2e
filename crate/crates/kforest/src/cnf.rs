//! CNF compilation of the two coloring-existence queries, DIMACS I/O and a
//! small complete solver.
//!
//! Both encoders use one boolean per (vertex, color) pair. Rainbow
//! constraints become blocks of all-negative clauses, one per injective
//! color assignment to an edge; that turns the hand propagation used in the
//! correctness arguments ("this edge forces color x on vertex v") into plain
//! unit propagation. The solver is deliberately a minimal DPLL with unit
//! propagation: small enough to audit, and external solvers can consume the
//! DIMACS export instead.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::coloring::{Coloring, ColoringError};
use crate::hypergraph::{Hypergraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("{edge} is not an edge")]
    EdgeNotInGraph { edge: VertexSet },
    #[error("color count {t} out of range 1..={n}")]
    ColorCountOutOfRange { t: u32, n: u32 },
    #[error("literal {literal} outside declared variable range 1..={num_vars}")]
    LiteralOutOfRange { literal: i64, num_vars: u32 },
    #[error("clause {index} is empty")]
    EmptyClause { index: usize },
    #[error("clause {index} contains both {var} and its negation")]
    ConflictingLiterals { index: usize, var: u32 },
    #[error("line {line}: malformed DIMACS header {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("missing DIMACS header \"p cnf <vars> <clauses>\"")]
    MissingHeader,
    #[error("line {line}: malformed literal {token:?}")]
    MalformedLiteral { line: usize, token: String },
    #[error("line {line}: clause not terminated by 0")]
    MissingTerminator { line: usize },
    #[error("line {line}: literals after the terminating 0")]
    TrailingLiterals { line: usize },
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("line {line}: malformed variable map comment")]
    BadVarMap { line: usize },
    #[error("variable map assigns variable {var} twice")]
    DuplicateMapVar { var: u32 },
    #[error("variable map assigns (vertex {vertex}, color {color}) twice")]
    DuplicateMapEntry { vertex: u32, color: u32 },
    #[error("model gives vertex {vertex} {count} colors, expected exactly one")]
    AmbiguousVertexColor { vertex: u32, count: usize },
    #[error("model decodes to an invalid coloring: {source}")]
    InvalidColoring {
        #[from]
        source: ColoringError,
    },
    #[error("no variable map entries to decode a coloring from")]
    EmptyVarMap,
}

/// Mapping from (vertex, color) pairs to CNF variable indices, kept with the
/// formula so models can be decoded back into colorings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarMap {
    entries: BTreeMap<(u32, u32), u32>,
}

impl VarMap {
    pub fn empty() -> VarMap {
        VarMap::default()
    }

    /// Dense layout: variable `(v - 1) * t + c` for vertex `v`, color `c`.
    pub fn dense(n: u32, t: u32) -> VarMap {
        let mut entries = BTreeMap::new();
        for v in 1..=n {
            for c in 1..=t {
                entries.insert((v, c), (v - 1) * t + c);
            }
        }
        VarMap { entries }
    }

    pub fn var(&self, vertex: u32, color: u32) -> Option<u32> {
        self.entries.get(&(vertex, color)).copied()
    }

    pub fn insert(&mut self, vertex: u32, color: u32, var: u32) -> Result<(), CnfError> {
        if self.entries.values().any(|&existing| existing == var) {
            return Err(CnfError::DuplicateMapVar { var });
        }
        if self.entries.insert((vertex, color), var).is_some() {
            return Err(CnfError::DuplicateMapEntry { vertex, color });
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries as ((vertex, color), var), ordered by vertex then color.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.entries.iter().map(|(&key, &var)| (key, var))
    }
}

/// A propositional formula in conjunctive normal form. Positive literals
/// assert a variable, negative literals its negation; variables are
/// `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
    var_map: VarMap,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>, var_map: VarMap) -> Result<Self, CnfError> {
        for (index, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(CnfError::EmptyClause { index });
            }
            for &lit in clause {
                let var = lit.unsigned_abs();
                if lit == 0 || var > num_vars {
                    return Err(CnfError::LiteralOutOfRange {
                        literal: lit as i64,
                        num_vars,
                    });
                }
                if clause.contains(&-lit) {
                    return Err(CnfError::ConflictingLiterals { index, var });
                }
            }
        }
        for ((_, _), var) in var_map.entries() {
            if var == 0 || var > num_vars {
                return Err(CnfError::LiteralOutOfRange { literal: var as i64, num_vars });
            }
        }
        Ok(CnfFormula { num_vars, clauses, var_map })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn var_map(&self) -> &VarMap {
        &self.var_map
    }

    /// Decodes a total assignment into the coloring it represents.
    pub fn decode(&self, model: &Model) -> Result<Coloring, CnfError> {
        if self.var_map.is_empty() {
            return Err(CnfError::EmptyVarMap);
        }
        let n = self.var_map.entries().map(|((v, _), _)| v).max().unwrap();
        let t = self.var_map.entries().map(|((_, c), _)| c).max().unwrap();
        let mut colors = vec![0u8; n as usize];
        for vertex in 1..=n {
            let chosen: Vec<u32> = (1..=t)
                .filter(|&c| self.var_map.var(vertex, c).is_some_and(|var| model.value(var)))
                .collect();
            if chosen.len() != 1 {
                return Err(CnfError::AmbiguousVertexColor { vertex, count: chosen.len() });
            }
            colors[(vertex - 1) as usize] = chosen[0] as u8;
        }
        Ok(Coloring::new(colors, t)?)
    }
}

/// Satisfiable iff some coloring class has `e` as its unique rainbow edge.
///
/// Variables are `(v - 1) * k + c`. Clause layout, in emission order: unit
/// clauses fixing the i-th vertex of `e` to color `i` (the standard
/// without-loss-of-generality device, which also makes surjectivity
/// automatic), at-least-one and pairwise at-most-one clauses per vertex, and
/// for every other edge one all-negative clause per injective color
/// assignment (`k!` each) forbidding it from going rainbow.
pub fn encode_phi_query(h: &Hypergraph, e: VertexSet) -> Result<CnfFormula, CnfError> {
    if !h.has_edge(e) {
        return Err(CnfError::EdgeNotInGraph { edge: e });
    }
    let n = h.n();
    let k = h.k();
    let map = VarMap::dense(n, k);
    let var = |v: u32, c: u32| map.var(v, c).expect("dense map") as i32;
    let mut clauses = Vec::new();
    for (i, v) in e.vertices().enumerate() {
        clauses.push(vec![var(v, i as u32 + 1)]);
    }
    push_exactly_one_per_vertex(&mut clauses, n, k, &var);
    for &f in h.edges() {
        if f == e {
            continue;
        }
        push_rainbow_forbidding_clauses(&mut clauses, f, k, &var);
    }
    CnfFormula::new(n * k, clauses, map)
}

/// Satisfiable iff a rainbow-free surjective `t`-coloring exists.
///
/// Exactly-one clauses per vertex as above, one at-least-one clause per
/// color for surjectivity, then per edge one all-negative clause per
/// injective assignment of `t` colors to its `k` vertices.
pub fn encode_rainbow_free_query(h: &Hypergraph, t: u32) -> Result<CnfFormula, CnfError> {
    if t < 1 || t > h.n() {
        return Err(CnfError::ColorCountOutOfRange { t, n: h.n() });
    }
    let n = h.n();
    let map = VarMap::dense(n, t);
    let var = |v: u32, c: u32| map.var(v, c).expect("dense map") as i32;
    let mut clauses = Vec::new();
    push_exactly_one_per_vertex(&mut clauses, n, t, &var);
    for c in 1..=t {
        clauses.push((1..=n).map(|v| var(v, c)).collect());
    }
    for &f in h.edges() {
        push_rainbow_forbidding_clauses(&mut clauses, f, t, &var);
    }
    CnfFormula::new(n * t, clauses, map)
}

fn push_exactly_one_per_vertex(
    clauses: &mut Vec<Vec<i32>>,
    n: u32,
    t: u32,
    var: &impl Fn(u32, u32) -> i32,
) {
    for v in 1..=n {
        clauses.push((1..=t).map(|c| var(v, c)).collect());
    }
    // Pairwise at-most-one; quadratic but negligible at t <= 7.
    for v in 1..=n {
        for c1 in 1..=t {
            for c2 in (c1 + 1)..=t {
                clauses.push(vec![-var(v, c1), -var(v, c2)]);
            }
        }
    }
}

fn push_rainbow_forbidding_clauses(
    clauses: &mut Vec<Vec<i32>>,
    edge: VertexSet,
    t: u32,
    var: &impl Fn(u32, u32) -> i32,
) {
    let vertices: Vec<u32> = edge.vertices().collect();
    for assignment in (1..=t).permutations(vertices.len()) {
        clauses.push(
            vertices.iter().zip(&assignment).map(|(&v, &c)| -var(v, c)).collect(),
        );
    }
}

/// A total assignment; `value(var)` for variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    values: Vec<bool>,
}

impl Model {
    pub fn value(&self, var: u32) -> bool {
        self.values[(var - 1) as usize]
    }

    pub fn num_vars(&self) -> u32 {
        self.values.len() as u32
    }

    /// The assignment as signed literals, ascending by variable.
    pub fn literals(&self) -> Vec<i32> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| if v { i as i32 + 1 } else { -(i as i32 + 1) })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Sat(Model),
    Unsat,
    /// The decision budget ran out before an answer; never a wrong verdict.
    BudgetExceeded,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Sat(_))
    }
}

/// Complete DPLL with unit propagation and deterministic branching (lowest
/// unassigned variable, `true` first). Models are total assignments.
pub fn solve(f: &CnfFormula) -> SolveResult {
    solve_with_budget(f, u64::MAX)
}

pub fn solve_with_budget(f: &CnfFormula, max_decisions: u64) -> SolveResult {
    let mut assign: Vec<Option<bool>> = vec![None; f.num_vars as usize];
    let mut budget = max_decisions;
    match dpll(&f.clauses, &mut assign, &mut budget) {
        Verdict::Sat => {
            let values = assign.into_iter().map(|v| v.expect("total on SAT")).collect();
            SolveResult::Sat(Model { values })
        }
        Verdict::Unsat => SolveResult::Unsat,
        Verdict::Budget => SolveResult::BudgetExceeded,
    }
}

enum Verdict {
    Sat,
    Unsat,
    Budget,
}

fn lit_value(assign: &[Option<bool>], lit: i32) -> Option<bool> {
    assign[(lit.unsigned_abs() - 1) as usize].map(|v| if lit > 0 { v } else { !v })
}

fn dpll(clauses: &[Vec<i32>], assign: &mut [Option<bool>], budget: &mut u64) -> Verdict {
    let mut trail: Vec<usize> = Vec::new();
    let undo = |assign: &mut [Option<bool>], trail: &[usize]| {
        for &idx in trail {
            assign[idx] = None;
        }
    };

    // Unit propagation to fixpoint.
    loop {
        let mut progressed = false;
        for clause in clauses {
            let mut satisfied = false;
            let mut unassigned = None;
            let mut unassigned_count = 0;
            for &lit in clause {
                match lit_value(assign, lit) {
                    Some(true) => {
                        satisfied = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        unassigned_count += 1;
                        unassigned = Some(lit);
                    }
                }
            }
            if satisfied {
                continue;
            }
            match (unassigned_count, unassigned) {
                (0, _) => {
                    undo(assign, &trail);
                    return Verdict::Unsat;
                }
                (1, Some(lit)) => {
                    let idx = (lit.unsigned_abs() - 1) as usize;
                    assign[idx] = Some(lit > 0);
                    trail.push(idx);
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            break;
        }
    }

    let next = assign.iter().position(|v| v.is_none());
    let Some(idx) = next else {
        return Verdict::Sat; // total assignment with no conflicting clause
    };
    if *budget == 0 {
        undo(assign, &trail);
        return Verdict::Budget;
    }
    *budget -= 1;
    for value in [true, false] {
        assign[idx] = Some(value);
        match dpll(clauses, assign, budget) {
            Verdict::Sat => return Verdict::Sat,
            Verdict::Unsat => {
                assign[idx] = None;
            }
            Verdict::Budget => {
                assign[idx] = None;
                undo(assign, &trail);
                return Verdict::Budget;
            }
        }
    }
    undo(assign, &trail);
    Verdict::Unsat
}

/// Standard DIMACS CNF with the variable map carried in comment lines of the
/// form `c map v <vertex> <color> <var>`.
pub fn emit_dimacs(f: &CnfFormula) -> String {
    let mut out = String::new();
    for ((vertex, color), var) in f.var_map.entries() {
        writeln!(out, "c map v {vertex} {color} {var}").unwrap();
    }
    writeln!(out, "p cnf {} {}", f.num_vars, f.clauses.len()).unwrap();
    for clause in &f.clauses {
        for lit in clause {
            write!(out, "{lit} ").unwrap();
        }
        writeln!(out, "0").unwrap();
    }
    out
}

/// Parses DIMACS CNF as emitted by [`emit_dimacs`]: one clause per line,
/// each terminated by 0. Plain `c` comments are ignored; `c map v` comments
/// rebuild the variable map.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut var_map = VarMap::empty();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("c") {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.first() == Some(&"map") {
                if fields.len() != 5 || fields[1] != "v" {
                    return Err(CnfError::BadVarMap { line: line_no });
                }
                let parse = |s: &str| s.parse::<u32>().ok().filter(|&v| v > 0);
                match (parse(fields[2]), parse(fields[3]), parse(fields[4])) {
                    (Some(vertex), Some(color), Some(var)) => {
                        var_map.insert(vertex, color, var)?;
                    }
                    _ => return Err(CnfError::BadVarMap { line: line_no }),
                }
            }
            continue;
        }
        if line.starts_with('p') {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = if fields.len() == 4 && fields[0] == "p" && fields[1] == "cnf" {
                fields[2].parse::<u32>().ok().zip(fields[3].parse::<usize>().ok())
            } else {
                None
            };
            match (parsed, header) {
                (Some(h), None) => header = Some(h),
                _ => {
                    return Err(CnfError::MalformedHeader { line: line_no, text: line.to_string() })
                }
            }
            continue;
        }
        if header.is_none() {
            return Err(CnfError::MissingHeader);
        }
        let mut clause = Vec::new();
        let mut terminated = false;
        for token in line.split_whitespace() {
            if terminated {
                return Err(CnfError::TrailingLiterals { line: line_no });
            }
            let lit: i32 = token
                .parse()
                .map_err(|_| CnfError::MalformedLiteral { line: line_no, token: token.to_string() })?;
            if lit == 0 {
                terminated = true;
            } else {
                clause.push(lit);
            }
        }
        if !terminated {
            return Err(CnfError::MissingTerminator { line: line_no });
        }
        if clause.is_empty() {
            return Err(CnfError::EmptyClause { index: clauses.len() });
        }
        clauses.push(clause);
    }
    let (num_vars, declared) = header.ok_or(CnfError::MissingHeader)?;
    if clauses.len() != declared {
        return Err(CnfError::ClauseCountMismatch { declared, found: clauses.len() });
    }
    CnfFormula::new(num_vars, clauses, var_map)
}

/// Reads a solver model from `v` lines (space-separated literals terminated
/// by 0), as printed by standard SAT solvers. Other lines are ignored;
/// unmentioned variables default to false.
pub fn parse_model_lines(text: &str, num_vars: u32) -> Result<Model, CnfError> {
    let mut values = vec![false; num_vars as usize];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let Some(rest) = line.strip_prefix("v ").or(if line == "v" { Some("") } else { None })
        else {
            continue;
        };
        for token in rest.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| CnfError::MalformedLiteral { line: line_no, token: token.to_string() })?;
            if lit == 0 {
                continue;
            }
            let var = lit.unsigned_abs();
            if var > num_vars {
                return Err(CnfError::LiteralOutOfRange { literal: lit as i64, num_vars });
            }
            values[(var - 1) as usize] = lit > 0;
        }
    }
    Ok(Model { values })
}
