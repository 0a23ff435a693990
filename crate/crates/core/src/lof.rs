//! The primary arithmetic of marks: parsing, calling/crossing reduction,
//! a random-order confluence probe, the Boolean reading, and the bridge from
//! the re-entering mark to the period-two iterants `e` and `η`.
//!
//! Text syntax: `(` `)` enclose, juxtaposition is a forest, letters are
//! variables (one letter, optionally followed by digits), `*` is the empty expression and may appear anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::RelationCheck;
use crate::error::{Error, Result};
use crate::iterant::{vect2, IterantElement};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub enum Node {
    Mark(MarkExpr),
    Var(String),
}

/// A forest of marks. Equality ignores sibling order at every level.
#[derive(Debug, Clone, Default)]
pub struct MarkExpr {
    pub children: Vec<Node>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Marked,
    Unmarked,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Value::Marked => "marked",
            Value::Unmarked => "unmarked",
        })
    }
}

impl Node {
    fn canonical(&self) -> String {
        match self {
            Node::Mark(inner) => format!("({})", inner.canonical()),
            Node::Var(name) => name.clone(),
        }
    }

    fn is_empty_mark(&self) -> bool {
        matches!(self, Node::Mark(m) if m.children.is_empty())
    }
}

impl MarkExpr {
    pub fn empty() -> Self {
        MarkExpr::default()
    }

    /// A single mark around `inner`.
    pub fn mark(inner: MarkExpr) -> Self {
        MarkExpr {
            children: vec![Node::Mark(inner)],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut stack: Vec<(usize, Vec<Node>)> = vec![(0, Vec::new())];
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                '(' => stack.push((i, Vec::new())),
                ')' => {
                    if stack.len() == 1 {
                        return Err(Error::Unbalanced { pos: i });
                    }
                    let (_, children) = stack.pop().expect("checked above");
                    stack
                        .last_mut()
                        .expect("root frame")
                        .1
                        .push(Node::Mark(MarkExpr { children }));
                }
                '*' => {}
                c if c.is_whitespace() => {}
                c if c.is_alphabetic() => {
                    let start = i;
                    while i + 1 < chars.len()
                        && (chars[i + 1].is_ascii_digit() || chars[i + 1] == '_')
                    {
                        i += 1;
                    }
                    let name: String = chars[start..=i].iter().collect();
                    stack
                        .last_mut()
                        .expect("root frame")
                        .1
                        .push(Node::Var(name));
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected `{other}` at position {i}"
                    )))
                }
            }
            i += 1;
        }
        if stack.len() > 1 {
            return Err(Error::Unbalanced {
                pos: stack.last().expect("non-empty").0,
            });
        }
        let (_, children) = stack.pop().expect("root frame");
        Ok(MarkExpr { children })
    }

    /// Sorted, order-free rendering used for equality.
    pub fn canonical(&self) -> String {
        let mut parts: Vec<String> = self.children.iter().map(Node::canonical).collect();
        parts.sort();
        parts.concat()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn mark_count(&self) -> usize {
        self.children
            .iter()
            .map(|n| match n {
                Node::Mark(m) => 1 + m.mark_count(),
                Node::Var(_) => 0,
            })
            .sum()
    }

    pub fn depth(&self) -> usize {
        self.children
            .iter()
            .map(|n| match n {
                Node::Mark(m) => 1 + m.depth(),
                Node::Var(_) => 0,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        for n in &self.children {
            match n {
                Node::Mark(m) => m.collect_vars(out),
                Node::Var(v) => out.push(v.clone()),
            }
        }
    }

    /// `Some` once the expression is a lone empty mark or nothing at all.
    pub fn value(&self) -> Option<Value> {
        match self.children.as_slice() {
            [] => Some(Value::Unmarked),
            [only] if only.is_empty_mark() => Some(Value::Marked),
            _ => None,
        }
    }

    fn forest_at_mut(&mut self, path: &[usize]) -> &mut MarkExpr {
        let mut here = self;
        for &i in path {
            match &mut here.children[i] {
                Node::Mark(m) => here = m,
                Node::Var(_) => unreachable!("paths only pass through marks"),
            }
        }
        here
    }

    /// Random forest with at most `width` marks per level and `depth` levels.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, depth: usize, width: usize) -> Self {
        let count = rng.gen_range(0..=width);
        let children = (0..count)
            .map(|_| {
                let inner = if depth > 1 {
                    MarkExpr::random(rng, depth - 1, width)
                } else {
                    MarkExpr::empty()
                };
                Node::Mark(inner)
            })
            .collect();
        MarkExpr { children }
    }
}

impl PartialEq for MarkExpr {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for MarkExpr {}

impl std::str::FromStr for MarkExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MarkExpr::parse(s)
    }
}

fn write_forest(f: &mut fmt::Formatter<'_>, e: &MarkExpr) -> fmt::Result {
    for n in &e.children {
        match n {
            Node::Mark(m) => {
                f.write_str("(")?;
                write_forest(f, m)?;
                f.write_str(")")?;
            }
            Node::Var(v) => f.write_str(v)?,
        }
    }
    Ok(())
}

impl fmt::Display for MarkExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.children.is_empty() {
            return f.write_str("*");
        }
        write_forest(f, self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Calling,
    Crossing,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Calling => "calling",
            Rule::Crossing => "crossing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Redex {
    /// Two empty marks side by side in the forest at `path`.
    Calling {
        path: Vec<usize>,
        keep: usize,
        drop: usize,
    },
    /// The mark at `path` holds a single empty mark.
    Crossing { path: Vec<usize> },
}

impl Redex {
    fn rule(&self) -> Rule {
        match self {
            Redex::Calling { .. } => Rule::Calling,
            Redex::Crossing { .. } => Rule::Crossing,
        }
    }

    /// Depth of the innermost mark the rewrite consumes.
    fn depth(&self) -> usize {
        match self {
            Redex::Calling { path, .. } | Redex::Crossing { path } => path.len() + 1,
        }
    }

    fn location(&self) -> String {
        let path = match self {
            Redex::Calling { path, drop, .. } => {
                let mut p = path.clone();
                p.push(*drop);
                p
            }
            Redex::Crossing { path } => path.clone(),
        };
        let mut s = String::from("/");
        s.push_str(
            &path
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join("/"),
        );
        s
    }

    fn apply(&self, e: &mut MarkExpr) {
        match self {
            Redex::Calling { path, drop, .. } => {
                e.forest_at_mut(path).children.remove(*drop);
            }
            Redex::Crossing { path } => {
                let (last, parent) = path.split_last().expect("a crossed mark has a position");
                e.forest_at_mut(parent).children.remove(*last);
            }
        }
    }
}

fn redexes(e: &MarkExpr) -> Vec<Redex> {
    let mut out = Vec::new();
    collect_redexes(e, &mut Vec::new(), &mut out);
    out
}

fn collect_redexes(forest: &MarkExpr, path: &mut Vec<usize>, out: &mut Vec<Redex>) {
    let empties: Vec<usize> = forest
        .children
        .iter()
        .enumerate()
        .filter(|(_, n)| n.is_empty_mark())
        .map(|(i, _)| i)
        .collect();
    for pair in empties.windows(2) {
        out.push(Redex::Calling {
            path: path.clone(),
            keep: pair[0],
            drop: pair[1],
        });
    }
    for (i, n) in forest.children.iter().enumerate() {
        if let Node::Mark(m) = n {
            path.push(i);
            if m.children.len() == 1 && m.children[0].is_empty_mark() {
                out.push(Redex::Crossing { path: path.clone() });
            }
            collect_redexes(m, path, out);
            path.pop();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub location: String,
    pub before: String,
    pub after: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub value: Value,
    pub trace: Vec<TraceStep>,
}

fn require_closed(e: &MarkExpr) -> Result<()> {
    match e.variables().into_iter().next() {
        Some(v) => Err(Error::UnboundVariable(v)),
        None => Ok(()),
    }
}

fn reduce_by<F>(e: &MarkExpr, record: bool, mut choose: F) -> Result<Reduction>
where
    F: FnMut(&[Redex]) -> usize,
{
    require_closed(e)?;
    let mut current = e.clone();
    let mut trace = Vec::new();
    loop {
        if let Some(value) = current.value() {
            return Ok(Reduction { value, trace });
        }
        let options = redexes(&current);
        assert!(
            !options.is_empty(),
            "closed expression {current} has neither value nor redex"
        );
        let pick = &options[choose(&options)];
        let before = if record {
            current.to_string()
        } else {
            String::new()
        };
        let (marks, depth) = (current.mark_count(), current.depth());
        pick.apply(&mut current);
        assert!(
            (current.mark_count(), current.depth()) < (marks, depth),
            "rewrite did not shrink the expression"
        );
        if record {
            trace.push(TraceStep {
                rule: pick.rule(),
                location: pick.location(),
                before,
                after: current.to_string(),
            });
        }
    }
}

/// Deepest-first reduction to a single mark or to nothing.
pub fn reduce(e: &MarkExpr) -> Result<Reduction> {
    reduce_by(e, true, |options| {
        let deepest = options.iter().map(Redex::depth).max().unwrap_or(0);
        options
            .iter()
            .position(|r| r.depth() == deepest)
            .expect("non-empty")
    })
}

/// Reduction applying a uniformly random available rewrite at each step.
/// The returned trace is empty.
pub fn reduce_random<R: Rng + ?Sized>(e: &MarkExpr, rng: &mut R) -> Result<Reduction> {
    reduce_by(e, false, |options| rng.gen_range(0..options.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub expression: String,
    pub expected: Value,
    pub trials: usize,
    pub agreeing: usize,
}

impl ConfluenceReport {
    pub fn all_agree(&self) -> bool {
        self.agreeing == self.trials
    }
}

pub fn confluence_probe(e: &MarkExpr, trials: usize, seed: u64) -> Result<ConfluenceReport> {
    let expected = reduce(e)?.value;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreeing = 0;
    for _ in 0..trials {
        if reduce_random(e, &mut rng)?.value == expected {
            agreeing += 1;
        }
    }
    Ok(ConfluenceReport {
        expression: e.to_string(),
        expected,
        trials,
        agreeing,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub expressions: usize,
    pub max_depth: usize,
    pub max_width: usize,
    pub trials_each: usize,
    pub disagreements: Vec<String>,
}

impl FuzzReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Confluence over `count` random expressions.
pub fn confluence_fuzz(
    count: usize,
    max_depth: usize,
    max_width: usize,
    trials_each: usize,
    seed: u64,
) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = Vec::new();
    for _ in 0..count {
        let depth = rng.gen_range(1..=max_depth.max(1));
        let e = MarkExpr::random(&mut rng, depth, max_width);
        let probe_seed = rng.gen();
        let report =
            confluence_probe(&e, trials_each, probe_seed).expect("random forests are closed");
        if !report.all_agree() {
            disagreements.push(report.expression);
        }
    }
    FuzzReport {
        expressions: count,
        max_depth,
        max_width,
        trials_each,
        disagreements,
    }
}

/// Marked ↦ true, enclosure ↦ not, juxtaposition ↦ or.
pub fn eval_logic(e: &MarkExpr, assignment: &BTreeMap<String, bool>) -> Result<bool> {
    let mut any = false;
    for n in &e.children {
        let v = match n {
            Node::Mark(m) => !eval_logic(m, assignment)?,
            Node::Var(name) => *assignment
                .get(name)
                .ok_or_else(|| Error::UnboundVariable(name.clone()))?,
        };
        any |= v;
    }
    Ok(any)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    True,
    False,
    Var(String),
    Not(Box<Formula>),
    Or(Vec<Formula>),
    And(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn eval(&self, assignment: &BTreeMap<String, bool>) -> Result<bool> {
        Ok(match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Var(v) => *assignment
                .get(v)
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?,
            Formula::Not(a) => !a.eval(assignment)?,
            Formula::Or(xs) => {
                let mut any = false;
                for x in xs {
                    any |= x.eval(assignment)?;
                }
                any
            }
            Formula::And(xs) => {
                let mut all = true;
                for x in xs {
                    all &= x.eval(assignment)?;
                }
                all
            }
            Formula::Implies(a, b) => !a.eval(assignment)? || b.eval(assignment)?,
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, xs: &[Formula], op: &str| -> fmt::Result {
            f.write_str("(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")
        };
        match self {
            Formula::True => f.write_str("T"),
            Formula::False => f.write_str("F"),
            Formula::Var(v) => f.write_str(v),
            Formula::Not(a) => write!(f, "~{a}"),
            Formula::Or(xs) => join(f, xs, "∨"),
            Formula::And(xs) => join(f, xs, "∧"),
            Formula::Implies(a, b) => write!(f, "({a} ⇒ {b})"),
        }
    }
}

/// A mark with content that is not the conjunction pattern.
fn is_negation(n: &Node) -> bool {
    match n {
        Node::Mark(m) => !m.children.is_empty() && !is_conjunction(m),
        Node::Var(_) => false,
    }
}

/// Contents of `((A)(B)...)`: two or more marks and nothing else.
fn is_conjunction(inner: &MarkExpr) -> bool {
    inner.children.len() >= 2 && inner.children.iter().all(|n| matches!(n, Node::Mark(_)))
}

fn translate_node(n: &Node) -> Formula {
    match n {
        Node::Var(v) => Formula::Var(v.clone()),
        Node::Mark(m) if m.children.is_empty() => Formula::True,
        Node::Mark(m) if is_conjunction(m) => Formula::And(
            m.children
                .iter()
                .map(|c| match c {
                    Node::Mark(inner) => translate(inner),
                    Node::Var(_) => unreachable!("conjunction holds marks only"),
                })
                .collect(),
        ),
        Node::Mark(m)
            if m.children.len() == 1
                && matches!(m.children[0], Node::Mark(ref x) if x.children.is_empty()) =>
        {
            Formula::False
        }
        Node::Mark(m) => Formula::Not(Box::new(translate(m))),
    }
}

/// Boolean reading of an expression, recognising conjunction and implication.
pub fn translate(e: &MarkExpr) -> Formula {
    match e.children.as_slice() {
        [] => Formula::False,
        [only] => translate_node(only),
        [a, b] if is_negation(a) != is_negation(b) => {
            let (neg, other) = if is_negation(a) { (a, b) } else { (b, a) };
            let Node::Mark(inner) = neg else {
                unreachable!("negations are marks")
            };
            Formula::Implies(Box::new(translate(inner)), Box::new(translate_node(other)))
        }
        many => Formula::Or(many.iter().map(translate_node).collect()),
    }
}

pub fn assignments(vars: &[String]) -> Vec<BTreeMap<String, bool>> {
    (0..1u32 << vars.len())
        .map(|bits| {
            vars.iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), bits >> i & 1 == 1))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruthRow {
    pub pattern: String,
    pub connective: String,
    pub formula: String,
    pub pass: bool,
}

/// The translation table checked on every assignment of `A` and `B`.
pub fn truth_table_check() -> Vec<TruthRow> {
    type Connective = fn(bool, bool) -> bool;
    let table: [(&str, &str, Connective); 7] = [
        ("()", "T", |_, _| true),
        ("(())", "F", |_, _| false),
        ("(A)", "~A", |a, _| !a),
        ("AB", "A ∨ B", |a, b| a || b),
        ("((A)(B))", "A ∧ B", |a, b| a && b),
        ("(A)B", "A ⇒ B", |a, b| !a || b),
        ("((A))", "A", |a, _| a),
    ];
    let vars = ["A".to_string(), "B".to_string()];
    table
        .iter()
        .map(|(pattern, connective, truth)| {
            let e = MarkExpr::parse(pattern).expect("table patterns parse");
            let formula = translate(&e);
            let pass = assignments(&vars).iter().all(|asg| {
                let want = truth(asg["A"], asg["B"]);
                eval_logic(&e, asg).ok() == Some(want) && formula.eval(asg).ok() == Some(want)
            });
            TruthRow {
                pattern: pattern.to_string(),
                connective: connective.to_string(),
                formula: formula.to_string(),
                pass,
            }
        })
        .collect()
}

/// Values of `F^n(nothing)` for `F(X) = (X)`, n = 1..=steps.
pub fn reentry_unfolding(steps: usize) -> Vec<Value> {
    let mut e = MarkExpr::empty();
    (0..steps)
        .map(|_| {
            e = MarkExpr::mark(std::mem::take(&mut e));
            reduce(&e).expect("closed").value
        })
        .collect()
}

/// `e = [1, -1]` and `η` with the relations of a Majorana pair, plus the
/// reading of the re-entering mark's oscillation as `e` and its shift.
pub fn majorana_bridge() -> Vec<RelationCheck> {
    let a = vect2();
    let one = IterantElement::one(&a);
    let e = IterantElement::term(&a, 0, vec![Scalar::one(), Scalar::int(-1)]).expect("degree 2");
    let eta = IterantElement::shift(&a, 1);
    let mul = |x: &IterantElement, y: &IterantElement| x.try_mul(y).expect("same algebra");

    let wave: Vec<Scalar> = reentry_unfolding(2)
        .iter()
        .map(|v| match v {
            Value::Marked => Scalar::one(),
            Value::Unmarked => Scalar::int(-1),
        })
        .collect();
    let shifted = mul(&mul(&eta, &e), &eta);

    let check = |name: &str, pass: bool| RelationCheck {
        check: name.to_string(),
        pass,
    };
    vec![
        check("e^2 = 1", mul(&e, &e) == one),
        check("eta^2 = 1", mul(&eta, &eta) == one),
        check("e eta = -eta e", mul(&e, &eta) == mul(&eta, &e).neg()),
        check("reentry reads as e", e.coeff(0) == wave),
        check("eta e eta = -e", shifted == e.neg()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, ProptestConfig};

    const WORKED: &str = "(((()())())())()";

    fn p(s: &str) -> MarkExpr {
        MarkExpr::parse(s).unwrap()
    }

    #[test]
    fn parse_shapes() {
        assert_eq!(p("()").mark_count(), 1);
        assert_eq!(p("(())").depth(), 2);
        assert_eq!(p("*"), MarkExpr::empty());
        assert_eq!(p(" ( * ) "), p("()"));
        assert_eq!(p(WORKED).depth(), 4);
        assert_eq!(p("((( (()()) () )) ()) ()").depth(), 5);
        assert_eq!(p(WORKED).to_string(), WORKED);
    }

    #[test]
    fn unbalanced_positions() {
        assert_eq!(MarkExpr::parse("())"), Err(Error::Unbalanced { pos: 2 }));
        assert_eq!(MarkExpr::parse("(()"), Err(Error::Unbalanced { pos: 0 }));
        assert!(matches!(MarkExpr::parse("(#)"), Err(Error::Parse(_))));
    }

    #[test]
    fn sibling_order_is_ignored() {
        assert_eq!(p("(())()"), p("()(())"));
        assert_ne!(p("(())"), p("()()"));
    }

    #[test]
    fn worked_example_chain() {
        let r = reduce(&p(WORKED)).unwrap();
        assert_eq!(r.value, Value::Marked);
        let afters: Vec<&str> = r.trace.iter().map(|s| s.after.as_str()).collect();
        assert_eq!(afters, ["(((())())())()", "((())())()", "(())()", "()"]);
        let rules: Vec<Rule> = r.trace.iter().map(|s| s.rule).collect();
        assert_eq!(
            rules,
            [
                Rule::Calling,
                Rule::Crossing,
                Rule::Crossing,
                Rule::Crossing
            ]
        );
    }

    #[test]
    fn laws() {
        assert_eq!(reduce(&p("(())")).unwrap().value, Value::Unmarked);
        assert_eq!(reduce(&p("()()")).unwrap().value, Value::Marked);
        assert_eq!(reduce(&p("")).unwrap().value, Value::Unmarked);
        assert_eq!(reduce(&p("(())(())")).unwrap().value, Value::Unmarked);
        assert_eq!(reduce(&p("(())")).unwrap().trace[0].rule, Rule::Crossing);
        assert_eq!(reduce(&p("()()")).unwrap().trace[0].rule, Rule::Calling);
    }

    #[test]
    fn variables_block_reduction() {
        assert_eq!(reduce(&p("(A)")), Err(Error::UnboundVariable("A".into())));
    }

    #[test]
    fn confluence_examples() {
        let empty = confluence_probe(&MarkExpr::empty(), 5, 1).unwrap();
        assert!(empty.all_agree());
        assert_eq!(empty.expected, Value::Unmarked);
        let pair = confluence_probe(&p("(())(())"), 50, 2).unwrap();
        assert!(pair.all_agree());
        assert_eq!(pair.expected, Value::Unmarked);
        assert!(confluence_fuzz(200, 6, 4, 5, 11).all_agree());
    }

    #[test]
    fn logic_table() {
        for row in truth_table_check() {
            assert!(row.pass, "{row:?}");
        }
        let asg: BTreeMap<String, bool> = [("A".into(), true), ("B".into(), false)].into();
        assert!(!eval_logic(&p("(A)B"), &asg).unwrap());
        assert_eq!(translate(&p("(A)B")).to_string(), "(A ⇒ B)");
        assert_eq!(translate(&p("((A)(B))")).to_string(), "(A ∧ B)");
        assert_eq!(
            eval_logic(&p("(C)"), &asg),
            Err(Error::UnboundVariable("C".into()))
        );
    }

    #[test]
    fn bridge() {
        for c in majorana_bridge() {
            assert!(c.pass, "{}", c.check);
        }
        assert_eq!(
            reentry_unfolding(4),
            [
                Value::Marked,
                Value::Unmarked,
                Value::Marked,
                Value::Unmarked
            ]
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn random_orders_agree(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let e = MarkExpr::random(&mut rng, 6, 4);
            prop_assert!(confluence_probe(&e, 8, seed).unwrap().all_agree());
        }

        #[test]
        fn logic_matches_reduction(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let e = MarkExpr::random(&mut rng, 5, 3);
            let marked = eval_logic(&e, &BTreeMap::new()).unwrap();
            prop_assert_eq!(marked, reduce(&e).unwrap().value == Value::Marked);
            prop_assert_eq!(translate(&e).eval(&BTreeMap::new()).unwrap(), marked);
        }

        #[test]
        fn display_roundtrips(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let e = MarkExpr::random(&mut rng, 5, 3);
            prop_assert_eq!(MarkExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
