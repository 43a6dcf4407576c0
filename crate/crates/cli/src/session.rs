//! The command session: declared variables, named bindings, and the
//! dispatcher for the command language.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};
use startrans_core as core;
use startrans_core::{DirectionSequence, ExponentVector, MonomialIdeal, DEFAULT_MAX_DEPTH};

use crate::doc::IdealDoc;
use crate::parse::{Lexer, Parser};
use crate::render;

#[derive(Debug)]
pub enum CliError {
    Parse {
        pos: usize,
        msg: String,
    },
    Op {
        op: String,
        input: Option<String>,
        source: core::Error,
    },
    Doc(String),
    Usage(String),
    Verify(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { pos, msg } => write!(f, "syntax error at position {pos}: {msg}"),
            CliError::Op { op, input, source } => match input {
                Some(i) => write!(f, "{op}: {source}: {i}"),
                None => write!(f, "{op}: {source}"),
            },
            CliError::Doc(msg) => write!(f, "document error: {msg}"),
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Verify(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn record(&self) -> Value {
        match self {
            CliError::Parse { pos, msg } => json!({
                "error": {"kind": "syntax", "position": pos, "message": msg}
            }),
            CliError::Op { op, input, source } => json!({
                "error": {"kind": "operation", "op": op, "input": input,
                           "message": source.to_string()}
            }),
            CliError::Doc(msg) => json!({"error": {"kind": "document", "message": msg}}),
            CliError::Usage(msg) => json!({"error": {"kind": "usage", "message": msg}}),
            CliError::Verify(msg) => json!({"error": {"kind": "verify", "message": msg}}),
        }
    }
}

/// Result of one command: deterministic text plus a structured record.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub text: String,
    pub record: Value,
}

/// Session state: the ambient dimension, the variable names, named ideal
/// bindings, and the execution options.
pub struct Workspace {
    dim: usize,
    vars: Vec<String>,
    bindings: HashMap<String, MonomialIdeal>,
    pub max_depth: usize,
    pub verify: bool,
}

pub fn default_vars(dim: usize) -> Vec<String> {
    match dim {
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => (1..=dim).map(|i| format!("x{i}")).collect(),
    }
}

const RESERVED: [&str; 6] = ["m", "star", "colon", "cap", "closure", "let"];

impl Workspace {
    pub fn new(dim: usize, vars: Vec<String>) -> Result<Self, CliError> {
        if dim < 2 {
            return Err(CliError::Usage(format!(
                "dimension must be at least 2, got {dim}"
            )));
        }
        if vars.len() != dim {
            return Err(CliError::Usage(format!(
                "{} variable names for dimension {dim}",
                vars.len()
            )));
        }
        for v in &vars {
            if RESERVED.contains(&v.as_str()) {
                return Err(CliError::Usage(format!("'{v}' is a reserved word")));
            }
        }
        let mut distinct = vars.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != vars.len() {
            return Err(CliError::Usage("variable names must be distinct".into()));
        }
        Ok(Self {
            dim,
            vars,
            bindings: HashMap::new(),
            max_depth: DEFAULT_MAX_DEPTH,
            verify: false,
        })
    }

    pub fn with_default_vars(dim: usize) -> Result<Self, CliError> {
        Self::new(dim, default_vars(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn binding(&self, name: &str) -> Option<&MonomialIdeal> {
        self.bindings.get(name)
    }

    fn op<T>(&self, op: &str, input: &MonomialIdeal, r: core::Result<T>) -> Result<T, CliError> {
        r.map_err(|e| CliError::Op {
            op: op.to_string(),
            input: Some(render::ideal(input, &self.vars)),
            source: e,
        })
    }

    fn ideal_json(&self, i: &MonomialIdeal) -> Value {
        serde_json::to_value(IdealDoc::from_ideal(i, &self.vars)).expect("plain data")
    }

    fn seq(&self, dirs: Vec<usize>) -> Result<DirectionSequence, CliError> {
        DirectionSequence::new(self.dim, dirs).map_err(|e| CliError::Op {
            op: "direction sequence".into(),
            input: None,
            source: e,
        })
    }

    fn seq_text(&self, seq: &DirectionSequence) -> String {
        seq.dirs()
            .iter()
            .map(|&j| self.vars[j].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Executes a single command line.
    pub fn run_command(&mut self, line: &str) -> Result<CommandOutput, CliError> {
        let tokens = Lexer::tokenize(line)?;
        let mut p = Parser::new(self, &tokens);
        let word = p.expect_ident("a command")?;
        let out = match word.as_str() {
            "let" => {
                let name = p.expect_ident("a binding name")?;
                if RESERVED.contains(&name.as_str()) || self.var_index(&name).is_some() {
                    return Err(CliError::Usage(format!("'{name}' is not a valid name")));
                }
                p.expect(&crate::parse::Token::Equals, "'='")?;
                let value = p.expr()?;
                self.finish(&mut p)?;
                let text = format!("{name} = {}", render::ideal(&value, &self.vars));
                let record = json!({
                    "command": "let", "name": name, "result": self.ideal_json(&value)
                });
                self.bindings.insert(name, value);
                CommandOutput { text, record }
            }
            "closure" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let c = self.op("closure", &a, core::integral_closure(&a))?;
                if self.verify {
                    self.verify_closure(&a, &c)?;
                }
                self.ideal_output("closure", &[&a], c)
            }
            "complete?" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let v = self.op("complete?", &a, core::is_complete(&a))?;
                self.bool_output("complete?", &[&a], v)
            }
            "order" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                self.int_output("order", &[&a], a.ord())
            }
            "index" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let v = self.op("index", &a, a.index())?;
                self.int_output("index", &[&a], v)
            }
            "mu" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                self.int_output("mu", &[&a], a.mu() as u64)
            }
            "primary?" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                self.bool_output("primary?", &[&a], a.is_m_primary())
            }
            "star" | "prod" | "colon" | "cap" => {
                let a = p.expr()?;
                let b = p.expr()?;
                self.finish(&mut p)?;
                let r = match word.as_str() {
                    "star" => self.op("star", &a, core::star_product(&a, &b))?,
                    "prod" => self.op("prod", &a, a.product(&b))?,
                    "colon" => self.op("colon", &a, a.colon(&b))?,
                    _ => self.op("cap", &a, a.intersect(&b))?,
                };
                self.ideal_output(&word, &[&a, &b], r)
            }
            "transform" => {
                let a = p.expr()?;
                let j = p.direction()?;
                self.finish(&mut p)?;
                let r = self.op("transform", &a, core::transform_dir(&a, j))?;
                self.ideal_output("transform", &[&a], r)
            }
            "delta" => {
                let a = p.expr()?;
                let j = p.direction()?;
                self.finish(&mut p)?;
                let v = self.op("delta", &a, core::delta(&a, j))?;
                self.int_output("delta", &[&a], v)
            }
            "cit" => {
                let a = p.expr()?;
                let j = p.direction()?;
                self.finish(&mut p)?;
                let r = self.op("cit", &a, core::cit(&a, j))?;
                if self.verify {
                    let again = self.op("cit", &a, core::cit_via_membership(&a, j))?;
                    if again != r {
                        return Err(CliError::Verify("inverse transform routes disagree".into()));
                    }
                }
                self.ideal_output("cit", &[&a], r)
            }
            "special" => {
                let dirs = p.direction_sequence()?;
                self.finish(&mut p)?;
                let seq = self.seq(dirs)?;
                let r = core::special_p(&seq).map_err(|e| CliError::Op {
                    op: "special".into(),
                    input: Some(self.seq_text(&seq)),
                    source: e,
                })?;
                let text = render::ideal(&r, &self.vars);
                let record = json!({
                    "command": "special", "inputs": {"sequence": self.seq_text(&seq)},
                    "result": self.ideal_json(&r)
                });
                CommandOutput { text, record }
            }
            "basepoints" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let tree = self.op("basepoints", &a, core::base_point_tree(&a, self.max_depth))?;
                let mut lines = Vec::new();
                let mut nodes = Vec::new();
                for n in tree.nodes() {
                    lines.push(format!(
                        "{}: {}",
                        render::path(&n.path, &self.vars),
                        render::ideal(&n.ideal, &self.vars)
                    ));
                    nodes.push(json!({
                        "path": render::path(&n.path, &self.vars),
                        "order": n.order,
                        "ideal": self.ideal_json(&n.ideal),
                    }));
                }
                CommandOutput {
                    text: lines.join("\n"),
                    record: json!({
                        "command": "basepoints",
                        "inputs": {"ideal": self.ideal_json(&a)},
                        "result": nodes
                    }),
                }
            }
            "pointbasis" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let basis = self.op("pointbasis", &a, core::point_basis(&a, self.max_depth))?;
                let text = basis
                    .iter()
                    .map(|(path, ord)| format!("{}:{ord}", render::path(path, &self.vars)))
                    .collect::<Vec<_>>()
                    .join(" ");
                let record = json!({
                    "command": "pointbasis",
                    "inputs": {"ideal": self.ideal_json(&a)},
                    "result": basis.iter().map(|(path, ord)| {
                        json!({"path": render::path(path, &self.vars), "order": ord})
                    }).collect::<Vec<_>>()
                });
                CommandOutput { text, record }
            }
            "factor" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let f = self.op("factor", &a, core::lipman_factor(&a, self.max_depth))?;
                let text = f
                    .exponents()
                    .iter()
                    .filter(|&(_, &e)| e != 0)
                    .map(|(path, e)| format!("{}:{e}", render::path(path, &self.vars)))
                    .collect::<Vec<_>>()
                    .join(" ");
                let record = json!({
                    "command": "factor",
                    "inputs": {"ideal": self.ideal_json(&a)},
                    "result": f.exponents().iter().map(|(path, e)| {
                        json!({"path": render::path(path, &self.vars), "exponent": e})
                    }).collect::<Vec<_>>()
                });
                CommandOutput { text, record }
            }
            "special?" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let w = self.op(
                    "special?",
                    &a,
                    core::is_special_star_simple(&a, self.max_depth),
                )?;
                let text = match &w {
                    Some(path) => format!("true {}", render::path(path, &self.vars)),
                    None => "false".to_string(),
                };
                let record = json!({
                    "command": "special?",
                    "inputs": {"ideal": self.ideal_json(&a)},
                    "result": {
                        "special": w.is_some(),
                        "path": w.as_ref().map(|p| render::path(p, &self.vars)),
                    }
                });
                CommandOutput { text, record }
            }
            "rees" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let vals = self.op("rees", &a, core::rees_valuations(&a))?;
                let text = vals
                    .iter()
                    .map(render::weight)
                    .collect::<Vec<_>>()
                    .join(" ");
                let record = json!({
                    "command": "rees",
                    "inputs": {"ideal": self.ideal_json(&a)},
                    "result": vals.iter().map(|w| w.weights().to_vec()).collect::<Vec<_>>()
                });
                CommandOutput { text, record }
            }
            "weights" => {
                let dirs = p.direction_sequence()?;
                let stage = p.expect_int("a stage number")? as usize;
                self.finish(&mut p)?;
                let seq = self.seq(dirs)?;
                let w = core::ord_weights(&seq, stage).map_err(|e| CliError::Op {
                    op: "weights".into(),
                    input: Some(self.seq_text(&seq)),
                    source: e,
                })?;
                CommandOutput {
                    text: render::weight(&w),
                    record: json!({
                        "command": "weights",
                        "inputs": {"sequence": self.seq_text(&seq), "stage": stage},
                        "result": w.weights().to_vec()
                    }),
                }
            }
            "expand" => {
                let dirs = p.direction_sequence()?;
                self.finish(&mut p)?;
                let seq = self.seq(dirs)?;
                let e = core::expansion_matrix(&seq).map_err(|e| CliError::Op {
                    op: "expand".into(),
                    input: Some(self.seq_text(&seq)),
                    source: e,
                })?;
                let mut lines = Vec::new();
                for (i, row) in e.rows().iter().enumerate() {
                    let exps: Vec<u32> = row.iter().map(|&x| x as u32).collect();
                    let mono = render::monomial(&ExponentVector::new(exps), &self.vars);
                    lines.push(format!("{} = {mono}", self.vars[i]));
                }
                CommandOutput {
                    text: lines.join("\n"),
                    record: json!({
                        "command": "expand",
                        "inputs": {"sequence": self.seq_text(&seq)},
                        "result": e.rows().to_vec()
                    }),
                }
            }
            "changedir" | "proximate" => {
                let dirs = p.direction_sequence()?;
                self.finish(&mut p)?;
                let seq = self.seq(dirs)?;
                let v = if word == "changedir" {
                    core::is_change_of_direction(&seq)
                } else {
                    core::is_proximate(&seq)
                }
                .map_err(|e| CliError::Op {
                    op: word.clone(),
                    input: Some(self.seq_text(&seq)),
                    source: e,
                })?;
                CommandOutput {
                    text: v.to_string(),
                    record: json!({
                        "command": word,
                        "inputs": {"sequence": self.seq_text(&seq)},
                        "result": v
                    }),
                }
            }
            "indexorder" => {
                let a = p.expr()?;
                self.finish(&mut p)?;
                let io = self.op("indexorder", &a, core::index_order(&a))?;
                CommandOutput {
                    text: format!("({}, {})", io.index, io.order),
                    record: json!({
                        "command": "indexorder",
                        "inputs": {"ideal": self.ideal_json(&a)},
                        "result": {"index": io.index, "order": io.order}
                    }),
                }
            }
            "pairtree" => {
                let depth = p.expect_int("a depth")? as usize;
                self.finish(&mut p)?;
                let levels = core::index_order_tree(depth);
                let mut lines = Vec::new();
                for (d, level) in levels.iter().enumerate() {
                    let pairs = level
                        .iter()
                        .map(|p| format!("({}, {})", p.index, p.order))
                        .collect::<Vec<_>>()
                        .join(" ");
                    lines.push(format!("depth {d}: {pairs}"));
                }
                CommandOutput {
                    text: lines.join("\n"),
                    record: json!({
                        "command": "pairtree",
                        "inputs": {"depth": depth},
                        "result": levels.iter().map(|level| {
                            level.iter().map(|p| vec![p.index, p.order]).collect::<Vec<_>>()
                        }).collect::<Vec<_>>()
                    }),
                }
            }
            "table" => {
                let a = p.expr()?;
                let j = p.direction()?;
                self.finish(&mut p)?;
                let (image, full) = cit_tables(self, &a, j)?;
                let (u, v) = table_axes(self.dim, j);
                let text = format!(
                    "{}\n\n{}",
                    render::exponent_table(&image, &self.vars[u], &self.vars[v]),
                    render::exponent_table(&full, &self.vars[u], &self.vars[v]),
                );
                let record = json!({
                    "command": "table",
                    "inputs": {"ideal": self.ideal_json(&a), "direction": self.vars[j]},
                    "result": {"image": image, "full": full}
                });
                CommandOutput { text, record }
            }
            other => {
                return Err(CliError::Usage(format!("unknown command '{other}'")));
            }
        };
        Ok(out)
    }

    fn finish(&self, p: &mut Parser) -> Result<(), CliError> {
        if p.at_end() {
            Ok(())
        } else {
            Err(CliError::Parse {
                pos: p.offset(),
                msg: "trailing input".into(),
            })
        }
    }

    fn ideal_output(
        &self,
        cmd: &str,
        inputs: &[&MonomialIdeal],
        r: MonomialIdeal,
    ) -> CommandOutput {
        CommandOutput {
            text: render::ideal(&r, &self.vars),
            record: json!({
                "command": cmd,
                "inputs": inputs.iter().map(|i| self.ideal_json(i)).collect::<Vec<_>>(),
                "result": self.ideal_json(&r)
            }),
        }
    }

    fn int_output(&self, cmd: &str, inputs: &[&MonomialIdeal], v: u64) -> CommandOutput {
        CommandOutput {
            text: v.to_string(),
            record: json!({
                "command": cmd,
                "inputs": inputs.iter().map(|i| self.ideal_json(i)).collect::<Vec<_>>(),
                "result": v
            }),
        }
    }

    fn bool_output(&self, cmd: &str, inputs: &[&MonomialIdeal], v: bool) -> CommandOutput {
        CommandOutput {
            text: v.to_string(),
            record: json!({
                "command": cmd,
                "inputs": inputs.iter().map(|i| self.ideal_json(i)).collect::<Vec<_>>(),
                "result": v
            }),
        }
    }

    /// Bounded power-test soundness sweep over the candidate box of a
    /// closure: any point the power test certifies must lie in the result.
    fn verify_closure(
        &self,
        input: &MonomialIdeal,
        closure: &MonomialIdeal,
    ) -> Result<(), CliError> {
        let d = self.dim;
        let bounds: Vec<u32> = (0..d)
            .map(|c| input.gens().iter().map(|g| g.exp(c)).max().unwrap_or(0))
            .collect();
        let total: u64 = bounds.iter().map(|&b| u64::from(b) + 1).product();
        let stride = (total / 2048).max(1);
        let mut cur = vec![0u32; d];
        let mut count = 0u64;
        loop {
            if count.is_multiple_of(stride) {
                let a = ExponentVector::new(cur.clone());
                let certified = self.op(
                    "verify",
                    input,
                    core::power_test_membership(input, &a, core::DEFAULT_POWER_TEST_BOUND),
                )?;
                if certified && !self.op("verify", closure, closure.contains(&a))? {
                    return Err(CliError::Verify(format!(
                        "power test certifies {} but the closure misses it",
                        render::monomial(&a, &self.vars)
                    )));
                }
            }
            count += 1;
            let mut i = 0;
            loop {
                if i == d {
                    return Ok(());
                }
                cur[i] += 1;
                if cur[i] <= bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

fn table_axes(dim: usize, j: usize) -> (usize, usize) {
    let rest: Vec<usize> = (0..dim).filter(|&c| c != j).collect();
    (rest[0], rest[1])
}

/// A grid of optional direction-variable exponents indexed by the two
/// remaining variables.
pub type ExponentTable = Vec<Vec<Option<u64>>>;

/// The two exponent tables of an inverse transform in dimension three: the
/// image of the minimal generators upstairs under `α -> x^δ α`, and the full
/// generator set of the inverse transform.  Cell `(col, row)` holds the
/// exponent `c` of the direction variable such that `x_j^c u^col v^row` is a
/// generator.
pub fn cit_tables(
    ws: &Workspace,
    upstairs: &MonomialIdeal,
    j: usize,
) -> Result<(ExponentTable, ExponentTable), CliError> {
    if ws.dim() != 3 {
        return Err(CliError::Usage("table requires ambient dimension 3".into()));
    }
    let lift = |r: core::Result<MonomialIdeal>| -> Result<MonomialIdeal, CliError> {
        r.map_err(|e| CliError::Op {
            op: "table".into(),
            input: Some(render::ideal(upstairs, ws.vars())),
            source: e,
        })
    };
    let full = lift(core::cit(upstairs, j))?;
    let d_val = core::delta(upstairs, j).map_err(|e| CliError::Op {
        op: "table".into(),
        input: Some(render::ideal(upstairs, ws.vars())),
        source: e,
    })?;
    let (u, v) = table_axes(3, j);
    let mut size = d_val as usize;
    for g in upstairs.gens().iter().chain(full.gens()) {
        size = size.max(g.exp(u) as usize).max(g.exp(v) as usize);
    }
    let blank = vec![vec![None; size + 1]; size + 1];

    // left table: the injective image of the upstairs generators
    let mut image = blank.clone();
    for g in upstairs.gens() {
        let rest = u64::from(g.exp(u)) + u64::from(g.exp(v));
        let c = d_val + u64::from(g.exp(j)) - rest;
        image[g.exp(v) as usize][g.exp(u) as usize] = Some(c);
    }
    // right table: all generators downstairs
    let mut table = blank;
    for g in full.gens() {
        table[g.exp(v) as usize][g.exp(u) as usize] = Some(u64::from(g.exp(j)));
    }
    Ok((image, table))
}
