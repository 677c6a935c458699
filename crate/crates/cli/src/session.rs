//! Evaluation of statements against the engine.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use cuntz_core::intertwiner::IntertwinerSpace;
use cuntz_core::json::{self, Document};
use cuntz_core::normalizer::{
    self, CornerVerdict, NormalizerReport, SwapObstruction, SwapSweep, TraceReport,
};
use cuntz_core::scalar::format_scalar;
use cuntz_core::subalgebra::{
    self, CommutantReport, CornerSumAlgebra, GaugeSpectralData, GeneratedAlgebra, Subalgebra,
};
use cuntz_core::{Element, Error, Scalar};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value as Json};

use crate::syntax::{parse_stmt, Expr, ParseError, Stmt};

#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
    Bool(bool),
    /// Outcome of `assert` or `cocycle`; a false verdict fails the statement.
    Verdict { check: String, ok: bool },
    Degrees(BTreeSet<i64>),
    BlockDegrees(Vec<Option<i64>>),
    Algebra(CornerSumAlgebra),
    Generated(GeneratedAlgebra),
    Intertwiner(IntertwinerSpace),
    Commutant(CommutantReport),
    Normalizer(NormalizerReport),
    Traces(TraceReport),
    Labels(GaugeSpectralData),
    Swap(SwapObstruction),
    Sweep(SwapSweep),
    Corner(CornerVerdict),
    Text(String),
    Unit,
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Bool(_) | Value::Verdict { .. } => "boolean",
            Value::Degrees(_) => "degree set",
            Value::BlockDegrees(_) => "block degrees",
            Value::Algebra(_) => "corner-sum algebra",
            Value::Generated(_) => "generated algebra",
            Value::Intertwiner(_) => "intertwiner space",
            Value::Commutant(_) => "commutant report",
            Value::Normalizer(_) => "normalizer report",
            Value::Traces(_) => "trace report",
            Value::Labels(_) => "gauge labels",
            Value::Swap(_) => "swap obstruction",
            Value::Sweep(_) => "swap sweep",
            Value::Corner(_) => "corner verdict",
            Value::Text(_) => "string",
            Value::Unit => "nothing",
        }
    }

    /// A verification that did not go through.
    pub fn failure(&self) -> Option<String> {
        match self {
            Value::Verdict { check, ok: false } => Some(format!("{check} failed")),
            Value::Normalizer(r) if !r.passed() => Some("normalizer check failed".into()),
            Value::Sweep(s) if !s.clean() => Some(s.to_string()),
            Value::Swap(s) if s.has_solution() || !s.certificate_holds() => Some(s.to_string()),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Scalar(s) => json!({ "scalar": format_scalar(s) }),
            Value::Element(x) => json::element_to_json(x),
            Value::Bool(b) => json!(b),
            Value::Verdict { check, ok } => json!({ "check": check, "ok": ok }),
            Value::Degrees(d) => json!(d),
            Value::BlockDegrees(d) => json!(d),
            Value::Algebra(a) => json::algebra_to_json(a),
            Value::Generated(g) => json!({
                "n": g.n(),
                "generators": g.generators().iter().map(json::element_to_json).collect::<Vec<_>>(),
            }),
            Value::Intertwiner(s) => json!({
                "degree": s.k,
                "level": s.level,
                "dimension": s.dimension(),
                "basis": s.commutant_elements().iter().map(json::element_to_json).collect::<Vec<_>>(),
            }),
            Value::Commutant(r) => json::commutant_report_to_json(r),
            Value::Normalizer(r) => json::normalizer_report_to_json(r),
            Value::Traces(t) => json::trace_report_to_json(t),
            Value::Labels(l) => json!({ "labels": l.labels, "edges": l.edges }),
            Value::Swap(s) => json!({
                "n": s.n, "p": s.p, "q": s.q.to_string(), "m": s.m,
                "lhs": s.lhs.to_string(), "rhs": s.rhs.to_string(),
                "solution": s.has_solution(),
                "certificate": { "divisor": s.divisor.to_string(), "gcd": s.gcd_with_n.to_string() },
            }),
            Value::Sweep(s) => json!({
                "cases": s.cases,
                "solutions": s.solutions,
                "certificate_failures": s.certificate_failures,
            }),
            Value::Corner(CornerVerdict::InCore) => json!({ "degree": 0, "in_core": true }),
            Value::Corner(CornerVerdict::TraceContradiction { degree, trace, shifted_trace }) => json!({
                "degree": degree,
                "in_core": false,
                "trace": format_scalar(trace),
                "shifted_trace": format_scalar(shifted_trace),
            }),
            Value::Text(t) => json!(t),
            Value::Unit => Json::Null,
        }
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Element(x) => write!(f, "{x}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Verdict { check, ok: true } => write!(f, "{check}: ok"),
            Value::Verdict { check, ok: false } => write!(f, "{check}: FAILED"),
            Value::Degrees(d) => write!(f, "{{{}}}", join(d)),
            Value::BlockDegrees(d) => write!(
                f,
                "[{}]",
                join(d.iter().map(|m| m.map_or("undefined".to_string(), |m| m.to_string())))
            ),
            Value::Algebra(a) => {
                write!(f, "corner sum of {} projections at level {}", a.len(), a.level())?;
                for (i, e) in a.projections().iter().enumerate() {
                    write!(f, "\n  e_{} = {e}", i + 1)?;
                }
                Ok(())
            }
            Value::Generated(g) => write!(
                f,
                "algebra generated by {} elements at level {}",
                g.generators().len(),
                g.level()
            ),
            Value::Intertwiner(s) => {
                write!(f, "degree {} at level {}: dimension {}", s.k, s.level, s.dimension())?;
                for (i, b) in s.commutant_elements().iter().enumerate() {
                    write!(f, "\n  b_{} = {b}", i + 1)?;
                }
                Ok(())
            }
            Value::Commutant(r) => {
                write!(f, "level {}, window {}", r.level, r.window)?;
                if let Some(c) = r.cutoff {
                    write!(f, ", cutoff {c}")?;
                }
                write!(f, "\ndimensions ({})", join(r.dimensions()))?;
                for s in &r.spaces {
                    for (i, b) in s.commutant_elements().iter().enumerate() {
                        write!(f, "\n  degree {} b_{} = {b}", s.k, i + 1)?;
                    }
                }
                if !r.cutoff_sound() {
                    write!(f, "\ncutoff violated in degrees {:?}", r.cutoff_violations())?;
                }
                Ok(())
            }
            Value::Normalizer(r) => write!(f, "{r}"),
            Value::Traces(t) => write!(f, "{}", t.to_string().trim_end()),
            Value::Labels(l) => write!(f, "labels [{}]", join(&l.labels)),
            Value::Swap(s) => write!(f, "{s}"),
            Value::Sweep(s) => write!(f, "{s}"),
            Value::Corner(CornerVerdict::InCore) => write!(f, "degree 0: u lies in F_n"),
            Value::Corner(CornerVerdict::TraceContradiction { degree, trace, shifted_trace }) => write!(
                f,
                "degree {degree}: trace contradiction {trace} != {shifted_trace}"
            ),
            Value::Text(t) => write!(f, "{t}"),
            Value::Unit => Ok(()),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    /// Unknown names, verbs, arity and type mismatches.
    Name(String),
    Engine { verb: String, error: Error },
    Io(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Name(_) => 2,
            CliError::Engine { .. } | CliError::Io(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error at {e}"),
            CliError::Name(m) => write!(f, "{m}"),
            CliError::Engine { verb, error } => write!(f, "{verb}: {error}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

type Out<T> = std::result::Result<T, CliError>;

fn engine<T>(verb: &str, r: cuntz_core::Result<T>) -> Out<T> {
    r.map_err(|error| CliError::Engine {
        verb: verb.to_string(),
        error,
    })
}

fn arg_error(verb: &str, message: impl Into<String>) -> CliError {
    CliError::Engine {
        verb: verb.to_string(),
        error: Error::Argument(message.into()),
    }
}

pub struct Session {
    n: usize,
    max_level: usize,
    vars: HashMap<String, Value>,
}

const VERBS: &[(&str, &str)] = &[
    ("adj", "x"),
    ("E", "x"),
    ("phi", "x"),
    ("phik", "x, k"),
    ("tau", "x"),
    ("fourier", "x, k"),
    ("reconstruct", "x, N"),
    ("degrees", "x"),
    ("incore", "x"),
    ("unitary", "U"),
    ("commutantF", "A, M"),
    ("commutantO", "A, M, D"),
    ("irreducible", "A, M, D"),
    ("cutoff", "A"),
    ("cornersum", "e1, ..."),
    ("generated", "a1, ..."),
    ("member", "x, A"),
    ("normcheck", "U, A, M"),
    ("exact", "report"),
    ("cocycle", "U, A, M"),
    ("blockdeg", "U, A"),
    ("tracereport", "U, A"),
    ("conjugator", "u, e"),
    ("ex21", "n, p, q, m"),
    ("swapsweep", "n_max, m_max, p_max"),
    ("ex22", ""),
    ("labels", "report[, A | e1, ...]"),
    ("eq", "x, y"),
    ("not", "b"),
    ("assert", "b"),
    ("save", "value, path"),
    ("load", "path"),
];

pub fn verb_help() -> String {
    VERBS
        .iter()
        .map(|(v, a)| format!("  {v}({a})"))
        .collect::<Vec<_>>()
        .join("\n")
}

impl Session {
    pub fn new(n: usize, max_level: usize) -> Out<Self> {
        engine("session", Element::one(n))?;
        Ok(Session {
            n,
            max_level,
            vars: HashMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.vars.get(name)
    }

    /// Runs one line. `let` binds and yields `Value::Unit`; a failed
    /// verification is returned as an error after the value is computed.
    pub fn run(&mut self, line: &str) -> Out<Value> {
        let stmt = parse_stmt(line).map_err(CliError::Parse)?;
        let (value, name) = match stmt {
            Stmt::Let(name, e) => (self.eval(&e)?, Some(name)),
            Stmt::Expr(e) => (self.eval(&e)?, None),
        };
        let failure = value.failure();
        let shown = match name {
            Some(name) => {
                self.vars.insert(name, value);
                Value::Unit
            }
            None => value,
        };
        match failure {
            Some(m) => Err(CliError::Verification(format!("{m}\n{shown}").trim_end().to_string())),
            None => Ok(shown),
        }
    }

    pub fn eval(&mut self, e: &Expr) -> Out<Value> {
        match e {
            Expr::Rational(r) => Ok(Value::Scalar(r.clone())),
            Expr::Generator(i) => {
                if *i == 0 || *i > self.n {
                    return Err(CliError::Name(format!(
                        "unknown generator S{i}: the session has n = {}",
                        self.n
                    )));
                }
                Ok(Value::Element(engine("S", Element::generator(self.n, *i))?))
            }
            Expr::Identity => Ok(Value::Element(engine("I", Element::one(self.n))?)),
            Expr::Var(v) => self
                .vars
                .get(v)
                .cloned()
                .ok_or_else(|| CliError::Name(format!("unknown identifier {v}"))),
            Expr::Str(s) => Ok(Value::Text(s.clone())),
            Expr::Neg(x) => match self.eval(x)? {
                Value::Scalar(s) => Ok(Value::Scalar(-s)),
                Value::Element(x) => Ok(Value::Element(-x)),
                other => Err(arg_error("-", format!("cannot negate a {}", other.kind()))),
            },
            Expr::Add(a, b) => self.arith('+', a, b),
            Expr::Sub(a, b) => self.arith('-', a, b),
            Expr::Mul(a, b) => self.arith('*', a, b),
            Expr::Call(name, args) => self.call(name, args),
        }
    }

    fn arith(&mut self, op: char, a: &Expr, b: &Expr) -> Out<Value> {
        let a = self.eval(a)?;
        let b = self.eval(b)?;
        let verb = op.to_string();
        if let (Value::Scalar(x), Value::Scalar(y)) = (&a, &b) {
            return Ok(Value::Scalar(match op {
                '+' => x + y,
                '-' => x - y,
                _ => x * y,
            }));
        }
        if op == '*' {
            match (&a, &b) {
                (Value::Scalar(s), Value::Element(x)) | (Value::Element(x), Value::Scalar(s)) => {
                    return Ok(Value::Element(x.scale(s)));
                }
                _ => {}
            }
        }
        let ambient = match (&a, &b) {
            (Value::Element(x), _) | (_, Value::Element(x)) => x.n(),
            _ => self.n,
        };
        let x = self.as_element(&verb, a, ambient)?;
        let y = self.as_element(&verb, b, ambient)?;
        Ok(Value::Element(engine(
            &verb,
            match op {
                '+' => x.try_add(&y),
                '-' => x.try_sub(&y),
                _ => x.try_mul(&y),
            },
        )?))
    }

    fn as_element(&self, verb: &str, v: Value, n: usize) -> Out<Element> {
        match v {
            Value::Element(x) => Ok(x),
            Value::Scalar(s) => engine(verb, Element::scalar(n, s)),
            other => Err(arg_error(verb, format!("expected an element, found a {}", other.kind()))),
        }
    }

    fn level_arg(&self, verb: &str, v: &Value) -> Out<usize> {
        let m = int_arg(verb, v)?;
        let m = usize::try_from(m).map_err(|_| arg_error(verb, "level must be non-negative"))?;
        if m > self.max_level {
            return Err(CliError::Engine {
                verb: verb.to_string(),
                error: Error::Level(format!(
                    "level {m} exceeds the --max-level clamp {}",
                    self.max_level
                )),
            });
        }
        Ok(m)
    }

    fn call(&mut self, name: &str, args: &[Expr]) -> Out<Value> {
        let Some((_, sig)) = VERBS.iter().find(|(v, _)| *v == name) else {
            return Err(CliError::Name(format!("unknown verb {name}")));
        };
        let variadic = sig.contains("...") || sig.contains('[');
        let fixed = if sig.is_empty() { 0 } else { sig.split(',').count() };
        if !variadic && args.len() != fixed {
            return Err(CliError::Name(format!(
                "{name} takes {fixed} argument{} ({name}({sig})), got {}",
                if fixed == 1 { "" } else { "s" },
                args.len()
            )));
        }
        if name == "ex22" {
            return Ok(self.bind_swap_example());
        }
        let vals = args.iter().map(|a| self.eval(a)).collect::<Out<Vec<_>>>()?;
        let el = |i: usize| -> Out<Element> {
            match &vals[i] {
                Value::Element(x) => Ok(x.clone()),
                Value::Scalar(s) => engine(name, Element::scalar(self.n, s.clone())),
                other => Err(arg_error(name, format!("argument {} must be an element, found a {}", i + 1, other.kind()))),
            }
        };
        let corner = |i: usize| -> Out<CornerSumAlgebra> {
            match &vals[i] {
                Value::Algebra(a) => Ok(a.clone()),
                other => Err(arg_error(name, format!("argument {} must be a corner-sum algebra, found a {}", i + 1, other.kind()))),
            }
        };
        let sub = |i: usize| -> Out<Subalgebra> {
            match &vals[i] {
                Value::Algebra(a) => Ok(a.clone().into()),
                Value::Generated(g) => Ok(g.clone().into()),
                other => Err(arg_error(name, format!("argument {} must be an algebra, found a {}", i + 1, other.kind()))),
            }
        };
        let int = |i: usize| int_arg(name, &vals[i]);
        let uint = |i: usize| -> Out<u32> {
            u32::try_from(int(i)?).map_err(|_| arg_error(name, format!("argument {} out of range", i + 1)))
        };
        let truth = |i: usize| -> Out<bool> {
            match &vals[i] {
                Value::Bool(b) => Ok(*b),
                Value::Verdict { ok, .. } => Ok(*ok),
                other => Err(arg_error(name, format!("argument {} must be a boolean, found a {}", i + 1, other.kind()))),
            }
        };
        let path = |i: usize| -> Out<String> {
            match &vals[i] {
                Value::Text(p) => Ok(p.clone()),
                other => Err(arg_error(name, format!("argument {} must be a path string, found a {}", i + 1, other.kind()))),
            }
        };
        let v = match name {
            "adj" => Value::Element(el(0)?.adjoint()),
            "E" => Value::Element(el(0)?.expectation()),
            "phi" => Value::Element(engine(name, el(0)?.shift_phi(1))?),
            "phik" => Value::Element(engine(name, el(0)?.shift_phi(int(1)?))?),
            "tau" => Value::Scalar(el(0)?.trace()),
            "fourier" => Value::Element(el(0)?.fourier_coeff(int(1)?)),
            "reconstruct" => Value::Element(el(0)?.fourier_reconstruct(uint(1)?)),
            "degrees" => Value::Degrees(el(0)?.degree_support()),
            "incore" => Value::Bool(el(0)?.is_in_core()),
            "unitary" => Value::Bool(normalizer::check_unitary(&el(0)?)),
            "commutantF" => {
                let m = self.level_arg(name, &vals[1])?;
                Value::Intertwiner(engine(name, subalgebra::relative_commutant_f(&sub(0)?, m))?)
            }
            "commutantO" => {
                let m = self.level_arg(name, &vals[1])?;
                Value::Commutant(engine(name, subalgebra::relative_commutant_on(&sub(0)?, m, uint(2)?))?)
            }
            "irreducible" => {
                let m = self.level_arg(name, &vals[1])?;
                Value::Bool(engine(name, subalgebra::check_irreducibility_instance(&sub(0)?, m, uint(2)?))?)
            }
            "cutoff" => Value::Scalar(Scalar::from_integer(subalgebra::fourier_cutoff(&corner(0)?).into())),
            "cornersum" => {
                let ps = (0..vals.len()).map(el).collect::<Out<Vec<_>>>()?;
                Value::Algebra(engine(name, subalgebra::make_corner_sum(ps))?)
            }
            "generated" => {
                let gs = (0..vals.len()).map(el).collect::<Out<Vec<_>>>()?;
                let n = gs.first().map_or(self.n, Element::n);
                Value::Generated(engine(name, GeneratedAlgebra::new(n, gs))?)
            }
            "member" => Value::Bool(engine(name, subalgebra::membership(&el(0)?, &corner(1)?))?),
            "normcheck" => {
                let m = self.level_arg(name, &vals[2])?;
                Value::Normalizer(engine(name, normalizer::check_normalizer(&el(0)?, &corner(1)?, m))?)
            }
            "exact" => match &vals[0] {
                Value::Normalizer(r) => Value::Bool(r.passed() && r.exact),
                other => return Err(arg_error(name, format!("expected a normalizer report, found a {}", other.kind()))),
            },
            "cocycle" => {
                let m = self.level_arg(name, &vals[2])?;
                let ok = engine(name, normalizer::check_gauge_cocycle_in_commutant(&el(0)?, &corner(1)?, m))?;
                Value::Verdict { check: "gauge cocycle".into(), ok }
            }
            "blockdeg" => Value::BlockDegrees(normalizer::corner_block_degrees(&el(0)?, &corner(1)?)),
            "tracereport" => Value::Traces(normalizer::conjugation_trace_report(&el(0)?, &corner(1)?)),
            "conjugator" => Value::Corner(engine(name, normalizer::corner_conjugator_in_f_check(&el(0)?, &el(1)?))?),
            "ex21" => {
                let q = BigUint::from(uint(2)?);
                Value::Swap(engine(name, normalizer::corner_swap_obstruction(uint(0)?, uint(1)?, &q, uint(3)?))?)
            }
            "swapsweep" => Value::Sweep(normalizer::corner_swap_sweep(uint(0)?, uint(1)?, uint(2)?)),
            "labels" => {
                let Value::Commutant(report) = &vals[0] else {
                    return Err(arg_error(name, "argument 1 must be a commutant report"));
                };
                let projections = match vals.len() {
                    1 => match report.algebra.as_corner_sum() {
                        Some(a) => a.projections().to_vec(),
                        None => return Err(arg_error(name, "the report's algebra has no corner projections; pass them explicitly")),
                    },
                    2 if matches!(vals[1], Value::Algebra(_)) => corner(1)?.projections().to_vec(),
                    _ => (1..vals.len()).map(el).collect::<Out<Vec<_>>>()?,
                };
                Value::Labels(engine(name, subalgebra::derive_gauge_labels(report, &projections))?)
            }
            "eq" => Value::Bool(values_equal(name, &vals[0], &vals[1])?),
            "not" => Value::Bool(!truth(0)?),
            "assert" => Value::Verdict { check: format!("assert({})", args[0]), ok: truth(0)? },
            "save" => {
                let doc = match &vals[0] {
                    Value::Element(x) => Document::Element(x.clone()),
                    Value::Algebra(a) => Document::Algebra(a.clone()),
                    Value::Commutant(r) => Document::Commutant(r.clone()),
                    Value::Normalizer(r) => Document::Normalizer(r.clone()),
                    other => return Err(arg_error(name, format!("cannot save a {}", other.kind()))),
                };
                let p = path(1)?;
                std::fs::write(&p, doc.render() + "\n")
                    .map_err(|e| CliError::Io(format!("save: {p}: {e}")))?;
                Value::Unit
            }
            "load" => {
                let p = path(0)?;
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| CliError::Io(format!("load: {p}: {e}")))?;
                match engine(name, Document::parse(&text))? {
                    Document::Element(x) => Value::Element(x),
                    Document::Algebra(a) => Value::Algebra(a),
                    Document::Commutant(r) => Value::Commutant(r),
                    Document::Normalizer(r) => Value::Normalizer(r),
                }
            }
            _ => unreachable!("verb table and dispatch agree"),
        };
        Ok(v)
    }

    fn bind_swap_example(&mut self) -> Value {
        let ex = normalizer::build_example_2_2();
        self.vars.insert("e".into(), Value::Element(ex.e));
        self.vars.insert("f".into(), Value::Element(ex.f));
        self.vars.insert("g".into(), Value::Element(ex.g));
        self.vars.insert("v".into(), Value::Element(ex.v));
        self.vars.insert("U".into(), Value::Element(ex.u));
        self.vars.insert("A".into(), Value::Algebra(ex.algebra));
        Value::Text("bound e, f, g, v, U, A in O_2".into())
    }
}

fn int_arg(verb: &str, v: &Value) -> Out<i64> {
    match v {
        Value::Scalar(s) if s.denom().is_one() => s
            .numer()
            .to_i64()
            .ok_or_else(|| arg_error(verb, format!("integer {s} out of range"))),
        other => Err(arg_error(verb, format!("expected an integer, found {other}"))),
    }
}

fn values_equal(verb: &str, a: &Value, b: &Value) -> Out<bool> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => x == y,
        (Value::Element(x), Value::Element(y)) => {
            if x.n() != y.n() {
                return Err(CliError::Engine {
                    verb: verb.into(),
                    error: Error::AmbientMismatch { left: x.n() as u8, right: y.n() as u8 },
                });
            }
            x == y
        }
        (Value::Element(x), Value::Scalar(s)) | (Value::Scalar(s), Value::Element(x)) => {
            *x == engine(verb, Element::scalar(x.n(), s.clone()))?
        }
        (Value::Bool(x), Value::Bool(y)) => x == y,
        (Value::Degrees(x), Value::Degrees(y)) => x == y,
        (Value::BlockDegrees(x), Value::BlockDegrees(y)) => x == y,
        (Value::Text(x), Value::Text(y)) => x == y,
        (Value::Algebra(x), Value::Algebra(y)) => x == y,
        _ => {
            return Err(arg_error(
                verb,
                format!("cannot compare a {} with a {}", a.kind(), b.kind()),
            ))
        }
    })
}
