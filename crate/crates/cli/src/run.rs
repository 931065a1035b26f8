//! Batch execution of a validated script.

use std::collections::HashMap;
use std::time::Instant;

use homcert::criteria::{
    certify_with, good_factorization_search_with, linkage_denominator, selmer_factor, Certificate, CertifyOptions,
    Property,
};
use homcert::groebner::{GradedRing, Ring};
use homcert::homology::{
    deformation_quotient, ext_table, koszul_homology_algebra, tor_table, trivial_extension_witness, vanishing_window,
};
use homcert::resolution::{betti_table, minimal_resolution, profile, DegreeWindow, GradedModule};
use homcert::series::hilbert_series;
use homcert::Error;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::ast::TaskKind;
use crate::validate::{BoundTask, Decl, Program, Settings, Value};

pub const TOOL: &str = "homcert";

#[derive(Clone)]
enum Entity {
    Ring(Ring),
    Module(GradedModule),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TaskError {
    pub kind: String,
    pub message: String,
}

impl TaskError {
    fn from_core(e: &Error) -> Self {
        let dbg = format!("{e:?}");
        let kind: String = dbg.chars().take_while(|c| c.is_alphanumeric()).collect();
        TaskError {
            kind,
            message: e.to_string(),
        }
    }

    fn dependency(name: &str, why: &str) -> Self {
        TaskError {
            kind: "DeclarationFailed".into(),
            message: format!("`{name}` could not be built: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeclReport {
    pub name: String,
    pub kind: &'static str,
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<TaskError>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub kind: TaskKind,
    pub task: String,
    pub inputs: serde_json::Map<String, Json>,
    pub result: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<TaskError>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<Json>,
    /// Wall-clock time, recorded only when timing is requested.
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub settings: Settings,
    pub declarations: Vec<DeclReport>,
    pub tasks: Vec<TaskReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub timing: bool,
    /// Run tasks one at a time instead of on the thread pool.
    pub sequential: bool,
}

type Env = HashMap<String, Result<Entity, String>>;

fn build(decl: &Decl, env: &Env) -> Result<Entity, String> {
    let ring_of = |name: &str| match env.get(name) {
        Some(Ok(Entity::Ring(r))) => Ok(r.clone()),
        Some(Err(e)) => Err(format!("`{name}` could not be built: {e}")),
        _ => Err(format!("`{name}` is not a ring")),
    };
    let module_of = |name: &str| match env.get(name) {
        Some(Ok(Entity::Module(m))) => Ok(m.clone()),
        Some(Err(e)) => Err(format!("`{name}` could not be built: {e}")),
        _ => Err(format!("`{name}` is not a module")),
    };
    let core = |e: Error| e.to_string();
    Ok(match decl {
        Decl::Ring {
            name,
            field,
            vars,
            relations,
        } => Entity::Ring(GradedRing::with_label(name, *field, vars.clone(), relations.clone()).map_err(core)?),
        Decl::Deform { name, base, sequence } => {
            let q = ring_of(base)?;
            Entity::Ring(deformation_quotient(&q, sequence).map_err(core)?.relabeled(name))
        }
        Decl::Coker { name, ring, rows } => {
            Entity::Module(GradedModule::from_rows(ring_of(ring)?, rows).map_err(core)?.labeled(name))
        }
        Decl::Residue { name, ring } => Entity::Module(GradedModule::residue_field(&ring_of(ring)?).labeled(name)),
        Decl::Syzygy { name, module, index } => {
            let m = module_of(module)?;
            let res = minimal_resolution(&m, *index + 1).map_err(core)?;
            Entity::Module(res.syzygy_module(*index).map_err(core)?.labeled(name))
        }
    })
}

struct Outcome {
    result: Json,
    certificate: Option<Certificate>,
    window: Option<Json>,
}

fn plain(result: Json) -> Outcome {
    Outcome {
        result,
        certificate: None,
        window: None,
    }
}

fn to_json<T: Serialize>(v: &T) -> Json {
    serde_json::to_value(v).expect("core types serialize")
}

struct Ctx<'a> {
    env: &'a Env,
    settings: &'a Settings,
}

impl Ctx<'_> {
    fn entity(&self, name: &str) -> Result<&Entity, TaskError> {
        match self.env.get(name) {
            Some(Ok(e)) => Ok(e),
            Some(Err(why)) => Err(TaskError::dependency(name, why)),
            None => Err(TaskError::dependency(name, "undeclared")),
        }
    }

    fn ring(&self, name: &str) -> Result<Ring, TaskError> {
        match self.entity(name)? {
            Entity::Ring(r) => Ok(r.clone()),
            Entity::Module(_) => Err(TaskError::dependency(name, "not a ring")),
        }
    }

    fn module(&self, name: &str) -> Result<GradedModule, TaskError> {
        match self.entity(name)? {
            Entity::Module(m) => Ok(m.clone()),
            Entity::Ring(_) => Err(TaskError::dependency(name, "not a module")),
        }
    }

    fn count(&self, t: &BoundTask, key: &str, default: usize) -> Result<usize, TaskError> {
        match t.int(key) {
            None => Ok(default),
            Some(v) if v >= 0 => Ok(v as usize),
            Some(v) => Err(TaskError {
                kind: "InvalidInput".into(),
                message: format!("`{key}` must be nonnegative, got {v}"),
            }),
        }
    }

    fn run(&self, t: &BoundTask) -> Result<Outcome, TaskError> {
        let core = |e: Error| TaskError::from_core(&e);
        let s = self.settings;
        match t.kind {
            TaskKind::Profile => Ok(plain(to_json(&profile(&self.ring(t.name("ring"))?).map_err(core)?))),
            TaskKind::Hilbert => {
                let m = match self.entity(t.name("of"))? {
                    Entity::Ring(r) => GradedModule::ring_module(r),
                    Entity::Module(m) => m.clone(),
                };
                let h = hilbert_series(&m).map_err(core)?;
                let terms = self.count(t, "terms", s.series_order)?;
                let coeffs: Vec<String> = h.expand(terms + 1).iter().map(|c| c.to_string()).collect();
                Ok(plain(json!({
                    "series": to_json(&h),
                    "coefficients": coeffs,
                })))
            }
            TaskKind::Betti => {
                let max_i = self.count(t, "max_i", s.max_i)?;
                let m = match self.entity(t.name("of"))? {
                    Entity::Ring(r) => GradedModule::residue_field(r),
                    Entity::Module(m) => m.clone(),
                };
                let b = betti_table(&m, max_i).map_err(core)?;
                Ok(Outcome {
                    result: json!({
                        "table": to_json(&b),
                        "totals": b.totals(),
                        "projective_dimension": b.projective_dimension(),
                    }),
                    certificate: None,
                    window: Some(json!({ "max_i": max_i })),
                })
            }
            TaskKind::Tor | TaskKind::Ext => {
                let (m, n) = (self.module(t.name("m"))?, self.module(t.name("n"))?);
                let max_i = self.count(t, "max_i", s.max_i)?;
                let window = match (t.int("lo"), t.int("hi")) {
                    (Some(lo), Some(hi)) => Some(DegreeWindow::new(lo as i32, hi as i32).map_err(core)?),
                    _ => None,
                };
                let table = if t.kind == TaskKind::Tor {
                    tor_table(&m, &n, max_i, window)
                } else {
                    ext_table(&m, &n, max_i, window)
                }
                .map_err(core)?;
                let vanishing = vanishing_window(&table.ranks);
                Ok(Outcome {
                    window: Some(json!({
                        "max_i": max_i,
                        "internal_degrees": window.map(|w| [w.lo, w.hi]),
                        "vanishing": to_json(&vanishing),
                    })),
                    result: to_json(&table),
                    certificate: None,
                })
            }
            TaskKind::KoszulAlgebra => {
                let a = koszul_homology_algebra(&self.ring(t.name("ring"))?).map_err(core)?;
                Ok(plain(json!({
                    "algebra": to_json(&a.summary()),
                    "trivial_extension_witness": to_json(&trivial_extension_witness(&a)),
                })))
            }
            TaskKind::Certify => {
                let r = self.ring(t.name("ring"))?;
                let property = match t.get("property") {
                    Some(Value::Property(p)) => *p,
                    _ => Property::TorPersistent,
                };
                let opts = CertifyOptions {
                    declared_golod: matches!(t.get("golod"), Some(Value::Bool(true))),
                    series_order: s.series_order,
                    denominators: t.all_polys("d"),
                    tolerance: s.tolerance.clone(),
                };
                let c = certify_with(&r, property, &opts).map_err(core)?;
                Ok(Outcome {
                    result: json!({
                        "verdict": to_json(&c.verdict),
                        "clause": c.clause,
                        "statement": c.statement,
                    }),
                    window: (!c.windows.is_empty()).then(|| to_json(&c.windows)),
                    certificate: Some(c),
                })
            }
            TaskKind::GoodFactorization => {
                let d = t.all_polys("d").pop().expect("bound by validation");
                let g = good_factorization_search_with(&d, &s.tolerance).map_err(core)?;
                if let Some(g) = &g {
                    g.verify(&s.tolerance).map_err(core)?;
                }
                Ok(plain(json!({
                    "d": to_json(&d),
                    "good": g.is_some(),
                    "factorization": g.as_ref().map(to_json),
                    "display": g.as_ref().map(|g| format!("p = {}, q = {}, r = {}", g.p, g.q, g.r)),
                })))
            }
            TaskKind::Selmer => {
                let m = self.count(t, "m", 0)?;
                let rep = selmer_factor(m as u32).map_err(core)?;
                let linkage = match t.int("e") {
                    Some(_) => {
                        let e = self.count(t, "e", 0)? as u32;
                        Some(to_json(&linkage_denominator(m as u32, e).map_err(core)?))
                    }
                    None => None,
                };
                Ok(plain(json!({
                    "report": to_json(&rep),
                    "linkage_denominator": linkage,
                })))
            }
        }
    }
}

fn inputs(t: &BoundTask, s: &Settings) -> serde_json::Map<String, Json> {
    let mut out = serde_json::Map::new();
    for (k, _, text) in &t.args {
        match out.get_mut(*k) {
            Some(Json::Array(v)) => v.push(Json::String(text.clone())),
            Some(prev) => *prev = Json::Array(vec![prev.clone(), Json::String(text.clone())]),
            None => {
                out.insert((*k).to_string(), Json::String(text.clone()));
            }
        }
    }
    let uses_max_i = matches!(t.kind, TaskKind::Tor | TaskKind::Ext | TaskKind::Betti);
    if uses_max_i && !out.contains_key("max_i") {
        out.insert("max_i".into(), Json::String(s.max_i.to_string()));
    }
    out
}

/// Builds declarations in order, then runs the tasks, concurrently unless
/// `opts.sequential`. The report lists tasks in script order either way.
pub fn run(program: &Program, opts: RunOptions) -> Report {
    let mut env: Env = HashMap::new();
    let mut declarations = Vec::new();
    for d in &program.decls {
        let built = build(d, &env);
        let (kind, value) = match &built {
            Ok(Entity::Ring(r)) => ("ring", Some(r.to_string())),
            Ok(Entity::Module(m)) => ("module", Some(format!("rank {} over {}", m.rank(), m.ring().label()))),
            Err(_) => (
                match d {
                    Decl::Ring { .. } | Decl::Deform { .. } => "ring",
                    _ => "module",
                },
                None,
            ),
        };
        declarations.push(DeclReport {
            name: d.name().to_string(),
            kind,
            value,
            error: built.as_ref().err().map(|e| TaskError {
                kind: "DeclarationFailed".into(),
                message: e.clone(),
            }),
        });
        env.insert(d.name().to_string(), built);
    }
    let ctx = Ctx {
        env: &env,
        settings: &program.settings,
    };
    let one = |(index, t): (usize, &BoundTask)| {
        let start = Instant::now();
        let out = ctx.run(t);
        let timing_ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
        let (result, error, certificate, window) = match out {
            Ok(o) => (Some(o.result), None, o.certificate, o.window),
            Err(e) => (None, Some(e), None, None),
        };
        TaskReport {
            index,
            kind: t.kind,
            task: t.text.clone(),
            inputs: inputs(t, &program.settings),
            result,
            error,
            certificate,
            window,
            timing_ms,
        }
    };
    let tasks: Vec<TaskReport> = if opts.sequential {
        program.tasks.iter().enumerate().map(one).collect()
    } else {
        program.tasks.par_iter().enumerate().map(one).collect()
    };
    Report {
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        settings: program.settings.clone(),
        declarations,
        tasks,
    }
}
