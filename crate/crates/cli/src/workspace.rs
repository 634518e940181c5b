//! Manifests and the objects they describe.
//!
//! A manifest is a TOML document with a `field`, an optional default `bound`
//! and a list of `[[entry]]` tables, each with an `id`, a `kind` and either an
//! inline description or a `file` holding one (relative to the manifest).
//! Entries may refer to earlier entries by id.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use toml::{Table, Value};
use trimat::algebra::{
    dual_right_regular, indec_injectives, indec_projectives, path_algebra_quotient, regular_module, simple_modules,
    Algebra, QuiverArrow, QuiverPresentation,
};
use trimat::bimtri::{flat_to_triple, Bimodule, TriangularAlgebra, TripleHom, TripleModule};
use trimat::monocat::{in_f, in_s};
use trimat::repmod::{enumerate_with_dim_vector, hom_basis, Module};
use trimat::{BaseField, Field, Matrix};

use crate::checks::known_checks;
use crate::parse::{self, Parsed};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Algebra,
    Bimodule,
    Lambda,
    Module,
    Triple,
    Hom,
}

impl Kind {
    fn parse(s: &str) -> Option<Kind> {
        Some(match s {
            "algebra" => Kind::Algebra,
            "bimodule" => Kind::Bimodule,
            "lambda" => Kind::Lambda,
            "module" => Kind::Module,
            "triple" => Kind::Triple,
            "hom" => Kind::Hom,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Bimodule => "bimodule",
            Kind::Lambda => "lambda",
            Kind::Module => "module",
            Kind::Triple => "triple",
            Kind::Hom => "hom",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Object<F> {
    Algebra(Arc<Algebra<F>>),
    Bimodule(Bimodule<F>),
    Lambda(Arc<TriangularAlgebra<F>>),
    Module(Module<F>),
    Triple { lambda: String, triple: TripleModule<F> },
    Hom { source: String, target: String, space_dim: usize, matrix: Option<Matrix<F>> },
}

#[derive(Clone, Debug)]
pub struct Entry<F> {
    pub id: String,
    pub kind: Kind,
    /// The file the description came from, or `inline`.
    pub source: String,
    pub settings: Table,
    pub expected: BTreeMap<String, Value>,
    pub object: Object<F>,
}

#[derive(Clone, Debug)]
pub struct Workspace<F> {
    pub name: String,
    pub field: BaseField,
    pub bound: Option<usize>,
    pub entries: Vec<Entry<F>>,
}

/// The header of a manifest, read before the field is known.
#[derive(Clone, Debug)]
pub struct Manifest {
    pub path: PathBuf,
    pub name: String,
    pub field: Option<String>,
    pub bound: Option<usize>,
    pub entries: Vec<Table>,
}

fn input(what: impl std::fmt::Display) -> CliError {
    CliError::Input(what.to_string())
}

fn read_table(path: &Path) -> Result<Table, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    text.parse::<Table>().map_err(|e| input(format!("{}: {e}", path.display())))
}

fn field_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Integer(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Reads `2`, `"7"` or `"Q"`.
pub fn parse_field(text: &str) -> Option<BaseField> {
    match text.trim() {
        "Q" | "q" | "QQ" | "rationals" => Some(BaseField::Rationals),
        t => t.parse::<u64>().ok().map(BaseField::Prime),
    }
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let table = read_table(path)?;
        let name = match table.get("name") {
            Some(Value::String(s)) => s.clone(),
            _ => path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
        };
        let field = table.get("field").map(|v| field_text(v).ok_or_else(|| input("field must be a string or integer"))).transpose()?;
        let bound = match table.get("bound") {
            Some(Value::Integer(n)) if *n >= 0 => Some(*n as usize),
            Some(_) => return Err(input(format!("{}: bound must be a non-negative integer", path.display()))),
            None => None,
        };
        let entries = match table.get("entry") {
            None => Vec::new(),
            Some(Value::Array(items)) => items
                .iter()
                .map(|v| v.as_table().cloned().ok_or_else(|| input("each entry must be a table")))
                .collect::<Result<_, _>>()?,
            Some(_) => return Err(input("entry must be an array of tables")),
        };
        Ok(Manifest { path: path.to_path_buf(), name, field, bound, entries })
    }

    /// The field declared by the manifest or `--field`, which must agree.
    pub fn resolve_field(&self, flag: Option<&str>) -> Result<BaseField, CliError> {
        let declared = self.field.as_deref().map(|f| parse_field(f).ok_or_else(|| input(format!("unknown field {f:?}")))).transpose()?;
        let requested = flag.map(|f| parse_field(f).ok_or_else(|| input(format!("unknown field {f:?}")))).transpose()?;
        match (declared, requested) {
            (Some(d), Some(r)) if d != r => Err(input(format!("field mismatch: manifest declares {d}, --field asks for {r}"))),
            (Some(d), _) => Ok(d),
            (None, Some(r)) => Ok(r),
            (None, None) => Ok(BaseField::Prime(2)),
        }
    }

    fn dir(&self) -> PathBuf {
        self.path.parent().map(Path::to_path_buf).unwrap_or_default()
    }
}

fn str_key<'a>(settings: &'a Table, key: &str) -> Parsed<&'a str> {
    settings.get(key).and_then(Value::as_str).ok_or_else(|| format!("missing string key {key:?}"))
}

fn usize_key(settings: &Table, key: &str) -> Parsed<usize> {
    match settings.get(key) {
        Some(Value::Integer(n)) if *n >= 0 => Ok(*n as usize),
        _ => Err(format!("missing non-negative integer key {key:?}")),
    }
}

fn usize_list(v: &Value) -> Parsed<Vec<usize>> {
    parse::array(v, "a dimension vector")?
        .iter()
        .map(|x| match x {
            Value::Integer(n) if *n >= 0 => Ok(*n as usize),
            _ => Err("dimensions must be non-negative integers".to_string()),
        })
        .collect()
}

/// `enumerate.total = 7` reads as a nested table; checks use the dotted name.
fn flatten_keys(table: &Table) -> Vec<(String, Value)> {
    let mut out = Vec::new();
    for (k, v) in table {
        match v {
            Value::Table(inner) => out.extend(flatten_keys(inner).into_iter().map(|(ik, iv)| (format!("{k}.{ik}"), iv))),
            _ => out.push((k.clone(), v.clone())),
        }
    }
    out
}

impl<F: Field> Workspace<F> {
    pub fn build(manifest: &Manifest) -> Result<Self, CliError> {
        let mut ws = Workspace { name: manifest.name.clone(), field: F::base_field(), bound: manifest.bound, entries: Vec::new() };
        for raw in &manifest.entries {
            let id = raw.get("id").and_then(Value::as_str).ok_or_else(|| input("entry without a string id"))?.to_string();
            let ctx = |e: String, source: &str| input(format!("entry {id:?} ({source}): {e}"));
            if ws.entries.iter().any(|e| e.id == id) {
                return Err(ctx("duplicate id".into(), "inline"));
            }
            let kind_text = raw.get("kind").and_then(Value::as_str).unwrap_or("");
            let kind = Kind::parse(kind_text).ok_or_else(|| ctx(format!("unknown kind {kind_text:?}"), "inline"))?;
            let (mut settings, source) = match raw.get("file") {
                Some(Value::String(f)) => {
                    let path = manifest.dir().join(f);
                    (read_table(&path)?, f.clone())
                }
                Some(_) => return Err(ctx("file must be a string".into(), "inline")),
                None => (Table::new(), "inline".to_string()),
            };
            for (k, v) in raw {
                if !matches!(k.as_str(), "id" | "kind" | "file" | "expected") {
                    settings.insert(k.clone(), v.clone());
                }
            }
            if let Some(f) = settings.get("field") {
                let declared = field_text(f).and_then(|t| parse_field(&t));
                if declared != Some(ws.field) {
                    return Err(ctx(format!("field mismatch: declares {f}, workspace is over {}", ws.field), &source));
                }
            }
            let mut expected = BTreeMap::new();
            if let Some(e) = raw.get("expected") {
                let table = e.as_table().ok_or_else(|| ctx("expected must be a table".into(), &source))?;
                let known = known_checks(kind);
                for (k, v) in flatten_keys(table) {
                    if !known.contains(&k.as_str()) {
                        return Err(ctx(format!("unknown check {k:?} for a {}", kind.name()), &source));
                    }
                    expected.insert(k, v);
                }
            }
            let object = ws.construct(kind, &settings).map_err(|e| ctx(e, &source))?;
            ws.entries.push(Entry { id, kind, source, settings, expected, object });
        }
        Ok(ws)
    }

    pub fn entry(&self, id: &str) -> Parsed<&Entry<F>> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| format!("no entry {id:?}"))
    }

    /// An algebra entry, or the flat algebra of a `lambda` entry.
    pub fn algebra(&self, id: &str) -> Parsed<Arc<Algebra<F>>> {
        match &self.entry(id)?.object {
            Object::Algebra(a) => Ok(a.clone()),
            Object::Lambda(l) => Ok(l.flat.clone()),
            _ => Err(format!("{id:?} is not an algebra")),
        }
    }

    pub fn bimodule(&self, id: &str) -> Parsed<&Bimodule<F>> {
        match &self.entry(id)?.object {
            Object::Bimodule(m) => Ok(m),
            _ => Err(format!("{id:?} is not a bimodule")),
        }
    }

    pub fn lambda(&self, id: &str) -> Parsed<&Arc<TriangularAlgebra<F>>> {
        match &self.entry(id)?.object {
            Object::Lambda(l) => Ok(l),
            _ => Err(format!("{id:?} is not a lambda")),
        }
    }

    pub fn module(&self, id: &str) -> Parsed<&Module<F>> {
        match &self.entry(id)?.object {
            Object::Module(m) => Ok(m),
            _ => Err(format!("{id:?} is not a module")),
        }
    }

    pub fn triple(&self, id: &str) -> Parsed<(&str, &TripleModule<F>)> {
        match &self.entry(id)?.object {
            Object::Triple { lambda, triple } => Ok((lambda, triple)),
            _ => Err(format!("{id:?} is not a triple")),
        }
    }

    /// Triple entries over `lambda`, in manifest order.
    pub fn triples_over(&self, lambda: &str) -> Vec<(&str, &TripleModule<F>)> {
        self.entries
            .iter()
            .filter_map(|e| match &e.object {
                Object::Triple { lambda: l, triple } if l == lambda => Some((e.id.as_str(), triple)),
                _ => None,
            })
            .collect()
    }

    fn construct(&self, kind: Kind, settings: &Table) -> Parsed<Object<F>> {
        Ok(match kind {
            Kind::Algebra => Object::Algebra(Arc::new(self.build_algebra(settings)?)),
            Kind::Bimodule => Object::Bimodule(self.build_bimodule(settings)?),
            Kind::Lambda => {
                let m = self.bimodule(str_key(settings, "bimodule")?)?;
                let lam = TriangularAlgebra::new(m.left_algebra(), m, m.right_algebra()).map_err(|e| e.to_string())?;
                Object::Lambda(Arc::new(lam))
            }
            Kind::Module => Object::Module(self.build_module(settings)?),
            Kind::Triple => {
                let lambda = str_key(settings, "lambda")?.to_string();
                let triple = self.build_triple(&lambda, settings)?;
                Object::Triple { lambda, triple }
            }
            Kind::Hom => self.build_hom(settings)?,
        })
    }

    fn build_algebra(&self, settings: &Table) -> Parsed<Algebra<F>> {
        if let Some(factors) = settings.get("product") {
            let ids = parse::array(factors, "product")?;
            let mut it = ids.iter().map(|v| v.as_str().ok_or("product lists algebra ids").map_err(String::from));
            let first = self.algebra(it.next().ok_or("empty product")??)?;
            let mut acc = (*first).clone();
            for id in it {
                acc = Algebra::product(&acc, &*self.algebra(id?)?).map_err(|e| e.to_string())?;
            }
            return Ok(acc);
        }
        if let Some(products) = settings.get("products") {
            let labels: Vec<String> = parse::array(settings.get("labels").ok_or("missing labels")?, "labels")?
                .iter()
                .map(|v| v.as_str().map(str::to_string).ok_or_else(|| "labels are strings".to_string()))
                .collect::<Parsed<_>>()?;
            let n = labels.len();
            let rows = parse::array(products, "products")?;
            if rows.len() != n {
                return Err(format!("products needs {n} rows"));
            }
            let consts: Vec<Vec<Vec<F>>> = rows
                .iter()
                .map(|row| {
                    let row = parse::array(row, "a products row")?;
                    if row.len() != n {
                        return Err(format!("each products row needs {n} entries"));
                    }
                    row.iter().map(|v| parse::element(v, &labels)).collect()
                })
                .collect::<Parsed<_>>()?;
            let unit = parse::element(settings.get("unit").ok_or("missing unit")?, &labels)?;
            return Algebra::from_structure_constants(labels, &consts, unit).map_err(|e| e.to_string());
        }
        let vertices = parse::array(settings.get("vertices").ok_or("an algebra needs vertices, products or product")?, "vertices")?
            .iter()
            .map(|v| field_text(v).ok_or_else(|| "vertex labels are strings".to_string()))
            .collect::<Parsed<Vec<_>>>()?;
        let arrows = match settings.get("arrows") {
            None => Vec::new(),
            Some(v) => parse::array(v, "arrows")?
                .iter()
                .map(|a| {
                    let parts: Vec<String> = parse::array(a, "an arrow")?.iter().filter_map(field_text).collect();
                    match parts.as_slice() {
                        [label, source, target] => {
                            Ok(QuiverArrow { label: label.clone(), source: source.clone(), target: target.clone() })
                        }
                        _ => Err("an arrow is [label, source, target]".to_string()),
                    }
                })
                .collect::<Parsed<_>>()?,
        };
        let relations = match settings.get("relations") {
            None => Vec::new(),
            Some(v) => parse::array(v, "relations")?
                .iter()
                .map(|r| parse::relation(r.as_str().ok_or("relations are strings")?))
                .collect::<Parsed<_>>()?,
        };
        path_algebra_quotient(&QuiverPresentation { vertices, arrows, relations }).map_err(|e| e.to_string())
    }

    fn build_bimodule(&self, settings: &Table) -> Parsed<Bimodule<F>> {
        let a = self.algebra(str_key(settings, "left")?)?;
        let b = self.algebra(str_key(settings, "right")?)?;
        if let Some(id) = settings.get("module") {
            let x = self.module(id.as_str().ok_or("module is an id")?)?;
            if !x.algebra().same_as(&a) {
                return Err("the module must be over the left algebra".into());
            }
            return Bimodule::over_field(x, &b).map_err(|e| e.to_string());
        }
        if let Some(ring) = settings.get("ring") {
            // R as an A-B-bimodule through ring maps A → R and B → R
            let r = self.algebra(ring.as_str().ok_or("ring is an id")?)?;
            let images = |key: &str, from: &Arc<Algebra<F>>| -> Parsed<Vec<Vec<F>>> {
                match settings.get(key) {
                    Some(v) => parse::array(v, key)?.iter().map(|e| parse::element(e, r.labels())).collect(),
                    None if from.same_as(&r) => Ok((0..r.dim()).map(|i| r.basis_vector(i)).collect()),
                    None => Err(format!("missing {key}")),
                }
            };
            let (li, ri) = (images("left_via", &a)?, images("right_via", &b)?);
            if li.len() != a.dim() || ri.len() != b.dim() {
                return Err("one image per basis element".into());
            }
            let copies = if settings.contains_key("copies") { usize_key(settings, "copies")? } else { 1 };
            let power = |m: Matrix<F>| Matrix::block_diag(&vec![&m; copies]);
            let left = li.iter().map(|v| power(r.element_left_matrix(v))).collect();
            let right = ri.iter().map(|v| power(r.element_right_matrix(v))).collect();
            return Bimodule::new(&a, &b, r.dim() * copies, left, right).map_err(|e| e.to_string());
        }
        let dim = usize_key(settings, "dim")?;
        let left = parse::matrices(settings.get("left_actions").ok_or("missing left_actions")?, a.dim(), dim, dim)?;
        let right = parse::matrices(settings.get("right_actions").ok_or("missing right_actions")?, b.dim(), dim, dim)?;
        Bimodule::new(&a, &b, dim, left, right).map_err(|e| e.to_string())
    }

    fn build_module(&self, settings: &Table) -> Parsed<Module<F>> {
        let alg = self.algebra(str_key(settings, "algebra")?)?;
        if let Some(c) = settings.get("construction") {
            let vertex = || usize_key(settings, "vertex");
            let pick = |xs: Vec<Module<F>>, i: usize| xs.get(i).cloned().ok_or_else(|| format!("no vertex {i}"));
            return match c.as_str().unwrap_or("") {
                "regular" => Ok(regular_module(&alg)),
                "dual-regular" => Ok(dual_right_regular(&alg)),
                "simple" => pick(simple_modules(&alg).map_err(|e| e.to_string())?, vertex()?),
                "projective" => {
                    pick(indec_projectives(&alg).map_err(|e| e.to_string())?.into_iter().map(|p| p.0).collect(), vertex()?)
                }
                "injective" => pick(indec_injectives(&alg).map_err(|e| e.to_string())?, vertex()?),
                other => Err(format!("unknown construction {other:?}")),
            };
        }
        if let Some(dims) = settings.get("dims") {
            let dims = usize_list(dims)?;
            let shape = alg.arrows().map_err(|e| e.to_string())?;
            let given = parse::array(settings.get("arrows").ok_or("missing arrows")?, "arrows")?;
            if given.len() != shape.len() {
                return Err(format!("expected {} arrow matrices", shape.len()));
            }
            let mats = shape
                .iter()
                .zip(given)
                .map(|(a, m)| parse::matrix(m, dims[a.target], dims[a.source]))
                .collect::<Parsed<Vec<_>>>()?;
            return Module::from_representation(&alg, &dims, &mats).map_err(|e| e.to_string());
        }
        let dim = usize_key(settings, "dim")?;
        let actions = parse::matrices(settings.get("actions").ok_or("missing actions")?, alg.dim(), dim, dim)?;
        Module::new(&alg, dim, actions).map_err(|e| e.to_string())
    }

    fn build_triple(&self, lambda: &str, settings: &Table) -> Parsed<TripleModule<F>> {
        let lam = self.lambda(lambda)?;
        if let Some(dv) = settings.get("dim_vector") {
            let dims = usize_list(dv)?;
            let select = settings.get("select").and_then(Value::as_str).unwrap_or("any");
            let keep = |t: &TripleModule<F>| -> Parsed<bool> {
                Ok(match select {
                    "in-s" => in_s(t),
                    "in-f" => in_f(t).map_err(|e| e.to_string())?,
                    "any" => true,
                    other => return Err(format!("unknown select {other:?}")),
                })
            };
            let mut found = Vec::new();
            for n in enumerate_with_dim_vector(&lam.flat, &dims).map_err(|e| e.to_string())? {
                let t = flat_to_triple(lam, &n).map_err(|e| e.to_string())?.0;
                if keep(&t)? {
                    found.push(t);
                }
            }
            return match found.len() {
                1 => Ok(found.pop().unwrap()),
                n => Err(format!("{n} indecomposables with dimension vector {dims:?} pass {select}, expected exactly one")),
            };
        }
        let module = |key: &str| -> Parsed<Option<Module<F>>> {
            settings.get(key).map(|v| self.module(v.as_str().ok_or("module ids are strings")?).cloned()).transpose()
        };
        let err = |e: trimat::bimtri::BimoduleError| e.to_string();
        match settings.get("construction").and_then(Value::as_str) {
            Some("induced") => TripleModule::induced_from_b(lam, module("y")?.ok_or("missing y")?).map_err(err),
            Some("coinduced") => TripleModule::coinduced_from_a(lam, module("x")?.ok_or("missing x")?).map_err(err),
            Some(other) => Err(format!("unknown construction {other:?}")),
            None => {
                let x = module("x")?.unwrap_or_else(|| Module::zero(&lam.a));
                let y = module("y")?.unwrap_or_else(|| Module::zero(&lam.b));
                // φ is read in the basis of M ⊗_B Y
                let tensor_dim = trimat::bimtri::tensor_over_b(&lam.m, &y).map_err(err)?.1.dim;
                let phi = match settings.get("phi") {
                    Some(v) => parse::matrix(v, x.dim(), tensor_dim)?,
                    None => Matrix::zeros(x.dim(), tensor_dim),
                };
                TripleModule::new(lam, x, y, phi).map_err(err)
            }
        }
    }

    fn build_hom(&self, settings: &Table) -> Parsed<Object<F>> {
        let (source, target) = (str_key(settings, "source")?.to_string(), str_key(settings, "target")?.to_string());
        let flat = |id: &str| -> Parsed<Module<F>> {
            match &self.entry(id)?.object {
                Object::Module(m) => Ok(m.clone()),
                Object::Triple { triple, .. } => Ok(triple.to_flat()),
                _ => Err(format!("{id:?} is neither a module nor a triple")),
            }
        };
        let (s, t) = (flat(&source)?, flat(&target)?);
        if !s.algebra().same_as(t.algebra()) {
            return Err("source and target are over different algebras".into());
        }
        let space_dim = hom_basis(&s, &t).map_err(|e| e.to_string())?.len();
        let matrix = match settings.get("matrix") {
            None => None,
            Some(v) => {
                let matrix = parse::matrix(v, t.dim(), s.dim())?;
                if let (Ok((_, ts)), Ok((_, tt))) = (self.triple(&source), self.triple(&target)) {
                    TripleHom::from_flat(ts, tt, &matrix).map_err(|e| e.to_string())?;
                } else if !s.is_hom_to(&t, &matrix) {
                    return Err("the matrix is not a module map".into());
                }
                Some(matrix)
            }
        };
        Ok(Object::Hom { source, target, space_dim, matrix })
    }
}
