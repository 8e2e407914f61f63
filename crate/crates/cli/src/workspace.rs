//! Validated declarations with their algebraic objects built.

use std::collections::BTreeMap;

use summand_core::checks::FiniteExtension;
use summand_core::module::{minimal_resolution, BaseRef, BaseRing, Complex, FPModule, ModuleMap};
use summand_core::poly::{parse_polynomial, Limits, Ring};
use summand_core::{Field, Ideal, MonomialOrder, Polynomial, RingRef};

use crate::ast::{ComplexBody, Decl, Document, Matrix, ModuleBody};
use crate::commands;
use crate::dsl::{parse_document, Pos};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone)]
pub enum Object {
    Ring(BaseRef),
    Ideal(Ideal),
    Module(FPModule),
    Extension(FiniteExtension),
    Sequence(Vec<Polynomial>, BaseRef),
    Complex(Complex),
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Ring(_) => "ring",
            Object::Ideal(_) => "ideal",
            Object::Module(_) => "module",
            Object::Extension(_) => "extension",
            Object::Sequence(..) => "sequence",
            Object::Complex(_) => "complex",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Dsl,
    Json,
}

impl InputFormat {
    /// JSON documents are objects; anything else is read as the DSL.
    pub fn detect(src: &str) -> InputFormat {
        if src.trim_start().starts_with('{') {
            InputFormat::Json
        } else {
            InputFormat::Dsl
        }
    }
}

#[derive(Debug, Clone)]
pub struct Workspace {
    /// Declarations with every polynomial in canonical form.
    pub document: Document,
    objects: BTreeMap<String, Object>,
    limits: Limits,
}

fn located(pos: Option<Pos>, index: usize) -> String {
    match pos {
        Some(p) => p.to_string(),
        None => format!("declaration {}", index + 1),
    }
}

impl Workspace {
    pub fn empty(limits: Limits) -> Workspace {
        Workspace { document: Document::default(), objects: BTreeMap::new(), limits }
    }

    pub fn parse(src: &str, format: InputFormat, limits: Limits) -> CliResult<Workspace> {
        let decls: Vec<(Decl, Option<Pos>)> = match format {
            InputFormat::Dsl => parse_document(src)
                .map_err(|e| CliError::Input(e.to_string()))?
                .into_iter()
                .map(|(d, p)| (d, Some(p)))
                .collect(),
            InputFormat::Json => {
                let doc: Document = serde_json::from_str(src)
                    .map_err(|e| CliError::Input(format!("line {}, column {}: {e}", e.line(), e.column())))?;
                doc.declarations.into_iter().map(|d| (d, None)).collect()
            }
        };
        let mut ws = Workspace::empty(limits);
        for (i, (d, pos)) in decls.into_iter().enumerate() {
            ws.declare(d).map_err(|e| e.context(located(pos, i)))?;
        }
        Ok(ws)
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn to_dsl(&self) -> String {
        crate::dsl::print_document(&self.document)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.document).expect("documents serialize") + "\n"
    }

    pub fn ring_orders(&self) -> BTreeMap<String, String> {
        self.objects
            .iter()
            .filter_map(|(k, o)| match o {
                Object::Ring(b) => Some((k.clone(), b.ring().order().name())),
                _ => None,
            })
            .collect()
    }

    fn get(&self, name: &str, kind: &str) -> CliResult<&Object> {
        match self.objects.get(name) {
            None => Err(CliError::Input(format!("no {kind} named `{name}`"))),
            Some(o) if o.kind() != kind => {
                Err(CliError::Input(format!("`{name}` is a {}, not a {kind}", o.kind())))
            }
            Some(o) => Ok(o),
        }
    }

    pub fn base(&self, name: &str) -> CliResult<&BaseRef> {
        match self.get(name, "ring")? {
            Object::Ring(b) => Ok(b),
            _ => unreachable!(),
        }
    }

    pub fn ideal(&self, name: &str) -> CliResult<&Ideal> {
        match self.get(name, "ideal")? {
            Object::Ideal(i) => Ok(i),
            _ => unreachable!(),
        }
    }

    pub fn module(&self, name: &str) -> CliResult<&FPModule> {
        match self.get(name, "module")? {
            Object::Module(m) => Ok(m),
            _ => unreachable!(),
        }
    }

    pub fn extension(&self, name: &str) -> CliResult<&FiniteExtension> {
        match self.get(name, "extension")? {
            Object::Extension(e) => Ok(e),
            _ => unreachable!(),
        }
    }

    pub fn sequence(&self, name: &str) -> CliResult<(&[Polynomial], &BaseRef)> {
        match self.get(name, "sequence")? {
            Object::Sequence(s, b) => Ok((s, b)),
            _ => unreachable!(),
        }
    }

    pub fn complex(&self, name: &str) -> CliResult<&Complex> {
        match self.get(name, "complex")? {
            Object::Complex(c) => Ok(c),
            _ => unreachable!(),
        }
    }

    /// Names of declared objects of one kind, in name order.
    pub fn names_of(&self, kind: &str) -> Vec<String> {
        self.objects.iter().filter(|(_, o)| o.kind() == kind).map(|(k, _)| k.clone()).collect()
    }

    /// Validates one declaration against the ones before it and records it
    /// in canonical form.
    pub fn declare(&mut self, decl: Decl) -> CliResult<()> {
        if let Some(name) = decl.name() {
            if self.objects.contains_key(name) {
                return Err(CliError::Input(format!("`{name}` is already declared")));
            }
        }
        let (canonical, object) = self.build(decl)?;
        if let (Some(name), Some(object)) = (canonical.name(), object) {
            self.objects.insert(name.to_string(), object);
        }
        self.document.declarations.push(canonical);
        Ok(())
    }

    fn build(&self, decl: Decl) -> CliResult<(Decl, Option<Object>)> {
        match decl {
            Decl::Ring { name, characteristic, vars, order } => {
                let field = if characteristic == 0 { Field::Rational } else { Field::prime(characteristic)? };
                let ord = MonomialOrder::parse(&order)
                    .ok_or_else(|| CliError::Input(format!("unknown monomial order `{order}`")))?;
                for v in &vars {
                    if !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return Err(CliError::Input(format!("`{v}` is not a valid variable name")));
                    }
                }
                let ring = Ring::from_names(field, vars.clone(), ord)?.with_limits(self.limits.clone());
                let base = BaseRing::polynomial(&ring);
                Ok((Decl::Ring { name, characteristic, vars, order: ord.name() }, Some(Object::Ring(base))))
            }
            Decl::Quotient { name, parent, relations, domain } => {
                let pb = self.base(&parent)?;
                if !pb.is_polynomial() {
                    return Err(CliError::Input(format!("quotient parent `{parent}` must be a polynomial ring")));
                }
                let ring = pb.ring().clone();
                let polys = polys(&ring, &relations)?;
                let ideal = Ideal::new(&ring, polys.clone())?;
                if ideal.is_unit()? {
                    return Err(CliError::Input("quotient by the unit ideal".into()));
                }
                let base = BaseRing::quotient(&ring, &ideal, domain)?;
                Ok((Decl::Quotient { name, parent, relations: texts(&polys), domain }, Some(Object::Ring(base))))
            }
            Decl::Ideal { name, over, gens } => {
                let b = self.base(&over)?;
                if !b.is_polynomial() {
                    return Err(CliError::Input(format!("ideals must live in a polynomial ring; `{over}` is a quotient")));
                }
                let p = polys(b.ring(), &gens)?;
                let ideal = Ideal::new(b.ring(), p.clone())?;
                Ok((Decl::Ideal { name, over, gens: texts(&p) }, Some(Object::Ideal(ideal))))
            }
            Decl::Sequence { name, over, elements } => {
                let b = self.base(&over)?.clone();
                let p = polys(b.ring(), &elements)?;
                Ok((Decl::Sequence { name, over, elements: texts(&p) }, Some(Object::Sequence(p, b))))
            }
            Decl::Module { name, over, body } => {
                let b = self.base(&over)?.clone();
                let (body, module) = match body {
                    ModuleBody::Coker(m) => {
                        let (m, map) = matrix(&b, &m)?;
                        (ModuleBody::Coker(m), FPModule::new(map))
                    }
                    ModuleBody::Free(n) => (ModuleBody::Free(n), FPModule::free(&b, n)),
                    ModuleBody::Cyclic(g) => {
                        let p = polys(b.ring(), &g)?;
                        let module = FPModule::cyclic(&b, &p)?;
                        (ModuleBody::Cyclic(texts(&p)), module)
                    }
                };
                Ok((Decl::Module { name, over, body }, Some(Object::Module(module))))
            }
            Decl::Complex { name, over, body } => {
                let b = self.base(&over)?.clone();
                let (body, complex) = match body {
                    ComplexBody::Koszul(s) => {
                        let p = polys(b.ring(), &s)?;
                        let c = Complex::koszul(&b, &p)?;
                        (ComplexBody::Koszul(texts(&p)), c)
                    }
                    ComplexBody::Maps(ms) => {
                        if ms.is_empty() {
                            return Err(CliError::Input("a complex needs at least one map".into()));
                        }
                        let mut texts_out = Vec::new();
                        let mut maps = Vec::new();
                        for (k, m) in ms.iter().enumerate() {
                            let (t, map) = matrix(&b, m).map_err(|e| e.context(format!("map {}", k + 1)))?;
                            texts_out.push(t);
                            maps.push(map);
                        }
                        let f0 = maps[0].rows();
                        (ComplexBody::Maps(texts_out), Complex::new(&b, f0, maps)?)
                    }
                    ComplexBody::Resolution { module, cap } => {
                        let m = self.module(&module)?;
                        if !BaseRing::same(m.base(), &b) {
                            return Err(CliError::Input(format!("module `{module}` is not over `{over}`")));
                        }
                        let res = minimal_resolution(m, cap)?;
                        (ComplexBody::Resolution { module, cap }, res.complex)
                    }
                };
                Ok((Decl::Complex { name, over, body }, Some(Object::Complex(complex))))
            }
            Decl::Extension { name, base, adjoin, relations } => {
                let b = self.base(&base)?;
                let ring = FiniteExtension::ambient_ring(b, &adjoin)?;
                let p = polys(&ring, &relations)?;
                let ext = FiniteExtension::from_polynomials(b, &ring, p.clone())?;
                Ok((Decl::Extension { name, base, adjoin, relations: texts(&p) }, Some(Object::Extension(ext))))
            }
            Decl::Check { verb, args, expect } => {
                commands::validate(self, &verb, &args)?;
                Ok((Decl::Check { verb, args, expect }, None))
            }
        }
    }
}

fn polys(ring: &RingRef, texts: &[String]) -> CliResult<Vec<Polynomial>> {
    texts
        .iter()
        .map(|t| parse_polynomial(t, ring).map_err(|e| CliError::from(e).context(format!("in \"{t}\""))))
        .collect()
}

fn texts(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn matrix(base: &BaseRef, m: &Matrix) -> CliResult<(Matrix, ModuleMap)> {
    let rows = m.iter().map(|r| polys(base.ring(), r)).collect::<CliResult<Vec<_>>>()?;
    let map = ModuleMap::from_rows(base, rows.clone())?;
    Ok((rows.iter().map(|r| texts(r)).collect(), map))
}
