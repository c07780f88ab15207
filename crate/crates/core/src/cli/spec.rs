use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::monocech::{MonoError, MonomialIdeal, VariableContext};
use crate::verify::Expectation;

/// The on-disk description of an ideal: variable names split by degree and
/// generators written as monomials such as `"Y1*X2^3"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    #[serde(alias = "deg0", default)]
    pub deg0_vars: Vec<String>,
    #[serde(alias = "deg1")]
    pub deg1_vars: Vec<String>,
    #[serde(alias = "gens")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expect: Vec<Expectation>,
}

/// A parse or validation failure, located in the source text when possible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    /// 1-based line and column
    pub position: Option<(usize, usize)>,
    pub message: String,
}

impl SpecError {
    fn new(message: impl Into<String>) -> Self {
        SpecError {
            position: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some((line, col)) => write!(f, "{line}:{col}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for SpecError {}

impl From<MonoError> for SpecError {
    fn from(e: MonoError) -> Self {
        SpecError::new(e.to_string())
    }
}

/// Parses `term ("*" term)*` with `term := VAR ("^" POSINT)?`. Repeated
/// variables add their exponents. Errors carry a byte offset into `text`.
pub fn parse_monomial(text: &str, ctx: &VariableContext) -> Result<Vec<u32>, (usize, String)> {
    let mut exps = vec![0u32; ctx.nvars()];
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        if start == pos {
            let msg = match bytes.get(pos) {
                Some(&c) => format!("expected a variable name, found {:?}", c as char),
                None => "expected a variable name".to_string(),
            };
            return Err((pos, msg));
        }
        let name = &text[start..pos];
        let v = ctx
            .index_of(name)
            .ok_or_else(|| (start, format!("undeclared variable {name:?}")))?;
        skip_ws(&mut pos);
        let mut e = 1u32;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            skip_ws(&mut pos);
            let num_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            e = text[num_start..pos]
                .parse()
                .ok()
                .filter(|&e| e > 0)
                .ok_or_else(|| (num_start, "expected a positive integer exponent".to_string()))?;
            skip_ws(&mut pos);
        }
        exps[v] = exps[v]
            .checked_add(e)
            .ok_or_else(|| (start, "exponent overflow".to_string()))?;
        match bytes.get(pos) {
            None => return Ok(exps),
            Some(b'*') => pos += 1,
            Some(&c) => return Err((pos, format!("expected '*' or end of monomial, found {:?}", c as char))),
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.len(), |i| before.len() - i - 1) + 1;
    (line, col)
}

/// Byte offset of the `k`-th string literal of the generator list in `text`.
fn locate_generator(text: &str, spec: &IdealSpec, k: usize) -> Option<usize> {
    let key = ["\"generators\"", "\"gens\""].iter().find_map(|key| text.find(key))?;
    let mut from = key;
    let mut found = None;
    for g in &spec.generators[..=k] {
        let quoted = serde_json::to_string(g).ok()?;
        let at = from + text[from..].find(&quoted)?;
        found = Some(at + 1);
        from = at + quoted.len();
    }
    found
}

impl IdealSpec {
    pub fn context(&self) -> Result<VariableContext, SpecError> {
        Ok(VariableContext::new(self.deg0_vars.clone(), self.deg1_vars.clone())?)
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, SpecError> {
        self.to_ideal_located(None)
    }

    fn to_ideal_located(&self, source: Option<&str>) -> Result<MonomialIdeal, SpecError> {
        let ctx = self.context()?;
        if self.generators.is_empty() {
            return Err(SpecError::new("the generator list is empty"));
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (k, g) in self.generators.iter().enumerate() {
            let exps = parse_monomial(g, &ctx).map_err(|(offset, msg)| {
                let position = source
                    .and_then(|text| locate_generator(text, self, k))
                    .map(|at| line_col(source.unwrap_or_default(), at + offset));
                SpecError {
                    position,
                    message: format!("generator {} ({g:?}): {msg}", k + 1),
                }
            })?;
            gens.push(exps);
        }
        Ok(MonomialIdeal::new(ctx, gens)?)
    }

    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        let ctx = ideal.context();
        IdealSpec {
            deg0_vars: ctx.y_vars().map(|v| ctx.name(v).to_string()).collect(),
            deg1_vars: ctx.x_vars().map(|v| ctx.name(v).to_string()).collect(),
            generators: ideal.generator_strings(),
            expect: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

/// Parses a spec document, returning both the raw spec and the validated ideal.
pub fn parse_spec_str(text: &str) -> Result<(IdealSpec, MonomialIdeal), SpecError> {
    let spec: IdealSpec = serde_json::from_str(text).map_err(|e| SpecError {
        position: (e.line() > 0).then(|| (e.line(), e.column())),
        message: e.to_string(),
    })?;
    let ideal = spec.to_ideal_located(Some(text))?;
    Ok((spec, ideal))
}

pub fn parse_spec(path: &Path) -> Result<(IdealSpec, MonomialIdeal), SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::new(format!("{}: {e}", path.display())))?;
    parse_spec_str(&text)
}
