use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use leibrack::Witnesses;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    /// `exact`, or the degree bound under which the check was run.
    pub scope: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
    pub witness_total: usize,
}

/// Everything a subcommand reports. Serialized as-is by `--json`.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub field: String,
    pub checks: Vec<Check>,
    pub values: BTreeMap<String, Value>,
    /// Files written by this run.
    pub artifacts: Vec<String>,
    #[serde(skip)]
    pub body: Vec<String>,
    #[serde(skip)]
    witness_limit: usize,
}

impl RunReport {
    pub fn new(command: Vec<String>, field: String, witness_limit: usize) -> Self {
        RunReport {
            command,
            field,
            checks: Vec::new(),
            values: BTreeMap::new(),
            artifacts: Vec::new(),
            body: Vec::new(),
            witness_limit,
        }
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        self.push(name, ok, "exact".into(), None, 0);
    }

    pub fn check_with<T: Serialize>(&mut self, name: &str, ok: bool, w: &Witnesses<T>) {
        self.check_scoped(name, ok, "exact".into(), w);
    }

    pub fn check_scoped<T: Serialize>(&mut self, name: &str, ok: bool, scope: String, w: &Witnesses<T>) {
        let shown = if w.is_empty() {
            None
        } else {
            let items: Vec<&T> = w.items.iter().take(self.witness_limit).collect();
            Some(serde_json::to_value(items).expect("witnesses serialize"))
        };
        self.push(name, ok, scope, shown, w.total);
    }

    fn push(&mut self, name: &str, ok: bool, scope: String, witnesses: Option<Value>, witness_total: usize) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            scope,
            witnesses,
            witness_total,
        });
    }

    pub fn value(&mut self, name: &str, v: impl Serialize) {
        self.values
            .insert(name.into(), serde_json::to_value(v).expect("value serializes"));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "leibrack {}", self.command.join(" ")).unwrap();
        writeln!(out, "field: {}", self.field).unwrap();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.ok { "PASS" } else { "FAIL" };
            let scope = if c.scope == "exact" {
                String::new()
            } else {
                format!(" ({})", c.scope)
            };
            writeln!(out, "check {:width$}  {status}{scope}", c.name).unwrap();
            if let Some(w) = &c.witnesses {
                writeln!(out, "  witnesses ({} total): {w}", c.witness_total).unwrap();
            }
        }
        for (k, v) in &self.values {
            writeln!(out, "{k}: {v}").unwrap();
        }
        for a in &self.artifacts {
            writeln!(out, "wrote {a}").unwrap();
        }
        for line in &self.body {
            writeln!(out, "{line}").unwrap();
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "result: {verdict}").unwrap();
        out
    }
}
