//! Pass/fail records shared by the group-level verifiers.

use serde::{Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    #[serde(rename = "type")]
    pub kind: String,
    pub isogeny: String,
    #[serde(serialize_with = "one_or_many")]
    pub p: Vec<u32>,
    pub h: u32,
}

fn one_or_many<S: Serializer>(v: &[u32], s: S) -> Result<S::Ok, S::Error> {
    match v {
        [one] => s.serialize_u32(*one),
        many => many.serialize(s),
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ps: Vec<String> = self.p.iter().map(u32::to_string).collect();
        write!(
            f,
            "{} {} p={} h={}",
            self.kind,
            self.isogeny,
            ps.join(","),
            self.h
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        }
    }

    /// Passes when the two values print identically.
    pub fn equal(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (e, c) = (expected.to_string(), computed.to_string());
        let pass = e == c;
        Check {
            name: name.into(),
            expected: e,
            computed: c,
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub instance: Instance,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(instance: Instance) -> Self {
        Report {
            instance,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.instance);
        for c in &self.checks {
            s.push_str(&format!(
                "  [{}] {}: expected {}, computed {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.computed
            ));
        }
        s
    }
}
